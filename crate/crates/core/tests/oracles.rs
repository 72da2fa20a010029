//! Library results against naive re-implementations written straight from
//! the definitions, sharing no code with the crate.

use permcross::bijection::{insertion_sets, phi, psi};
use permcross::dist::{closed_form, dist_poly, joint_poly, ClosedForm};
use permcross::pattern::avoids;
use permcross::perm::all_permutations;
use permcross::{ClassSpec, Constraint, Enumerator, Permutation, QPoly, Statistic, YQPoly};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// Every permutation of `1..=n` by recursive insertion.
fn naive_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for w in naive_perms(n - 1) {
        for pos in 0..=w.len() {
            let mut v = w.clone();
            v.insert(pos, n);
            out.push(v);
        }
    }
    out
}

/// 1-indexed accessor.
fn at(w: &[usize], i: usize) -> usize {
    w[i - 1]
}

fn inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

fn naive_crs(w: &[usize]) -> usize {
    let n = w.len();
    let mut c = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, b) = (at(w, i), at(w, j));
            if (j < a && a < b) || (a < b && b <= i) {
                c += 1;
            }
        }
    }
    c
}

fn naive_nes(w: &[usize]) -> usize {
    let n = w.len();
    let mut c = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, b) = (at(w, i), at(w, j));
            if (j < b && b < a) || (b < a && a <= i) {
                c += 1;
            }
        }
    }
    c
}

fn naive_inv(w: &[usize]) -> usize {
    (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count()
}

fn naive_exc(w: &[usize]) -> usize {
    (1..=w.len()).filter(|&i| at(w, i) > i).count()
}

fn naive_des(w: &[usize]) -> usize {
    w.windows(2).filter(|x| x[0] > x[1]).count()
}

fn naive_transients(w: &[usize]) -> (usize, usize) {
    let inv = inverse(w);
    let ut = (1..=w.len()).filter(|&i| at(&inv, i) < i && i < at(w, i)).count();
    let lt = (1..=w.len()).filter(|&i| at(w, i) < i && i < at(&inv, i)).count();
    (ut, lt)
}

/// Occurrence test over all index triples, patterns of length 3 only.
fn naive_contains3(w: &[usize], pat: &[usize]) -> bool {
    let n = w.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let t = [w[a], w[b], w[c]];
                let ok = (0..3).all(|x| (0..3).all(|y| (t[x] < t[y]) == (pat[x] < pat[y])));
                if ok {
                    return true;
                }
            }
        }
    }
    false
}

fn naive_class(n: usize, pats: &[[usize; 3]]) -> Vec<Vec<usize>> {
    naive_perms(n)
        .into_iter()
        .filter(|w| pats.iter().all(|t| !naive_contains3(w, t)))
        .collect()
}

fn q_poly_of(values: impl Iterator<Item = usize>) -> QPoly {
    let mut counts = Vec::new();
    for v in values {
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
    }
    QPoly::new(counts)
}

fn yq_poly_of(pairs: impl Iterator<Item = (usize, usize)>) -> YQPoly {
    YQPoly::from_terms(pairs.map(|(a, b)| (a as u32, b as u32, 1i64))).unwrap()
}

#[test]
fn statistics_match_pair_scans() {
    for n in 0..=7 {
        for w in naive_perms(n) {
            let perm = Permutation::new(w.clone()).unwrap();
            assert_eq!(perm.crs(), naive_crs(&w), "{perm}");
            assert_eq!(perm.nes(), naive_nes(&w), "{perm}");
            assert_eq!(perm.inv(), naive_inv(&w), "{perm}");
            assert_eq!(perm.exc(), naive_exc(&w), "{perm}");
            assert_eq!(perm.des(), naive_des(&w), "{perm}");
            assert_eq!(perm.transients(), naive_transients(&w), "{perm}");
        }
    }
}

#[test]
fn small_statistic_examples() {
    assert_eq!((p("312").crs(), p("231").crs()), (1, 0));
    assert_eq!(p("321").crs(), naive_crs(&[3, 2, 1]));
    assert_eq!(p("231").transients(), (1, 0));
    assert_eq!(p("312").transients(), (0, 1));
    let s = p("21");
    assert_eq!((s.exc(), s.des(), s.inv(), s.maxdrop()), (1, 1, 1, 1));
    assert_eq!(p("4735126").inv(), naive_inv(&[4, 7, 3, 5, 1, 2, 6]));
}

#[test]
fn enumeration_matches_filtered_brute_force() {
    let e = Enumerator::default();
    let sets: [&[[usize; 3]]; 4] = [
        &[[1, 2, 3]],
        &[[3, 2, 1], [2, 3, 1]],
        &[[2, 1, 3], [3, 1, 2]],
        &[[1, 2, 3], [1, 3, 2]],
    ];
    for pats in sets {
        let labels: Vec<String> =
            pats.iter().map(|t| t.iter().map(|d| d.to_string()).collect()).collect();
        let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
        for n in 0..=8 {
            let mut got: Vec<Vec<usize>> = e
                .collect(&ClassSpec::avoiding(n, &labels))
                .unwrap()
                .into_iter()
                .map(Permutation::into_word)
                .collect();
            let mut want = naive_class(n, pats);
            got.sort();
            want.sort();
            assert_eq!(got, want, "{labels:?} n={n}");
        }
    }
    assert!(!avoids(&p("4735126"), &[p("123")]));
}

#[test]
fn distributions_match_brute_force() {
    let e = Enumerator::default();
    assert_eq!(dist_poly(&e, &ClassSpec::all(3), Statistic::Crs).unwrap().to_string(), "5+q");
    for n in 0..=8 {
        let want = q_poly_of(naive_perms(n).iter().map(|w| naive_crs(w)));
        assert_eq!(dist_poly(&e, &ClassSpec::all(n), Statistic::Crs).unwrap(), want);

        let class = naive_class(n, &[[2, 3, 1], [3, 2, 1]]);
        let want = yq_poly_of(class.iter().map(|w| (naive_exc(w), naive_crs(w))));
        let spec = ClassSpec::avoiding(n, &["231", "321"]);
        assert_eq!(joint_poly(&e, &spec, (Statistic::Exc, Statistic::Crs)).unwrap(), want);
    }
    let spec = ClassSpec::avoiding(3, &["231", "321"]);
    let joint = joint_poly(&e, &spec, (Statistic::Exc, Statistic::Crs)).unwrap();
    assert_eq!(joint.to_string(), "1+2y+qy");
}

#[test]
fn class_sizes_are_powers_of_two() {
    for n in 1..=8 {
        assert_eq!(naive_class(n, &[[1, 2, 3], [1, 3, 2]]).len(), 1 << (n - 1));
    }
}

#[test]
fn bounded_drop_equals_the_pattern_class() {
    let e = Enumerator::default();
    for n in 0..=8 {
        let mut drop: Vec<Vec<usize>> = naive_perms(n)
            .into_iter()
            .filter(|w| (1..=n).all(|i| i <= at(w, i) + 1))
            .collect();
        let mut got: Vec<Vec<usize>> = e
            .collect(&ClassSpec::all(n).with(Constraint::MaxDropLe(1)))
            .unwrap()
            .into_iter()
            .map(Permutation::into_word)
            .collect();
        drop.sort();
        got.sort();
        assert_eq!(got, drop);
        assert_eq!(drop, {
            let mut c = naive_class(n, &[[3, 2, 1], [2, 3, 1]]);
            c.sort();
            c
        });
    }
}

#[test]
fn closed_form_examples() {
    let thm31 = closed_form::<i64>(ClosedForm::Binomial, 4).unwrap();
    assert_eq!(thm31.as_q().unwrap().to_string(), "4+3q+q^2");
    // ((1+q)^3 − 1 + q)/q expanded by hand
    assert_eq!(thm31.as_q().unwrap(), &QPoly::new(vec![4, 3, 1]));
    let cor52 = closed_form::<i64>(ClosedForm::EvenBinomials, 3).unwrap();
    assert_eq!(cor52.as_yq().unwrap().to_string(), "1+3y");
}

/// `σ^(a,b)` straight from the two-step definition.
fn naive_insert(w: &[usize], a: usize, b: usize) -> Vec<usize> {
    let mut v: Vec<usize> = w.iter().map(|&x| if x >= b { x + 1 } else { x }).collect();
    v.insert(a - 1, b);
    v
}

#[test]
fn insertion_and_bijections_follow_the_definitions() {
    assert_eq!(naive_insert(&[3, 1, 4, 2], 5, 1), vec![4, 2, 5, 3, 1]);
    assert_eq!(p("3142").insert(5, 1).unwrap(), p("42531"));
    for n in 0..=6 {
        for w in naive_perms(n) {
            let perm = Permutation::new(w.clone()).unwrap();
            let rc: Vec<usize> = w.iter().rev().map(|&x| n + 1 - x).collect();
            for k in 1..=n + 1 {
                let pos = n + 2 - k;
                let want_phi = naive_insert(&inverse(&w), pos, 1);
                let want_psi = naive_insert(&rc, pos, 1);
                assert_eq!(phi(k, &perm).unwrap().word(), &want_phi[..]);
                assert_eq!(psi(k, &perm).unwrap().word(), &want_psi[..]);
            }
        }
    }
    assert_eq!(phi(3, &p("31542")).unwrap(), p("362154"));
    assert_eq!(psi(3, &p("31542")).unwrap(), p("532164"));
    assert_eq!(phi(1, &p("21")).unwrap(), p("321"));
    assert_eq!(p("21").direct_sum(&p("1")), p("213"));
}

#[test]
fn insertion_sets_match_a_rescan() {
    // the increment of crs from prepending j, measured directly
    for n in 0..=6 {
        for w in naive_perms(n) {
            let perm = Permutation::new(w.clone()).unwrap();
            for j in 1..=n + 1 {
                let mut v: Vec<usize> = w.iter().map(|&x| if x >= j { x + 1 } else { x }).collect();
                v.insert(0, j);
                let delta = naive_crs(&v) as i64 - naive_crs(&w) as i64;
                assert_eq!(insertion_sets(&perm, j).unwrap().increment(), delta, "{perm} j={j}");
            }
        }
    }
}

#[test]
fn library_enumeration_is_lexicographic_and_complete() {
    let mut want = naive_perms(6);
    want.sort();
    let got: Vec<Vec<usize>> = all_permutations(6).map(Permutation::into_word).collect();
    assert_eq!(got, want);
}
