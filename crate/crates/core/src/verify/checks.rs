use std::collections::{BTreeMap, HashSet};

use num_integer::binomial;
use serde_json::json;

use super::{Check, Ctx, Scale};
use crate::bijection::{
    adjudicate_cor43, check_lemma, insertion_sets, insertion_sets_as_printed, phi, psi,
    random_permutations, tail_increment_statement, Lemma, Verdict,
};
use crate::dist::{
    closed_form, joint_poly, tableau_vs_class, ClosedForm, QTableau, REFERENCE_TABLE,
    SHIFTED_TABLEAU_PAIRS, TABLEAU_PAIRS,
};
use crate::error::Result;
use crate::gf;
use crate::pattern::{avoids, occurrences, subsets_of_s3, ClassSpec, Constraint};
use crate::perm::{all_permutations, Permutation, Statistic, Symmetry};
use crate::{QPoly, QSeries};

type R = Result<()>;

const RANDOM_SIZE: usize = 10;
const RANDOM_COUNT: usize = 1000;
const RANDOM_SEED: u64 = 0x5eed_2718;

macro_rules! check {
    ($id:literal, $title:literal, $scale:ident, $max:expr, $run:ident) => {
        check!($id, $title, $scale, $max, $run, true)
    };
    ($id:literal, $title:literal, $scale:ident, $max:expr, $run:ident, $gating:expr) => {
        Check {
            id: $id,
            title: $title,
            scale: Scale::$scale,
            max_bound: $max,
            gating: $gating,
            run: $run,
        }
    };
}

pub(super) static REGISTRY: &[Check] = &[
    check!("catalan", "Catalan class sizes and the three Wilf classes of pairs", Class, 12, catalan),
    check!("cfrac-321", "continued fraction vs crossings on S_n(321)", Class, 12, cfrac_321),
    check!("conj-2.7", "dist(S_n^k) = dist(S_n^{n+1-k}) (conjecture)", Full, 10, conj_2_7, false),
    check!("cor-3.2", "coefficients delta_{k,0} + C(n-1,k+1)", Class, 12, cor_3_2),
    check!("cor-3.4", "coefficients C(n-2,k) on S_n^2 and S_{n,2}", Class, 12, cor_3_4),
    check!("cor-4.3", "crossing increment on S_n^[k](213,312), exponent adjudicated", Class, 11, cor_4_3),
    check!("cor-4.5", "noncrossing count C(n,2)+1", Closed, 30, cor_4_5),
    check!("cor-5.3", "des and exc on S_n(231,321) are sum C(n,2k) y^k", Class, 12, cor_5_3),
    check!("cor-5.4", "noncrossing members of S_n(231,321) are Fibonacci", Class, 12, cor_5_4),
    check!("dihedral", "dihedral symmetries: examples, relations, group table", Full, 9, dihedral),
    check!("eq-1", "crs-Wilf equivalence of 321, 132, 213", Class, 12, eq_1),
    check!("eq-4-6", "position-of-1 partition of S_n(123,132)", Class, 12, eq_4_6),
    check!("eq-7", "S_n(213,312) = S_n^n u S_n^1", Class, 12, eq_7),
    check!("eq-8", "recurrence system for F_n^k(213,312)", Class, 11, eq_8),
    check!("eq-chung", "(des, inv) generating function, class label adjudicated", Class, 12, eq_chung),
    check!("eq-dokos", "inversions on S_n(321,231) are (1+q)^{n-1}", Class, 12, eq_dokos),
    check!("fig-1", "crossings and nestings of 4735126", Fixed, 0, fig_1),
    check!("insert-op", "insertion operator examples and erase inverse", Full, 9, insert_op),
    check!("inv-exc-crs", "inv = exc + crs on S_n(321,231)", Class, 12, inv_exc_crs),
    check!("lem-2.1", "crs(s^(n+1,1)) = crs + ut - lt", Full, 9, lem_2_1),
    check!("lem-2.2", "crs(s^(n,1)) = crs + 1 - [s(n)=n] + ut - lt", Full, 9, lem_2_2),
    check!("lem-2.4", "crs of inverse and rc is crs + ut - lt", Full, 9, lem_2_4),
    check!("lem-4.2", "crossing change under s^(1,j)", Full, 9, lem_4_2),
    check!("occ-example", "occurrences of 312 in 4162375", Fixed, 0, occ_example),
    check!("phi-psi", "phi_k and psi_k are bijections onto S_{n+1}^k", Full, 9, phi_psi),
    check!("prop-2.5", "phi_1, psi_1 preserve crs; phi_2 shifts it", Full, 9, prop_2_5),
    check!("prop-4.1", "dist(S_n^n(213,312)) = F_{n-1}", Class, 12, prop_4_1),
    check!("prop-4.4", "F_n^k recurrence and its decomposition", Class, 11, prop_4_4),
    check!("prop-5.1", "S_n(321,231) = B_{n,1}", Class, 12, prop_5_1),
    check!("rci-crs", "rci is a crs-preserving involution", Full, 10, rci_crs),
    check!("rel-3", "S_{n,k} = rci(S_n^k) and its distribution form", Full, 9, rel_3),
    check!("skew-sum", "skew and direct sums", Fixed, 0, skew_sum),
    check!("sym-transport", "f(S_n(T)) = S_n(f(T)) for all symmetries", Full, 9, sym_transport),
    check!("table-1", "q-tableau: printed cells, q=1 values, boundary", Closed, 30, table_1),
    check!("thm-1.1", "dist on S_n^2(123,132) and S_{n,2}(123,213) is (1+q)^{n-2}", Class, 12, thm_1_1),
    check!("thm-1.2", "q-tableau counts S_n^[k](T) for both pairs", Class, 11, thm_1_2),
    check!("thm-2.6", "dist over S_{n+1}^1 and S_{n+1}^2 via F_n", Full, 9, thm_2_6),
    check!("thm-2.8", "F(312) (1 - z F(231)) = 1", Class, 12, thm_2_8),
    check!("thm-3.1", "dist on S_n(123,132), S_n(123,213) closed form", Class, 12, thm_3_1),
    check!("thm-4.6", "dist on S_n(213,231), S_n(132,231) is R_{n+1}^1", Class, 11, thm_4_6),
    check!("thm-5.2", "(exc, crs) generating function on S(231,321)", Class, 12, thm_5_2),
];

fn p(s: &str) -> Permutation {
    s.parse().expect("permutation literal")
}

fn class(n: usize, pats: &[&str]) -> ClassSpec {
    ClassSpec::avoiding(n, pats)
}

fn sorted(mut v: Vec<Permutation>) -> Vec<Permutation> {
    v.sort();
    v
}

fn one_plus_q_pow(e: usize) -> Result<QPoly> {
    Ok(QPoly::from_i64s(&[1, 1]).checked_pow(e as u32)?)
}

fn words(v: &[Permutation]) -> String {
    v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn fig_1(c: &mut Ctx) -> R {
    let s = p("4735126");
    let n = s.len();
    let mut upper = 0;
    let mut lower = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, b) = (s.at(i), s.at(j));
            upper += usize::from(j < a && a < b);
            lower += usize::from(a < b && b <= i);
        }
    }
    c.expect_eq("crs(4735126) by pair scan", &3, &(upper + lower));
    c.expect_eq("crs(4735126)", &3, &s.crs());
    c.expect_eq("nes(4735126)", &3, &s.nes());
    c.note(format!("crossings {:?}, nestings {:?}", s.crossings(), s.nestings()));
    Ok(())
}

fn occ_example(c: &mut Ctx) -> R {
    let s = p("4162375");
    let w = s.word();
    let mut scanned = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            for k in j + 1..w.len() {
                if w[j] < w[k] && w[k] < w[i] {
                    scanned.push(format!("{}{}{}", w[i], w[j], w[k]));
                }
            }
        }
    }
    let occ = occurrences(&s, &p("312"));
    let found: Vec<String> = occ
        .values(&s)
        .iter()
        .map(|v| v.iter().map(|x| x.to_string()).collect())
        .collect();
    c.expect_eq("312-occurrences by scan vs matcher", &scanned.join(","), &found.join(","));
    c.expect_eq("312-occurrence count", &6, &occ.count());
    c.expect("4162375 avoids 321", avoids(&s, &[p("321")]));
    c.note(format!(
        "occurrences: {}; the five-element list with 312 (not a subsequence) misses 412 and 413",
        found.join(" ")
    ));
    Ok(())
}

fn dihedral(c: &mut Ctx) -> R {
    let pi = p("4135762");
    for (f, expected) in [
        ("r", "2675314"),
        ("c", "4753126"),
        ("i", "2731465"),
        ("rc", "6213574"),
        ("rci", "3247516"),
    ] {
        let sym: Symmetry = f.parse()?;
        c.expect_eq(format!("{f}(4135762)"), &p(expected), &sym.apply(&pi));
    }
    for n in 0..=c.n {
        for s in all_permutations(n) {
            for f in Symmetry::ALL {
                if f.inverse().apply(&f.apply(&s)) != s {
                    c.fail(json!({ "case": "inverse symmetry", "sigma": s.to_string(), "f": f.name() }));
                }
            }
            let ir = Symmetry::I.apply(&Symmetry::R.apply(&s));
            let ci = Symmetry::C.apply(&Symmetry::I.apply(&s));
            c.expect_eq(format!("i(r({s})) = c(i({s}))"), &ci, &ir);
            if n <= 6 {
                for f in Symmetry::ALL {
                    for g in Symmetry::ALL {
                        if f.compose(g).apply(&s) != f.apply(&g.apply(&s)) {
                            c.fail(json!({
                                "case": "composition table",
                                "sigma": s.to_string(),
                                "f": f.name(),
                                "g": g.name(),
                            }));
                        }
                    }
                }
            }
        }
    }
    c.lo = 0;
    c.note("group table checked for n <= 6");
    Ok(())
}

fn rci_crs(c: &mut Ctx) -> R {
    for n in 1..=c.n {
        for s in all_permutations(n) {
            let t = Symmetry::Rci.apply(&s);
            if t.crs() != s.crs() || Symmetry::Rci.apply(&t) != s {
                c.fail(json!({ "sigma": s.to_string(), "rci": t.to_string() }));
            }
        }
    }
    Ok(())
}

fn sym_transport(c: &mut Ctx) -> R {
    for t in subsets_of_s3(2) {
        for n in 1..=c.n {
            let spec = ClassSpec::with_patterns(n, t.clone());
            let members = c.e.collect(&spec)?;
            for f in Symmetry::ALL {
                let image = sorted(members.iter().map(|s| f.apply(s)).collect());
                let target = c.e.collect(&spec.transformed(f))?;
                if image != target {
                    c.fail(json!({ "class": spec.to_string(), "f": f.name(), "n": n }));
                }
            }
        }
    }
    Ok(())
}

fn catalan(c: &mut Ctx) -> R {
    for tau in all_permutations(3) {
        for n in 0..=c.n {
            let size = c.e.class_size(&ClassSpec::with_patterns(n, vec![tau.clone()]))?;
            let cat = binomial(2 * n as u64, n as u64) / (n as u64 + 1);
            c.expect_eq(format!("|S_{n}({tau})|"), &cat, &size);
        }
    }
    c.lo = 0;
    // sizes of S_n(T) for the 15 pairs fall into three sequences
    type Family = (&'static str, fn(u64) -> u64);
    let families: [Family; 3] = [
        ("2^(n-1)", |n| 1 << (n - 1)),
        ("C(n,2)+1", |n| binomial(n, 2) + 1),
        ("eventually 0", |n| if n >= 5 { 0 } else { [1, 1, 2, 4, 4][n as usize] }),
    ];
    let mut used = [0usize; 3];
    for pair in subsets_of_s3(2).into_iter().filter(|t| t.len() == 2) {
        let sizes = (1..=c.n)
            .map(|n| c.e.class_size(&ClassSpec::with_patterns(n, pair.clone())))
            .collect::<Result<Vec<u64>>>()?;
        let fam = families
            .iter()
            .position(|(_, f)| sizes.iter().enumerate().all(|(i, &s)| s == f(i as u64 + 1)));
        match fam {
            Some(i) => used[i] += 1,
            None => c.fail(json!({ "case": "pair outside the three families", "pair": words(&pair) })),
        }
    }
    if c.n >= 5 {
        c.expect("each of the three pair families occurs", used.iter().all(|&u| u > 0));
    }
    c.note(format!(
        "pairs per family: 2^(n-1): {}, C(n,2)+1: {}, eventually 0: {}",
        used[0], used[1], used[2]
    ));
    Ok(())
}

fn eq_1(c: &mut Ctx) -> R {
    for n in 0..=c.n {
        let a = c.crs(&class(n, &["321"]))?;
        for other in ["132", "213"] {
            let b = c.crs(&class(n, &[other]))?;
            c.expect_eq(format!("n={n}: 321 vs {other}"), &a, &b);
        }
    }
    c.lo = 0;
    Ok(())
}

fn cfrac_321(c: &mut Ctx) -> R {
    let series = gf::cfrac_321(c.n)?;
    let deeper = crate::poly::cfrac_expand(&gf::cfrac_levels(c.n + 3), c.n)?;
    c.expect("extra levels do not change the expansion", series == deeper);
    for n in 0..=c.n {
        let brute = c.crs(&class(n, &["321"]))?;
        c.expect_eq(format!("z^{n}"), &brute, series.coeff(n));
    }
    c.lo = 0;
    Ok(())
}

fn thm_1_1(c: &mut Ctx) -> R {
    c.lo = 2;
    for n in 2..=c.n {
        let expected = one_plus_q_pow(n - 2)?;
        let a = c.crs(&class(n, &["123", "132"]).with(Constraint::OneAt(2)))?;
        let b = c.crs(&class(n, &["123", "213"]).with(Constraint::EndsWith(2)))?;
        c.expect_eq(format!("S_{n}^2(123,132)"), &expected, &a);
        c.expect_eq(format!("S_{n},2(123,213)"), &expected, &b);
        let cf = closed_form::<i64>(ClosedForm::OneAtSecondLast, n)?;
        c.expect_eq(format!("closed form n={n}"), &expected, cf.as_q().expect("q-polynomial"));
    }
    Ok(())
}

fn table_1(c: &mut Ctx) -> R {
    let t = QTableau::<i64>::build(c.n.max(6))?;
    for &(n, k, text) in REFERENCE_TABLE.iter() {
        let printed: QPoly = text.parse()?;
        c.expect_eq(format!("R_{n}^{k}"), &printed, t.get(n, k).expect("cell"));
    }
    for n in 0..=c.n {
        for k in 0..=n {
            let cell = t.get(n, k).expect("cell");
            let at_one = cell.eval(&1)?;
            let expected = if k + 1 >= n { 1 } else { 1i64 << (n - 1 - k) };
            c.expect_eq(format!("R_{n}^{k}(1)"), &expected, &at_one);
            if k + 1 >= n {
                c.expect_eq(format!("R_{n}^{k} boundary"), &QPoly::one(), cell);
            }
        }
    }
    c.lo = 0;
    c.note(format!("{} printed cells compared", REFERENCE_TABLE.len()));
    Ok(())
}

fn thm_1_2(c: &mut Ctx) -> R {
    let t = QTableau::<i64>::build(c.n + 1)?;
    for n in 0..=c.n {
        for k in 0..=n {
            if let Some(m) = tableau_vs_class(&c.e, &t, n, k)? {
                c.fail(serde_json::to_value(m).expect("serializable"));
            }
        }
    }
    c.lo = 0;
    c.note(format!("pairs {:?} and shifted pairs {:?}", TABLEAU_PAIRS, SHIFTED_TABLEAU_PAIRS));
    Ok(())
}

fn rel_3(c: &mut Ctx) -> R {
    for n in 1..=c.n {
        for k in 1..=n {
            let ones = c.e.collect(&ClassSpec::all(n).with(Constraint::OneAt(k)))?;
            let image = sorted(ones.iter().map(|s| Symmetry::Rci.apply(s)).collect());
            let ends = c.e.collect(&ClassSpec::all(n).with(Constraint::EndsWith(k)))?;
            if image != ends {
                c.fail(json!({ "case": "rci(S_n^k) = S_{n,k}", "n": n, "k": k }));
            }
        }
    }
    for t in subsets_of_s3(2) {
        let t_rci: Vec<Permutation> = t.iter().map(|s| Symmetry::Rci.apply(s)).collect();
        for n in 1..=c.n {
            for k in 1..=n {
                let a = c.crs(&ClassSpec::with_patterns(n, t.clone()).with(Constraint::OneAt(k)))?;
                let b = c.crs(&ClassSpec::with_patterns(n, t_rci.clone()).with(Constraint::EndsWith(k)))?;
                c.expect_eq(format!("T={{{}}} n={n} k={k}", words(&t)), &a, &b);
            }
        }
    }
    Ok(())
}

fn insert_op(c: &mut Ctx) -> R {
    let s = p("3142");
    c.expect_eq("3142^(2,3)", &p("43152"), &s.insert(2, 3)?);
    c.expect_eq("3142^-(2,3)", &p("23514"), &s.insert_of_inverse(2, 3)?);
    for n in 0..=c.n {
        for s in all_permutations(n) {
            let appended = s.insert(n + 1, 1)?;
            let shifted: Vec<usize> = s.word().iter().map(|x| x + 1).chain([1]).collect();
            c.expect_eq(format!("{s}^(n+1,1)"), &Permutation::new(shifted)?, &appended);
            for a in 1..=n + 1 {
                for b in 1..=n + 1 {
                    let t = s.insert(a, b)?;
                    if t.at(a) != b || t.erase_value(b)? != s {
                        c.fail(json!({ "sigma": s.to_string(), "a": a, "b": b, "result": t.to_string() }));
                    }
                }
            }
        }
    }
    c.lo = 0;
    Ok(())
}

fn skew_sum(c: &mut Ctx) -> R {
    c.expect_eq("312 skew 1342", &p("7561342"), &p("312").skew_sum(&p("1342")));
    c.expect_eq("21 direct 1", &p("213"), &p("21").direct_sum(&p("1")));
    // r(a skew b) = r(b) direct r(a)
    for na in 0..=3 {
        for nb in 0..=3 {
            for a in all_permutations(na) {
                for b in all_permutations(nb) {
                    let lhs = Symmetry::R.apply(&a.skew_sum(&b));
                    let rhs = Symmetry::R.apply(&b).direct_sum(&Symmetry::R.apply(&a));
                    c.expect_eq(format!("r({a} skew {b})"), &rhs, &lhs);
                    c.expect_eq(
                        format!("crs({a} direct {b})"),
                        &(a.crs() + b.crs()),
                        &a.direct_sum(&b).crs(),
                    );
                }
            }
        }
    }
    Ok(())
}

fn lemma_sweep(c: &mut Ctx, lemmas: &[Lemma]) -> R {
    let mut samples = 0usize;
    let mut run = |c: &mut Ctx, s: &Permutation| -> R {
        for &l in lemmas {
            let r = check_lemma(l, s)?;
            samples += 1;
            if !r.pass {
                c.fail(serde_json::to_value(r).expect("serializable"));
            }
        }
        Ok(())
    };
    for n in 1..=c.n {
        for s in all_permutations(n) {
            run(c, &s)?;
        }
    }
    for s in random_permutations(RANDOM_SIZE, RANDOM_COUNT, RANDOM_SEED) {
        run(c, &s)?;
    }
    c.note(format!(
        "{samples} evaluations: exhaustive n <= {} and {RANDOM_COUNT} random at n = {RANDOM_SIZE}",
        c.n
    ));
    Ok(())
}

fn lem_2_1(c: &mut Ctx) -> R {
    lemma_sweep(c, &[Lemma::AppendOne])
}

fn lem_2_2(c: &mut Ctx) -> R {
    lemma_sweep(c, &[Lemma::InsertOneBeforeLast])
}

fn lem_2_4(c: &mut Ctx) -> R {
    lemma_sweep(c, &[Lemma::Inverse, Lemma::ReverseComplement])
}

fn lem_4_2(c: &mut Ctx) -> R {
    let mut printed_failures = 0usize;
    let mut first_printed: Option<String> = None;
    let mut samples = 0usize;
    let mut pool: Vec<Permutation> = (1..=c.n).flat_map(all_permutations).collect();
    pool.extend(random_permutations(RANDOM_SIZE, RANDOM_COUNT, RANDOM_SEED));
    for s in &pool {
        for j in 1..=s.len() {
            let r = check_lemma(Lemma::PrependValue { j }, s)?;
            samples += 1;
            if !r.pass {
                c.fail(serde_json::to_value(&r).expect("serializable"));
            }
            let printed = s.crs() as i64 + insertion_sets_as_printed(s, j)?.increment();
            if printed != r.lhs {
                printed_failures += 1;
                first_printed.get_or_insert_with(|| {
                    format!("sigma={s}, j={j}: crs={} but the looser sets give {printed}", r.lhs)
                });
            }
        }
    }
    c.note(format!(
        "{samples} (sigma, j) pairs: exhaustive n <= {} and {RANDOM_COUNT} random at n = {RANDOM_SIZE}",
        c.n
    ));
    c.note("sets used: A = {i : i+1 < j <= s(i)}, C with k+1 < j");
    c.note(format!(
        "with A = {{i < j : s(i) >= j}} and C with k+1 <= j the identity fails {printed_failures} times{}",
        first_printed.map(|w| format!("; first: {w}")).unwrap_or_default()
    ));
    Ok(())
}

fn cor_4_3(c: &mut Ctx) -> R {
    let adj = adjudicate_cor43(&c.e, c.n)?;
    match adj.verdict {
        Verdict::Statement => c.note("winner: min(k-1, n-k); the exponent min(k-1, n-1-k) fails"),
        Verdict::Proof => c.note("winner: min(k-1, n-1-k); the exponent min(k-1, n-k) fails"),
        Verdict::Both => c.note("both exponents fit at this bound; the disagreement region starts at n = 4"),
        Verdict::Neither => c.fail(json!({ "case": "neither exponent fits" })),
    }
    for row in adj.rows.iter().filter(|r| r.statement != r.proof && r.members > 0) {
        c.note(format!(
            "n={} k={}: {} members, increment {:?}, min(k-1,n-k)={}, min(k-1,n-1-k)={}",
            row.n, row.k, row.members, row.increments, row.statement, row.proof
        ));
    }
    c.expect("winning exponent at size n-1 reproduces the printed tableau", adj.reproduces_reference_table);
    for n in 1..=c.n {
        for k in 1..=n {
            let spec = class(n, &["213", "312"]).with(Constraint::Tail(k));
            for s in c.e.enumerate(&spec)? {
                let sets = insertion_sets(&s, k + 1)?;
                let ok = sets.b.is_empty()
                    && sets.c.is_empty()
                    && sets.a.len() == tail_increment_statement(n, k);
                if !ok {
                    c.fail(json!({ "case": "insertion sets on S_n^[k]", "sigma": s.to_string(), "k": k }));
                }
            }
        }
    }
    Ok(())
}

fn phi_psi(c: &mut Ctx) -> R {
    for n in 0..=c.n {
        for k in 1..=n + 1 {
            let mut seen_phi = HashSet::new();
            let mut seen_psi = HashSet::new();
            for s in all_permutations(n) {
                for (name, img, seen) in [
                    ("phi", phi(k, &s)?, &mut seen_phi),
                    ("psi", psi(k, &s)?, &mut seen_psi),
                ] {
                    if img.len() != n + 1 || img.at(n + 2 - k) != 1 || !seen.insert(img.clone()) {
                        c.fail(json!({ "map": name, "k": k, "sigma": s.to_string(), "image": img.to_string() }));
                    }
                }
            }
        }
        for (from, to) in [(&["231"][..], &["312"][..]), (&["213", "231"][..], &["213", "312"][..])] {
            let image = sorted(
                c.e.enumerate(&class(n, from))?
                    .map(|s| phi(1, &s))
                    .collect::<Result<Vec<_>>>()?,
            );
            let target = c.e.collect(&class(n + 1, to).with(Constraint::OneAt(1)))?;
            if image != target {
                c.fail(json!({ "case": "phi_1 restriction", "from": from, "to": to, "n": n }));
            }
        }
    }
    c.lo = 0;
    let s = p("31542");
    c.expect_eq("phi_3(31542)", &p("362154"), &phi(3, &s)?);
    c.expect_eq("psi_3(31542)", &p("532164"), &psi(3, &s)?);
    c.note(format!(
        "worked example: by the definition phi_3(31542)={}, psi_3(31542)={}; 361254 and 531264 arise from position n+1-k",
        phi(3, &s)?,
        psi(3, &s)?
    ));
    Ok(())
}

fn prop_2_5(c: &mut Ctx) -> R {
    for n in 1..=c.n {
        for s in all_permutations(n) {
            let crs = s.crs();
            let shift = 1 - usize::from(s.at(n) == n);
            let ok = phi(1, &s)?.crs() == crs && psi(1, &s)?.crs() == crs && phi(2, &s)?.crs() == crs + shift;
            if !ok {
                c.fail(json!({ "sigma": s.to_string() }));
            }
        }
    }
    Ok(())
}

fn thm_2_6(c: &mut Ctx) -> R {
    let f = (0..=c.n)
        .map(|n| c.crs(&ClassSpec::all(n)))
        .collect::<Result<Vec<_>>>()?;
    let q = QPoly::q();
    let one_minus_q = QPoly::from_i64s(&[1, -1]);
    for n in 1..=c.n {
        let first = c.crs(&ClassSpec::all(n + 1).with(Constraint::OneAt(1)))?;
        c.expect_eq(format!("S_{}^1", n + 1), &f[n], &first);
        let second = c.crs(&ClassSpec::all(n + 1).with(Constraint::OneAt(2)))?;
        let expected = q.checked_mul(&f[n])?.checked_add(&one_minus_q.checked_mul(&f[n - 1])?)?;
        c.expect_eq(format!("S_{}^2", n + 1), &expected, &second);
    }
    Ok(())
}

fn conj_2_7(c: &mut Ctx) -> R {
    for n in 1..=c.n {
        let mut counts: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
        for s in all_permutations(n) {
            let k = n + 1 - s.position_of(1).expect("1 is present");
            let v = counts.entry(k).or_default();
            let x = s.crs();
            if v.len() <= x {
                v.resize(x + 1, 0);
            }
            v[x] += 1;
        }
        for k in 1..=n {
            let a = QPoly::from_counts(&counts[&k]);
            let b = QPoly::from_counts(&counts[&(n + 1 - k)]);
            if a != b {
                c.fail(json!({
                    "n": n,
                    "k": k,
                    "dist_k": a.to_string(),
                    "dist_mirror": b.to_string(),
                }));
            }
        }
    }
    c.note(format!("tested every 1 <= k <= n <= {}", c.n));
    Ok(())
}

fn thm_2_8(c: &mut Ctx) -> R {
    let order = c.n;
    let f312 = gf::enumerated_series(&c.e, &["312"], order)?;
    let f231 = gf::enumerated_series(&c.e, &["231"], order)?;
    let product = f312.try_mul(&QSeries::one(order).try_sub(&f231.times_z())?)?;
    for n in 0..=order {
        let expected = if n == 0 { QPoly::one() } else { QPoly::zero() };
        c.expect_eq(format!("z^{n} of F(312)(1 - zF(231))"), &expected, product.coeff(n));
    }
    // S_n^j(312) = phi-images of S_{j-1}(231), direct-summed with S_{n-j}(312)
    for n in 1..=order {
        for j in 1..=n {
            let lhs = c.crs(&class(n, &["312"]).with(Constraint::OneAt(n + 1 - j)))?;
            let rhs = f231.coeff(j - 1).checked_mul(f312.coeff(n - j))?;
            c.expect_eq(format!("1 at position {j} in S_{n}(312)"), &rhs, &lhs);
        }
    }
    c.lo = 0;
    c.note(format!("identity checked mod z^{}", order + 1));
    Ok(())
}

fn thm_3_1(c: &mut Ctx) -> R {
    for n in 1..=c.n {
        let expected = closed_form::<i64>(ClosedForm::Binomial, n)?;
        let expected = expected.as_q().expect("q-polynomial");
        let times_q = expected.checked_mul(&QPoly::q())?;
        let numerator = one_plus_q_pow(n - 1)?.checked_sub(&QPoly::one())?.checked_add(&QPoly::q())?;
        c.expect_eq(format!("q * closed form, n={n}"), &numerator, &times_q);
        for pair in [["123", "132"], ["123", "213"]] {
            let d = c.crs(&class(n, &pair))?;
            c.expect_eq(format!("S_{n}({},{})", pair[0], pair[1]), expected, &d);
        }
    }
    Ok(())
}

fn cor_3_2(c: &mut Ctx) -> R {
    for n in 1..=c.n {
        let coeffs: Vec<i64> = (0..n)
            .map(|k| i64::from(k == 0) + binomial(n as i64 - 1, k as i64 + 1))
            .collect();
        let expected = QPoly::from_i64s(&coeffs);
        for pair in [["123", "132"], ["123", "213"]] {
            c.expect_eq(format!("S_{n}({},{})", pair[0], pair[1]), &expected, &c.crs(&class(n, &pair))?);
        }
    }
    Ok(())
}

fn cor_3_4(c: &mut Ctx) -> R {
    c.lo = 2;
    for n in 2..=c.n {
        let coeffs: Vec<i64> = (0..=n - 2).map(|k| binomial(n as i64 - 2, k as i64)).collect();
        let expected = QPoly::from_i64s(&coeffs);
        let a = c.crs(&class(n, &["123", "132"]).with(Constraint::OneAt(2)))?;
        let b = c.crs(&class(n, &["123", "213"]).with(Constraint::EndsWith(2)))?;
        c.expect_eq(format!("S_{n}^2(123,132)"), &expected, &a);
        c.expect_eq(format!("S_{n},2(123,213)"), &expected, &b);
    }
    Ok(())
}

fn eq_4_6(c: &mut Ctx) -> R {
    let t = ["123", "132"];
    c.lo = 2;
    for n in 2..=c.n {
        let whole = c.crs(&class(n, &t))?;
        let prev = c.crs(&class(n - 1, &t))?;
        let first = c.crs(&class(n, &t).with(Constraint::OneAt(1)))?;
        let second = c.crs(&class(n, &t).with(Constraint::OneAt(2)))?;
        c.expect_eq(format!("n={n}: split by position of 1"), &whole, &first.checked_add(&second)?);
        c.expect_eq(format!("n={n}: S_n^1 vs F_(n-1)"), &prev, &first);
        let expected = QPoly::q()
            .checked_mul(&prev)?
            .checked_add(&QPoly::from_i64s(&[1, -1]))?;
        c.expect_eq(format!("n={n}: S_n^2 vs qF_(n-1)+1-q"), &expected, &second);
    }
    Ok(())
}

fn eq_7(c: &mut Ctx) -> R {
    let t = ["213", "312"];
    c.lo = 2;
    for n in 2..=c.n {
        let whole = c.crs(&class(n, &t))?;
        let first = c.crs(&class(n, &t).with(Constraint::OneAt(n)))?;
        let last = c.crs(&class(n, &t).with(Constraint::OneAt(1)))?;
        c.expect_eq(format!("n={n}"), &whole, &first.checked_add(&last)?);
    }
    Ok(())
}

fn prop_4_1(c: &mut Ctx) -> R {
    let t = ["213", "312"];
    for n in 1..=c.n {
        let first = c.crs(&class(n, &t).with(Constraint::OneAt(n)))?;
        c.expect_eq(format!("n={n}"), &c.crs(&class(n - 1, &t))?, &first);
    }
    Ok(())
}

/// `F_n^k(213,312)`, with `F_n^0 = F_n`.
fn tail_dists(c: &Ctx) -> Result<Vec<Vec<QPoly>>> {
    (0..=c.n)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let spec = class(n, &["213", "312"]);
                    c.crs(&if k == 0 { spec } else { spec.with(Constraint::Tail(k)) })
                })
                .collect()
        })
        .collect()
}

fn prop_4_4(c: &mut Ctx) -> R {
    let t = ["213", "312"];
    let f = tail_dists(c)?;
    for n in 3..=c.n {
        for k in 1..=n - 2 {
            let e = (k - 1).min(n - 1 - k);
            let expected = f[n - 1][k].shift(e).checked_add(&f[n][k + 1])?;
            c.expect_eq(format!("F_{n}^{k}"), &expected, &f[n][k]);
            // members outside S_n^[k+1] are exactly the images s^(1,k+1), s in S_{n-1}^[k]
            let starred = sorted(
                c.e.enumerate(&class(n - 1, &t).with(Constraint::Tail(k)))?
                    .map(|s| s.insert(1, k + 1))
                    .collect::<Result<Vec<_>>>()?,
            );
            let next = c.e.collect(&class(n, &t).with(Constraint::Tail(k + 1)))?;
            let whole = c.e.collect(&class(n, &t).with(Constraint::Tail(k)))?;
            let rest: Vec<Permutation> = whole.iter().filter(|s| !next.contains(s)).cloned().collect();
            if starred != rest {
                c.fail(json!({ "case": "decomposition", "n": n, "k": k }));
            }
            // every member is pi skew (k..1) with pi starting or ending with its 1
            for s in &whole {
                let head: Vec<usize> = s.word()[..n - k].iter().map(|x| x - k).collect();
                let pi = Permutation::new(head)?;
                let rebuilt = pi.skew_sum(&Permutation::decreasing(k));
                let ends = pi.is_empty() || pi.at(1) == 1 || pi.at(pi.len()) == 1;
                if &rebuilt != s || !ends || !avoids(&pi, &[p("213"), p("312")]) {
                    c.fail(json!({ "case": "skew form", "sigma": s.to_string(), "k": k }));
                }
            }
        }
    }
    c.lo = 3;
    Ok(())
}

fn eq_8(c: &mut Ctx) -> R {
    let f = tail_dists(c)?;
    for n in 1..=c.n {
        c.expect_eq(format!("F_{n}^{n}"), &QPoly::one(), &f[n][n]);
        if n >= 2 {
            c.expect_eq(format!("F_{n}^{}", n - 1), &QPoly::one(), &f[n][n - 1]);
            let sum = f[n - 1][0].checked_add(&f[n][1])?;
            c.expect_eq(format!("F_{n} = F_{} + F_{n}^1", n - 1), &sum, &f[n][0]);
        }
        for k in 1..n.saturating_sub(1) {
            let e = (k - 1).min(n - 1 - k);
            let expected = f[n - 1][k].shift(e).checked_add(&f[n][k + 1])?;
            c.expect_eq(format!("F_{n}^{k}"), &expected, &f[n][k]);
        }
    }
    c.note("middle relation read with F_(n-1)^k on the right-hand side");
    Ok(())
}

fn cor_4_5(c: &mut Ctx) -> R {
    let t = QTableau::<i64>::build(c.n)?;
    for n in 0..=c.n {
        let expected = binomial(n as i64, 2) + 1;
        c.expect_eq(format!("R_{n}^0(0)"), &expected, &t.get(n, 0).expect("cell").eval(&0)?);
        let cf = closed_form::<i64>(ClosedForm::CentralPolygonal, n)?;
        c.expect_eq(format!("closed form n={n}"), &QPoly::constant(expected), cf.as_q().expect("q"));
    }
    let enum_bound = c.n.min(Scale::Class.default_bound().expect("class bound"));
    for pair in TABLEAU_PAIRS {
        for n in 0..=enum_bound {
            let d = c.crs(&class(n, &pair))?;
            c.expect_eq(format!("noncrossing in S_{n}({},{})", pair[0], pair[1]), &(binomial(n as i64, 2) + 1), &d.coeff(0));
        }
    }
    c.lo = 0;
    c.note(format!("enumeration side checked for n <= {enum_bound}"));
    Ok(())
}

fn thm_4_6(c: &mut Ctx) -> R {
    let t = QTableau::<i64>::build(c.n + 1)?;
    for pair in SHIFTED_TABLEAU_PAIRS {
        for n in 0..=c.n {
            let d = c.crs(&class(n, &pair))?;
            c.expect_eq(format!("S_{n}({},{})", pair[0], pair[1]), t.get(n + 1, 1).expect("cell"), &d);
        }
    }
    c.lo = 0;
    Ok(())
}

fn prop_5_1(c: &mut Ctx) -> R {
    for n in 0..=c.n {
        let a = c.e.collect(&class(n, &["321", "231"]))?;
        let b = c.e.collect(&ClassSpec::all(n).with(Constraint::MaxDropLe(1)))?;
        if a != b {
            let only_a: Vec<Permutation> = a.iter().filter(|s| !b.contains(s)).take(3).cloned().collect();
            let only_b: Vec<Permutation> = b.iter().filter(|s| !a.contains(s)).take(3).cloned().collect();
            c.fail(json!({ "n": n, "only_in_class": words(&only_a), "only_in_b": words(&only_b) }));
        }
    }
    c.lo = 0;
    Ok(())
}

fn inv_exc_crs(c: &mut Ctx) -> R {
    for n in 0..=c.n {
        for s in c.e.enumerate(&class(n, &["321", "231"]))? {
            if s.inv() != s.exc() + s.crs() {
                c.fail(json!({ "sigma": s.to_string(), "inv": s.inv(), "exc": s.exc(), "crs": s.crs() }));
            }
        }
    }
    c.lo = 0;
    Ok(())
}

fn thm_5_2(c: &mut Ctx) -> R {
    let series = gf::thm52(c.n)?;
    let rec = gf::thm52_recurrence(c.n)?;
    for (n, r) in rec.iter().enumerate() {
        let brute = joint_poly(&c.e, &class(n, &["231", "321"]), (Statistic::Exc, Statistic::Crs))?;
        c.expect_eq(format!("z^{n}"), &brute, series.coeff(n));
        c.expect_eq(format!("recurrence n={n}"), &brute, r);
    }
    c.lo = 0;
    Ok(())
}

fn eq_chung(c: &mut Ctx) -> R {
    let series = gf::chung(c.n)?;
    let mut first_miss: Vec<(String, Option<usize>)> = Vec::new();
    for pair in [["321", "231"], ["321", "213"]] {
        let mut miss = None;
        for n in 0..=c.n {
            let brute = joint_poly(&c.e, &class(n, &pair), (Statistic::Des, Statistic::Inv))?;
            if &brute != series.coeff(n) {
                miss = Some(n);
                break;
            }
        }
        first_miss.push((format!("S({},{})", pair[0], pair[1]), miss));
    }
    let matching: Vec<&str> = first_miss
        .iter()
        .filter(|(_, m)| m.is_none())
        .map(|(l, _)| l.as_str())
        .collect();
    if matching.is_empty() {
        c.fail(json!({ "case": "no candidate class matches", "first_mismatch": format!("{first_miss:?}") }));
    }
    for (label, miss) in &first_miss {
        match miss {
            None => c.note(format!("matches (des, inv) over {label} for n <= {}", c.n)),
            Some(n) => c.note(format!("differs from (des, inv) over {label} at n = {n}")),
        }
    }
    c.lo = 0;
    Ok(())
}

fn eq_dokos(c: &mut Ctx) -> R {
    let chung = gf::chung(c.n)?;
    for n in 1..=c.n {
        let expected = one_plus_q_pow(n - 1)?;
        let d = crate::dist::dist_poly(&c.e, &class(n, &["321", "231"]), Statistic::Inv)?;
        c.expect_eq(format!("inv on S_{n}(321,231)"), &expected, &d);
        c.expect_eq(format!("z^{n} of the (des, inv) series at y=1"), &expected, &chung.coeff(n).at_y(&1)?);
    }
    Ok(())
}

fn cor_5_3(c: &mut Ctx) -> R {
    for n in 0..=c.n {
        let coeffs: Vec<i64> = (0..=n / 2).map(|k| binomial(n as i64, 2 * k as i64)).collect();
        let expected = QPoly::from_i64s(&coeffs);
        for stat in [Statistic::Des, Statistic::Exc] {
            let d = crate::dist::dist_poly(&c.e, &class(n, &["231", "321"]), stat)?;
            c.expect_eq(format!("{stat} on S_{n}(231,321)"), &expected, &d);
        }
        let cf = closed_form::<i64>(ClosedForm::EvenBinomials, n)?;
        let cf = cf.as_yq().expect("y-polynomial").at_q(&0)?;
        c.expect_eq(format!("closed form n={n}"), &expected, &cf);
    }
    c.lo = 0;
    Ok(())
}

fn cor_5_4(c: &mut Ctx) -> R {
    let counts = (0..=c.n)
        .map(|n| Ok(c.crs(&class(n, &["231", "321"]))?.coeff(0)))
        .collect::<Result<Vec<i64>>>()?;
    for n in 2..=c.n {
        c.expect_eq(format!("c_{n} = c_{} + c_{}", n - 1, n - 2), &(counts[n - 1] + counts[n - 2]), &counts[n]);
    }
    if c.n >= 2 {
        c.expect_eq("c_1", &1, &counts[1]);
        c.expect_eq("c_2", &2, &counts[2]);
    }
    c.lo = 0;
    c.note(format!(
        "counts {:?}: c_n is Fib(n+1) with Fib(1) = Fib(2) = 1",
        counts
    ));
    Ok(())
}
