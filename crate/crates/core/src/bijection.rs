//! The insertion bijections `φ_k`, `ψ_k` and the crossing-change identities
//! for the insertion operator, each computed on both sides so that it can
//! be checked rather than assumed.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::{ClassSpec, Constraint, Enumerator};
use crate::perm::{Permutation, Symmetry};
use crate::dist::{QTableau, REFERENCE_TABLE};
use crate::QPoly;

/// `φ_k(σ) = σ^-(n+2−k, 1)`, landing in `S_{n+1}^k`.
pub fn phi(k: usize, p: &Permutation) -> Result<Permutation> {
    let pos = landing_position(k, p.len())?;
    p.insert_of_inverse(pos, 1)
}

/// `ψ_k(σ) = rc(σ)^(n+2−k, 1)`, landing in `S_{n+1}^k`.
pub fn psi(k: usize, p: &Permutation) -> Result<Permutation> {
    let pos = landing_position(k, p.len())?;
    p.apply(Symmetry::Rc).insert(pos, 1)
}

fn landing_position(k: usize, n: usize) -> Result<usize> {
    if k < 1 || k > n + 1 {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            lo: 1,
            hi: n + 1,
        });
    }
    Ok(n + 2 - k)
}

/// Identities relating `crs` before and after an operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma {
    /// `crs(σ^(n+1,1)) = crs(σ) + ut(σ) − lt(σ)`
    AppendOne,
    /// `crs(σ^(n,1)) = crs(σ) + 1 − [σ(n) = n] + ut(σ) − lt(σ)`
    InsertOneBeforeLast,
    /// `crs(σ⁻¹) = crs(σ) + ut(σ) − lt(σ)`
    Inverse,
    /// `crs(rc(σ)) = crs(σ) + ut(σ) − lt(σ)`
    ReverseComplement,
    /// `crs(σ^(1,j)) = crs(σ) + |A_j| + |B_j| − |C_j|`
    PrependValue { j: usize },
    /// `crs(σ^(1,k+1)) = crs(σ) + min(k−1, n−k)` on `S_n^[k](213,312)`
    TailPrepend { k: usize },
}

impl Lemma {
    pub fn id(&self) -> String {
        match self {
            Lemma::AppendOne => "lem-2.1".into(),
            Lemma::InsertOneBeforeLast => "lem-2.2".into(),
            Lemma::Inverse => "lem-2.4-i".into(),
            Lemma::ReverseComplement => "lem-2.4-rc".into(),
            Lemma::PrependValue { j } => format!("lem-4.2:{j}"),
            Lemma::TailPrepend { k } => format!("cor-4.3:{k}"),
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    /// `lem-2.1`, `lem-2.2`, `lem-2.4-i`, `lem-2.4-rc`, `lem-4.2:<j>`,
    /// `cor-4.3:<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "lemma",
            name: s.to_string(),
        };
        let (head, param) = match s.split_once(':') {
            Some((h, p)) => (h, Some(p.parse::<usize>().map_err(|_| unknown())?)),
            None => (s, None),
        };
        match (head, param) {
            ("lem-2.1", None) => Ok(Lemma::AppendOne),
            ("lem-2.2", None) => Ok(Lemma::InsertOneBeforeLast),
            ("lem-2.4-i", None) => Ok(Lemma::Inverse),
            ("lem-2.4-rc", None) => Ok(Lemma::ReverseComplement),
            ("lem-4.2", Some(j)) => Ok(Lemma::PrependValue { j }),
            ("cor-4.3", Some(k)) => Ok(Lemma::TailPrepend { k }),
            _ => Err(unknown()),
        }
    }
}

/// Both sides of one identity evaluated on one sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualReport {
    pub lemma: String,
    pub sample: Permutation,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

impl ResidualReport {
    fn new(lemma: &Lemma, sample: &Permutation, lhs: i64, rhs: i64) -> Self {
        ResidualReport {
            lemma: lemma.id(),
            sample: sample.clone(),
            lhs,
            rhs,
            pass: lhs == rhs,
        }
    }

    pub fn residual(&self) -> i64 {
        self.lhs - self.rhs
    }
}

fn transient_shift(p: &Permutation) -> i64 {
    let (ut, lt) = p.transients();
    p.crs() as i64 + ut as i64 - lt as i64
}

const TAIL_PAIR: [&str; 2] = ["213", "312"];

pub fn check_lemma(lemma: Lemma, p: &Permutation) -> Result<ResidualReport> {
    let n = p.len();
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            lo: 1,
            hi: usize::MAX,
        });
    }
    let crs = p.crs() as i64;
    let (lhs, rhs) = match lemma {
        Lemma::AppendOne => (p.insert(n + 1, 1)?.crs() as i64, transient_shift(p)),
        Lemma::InsertOneBeforeLast => {
            let fixed_last = i64::from(p.at(n) == n);
            (p.insert(n, 1)?.crs() as i64, transient_shift(p) + 1 - fixed_last)
        }
        Lemma::Inverse => (p.inverse().crs() as i64, transient_shift(p)),
        Lemma::ReverseComplement => (p.apply(Symmetry::Rc).crs() as i64, transient_shift(p)),
        Lemma::PrependValue { j } => {
            let sets = insertion_sets(p, j)?;
            (p.insert(1, j)?.crs() as i64, crs + sets.increment())
        }
        Lemma::TailPrepend { k } => {
            let spec = ClassSpec::avoiding(n, &TAIL_PAIR).with(Constraint::Tail(k));
            spec.validate()?;
            if !spec.contains(p) {
                return Err(Error::InvalidConstraint(format!("{p} is not a member of {spec}")));
            }
            (p.insert(1, k + 1)?.crs() as i64, crs + tail_increment_statement(n, k) as i64)
        }
    };
    Ok(ResidualReport::new(&lemma, p, lhs, rhs))
}

/// The index sets whose sizes give the crossing change under `σ ↦ σ^(1,j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InsertionSets {
    pub j: usize,
    /// Positions `i` with `i + 1 < j ≤ σ(i)`: each gains an upper crossing
    /// with the new first letter.
    pub a: Vec<usize>,
    /// Positions `i` with `i + 1 < j`, `σ(i) ≤ i`, `i + 1 ≤ σ⁻¹(i + 1)`:
    /// each yields a new lower transient.
    pub b: Vec<usize>,
    /// Pairs `(i, k)` with `i < k < σ(i) = k + 1 < σ(k)` and `k + 1 < j`:
    /// upper crossings that are lost.
    pub c: Vec<(usize, usize)>,
}

impl InsertionSets {
    pub fn increment(&self) -> i64 {
        self.a.len() as i64 + self.b.len() as i64 - self.c.len() as i64
    }
}

fn check_j(p: &Permutation, j: usize) -> Result<()> {
    if j < 1 || j > p.len() + 1 {
        return Err(Error::OutOfRange {
            what: "j",
            value: j,
            lo: 1,
            hi: p.len() + 1,
        });
    }
    Ok(())
}

fn b_set(p: &Permutation, j: usize) -> Vec<usize> {
    (1..=p.len())
        .filter(|&i| i + 1 < j && p.at(i) <= i && i < p.len())
        .filter(|&i| i < p.position_of(i + 1).expect("value in range"))
        .collect()
}

fn c_candidates(p: &Permutation) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for k in i + 1..=n {
            if k < p.at(i) && p.at(i) == k + 1 && k + 1 < p.at(k) {
                out.push((i, k));
            }
        }
    }
    out
}

/// The sets with the boundary conditions under which the crossing-change
/// identity holds exactly (`i + 1 < j` in `A`, `k + 1 < j` in `C`).
pub fn insertion_sets(p: &Permutation, j: usize) -> Result<InsertionSets> {
    check_j(p, j)?;
    Ok(InsertionSets {
        j,
        a: (1..=p.len()).filter(|&i| i + 1 < j && p.at(i) >= j).collect(),
        b: b_set(p, j),
        c: c_candidates(p).into_iter().filter(|&(_, k)| k + 1 < j).collect(),
    })
}

/// The sets with the looser boundaries `i < j` in `A` and `k + 1 ≤ j` in
/// `C`. Kept for adjudication; the identity fails with these.
pub fn insertion_sets_as_printed(p: &Permutation, j: usize) -> Result<InsertionSets> {
    check_j(p, j)?;
    Ok(InsertionSets {
        j,
        a: (1..j.min(p.len() + 1)).filter(|&i| p.at(i) >= j).collect(),
        b: b_set(p, j),
        c: c_candidates(p).into_iter().filter(|&(_, k)| k < j).collect(),
    })
}

pub fn check_lemma42(p: &Permutation, j: usize) -> Result<ResidualReport> {
    check_lemma(Lemma::PrependValue { j }, p)
}

/// Tallies of the prepend identity under both readings of the index sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrependAdjudication {
    pub n_max: usize,
    pub samples: usize,
    pub failures_as_printed: usize,
    pub failures_corrected: usize,
    /// `(σ, j, crs(σ^(1,j)), predicted)` for the first printed-set failure.
    pub first_printed_counterexample: Option<(Permutation, usize, i64, i64)>,
}

pub fn adjudicate_lemma42(n_max: usize) -> Result<PrependAdjudication> {
    let mut out = PrependAdjudication {
        n_max,
        samples: 0,
        failures_as_printed: 0,
        failures_corrected: 0,
        first_printed_counterexample: None,
    };
    for n in 1..=n_max {
        for p in crate::perm::all_permutations(n) {
            let base = p.crs() as i64;
            for j in 1..=n {
                let actual = p.insert(1, j)?.crs() as i64;
                out.samples += 1;
                if actual != base + insertion_sets(&p, j)?.increment() {
                    out.failures_corrected += 1;
                }
                let printed = base + insertion_sets_as_printed(&p, j)?.increment();
                if actual != printed {
                    out.failures_as_printed += 1;
                    if out.first_printed_counterexample.is_none() {
                        out.first_printed_counterexample = Some((p.clone(), j, actual, printed));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `min(k−1, n−k)`: the crossing increment of `σ ↦ σ^(1,k+1)` on
/// `S_n^[k](213,312)` as the statement gives it.
pub fn tail_increment_statement(n: usize, k: usize) -> usize {
    (k - 1).min(n - k)
}

/// `min(k−1, n−1−k)`: the competing exponent, floored at 0.
pub fn tail_increment_proof(n: usize, k: usize) -> usize {
    (k - 1).min((n - 1).saturating_sub(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Statement,
    Proof,
    Both,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailRow {
    pub n: usize,
    pub k: usize,
    pub members: usize,
    pub increments: Vec<usize>,
    pub statement: usize,
    pub proof: usize,
    pub statement_matches: bool,
    pub proof_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailAdjudication {
    pub rows: Vec<TailRow>,
    pub verdict: Verdict,
    /// Whether the tableau recurrence built from the winning exponent,
    /// applied at size `n − 1`, reproduces every reference cell.
    pub reproduces_reference_table: bool,
}

/// For every `σ ∈ S_n^[k](213,312)`, `n ≤ n_max`, measures
/// `crs(σ^(1,k+1)) − crs(σ)` and compares both candidate exponents.
pub fn adjudicate_cor43(e: &Enumerator, n_max: usize) -> Result<TailAdjudication> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n {
            let spec = ClassSpec::avoiding(n, &TAIL_PAIR).with(Constraint::Tail(k));
            let mut increments: Vec<usize> = Vec::new();
            let mut members = 0;
            for p in e.enumerate(&spec)? {
                members += 1;
                let d = p.insert(1, k + 1)?.crs() - p.crs();
                if !increments.contains(&d) {
                    increments.push(d);
                }
            }
            increments.sort_unstable();
            let statement = tail_increment_statement(n, k);
            let proof = tail_increment_proof(n, k);
            rows.push(TailRow {
                n,
                k,
                members,
                statement_matches: increments.iter().all(|&d| d == statement),
                proof_matches: increments.iter().all(|&d| d == proof),
                increments,
                statement,
                proof,
            });
        }
    }
    let s = rows.iter().all(|r| r.statement_matches);
    let p = rows.iter().all(|r| r.proof_matches);
    let verdict = match (s, p) {
        (true, true) => Verdict::Both,
        (true, false) => Verdict::Statement,
        (false, true) => Verdict::Proof,
        (false, false) => Verdict::Neither,
    };
    let winner: fn(usize, usize) -> usize = match verdict {
        Verdict::Proof => tail_increment_proof,
        _ => tail_increment_statement,
    };
    // σ ∈ S_{n−1}^[k] feeds row n, so the exponent is taken at size n − 1.
    let tableau = QTableau::<i64>::build_with(6, |n, k| winner(n - 1, k))?;
    let reproduces_reference_table = REFERENCE_TABLE
        .iter()
        .all(|&(n, k, text)| tableau.get(n, k) == text.parse::<QPoly>().ok().as_ref());
    Ok(TailAdjudication {
        rows,
        verdict,
        reproduces_reference_table,
    })
}

/// `count` uniformly random permutations of size `n` from a fixed seed.
pub fn random_permutations(n: usize, count: usize, seed: u64) -> Vec<Permutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut w: Vec<usize> = (1..=n).collect();
            w.shuffle(&mut rng);
            Permutation::from_word_unchecked(w)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn phi_psi_examples() {
        assert_eq!(phi(1, &p("21")).unwrap(), p("321"));
        assert_eq!(psi(1, &p("21")).unwrap(), p("321"));
        assert_eq!(phi(3, &p("31542")).unwrap(), p("362154"));
        assert_eq!(psi(3, &p("31542")).unwrap(), p("532164"));
        // the printed worked examples put 1 at position n+1−k instead
        assert_eq!(p("31542").insert_of_inverse(3, 1).unwrap(), p("361254"));
        assert_eq!(p("31542").apply(Symmetry::Rc).insert(3, 1).unwrap(), p("531264"));
        assert!(phi(0, &p("21")).is_err());
        assert!(phi(4, &p("21")).is_err());
        assert_eq!(phi(3, &p("21")).unwrap().at(1), 1);
    }

    #[test]
    fn phi_two_shift() {
        for n in 1..=7 {
            for s in all_permutations(n) {
                let image = phi(2, &s).unwrap();
                assert_eq!(image.at(n), 1);
                let expected = s.crs() + 1 - usize::from(s.at(n) == n);
                assert_eq!(image.crs(), expected, "{s}");
            }
        }
    }

    #[test]
    fn lemma_examples() {
        for n in 1..=6 {
            let r = check_lemma(Lemma::AppendOne, &Permutation::identity(n)).unwrap();
            assert_eq!((r.lhs, r.rhs), (0, 0));
        }
        let s = p("4735126");
        let r = check_lemma(Lemma::AppendOne, &s).unwrap();
        let (ut, lt) = s.transients();
        assert_eq!(r.lhs - s.crs() as i64, ut as i64 - lt as i64);
        assert!(r.pass);
        let r = check_lemma(Lemma::Inverse, &p("312")).unwrap();
        assert_eq!((r.lhs, r.rhs), (0, 0));
        assert!(check_lemma(Lemma::AppendOne, &Permutation::empty()).is_err());
    }

    #[test]
    fn lemma_ids_parse() {
        for l in [
            Lemma::AppendOne,
            Lemma::InsertOneBeforeLast,
            Lemma::Inverse,
            Lemma::ReverseComplement,
            Lemma::PrependValue { j: 3 },
            Lemma::TailPrepend { k: 2 },
        ] {
            assert_eq!(l.id().parse::<Lemma>().unwrap(), l);
        }
        assert!("lem-9.9".parse::<Lemma>().is_err());
        assert!("lem-4.2".parse::<Lemma>().is_err());
        assert!("lem-4.2:x".parse::<Lemma>().is_err());
    }

    #[test]
    fn insertion_sets_by_rescan() {
        for n in 1..=6 {
            for s in all_permutations(n) {
                for j in 1..=n {
                    let sets = insertion_sets(&s, j).unwrap();
                    for i in 1..=n {
                        assert_eq!(sets.a.contains(&i), i + 1 < j && s.at(i) >= j);
                        assert!(!sets.a.contains(&i) || (i < j && s.at(i) >= j));
                    }
                    for &(i, k) in &sets.c {
                        assert!(i < k && k < s.at(i) && s.at(i) == k + 1 && k + 1 < s.at(k));
                    }
                }
            }
        }
        for n in 1..=6 {
            for j in 1..=n {
                // j 1 2 … : the falling letters 2..j−1 cross pairwise in a chain
                let sets = insertion_sets(&Permutation::identity(n), j).unwrap();
                assert!(sets.a.is_empty() && sets.c.is_empty());
                assert_eq!(sets.b.len(), j.saturating_sub(2));
            }
        }
        assert!(insertion_sets(&p("21"), 0).is_err());
        assert!(insertion_sets(&p("21"), 4).is_err());
    }

    #[test]
    fn printed_sets_fail_on_smallest_case() {
        let s = p("21");
        assert_eq!(s.insert(1, 2).unwrap(), p("231"));
        assert_eq!(insertion_sets_as_printed(&s, 2).unwrap().a, vec![1]);
        assert!(insertion_sets(&s, 2).unwrap().a.is_empty());
        assert!(check_lemma42(&s, 2).unwrap().pass);
        let adj = adjudicate_lemma42(4).unwrap();
        assert_eq!(adj.failures_corrected, 0);
        assert!(adj.failures_as_printed > 0);
        assert_eq!(adj.first_printed_counterexample, Some((p("21"), 2, 0, 1)));
    }

    #[test]
    fn tail_prepend_precondition() {
        assert!(check_lemma(Lemma::TailPrepend { k: 2 }, &p("4321")).unwrap().pass);
        assert!(check_lemma(Lemma::TailPrepend { k: 2 }, &p("1234")).is_err());
        assert!(check_lemma(Lemma::TailPrepend { k: 5 }, &p("4321")).is_err());
    }

    #[test]
    fn cor43_small_table() {
        let adj = adjudicate_cor43(&Enumerator::default(), 6).unwrap();
        assert_eq!(adj.verdict, Verdict::Statement);
        assert!(adj.reproduces_reference_table);
        let row = adj.rows.iter().find(|r| r.n == 4 && r.k == 2).unwrap();
        assert_eq!(row.increments, vec![1]);
    }

    #[test]
    fn random_permutations_are_valid_and_seeded() {
        let a = random_permutations(10, 50, 7);
        let b = random_permutations(10, 50, 7);
        assert_eq!(a, b);
        for s in &a {
            assert!(Permutation::new(s.word().to_vec()).is_ok());
        }
    }
}
