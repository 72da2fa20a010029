//! Distribution polynomials of statistics over permutation classes, the
//! q-tableau `R_n^k(q)`, and closed forms for the distributions.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, PolyError, Result};
use crate::pattern::{ClassSpec, Constraint, Enumerator};
use crate::perm::Statistic;
use crate::poly::{BiPoly, Coeff, Poly};
use crate::{QPoly, YQPoly};

/// A distribution value: univariate in `q`, or bivariate in `(y, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum DistPoly<C: Coeff = i64> {
    Q(Poly<C>),
    YQ(BiPoly<C>),
}

impl<C: Coeff> DistPoly<C> {
    /// Value with every variable set to 1.
    pub fn total(&self) -> Result<C, PolyError> {
        match self {
            DistPoly::Q(p) => p.eval(&C::one()),
            DistPoly::YQ(p) => p.eval(&C::one(), &C::one()),
        }
    }

    pub fn as_q(&self) -> Option<&Poly<C>> {
        match self {
            DistPoly::Q(p) => Some(p),
            DistPoly::YQ(_) => None,
        }
    }

    pub fn as_yq(&self) -> Option<&BiPoly<C>> {
        match self {
            DistPoly::Q(_) => None,
            DistPoly::YQ(p) => Some(p),
        }
    }
}

impl<C: Coeff> fmt::Display for DistPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistPoly::Q(p) => p.fmt(f),
            DistPoly::YQ(p) => p.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionReport {
    pub spec: ClassSpec,
    pub statistics: Vec<Statistic>,
    pub poly: DistPoly,
    /// Canonical text of `poly`.
    pub text: String,
    pub cardinality: u64,
}

impl DistributionReport {
    fn new(spec: &ClassSpec, statistics: Vec<Statistic>, poly: DistPoly, cardinality: u64) -> Self {
        let text = poly.to_string();
        DistributionReport {
            spec: spec.clone(),
            statistics,
            poly,
            text,
            cardinality,
        }
    }

    /// One CSV record: `n, patterns, constraint, statistics, poly, cardinality`.
    pub fn csv_record(&self) -> [String; 6] {
        let stats: Vec<&str> = self.statistics.iter().map(|s| s.name()).collect();
        let constraint = serde_json::to_value(&self.spec)
            .ok()
            .and_then(|v| v["constraint"].as_str().map(str::to_string))
            .unwrap_or_default();
        [
            self.spec.n.to_string(),
            self.spec.pattern_label(),
            constraint,
            stats.join(","),
            self.text.clone(),
            self.cardinality.to_string(),
        ]
    }

    pub const CSV_HEADER: [&'static str; 6] =
        ["n", "avoid", "constraint", "statistics", "poly", "cardinality"];
}

/// `Σ_{σ ∈ class} q^{stat(σ)}`.
pub fn dist(e: &Enumerator, spec: &ClassSpec, stat: Statistic) -> Result<DistributionReport> {
    let mut counts: Vec<u64> = Vec::new();
    let mut total = 0u64;
    for p in e.enumerate(spec)? {
        let v = stat.eval(&p);
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
        total += 1;
    }
    let poly = DistPoly::Q(QPoly::from_counts(&counts));
    Ok(DistributionReport::new(spec, vec![stat], poly, total))
}

/// The `q`-polynomial alone.
pub fn dist_poly(e: &Enumerator, spec: &ClassSpec, stat: Statistic) -> Result<QPoly> {
    match dist(e, spec, stat)?.poly {
        DistPoly::Q(p) => Ok(p),
        DistPoly::YQ(_) => unreachable!("univariate distribution"),
    }
}

/// `Σ_{σ ∈ class} y^{stat_y(σ)} q^{stat_q(σ)}`.
pub fn joint_dist(
    e: &Enumerator,
    spec: &ClassSpec,
    (stat_y, stat_q): (Statistic, Statistic),
) -> Result<DistributionReport> {
    let mut poly = YQPoly::zero();
    let mut total = 0u64;
    for p in e.enumerate(spec)? {
        poly.add_term(stat_y.eval(&p) as u32, stat_q.eval(&p) as u32, &1)?;
        total += 1;
    }
    Ok(DistributionReport::new(
        spec,
        vec![stat_y, stat_q],
        DistPoly::YQ(poly),
        total,
    ))
}

pub fn joint_poly(e: &Enumerator, spec: &ClassSpec, stats: (Statistic, Statistic)) -> Result<YQPoly> {
    match joint_dist(e, spec, stats)?.poly {
        DistPoly::YQ(p) => Ok(p),
        DistPoly::Q(_) => unreachable!("bivariate distribution"),
    }
}

/// Triangular array `R_n^k(q)`, `0 ≤ k ≤ n ≤ n_max`:
///
/// ```text
/// R_n^n = R_n^{n-1} = 1                       (n ≥ 1), R_0^0 = 1
/// R_n^k = q^{min(k-1, n-1-k)} R_{n-1}^k + R_n^{k+1}   (0 < k < n-1)
/// R_n^0 = R_{n-1}^0 + R_n^1
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QTableau<C: Coeff = i64> {
    rows: Vec<Vec<Poly<C>>>,
}

impl<C: Coeff> QTableau<C> {
    pub fn build(n_max: usize) -> Result<Self, PolyError> {
        QTableau::build_with(n_max, |n, k| (k - 1).min(n - 1 - k))
    }

    /// Same recurrence with a caller-supplied exponent for the interior
    /// cells `0 < k < n − 1`.
    pub fn build_with(
        n_max: usize,
        exponent: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, PolyError> {
        let mut rows: Vec<Vec<Poly<C>>> = vec![vec![Poly::one()]];
        for n in 1..=n_max {
            let mut row = vec![Poly::zero(); n + 1];
            row[n] = Poly::one();
            row[n - 1] = Poly::one();
            for k in (1..n.saturating_sub(1)).rev() {
                let scaled = rows[n - 1][k].shift(exponent(n, k));
                row[k] = scaled.checked_add(&row[k + 1])?;
            }
            if n >= 2 {
                row[0] = rows[n - 1][0].checked_add(&row[1])?;
            }
            rows.push(row);
        }
        Ok(QTableau { rows })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `R_n^k`; `None` outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> Option<&Poly<C>> {
        self.rows.get(n).and_then(|r| r.get(k))
    }

    pub fn row(&self, n: usize) -> &[Poly<C>] {
        &self.rows[n]
    }
}

/// Published cells of `R_n^k(q)` for `0 ≤ n ≤ 6`, `0 ≤ k ≤ min(n, 3)`.
pub const REFERENCE_TABLE: [(usize, usize, &str); 22] = [
    (0, 0, "1"),
    (1, 0, "1"),
    (1, 1, "1"),
    (2, 0, "2"),
    (2, 1, "1"),
    (2, 2, "1"),
    (3, 0, "4"),
    (3, 1, "2"),
    (3, 2, "1"),
    (3, 3, "1"),
    (4, 0, "7+q"),
    (4, 1, "3+q"),
    (4, 2, "1+q"),
    (4, 3, "1"),
    (5, 0, "11+4q+q^2"),
    (5, 1, "4+3q+q^2"),
    (5, 2, "1+2q+q^2"),
    (5, 3, "1+q"),
    (6, 0, "16+9q+5q^2+2q^3"),
    (6, 1, "5+5q+4q^2+2q^3"),
    (6, 2, "1+2q+3q^2+2q^3"),
    (6, 3, "1+q+q^2+q^3"),
];

/// Closed-form distributions, keyed by the identifiers used on the
/// command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// `((1+q)^{n-1} − 1 + q)/q`: crossings over `S_n(123,132)`, `n ≥ 1`.
    Binomial,
    /// `(1+q)^{n-2}`: crossings over `S_n^2(123,132)`, `n ≥ 2`.
    OneAtSecondLast,
    /// `Σ_k (δ_{k,0} + C(n−1,k+1)) q^k`, `n ≥ 1`.
    BinomialCoefficients,
    /// `Σ_k C(n−2,k) q^k`, `n ≥ 2`.
    ShiftedBinomialCoefficients,
    /// `(1+q)^{n-1}`: inversions over `S_n(321,231)`, `n ≥ 1`.
    Inversions,
    /// `Σ_k C(n,2k) y^k`: descents or excedances over `S_n(231,321)`.
    EvenBinomials,
    /// `C(n,2) + 1` as a constant: noncrossing members of `S_n(213,312)`.
    CentralPolygonal,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 7] = [
        ClosedForm::Binomial,
        ClosedForm::OneAtSecondLast,
        ClosedForm::BinomialCoefficients,
        ClosedForm::ShiftedBinomialCoefficients,
        ClosedForm::Inversions,
        ClosedForm::EvenBinomials,
        ClosedForm::CentralPolygonal,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClosedForm::Binomial => "thm-3.1",
            ClosedForm::OneAtSecondLast => "thm-1.1",
            ClosedForm::BinomialCoefficients => "cor-3.2",
            ClosedForm::ShiftedBinomialCoefficients => "cor-3.4",
            ClosedForm::Inversions => "eq-dokos",
            ClosedForm::EvenBinomials => "cor-5.3",
            ClosedForm::CentralPolygonal => "cor-4.5",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            ClosedForm::OneAtSecondLast | ClosedForm::ShiftedBinomialCoefficients => 2,
            ClosedForm::Binomial | ClosedForm::BinomialCoefficients | ClosedForm::Inversions => 1,
            ClosedForm::EvenBinomials | ClosedForm::CentralPolygonal => 0,
        }
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "closed form",
                name: s.to_string(),
            })
    }
}

fn one_plus_q_pow<C: Coeff>(e: usize) -> Result<Poly<C>, PolyError> {
    Poly::new(vec![C::one(), C::one()]).checked_pow(e as u32)
}

/// Evaluates a closed form at size `n`.
pub fn closed_form<C: Coeff>(form: ClosedForm, n: usize) -> Result<DistPoly<C>> {
    if n < form.min_n() {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            lo: form.min_n(),
            hi: usize::MAX,
        });
    }
    let q = Poly::<C>::q();
    let poly = match form {
        ClosedForm::Binomial => {
            let num = one_plus_q_pow::<C>(n - 1)?
                .checked_sub(&Poly::one())?
                .checked_add(&q)?;
            DistPoly::Q(num.div_exact(&q)?)
        }
        ClosedForm::OneAtSecondLast => DistPoly::Q(one_plus_q_pow(n - 2)?),
        ClosedForm::BinomialCoefficients => {
            let binom = one_plus_q_pow::<C>(n - 1)?;
            let coeffs: Vec<C> = (0..n.max(1))
                .map(|k| {
                    let delta = if k == 0 { C::one() } else { C::zero() };
                    delta + binom.coeff(k + 1)
                })
                .collect();
            DistPoly::Q(Poly::new(coeffs))
        }
        ClosedForm::ShiftedBinomialCoefficients => DistPoly::Q(one_plus_q_pow(n - 2)?),
        ClosedForm::Inversions => DistPoly::Q(one_plus_q_pow(n - 1)?),
        ClosedForm::EvenBinomials => {
            let binom = one_plus_q_pow::<C>(n)?;
            let terms = (0..=n / 2).map(|k| (k as u32, 0, binom.coeff(2 * k)));
            DistPoly::YQ(BiPoly::from_terms(terms)?)
        }
        ClosedForm::CentralPolygonal => {
            let c2 = if n >= 2 { one_plus_q_pow::<C>(n)?.coeff(2) } else { C::zero() };
            DistPoly::Q(Poly::constant(c2 + C::one()))
        }
    };
    Ok(poly)
}

/// A disagreement between a class distribution and a tableau cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableauMismatch {
    pub class: String,
    pub n: usize,
    pub k: usize,
    pub expected: String,
    pub actual: String,
}

/// Pattern pairs whose crossing distributions the tableau counts.
pub const TABLEAU_PAIRS: [[&str; 2]; 2] = [["213", "312"], ["132", "312"]];
/// Pattern pairs whose crossing distribution is `R_{n+1}^1`.
pub const SHIFTED_TABLEAU_PAIRS: [[&str; 2]; 2] = [["213", "231"], ["132", "231"]];

/// Compares class distributions with tableau cells at one `(n, k)`:
/// `S_n^[k](T)` against `R_n^k` (or `S_n(T)` against `R_n^0` when `k = 0`),
/// `S_n(T)` against `R_n^0`, for both tableau pairs, and `S_n(T')` against
/// `R_{n+1}^1` for both shifted pairs. Returns the first mismatch.
pub fn tableau_vs_class(
    e: &Enumerator,
    tableau: &QTableau,
    n: usize,
    k: usize,
) -> Result<Option<TableauMismatch>> {
    if n + 1 > tableau.n_max() {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            lo: 0,
            hi: tableau.n_max().saturating_sub(1),
        });
    }
    if k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            lo: 0,
            hi: n,
        });
    }
    let cell = |n: usize, k: usize| tableau.get(n, k).expect("inside the triangle").clone();
    let mut cases: Vec<(ClassSpec, usize, QPoly)> = Vec::new();
    for pair in TABLEAU_PAIRS {
        let base = ClassSpec::avoiding(n, &pair);
        if k >= 1 {
            cases.push((base.clone().with(Constraint::Tail(k)), k, cell(n, k)));
        }
        cases.push((base, 0, cell(n, 0)));
    }
    for pair in SHIFTED_TABLEAU_PAIRS {
        cases.push((ClassSpec::avoiding(n, &pair), 1, cell(n + 1, 1)));
    }
    for (spec, kk, expected) in cases {
        let actual = dist_poly(e, &spec, Statistic::Crs)?;
        if actual != expected {
            return Ok(Some(TableauMismatch {
                class: spec.to_string(),
                n,
                k: kk,
                expected: expected.to_string(),
                actual: actual.to_string(),
            }));
        }
    }
    Ok(None)
}
