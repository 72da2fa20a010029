//! Generating functions expanded as truncated `z`-series, each paired with
//! the class whose brute-force distribution it should reproduce.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dist::{dist_poly, joint_poly};
use crate::error::{Error, Result};
use crate::pattern::{ClassSpec, Enumerator};
use crate::perm::Statistic;
use crate::poly::{cfrac_expand, rational_expand};
use crate::{QPoly, QSeries, YQPoly, YQSeries};

/// Largest expansion order accepted.
pub const MAX_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gf {
    /// Continued fraction with levels `q^⌊(m−1)/2⌋`, against crossings on `S(321)`.
    Cfrac321,
    /// `1/(1 − z·F(231))` with `F(231)` enumerated, against crossings on `S(312)`.
    Thm24,
    /// `(1−qz)/(1−(1+q)z−(y−q)z²)` against `(exc, crs)` on `S(231,321)`.
    Thm52,
    /// `(1−qz)/(1−(1+q)z−q(y−1)z²)` against `(des, inv)` on `S(321,231)`.
    Chung,
}

impl Gf {
    pub const ALL: [Gf; 4] = [Gf::Cfrac321, Gf::Thm24, Gf::Thm52, Gf::Chung];

    pub fn id(self) -> &'static str {
        match self {
            Gf::Cfrac321 => "cfrac-321",
            Gf::Thm24 => "thm24",
            Gf::Thm52 => "thm52",
            Gf::Chung => "chung",
        }
    }

    /// The class and statistics of the brute-force column at size `n`.
    pub fn oracle(self, n: usize) -> (ClassSpec, Statistic, Option<Statistic>) {
        match self {
            Gf::Cfrac321 => (ClassSpec::avoiding(n, &["321"]), Statistic::Crs, None),
            Gf::Thm24 => (ClassSpec::avoiding(n, &["312"]), Statistic::Crs, None),
            Gf::Thm52 => (
                ClassSpec::avoiding(n, &["231", "321"]),
                Statistic::Exc,
                Some(Statistic::Crs),
            ),
            Gf::Chung => (
                ClassSpec::avoiding(n, &["321", "231"]),
                Statistic::Des,
                Some(Statistic::Inv),
            ),
        }
    }

    /// Brute-force coefficient of `z^n`, or `None` past the enumeration bound.
    pub fn brute(self, e: &Enumerator, n: usize) -> Result<Option<YQPoly>> {
        let (spec, first, second) = self.oracle(n);
        if n > e.bound_for(&spec) {
            return Ok(None);
        }
        Ok(Some(match second {
            None => YQPoly::from_q(&dist_poly(e, &spec, first)?),
            Some(s) => joint_poly(e, &spec, (first, s))?,
        }))
    }

    /// The series to order `order`, with `q`-only coefficients embedded in
    /// `(y, q)`.
    pub fn series(self, e: &Enumerator, order: usize) -> Result<YQSeries> {
        check_order(order)?;
        let s = match self {
            Gf::Cfrac321 => to_yq(&cfrac_321(order)?)?,
            Gf::Thm24 => to_yq(&thm24(e, order)?)?,
            Gf::Thm52 => thm52(order)?,
            Gf::Chung => chung(order)?,
        };
        Ok(s)
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Gf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gf::ALL
            .into_iter()
            .find(|g| g.id() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "generating function",
                name: s.to_string(),
            })
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::OutOfRange {
            what: "order",
            value: order,
            lo: 0,
            hi: MAX_ORDER,
        });
    }
    Ok(())
}

fn to_yq(s: &QSeries) -> Result<YQSeries> {
    Ok(s.map(|p| Ok(YQPoly::from_q(p)))?)
}

/// `a_m = q^⌊(m−1)/2⌋` for `m = 1..=depth`.
pub fn cfrac_levels(depth: usize) -> Vec<QPoly> {
    (1..=depth).map(|m| QPoly::q_pow((m - 1) / 2)).collect()
}

pub fn cfrac_321(order: usize) -> Result<QSeries> {
    Ok(cfrac_expand(&cfrac_levels(order), order)?)
}

/// `F(231;q,z)` read off by enumeration.
pub fn enumerated_series(e: &Enumerator, patterns: &[&str], order: usize) -> Result<QSeries> {
    let coeffs = (0..=order)
        .map(|n| dist_poly(e, &ClassSpec::avoiding(n, patterns), Statistic::Crs))
        .collect::<Result<Vec<_>>>()?;
    Ok(QSeries::new(coeffs, order))
}

/// `1/(1 − z·F(231;q,z))`.
pub fn thm24(e: &Enumerator, order: usize) -> Result<QSeries> {
    let f231 = enumerated_series(e, &["231"], order)?;
    Ok(QSeries::one(order).try_sub(&f231.times_z())?.reciprocal()?)
}

fn yq(terms: &[(u32, u32, i64)]) -> YQPoly {
    YQPoly::from_i64_terms(terms)
}

/// `(1−qz)/(1−(1+q)z−(y−q)z²)`.
pub fn thm52(order: usize) -> Result<YQSeries> {
    let num = [YQPoly::one(), yq(&[(0, 1, -1)])];
    let den = [YQPoly::one(), yq(&[(0, 0, -1), (0, 1, -1)]), yq(&[(1, 0, -1), (0, 1, 1)])];
    Ok(rational_expand(&num, &den, order)?)
}

/// `(1−qz)/(1−(1+q)z−q(y−1)z²)`.
pub fn chung(order: usize) -> Result<YQSeries> {
    let num = [YQPoly::one(), yq(&[(0, 1, -1)])];
    let den = [YQPoly::one(), yq(&[(0, 0, -1), (0, 1, -1)]), yq(&[(1, 1, -1), (0, 1, 1)])];
    Ok(rational_expand(&num, &den, order)?)
}

/// `F_0 = F_1 = 1`, `F_n = (1+q)F_{n−1} + (y−q)F_{n−2}`.
pub fn thm52_recurrence(order: usize) -> Result<Vec<YQPoly>> {
    let a = yq(&[(0, 0, 1), (0, 1, 1)]);
    let b = yq(&[(1, 0, 1), (0, 1, -1)]);
    let mut f = vec![YQPoly::one(), YQPoly::one()];
    for n in 2..=order {
        let next = a.checked_mul(&f[n - 1])?.checked_add(&b.checked_mul(&f[n - 2])?)?;
        f.push(next);
    }
    f.truncate(order + 1);
    Ok(f)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionRow {
    pub n: usize,
    pub series: String,
    pub brute: Option<String>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

/// Coefficients of `z^0..=z^order`, each beside its brute-force value when
/// enumeration is within bounds.
pub fn expand(gf: Gf, e: &Enumerator, order: usize) -> Result<Vec<ExpansionRow>> {
    let series = gf.series(e, order)?;
    (0..=order)
        .map(|n| {
            let coeff = series.coeff(n);
            let brute = gf.brute(e, n)?;
            Ok(ExpansionRow {
                n,
                series: coeff.to_string(),
                matches: brute.as_ref().map(|b| b == coeff),
                brute: brute.map(|b| b.to_string()),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm52_third_coefficient() {
        let rows = expand(Gf::Thm52, &Enumerator::default(), 3).unwrap();
        assert_eq!(rows[3].series, "1+2y+qy");
        assert!(rows.iter().all(|r| r.matches == Some(true)));
    }

    #[test]
    fn order_zero_is_one() {
        for gf in Gf::ALL {
            let rows = expand(gf, &Enumerator::default(), 0).unwrap();
            assert_eq!(rows.len(), 1);
            assert_eq!(rows[0].series, "1");
        }
        assert!(expand(Gf::Chung, &Enumerator::default(), 13).is_err());
        assert!("thm99".parse::<Gf>().is_err());
    }

    #[test]
    fn recurrence_agrees_with_rational_expansion() {
        let s = thm52(10).unwrap();
        let r = thm52_recurrence(10).unwrap();
        assert_eq!(s.coeffs(), &r[..]);
        assert_eq!(thm52_recurrence(0).unwrap().len(), 1);
    }

    #[test]
    fn chung_third_coefficient() {
        // des/inv over S_3(321,231) = {123, 132, 213, 312}
        assert_eq!(chung(3).unwrap().coeff(3).to_string(), "1+2qy+q^2y");
    }

    #[test]
    fn thm24_small_orders_match() {
        for row in expand(Gf::Thm24, &Enumerator::default(), 6).unwrap() {
            assert_eq!(row.matches, Some(true), "z^{}", row.n);
        }
    }
}
