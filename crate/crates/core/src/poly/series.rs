use std::fmt;

use super::Ring;
use crate::error::PolyError;

/// Power series in `z` truncated after `z^order`, with coefficients in `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> ZSeries<R> {
    /// Pads with zeros or truncates so that exactly `order + 1`
    /// coefficients are kept.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        ZSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        ZSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        ZSeries::new(vec![R::one()], order)
    }

    /// `c · z^k`, zero if `k > order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = ZSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        ZSeries::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        let order = self.order().min(other.order());
        (0..=order)
            .map(|n| self.coeffs[n].try_add(&other.coeffs[n]))
            .collect::<Result<Vec<_>, _>>()
            .map(|c| ZSeries::new(c, order))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let order = self.order().min(other.order());
        (0..=order)
            .map(|n| self.coeffs[n].try_sub(&other.coeffs[n]))
            .collect::<Result<Vec<_>, _>>()
            .map(|c| ZSeries::new(c, order))
    }

    /// Cauchy product truncated at the smaller order.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let order = self.order().min(other.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(ZSeries::new(out, order))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Result<Self, PolyError> {
        self.coeffs
            .iter()
            .map(|a| a.try_mul(c))
            .collect::<Result<Vec<_>, _>>()
            .map(|v| ZSeries { coeffs: v })
    }

    /// Multiplies by `z`, dropping the term that falls past the order.
    pub fn times_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(R::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        ZSeries { coeffs }
    }

    /// Multiplicative inverse. The constant term must be exactly 1.
    pub fn reciprocal(&self) -> Result<Self, PolyError> {
        if !self.coeffs[0].is_one() {
            return Err(PolyError::NonUnitConstant);
        }
        let order = self.order();
        let mut inv: Vec<R> = Vec::with_capacity(order + 1);
        inv.push(R::one());
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.try_add(&self.coeffs[k].try_mul(&inv[n - k])?)?;
                }
            }
            inv.push(R::zero().try_sub(&acc)?);
        }
        Ok(ZSeries { coeffs: inv })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> Result<S, PolyError>) -> Result<ZSeries<S>, PolyError> {
        self.coeffs
            .iter()
            .map(f)
            .collect::<Result<Vec<_>, _>>()
            .map(|coeffs| ZSeries { coeffs })
    }
}

/// Expands `1/(1 − a₁z/(1 − a₂z/(1 − …)))` to order `order`, consuming the
/// `levels` bottom-up. At least `order` levels are needed since each level
/// contributes a factor of `z`.
pub fn cfrac_expand<R: Ring>(levels: &[R], order: usize) -> Result<ZSeries<R>, PolyError> {
    if levels.len() < order {
        return Err(PolyError::InsufficientDepth {
            depth: levels.len(),
            order,
        });
    }
    let mut tail = ZSeries::one(order);
    for a in levels.iter().rev() {
        let denom = ZSeries::one(order).try_sub(&tail.times_z().scale(a)?)?;
        tail = denom.reciprocal()?;
    }
    Ok(tail)
}

/// Expands `numerator(z) / denominator(z)` to order `order` through the
/// linear recurrence `F_n = a_n − Σ_{i≥1} b_i F_{n−i}` induced by a
/// denominator with constant term 1.
pub fn rational_expand<R: Ring>(
    numerator: &[R],
    denominator: &[R],
    order: usize,
) -> Result<ZSeries<R>, PolyError> {
    if !denominator.first().is_some_and(Ring::is_one) {
        return Err(PolyError::NonUnitConstant);
    }
    let mut f: Vec<R> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = numerator.get(n).cloned().unwrap_or_else(R::zero);
        for (i, b) in denominator.iter().enumerate().skip(1).take(n) {
            if !b.is_zero() {
                acc = acc.try_sub(&b.try_mul(&f[n - i])?)?;
            }
        }
        f.push(acc);
    }
    Ok(ZSeries::new(f, order))
}

impl<R: Ring + fmt::Display> fmt::Display for ZSeries<R> {
    /// `1 + z + (1+y)z^2 + …`, zero coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let text = c.to_string();
            let zpart = match n {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{n}"),
            };
            if n == 0 {
                f.write_str(&text)?;
            } else if c.is_one() {
                f.write_str(&zpart)?;
            } else if text.contains(['+', '-']) || text.chars().any(|ch| ch.is_alphabetic()) {
                write!(f, "({text}){zpart}")?;
            } else {
                write!(f, "{text}{zpart}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{BiPoly, Poly};

    type P = Poly<i64>;

    #[test]
    fn geometric_series() {
        let s = ZSeries::<i64>::new(vec![1, -1], 4).reciprocal().unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 1, 1, 1]);
        assert_eq!(
            ZSeries::<i64>::new(vec![2, 1], 3).reciprocal(),
            Err(PolyError::NonUnitConstant)
        );
    }

    #[test]
    fn catalan_continued_fraction() {
        let s = cfrac_expand(&[1i64; 5], 5).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 2, 5, 14, 42]);
        assert_eq!(
            cfrac_expand(&[1i64; 4], 5),
            Err(PolyError::InsufficientDepth { depth: 4, order: 5 })
        );
        assert_eq!(cfrac_expand::<i64>(&[], 0).unwrap().coeffs(), &[1]);
    }

    #[test]
    fn depth_beyond_order_is_harmless() {
        let levels: Vec<P> = (1..=13).map(|m| P::q_pow((m - 1) / 2)).collect();
        for order in 0..=10 {
            let a = cfrac_expand(&levels[..order], order).unwrap();
            let b = cfrac_expand(&levels[..order + 3], order).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rational_examples() {
        type B = BiPoly<i64>;
        let one = B::one();
        let q = B::q();
        let y = B::y();
        let num = vec![one.clone(), B::zero() - q.clone()];
        let den = vec![
            one.clone(),
            B::zero() - (&one + &q),
            B::zero() - (&y - &q),
        ];
        let s = rational_expand(&num, &den, 3).unwrap();
        assert_eq!(s.coeff(0), &one);
        assert_eq!(s.coeff(1), &one);
        assert_eq!(s.coeff(2), &(&one + &y));
        assert_eq!(s.coeff(3), &B::from_i64_terms(&[(0, 0, 1), (1, 0, 2), (1, 1, 1)]));
        let trivial = rational_expand(&[1i64], &[1i64], 6).unwrap();
        assert_eq!(trivial, ZSeries::one(6));
        assert_eq!(rational_expand(&[1i64], &[2i64], 2), Err(PolyError::NonUnitConstant));
    }

    #[test]
    fn display() {
        let s = ZSeries::<P>::new(vec![P::one(), P::one(), P::from_i64s(&[1, 1]), P::from_i64s(&[2])], 3);
        assert_eq!(s.to_string(), "1 + z + (1+q)z^2 + 2z^3");
    }
}
