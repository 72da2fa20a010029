use std::ops::{Add, Mul, Neg, Sub};

use super::{Coeff, Ring};
use crate::error::PolyError;

/// Dense univariate polynomial in `q`; `coeffs[d]` is the coefficient of
/// `q^d`. Trailing zeros are never stored, so the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// `c · q^d`
    pub fn monomial(c: C, d: usize) -> Self {
        let mut coeffs = vec![C::zero(); d];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn q() -> Self {
        Poly::monomial(C::one(), 1)
    }

    /// `q^d`
    pub fn q_pow(d: usize) -> Self {
        Poly::monomial(C::one(), d)
    }

    /// Builds from small integer coefficients; panics if one does not fit `C`.
    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::new(
            cs.iter()
                .map(|&c| C::from_i64(c).expect("coefficient fits"))
                .collect(),
        )
    }

    /// A histogram of exponents as a polynomial: `Σ counts[d] q^d`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Poly::new(
            counts
                .iter()
                .map(|&c| C::from_u64(c).expect("count fits"))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> C {
        self.coeffs.get(d).cloned().unwrap_or_else(C::zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for d in 0..len {
            out.push(
                self.coeff(d)
                    .checked_add(&other.coeff(d))
                    .ok_or(PolyError::Overflow)?,
            );
        }
        Ok(Poly::new(out))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for d in 0..len {
            out.push(
                self.coeff(d)
                    .checked_sub(&other.coeff(d))
                    .ok_or(PolyError::Overflow)?,
            );
        }
        Ok(Poly::new(out))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(PolyError::Overflow)?;
                out[i + j] = out[i + j].checked_add(&prod).ok_or(PolyError::Overflow)?;
            }
        }
        Ok(Poly::new(out))
    }

    pub fn checked_pow(&self, mut e: u32) -> Result<Self, PolyError> {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &C) -> Result<Self, PolyError> {
        self.coeffs
            .iter()
            .map(|a| a.checked_mul(c).ok_or(PolyError::Overflow))
            .collect::<Result<Vec<_>, _>>()
            .map(Poly::new)
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation at `q = x`.
    pub fn eval(&self, x: &C) -> Result<C, PolyError> {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .ok_or(PolyError::Overflow)?;
        }
        Ok(acc)
    }

    /// Long division over the integers. Fails with
    /// [`PolyError::InexactDivision`] when a quotient coefficient is not an
    /// integer.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Poly::zero(), self.clone()));
        };
        let mut quot = vec![C::zero(); top - dd + 1];
        for shift in (0..=top - dd).rev() {
            let c = &rem[shift + dd];
            if c.is_zero() {
                continue;
            }
            let (qc, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let prod = qc.checked_mul(dc).ok_or(PolyError::Overflow)?;
                rem[shift + i] = rem[shift + i]
                    .checked_sub(&prod)
                    .ok_or(PolyError::Overflow)?;
            }
            quot[shift] = qc;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::InexactDivision)
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<C: Coeff> Ring for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(other)
    }
    fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_sub(other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_mul(other)
    }
}

// Operator forms panic on overflow; use the checked methods where the
// coefficients are not known to be small.
macro_rules! forward_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<C: Coeff> $tr<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &Poly<C>) -> Poly<C> {
                self.$checked(rhs).expect("polynomial coefficient overflow")
            }
        }
        impl<C: Coeff> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}
