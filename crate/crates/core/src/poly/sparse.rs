use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use super::{Coeff, Poly, Ring};
use crate::error::PolyError;

/// Sparse bivariate polynomial in `y` and `q`, keyed by the exponent pair
/// `(e_y, e_q)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly<C> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Coeff> BiPoly<C> {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BiPoly::monomial(C::one(), 0, 0)
    }

    /// `c · y^ey · q^eq`
    pub fn monomial(c: C, ey: u32, eq: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((ey, eq), c);
        }
        BiPoly { terms }
    }

    pub fn y() -> Self {
        BiPoly::monomial(C::one(), 1, 0)
    }

    pub fn q() -> Self {
        BiPoly::monomial(C::one(), 0, 1)
    }

    /// Sums the given terms; repeated exponent pairs accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Result<Self, PolyError> {
        let mut out = BiPoly::zero();
        for (ey, eq, c) in terms {
            out.add_term(ey, eq, &c)?;
        }
        Ok(out)
    }

    /// Small integer terms; panics if a coefficient does not fit `C`.
    pub fn from_i64_terms(terms: &[(u32, u32, i64)]) -> Self {
        BiPoly::from_terms(
            terms
                .iter()
                .map(|&(a, b, c)| (a, b, C::from_i64(c).expect("coefficient fits"))),
        )
        .expect("small coefficients")
    }

    /// Lifts a polynomial in `q`.
    pub fn from_q(p: &Poly<C>) -> Self {
        BiPoly {
            terms: p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| ((0, d as u32), c.clone()))
                .collect(),
        }
    }

    /// Lifts a polynomial in `y` (read from a `Poly` whose variable is `y`).
    pub fn from_y(p: &Poly<C>) -> Self {
        BiPoly {
            terms: p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| ((d as u32, 0), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, ey: u32, eq: u32, c: &C) -> Result<(), PolyError> {
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry((ey, eq)).or_insert_with(C::zero);
        *slot = slot.checked_add(c).ok_or(PolyError::Overflow)?;
        if slot.is_zero() {
            self.terms.remove(&(ey, eq));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, ey: u32, eq: u32) -> C {
        self.terms.get(&(ey, eq)).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending `(e_y, e_q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &C)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, &-c.clone())?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = BiPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                let prod = c1.checked_mul(c2).ok_or(PolyError::Overflow)?;
                out.add_term(a1 + a2, b1 + b2, &prod)?;
            }
        }
        Ok(out)
    }

    pub fn eval(&self, y: &C, q: &C) -> Result<C, PolyError> {
        let mut acc = C::zero();
        for (&(a, b), c) in &self.terms {
            let t = pow(y, a)?
                .checked_mul(&pow(q, b)?)
                .and_then(|m| m.checked_mul(c))
                .ok_or(PolyError::Overflow)?;
            acc = acc.checked_add(&t).ok_or(PolyError::Overflow)?;
        }
        Ok(acc)
    }

    /// Substitutes `y = v`, leaving a polynomial in `q`.
    pub fn at_y(&self, v: &C) -> Result<Poly<C>, PolyError> {
        let mut out = Poly::zero();
        for (&(a, b), c) in &self.terms {
            let t = pow(v, a)?.checked_mul(c).ok_or(PolyError::Overflow)?;
            out = out.checked_add(&Poly::monomial(t, b as usize))?;
        }
        Ok(out)
    }

    /// Substitutes `q = v`, leaving a polynomial in `y` (as a `Poly`).
    pub fn at_q(&self, v: &C) -> Result<Poly<C>, PolyError> {
        let mut out = Poly::zero();
        for (&(a, b), c) in &self.terms {
            let t = pow(v, b)?.checked_mul(c).ok_or(PolyError::Overflow)?;
            out = out.checked_add(&Poly::monomial(t, a as usize))?;
        }
        Ok(out)
    }
}

fn pow<C: Coeff>(x: &C, e: u32) -> Result<C, PolyError> {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc.checked_mul(x).ok_or(PolyError::Overflow)?;
    }
    Ok(acc)
}

impl<C: Coeff> Default for BiPoly<C> {
    fn default() -> Self {
        BiPoly::zero()
    }
}

impl<C: Coeff> Ring for BiPoly<C> {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
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

macro_rules! forward_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<C: Coeff> $tr<&BiPoly<C>> for &BiPoly<C> {
            type Output = BiPoly<C>;
            fn $m(self, rhs: &BiPoly<C>) -> BiPoly<C> {
                self.$checked(rhs).expect("polynomial coefficient overflow")
            }
        }
        impl<C: Coeff> $tr for BiPoly<C> {
            type Output = BiPoly<C>;
            fn $m(self, rhs: BiPoly<C>) -> BiPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
