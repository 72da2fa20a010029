//! Exact polynomial and truncated power-series arithmetic over the integers.
//!
//! [`Poly`] is dense in `q`, [`BiPoly`] is sparse in `(y, q)`, and
//! [`ZSeries`] is a power series in `z` truncated at a fixed order whose
//! coefficients live in any [`Ring`]. All three are generic over the
//! integer coefficient type; overflow is reported, never wrapped.

mod coeff;
mod dense;
mod series;
mod sparse;
mod text;

use std::fmt::Debug;

use num_bigint::BigInt;

pub use coeff::Coeff;
pub use dense::Poly;
pub use series::{cfrac_expand, rational_expand, ZSeries};
pub use sparse::BiPoly;

use crate::error::PolyError;

/// Commutative ring with checked operations, the coefficient domain of
/// [`ZSeries`].
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn try_add(&self, other: &Self) -> Result<Self, PolyError>;
    fn try_sub(&self, other: &Self) -> Result<Self, PolyError>;
    fn try_mul(&self, other: &Self) -> Result<Self, PolyError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

macro_rules! scalar_ring {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn zero() -> Self {
                num_traits::Zero::zero()
            }
            fn one() -> Self {
                num_traits::One::one()
            }
            fn is_zero(&self) -> bool {
                num_traits::Zero::is_zero(self)
            }
            fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
                num_traits::CheckedAdd::checked_add(self, other).ok_or(PolyError::Overflow)
            }
            fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
                num_traits::CheckedSub::checked_sub(self, other).ok_or(PolyError::Overflow)
            }
            fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
                num_traits::CheckedMul::checked_mul(self, other).ok_or(PolyError::Overflow)
            }
        }
    )*};
}

scalar_ring!(i32, i64, i128, BigInt);
