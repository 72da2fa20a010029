use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// Exact integer coefficient ring.
///
/// Fixed-width types report overflow through the `Checked*` operations;
/// [`BigInt`] never overflows.
pub trait Coeff:
    Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl Coeff for i32 {}
impl Coeff for i64 {}
impl Coeff for i128 {}
impl Coeff for BigInt {}
