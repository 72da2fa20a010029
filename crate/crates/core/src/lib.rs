//! Exact crossing and nesting statistics on pattern-avoiding permutations,
//! their q-distributions and generating functions, and an exhaustive
//! verification suite for the identities relating them.

pub mod bijection;
pub mod dist;
pub mod error;
pub mod gf;
pub mod pattern;
pub mod perm;
pub mod poly;
pub mod verify;

pub use error::{Error, PolyError, Result};
pub use pattern::{ClassSpec, Constraint, Enumerator, Strategy};
pub use perm::{Permutation, StatBundle, Statistic, Symmetry};
pub use poly::{BiPoly, Coeff, Poly, Ring, ZSeries};

/// Polynomial in `q` with `i64` coefficients.
pub type QPoly = Poly<i64>;
/// Polynomial in `y` and `q` with `i64` coefficients.
pub type YQPoly = BiPoly<i64>;
/// Truncated series in `z` over [`QPoly`].
pub type QSeries = ZSeries<QPoly>;
/// Truncated series in `z` over [`YQPoly`].
pub type YQSeries = ZSeries<YQPoly>;
/// Polynomial in `q` with arbitrary-precision coefficients.
pub type BigQPoly = Poly<num_bigint::BigInt>;
