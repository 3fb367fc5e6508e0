//! Exact rational arithmetic and dense polynomial algebra.
//!
//! Everything downstream computes on these types; nothing in the crate
//! touches floating point.

mod bipoly;
mod interp;
mod poly;

pub use bipoly::{integrate_zero_to, BiPoly};
pub use interp::interpolate_even;
pub use poly::{Poly, Var};

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactAlgError {
    /// Two operands carry different variable tags.
    VariableMismatch { left: Var, right: Var },
    /// Two interpolation nodes share the same absolute abscissa.
    DuplicateAbscissa,
    /// The interpolation system is singular.
    InconsistentSystem,
    /// No interpolation nodes supplied.
    NoNodes,
}

impl fmt::Display for ExactAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactAlgError::VariableMismatch { left, right } => {
                write!(f, "variable mismatch: {left} vs {right}")
            }
            ExactAlgError::DuplicateAbscissa => f.write_str("duplicate |abscissa| in interpolation nodes"),
            ExactAlgError::InconsistentSystem => f.write_str("interpolation system is singular"),
            ExactAlgError::NoNodes => f.write_str("no interpolation nodes"),
        }
    }
}

impl core::error::Error for ExactAlgError {}
