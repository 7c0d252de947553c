//! Exact linear algebra over `Z` and `Z/m`, group rings and finite groups.

mod group;
mod group_ring;
pub mod howell;
pub mod matrix;

use core::fmt;

pub use group::{verify_group, FiniteGroup};
pub use group_ring::GroupRingElement;
pub use howell::{kernel_mod, HowellForm};
pub use matrix::{hermite_reduce, hermite_rows, smith_diagonal, smith_normal_form, IntegerMatrix, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("coefficient groups differ: {left} vs {right}")]
    CoefficientMismatch { left: Coefficients, right: Coefficients },
    #[error("cyclic coefficient modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("group table is not square or has out-of-range entries")]
    MalformedTable,
    #[error("not a group: {0}")]
    NotAGroup(&'static str),
}

/// A cyclic coefficient group `A = <t>`: either `Z` or `Z/m` with `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficients {
    Integers,
    Cyclic(u64),
}

impl Coefficients {
    pub fn cyclic(m: u64) -> Result<Self, AlgebraError> {
        if m < 2 {
            return Err(AlgebraError::BadModulus(m));
        }
        Ok(Self::Cyclic(m))
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Self::Integers => None,
            Self::Cyclic(m) => Some(m),
        }
    }

    /// Canonical representative: identity over `Z`, `rem_euclid` over `Z/m`.
    #[inline]
    pub fn reduce(self, x: i64) -> i64 {
        match self {
            Self::Integers => x,
            Self::Cyclic(m) => x.rem_euclid(m as i64),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integers => write!(f, "Z"),
            Self::Cyclic(m) => write!(f, "Z{m}"),
        }
    }
}
