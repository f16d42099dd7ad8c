use core::fmt;

use crate::loopgroup::Precision;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Valuation, degree or unit part requested for the zero polynomial.
    ZeroPolynomial,
    /// Series inversion of something that is not a unit of `Q[[t]]`.
    NotAUnit,
    /// Loop rotation by `0`.
    ZeroRotation,
    /// Torus element `diag(α, 1/α)` with `α = 0`.
    ZeroTorusParameter,
    /// The entries are not known to enough `t`-adic precision for the result.
    InsufficientPrecision { needed: i64, available: Precision },
    /// `ad - bc` differs from 1 below the order the entries determine.
    NotUnimodular,
    /// Bottom row vanishes identically.
    ZeroMatrix,
    InvalidLabelForLevel,
    /// The `ṡ₁` translation only permutes orbits at levels I1, I3 and I4Rot.
    InvolutionUndefinedAtLevel,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => f.write_str("operation undefined for the zero polynomial"),
            Error::NotAUnit => f.write_str("not a unit of the power series ring"),
            Error::ZeroRotation => f.write_str("loop rotation parameter must be nonzero"),
            Error::ZeroTorusParameter => f.write_str("torus parameter must be nonzero"),
            Error::InsufficientPrecision { needed, available } => write!(
                f,
                "insufficient precision: need entries modulo t^{needed}, have {available}"
            ),
            Error::NotUnimodular => f.write_str("determinant is not 1"),
            Error::ZeroMatrix => f.write_str("bottom row of the matrix is zero"),
            Error::InvalidLabelForLevel => f.write_str("label is not an orbit at this level"),
            Error::InvolutionUndefinedAtLevel => {
                f.write_str("involution on orbits is only defined at levels I1, I3 and I4Rot")
            }
        }
    }
}

impl core::error::Error for Error {}
