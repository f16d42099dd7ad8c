//! Exact computations in the affine flag variety of `SL₂`.
//!
//! * [`laurent`]: Laurent polynomials over `Q` with valuation, unit parts and
//!   truncated series inversion.
//! * [`loopgroup`]: 2×2 matrices over those polynomials, known modulo a power
//!   of `t`, and the Iwahori chain `I ⊃ I1 ⊃ I2 ⊃ I3 ⊃ I4`.
//! * [`flagpoint`]: normal forms `[n, p]` and `[n, p]'` of cosets `gI`, left
//!   translation, loop rotation and the `ṡ₁` involution.
//! * [`orbits`]: orbit labels along the chain, the classifier, distinguished
//!   points, dimensions and samplers.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use iwahori_core::{act, classify, FlagPoint, GroupElement, LaurentPoly, Level};
//!
//! let x = FlagPoint::straight(2, LaurentPoly::t_pow(-2) + LaurentPoly::t_pow(-1));
//! assert_eq!(classify(&x, Level::I4Rot).to_string(), "E_2:open,open");
//!
//! let g = GroupElement::lower(LaurentPoly::t_pow(1));
//! let y = act(&g, &FlagPoint::straight(-1, LaurentPoly::zero())).unwrap();
//! assert_eq!(y.to_string(), "[0, -t^-1]'");
//! ```
#![no_std]

extern crate alloc;

pub mod coeff;
pub mod error;
pub mod flagpoint;
pub mod laurent;
pub mod loopgroup;
pub mod orbits;

pub use coeff::Coeff;
pub use error::Error;
pub use flagpoint::{act, normal_form, FlagPoint, PointKind};
pub use laurent::LaurentPoly;
pub use loopgroup::{EntryShape, GroupElement, Precision, Special, SubgroupId};
pub use orbits::{
    base_cell, classify, classify_fine_i4, dimension, distinguished_point, enumerate_labels,
    involution_label, reduce_to_base, sample_point, sample_point_with, Family, I4FineLabel, Level,
    OrbitLabel, Tag,
};
