//! Univalence and schlicht-disk radii for bounded harmonic and biharmonic mappings of the unit disk.
//!
//! The crate is organised bottom-up:
//!
//! - [`maps`]: truncated power series, harmonic maps `h + conj(g)`, biharmonic
//!   maps `|z|^2 g + h`, their Wirtinger derivatives and distortion quantities.
//! - [`bounds`]: closed-form coefficient bounds and numerical Fourier extraction
//!   of harmonic coefficients for auditing those bounds.
//! - [`radii`]: univalence radius / schlicht-disk radius pairs for every theorem
//!   row, computed from two parameterised radius equations.
//! - [`verify`]: a corpus of extremal mappings plus grid injectivity, Jacobian
//!   and winding-number coverage scans.

// `!(x > 0.0)` guards are used on purpose: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod maps;
pub mod radii;
pub mod verify;

pub use error::{Error, Result};
pub use maps::{Analytic, AnalyticSeries, BiharmonicMap, DistortionTriple, HarmonicMap, PlanarMap};
pub use num_complex::Complex64;
