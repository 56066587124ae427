//! Semi-classical hydrogen atom with dimension-checked quantities.
//!
//! The crate covers the planetary model of the atom and its Bohr-quantized
//! orbits ([`bohr`]), the derivation of angular-momentum quantization from
//! Planck's energy quantization together with its numerical check
//! ([`derivation`]), the resulting emission spectra ([`spectra`]) and the
//! classical radiative inspiral that motivated quantization in the first
//! place ([`collapse`]).
//!
//! Every physical value is a [`Quantity`]: an SI value tagged with its
//! dimension. Formulas are evaluated through the dimension algebra, so a
//! wrong exponent surfaces as [`Error::DimensionMismatch`] rather than a
//! silently wrong number.

pub mod bohr;
pub mod collapse;
pub mod derivation;
mod error;
pub mod spectra;
pub mod units;

pub use error::{Error, Result};
pub use units::{dim, ConstantsSet, Dimension, Provenance, Quantity, Unit};
