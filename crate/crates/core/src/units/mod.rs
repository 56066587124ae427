//! Dimension-checked scalars, named I/O units and the constants registry.

mod constants;
pub mod dim;
mod quantity;
mod unit;

pub use constants::{ConstantsSet, Provenance};
pub use dim::Dimension;
pub use quantity::Quantity;
pub use unit::{convert, from_unit, Unit};
