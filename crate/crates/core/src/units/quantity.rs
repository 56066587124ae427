use std::cmp::Ordering;
use std::fmt;

use super::dim::{self, Dimension};
use crate::{Error, Result};

/// A finite SI value tagged with its dimension.
///
/// Every arithmetic operation re-checks finiteness, so an overflow or a
/// division by zero becomes [`Error::NonFinite`] at the point it happens.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    value: f64,
    dim: Dimension,
}

impl Quantity {
    pub fn new(value: f64, dim: Dimension) -> Result<Self> {
        if value.is_finite() {
            Ok(Quantity { value, dim })
        } else {
            Err(Error::NonFinite { value, dim })
        }
    }

    /// Caller guarantees `value` is finite.
    pub(crate) const fn from_finite(value: f64, dim: Dimension) -> Self {
        Quantity { value, dim }
    }

    pub fn dimensionless(value: f64) -> Result<Self> {
        Self::new(value, dim::DIMENSIONLESS)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn mul(self, rhs: Quantity) -> Result<Quantity> {
        Quantity::new(self.value * rhs.value, self.dim * rhs.dim)
    }

    pub fn div(self, rhs: Quantity) -> Result<Quantity> {
        Quantity::new(self.value / rhs.value, self.dim / rhs.dim)
    }

    pub fn add(self, rhs: Quantity) -> Result<Quantity> {
        self.same_dim(&rhs, "add")?;
        Quantity::new(self.value + rhs.value, self.dim)
    }

    pub fn sub(self, rhs: Quantity) -> Result<Quantity> {
        self.same_dim(&rhs, "sub")?;
        Quantity::new(self.value - rhs.value, self.dim)
    }

    pub fn powi(self, n: i8) -> Result<Quantity> {
        Quantity::new(self.value.powi(n as i32), self.dim.powi(n))
    }

    pub fn sqrt(self) -> Result<Quantity> {
        let dim = self.dim.sqrt().ok_or(Error::DimensionMismatch {
            op: "sqrt",
            left: self.dim,
            right: dim::DIMENSIONLESS,
        })?;
        if self.value < 0.0 {
            return Err(Error::domain(format!(
                "square root of negative quantity {:e}",
                self.value
            )));
        }
        Quantity::new(self.value.sqrt(), dim)
    }

    /// Multiply by a pure number.
    pub fn scale(self, factor: f64) -> Result<Quantity> {
        Quantity::new(self.value * factor, self.dim)
    }

    pub fn neg(self) -> Quantity {
        Quantity::from_finite(-self.value, self.dim)
    }

    pub fn abs(self) -> Quantity {
        Quantity::from_finite(self.value.abs(), self.dim)
    }

    /// Ordering between two quantities of the same dimension.
    pub fn compare(&self, other: &Quantity) -> Result<Ordering> {
        self.same_dim(other, "compare")?;
        // both values are finite, so partial_cmp is total here
        Ok(self.value.total_cmp(&other.value))
    }

    /// Assert the dimension a formula is supposed to produce.
    pub fn expect(self, dim: Dimension) -> Result<Quantity> {
        if self.dim == dim {
            Ok(self)
        } else {
            Err(Error::DimensionMismatch {
                op: "expect",
                left: self.dim,
                right: dim,
            })
        }
    }

    /// Domain check used at the entry of physics operations: right
    /// dimension and strictly positive value.
    pub fn require_positive(self, dim: Dimension, name: &str) -> Result<Quantity> {
        let q = self.expect(dim)?;
        if q.value > 0.0 {
            Ok(q)
        } else {
            Err(Error::domain(format!("{name} must be > 0, got {:e}", q.value)))
        }
    }

    fn same_dim(&self, other: &Quantity, op: &'static str) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                op,
                left: self.dim,
                right: other.dim,
            })
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim.is_dimensionless() {
            write!(f, "{:e}", self.value)
        } else {
            write!(f, "{:e} {}", self.value, self.dim)
        }
    }
}

/// Shorthands for building SI quantities at the edges of the crate.
macro_rules! constructor {
    ($($name:ident => $dim:path),* $(,)?) => {
        impl Quantity {
            $(
                pub fn $name(value: f64) -> Result<Quantity> {
                    Quantity::new(value, $dim)
                }
            )*
        }
    };
}

constructor! {
    meters => dim::LENGTH,
    seconds => dim::TIME,
    kilograms => dim::MASS,
    joules => dim::ENERGY,
    hertz => dim::FREQUENCY,
    meters_per_second => dim::VELOCITY,
    meters_per_second_squared => dim::ACCELERATION,
    joule_seconds => dim::ACTION,
    coulombs => dim::CHARGE,
    watts => dim::POWER,
}
