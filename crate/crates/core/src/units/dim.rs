//! SI dimension vectors over length, mass, time and current.

use std::fmt;
use std::ops::{Div, Mul};

/// Exponents of the SI base dimensions a quantity carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Dimension {
    pub length: i8,
    pub mass: i8,
    pub time: i8,
    pub current: i8,
}

impl Dimension {
    pub const fn new(length: i8, mass: i8, time: i8, current: i8) -> Self {
        Dimension {
            length,
            mass,
            time,
            current,
        }
    }

    pub fn powi(self, n: i8) -> Self {
        Dimension {
            length: self.length * n,
            mass: self.mass * n,
            time: self.time * n,
            current: self.current * n,
        }
    }

    /// Square root of the dimension, if every exponent is even.
    pub fn sqrt(self) -> Option<Self> {
        let all_even = [self.length, self.mass, self.time, self.current]
            .iter()
            .all(|e| e % 2 == 0);
        all_even.then(|| Dimension {
            length: self.length / 2,
            mass: self.mass / 2,
            time: self.time / 2,
            current: self.current / 2,
        })
    }

    pub fn is_dimensionless(self) -> bool {
        self == DIMENSIONLESS
    }
}

impl Mul for Dimension {
    type Output = Dimension;

    fn mul(self, rhs: Dimension) -> Dimension {
        Dimension {
            length: self.length + rhs.length,
            mass: self.mass + rhs.mass,
            time: self.time + rhs.time,
            current: self.current + rhs.current,
        }
    }
}

impl Div for Dimension {
    type Output = Dimension;

    fn div(self, rhs: Dimension) -> Dimension {
        Dimension {
            length: self.length - rhs.length,
            mass: self.mass - rhs.mass,
            time: self.time - rhs.time,
            current: self.current - rhs.current,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dimensionless() {
            return f.write_str("1");
        }
        let parts = [
            ("m", self.length),
            ("kg", self.mass),
            ("s", self.time),
            ("A", self.current),
        ];
        let mut first = true;
        for (symbol, exp) in parts.into_iter().filter(|(_, e)| *e != 0) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if exp == 1 {
                f.write_str(symbol)?;
            } else {
                write!(f, "{symbol}^{exp}")?;
            }
        }
        Ok(())
    }
}

pub const DIMENSIONLESS: Dimension = Dimension::new(0, 0, 0, 0);
pub const LENGTH: Dimension = Dimension::new(1, 0, 0, 0);
pub const MASS: Dimension = Dimension::new(0, 1, 0, 0);
pub const TIME: Dimension = Dimension::new(0, 0, 1, 0);
pub const CURRENT: Dimension = Dimension::new(0, 0, 0, 1);

pub const AREA: Dimension = Dimension::new(2, 0, 0, 0);
pub const FREQUENCY: Dimension = Dimension::new(0, 0, -1, 0);
pub const VELOCITY: Dimension = Dimension::new(1, 0, -1, 0);
pub const ACCELERATION: Dimension = Dimension::new(1, 0, -2, 0);
pub const FORCE: Dimension = Dimension::new(1, 1, -2, 0);
pub const ENERGY: Dimension = Dimension::new(2, 1, -2, 0);
pub const POWER: Dimension = Dimension::new(2, 1, -3, 0);
/// J·s, shared by Planck's constant and angular momentum.
pub const ACTION: Dimension = Dimension::new(2, 1, -1, 0);
pub const ANGULAR_MOMENTUM: Dimension = ACTION;
pub const CHARGE: Dimension = Dimension::new(0, 0, 1, 1);
/// F/m = A² s⁴ kg⁻¹ m⁻³
pub const PERMITTIVITY: Dimension = Dimension::new(-3, -1, 4, 2);
