use std::fmt;
use std::str::FromStr;

use super::constants::ConstantsSet;
use super::dim::{self, Dimension};
use super::quantity::Quantity;
use crate::{Error, Result};

/// Named units, used only when reading or reporting values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Meter,
    Nanometer,
    Second,
    Kilogram,
    Hertz,
    MeterPerSecond,
    Joule,
    /// One electron-volt is `e` joules, taken from the active constants set.
    ElectronVolt,
    JouleSecond,
    Watt,
    Coulomb,
}

impl Unit {
    pub fn symbol(self) -> &'static str {
        match self {
            Unit::Meter => "m",
            Unit::Nanometer => "nm",
            Unit::Second => "s",
            Unit::Kilogram => "kg",
            Unit::Hertz => "Hz",
            Unit::MeterPerSecond => "m/s",
            Unit::Joule => "J",
            Unit::ElectronVolt => "eV",
            Unit::JouleSecond => "J s",
            Unit::Watt => "W",
            Unit::Coulomb => "C",
        }
    }

    pub fn dimension(self) -> Dimension {
        match self {
            Unit::Meter | Unit::Nanometer => dim::LENGTH,
            Unit::Second => dim::TIME,
            Unit::Kilogram => dim::MASS,
            Unit::Hertz => dim::FREQUENCY,
            Unit::MeterPerSecond => dim::VELOCITY,
            Unit::Joule | Unit::ElectronVolt => dim::ENERGY,
            Unit::JouleSecond => dim::ACTION,
            Unit::Watt => dim::POWER,
            Unit::Coulomb => dim::CHARGE,
        }
    }

    /// Size of one of this unit in SI.
    pub fn si_scale(self, k: &ConstantsSet) -> f64 {
        match self {
            Unit::Nanometer => 1e-9,
            Unit::ElectronVolt => k.e().value(),
            _ => 1.0,
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Unit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unit = match s {
            "m" => Unit::Meter,
            "nm" => Unit::Nanometer,
            "s" => Unit::Second,
            "kg" => Unit::Kilogram,
            "Hz" => Unit::Hertz,
            "m/s" => Unit::MeterPerSecond,
            "J" => Unit::Joule,
            "eV" => Unit::ElectronVolt,
            "J s" | "J*s" => Unit::JouleSecond,
            "W" => Unit::Watt,
            "C" => Unit::Coulomb,
            other => return Err(Error::domain(format!("unknown unit '{other}'"))),
        };
        Ok(unit)
    }
}

/// Express `q` as a number of `unit`.
pub fn convert(q: Quantity, unit: Unit, k: &ConstantsSet) -> Result<f64> {
    if q.dim() != unit.dimension() {
        return Err(Error::Conversion {
            dim: q.dim(),
            unit: unit.symbol(),
        });
    }
    Ok(q.value() / unit.si_scale(k))
}

/// Read a number given in `unit` into an SI quantity.
pub fn from_unit(value: f64, unit: Unit, k: &ConstantsSet) -> Result<Quantity> {
    Quantity::new(value * unit.si_scale(k), unit.dimension())
}
