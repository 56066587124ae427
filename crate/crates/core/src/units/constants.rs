use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::dim;
use super::quantity::Quantity;
use crate::{Error, Result};

/// Where a constants set comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Provenance {
    /// Four-significant-figure values as printed alongside the planetary
    /// model, used to reproduce its arithmetic.
    Paper,
    /// Exact SI-defined and CODATA 2018 values.
    #[default]
    Full,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Paper => "paper",
            Provenance::Full => "full",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Provenance::Paper),
            "full" => Ok(Provenance::Full),
            other => Err(Error::domain(format!(
                "unknown constants set '{other}' (expected paper|full)"
            ))),
        }
    }
}

/// Fundamental constants, stored in SI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantsSet {
    elementary_charge: f64,
    electron_mass: f64,
    vacuum_permittivity: f64,
    planck: f64,
    speed_of_light: f64,
    provenance: Provenance,
}

/// Defined SI value; the printed planetary-model constants omit h.
const PLANCK_SI: f64 = 6.626_070_15e-34;

impl ConstantsSet {
    pub const PAPER: ConstantsSet = ConstantsSet {
        elementary_charge: 1.602e-19,
        electron_mass: 9.109e-31,
        vacuum_permittivity: 8.854e-12,
        planck: PLANCK_SI,
        speed_of_light: 3e8,
        provenance: Provenance::Paper,
    };

    pub const FULL: ConstantsSet = ConstantsSet {
        elementary_charge: 1.602_176_634e-19,
        electron_mass: 9.109_383_701_5e-31,
        vacuum_permittivity: 8.854_187_812_8e-12,
        planck: PLANCK_SI,
        speed_of_light: 2.997_924_58e8,
        provenance: Provenance::Full,
    };

    pub fn paper() -> Self {
        Self::PAPER
    }

    pub fn full() -> Self {
        Self::FULL
    }

    pub fn for_provenance(p: Provenance) -> Self {
        match p {
            Provenance::Paper => Self::PAPER,
            Provenance::Full => Self::FULL,
        }
    }

    /// Custom set; every value must be finite and strictly positive.
    pub fn new(
        e: Quantity,
        m_e: Quantity,
        eps0: Quantity,
        h: Quantity,
        c: Quantity,
        provenance: Provenance,
    ) -> Result<Self> {
        let e = e.require_positive(dim::CHARGE, "e")?;
        let m_e = m_e.require_positive(dim::MASS, "m_e")?;
        let eps0 = eps0.require_positive(dim::PERMITTIVITY, "eps0")?;
        let h = h.require_positive(dim::ACTION, "h")?;
        let c = c.require_positive(dim::VELOCITY, "c")?;
        Ok(ConstantsSet {
            elementary_charge: e.value(),
            electron_mass: m_e.value(),
            vacuum_permittivity: eps0.value(),
            planck: h.value(),
            speed_of_light: c.value(),
            provenance,
        })
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn e(&self) -> Quantity {
        Quantity::from_finite(self.elementary_charge, dim::CHARGE)
    }

    pub fn m_e(&self) -> Quantity {
        Quantity::from_finite(self.electron_mass, dim::MASS)
    }

    pub fn eps0(&self) -> Quantity {
        Quantity::from_finite(self.vacuum_permittivity, dim::PERMITTIVITY)
    }

    pub fn h(&self) -> Quantity {
        Quantity::from_finite(self.planck, dim::ACTION)
    }

    pub fn c(&self) -> Quantity {
        Quantity::from_finite(self.speed_of_light, dim::VELOCITY)
    }

    /// h / 2π
    pub fn hbar(&self) -> Quantity {
        Quantity::from_finite(self.planck / (2.0 * PI), dim::ACTION)
    }

    /// mₑe⁴ / (8ε₀²h²), the hydrogen ionization energy for a fixed nucleus.
    pub fn rydberg_energy(&self) -> Quantity {
        let e2 = self.elementary_charge * self.elementary_charge;
        let value = self.electron_mass * e2 * e2
            / (8.0 * self.vacuum_permittivity.powi(2) * self.planck.powi(2));
        Quantity::from_finite(value, dim::ENERGY)
    }

    /// Base constants as (symbol, quantity, unit symbol), in display order.
    pub fn base_entries(&self) -> [(&'static str, Quantity, &'static str); 5] {
        [
            ("e", self.e(), "C"),
            ("m_e", self.m_e(), "kg"),
            ("eps0", self.eps0(), "F/m"),
            ("h", self.h(), "J s"),
            ("c", self.c(), "m/s"),
        ]
    }

    /// Derived constants as (symbol, quantity, unit symbol).
    pub fn derived_entries(&self) -> [(&'static str, Quantity, &'static str); 2] {
        [
            ("hbar", self.hbar(), "J s"),
            ("rydberg_energy", self.rydberg_energy(), "J"),
        ]
    }
}

impl Default for ConstantsSet {
    fn default() -> Self {
        Self::FULL
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_full() {
        assert_eq!(ConstantsSet::default().provenance(), Provenance::Full);
    }

    #[test]
    fn paper_values_as_printed() {
        let k = ConstantsSet::paper();
        assert_eq!(k.e().value(), 1.602e-19);
        assert_eq!(k.m_e().value(), 9.109e-31);
        assert_eq!(k.eps0().value(), 8.854e-12);
        assert_eq!(k.c().value(), 3e8);
        assert_eq!(k.h().value(), 6.62607015e-34);
        assert_eq!(k.e().dim(), dim::CHARGE);
    }

    #[test]
    fn all_values_positive() {
        for k in [ConstantsSet::paper(), ConstantsSet::full()] {
            for (_, q, _) in k.base_entries().iter().chain(k.derived_entries().iter()) {
                assert!(q.value() > 0.0);
            }
        }
    }

    #[test]
    fn derived_accessors() {
        let k = ConstantsSet::full();
        assert!((k.hbar().value() - 1.054571817e-34).abs() < 1e-43);
        // 13.605693 eV, independent mpmath evaluation
        let ry_ev = k.rydberg_energy().value() / k.e().value();
        assert!((ry_ev - 13.605693122).abs() < 1e-8, "{ry_ev}");
        assert_eq!(k.rydberg_energy().dim(), dim::ENERGY);
    }

    #[test]
    fn custom_set_validation() {
        let k = ConstantsSet::full();
        let ok = ConstantsSet::new(k.e(), k.m_e(), k.eps0(), k.h(), k.c(), Provenance::Full);
        assert_eq!(ok.unwrap(), k);
        let negative_mass = k.m_e().neg();
        assert!(ConstantsSet::new(k.e(), negative_mass, k.eps0(), k.h(), k.c(), Provenance::Full)
            .is_err());
        // charge in the wrong slot
        assert!(ConstantsSet::new(k.m_e(), k.m_e(), k.eps0(), k.h(), k.c(), Provenance::Full)
            .is_err());
    }

    #[test]
    fn provenance_parse() {
        assert_eq!("paper".parse::<Provenance>().unwrap(), Provenance::Paper);
        assert_eq!("full".parse::<Provenance>().unwrap(), Provenance::Full);
        assert!("codata".parse::<Provenance>().is_err());
    }
}
