//! Emission lines between Bohr levels.
//!
//! Wavelengths are vacuum values for an infinitely heavy nucleus, so Hα
//! comes out near 656.1 nm rather than the tabulated 656.28 nm (air,
//! reduced mass). That gap is the model, not a bug.

use crate::bohr::{check_n, check_z, level_energy, quantized_orbit};
use crate::units::{dim, ConstantsSet, Quantity};
use crate::{Error, Result};

/// A line emitted when the electron drops from `n_upper` to `n_lower`.
/// Absorption is the same line read in reverse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionLine {
    pub z: u32,
    pub n_upper: u32,
    pub n_lower: u32,
    /// E(n_upper) − E(n_lower), positive.
    pub delta_e: Quantity,
    pub photon_frequency: Quantity,
    pub wavelength: Quantity,
}

/// Short-wavelength edge of a series (n_upper → ∞).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesLimit {
    pub z: u32,
    pub n_lower: u32,
    pub energy: Quantity,
    pub photon_frequency: Quantity,
    pub wavelength: Quantity,
}

fn photon(delta_e: Quantity, k: &ConstantsSet) -> Result<(Quantity, Quantity)> {
    let nu = delta_e.div(k.h())?.expect(dim::FREQUENCY)?;
    let lambda = k.c().div(nu)?.expect(dim::LENGTH)?;
    Ok((nu, lambda))
}

pub fn transition(z: u32, n_upper: u32, n_lower: u32, k: &ConstantsSet) -> Result<TransitionLine> {
    check_z(z)?;
    check_n(n_lower)?;
    if n_upper <= n_lower {
        return Err(Error::domain(format!(
            "transition needs n_upper > n_lower, got {n_upper} -> {n_lower}"
        )));
    }
    let delta_e = level_energy(z, n_upper, k)?
        .sub(level_energy(z, n_lower, k)?)?
        .expect(dim::ENERGY)?;
    let (photon_frequency, wavelength) = photon(delta_e, k)?;
    Ok(TransitionLine {
        z,
        n_upper,
        n_lower,
        delta_e,
        photon_frequency,
        wavelength,
    })
}

/// Lines `n_lower+1 → n_lower` up to `n_lower+count → n_lower`, by rising
/// n_upper. `n_lower = 2` is the Balmer series.
pub fn series(z: u32, n_lower: u32, count: u32, k: &ConstantsSet) -> Result<Vec<TransitionLine>> {
    if count == 0 {
        return Err(Error::domain("series count must be >= 1"));
    }
    (1..=count)
        .map(|i| {
            let upper = n_lower
                .checked_add(i)
                .ok_or_else(|| Error::domain("n_upper overflows"))?;
            transition(z, upper, n_lower, k)
        })
        .collect()
}

pub fn series_limit(z: u32, n_lower: u32, k: &ConstantsSet) -> Result<SeriesLimit> {
    let energy = level_energy(z, n_lower, k)?.neg();
    let (photon_frequency, wavelength) = photon(energy, k)?;
    Ok(SeriesLimit {
        z,
        n_lower,
        energy,
        photon_frequency,
        wavelength,
    })
}

/// Photon frequency of `n → n−1` over the orbital frequency at `n`.
///
/// A quantitative reading of the correspondence principle: the ratio
/// tends to 1 as `n` grows (it equals `n(2n−1) / (2(n−1)²)` and does not
/// depend on `Z`).
pub fn correspondence_ratio(z: u32, n: u32, k: &ConstantsSet) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!(
            "correspondence ratio needs n >= 2, got {n}"
        )));
    }
    let line = transition(z, n, n - 1, k)?;
    let orbit = quantized_orbit(z, n, k)?;
    let ratio = line.photon_frequency.div(orbit.frequency)?.expect(dim::DIMENSIONLESS)?;
    Ok(ratio.value())
}
