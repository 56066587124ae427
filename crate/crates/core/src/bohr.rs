//! Circular electron orbits around a fixed nucleus of charge `Z e`.
//!
//! Classical force balance `Z e²/(4πε₀r²) = mₑv²/r` ties speed to radius.
//! Quantizing the angular momentum, `L = nħ`, picks out a discrete ladder
//! of those orbits. The nucleus is infinitely heavy and masses are
//! non-relativistic throughout; `v = c` only enters as a kinematic bound on
//! the radius.
//!
//! The energy functions without a `_z` suffix are the hydrogen (`Z = 1`)
//! forms; the `_z` variants multiply `e²` by `Z`.

use std::f64::consts::PI;

use crate::derivation::orbital_frequency;
use crate::units::{dim, ConstantsSet, Quantity};
use crate::{Error, Result};

/// One circular orbit, classical (`n == None`) or Bohr-quantized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitState {
    pub z: u32,
    pub n: Option<u32>,
    pub radius: Quantity,
    pub speed: Quantity,
    pub frequency: Quantity,
    pub kinetic_energy: Quantity,
    pub potential_energy: Quantity,
    pub total_energy: Quantity,
    pub angular_momentum: Quantity,
    /// Angle between position and momentum; π/2 on a circle.
    pub theta: f64,
}

impl OrbitState {
    /// Coulomb attraction on the electron.
    pub fn coulomb_force(&self, k: &ConstantsSet) -> Result<Quantity> {
        coulomb_coupling(self.z, k)?
            .div(self.radius.powi(2)?)?
            .expect(dim::FORCE)
    }

    /// Force needed to hold the electron on this circle, mₑv²/r.
    pub fn centripetal_force(&self, k: &ConstantsSet) -> Result<Quantity> {
        k.m_e()
            .mul(self.speed.powi(2)?)?
            .div(self.radius)?
            .expect(dim::FORCE)
    }

    /// |F − F_c| / F, zero for an orbit in force balance.
    pub fn force_balance_residual(&self, k: &ConstantsSet) -> Result<f64> {
        let f = self.coulomb_force(k)?;
        let fc = self.centripetal_force(k)?;
        Ok((f.value() - fc.value()).abs() / f.value())
    }
}

pub(crate) fn check_z(z: u32) -> Result<f64> {
    if z == 0 {
        Err(Error::domain("proton count Z must be >= 1"))
    } else {
        Ok(z as f64)
    }
}

pub(crate) fn check_n(n: u32) -> Result<f64> {
    if n == 0 {
        Err(Error::domain("quantum number n must be >= 1"))
    } else {
        Ok(n as f64)
    }
}

/// Z e² / (4πε₀), in J·m.
pub(crate) fn coulomb_coupling(z: u32, k: &ConstantsSet) -> Result<Quantity> {
    let z = check_z(z)?;
    k.e()
        .powi(2)?
        .scale(z)?
        .div(k.eps0().scale(4.0 * PI)?)?
        .expect(dim::ENERGY * dim::LENGTH)
}

/// Speed on a circular orbit of radius `r`: v = √(e²Z / (4πε₀mₑr)).
pub fn orbital_velocity(z: u32, r: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    let r = r.require_positive(dim::LENGTH, "orbit radius")?;
    coulomb_coupling(z, k)?
        .div(k.m_e().mul(r)?)?
        .sqrt()?
        .expect(dim::VELOCITY)
}

/// Radius at which the orbital speed is `v`: r = e²Z / (4πε₀mₑv²).
pub fn radius_from_velocity(z: u32, v: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    let v = v.require_positive(dim::VELOCITY, "orbital speed")?;
    coulomb_coupling(z, k)?
        .div(k.m_e().mul(v.powi(2)?)?)?
        .expect(dim::LENGTH)
}

/// Radius of the orbit whose speed would equal `c`. A massive electron
/// must move slower, so every orbit lies strictly outside this radius.
pub fn min_radius_bound(z: u32, k: &ConstantsSet) -> Result<Quantity> {
    radius_from_velocity(z, k.c(), k)
}

/// Z e² / (4πε₀r), the magnitude of the Coulomb energy at `r`.
fn coulomb_energy(z: u32, r: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    let r = r.require_positive(dim::LENGTH, "orbit radius")?;
    coulomb_coupling(z, k)?.div(r)?.expect(dim::ENERGY)
}

pub fn kinetic_energy_z(z: u32, r: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    coulomb_energy(z, r, k)?.scale(0.5)
}

pub fn potential_energy_z(z: u32, r: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    Ok(coulomb_energy(z, r, k)?.neg())
}

pub fn total_energy_z(z: u32, r: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    Ok(coulomb_energy(z, r, k)?.scale(0.5)?.neg())
}

/// E_k = e² / (8πε₀r)
pub fn kinetic_energy(r: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    kinetic_energy_z(1, r, k)
}

/// E_p = −e² / (4πε₀r), zero at infinite separation.
pub fn potential_energy(r: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    potential_energy_z(1, r, k)
}

/// E = −e² / (8πε₀r) = E_k + E_p
pub fn total_energy(r: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    total_energy_z(1, r, k)
}

/// L = mₑ v r for a circular orbit (momentum perpendicular to radius).
pub fn angular_momentum(r: Quantity, v: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    let r = r.require_positive(dim::LENGTH, "orbit radius")?;
    let v = v.require_positive(dim::VELOCITY, "orbital speed")?;
    k.m_e().mul(v)?.mul(r)?.expect(dim::ANGULAR_MOMENTUM)
}

fn orbit_at(z: u32, n: Option<u32>, r: Quantity, v: Quantity, k: &ConstantsSet) -> Result<OrbitState> {
    Ok(OrbitState {
        z,
        n,
        radius: r,
        speed: v,
        frequency: orbital_frequency(r, v)?,
        kinetic_energy: kinetic_energy_z(z, r, k)?,
        potential_energy: potential_energy_z(z, r, k)?,
        total_energy: total_energy_z(z, r, k)?,
        angular_momentum: angular_momentum(r, v, k)?,
        theta: PI / 2.0,
    })
}

/// The force-balanced circular orbit of radius `r`, with no quantization.
pub fn classical_orbit(z: u32, r: Quantity, k: &ConstantsSet) -> Result<OrbitState> {
    let v = orbital_velocity(z, r, k)?;
    orbit_at(z, None, r, v, k)
}

/// r_n = 4πε₀ħ²n² / (mₑe²Z)
pub fn bohr_radius(z: u32, n: u32, k: &ConstantsSet) -> Result<Quantity> {
    let n = check_n(n)?;
    let z = check_z(z)?;
    k.eps0()
        .scale(4.0 * PI * n * n)?
        .mul(k.hbar().powi(2)?)?
        .div(k.m_e().mul(k.e().powi(2)?)?.scale(z)?)?
        .expect(dim::LENGTH)
}

/// v_n = e²Z / (4πε₀ħn)
pub fn bohr_speed(z: u32, n: u32, k: &ConstantsSet) -> Result<Quantity> {
    let n = check_n(n)?;
    let z = check_z(z)?;
    k.e()
        .powi(2)?
        .scale(z)?
        .div(k.eps0().scale(4.0 * PI * n)?.mul(k.hbar())?)?
        .expect(dim::VELOCITY)
}

/// E_n = −mₑe⁴Z² / (8ε₀²h²n²)
pub fn level_energy(z: u32, n: u32, k: &ConstantsSet) -> Result<Quantity> {
    let n = check_n(n)?;
    let z = check_z(z)?;
    Ok(k.rydberg_energy().scale(z * z / (n * n))?.neg())
}

/// The n-th Bohr orbit: force balance together with L = nħ.
pub fn quantized_orbit(z: u32, n: u32, k: &ConstantsSet) -> Result<OrbitState> {
    let r = bohr_radius(z, n, k)?;
    let v = bohr_speed(z, n, k)?;
    orbit_at(z, Some(n), r, v, k)
}
