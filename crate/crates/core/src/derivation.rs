//! Angular-momentum quantization from Planck's energy quantization.
//!
//! On the system side the orbital energy is written as a function of the
//! orbital frequency `f` (via `v = 2πrf`):
//!
//! ```text
//! |E| = mₑv²/2 = 2π²mₑr²f²      dE/df = 4π²mₑr²f = 2πmₑvr = 2πL
//! ```
//!
//! On the radiation side Planck gives `E = nhν`, so `dE/dν = nh`. Identifying
//! the radiation frequency with the orbital one (`ν = f`, the correspondence
//! principle) and equating the two derivatives yields `2πL = nh`, that is
//! `L = nh/2π = nħ`, Bohr's postulate. Planck's integer `n` is identified
//! with the orbital quantum number without further argument.
//!
//! The derivative is partial: `r` is held fixed while `f` varies. Moving
//! along the family of force-balanced orbits instead (where `r` shrinks as
//! `f` grows) gives a different derivative and is not what is computed here.
//!
//! The more common textbook route, equating the orbit energy to half that of
//! a Planck oscillator, is not implemented.
//!
//! Note that at the n-th orbit `h·f = 2|Eₙ|`: only the derivatives agree,
//! not the energies themselves.

use std::f64::consts::PI;

use crate::bohr::{check_n, quantized_orbit};
use crate::units::{dim, ConstantsSet, Quantity};
use crate::{Error, Result};

/// Relative step used by [`run_derivation_check`] callers by default.
pub const DEFAULT_STEP: f64 = 1e-5;

/// Analytic and numeric dE/df at one Bohr orbit, beside the Planck side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeCheck {
    pub n: u32,
    pub frequency: Quantity,
    pub dedf_system_analytic: Quantity,
    pub dedf_system_numeric: Quantity,
    /// n·h
    pub dedf_planck: Quantity,
    pub angular_momentum: Quantity,
    /// |numeric − analytic| / analytic
    pub residual_numeric: f64,
    /// |2πL − nh| / nh
    pub residual_quantization: f64,
}

/// E = −mₑv²/2, the signed (bound-state) total energy of a circular orbit.
pub fn total_energy_from_speed(v: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    let v = v.expect(dim::VELOCITY)?;
    if v.value() < 0.0 || v.value() >= k.c().value() {
        return Err(Error::domain(format!(
            "orbital speed must satisfy 0 <= v < c, got {:e} m/s",
            v.value()
        )));
    }
    Ok(k.m_e().mul(v.powi(2)?)?.scale(0.5)?.neg())
}

/// mₑv²/2: the magnitude of [`total_energy_from_speed`], the sign
/// convention the frequency-form energy works in.
pub fn energy_magnitude_from_speed(v: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    Ok(total_energy_from_speed(v, k)?.abs())
}

/// f = v / (2πr)
pub fn orbital_frequency(r: Quantity, v: Quantity) -> Result<Quantity> {
    let r = r.require_positive(dim::LENGTH, "orbit radius")?;
    let v = v.require_positive(dim::VELOCITY, "orbital speed")?;
    v.div(r.scale(2.0 * PI)?)?.expect(dim::FREQUENCY)
}

/// |E| = 2π²mₑr²f²
pub fn energy_in_frequency_form(r: Quantity, f: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    let r = r.require_positive(dim::LENGTH, "orbit radius")?;
    let f = f.require_positive(dim::FREQUENCY, "orbital frequency")?;
    k.m_e()
        .mul(r.powi(2)?)?
        .mul(f.powi(2)?)?
        .scale(2.0 * PI * PI)?
        .expect(dim::ENERGY)
}

/// System-side ∂E/∂f at fixed radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemDerivative {
    /// 4π²mₑr²f
    pub value: Quantity,
    /// L = mₑ(2πrf)r, so that `value == 2π·L`.
    pub angular_momentum: Quantity,
    /// ∂²E/∂f² = 4π²mₑr²
    pub second_derivative: Quantity,
}

impl SystemDerivative {
    /// The stationary point of E in f is a minimum.
    pub fn is_minimum(&self) -> bool {
        self.second_derivative.value() > 0.0
    }
}

pub fn dedf_system(r: Quantity, f: Quantity, k: &ConstantsSet) -> Result<SystemDerivative> {
    let r = r.require_positive(dim::LENGTH, "orbit radius")?;
    let f = f.require_positive(dim::FREQUENCY, "orbital frequency")?;
    let v = r.mul(f)?.scale(2.0 * PI)?;
    let angular_momentum = k.m_e().mul(v)?.mul(r)?.expect(dim::ANGULAR_MOMENTUM)?;
    let value = angular_momentum.scale(2.0 * PI)?.expect(dim::ACTION)?;
    let second_derivative = k
        .m_e()
        .mul(r.powi(2)?)?
        .scale(4.0 * PI * PI)?
        .expect(dim::ACTION / dim::FREQUENCY)?;
    Ok(SystemDerivative {
        value,
        angular_momentum,
        second_derivative,
    })
}

/// Orbit energy as a function of orbital frequency, for numerical
/// differentiation.
pub trait OrbitFamily {
    fn energy(&self, f: Quantity) -> Result<Quantity>;
}

/// Fixed radius, energy `2π²mₑr²f²` as `f` varies.
#[derive(Debug, Clone, Copy)]
pub struct FixedRadius<'a> {
    pub radius: Quantity,
    pub constants: &'a ConstantsSet,
}

impl OrbitFamily for FixedRadius<'_> {
    fn energy(&self, f: Quantity) -> Result<Quantity> {
        energy_in_frequency_form(self.radius, f, self.constants)
    }
}

/// Central difference `[E(f(1+s)) − E(f(1−s))] / (2fs)`.
pub fn dedf_system_numeric<F: OrbitFamily + ?Sized>(
    family: &F,
    f: Quantity,
    step: f64,
) -> Result<Quantity> {
    let f = f.require_positive(dim::FREQUENCY, "orbital frequency")?;
    if !(step > 0.0 && step < 0.1) {
        return Err(Error::domain(format!(
            "relative step must be in (0, 0.1), got {step}"
        )));
    }
    let upper = family.energy(f.scale(1.0 + step)?)?;
    let lower = family.energy(f.scale(1.0 - step)?)?;
    upper.sub(lower)?.div(f.scale(2.0 * step)?)
}

/// E = nhν
pub fn planck_energy(n: u32, nu: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    let n = check_n(n)?;
    let nu = nu.expect(dim::FREQUENCY)?;
    if nu.value() < 0.0 {
        return Err(Error::domain(format!(
            "radiation frequency must be >= 0, got {:e}",
            nu.value()
        )));
    }
    k.h().scale(n)?.mul(nu)?.expect(dim::ENERGY)
}

/// dE/dν = nh
pub fn dednu_planck(n: u32, k: &ConstantsSet) -> Result<Quantity> {
    let n = check_n(n)?;
    k.h().scale(n)?.expect(dim::ACTION)
}

/// L = nh/2π, from `dE/df|system = 2πL` equated to `dE/dν|Planck = nh`
/// with ν = f. Identical to Bohr's `nħ`.
pub fn derive_quantized_l(n: u32, k: &ConstantsSet) -> Result<Quantity> {
    // under ν = f the Planck derivative in ν is also the derivative in f
    let planck_side = dednu_planck(n, k)?;
    planck_side.scale(1.0 / (2.0 * PI))?.expect(dim::ANGULAR_MOMENTUM)
}

/// Build the n-th hydrogen orbit and compare both sides of the derivation.
pub fn run_derivation_check(n: u32, step: f64, k: &ConstantsSet) -> Result<DerivativeCheck> {
    let orbit = quantized_orbit(1, n, k)?;
    let analytic = dedf_system(orbit.radius, orbit.frequency, k)?;
    let family = FixedRadius {
        radius: orbit.radius,
        constants: k,
    };
    let numeric = dedf_system_numeric(&family, orbit.frequency, step)?;
    let planck = dednu_planck(n, k)?;

    let residual_numeric =
        (numeric.value() - analytic.value.value()).abs() / analytic.value.value();
    let two_pi_l = analytic.angular_momentum.scale(2.0 * PI)?;
    let residual_quantization = (two_pi_l.value() - planck.value()).abs() / planck.value();

    Ok(DerivativeCheck {
        n,
        frequency: orbit.frequency,
        dedf_system_analytic: analytic.value,
        dedf_system_numeric: numeric,
        dedf_planck: planck,
        angular_momentum: analytic.angular_momentum,
        residual_numeric,
        residual_quantization,
    })
}
