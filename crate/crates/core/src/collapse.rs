//! Classical radiative collapse of a circular orbit.
//!
//! An orbiting electron is accelerated, so classically it radiates at the
//! Larmor rate. Treating the orbit as slowly shrinking through circular
//! states, `dE/dt = −P` with `E(r) = −Ze²/(8πε₀r)` gives
//!
//! ```text
//! dr/dt = −Z e⁴ / (12π²ε₀²mₑ²c³r²)
//! ```
//!
//! which integrates in closed form to
//! `t = (r0³ − r_stop³)·4π²ε₀²mₑ²c³ / (Z e⁴)`. [`simulate_collapse`] integrates
//! the ODE numerically and reports its distance from that closed form.
//!
//! By default the run stops at the radius where the orbital speed would
//! reach `c` ([`min_radius_bound`]), which keeps the whole trajectory
//! non-relativistic. Pushing `r_stop` lower is allowed but the tail of the
//! trajectory then has `v > c`.

use std::f64::consts::PI;

use crate::bohr::{check_z, coulomb_coupling, min_radius_bound, orbital_velocity};
use crate::units::{dim, ConstantsSet, Quantity};
use crate::{Error, Result};

/// One point on an inspiral trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t_seconds: f64,
    pub r_meters: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollapseConfig {
    pub z: u32,
    pub r0: Quantity,
    pub r_stop: Quantity,
    pub max_steps: usize,
    pub rel_tol: f64,
}

impl CollapseConfig {
    pub const DEFAULT_MAX_STEPS: usize = 100_000;
    pub const DEFAULT_REL_TOL: f64 = 1e-6;

    /// Start at `r0`, stop at the light-speed radius for `z`.
    pub fn new(z: u32, r0: Quantity, k: &ConstantsSet) -> Result<Self> {
        let cfg = CollapseConfig {
            z,
            r0,
            r_stop: min_radius_bound(z, k)?,
            max_steps: Self::DEFAULT_MAX_STEPS,
            rel_tol: Self::DEFAULT_REL_TOL,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_r_stop(mut self, r_stop: Quantity) -> Result<Self> {
        self.r_stop = r_stop;
        self.validate()?;
        Ok(self)
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Result<Self> {
        self.rel_tol = rel_tol;
        self.validate()?;
        Ok(self)
    }

    pub fn with_max_steps(mut self, max_steps: usize) -> Result<Self> {
        self.max_steps = max_steps;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        check_z(self.z)?;
        let r_stop = self.r_stop.require_positive(dim::LENGTH, "r_stop")?;
        let r0 = self.r0.expect(dim::LENGTH)?;
        if r0.value() <= r_stop.value() {
            return Err(Error::domain(format!(
                "r0 ({:e} m) must be greater than r_stop ({:e} m)",
                r0.value(),
                r_stop.value()
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-2) {
            return Err(Error::domain(format!(
                "rel_tol must be in (0, 1e-2], got {}",
                self.rel_tol
            )));
        }
        if self.max_steps == 0 {
            return Err(Error::domain("max_steps must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CollapseResult {
    pub collapse_time: Quantity,
    pub samples: Vec<Sample>,
    pub closed_form_time: Quantity,
    pub ode_vs_closed_form_residual: f64,
    /// Accepted integration steps.
    pub steps: usize,
}

/// P = e²a² / (6πε₀c³)
pub fn larmor_power(a: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    let a = a.expect(dim::ACCELERATION)?;
    if a.value() < 0.0 {
        return Err(Error::domain(format!(
            "acceleration magnitude must be >= 0, got {:e}",
            a.value()
        )));
    }
    k.e()
        .powi(2)?
        .mul(a.powi(2)?)?
        .div(k.eps0().scale(6.0 * PI)?.mul(k.c().powi(3)?)?)?
        .expect(dim::POWER)
}

/// Centripetal acceleration supplied by the nucleus, Ze²/(4πε₀mₑr²).
pub fn coulomb_acceleration(z: u32, r: Quantity, k: &ConstantsSet) -> Result<Quantity> {
    let r = r.require_positive(dim::LENGTH, "orbit radius")?;
    coulomb_coupling(z, k)?
        .div(k.m_e().mul(r.powi(2)?)?)?
        .expect(dim::ACCELERATION)
}

/// Z e⁴ / (12π²ε₀²mₑ²c³), so that dr/dt = −rate / r². Units m³/s.
fn inspiral_rate(z: u32, k: &ConstantsSet) -> Result<Quantity> {
    let z = check_z(z)?;
    k.e()
        .powi(4)?
        .scale(z)?
        .div(
            k.eps0()
                .powi(2)?
                .mul(k.m_e().powi(2)?)?
                .mul(k.c().powi(3)?)?
                .scale(12.0 * PI * PI)?,
        )?
        .expect(dim::VELOCITY * dim::AREA)
}

/// Radial velocity of the adiabatic inspiral; always negative.
pub fn drdt(r: Quantity, z: u32, k: &ConstantsSet) -> Result<Quantity> {
    let r = r.require_positive(dim::LENGTH, "orbit radius")?;
    Ok(inspiral_rate(z, k)?.div(r.powi(2)?)?.neg())
}

pub fn closed_form_collapse_time(cfg: &CollapseConfig, k: &ConstantsSet) -> Result<Quantity> {
    cfg.validate()?;
    let cube_gap = cfg.r0.powi(3)?.sub(cfg.r_stop.powi(3)?)?;
    cube_gap
        .div(inspiral_rate(cfg.z, k)?.scale(3.0)?)?
        .expect(dim::TIME)
}

// Dormand–Prince 5(4) tableau.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

struct Inspiral {
    rate: f64,
}

impl Inspiral {
    fn slope(&self, r: f64) -> Option<f64> {
        (r > 0.0 && r.is_finite()).then(|| -self.rate / (r * r))
    }

    /// One DP5(4) step from `r` over `h`: (5th-order r, error estimate).
    /// `None` when a stage leaves r > 0.
    fn step(&self, r: f64, h: f64) -> Option<(f64, f64)> {
        let mut k = [0.0f64; 7];
        k[0] = self.slope(r)?;
        for stage in 1..7 {
            let incr: f64 = A[stage - 1][..stage]
                .iter()
                .zip(&k[..stage])
                .map(|(a, ki)| a * ki)
                .sum();
            k[stage] = self.slope(r + h * incr)?;
        }
        let high: f64 = B5.iter().zip(&k).map(|(b, ki)| b * ki).sum();
        let low: f64 = B4.iter().zip(&k).map(|(b, ki)| b * ki).sum();
        let r_new = r + h * high;
        (r_new.is_finite() && r_new > 0.0).then_some((r_new, h * (high - low)))
    }
}

/// Integrate dr/dt from `r0` down to `r_stop` with adaptive steps.
pub fn simulate_collapse(cfg: &CollapseConfig, k: &ConstantsSet) -> Result<CollapseResult> {
    cfg.validate()?;
    let closed_form_time = closed_form_collapse_time(cfg, k)?;
    let ode = Inspiral {
        rate: inspiral_rate(cfg.z, k)?.value(),
    };
    let r_stop = cfg.r_stop.value();
    // per-step tolerance tighter than the requested global one
    let tol = 0.1 * cfg.rel_tol;

    let mut clock = Clock::default();
    let mut r = cfg.r0.value();
    let mut h = 1e-3 * r / ode.rate * r * r;
    let mut samples = vec![Sample {
        t_seconds: 0.0,
        r_meters: r,
    }];
    let mut accepted = 0usize;

    for _ in 0..cfg.max_steps {
        let Some((r_new, err)) = ode.step(r, h) else {
            h *= 0.25;
            continue;
        };
        let scaled = err.abs() / (tol * r_new.max(r_stop));
        let factor = if scaled == 0.0 {
            5.0
        } else {
            (0.9 * scaled.powf(-0.2)).clamp(0.2, 5.0)
        };
        if scaled > 1.0 || r_new >= r {
            h *= factor.min(0.9);
            continue;
        }
        accepted += 1;
        if r_new <= r_stop {
            clock.advance(step_to_radius(&ode, r, h, r_stop));
            record(&mut samples, clock.now(), r_stop);
            let t = clock.now();
            let residual = (t - closed_form_time.value()).abs() / closed_form_time.value();
            return Ok(CollapseResult {
                collapse_time: Quantity::seconds(t)?,
                samples,
                closed_form_time,
                ode_vs_closed_form_residual: residual,
                steps: accepted,
            });
        }
        clock.advance(h);
        r = r_new;
        record(&mut samples, clock.now(), r);
        h *= factor;
    }

    Err(Error::Convergence {
        steps: cfg.max_steps,
        last_r: r,
        partial: samples,
    })
}

/// Elapsed time with compensated summation; late steps are many orders of
/// magnitude shorter than the elapsed total.
#[derive(Default)]
struct Clock {
    sum: f64,
    carry: f64,
}

impl Clock {
    fn advance(&mut self, dt: f64) {
        let y = dt - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn now(&self) -> f64 {
        self.sum
    }
}

/// Append a sample, or overwrite the last one when the step was shorter
/// than the resolution of `t`, keeping `t` strictly increasing.
fn record(samples: &mut Vec<Sample>, t: f64, r: f64) {
    match samples.last_mut() {
        Some(last) if last.t_seconds >= t => last.r_meters = r,
        _ => samples.push(Sample {
            t_seconds: t,
            r_meters: r,
        }),
    }
}

/// Step length in (0, h] whose DP5 step from `r` lands on `target`, by
/// bisection. The step over `h` is known to reach or pass `target`.
fn step_to_radius(ode: &Inspiral, r: f64, h: f64, target: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, h);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match ode.step(r, mid) {
            Some((r_mid, _)) if r_mid > target => lo = mid,
            _ => hi = mid,
        }
    }
    // lo may still be 0 only if target is within rounding of r
    if lo > 0.0 {
        lo
    } else {
        hi
    }
}

/// Orbital speed at each sample radius, for the v < c sanity check.
pub fn sample_speeds(z: u32, samples: &[Sample], k: &ConstantsSet) -> Result<Vec<Quantity>> {
    samples
        .iter()
        .map(|s| orbital_velocity(z, Quantity::meters(s.r_meters)?, k))
        .collect()
}
