use std::path::PathBuf;

use bohr_core::collapse::{simulate_collapse, CollapseConfig};
use bohr_core::derivation::run_derivation_check;
use bohr_core::spectra::{series, series_limit, transition};
use bohr_core::units::convert;
use bohr_core::{bohr, Error, Quantity, Unit};
use clap::ValueEnum;

use crate::render::{format_sig, render, Cell, Layout, Report};
use crate::Options;

/// Acceptance thresholds for `verify` rows.
pub const QUANTIZATION_TOLERANCE: f64 = 1e-12;
pub const NUMERIC_TOLERANCE: f64 = 1e-6;

pub struct Outcome {
    pub stdout: String,
    /// Data was produced but a check failed (exit code 1).
    pub failed: bool,
}

pub struct CommandError {
    pub code: u8,
    pub message: String,
}

impl From<Error> for CommandError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Convergence { .. } => 1,
            _ => 2,
        };
        CommandError {
            code,
            message: err.to_string(),
        }
    }
}

type CmdResult = Result<Outcome, CommandError>;

fn finish(report: &Report, opts: &Options, failed: bool) -> CmdResult {
    Ok(Outcome {
        stdout: render(report, opts.format, opts.precision),
        failed,
    })
}

fn tag(opts: &Options) -> &'static str {
    opts.constants.provenance().as_str()
}

pub fn constants(opts: &Options) -> CmdResult {
    let k = &opts.constants;
    let mut report = Report::new("constants", tag(opts), vec!["symbol", "value", "unit", "provenance"]);
    for (symbol, q, unit) in k.base_entries() {
        report.push_row(vec![symbol.into(), q.value().into(), unit.into(), tag(opts).into()]);
    }
    for (symbol, q, unit) in k.derived_entries() {
        report.push_row(vec![symbol.into(), q.value().into(), unit.into(), "derived".into()]);
    }
    finish(&report, opts, false)
}

pub fn orbit(z: u32, n: u32, opts: &Options) -> CmdResult {
    let k = &opts.constants;
    let o = bohr::quantized_orbit(z, n, k)?;
    let e_ev = convert(o.total_energy, Unit::ElectronVolt, k)?;
    let l_over_hbar = o.angular_momentum.div(k.hbar())?.value();

    let mut report = Report::new(
        "orbit",
        tag(opts),
        vec!["Z", "n", "r_m", "v_mps", "f_hz", "Ek_J", "Ep_J", "E_J", "E_eV", "L_Js"],
    );
    report.layout = Layout::Record;
    report.push_row(vec![
        z.into(),
        n.into(),
        o.radius.value().into(),
        o.speed.value().into(),
        o.frequency.value().into(),
        o.kinetic_energy.value().into(),
        o.potential_energy.value().into(),
        o.total_energy.value().into(),
        e_ev.into(),
        o.angular_momentum.value().into(),
    ]);
    report
        .notes
        .push(format!("L/hbar = {:.*}", opts.precision, l_over_hbar));
    finish(&report, opts, false)
}

pub fn verify(n_max: u32, step: f64, opts: &Options) -> CmdResult {
    let k = &opts.constants;
    let checks = (1..=n_max)
        .map(|n| run_derivation_check(n, step, k))
        .collect::<Result<Vec<_>, _>>()?;

    let mut report = Report::new(
        "verify",
        tag(opts),
        vec![
            "n",
            "f_hz",
            "dEdf_analytic_Js",
            "dEdf_numeric_Js",
            "dEdf_planck_Js",
            "L_Js",
            "residual_numeric",
            "residual_quantization",
        ],
    );
    report.meta.push(("step", step.into()));
    report.meta.push(("numeric_tolerance", NUMERIC_TOLERANCE.into()));
    report.meta.push(("quantization_tolerance", QUANTIZATION_TOLERANCE.into()));

    let mut failures = Vec::new();
    for c in &checks {
        if c.residual_quantization > QUANTIZATION_TOLERANCE || c.residual_numeric > NUMERIC_TOLERANCE {
            failures.push(c.n);
        }
        report.push_row(vec![
            c.n.into(),
            c.frequency.value().into(),
            c.dedf_system_analytic.value().into(),
            c.dedf_system_numeric.value().into(),
            c.dedf_planck.value().into(),
            c.angular_momentum.value().into(),
            c.residual_numeric.into(),
            c.residual_quantization.into(),
        ]);
    }
    report.notes.push(if failures.is_empty() {
        format!("all {n_max} rows satisfy 2*pi*L = n*h")
    } else {
        format!("FAILED rows: {failures:?}")
    });
    if !failures.is_empty() {
        eprintln!("error: verification failed for n = {failures:?}");
    }
    finish(&report, opts, !failures.is_empty())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LineUnit {
    #[value(name = "nm")]
    Nm,
    #[value(name = "m")]
    M,
    #[value(name = "eV")]
    Ev,
    #[value(name = "Hz")]
    Hz,
}

impl LineUnit {
    fn column(self) -> &'static str {
        match self {
            LineUnit::Nm => "value_nm",
            LineUnit::M => "value_m",
            LineUnit::Ev => "value_eV",
            LineUnit::Hz => "value_Hz",
        }
    }

    fn symbol(self) -> &'static str {
        &self.column()["value_".len()..]
    }

    fn limit_key(self) -> &'static str {
        match self {
            LineUnit::Nm => "series_limit_nm",
            LineUnit::M => "series_limit_m",
            LineUnit::Ev => "series_limit_eV",
            LineUnit::Hz => "series_limit_Hz",
        }
    }

    /// Pick the matching quantity of a line and express it in this unit.
    fn value(
        self,
        energy: Quantity,
        frequency: Quantity,
        wavelength: Quantity,
        k: &bohr_core::ConstantsSet,
    ) -> Result<f64, Error> {
        match self {
            LineUnit::Nm => convert(wavelength, Unit::Nanometer, k),
            LineUnit::M => convert(wavelength, Unit::Meter, k),
            LineUnit::Ev => convert(energy, Unit::ElectronVolt, k),
            LineUnit::Hz => convert(frequency, Unit::Hertz, k),
        }
    }
}

pub fn spectrum(
    z: u32,
    lower: u32,
    count: u32,
    upper: Option<u32>,
    unit: LineUnit,
    opts: &Options,
) -> CmdResult {
    let k = &opts.constants;
    let lines = match upper {
        Some(upper) => vec![transition(z, upper, lower, k)?],
        None => series(z, lower, count, k)?,
    };
    let limit = series_limit(z, lower, k)?;
    let limit_value = unit.value(limit.energy, limit.photon_frequency, limit.wavelength, k)?;

    let mut report = Report::new(
        "spectrum",
        tag(opts),
        vec!["n_upper", "n_lower", unit.column(), "E_J", "f_hz", "lambda_m"],
    );
    report.meta.push(("Z", z.into()));
    report.meta.push((unit.limit_key(), limit_value.into()));
    for line in &lines {
        let value = unit.value(line.delta_e, line.photon_frequency, line.wavelength, k)?;
        report.push_row(vec![
            line.n_upper.into(),
            line.n_lower.into(),
            value.into(),
            line.delta_e.value().into(),
            line.photon_frequency.value().into(),
            line.wavelength.value().into(),
        ]);
    }
    report.notes.push(format!(
        "series limit (inf -> {lower}): {} {}",
        format_sig(limit_value, opts.precision),
        unit.symbol()
    ));
    finish(&report, opts, false)
}

pub struct CollapseArgs {
    pub r0: f64,
    pub z: u32,
    pub r_stop: Option<f64>,
    pub tolerance: f64,
    pub max_steps: usize,
    pub trajectory: Option<PathBuf>,
}

pub fn collapse(args: CollapseArgs, opts: &Options) -> CmdResult {
    let k = &opts.constants;
    let mut cfg = CollapseConfig::new(args.z, Quantity::meters(args.r0)?, k)?;
    if let Some(r_stop) = args.r_stop {
        cfg = cfg.with_r_stop(Quantity::meters(r_stop)?)?;
    }
    let cfg = cfg
        .with_rel_tol(args.tolerance)?
        .with_max_steps(args.max_steps)?;
    let res = simulate_collapse(&cfg, k)?;

    if let Some(path) = &args.trajectory {
        write_trajectory(path, &res.samples).map_err(|e| CommandError {
            code: 1,
            message: format!("writing {}: {e}", path.display()),
        })?;
    }

    let mut report = Report::new(
        "collapse",
        tag(opts),
        vec![
            "Z",
            "r0_m",
            "r_stop_m",
            "collapse_time_s",
            "closed_form_time_s",
            "residual",
            "steps",
        ],
    );
    report.layout = Layout::Record;
    report.push_row(vec![
        args.z.into(),
        cfg.r0.value().into(),
        cfg.r_stop.value().into(),
        res.collapse_time.value().into(),
        res.closed_form_time.value().into(),
        res.ode_vs_closed_form_residual.into(),
        Cell::Int(res.steps as i64),
    ]);
    let under_a_second = res.collapse_time.value() < 1.0;
    report.notes.push(format!(
        "collapse in under one second: {}",
        if under_a_second { "yes" } else { "no" }
    ));
    finish(&report, opts, false)
}

fn write_trajectory(path: &PathBuf, samples: &[bohr_core::collapse::Sample]) -> Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)?;
    w.write_record(["t_seconds", "r_meters"])?;
    for s in samples {
        w.write_record([format!("{:e}", s.t_seconds), format!("{:e}", s.r_meters)])?;
    }
    w.flush()?;
    Ok(())
}
