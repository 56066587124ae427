use approx::assert_relative_eq;
use bohr_core::bohr::{min_radius_bound, quantized_orbit};
use bohr_core::collapse::{closed_form_collapse_time, sample_speeds, simulate_collapse, CollapseConfig};
use bohr_core::derivation::run_derivation_check;
use bohr_core::spectra::{series_limit, transition};
use bohr_core::units::convert;
use bohr_core::{dim, ConstantsSet, Error, Provenance, Quantity, Unit};

#[test]
fn paper_constants_ground_state() {
    let k = ConstantsSet::paper();
    let o = quantized_orbit(1, 1, &k).unwrap();
    // 4 pi eps0 hbar^2 / (m e^2) with the four-figure constants
    assert_relative_eq!(o.radius.value(), 5.29305e-11, max_relative = 1e-5);
    assert_eq!(k.provenance(), Provenance::Paper);
}

#[test]
fn line_energy_matches_level_difference() {
    let k = ConstantsSet::full();
    for (upper, lower) in [(2, 1), (3, 2), (7, 4)] {
        let line = transition(1, upper, lower, &k).unwrap();
        let hi = quantized_orbit(1, upper, &k).unwrap().total_energy;
        let lo = quantized_orbit(1, lower, &k).unwrap().total_energy;
        assert_relative_eq!(line.delta_e.value(), hi.sub(lo).unwrap().value(), max_relative = 1e-12);
        assert_eq!(line.photon_frequency.dim(), dim::FREQUENCY);
    }
    let lyman = series_limit(1, 1, &k).unwrap();
    assert_relative_eq!(convert(lyman.energy, Unit::ElectronVolt, &k).unwrap(), 13.605693, max_relative = 1e-6);
}

#[test]
fn derivation_holds_with_both_constant_sets() {
    for k in [ConstantsSet::paper(), ConstantsSet::full()] {
        for n in [1, 5, 20] {
            let c = run_derivation_check(n, 1e-5, &k).unwrap();
            assert!(c.residual_quantization <= 1e-12, "{n}");
            assert!(c.residual_numeric <= 1e-6, "{n}");
        }
    }
}

#[test]
fn collapse_from_bohr_orbit_stays_subluminal() {
    let k = ConstantsSet::full();
    let r1 = quantized_orbit(1, 1, &k).unwrap().radius;
    let cfg = CollapseConfig::new(1, r1, &k).unwrap();
    let res = simulate_collapse(&cfg, &k).unwrap();
    assert_relative_eq!(
        res.collapse_time.value(),
        closed_form_collapse_time(&cfg, &k).unwrap().value(),
        max_relative = 1e-3
    );
    assert_relative_eq!(res.collapse_time.value(), 1.5563e-11, max_relative = 1e-3);
    let speeds = sample_speeds(1, &res.samples, &k).unwrap();
    assert!(speeds.iter().all(|v| v.value() <= k.c().value()));
    assert_eq!(cfg.r_stop, min_radius_bound(1, &k).unwrap());
}

#[test]
fn errors_surface_through_public_api() {
    let k = ConstantsSet::full();
    assert!(matches!(quantized_orbit(1, 0, &k), Err(Error::Domain(_))));
    assert!(Quantity::meters(f64::NAN).is_err());
    let err = Quantity::meters(1.0).unwrap().add(Quantity::seconds(1.0).unwrap());
    assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    let budget = CollapseConfig::new(1, Quantity::meters(1e-10).unwrap(), &k)
        .unwrap()
        .with_max_steps(3)
        .unwrap();
    match simulate_collapse(&budget, &k) {
        Err(Error::Convergence { partial, .. }) => assert!(!partial.is_empty()),
        other => panic!("expected convergence error, got {other:?}"),
    }
}
