use dirac5::coulomb::{
    angular_reduction_check, binding_energy_ev, quantisation_residual, solve_radial, sommerfeld_energy,
    CoulombField, CoulombParams, CoulombPotential, ALPHA, ELECTRON_MASS_EV,
};
use dirac5::wave::dirac5_potential_residual;
use dirac5::{Error, FiveVector, GammaChoice};

const LAMBDAS: [f64; 3] = [0.001, ALPHA, 0.3];

fn grid() -> impl Iterator<Item = (i32, u32, f64)> {
    (-3..=3)
        .filter(|k| *k != 0)
        .flat_map(|k| (0..=3).flat_map(move |xi| LAMBDAS.into_iter().map(move |l| (k, xi, l))))
}

/// Independent closed form written from `(ε/m)² = 1 / (1 + (λ/(n − δ))²)`
/// with `δ = |κ| − √(κ² − λ²)`.
fn oracle(kappa: i32, xi: u32, lambda: f64) -> f64 {
    let k = kappa.abs() as f64;
    let delta = k - (k * k - lambda * lambda).sqrt();
    let n_eff = xi as f64 + k - delta;
    let ratio = lambda / n_eff;
    1.0 / (1.0 + ratio * ratio).sqrt()
}

#[test]
fn closed_form_matches_oracle() {
    for (kappa, xi, lambda) in grid() {
        let p = CoulombParams::new(1.0, lambda, kappa, xi, GammaChoice::E12).unwrap();
        let eps = sommerfeld_energy(&p).unwrap();
        assert!((eps - oracle(kappa, xi, lambda)).abs() < 1e-15);
        assert!(quantisation_residual(&p, eps).abs() < 1e-9);
    }
}

#[test]
fn series_spectrum_on_grid_with_e12() {
    for (kappa, xi, lambda) in grid() {
        let p = CoulombParams::new(1.0, lambda, kappa, xi, GammaChoice::E12).unwrap();
        let series = solve_radial(&p).unwrap_or_else(|e| panic!("κ={kappa} ξ={xi} λ={lambda}: {e}"));
        let exact = oracle(kappa, xi, lambda);
        let rel = ((series.epsilon - exact) / exact).abs();
        assert!(rel < 1e-9, "κ={kappa} ξ={xi} λ={lambda}: rel {rel:e}");
        assert!(quantisation_residual(&p, series.epsilon).abs() < 1e-9);
    }
}

#[test]
fn gamma_choices_agree_where_series_exists() {
    for (kappa, xi, lambda) in grid() {
        let p12 = CoulombParams::new(1.0, lambda, kappa, xi, GammaChoice::E12).unwrap();
        let p0e = CoulombParams { gamma: GammaChoice::E0E, ..p12 };
        let r0e = solve_radial(&p0e);
        if kappa > 0 && xi == 0 {
            assert!(matches!(r0e, Err(Error::NoBoundState(_))), "κ={kappa} λ={lambda}");
            continue;
        }
        let a = solve_radial(&p12).unwrap().epsilon;
        let b = r0e.unwrap().epsilon;
        assert!(((a - b) / a).abs() < 1e-9, "κ={kappa} ξ={xi} λ={lambda}");
    }
}

#[test]
fn hydrogen_levels_in_ev() {
    let level = |k, xi| binding_energy_ev(1, k, xi, ALPHA, ELECTRON_MASS_EV).unwrap();
    assert!((level(-1, 0) + 13.6059).abs() < 1e-3);
    assert!((level(-1, 1) + 3.402).abs() < 1e-3);
    assert!((level(1, 1) + 3.402).abs() < 1e-3);
    assert!((level(-2, 0) + 3.401).abs() < 1e-3);
    assert_eq!(level(-1, 1), level(1, 1));
    assert!(level(-2, 0) > level(1, 1));
}

#[test]
fn bound_state_field_solves_coupled_equation() {
    let lambda = 0.3;
    let samples = [
        FiveVector::new(0.3, 0.4, -0.7, 1.1, 0.2),
        FiveVector::new(-1.2, 0.05, 0.3, -0.2, 0.0),
        FiveVector::new(2.0, 1.5, 0.9, 0.4, -0.4),
    ];
    for gamma in [GammaChoice::E12, GammaChoice::E0E] {
        for (kappa, xi) in [(-1, 0), (-1, 1), (1, 1), (-1, 2), (1, 2)] {
            let p = CoulombParams::new(1.0, lambda, kappa, xi, gamma).unwrap();
            let series = solve_radial(&p).unwrap();
            let field = CoulombField::new(&p, &series).unwrap();
            let potential = CoulombPotential { lambda };
            for x in &samples {
                let r = dirac5_potential_residual(&field, 1.0, 1.0, &potential, &gamma.as_multivector(), x)
                    .unwrap();
                let scale = dirac5::Field5::value(&field, x).norm_inf();
                assert!(r.norm_inf() < 1e-8 * scale.max(1.0), "{gamma:?} κ={kappa} ξ={xi}: {:e}", r.norm_inf());
            }
        }
    }
}

#[test]
fn bound_state_field_is_angular_eigenfunction() {
    for kappa in [-1, 1] {
        let p = CoulombParams::new(1.0, 0.2, kappa, 1, GammaChoice::E12).unwrap();
        let field = CoulombField::new(&p, &solve_radial(&p).unwrap()).unwrap();
        let x = FiveVector::new(0.4, 0.3, -0.6, 0.8, 0.0);
        let r = angular_reduction_check(kappa, &field, &x);
        assert!(r.norm_inf() < 1e-12, "κ={kappa}: {:e}", r.norm_inf());
    }
}
