use dirac5::algebra::cl32;
use dirac5::beyond::{e012, ScalarPotentialDemo};
use dirac5::coulomb::{s_op, sommerfeld_energy, CoulombParams};
use dirac5::field::{ConstantField, SampledField};
use dirac5::linalg::LinearOperator16;
use dirac5::spinor::{minus_part, plus_part};
use dirac5::wave::{
    coupled_residuals, dirac5_residual, dirac_plane_wave_constraint, hestenes_dirac_residual, on_shell_momentum,
    projected_potential_residuals, solve_momentum_constraint, xi_fields, PlaneWave,
};
use dirac5::{Field5, FiveVector, GammaChoice, Multivector, Signature};
use proptest::prelude::*;

fn mv(c: [f64; 32]) -> Multivector {
    Multivector::from_coeffs(Signature::CL32, &c).unwrap()
}

fn even(c: [f64; 32]) -> Multivector {
    mv(c).even_part()
}

fn coeffs() -> impl Strategy<Value = [f64; 32]> {
    prop::array::uniform32(-1.0f64..1.0)
}

fn point() -> impl Strategy<Value = FiveVector> {
    prop::array::uniform5(-2.0f64..2.0).prop_map(FiveVector)
}

fn gamma() -> impl Strategy<Value = GammaChoice> {
    prop_oneof![Just(GammaChoice::E12), Just(GammaChoice::E0E)]
}

fn e34() -> Multivector {
    cl32::blade(&[3, 4])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn product_is_associative(a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (mv(a), mv(b), mv(c));
        prop_assert!(((a * b) * c - a * (b * c)).norm_inf() < 1e-12);
    }

    #[test]
    fn pseudoscalar_is_central(a in coeffs()) {
        let (a, e) = (mv(a), cl32::pseudoscalar());
        prop_assert!((a * e - e * a).norm_inf() < 1e-14);
    }

    #[test]
    fn vectors_anticommute_to_the_metric(u in prop::array::uniform5(-1.0f64..1.0), v in prop::array::uniform5(-1.0f64..1.0)) {
        let (a, b) = (FiveVector(u), FiveVector(v));
        let (am, bm) = (a.to_multivector(), b.to_multivector());
        let sym = am * bm + bm * am;
        prop_assert!((sym - cl32::one().scale(2.0 * a.dot(&b))).norm_inf() < 1e-14);
    }

    #[test]
    fn spacetime_generators_swap_halves(c in coeffs(), mu in 0usize..4) {
        let phi = even(c);
        let e = cl32::e(mu);
        prop_assert_eq!(plus_part(&(e * phi)), e * minus_part(&phi));
        prop_assert_eq!(minus_part(&(e * phi)), e * plus_part(&phi));
    }

    #[test]
    fn xi_halves_from_phi_halves(c in coeffs()) {
        let phi = even(c);
        let xi = phi * (cl32::one() - e34());
        let (p, m) = (plus_part(&phi), minus_part(&phi));
        prop_assert!((plus_part(&xi) - (p - m * e34())).norm_inf() < 1e-14);
        prop_assert!((minus_part(&xi) - (m - p * e34())).norm_inf() < 1e-14);
    }

    #[test]
    fn klein_gordon_from_twice_applied_operator(
        m in 0.2f64..3.0,
        k in prop::array::uniform3(-1.5f64..1.5),
        k4 in -0.3f64..0.3,
        g in gamma(),
        x in point(),
    ) {
        let k = on_shell_momentum(m, k, k4).unwrap();
        let basis = solve_momentum_constraint(&k, m, g).unwrap();
        prop_assert_eq!(basis.len(), 8);
        let pw = PlaneWave::new(*basis[0].as_multivector(), k, g);
        let twice = pw.derivative_wave().derivative_wave().field().value(&x);
        let phi = pw.field().value(&x);
        prop_assert!((twice - phi.scale(m * m)).norm_inf() < 1e-10);
        prop_assert!(dirac5_residual(&pw.field(), m, &x).norm_inf() < 1e-10);
    }

    #[test]
    fn coupled_pair_is_the_projected_residual(
        c in coeffs(),
        k in prop::array::uniform5(-1.0f64..1.0),
        m in 0.0f64..2.0,
        g in gamma(),
        x in point(),
    ) {
        let field = PlaneWave::new(even(c), FiveVector(k), g).field();
        let r = dirac5_residual(&field, m, &x);
        let [p, n] = coupled_residuals(&field, m, &x);
        prop_assert!((plus_part(&r) - p).norm_inf() < 1e-12);
        prop_assert!((minus_part(&r) - n).norm_inf() < 1e-12);
    }

    #[test]
    fn projected_residuals_are_hestenes_residuals_of_xi(
        c in coeffs(),
        k in prop::array::uniform4(-1.0f64..1.0),
        a in prop::array::uniform4(-1.0f64..1.0),
        m in 0.0f64..2.0,
        q in -1.0f64..1.0,
        g in gamma(),
        x in point(),
    ) {
        let k = FiveVector([k[0], k[1], k[2], k[3], 0.0]);
        let field = PlaneWave::new(even(c), k, g).field();
        let potential = ConstantField(FiveVector([a[0], a[1], a[2], a[3], 0.0]).to_multivector());
        let projected = projected_potential_residuals(&field, m, q, &potential, &g.as_multivector(), &x).unwrap();
        let (plus, minus) = xi_fields(field);
        let direct = [
            hestenes_dirac_residual(&plus, m, q, Some(&potential), &x).unwrap(),
            hestenes_dirac_residual(&minus, m, q, Some(&potential), &x).unwrap(),
        ];
        for (p, d) in projected.iter().zip(&direct) {
            prop_assert!((*p - *d).norm_inf() < 1e-12);
        }
    }

    #[test]
    fn both_gammas_give_ordinary_dirac_amplitudes(
        m in 0.2f64..3.0,
        k in prop::array::uniform3(-1.5f64..1.5),
        g in gamma(),
    ) {
        let k = on_shell_momentum(m, k, 0.0).unwrap();
        for phi in solve_momentum_constraint(&k, m, g).unwrap() {
            let xi = phi.as_multivector() * &(cl32::one() - e34());
            for psi in [plus_part(&xi), minus_part(&xi)] {
                prop_assert!(dirac_plane_wave_constraint(&psi, &k, m).norm_inf() < 1e-10);
            }
        }
    }

    #[test]
    fn radial_operator_is_rotation_invariant(
        kappa in prop_oneof![-4i32..=-1, 1i32..=4],
        lambda in 0.0f64..0.95,
        dir in prop::array::uniform3(-1.0f64..1.0),
        g in gamma(),
    ) {
        let r = (dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]).sqrt();
        prop_assume!(r > 1e-3);
        let e_r = FiveVector::new(0.0, dir[0] / r, dir[1] / r, dir[2] / r, 0.0).to_multivector();
        let s_axis = s_op(kappa, lambda, g, &cl32::e(3)).unwrap();
        let s_dir = s_op(kappa, lambda, g, &e_r).unwrap();
        let q2 = (kappa * kappa) as f64 - lambda * lambda;
        let one = LinearOperator16::identity();
        prop_assert!((&s_dir * &s_dir).max_abs_diff(&one.scale(q2)) < 1e-12);
        prop_assert!((s_axis.0.trace() - s_dir.0.trace()).abs() < 1e-12);
    }

    #[test]
    fn energy_depends_on_abs_kappa_only(kappa in 1i32..10, xi in 0u32..10, lambda in 1e-4f64..0.99) {
        let e = |k| sommerfeld_energy(&CoulombParams::new(1.0, lambda, k, xi, GammaChoice::E12).unwrap()).unwrap();
        prop_assert_eq!(e(kappa).to_bits(), e(-kappa).to_bits());
    }

    #[test]
    fn scalar_potential_round_trip(
        m in 0.2f64..3.0,
        s in 0.001f64..2.0,
        k in prop::array::uniform3(-1.0f64..1.0),
        x in point(),
    ) {
        let demo = ScalarPotentialDemo::new(m, s, k).unwrap();
        let [a, b] = demo.residuals(&x);
        let scale = 1.0 + demo.xi_plus().value(&x).norm_inf();
        prop_assert!(a.norm_inf() < 1e-9 * scale);
        prop_assert!(b.norm_inf() < 1e-9 * scale);
        let [upper, lower, parity] = demo.round_trip(&x).unwrap();
        prop_assert!(upper < 1e-9 * scale && lower < 1e-9 * scale);
        prop_assert_eq!(parity, 0.0);
    }

    #[test]
    fn sampled_round_trip_converges_quadratically(
        s in 0.05f64..1.0,
        k in prop::array::uniform3(-1.0f64..1.0),
        x in point(),
    ) {
        let demo = ScalarPotentialDemo::new(1.0, s, k).unwrap();
        let exact = demo.xi_minus().value(&x);
        let error = |h: f64| {
            let plus = SampledField::new(|y: &FiveVector| demo.xi_plus().value(y), h);
            let rebuilt = (cl32::e(4) * plus.partial_upper(4, &x)) * e012();
            (rebuilt - exact).norm_inf()
        };
        let (coarse, fine) = (error(1e-2), error(5e-3));
        prop_assert!(coarse < 1e-2 * 1e-2 * (1.0 + exact.norm_inf()) * 10.0);
        prop_assert!(fine < coarse / 3.0 || coarse < 1e-10);
    }
}

