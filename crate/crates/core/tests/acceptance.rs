//! Acceptance report: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dirac5::algebra::cl32;
use dirac5::beyond::{e012, source_current, ScalarPotentialDemo};
use dirac5::coulomb::{binding_energy_ev, solve_radial, sommerfeld_energy, CoulombParams, ALPHA, ELECTRON_MASS_EV};
use dirac5::field::{grid5, METRIC};
use dirac5::suite::{random_minus_field, random_multivector, random_plane_wave, DEMO_GRID_POINTS, DEMO_GRID_STEP};
use dirac5::wave::{gamma_classify, on_shell_momentum, solve_momentum_constraint, superposition_admissible, PlaneWave};
use dirac5::{BasisBlade, Field5, FiveVector, GammaChoice, Multivector, Signature};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_241_018;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn sample_points(rng: &mut ChaCha8Rng, n: usize) -> Vec<FiveVector> {
    (0..n)
        .map(|_| {
            let mut x = FiveVector([(); 5].map(|_| rng.random_range(-2.0..2.0)));
            x.0[4] = rng.random_range(-0.5..0.5);
            x
        })
        .collect()
}

/// `Σ_μ e^μ ∂_μ Ψ − mΨe0e1e2` over the four spacetime axes.
fn hestenes<F: Field5>(psi: &F, m: f64, x: &FiveVector) -> Multivector {
    let mut out = -(psi.value(x) * e012()).scale(m);
    for (mu, g) in METRIC.iter().enumerate().take(4) {
        out += (cl32::e(mu) * psi.partial(mu, x)).scale(*g);
    }
    out
}

/// `Ξ±` of a field, split by hand from `Φ(1 − e3e4)`.
struct Half<F> {
    inner: F,
    with_e4: bool,
}

impl<F: Field5> Half<F> {
    fn cut(&self, v: Multivector) -> Multivector {
        let xi = v * (cl32::one() - cl32::blade(&[3, 4]));
        xi.filter_blades(|b| b.contains(4) == self.with_e4)
    }
}

impl<F: Field5> Field5 for Half<F> {
    fn value(&self, x: &FiveVector) -> Multivector {
        self.cut(self.inner.value(x))
    }
    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        self.cut(self.inner.partial(axis, x))
    }
}

fn algebra_suite() -> Outcome {
    let start = Instant::now();
    let sig = Signature::CL32;
    let e = Multivector::pseudoscalar(sig);
    let one = Multivector::scalar(sig, 1.0);
    let mut worst = (e * e - one).norm_inf();
    for b in 0..32u8 {
        let blade = Multivector::basis(sig, BasisBlade(b), 1.0);
        worst = worst.max((e * blade - blade * e).norm_inf());
    }
    let g = [-1.0, 1.0, 1.0, 1.0, -1.0];
    for (a, ga) in g.iter().enumerate() {
        for b in 0..5 {
            let (ea, eb) = (cl32::e(a), cl32::e(b));
            let expected = if a == b { 2.0 * ga } else { 0.0 };
            worst = worst.max((ea * eb + eb * ea - Multivector::scalar(sig, expected)).norm_inf());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut assoc: f64 = 0.0;
    for _ in 0..1000 {
        let (a, b, c) = (
            random_multivector(&mut rng, sig),
            random_multivector(&mut rng, sig),
            random_multivector(&mut rng, sig),
        );
        assoc = assoc.max(((a * b) * c - a * (b * c)).norm_inf());
    }
    let elapsed = start.elapsed();
    outcome(
        worst == 0.0 && assoc < 1e-12 && elapsed < Duration::from_secs(1),
        format!("identities exact (max {worst:e}), associativity {assoc:.1e} over 1000 triples, {elapsed:.2?}"),
    )
}

fn reduction_theorem() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let points = sample_points(&mut rng, 5);
    let mut worst: f64 = 0.0;
    for gamma in [GammaChoice::E12, GammaChoice::E0E] {
        for _ in 0..100 {
            let (pw, m) = random_plane_wave(&mut rng, gamma).expect("on-shell wave");
            for with_e4 in [false, true] {
                let half = Half { inner: pw.field(), with_e4 };
                for x in &points {
                    worst = worst.max(hestenes(&half, m, x).norm_inf());
                }
            }
        }
    }
    outcome(worst < 1e-10, format!("max Hestenes residual of Ξ± {worst:.2e} over 2×100 waves (tol 1e-10)"))
}

fn dispersion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for gamma in [GammaChoice::E12, GammaChoice::E0E] {
        for _ in 0..100 {
            let m = rng.random_range(0.1..3.0);
            let spatial = [(); 3].map(|_| rng.random_range(-2.0..2.0));
            let k4 = rng.random_range(-0.5..0.5);
            let k = on_shell_momentum(m, spatial, k4).expect("radicand positive");
            let amp = solve_momentum_constraint(&k, m, gamma).expect("kernel");
            let pw = PlaneWave::new(*amp[0].as_multivector(), k, gamma);
            let kk = (0..5).map(|a| METRIC[a] * pw.k[a] * pw.k[a]).sum::<f64>();
            worst = worst.max((kk + m * m).abs());
            count += 1;
        }
    }
    outcome(worst < 1e-10, format!("max |k·k + m²| {worst:.2e} over {count} waves (tol 1e-10)"))
}

fn gamma_classification() -> Outcome {
    let classified = gamma_classify(&cl32::blade(&[1, 2])) == Ok(GammaChoice::E12)
        && gamma_classify(&(cl32::e(0) * cl32::pseudoscalar())) == Ok(GammaChoice::E0E);
    let quarter_rejected = !superposition_admissible(PI / 4.0);
    let mut sweep_ok = true;
    for i in -40..=40 {
        let theta = i as f64 * FRAC_PI_2 / 5.0;
        sweep_ok &= superposition_admissible(theta) == (i % 5 == 0);
    }
    outcome(
        classified && quarter_rejected && sweep_ok,
        format!("e1e2/e0E classified {classified}, θ=π/4 rejected {quarter_rejected}, θ sweep {sweep_ok}"),
    )
}

fn oracle_epsilon(kappa: i32, xi: u32, lambda: f64) -> f64 {
    let k = kappa.abs() as f64;
    let n_eff = xi as f64 + (k * k - lambda * lambda).sqrt();
    n_eff / (n_eff * n_eff + lambda * lambda).sqrt()
}

fn series_spectrum() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    let mut count = 0;
    for kappa in (-3..=3).filter(|k| *k != 0) {
        for xi in 0..=3 {
            for lambda in [0.001, ALPHA, 0.3] {
                let p = CoulombParams::new(1.0, lambda, kappa, xi, GammaChoice::E12).expect("valid");
                let closed = sommerfeld_energy(&p).expect("closed form");
                let exact = oracle_epsilon(kappa, xi, lambda);
                worst = worst.max(((closed - exact) / exact).abs());
                match solve_radial(&p) {
                    Ok(s) => worst = worst.max(((s.epsilon - closed) / closed).abs()),
                    Err(e) => failures.push(format!("κ={kappa} ξ={xi} λ={lambda}: {e}")),
                }
                count += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && worst < 1e-9 && elapsed < Duration::from_secs(30),
        format!(
            "{count} grid points (Γ = e1e2), max relative deviation {worst:.2e} (tol 1e-9), {elapsed:.2?}{}",
            if failures.is_empty() { String::new() } else { format!(", failed: {failures:?}") }
        ),
    )
}

fn hydrogen_table() -> Outcome {
    let level = |k, xi| binding_energy_ev(1, k, xi, 7.2973525693e-3, 510998.95).expect("level");
    let rows = [
        ("1s1/2", level(-1, 0), -13.6059),
        ("2s1/2", level(-1, 1), -3.402),
        ("2p1/2", level(1, 1), -3.402),
        ("2p3/2", level(-2, 0), -3.401),
    ];
    let ok = rows.iter().all(|(_, got, want)| (got - want).abs() <= 1e-3);
    let listing: Vec<String> = rows.iter().map(|(l, got, _)| format!("{l} {got:.4} eV")).collect();
    let printed_gap = level(-1, 0) + 13.06;
    outcome(
        ok && ALPHA == 7.2973525693e-3 && ELECTRON_MASS_EV == 510998.95,
        format!(
            "{} (±0.001 eV); printed ground state −13.06 eV is off by {printed_gap:.4} eV and not matched",
            listing.join(", ")
        ),
    )
}

fn exact_degeneracy() -> Outcome {
    let mut ok = true;
    for kappa in 1..=6 {
        for xi in 0..=6 {
            for lambda in [0.001, ALPHA, 0.3, 0.9] {
                let e = |k| sommerfeld_energy(&CoulombParams::new(1.0, lambda, k, xi, GammaChoice::E12).unwrap());
                ok &= e(kappa).unwrap().to_bits() == e(-kappa).unwrap().to_bits();
            }
        }
    }
    outcome(ok, "ε(κ,ξ) and ε(−κ,ξ) bitwise equal for |κ| ≤ 6, ξ ≤ 6, four λ")
}

fn scalar_demo() -> Outcome {
    let grid = grid5(FiveVector::new(0.1, 0.2, -0.1, 0.3, 0.05), 5, 0.1);
    let (mut gap, mut trip): (f64, f64) = (0.0, 0.0);
    for s in [0.01, 0.1, 1.0] {
        let demo = ScalarPotentialDemo::new(1.0, s, [0.3, -0.2, 0.1]).expect("demo");
        for x in &grid {
            let [a, b] = demo.residuals(x);
            gap = gap.max(a.norm_inf()).max(b.norm_inf()).max((a - b).norm_inf());
            let minus = demo.xi_minus();
            let plus = demo.xi_plus();
            // Ξ₋ = (1/m) e4 ∂⁴Ξ₊ e0e1e2 with m = 1.
            let rebuilt = (cl32::e(4) * plus.partial_upper(4, x)) * e012();
            trip = trip.max((rebuilt - minus.value(x)).norm_inf());
        }
    }
    outcome(
        gap < 1e-9 && trip < 1e-9,
        format!("max second-order/scalar-potential residual {gap:.2e}, Ξ₋ round trip {trip:.2e} (tol 1e-9)"),
    )
}

/// `Ξ₋ = Σ_B c_B sin(ω_B x⁴ + φ_B) e_B` over even `e4` blades, constant in spacetime.
#[derive(Clone)]
struct ConstantInSpacetime(Vec<(BasisBlade, f64, f64, f64)>);

impl Field5 for ConstantInSpacetime {
    fn value(&self, x: &FiveVector) -> Multivector {
        let mut out = Multivector::zero(Signature::CL32);
        for &(b, c, w, p) in &self.0 {
            out.set(b, c * (w * x[4] + p).sin());
        }
        out
    }
    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        let mut out = Multivector::zero(Signature::CL32);
        if axis == 4 {
            for &(b, c, w, p) in &self.0 {
                out.set(b, c * w * (w * x[4] + p).cos());
            }
        }
        out
    }
}

fn source_current_structure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let points = sample_points(&mut rng, 4);
    let mut stray: f64 = 0.0;
    for _ in 0..100 {
        let field = random_minus_field(&mut rng);
        for x in &points {
            let j = (cl32::e(4) * field.partial_upper(4, x)).scale(1.0 / (4.0 * PI));
            for (b, c) in j.terms() {
                if !matches!(b.grade(), 1 | 3) || b.contains(4) {
                    stray = stray.max(c.abs());
                }
            }
        }
        if source_current(&field, &points).is_err() {
            stray = f64::INFINITY;
        }
    }
    let e4_even: Vec<BasisBlade> =
        Signature::CL32.even_blades().into_iter().filter(|b| b.contains(4)).collect();
    let field = ConstantInSpacetime(
        e4_even
            .into_iter()
            .map(|b| (b, rng.random_range(-1.0..1.0), rng.random_range(0.5..2.0), rng.random_range(0.0..6.0)))
            .collect(),
    );
    let h = DEMO_GRID_STEP;
    let n = DEMO_GRID_POINTS;
    let center = FiveVector::new(0.1, 0.2, -0.1, 0.3, 0.05);
    let grid = grid5(center, n, h);
    let current = source_current(&field, &grid).expect("grades");
    let stride = |a: usize| n.pow(4 - a as u32);
    let mut div: f64 = 0.0;
    for (flat, _) in grid.iter().enumerate() {
        let idx: [usize; 5] = std::array::from_fn(|a| (flat / stride(a)) % n);
        if idx.iter().any(|&i| i == 0 || i == n - 1) {
            continue;
        }
        let mut d = 0.0;
        for mu in 0..4 {
            let blade = BasisBlade::generator(mu);
            let (up, down) = (flat + stride(mu), flat - stride(mu));
            d += (current.values[up].get(blade) - current.values[down].get(blade)) / (2.0 * h);
        }
        div = div.max(d.abs());
    }
    outcome(
        stray == 0.0 && div <= h * h,
        format!("max stray coefficient {stray:e} over 100 fields, grid divergence {div:.2e} (tol h² = {:.1e})", h * h),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("algebra suite", algebra_suite),
        ("reduction to two Hestenes–Dirac copies", reduction_theorem),
        ("Klein–Gordon dispersion", dispersion),
        ("Γ classification", gamma_classification),
        ("series spectrum vs closed form", series_spectrum),
        ("hydrogen table", hydrogen_table),
        ("κ ↔ −κ degeneracy", exact_degeneracy),
        ("induced scalar potential", scalar_demo),
        ("source current", source_current_structure),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.ok {
            failed += 1;
        }
        println!("{} criterion {}: {name}: {}", if o.ok { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
