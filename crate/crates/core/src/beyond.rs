//! Effects of dependence on the second time.
//!
//! Two regimes of the coupled `Ξ±` system are covered. For `m > 0`, a region
//! where `Ξ₋` is constant in spacetime turns an `x⁴` profile of `Ξ₊` into a
//! scalar potential `s` with `∂⁴∂⁴Ψ = msΨ`. For `m = 0`, the lower-sign
//! equation reads as a massless Dirac equation with source
//! `J = (1/4π) e4 ∂⁴Ξ₋`.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::algebra::{cl32, BasisBlade, Multivector, Spinor};
use crate::error::{Error, Result};
use crate::field::{dirac4, Field5, FiveVector};
use crate::linalg::null_space;
use crate::spinor::project_pm;
use crate::wave::{on_shell_momentum, NULL_SPACE_CUTOFF};

/// Ratio in `‖∂^μΞ₋‖ < RATIO ‖∂⁴Ξ₋‖` that stands in for "much less than".
pub const SPACETIME_CONSTANCY_RATIO: f64 = 1e-6;

/// `e0e1e2`, which squares to `+1`.
pub fn e012() -> Multivector {
    cl32::blade(&[0, 1, 2])
}

/// `x⁴` profile with `f″ = (ms) f` and `f(0) = 1`: exponential for `ms > 0`,
/// constant at zero and oscillatory below.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Profile {
    pub ms: f64,
}

impl Profile {
    /// `f`, `f′`, `f″` at `w`.
    pub fn eval(&self, w: f64) -> [f64; 3] {
        if self.ms > 0.0 {
            let a = self.ms.sqrt();
            let f = (a * w).exp();
            [f, a * f, self.ms * f]
        } else if self.ms == 0.0 {
            [1.0, 0.0, 0.0]
        } else {
            let a = (-self.ms).sqrt();
            let (s, c) = (a * w).sin_cos();
            [c, -a * s, self.ms * c]
        }
    }
}

/// `Ξ₊ = f(x⁴) ψ(x)` where `ψ = ψ₀(cos(k·x) + e1e2 sin(k·x))` solves the
/// Hestenes–Dirac equation with mass `m + s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarPotentialDemo {
    pub psi_base: Spinor,
    pub k: FiveVector,
    pub profile: Profile,
    pub m: f64,
    pub s: f64,
}

/// Matrix of `ψ ↦ k^μ e_μ ψ e1e2 − Mψe0e1e2` from even blades without `e4`
/// to odd blades without `e4`.
fn dirac_constraint_matrix(k: &FiveVector, mass: f64) -> (Vec<BasisBlade>, DMatrix<f64>) {
    let plus: Vec<BasisBlade> = cl32::SIG.even_blades().into_iter().filter(|b| !b.contains(4)).collect();
    let odd: Vec<BasisBlade> = (0..32u8).map(BasisBlade).filter(|b| b.grade() % 2 == 1 && !b.contains(4)).collect();
    let kv = FiveVector([k[0], k[1], k[2], k[3], 0.0]).to_multivector();
    let e12 = cl32::blade(&[1, 2]);
    let mut m = DMatrix::zeros(odd.len(), plus.len());
    for (j, b) in plus.iter().enumerate() {
        let psi = Multivector::basis(cl32::SIG, *b, 1.0);
        let image = (kv * psi) * e12 - (psi * e012()).scale(mass);
        for (i, o) in odd.iter().enumerate() {
            m[(i, j)] = image.get(*o);
        }
    }
    (plus, m)
}

/// Amplitudes `ψ₀` (no `e4` factor) of Hestenes–Dirac plane waves with
/// momentum `k` and mass `mass`.
pub fn dirac_amplitudes(k: &FiveVector, mass: f64) -> Result<Vec<Spinor>> {
    let (plus, m) = dirac_constraint_matrix(k, mass);
    let kernel = null_space(&m, NULL_SPACE_CUTOFF);
    kernel
        .column_iter()
        .map(|c| {
            let mut v = Multivector::zero(cl32::SIG);
            for (b, x) in plus.iter().zip(c.iter()) {
                v.set(*b, *x);
            }
            Spinor::try_from(v)
        })
        .collect()
}

impl ScalarPotentialDemo {
    /// Builds the demo for a spatial momentum, picking the first amplitude
    /// of the mass-`(m + s)` Dirac kernel.
    pub fn new(m: f64, s: f64, spatial_k: [f64; 3]) -> Result<Self> {
        if m == 0.0 {
            return Err(Error::MasslessScalarPotential);
        }
        if !(m > 0.0 && m.is_finite() && s.is_finite() && m + s > 0.0) {
            return Err(Error::InvalidParameter(format!("need m > 0 and m + s > 0, got m = {m}, s = {s}")));
        }
        let k = on_shell_momentum(m + s, spatial_k, 0.0)?;
        let psi_base = *dirac_amplitudes(&k, m + s)?
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty Dirac kernel".into()))?;
        Ok(ScalarPotentialDemo { psi_base, k, profile: Profile { ms: m * s }, m, s })
    }

    fn spacetime_phase(&self, x: &FiveVector) -> (Multivector, Multivector) {
        let mut k4 = self.k;
        k4.0[4] = 0.0;
        let (sn, cs) = k4.dot(x).sin_cos();
        let e12 = cl32::blade(&[1, 2]);
        (cl32::one().scale(cs) + e12.scale(sn), e12.scale(cs) - cl32::one().scale(sn))
    }

    /// `ψ(x)` and `∂_μ ψ(x)` for `μ = 0..3`.
    fn psi(&self, x: &FiveVector) -> (Multivector, [Multivector; 4]) {
        let (phase, dphase) = self.spacetime_phase(x);
        let base = *self.psi_base.as_multivector();
        let lower = self.k.lower();
        let d = std::array::from_fn(|mu| (base * dphase).scale(lower[mu]));
        (base * phase, d)
    }

    /// Analytic `Ξ₊`.
    pub fn xi_plus(&self) -> XiPlusField<'_> {
        XiPlusField(self)
    }

    /// Analytic `Ξ₋ = (1/m) e4 ∂⁴Ξ₊ e0e1e2`.
    pub fn xi_minus(&self) -> XiMinusField<'_> {
        XiMinusField(self)
    }

    /// `−(1/m)∂⁴∂⁴Ξ₊e0e1e2 + e_μ∂^μΞ₊ − mΞ₊e0e1e2` and
    /// `−sΞ₊e0e1e2 + e_μ∂^μΞ₊ − mΞ₊e0e1e2`.
    pub fn residuals(&self, x: &FiveVector) -> [Multivector; 2] {
        let [_, _, f2] = self.profile.eval(x[4]);
        let xi = self.xi_plus();
        let v = xi.value(x);
        let d = dirac4(&xi, x);
        let tail = (v * e012()).scale(self.m);
        // ∂⁴∂⁴ = ∂₄∂₄ since (g⁴⁴)² = 1.
        let (psi, _) = self.psi(x);
        let dd = psi.scale(f2);
        let eq54 = -(dd * e012()).scale(1.0 / self.m) + d - tail;
        let eq55 = -(v * e012()).scale(self.s) + d - tail;
        [eq54, eq55]
    }

    /// `f″/(m f)` at `x⁴`, the scalar potential the profile encodes.
    pub fn measured_s(&self, w: f64) -> f64 {
        let [f, _, f2] = self.profile.eval(w);
        f2 / (self.m * f)
    }

    /// Residuals of the `Ξ₋` round trip:
    /// `[e4∂⁴Ξ₊ − mΞ₋e0e1e2, lower-sign coupled residual minus the first entry of `residuals`,
    /// ‖(Ξ₋)₊‖]`.
    pub fn round_trip(&self, x: &FiveVector) -> Result<[f64; 3]> {
        let (plus, minus) = (self.xi_plus(), self.xi_minus());
        let e4 = cl32::e(4);
        let upper = e4 * plus.partial_upper(4, x) - (minus.value(x) * e012()).scale(self.m);
        let lower = e4 * minus.partial_upper(4, x) + dirac4(&plus, x) - (plus.value(x) * e012()).scale(self.m);
        let [eq54, _] = self.residuals(x);
        let split = project_pm(&minus.value(x))?;
        Ok([
            upper.norm_inf(),
            (lower - eq54).norm_inf(),
            split.plus.as_multivector().norm_inf(),
        ])
    }
}

/// [`ScalarPotentialDemo::xi_plus`].
pub struct XiPlusField<'a>(&'a ScalarPotentialDemo);

impl Field5 for XiPlusField<'_> {
    fn value(&self, x: &FiveVector) -> Multivector {
        let [f, _, _] = self.0.profile.eval(x[4]);
        self.0.psi(x).0.scale(f)
    }

    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        let [f, f1, _] = self.0.profile.eval(x[4]);
        let (psi, d) = self.0.psi(x);
        if axis == 4 {
            psi.scale(f1)
        } else {
            d[axis].scale(f)
        }
    }
}

/// [`ScalarPotentialDemo::xi_minus`].
pub struct XiMinusField<'a>(&'a ScalarPotentialDemo);

impl XiMinusField<'_> {
    // Ξ₋ = g(x⁴) e4 ψ e0e1e2 with g = −f′/m.
    fn wrap(&self, g: f64, psi: &Multivector) -> Multivector {
        ((&cl32::e(4) * psi) * e012()).scale(g)
    }
}

impl Field5 for XiMinusField<'_> {
    fn value(&self, x: &FiveVector) -> Multivector {
        let [_, f1, _] = self.0.profile.eval(x[4]);
        self.wrap(-f1 / self.0.m, &self.0.psi(x).0)
    }

    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        let [_, f1, f2] = self.0.profile.eval(x[4]);
        let (psi, d) = self.0.psi(x);
        if axis == 4 {
            self.wrap(-f2 / self.0.m, &psi)
        } else {
            self.wrap(-f1 / self.0.m, &d[axis])
        }
    }
}

/// Outcome of the massless consistency test on a `(Ξ₊, Ξ₋)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MasslessCheck {
    /// `sup ‖∂^μΞ₋‖∞` is negligible against `sup ‖∂⁴Ξ₋‖∞`, or below the
    /// tolerance outright.
    pub precondition: bool,
    /// `sup ‖e4∂⁴Ξ₊‖∞`.
    pub residual: f64,
    pub tolerance: f64,
}

impl MasslessCheck {
    /// `true` iff the precondition holds and `e4∂⁴Ξ₊ ≈ 0`.
    pub fn holds(&self) -> bool {
        self.precondition && self.residual < self.tolerance
    }
}

/// For `m = 0`, constancy of `Ξ₋` over a region must coincide with the
/// cylinder condition on `Ξ₊` there.
pub fn massless_consistency<P, M>(
    xi_plus: &P,
    xi_minus: &M,
    samples: &[FiveVector],
    tolerance: f64,
) -> Result<MasslessCheck>
where
    P: Field5 + ?Sized,
    M: Field5 + ?Sized,
{
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let mut spacetime: f64 = 0.0;
    let mut fifth: f64 = 0.0;
    let mut residual: f64 = 0.0;
    let e4 = cl32::e(4);
    for x in samples {
        for mu in 0..4 {
            spacetime = spacetime.max(xi_minus.partial_upper(mu, x).norm_inf());
        }
        fifth = fifth.max(xi_minus.partial_upper(4, x).norm_inf());
        residual = residual.max((e4 * xi_plus.partial_upper(4, x)).norm_inf());
    }
    let precondition = spacetime < tolerance || spacetime < SPACETIME_CONSTANCY_RATIO * fifth;
    Ok(MasslessCheck { precondition, residual, tolerance })
}

fn check_current_grades(j: &Multivector) -> Result<()> {
    let bad: Vec<BasisBlade> = j
        .terms()
        .filter(|(b, _)| !matches!(b.grade(), 1 | 3) || b.contains(4))
        .map(|(b, _)| b)
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::GradeStructure(bad))
    }
}

/// `J = (1/4π) e4 ∂⁴Ξ₋` at one point, rejected unless it is a spacetime
/// vector plus trivector.
pub fn source_current_at<F: Field5 + ?Sized>(xi_minus: &F, x: &FiveVector) -> Result<Multivector> {
    let j = (cl32::e(4) * xi_minus.partial_upper(4, x)).scale(1.0 / (4.0 * PI));
    check_current_grades(&j)?;
    Ok(j)
}

/// Source current sampled over a set of points.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceCurrent {
    pub points: Vec<FiveVector>,
    pub values: Vec<Multivector>,
}

impl SourceCurrent {
    pub fn max_norm(&self) -> f64 {
        self.values.iter().map(Multivector::norm_inf).fold(0.0, f64::max)
    }
}

pub fn source_current<F: Field5 + ?Sized>(xi_minus: &F, samples: &[FiveVector]) -> Result<SourceCurrent> {
    let values = samples
        .iter()
        .map(|x| source_current_at(xi_minus, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(SourceCurrent { points: samples.to_vec(), values })
}

/// `e_μ∂^μΞ₊ + e4∂⁴Ξ₋`, the massless lower-sign equation.
pub fn sourced_dirac_residual<P, M>(xi_plus: &P, xi_minus: &M, x: &FiveVector) -> Multivector
where
    P: Field5 + ?Sized,
    M: Field5 + ?Sized,
{
    dirac4(xi_plus, x) + cl32::e(4) * xi_minus.partial_upper(4, x)
}

/// Largest `|∂_μ J^μ|` over the interior of the `n⁵` grid with spacing `h`,
/// by central differences of sampled `J`.
pub fn current_divergence<F: Field5 + ?Sized>(xi_minus: &F, center: FiveVector, n: usize, h: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("grid needs at least 3 points per axis, got {n}")));
    }
    let points = crate::field::grid5(center, n, h);
    let current = source_current(xi_minus, &points)?;
    let stride = |axis: usize| n.pow(4 - axis as u32);
    let index = |i: [usize; 5]| (0..5).map(|a| i[a] * stride(a)).sum::<usize>();
    let mut worst: f64 = 0.0;
    for flat in 0..points.len() {
        let idx: [usize; 5] = std::array::from_fn(|a| (flat / stride(a)) % n);
        if idx.iter().any(|&i| i == 0 || i == n - 1) {
            continue;
        }
        let mut div = 0.0;
        for mu in 0..4 {
            let (mut up, mut down) = (idx, idx);
            up[mu] += 1;
            down[mu] -= 1;
            let blade = BasisBlade::generator(mu);
            div += (current.values[index(up)].get(blade) - current.values[index(down)].get(blade)) / (2.0 * h);
        }
        worst = worst.max(div.abs());
    }
    Ok(worst)
}

/// Pair used by the sources demo at `m = 0`:
/// `Ξ₋ = sin(x⁴) e0e4` and `Ξ₊ = cos(x⁴) x¹ e1e0`, a pure grade-2 field with
/// `e_μ∂^μΞ₊ = −e4∂⁴Ξ₋ = cos(x⁴) e0`.
pub fn sources_demo_pair() -> (
    impl Field5 + Clone,
    impl Field5 + Clone,
) {
    #[derive(Clone)]
    struct Minus;
    impl Field5 for Minus {
        fn value(&self, x: &FiveVector) -> Multivector {
            cl32::blade(&[0, 4]).scale(x[4].sin())
        }
        fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
            if axis == 4 {
                cl32::blade(&[0, 4]).scale(x[4].cos())
            } else {
                Multivector::zero(cl32::SIG)
            }
        }
    }
    #[derive(Clone)]
    struct Plus;
    impl Field5 for Plus {
        fn value(&self, x: &FiveVector) -> Multivector {
            (cl32::e(1) * cl32::e(0)).scale(x[4].cos() * x[1])
        }
        fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
            let b = cl32::e(1) * cl32::e(0);
            match axis {
                1 => b.scale(x[4].cos()),
                4 => b.scale(-x[4].sin() * x[1]),
                _ => Multivector::zero(cl32::SIG),
            }
        }
    }
    (Plus, Minus)
}
