//! The five-dimensional first-order wave equation `e_A ∂^A Φ = −E m Φ`, its
//! minimally coupled form, plane waves and the reduction to the
//! four-dimensional Hestenes–Dirac equation.

use std::f64::consts::FRAC_PI_2;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::algebra::{cl32, BasisBlade, Multivector, Spinor};
use crate::error::{Error, Result};
use crate::field::{dirac4, dirac5, ConstantField, Field5, FiveVector, MappedField};
use crate::linalg::{null_space, MultivectorOperator};
use crate::spinor::{e3e4, minus_part, plus_part};

/// Relative singular-value cutoff for amplitude null spaces.
pub const NULL_SPACE_CUTOFF: f64 = 1e-10;

/// Tolerance on `ΓΓ + 1` and on the classification identity for `Γ`.
pub const GAMMA_TOLERANCE: f64 = 1e-12;

/// Largest `|∂⁴Ψ|` accepted by the four-dimensional residuals.
pub const CYLINDER_TOLERANCE: f64 = 1e-9;

/// The even blade `Γ` that plays the role of the imaginary unit in phases
/// and in the potential coupling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GammaChoice {
    /// `Γ = e1e2`: no `e4` factor.
    E12,
    /// `Γ = e0E = −e1e2e3e4`: contains `e4`.
    E0E,
    /// `Γ = e1e2(cos²θ − e3e4 sin²θ)`, admissible only at `θ ∈ (π/2)ℤ`.
    Superposition(f64),
}

impl GammaChoice {
    pub fn as_multivector(&self) -> Multivector {
        match *self {
            GammaChoice::E12 => cl32::blade(&[1, 2]),
            GammaChoice::E0E => cl32::e(0) * cl32::pseudoscalar(),
            GammaChoice::Superposition(theta) => {
                let (s, c) = theta.sin_cos();
                cl32::blade(&[1, 2]) * (cl32::one().scale(c * c) - e3e4().scale(s * s))
            }
        }
    }

    /// `‖ΓΓ + 1‖∞`.
    pub fn square_defect(&self) -> f64 {
        let g = self.as_multivector();
        (g * g + cl32::one()).norm_inf()
    }

    pub fn is_admissible(&self) -> bool {
        self.square_defect() < GAMMA_TOLERANCE
    }

    /// Fails with a diagnostic unless `ΓΓ = −1`.
    pub fn require_admissible(&self) -> Result<Multivector> {
        let defect = self.square_defect();
        if defect < GAMMA_TOLERANCE {
            Ok(self.as_multivector())
        } else {
            Err(Error::InadmissibleGamma(format!(
                "{self:?}: ΓΓ ≠ −1 (|ΓΓ + 1| = {defect:e})"
            )))
        }
    }

    pub fn name(&self) -> String {
        match self {
            GammaChoice::E12 => "e12".into(),
            GammaChoice::E0E => "e0E".into(),
            GammaChoice::Superposition(t) => format!("superposition({t})"),
        }
    }
}

/// `‖Γ₊ − Γ₋e3e4 − e1e2‖∞`: how far `Γ` is from reproducing the standard
/// `e1e2` coupling after projection.
pub fn projection_identity_defect(g: &Multivector) -> f64 {
    let lhs = plus_part(g) - minus_part(g) * e3e4();
    (lhs - cl32::blade(&[1, 2])).norm_inf()
}

/// Classifies a candidate `Γ` as one of the two admissible blades.
pub fn gamma_classify(g: &Multivector) -> Result<GammaChoice> {
    if !g.is_even() {
        return Err(Error::InadmissibleGamma(format!("{g} is not even")));
    }
    let identity = projection_identity_defect(g);
    if identity >= GAMMA_TOLERANCE {
        return Err(Error::InadmissibleGamma(format!(
            "Γ₊ − Γ₋e3e4 ≠ e1e2 (defect {identity:e})"
        )));
    }
    let square = (g * g + cl32::one()).norm_inf();
    if square >= GAMMA_TOLERANCE {
        return Err(Error::InadmissibleGamma(format!(
            "ΓΓ ≠ −1 (|ΓΓ + 1| = {square:e})"
        )));
    }
    for choice in [GammaChoice::E12, GammaChoice::E0E] {
        if (*g - choice.as_multivector()).norm_inf() < GAMMA_TOLERANCE {
            return Ok(choice);
        }
    }
    Err(Error::InadmissibleGamma(format!(
        "{g} passes both identities but is neither e1e2 nor e0E"
    )))
}

/// `true` iff the superposition at angle `θ` classifies. Equivalent to
/// `θ ∈ (π/2)ℤ` up to rounding of `cos²θ sin²θ`.
pub fn superposition_admissible(theta: f64) -> bool {
    gamma_classify(&GammaChoice::Superposition(theta).as_multivector()).is_ok()
}

/// Nearest multiple of `π/2`, used when reporting superposition angles.
pub fn nearest_quarter_turn(theta: f64) -> f64 {
    (theta / FRAC_PI_2).round() * FRAC_PI_2
}

/// Positive-frequency momentum `(k⁰, k1, k2, k3, k4)` with `k·k = −m²`,
/// i.e. `k⁰ = √(|k|² − (k⁴)² + m²)`.
pub fn on_shell_momentum(m: f64, spatial: [f64; 3], k4: f64) -> Result<FiveVector> {
    let k0_sq = spatial.iter().map(|c| c * c).sum::<f64>() - k4 * k4 + m * m;
    if k0_sq < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "(k⁴)² exceeds |k|² + m² by {:e}: no real k⁰",
            -k0_sq
        )));
    }
    Ok(FiveVector([k0_sq.sqrt(), spatial[0], spatial[1], spatial[2], k4]))
}

/// Matrix of `φ ↦ k^A e_A φ Γ + mEφ`, from even amplitudes to odd images.
pub fn momentum_operator(k: &FiveVector, m: f64, gamma: &Multivector) -> DMatrix<f64> {
    let kv = k.to_multivector();
    let e5 = cl32::pseudoscalar();
    let op = MultivectorOperator::from_fn(|phi| &(&kv * phi) * gamma + (&e5 * phi).scale(m));
    let odd: Vec<BasisBlade> = (0..32u8).map(BasisBlade).filter(|b| b.grade() % 2 == 1).collect();
    op.block(&odd, &cl32::SIG.even_blades())
}

/// Basis of constant amplitudes `φ` with `k^A e_A φ Γ = −mEφ`.
pub fn solve_momentum_constraint(k: &FiveVector, m: f64, gamma: GammaChoice) -> Result<Vec<Spinor>> {
    let g = gamma.require_admissible()?;
    let kernel = null_space(&momentum_operator(k, m, &g), NULL_SPACE_CUTOFF);
    kernel
        .column_iter()
        .map(|c| Spinor::from_coords(cl32::SIG, c.as_slice()))
        .collect()
}

/// `‖k^A e_A φ Γ + mEφ‖∞`.
pub fn momentum_constraint_residual(phi: &Multivector, k: &FiveVector, m: f64, gamma: &Multivector) -> f64 {
    let kv = k.to_multivector();
    (&(&kv * phi) * gamma + (&cl32::pseudoscalar() * phi).scale(m)).norm_inf()
}

/// Residual of the constraint specialised to each admissible `Γ`:
/// `k^A e_A φ − mφe0` for `e0E` and `k^A e_A φ + mφe0e3e4` for `e1e2`.
pub fn specialized_constraint_residual(
    phi: &Multivector,
    k: &FiveVector,
    m: f64,
    gamma: GammaChoice,
) -> Result<f64> {
    let lhs = &k.to_multivector() * phi;
    let rhs = match gamma {
        GammaChoice::E0E => (phi * &cl32::e(0)).scale(m),
        GammaChoice::E12 => (phi * &cl32::blade(&[0, 3, 4])).scale(-m),
        GammaChoice::Superposition(_) => {
            return Err(Error::InadmissibleGamma(
                "specialised constraint exists only for e1e2 and e0E".into(),
            ))
        }
    };
    Ok((lhs - rhs).norm_inf())
}

/// `Φ(x) = φ(cos(k·x) + Γ sin(k·x))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    pub amplitude: Multivector,
    pub k: FiveVector,
    pub gamma: GammaChoice,
}

impl PlaneWave {
    pub fn new(amplitude: Multivector, k: FiveVector, gamma: GammaChoice) -> Self {
        PlaneWave { amplitude, k, gamma }
    }

    pub fn field(&self) -> PlaneWaveField {
        PlaneWaveField {
            amplitude: self.amplitude,
            k: self.k,
            gamma: self.gamma.as_multivector(),
        }
    }

    /// `k·k + m²`.
    pub fn dispersion_defect(&self, m: f64) -> f64 {
        self.k.norm_sq() + m * m
    }

    /// The plane wave `e_A ∂^A Φ`, itself a plane wave with amplitude
    /// `k^A e_A φ Γ`.
    pub fn derivative_wave(&self) -> PlaneWave {
        let g = self.gamma.as_multivector();
        PlaneWave {
            amplitude: (self.k.to_multivector() * self.amplitude) * g,
            ..*self
        }
    }
}

/// Analytic field of a [`PlaneWave`].
#[derive(Debug, Clone, Copy)]
pub struct PlaneWaveField {
    amplitude: Multivector,
    k: FiveVector,
    gamma: Multivector,
}

impl PlaneWaveField {
    fn phase(&self, x: &FiveVector) -> f64 {
        self.k.dot(x)
    }
}

impl Field5 for PlaneWaveField {
    fn value(&self, x: &FiveVector) -> Multivector {
        let (s, c) = self.phase(x).sin_cos();
        self.amplitude * (cl32::one().scale(c) + self.gamma.scale(s))
    }

    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        let (s, c) = self.phase(x).sin_cos();
        let k_lower = self.k.lower()[axis];
        (self.amplitude * (self.gamma.scale(c) - cl32::one().scale(s))).scale(k_lower)
    }
}

/// `e_A ∂^A Φ + EmΦ`, zero exactly on solutions of the free equation.
pub fn dirac5_residual<F: Field5 + ?Sized>(field: &F, m: f64, x: &FiveVector) -> Multivector {
    dirac5(field, x) + (cl32::pseudoscalar() * field.value(x)).scale(m)
}

fn require_vector(a: &Multivector) -> Result<()> {
    let bad: Vec<_> = a.terms().filter(|(b, _)| b.grade() != 1).map(|(b, _)| b).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::NotVector(bad))
    }
}

/// `e_A ∂^A Φ + mΦE − qAΦΓ`.
pub fn dirac5_potential_residual<F, P>(
    field: &F,
    m: f64,
    q: f64,
    potential: &P,
    gamma: &Multivector,
    x: &FiveVector,
) -> Result<Multivector>
where
    F: Field5 + ?Sized,
    P: Field5 + ?Sized,
{
    let a = potential.value(x);
    require_vector(&a)?;
    let phi = field.value(x);
    Ok(dirac5(field, x) + (phi * cl32::pseudoscalar()).scale(m) - (&(a * phi) * gamma).scale(q))
}

/// `e_μ ∂^μ Ψ − mΨe0e1e2 − qAΨe1e2` for a field with no `x⁴` dependence.
///
/// `potential` must be a grade-1 field without an `e4` component.
pub fn hestenes_dirac_residual<F, P>(
    field: &F,
    m: f64,
    q: f64,
    potential: Option<&P>,
    x: &FiveVector,
) -> Result<Multivector>
where
    F: Field5 + ?Sized,
    P: Field5 + ?Sized,
{
    let d4 = field.partial(4, x).norm_inf();
    if d4 > CYLINDER_TOLERANCE {
        return Err(Error::CylinderViolation(d4));
    }
    let psi = field.value(x);
    let mut r = dirac4(field, x) - (psi * cl32::blade(&[0, 1, 2])).scale(m);
    if let Some(p) = potential {
        let a = p.value(x);
        require_vector(&a)?;
        if a.get(BasisBlade::generator(4)) != 0.0 {
            return Err(Error::InvalidParameter("four-potential has an e4 component".into()));
        }
        r -= ((a * psi) * cl32::blade(&[1, 2])).scale(q);
    }
    Ok(r)
}

/// `Ξ₊` and `Ξ₋` as fields, for `Ξ = Φ(1 − e3e4)`.
#[allow(clippy::type_complexity)]
pub fn xi_fields<F: Field5 + Clone>(
    field: F,
) -> (
    MappedField<F, impl Fn(&Multivector) -> Multivector + Send + Sync>,
    MappedField<F, impl Fn(&Multivector) -> Multivector + Send + Sync>,
) {
    let xi = |v: &Multivector| v * &(cl32::one() - e3e4());
    (
        MappedField::new(field.clone(), move |v: &Multivector| plus_part(&xi(v))),
        MappedField::new(field, move |v: &Multivector| minus_part(&xi(v))),
    )
}

/// Free Hestenes–Dirac residuals of `Ξ₊` and `Ξ₋` built from `Φ`.
pub fn reduction_residuals<F: Field5 + Clone>(field: &F, m: f64, x: &FiveVector) -> Result<[Multivector; 2]> {
    let (plus, minus) = xi_fields(field.clone());
    Ok([
        hestenes_dirac_residual::<_, ConstantField>(&plus, m, 0.0, None, x)?,
        hestenes_dirac_residual::<_, ConstantField>(&minus, m, 0.0, None, x)?,
    ])
}

/// The coupled pair `e4∂⁴Φ± + e_μ∂^μΦ∓ + mEΦ±`, evaluated from the
/// projected fields. Equals the `(·)±` parts of [`dirac5_residual`].
pub fn coupled_residuals<F: Field5 + Clone>(field: &F, m: f64, x: &FiveVector) -> [Multivector; 2] {
    let plus = MappedField::new(field.clone(), plus_part);
    let minus = MappedField::new(field.clone(), minus_part);
    let e4 = cl32::e(4);
    let e5 = cl32::pseudoscalar();
    let side = |same: &dyn Field5, other: &dyn Field5| {
        e4 * same.partial_upper(4, x) + dirac4(other, x) + (e5 * same.value(x)).scale(m)
    };
    [side(&plus, &minus), side(&minus, &plus)]
}

/// `e4∂⁴Ξ± + e_μ∂^μΞ∓ − mΞ∓Ee3e4` for upper and lower sign.
pub fn xi_coupled_residuals<F: Field5 + Clone>(field: &F, m: f64, x: &FiveVector) -> [Multivector; 2] {
    let (plus, minus) = xi_fields(field.clone());
    let e4 = cl32::e(4);
    let tail = cl32::pseudoscalar() * e3e4();
    let side = |same: &dyn Field5, other: &dyn Field5| {
        e4 * same.partial_upper(4, x) + dirac4(other, x) - (other.value(x) * tail).scale(m)
    };
    [side(&plus, &minus), side(&minus, &plus)]
}

/// Four-dimensional residuals recovered from the five-dimensional coupled
/// residual `R = e_A∂^AΦ + mΦE − qAΦΓ`: `[R₋ − R₊e3e4, R₊ − R₋e3e4]`, which
/// under the cylinder condition and `A⁴ = 0` equal the Hestenes–Dirac
/// residuals of `[Ξ₊, Ξ₋]`.
pub fn projected_potential_residuals<F, P>(
    field: &F,
    m: f64,
    q: f64,
    potential: &P,
    gamma: &Multivector,
    x: &FiveVector,
) -> Result<[Multivector; 2]>
where
    F: Field5 + ?Sized,
    P: Field5 + ?Sized,
{
    let r = dirac5_potential_residual(field, m, q, potential, gamma, x)?;
    let (rp, rm) = (plus_part(&r), minus_part(&r));
    let j = e3e4();
    Ok([rm - rp * j, rp - rm * j])
}

/// `k^μ e_μ ψ e1e2 − mψe0e1e2`: the condition for
/// `ψ(cos(k^μx_μ) + e1e2 sin(k^μx_μ))` to solve the free Hestenes–Dirac
/// equation.
pub fn dirac_plane_wave_constraint(psi: &Multivector, k: &FiveVector, m: f64) -> Multivector {
    let mut k4 = *k;
    k4.0[4] = 0.0;
    (&k4.to_multivector() * psi) * cl32::blade(&[1, 2]) - (psi * &cl32::blade(&[0, 1, 2])).scale(m)
}
