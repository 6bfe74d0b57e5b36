//! Hydrogen-like bound states.
//!
//! With `qA = −(λ/r)e0` the wave equation separates into an angular part,
//! handled through the eigenvalue `κ` of the relativistic angular-momentum
//! operator, and a radial equation `∂_r u = (1/r)Su − Tu`. A Frobenius
//! series `u = r^(q−1) e^(βr) Σ C_p r^p` terminates only for quantised `ε`,
//! which reproduces the Sommerfeld spectrum.
//!
//! `ζF = e0Fe0` and `ηF = FΓe0`. Because `η` and left multiplication by the
//! odd element `e_r` each flip parity, `ζ` and `η` are built on the full
//! 32-blade algebra and only the composites `S`, `T` are restricted to the
//! even subalgebra.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::algebra::{cl32, BasisBlade, Multivector, Spinor};
use crate::error::{Error, Result};
use crate::field::{Field5, FiveVector};
use crate::linalg::{range_factors, smallest_singular_pair, LinearOperator16, MultivectorOperator};
use crate::wave::GammaChoice;

/// Fine-structure constant.
pub const ALPHA: f64 = 7.2973525693e-3;

/// Electron rest energy in eV.
pub const ELECTRON_MASS_EV: f64 = 510998.95;

/// Largest normalised termination measure accepted as a bound state.
pub const TERMINATION_THRESHOLD: f64 = 1e-8;

const GRID_POINTS: usize = 400;
const X_MIN: f64 = 1e-9;
const RANGE_CUTOFF: f64 = 1e-12;

/// `F ↦ e0 F e0`.
pub fn zeta_op() -> MultivectorOperator {
    let e0 = cl32::e(0);
    MultivectorOperator::from_fn(|f| (&e0 * f) * e0)
}

/// `F ↦ F Γ e0`.
pub fn eta_op(gamma: GammaChoice) -> Result<MultivectorOperator> {
    let g = gamma.require_admissible()?;
    Ok(MultivectorOperator::right(&(g * cl32::e(0))))
}

/// Unit spatial vector `x^i e_i / |x|`.
pub fn radial_direction(x: [f64; 3]) -> Result<Multivector> {
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    if r == 0.0 || !r.is_finite() {
        return Err(Error::InvalidRadialDirection(format!("{x:?} has no direction")));
    }
    Ok(FiveVector::new(0.0, x[0] / r, x[1] / r, x[2] / r, 0.0).to_multivector())
}

fn check_direction(e_r: &Multivector) -> Result<()> {
    let off: Vec<BasisBlade> = e_r
        .terms()
        .filter(|(b, _)| !(b.grade() == 1 && (1..=3).any(|i| b.contains(i))))
        .map(|(b, _)| b)
        .collect();
    if !off.is_empty() {
        return Err(Error::InvalidRadialDirection(format!("non-spatial blades {off:?}")));
    }
    let norm = e_r.norm2();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidRadialDirection(format!("|e_r| = {norm}")));
    }
    Ok(())
}

/// `S = κζ + λ η L(e_r) ζ`.
pub fn s_op(kappa: i32, lambda: f64, gamma: GammaChoice, e_r: &Multivector) -> Result<LinearOperator16> {
    check_direction(e_r)?;
    let zeta = zeta_op();
    let eta = eta_op(gamma)?;
    let coupling = &(&eta * &MultivectorOperator::left(e_r)) * &zeta;
    (&zeta.scale(kappa as f64) + &coupling.scale(lambda)).restrict_even()
}

/// `T = L(E e_r)(m − ε L(E) η ζ)`.
pub fn t_op(m: f64, epsilon: f64, gamma: GammaChoice, e_r: &Multivector) -> Result<LinearOperator16> {
    check_direction(e_r)?;
    let e5 = cl32::pseudoscalar();
    let inner = &(&MultivectorOperator::left(&e5) * &eta_op(gamma)?) * &zeta_op();
    let bracket = &MultivectorOperator::identity().scale(m) - &inner.scale(epsilon);
    (&MultivectorOperator::left(&(&e5 * e_r)) * &bracket).restrict_even()
}

/// Parameters of one bound-state problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoulombParams {
    pub m: f64,
    pub lambda: f64,
    pub kappa: i32,
    pub xi: u32,
    pub gamma: GammaChoice,
}

impl CoulombParams {
    pub fn new(m: f64, lambda: f64, kappa: i32, xi: u32, gamma: GammaChoice) -> Result<Self> {
        let p = CoulombParams { m, lambda, kappa, xi, gamma };
        p.validate()?;
        Ok(p)
    }

    /// `λ = Zα` with unit mass.
    pub fn hydrogen_like(z: u32, alpha: f64, kappa: i32, xi: u32, gamma: GammaChoice) -> Result<Self> {
        Self::new(1.0, z as f64 * alpha, kappa, xi, gamma)
    }

    pub fn validate(&self) -> Result<()> {
        if self.kappa == 0 {
            return Err(Error::ZeroKappa);
        }
        if !(self.m > 0.0 && self.m.is_finite()) {
            return Err(Error::InvalidParameter(format!("mass must be positive, got {}", self.m)));
        }
        let (lambda_sq, kappa_sq) = (self.lambda * self.lambda, (self.kappa as f64).powi(2));
        if lambda_sq.is_nan() || lambda_sq >= kappa_sq {
            return Err(Error::CouplingDomain { lambda_sq, kappa_sq });
        }
        self.gamma.require_admissible()?;
        Ok(())
    }

    /// Indicial exponent `√(κ² − λ²)`.
    pub fn q(&self) -> f64 {
        ((self.kappa as f64).powi(2) - self.lambda * self.lambda).sqrt()
    }
}

/// `ε = m / √(1 + λ²/(ξ + √(κ² − λ²))²)`.
pub fn sommerfeld_energy(p: &CoulombParams) -> Result<f64> {
    p.validate()?;
    let d = p.xi as f64 + p.q();
    Ok(p.m / (1.0 + p.lambda * p.lambda / (d * d)).sqrt())
}

/// `√(m² − ε²)(ξ + √(κ² − λ²)) − ελ`.
pub fn quantisation_residual(p: &CoulombParams, epsilon: f64) -> f64 {
    (p.m * p.m - epsilon * epsilon).sqrt() * (p.xi as f64 + p.q()) - epsilon * p.lambda
}

/// `(n, j) = (|κ| + ξ, |κ| − ½)`.
pub fn quantum_numbers(kappa: i32, xi: u32) -> Result<(u32, f64)> {
    if kappa == 0 {
        return Err(Error::ZeroKappa);
    }
    let k = kappa.unsigned_abs();
    Ok((k + xi, k as f64 - 0.5))
}

/// Orbital quantum number: `l = −κ − 1` for `κ < 0`, `l = κ` for `κ > 0`.
pub fn orbital_l(kappa: i32) -> Result<u32> {
    match kappa {
        0 => Err(Error::ZeroKappa),
        k if k < 0 => Ok((-k - 1) as u32),
        k => Ok(k as u32),
    }
}

/// Spectroscopic label such as `2p3/2`.
pub fn spectroscopic_label(kappa: i32, xi: u32) -> Result<String> {
    const LETTERS: &[u8] = b"spdfghiklmnoqrtuv";
    let (n, _) = quantum_numbers(kappa, xi)?;
    let l = orbital_l(kappa)? as usize;
    let letter = LETTERS.get(l).map(|&c| c as char).unwrap_or('?');
    Ok(format!("{n}{letter}{}/2", 2 * kappa.unsigned_abs() - 1))
}

/// Binding energy `m_e(ε/m − 1)` in eV for nuclear charge `z`.
pub fn binding_energy_ev(z: u32, kappa: i32, xi: u32, alpha: f64, electron_mass_ev: f64) -> Result<f64> {
    let p = CoulombParams::hydrogen_like(z, alpha, kappa, xi, GammaChoice::E12)?;
    Ok(electron_mass_ev * (sommerfeld_energy(&p)? - 1.0))
}

/// Coefficients of a terminating Frobenius series and the energy at which
/// it terminates.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSeries {
    pub epsilon: f64,
    pub q: f64,
    pub beta: f64,
    pub coefficients: Vec<Spinor>,
    /// Normalised termination measure at `epsilon`.
    pub measure: f64,
}

/// Worst residuals of the indicial, recurrence and termination relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResiduals {
    pub indicial: f64,
    pub recurrence: f64,
    pub termination: f64,
}

impl RadialSeries {
    /// Residuals relative to `max |C_p|`.
    pub fn residuals(&self, p: &CoulombParams) -> Result<SeriesResiduals> {
        let e_r = cl32::e(3);
        let s = s_op(p.kappa, p.lambda, p.gamma, &e_r)?.to_dmatrix();
        let t = t_op(p.m, self.epsilon, p.gamma, &e_r)?.to_dmatrix();
        let bt = DMatrix::identity(16, 16) * self.beta + t;
        let c: Vec<DVector<f64>> = self
            .coefficients
            .iter()
            .map(|c| DVector::from_vec(c.coords()))
            .collect();
        let scale = c.iter().map(|v| v.amax()).fold(0.0, f64::max);
        let indicial = (&s * &c[0] - &c[0] * self.q).amax() / scale;
        let recurrence = (1..c.len())
            .map(|k| {
                let lhs = DMatrix::identity(16, 16) * (k as f64 + self.q) - &s;
                (lhs * &c[k] + &bt * &c[k - 1]).amax() / scale
            })
            .fold(0.0, f64::max);
        let termination = (&bt * c.last().expect("at least C₀")).amax() / scale;
        Ok(SeriesResiduals { indicial, recurrence, termination })
    }
}

struct Chain {
    s: DMatrix<f64>,
    basis: DMatrix<f64>,
    q: f64,
}

impl Chain {
    fn new(p: &CoulombParams) -> Result<Self> {
        let q = p.q();
        let s = s_op(p.kappa, p.lambda, p.gamma, &cl32::e(3))?.to_dmatrix();
        // (S + q)/(2q) projects onto the +q eigenspace because S² = q².
        let projector = (&s + DMatrix::identity(16, 16) * q) / (2.0 * q);
        let (u, _, _) = range_factors(&projector, 1e-10);
        Ok(Chain { s, basis: u, q })
    }

    fn bt(&self, p: &CoulombParams, x: f64) -> Result<(f64, f64, DMatrix<f64>)> {
        let epsilon = p.m * (1.0 - x * x).sqrt();
        let beta = -p.m * x;
        let t = t_op(p.m, epsilon, p.gamma, &cl32::e(3))?.to_dmatrix();
        Ok((epsilon, beta, DMatrix::identity(16, 16) * beta + t))
    }

    fn step(&self, k: u32, bt: &DMatrix<f64>, prev: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        let lhs = DMatrix::identity(16, 16) * (k as f64 + self.q) - &self.s;
        let rhs = -(bt * prev);
        lhs.lu()
            .solve(&rhs)
            .ok_or_else(|| Error::NoBoundState(format!("recurrence matrix singular at p = {k}")))
    }

    fn propagate(&self, xi: u32, bt: &DMatrix<f64>, start: DMatrix<f64>) -> Result<DMatrix<f64>> {
        (1..=xi).try_fold(start, |y, k| self.step(k, bt, &y))
    }

    /// `σ_min((β + T) U_r) / 2|β|`, where `U_r` spans the images of the
    /// `+q` eigenspace after `ξ` recurrence steps.
    fn measure(&self, p: &CoulombParams, x: f64) -> Result<f64> {
        let (_, beta, bt) = self.bt(p, x)?;
        let y = self.propagate(p.xi, &bt, self.basis.clone())?;
        let (u, _, _) = range_factors(&y, RANGE_CUTOFF);
        let (s, _) = smallest_singular_pair(&(&bt * u));
        Ok(s / (2.0 * beta.abs()))
    }
}

/// Normalised distance from termination at `ε`, zero exactly on the
/// spectrum.
pub fn termination_measure(p: &CoulombParams, epsilon: f64) -> Result<f64> {
    p.validate()?;
    if !(0.0 < epsilon && epsilon < p.m) {
        return Err(Error::InvalidParameter(format!("ε = {epsilon} outside (0, m)")));
    }
    let x = (1.0 - (epsilon / p.m).powi(2)).sqrt();
    Chain::new(p)?.measure(p, x)
}

fn golden_section(mut a: f64, mut b: f64, f: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    for _ in 0..200 {
        if (b - a).abs() <= 1e-15 * b.abs().max(1e-300) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc < fd { c } else { d })
}

/// Finds the energy at which the radial series terminates, without using
/// the closed form, and returns the coefficient chain.
///
/// The scan runs over `x = −β/m ∈ [10⁻⁹, 1)` on a logarithmic grid, the
/// minimum of [`termination_measure`] is refined by golden-section search
/// and accepted when it falls below [`TERMINATION_THRESHOLD`].
pub fn solve_radial(p: &CoulombParams) -> Result<RadialSeries> {
    p.validate()?;
    let chain = Chain::new(p)?;
    let x_max = 1.0 - 1e-9;
    let ratio = (x_max / X_MIN).ln() / (GRID_POINTS - 1) as f64;
    let grid: Vec<f64> = (0..GRID_POINTS).map(|i| X_MIN * (ratio * i as f64).exp()).collect();
    let values = grid
        .iter()
        .map(|&x| chain.measure(p, x))
        .collect::<Result<Vec<_>>>()?;
    let best = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("non-empty grid");
    let lo = grid[best.saturating_sub(1)];
    let hi = grid[(best + 1).min(GRID_POINTS - 1)];
    let x = golden_section(lo, hi, |x| chain.measure(p, x))?;
    let measure = chain.measure(p, x)?;
    if measure.is_nan() || measure >= TERMINATION_THRESHOLD {
        return Err(Error::NoBoundState(format!(
            "κ = {}, ξ = {}, Γ = {}: smallest termination measure {measure:e} at ε/m = {}",
            p.kappa,
            p.xi,
            p.gamma.name(),
            (1.0 - x * x).sqrt()
        )));
    }

    let (epsilon, beta, bt) = chain.bt(p, x)?;
    let y = chain.propagate(p.xi, &bt, chain.basis.clone())?;
    let (u, sigma, v) = range_factors(&y, RANGE_CUTOFF);
    let (_, d) = smallest_singular_pair(&(&bt * &u));
    let weights = DVector::from_iterator(sigma.len(), d.iter().zip(&sigma).map(|(di, si)| di / si));
    let c0 = &chain.basis * (v * weights);
    let c0 = &c0 / c0.amax();
    let mut cols = vec![c0];
    for k in 1..=p.xi {
        let next = chain.step(k, &bt, &DMatrix::from_column_slice(16, 1, cols.last().unwrap().as_slice()))?;
        cols.push(DVector::from_column_slice(next.as_slice()));
    }
    let coefficients = cols
        .iter()
        .map(|c| Spinor::from_coords(cl32::SIG, c.as_slice()))
        .collect::<Result<Vec<_>>>()?;
    Ok(RadialSeries { epsilon, q: chain.q, beta, coefficients, measure })
}

/// Left and right sides of `r∇Φ = (r·∇ + 1 − κζ)Φ` at a spatial point;
/// returns their difference.
pub fn angular_reduction_check<F: Field5 + ?Sized>(kappa: i32, field: &F, x: &FiveVector) -> Multivector {
    let r = FiveVector::new(0.0, x[1], x[2], x[3], 0.0).to_multivector();
    let partials: Vec<Multivector> = (1..=3).map(|i| field.partial(i, x)).collect();
    let mut grad = Multivector::zero(cl32::SIG);
    let mut radial = Multivector::zero(cl32::SIG);
    for (i, d) in partials.iter().enumerate() {
        grad += &cl32::e(i + 1) * d;
        radial += d.scale(x[i + 1]);
    }
    let phi = field.value(x);
    let e0 = cl32::e(0);
    let zeta_phi = (e0 * phi) * e0;
    r * grad - (radial + phi - zeta_phi.scale(kappa as f64))
}

/// `A = −(λ/r) e0` with unit charge, so `qA = −(λ/r)e0`.
#[derive(Debug, Clone, Copy)]
pub struct CoulombPotential {
    pub lambda: f64,
}

impl Field5 for CoulombPotential {
    fn value(&self, x: &FiveVector) -> Multivector {
        cl32::e(0).scale(-self.lambda / x.spatial_norm())
    }

    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        if (1..=3).contains(&axis) {
            let r = x.spatial_norm();
            cl32::e(0).scale(self.lambda * x[axis] / (r * r * r))
        } else {
            Multivector::zero(cl32::SIG)
        }
    }
}

/// Three-dimensional bound-state field
/// `Φ = Σ_p r^(p+q−1) e^(βr) (a_p + e_r b_p)(cos εt − Γ sin εt)` assembled
/// from a radial series, for `|κ| = 1`.
#[derive(Debug, Clone)]
pub struct CoulombField {
    epsilon: f64,
    q: f64,
    beta: f64,
    gamma: Multivector,
    parts: Vec<(Multivector, Multivector)>,
}

impl CoulombField {
    pub fn new(p: &CoulombParams, series: &RadialSeries) -> Result<Self> {
        if p.kappa.abs() != 1 {
            return Err(Error::InvalidParameter(format!(
                "three-dimensional field built only for |κ| = 1, got κ = {}",
                p.kappa
            )));
        }
        let e0 = cl32::e(0);
        let e3 = cl32::e(3);
        let k = p.kappa as f64;
        let parts = series
            .coefficients
            .iter()
            .map(|c| {
                let c = *c.as_multivector();
                let zc = (e0 * c) * e0;
                let a = (c + zc.scale(k)).scale(0.5);
                let x = (c - zc.scale(k)).scale(0.5);
                (a, e3 * x)
            })
            .collect();
        Ok(CoulombField {
            epsilon: series.epsilon,
            q: series.q,
            beta: series.beta,
            gamma: p.gamma.as_multivector(),
            parts,
        })
    }

    fn phase(&self, t: f64) -> Multivector {
        let (s, c) = (self.epsilon * t).sin_cos();
        cl32::one().scale(c) - self.gamma.scale(s)
    }

    fn spatial(&self, x: &FiveVector) -> (f64, Multivector) {
        let r = x.spatial_norm();
        let e_r = FiveVector::new(0.0, x[1] / r, x[2] / r, x[3] / r, 0.0).to_multivector();
        (r, e_r)
    }
}

impl Field5 for CoulombField {
    fn value(&self, x: &FiveVector) -> Multivector {
        let (r, e_r) = self.spatial(x);
        let mut u = Multivector::zero(cl32::SIG);
        for (p, (a, b)) in self.parts.iter().enumerate() {
            let g = r.powf(p as f64 + self.q - 1.0) * (self.beta * r).exp();
            u += (*a + &e_r * b).scale(g);
        }
        u * self.phase(x[0])
    }

    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        match axis {
            0 => {
                let (s, c) = (self.epsilon * x[0]).sin_cos();
                let d_phase = (cl32::one().scale(-s) - self.gamma.scale(c)).scale(self.epsilon);
                let v = self.value(&FiveVector::new(0.0, x[1], x[2], x[3], 0.0));
                v * d_phase
            }
            1..=3 => {
                let (r, e_r) = self.spatial(x);
                let xi = x[axis];
                let d_er = (cl32::e(axis) - e_r.scale(xi / r)).scale(1.0 / r);
                let mut du = Multivector::zero(cl32::SIG);
                for (p, (a, b)) in self.parts.iter().enumerate() {
                    let s = p as f64 + self.q - 1.0;
                    let g = r.powf(s) * (self.beta * r).exp();
                    let dg = (s / r + self.beta) * g * xi / r;
                    du += (*a + &e_r * b).scale(dg) + (&d_er * b).scale(g);
                }
                du * self.phase(x[0])
            }
            _ => Multivector::zero(cl32::SIG),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cl32::{e, one};

    fn id() -> LinearOperator16 {
        LinearOperator16::identity()
    }

    #[test]
    fn zeta_and_eta_are_commuting_involutions() {
        let z = zeta_op();
        assert_eq!(&z * &z, MultivectorOperator::identity());
        for g in [GammaChoice::E12, GammaChoice::E0E] {
            let h = eta_op(g).unwrap();
            assert_eq!(&h * &h, MultivectorOperator::identity());
            assert_eq!(&h * &z, &z * &h);
        }
        assert!(eta_op(GammaChoice::Superposition(0.4)).is_err());
    }

    #[test]
    fn s_and_t_algebra() {
        let (kappa, lambda, m, eps) = (-2, 0.37, 1.3, 0.9);
        for g in [GammaChoice::E12, GammaChoice::E0E] {
            let s = s_op(kappa, lambda, g, &e(3)).unwrap();
            let t = t_op(m, eps, g, &e(3)).unwrap();
            let s2 = id().scale(4.0 - lambda * lambda);
            let t2 = id().scale(m * m - eps * eps);
            assert!((&s * &s).max_abs_diff(&s2) < 1e-14);
            assert!((&t * &t).max_abs_diff(&t2) < 1e-14);
            let anti = &(&s * &t) + &(&t * &s);
            assert!(anti.max_abs_diff(&id().scale(2.0 * lambda * eps)) < 1e-14);
        }
    }

    #[test]
    fn s_without_coupling_and_t_at_rest() {
        let s = s_op(3, 0.0, GammaChoice::E12, &e(3)).unwrap();
        let z = zeta_op().restrict_even().unwrap();
        assert_eq!(s, z.scale(3.0));
        let t = t_op(2.0, 0.0, GammaChoice::E0E, &e(1)).unwrap();
        let l = MultivectorOperator::left(&(cl32::pseudoscalar() * e(1))).restrict_even().unwrap();
        assert_eq!(t, l.scale(2.0));
    }

    #[test]
    fn s_eigenvalues() {
        let s = s_op(-1, 0.5, GammaChoice::E12, &e(3)).unwrap();
        let q = (1.0f64 - 0.25).sqrt();
        for ev in s.eigenvalues() {
            assert!(ev.im.abs() < 1e-10);
            assert!((ev.re.abs() - q).abs() < 1e-10, "{ev}");
        }
    }

    #[test]
    fn direction_validation() {
        assert!(s_op(1, 0.1, GammaChoice::E12, &e(0)).is_err());
        assert!(s_op(1, 0.1, GammaChoice::E12, &e(2).scale(2.0)).is_err());
        assert!(t_op(1.0, 0.5, GammaChoice::E12, &e(4)).is_err());
        assert!(radial_direction([0.0; 3]).is_err());
        assert!(s_op(1, 0.1, GammaChoice::E12, &radial_direction([1.0, 2.0, 2.0]).unwrap()).is_ok());
    }

    #[test]
    fn params_domain() {
        assert!(matches!(
            CoulombParams::new(1.0, 1.2, 1, 0, GammaChoice::E12),
            Err(Error::CouplingDomain { .. })
        ));
        assert!(matches!(CoulombParams::new(1.0, 0.1, 0, 0, GammaChoice::E12), Err(Error::ZeroKappa)));
        assert!(CoulombParams::new(0.0, 0.1, 1, 0, GammaChoice::E12).is_err());
        assert!(CoulombParams::new(1.0, 1.2, -2, 0, GammaChoice::E12).is_ok());
    }

    #[test]
    fn quantum_numbers_and_labels() {
        assert_eq!(quantum_numbers(-1, 0).unwrap(), (1, 0.5));
        assert_eq!(quantum_numbers(-2, 0).unwrap(), (2, 1.5));
        assert_eq!(quantum_numbers(1, 1).unwrap(), (2, 0.5));
        assert!(quantum_numbers(0, 1).is_err());
        assert_eq!(spectroscopic_label(-1, 0).unwrap(), "1s1/2");
        assert_eq!(spectroscopic_label(-1, 1).unwrap(), "2s1/2");
        assert_eq!(spectroscopic_label(1, 1).unwrap(), "2p1/2");
        assert_eq!(spectroscopic_label(-2, 0).unwrap(), "2p3/2");
        assert_eq!(spectroscopic_label(2, 1).unwrap(), "3d3/2");
    }

    #[test]
    fn closed_form_limits() {
        let p = CoulombParams::new(1.0, ALPHA, -1, 0, GammaChoice::E12).unwrap();
        let eps = sommerfeld_energy(&p).unwrap();
        assert!((eps - (1.0 - ALPHA * ALPHA).sqrt()).abs() < 1e-15);
        assert!(quantisation_residual(&p, eps).abs() < 1e-12);
        let free = CoulombParams::new(2.0, 1e-12, -1, 3, GammaChoice::E12).unwrap();
        assert!((sommerfeld_energy(&free).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn series_terminates_at_closed_form() {
        for (kappa, xi) in [(-1, 0), (-1, 1), (1, 1), (-2, 0), (2, 2)] {
            let p = CoulombParams::new(1.0, 0.3, kappa, xi, GammaChoice::E12).unwrap();
            let series = solve_radial(&p).unwrap();
            let exact = sommerfeld_energy(&p).unwrap();
            assert!(((series.epsilon - exact) / exact).abs() < 1e-9, "κ={kappa} ξ={xi}");
            assert_eq!(series.coefficients.len(), xi as usize + 1);
            let r = series.residuals(&p).unwrap();
            assert!(r.indicial < 1e-9 && r.recurrence < 1e-9 && r.termination < 1e-7, "{r:?}");
        }
    }

    #[test]
    fn radial_field_angular_identity() {
        // Φ = f(r) c with ζc = κc and κ = ±1.
        for kappa in [-1, 1] {
            let c = one() + cl32::blade(&[1, 2]).scale(0.5) + cl32::blade(&[0, 1]);
            let c = (c + ((e(0) * c) * e(0)).scale(kappa as f64)).scale(0.5);
            let field = crate::field::AnalyticField::new(
                move |x: &FiveVector| c.scale((-x.spatial_norm()).exp()),
                move |a, x: &FiveVector| {
                    if (1..=3).contains(&a) {
                        let r = x.spatial_norm();
                        c.scale(-(-r).exp() * x[a] / r)
                    } else {
                        Multivector::zero(cl32::SIG)
                    }
                },
            );
            let x = FiveVector::new(0.0, 0.3, -0.5, 0.9, 0.0);
            assert!(angular_reduction_check(kappa, &field, &x).norm_inf() < 1e-14);
            assert!(angular_reduction_check(-kappa, &field, &x).norm_inf() > 1e-3);
        }
        let zero = crate::field::ConstantField(Multivector::zero(cl32::SIG));
        assert!(angular_reduction_check(2, &zero, &FiveVector::new(0.0, 1.0, 0.0, 0.0, 0.0)).is_zero());
    }
}
