//! Rejection/projection with respect to the second time direction `e4`.
//!
//! `(X)± = ½(X ± e⁴ X e4)` with the raised vector `e⁴ = g⁴⁴ e4 = −e4`. On an
//! even element this separates the blades without an `e4` factor (`+`) from
//! those with one (`−`). On an odd element the roles swap, which is what
//! makes `(e_μ Φ)± = e_μ Φ∓` hold.

use crate::algebra::{cl32, Multivector, Spinor};
use crate::error::{Error, Result};
use crate::field::{Field5, FiveVector};

/// `Φ₊` (no `e4` factor) and `Φ₋` (every blade contains `e4`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionPair {
    pub plus: Spinor,
    pub minus: Spinor,
}

impl ProjectionPair {
    pub fn sum(&self) -> Spinor {
        self.plus + self.minus
    }
}

/// `Ξ₊`, `Ξ₋` for `Ξ = Φ(1 − e3e4)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiPair {
    pub xi_plus: Spinor,
    pub xi_minus: Spinor,
}

impl XiPair {
    pub fn xi(&self) -> Spinor {
        self.xi_plus + self.xi_minus
    }
}

/// `e⁴ X e4`.
fn reflect_e4(x: &Multivector) -> Multivector {
    (&cl32::e_upper(4) * x) * cl32::e(4)
}

/// `(X)+` for any multivector, straight from the sandwich definition.
pub fn plus_part(x: &Multivector) -> Multivector {
    (*x + reflect_e4(x)).scale(0.5)
}

/// `(X)−` for any multivector.
pub fn minus_part(x: &Multivector) -> Multivector {
    (*x - reflect_e4(x)).scale(0.5)
}

/// Both halves of an arbitrary (possibly odd) multivector.
pub fn pm_split(x: &Multivector) -> (Multivector, Multivector) {
    (plus_part(x), minus_part(x))
}

pub fn project_pm(phi: &Multivector) -> Result<ProjectionPair> {
    let spinor = Spinor::try_from(*phi)?;
    let (plus, minus) = pm_split(spinor.as_multivector());
    Ok(ProjectionPair {
        plus: Spinor::try_from(plus)?,
        minus: Spinor::try_from(minus)?,
    })
}

/// `e3e4`, which squares to `+1`.
pub fn e3e4() -> Multivector {
    cl32::blade(&[3, 4])
}

/// The idempotent `½(1 − e3e4)`.
pub fn xi_idempotent() -> Multivector {
    (cl32::one() - e3e4()).scale(0.5)
}

/// `Ξ = Φ(1 − e3e4)`, returned through its components
/// `Ξ± = Φ± − Φ∓ e3e4`.
pub fn xi_transform(phi: &Multivector) -> Result<XiPair> {
    let pair = project_pm(phi)?;
    let j = e3e4();
    let p = *pair.plus.as_multivector();
    let m = *pair.minus.as_multivector();
    Ok(XiPair {
        xi_plus: Spinor::try_from(p - m * j)?,
        xi_minus: Spinor::try_from(m - p * j)?,
    })
}

/// `Ξ` computed directly as a product, without going through the split.
pub fn xi_direct(phi: &Multivector) -> Multivector {
    phi * &(cl32::one() - e3e4())
}

/// Sup-norm of `∂⁴Φ` over the samples.
pub fn max_d4<F: Field5 + ?Sized>(field: &F, samples: &[FiveVector]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    Ok(samples
        .iter()
        .map(|x| field.partial_upper(4, x).norm_inf())
        .fold(0.0, f64::max))
}

/// `true` iff `sup ‖∂⁴Φ‖∞ < tolerance` over the samples: no dependence on the
/// second time.
pub fn cylinder_check<F: Field5 + ?Sized>(
    field: &F,
    samples: &[FiveVector],
    tolerance: f64,
) -> Result<bool> {
    Ok(max_d4(field, samples)? < tolerance)
}
