//! Multivector-valued fields over five-dimensional spacetime.
//!
//! Coordinates are `x^A` for `A = 0..4`: `x^0` is ordinary time, `x^1..x^3`
//! are space and `x^4` is the second time. Natural units throughout.
//!
//! A field carries its own derivative contract. Analytic fields return exact
//! partials; [`SampledField`] wraps a plain function and differentiates it by
//! central differences with a declared step, accurate to `O(h²)`.

use std::ops::{Add, Index, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::{cl32, Multivector, Signature};

/// Metric of flat five-dimensional spacetime, `diag(-1, +1, +1, +1, -1)`.
pub const METRIC: [f64; 5] = [-1.0, 1.0, 1.0, 1.0, -1.0];

/// Default finite-difference step for sampled fields.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Contravariant components `v^A` of a five-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FiveVector(pub [f64; 5]);

impl FiveVector {
    pub const ZERO: FiveVector = FiveVector([0.0; 5]);

    pub fn new(t: f64, x: f64, y: f64, z: f64, w: f64) -> Self {
        FiveVector([t, x, y, z, w])
    }

    /// Unit coordinate vector along axis `a`.
    pub fn axis(a: usize, length: f64) -> Self {
        let mut v = [0.0; 5];
        v[a] = length;
        FiveVector(v)
    }

    /// `u·v = g_AB u^A v^B = u¹v¹ + u²v² + u³v³ − u⁰v⁰ − u⁴v⁴`.
    pub fn dot(&self, other: &FiveVector) -> f64 {
        (0..5).map(|a| METRIC[a] * self.0[a] * other.0[a]).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    /// Covariant components `v_A = g_AA v^A`.
    pub fn lower(&self) -> [f64; 5] {
        std::array::from_fn(|a| METRIC[a] * self.0[a])
    }

    /// Euclidean length of the spatial part.
    pub fn spatial_norm(&self) -> f64 {
        (self.0[1] * self.0[1] + self.0[2] * self.0[2] + self.0[3] * self.0[3]).sqrt()
    }

    /// The grade-1 element `v^A e_A` of `Cl(3,2)`.
    pub fn to_multivector(&self) -> Multivector {
        Multivector::vector(Signature::CL32, &self.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        FiveVector(self.0.map(|c| c * s))
    }
}

impl Index<usize> for FiveVector {
    type Output = f64;
    fn index(&self, a: usize) -> &f64 {
        &self.0[a]
    }
}

impl Add for FiveVector {
    type Output = FiveVector;
    fn add(self, rhs: FiveVector) -> FiveVector {
        FiveVector(std::array::from_fn(|a| self.0[a] + rhs.0[a]))
    }
}

impl Sub for FiveVector {
    type Output = FiveVector;
    fn sub(self, rhs: FiveVector) -> FiveVector {
        FiveVector(std::array::from_fn(|a| self.0[a] - rhs.0[a]))
    }
}

impl Mul<f64> for FiveVector {
    type Output = FiveVector;
    fn mul(self, rhs: f64) -> FiveVector {
        self.scale(rhs)
    }
}

/// A multivector-valued field `Φ(x)` with partial derivatives `∂_A Φ`
/// (lower index, i.e. `∂/∂x^A`).
pub trait Field5: Send + Sync {
    fn value(&self, x: &FiveVector) -> Multivector;

    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector;

    /// `∂^A Φ = g^AA ∂_A Φ`.
    fn partial_upper(&self, axis: usize, x: &FiveVector) -> Multivector {
        self.partial(axis, x).scale(METRIC[axis])
    }
}

impl<F: Field5 + ?Sized> Field5 for &F {
    fn value(&self, x: &FiveVector) -> Multivector {
        (**self).value(x)
    }
    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        (**self).partial(axis, x)
    }
}

impl<F: Field5 + ?Sized> Field5 for Box<F> {
    fn value(&self, x: &FiveVector) -> Multivector {
        (**self).value(x)
    }
    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        (**self).partial(axis, x)
    }
}

/// `Σ_{A ∈ axes} e_A ∂^A Φ`.
pub fn vector_derivative<F: Field5 + ?Sized>(
    field: &F,
    x: &FiveVector,
    axes: std::ops::Range<usize>,
) -> Multivector {
    let mut out = Multivector::zero(Signature::CL32);
    for a in axes {
        out += cl32::e(a) * field.partial_upper(a, x);
    }
    out
}

/// Five-dimensional `e_A ∂^A Φ`.
pub fn dirac5<F: Field5 + ?Sized>(field: &F, x: &FiveVector) -> Multivector {
    vector_derivative(field, x, 0..5)
}

/// Four-dimensional `e_μ ∂^μ Φ`.
pub fn dirac4<F: Field5 + ?Sized>(field: &F, x: &FiveVector) -> Multivector {
    vector_derivative(field, x, 0..4)
}

/// A field known only through point evaluations; partials are central
/// differences with step `h`.
pub struct SampledField<F> {
    f: F,
    h: f64,
}

impl<F> SampledField<F>
where
    F: Fn(&FiveVector) -> Multivector + Send + Sync,
{
    pub fn new(f: F, h: f64) -> Self {
        assert!(h > 0.0, "finite-difference step must be positive");
        SampledField { f, h }
    }

    pub fn with_default_step(f: F) -> Self {
        Self::new(f, DEFAULT_STEP)
    }

    pub fn step(&self) -> f64 {
        self.h
    }
}

impl<F> Field5 for SampledField<F>
where
    F: Fn(&FiveVector) -> Multivector + Send + Sync,
{
    fn value(&self, x: &FiveVector) -> Multivector {
        (self.f)(x)
    }

    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        let d = FiveVector::axis(axis, self.h);
        ((self.f)(&(*x + d)) - (self.f)(&(*x - d))).scale(0.5 / self.h)
    }
}

/// A field defined by closures for its value and its exact partials.
pub struct AnalyticField<V, D> {
    value: V,
    partial: D,
}

impl<V, D> AnalyticField<V, D>
where
    V: Fn(&FiveVector) -> Multivector + Send + Sync,
    D: Fn(usize, &FiveVector) -> Multivector + Send + Sync,
{
    pub fn new(value: V, partial: D) -> Self {
        AnalyticField { value, partial }
    }
}

impl<V, D> Field5 for AnalyticField<V, D>
where
    V: Fn(&FiveVector) -> Multivector + Send + Sync,
    D: Fn(usize, &FiveVector) -> Multivector + Send + Sync,
{
    fn value(&self, x: &FiveVector) -> Multivector {
        (self.value)(x)
    }
    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        (self.partial)(axis, x)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ConstantField(pub Multivector);

impl Field5 for ConstantField {
    fn value(&self, _x: &FiveVector) -> Multivector {
        self.0
    }
    fn partial(&self, _axis: usize, _x: &FiveVector) -> Multivector {
        Multivector::zero(self.0.signature())
    }
}

/// Image of a field under a pointwise linear map `L`; partials are `L(∂_A Φ)`
/// exactly.
pub struct MappedField<F, L> {
    inner: F,
    map: L,
}

impl<F, L> MappedField<F, L>
where
    F: Field5,
    L: Fn(&Multivector) -> Multivector + Send + Sync,
{
    pub fn new(inner: F, map: L) -> Self {
        MappedField { inner, map }
    }
}

impl<F, L> Field5 for MappedField<F, L>
where
    F: Field5,
    L: Fn(&Multivector) -> Multivector + Send + Sync,
{
    fn value(&self, x: &FiveVector) -> Multivector {
        (self.map)(&self.inner.value(x))
    }
    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        (self.map)(&self.inner.partial(axis, x))
    }
}

/// Pointwise sum of two fields.
pub struct SumField<A, B>(pub A, pub B);

impl<A: Field5, B: Field5> Field5 for SumField<A, B> {
    fn value(&self, x: &FiveVector) -> Multivector {
        self.0.value(x) + self.1.value(x)
    }
    fn partial(&self, axis: usize, x: &FiveVector) -> Multivector {
        self.0.partial(axis, x) + self.1.partial(axis, x)
    }
}

/// Regular grid of `n^5` points centred on `center` with spacing `h`.
pub fn grid5(center: FiveVector, n: usize, h: f64) -> Vec<FiveVector> {
    let half = (n as f64 - 1.0) / 2.0;
    let mut pts = Vec::with_capacity(n.pow(5));
    let offset = |i: usize| (i as f64 - half) * h;
    for i0 in 0..n {
        for i1 in 0..n {
            for i2 in 0..n {
                for i3 in 0..n {
                    for i4 in 0..n {
                        pts.push(
                            center
                                + FiveVector([
                                    offset(i0),
                                    offset(i1),
                                    offset(i2),
                                    offset(i3),
                                    offset(i4),
                                ]),
                        );
                    }
                }
            }
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cl32::{blade, e};

    #[test]
    fn metric_dot() {
        let k = FiveVector::new(2.0, 1.0, 1.0, 1.0, 1.0);
        assert_eq!(k.norm_sq(), 3.0 - 4.0 - 1.0);
        assert_eq!(k.lower(), [-2.0, 1.0, 1.0, 1.0, -1.0]);
    }

    #[test]
    fn sampled_partials_are_second_order() {
        // Φ = sin(x1) e1e2 + x4² e0e4
        let f = |x: &FiveVector| blade(&[1, 2]).scale(x[1].sin()) + blade(&[0, 4]).scale(x[4] * x[4]);
        let x = FiveVector::new(0.1, 0.3, -0.2, 0.4, 0.7);
        for h in [1e-2, 5e-3] {
            let field = SampledField::new(f, h);
            let d1 = field.partial(1, &x);
            let err = (d1 - blade(&[1, 2]).scale(x[1].cos())).norm_inf();
            assert!(err < 0.2 * h * h, "h={h} err={err}");
            let d4 = field.partial(4, &x);
            assert!((d4 - blade(&[0, 4]).scale(2.0 * x[4])).norm_inf() < 1e-12);
        }
    }

    #[test]
    fn raised_partials_flip_timelike_axes() {
        let f = AnalyticField::new(
            |x: &FiveVector| e(1).scale(x[0] + x[1] + x[4]),
            |_a, _x: &FiveVector| e(1),
        );
        let x = FiveVector::ZERO;
        assert_eq!(f.partial_upper(0, &x), -e(1));
        assert_eq!(f.partial_upper(1, &x), e(1));
        assert_eq!(f.partial_upper(4, &x), -e(1));
    }

    #[test]
    fn grid_is_centred() {
        let pts = grid5(FiveVector::ZERO, 3, 0.5);
        assert_eq!(pts.len(), 243);
        assert_eq!(pts[0], FiveVector([-0.5; 5]));
        assert_eq!(pts[121], FiveVector::ZERO);
    }
}
