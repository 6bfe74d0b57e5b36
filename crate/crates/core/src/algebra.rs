//! Dense real Clifford algebras with a runtime metric signature.
//!
//! Basis blades are bitmasks over the generators `e0..e{n-1}` (bit `A` set
//! means `e_A` is a factor, factors kept in ascending index order). Blade
//! products are resolved with integer sign bookkeeping, so every identity
//! that only involves signs (anticommutation, pseudoscalar centrality,
//! even-subalgebra closure) holds exactly; only the coefficients are
//! floating point.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 6;
/// Coefficient storage size (`2^MAX_GENERATORS`).
pub const MAX_BLADES: usize = 1 << MAX_GENERATORS;

/// Metric signature of a diagonal Clifford algebra.
///
/// Stored as a generator count plus a bitmask of the generators whose square
/// is `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    dim: u8,
    negative_mask: u8,
}

impl Signature {
    /// `Cl(3,2)`: `e1, e2, e3` square to `+1`; `e0` (ordinary time) and `e4`
    /// (the second time) square to `-1`.
    pub const CL32: Signature = Signature {
        dim: 5,
        negative_mask: 0b1_0001,
    };

    /// `Cl(3,1)`: Minkowski spacetime with the `+++-` convention, `e0` timelike.
    pub const CL31: Signature = Signature {
        dim: 4,
        negative_mask: 0b0001,
    };

    /// `Cl(4,1)`: same layout as [`Signature::CL32`] but with a spacelike `e4`.
    pub const CL41: Signature = Signature {
        dim: 5,
        negative_mask: 0b0_0001,
    };

    /// Builds a signature from per-generator squares, `signs[A] = e_A²`.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.len() > MAX_GENERATORS {
            return Err(Error::UnsupportedDimension(signs.len()));
        }
        let mut negative_mask = 0u8;
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => negative_mask |= 1 << i,
                other => return Err(Error::InvalidGeneratorSquare(other)),
            }
        }
        Ok(Signature {
            dim: signs.len() as u8,
            negative_mask,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn plus_count(&self) -> usize {
        self.dim() - self.minus_count()
    }

    pub fn minus_count(&self) -> usize {
        self.negative_mask.count_ones() as usize
    }

    /// `e_A² = g_AA`, either `+1` or `-1`.
    pub fn generator_sign(&self, a: usize) -> i8 {
        assert!(a < self.dim(), "generator e{a} out of range for {self}");
        if self.negative_mask >> a & 1 == 1 {
            -1
        } else {
            1
        }
    }

    /// Number of basis blades, `2^dim`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim
    }

    /// Mask of the top-grade blade.
    pub fn pseudoscalar_mask(&self) -> u8 {
        (self.blade_count() - 1) as u8
    }

    /// Even-grade blade masks in ascending order. For `Cl(3,2)` this is the
    /// fixed 16-element coordinate basis used by spinor operators.
    pub fn even_blades(&self) -> Vec<BasisBlade> {
        (0..self.blade_count() as u8)
            .map(BasisBlade)
            .filter(|b| b.grade() % 2 == 0)
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.plus_count(), self.minus_count())
    }
}

/// A canonical basis blade: the ascending product of the generators whose
/// bits are set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisBlade(pub u8);

impl BasisBlade {
    pub const SCALAR: BasisBlade = BasisBlade(0);

    pub fn generator(a: usize) -> Self {
        BasisBlade(1 << a)
    }

    pub fn mask(&self) -> u8 {
        self.0
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0 >> a & 1 == 1
    }

    /// Generator indices in ascending order.
    pub fn factors(&self) -> impl Iterator<Item = usize> + '_ {
        (0..8).filter(move |&a| self.contains(a))
    }
}

impl fmt::Display for BasisBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for a in self.factors() {
            write!(f, "e{a}")?;
        }
        Ok(())
    }
}

/// Number of transpositions needed to merge the factor lists of `a` and `b`
/// into ascending order, mod 2, as a sign.
fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two canonical blades: `e_a e_b = sign · e_{a XOR b}`.
///
/// The sign is the transposition parity of interleaving the two factor lists
/// times `g_AA` for every generator that appears in both and is annihilated.
pub fn blade_product(a: BasisBlade, b: BasisBlade, sig: Signature) -> (i8, BasisBlade) {
    let mut sign = reorder_sign(a.0, b.0);
    if (a.0 & b.0 & sig.negative_mask).count_ones() & 1 == 1 {
        sign = -sign;
    }
    (sign, BasisBlade(a.0 ^ b.0))
}

/// Reversion sign `(-1)^{k(k-1)/2}` for a grade-`k` blade.
fn reverse_sign(grade: usize) -> f64 {
    if (grade * grade.saturating_sub(1) / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// A general element of a Clifford algebra: one real coefficient per basis
/// blade, indexed by blade mask.
#[derive(Clone, Copy, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: [f64; MAX_BLADES],
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector<{}>({})", self.sig, self)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (blade, c) in self.terms() {
            if first {
                write!(f, "{c}")?;
            } else if c < 0.0 {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if blade.0 != 0 {
                write!(f, "*{blade}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: [0.0; MAX_BLADES],
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        Self::basis(sig, BasisBlade::SCALAR, value)
    }

    pub fn basis(sig: Signature, blade: BasisBlade, coeff: f64) -> Self {
        assert!(
            (blade.0 as usize) < sig.blade_count(),
            "blade {blade} outside {sig}"
        );
        let mut m = Self::zero(sig);
        m.coeffs[blade.0 as usize] = coeff;
        m
    }

    /// The unit vector `e_a`.
    pub fn generator(sig: Signature, a: usize) -> Self {
        Self::basis(sig, BasisBlade::generator(a), 1.0)
    }

    /// Ordered product of generators, e.g. `product_of(sig, &[3, 4])` is `e3e4`.
    /// Repeated or out-of-order indices are reduced through the metric.
    pub fn product_of(sig: Signature, generators: &[usize]) -> Self {
        generators
            .iter()
            .fold(Self::scalar(sig, 1.0), |acc, &a| acc * Self::generator(sig, a))
    }

    /// Grade-1 element `Σ v[A] e_A`.
    pub fn vector(sig: Signature, components: &[f64]) -> Self {
        assert!(components.len() <= sig.dim());
        let mut m = Self::zero(sig);
        for (a, &c) in components.iter().enumerate() {
            m.coeffs[1 << a] = c;
        }
        m
    }

    /// The unit pseudoscalar `e0 ∧ e1 ∧ … ∧ e{n-1}`.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::basis(sig, BasisBlade(sig.pseudoscalar_mask()), 1.0)
    }

    pub fn from_coeffs(sig: Signature, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::CoefficientLength {
                expected: sig.blade_count(),
                found: coeffs.len(),
            });
        }
        let mut m = Self::zero(sig);
        m.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        Ok(m)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Coefficients for the `2^dim` blades of this signature.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.sig.blade_count()]
    }

    pub fn get(&self, blade: BasisBlade) -> f64 {
        self.coeffs[blade.0 as usize]
    }

    pub fn set(&mut self, blade: BasisBlade, value: f64) {
        assert!((blade.0 as usize) < self.sig.blade_count());
        self.coeffs[blade.0 as usize] = value;
    }

    /// Nonzero terms in ascending blade order.
    pub fn terms(&self) -> impl Iterator<Item = (BasisBlade, f64)> + '_ {
        self.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(i, &c)| (BasisBlade(i as u8), c))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(self.sig, other.sig))
        }
    }

    /// Bilinear extension of [`blade_product`].
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.sig.blade_count();
        let mut out = Self::zero(self.sig);
        for i in 0..n {
            let a = self.coeffs[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..n {
                let b = other.coeffs[j];
                if b == 0.0 {
                    continue;
                }
                let (s, k) = blade_product(BasisBlade(i as u8), BasisBlade(j as u8), self.sig);
                out.coeffs[k.0 as usize] += f64::from(s) * a * b;
            }
        }
        Ok(out)
    }

    /// Outer product: the grade-raising part of the blade products.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.sig.blade_count();
        let mut out = Self::zero(self.sig);
        for i in 0..n {
            let a = self.coeffs[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..n {
                let b = other.coeffs[j];
                if b == 0.0 || i & j != 0 {
                    continue;
                }
                let (s, k) = blade_product(BasisBlade(i as u8), BasisBlade(j as u8), self.sig);
                out.coeffs[k.0 as usize] += f64::from(s) * a * b;
            }
        }
        Ok(out)
    }

    pub fn grade_part(&self, k: usize) -> Self {
        let mut out = Self::zero(self.sig);
        for i in 0..self.sig.blade_count() {
            if (i as u8).count_ones() as usize == k {
                out.coeffs[i] = self.coeffs[i];
            }
        }
        out
    }

    pub fn even_part(&self) -> Self {
        self.filter_blades(|b| b.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter_blades(|b| b.grade() % 2 == 1)
    }

    /// Keeps the coefficients of blades satisfying `keep`, zeroing the rest.
    pub fn filter_blades(&self, keep: impl Fn(BasisBlade) -> bool) -> Self {
        let mut out = Self::zero(self.sig);
        for i in 0..self.sig.blade_count() {
            if keep(BasisBlade(i as u8)) {
                out.coeffs[i] = self.coeffs[i];
            }
        }
        out
    }

    /// Reverses the factor order of every blade.
    pub fn reverse(&self) -> Self {
        let mut out = *self;
        for i in 0..self.sig.blade_count() {
            out.coeffs[i] *= reverse_sign((i as u8).count_ones() as usize);
        }
        out
    }

    /// `true` when every odd-grade coefficient is exactly zero.
    pub fn is_even(&self) -> bool {
        self.terms().all(|(b, _)| b.grade() % 2 == 0)
    }

    /// `true` when only grade-`k` coefficients are nonzero.
    pub fn is_grade(&self, k: usize) -> bool {
        self.terms().all(|(b, _)| b.grade() == k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0.0)
    }

    /// Largest coefficient magnitude.
    pub fn norm_inf(&self) -> f64 {
        self.coeffs().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm2(&self) -> f64 {
        self.coeffs().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(self.geometric_product(other)? - other.geometric_product(self)?)
    }

    /// Multiplies every coefficient by `s`.
    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for c in out.coeffs.iter_mut() {
            *c *= s;
        }
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        self.check_same(&rhs).expect("multivector addition");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        self -= rhs;
        self
    }
}

impl SubAssign for Multivector {
    fn sub_assign(&mut self, rhs: Multivector) {
        self.check_same(&rhs).expect("multivector subtraction");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

/// Geometric product. Panics on a signature mismatch; use
/// [`Multivector::geometric_product`] for the fallible form.
impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("geometric product")
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.geometric_product(&rhs).expect("geometric product")
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl MulAssign<f64> for Multivector {
    fn mul_assign(&mut self, rhs: f64) {
        *self = self.scale(rhs);
    }
}

/// An even-grade multivector. In `Cl(3,2)` this has 16 real coefficients,
/// the real form of an eight-component complex spinor.
#[derive(Clone, Copy, PartialEq)]
pub struct Spinor(Multivector);

impl fmt::Debug for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spinor({})", self.0)
    }
}

impl TryFrom<Multivector> for Spinor {
    type Error = Error;

    fn try_from(m: Multivector) -> Result<Self> {
        let odd: Vec<BasisBlade> = m
            .terms()
            .filter(|(b, _)| b.grade() % 2 == 1)
            .map(|(b, _)| b)
            .collect();
        if odd.is_empty() {
            Ok(Spinor(m))
        } else {
            Err(Error::NotEven(odd))
        }
    }
}

impl From<Spinor> for Multivector {
    fn from(s: Spinor) -> Multivector {
        s.0
    }
}

impl Spinor {
    pub fn zero(sig: Signature) -> Self {
        Spinor(Multivector::zero(sig))
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.0
    }

    /// Coefficients on [`Signature::even_blades`], in that order.
    pub fn coords(&self) -> Vec<f64> {
        self.0
            .signature()
            .even_blades()
            .iter()
            .map(|&b| self.0.get(b))
            .collect()
    }

    pub fn from_coords(sig: Signature, coords: &[f64]) -> Result<Self> {
        let blades = sig.even_blades();
        if coords.len() != blades.len() {
            return Err(Error::CoefficientLength {
                expected: blades.len(),
                found: coords.len(),
            });
        }
        let mut m = Multivector::zero(sig);
        for (&b, &c) in blades.iter().zip(coords) {
            m.set(b, c);
        }
        Ok(Spinor(m))
    }
}

impl Mul for Spinor {
    type Output = Spinor;
    fn mul(self, rhs: Spinor) -> Spinor {
        Spinor(self.0 * rhs.0)
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(self, rhs: Spinor) -> Spinor {
        Spinor(self.0 + rhs.0)
    }
}

impl Sub for Spinor {
    type Output = Spinor;
    fn sub(self, rhs: Spinor) -> Spinor {
        Spinor(self.0 - rhs.0)
    }
}

/// Shorthand constructors for the `Cl(3,2)` elements that recur throughout
/// the crate.
pub mod cl32 {
    use super::{Multivector, Signature};

    pub const SIG: Signature = Signature::CL32;

    pub fn one() -> Multivector {
        Multivector::scalar(SIG, 1.0)
    }

    pub fn e(a: usize) -> Multivector {
        Multivector::generator(SIG, a)
    }

    /// Ordered product of generators.
    pub fn blade(generators: &[usize]) -> Multivector {
        Multivector::product_of(SIG, generators)
    }

    /// `E = e0e1e2e3e4`.
    pub fn pseudoscalar() -> Multivector {
        Multivector::pseudoscalar(SIG)
    }

    /// `e^A = g^AA e_A`.
    pub fn e_upper(a: usize) -> Multivector {
        e(a).scale(f64::from(SIG.generator_sign(a)))
    }
}
