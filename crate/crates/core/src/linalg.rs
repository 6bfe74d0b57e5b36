//! Linear operators on `Cl(3,2)` and small dense decompositions.
//!
//! Operators built from left/right multiplications are represented as
//! matrices on blade coordinates. [`MultivectorOperator`] acts on all 32
//! blades; [`LinearOperator16`] acts on the 16 even blades in
//! [`Signature::even_blades`] order. Some building blocks (right
//! multiplication by an odd element, left multiplication by `e_r`) swap
//! parity, so composites are assembled on the full algebra and then
//! restricted.

use std::ops::{Add, Mul, Sub};

use nalgebra::{Complex, DMatrix, DVector, SMatrix};

use crate::algebra::{cl32, BasisBlade, Multivector, Signature, Spinor};
use crate::error::{Error, Result};

pub type Matrix32 = SMatrix<f64, 32, 32>;
pub type Matrix16 = SMatrix<f64, 16, 16>;

/// A real-linear map on `Cl(3,2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultivectorOperator(pub Matrix32);

impl MultivectorOperator {
    /// Matrix of `f` on the blade basis. `f` must be linear.
    pub fn from_fn(f: impl Fn(&Multivector) -> Multivector) -> Self {
        let mut m = Matrix32::zeros();
        for j in 0..32 {
            let image = f(&Multivector::basis(cl32::SIG, BasisBlade(j as u8), 1.0));
            for (i, &c) in image.coeffs().iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        MultivectorOperator(m)
    }

    pub fn identity() -> Self {
        MultivectorOperator(Matrix32::identity())
    }

    /// `F ↦ aF`.
    pub fn left(a: &Multivector) -> Self {
        Self::from_fn(|f| a * f)
    }

    /// `F ↦ Fa`.
    pub fn right(a: &Multivector) -> Self {
        Self::from_fn(|f| f * a)
    }

    pub fn scale(&self, s: f64) -> Self {
        MultivectorOperator(self.0 * s)
    }

    pub fn apply(&self, x: &Multivector) -> Multivector {
        let v = nalgebra::SVector::<f64, 32>::from_column_slice(x.coeffs());
        let out = self.0 * v;
        Multivector::from_coeffs(cl32::SIG, out.as_slice()).expect("32 coefficients")
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.0 - other.0).amax()
    }

    /// Dense block with the given output rows and input columns.
    pub fn block(&self, rows: &[BasisBlade], cols: &[BasisBlade]) -> DMatrix<f64> {
        DMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.0[(rows[i].0 as usize, cols[j].0 as usize)]
        })
    }

    /// The even-to-even block. Fails when the operator maps some even blade
    /// to something with odd components.
    pub fn restrict_even(&self) -> Result<LinearOperator16> {
        let even = cl32::SIG.even_blades();
        let mut leaking = Vec::new();
        for bj in &even {
            for i in 0..32 {
                if (i as u8).count_ones() % 2 == 1 && self.0[(i, bj.0 as usize)] != 0.0 {
                    leaking.push(*bj);
                    break;
                }
            }
        }
        if !leaking.is_empty() {
            return Err(Error::NotEven(leaking));
        }
        let mut m = Matrix16::zeros();
        for (j, bj) in even.iter().enumerate() {
            for (i, bi) in even.iter().enumerate() {
                m[(i, j)] = self.0[(bi.0 as usize, bj.0 as usize)];
            }
        }
        Ok(LinearOperator16(m))
    }
}

impl Mul for &MultivectorOperator {
    type Output = MultivectorOperator;
    fn mul(self, rhs: &MultivectorOperator) -> MultivectorOperator {
        MultivectorOperator(self.0 * rhs.0)
    }
}

impl Add for &MultivectorOperator {
    type Output = MultivectorOperator;
    fn add(self, rhs: &MultivectorOperator) -> MultivectorOperator {
        MultivectorOperator(self.0 + rhs.0)
    }
}

impl Sub for &MultivectorOperator {
    type Output = MultivectorOperator;
    fn sub(self, rhs: &MultivectorOperator) -> MultivectorOperator {
        MultivectorOperator(self.0 - rhs.0)
    }
}

/// A real 16×16 matrix acting on spinor coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearOperator16(pub Matrix16);

impl LinearOperator16 {
    pub fn identity() -> Self {
        LinearOperator16(Matrix16::identity())
    }

    pub fn scale(&self, s: f64) -> Self {
        LinearOperator16(self.0 * s)
    }

    pub fn apply(&self, s: &Spinor) -> Spinor {
        let v = nalgebra::SVector::<f64, 16>::from_column_slice(&s.coords());
        let out = self.0 * v;
        Spinor::from_coords(Signature::CL32, out.as_slice()).expect("16 coordinates")
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.0 - other.0).amax()
    }

    /// Eigenvalues sorted by (real, imaginary) part.
    pub fn eigenvalues(&self) -> Vec<Complex<f64>> {
        let mut ev: Vec<Complex<f64>> = self.0.complex_eigenvalues().iter().copied().collect();
        ev.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        ev
    }

    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_column_slice(16, 16, self.0.as_slice())
    }
}

impl Mul for &LinearOperator16 {
    type Output = LinearOperator16;
    fn mul(self, rhs: &LinearOperator16) -> LinearOperator16 {
        LinearOperator16(self.0 * rhs.0)
    }
}

impl Add for &LinearOperator16 {
    type Output = LinearOperator16;
    fn add(self, rhs: &LinearOperator16) -> LinearOperator16 {
        LinearOperator16(self.0 + rhs.0)
    }
}

impl Sub for &LinearOperator16 {
    type Output = LinearOperator16;
    fn sub(self, rhs: &LinearOperator16) -> LinearOperator16 {
        LinearOperator16(self.0 - rhs.0)
    }
}

/// Singular values in descending order.
pub fn singular_values(a: &DMatrix<f64>) -> Vec<f64> {
    let mut s: Vec<f64> = a.singular_values().iter().copied().collect();
    s.sort_by(|x, y| y.total_cmp(x));
    s
}

/// Orthonormal basis of the null space of `a`, using a singular-value cutoff
/// of `rel_cutoff × σ_max`. Columns of the result span the kernel.
pub fn null_space(a: &DMatrix<f64>, rel_cutoff: f64) -> DMatrix<f64> {
    let (rows, cols) = a.shape();
    // Pad to at least square so the SVD yields a full right basis.
    let padded = if rows < cols {
        let mut p = DMatrix::zeros(cols, cols);
        p.view_mut((0, 0), (rows, cols)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let cutoff = rel_cutoff * smax;
    let kernel: Vec<DVector<f64>> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| smax == 0.0 || s <= cutoff)
        .map(|(i, _)| v_t.row(i).transpose())
        .collect();
    if kernel.is_empty() {
        DMatrix::zeros(cols, 0)
    } else {
        DMatrix::from_columns(&kernel)
    }
}

/// Orthonormal basis for the column space of `a` and the SVD factors needed
/// to map back: returns `(U_r, Σ_r, V_r)` with `a = U_r Σ_r V_rᵀ` restricted
/// to singular values above `rel_cutoff × σ_max`.
pub fn range_factors(a: &DMatrix<f64>, rel_cutoff: f64) -> (DMatrix<f64>, Vec<f64>, DMatrix<f64>) {
    let svd = a.clone().svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^T");
    let mut idx: Vec<usize> = (0..svd.singular_values.len()).collect();
    idx.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let smax = idx.first().map(|&i| svd.singular_values[i]).unwrap_or(0.0);
    let keep: Vec<usize> = idx
        .into_iter()
        .filter(|&i| smax > 0.0 && svd.singular_values[i] > rel_cutoff * smax)
        .collect();
    let u_r = DMatrix::from_columns(&keep.iter().map(|&i| u.column(i).into_owned()).collect::<Vec<_>>());
    let v_r = DMatrix::from_columns(&keep.iter().map(|&i| v_t.row(i).transpose()).collect::<Vec<_>>());
    let s_r = keep.iter().map(|&i| svd.singular_values[i]).collect();
    (u_r, s_r, v_r)
}

/// Smallest singular value and its right singular vector.
pub fn smallest_singular_pair(a: &DMatrix<f64>) -> (f64, DVector<f64>) {
    let (rows, cols) = a.shape();
    let padded = if rows < cols {
        let mut p = DMatrix::zeros(cols, cols);
        p.view_mut((0, 0), (rows, cols)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let (i, &s) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("nonempty matrix");
    (s, v_t.row(i).transpose())
}
