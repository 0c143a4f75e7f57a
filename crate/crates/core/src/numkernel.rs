//! Dense complex linear algebra used by every other module.
//!
//! [`CMatrix`] is a thin wrapper over `nalgebra::DMatrix<Complex64>` that adds the
//! handful of operations this crate needs: Kronecker products, operator norms,
//! numerically ranked null spaces and ranges.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = Complex64::new(0.0, 0.0);
pub const ONE: C64 = Complex64::new(1.0, 0.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    Complex64::new(re, im)
}

/// Numerical tolerance. Verification routines report the worst residual and
/// compare it against `eps`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::BadParameter(format!("tolerance must be positive, got {eps}")));
        }
        Ok(Self { eps })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps: Self::DEFAULT_EPS }
    }
}

/// Dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMatrix(DMatrix<C64>);

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CMatrix({}x{})", self.rows(), self.cols())?;
        for r in 0..self.rows() {
            write!(f, "\n ")?;
            for c in 0..self.cols() {
                let z = self[(r, c)];
                write!(f, " {:+.4}{:+.4}i", z.re, z.im)?;
            }
        }
        Ok(())
    }
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self(DMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    /// Builds a matrix from row-major entries.
    pub fn from_row_major(rows: usize, cols: usize, entries: &[C64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Self(DMatrix::from_row_slice(rows, cols, entries))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self(DMatrix::from_fn(rows, cols, f))
    }

    pub fn from_real_diagonal(d: &[f64]) -> Self {
        let n = d.len();
        Self::from_fn(n, n, |i, j| if i == j { c(d[i], 0.0) } else { ZERO })
    }

    /// Column vector.
    pub fn column(entries: &[C64]) -> Self {
        Self(DMatrix::from_column_slice(entries.len(), 1, entries))
    }

    pub fn scalar(z: C64) -> Self {
        Self(DMatrix::from_element(1, 1, z))
    }

    /// Unit vector `e_i` of length `n`.
    pub fn basis_vector(n: usize, i: usize) -> Self {
        Self::from_fn(n, 1, |r, _| if r == i { ONE } else { ZERO })
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.0.shape()
    }

    pub fn inner(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_inner(self) -> DMatrix<C64> {
        self.0
    }

    pub fn from_inner(m: DMatrix<C64>) -> Self {
        Self(m)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn scale(&self, z: C64) -> Self {
        Self(&self.0 * z)
    }

    pub fn scale_re(&self, x: f64) -> Self {
        self.scale(c(x, 0.0))
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    /// Column-major vectorisation.
    pub fn vec(&self) -> Vec<C64> {
        self.0.as_slice().to_vec()
    }

    /// Inverse of [`CMatrix::vec`].
    pub fn unvec(rows: usize, cols: usize, v: &[C64]) -> Self {
        Self(DMatrix::from_column_slice(rows, cols, v))
    }

    pub fn col(&self, j: usize) -> Self {
        Self(DMatrix::from_column_slice(self.rows(), 1, self.0.column(j).as_slice()))
    }

    pub fn sub_block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self(self.0.view((r0, c0), (rows, cols)).into_owned())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &CMatrix) {
        self.0.view_mut((r0, c0), block.shape()).copy_from(&block.0);
    }

    pub fn hstack(blocks: &[CMatrix]) -> Self {
        let rows = blocks.first().map_or(0, |b| b.rows());
        let cols = blocks.iter().map(|b| b.cols()).sum();
        let mut out = Self::zeros(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            out.set_block(0, c0, b);
            c0 += b.cols();
        }
        out
    }

    pub fn vstack(blocks: &[CMatrix]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols());
        let rows = blocks.iter().map(|b| b.rows()).sum();
        let mut out = Self::zeros(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            out.set_block(r0, 0, b);
            r0 += b.rows();
        }
        out
    }

    pub fn block_diag(blocks: &[CMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows()).sum();
        let cols = blocks.iter().map(|b| b.cols()).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows();
            c0 += b.cols();
        }
        out
    }

    /// Kronecker product; row index of the result is `(i_a, i_b)` with `i_b` fastest.
    pub fn kron(&self, other: &CMatrix) -> Self {
        Self(self.0.kronecker(&other.0))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Frobenius inner product `Tr(self* other)`.
    pub fn inner_product(&self, other: &CMatrix) -> C64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn singular_values(&self) -> Vec<f64> {
        if self.rows() == 0 || self.cols() == 0 {
            return Vec::new();
        }
        self.svd().1
    }

    fn to_faer(&self) -> faer::Mat<C64> {
        faer::Mat::from_fn(self.rows(), self.cols(), |r, c| self.0[(r, c)])
    }

    fn from_faer(m: faer::MatRef<'_, C64>) -> Self {
        Self::from_fn(m.nrows(), m.ncols(), |r, c| m[(r, c)])
    }

    /// Full SVD `(U, σ, V)` with `σ` nonincreasing.
    fn svd(&self) -> (CMatrix, Vec<f64>, CMatrix) {
        let svd = self.to_faer().svd().expect("svd converges");
        let s = svd.S().column_vector().iter().map(|z| z.re).collect();
        (Self::from_faer(svd.U()), s, Self::from_faer(svd.V()))
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        self.singular_values().first().copied().unwrap_or(0.0)
    }

    /// Eigen-decomposition of a Hermitian matrix: eigenvalues ascending, eigenvectors as columns.
    pub fn hermitian_eigen(&self) -> (Vec<f64>, CMatrix) {
        let sym = (&self.0 + self.0.adjoint()) * c(0.5, 0.0);
        let eig = Self(sym).to_faer().self_adjoint_eigen(faer::Side::Lower).expect("eigen converges");
        let vals = eig.S().column_vector().iter().map(|z| z.re).collect();
        (vals, Self::from_faer(eig.U()))
    }

    /// `f(self)` for a Hermitian matrix via its spectral decomposition.
    pub fn hermitian_function(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let (vals, vecs) = self.hermitian_eigen();
        let d = CMatrix::from_real_diagonal(&vals.iter().map(|&x| f(x)).collect::<Vec<_>>());
        &(&vecs * &d) * &vecs.adjoint()
    }

    pub fn try_inverse(&self) -> Option<CMatrix> {
        self.0.clone().try_inverse().map(Self)
    }

    /// Orthonormal basis (as columns) of the column space, ranked at
    /// `eps * sigma_max * max(rows, cols)`.
    pub fn column_space(&self, tol: Tolerance) -> CMatrix {
        let (rows, cols) = self.shape();
        if rows == 0 || cols == 0 {
            return CMatrix::zeros(rows, 0);
        }
        let (u, s, _) = self.svd();
        let cutoff = rank_cutoff(s[0], rows, cols, tol);
        u.sub_block(0, 0, rows, s.iter().filter(|&&x| x > cutoff).count())
    }

    /// Orthonormal basis (as columns) of the null space.
    pub fn null_space(&self, tol: Tolerance) -> CMatrix {
        let (rows, cols) = self.shape();
        if cols == 0 {
            return CMatrix::zeros(0, 0);
        }
        if rows == 0 {
            return CMatrix::identity(cols);
        }
        let (_, s, v) = self.svd();
        let cutoff = rank_cutoff(s[0], rows, cols, tol);
        let rank = s.iter().filter(|&&x| x > cutoff).count();
        v.sub_block(0, rank, cols, cols - rank)
    }

    pub fn rank(&self, tol: Tolerance) -> usize {
        self.column_space(tol).cols()
    }
}

fn rank_cutoff(smax: f64, rows: usize, cols: usize, tol: Tolerance) -> f64 {
    if smax == 0.0 {
        return 0.0;
    }
    tol.eps * smax * rows.max(cols) as f64
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.0[idx]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, idx: (usize, usize)) -> &mut C64 {
        &mut self.0[idx]
    }
}

impl<'a> Mul<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &'a CMatrix) -> CMatrix {
        assert_eq!(self.cols(), rhs.rows(), "matrix product shape mismatch");
        CMatrix(&self.0 * &rhs.0)
    }
}

impl<'a> Add<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &'a CMatrix) -> CMatrix {
        CMatrix(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a CMatrix> for &'a CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &'a CMatrix) -> CMatrix {
        CMatrix(&self.0 - &rhs.0)
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix(-&self.0)
    }
}

/// Kronecker product.
pub fn tensor_product(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kron(b)
}

/// Largest singular value.
pub fn operator_norm(a: &CMatrix) -> f64 {
    a.operator_norm()
}

/// Isometry `v` with `v v* = p`, for an orthogonal projection `p`.
pub fn orthonormal_range(p: &CMatrix, tol: Tolerance) -> Result<CMatrix> {
    if p.rows() != p.cols() {
        return Err(Error::NotAProjection(format!("non-square {}x{}", p.rows(), p.cols())));
    }
    let idem = (&(p * p) - p).operator_norm();
    let herm = (&p.adjoint() - p).operator_norm();
    if idem >= tol.eps.max(1e-12) * 10.0 || herm >= tol.eps.max(1e-12) * 10.0 {
        return Err(Error::NotAProjection(format!(
            "|p^2-p| = {idem:.3e}, |p*-p| = {herm:.3e}"
        )));
    }
    let (vals, vecs) = p.hermitian_eigen();
    let keep: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] > 0.5).collect();
    // largest eigenvalues first keeps the output deterministic for a given p
    Ok(CMatrix::from_fn(p.rows(), keep.len(), |r, k| vecs[(r, keep[keep.len() - 1 - k])]))
}

/// Orthonormal basis of the range of an idempotent, possibly oblique.
/// Nonzero singular values of an idempotent are at least one, so the cut is absolute.
pub fn idempotent_range(p: &CMatrix) -> CMatrix {
    let (rows, cols) = p.shape();
    if rows == 0 || cols == 0 {
        return CMatrix::zeros(rows, 0);
    }
    let (u, s, _) = p.svd();
    u.sub_block(0, 0, rows, s.iter().filter(|&&x| x > 0.5).count())
}

/// Frobenius-orthonormal basis of `{X : X A_k = B_k X for all k}` for `X` of shape `rows x cols`.
pub fn solve_linear_space(
    rows: usize,
    cols: usize,
    constraints: &[(CMatrix, CMatrix)],
    tol: Tolerance,
) -> Vec<CMatrix> {
    let n = rows * cols;
    if n == 0 {
        return Vec::new();
    }
    let blocks: Vec<CMatrix> = constraints
        .iter()
        .map(|(a, b)| {
            assert_eq!(a.shape(), (cols, cols), "right constraint must be cols x cols");
            assert_eq!(b.shape(), (rows, rows), "left constraint must be rows x rows");
            // vec(X A) = (A^T (x) I) vec X ; vec(B X) = (I (x) B) vec X
            &a.transpose().kron(&CMatrix::identity(rows)) - &CMatrix::identity(cols).kron(b)
        })
        .collect();
    let basis = if blocks.is_empty() {
        CMatrix::identity(n)
    } else {
        CMatrix::vstack(&blocks).null_space(tol)
    };
    (0..basis.cols())
        .map(|k| CMatrix::unvec(rows, cols, &basis.col(k).vec()))
        .collect()
}

/// Sorted multiset distance between two real spectra of equal length.
pub fn spectrum_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat2(e: [f64; 8]) -> CMatrix {
        CMatrix::from_row_major(
            2,
            2,
            &[c(e[0], e[1]), c(e[2], e[3]), c(e[4], e[5]), c(e[6], e[7])],
        )
    }

    /// Brute-force matrix product, independent of nalgebra.
    fn naive_mul(a: &CMatrix, b: &CMatrix) -> CMatrix {
        CMatrix::from_fn(a.rows(), b.cols(), |i, j| (0..a.cols()).map(|k| a[(i, k)] * b[(k, j)]).sum())
    }

    #[test]
    fn identity_kron_identity() {
        let k = tensor_product(&CMatrix::identity(2), &CMatrix::identity(3));
        assert!((&k - &CMatrix::identity(6)).max_abs() == 0.0);
    }

    #[test]
    fn kron_with_unit_scalar() {
        let a = mat2([1.0, 2.0, -3.0, 0.5, 0.0, 1.0, 4.0, -1.0]);
        assert_eq!(tensor_product(&a, &CMatrix::scalar(ONE)), a);
    }

    #[test]
    fn operator_norm_examples() {
        assert_eq!(operator_norm(&CMatrix::zeros(3, 2)), 0.0);
        let s = 1.0 / 2f64.sqrt();
        let u = CMatrix::from_row_major(2, 2, &[c(s, 0.0), c(0.0, s), c(0.0, s), c(s, 0.0)]);
        assert!((operator_norm(&u) - 1.0).abs() < 1e-12);
        let d = CMatrix::from_row_major(2, 2, &[c(3.0, 0.0), ZERO, ZERO, c(0.0, -4.0)]);
        assert!((operator_norm(&d) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn orthonormal_range_examples() {
        let tol = Tolerance::default();
        let v = orthonormal_range(&CMatrix::identity(3), tol).unwrap();
        assert!((&(&v.adjoint() * &v) - &CMatrix::identity(3)).max_abs() < 1e-12);

        let xi = CMatrix::column(&[c(0.6, 0.0), c(0.0, 0.8)]);
        let p = &xi * &xi.adjoint();
        let v = orthonormal_range(&p, tol).unwrap();
        assert_eq!(v.cols(), 1);
        assert!((v.inner_product(&xi).norm() - 1.0).abs() < 1e-12);

        // Z2 regular representation, projection onto invariants
        let swap = CMatrix::from_row_major(2, 2, &[ZERO, ONE, ONE, ZERO]);
        let avg = (&CMatrix::identity(2) + &swap).scale_re(0.5);
        let v = orthonormal_range(&avg, tol).unwrap();
        assert_eq!(v.cols(), 1);
        assert!((&(&v * &v.adjoint()) - &avg).max_abs() < 1e-12);

        let not_proj = CMatrix::identity(2).scale_re(2.0);
        assert!(matches!(orthonormal_range(&not_proj, tol), Err(Error::NotAProjection(_))));
    }

    #[test]
    fn solve_linear_space_examples() {
        let tol = Tolerance::default();
        assert_eq!(solve_linear_space(2, 2, &[], tol).len(), 4);

        // sign vs trivial rep of Z2: Hom = 0
        let one = CMatrix::scalar(ONE);
        let minus = CMatrix::scalar(-ONE);
        assert!(solve_linear_space(1, 1, &[(minus.clone(), one.clone())], tol).is_empty());

        // S3 standard rep with itself: 1-dim, spanned by identity
        let h = 3f64.sqrt() / 2.0;
        let r = CMatrix::from_row_major(2, 2, &[c(-0.5, 0.0), c(-h, 0.0), c(h, 0.0), c(-0.5, 0.0)]);
        let s = CMatrix::from_row_major(2, 2, &[ONE, ZERO, ZERO, -ONE]);
        let basis = solve_linear_space(2, 2, &[(r.clone(), r), (s.clone(), s)], tol);
        assert_eq!(basis.len(), 1);
        let x = &basis[0];
        let scaled = x.scale(x[(0, 0)].conj() / x[(0, 0)].norm());
        assert!((&scaled - &CMatrix::identity(2).scale_re(1.0 / 2f64.sqrt())).max_abs() < 1e-12);
    }

    #[test]
    fn null_space_of_wide_matrix() {
        let a = CMatrix::from_row_major(1, 3, &[ONE, ONE, ZERO]);
        let n = a.null_space(Tolerance::default());
        assert_eq!(n.cols(), 2);
        assert!((&a * &n).max_abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn kron_mixed_product(a in prop::array::uniform8(-1.0f64..1.0), b in prop::array::uniform8(-1.0f64..1.0),
                              a2 in prop::array::uniform8(-1.0f64..1.0), b2 in prop::array::uniform8(-1.0f64..1.0)) {
            let (a, b, a2, b2) = (mat2(a), mat2(b), mat2(a2), mat2(b2));
            let lhs = naive_mul(&a.kron(&b), &a2.kron(&b2));
            let rhs = naive_mul(&a, &a2).kron(&naive_mul(&b, &b2));
            prop_assert!((&lhs - &rhs).max_abs() < 1e-12);
        }

        #[test]
        fn kron_associative(a in prop::array::uniform8(-1.0f64..1.0), b in prop::array::uniform8(-1.0f64..1.0),
                            cc in prop::array::uniform8(-1.0f64..1.0)) {
            let (a, b, cc) = (mat2(a), mat2(b), mat2(cc));
            prop_assert!((&a.kron(&b).kron(&cc) - &a.kron(&b.kron(&cc))).max_abs() < 1e-12);
        }

        #[test]
        fn norm_submultiplicative(a in prop::array::uniform8(-2.0f64..2.0), b in prop::array::uniform8(-2.0f64..2.0)) {
            let (a, b) = (mat2(a), mat2(b));
            prop_assert!(operator_norm(&(&a * &b)) <= operator_norm(&a) * operator_norm(&b) + 1e-9);
        }

        #[test]
        fn orthonormal_range_of_random_projection(re in prop::collection::vec(-1.0f64..1.0, 8), im in prop::collection::vec(-1.0f64..1.0, 8)) {
            let m = CMatrix::from_fn(4, 2, |i, j| c(re[i * 2 + j], im[i * 2 + j]));
            let q = m.column_space(Tolerance::default());
            prop_assume!(q.cols() == 2);
            let p = &q * &q.adjoint();
            let v = orthonormal_range(&p, Tolerance::default()).unwrap();
            prop_assert!((&(&v.adjoint() * &v) - &CMatrix::identity(v.cols())).max_abs() < 1e-8);
            prop_assert!((&(&v * &v.adjoint()) - &p).max_abs() < 1e-8);
        }
    }
}
