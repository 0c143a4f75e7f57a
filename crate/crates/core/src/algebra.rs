//! Finite-dimensional *-algebras given by structure tensors, and matrices with
//! entries in such an algebra.

use crate::numkernel::{CMatrix, C64, ONE, ZERO};

/// A unital *-algebra on `C^dim`.
///
/// `left[i]` is the matrix of left multiplication by the basis vector `e_i`;
/// the involution is `a* = star · conj(a)`.
#[derive(Clone, Debug)]
pub struct StarAlgebra {
    pub dim: usize,
    pub left: Vec<CMatrix>,
    pub unit: Vec<C64>,
    pub star: CMatrix,
}

pub type Elem = Vec<C64>;

pub fn elem_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn elem_norm(a: &[C64]) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

pub fn elem_add(a: &[C64], b: &[C64]) -> Elem {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn elem_scale(a: &[C64], z: C64) -> Elem {
    a.iter().map(|x| x * z).collect()
}

impl StarAlgebra {
    /// Builds the algebra from a bilinear product on basis vectors.
    pub fn from_basis_product(dim: usize, unit: Elem, star: CMatrix, prod: impl Fn(usize, usize) -> Elem) -> Self {
        let left = (0..dim)
            .map(|i| {
                let mut l = CMatrix::zeros(dim, dim);
                for j in 0..dim {
                    for (k, z) in prod(i, j).into_iter().enumerate() {
                        l[(k, j)] = z;
                    }
                }
                l
            })
            .collect();
        Self { dim, left, unit, star }
    }

    pub fn basis(&self, i: usize) -> Elem {
        let mut v = vec![ZERO; self.dim];
        v[i] = ONE;
        v
    }

    pub fn zero(&self) -> Elem {
        vec![ZERO; self.dim]
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_operator(&self, a: &[C64]) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for (i, z) in a.iter().enumerate() {
            if *z != ZERO {
                out = &out + &self.left[i].scale(*z);
            }
        }
        out
    }

    pub fn mul(&self, a: &[C64], b: &[C64]) -> Elem {
        let mut out = vec![ZERO; self.dim];
        let bm = CMatrix::column(b);
        for (i, z) in a.iter().enumerate() {
            if *z == ZERO {
                continue;
            }
            let lb = &self.left[i] * &bm;
            for (o, x) in out.iter_mut().enumerate() {
                *x += z * lb[(o, 0)];
            }
        }
        out
    }

    pub fn star_of(&self, a: &[C64]) -> Elem {
        let conj: Vec<C64> = a.iter().map(|z| z.conj()).collect();
        (&self.star * &CMatrix::column(&conj)).vec()
    }

    pub fn is_commutative(&self, eps: f64) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| elem_diff(&self.mul(&self.basis(i), &self.basis(j)), &self.mul(&self.basis(j), &self.basis(i))) < eps))
    }

    /// Worst residuals of associativity, unit, involutivity and anti-multiplicativity of `*`.
    pub fn verify(&self) -> StarAlgebraResiduals {
        let n = self.dim;
        let mut assoc: f64 = 0.0;
        let mut unit: f64 = 0.0;
        let mut invol: f64 = 0.0;
        let mut anti: f64 = 0.0;
        for i in 0..n {
            let a = self.basis(i);
            unit = unit.max(elem_diff(&self.mul(&self.unit, &a), &a)).max(elem_diff(&self.mul(&a, &self.unit), &a));
            invol = invol.max(elem_diff(&self.star_of(&self.star_of(&a)), &a));
            for j in 0..n {
                let b = self.basis(j);
                let ab = self.mul(&a, &b);
                anti = anti.max(elem_diff(&self.star_of(&ab), &self.mul(&self.star_of(&b), &self.star_of(&a))));
                for k in 0..n {
                    let cc = self.basis(k);
                    assoc = assoc.max(elem_diff(&self.mul(&ab, &cc), &self.mul(&a, &self.mul(&b, &cc))));
                }
            }
        }
        StarAlgebraResiduals { associativity: assoc, unit, star_involutive: invol, star_anti_multiplicative: anti }
    }
}

#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct StarAlgebraResiduals {
    pub associativity: f64,
    pub unit: f64,
    pub star_involutive: f64,
    pub star_anti_multiplicative: f64,
}

impl StarAlgebraResiduals {
    pub fn worst(&self) -> f64 {
        self.associativity.max(self.unit).max(self.star_involutive).max(self.star_anti_multiplicative)
    }
}

/// A `rows × cols` matrix with entries in a [`StarAlgebra`] of dimension `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BMatrix {
    pub rows: usize,
    pub cols: usize,
    pub n: usize,
    data: Vec<C64>,
}

impl BMatrix {
    pub fn zeros(rows: usize, cols: usize, n: usize) -> Self {
        Self { rows, cols, n, data: vec![ZERO; rows * cols * n] }
    }

    fn offset(&self, r: usize, c: usize) -> usize {
        (r * self.cols + c) * self.n
    }

    pub fn entry(&self, r: usize, c: usize) -> &[C64] {
        let o = self.offset(r, c);
        &self.data[o..o + self.n]
    }

    pub fn set(&mut self, r: usize, c: usize, v: &[C64]) {
        let o = self.offset(r, c);
        self.data[o..o + self.n].copy_from_slice(v);
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &[C64]) {
        let o = self.offset(r, c);
        for (x, y) in self.data[o..o + self.n].iter_mut().zip(v) {
            *x += y;
        }
    }

    pub fn from_fn(rows: usize, cols: usize, n: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut m = Self::zeros(rows, cols, n);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                m.set(r, c, &v);
            }
        }
        m
    }

    /// `φ ⊗ 1`.
    pub fn from_scalars(alg: &StarAlgebra, m: &CMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), alg.dim, |r, c| elem_scale(&alg.unit, m[(r, c)]))
    }

    pub fn identity(alg: &StarAlgebra, k: usize) -> Self {
        Self::from_scalars(alg, &CMatrix::identity(k))
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Dimension of the entry algebra.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mul(&self, alg: &StarAlgebra, other: &BMatrix) -> BMatrix {
        assert_eq!(self.cols, other.rows, "BMatrix product shape mismatch");
        let mut out = BMatrix::zeros(self.rows, other.cols, self.n);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(r, k);
                if a.iter().all(|z| *z == ZERO) {
                    continue;
                }
                let la = alg.left_operator(a);
                for c in 0..other.cols {
                    let b = other.entry(k, c);
                    if b.iter().all(|z| *z == ZERO) {
                        continue;
                    }
                    let v = (&la * &CMatrix::column(b)).vec();
                    out.add_to(r, c, &v);
                }
            }
        }
        out
    }

    /// Entrywise star followed by transposition.
    pub fn adjoint(&self, alg: &StarAlgebra) -> BMatrix {
        BMatrix::from_fn(self.cols, self.rows, self.n, |r, c| alg.star_of(self.entry(c, r)))
    }

    /// `(a ⊗ b)_{(i1 i2),(j1 j2)} = a_{i1 j1} b_{i2 j2}`.
    pub fn kron(&self, alg: &StarAlgebra, other: &BMatrix) -> BMatrix {
        BMatrix::from_fn(self.rows * other.rows, self.cols * other.cols, self.n, |r, c| {
            let (i1, i2) = (r / other.rows, r % other.rows);
            let (j1, j2) = (c / other.cols, c % other.cols);
            alg.mul(self.entry(i1, j1), other.entry(i2, j2))
        })
    }

    /// `M · self` for a scalar matrix `M`.
    pub fn lmul_scalar(&self, m: &CMatrix) -> BMatrix {
        assert_eq!(m.cols(), self.rows);
        let mut out = BMatrix::zeros(m.rows(), self.cols, self.n);
        for r in 0..m.rows() {
            for k in 0..self.rows {
                let z = m[(r, k)];
                if z == ZERO {
                    continue;
                }
                for c in 0..self.cols {
                    out.add_to(r, c, &elem_scale(self.entry(k, c), z));
                }
            }
        }
        out
    }

    /// `self · M` for a scalar matrix `M`.
    pub fn rmul_scalar(&self, m: &CMatrix) -> BMatrix {
        assert_eq!(m.rows(), self.cols);
        let mut out = BMatrix::zeros(self.rows, m.cols(), self.n);
        for r in 0..self.rows {
            for k in 0..self.cols {
                for c in 0..m.cols() {
                    let z = m[(k, c)];
                    if z != ZERO {
                        out.add_to(r, c, &elem_scale(self.entry(r, k), z));
                    }
                }
            }
        }
        out
    }

    pub fn map_entries(&self, n_out: usize, mut f: impl FnMut(&[C64]) -> Elem) -> BMatrix {
        BMatrix::from_fn(self.rows, self.cols, n_out, |r, c| f(self.entry(r, c)))
    }

    pub fn add(&self, other: &BMatrix) -> BMatrix {
        assert_eq!(self.shape(), other.shape());
        BMatrix { rows: self.rows, cols: self.cols, n: self.n, data: elem_add(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &BMatrix) -> BMatrix {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, z: C64) -> BMatrix {
        BMatrix { rows: self.rows, cols: self.cols, n: self.n, data: elem_scale(&self.data, z) }
    }

    pub fn max_abs(&self) -> f64 {
        elem_norm(&self.data)
    }

    pub fn dist(&self, other: &BMatrix) -> f64 {
        if self.shape() != other.shape() {
            return f64::INFINITY;
        }
        elem_diff(&self.data, &other.data)
    }

    /// Sub-block of rows `r0..r0+rows` and columns `c0..c0+cols`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> BMatrix {
        BMatrix::from_fn(rows, cols, self.n, |r, c| self.entry(r0 + r, c0 + c).to_vec())
    }

    /// Operator `Σ E_rs ⊗ L(T_rs)` from `C^cols ⊗ B` to `C^rows ⊗ B`.
    pub fn to_operator(&self, alg: &StarAlgebra) -> CMatrix {
        let n = self.n;
        let mut out = CMatrix::zeros(self.rows * n, self.cols * n);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.entry(r, c);
                if e.iter().all(|z| *z == ZERO) {
                    continue;
                }
                out.set_block(r * n, c * n, &alg.left_operator(e));
            }
        }
        out
    }

    /// Flattened coordinates, `(r, c, k)` row-major.
    pub fn coords(&self) -> &[C64] {
        &self.data
    }

    pub fn from_coords(rows: usize, cols: usize, n: usize, data: Vec<C64>) -> Self {
        assert_eq!(data.len(), rows * cols * n);
        Self { rows, cols, n, data }
    }
}
