//! Concrete rigid C*-tensor categories realised on Hilbert spaces.
//!
//! Objects are realised as [`Rep`]s: a Hilbert space `C^dim` together with the
//! matrices of a fixed generating family (all group elements for a finite group,
//! `k, k^-1, E, F` for `U_q(su_2)`). Morphisms are intertwining matrices. Every
//! realised object is decomposed into the category's irreducible labels by
//! isometries, and conjugates are built from standard solutions of the
//! conjugate equations.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use parking_lot::RwLock;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numkernel::{c, orthonormal_range, solve_linear_space, CMatrix, Tolerance, ONE};

/// An irreducible object of the category.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IrrepLabel {
    pub id: String,
    pub dim: usize,
    /// Index of the conjugate label.
    pub conjugate: usize,
}

/// A concrete unitary representation: the images of the generating family.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep {
    pub dim: usize,
    pub gens: Vec<CMatrix>,
}

impl Rep {
    fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.dim.hash(&mut h);
        for g in &self.gens {
            for z in g.inner().iter() {
                z.re.to_bits().hash(&mut h);
                z.im.to_bits().hash(&mut h);
            }
        }
        h.finish()
    }
}

/// How tensor products act on the generating family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TensorRule {
    /// Group-like generators: `g -> g (x) g`.
    Group,
    /// `U_q(su_2)` with generators `[k, k^-1, E, F]`:
    /// `k -> k (x) k`, `E -> E (x) k + k^-1 (x) E`, `F -> F (x) k + k^-1 (x) F`.
    Suq2 { q: f64 },
}

/// A formal direct sum of irreducible labels, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CatObject {
    pub summands: Vec<usize>,
}

impl CatObject {
    pub fn irreducible(label: usize) -> Self {
        Self { summands: vec![label] }
    }

    pub fn zero() -> Self {
        Self { summands: Vec::new() }
    }

    pub fn total_dim(&self, cat: &RepCategory) -> usize {
        self.summands.iter().map(|&l| cat.labels[l].dim).sum()
    }
}

/// An intertwiner between two formal sums.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub source: CatObject,
    pub target: CatObject,
    pub matrix: CMatrix,
}

/// One irreducible summand of a realised object.
#[derive(Clone, Debug)]
pub struct Summand {
    pub label: usize,
    /// Isometric intertwiner from the irreducible into the object.
    pub isometry: CMatrix,
}

/// Conjugate of a realised object with its duality morphisms.
///
/// `r` and `rbar` are column vectors in `H_conj (x) H_obj` and `H_obj (x) H_conj`.
/// `j` is the unitary identifying the complex conjugate space of the object
/// (in the conjugate of the standard basis) with the space of `conjugate`, so that
/// `rbar = sum_k rho^{1/2} e_k (x) j e_k` and `r = sum_k j e_k (x) rho^{-1/2} e_k`.
#[derive(Clone, Debug)]
pub struct DualityData {
    pub object: Rep,
    pub conjugate: Rep,
    pub r: CMatrix,
    pub rbar: CMatrix,
    pub rho: CMatrix,
    pub j: CMatrix,
}

#[derive(Clone, Debug)]
struct StandardSolution {
    r: CMatrix,
    rbar: CMatrix,
    rho: CMatrix,
    j: CMatrix,
}

/// Residuals of the two conjugate equations.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ConjugateResiduals {
    pub first: f64,
    pub second: f64,
}

impl ConjugateResiduals {
    pub fn worst(&self) -> f64 {
        self.first.max(self.second)
    }
}

#[derive(Debug)]
pub struct RepCategory {
    pub name: String,
    pub labels: Vec<IrrepLabel>,
    pub irreps: Vec<Rep>,
    pub rule: TensorRule,
    pub tol: Tolerance,
    trivial: Rep,
    trivial_label: usize,
    decompositions: RwLock<HashMap<u64, Vec<(Rep, Arc<Vec<Summand>>)>>>,
    standard: RwLock<HashMap<usize, Arc<StandardSolution>>>,
}

impl RepCategory {
    /// `labels[i].conjugate` may be left as `usize::MAX`, in which case it is
    /// determined by searching for the label carrying the conjugate representation.
    pub fn new(
        name: impl Into<String>,
        mut labels: Vec<IrrepLabel>,
        irreps: Vec<Rep>,
        rule: TensorRule,
        tol: Tolerance,
    ) -> Result<Self> {
        let name = name.into();
        let ngens = irreps.first().map_or(0, |r| r.gens.len());
        let trivial = match rule {
            TensorRule::Group => Rep { dim: 1, gens: vec![CMatrix::scalar(ONE); ngens] },
            TensorRule::Suq2 { .. } => Rep {
                dim: 1,
                gens: vec![
                    CMatrix::scalar(ONE),
                    CMatrix::scalar(ONE),
                    CMatrix::zeros(1, 1),
                    CMatrix::zeros(1, 1),
                ],
            },
        };
        let trivial_label = irreps
            .iter()
            .position(|r| *r == trivial || (r.dim == 1 && r.gens.iter().zip(&trivial.gens).all(|(a, b)| (a - b).max_abs() < 1e-12)))
            .ok_or_else(|| Error::BadParameter(format!("{name}: no trivial irreducible")))?;
        let mut cat = Self {
            name,
            labels: labels.clone(),
            irreps,
            rule,
            tol,
            trivial,
            trivial_label,
            decompositions: RwLock::new(HashMap::new()),
            standard: RwLock::new(HashMap::new()),
        };
        for i in 0..labels.len() {
            if labels[i].conjugate == usize::MAX {
                let conj_rep = cat.complex_conjugate(&cat.irreps[i]);
                let found = (0..labels.len())
                    .find(|&j| labels[j].dim == labels[i].dim && !cat.hom_basis(&conj_rep, &cat.irreps[j]).is_empty())
                    .ok_or_else(|| Error::BadParameter(format!("no conjugate for label {}", labels[i].id)))?;
                labels[i].conjugate = found;
            }
        }
        cat.labels = labels;
        Ok(cat)
    }

    pub fn trivial(&self) -> &Rep {
        &self.trivial
    }

    pub fn trivial_label(&self) -> usize {
        self.trivial_label
    }

    pub fn irrep(&self, label: usize) -> &Rep {
        &self.irreps[label]
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    /// Entrywise complex conjugate representation (only meaningful for group-like generators).
    fn complex_conjugate(&self, r: &Rep) -> Rep {
        Rep { dim: r.dim, gens: r.gens.iter().map(|g| g.conj()).collect() }
    }

    pub fn tensor(&self, a: &Rep, b: &Rep) -> Rep {
        let gens = match self.rule {
            TensorRule::Group => a.gens.iter().zip(&b.gens).map(|(x, y)| x.kron(y)).collect(),
            TensorRule::Suq2 { .. } => {
                let (ka, kia, ea, fa) = (&a.gens[0], &a.gens[1], &a.gens[2], &a.gens[3]);
                let (kb, kib, eb, fb) = (&b.gens[0], &b.gens[1], &b.gens[2], &b.gens[3]);
                vec![
                    ka.kron(kb),
                    kia.kron(kib),
                    &ea.kron(kb) + &kia.kron(eb),
                    &fa.kron(kb) + &kia.kron(fb),
                ]
            }
        };
        Rep { dim: a.dim * b.dim, gens }
    }

    pub fn tensor_all(&self, reps: &[&Rep]) -> Rep {
        reps.iter().fold(self.trivial.clone(), |acc, r| self.tensor(&acc, r))
    }

    pub fn direct_sum(&self, reps: &[&Rep]) -> Rep {
        let ngens = self.trivial.gens.len();
        let dim = reps.iter().map(|r| r.dim).sum();
        let gens = (0..ngens)
            .map(|k| CMatrix::block_diag(&reps.iter().map(|r| r.gens[k].clone()).collect::<Vec<_>>()))
            .collect();
        Rep { dim, gens }
    }

    pub fn realize(&self, obj: &CatObject) -> Rep {
        let reps: Vec<&Rep> = obj.summands.iter().map(|&l| &self.irreps[l]).collect();
        self.direct_sum(&reps)
    }

    /// Frobenius-orthonormal basis of intertwiners `a -> b` (matrices `b.dim x a.dim`).
    pub fn hom_basis(&self, a: &Rep, b: &Rep) -> Vec<CMatrix> {
        if a.dim == 0 || b.dim == 0 {
            return Vec::new();
        }
        match self.rule {
            TensorRule::Group => {
                // average of X -> B(g) X A(g)^*, acting on column-major vec(X)
                let n = a.gens.len() as f64;
                let mut p = CMatrix::zeros(a.dim * b.dim, a.dim * b.dim);
                for (ga, gb) in a.gens.iter().zip(&b.gens) {
                    p = &p + &ga.conj().kron(gb);
                }
                let p = p.scale_re(1.0 / n);
                let range = orthonormal_range(&p, self.tol).unwrap_or_else(|_| p.column_space(self.tol));
                (0..range.cols()).map(|k| CMatrix::unvec(b.dim, a.dim, &range.col(k).vec())).collect()
            }
            TensorRule::Suq2 { .. } => {
                let constraints: Vec<_> =
                    a.gens.iter().zip(&b.gens).map(|(x, y)| (x.clone(), y.clone())).collect();
                solve_linear_space(b.dim, a.dim, &constraints, self.tol)
            }
        }
    }

    pub fn hom(&self, u: &CatObject, v: &CatObject) -> Vec<Morphism> {
        self.hom_basis(&self.realize(u), &self.realize(v))
            .into_iter()
            .map(|m| Morphism { source: u.clone(), target: v.clone(), matrix: m })
            .collect()
    }

    /// Largest violation of the intertwining relation for `x: a -> b`.
    pub fn intertwining_residual(&self, a: &Rep, b: &Rep, x: &CMatrix) -> f64 {
        a.gens
            .iter()
            .zip(&b.gens)
            .map(|(ga, gb)| (&(x * ga) - &(gb * x)).max_abs())
            .fold(0.0, f64::max)
    }

    /// Decomposition of a realised object into irreducibles, in canonical label order.
    pub fn decompose(&self, rep: &Rep) -> Result<Arc<Vec<Summand>>> {
        let key = rep.fingerprint();
        if let Some(bucket) = self.decompositions.read().get(&key) {
            if let Some((_, d)) = bucket.iter().find(|(r, _)| r == rep) {
                return Ok(d.clone());
            }
        }
        let mut out = Vec::new();
        let mut covered = 0;
        for (label, irrep) in self.irreps.iter().enumerate() {
            let scale = (irrep.dim as f64).sqrt();
            for x in self.hom_basis(irrep, rep) {
                out.push(Summand { label, isometry: x.scale_re(scale) });
                covered += irrep.dim;
            }
        }
        if covered != rep.dim {
            return Err(Error::TruncationOverflow(format!(
                "{}: irreducibles cover {covered} of {} dimensions",
                self.name, rep.dim
            )));
        }
        let out = Arc::new(out);
        self.decompositions.write().entry(key).or_default().push((rep.clone(), out.clone()));
        Ok(out)
    }

    /// Decomposition of `u (x) v`.
    pub fn decompose_product(&self, u: &CatObject, v: &CatObject) -> Result<Arc<Vec<Summand>>> {
        self.decompose(&self.tensor(&self.realize(u), &self.realize(v)))
    }

    fn standard_solution(&self, label: usize) -> Result<Arc<StandardSolution>> {
        if let Some(s) = self.standard.read().get(&label) {
            return Ok(s.clone());
        }
        let u = &self.irreps[label];
        let ubar = &self.irreps[self.labels[label].conjugate];
        let d = u.dim;
        let db = ubar.dim;
        let find = |rep: &Rep| -> Result<CMatrix> {
            let basis = self.hom_basis(&self.trivial, rep);
            if basis.len() != 1 {
                return Err(Error::BadParameter(format!(
                    "{}: label {} has {} invariant vectors in U (x) conj(U)",
                    self.name, self.labels[label].id, basis.len()
                )));
            }
            Ok(basis[0].clone())
        };
        let r0 = find(&self.tensor(ubar, u))?;
        let rb0 = find(&self.tensor(u, ubar))?;
        let m = CMatrix::from_fn(db, d, |a, b| r0[(a * d + b, 0)]);
        let mb = CMatrix::from_fn(d, db, |a, b| rb0[(a * db + b, 0)]);
        // (R* (x) 1)(1 (x) Rbar) = Mbar^T M^* = c1 * 1 by Schur
        let c1 = (&mb.transpose() * &m.adjoint()).trace() / c(db as f64, 0.0);
        let s = (rb0.frobenius_norm() / (r0.frobenius_norm() * c1.norm())).sqrt();
        let t = ONE / (c(s, 0.0) * c1);
        let r = r0.scale_re(s);
        let rbar = rb0.scale(t);
        let mb = mb.scale(t);
        let rho = &mb * &mb.adjoint();
        let rho_inv_half = rho.hermitian_function(|x| 1.0 / x.sqrt());
        let j = (&rho_inv_half * &mb).transpose();
        let sol = Arc::new(StandardSolution { r, rbar, rho, j });
        self.standard.write().insert(label, sol.clone());
        Ok(sol)
    }

    /// Conjugate object and standard solutions of the conjugate equations,
    /// assembled from the irreducible decomposition of `rep`.
    pub fn conjugate_data(&self, rep: &Rep) -> Result<DualityData> {
        let summands = self.decompose(rep)?;
        let conj_reps: Vec<&Rep> =
            summands.iter().map(|s| &self.irreps[self.labels[s.label].conjugate]).collect();
        let conjugate = self.direct_sum(&conj_reps);
        let (dw, dc) = (rep.dim, conjugate.dim);
        let mut r = CMatrix::zeros(dc * dw, 1);
        let mut rbar = CMatrix::zeros(dw * dc, 1);
        let mut rho = CMatrix::zeros(dw, dw);
        let mut j = CMatrix::zeros(dc, dw);
        let mut offset = 0;
        for s in summands.iter() {
            let sol = self.standard_solution(s.label)?;
            let dbar = conj_reps_dim(self, s.label);
            let iota = CMatrix::from_fn(dc, dbar, |a, b| if a == offset + b { ONE } else { ZERO_C });
            let w = &s.isometry;
            rbar = &rbar + &(&w.kron(&iota) * &sol.rbar);
            r = &r + &(&iota.kron(w) * &sol.r);
            rho = &rho + &(&(w * &sol.rho) * &w.adjoint());
            j = &j + &(&(&iota * &sol.j) * &w.transpose());
            offset += dbar;
        }
        Ok(DualityData { object: rep.clone(), conjugate, r, rbar, rho, j })
    }

    pub fn conjugate_data_of(&self, obj: &CatObject) -> Result<DualityData> {
        self.conjugate_data(&self.realize(obj))
    }

    /// Quantum dimension `Tr(rho)`.
    pub fn frobenius_dim(&self, rep: &Rep) -> Result<f64> {
        Ok(self.conjugate_data(rep)?.rho.trace().re)
    }
}

const ZERO_C: num_complex::Complex64 = crate::numkernel::ZERO;

fn conj_reps_dim(cat: &RepCategory, label: usize) -> usize {
    cat.labels[cat.labels[label].conjugate].dim
}

/// Residuals `|(R* (x) 1)(1 (x) Rbar) - 1|` on the conjugate and
/// `|(Rbar* (x) 1)(1 (x) R) - 1|` on the object.
pub fn verify_conjugate_equations(d: &DualityData) -> ConjugateResiduals {
    let dw = d.object.dim;
    let dc = d.conjugate.dim;
    let first = &(&d.r.adjoint().kron(&CMatrix::identity(dc)) * &CMatrix::identity(dc).kron(&d.rbar))
        - &CMatrix::identity(dc);
    let second = &(&d.rbar.adjoint().kron(&CMatrix::identity(dw)) * &CMatrix::identity(dw).kron(&d.r))
        - &CMatrix::identity(dw);
    ConjugateResiduals { first: first.operator_norm(), second: second.operator_norm() }
}
