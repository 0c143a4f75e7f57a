//! The regular part `B_M = ⊕_i H̄_i ⊗ Hom(m, m ◁ U_i)` and its YD structure.
//!
//! An element of `H̄_U ⊗ Hom(m, m ◁ U)` is kept as a list of elementary tensors `ξ̄ ⊗ T`;
//! its matrix form over the entry algebra is `Z = Σ T ξ^*`.
//! An element of `Õ(G)` over `U` is a scalar matrix `X` with `u_ij ↔ E_ji`,
//! i.e. it represents the function `g ↦ Tr(X U(g))`.

use std::sync::Arc;

use serde::Serialize;

use super::presentation::CentrallyPointedPresentation;
use crate::algebra::{elem_add, elem_diff, elem_norm, elem_scale, BMatrix, Elem, StarAlgebra};
use crate::cqg::{FiniteCQG, OgElem};
use crate::error::Result;
use crate::numkernel::{CMatrix, C64, ONE, ZERO};
use crate::tensorcat::{Rep, RepCategory};
use crate::ydalg::FiniteYDAlgebra;

#[derive(Clone, Debug)]
pub struct UniversalElement {
    pub rep: Rep,
    /// Pairs `(ξ, T)`: a column `ξ ∈ H_U` and a `d_U × 1` matrix `T` over the entries.
    pub terms: Vec<(CMatrix, BMatrix)>,
}

impl UniversalElement {
    pub fn elementary(rep: Rep, xi: CMatrix, t: BMatrix) -> Self {
        Self { rep, terms: vec![(xi, t)] }
    }

    /// `Σ_k ξ̄_k ⊗ Z e_k`.
    pub fn from_matrix(rep: Rep, z: &BMatrix) -> Self {
        let d = rep.dim;
        let terms = (0..z.shape().1)
            .map(|k| (CMatrix::basis_vector(d, k), z.block(0, k, d, 1)))
            .filter(|(_, t)| t.max_abs() > 0.0)
            .collect();
        Self { rep, terms }
    }

    /// `Z = Σ T ξ^*` over an entry algebra of dimension `n`.
    pub fn to_matrix(&self, n: usize) -> BMatrix {
        let d = self.rep.dim;
        self.terms.iter().fold(BMatrix::zeros(d, d, n), |acc, (xi, t)| acc.add(&t.rmul_scalar(&xi.adjoint())))
    }
}

pub(crate) fn coord_inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// `(S ⊗ 1_c) v` for an `a × b` matrix `S` over the entries and a scalar vector `v ∈ C^b ⊗ C^c`.
pub(crate) fn tensor_id_apply(s: &BMatrix, v: &CMatrix, c: usize) -> BMatrix {
    let (a, b) = s.shape();
    let n = s.n();
    BMatrix::from_fn(a * c, 1, n, |row, _| {
        let (r, q) = (row / c, row % c);
        let mut acc = vec![ZERO; n];
        for p in 0..b {
            let z = v[(p * c + q, 0)];
            if z != ZERO {
                acc = elem_add(&acc, &elem_scale(s.entry(r, p), z));
            }
        }
        acc
    })
}

/// `J conj(ρ^{-1/2})`, sending `e_k` to the vector used for `\overline{ρ^{-1/2} e_k}`.
pub(crate) fn conj_twist(rho: &CMatrix, j: &CMatrix) -> CMatrix {
    j * &rho.hermitian_function(|t| t.powf(-0.5)).conj()
}

/// Blocks `X_i` of a function given in the delta basis.
pub fn og_to_blocks(cqg: &FiniteCQG, f: &[C64]) -> Vec<CMatrix> {
    let n = cqg.order() as f64;
    (0..cqg.irrep_count())
        .map(|i| {
            let d = cqg.group.irreps[i].dim;
            let mut x = CMatrix::zeros(d, d);
            for (g, fg) in f.iter().enumerate() {
                if *fg != ZERO {
                    x = &x + &cqg.u(i, g).adjoint().scale(*fg * (d as f64 / n));
                }
            }
            x
        })
        .collect()
}

/// Graded components of `π(x)` whose norm is at most this fraction of `‖π(x)‖` are set to zero.
pub const PROJECTION_CUTOFF: f64 = 1e-13;

pub struct RegularPart {
    pres: Arc<dyn CentrallyPointedPresentation>,
    /// Orthonormal basis of `Hom(m, m ◁ U_i)` per label.
    homs: Vec<Vec<BMatrix>>,
    offsets: Vec<usize>,
    dim: usize,
    /// `ops[i][r * d_i + s]`: the action of `X = E_rs` over `U_i`.
    ops: Vec<Vec<CMatrix>>,
}

impl RegularPart {
    pub fn new(pres: Arc<dyn CentrallyPointedPresentation>) -> Result<Self> {
        let cat = &pres.cqg().category;
        let triv = cat.trivial().clone();
        let homs: Vec<Vec<BMatrix>> = (0..cat.label_count()).map(|i| pres.hom_basis(&triv, cat.irrep(i))).collect();
        let mut offsets = Vec::with_capacity(homs.len());
        let mut dim = 0;
        for (i, h) in homs.iter().enumerate() {
            offsets.push(dim);
            dim += cat.irrep(i).dim * h.len();
        }
        let mut out = Self { pres, homs, offsets, dim, ops: Vec::new() };
        out.ops = out.build_ops()?;
        Ok(out)
    }

    fn build_ops(&self) -> Result<Vec<Vec<CMatrix>>> {
        let cat = self.category();
        let mut all = Vec::with_capacity(cat.label_count());
        for i in 0..cat.label_count() {
            let u = cat.irrep(i).clone();
            let d = u.dim;
            let mut per = Vec::with_capacity(d * d);
            for r in 0..d {
                for s in 0..d {
                    let mut x = CMatrix::zeros(d, d);
                    x[(r, s)] = ONE;
                    let mut op = CMatrix::zeros(self.dim, self.dim);
                    for b in 0..self.dim {
                        let v = self.project(&self.triangle(&u, &x, &self.basis_element(b))?)?;
                        for (row, z) in v.into_iter().enumerate() {
                            op[(row, b)] = z;
                        }
                    }
                    per.push(op);
                }
            }
            all.push(per);
        }
        Ok(all)
    }

    pub fn presentation(&self) -> &Arc<dyn CentrallyPointedPresentation> {
        &self.pres
    }

    pub fn category(&self) -> &RepCategory {
        &self.pres.cqg().category
    }

    fn entries(&self) -> &StarAlgebra {
        self.pres.entries()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Multiplicity space dimensions `dim Hom(m, m ◁ U_i)`.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.homs.iter().map(Vec::len).collect()
    }

    /// `(label, k, t)` of a basis index, for the basis `ξ̄_k ⊗ T_{i,t}`.
    pub fn locate(&self, b: usize) -> (usize, usize, usize) {
        let cat = self.category();
        let i = (0..self.homs.len())
            .find(|&i| b < self.offsets[i] + cat.irrep(i).dim * self.homs[i].len())
            .expect("basis index in range");
        let m = self.homs[i].len();
        let local = b - self.offsets[i];
        (i, local / m, local % m)
    }

    pub fn basis_element(&self, b: usize) -> UniversalElement {
        let (i, k, t) = self.locate(b);
        let u = self.category().irrep(i).clone();
        let xi = CMatrix::basis_vector(u.dim, k);
        UniversalElement::elementary(u, xi, self.homs[i][t].clone())
    }

    /// `π`: projection to the regular part, in coordinates.
    pub fn project(&self, x: &UniversalElement) -> Result<Elem> {
        let cat = self.category();
        let mut out = vec![ZERO; self.dim];
        for s in cat.decompose(&x.rep)?.iter() {
            let i = s.label;
            let wa = s.isometry.adjoint();
            let m = self.homs[i].len();
            if m == 0 {
                continue;
            }
            for (xi, t) in &x.terms {
                let wt = t.lmul_scalar(&wa);
                let wx = &wa * xi;
                let coeffs: Vec<C64> = self.homs[i].iter().map(|b| coord_inner(b.coords(), wt.coords())).collect();
                for k in 0..wx.rows() {
                    let a = wx[(k, 0)].conj();
                    if a == ZERO {
                        continue;
                    }
                    for (t, cf) in coeffs.iter().enumerate() {
                        out[self.offsets[i] + k * m + t] += a * cf;
                    }
                }
            }
        }
        let total = elem_norm(&out);
        for i in 0..self.homs.len() {
            let range = self.offsets[i]..self.offsets[i] + cat.irrep(i).dim * self.homs[i].len();
            if elem_norm(&out[range.clone()]) <= PROJECTION_CUTOFF * total {
                out[range].iter_mut().for_each(|z| *z = ZERO);
            }
        }
        Ok(out)
    }

    /// `(ξ̄ ⊗ T) • (η̄ ⊗ S) = \overline{ξ ⊗ η} ⊗ (T ⊗ ι) S`.
    pub fn bullet(&self, x: &UniversalElement, y: &UniversalElement) -> UniversalElement {
        let alg = self.entries();
        let mut terms = Vec::with_capacity(x.terms.len() * y.terms.len());
        for (xi, t) in &x.terms {
            for (eta, s) in &y.terms {
                terms.push((xi.kron(eta), t.kron(alg, s)));
            }
        }
        UniversalElement { rep: self.category().tensor(&x.rep, &y.rep), terms }
    }

    /// `(ξ̄ ⊗ T)^† = \overline{\overline{ρ^{-1/2} ξ}} ⊗ (T^* ⊗ ι) R̄`.
    pub fn dagger(&self, x: &UniversalElement) -> Result<UniversalElement> {
        let alg = self.entries();
        let data = self.category().conjugate_data(&x.rep)?;
        let dc = data.conjugate.dim;
        let w = conj_twist(&data.rho, &data.j);
        let terms = x
            .terms
            .iter()
            .map(|(xi, t)| (&w * &xi.conj(), tensor_id_apply(&t.adjoint(alg), &data.rbar, dc)))
            .collect();
        Ok(UniversalElement { rep: data.conjugate, terms })
    }

    /// `x ▷̃ a` for `x` over `U` (matrix `X`) and `a` over `V`, landing over `U ⊗ V ⊗ Ū`.
    pub fn triangle(&self, u: &Rep, x: &CMatrix, a: &UniversalElement) -> Result<UniversalElement> {
        let cat = self.category();
        let data = cat.conjugate_data(u)?;
        let dc = data.conjugate.dim;
        // column p of Y is Σ_q conj(X_qp) J conj(ρ^{-1/2}) e_q
        let y = &conj_twist(&data.rho, &data.j) * &x.conj();
        let mut terms = Vec::with_capacity(a.terms.len());
        for (eta, t) in &a.terms {
            let m = tensor_id_apply(&self.pres.sigma_conj(u, t), &data.rbar, dc);
            let mut v = CMatrix::zeros(u.dim * eta.rows() * dc, 1);
            for p in 0..u.dim {
                v = &v + &CMatrix::basis_vector(u.dim, p).kron(eta).kron(&y.col(p));
            }
            terms.push((v, m));
        }
        let rep = cat.tensor(&cat.tensor(u, &a.rep), &data.conjugate);
        Ok(UniversalElement { rep, terms })
    }

    /// `π_G(x)` for `x` over a possibly reducible `U`, as per-label blocks.
    pub fn project_og(&self, u: &Rep, x: &CMatrix) -> Result<Vec<CMatrix>> {
        let cat = self.category();
        let mut out: Vec<CMatrix> = (0..cat.label_count()).map(|i| CMatrix::zeros(cat.irrep(i).dim, cat.irrep(i).dim)).collect();
        for s in cat.decompose(u)?.iter() {
            let blk = &(&s.isometry.adjoint() * x) * &s.isometry;
            out[s.label] = &out[s.label] + &blk;
        }
        Ok(out)
    }

    /// Operator of `X_i ▷ ·` on coordinates.
    pub fn block_operator(&self, i: usize, x: &CMatrix) -> CMatrix {
        let d = x.rows();
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for r in 0..d {
            for s in 0..d {
                if x[(r, s)] != ZERO {
                    out = &out + &self.ops[i][r * d + s].scale(x[(r, s)]);
                }
            }
        }
        out
    }

    /// `f ▷ a` for a regular `f` given by blocks.
    pub fn act_blocks(&self, blocks: &[CMatrix], a: &[C64]) -> Elem {
        let mut out = vec![ZERO; self.dim];
        let col = CMatrix::column(a);
        for (i, x) in blocks.iter().enumerate() {
            out = elem_add(&out, &(&self.block_operator(i, x) * &col).vec());
        }
        out
    }

    /// `f ▷ a` for `f` in the delta basis.
    pub fn act_function(&self, f: &[C64], a: &[C64]) -> Elem {
        self.act_blocks(&og_to_blocks(self.pres.cqg(), f), a)
    }

    /// The regular part as a YD algebra in its own right.
    pub fn assemble(&self) -> Result<FiniteYDAlgebra> {
        let cqg = self.pres.cqg().clone();
        let cat = self.category();
        let n = self.dim;
        let basis: Vec<UniversalElement> = (0..n).map(|b| self.basis_element(b)).collect();
        let mut table = Vec::with_capacity(n * n);
        for x in &basis {
            for y in &basis {
                table.push(self.project(&self.bullet(x, y))?);
            }
        }
        let unit = self.project(&UniversalElement::from_matrix(cat.trivial().clone(), &self.pres.unit()))?;
        let mut star = CMatrix::zeros(n, n);
        for (j, x) in basis.iter().enumerate() {
            for (r, z) in self.project(&self.dagger(x)?)?.into_iter().enumerate() {
                star[(r, j)] = z;
            }
        }
        let alg = StarAlgebra::from_basis_product(n, unit, star, |i, j| table[i * n + j].clone());
        let mut alpha = Vec::with_capacity(cqg.order());
        for g in 0..cqg.order() {
            let mut m = CMatrix::zeros(n, n);
            for (b, x) in basis.iter().enumerate() {
                // Z ↦ Z V(g), i.e. ξ ↦ V(g)^* ξ
                let vg = x.rep.gens[g].adjoint();
                let moved = UniversalElement { rep: x.rep.clone(), terms: x.terms.iter().map(|(xi, t)| (&vg * xi, t.clone())).collect() };
                for (r, z) in self.project(&moved)?.into_iter().enumerate() {
                    m[(r, b)] = z;
                }
            }
            alpha.push(m);
        }
        let grading = (0..cqg.order())
            .map(|x| {
                let blocks = og_to_blocks(&cqg, &cqg.delta(x));
                let mut m = CMatrix::zeros(n, n);
                for (i, blk) in blocks.iter().enumerate() {
                    m = &m + &self.block_operator(i, blk);
                }
                m
            })
            .collect();
        FiniteYDAlgebra::new(
            cqg,
            format!("B_M[{}]", self.pres.name()),
            alg,
            alpha,
            grading,
            "regular part of a centrally pointed bimodule category",
        )
    }
}

/// Largest residuals of the structural identities of the regular part.
#[derive(Clone, Debug, Default, Serialize)]
pub struct LemmaReport {
    /// `π_G(x) ▷ π(a) = π(x ▷̃ a)` on reducible objects.
    pub projection_compatible: f64,
    /// `x ▷ (y ▷ a) = π_G(x • y) ▷ a`.
    pub module: f64,
    /// `x ▷ (ab) = Σ (x_(1) ▷ a)(x_(2) ▷ b)` and `x ▷ 1 = ε(x) 1`.
    pub module_algebra: f64,
    /// `x ▷ a^* = (S(x)^* ▷ a)^*`.
    pub star: f64,
    /// Worst YD axiom of the assembled algebra.
    pub yd: f64,
}

impl LemmaReport {
    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("projection-compatible", self.projection_compatible),
            ("module", self.module),
            ("module-algebra", self.module_algebra),
            ("star", self.star),
            ("yd", self.yd),
        ]
    }

    pub fn worst(&self) -> f64 {
        self.entries().into_iter().map(|(_, v)| v).fold(0.0, f64::max)
    }
}

impl RegularPart {
    pub fn projection_residual(&self, u: &Rep, x: &CMatrix, a: &UniversalElement) -> Result<f64> {
        let lhs = self.act_blocks(&self.project_og(u, x)?, &self.project(a)?);
        let rhs = self.project(&self.triangle(u, x, a)?)?;
        Ok(elem_diff(&lhs, &rhs))
    }

    pub fn module_residual(&self, i: usize, x: &CMatrix, j: usize, y: &CMatrix, a: &[C64]) -> Result<f64> {
        let cat = self.category();
        let inner = self.act_blocks(&single_block(cat, j, y), a);
        let lhs = self.act_blocks(&single_block(cat, i, x), &inner);
        let prod = cat.tensor(cat.irrep(i), cat.irrep(j));
        let rhs = self.act_blocks(&self.project_og(&prod, &x.kron(y))?, a);
        Ok(elem_diff(&lhs, &rhs))
    }

    /// Residual for `u^i_kl` acting on `ab`, plus the unit condition.
    pub fn module_algebra_residual(&self, b: &FiniteYDAlgebra, i: usize, k: usize, l: usize, x: &[C64], y: &[C64]) -> f64 {
        let cat = self.category();
        let d = cat.irrep(i).dim;
        let mc = |r: usize, s: usize| {
            let mut m = CMatrix::zeros(d, d);
            m[(s, r)] = ONE;
            single_block(cat, i, &m)
        };
        let lhs = self.act_blocks(&mc(k, l), &b.mul(x, y));
        let mut rhs = vec![ZERO; self.dim];
        for m in 0..d {
            rhs = elem_add(&rhs, &b.mul(&self.act_blocks(&mc(k, m), x), &self.act_blocks(&mc(m, l), y)));
        }
        let unit = &b.alg.unit;
        let eps = if k == l { ONE } else { ZERO };
        elem_diff(&lhs, &rhs).max(elem_diff(&self.act_blocks(&mc(k, l), unit), &elem_scale(unit, eps)))
    }

    pub fn star_residual(&self, b: &FiniteYDAlgebra, f: &OgElem, a: &[C64]) -> f64 {
        let cqg = self.pres.cqg();
        let lhs = self.act_function(f, &b.star(a));
        let sf = cqg.og_star(&cqg.antipode(f));
        let rhs = b.star(&self.act_function(&sf, a));
        elem_diff(&lhs, &rhs)
    }
}

fn single_block(cat: &RepCategory, i: usize, x: &CMatrix) -> Vec<CMatrix> {
    (0..cat.label_count())
        .map(|j| if j == i { x.clone() } else { CMatrix::zeros(cat.irrep(j).dim, cat.irrep(j).dim) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqg::bundled_group;
    use crate::dualeng::{FiberFunctor, FromYDAlgebra};
    use crate::ydalg::{canonical_example, ExampleKind};

    fn fiber(name: &str) -> RegularPart {
        let g = Arc::new(bundled_group(name).unwrap());
        RegularPart::new(Arc::new(FiberFunctor::new(g))).unwrap()
    }

    #[test]
    fn fiber_regular_part_is_commutative_yd_algebra_of_group_order() {
        for name in ["z2", "s3"] {
            let r = fiber(name);
            let order = r.presentation().cqg().order();
            assert_eq!(r.dim(), order);
            let b = r.assemble().unwrap();
            let star = b.alg.verify();
            assert!(star.worst() < 1e-10, "{name}: {star:?}");
            assert!(b.alg.is_commutative(1e-10));
            let yd = b.verify_yd_axioms();
            assert!(yd.worst() < 1e-10, "{name}: {yd:?}");
        }
    }

    #[test]
    fn yd_regular_part_has_dimension_of_algebra() {
        let g = Arc::new(bundled_group("s3").unwrap());
        for kind in ExampleKind::all_for(&g) {
            let b = Arc::new(canonical_example(&g, kind).unwrap());
            let r = RegularPart::new(Arc::new(FromYDAlgebra::new(b.clone()))).unwrap();
            assert_eq!(r.dim(), b.dim(), "{}", kind.name());
            let m = r.assemble().unwrap();
            assert!(m.verify_yd_axioms().worst() < 1e-9, "{}: {:?}", kind.name(), m.verify_yd_axioms());
        }
    }

    #[test]
    fn projection_recovers_basis_coordinates() {
        let r = fiber("s3");
        for b in 0..r.dim() {
            let v = r.project(&r.basis_element(b)).unwrap();
            let mut e = vec![ZERO; r.dim()];
            e[b] = ONE;
            assert!(elem_diff(&v, &e) < 1e-12);
        }
    }

    #[test]
    fn dagger_is_involutive_up_to_projection() {
        let r = fiber("s3");
        for b in 0..r.dim() {
            let x = r.basis_element(b);
            let back = r.dagger(&r.dagger(&x).unwrap()).unwrap();
            let v = r.project(&back).unwrap();
            assert!(elem_diff(&v, &r.project(&x).unwrap()) < 1e-12);
        }
    }

    #[test]
    fn lemma_residuals_vanish_on_c_star_z3() {
        let g = Arc::new(bundled_group("z3").unwrap());
        let b = Arc::new(canonical_example(&g, ExampleKind::GroupAlgebraConjugation).unwrap());
        let r = RegularPart::new(Arc::new(FromYDAlgebra::new(b))).unwrap();
        let m = r.assemble().unwrap();
        let cat = r.category();
        let u = cat.tensor(cat.irrep(1), cat.irrep(2));
        let x = CMatrix::scalar(crate::numkernel::c(0.3, -0.7));
        let a = r.bullet(&r.basis_element(1), &r.basis_element(2));
        assert!(r.projection_residual(&u, &x, &a).unwrap() < 1e-12);
        let e = m.alg.basis(1);
        assert!(r.module_residual(1, &CMatrix::scalar(ONE), 2, &CMatrix::scalar(ONE), &e).unwrap() < 1e-12);
        assert!(r.module_algebra_residual(&m, 1, 0, 0, &m.alg.basis(1), &m.alg.basis(2)) < 1e-12);
        assert!(r.star_residual(&m, &g.delta(1), &e) < 1e-12);
    }
}
