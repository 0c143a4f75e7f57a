//! The category `D_B` of equivariant projective modules over a Yetter–Drinfeld
//! algebra, in trivialized form.
//!
//! `H_U ⊗ B` is stored as column vectors over `B`; right `B`-linear maps are
//! [`BMatrix`]es acting by left multiplication. The balanced product
//! `(H_V ⊗ B) ⊗_B (H_U ⊗ B)` is identified with `H_V ⊗ H_U ⊗ B` through
//! `(ζ ⊗ b) ⊗ y ↦ ζ ⊗ π_U(b) y`.

use serde::Serialize;

use crate::algebra::{BMatrix, Elem};
use crate::numkernel::{idempotent_range, CMatrix, Tolerance, C64, ONE, ZERO};
use crate::tensorcat::Rep;
use crate::ydalg::FiniteYDAlgebra;

/// Operators `a ↦ u_ij ▷ a` for the matrix coefficients of a (possibly reducible) representation.
pub struct CoefficientActions {
    dim: usize,
    ops: Vec<CMatrix>,
}

impl CoefficientActions {
    pub fn new(b: &FiniteYDAlgebra, u: &Rep) -> Self {
        let n = b.dim();
        let mut ops = Vec::with_capacity(u.dim * u.dim);
        for i in 0..u.dim {
            for j in 0..u.dim {
                let mut op = CMatrix::zeros(n, n);
                for (x, ux) in u.gens.iter().enumerate() {
                    let z = ux[(i, j)];
                    if z != ZERO {
                        op = &op + &b.grading[x].scale(z);
                    }
                }
                ops.push(op);
            }
        }
        Self { dim: u.dim, ops }
    }

    pub fn apply(&self, i: usize, j: usize, a: &[C64]) -> Elem {
        (&self.ops[i * self.dim + j] * &CMatrix::column(a)).vec()
    }
}

fn apply(m: &CMatrix, v: &[C64]) -> Elem {
    (m * &CMatrix::column(v)).vec()
}

/// `δ_U` at each group element: `D_g = U(g)^* ⊗ A_g` on `H_U ⊗ B`.
pub fn coaction_delta(b: &FiniteYDAlgebra, u: &Rep) -> Vec<CMatrix> {
    u.gens.iter().zip(&b.alpha).map(|(ug, ag)| ug.adjoint().kron(ag)).collect()
}

/// Coassociativity and counit residuals of `δ_U`, expanded through `Δ` on `O(G)`.
pub fn verify_coaction(b: &FiniteYDAlgebra, u: &Rep) -> (f64, f64) {
    let g = &b.cqg;
    let n = g.order();
    let d = coaction_delta(b, u);
    let dim = d[0].rows();
    let mut coassoc: f64 = 0.0;
    for x in 0..n {
        for y in 0..n {
            let mut lhs = CMatrix::zeros(dim, dim);
            for (h, dh) in d.iter().enumerate() {
                let z = g.og_coproduct(&g.delta(h))[x * n + y];
                if z != ZERO {
                    lhs = &lhs + &dh.scale(z);
                }
            }
            coassoc = coassoc.max((&lhs - &(&d[y] * &d[x])).max_abs());
        }
    }
    let mut eps_side = CMatrix::zeros(dim, dim);
    for (h, dh) in d.iter().enumerate() {
        eps_side = &eps_side + &dh.scale(g.counit(&g.delta(h)));
    }
    (coassoc, (&eps_side - &CMatrix::identity(dim)).max_abs())
}

/// `π_U(a) = Σ m_ij ⊗ (u_ij ▷ a)`.
pub fn left_rep_pi(b: &FiniteYDAlgebra, u: &Rep, a: &[C64]) -> BMatrix {
    let acts = CoefficientActions::new(b, u);
    BMatrix::from_fn(u.dim, u.dim, b.dim(), |i, j| acts.apply(i, j, a))
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PiReport {
    pub multiplicative: f64,
    pub unital: f64,
    pub star: f64,
    pub equivariance: f64,
}

impl PiReport {
    pub fn worst(&self) -> f64 {
        self.multiplicative.max(self.unital).max(self.star).max(self.equivariance)
    }
}

/// Checks that `π_U` is a unital *-homomorphism and satisfies
/// `δ_U(π_U(a) x) = ((id ⊗ π_U)α(a)) δ_U(x)` on full bases.
pub fn verify_pi(b: &FiniteYDAlgebra, u: &Rep) -> PiReport {
    let alg = &b.alg;
    let n = b.dim();
    let pis: Vec<BMatrix> = (0..n).map(|i| left_rep_pi(b, u, &alg.basis(i))).collect();
    let mut mult: f64 = 0.0;
    let mut star: f64 = 0.0;
    let mut equiv: f64 = 0.0;
    let unital = left_rep_pi(b, u, &alg.unit).dist(&BMatrix::identity(alg, u.dim));
    let deltas = coaction_delta(b, u);
    for i in 0..n {
        let a = alg.basis(i);
        star = star.max(left_rep_pi(b, u, &alg.star_of(&a)).dist(&pis[i].adjoint(alg)));
        for j in 0..n {
            let lhs = left_rep_pi(b, u, &alg.mul(&a, &alg.basis(j)));
            mult = mult.max(lhs.dist(&pis[i].mul(alg, &pis[j])));
        }
        let op = pis[i].to_operator(alg);
        for (x, dx) in deltas.iter().enumerate() {
            let moved = left_rep_pi(b, u, &apply(&b.alpha[x], &a)).to_operator(alg);
            equiv = equiv.max((&(dx * &op) - &(&moved * dx)).max_abs());
        }
    }
    PiReport { multiplicative: mult, unital, star, equivariance: equiv }
}

/// `S_{U,V}` on `H_V ⊗ H_U ⊗ B → H_U ⊗ H_V ⊗ B`, evaluated from
/// `(ζ ⊗ 1) ⊗ (ξ ⊗ a) ↦ Σ m^U_ij ξ ⊗ ζ ⊗ (u_ij ▷ 1) a`.
pub fn braiding_s(b: &FiniteYDAlgebra, u: &Rep, v: &Rep) -> BMatrix {
    let acts = CoefficientActions::new(b, u);
    let unit = &b.alg.unit;
    let (du, dv) = (u.dim, v.dim);
    let mut s = BMatrix::zeros(du * dv, dv * du, b.dim());
    for k in 0..dv {
        for j in 0..du {
            for i in 0..du {
                s.set(i * dv + k, k * du + j, &acts.apply(i, j, unit));
            }
        }
    }
    s
}

/// The defining formula of `S_{U,V}` on an elementary tensor `(ζ_k ⊗ c) ⊗ (ξ_j ⊗ a)`,
/// before passing to the balanced product; returns a vector in `H_U ⊗ H_V ⊗ B`.
pub fn braiding_s_unreduced(b: &FiniteYDAlgebra, u: &Rep, v: &Rep, k: usize, c: &[C64], j: usize, a: &[C64]) -> BMatrix {
    let acts = CoefficientActions::new(b, u);
    let (du, dv) = (u.dim, v.dim);
    let mut out = BMatrix::zeros(du * dv, 1, b.dim());
    for i in 0..du {
        out.set(i * dv + k, 0, &b.alg.mul(&acts.apply(i, j, c), a));
    }
    out
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SReport {
    pub unitarity: f64,
    pub bimodule: f64,
    pub equivariance: f64,
    pub balanced: f64,
}

impl SReport {
    pub fn worst(&self) -> f64 {
        self.unitarity.max(self.bimodule).max(self.equivariance).max(self.balanced)
    }
}

pub fn verify_s(b: &FiniteYDAlgebra, u: &Rep, v: &Rep, tensor_uv: &Rep) -> SReport {
    let alg = &b.alg;
    let n = b.dim();
    let (du, dv) = (u.dim, v.dim);
    let s = braiding_s(b, u, v);
    let sa = s.adjoint(alg);
    let unitarity = s.mul(alg, &sa).dist(&BMatrix::identity(alg, du * dv)).max(sa.mul(alg, &s).dist(&BMatrix::identity(alg, du * dv)));

    // left B-action on the balanced product: ζ_l ⊗ π_U(v_lk ▷ c)
    let vacts = CoefficientActions::new(b, v);
    let mut bimodule: f64 = 0.0;
    for ci in 0..n {
        let cvec = alg.basis(ci);
        let mut left = BMatrix::zeros(dv * du, dv * du, n);
        for l in 0..dv {
            for k in 0..dv {
                let blk = left_rep_pi(b, u, &vacts.apply(l, k, &cvec));
                for r in 0..du {
                    for t in 0..du {
                        left.set(l * du + r, k * du + t, blk.entry(r, t));
                    }
                }
            }
        }
        let rhs = left_rep_pi(b, tensor_uv, &cvec).mul(alg, &s);
        bimodule = bimodule.max(s.mul(alg, &left).dist(&rhs));
    }

    let src = coaction_delta(b, &Rep { dim: dv * du, gens: v.gens.iter().zip(&u.gens).map(|(x, y)| x.kron(y)).collect() });
    let tgt = coaction_delta(b, tensor_uv);
    let op = s.to_operator(alg);
    let mut equivariance: f64 = 0.0;
    for (ds, dt) in src.iter().zip(&tgt) {
        equivariance = equivariance.max((&(&op * ds) - &(dt * &op)).max_abs());
    }

    // Ŝ((ζ ⊗ c e) ⊗ (ξ ⊗ a)) = Ŝ((ζ ⊗ c) ⊗ π_U(e)(ξ ⊗ a)) and Ŝ = S ∘ identification
    let mut balanced: f64 = 0.0;
    for k in 0..dv {
        for j in 0..du {
            for ci in 0..n {
                let cvec = alg.basis(ci);
                for ai in 0..n {
                    let avec = alg.basis(ai);
                    let direct = braiding_s_unreduced(b, u, v, k, &cvec, j, &avec);
                    let mut y = BMatrix::zeros(du, 1, n);
                    y.set(j, 0, &avec);
                    let py = left_rep_pi(b, u, &cvec).mul(alg, &y);
                    let mut z = BMatrix::zeros(dv * du, 1, n);
                    for t in 0..du {
                        z.set(k * du + t, 0, py.entry(t, 0));
                    }
                    balanced = balanced.max(s.mul(alg, &z).dist(&direct));
                    for ei in 0..n {
                        let evec = alg.basis(ei);
                        let lhs = braiding_s_unreduced(b, u, v, k, &alg.mul(&cvec, &evec), j, &avec);
                        let pe = left_rep_pi(b, u, &evec).mul(alg, &y);
                        let mut rhs = BMatrix::zeros(du * dv, 1, n);
                        for t in 0..du {
                            rhs = rhs.add(&braiding_s_unreduced(b, u, v, k, &cvec, t, pe.entry(t, 0)));
                        }
                        balanced = balanced.max(lhs.dist(&rhs));
                    }
                }
            }
        }
    }
    SReport { unitarity, bimodule, equivariance, balanced }
}

/// `X ⊗_B id_{B_U}` on `H_V ⊗ H_U ⊗ B` for a module map `X` on `H_V ⊗ B`.
pub fn tensor_id_balanced(b: &FiniteYDAlgebra, x: &BMatrix, u: &Rep) -> BMatrix {
    let du = u.dim;
    let mut out = BMatrix::zeros(x.rows * du, x.cols * du, b.dim());
    for r in 0..x.rows {
        for s in 0..x.cols {
            let blk = left_rep_pi(b, u, x.entry(r, s));
            for i in 0..du {
                for j in 0..du {
                    out.set(r * du + i, s * du + j, blk.entry(i, j));
                }
            }
        }
    }
    out
}

/// `id_{B_W} ⊗ X` on `H_W ⊗ (·)`.
fn id_tensor(b: &FiniteYDAlgebra, dw: usize, x: &BMatrix) -> BMatrix {
    BMatrix::from_scalars(&b.alg, &CMatrix::identity(dw)).kron(&b.alg, x)
}

/// `‖S_{UV,W}(id_{B_W} ⊗ S_{U,V}) − S_{U,VW}(S_{V,W} ⊗ id_{B_U})‖`.
pub fn pentagon_residual(b: &FiniteYDAlgebra, u: &Rep, v: &Rep, w: &Rep, tensor: impl Fn(&Rep, &Rep) -> Rep) -> f64 {
    let alg = &b.alg;
    let uv = tensor(u, v);
    let vw = tensor(v, w);
    let lhs = braiding_s(b, &uv, w).mul(alg, &id_tensor(b, w.dim, &braiding_s(b, u, v)));
    let rhs = braiding_s(b, u, &vw).mul(alg, &tensor_id_balanced(b, &braiding_s(b, v, w), u));
    lhs.dist(&rhs)
}

/// `Σ_{U;V,W}(T)` with entries `((i,r),(j,s)) = u_ij ▷ T_rs`.
pub fn sigma_conjugate(b: &FiniteYDAlgebra, u: &Rep, t: &BMatrix) -> BMatrix {
    let acts = CoefficientActions::new(b, u);
    let du = u.dim;
    BMatrix::from_fn(du * t.rows, du * t.cols, b.dim(), |row, col| {
        let (i, r) = (row / t.rows, row % t.rows);
        let (j, s) = (col / t.cols, col % t.cols);
        acts.apply(i, j, t.entry(r, s))
    })
}

/// `T ◁ id_X = T ⊗ 1_X`.
pub fn right_tensor(b: &FiniteYDAlgebra, t: &BMatrix, x_dim: usize) -> BMatrix {
    t.kron(&b.alg, &BMatrix::identity(&b.alg, x_dim))
}

/// `‖D^W_g Op(T) − Op(T) D^V_g‖` over all `g`.
pub fn equivariance_residual(b: &FiniteYDAlgebra, v: &Rep, w: &Rep, t: &BMatrix) -> f64 {
    let op = t.to_operator(&b.alg);
    coaction_delta(b, v)
        .iter()
        .zip(coaction_delta(b, w))
        .map(|(dv, dw)| (&(&dw * &op) - &(&op * dv)).max_abs())
        .fold(0.0, f64::max)
}

/// Basis of equivariant right-module maps `H_V ⊗ B → H_W ⊗ B`, orthonormal in coordinates.
pub fn equivariant_hom_basis(b: &FiniteYDAlgebra, v: &Rep, w: &Rep) -> Vec<BMatrix> {
    let n = b.dim();
    let size = w.dim * v.dim * n;
    if size == 0 {
        return Vec::new();
    }
    // T ↦ mean_g W(g)^* A_g(T) V(g) on coordinates (r, s, k)
    let mut avg = CMatrix::zeros(size, size);
    for col in 0..size {
        let mut unit = vec![ZERO; size];
        unit[col] = ONE;
        let t = BMatrix::from_coords(w.dim, v.dim, n, unit);
        let mut acc = BMatrix::zeros(w.dim, v.dim, n);
        for ((wg, vg), ag) in w.gens.iter().zip(&v.gens).zip(&b.alpha) {
            let moved = t.map_entries(n, |e| apply(ag, e));
            acc = acc.add(&moved.lmul_scalar(&wg.adjoint()).rmul_scalar(vg));
        }
        let scale = 1.0 / b.cqg.order() as f64;
        for (r, z) in acc.coords().iter().enumerate() {
            avg[(r, col)] = z * scale;
        }
    }
    let range = idempotent_range(&avg);
    (0..range.cols()).map(|k| BMatrix::from_coords(w.dim, v.dim, n, range.col(k).vec())).collect()
}

/// An object `(W, p)` of `D_B`: a projection on `H_W ⊗ B`.
#[derive(Clone, Debug)]
pub struct EquivariantModule {
    pub w: Rep,
    pub p: BMatrix,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ModuleReport {
    pub self_adjoint: f64,
    pub idempotent: f64,
    pub equivariance: f64,
    pub right_linearity: f64,
}

impl EquivariantModule {
    pub fn free(b: &FiniteYDAlgebra, w: Rep) -> Self {
        let p = BMatrix::identity(&b.alg, w.dim);
        Self { w, p }
    }

    pub fn new(b: &FiniteYDAlgebra, w: Rep, p: BMatrix, tol: Tolerance) -> crate::Result<Self> {
        let m = Self { w, p };
        let r = m.verify(b);
        if r.self_adjoint.max(r.idempotent).max(r.equivariance) > tol.eps {
            return Err(crate::Error::NotAProjection(format!("equivariant module check failed: {r:?}")));
        }
        Ok(m)
    }

    pub fn verify(&self, b: &FiniteYDAlgebra) -> ModuleReport {
        let alg = &b.alg;
        let n = b.dim();
        let self_adjoint = self.p.adjoint(alg).dist(&self.p);
        let idempotent = self.p.mul(alg, &self.p).dist(&self.p);
        let equivariance = equivariance_residual(b, &self.w, &self.w, &self.p);
        let op = self.p.to_operator(alg);
        let mut right_linearity: f64 = 0.0;
        for k in 0..n {
            let e = alg.basis(k);
            let rmul = CMatrix::from_fn(n, n, |r, c| alg.mul(&alg.basis(c), &e)[r]);
            let big = CMatrix::identity(self.w.dim).kron(&rmul);
            right_linearity = right_linearity.max((&(&op * &big) - &(&big * &op)).max_abs());
        }
        ModuleReport { self_adjoint, idempotent, equivariance, right_linearity }
    }

    /// Rank of the projection as a complex matrix.
    pub fn complex_rank(&self, b: &FiniteYDAlgebra) -> usize {
        self.p.to_operator(&b.alg).rank(Tolerance::default())
    }
}

/// `V ▷ (W, p) = (V ⊗ W, Σ_V(p))`.
pub fn left_act(b: &FiniteYDAlgebra, v: &Rep, x: &EquivariantModule, tensor: impl Fn(&Rep, &Rep) -> Rep) -> EquivariantModule {
    EquivariantModule { w: tensor(v, &x.w), p: sigma_conjugate(b, v, &x.p) }
}

/// Residual of the braid relation `Σ_{U⊗V} = Σ_U ∘ Σ_V` on a module map.
pub fn braid_relation_residual(b: &FiniteYDAlgebra, u: &Rep, v: &Rep, uv: &Rep, t: &BMatrix) -> f64 {
    sigma_conjugate(b, uv, t).dist(&sigma_conjugate(b, u, &sigma_conjugate(b, v, t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqg::bundled_group;
    use crate::ydalg::{canonical_example, ExampleKind};
    use std::sync::Arc;

    fn setup(group: &str, kind: ExampleKind) -> FiniteYDAlgebra {
        canonical_example(&Arc::new(bundled_group(group).unwrap()), kind).unwrap()
    }

    #[test]
    fn trivial_rep_delta_is_alpha() {
        let b = setup("s3", ExampleKind::GroupAlgebraConjugation);
        let triv = b.cqg.category.trivial().clone();
        for (d, a) in coaction_delta(&b, &triv).iter().zip(&b.alpha) {
            assert!((d - a).max_abs() < 1e-14);
        }
    }

    #[test]
    fn scalar_algebra_delta_is_contragredient() {
        let b = setup("s3", ExampleKind::Trivial);
        let std = b.cqg.category.irrep(2).clone();
        for (g, d) in coaction_delta(&b, &std).iter().enumerate() {
            assert!((d - &b.cqg.u(2, g).adjoint()).max_abs() < 1e-14);
        }
    }

    #[test]
    fn coaction_laws() {
        let b = setup("s3", ExampleKind::GroupAlgebraConjugation);
        let std = b.cqg.category.irrep(2).clone();
        let (ca, cu) = verify_coaction(&b, &std);
        assert!(ca < 1e-12 && cu < 1e-12);
    }

    #[test]
    fn trivial_grading_pi_is_diagonal() {
        let b = setup("s3", ExampleKind::FunctionConjugation);
        let std = b.cqg.category.irrep(2).clone();
        let a: Vec<C64> = (0..6).map(|i| crate::numkernel::c(i as f64, -1.0)).collect();
        let pi = left_rep_pi(&b, &std, &a);
        let expect = BMatrix::from_fn(2, 2, 6, |r, c| if r == c { a.clone() } else { vec![ZERO; 6] });
        assert!(pi.dist(&expect) < 1e-12);
    }

    #[test]
    fn pi_and_s_on_s3() {
        let b = setup("s3", ExampleKind::GroupAlgebraConjugation);
        let cat = &b.cqg.category;
        for i in 0..3 {
            let u = cat.irrep(i).clone();
            assert!(verify_pi(&b, &u).worst() < 1e-10);
            for j in 0..3 {
                let v = cat.irrep(j).clone();
                let r = verify_s(&b, &u, &v, &cat.tensor(&u, &v));
                assert!(r.worst() < 1e-10, "{i} {j} {r:?}");
            }
        }
    }

    #[test]
    fn trivial_grading_s_is_flip() {
        let b = setup("z3", ExampleKind::FunctionConjugation);
        let cat = &b.cqg.category;
        let (u, v) = (cat.irrep(1).clone(), cat.irrep(2).clone());
        let s = braiding_s(&b, &u, &v);
        assert!(s.dist(&BMatrix::identity(&b.alg, 1)) < 1e-14);
    }

    #[test]
    fn pentagon_z3() {
        let b = setup("z3", ExampleKind::GroupAlgebraConjugation);
        let cat = &b.cqg.category;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let r = pentagon_residual(&b, cat.irrep(i), cat.irrep(j), cat.irrep(k), |x, y| cat.tensor(x, y));
                    assert!(r < 1e-12);
                }
            }
        }
    }

    #[test]
    fn sigma_functorial_and_trivial() {
        let b = setup("s3", ExampleKind::GroupAlgebraConjugation);
        let cat = &b.cqg.category;
        let std = cat.irrep(2).clone();
        let hom = equivariant_hom_basis(&b, &std, &std);
        assert!(!hom.is_empty());
        let triv = cat.trivial().clone();
        for t in &hom {
            assert!(equivariance_residual(&b, &std, &std, t) < 1e-10);
            assert!(sigma_conjugate(&b, &triv, t).dist(t) < 1e-14);
            for s in &hom {
                let lhs = sigma_conjugate(&b, &std, &t.mul(&b.alg, s));
                let rhs = sigma_conjugate(&b, &std, t).mul(&b.alg, &sigma_conjugate(&b, &std, s));
                assert!(lhs.dist(&rhs) < 1e-10);
            }
            let uv = cat.tensor(&std, &std);
            assert!(braid_relation_residual(&b, &std, &std, &uv, t) < 1e-10);
        }
    }

    #[test]
    fn sigma_trivial_grading_is_identity_tensor() {
        let b = setup("s3", ExampleKind::FunctionConjugation);
        let cat = &b.cqg.category;
        let std = cat.irrep(2).clone();
        let t = left_rep_pi(&b, &std, &b.alg.basis(3));
        let s = sigma_conjugate(&b, &std, &t);
        let expect = BMatrix::identity(&b.alg, 2).kron(&b.alg, &t);
        assert!(s.dist(&expect) < 1e-12);
    }

    #[test]
    fn left_action_on_free_modules() {
        let b = setup("z2", ExampleKind::GroupAlgebraConjugation);
        let cat = &b.cqg.category;
        let tensor = |x: &Rep, y: &Rep| cat.tensor(x, y);
        let free = EquivariantModule::free(&b, cat.trivial().clone());
        let sign = cat.irrep(1).clone();
        let m = left_act(&b, &sign, &free, tensor);
        assert_eq!(m.w.dim, 1);
        assert!(m.p.dist(&BMatrix::identity(&b.alg, 1)) < 1e-14);
        let triv = cat.trivial().clone();
        let same = left_act(&b, &triv, &m, tensor);
        assert!(same.p.dist(&m.p) < 1e-14);
        // U ▷ (V ▷ X) = (U ⊗ V) ▷ X
        let nested = left_act(&b, &sign, &left_act(&b, &sign, &free, tensor), tensor);
        let direct = left_act(&b, &cat.tensor(&sign, &sign), &free, tensor);
        assert!(nested.p.dist(&direct.p) < 1e-14);
        let r = m.verify(&b);
        assert!(r.self_adjoint.max(r.idempotent).max(r.equivariance).max(r.right_linearity) < 1e-12);
        assert_eq!(m.complex_rank(&b), b.dim());
    }

    #[test]
    fn projection_modules() {
        // in C(S3) the indicator of a conjugacy class is an invariant projection, a single δ_g is not
        let b = setup("s3", ExampleKind::FunctionConjugation);
        let triv = b.cqg.category.trivial().clone();
        let p = BMatrix::from_coords(1, 1, 6, b.alg.basis(0));
        let m = EquivariantModule::new(&b, triv.clone(), p, Tolerance::default()).unwrap();
        assert_eq!(m.complex_rank(&b), 1);
        let q = BMatrix::from_coords(1, 1, 6, b.alg.basis(1));
        assert!(EquivariantModule::new(&b, triv, q, Tolerance::default()).is_err());
    }
}
