//! Finite-dimensional Yetter–Drinfeld G-C*-algebras over a finite group.
//!
//! The coaction is stored as the family `A_g` with `α(b) = Σ_g δ_g ⊗ A_g b`;
//! coassociativity makes `g ↦ A_g` an anti-homomorphism, so `A_g = γ_{g^-1}` for the
//! left action `γ`. The `O(G)`-action is a grading: `δ_x ▷ b = P_x b`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{elem_add, elem_diff, elem_scale, BMatrix, Elem, StarAlgebra};
use crate::cqg::FiniteCQG;
use crate::error::{Error, Result};
use crate::numkernel::{CMatrix, Tolerance, C64, ONE, ZERO};

#[derive(Clone, Debug)]
pub struct FiniteYDAlgebra {
    pub cqg: Arc<FiniteCQG>,
    pub name: String,
    pub alg: StarAlgebra,
    /// `A_g`, one per group element.
    pub alpha: Vec<CMatrix>,
    /// `P_x = δ_x ▷ ·`, one per group element.
    pub grading: Vec<CMatrix>,
    /// Free-form note on conventions (e.g. coaction orientation).
    pub metadata: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExampleKind {
    Trivial,
    FunctionConjugation,
    GroupAlgebraConjugation,
    FunctionTranslationTrivialGrading,
    /// `B(H_U)` with the adjoint action of the given irreducible and trivial grading.
    AdjointMatrixBlock(usize),
}

impl ExampleKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(Self::Trivial),
            "function-conjugation" => Ok(Self::FunctionConjugation),
            "group-algebra-conjugation" => Ok(Self::GroupAlgebraConjugation),
            "function-translation-trivial-grading" => Ok(Self::FunctionTranslationTrivialGrading),
            _ => match s.strip_prefix("adjoint-matrix-block:") {
                Some(l) => l.parse().map(Self::AdjointMatrixBlock).map_err(|_| Error::BadParameter(format!("bad label in '{s}'"))),
                None => Err(Error::BadParameter(format!("unknown algebra kind '{s}'"))),
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Trivial => "trivial".into(),
            Self::FunctionConjugation => "function-conjugation".into(),
            Self::GroupAlgebraConjugation => "group-algebra-conjugation".into(),
            Self::FunctionTranslationTrivialGrading => "function-translation-trivial-grading".into(),
            Self::AdjointMatrixBlock(l) => format!("adjoint-matrix-block:{l}"),
        }
    }

    /// Every shipped example for a group, with the matrix block on its largest irreducible.
    pub fn all_for(cqg: &FiniteCQG) -> Vec<Self> {
        let dims = cqg.dims();
        let big = (0..dims.len()).max_by_key(|&i| (dims[i], usize::MAX - i)).unwrap_or(0);
        vec![
            Self::Trivial,
            Self::FunctionConjugation,
            Self::GroupAlgebraConjugation,
            Self::FunctionTranslationTrivialGrading,
            Self::AdjointMatrixBlock(big),
        ]
    }
}

/// Per-axiom worst residuals over full bases.
#[derive(Clone, Debug, Serialize)]
pub struct YdReport {
    pub associativity: f64,
    pub unit: f64,
    pub star_involutive: f64,
    pub star_anti_multiplicative: f64,
    pub coaction_homomorphism: f64,
    pub coassociativity: f64,
    pub counit: f64,
    pub module_law: f64,
    pub module_unit: f64,
    pub module_algebra: f64,
    pub star_condition: f64,
    pub yd_condition: f64,
}

impl YdReport {
    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("associativity", self.associativity),
            ("unit", self.unit),
            ("star-involutive", self.star_involutive),
            ("star-anti-multiplicative", self.star_anti_multiplicative),
            ("coaction-homomorphism", self.coaction_homomorphism),
            ("coassociativity", self.coassociativity),
            ("counit", self.counit),
            ("module-law", self.module_law),
            ("module-unit", self.module_unit),
            ("module-algebra", self.module_algebra),
            ("star-condition", self.star_condition),
            ("yd-condition", self.yd_condition),
        ]
    }

    pub fn worst(&self) -> f64 {
        self.entries().into_iter().map(|(_, r)| r).fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: Tolerance) -> bool {
        self.worst() < tol.eps
    }
}

fn apply(m: &CMatrix, v: &[C64]) -> Elem {
    (m * &CMatrix::column(v)).vec()
}

impl FiniteYDAlgebra {
    pub fn new(
        cqg: Arc<FiniteCQG>,
        name: impl Into<String>,
        alg: StarAlgebra,
        alpha: Vec<CMatrix>,
        grading: Vec<CMatrix>,
        metadata: impl Into<String>,
    ) -> Result<Self> {
        let name = name.into();
        let n = cqg.order();
        if alg.dim == 0 {
            return Err(Error::BadParameter(format!("{name}: zero-dimensional algebra")));
        }
        let shape_ok = |m: &CMatrix| m.rows() == alg.dim && m.cols() == alg.dim;
        if alpha.len() != n || grading.len() != n || !alpha.iter().chain(&grading).all(shape_ok) {
            return Err(Error::BadParameter(format!("{name}: coaction or grading has wrong shape")));
        }
        if alg.left.len() != alg.dim || alg.unit.len() != alg.dim || !shape_ok(&alg.star) {
            return Err(Error::BadParameter(format!("{name}: structure tensors have wrong shape")));
        }
        Ok(Self { cqg, name, alg, alpha, grading, metadata: metadata.into() })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn mul(&self, a: &[C64], b: &[C64]) -> Elem {
        self.alg.mul(a, b)
    }

    pub fn star(&self, a: &[C64]) -> Elem {
        self.alg.star_of(a)
    }

    /// `α(a)` as the family `(A_g a)_g`.
    pub fn coact(&self, a: &[C64]) -> Vec<Elem> {
        self.alpha.iter().map(|m| apply(m, a)).collect()
    }

    /// `f ▷ a` for `f` in the delta basis.
    pub fn act(&self, f: &[C64], a: &[C64]) -> Elem {
        let mut out = self.alg.zero();
        for (x, fx) in f.iter().enumerate() {
            if *fx != ZERO {
                out = elem_add(&out, &elem_scale(&apply(&self.grading[x], a), *fx));
            }
        }
        out
    }

    /// `u^i_kl ▷ a`.
    pub fn act_mc(&self, i: usize, k: usize, l: usize, a: &[C64]) -> Elem {
        self.act(&self.cqg.matrix_coefficient(i, k, l), a)
    }

    /// Operator `a ↦ u^i_kl ▷ a`.
    pub fn mc_operator(&self, i: usize, k: usize, l: usize) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim(), self.dim());
        for x in 0..self.cqg.order() {
            out = &out + &self.grading[x].scale(self.cqg.u(i, x)[(k, l)]);
        }
        out
    }

    /// Block `i` of `β(a) = Σ (u^i_kl ▷ a) ⊗ m^i_kl`, as a `d_i × d_i` matrix over `B`.
    pub fn beta_block(&self, i: usize, a: &[C64]) -> BMatrix {
        let d = self.cqg.group.irreps[i].dim;
        BMatrix::from_fn(d, d, self.dim(), |k, l| self.act_mc(i, k, l, a))
    }

    pub fn beta_map(&self, a: &[C64]) -> Vec<BMatrix> {
        (0..self.cqg.irrep_count()).map(|i| self.beta_block(i, a)).collect()
    }

    /// Numerical rank of `a ↦ β(a)` (equals `dim B` iff `β` is injective).
    pub fn beta_rank(&self, tol: Tolerance) -> usize {
        let cols: Vec<CMatrix> = (0..self.dim())
            .map(|j| {
                let v: Vec<C64> = self.beta_map(&self.alg.basis(j)).iter().flat_map(|b| b.coords().to_vec()).collect();
                CMatrix::column(&v)
            })
            .collect();
        CMatrix::hstack(&cols).rank(tol)
    }

    /// Worst residuals of multiplicativity and *-preservation of `β` over basis pairs.
    pub fn verify_beta(&self) -> (f64, f64) {
        let mut mult: f64 = 0.0;
        let mut star: f64 = 0.0;
        let n = self.dim();
        for i in 0..self.cqg.irrep_count() {
            for p in 0..n {
                let a = self.alg.basis(p);
                let ba = self.beta_block(i, &a);
                star = star.max(self.beta_block(i, &self.star(&a)).dist(&ba.adjoint(&self.alg)));
                for q in 0..n {
                    let b = self.alg.basis(q);
                    let lhs = self.beta_block(i, &self.mul(&a, &b));
                    let rhs = ba.mul(&self.alg, &self.beta_block(i, &b));
                    mult = mult.max(lhs.dist(&rhs));
                }
            }
        }
        (mult, star)
    }

    /// Checks every Yetter–Drinfeld axiom on full bases of `B` and `O(G)`.
    pub fn verify_yd_axioms(&self) -> YdReport {
        let g = &self.cqg;
        let n = g.order();
        let dim = self.dim();
        let base = self.alg.verify();
        let basis: Vec<Elem> = (0..dim).map(|i| self.alg.basis(i)).collect();
        let deltas: Vec<Vec<C64>> = (0..n).map(|x| g.delta(x)).collect();

        // α is a unital *-homomorphism
        let mut coact_hom: f64 = 0.0;
        for (x, ax) in self.alpha.iter().enumerate() {
            let _ = x;
            coact_hom = coact_hom.max(elem_diff(&apply(ax, &self.alg.unit), &self.alg.unit));
            for a in &basis {
                let aa = apply(ax, a);
                coact_hom = coact_hom.max(elem_diff(&apply(ax, &self.star(a)), &self.star(&aa)));
                for b in &basis {
                    let lhs = apply(ax, &self.mul(a, b));
                    coact_hom = coact_hom.max(elem_diff(&lhs, &self.mul(&aa, &apply(ax, b))));
                }
            }
        }

        // (Δ ⊗ id)α = (id ⊗ α)α and (ε ⊗ id)α = id
        let mut coassoc: f64 = 0.0;
        let mut counit: f64 = 0.0;
        for a in &basis {
            let al = self.coact(a);
            let mut eps_side = self.alg.zero();
            for (h, v) in al.iter().enumerate() {
                eps_side = elem_add(&eps_side, &elem_scale(v, g.counit(&deltas[h])));
            }
            counit = counit.max(elem_diff(&eps_side, a));
            for x in 0..n {
                for y in 0..n {
                    // coefficient of δ_x ⊗ δ_y
                    let mut lhs = self.alg.zero();
                    for (h, v) in al.iter().enumerate() {
                        let d = g.og_coproduct(&deltas[h]);
                        if d[x * n + y] != ZERO {
                            lhs = elem_add(&lhs, &elem_scale(v, d[x * n + y]));
                        }
                    }
                    let rhs = apply(&self.alpha[y], &al[x]);
                    coassoc = coassoc.max(elem_diff(&lhs, &rhs));
                }
            }
        }

        // module law, unit, module-algebra and star condition
        let mut module_law: f64 = 0.0;
        let mut module_unit: f64 = 0.0;
        let mut module_alg: f64 = 0.0;
        let mut star_cond: f64 = 0.0;
        let one = g.og_unit();
        for a in &basis {
            module_unit = module_unit.max(elem_diff(&self.act(&one, a), a));
        }
        for f in &deltas {
            for h in &deltas {
                let fh = g.og_product(f, h);
                for a in &basis {
                    module_law = module_law.max(elem_diff(&self.act(&fh, a), &self.act(f, &self.act(h, a))));
                }
            }
            let df = g.og_coproduct(f);
            let unit_side = elem_scale(&self.alg.unit, g.counit(f));
            module_alg = module_alg.max(elem_diff(&self.act(f, &self.alg.unit), &unit_side));
            let sf = g.og_star(&g.antipode(f));
            for a in &basis {
                star_cond = star_cond.max(elem_diff(&self.act(f, &self.star(a)), &self.star(&self.act(&sf, a))));
                for b in &basis {
                    let lhs = self.act(f, &self.mul(a, b));
                    let mut rhs = self.alg.zero();
                    for p in 0..n {
                        for q in 0..n {
                            let z = df[p * n + q];
                            if z != ZERO {
                                let t = self.mul(&self.act(&deltas[p], a), &self.act(&deltas[q], b));
                                rhs = elem_add(&rhs, &elem_scale(&t, z));
                            }
                        }
                    }
                    module_alg = module_alg.max(elem_diff(&lhs, &rhs));
                }
            }
        }

        // α(f ▷ a) = f_(1) a_(1) S(f_(3)) ⊗ (f_(2) ▷ a_(2))
        let mut yd: f64 = 0.0;
        for f in &deltas {
            let d1 = g.og_coproduct(f);
            let mut triples = Vec::new();
            for p in 0..n {
                for qr in 0..n {
                    let z1 = d1[p * n + qr];
                    if z1 == ZERO {
                        continue;
                    }
                    let d2 = g.og_coproduct(&deltas[qr]);
                    for q in 0..n {
                        for r in 0..n {
                            let z2 = d2[q * n + r];
                            if z2 != ZERO {
                                triples.push((p, q, r, z1 * z2));
                            }
                        }
                    }
                }
            }
            for a in &basis {
                let lhs = self.coact(&self.act(f, a));
                let al = self.coact(a);
                let mut rhs = vec![self.alg.zero(); n];
                for &(p, q, r, z) in &triples {
                    let sr = g.antipode(&deltas[r]);
                    for (h, ah) in al.iter().enumerate() {
                        let leg = g.og_product(&g.og_product(&deltas[p], &deltas[h]), &sr);
                        if leg.iter().all(|w| *w == ZERO) {
                            continue;
                        }
                        let right = self.act(&deltas[q], ah);
                        for (x, w) in leg.iter().enumerate() {
                            if *w != ZERO {
                                rhs[x] = elem_add(&rhs[x], &elem_scale(&right, z * w));
                            }
                        }
                    }
                }
                for x in 0..n {
                    yd = yd.max(elem_diff(&lhs[x], &rhs[x]));
                }
            }
        }

        YdReport {
            associativity: base.associativity,
            unit: base.unit,
            star_involutive: base.star_involutive,
            star_anti_multiplicative: base.star_anti_multiplicative,
            coaction_homomorphism: coact_hom,
            coassociativity: coassoc,
            counit,
            module_law,
            module_unit,
            module_algebra: module_alg,
            star_condition: star_cond,
            yd_condition: yd,
        }
    }
}

fn permutation(n: usize, f: impl Fn(usize) -> usize) -> CMatrix {
    CMatrix::from_fn(n, n, |r, c| if f(c) == r { ONE } else { ZERO })
}

fn function_algebra(n: usize) -> StarAlgebra {
    StarAlgebra::from_basis_product(n, vec![ONE; n], CMatrix::identity(n), |i, j| {
        let mut v = vec![ZERO; n];
        if i == j {
            v[i] = ONE;
        }
        v
    })
}

fn trivial_grading(n: usize, dim: usize) -> Vec<CMatrix> {
    (0..n).map(|x| if x == 0 { CMatrix::identity(dim) } else { CMatrix::zeros(dim, dim) }).collect()
}

/// Shipped Yetter–Drinfeld algebras over a finite group.
pub fn canonical_example(cqg: &Arc<FiniteCQG>, kind: ExampleKind) -> Result<FiniteYDAlgebra> {
    let g = &cqg.group;
    let n = g.order;
    let name = format!("{}/{}", g.name, kind.name());
    match kind {
        ExampleKind::Trivial => {
            let alg = StarAlgebra::from_basis_product(1, vec![ONE], CMatrix::identity(1), |_, _| vec![ONE]);
            FiniteYDAlgebra::new(cqg.clone(), name, alg, vec![CMatrix::identity(1); n], trivial_grading(n, 1), "scalars")
        }
        ExampleKind::FunctionConjugation => {
            // A_h δ_g = δ_{h^-1 g h}
            let alpha = (0..n).map(|h| permutation(n, |x| g.mul(g.mul(g.inv(h), x), h))).collect();
            FiniteYDAlgebra::new(cqg.clone(), name, function_algebra(n), alpha, trivial_grading(n, n), "C(G); alpha(d_g) = sum_h d_h (x) d_{h^-1 g h}; trivial grading")
        }
        ExampleKind::GroupAlgebraConjugation => {
            let alg = StarAlgebra::from_basis_product(
                n,
                {
                    let mut u = vec![ZERO; n];
                    u[0] = ONE;
                    u
                },
                permutation(n, |x| g.inv(x)),
                |i, j| {
                    let mut v = vec![ZERO; n];
                    v[g.mul(i, j)] = ONE;
                    v
                },
            );
            let alpha = (0..n).map(|h| permutation(n, |x| g.mul(g.mul(g.inv(h), x), h))).collect();
            let grading = (0..n).map(|x| CMatrix::from_fn(n, n, |r, c| if r == x && c == x { ONE } else { ZERO })).collect();
            FiniteYDAlgebra::new(cqg.clone(), name, alg, alpha, grading, "C*(G); alpha(l_g) = sum_h d_h (x) l_{h^-1 g h}; l_g has degree g")
        }
        ExampleKind::FunctionTranslationTrivialGrading => {
            // A_h δ_g = δ_{h^-1 g}
            let alpha = (0..n).map(|h| permutation(n, |x| g.mul(g.inv(h), x))).collect();
            FiniteYDAlgebra::new(cqg.clone(), name, function_algebra(n), alpha, trivial_grading(n, n), "C(G); alpha(d_g) = sum_h d_h (x) d_{h^-1 g}; trivial grading")
        }
        ExampleKind::AdjointMatrixBlock(label) => {
            if label >= cqg.irrep_count() {
                return Err(Error::BadParameter(format!("no irreducible with index {label}")));
            }
            let d = g.irreps[label].dim;
            let dim = d * d;
            let idx = |r: usize, s: usize| r * d + s;
            let star = CMatrix::from_fn(dim, dim, |a, b| if a == idx(b % d, b / d) { ONE } else { ZERO });
            let mut unit = vec![ZERO; dim];
            for r in 0..d {
                unit[idx(r, r)] = ONE;
            }
            let alg = StarAlgebra::from_basis_product(dim, unit, star, |i, j| {
                let mut v = vec![ZERO; dim];
                if i % d == j / d {
                    v[idx(i / d, j % d)] = ONE;
                }
                v
            });
            // A_h T = U(h)^* T U(h), on row-major coordinates
            let alpha = (0..n)
                .map(|h| {
                    let u = cqg.u(label, h);
                    CMatrix::from_fn(dim, dim, |a, b| {
                        let (r, s) = (a / d, a % d);
                        let (p, q) = (b / d, b % d);
                        u[(p, r)].conj() * u[(q, s)]
                    })
                })
                .collect();
            FiniteYDAlgebra::new(cqg.clone(), name, alg, alpha, trivial_grading(n, dim), "B(H_U); A_h(T) = U(h)^* T U(h); trivial grading")
        }
    }
}

/// `C*(G)` graded by `g^-1` instead of `g`: the coaction and star condition survive,
/// module-algebra compatibility does not for nonabelian `G`.
pub fn corrupted_group_algebra(cqg: &Arc<FiniteCQG>) -> Result<FiniteYDAlgebra> {
    let mut b = canonical_example(cqg, ExampleKind::GroupAlgebraConjugation)?;
    let g = &cqg.group;
    let n = g.order;
    b.grading = (0..n)
        .map(|x| {
            let xi = g.inv(x);
            CMatrix::from_fn(n, n, |r, c| if r == xi && c == xi { ONE } else { ZERO })
        })
        .collect();
    b.name = format!("{}/corrupted-grading", g.name);
    b.metadata = "C*(G); l_g has degree g^-1".into();
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqg::{bundled_group, bundled_names};

    fn group(name: &str) -> Arc<FiniteCQG> {
        Arc::new(bundled_group(name).unwrap())
    }

    #[test]
    fn trivial_algebra_residuals_zero() {
        let g = group("s3");
        let b = canonical_example(&g, ExampleKind::Trivial).unwrap();
        assert_eq!(b.dim(), 1);
        assert_eq!(b.verify_yd_axioms().worst(), 0.0);
    }

    #[test]
    fn all_examples_pass() {
        for name in bundled_names() {
            let g = group(name);
            for kind in ExampleKind::all_for(&g) {
                let b = canonical_example(&g, kind).unwrap();
                let r = b.verify_yd_axioms();
                assert!(r.worst() < 1e-9, "{} {:?}", b.name, r);
            }
        }
    }

    #[test]
    fn s3_dimensions_and_commutativity() {
        let g = group("s3");
        let f = canonical_example(&g, ExampleKind::FunctionConjugation).unwrap();
        assert_eq!(f.dim(), 6);
        assert!(f.alg.is_commutative(1e-12));
        let c = canonical_example(&g, ExampleKind::GroupAlgebraConjugation).unwrap();
        assert_eq!(c.dim(), 6);
        assert!(!c.alg.is_commutative(1e-12));
    }

    #[test]
    fn corrupted_grading_flagged() {
        let g = group("s3");
        let b = corrupted_group_algebra(&g).unwrap();
        let r = b.verify_yd_axioms();
        assert!(r.module_algebra > 0.5, "{r:?}");
        assert!(r.worst() > 1e-2);
    }

    #[test]
    fn tautological_function_grading_is_not_yd() {
        // C(S3) graded by δ_g ∈ B_g fails the star and module-algebra conditions
        let g = group("s3");
        let mut b = canonical_example(&g, ExampleKind::FunctionConjugation).unwrap();
        b.grading = (0..6).map(|x| CMatrix::from_fn(6, 6, |r, c| if r == x && c == x { ONE } else { ZERO })).collect();
        let r = b.verify_yd_axioms();
        assert!(r.star_condition > 0.5 && r.module_algebra > 0.5);
    }

    #[test]
    fn beta_trivial_action() {
        let g = group("s3");
        let b = canonical_example(&g, ExampleKind::FunctionConjugation).unwrap();
        let a: Vec<C64> = (0..6).map(|i| crate::numkernel::c(i as f64, 1.0)).collect();
        for (i, blk) in b.beta_map(&a).iter().enumerate() {
            let d = g.dims()[i];
            let expect = BMatrix::from_scalars(&b.alg, &CMatrix::identity(d));
            let expect = BMatrix::from_fn(d, d, 6, |r, c| if expect.entry(r, c)[0] != ZERO { a.clone() } else { vec![ZERO; 6] });
            assert!(blk.dist(&expect) < 1e-12);
        }
    }

    #[test]
    fn beta_on_group_algebra() {
        let g = group("s3");
        let b = canonical_example(&g, ExampleKind::GroupAlgebraConjugation).unwrap();
        for x in 0..6 {
            let lx = b.alg.basis(x);
            for (i, blk) in b.beta_map(&lx).iter().enumerate() {
                let u = g.u(i, x);
                let expect = BMatrix::from_fn(u.rows(), u.cols(), 6, |r, c| elem_scale(&lx, u[(r, c)]));
                assert!(blk.dist(&expect) < 1e-12);
            }
        }
        let (mult, star) = b.verify_beta();
        assert!(mult < 1e-10 && star < 1e-10);
        assert_eq!(b.beta_rank(Tolerance::default()), 6);
    }

    #[test]
    fn kinds_parse() {
        assert_eq!(ExampleKind::parse("adjoint-matrix-block:2").unwrap(), ExampleKind::AdjointMatrixBlock(2));
        assert!(ExampleKind::parse("nope").is_err());
        for k in ExampleKind::all_for(&group("d4")) {
            assert_eq!(ExampleKind::parse(&k.name()).unwrap(), k);
        }
    }
}
