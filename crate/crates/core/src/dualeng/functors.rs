//! Strict bimodule functors between categories of equivariant modules, the
//! homomorphisms they induce on regular parts, and natural isomorphisms.

use serde::Serialize;

use super::psi::{verify_hom, HomReport};
use super::regular::{RegularPart, UniversalElement};
use crate::algebra::{elem_diff, elem_norm, BMatrix, Elem};
use crate::eqmod;
use crate::error::Result;
use crate::numkernel::{CMatrix, C64};
use crate::tensorcat::Rep;
use crate::ydalg::FiniteYDAlgebra;

/// `F: D_{B1} → D_{B2}` acting entrywise by a `*`-homomorphism `phi` (coordinates,
/// `dim B2 × dim B1`), with unitor `F_0` given by left multiplication by `f0 ∈ B2`.
#[derive(Clone, Debug)]
pub struct FunctorData {
    pub phi: CMatrix,
    pub f0: Elem,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FunctorReport {
    pub multiplicative: f64,
    pub unit: f64,
    pub star: f64,
    pub g_equivariant: f64,
    pub f0_unitary: f64,
    pub f0_invariant: f64,
    pub f0_degree: f64,
}

impl FunctorReport {
    pub fn worst(&self) -> f64 {
        [self.multiplicative, self.unit, self.star, self.g_equivariant, self.f0_unitary, self.f0_invariant, self.f0_degree]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// Largest violation of `F(Σ_U(T)) = Σ'_U(F(T))`, with the worst `(U, V, W)` labels.
#[derive(Clone, Debug, Serialize)]
pub struct SigmaAdReport {
    pub residual: f64,
    pub witness: Option<(usize, usize, usize)>,
}

impl FunctorData {
    pub fn from_map(phi: CMatrix, b2: &FiniteYDAlgebra) -> Self {
        Self { phi, f0: b2.alg.unit.clone() }
    }

    pub fn identity(b: &FiniteYDAlgebra) -> Self {
        Self::from_map(CMatrix::identity(b.dim()), b)
    }

    /// `self ∘ first`, with unitor `φ(f0_first) f0_self`.
    pub fn compose(&self, first: &FunctorData, b3: &FiniteYDAlgebra) -> Self {
        Self { phi: &self.phi * &first.phi, f0: b3.mul(&self.phi_elem(&first.f0), &self.f0) }
    }

    pub fn phi_elem(&self, a: &[C64]) -> Elem {
        (&self.phi * &CMatrix::column(a)).vec()
    }

    /// `F(T)` without the unitor.
    pub fn apply_raw(&self, t: &BMatrix) -> BMatrix {
        t.map_entries(self.phi.rows(), |e| self.phi_elem(e))
    }

    /// `(F_0^* ◁ ι) F(T) (F_0 ◁ ι)`, entrywise `f0^* φ(T_rs) f0`.
    pub fn apply(&self, b2: &FiniteYDAlgebra, t: &BMatrix) -> BMatrix {
        let f0s = b2.star(&self.f0);
        t.map_entries(self.phi.rows(), |e| b2.mul(&b2.mul(&f0s, &self.phi_elem(e)), &self.f0))
    }

    pub fn verify(&self, b1: &FiniteYDAlgebra, b2: &FiniteYDAlgebra) -> FunctorReport {
        let mut rep = FunctorReport::default();
        for i in 0..b1.dim() {
            let a = b1.alg.basis(i);
            let fa = self.phi_elem(&a);
            rep.star = rep.star.max(elem_diff(&self.phi_elem(&b1.star(&a)), &b2.star(&fa)));
            for j in 0..b1.dim() {
                let b = b1.alg.basis(j);
                rep.multiplicative = rep.multiplicative.max(elem_diff(&self.phi_elem(&b1.mul(&a, &b)), &b2.mul(&fa, &self.phi_elem(&b))));
            }
        }
        rep.unit = elem_diff(&self.phi_elem(&b1.alg.unit), &b2.alg.unit);
        rep.g_equivariant = b1
            .alpha
            .iter()
            .zip(&b2.alpha)
            .map(|(a1, a2)| (&(&self.phi * a1) - &(a2 * &self.phi)).max_abs())
            .fold(0.0, f64::max);
        let f0s = b2.star(&self.f0);
        rep.f0_unitary = elem_diff(&b2.mul(&f0s, &self.f0), &b2.alg.unit).max(elem_diff(&b2.mul(&self.f0, &f0s), &b2.alg.unit));
        rep.f0_invariant = b2.coact(&self.f0).iter().map(|x| elem_diff(x, &self.f0)).fold(0.0, f64::max);
        let e = (&b2.grading[0] * &CMatrix::column(&self.f0)).vec();
        rep.f0_degree = elem_diff(&e, &self.f0);
        rep
    }

    /// Compatibility with the central structures over irreducible `U` and `T ∈ Hom(V, W)`, `V, W` irreducible.
    pub fn sigma_ad(&self, b1: &FiniteYDAlgebra, b2: &FiniteYDAlgebra) -> SigmaAdReport {
        let cat = &b1.cqg.category;
        let mut out = SigmaAdReport { residual: 0.0, witness: None };
        for v in 0..cat.label_count() {
            for w in 0..cat.label_count() {
                let homs = eqmod::equivariant_hom_basis(b1, cat.irrep(v), cat.irrep(w));
                for t in &homs {
                    let ft = self.apply(b2, t);
                    for u in 0..cat.label_count() {
                        let ur = cat.irrep(u);
                        let lhs = self.apply(b2, &eqmod::sigma_conjugate(b1, ur, t));
                        let rhs = eqmod::sigma_conjugate(b2, ur, &ft);
                        let r = lhs.dist(&rhs);
                        if r > out.residual {
                            out = SigmaAdReport { residual: r, witness: Some((u, v, w)) };
                        }
                    }
                }
            }
        }
        out
    }
}

/// The homomorphism `B_{M1} → B_{M2}` induced on regular parts, as a coordinate matrix.
pub fn induce_hom(r1: &RegularPart, r2: &RegularPart, b2: &FiniteYDAlgebra, f: &FunctorData) -> Result<CMatrix> {
    let mut out = CMatrix::zeros(r2.dim(), r1.dim());
    for col in 0..r1.dim() {
        let x = r1.basis_element(col);
        let moved = UniversalElement { rep: x.rep.clone(), terms: x.terms.iter().map(|(xi, t)| (xi.clone(), f.apply(b2, t))).collect() };
        for (row, z) in r2.project(&moved)?.into_iter().enumerate() {
            out[(row, col)] = z;
        }
    }
    Ok(out)
}

pub fn verify_induced(h: &CMatrix, m1: &FiniteYDAlgebra, m2: &FiniteYDAlgebra) -> HomReport {
    verify_hom(h, m1, m2)
}

/// Outcome of searching for a unitary monoidal natural isomorphism `F ≅ F'`.
///
/// Any such isomorphism is determined by its component at the generator, which
/// must be `c = f0' f0^*`; it exists iff `c` passes every check below.
#[derive(Clone, Debug, Serialize)]
pub struct NaturalIsoReport {
    pub exists: bool,
    #[serde(skip)]
    pub component: Elem,
    pub unitary: f64,
    pub g_invariant: f64,
    pub degree: f64,
    pub naturality: f64,
    pub witness: Option<(usize, usize)>,
}

pub fn natural_iso_check(
    b1: &FiniteYDAlgebra,
    b2: &FiniteYDAlgebra,
    f: &FunctorData,
    g: &FunctorData,
    objects: &[Rep],
    tol: f64,
) -> NaturalIsoReport {
    let c = b2.mul(&g.f0, &b2.star(&f.f0));
    let cs = b2.star(&c);
    let unitary = elem_diff(&b2.mul(&cs, &c), &b2.alg.unit).max(elem_diff(&b2.mul(&c, &cs), &b2.alg.unit));
    let g_invariant = b2.coact(&c).iter().map(|x| elem_diff(x, &c)).fold(0.0, f64::max);
    let degree = elem_diff(&(&b2.grading[0] * &CMatrix::column(&c)).vec(), &c);
    let mut naturality: f64 = 0.0;
    let mut witness = None;
    for (i, v) in objects.iter().enumerate() {
        for (j, w) in objects.iter().enumerate() {
            for t in eqmod::equivariant_hom_basis(b1, v, w) {
                let ft = f.apply_raw(&t);
                let gt = g.apply_raw(&t);
                let lhs = ft.map_entries(b2.dim(), |e| b2.mul(&c, e));
                let rhs = gt.map_entries(b2.dim(), |e| b2.mul(e, &c));
                let r = lhs.dist(&rhs) / elem_norm(t.coords()).max(1.0);
                if r > naturality {
                    naturality = r;
                    witness = Some((i, j));
                }
            }
        }
    }
    let exists = unitary.max(g_invariant).max(degree).max(naturality) < tol;
    NaturalIsoReport { exists, component: c, unitary, g_invariant, degree, naturality, witness: if exists { None } else { witness } }
}
