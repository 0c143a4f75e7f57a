//! Centrally pointed bimodule categories, consumed only through their pointed
//! presentation: morphism spaces `Hom(m ◁ V, m ◁ W)` realized as matrices over an
//! entry algebra, right tensoring `T ↦ T ⊗ 1`, and the conjugation `Σ_U`.

use std::sync::Arc;

use crate::algebra::{BMatrix, StarAlgebra};
use crate::cqg::FiniteCQG;
use crate::eqmod;
use crate::error::Result;
use crate::numkernel::{CMatrix, ONE};
use crate::tensorcat::Rep;
use crate::ydalg::FiniteYDAlgebra;

pub trait CentrallyPointedPresentation: Send + Sync {
    fn name(&self) -> String;

    fn cqg(&self) -> &Arc<FiniteCQG>;

    /// Algebra in which morphism matrices take their entries.
    fn entries(&self) -> &StarAlgebra;

    /// Basis of `Hom(m ◁ V, m ◁ W)` as `dim W × dim V` matrices, orthonormal in coordinates.
    fn hom_basis(&self, v: &Rep, w: &Rep) -> Vec<BMatrix>;

    /// `Σ_{U;V,W}(T) = (σ_U ◁ id)(id ▷ T)(σ_U^* ◁ id)`.
    fn sigma_conj(&self, u: &Rep, t: &BMatrix) -> BMatrix;

    /// `id_m`.
    fn unit(&self) -> BMatrix {
        BMatrix::identity(self.entries(), 1)
    }

    /// `T ◁ id_X`.
    fn rtensor(&self, t: &BMatrix, x_dim: usize) -> BMatrix {
        t.kron(self.entries(), &BMatrix::identity(self.entries(), x_dim))
    }

    fn compose(&self, t: &BMatrix, s: &BMatrix) -> BMatrix {
        t.mul(self.entries(), s)
    }

    fn adjoint(&self, t: &BMatrix) -> BMatrix {
        t.adjoint(self.entries())
    }

    fn tensor(&self, a: &Rep, b: &Rep) -> Rep {
        self.cqg().category.tensor(a, b)
    }
}

/// `D_B` pointed at `B`: morphisms are equivariant right `B`-module maps.
pub struct FromYDAlgebra {
    pub b: Arc<FiniteYDAlgebra>,
}

impl FromYDAlgebra {
    pub fn new(b: Arc<FiniteYDAlgebra>) -> Self {
        Self { b }
    }
}

impl CentrallyPointedPresentation for FromYDAlgebra {
    fn name(&self) -> String {
        format!("D_B[{}]", self.b.name)
    }

    fn cqg(&self) -> &Arc<FiniteCQG> {
        &self.b.cqg
    }

    fn entries(&self) -> &StarAlgebra {
        &self.b.alg
    }

    fn hom_basis(&self, v: &Rep, w: &Rep) -> Vec<BMatrix> {
        eqmod::equivariant_hom_basis(&self.b, v, w)
    }

    fn sigma_conj(&self, u: &Rep, t: &BMatrix) -> BMatrix {
        eqmod::sigma_conjugate(&self.b, u, t)
    }
}

/// The forgetful functor to Hilbert spaces: every linear map is a morphism and `σ` is the flip.
pub struct FiberFunctor {
    cqg: Arc<FiniteCQG>,
    scalars: StarAlgebra,
}

impl FiberFunctor {
    pub fn new(cqg: Arc<FiniteCQG>) -> Self {
        let scalars = StarAlgebra::from_basis_product(1, vec![ONE], CMatrix::identity(1), |_, _| vec![ONE]);
        Self { cqg, scalars }
    }
}

impl CentrallyPointedPresentation for FiberFunctor {
    fn name(&self) -> String {
        format!("fiber[{}]", self.cqg.group.name)
    }

    fn cqg(&self) -> &Arc<FiniteCQG> {
        &self.cqg
    }

    fn entries(&self) -> &StarAlgebra {
        &self.scalars
    }

    fn hom_basis(&self, v: &Rep, w: &Rep) -> Vec<BMatrix> {
        let mut out = Vec::with_capacity(v.dim * w.dim);
        for r in 0..w.dim {
            for s in 0..v.dim {
                let mut m = CMatrix::zeros(w.dim, v.dim);
                m[(r, s)] = ONE;
                out.push(BMatrix::from_scalars(&self.scalars, &m));
            }
        }
        out
    }

    fn sigma_conj(&self, u: &Rep, t: &BMatrix) -> BMatrix {
        BMatrix::identity(&self.scalars, u.dim).kron(&self.scalars, t)
    }
}

/// Morphism spaces of `hat-M`: for each irreducible `X`, a basis of `Hom(X ▷ (m ◁ V), X ▷ (m ◁ W))`,
/// realized through the central structure as `Hom(m ◁ (X ⊗ V), m ◁ (X ⊗ W))`.
pub fn hat_hom(p: &dyn CentrallyPointedPresentation, v: &Rep, w: &Rep) -> Result<Vec<Vec<BMatrix>>> {
    let cat = &p.cqg().category;
    Ok((0..cat.label_count())
        .map(|x| {
            let irr = cat.irrep(x);
            p.hom_basis(&cat.tensor(irr, v), &cat.tensor(irr, w))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqg::bundled_group;
    use crate::ydalg::{canonical_example, ExampleKind};

    #[test]
    fn hat_hom_unit_blocks_are_scalars() {
        let g = Arc::new(bundled_group("z2").unwrap());
        let b = Arc::new(canonical_example(&g, ExampleKind::Trivial).unwrap());
        let p = FromYDAlgebra::new(b);
        let triv = g.category.trivial().clone();
        let blocks = hat_hom(&p, &triv, &triv).unwrap();
        assert_eq!(blocks.iter().map(|b| b.len()).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn hat_hom_s3_std_matches_intertwiner_count() {
        let g = Arc::new(bundled_group("s3").unwrap());
        let b = Arc::new(canonical_example(&g, ExampleKind::Trivial).unwrap());
        let p = FromYDAlgebra::new(b);
        let cat = &g.category;
        let std = cat.irrep(2).clone();
        let blocks = hat_hom(&p, &std, &std).unwrap();
        let counts: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        let oracle: Vec<usize> = (0..3)
            .map(|x| {
                let xs = cat.tensor(cat.irrep(x), &std);
                cat.hom_basis(&xs, &xs).len()
            })
            .collect();
        assert_eq!(counts, oracle);
        assert_eq!(counts, vec![1, 1, 3]);
    }

    #[test]
    fn fiber_sigma_is_flip_conjugation() {
        let g = Arc::new(bundled_group("s3").unwrap());
        let p = FiberFunctor::new(g.clone());
        let std = g.category.irrep(2).clone();
        let t = &p.hom_basis(&std, &std)[1];
        let s = p.sigma_conj(&std, t);
        assert_eq!(s.shape(), (4, 4));
        let expect = BMatrix::from_scalars(p.entries(), &CMatrix::identity(2).kron(&CMatrix::from_fn(2, 2, |r, c| t.entry(r, c)[0])));
        assert!(s.dist(&expect) < 1e-15);
    }
}
