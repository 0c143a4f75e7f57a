//! The comparison functor `Ψ: M → D_{B_M}` and the isomorphism `λ: B_{D_B} → B`.

use serde::Serialize;

use super::regular::{conj_twist, tensor_id_apply, RegularPart, UniversalElement};
use crate::algebra::{elem_diff, BMatrix};
use crate::error::Result;
use crate::numkernel::CMatrix;
use crate::tensorcat::Rep;
use crate::ydalg::FiniteYDAlgebra;

/// `Ψ(T)` for `T ∈ Hom(m ◁ U, m ◁ V)`, a `d_V × d_U` matrix over `B_M`.
///
/// Entry `(j, i)` is `π` of `\overline{ζ_j ⊗ \overline{ρ^{-1/2} ξ_i}} ⊗ (T ⊗ ι) R̄_U`.
pub fn psi(r: &RegularPart, u: &Rep, v: &Rep, t: &BMatrix) -> Result<BMatrix> {
    let cat = r.category();
    let data = cat.conjugate_data(u)?;
    let dc = data.conjugate.dim;
    let w = conj_twist(&data.rho, &data.j);
    let m = tensor_id_apply(t, &data.rbar, dc);
    let obj = cat.tensor(v, &data.conjugate);
    let mut out = BMatrix::zeros(v.dim, u.dim, r.dim());
    for j in 0..v.dim {
        for i in 0..u.dim {
            let vec = CMatrix::basis_vector(v.dim, j).kron(&w.col(i));
            out.set(j, i, &r.project(&UniversalElement::elementary(obj.clone(), vec, m.clone()))?);
        }
    }
    Ok(out)
}

/// `λ` as a coordinate matrix `dim B × dim B_{D_B}`: `η̄ ⊗ T ↦ (η^* ⊗ ι) T`.
pub fn lambda_matrix(r: &RegularPart, b: &FiniteYDAlgebra) -> CMatrix {
    let mut out = CMatrix::zeros(b.dim(), r.dim());
    for col in 0..r.dim() {
        for (xi, t) in &r.basis_element(col).terms {
            for k in 0..xi.rows() {
                let a = xi[(k, 0)].conj();
                for (row, z) in t.entry(k, 0).iter().enumerate() {
                    out[(row, col)] += a * z;
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HomReport {
    pub source_dim: usize,
    pub target_dim: usize,
    pub min_singular_value: f64,
    pub multiplicative: f64,
    pub unit: f64,
    pub star: f64,
    pub g_equivariant: f64,
    pub dual_equivariant: f64,
}

impl HomReport {
    pub fn bijective(&self) -> bool {
        self.source_dim == self.target_dim && self.min_singular_value > 1e-8
    }

    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        let bij = if self.bijective() { 0.0 } else { f64::INFINITY };
        vec![
            ("bijective", bij),
            ("multiplicative", self.multiplicative),
            ("unit", self.unit),
            ("star", self.star),
            ("g-equivariant", self.g_equivariant),
            ("dual-equivariant", self.dual_equivariant),
        ]
    }

    pub fn worst(&self) -> f64 {
        self.entries().into_iter().map(|(_, v)| v).fold(0.0, f64::max)
    }
}

/// Checks that a coordinate map `f: src → dst` is a YD `*`-isomorphism candidate.
pub fn verify_hom(f: &CMatrix, src: &FiniteYDAlgebra, dst: &FiniteYDAlgebra) -> HomReport {
    let apply = |x: &[crate::numkernel::C64]| (f * &CMatrix::column(x)).vec();
    let mut mult: f64 = 0.0;
    let mut star: f64 = 0.0;
    for i in 0..src.dim() {
        let a = src.alg.basis(i);
        star = star.max(elem_diff(&apply(&src.star(&a)), &dst.star(&apply(&a))));
        for j in 0..src.dim() {
            let b = src.alg.basis(j);
            mult = mult.max(elem_diff(&apply(&src.mul(&a, &b)), &dst.mul(&apply(&a), &apply(&b))));
        }
    }
    let unit = elem_diff(&apply(&src.alg.unit), &dst.alg.unit);
    let intertwine = |s: &[CMatrix], d: &[CMatrix]| {
        s.iter().zip(d).map(|(ms, md)| (&(f * ms) - &(md * f)).max_abs()).fold(0.0, f64::max)
    };
    let min_singular_value = if f.rows() == f.cols() {
        f.singular_values().into_iter().fold(f64::INFINITY, f64::min)
    } else {
        0.0
    };
    HomReport {
        source_dim: src.dim(),
        target_dim: dst.dim(),
        min_singular_value,
        multiplicative: mult,
        unit,
        star,
        g_equivariant: intertwine(&src.alpha, &dst.alpha),
        dual_equivariant: intertwine(&src.grading, &dst.grading),
    }
}

pub fn verify_lambda(r: &RegularPart, assembled: &FiniteYDAlgebra, b: &FiniteYDAlgebra) -> HomReport {
    verify_hom(&lambda_matrix(r, b), assembled, b)
}
