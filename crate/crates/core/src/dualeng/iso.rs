//! Explicit `*`-isomorphisms of commutative finite-dimensional C*-algebras onto `C^n`,
//! found through their characters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::regular::coord_inner;
use crate::algebra::{elem_add, elem_scale, StarAlgebra};
use crate::numkernel::{c, CMatrix, C64, ZERO};

#[derive(Clone, Debug, Serialize)]
pub struct CharacterIso {
    /// Row `k` is the character `χ_k` on basis coordinates; as a map it sends `a` to `(χ_k(a))_k`.
    #[serde(skip)]
    pub map: CMatrix,
    pub characters: usize,
    pub multiplicative: f64,
    pub star: f64,
    pub unit: f64,
    pub min_singular_value: f64,
}

impl CharacterIso {
    pub fn residual(&self) -> f64 {
        let bij = if self.characters == self.map.cols() && self.min_singular_value > 1e-8 { 0.0 } else { f64::INFINITY };
        self.multiplicative.max(self.star).max(self.unit).max(bij)
    }
}

/// Diagonalizes a generic self-adjoint element in the GNS inner product of the
/// left-regular trace, splits the algebra into minimal projections, and reads off characters.
pub fn character_iso(alg: &StarAlgebra, seed: u64) -> CharacterIso {
    let n = alg.dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gram = CMatrix::from_fn(n, n, |i, j| alg.left_operator(&alg.mul(&alg.star_of(&alg.basis(i)), &alg.basis(j))).trace());
    let gram = (&gram + &gram.adjoint()).scale_re(0.5);
    let half = gram.hermitian_function(f64::sqrt);
    let inv_half = gram.hermitian_function(|t| 1.0 / t.sqrt());
    let mut a = alg.zero();
    for i in 0..n {
        // complex weights keep conjugate characters apart
        let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let e = alg.basis(i);
        let term = elem_add(&elem_scale(&e, z), &elem_scale(&alg.star_of(&e), z.conj()));
        a = elem_add(&a, &term);
    }
    let op = &(&half * &alg.left_operator(&a)) * &inv_half;
    let (_, vecs) = ((&op + &op.adjoint()).scale_re(0.5)).hermitian_eigen();
    let mut chars = CMatrix::zeros(n, n);
    for k in 0..n {
        let y = (&inv_half * &vecs.col(k)).vec();
        let y2 = alg.mul(&y, &y);
        let mu = coord_inner(&y, &y2) / coord_inner(&y, &y);
        let p = elem_scale(&y, mu.inv());
        let pp = coord_inner(&p, &p);
        for j in 0..n {
            chars[(k, j)] = coord_inner(&p, &alg.mul(&alg.basis(j), &p)) / pp;
        }
    }
    let apply = |x: &[C64]| (&chars * &CMatrix::column(x)).vec();
    let mut multiplicative: f64 = 0.0;
    let mut star: f64 = 0.0;
    for i in 0..n {
        let x = alg.basis(i);
        let fx = apply(&x);
        let fs = apply(&alg.star_of(&x));
        star = star.max(fx.iter().zip(&fs).map(|(u, v)| (u.conj() - v).norm()).fold(0.0, f64::max));
        for j in 0..n {
            let y = alg.basis(j);
            let fy = apply(&y);
            let fxy = apply(&alg.mul(&x, &y));
            let r = (0..n).map(|k| (fxy[k] - fx[k] * fy[k]).norm()).fold(0.0, f64::max);
            multiplicative = multiplicative.max(r);
        }
    }
    let unit = apply(&alg.unit).iter().map(|z| (z - c(1.0, 0.0)).norm()).fold(0.0, f64::max);
    let min_singular_value = chars.singular_values().into_iter().fold(f64::INFINITY, f64::min);
    let characters = (0..n).filter(|&k| (0..n).any(|j| chars[(k, j)] != ZERO)).count();
    CharacterIso { map: chars, characters, multiplicative, star, unit, min_singular_value }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cqg::bundled_group;
    use crate::dualeng::{FiberFunctor, RegularPart};

    #[test]
    fn fiber_reconstruction_of_s3_is_c_of_s3() {
        let g = Arc::new(bundled_group("s3").unwrap());
        let m = RegularPart::new(Arc::new(FiberFunctor::new(g))).unwrap().assemble().unwrap();
        let iso = character_iso(&m.alg, 7);
        assert_eq!(iso.characters, 6);
        assert!(iso.residual() < 1e-9, "{iso:?}");
    }
}
