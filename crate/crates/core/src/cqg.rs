//! Quantum-group instances: finite groups loaded from fixtures (with the Hopf
//! algebra `O(G)`, its dual `c_c(Ĝ)` and the Drinfeld double) and a truncated
//! `Rep(SU_q(2))`.
//!
//! Conventions for a finite group `G`:
//! * `O(G) = C(G)` in the delta basis; `Δδ_g = Σ_{ab=g} δ_a ⊗ δ_b`, `S(f)(g) = f(g^-1)`.
//! * Matrix coefficients `u^i_kl(g) = U_i(g)_kl`, so `Δu_kl = Σ_r u_kr ⊗ u_rl`.
//! * `c_c(Ĝ) = ⊕_i B(H_i)` with `λ_g ↦ (U_i(g))_i` and `(λ_g, f) = f(g)`.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::numkernel::{c, CMatrix, Tolerance, C64, ONE, ZERO};
use crate::tensorcat::{IrrepLabel, Rep, RepCategory, TensorRule};

const BUNDLED: [(&str, &str); 7] = [
    ("z2", include_str!("../fixtures/z2.json")),
    ("z3", include_str!("../fixtures/z3.json")),
    ("z4", include_str!("../fixtures/z4.json")),
    ("z2xz2", include_str!("../fixtures/z2xz2.json")),
    ("s3", include_str!("../fixtures/s3.json")),
    ("d4", include_str!("../fixtures/d4.json")),
    ("q8", include_str!("../fixtures/q8.json")),
];

pub fn bundled_names() -> Vec<&'static str> {
    BUNDLED.iter().map(|(n, _)| *n).collect()
}

#[derive(Deserialize)]
struct FixtureIrrep {
    label: String,
    dim: usize,
    matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

#[derive(Deserialize)]
struct Fixture {
    name: String,
    order: usize,
    mult_table: Vec<Vec<usize>>,
    irreps: Vec<FixtureIrrep>,
}

#[derive(Clone, Debug)]
pub struct GroupIrrep {
    pub label: String,
    pub dim: usize,
    pub matrices: Vec<CMatrix>,
}

#[derive(Clone, Debug)]
pub struct FiniteGroupData {
    pub name: String,
    pub order: usize,
    pub mult_table: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub irreps: Vec<GroupIrrep>,
}

impl FiniteGroupData {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult_table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// An element of `O(G)` in the delta basis.
pub type OgElem = Vec<C64>;

/// An element of `c_c(Ĝ)`: one block per irreducible label.
pub type DualElem = Vec<CMatrix>;

/// A finite group as a compact quantum group.
#[derive(Debug)]
pub struct FiniteCQG {
    pub group: FiniteGroupData,
    pub category: RepCategory,
    /// Columns are matrix coefficients `u^i_kl` in the delta basis, ordered by `(i, k, l)`.
    pub mc_to_delta: CMatrix,
    pub delta_to_mc: CMatrix,
    mc_index: Vec<(usize, usize, usize)>,
}

pub fn load_finite_group(path: impl AsRef<Path>) -> Result<FiniteCQG> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::fixture(path.display().to_string(), e.to_string()))?;
    load_finite_group_str(&text, &path.display().to_string())
}

pub fn bundled_group(name: &str) -> Result<FiniteCQG> {
    let key = name.to_ascii_lowercase();
    let (_, text) = BUNDLED
        .iter()
        .find(|(n, _)| *n == key)
        .ok_or_else(|| Error::BadParameter(format!("unknown bundled group '{name}'")))?;
    load_finite_group_str(text, &format!("<bundled:{key}>"))
}

pub fn load_finite_group_str(text: &str, path: &str) -> Result<FiniteCQG> {
    let fx: Fixture = serde_json::from_str(text).map_err(|e| Error::fixture(path, e.to_string()))?;
    let data = validate_fixture(fx, path, Tolerance::default())?;
    FiniteCQG::new(data, path)
}

fn validate_fixture(fx: Fixture, path: &str, tol: Tolerance) -> Result<FiniteGroupData> {
    let n = fx.order;
    let err = |m: String| Error::fixture(path, m);
    if n == 0 {
        return Err(err("order: must be positive".into()));
    }
    if fx.mult_table.len() != n {
        return Err(err(format!("mult_table: expected {n} rows, found {}", fx.mult_table.len())));
    }
    for (a, row) in fx.mult_table.iter().enumerate() {
        if row.len() != n {
            return Err(err(format!("mult_table[{a}]: expected {n} entries, found {}", row.len())));
        }
        if let Some(b) = row.iter().position(|&x| x >= n) {
            return Err(err(format!("mult_table[{a}][{b}]: index out of range")));
        }
    }
    let t = &fx.mult_table;
    for a in 0..n {
        if t[0][a] != a || t[a][0] != a {
            return Err(err(format!("mult_table: element 0 is not an identity (fails at {a})")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                if t[t[a][b]][cc] != t[a][t[b][cc]] {
                    return Err(err(format!("mult_table: associativity fails at ({a},{b},{cc})")));
                }
            }
        }
    }
    let mut inverse = vec![0; n];
    for a in 0..n {
        inverse[a] = (0..n)
            .find(|&b| t[a][b] == 0 && t[b][a] == 0)
            .ok_or_else(|| err(format!("mult_table: element {a} has no inverse")))?;
    }
    let mut irreps = Vec::new();
    for (i, ir) in fx.irreps.iter().enumerate() {
        let at = format!("irreps[{i}]");
        if ir.dim == 0 {
            return Err(err(format!("{at}.dim: must be positive")));
        }
        if ir.matrices.len() != n {
            return Err(err(format!("{at}.matrices: expected {n} matrices, found {}", ir.matrices.len())));
        }
        let mut mats = Vec::with_capacity(n);
        for (g, m) in ir.matrices.iter().enumerate() {
            if m.len() != ir.dim || m.iter().any(|r| r.len() != ir.dim) {
                return Err(err(format!("{at}.matrices[{g}]: not {0}x{0}", ir.dim)));
            }
            let entries: Vec<C64> = m.iter().flatten().map(|z| c(z[0], z[1])).collect();
            let mat = CMatrix::from_row_major(ir.dim, ir.dim, &entries);
            if !mat.is_finite() {
                return Err(err(format!("{at}.matrices[{g}]: non-finite entry")));
            }
            if (&(&mat * &mat.adjoint()) - &CMatrix::identity(ir.dim)).max_abs() > tol.eps {
                return Err(err(format!("{at}.matrices[{g}]: not unitary")));
            }
            mats.push(mat);
        }
        for a in 0..n {
            for b in 0..n {
                if (&(&mats[a] * &mats[b]) - &mats[t[a][b]]).max_abs() > tol.eps {
                    return Err(err(format!("{at}: not a homomorphism at ({a},{b})")));
                }
            }
        }
        irreps.push(GroupIrrep { label: ir.label.clone(), dim: ir.dim, matrices: mats });
    }
    let sum_sq: usize = irreps.iter().map(|r| r.dim * r.dim).sum();
    if sum_sq != n {
        return Err(err(format!("irreps: sum of squared dimensions is {sum_sq}, expected {n}")));
    }
    // character orthogonality: <chi_i, chi_j> = delta_ij detects both reducibility and equivalence
    let chars: Vec<Vec<C64>> = irreps.iter().map(|r| r.matrices.iter().map(|m| m.trace()).collect()).collect();
    for i in 0..irreps.len() {
        for j in 0..irreps.len() {
            let ip: C64 = (0..n).map(|g| chars[i][g].conj() * chars[j][g]).sum::<C64>() / n as f64;
            let expect = if i == j { 1.0 } else { 0.0 };
            if (ip - c(expect, 0.0)).norm() > 1e-6 {
                let what = if i == j { "is reducible".to_string() } else { format!("is equivalent to irreps[{j}]") };
                return Err(err(format!("irreps[{i}]: {what}")));
            }
        }
    }
    Ok(FiniteGroupData { name: fx.name, order: n, mult_table: fx.mult_table, inverse, irreps })
}

impl FiniteCQG {
    fn new(group: FiniteGroupData, path: &str) -> Result<Self> {
        let n = group.order;
        let labels = group
            .irreps
            .iter()
            .map(|r| IrrepLabel { id: r.label.clone(), dim: r.dim, conjugate: usize::MAX })
            .collect();
        let reps = group.irreps.iter().map(|r| Rep { dim: r.dim, gens: r.matrices.clone() }).collect();
        let category = RepCategory::new(group.name.clone(), labels, reps, TensorRule::Group, Tolerance::default())
            .map_err(|e| Error::fixture(path, e.to_string()))?;
        let mut mc_index = Vec::with_capacity(n);
        for (i, r) in group.irreps.iter().enumerate() {
            for k in 0..r.dim {
                for l in 0..r.dim {
                    mc_index.push((i, k, l));
                }
            }
        }
        let mc_to_delta = CMatrix::from_fn(n, n, |g, col| {
            let (i, k, l) = mc_index[col];
            group.irreps[i].matrices[g][(k, l)]
        });
        let delta_to_mc = mc_to_delta
            .try_inverse()
            .ok_or_else(|| Error::fixture(path, "matrix coefficients are not a basis of C(G)"))?;
        Ok(Self { group, category, mc_to_delta, delta_to_mc, mc_index })
    }

    pub fn order(&self) -> usize {
        self.group.order
    }

    pub fn irrep_count(&self) -> usize {
        self.group.irreps.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.group.irreps.iter().map(|r| r.dim).collect()
    }

    pub fn u(&self, i: usize, g: usize) -> &CMatrix {
        &self.group.irreps[i].matrices[g]
    }

    pub fn delta(&self, g: usize) -> OgElem {
        let mut v = vec![ZERO; self.order()];
        v[g] = ONE;
        v
    }

    pub fn og_unit(&self) -> OgElem {
        vec![ONE; self.order()]
    }

    /// Matrix coefficient `u^i_kl` in the delta basis.
    pub fn matrix_coefficient(&self, i: usize, k: usize, l: usize) -> OgElem {
        (0..self.order()).map(|g| self.u(i, g)[(k, l)]).collect()
    }

    /// Position of `u^i_kl` in the matrix-coefficient basis.
    pub fn mc_position(&self, i: usize, k: usize, l: usize) -> usize {
        self.mc_index.iter().position(|&t| t == (i, k, l)).expect("valid matrix coefficient")
    }

    pub fn mc_labels(&self) -> &[(usize, usize, usize)] {
        &self.mc_index
    }

    pub fn og_product(&self, f: &[C64], g: &[C64]) -> OgElem {
        f.iter().zip(g).map(|(a, b)| a * b).collect()
    }

    /// `Δf` as a dense `|G|^2` vector indexed by `a * |G| + b`.
    pub fn og_coproduct(&self, f: &[C64]) -> Vec<C64> {
        let n = self.order();
        let mut out = vec![ZERO; n * n];
        for a in 0..n {
            for b in 0..n {
                out[a * n + b] = f[self.group.mul(a, b)];
            }
        }
        out
    }

    pub fn counit(&self, f: &[C64]) -> C64 {
        f[0]
    }

    pub fn antipode(&self, f: &[C64]) -> OgElem {
        (0..self.order()).map(|g| f[self.group.inv(g)]).collect()
    }

    pub fn og_star(&self, f: &[C64]) -> OgElem {
        f.iter().map(|z| z.conj()).collect()
    }

    pub fn haar(&self, f: &[C64]) -> C64 {
        f.iter().sum::<C64>() / self.order() as f64
    }

    /// Duality pairing `(ω, f)` with `f` in the delta basis.
    pub fn pairing(&self, omega: &[CMatrix], f: &[C64]) -> C64 {
        let n = self.order() as f64;
        let mut acc = ZERO;
        for (x, fx) in f.iter().enumerate() {
            if *fx == ZERO {
                continue;
            }
            let mut val = ZERO;
            for (i, w) in omega.iter().enumerate() {
                let d = self.group.irreps[i].dim as f64;
                val += (&self.u(i, x).adjoint() * w).trace() * (d / n);
            }
            acc += val * fx;
        }
        acc
    }

    /// Image of `λ_g` in `c_c(Ĝ)`.
    pub fn lambda(&self, g: usize) -> DualElem {
        (0..self.irrep_count()).map(|i| self.u(i, g).clone()).collect()
    }

    /// Matrix unit `m^i_rs`.
    pub fn matrix_unit(&self, i: usize, r: usize, s: usize) -> DualElem {
        self.dims()
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                let mut m = CMatrix::zeros(d, d);
                if j == i {
                    m[(r, s)] = ONE;
                }
                m
            })
            .collect()
    }

    pub fn dual_unit(&self) -> DualElem {
        self.dims().iter().map(|&d| CMatrix::identity(d)).collect()
    }

    pub fn dual_product(&self, a: &[CMatrix], b: &[CMatrix]) -> DualElem {
        a.iter().zip(b).map(|(x, y)| x * y).collect()
    }

    /// `Δ̂ω` as blocks on `H_i ⊗ H_j`, computed through the fusion isometries of `U_i ⊗ U_j`.
    pub fn dual_coproduct(&self, omega: &[CMatrix]) -> Result<Vec<Vec<CMatrix>>> {
        let cat = &self.category;
        let k = self.irrep_count();
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = Vec::with_capacity(k);
            for j in 0..k {
                let rep = cat.tensor(cat.irrep(i), cat.irrep(j));
                let mut block = CMatrix::zeros(rep.dim, rep.dim);
                for s in cat.decompose(&rep)?.iter() {
                    block = &block + &(&(&s.isometry * &omega[s.label]) * &s.isometry.adjoint());
                }
                row.push(block);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Pairing of `c_c(Ĝ) ⊗ c_c(Ĝ)` (as `(i, j)` blocks) with `δ_x ⊗ δ_y`.
    pub fn pairing2(&self, omega: &[Vec<CMatrix>], x: usize, y: usize) -> C64 {
        let n = self.order() as f64;
        let mut acc = ZERO;
        for (i, row) in omega.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                let d = (self.group.irreps[i].dim * self.group.irreps[j].dim) as f64;
                let ux = self.u(i, x).kron(self.u(j, y));
                acc += (&ux.adjoint() * w).trace() * (d / (n * n));
            }
        }
        acc
    }

    /// `a ▷ ω` defined by `(a ▷ ω)(b) = ω(b a)`.
    pub fn act_left(&self, a: &[C64], omega: &[CMatrix]) -> DualElem {
        self.functional_to_dual(|b| self.pairing(omega, &self.og_product(b, a)))
    }

    /// `ω ◁ a` defined by `(ω ◁ a)(b) = ω(a b)`.
    pub fn act_right(&self, omega: &[CMatrix], a: &[C64]) -> DualElem {
        self.functional_to_dual(|b| self.pairing(omega, &self.og_product(a, b)))
    }

    /// Element of `c_c(Ĝ)` representing a functional on `O(G)` given on the delta basis.
    fn functional_to_dual(&self, phi: impl Fn(&[C64]) -> C64) -> DualElem {
        let n = self.order();
        let mut out: DualElem = self.dims().iter().map(|&d| CMatrix::zeros(d, d)).collect();
        for g in 0..n {
            let v = phi(&self.delta(g));
            if v == ZERO {
                continue;
            }
            for (blk, l) in out.iter_mut().zip(self.lambda(g)) {
                *blk = &*blk + &l.scale(v);
            }
        }
        out
    }

    /// Coefficients of a dual element in the `λ_g` basis (inverse of the Gram matrix, which is the identity).
    pub fn dual_to_lambda(&self, omega: &[CMatrix]) -> Vec<C64> {
        (0..self.order()).map(|g| self.pairing(omega, &self.delta(g))).collect()
    }

    pub fn verify_hopf(&self) -> HopfResiduals {
        let n = self.order();
        let mut coassoc: f64 = 0.0;
        let mut counit: f64 = 0.0;
        let mut antipode: f64 = 0.0;
        let mut haar: f64 = 0.0;
        for g in 0..n {
            let f = self.delta(g);
            let d = self.og_coproduct(&f);
            // (Δ ⊗ id)Δ vs (id ⊗ Δ)Δ, both as |G|^3 tensors
            let mut left = vec![ZERO; n * n * n];
            let mut right = vec![ZERO; n * n * n];
            for a in 0..n {
                for b in 0..n {
                    let coeff = d[a * n + b];
                    if coeff == ZERO {
                        continue;
                    }
                    let da = self.og_coproduct(&self.delta(a));
                    let db = self.og_coproduct(&self.delta(b));
                    for x in 0..n {
                        for y in 0..n {
                            left[(x * n + y) * n + b] += coeff * da[x * n + y];
                            right[(a * n + x) * n + y] += coeff * db[x * n + y];
                        }
                    }
                }
            }
            coassoc = coassoc.max(left.iter().zip(&right).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max));
            // (ε ⊗ id)Δ = id = (id ⊗ ε)Δ
            for x in 0..n {
                let l: C64 = (0..n).filter(|&a| a == 0).map(|a| d[a * n + x]).sum();
                let r: C64 = (0..n).filter(|&b| b == 0).map(|b| d[x * n + b]).sum();
                counit = counit.max((l - f[x]).norm()).max((r - f[x]).norm());
            }
            // m(S ⊗ id)Δ = ε 1 = m(id ⊗ S)Δ
            let mut l = vec![ZERO; n];
            let mut r = vec![ZERO; n];
            for a in 0..n {
                for b in 0..n {
                    let coeff = d[a * n + b];
                    if coeff == ZERO {
                        continue;
                    }
                    let sa = self.antipode(&self.delta(a));
                    let sb = self.antipode(&self.delta(b));
                    let pl = self.og_product(&sa, &self.delta(b));
                    let pr = self.og_product(&self.delta(a), &sb);
                    for x in 0..n {
                        l[x] += coeff * pl[x];
                        r[x] += coeff * pr[x];
                    }
                }
            }
            let eps1 = self.counit(&f);
            for x in 0..n {
                antipode = antipode.max((l[x] - eps1).norm()).max((r[x] - eps1).norm());
            }
            // (h ⊗ id)Δf = h(f) 1
            let hf = self.haar(&f);
            for x in 0..n {
                let col: Vec<C64> = (0..n).map(|a| d[a * n + x]).collect();
                haar = haar.max((self.haar(&col) - hf).norm());
            }
        }
        // S(u_ij) = u*_ji on matrix coefficients
        let mut antipode_mc: f64 = 0.0;
        for &(i, k, l) in &self.mc_index {
            let s = self.antipode(&self.matrix_coefficient(i, k, l));
            let t = self.og_star(&self.matrix_coefficient(i, l, k));
            antipode_mc = antipode_mc.max(s.iter().zip(&t).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max));
        }
        HopfResiduals { coassociativity: coassoc, counit, antipode, haar_invariance: haar, antipode_matrix_coefficients: antipode_mc }
    }
}

#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct HopfResiduals {
    pub coassociativity: f64,
    pub counit: f64,
    pub antipode: f64,
    pub haar_invariance: f64,
    pub antipode_matrix_coefficients: f64,
}

impl HopfResiduals {
    pub fn worst(&self) -> f64 {
        [self.coassociativity, self.counit, self.antipode, self.haar_invariance, self.antipode_matrix_coefficients]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// The Drinfeld double `O_c(D̂(G))` on the basis `λ_g δ_h` (index `g * |G| + h`).
#[derive(Debug)]
pub struct DoubleAlgebra<'a> {
    pub base: &'a FiniteCQG,
    /// `δ_h λ_k` normal-ordered, indexed by `h * |G| + k`.
    exchange: Vec<Vec<C64>>,
}

impl<'a> DoubleAlgebra<'a> {
    /// Builds the exchange table from `a ω = Σ (a_(1) ▷ ω ◁ S^-1(a_(3))) a_(2)`.
    pub fn new(base: &'a FiniteCQG) -> Self {
        let n = base.order();
        let mut exchange = Vec::with_capacity(n * n);
        for h in 0..n {
            let d1 = base.og_coproduct(&base.delta(h));
            for k in 0..n {
                let lam = base.lambda(k);
                let mut out = vec![ZERO; n * n];
                for a in 0..n {
                    for bc in 0..n {
                        let c1 = d1[a * n + bc];
                        if c1 == ZERO {
                            continue;
                        }
                        let d2 = base.og_coproduct(&base.delta(bc));
                        for b in 0..n {
                            for cc in 0..n {
                                let c2 = d2[b * n + cc];
                                if c2 == ZERO {
                                    continue;
                                }
                                // S^-1 = S for commutative O(G)
                                let s3 = base.antipode(&base.delta(cc));
                                let w = base.act_right(&base.act_left(&base.delta(a), &lam), &s3);
                                let coeffs = base.dual_to_lambda(&w);
                                for (g, z) in coeffs.iter().enumerate() {
                                    if z.norm() > 1e-13 {
                                        out[g * n + b] += c1 * c2 * z;
                                    }
                                }
                            }
                        }
                    }
                }
                exchange.push(out);
            }
        }
        Self { base, exchange }
    }

    pub fn dim(&self) -> usize {
        self.base.order().pow(2)
    }

    pub fn basis(&self, g: usize, h: usize) -> Vec<C64> {
        let mut v = vec![ZERO; self.dim()];
        v[g * self.base.order() + h] = ONE;
        v
    }

    pub fn unit(&self) -> Vec<C64> {
        let n = self.base.order();
        let mut v = vec![ZERO; self.dim()];
        for h in 0..n {
            v[h] = ONE;
        }
        v
    }

    /// `(λ_g δ_h)(λ_k δ_l) = λ_g (δ_h λ_k) δ_l`.
    pub fn product(&self, x: &[C64], y: &[C64]) -> Vec<C64> {
        let n = self.base.order();
        let mut out = vec![ZERO; self.dim()];
        for (ix, &cx) in x.iter().enumerate() {
            if cx == ZERO {
                continue;
            }
            let (g, h) = (ix / n, ix % n);
            for (iy, &cy) in y.iter().enumerate() {
                if cy == ZERO {
                    continue;
                }
                let (k, l) = (iy / n, iy % n);
                for (ie, &ce) in self.exchange[h * n + k].iter().enumerate() {
                    if ce == ZERO {
                        continue;
                    }
                    let (k2, h2) = (ie / n, ie % n);
                    if h2 != l {
                        continue;
                    }
                    let g2 = self.base.group.mul(g, k2);
                    out[g2 * n + l] += cx * cy * ce;
                }
            }
        }
        out
    }

    /// `(λ_g δ_h)^* = δ_h λ_{g^-1}`, normal-ordered.
    pub fn star(&self, x: &[C64]) -> Vec<C64> {
        let n = self.base.order();
        let mut out = vec![ZERO; self.dim()];
        for (ix, &cx) in x.iter().enumerate() {
            if cx == ZERO {
                continue;
            }
            let (g, h) = (ix / n, ix % n);
            let gi = self.base.group.inv(g);
            let term = self.product(&self.delta_elem(h), &self.lambda_elem(gi));
            for (o, t) in out.iter_mut().zip(term) {
                *o += cx.conj() * t;
            }
        }
        out
    }

    /// `λ_g` as an element of the double.
    pub fn lambda_elem(&self, g: usize) -> Vec<C64> {
        let n = self.base.order();
        let mut v = vec![ZERO; self.dim()];
        for h in 0..n {
            v[g * n + h] = ONE;
        }
        v
    }

    /// `δ_h` as an element of the double.
    pub fn delta_elem(&self, h: usize) -> Vec<C64> {
        self.basis(0, h)
    }
}

/// Truncated `Rep(SU_q(2))` with spins `0, 1/2, …, jmax` (label index `2j`).
///
/// Generators `[k, k^-1, E, F]` act on `V_j` with basis `|m⟩`, `m = j, j-1, …, -j`:
/// `k|m⟩ = q^m |m⟩`, `E|m⟩ = sqrt([j-m]_q [j+m+1]_q) |m+1⟩`, `F = E^T`.
pub fn suq2_category(q: f64, jmax: f64) -> Result<RepCategory> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::BadParameter(format!("q must lie in (0,1), got {q}")));
    }
    let twice = 2.0 * jmax;
    if twice < 1.0 || (twice - twice.round()).abs() > 1e-12 {
        return Err(Error::BadParameter(format!("jmax must be a positive half-integer, got {jmax}")));
    }
    let top = twice.round() as usize;
    let qint = |n: f64| (q.powf(n) - q.powf(-n)) / (q - 1.0 / q);
    let mut labels = Vec::new();
    let mut reps = Vec::new();
    for tj in 0..=top {
        let j = tj as f64 / 2.0;
        let d = tj + 1;
        let m_of = |t: usize| j - t as f64;
        let k = CMatrix::from_fn(d, d, |a, b| if a == b { c(q.powf(m_of(a)), 0.0) } else { ZERO });
        let kinv = CMatrix::from_fn(d, d, |a, b| if a == b { c(q.powf(-m_of(a)), 0.0) } else { ZERO });
        // |m+1⟩ sits one index above |m⟩
        let e = CMatrix::from_fn(d, d, |a, b| {
            if a + 1 == b {
                let m = m_of(b);
                c((qint(j - m) * qint(j + m + 1.0)).sqrt(), 0.0)
            } else {
                ZERO
            }
        });
        let f = e.transpose();
        let id = if tj % 2 == 0 { format!("{}", tj / 2) } else { format!("{tj}/2") };
        labels.push(IrrepLabel { id, dim: d, conjugate: tj });
        reps.push(Rep { dim: d, gens: vec![k, kinv, e, f] });
    }
    RepCategory::new(format!("suq2(q={q},jmax={jmax})"), labels, reps, TensorRule::Suq2 { q }, Tolerance::default())
}

/// `(q^n - q^-n) / (q - q^-1)`.
pub fn q_integer(q: f64, n: f64) -> f64 {
    (q.powf(n) - q.powf(-n)) / (q - 1.0 / q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorcat::CatObject;

    #[test]
    fn z2_fixture() {
        let g = bundled_group("z2").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.dims(), vec![1, 1]);
    }

    #[test]
    fn s3_fixture() {
        let g = bundled_group("s3").unwrap();
        let mut dims = g.dims();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2]);
        assert_eq!(dims.iter().map(|d| d * d).sum::<usize>(), 6);
    }

    #[test]
    fn non_unitary_fixture_rejected() {
        let text = BUNDLED[0].1.replace("[[[-1.0,0.0]]]", "[[[-2.0,0.0]]]");
        match load_finite_group_str(&text, "bad.json") {
            Err(Error::BadFixture { message, .. }) => assert!(message.contains("not unitary"), "{message}"),
            other => panic!("expected BadFixture, got {other:?}"),
        }
    }

    #[test]
    fn broken_table_rejected() {
        let text = r#"{"name":"x","order":2,"mult_table":[[0,1],[1,1]],"irreps":[]}"#;
        assert!(matches!(load_finite_group_str(text, "t.json"), Err(Error::BadFixture { .. })));
    }

    #[test]
    fn hopf_axioms_all_fixtures() {
        for name in bundled_names() {
            let g = bundled_group(name).unwrap();
            let r = g.verify_hopf();
            assert!(r.worst() < 1e-8, "{name}: {r:?}");
        }
    }

    #[test]
    fn pairing_unit_and_matrix_units() {
        let g = bundled_group("s3").unwrap();
        let mut triv = g.matrix_unit(g.category.trivial_label(), 0, 0);
        triv[0] = CMatrix::identity(1);
        assert!((g.pairing(&triv, &g.og_unit()) - ONE).norm() < 1e-12);
        for &(i, r, s) in g.mc_labels() {
            for &(j, k, l) in g.mc_labels() {
                let v = g.pairing(&g.matrix_unit(i, r, s), &g.matrix_coefficient(j, k, l));
                let expect = if (i, r, s) == (j, k, l) { 1.0 } else { 0.0 };
                assert!((v - c(expect, 0.0)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn pairing_compatibility_full_bases() {
        for name in ["s3", "d4", "q8", "z4"] {
            let g = bundled_group(name).unwrap();
            let n = g.order();
            let units: Vec<DualElem> = g.mc_labels().iter().map(|&(i, r, s)| g.matrix_unit(i, r, s)).collect();
            // (ω η, f) = (ω, f_(1)) (η, f_(2))
            for w in &units {
                for e in &units {
                    let we = g.dual_product(w, e);
                    for x in 0..n {
                        let lhs = g.pairing(&we, &g.delta(x));
                        let d = g.og_coproduct(&g.delta(x));
                        let mut rhs = ZERO;
                        for a in 0..n {
                            for b in 0..n {
                                if d[a * n + b] != ZERO {
                                    rhs += d[a * n + b] * g.pairing(w, &g.delta(a)) * g.pairing(e, &g.delta(b));
                                }
                            }
                        }
                        assert!((lhs - rhs).norm() < 1e-9, "{name}");
                    }
                }
            }
            // (ω_(1), f)(ω_(2), h) = (ω, f h)
            for w in &units {
                let dw = g.dual_coproduct(w).unwrap();
                for x in 0..n {
                    for y in 0..n {
                        let lhs = g.pairing2(&dw, x, y);
                        let rhs = g.pairing(w, &g.og_product(&g.delta(x), &g.delta(y)));
                        assert!((lhs - rhs).norm() < 1e-9, "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_nondegenerate() {
        let g = bundled_group("d4").unwrap();
        let n = g.order();
        let gram = CMatrix::from_fn(n, n, |r, s| {
            let (i, a, b) = g.mc_labels()[r];
            g.pairing(&g.matrix_unit(i, a, b), &g.delta(s))
        });
        assert_eq!(gram.rank(Tolerance::default()), n);
    }

    #[test]
    fn basis_change_roundtrip() {
        let g = bundled_group("q8").unwrap();
        let prod = &g.mc_to_delta * &g.delta_to_mc;
        assert!((&prod - &CMatrix::identity(8)).max_abs() < 1e-10);
    }

    fn norm_diff(a: &[C64], b: &[C64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn double_exchange_rule() {
        let g = bundled_group("s3").unwrap();
        let d = DoubleAlgebra::new(&g);
        assert_eq!(d.dim(), 36);
        for h in 0..6 {
            for k in 0..6 {
                let lhs = d.product(&d.delta_elem(h), &d.lambda_elem(k));
                let conj = g.group.mul(g.group.mul(g.group.inv(k), h), k);
                assert!(norm_diff(&lhs, &d.basis(k, conj)) < 1e-10);
            }
        }
    }

    #[test]
    fn double_unit_and_abelian_componentwise() {
        let g = bundled_group("z2").unwrap();
        let d = DoubleAlgebra::new(&g);
        for a in 0..4 {
            let x = d.basis(a / 2, a % 2);
            assert!(norm_diff(&d.product(&d.unit(), &x), &x) < 1e-12);
            assert!(norm_diff(&d.product(&x, &d.unit()), &x) < 1e-12);
            for b in 0..4 {
                let (g1, h1, g2, h2) = (a / 2, a % 2, b / 2, b % 2);
                let expect = if h1 == h2 { d.basis(g.group.mul(g1, g2), h1) } else { vec![ZERO; 4] };
                assert!(norm_diff(&d.product(&x, &d.basis(g2, h2)), &expect) < 1e-12);
            }
        }
    }

    #[test]
    fn double_associative_and_star() {
        let g = bundled_group("s3").unwrap();
        let d = DoubleAlgebra::new(&g);
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut rand_elem = || (0..36).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect::<Vec<_>>();
        for _ in 0..5 {
            let (x, y, z) = (rand_elem(), rand_elem(), rand_elem());
            let l = d.product(&d.product(&x, &y), &z);
            let r = d.product(&x, &d.product(&y, &z));
            assert!(norm_diff(&l, &r) < 1e-9);
            let s1 = d.star(&d.product(&x, &y));
            let s2 = d.product(&d.star(&y), &d.star(&x));
            assert!(norm_diff(&s1, &s2) < 1e-9);
            assert!(norm_diff(&d.star(&d.star(&x)), &x) < 1e-12);
        }
    }

    #[test]
    fn suq2_fusion() {
        let cat = suq2_category(0.5, 1.0).unwrap();
        let d = cat.decompose_product(&CatObject::irreducible(0), &CatObject::irreducible(2)).unwrap();
        assert_eq!(d.iter().map(|s| s.label).collect::<Vec<_>>(), vec![2]);
        let d = cat.decompose_product(&CatObject::irreducible(1), &CatObject::irreducible(1)).unwrap();
        assert_eq!(d.iter().map(|s| s.label).collect::<Vec<_>>(), vec![0, 2]);
        assert!((cat.frobenius_dim(cat.irrep(1)).unwrap() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn suq2_truncation() {
        let cat = suq2_category(0.5, 1.0).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let r = cat.decompose_product(&CatObject::irreducible(a), &CatObject::irreducible(b));
                assert_eq!(r.is_err(), a + b > 2, "{a} {b}");
            }
        }
    }

    #[test]
    fn suq2_near_classical() {
        let cat = suq2_category(1.0 - 1e-8, 2.0).unwrap();
        for l in 0..cat.label_count() {
            let qd = cat.frobenius_dim(cat.irrep(l)).unwrap();
            assert!((qd - (l + 1) as f64).abs() < 1e-6);
        }
    }

    #[test]
    fn suq2_bad_parameters() {
        assert!(suq2_category(1.0, 1.0).is_err());
        assert!(suq2_category(0.5, 0.7).is_err());
        assert!(suq2_category(0.5, 0.0).is_err());
    }
}
