//! Verification suites producing [`CheckRecord`]s, shared by the CLI and the acceptance tests.

use std::sync::Arc;
use std::thread;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Elem;
use crate::cqg::{bundled_group, q_integer, FiniteCQG};
use crate::dualeng::{
    character_iso, induce_hom, lambda_matrix, natural_iso_check, psi, verify_hom, CentrallyPointedPresentation,
    FiberFunctor, FromYDAlgebra, FunctorData, RegularPart,
};
use crate::eqmod;
use crate::error::{Error, Result};
use crate::numkernel::{c, CMatrix, ONE, ZERO};
use crate::report::CheckRecord;
use crate::tensorcat::{verify_conjugate_equations, CatObject, Rep, RepCategory};
use crate::ydalg::{canonical_example, corrupted_group_algebra, ExampleKind, FiniteYDAlgebra};

/// Runs `f` over `items` on scoped threads, returning results in input order.
pub fn parallel_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    thread::scope(|s| {
        let handles: Vec<_> = items.iter().map(|it| s.spawn(|| f(it))).collect();
        handles.into_iter().map(|h| h.join().expect("suite worker panicked")).collect()
    })
}

fn flatten(parts: Vec<Result<Vec<CheckRecord>>>) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

pub fn examples(cqg: &Arc<FiniteCQG>) -> Result<Vec<Arc<FiniteYDAlgebra>>> {
    ExampleKind::all_for(cqg).into_iter().map(|k| canonical_example(cqg, k).map(Arc::new)).collect()
}

/// Conjugate equations for every irreducible of a category.
pub fn conjugate_suite(cat: &RepCategory, tol: f64) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for i in 0..cat.label_count() {
        let res = verify_conjugate_equations(&cat.conjugate_data(cat.irrep(i))?);
        out.push(CheckRecord::below(format!("{}/irrep{i}", cat.name), "conjugate-equations", res.worst(), tol));
    }
    Ok(out)
}

/// Quantum dimensions against the q-integer formula and the truncation rule.
pub fn suq2_suite(cat: &RepCategory, q: f64, tol: f64) -> Result<Vec<CheckRecord>> {
    let inst = format!("suq2(q={q})");
    let mut out = conjugate_suite(cat, tol)?;
    let mut qdim: f64 = 0.0;
    for a in 0..cat.label_count() {
        let expect = q_integer(q, a as f64 + 1.0);
        qdim = qdim.max((cat.frobenius_dim(cat.irrep(a))? - expect).abs());
    }
    out.push(CheckRecord::below(&inst, "quantum-dimensions", qdim, tol));
    let top = cat.label_count() - 1;
    let mut mismatches = Vec::new();
    for a in 0..=top {
        for b in 0..=top {
            let overflow = matches!(
                cat.decompose_product(&CatObject::irreducible(a), &CatObject::irreducible(b)),
                Err(Error::TruncationOverflow(_))
            );
            if overflow != (a + b > top) {
                mismatches.push(format!("({}/2,{}/2)", a, b));
            }
        }
    }
    let rec = CheckRecord::below(&inst, "truncation-exactly-beyond-jmax", mismatches.len() as f64, 0.5);
    out.push(if mismatches.is_empty() { rec } else { rec.with_witness(mismatches.join(" ")) });
    Ok(out)
}

/// Hopf structure, conjugate equations, YD axioms of every canonical example, and the corrupted control.
pub fn axioms_suite(cqg: &Arc<FiniteCQG>, tol: f64) -> Result<Vec<CheckRecord>> {
    let name = &cqg.group.name;
    let mut out = vec![CheckRecord::below(name.as_str(), "hopf-axioms", cqg.verify_hopf().worst(), tol)];
    out.extend(conjugate_suite(&cqg.category, tol)?);
    let exs = examples(cqg)?;
    let per = parallel_map(&exs, |b| {
        let mut recs: Vec<CheckRecord> =
            b.verify_yd_axioms().entries().into_iter().map(|(k, v)| CheckRecord::below(b.name.as_str(), k, v, tol)).collect();
        let (bm, bs) = b.verify_beta();
        recs.push(CheckRecord::below(b.name.as_str(), "beta-multiplicative", bm, tol));
        recs.push(CheckRecord::below(b.name.as_str(), "beta-star", bs, tol));
        recs
    });
    out.extend(per.into_iter().flatten());
    if !cqg.group.is_abelian() {
        let bad = corrupted_group_algebra(cqg)?;
        out.push(CheckRecord::flagged(bad.name.as_str(), "corrupted-grading", bad.verify_yd_axioms().worst(), 1e-2));
    }
    Ok(out)
}

/// `π_U` and `S_{U,V}` over all irreducible pairs (pentagon over all triples).
pub fn modules_suite(b: &FiniteYDAlgebra, tol: f64) -> Result<Vec<CheckRecord>> {
    let cat = &b.cqg.category;
    let irr: Vec<Rep> = (0..cat.label_count()).map(|i| cat.irrep(i).clone()).collect();
    let inst = b.name.as_str();
    let mut pi: f64 = 0.0;
    for u in &irr {
        pi = pi.max(eqmod::verify_pi(b, u).worst());
    }
    let mut s = eqmod::SReport { unitarity: 0.0, bimodule: 0.0, equivariance: 0.0, balanced: 0.0 };
    let mut pent: f64 = 0.0;
    for u in &irr {
        for v in &irr {
            let r = eqmod::verify_s(b, u, v, &cat.tensor(u, v));
            s.unitarity = s.unitarity.max(r.unitarity);
            s.bimodule = s.bimodule.max(r.bimodule);
            s.equivariance = s.equivariance.max(r.equivariance);
            s.balanced = s.balanced.max(r.balanced);
            for w in &irr {
                pent = pent.max(eqmod::pentagon_residual(b, u, v, w, |x, y| cat.tensor(x, y)));
            }
        }
    }
    Ok(vec![
        CheckRecord::below(inst, "pi-star-homomorphism-equivariance", pi, tol),
        CheckRecord::below(inst, "s-unitarity", s.unitarity, tol),
        CheckRecord::below(inst, "s-bimodule", s.bimodule, tol),
        CheckRecord::below(inst, "s-equivariance", s.equivariance, tol),
        CheckRecord::below(inst, "s-balanced", s.balanced, tol),
        CheckRecord::below(inst, "pentagon", pent, tol),
    ])
}

/// The five structural identities of the regular part, over full bases.
pub fn lemma_records(p: Arc<dyn CentrallyPointedPresentation>, tol: f64) -> Result<Vec<CheckRecord>> {
    let inst = p.name();
    let r = RegularPart::new(p)?;
    let m = r.assemble()?;
    let cat = r.category();
    let cqg = r.presentation().cqg().clone();
    let labels = cat.label_count();
    let n = r.dim();

    let mut elems = Vec::new();
    for a in 0..n {
        elems.push(r.basis_element(a));
        for b in a..n {
            elems.push(r.bullet(&r.basis_element(a), &r.basis_element(b)));
        }
    }
    let mut objects: Vec<Rep> = (0..labels).map(|i| cat.irrep(i).clone()).collect();
    for i in 0..labels {
        for j in 0..labels {
            objects.push(cat.tensor(cat.irrep(i), cat.irrep(j)));
        }
    }
    let mut l1: f64 = 0.0;
    for u in &objects {
        for x in matrix_units(u.dim) {
            for a in &elems {
                l1 = l1.max(r.projection_residual(u, &x, a)?);
            }
        }
    }

    let mut l2: f64 = 0.0;
    for i in 0..labels {
        for x in matrix_units(cat.irrep(i).dim) {
            for j in 0..labels {
                for y in matrix_units(cat.irrep(j).dim) {
                    for a in 0..n {
                        l2 = l2.max(r.module_residual(i, &x, j, &y, &m.alg.basis(a))?);
                    }
                }
            }
        }
    }

    let mut l3: f64 = 0.0;
    let mut l4: f64 = 0.0;
    for &(i, k, l) in cqg.mc_labels() {
        let f = cqg.matrix_coefficient(i, k, l);
        for a in 0..n {
            let ea = m.alg.basis(a);
            l4 = l4.max(r.star_residual(&m, &f, &ea));
            for b in 0..n {
                l3 = l3.max(r.module_algebra_residual(&m, i, k, l, &ea, &m.alg.basis(b)));
            }
        }
    }
    let star = m.alg.verify();
    Ok(vec![
        CheckRecord::below(&inst, "product-associativity", star.associativity, tol),
        CheckRecord::below(&inst, "unit", star.unit, tol),
        CheckRecord::below(&inst, "double-star", star.star_involutive, tol),
        CheckRecord::below(&inst, "star-anti-multiplicative", star.star_anti_multiplicative, tol),
        CheckRecord::below(&inst, "regular-projection-compatible", l1, tol),
        CheckRecord::below(&inst, "regular-module", l2, tol),
        CheckRecord::below(&inst, "regular-module-algebra", l3, tol),
        CheckRecord::below(&inst, "regular-star", l4, tol),
        CheckRecord::below(&inst, "regular-yd", m.verify_yd_axioms().worst(), tol),
    ])
}

fn matrix_units(d: usize) -> Vec<CMatrix> {
    (0..d * d)
        .map(|k| {
            let mut x = CMatrix::zeros(d, d);
            x[(k / d, k % d)] = ONE;
            x
        })
        .collect()
}

/// Lemma suite over the fiber functor and every canonical example, in parallel.
pub fn lemmas_suite(cqg: &Arc<FiniteCQG>, kinds: &[ExampleKind], tol: f64) -> Result<Vec<CheckRecord>> {
    let mut pres: Vec<Arc<dyn CentrallyPointedPresentation>> = vec![Arc::new(FiberFunctor::new(cqg.clone()))];
    for &k in kinds {
        pres.push(Arc::new(FromYDAlgebra::new(Arc::new(canonical_example(cqg, k)?))));
    }
    flatten(parallel_map(&pres, |p| lemma_records(p.clone(), tol)))
}

/// `B → D_B → B_{D_B}` through `λ`, plus `Ψ` checks.
pub fn roundtrip_records(b: &Arc<FiniteYDAlgebra>, tol: f64) -> Result<Vec<CheckRecord>> {
    let p: Arc<dyn CentrallyPointedPresentation> = Arc::new(FromYDAlgebra::new(b.clone()));
    let r = RegularPart::new(p.clone())?;
    let m = r.assemble()?;
    let inst = b.name.as_str();
    let cat = &b.cqg.category;
    let dims = r.multiplicities();
    let count: usize = dims.iter().enumerate().map(|(i, k)| cat.irrep(i).dim * k).sum();
    let dim_rec = CheckRecord::below(inst, "dimension-identity", (count as f64 - b.dim() as f64).abs(), 0.5)
        .with_witness(format!("dim B_(D_B) = {count}, dim B = {}", b.dim()));
    let lam = verify_hom(&lambda_matrix(&r, b), &m, b);
    let mut out = vec![dim_rec];
    for (k, v) in lam.entries() {
        out.push(CheckRecord::below(inst, format!("lambda-{k}"), v, tol));
    }

    // Ψ on the generator's homs into irreducibles
    let triv = cat.trivial().clone();
    let mut func: f64 = 0.0;
    let mut star: f64 = 0.0;
    let mut sig: f64 = 0.0;
    let mut equiv: f64 = 0.0;
    for v in 0..cat.label_count() {
        let vr = cat.irrep(v).clone();
        let homs = p.hom_basis(&triv, &vr);
        let ends = p.hom_basis(&vr, &vr);
        for t in &homs {
            let pt = psi(&r, &triv, &vr, t)?;
            equiv = equiv.max(eqmod::equivariance_residual(&m, &triv, &vr, &pt));
            star = star.max(psi(&r, &vr, &triv, &p.adjoint(t))?.dist(&pt.adjoint(&m.alg)));
            for e in &ends {
                let lhs = psi(&r, &triv, &vr, &p.compose(e, t))?;
                func = func.max(lhs.dist(&psi(&r, &vr, &vr, e)?.mul(&m.alg, &pt)));
            }
            for u in 0..cat.label_count() {
                let ur = cat.irrep(u);
                let lhs = psi(&r, &cat.tensor(ur, &triv), &cat.tensor(ur, &vr), &p.sigma_conj(ur, t))?;
                sig = sig.max(lhs.dist(&eqmod::sigma_conjugate(&m, ur, &pt)));
            }
        }
    }
    out.push(CheckRecord::below(inst, "psi-functorial", func, tol));
    out.push(CheckRecord::below(inst, "psi-star", star, tol));
    out.push(CheckRecord::below(inst, "psi-equivariant", equiv, tol));
    out.push(CheckRecord::below(inst, "psi-sigma-compatible", sig, tol));
    Ok(out)
}

/// Fiber functor: hom dimensions survive `M → D_{B_M}` and `B_M ≅ C(G)`.
pub fn fiber_records(cqg: &Arc<FiniteCQG>, seed: u64, tol: f64) -> Result<Vec<CheckRecord>> {
    let p: Arc<dyn CentrallyPointedPresentation> = Arc::new(FiberFunctor::new(cqg.clone()));
    let r = RegularPart::new(p.clone())?;
    let m = r.assemble()?;
    let cat = &cqg.category;
    let inst = p.name();
    let mut objs: Vec<Rep> = (0..cat.label_count()).map(|i| cat.irrep(i).clone()).collect();
    let big = objs.last().cloned().expect("nonempty category");
    objs.push(cat.tensor(&big, &big));
    let mut mismatches = Vec::new();
    for (i, v) in objs.iter().enumerate() {
        for (j, w) in objs.iter().enumerate() {
            let a = p.hom_basis(v, w).len();
            let b = eqmod::equivariant_hom_basis(&m, v, w).len();
            if a != b {
                mismatches.push(format!("({i},{j}): {a} vs {b}"));
            }
        }
    }
    let rec = CheckRecord::below(&inst, "hom-dimensions-preserved", mismatches.len() as f64, 0.5);
    let iso = character_iso(&m.alg, seed);
    let order = cqg.order();
    Ok(vec![
        if mismatches.is_empty() { rec } else { rec.with_witness(mismatches.join("; ")) },
        CheckRecord::below(&inst, "dimension-equals-order", (m.dim() as f64 - order as f64).abs(), 0.5),
        CheckRecord::below(&inst, "commutative", if m.alg.is_commutative(tol) { 0.0 } else { 1.0 }, 0.5),
        CheckRecord::below(&inst, "regular-yd", m.verify_yd_axioms().worst(), tol),
        CheckRecord::below(&inst, "star-isomorphic-to-functions", iso.residual(), tol.max(1e-7))
            .with_witness(format!("{} characters, min singular value {:.3e}", iso.characters, iso.min_singular_value)),
    ])
}

pub fn roundtrip_suite(cqg: &Arc<FiniteCQG>, kinds: &[ExampleKind], seed: u64, tol: f64) -> Result<Vec<CheckRecord>> {
    let exs: Vec<Arc<FiniteYDAlgebra>> = kinds.iter().map(|&k| canonical_example(cqg, k).map(Arc::new)).collect::<Result<_>>()?;
    let mut out = flatten(parallel_map(&exs, |b| roundtrip_records(b, tol)))?;
    out.extend(fiber_records(cqg, seed, tol)?);
    Ok(out)
}

fn perm(n: usize, f: impl Fn(usize) -> usize) -> CMatrix {
    CMatrix::from_fn(n, n, |r, col| if r == f(col) { ONE } else { ZERO })
}

/// Functor-level checks on the given group plus the fixed counterexample and randomized pairs over `Z3`.
pub fn functors_suite(cqg: &Arc<FiniteCQG>, seed: u64, tol: f64) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let g = &cqg.group;
    let b = Arc::new(canonical_example(cqg, ExampleKind::FunctionTranslationTrivialGrading)?);
    let r = RegularPart::new(Arc::new(FromYDAlgebra::new(b.clone())))?;
    let m = r.assemble()?;
    let inst = b.name.as_str();

    let id = FunctorData::identity(&b);
    let hid = induce_hom(&r, &r, &b, &id)?;
    out.push(CheckRecord::below(inst, "identity-induces-identity", (&hid - &CMatrix::identity(r.dim())).max_abs(), tol));

    // right translation by the last element commutes with the left-translation action
    let k = g.order - 1;
    let f = FunctorData::from_map(perm(g.order, |x| g.mul(x, k)), &b);
    out.push(CheckRecord::below(inst, "translation-functor-valid", f.verify(&b, &b).worst(), tol));
    let sa = f.sigma_ad(&b, &b);
    out.push(CheckRecord::below(inst, "translation-sigma-ad", sa.residual, tol));
    let h = induce_hom(&r, &r, &b, &f)?;
    out.push(CheckRecord::below(inst, "translation-induced-yd-hom", verify_hom(&h, &m, &m).worst(), tol));
    let lam = lambda_matrix(&r, &b);
    let inv = lam.try_inverse().ok_or_else(|| Error::BadParameter("lambda is singular".into()))?;
    let recovered = &(&lam * &h) * &inv;
    out.push(CheckRecord::below(inst, "induce-hom-recovers-map", (&recovered - &f.phi).max_abs(), tol));
    let ff = f.compose(&f, &b);
    let lhs = induce_hom(&r, &r, &b, &ff)?;
    out.push(CheckRecord::below(inst, "induce-hom-functorial", (&lhs - &(&h * &h)).max_abs(), tol));

    out.extend(sigma_counterexample(tol)?);
    out.extend(natural_iso_property(seed, 24, tol)?);
    Ok(out)
}

/// Inversion on `C*(Z3)`: a `G`-equivariant automorphism that moves the grading.
pub fn sigma_counterexample(tol: f64) -> Result<Vec<CheckRecord>> {
    let z3 = Arc::new(bundled_group("z3")?);
    let b = Arc::new(canonical_example(&z3, ExampleKind::GroupAlgebraConjugation)?);
    let f = FunctorData::from_map(perm(3, |x| z3.group.inv(x)), &b);
    let inst = format!("{}/inversion", b.name);
    let rep = f.sigma_ad(&b, &b);
    let mut flagged = CheckRecord::flagged(&inst, "sigma-ad", rep.residual, 1e-2);
    if let Some((u, v, w)) = rep.witness {
        flagged = flagged.with_witness(format!("U=irrep{u}, T in Hom(m◁irrep{v}, m◁irrep{w})"));
    } else {
        flagged.pass = false;
    }
    Ok(vec![CheckRecord::below(&inst, "functor-valid", f.verify(&b, &b).worst(), tol), flagged])
}

/// Random functor pairs over `Z3`: the induced homs agree iff a natural isomorphism is found.
pub fn natural_iso_property(seed: u64, pairs: usize, tol: f64) -> Result<Vec<CheckRecord>> {
    let z3 = Arc::new(bundled_group("z3")?);
    let algebras = [
        Arc::new(canonical_example(&z3, ExampleKind::FunctionConjugation)?),
        Arc::new(canonical_example(&z3, ExampleKind::GroupAlgebraConjugation)?),
    ];
    let regs: Vec<RegularPart> =
        algebras.iter().map(|b| RegularPart::new(Arc::new(FromYDAlgebra::new(b.clone())))).collect::<Result<_>>()?;
    let objs: Vec<Rep> = (0..3).map(|i| z3.category.irrep(i).clone()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phase = |rng: &mut ChaCha8Rng| {
        let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        c(t.cos(), t.sin())
    };
    let random_functor = |rng: &mut ChaCha8Rng, which: usize, reuse: Option<&CMatrix>| -> FunctorData {
        let phi = reuse.cloned().unwrap_or_else(|| {
            if which == 0 {
                let mut p = [0usize, 1, 2];
                p.shuffle(rng);
                perm(3, |x| p[x])
            } else {
                let k: u32 = rng.gen_range(0..3);
                let w = c(0.0, std::f64::consts::TAU * k as f64 / 3.0).exp();
                CMatrix::from_fn(3, 3, |row, col| if row == col { w.powu(col as u32) } else { ZERO })
            }
        });
        // unitors: phases in B^G of degree e
        let f0: Elem = if which == 0 { (0..3).map(|_| phase(rng)).collect() } else { vec![phase(rng), ZERO, ZERO] };
        FunctorData { phi, f0 }
    };
    let mut disagreements = Vec::new();
    let (mut same, mut different) = (0usize, 0usize);
    for t in 0..pairs {
        let which = rng.gen_range(0..2);
        let b = &algebras[which];
        let f = random_functor(&mut rng, which, None);
        let reuse = rng.gen_bool(0.5);
        let g = random_functor(&mut rng, which, reuse.then_some(&f.phi));
        let h1 = induce_hom(&regs[which], &regs[which], b, &f)?;
        let h2 = induce_hom(&regs[which], &regs[which], b, &g)?;
        let equal = (&h1 - &h2).max_abs() < tol;
        let iso = natural_iso_check(b, b, &f, &g, &objs, tol).exists;
        if equal {
            same += 1;
        } else {
            different += 1;
        }
        if equal != iso {
            disagreements.push(format!("pair {t}: same-hom={equal}, iso={iso}"));
        }
    }
    let inst = format!("z3/random-functor-pairs({pairs})");
    let rec = CheckRecord::below(&inst, "same-hom-iff-iso", disagreements.len() as f64, 0.5);
    let rec = if disagreements.is_empty() { rec } else { rec.with_witness(disagreements.join("; ")) };
    let both = if same > 0 && different > 0 { 0.0 } else { 1.0 };
    Ok(vec![
        rec,
        CheckRecord::below(&inst, "both-outcomes-exercised", both, 0.5).with_witness(format!("{same} equal, {different} distinct")),
    ])
}
