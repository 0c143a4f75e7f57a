//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines always reach the output; exits non-zero if any criterion fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use ydcat::cqg::{bundled_group, bundled_names, suq2_category, FiniteCQG};
use ydcat::dualeng::{CentrallyPointedPresentation, FiberFunctor, FromYDAlgebra};
use ydcat::report::CheckRecord;
use ydcat::suites;
use ydcat::ydalg::{canonical_example, ExampleKind};

const TOL: f64 = 1e-8;
const ISO_TOL: f64 = 1e-7;
const SEED: u64 = 20240611;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_records(records: &[CheckRecord], extra: &[(bool, String)]) -> Self {
        let failing: Vec<String> = records.iter().filter(|r| !r.pass).map(|r| format!("{}:{}={:.2e}", r.instance, r.check, r.residual)).collect();
        let worst = records.iter().filter(|r| !r.check.ends_with("-flagged")).map(|r| r.residual).fold(0.0, f64::max);
        let mut detail = format!("{} checks, worst residual {worst:.2e}", records.len());
        let mut pass = failing.is_empty() && !records.is_empty();
        for (ok, msg) in extra {
            detail.push_str(&format!("; {msg}"));
            pass &= ok;
        }
        if !failing.is_empty() {
            detail.push_str(&format!("; failing: {}", failing.join(", ")));
        }
        Outcome { pass, detail }
    }
}

fn groups() -> Vec<Arc<FiniteCQG>> {
    bundled_names().into_iter().map(|n| Arc::new(bundled_group(n).expect("bundled fixture loads"))).collect()
}

fn within(label: &str, elapsed: Duration, limit: Duration) -> (bool, String) {
    (elapsed < limit, format!("{label} {:.2}s (limit {}s)", elapsed.as_secs_f64(), limit.as_secs()))
}

fn conjugate_equations() -> ydcat::Result<Outcome> {
    let t = Instant::now();
    let mut recs = Vec::new();
    for g in groups() {
        recs.extend(suites::conjugate_suite(&g.category, TOL)?);
    }
    recs.extend(suites::conjugate_suite(&suq2_category(0.5, 2.0)?, TOL)?);
    Ok(Outcome::from_records(&recs, &[within("runtime", t.elapsed(), Duration::from_secs(10))]))
}

fn yd_axioms() -> ydcat::Result<Outcome> {
    let mut recs = Vec::new();
    for g in groups() {
        recs.extend(suites::axioms_suite(&g, TOL)?);
    }
    let control = recs
        .iter()
        .find(|r| r.instance.starts_with("s3") && r.check == "corrupted-grading-flagged")
        .map(|r| (r.pass && r.residual > 1e-2, format!("corrupted C*(S3) residual {:.2e}", r.residual)))
        .unwrap_or((false, "corrupted C*(S3) control missing".into()));
    Ok(Outcome::from_records(&recs, &[control]))
}

fn module_structure() -> ydcat::Result<Outcome> {
    let t = Instant::now();
    let s3 = Arc::new(bundled_group("s3")?);
    let b = canonical_example(&s3, ExampleKind::GroupAlgebraConjugation)?;
    let recs = suites::modules_suite(&b, TOL)?;
    Ok(Outcome::from_records(&recs, &[within("runtime", t.elapsed(), Duration::from_secs(30))]))
}

fn lemmas() -> ydcat::Result<Outcome> {
    let s3 = Arc::new(bundled_group("s3")?);
    let z3 = Arc::new(bundled_group("z3")?);
    let fiber: Arc<dyn CentrallyPointedPresentation> = Arc::new(FiberFunctor::new(s3));
    let group_algebra = Arc::new(canonical_example(&z3, ExampleKind::GroupAlgebraConjugation)?);
    let from_yd: Arc<dyn CentrallyPointedPresentation> = Arc::new(FromYDAlgebra::new(group_algebra));
    let mut recs = suites::lemma_records(fiber, TOL)?;
    recs.extend(suites::lemma_records(from_yd, TOL)?);
    let identities = recs.iter().filter(|r| r.check.starts_with("regular-")).count();
    Ok(Outcome::from_records(&recs, &[(identities == 10, format!("{identities} regular-part identities"))]))
}

fn round_trip() -> ydcat::Result<Outcome> {
    let mut recs = Vec::new();
    let mut extra = Vec::new();
    for g in groups() {
        let t = Instant::now();
        let exs = suites::examples(&g)?;
        for part in suites::parallel_map(&exs, |b| suites::roundtrip_records(b, TOL)) {
            recs.extend(part?);
        }
        extra.push(within(&g.group.name, t.elapsed(), Duration::from_secs(60)));
    }
    let lambda = recs.iter().filter(|r| r.check.starts_with("lambda-")).count();
    extra.push((lambda > 0, format!("{lambda} lambda checks")));
    Ok(Outcome::from_records(&recs, &extra))
}

fn fiber_reconstruction() -> ydcat::Result<Outcome> {
    let s3 = Arc::new(bundled_group("s3")?);
    let recs = suites::fiber_records(&s3, SEED, TOL)?;
    let iso = recs
        .iter()
        .find(|r| r.check == "star-isomorphic-to-functions")
        .map(|r| (r.residual < ISO_TOL, format!("iso residual {:.2e}", r.residual)))
        .unwrap_or((false, "iso record missing".into()));
    Ok(Outcome::from_records(&recs, &[iso]))
}

fn functor_moduli() -> ydcat::Result<Outcome> {
    let z3 = Arc::new(bundled_group("z3")?);
    let recs = suites::functors_suite(&z3, SEED, TOL)?;
    let witness = recs
        .iter()
        .find(|r| r.check == "sigma-ad-flagged")
        .map(|r| (r.pass && r.witness.is_some(), format!("witness {}", r.witness.clone().unwrap_or_default())))
        .unwrap_or((false, "sigma counterexample missing".into()));
    let pairs = recs
        .iter()
        .find(|r| r.check == "same-hom-iff-iso")
        .map(|r| {
            let n: usize = r.instance.trim_end_matches(')').rsplit('(').next().and_then(|s| s.parse().ok()).unwrap_or(0);
            (n >= 20, format!("{n} random pairs"))
        })
        .unwrap_or((false, "random pairs missing".into()));
    Ok(Outcome::from_records(&recs, &[witness, pairs]))
}

fn suq2_non_kac() -> ydcat::Result<Outcome> {
    let mut recs = Vec::new();
    for q in [0.3, 0.5, 0.8] {
        recs.extend(suites::suq2_suite(&suq2_category(q, 2.0)?, q, TOL)?);
    }
    Ok(Outcome::from_records(&recs, &[]))
}

fn main() {
    let criteria: [(&str, fn() -> ydcat::Result<Outcome>); 8] = [
        ("conjugate equations on all fixtures and SU_q(2)", conjugate_equations),
        ("YD axioms of all canonical examples, corrupted grading flagged", yd_axioms),
        ("pi_U and S_{U,V} over S3 with the tautological grading", module_structure),
        ("regular-part lemmas for fiber S3 and C*(Z3)", lemmas),
        ("round trip B -> D_B -> B_{D_B} for all examples", round_trip),
        ("fiber functor of S3 reconstructs C(S3)", fiber_reconstruction),
        ("functor moduli: identity, sigma witness, natural isos", functor_moduli),
        ("SU_q(2) quantum dimensions and truncation", suq2_non_kac),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome { pass: false, detail: format!("error: {e}") });
        all &= outcome.pass;
        println!(
            "criterion {} {} {name} ({:.2}s): {}",
            i + 1,
            if outcome.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    if !all {
        std::process::exit(1);
    }
}
