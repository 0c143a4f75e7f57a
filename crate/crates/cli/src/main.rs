use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ydcat::cqg::{bundled_group, bundled_names, load_finite_group, suq2_category, FiniteCQG};
use ydcat::report::{CheckRecord, Report};
use ydcat::suites;
use ydcat::tensorcat::RepCategory;
use ydcat::ydalg::{canonical_example, ExampleKind};

/// Environment variable naming a directory searched for group fixtures.
const FIXTURE_DIR_VAR: &str = "YDCAT_FIXTURE_DIR";

#[derive(Parser)]
#[command(name = "ydcat", version, about = "Yetter-Drinfeld algebras and their bimodule categories, verified numerically")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and emit a JSON report.
    Verify(VerifyArgs),
    /// Run the round-trip suite only.
    Roundtrip(VerifyArgs),
    /// Print the irreducibles, dimensions and quantum dimensions of an instance.
    Describe(Instance),
}

#[derive(Args, Clone)]
struct Instance {
    /// Fixture path, bundled group name, or `suq2`.
    #[arg(long)]
    group: String,
    /// Restrict to one algebra kind, e.g. `group-algebra-conjugation` or `adjoint-matrix-block:2`.
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    #[arg(long, default_value_t = 2.0)]
    jmax: f64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Axioms,
    Lemmas,
    Roundtrip,
    Functors,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Lemmas => "lemmas",
            Suite::Roundtrip => "roundtrip",
            Suite::Functors => "functors",
            Suite::All => "all",
        }
    }
}

enum Loaded {
    Group(Arc<FiniteCQG>),
    Suq2 { q: f64, cat: RepCategory },
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn resolve_group(spec: &str) -> Result<FiniteCQG, UsageError> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok(load_finite_group(path)?);
    }
    if let Ok(dir) = std::env::var(FIXTURE_DIR_VAR) {
        let dir = Path::new(&dir);
        let file = path.file_name().map(PathBuf::from).unwrap_or_default();
        for cand in [dir.join(&file), dir.join(format!("{spec}.json"))] {
            if cand.is_file() {
                return Ok(load_finite_group(cand)?);
            }
        }
    }
    if bundled_names().contains(&spec.to_ascii_lowercase().as_str()) {
        return Ok(bundled_group(spec)?);
    }
    Err(UsageError(format!("no fixture found for '{spec}' (not a file, not in ${FIXTURE_DIR_VAR}, not bundled)")))
}

fn load(inst: &Instance) -> Result<Loaded, UsageError> {
    if inst.group.eq_ignore_ascii_case("suq2") {
        return Ok(Loaded::Suq2 { q: inst.q, cat: suq2_category(inst.q, inst.jmax)? });
    }
    Ok(Loaded::Group(Arc::new(resolve_group(&inst.group)?)))
}

fn kinds(cqg: &FiniteCQG, algebra: &Option<String>) -> Result<Vec<ExampleKind>, UsageError> {
    match algebra {
        Some(a) => Ok(vec![ExampleKind::parse(a)?]),
        None => Ok(ExampleKind::all_for(cqg)),
    }
}

fn run(args: &VerifyArgs, suite: Suite) -> Result<Report, UsageError> {
    if !(args.tol > 0.0) {
        return Err(UsageError(format!("--tol must be positive, got {}", args.tol)));
    }
    let inst = &args.instance;
    let tol = args.tol;
    let mut records: Vec<CheckRecord> = Vec::new();
    match load(inst)? {
        Loaded::Suq2 { q, cat } => {
            if !matches!(suite, Suite::Axioms | Suite::All) {
                return Err(UsageError(format!("suite '{}' needs a finite group", suite.name())));
            }
            records.extend(suites::suq2_suite(&cat, q, tol)?);
        }
        Loaded::Group(cqg) => {
            let ks = kinds(&cqg, &inst.algebra)?;
            for k in &ks {
                canonical_example(&cqg, *k)?;
            }
            let want = |s: Suite| suite == s || suite == Suite::All;
            if want(Suite::Axioms) {
                records.extend(suites::axioms_suite(&cqg, tol)?);
                for &k in &ks {
                    records.extend(suites::modules_suite(&canonical_example(&cqg, k)?, tol)?);
                }
            }
            if want(Suite::Lemmas) {
                records.extend(suites::lemmas_suite(&cqg, &ks, tol)?);
            }
            if want(Suite::Roundtrip) {
                records.extend(suites::roundtrip_suite(&cqg, &ks, args.seed, tol)?);
            }
            if want(Suite::Functors) {
                records.extend(suites::functors_suite(&cqg, args.seed, tol)?);
            }
        }
    }
    Ok(Report::new(suite.name(), args.seed, records))
}

fn fmt_num(x: f64) -> String {
    format!("{}", (x * 1e10).round() / 1e10)
}

fn describe(inst: &Instance) -> Result<String, UsageError> {
    let mut out = String::new();
    let loaded = load(inst)?;
    let cat = match &loaded {
        Loaded::Suq2 { q, cat } => {
            out.push_str(&format!("SU_q(2) truncated at jmax = {}, q = {q}\n", inst.jmax));
            cat
        }
        Loaded::Group(cqg) => {
            out.push_str(&format!("group {} of order {}\n", cqg.group.name, cqg.order()));
            if let Some(a) = &inst.algebra {
                let b = canonical_example(cqg, ExampleKind::parse(a)?)?;
                out.push_str(&format!("algebra {} of dimension {}\n", b.name, b.dim()));
            }
            &cqg.category
        }
    };
    out.push_str(&format!("irreducibles: {}\n", cat.label_count()));
    let mut sum_sq = 0;
    for (i, label) in cat.labels.iter().enumerate() {
        let qd = cat.frobenius_dim(cat.irrep(i))?;
        sum_sq += label.dim * label.dim;
        out.push_str(&format!(
            "  [{i}] {} dim {} conjugate {} quantum-dim {}\n",
            label.id,
            label.dim,
            label.conjugate,
            fmt_num(qd)
        ));
    }
    out.push_str(&format!("sum of squared dimensions: {sum_sq}\n"));
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Describe(inst) => describe(inst).map(|s| {
            print!("{s}");
            ExitCode::SUCCESS
        }),
        Command::Verify(args) => verify(args, args.suite),
        Command::Roundtrip(args) => verify(args, Suite::Roundtrip),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn verify(args: &VerifyArgs, suite: Suite) -> Result<ExitCode, UsageError> {
    let report = run(args, suite)?;
    let json = report.to_json();
    match &args.out {
        Some(p) => std::fs::write(p, json + "\n")?,
        None => println!("{json}"),
    }
    let failed = report.failures().count();
    eprintln!("{} checks, {} failed", report.records.len(), failed);
    for r in report.failures() {
        eprintln!("  FAIL {} {}: residual {:.3e} (tolerance {:.1e})", r.instance, r.check, r.residual, r.tolerance);
    }
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
