//! Command-line front end: `check`, `homology`, `verify` and `lqt`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coalgebra::{builtin, lie_of, parse_coalgebra, Coalgebra};
use crate::complexes::{
    bar_homotopy_check, bar_leibniz_check, build, build_cyclic, ce_homotopy_check,
    ce_leibniz_check, chain_map_n, chain_map_t, commutator_check, deconcat_coproduct_check,
    epsilon_chain_map_check, ops::lie_leibniz, reduced_ce_product_check,
    representation_commute_check, shuffle_factorization_check, shuffle_product_check,
    sym_ce_cross_check, tn_exactness_check, ComplexKind, GradedDims,
};
use crate::error::{Error, Result};
use crate::lqt::{
    bar_invariants_dim, lqt_check, primitives_dim, weyl_coinvariants_dim, SigmaAdElement,
    StableRangeReport,
};
use crate::perm::{long_cycle_class, Permutation};
use crate::report::{CheckOutcome, Report};

/// Default resource guard: ambient basis words.
pub const DEFAULT_CAP: u128 = 5_000_000;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "coalg", version, about = "Exact chain complexes of finite-dimensional coalgebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a single JSON document instead of tables.
    #[arg(long, global = true)]
    json: bool,

    /// Refuse runs whose ambient tensor space exceeds this many basis words.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u128,

    /// Seed for randomized samples (basis changes, Hopf samples).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the coalgebra axioms and those of Lie(C).
    Check { coalgebra: String },
    /// Betti table of one complex in degrees up to the bound.
    Homology {
        coalgebra: String,
        #[arg(value_parser = parse_kind)]
        kind: ComplexKind,
        max_degree: usize,
    },
    /// Run a suite of operator identities.
    Verify {
        coalgebra: String,
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Largest tensor power for the weyl suite.
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        /// Matrix size for the weyl suite; defaults to n of `matrix:<n>`.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compare H^Lie(gl_n^c(C)) with Λ* HC(C)[+1].
    Lqt {
        coalgebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Homotopy,
    Exactness,
    Chainmaps,
    Hopf,
    Weyl,
}

fn parse_kind(s: &str) -> std::result::Result<ComplexKind, String> {
    s.parse::<ComplexKind>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct CoalgebraDescriptor {
    pub spec: String,
    pub name: String,
    pub dim: usize,
    pub source: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiTable {
    pub complex: ComplexKind,
    pub label: String,
    pub chain_dims: GradedDims,
    pub homology: GradedDims,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeylRow {
    pub n: usize,
    pub m: usize,
    pub coinvariants: usize,
    pub invariants: usize,
    pub factorial: usize,
    pub stable: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct StageTiming {
    pub stage: String,
    pub millis: f64,
}

/// Deterministic part of a run.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub coalgebra: Option<CoalgebraDescriptor>,
    pub checks: Vec<CheckOutcome>,
    pub tables: Vec<BettiTable>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub weyl: Vec<WeylRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lqt: Option<StableRangeReport>,
    pub passed: bool,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    report: &'a RunReport,
    timings: &'a [StageTiming],
}

/// Exit code plus the text destined for stdout and stderr.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Run {
    report: RunReport,
    timings: Vec<StageTiming>,
}

impl Run {
    fn new(command: Vec<String>) -> Self {
        Self {
            report: RunReport {
                command,
                coalgebra: None,
                checks: Vec::new(),
                tables: Vec::new(),
                weyl: Vec::new(),
                lqt: None,
                passed: true,
            },
            timings: Vec::new(),
        }
    }

    fn stage<T>(&mut self, name: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f();
        self.timings.push(StageTiming {
            stage: name.to_string(),
            millis: start.elapsed().as_secs_f64() * 1e3,
        });
        out
    }

    fn checks(&mut self, r: Report) {
        self.report.checks.extend(r.checks);
    }
}

/// Resolves a built-in name or reads a coalgebra file (axioms unchecked).
pub fn load_coalgebra(spec: &str) -> Result<(Coalgebra, &'static str)> {
    match builtin(spec) {
        Ok(c) => Ok((c, "builtin")),
        Err(Error::UnknownBuiltin(name)) => {
            if Path::new(spec).is_file() {
                let text = std::fs::read_to_string(spec)
                    .map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
                parse_coalgebra(&text)
                    .map(|c| (c, "file"))
                    .map_err(|e| match e {
                        Error::Parse(m) => Error::Parse(format!("{spec}: {m}")),
                        other => other,
                    })
            } else {
                Err(Error::UnknownBuiltin(name))
            }
        }
        Err(e) => Err(e),
    }
}

/// `(dim)^(degree+1)`, saturating.
pub fn ambient_words(dim: usize, max_degree: usize) -> u128 {
    let exp = u32::try_from(max_degree + 1).unwrap_or(u32::MAX);
    (dim as u128).checked_pow(exp).unwrap_or(u128::MAX)
}

fn guard(dim: usize, max_degree: usize, cap: u128) -> Result<()> {
    let words = ambient_words(dim, max_degree);
    if words > cap {
        Err(Error::ResourceGuard { words, cap })
    } else {
        Ok(())
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceGuard { .. } => EXIT_GUARD,
        Error::AxiomFailure { .. } | Error::NotSquareZero { .. } | Error::NotChainMap { .. } | Error::NotPreserved { .. } => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let mut run = Run::new(echo);
    match execute(&cli, &mut run) {
        Ok(()) => {
            run.report.passed = run.report.checks.iter().all(|c| c.passed)
                && run.report.lqt.as_ref().map_or(true, StableRangeReport::stable_agreement);
            let stdout = if cli.json {
                let doc = JsonDocument {
                    report: &run.report,
                    timings: &run.timings,
                };
                serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
            } else {
                render(&run.report)
            };
            Outcome {
                code: if run.report.passed { EXIT_PASS } else { EXIT_FAIL },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn describe(spec: &str, c: &Coalgebra, source: &'static str) -> CoalgebraDescriptor {
    CoalgebraDescriptor {
        spec: spec.to_string(),
        name: c.name().to_string(),
        dim: c.dim(),
        source,
    }
}

fn execute(cli: &Cli, run: &mut Run) -> Result<()> {
    let spec = match &cli.command {
        Command::Check { coalgebra }
        | Command::Homology { coalgebra, .. }
        | Command::Verify { coalgebra, .. }
        | Command::Lqt { coalgebra, .. } => coalgebra.clone(),
    };
    let (c, source) = run.stage("load", || load_coalgebra(&spec))?;
    run.report.coalgebra = Some(describe(&spec, &c, source));
    match &cli.command {
        Command::Check { .. } => {
            let r = run.stage("axioms", || Ok(axiom_report(&c)))?;
            run.checks(r);
        }
        Command::Homology { kind, max_degree, .. } => {
            if *max_degree == 0 {
                return Err(Error::InvalidArgument("degree bound must be at least 1".into()));
            }
            guard(c.dim(), *max_degree, cli.cap)?;
            let x = run.stage("build", || build(*kind, &c, max_degree + 1))?;
            let h = run.stage("homology", || Ok(x.homology()))?;
            let mut dims = x.dims();
            dims.dims.truncate(h.dims.len());
            let seed = cli.seed;
            let r = run.stage("basis change", || {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut r = Report::new();
                let moved = x.in_random_basis(&mut rng).homology();
                r.record(
                    format!("homology is invariant under a random basis change (seed {seed})"),
                    None,
                    (moved != h).then(|| format!("{moved} vs {h}")),
                );
                Ok(r)
            })?;
            run.report.tables.push(BettiTable {
                complex: *kind,
                label: x.label().to_string(),
                chain_dims: dims,
                homology: h,
            });
            run.checks(r);
        }
        Command::Verify { suite, max_degree, max_m, n, .. } => {
            verify(cli, run, &c, &spec, *suite, *max_degree, *max_m, *n)?;
        }
        Command::Lqt { n, max_degree, .. } => {
            guard(n * n * c.dim(), *max_degree, cli.cap)?;
            let r = run.stage("lqt", || lqt_check(&c, *n, *max_degree))?;
            let mut checks = Report::new();
            for row in r.rows.iter().filter(|row| row.stable) {
                checks.record(
                    "H^Lie agrees with Λ* HC[+1] in the stable range",
                    Some(row.degree),
                    (!row.agree).then(|| format!("{} vs {}", row.lie, row.expected)),
                );
            }
            run.report.lqt = Some(r);
            run.checks(checks);
        }
    }
    Ok(())
}

/// Coalgebra axioms, then `Lie(C)` axioms when `C` is coassociative.
pub fn axiom_report(c: &Coalgebra) -> Report {
    let mut r = c.check();
    if r.passed() {
        match lie_of(c) {
            Ok(l) => r.extend(l.check_lie()),
            Err(e) => r.fail("Lie(C) axioms", None, e.to_string()),
        }
    } else {
        r.fail("Lie(C) axioms", None, "C is not coassociative".into());
    }
    r
}

#[allow(clippy::too_many_arguments)]
fn verify(
    cli: &Cli,
    run: &mut Run,
    c: &Coalgebra,
    spec: &str,
    suite: Suite,
    max_degree: usize,
    max_m: usize,
    n: Option<usize>,
) -> Result<()> {
    if suite == Suite::Weyl {
        let n = match n {
            Some(n) => n,
            None => matrix_size(spec).ok_or_else(|| {
                Error::InvalidArgument("the weyl suite needs --n or a matrix:<n> coalgebra".into())
            })?,
        };
        if n == 0 || max_m == 0 {
            return Err(Error::InvalidArgument("need n ≥ 1 and max m ≥ 1".into()));
        }
        guard(n * n, max_m.saturating_sub(1), cli.cap)?;
        let rows = run.stage("weyl", || {
            (1..=max_m)
                .map(|m| {
                    Ok(WeylRow {
                        n,
                        m,
                        coinvariants: weyl_coinvariants_dim(n, m)?,
                        invariants: bar_invariants_dim(n, m)?,
                        factorial: (1..=m).product(),
                        stable: m <= n,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })?;
        let mut r = Report::new();
        for row in &rows {
            r.record(
                "coinvariants of gl_n equal invariants of gl_n^c",
                Some(row.m),
                (row.coinvariants != row.invariants)
                    .then(|| format!("{} vs {}", row.coinvariants, row.invariants)),
            );
            if row.stable {
                r.record(
                    "coinvariant dimension is m!",
                    Some(row.m),
                    (row.coinvariants != row.factorial)
                        .then(|| format!("{} vs {}", row.coinvariants, row.factorial)),
                );
            }
        }
        run.report.weyl = rows;
        run.checks(r);
        return Ok(());
    }
    if max_degree == 0 {
        return Err(Error::InvalidArgument("degree bound must be at least 1".into()));
    }
    guard(c.dim(), max_degree, cli.cap)?;
    let report = match suite {
        Suite::Homotopy => run.stage("homotopy", || {
            let l = lie_leibniz(c)?;
            let mut r = Report::new();
            for kind in ComplexKind::ALL {
                r.extend(build(kind, c, max_degree)?.square_zero_report());
            }
            r.extend(bar_homotopy_check(c, max_degree)?);
            r.extend(ce_homotopy_check(&l, max_degree)?);
            r.extend(bar_leibniz_check(c, max_degree));
            r.extend(ce_leibniz_check(&l, max_degree)?);
            Ok(r)
        })?,
        Suite::Exactness => run.stage("exactness", || {
            let mut r = tn_exactness_check(c, max_degree);
            r.extend(chain_map_t(c, max_degree)?.report());
            r.extend(chain_map_n(c, max_degree)?.report());
            r.extend(commutator_check(c, max_degree));
            let cc = build_cyclic(c, max_degree)?;
            for m in 1..=max_degree {
                let p = primitives_dim(c, m)?;
                r.record(
                    "signed cyclic coinvariants have the dimension of im N",
                    Some(m),
                    (p != cc.dim(m)).then(|| format!("{p} vs {}", cc.dim(m))),
                );
            }
            Ok(r)
        })?,
        Suite::Chainmaps => run.stage("chainmaps", || {
            let mut r = epsilon_chain_map_check(c, max_degree)?;
            r.extend(representation_commute_check(&lie_leibniz(c)?, max_degree.min(4))?);
            r.extend(sym_ce_cross_check(c, max_degree.min(4))?);
            Ok(r)
        })?,
        Suite::Hopf => {
            let seed = cli.seed;
            run.stage("hopf", || {
                let mut r = shuffle_factorization_check(max_degree);
                r.extend(shuffle_product_check(c, max_degree)?);
                r.extend(deconcat_coproduct_check(c, max_degree));
                r.extend(reduced_ce_product_check(&lie_leibniz(c)?, max_degree)?);
                r.extend(sigma_ad_report(c.dim(), max_degree.min(4), seed));
                Ok(r)
            })?
        }
        Suite::Weyl => unreachable!("handled above"),
    };
    run.checks(report);
    Ok(())
}

fn matrix_size(spec: &str) -> Option<usize> {
    let rest = spec.strip_prefix("matrix:")?;
    rest.split(':').next()?.parse().ok()
}

/// Long cycles are primitive; a seeded sample of products satisfies
/// `Δ(ab) = Δ(a)Δ(b)` and associativity.
pub fn sigma_ad_report(letters: usize, max_m: usize, seed: u64) -> Report {
    use rand::seq::SliceRandom;
    use rand::Rng;

    let mut r = Report::new();
    for m in 2..=max_m {
        let word: Vec<usize> = (0..m).map(|i| i % letters.max(1)).collect();
        let bad = long_cycle_class(m).into_iter().find(|s| {
            !SigmaAdElement::basis(word.clone(), s.clone())
                .expect("degree matches")
                .is_primitive()
        });
        r.record("long cycles are primitive", Some(m), bad.map(|s| format!("σ = {s}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| {
        let m = rng.gen_range(1..=2usize);
        let perms = Permutation::all(m);
        let mut e = SigmaAdElement::zero(m);
        for _ in 0..2 {
            let w = (0..m).map(|_| rng.gen_range(0..letters.max(1))).collect();
            let s = perms.choose(rng).expect("nonempty").clone();
            let c = crate::linalg::Rational::from_integer(rng.gen_range(-3i64..=3).into());
            e.add_term(w, s, c).expect("degree matches");
        }
        e
    };
    let (mut mult, mut assoc) = (None, None);
    for i in 0..16 {
        let (a, b, c) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
        if mult.is_none() && a.product(&b).coproduct() != a.coproduct().product(&b.coproduct()) {
            mult = Some(format!("sample {i}: a = {a}, b = {b}"));
        }
        if assoc.is_none() && a.product(&b).product(&c) != a.product(&b.product(&c)) {
            assoc = Some(format!("sample {i}"));
        }
    }
    r.record(format!("coproduct is multiplicative (seed {seed})"), None, mult);
    r.record(format!("product is associative (seed {seed})"), None, assoc);
    r
}

/// Human-readable rendering of a report.
pub fn render(report: &RunReport) -> String {
    let mut out = String::new();
    if let Some(c) = &report.coalgebra {
        let _ = writeln!(out, "coalgebra {} (dim {}, {})", c.name, c.dim, c.source);
    }
    for t in &report.tables {
        let _ = writeln!(out, "{} of {}", t.complex, t.label);
        let _ = writeln!(out, "{:>6} {:>10} {:>10}", "degree", "chains", "homology");
        for (deg, h) in t.homology.iter() {
            let dim = t.chain_dims.get(deg).unwrap_or(0);
            let _ = writeln!(out, "{deg:>6} {dim:>10} {h:>10}");
        }
    }
    if !report.weyl.is_empty() {
        let _ = writeln!(out, "{:>3} {:>3} {:>12} {:>10} {:>6} {:>7}", "n", "m", "coinvariants", "invariants", "m!", "stable");
        for w in &report.weyl {
            let _ = writeln!(
                out,
                "{:>3} {:>3} {:>12} {:>10} {:>6} {:>7}",
                w.n, w.m, w.coinvariants, w.invariants, w.factorial, w.stable
            );
        }
    }
    if let Some(l) = &report.lqt {
        let _ = writeln!(out, "gl_{}^c({}) against Λ* HC[+1]", l.n, l.coalgebra);
        let _ = writeln!(out, "{:>6} {:>8} {:>10} {:>7} {:>6}", "degree", "H^Lie", "Λ*HC[+1]", "stable", "agree");
        for row in &l.rows {
            let _ = writeln!(
                out,
                "{:>6} {:>8} {:>10} {:>7} {:>6}",
                row.degree, row.lie, row.expected, row.stable, row.agree
            );
        }
    }
    for c in &report.checks {
        let _ = writeln!(out, "{c}");
    }
    let _ = writeln!(out, "{}", if report.passed { "PASS" } else { "FAIL" });
    out
}
