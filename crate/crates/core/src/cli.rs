//! Command-line front end.
//!
//! Exit codes: `0` when every check passes, `1` when any check fails
//! (including a negative local-tomography verdict), `2` on a usage or parse
//! error. JSON mode writes exactly one document to standard output.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::descriptor::AlgebraDescriptor;
use crate::element::Element;
use crate::error::Result;
use crate::lattice::{self, CoveringCase, SharpEffect};
use crate::loctom::{self, LocalTomographyReport};
use crate::random::{random_effect, Profile};
use crate::reconstruct::{reconstructed_mul, verify_t_commutation};
use crate::spectral;
use crate::tolerance::{Tier, Tolerances};
use crate::verify::hexfloat::format_element;
use crate::verify::{run_suite, SuiteCatalog, VerificationReport};

/// Stream of the seeded generator reserved for the single computation each
/// command shows before its suites.
const COMPUTATION_STREAM: u64 = u64::MAX - 1;

#[derive(Debug, Parser)]
#[command(name = "seqlab", about = "Sequential products on Euclidean Jordan algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every property suite.
    Verify(CliConfig),
    /// Decompose a sampled effect and run the spectral and sharpness suites.
    Spectral(CliConfig),
    /// Sharp-effect lattice and rank computations and suites.
    Lattice(CliConfig),
    /// Compare the reconstructed product with the Jordan product.
    Reconstruct(CliConfig),
    /// Local-tomography verdict per summand; exits 1 when it is false.
    Loctom(CliConfig),
}

/// Flags shared by every command.
#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// Algebra descriptor such as `complex:2+spin:3`.
    #[arg(long, value_parser = parse_descriptor)]
    pub algebra: AlgebraDescriptor,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Overrides the base equality tolerance.
    #[arg(long, value_parser = parse_tol)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl CliConfig {
    pub fn tolerances(&self) -> Tolerances {
        self.tol.map(Tolerances::with_eq_tol).unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn parse_descriptor(s: &str) -> std::result::Result<AlgebraDescriptor, String> {
    s.parse().map_err(|e: crate::error::Error| e.to_string())
}

fn parse_tol(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("`{s}` is not a positive finite number")),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralTermRow {
    pub lambda: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralSummary {
    pub element: String,
    pub terms: Vec<SpectralTermRow>,
    pub reconstruction_residual: f64,
    pub ceiling_rank: usize,
    pub floor_rank: usize,
    pub eps: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeSummary {
    pub p: String,
    pub q: String,
    pub atom: String,
    pub unit_rank: usize,
    pub expected_unit_rank: usize,
    pub rank_p: usize,
    pub rank_q: usize,
    pub rank_join: usize,
    pub rank_meet: usize,
    pub covering_case: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReconstructSummary {
    pub a: String,
    pub b: String,
    pub product_residual: f64,
    pub commutator: f64,
    pub jordan_identity: f64,
    pub eps: f64,
    pub pass: bool,
}

/// The single computation a command shows before its suites.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Computation {
    Spectral(SpectralSummary),
    Lattice(LatticeSummary),
    Reconstruct(ReconstructSummary),
    Loctom(LocalTomographyReport),
}

impl Computation {
    pub fn pass(&self) -> bool {
        match self {
            Computation::Spectral(s) => s.pass,
            Computation::Lattice(s) => s.pass,
            Computation::Reconstruct(s) => s.pass,
            Computation::Loctom(s) => s.verdict,
        }
    }
}

/// Everything one invocation produces.
#[derive(Debug, Clone, Serialize)]
pub struct CliReport {
    pub command: String,
    pub algebra: String,
    pub seed: u64,
    pub samples: usize,
    pub eq_tol: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computation: Option<Computation>,
    pub reports: Vec<VerificationReport>,
}

impl CliReport {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

fn computation_rng(seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(COMPUTATION_STREAM);
    rng
}

fn spectral_summary(cfg: &CliConfig, tol: &Tolerances) -> Result<SpectralSummary> {
    let a = random_effect(&cfg.algebra, &mut computation_rng(cfg.seed), Profile::Generic);
    let form = spectral::spectral_decompose(&a, tol)?;
    let residual = (&form.reconstruct() - &a).ref_norm();
    let eps = tol.eps(a.dimension(), a.ref_norm());
    let rank = |e: Element| SharpEffect::new(e, tol).and_then(|s| lattice::rank_of(&s, tol));
    Ok(SpectralSummary {
        element: format_element(&a),
        terms: form
            .terms()
            .iter()
            .map(|t| SpectralTermRow {
                lambda: t.lambda,
                multiplicity: t.multiplicity,
            })
            .collect(),
        reconstruction_residual: residual,
        ceiling_rank: rank(spectral::ceiling(&a, tol)?)?,
        floor_rank: rank(spectral::floor(&a, tol)?)?,
        eps,
        pass: residual <= eps,
    })
}

fn lattice_summary(cfg: &CliConfig, tol: &Tolerances) -> Result<LatticeSummary> {
    let d = &cfg.algebra;
    let mut rng = computation_rng(cfg.seed);
    let p = SharpEffect::new(random_effect(d, &mut rng, Profile::Sharp), tol)?;
    let q = SharpEffect::new(random_effect(d, &mut rng, Profile::Sharp), tol)?;
    let atom = SharpEffect::new(random_effect(d, &mut rng, Profile::Atomic), tol)?;
    let unit = SharpEffect::new(Element::unit(d), tol)?;
    let unit_rank = lattice::rank_of(&unit, tol)?;
    let covering = lattice::covering_check(&p, &atom, tol)?;
    let covering_case = match covering.case {
        CoveringCase::Zero => "zero",
        CoveringCase::Atom => "atom",
        CoveringCase::Neither => "neither",
    };
    Ok(LatticeSummary {
        p: format_element(p.value()),
        q: format_element(q.value()),
        atom: format_element(atom.value()),
        unit_rank,
        expected_unit_rank: d.rank(),
        rank_p: lattice::rank_of(&p, tol)?,
        rank_q: lattice::rank_of(&q, tol)?,
        rank_join: lattice::rank_of(&lattice::join(&p, &q, tol)?, tol)?,
        rank_meet: lattice::rank_of(&lattice::meet(&p, &q, tol)?, tol)?,
        covering_case: covering_case.to_string(),
        pass: unit_rank == d.rank() && covering.case != CoveringCase::Neither,
    })
}

fn reconstruct_summary(cfg: &CliConfig, tol: &Tolerances) -> Result<ReconstructSummary> {
    let d = &cfg.algebra;
    let mut rng = computation_rng(cfg.seed);
    let a = random_effect(d, &mut rng, Profile::Generic);
    let b = random_effect(d, &mut rng, Profile::Generic);
    let residual = (&reconstructed_mul(&a, &b, tol)? - &a.jordan_mul(&b)?).ref_norm();
    let t = verify_t_commutation(&a, &b, tol)?;
    let eps = tol.eps_tier(Tier::Chained, d.dimension(), 1.0);
    Ok(ReconstructSummary {
        a: format_element(&a),
        b: format_element(&b),
        product_residual: residual,
        commutator: t.commutator,
        jordan_identity: t.jordan_identity,
        eps,
        pass: residual <= eps && t.jordan_identity <= eps,
    })
}

/// Run one parsed command.
pub fn execute(command: &str, cfg: &CliConfig) -> Result<CliReport> {
    let tol = cfg.tolerances();
    let (computation, suites): (Option<Computation>, Vec<&str>) = match command {
        "verify" => (None, SuiteCatalog::standard().names()),
        "spectral" => (
            Some(Computation::Spectral(spectral_summary(cfg, &tol)?)),
            vec!["spectral", "sharpness"],
        ),
        "lattice" => (Some(Computation::Lattice(lattice_summary(cfg, &tol)?)), vec!["lattice", "rank"]),
        "reconstruct" => (
            Some(Computation::Reconstruct(reconstruct_summary(cfg, &tol)?)),
            vec!["reconstruction", "t-commutation"],
        ),
        "loctom" => (
            Some(Computation::Loctom(loctom::is_locally_tomographic_self_composite(&cfg.algebra))),
            vec!["table", "tensor"],
        ),
        other => return Err(crate::error::Error::UnknownSuite(other.to_string())),
    };
    let reports = suites
        .iter()
        .map(|s| run_suite(s, &cfg.algebra, cfg.samples, cfg.seed, &tol))
        .collect::<Result<Vec<_>>>()?;
    let pass = computation.as_ref().is_none_or(Computation::pass) && reports.iter().all(|r| r.pass);
    Ok(CliReport {
        command: command.to_string(),
        algebra: cfg.algebra.to_string(),
        seed: cfg.seed,
        samples: cfg.samples,
        eq_tol: tol.eq_tol,
        pass,
        computation,
        reports,
    })
}

/// Fixed-width table of suite reports.
pub fn report_table(reports: &[VerificationReport]) -> String {
    let mut out = format!(
        "{:<20} {:<18} {:>7} {:>9}  {}\n",
        "suite", "algebra", "samples", "seconds", "verdict"
    );
    for r in reports {
        let verdict = match (r.pass, r.vacuous) {
            (true, true) => "pass (vacuous)",
            (true, false) => "pass",
            (false, _) => "FAIL",
        };
        out += &format!(
            "{:<20} {:<18} {:>7} {:>9.3}  {}\n",
            r.suite, r.algebra, r.samples, r.elapsed_s, verdict
        );
    }
    for r in reports.iter().filter(|r| !r.pass) {
        out += &format!("\n{} on {}:\n", r.suite, r.algebra);
        for f in r.failures.iter().take(5) {
            out += &format!("  {} violated by {:e}\n", f.predicate, f.violation);
        }
    }
    out
}

fn kv(out: &mut String, key: &str, value: impl std::fmt::Display) {
    *out += &format!("  {key:<24} {value}\n");
}

fn computation_text(c: &Computation) -> String {
    let mut out = String::new();
    match c {
        Computation::Spectral(s) => {
            out += &format!("  {:>24} {:>12}\n", "lambda", "multiplicity");
            for t in &s.terms {
                out += &format!("  {:>24.15e} {:>12}\n", t.lambda, t.multiplicity);
            }
            kv(&mut out, "reconstruction residual", format!("{:e}", s.reconstruction_residual));
            kv(&mut out, "eps", format!("{:e}", s.eps));
            kv(&mut out, "rank of ceiling", s.ceiling_rank);
            kv(&mut out, "rank of floor", s.floor_rank);
        }
        Computation::Lattice(s) => {
            kv(&mut out, "rank of unit", format!("{} (expected {})", s.unit_rank, s.expected_unit_rank));
            kv(&mut out, "rank p, q", format!("{}, {}", s.rank_p, s.rank_q));
            kv(&mut out, "rank p join q", s.rank_join);
            kv(&mut out, "rank p meet q", s.rank_meet);
            kv(&mut out, "(atom join p) - p", &s.covering_case);
        }
        Computation::Reconstruct(s) => {
            kv(&mut out, "|a*b - a.b|", format!("{:e}", s.product_residual));
            kv(&mut out, "|[T_a, T_b]|", format!("{:e}", s.commutator));
            kv(&mut out, "|[T_a, T_(a*a)]|", format!("{:e}", s.jordan_identity));
            kv(&mut out, "eps", format!("{:e}", s.eps));
        }
        Computation::Loctom(r) => {
            out += &format!(
                "  {:<12} {:>5} {:>5} {:>7} {:>7}  {}\n",
                "summand", "rank", "dim", "rank^2", "dim^2", "square composite"
            );
            for s in &r.summands {
                out += &format!(
                    "  {:<12} {:>5} {:>5} {:>7} {:>7}  {}\n",
                    s.factor,
                    s.rank,
                    s.dim,
                    s.rank_squared,
                    s.dim_squared,
                    if s.verdict { "yes" } else { "no" }
                );
            }
            kv(&mut out, "locally tomographic", r.verdict);
        }
    }
    out
}

pub fn render_text(report: &CliReport) -> String {
    let mut out = format!(
        "{} {} (seed {}, samples {}, eq_tol {:e})\n\n",
        report.command, report.algebra, report.seed, report.samples, report.eq_tol
    );
    if let Some(c) = &report.computation {
        out += &computation_text(c);
        out += "\n";
    }
    out += &report_table(&report.reports);
    out += &format!("\nverdict: {}\n", if report.pass { "pass" } else { "FAIL" });
    out
}

/// Usage of the subcommand named in `args`, or of the whole program.
fn usage_for(args: &[OsString]) -> String {
    let mut cmd = Cli::command();
    let name = args
        .iter()
        .skip(1)
        .filter_map(|a| a.to_str())
        .find(|a| cmd.find_subcommand(a).is_some())
        .map(str::to_string);
    match name.and_then(|n| cmd.find_subcommand_mut(&n).cloned()) {
        Some(mut sub) => sub.render_usage().to_string().replacen("Usage: ", "Usage: seqlab ", 1),
        None => cmd.render_usage().to_string(),
    }
}

/// Parse `args` (program name first), run, write the output and return
/// the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}\n{}\n", usage_for(&args));
                2
            } else {
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    let (name, cfg) = match &cli.command {
        Command::Verify(c) => ("verify", c),
        Command::Spectral(c) => ("spectral", c),
        Command::Lattice(c) => ("lattice", c),
        Command::Reconstruct(c) => ("reconstruct", c),
        Command::Loctom(c) => ("loctom", c),
    };
    match execute(name, cfg) {
        Ok(report) => {
            let text = match cfg.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
                Format::Text => render_text(&report),
            };
            let _ = stdout.write_all(text.as_bytes());
            report.exit_code()
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
