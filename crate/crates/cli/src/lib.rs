//! Command-line front end: algebra files, reports and the theorem suites.

pub mod files;
pub mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hochlie::lie::{is_simple, witt};
use hochlie::verify::{assoc_summary, run_suite, summarize, Family, Status, SuiteConfig, SuiteId, DEFAULT_MAX_ORDER};
use hochlie::{hh1, AssocAlgebra, GroupSpec, PrimeField};
use thiserror::Error;

pub use files::AlgebraFileV1;
pub use report::ReportFileV1;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FAIL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const INCONCLUSIVE: u8 = 3;
    pub const INPUT: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("computation failed: {0}")]
    Compute(#[from] hochlie::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Input(_) | CliError::Io(_) => exit::INPUT,
            CliError::Compute(hochlie::Error::Inconclusive(_)) => exit::INCONCLUSIVE,
            CliError::Compute(_) => exit::FAIL,
        }
    }
}

fn usage(e: hochlie::Error) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "hochlie", version, about = "First Hochschild cohomology of finite-dimensional algebras over GF(p), as a Lie algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a group algebra and write it as an algebra file.
    Construct(ConstructArgs),
    /// Associative invariants: center, radical layers, socle, blocks, predicates.
    Analyze(InputArgs),
    /// Der, IDer and HH¹ with its Lie structure constants.
    Hh1(InputArgs),
    /// Simplicity verdict for HH¹ of an algebra, or for a Jacobson–Witt algebra.
    Lie(LieArgs),
    /// Run the theorem suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Cyclic,
    ElemAbelian,
    Dihedral,
    Quaternion,
    Semidirect,
    Extraspecial,
    Product,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Characteristic of the field (and the prime of the group where the family has one).
    #[arg(long)]
    pub p: u32,
    /// Rank `n` of `(C_p)^n`.
    #[arg(long)]
    pub rank: Option<u32>,
    /// Order of `C_m` in `C_p ⋊ C_m`.
    #[arg(long)]
    pub m: Option<u32>,
    /// Action `x ↦ x^d` in `C_p ⋊ C_m`.
    #[arg(long)]
    pub d: Option<u32>,
    /// Group order, for the cyclic and dihedral families.
    #[arg(long, visible_alias = "n")]
    pub order: Option<usize>,
    /// Cyclic factor orders for the product family, e.g. `4,2`.
    #[arg(long, value_delimiter = ',')]
    pub factors: Vec<usize>,
    #[arg(short = 'o', long = "output")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Where to write the report (standard output if absent).
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub report: ReportArgs,
}

#[derive(Debug, Args)]
pub struct LieArgs {
    #[arg(required_unless_present = "input_witt", conflicts_with = "input_witt")]
    pub input: Option<PathBuf>,
    /// `n,p`: test `W(n;1)` over GF(p) instead of an algebra file.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    pub input_witt: Option<Vec<u32>>,
    #[command(flatten)]
    pub report: ReportArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated suite names, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
    pub p: Vec<u32>,
    /// Comma-separated families (default: all).
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<String>,
    /// Record per-check wall-clock timings (reports are then not reproducible).
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub report: ReportArgs,
}

pub fn parse_suites(s: &str) -> Result<Vec<SuiteId>, CliError> {
    if s.trim() == "all" {
        return Ok(SuiteId::ALL.to_vec());
    }
    s.split(',').map(|x| x.trim().parse::<SuiteId>().map_err(usage)).collect()
}

fn group_spec(args: &ConstructArgs) -> Result<GroupSpec, CliError> {
    let need = |name: &str| CliError::Usage(format!("--family {:?} needs --{name}", args.family));
    let spec = match args.family {
        FamilyArg::Cyclic => GroupSpec::Cyclic { n: args.order.ok_or_else(|| need("order"))? },
        FamilyArg::ElemAbelian => GroupSpec::ElemAbelian { p: args.p, n: args.rank.ok_or_else(|| need("rank"))? },
        FamilyArg::Dihedral => GroupSpec::Dihedral { order: args.order.ok_or_else(|| need("order"))? },
        FamilyArg::Quaternion => GroupSpec::Quaternion8,
        FamilyArg::Semidirect => GroupSpec::SemidirectCpCm {
            p: args.p,
            m: args.m.ok_or_else(|| need("m"))?,
            d: args.d.ok_or_else(|| need("d"))?,
        },
        FamilyArg::Extraspecial => GroupSpec::ExtraspecialP3ExponentP { p: args.p },
        FamilyArg::Product => {
            if args.factors.len() < 2 {
                return Err(need("factors (at least two)"));
            }
            GroupSpec::DirectProduct { factors: args.factors.iter().map(|&n| GroupSpec::Cyclic { n }).collect() }
        }
    };
    spec.validate().map_err(usage)?;
    Ok(spec)
}

/// `k[G]/GF(p)` for group algebras, otherwise the file stem.
fn algebra_id(a: &AssocAlgebra, path: &Path) -> String {
    let p = a.field().p();
    match &a.meta().group {
        Some(g) => format!("k[{g}]/GF({p})"),
        None => format!("{}/GF({p})", path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()),
    }
}

fn load(path: &Path) -> Result<(AssocAlgebra, String), CliError> {
    let a = AlgebraFileV1::read(path)?.to_algebra()?;
    let id = algebra_id(&a, path);
    Ok((a, id))
}

fn construct(args: &ConstructArgs) -> Result<u8, CliError> {
    let field = PrimeField::new(args.p).map_err(usage)?;
    let spec = group_spec(args)?;
    let table = spec.build().map_err(usage)?;
    let a = hochlie::assoc::group_algebra(&table, field)?;
    AlgebraFileV1::from_algebra(&a).write(&args.output)?;
    let s = assoc_summary(&a)?;
    println!(
        "wrote {} (k[{spec}] over GF({})): dim {}, dim Z {}, dim J {}, local {}, symmetric {}, uniserial {}",
        args.output.display(),
        args.p,
        s.dim,
        s.center_dim,
        s.radical_dim,
        s.local,
        s.symmetric.is_symmetric(),
        s.uniserial
    );
    Ok(exit::OK)
}

fn analyze(args: &InputArgs) -> Result<u8, CliError> {
    let (a, id) = load(&args.input)?;
    let mut report = ReportFileV1::new("analyze", args.report.seed);
    let s = summarize(&a, &id, args.report.seed, false);
    if let Some(e) = &s.error {
        return Err(CliError::Compute(hochlie::Error::Internal(e.clone())));
    }
    if let Some(x) = &s.assoc {
        eprintln!(
            "{id}: dim {}, dim Z = {}, dim J = {}, blocks = {}, local {}, symmetric {}",
            x.dim,
            x.center_dim,
            x.radical_dim,
            x.blocks.map(|b| b.to_string()).unwrap_or_else(|| "n/a (not split)".into()),
            x.local,
            x.symmetric.is_symmetric()
        );
    }
    report.summaries.push(s);
    report.write(args.report.report.as_deref(), args.report.format == Format::Csv)?;
    Ok(exit::OK)
}

fn hh1_cmd(args: &InputArgs) -> Result<u8, CliError> {
    let (a, id) = load(&args.input)?;
    let h = hh1(&a)?;
    let mut report = ReportFileV1::new("hh1", args.report.seed);
    eprintln!("{id}: dim Der = {}, dim IDer = {}, dim HH¹ = {}", h.der.dim(), h.ider.dim(), h.dim());
    report.presentations.push(report::PresentationReport::new(&id, &h));
    report.summaries.push(summarize(&a, &id, args.report.seed, true));
    report.write(args.report.report.as_deref(), args.report.format == Format::Csv)?;
    Ok(exit::OK)
}

fn lie_cmd(args: &LieArgs) -> Result<u8, CliError> {
    let seed = args.report.seed;
    let mut report = ReportFileV1::new("lie", seed);
    let (id, l) = match (&args.input_witt, &args.input) {
        (Some(np), _) => {
            let [n, p] = np[..] else {
                return Err(CliError::Usage("--input-witt takes n,p".into()));
            };
            (format!("W({n};1)/GF({p})"), witt(n, p).map_err(usage)?)
        }
        (None, Some(path)) => {
            let (a, id) = load(path)?;
            let h = hh1(&a)?;
            report.summaries.push(summarize(&a, &id, seed, true));
            (format!("HH1({id})"), h.lie)
        }
        (None, None) => return Err(CliError::Usage("give an algebra file or --input-witt n,p".into())),
    };
    let v = is_simple(&l, seed);
    eprintln!(
        "{id}: dim {}, simple = {}",
        l.dim(),
        v.is_simple().map(|b| b.to_string()).unwrap_or_else(|| "inconclusive".into())
    );
    report.lie.push(report::LieReport::new(&id, &l, &v));
    report.write(args.report.report.as_deref(), args.report.format == Format::Csv)?;
    Ok(if v.is_simple().is_none() { exit::INCONCLUSIVE } else { exit::OK })
}

fn verify(args: &VerifyArgs) -> Result<u8, CliError> {
    let families = if args.families.is_empty() {
        Family::ALL.to_vec()
    } else {
        args.families.iter().map(|f| f.parse::<Family>().map_err(usage)).collect::<Result<_, _>>()?
    };
    let cfg = SuiteConfig {
        primes: args.p.clone(),
        families,
        max_group_order: args.max_order,
        rng_seed: args.report.seed,
        suites: parse_suites(&args.suite)?,
        timings: args.timings,
    };
    cfg.validate().map_err(usage)?;
    let r = run_suite(&cfg)?;
    let (pass, fail, inc) = (r.count(Status::Pass), r.count(Status::Fail), r.count(Status::Inconclusive));
    for rec in r.records.iter().filter(|x| x.status != Status::Pass) {
        eprintln!("{:?} {} {}: {} (expected {}, computed {})", rec.status, rec.suite, rec.algebra, rec.claim, rec.expected, rec.computed);
    }
    eprintln!("{} records: {pass} pass, {fail} fail, {inc} inconclusive", r.records.len());
    let report = ReportFileV1::from_suite(cfg.rng_seed, r);
    report.write(args.report.report.as_deref(), args.report.format == Format::Csv)?;
    Ok(if fail > 0 {
        exit::FAIL
    } else if inc > 0 {
        exit::INCONCLUSIVE
    } else {
        exit::OK
    })
}

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Analyze(a) => analyze(a),
        Command::Hh1(a) => hh1_cmd(a),
        Command::Lie(a) => lie_cmd(a),
        Command::Verify(a) => verify(a),
    }
}

/// Entry point shared by the binary: parses arguments, runs, and maps errors
/// onto exit codes.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
