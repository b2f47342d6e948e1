use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use log::debug;
use num_rational::BigRational;
use serde::Serialize;

use conelab::catalog::{Catalog, CatalogEntry};
use conelab::cone::{LevelSet, RationalCone};
use conelab::format::{
    format_integer_list, parse_integer_list, sha256_hex, to_toml, ConeFile, MatrixFile,
};
use conelab::lattice::{presentation_from_relations, smith_normal_form};
use conelab::linalg::{parse_rational, RationalVector};
use conelab::repro::{entry_suite, run_all, CriterionResult, DEFAULT_SEED};
use conelab::check::{run_check, CheckId, CheckOptions};
use conelab::theorems::{Verdict, DEFAULT_BOUND, DEFAULT_HORIZON};
use conelab::{Error, Result};

/// Exact class-group and cone computations with finite-data validators.
#[derive(Parser, Debug)]
#[command(name = "conelab", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith normal form or cokernel of an integer relation matrix.
    Group {
        #[arg(value_enum)]
        op: GroupOp,
        file: PathBuf,
    },
    /// Queries on a cone given by generators.
    Cone {
        #[arg(value_enum)]
        op: ConeOp,
        file: PathBuf,
        /// Point for `contains`, e.g. "[2, 1]".
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Coordinate fixed by `slice`.
        #[arg(long, default_value_t = 0)]
        coord: usize,
        /// Level of the `slice` hyperplane.
        #[arg(long, default_value = "1")]
        level: String,
    },
    /// Runs a validator on a catalog entry or an entry file.
    Check(CheckArgs),
    /// Reruns the acceptance criteria, or one entry's suite.
    Repro {
        /// `all` or an entry name.
        #[arg(default_value = "all")]
        target: String,
    },
    /// Lists catalog entries.
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupOp {
    Snf,
    Present,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConeOp {
    Facets,
    Contains,
    Lineality,
    Slice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    T1,
    T3,
    T11,
    P16,
    P44,
    Sym,
    Line,
    Chi,
    Stream,
}

#[derive(clap::Args, Debug)]
struct CheckArgs {
    #[arg(value_enum)]
    theorem: CheckArg,
    /// Catalog entry name or path to an entry file.
    target: String,
    /// Rank of the slice (t1, stream).
    #[arg(long)]
    rank: Option<u64>,
    /// Scan length for t11, p44 and stream.
    #[arg(long, default_value_t = DEFAULT_HORIZON)]
    horizon: u64,
    /// Divergence radius for stream.
    #[arg(long, default_value_t = DEFAULT_BOUND.to_string())]
    bound: String,
    /// Replaces the declared MCM indices of the selected line, e.g. "0,2".
    #[arg(long, allow_hyphen_values = true)]
    declared_mcm: Option<String>,
    /// Selects a line, stream, scenario, Betti record or chi functional.
    #[arg(long)]
    item: Option<String>,
}

/// Provenance block written at the top of structured reports. The input
/// argument is recorded as `<input>` and its text is embedded, so replaying
/// the arguments on the embedded text reproduces the report.
#[derive(Serialize)]
struct RunInfo {
    command: String,
    args: Vec<String>,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_sha256: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<String>,
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    run: RunInfo,
    result: T,
}

struct Input {
    name: String,
    text: String,
}

/// Rendered output plus exit status.
struct Outcome {
    text: String,
    structured: String,
    code: u8,
}

/// Inputs read from files are named by file name only, so a report does not
/// depend on the directory it was produced in.
fn file_input(path: &Path) -> Result<Input> {
    Ok(Input {
        name: path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned()),
        text: read_file(path)?,
    })
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn run_info(cli: &Cli, input: Option<&Input>) -> RunInfo {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let (command, input_arg) = match &cli.command {
        Command::Group { op, file } => (format!("group {op:?}").to_lowercase(), Some(file.display().to_string())),
        Command::Cone { op, file, .. } => (format!("cone {op:?}").to_lowercase(), Some(file.display().to_string())),
        Command::Check(a) => (format!("check {}", CheckId::from(a.theorem)), Some(a.target.clone())),
        Command::Repro { target } => ("repro".into(), Some(target.clone())),
        Command::List => ("list".into(), None),
    };
    // The output format does not change the result, so it is left out.
    let mut args = Vec::with_capacity(argv.len());
    let mut iter = argv.into_iter();
    while let Some(a) = iter.next() {
        if a == "--format" {
            iter.next();
            continue;
        }
        if a.starts_with("--format=") {
            continue;
        }
        if input.is_some() && Some(&a) == input_arg.as_ref() {
            args.push("<input>".to_string());
        } else {
            args.push(a);
        }
    }
    RunInfo {
        command,
        args,
        seed: cli.seed,
        input_name: input.map(|i| i.name.clone()),
        input_sha256: input.map(|i| sha256_hex(i.text.as_bytes())),
        input: input.map(|i| i.text.clone()),
    }
}

fn envelope<T: Serialize>(cli: &Cli, input: Option<&Input>, result: T) -> Result<String> {
    to_toml(&Envelope {
        run: run_info(cli, input),
        result,
    })
}

/// Ordered key/value rows for the simple commands.
#[derive(Serialize)]
struct Fields(toml::Table);

fn fields_outcome(cli: &Cli, input: &Input, rows: Vec<(&str, String)>) -> Result<Outcome> {
    let mut text = String::new();
    let mut table = toml::Table::new();
    for (k, v) in rows {
        text.push_str(&format!("{k}: {v}\n"));
        table.insert(k.to_string(), toml::Value::String(v));
    }
    Ok(Outcome {
        structured: envelope(cli, Some(input), Fields(table))?,
        text,
        code: 0,
    })
}

fn cmd_group(cli: &Cli, op: GroupOp, file: &Path) -> Result<Outcome> {
    let input = file_input(file)?;
    let (generators, m) = MatrixFile::parse(&input.text)?;
    let group = presentation_from_relations(generators, &m)?;
    let rows = match op {
        GroupOp::Snf => {
            let s = smith_normal_form(&m);
            vec![
                ("d", s.d.to_string()),
                ("u", s.u.to_string()),
                ("v", s.v.to_string()),
                ("invariant_factors", format_integer_list(s.invariant_factors())),
                ("rank", s.rank().to_string()),
                ("cokernel", group.summary()),
            ]
        }
        GroupOp::Present => vec![
            ("cokernel", group.summary()),
            ("free_rank", group.free_rank.to_string()),
            ("torsion_orders", format_integer_list(&group.torsion_orders)),
        ],
    };
    fields_outcome(cli, &input, rows)
}

fn vectors(vs: &[RationalVector]) -> String {
    format_integer_list(vs)
}

fn cmd_cone(cli: &Cli, op: ConeOp, file: &Path, point: Option<&str>, coord: usize, level: &str) -> Result<Outcome> {
    let input = file_input(file)?;
    let (dim, gens) = ConeFile::parse(&input.text)?;
    let cone = RationalCone::new(dim, gens)?;
    let rows = match op {
        ConeOp::Facets => {
            let f = cone.facets();
            vec![
                ("dimension", cone.dimension().to_string()),
                ("normals", vectors(&f.normals)),
                ("equations", vectors(&f.equations)),
            ]
        }
        ConeOp::Contains => {
            let point = point.ok_or_else(|| Error::InvalidArgument("contains needs --point".into()))?;
            let x: RationalVector = point.parse()?;
            vec![
                ("point", x.to_string()),
                ("contains", cone.contains(&x)?.to_string()),
                ("interior", cone.interior_contains(&x)?.to_string()),
            ]
        }
        ConeOp::Lineality => vec![
            ("lineality", vectors(&cone.lineality_space())),
            ("strongly_convex", cone.is_strongly_convex().to_string()),
        ],
        ConeOp::Slice => {
            let level: BigRational = parse_rational(level)?;
            match cone.level_set(coord, &level)? {
                LevelSet::Bounded { vertices, diameter_sq } => vec![
                    ("bounded", "true".into()),
                    ("vertices", vectors(&vertices)),
                    ("diameter_sq", conelab::linalg::format_rational(&diameter_sq)),
                ],
                LevelSet::Unbounded { direction } => {
                    vec![("bounded", "false".into()), ("direction", direction.to_string())]
                }
            }
        }
    };
    fields_outcome(cli, &input, rows)
}

fn load_target(target: &str) -> Result<(CatalogEntry, Input)> {
    let path = Path::new(target);
    if path.is_file() {
        let text = read_file(path)?;
        let entry = CatalogEntry::parse(&text).map_err(|e| match e {
            Error::Parse { line, message } => Error::Parse {
                line,
                message: format!("{target}: {message}"),
            },
            other => other,
        })?;
        let name = entry.name.clone();
        return Ok((entry, Input { name, text }));
    }
    let catalog = Catalog::from_env()?;
    let loaded = catalog.loaded(target)?;
    debug!("loaded {} from {}", target, loaded.origin);
    Ok((
        loaded.entry.clone(),
        Input {
            name: loaded.entry.name.clone(),
            text: loaded.source.clone(),
        },
    ))
}

impl From<CheckArg> for CheckId {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::T1 => CheckId::T1,
            CheckArg::T3 => CheckId::T3,
            CheckArg::T11 => CheckId::T11,
            CheckArg::P16 => CheckId::P16,
            CheckArg::P44 => CheckId::P44,
            CheckArg::Sym => CheckId::Sym,
            CheckArg::Line => CheckId::Line,
            CheckArg::Chi => CheckId::Chi,
            CheckArg::Stream => CheckId::Stream,
        }
    }
}

fn cmd_check(cli: &Cli, args: &CheckArgs) -> Result<Outcome> {
    let (entry, input) = load_target(&args.target)?;
    let opts = CheckOptions {
        rank: args.rank,
        horizon: args.horizon,
        bound: parse_rational(&args.bound)?,
        declared_mcm: args.declared_mcm.as_deref().map(parse_integer_list).transpose()?,
        item: args.item.clone(),
    };
    let report = run_check(&entry, args.theorem.into(), &opts)?;
    Ok(Outcome {
        text: report.render_text(),
        structured: envelope(cli, Some(&input), &report)?,
        code: exit_code(report.verdict),
    })
}

fn exit_code(v: Verdict) -> u8 {
    u8::try_from(v.exit_code()).unwrap_or(1)
}

#[derive(Serialize)]
struct ReproRecord {
    id: String,
    title: String,
    passed: bool,
    detail: String,
}

impl From<&CriterionResult> for ReproRecord {
    fn from(r: &CriterionResult) -> Self {
        ReproRecord {
            id: r.id.clone(),
            title: r.title.clone(),
            passed: r.passed,
            detail: r.detail.clone(),
        }
    }
}

#[derive(Serialize)]
struct ReproSummary {
    passed: usize,
    failed: usize,
    results: Vec<ReproRecord>,
}

fn cmd_repro(cli: &Cli, target: &str) -> Result<Outcome> {
    let catalog = Catalog::from_env()?;
    let results: Vec<CriterionResult> = if target == "all" {
        let mut all = run_all(cli.seed, &catalog);
        for entry in catalog.iter() {
            all.extend(entry_suite(entry));
        }
        all
    } else {
        entry_suite(catalog.get(target)?)
    };
    let failed = results.iter().filter(|r| !r.passed).count();
    let mut text = format!("seed: {}\n", cli.seed);
    for r in &results {
        text.push_str(&format!("{r}\n"));
    }
    text.push_str(&format!("{} passed, {failed} failed\n", results.len() - failed));
    let summary = ReproSummary {
        passed: results.len() - failed,
        failed,
        results: results.iter().map(ReproRecord::from).collect(),
    };
    Ok(Outcome {
        text,
        structured: envelope(cli, None, summary)?,
        code: u8::from(failed > 0),
    })
}

fn cmd_list(cli: &Cli) -> Result<Outcome> {
    let catalog = Catalog::from_env()?;
    let mut table = toml::Table::new();
    let mut text = String::new();
    for name in catalog.names() {
        let loaded = catalog.loaded(&name)?;
        text.push_str(&format!("{name}  ({})\n", loaded.entry.citation));
        table.insert(name.clone(), toml::Value::String(loaded.origin.clone()));
    }
    Ok(Outcome {
        text,
        structured: envelope(cli, None, Fields(table))?,
        code: 0,
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Group { op, file } => cmd_group(cli, *op, file),
        Command::Cone {
            op,
            file,
            point,
            coord,
            level,
        } => cmd_cone(cli, *op, file, point.as_deref(), *coord, level),
        Command::Check(args) => cmd_check(cli, args),
        Command::Repro { target } => cmd_repro(cli, target),
        Command::List => cmd_list(cli),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            match cli.format {
                OutputFormat::Text => print!("{}", out.text),
                OutputFormat::Structured => print!("{}", out.structured),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
