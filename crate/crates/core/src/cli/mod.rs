//! Command-line front end: instance files in, JSON reports out.
//!
//! Exit codes: `0` every verdict passes, `1` a verdict is negative or a
//! violation was found, `2` input or schema error, `3` budget exceeded.

pub mod commands;
pub mod schema;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::fincat::FinCategory;
use crate::fixtures::{self, RandomCaps};
use crate::groupkit::{library, FinGroup};
use crate::xmod::{conjugation_module, conjugation_module_delooping, CrossedModule, GroupCategory};
use commands::Options;
use schema::{InstanceFile, Report, Status, SCHEMA};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "xmodcat", version, about = "Crossed modules on finite categories and their 2-dimensional (co)limits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Cap on candidates visited by any single search.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT.0)]
    pub budget: u64,
    /// Seed for randomised generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated hom-count panel, e.g. `Z2,S3`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub panel: Vec<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct InstanceArg {
    /// Instance file (JSON, schema v1).
    pub instance: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Category axioms, crossed-module axioms and 2-category laws.
    Validate(InstanceArg),
    /// Isotropy groups and the comparison into them.
    Isotropy(InstanceArg),
    /// 2-cells between parallel 1-cells.
    TwoCells(InstanceArg),
    /// Two-dimensional property of a (co)limit of a diagram.
    #[command(name = "check-2d")]
    Check2d(InstanceArg),
    /// Search for a weighted (co)limit or a representation.
    Search(InstanceArg),
    /// Initial-object obstruction items.
    Obstructions(InstanceArg),
    /// Coinserter presentation of two maps of presented groups.
    Coinserter(InstanceArg),
    /// Coequifier presentation.
    Coequifier(InstanceArg),
    /// Coidentifier presentation.
    Coidentifier(InstanceArg),
    /// Tensor with a free group.
    TensorFree(InstanceArg),
    /// Check a construction by counting homomorphisms into the panel.
    VerifyHomcount(InstanceArg),
    /// Canonical 2-functor into a 2-subcategory of groups.
    ExtendFunctor(InstanceArg),
    /// Emit an instance file.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    /// Conjugation module on the delooping of a group.
    Delooping {
        /// Library name such as `Z2` or `S3`.
        #[arg(long, conflicts_with = "table")]
        group: Option<String>,
        /// Group as JSON `{"order":n,"table":[...]}`.
        #[arg(long)]
        table: Option<String>,
    },
    /// Trivial module on a poset; relations as `a<b`.
    Poset {
        #[arg(long)]
        objects: usize,
        #[arg(long, value_delimiter = ',')]
        relations: Vec<String>,
    },
    /// Conjugation module on the full subcategory of groups on a list.
    GroupsSubcategory {
        #[arg(long, value_delimiter = ',', required = true)]
        groups: Vec<String>,
    },
    /// Random valid crossed module (uses `--seed`).
    RandomXmod {
        #[arg(long, default_value_t = RandomCaps::default().max_objects)]
        max_objects: usize,
        #[arg(long, default_value_t = RandomCaps::default().max_order)]
        max_order: usize,
    },
    /// A bundled fixture.
    Named {
        #[arg(long)]
        name: String,
    },
}

impl Command {
    fn analysis(&self) -> Option<(&'static str, &Path)> {
        let (name, arg) = match self {
            Command::Validate(a) => ("validate", a),
            Command::Isotropy(a) => ("isotropy", a),
            Command::TwoCells(a) => ("two-cells", a),
            Command::Check2d(a) => ("check-2d", a),
            Command::Search(a) => ("search", a),
            Command::Obstructions(a) => ("obstructions", a),
            Command::Coinserter(a) => ("coinserter", a),
            Command::Coequifier(a) => ("coequifier", a),
            Command::Coidentifier(a) => ("coidentifier", a),
            Command::TensorFree(a) => ("tensor-free", a),
            Command::VerifyHomcount(a) => ("verify-homcount", a),
            Command::ExtendFunctor(a) => ("extend-functor", a),
            Command::Generate { .. } => return None,
        };
        Some((name, arg.instance.as_path()))
    }
}

/// Parses `args`, runs the command and returns the exit code. Reports go to
/// `out` (or `--report`), diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok((code, text)) => match emit(&cli, &text, out) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Entry point for the binary.
pub fn main_from_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn emit(cli: &Cli, text: &str, out: &mut dyn Write) -> Result<()> {
    match &cli.report {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn panel(names: &[String]) -> Result<Vec<(String, FinGroup)>> {
    if names.is_empty() || names == ["default"] {
        return Ok(library::default_panel());
    }
    names.iter().map(|n| Ok((n.clone(), library::by_name(n)?))).collect()
}

/// Runs the command; `Err` only for input errors.
fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    if let Command::Generate { kind } = &cli.command {
        return Ok((EXIT_PASS, generate(kind, cli.seed)?.to_json()));
    }
    let (name, path) = cli.command.analysis().expect("analysis command");
    let start = Instant::now();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let inst = InstanceFile::parse(&text)?;
    let opts = Options { budget: Budget(cli.budget), panel: panel(&cli.panel)? };
    let (status, summary, result) = match commands::execute(name, &inst, &opts) {
        Ok(o) => o,
        Err(Error::BudgetExceeded { what, bound, required }) => (
            Status::BudgetExceeded,
            format!("budget of {bound} exceeded in {what}"),
            json!({ "what": what, "bound": bound, "required": required }),
        ),
        Err(e) => return Err(e),
    };
    let timings = cli.timings.then(|| BTreeMap::from([("total_ms".to_string(), start.elapsed().as_secs_f64() * 1e3)]));
    let report = Report { schema: SCHEMA, command: name.to_string(), instance: inst.name.clone(), status, summary, result, timings };
    Ok((status.exit_code(), report.to_json()))
}

fn parse_relation(s: &str, n: usize) -> Result<(usize, usize)> {
    let bad = || Error::Schema(format!("relation {s:?} is not of the form a<b with a, b < {n}"));
    let (a, b) = s.split_once('<').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a >= n || b >= n {
        return Err(bad());
    }
    Ok((a, b))
}

/// Builds an instance of the requested kind.
pub fn generate(kind: &GenerateKind, seed: u64) -> Result<InstanceFile> {
    let (name, xm): (String, CrossedModule) = match kind {
        GenerateKind::Delooping { group, table } => {
            let (label, g) = match (group, table) {
                (Some(n), None) => (n.clone(), library::by_name(n)?),
                (None, Some(t)) => ("table".to_string(), serde_json::from_str::<FinGroup>(t)?),
                _ => return Err(Error::Schema("delooping needs exactly one of --group or --table".into())),
            };
            (format!("B{label}"), conjugation_module_delooping(&g))
        }
        GenerateKind::Poset { objects, relations } => {
            let rels = relations.iter().map(|r| parse_relation(r, *objects)).collect::<Result<Vec<_>>>()?;
            let label = if relations.is_empty() { String::new() } else { format!("-{}", relations.join(",")) };
            (format!("poset-{objects}{label}"), CrossedModule::trivial(FinCategory::poset(*objects, &rels)))
        }
        GenerateKind::GroupsSubcategory { groups } => {
            let named = groups.iter().map(|n| Ok((n.clone(), library::by_name(n)?))).collect::<Result<Vec<_>>>()?;
            let gc = GroupCategory::full_subcategory(named, Budget::DEFAULT)?;
            (format!("groups-{}", groups.join("-")), conjugation_module(&gc)?)
        }
        GenerateKind::RandomXmod { max_objects, max_order } => {
            let caps = RandomCaps { max_objects: *max_objects, max_order: *max_order };
            (format!("random-xmod-{seed}"), fixtures::random_xmod(seed, caps)?)
        }
        GenerateKind::Named { name } => (name.clone(), fixtures::by_name(name)?),
    };
    Ok(InstanceFile::with_module(name, &xm))
}
