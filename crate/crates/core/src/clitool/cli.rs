//! Argument parsing and command dispatch. [`run`] takes its streams as
//! parameters so tests can drive it in-process.

use std::ffi::OsString;
use std::io::Write;
use std::ops::Range;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use super::dot::lattice_dot;
use super::fixture::{load_fixture, parse_submodule, FixtureError};
use super::report::{battery_text, demo_text, fuzz_text, lattice_text, predicate_text};
use crate::algmod::catalog::{mod_es, Fixture, FixtureModule};
use crate::battery::{
    demo_remark, fuzz, fuzz_rings, run_battery, BatteryMeta, FuzzConfig, FUZZ_STEPS,
};
use crate::homlab::{trace, DEFAULT_SCAN_BUDGET};
use crate::latt::{cover_relation, DEFAULT_LATTICE_CAP};
use crate::preds::Analysis;
use crate::{prodann, Budget};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "modgoldie",
    version,
    about = "Submodule products, annihilators and Goldie-type predicates for finite modules"
)]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Largest submodule lattice to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    lattice_cap: usize,
    /// Largest hom space to scan element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_BUDGET)]
    scan_limit: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a fixture file.
    Validate { file: PathBuf },
    /// Every predicate for the fixture's modules, with witnesses.
    Inspect {
        file: PathBuf,
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// The submodule lattice in canonical order, with its cover relation.
    Lattice {
        file: PathBuf,
        #[arg(long)]
        module: String,
        /// Only the fully invariant submodules.
        #[arg(long)]
        fi: bool,
        /// Also write a DOT diagram to PATH (`-` for stdout).
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// One submodule operation. Submodules are aliases, `0`, `M`, or rows like `[[1,0,0]]`.
    Op {
        #[arg(value_enum)]
        op: OpKind,
        file: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long, num_args = 1.., allow_hyphen_values = true, required = true)]
        args: Vec<String>,
    },
    /// Run every theorem check on the fixture's modules.
    Battery {
        file: PathBuf,
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the battery on seeded random modules.
    Fuzz {
        /// Ring names, comma or space separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        rings: Vec<String>,
        /// Seed range `A..B`, run for every ring.
        #[arg(long, value_parser = parse_seeds, default_value = "0..125")]
        seeds: Range<u64>,
        #[arg(long, default_value_t = FUZZ_STEPS)]
        steps: usize,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the worked example on `mod-es`.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
        /// Run on a module from this fixture instead of the built-in copy.
        #[arg(long, requires = "module")]
        fixture: Option<PathBuf>,
        #[arg(long, requires = "fixture")]
        module: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpKind {
    Product,
    Ann,
    Power,
    Trace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DemoName {
    RemarkAa,
}

fn parse_seeds(s: &str) -> Result<Range<u64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: u64 = a
        .trim()
        .parse()
        .map_err(|e| format!("bad start `{a}`: {e}"))?;
    let b: u64 = b
        .trim()
        .parse()
        .map_err(|e| format!("bad end `{b}`: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..b)
}

/// An input problem: bad file, bad argument, or a cap that stops the command.
#[derive(Debug)]
struct InputError(String);

impl From<FixtureError> for InputError {
    fn from(e: FixtureError) -> Self {
        InputError(e.to_string())
    }
}

impl From<crate::Error> for InputError {
    fn from(e: crate::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError(format!("serialization error: {e}"))
    }
}

type CmdResult = Result<i32, InputError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let budget = Budget {
        lattice_cap: cli.budget.lattice_cap,
        scan_limit: cli.budget.scan_limit,
    };
    match dispatch(cli.command, budget, out, err) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn dispatch(
    command: Command,
    budget: Budget,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    match command {
        Command::Validate { file } => validate(&file, out),
        Command::Inspect { file, module, json } => {
            inspect(&file, module.as_deref(), json, budget, out)
        }
        Command::Lattice {
            file,
            module,
            fi,
            dot,
            json,
        } => lattice(&file, &module, fi, dot.as_deref(), json, budget, out),
        Command::Op {
            op,
            file,
            module,
            args,
        } => op_command(op, &file, &module, &args, out),
        Command::Battery { file, module, json } => {
            battery(&file, module.as_deref(), json, budget, out)
        }
        Command::Fuzz {
            rings,
            seeds,
            steps,
            json,
        } => fuzz_command(rings, seeds, steps, json, budget, out, err),
        Command::Demo {
            name: DemoName::RemarkAa,
            fixture,
            module,
            json,
        } => demo(fixture.as_deref(), module.as_deref(), json, out),
    }
}

fn pick<'f>(fixture: &'f Fixture, name: &str) -> Result<&'f FixtureModule, InputError> {
    fixture.module(name).ok_or_else(|| {
        let names: Vec<&str> = fixture.modules.iter().map(|m| m.module.name()).collect();
        InputError(format!(
            "no module `{name}` in the fixture (have: {})",
            names.join(", ")
        ))
    })
}

fn selected<'f>(
    fixture: &'f Fixture,
    name: Option<&str>,
) -> Result<Vec<&'f FixtureModule>, InputError> {
    match name {
        Some(n) => Ok(vec![pick(fixture, n)?]),
        None => Ok(fixture.modules.iter().collect()),
    }
}

fn validate(file: &Path, out: &mut dyn Write) -> CmdResult {
    let fx = load_fixture(file)?;
    let names: Vec<&str> = fx.modules.iter().map(|m| m.module.name()).collect();
    writeln!(
        out,
        "ok: {} (dim {} over F_{}), {} modules: {}",
        fx.ring.name(),
        fx.ring.dim(),
        fx.ring.prime().get(),
        names.len(),
        names.join(", ")
    )?;
    Ok(EXIT_OK)
}

fn inspect(
    file: &Path,
    module: Option<&str>,
    json: bool,
    budget: Budget,
    out: &mut dyn Write,
) -> CmdResult {
    let fx = load_fixture(file)?;
    let reports: Vec<_> = selected(&fx, module)?
        .into_iter()
        .map(|fm| Analysis::new(&fm.module, budget).report(fm.progenerator))
        .collect();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
    } else {
        let texts: Vec<String> = reports.iter().map(predicate_text).collect();
        write!(out, "{}", texts.join("\n"))?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct LatticeElement<'a> {
    index: usize,
    dim: usize,
    alias: Option<&'a str>,
    rows: Vec<Vec<u8>>,
}

#[derive(Serialize)]
struct LatticeJson<'a> {
    module: &'a str,
    fully_invariant: bool,
    elements: Vec<LatticeElement<'a>>,
    covers: Vec<(usize, usize)>,
}

fn lattice(
    file: &Path,
    module: &str,
    fi: bool,
    dot: Option<&Path>,
    json: bool,
    budget: Budget,
    out: &mut dyn Write,
) -> CmdResult {
    let fx = load_fixture(file)?;
    let fm = pick(&fx, module)?;
    let an = Analysis::new(&fm.module, budget);
    let elems = if fi { an.fi_lattice()? } else { an.lattice()? }.elements();
    if let Some(path) = dot {
        let text = lattice_dot(fm.module.name(), elems, |s| {
            fm.alias_of(s).map(str::to_string)
        });
        if path == Path::new("-") {
            write!(out, "{text}")?;
            return Ok(EXIT_OK);
        }
        std::fs::write(path, text)?;
    }
    if json {
        let doc = LatticeJson {
            module: fm.module.name(),
            fully_invariant: fi,
            elements: elems
                .iter()
                .enumerate()
                .map(|(index, s)| LatticeElement {
                    index,
                    dim: s.dim(),
                    alias: fm.alias_of(s),
                    rows: s.to_rows(),
                })
                .collect(),
            covers: cover_relation(elems),
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        write!(out, "{}", lattice_text(fm, elems, fi))?;
    }
    Ok(EXIT_OK)
}

fn op_command(
    op: OpKind,
    file: &Path,
    module: &str,
    args: &[String],
    out: &mut dyn Write,
) -> CmdResult {
    let fx = load_fixture(file)?;
    let fm = pick(&fx, module)?;
    let m = &fm.module;
    let want = |n: usize| -> Result<(), InputError> {
        if args.len() == n {
            Ok(())
        } else {
            Err(InputError(
                format!("{op:?} takes {n} arguments, got {}", args.len()).to_lowercase(),
            ))
        }
    };
    let result = match op {
        OpKind::Product => {
            want(2)?;
            prodann::product(
                m,
                &parse_submodule(fm, &args[0]).map_err(InputError)?,
                &parse_submodule(fm, &args[1]).map_err(InputError)?,
            )?
        }
        OpKind::Ann => {
            want(1)?;
            prodann::annihilator(m, &parse_submodule(fm, &args[0]).map_err(InputError)?)?
        }
        OpKind::Power => {
            want(2)?;
            let e: i64 = args[1]
                .parse()
                .map_err(|_| InputError(format!("bad exponent `{}`", args[1])))?;
            prodann::power(m, &parse_submodule(fm, &args[0]).map_err(InputError)?, e)?
        }
        OpKind::Trace => {
            want(1)?;
            trace(m, &parse_submodule(fm, &args[0]).map_err(InputError)?)?
        }
    };
    match fm.alias_of(&result) {
        Some(a) => writeln!(out, "{} = {a}", result.space())?,
        None => writeln!(out, "{}", result.space())?,
    }
    Ok(EXIT_OK)
}

fn battery(
    file: &Path,
    module: Option<&str>,
    json: bool,
    budget: Budget,
    out: &mut dyn Write,
) -> CmdResult {
    let fx = load_fixture(file)?;
    let reports: Vec<_> = selected(&fx, module)?
        .into_iter()
        .map(|fm| {
            run_battery(
                &fm.module,
                BatteryMeta {
                    progenerator: fm.progenerator,
                    budget,
                },
            )
        })
        .collect();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
    } else {
        let texts: Vec<String> = reports.iter().map(battery_text).collect();
        write!(out, "{}", texts.join("\n"))?;
    }
    Ok(if reports.iter().any(|r| r.has_failures()) {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    })
}

fn fuzz_command(
    rings: Vec<String>,
    seeds: Range<u64>,
    steps: usize,
    json: bool,
    budget: Budget,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let rings = if rings.is_empty() {
        fuzz_rings().into_iter().map(String::from).collect()
    } else {
        rings
    };
    let report = fuzz(&FuzzConfig {
        rings,
        seeds,
        budget,
        steps,
    })?;
    for w in &report.warnings {
        writeln!(err, "warning: {w}")?;
    }
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        write!(out, "{}", fuzz_text(&report))?;
    }
    Ok(if report.has_failures() {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    })
}

fn demo(
    fixture: Option<&Path>,
    module: Option<&str>,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let m = match (fixture, module) {
        (Some(f), Some(name)) => pick(&load_fixture(f)?, name)?.module.clone(),
        _ => mod_es(),
    };
    let report = demo_remark(&m)?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        write!(out, "{}", demo_text(&report))?;
    }
    Ok(if report.all_hold() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
