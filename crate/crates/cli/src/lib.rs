//! `twasp`: encode CNF formulas as treewidth-aware normal programs, check
//! the encodings against brute-force oracles and report their structure.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cnf::{enumerate_models, parse_dimacs, CnfFormula};
use encoder::{augmented_td, emit_text, encode_clark, encode_r, encode_r_prime, solver_graph, GroundProgram};
use ordaug::{assign_edges, augment, Mode, OrderingAugmentedTd, DEFAULT_NODE_CAP};
use treedec::{emit_td, heuristic_td, make_nice, parse_td, validate_td, Heuristic, TreeDecomposition};

/// Environment variable holding the external solver command, e.g. `clingo -n 0`.
pub const SOLVER_ENV: &str = "TWASP_SOLVER";

/// Bad invocation or unreadable input; exits with status 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

#[derive(Debug, Parser)]
#[command(name = "twasp", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encode a formula with the ordering reduction.
    Encode {
        #[command(flatten)]
        opts: EncodeOpts,
        /// Write the program here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Annotate each rule with the formula that produced it.
        #[arg(long)]
        provenance: bool,
    },
    /// Encode a formula with the Clark-style tight baseline.
    Baseline {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare answer-set and model counts.
    Verify {
        #[command(flatten)]
        opts: EncodeOpts,
    },
    /// Print the structural report as JSON.
    Analyze {
        #[command(flatten)]
        opts: EncodeOpts,
        /// Emit one CSV row with a header instead of JSON.
        #[arg(long)]
        csv: bool,
        /// Record wall time, which makes the output non-reproducible.
        #[arg(long)]
        timing: bool,
    },
    /// Tree decomposition utilities.
    Td {
        #[command(subcommand)]
        action: TdAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum TdAction {
    /// Heuristic decomposition of a formula's primal graph.
    Compute {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = HeuristicArg::MinDegree)]
        heuristic: HeuristicArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a decomposition against a formula's primal graph.
    Check { input: PathBuf, td: PathBuf },
    /// Rewrite a decomposition into nice form.
    Nicify {
        td: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    R,
    Rprime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeuristicArg {
    MinDegree,
    MinFill,
}

impl From<HeuristicArg> for Heuristic {
    fn from(h: HeuristicArg) -> Self {
        match h {
            HeuristicArg::MinDegree => Heuristic::MinDegree,
            HeuristicArg::MinFill => Heuristic::MinFill,
        }
    }
}

#[derive(Debug, Args)]
pub struct EncodeOpts {
    /// DIMACS CNF input.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::R)]
    pub mode: ModeArg,
    /// Block size for `rprime`, at least 2.
    #[arg(long)]
    pub iota: Option<usize>,
    /// Use this PACE decomposition instead of a heuristic one.
    #[arg(long, conflicts_with = "heuristic")]
    pub td: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub heuristic: Option<HeuristicArg>,
    /// Refuse decompositions that would need more augmented nodes.
    #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
    pub node_cap: u128,
}

impl EncodeOpts {
    fn mode(&self) -> Result<Mode> {
        match (self.mode, self.iota) {
            (ModeArg::R, None) => Ok(Mode::R),
            (ModeArg::R, Some(_)) => Err(Usage("--iota only applies to --mode rprime".into()).into()),
            (ModeArg::Rprime, None) => Err(Usage("--mode rprime needs --iota".into()).into()),
            (ModeArg::Rprime, Some(i)) if i < 2 => Err(Usage(format!("--iota must be at least 2, got {i}")).into()),
            (ModeArg::Rprime, Some(iota)) => Ok(Mode::RPrime { iota }),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())).into())
}

fn read_cnf(path: &Path) -> Result<CnfFormula> {
    parse_dimacs(&read(path)?).map_err(|e| Usage(format!("{}: {e}", path.display())).into())
}

fn read_td(path: &Path) -> Result<TreeDecomposition> {
    parse_td(&read(path)?).map_err(|e| Usage(format!("{}: {e}", path.display())).into())
}

fn write_out(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => stdout.write_all(text.as_bytes()).context("cannot write to standard output"),
    }
}

/// Formula, augmented decomposition and program for the shared options.
struct Pipeline {
    f: CnfFormula,
    atd: OrderingAugmentedTd,
    gp: GroundProgram,
}

fn pipeline(opts: &EncodeOpts) -> Result<Pipeline> {
    let mode = opts.mode()?;
    let f = read_cnf(&opts.input)?;
    let atd = match &opts.td {
        Some(path) => {
            let td = read_td(path)?;
            validate_td(&solver_graph(&f), &td).with_context(|| format!("{} does not fit the formula", path.display()))?;
            assign_edges(augment(&make_nice(&td), mode, opts.node_cap)?)
        }
        None => {
            let h = opts.heuristic.unwrap_or(HeuristicArg::MinDegree).into();
            augmented_td(&f, h, mode, opts.node_cap)?
        }
    };
    let gp = match mode {
        Mode::R => encode_r(&f, &atd)?,
        Mode::RPrime { iota } => encode_r_prime(&f, &atd, iota)?,
    };
    Ok(Pipeline { f, atd, gp })
}

fn summary(p: &Pipeline) -> String {
    format!(
        "atoms={} rules={} nodes={} groups={} k={} k'={}",
        p.gp.atoms().len(),
        p.gp.len(),
        p.atd.len(),
        p.atd.groups().len(),
        p.atd.td().width(),
        p.atd.groups().iter().map(|g| g.len()).max().unwrap_or(0)
    )
}

fn verify(p: &Pipeline, stdout: &mut dyn Write) -> Result<ExitCode> {
    let models = enumerate_models(&p.f)?;
    let sets = oracle::enumerate_structured(&p.gp, &p.atd)?;
    let mut line = format!("models={} answer_sets={}", models.len(), sets.len());
    let mut ok = models.len() == sets.len();

    let mut decoded = HashSet::new();
    for m in &sets {
        let checks = oracle::check_decidability(m, &p.gp, &p.atd)
            .and_then(|_| oracle::check_compatibility(m, &p.gp, &p.atd))
            .and_then(|_| oracle::decode(m, &p.gp, &p.atd));
        match checks {
            Ok(a) if !decoded.insert(a.to_string()) => {
                line.push_str(" duplicate_decode");
                ok = false;
            }
            Ok(_) => {}
            Err(e) => {
                writeln!(stdout, "answer set rejected: {e}")?;
                ok = false;
            }
        }
    }
    if let Ok(cmd) = std::env::var(SOLVER_ENV) {
        match oracle::external_count(&emit_text(&p.gp, false), &cmd)? {
            Some(n) => {
                line.push_str(&format!(" solver={n}"));
                ok &= n as usize == sets.len();
            }
            None => line.push_str(" solver=unavailable"),
        }
    }
    line.push_str(if ok { " OK" } else { " MISMATCH" });
    writeln!(stdout, "{line}")?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Largest vertex in any bag, used as the PACE vertex count.
fn max_vertex(td: &TreeDecomposition) -> u32 {
    td.bags().iter().flat_map(BTreeSet::iter).copied().max().unwrap_or(0)
}

/// Runs one invocation, writing results to `stdout`. Errors wrapping
/// [`Usage`] map to exit status 2, all others to 1.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<ExitCode> {
    match &cli.command {
        Command::Encode { opts, out, provenance } => {
            let p = pipeline(opts)?;
            write_out(out.as_deref(), &emit_text(&p.gp, *provenance), stdout)?;
            if out.is_some() {
                writeln!(stdout, "{}", summary(&p))?;
            } else {
                eprintln!("{}", summary(&p));
            }
        }
        Command::Baseline { input, out } => {
            let f = read_cnf(input)?;
            write_out(out.as_deref(), &emit_text(&encode_clark(&f), false), stdout)?;
        }
        Command::Verify { opts } => return verify(&pipeline(opts)?, stdout),
        Command::Analyze { opts, csv, timing } => {
            let p = pipeline(opts)?;
            let report = analyze::metrics(&p.f, &p.atd, &p.gp, *timing)?;
            let text = if *csv { report.to_csv(true)? } else { report.to_json() + "\n" };
            stdout.write_all(text.as_bytes())?;
        }
        Command::Td { action } => match action {
            TdAction::Compute { input, heuristic, out } => {
                let f = read_cnf(input)?;
                let td = heuristic_td(&solver_graph(&f), (*heuristic).into());
                write_out(out.as_deref(), &emit_td(&td, f.num_vars()), stdout)?;
            }
            TdAction::Check { input, td } => {
                let f = read_cnf(input)?;
                let t = read_td(td)?;
                if let Err(v) = validate_td(&solver_graph(&f), &t) {
                    writeln!(stdout, "invalid: {v}")?;
                    return Ok(ExitCode::from(1));
                }
                writeln!(stdout, "valid width={}", t.width())?;
            }
            TdAction::Nicify { td, out } => {
                let t = read_td(td)?;
                let nice = make_nice(&t);
                write_out(out.as_deref(), &emit_td(nice.td(), max_vertex(&t)), stdout)?;
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}
