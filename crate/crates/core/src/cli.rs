//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijection::{from_sequence, valid_sequences};
use crate::error::Error;
use crate::genfunc::{gf_from_transfer, paper_gf};
use crate::graphs::{build_graph, EdgeInterpretation, Family, FamilySpec};
use crate::json::{serialize_big, BigSeq};
use crate::oracle;
use crate::transfer::{count, count_series, BigCount};
use crate::verify::paper_checks;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "indset", version, about = "Independent-set counts for layered line-graph families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    G,
    R,
    K,
    P,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::G => Family::G,
            FamilyArg::R => Family::R,
            FamilyArg::K => Family::K,
            FamilyArg::P => Family::P,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InterpArg {
    Literal,
    Algorithm,
}

impl From<InterpArg> for EdgeInterpretation {
    fn from(i: InterpArg) -> EdgeInterpretation {
        match i {
            InterpArg::Literal => EdgeInterpretation::Literal,
            InterpArg::Algorithm => EdgeInterpretation::AlgorithmConsistent,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GfSource {
    Transfer,
    Published,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
}

#[derive(Debug, Args)]
struct Instance {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    ell: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of independent sets of one instance.
    Count {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Counts for n = 0..=n-max.
    Series {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Rational generating function of a family.
    Gf {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value = "transfer")]
        source: GfSource,
        #[arg(long)]
        json: bool,
    },
    /// Re-derive every published sequence and generating function.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
    /// Compare brute-force counts on explicit graphs with transfer counts.
    ///
    /// Without --family/--ell/--n, sweeps all families, ell in {3,4}, n in 1..=3.
    OracleCheck {
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "literal")]
        interpretation: InterpArg,
        #[arg(long)]
        json: bool,
    },
    /// List odd-neighbor sequences with their independent sets in P_4^n.
    Bijection {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write an explicit graph.
    ExportGraph {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "literal")]
        interpretation: InterpArg,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct CountRecord<'a> {
    family: Family,
    ell: usize,
    n: usize,
    #[serde(serialize_with = "serialize_big")]
    value: &'a BigCount,
}

#[derive(Serialize)]
struct BijectionRecord<'a> {
    sequence: BigSeq<'a, u32>,
    set: String,
    levels: String,
}

enum Failure {
    Usage(String),
    Verification,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Count { instance, n, json } => {
            let spec = FamilySpec::new(instance.family.into(), instance.ell, n)?;
            let value = count(&spec)?;
            if json {
                print_json(
                    out,
                    &CountRecord {
                        family: spec.family,
                        ell: spec.ell,
                        n,
                        value: &value,
                    },
                )?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Series {
            instance,
            n_max,
            json,
        } => {
            let family = instance.family.into();
            let values = count_series(family, instance.ell, n_max)?;
            if json {
                let records: Vec<CountRecord> = values
                    .iter()
                    .enumerate()
                    .map(|(n, value)| CountRecord {
                        family,
                        ell: instance.ell,
                        n,
                        value,
                    })
                    .collect();
                print_json(out, &records)?;
            } else {
                for v in &values {
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Gf {
            instance,
            source,
            json,
        } => {
            let family = instance.family.into();
            let gf = match source {
                GfSource::Transfer => gf_from_transfer(family, instance.ell)?,
                GfSource::Published => paper_gf(family, instance.ell)?,
            };
            if json {
                print_json(out, &gf)?;
            } else {
                writeln!(out, "{gf}")?;
            }
        }
        Command::VerifyPaper { json } => {
            let checks = paper_checks();
            if json {
                print_json(out, &checks)?;
            } else {
                for c in &checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    if c.detail.is_empty() {
                        writeln!(out, "{status}  {}", c.name)?;
                    } else {
                        writeln!(out, "{status}  {}  [{}]", c.name, c.detail)?;
                    }
                }
                let passed = checks.iter().filter(|c| c.passed).count();
                writeln!(out, "{passed}/{} checks passed", checks.len())?;
            }
            if checks.iter().any(|c| !c.passed) {
                return Err(Failure::Verification);
            }
        }
        Command::OracleCheck {
            family,
            ell,
            n,
            interpretation,
            json,
        } => {
            let families: Vec<Family> = match family {
                Some(f) => vec![f.into()],
                None => Family::ALL.to_vec(),
            };
            let ells = ell.map_or(vec![3, 4], |e| vec![e]);
            let ns = n.map_or(vec![1, 2, 3], |n| vec![n]);
            let reports = oracle::sweep(&families, &ells, &ns, interpretation.into())?;
            if json {
                print_json(out, &reports)?;
            } else {
                for r in &reports {
                    writeln!(
                        out,
                        "{} {}  oracle={} transfer={} {}",
                        r.spec(),
                        r.interpretation,
                        r.oracle_count,
                        r.transfer_count,
                        if r.agree { "agree" } else { "DIFFER" }
                    )?;
                }
            }
        }
        Command::Bijection { n, json } => {
            let seqs = valid_sequences(n)?;
            let mut records = Vec::with_capacity(seqs.len());
            for s in &seqs {
                let sel = from_sequence(s, n)?;
                records.push((s, sel));
            }
            if json {
                let rows: Vec<BijectionRecord> = records
                    .iter()
                    .map(|(s, sel)| BijectionRecord {
                        sequence: BigSeq(s.members()),
                        set: sel.to_string(),
                        levels: sel.tuple(),
                    })
                    .collect();
                print_json(out, &rows)?;
            } else {
                for (s, sel) in &records {
                    writeln!(out, "{s}\t{}\t{sel}", sel.tuple())?;
                }
            }
        }
        Command::ExportGraph {
            instance,
            n,
            interpretation,
            format: GraphFormat::Dot,
            out: path,
        } => {
            let spec = FamilySpec::new(instance.family.into(), instance.ell, n)?;
            let graph = build_graph(&spec, interpretation.into())?;
            let name = format!("{}_{}_{}", spec.family, spec.ell, spec.n);
            let dot = graph.to_dot(&name);
            match path {
                Some(p) => fs::write(p, dot)?,
                None => out.write_all(dot.as_bytes())?,
            }
        }
    }
    Ok(())
}
