use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use astz_core::arrays::{astz_stats, csspp_stats, Astz, Csspp};
use astz_core::bijection::{
    astz_to_partition, partition_to_astz, BijectionConfig, Reflection, Rotation,
};
use astz_core::enumeration::{
    enumerate_astz, enumerate_csspp, enumerate_partitions, EnumFilter, ScaleGuard,
};
use astz_core::repro::{mrq_pairs, obstruction, running_example};
use astz_core::verify::{verify_suite, Bounds, Status, Suite};
use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "astz",
    version,
    about = "Alternating sign trapezoids and one-row shifted plane partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream objects as JSON lines, sorted by their serialised form.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
    /// Map trapezoids (JSON lines) to partitions.
    Map {
        #[command(flatten)]
        cfg: ConfigArgs,
        /// Input file; stdin when omitted.
        input: Option<PathBuf>,
    },
    /// Map partitions (JSON lines) back to trapezoids.
    Unmap {
        #[command(flatten)]
        cfg: ConfigArgs,
        /// Number of rows of the target trapezoid.
        #[arg(long)]
        n: usize,
        input: Option<PathBuf>,
    },
    /// Run an exhaustive verification suite and print its report.
    Verify {
        #[arg(value_parser = PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        l_max: Option<usize>,
    },
    /// Recompute a worked example.
    Repro {
        #[arg(value_enum)]
        which: ReproWhich,
    },
    /// Pretty-print trapezoids or partitions given as JSON lines.
    Render { input: Option<PathBuf> },
}

#[derive(Subcommand)]
enum EnumerateWhat {
    /// (n, l)-trapezoids, optionally filtered by indices and statistics.
    Astz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        mu: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
    },
    /// One-row class-k partitions with j parts (first part j + k), for j <= n.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: usize,
    },
    /// Class-k CSSPPs whose shape has parts at most n.
    Csspp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReproWhich {
    /// The twelve pairs of weight M R Q with five rows.
    #[value(name = "table1")]
    MrqPairs,
    /// Five trapezoids against seven partitions when r = 2.
    #[value(name = "figure8")]
    Obstruction,
    /// The (9, 4) example and its partition.
    RunningExample,
}

#[derive(Clone, Copy, ValueEnum)]
enum RotationArg {
    Cw,
    Ccw,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReflectionArg {
    H,
    V,
}

#[derive(Args)]
struct ConfigArgs {
    #[arg(long, default_value_t = 1)]
    d: u32,
    #[arg(long, value_enum, default_value = "cw")]
    rotation: RotationArg,
    #[arg(long, value_enum, default_value = "v")]
    reflection: ReflectionArg,
}

impl ConfigArgs {
    fn config(&self) -> BijectionConfig {
        let rotation = match self.rotation {
            RotationArg::Cw => Rotation::Clockwise,
            RotationArg::Ccw => Rotation::Counterclockwise,
        };
        let reflection = match self.reflection {
            ReflectionArg::H => Reflection::HorizontalAxis,
            ReflectionArg::V => Reflection::VerticalAxis,
        };
        BijectionConfig::new(self.d, rotation, reflection)
    }
}

/// Exit 1: a check or a mapping failed. Exit 2: bad flags or bad input.
enum Failure {
    Check(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl ToString) -> Failure {
    Failure::Usage(msg.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut out = io::BufWriter::new(io::stdout().lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("astz: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("astz: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, out: &mut impl Write) -> Outcome {
    match cmd {
        Command::Enumerate { what } => enumerate(what, out),
        Command::Map { cfg, input } => map(&cfg.config(), input, out),
        Command::Unmap { cfg, n, input } => unmap(&cfg.config(), n, input, out),
        Command::Verify {
            suite,
            n_max,
            l_max,
        } => {
            let suite: Suite = suite.parse().map_err(usage)?;
            let def = suite.default_bounds();
            let bounds = Bounds {
                n_max: n_max.unwrap_or(def.n_max),
                l_max: l_max.unwrap_or(def.l_max),
            };
            let report =
                verify_suite(suite, bounds).map_err(|e| usage(format!("--n-max/--l-max: {e}")))?;
            emit(
                out,
                &serde_json::to_string_pretty(&report).expect("report serialises"),
            )?;
            match report.status {
                Status::Fail => Err(Failure::Check(format!("suite `{suite}` failed"))),
                _ => Ok(()),
            }
        }
        Command::Repro { which } => repro(which, out),
        Command::Render { input } => render(input, out),
    }
}

fn emit(out: &mut impl Write, line: &str) -> Outcome {
    writeln!(out, "{line}").map_err(|e| Failure::Check(format!("write failed: {e}")))
}

fn emit_sorted<T: Serialize>(out: &mut impl Write, items: &[T]) -> Outcome {
    let mut lines: Vec<String> = items
        .iter()
        .map(|x| serde_json::to_string(x).expect("serialises"))
        .collect();
    lines.sort();
    lines.iter().try_for_each(|l| emit(out, l))
}

fn enumerate(what: EnumerateWhat, out: &mut impl Write) -> Outcome {
    let guard = ScaleGuard::from_env();
    match what {
        EnumerateWhat::Astz {
            n,
            l,
            i,
            j,
            mu,
            r,
            p,
            q,
        } => {
            let filter = EnumFilter {
                i,
                j,
                mu,
                r,
                p,
                q,
                right_zero: None,
            };
            let items =
                enumerate_astz(n, l, &filter, guard).map_err(|e| usage(format!("--n/--l: {e}")))?;
            emit_sorted(out, &items)
        }
        EnumerateWhat::Partitions { n, k, j } => {
            guard
                .check(n, k as usize + 1)
                .map_err(|e| usage(format!("--n/--k: {e}")))?;
            emit_sorted(out, &enumerate_partitions(n, k, j))
        }
        EnumerateWhat::Csspp { n, k } => {
            guard
                .check(n, k as usize + 1)
                .map_err(|e| usage(format!("--n/--k: {e}")))?;
            emit_sorted(out, &enumerate_csspp(n, k))
        }
    }
}

/// Non-empty input lines with their 1-based line numbers.
fn read_lines(input: Option<PathBuf>) -> Result<Vec<(usize, String)>, Failure> {
    let reader: Box<dyn BufRead> = match &input {
        Some(path) => Box::new(BufReader::new(
            File::open(path).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(BufReader::new(io::stdin().lock())),
    };
    let mut lines = Vec::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| usage(format!("line {}: {e}", k + 1)))?;
        if !line.trim().is_empty() {
            lines.push((k + 1, line));
        }
    }
    Ok(lines)
}

fn parse_value(lineno: usize, line: &str) -> Result<Value, Failure> {
    serde_json::from_str(line).map_err(|e| usage(format!("line {lineno}: malformed JSON: {e}")))
}

fn field<'a>(lineno: usize, v: &'a Value, name: &str) -> Result<&'a Value, Failure> {
    v.get(name)
        .ok_or_else(|| usage(format!("line {lineno}: missing field `{name}`")))
}

fn uint_field(lineno: usize, v: &Value, name: &str) -> Result<u64, Failure> {
    field(lineno, v, name)?.as_u64().ok_or_else(|| {
        usage(format!(
            "line {lineno}: field `{name}`: expected a non-negative integer"
        ))
    })
}

fn int_rows(lineno: usize, v: &Value) -> Result<Vec<Vec<i64>>, Failure> {
    let bad = || {
        usage(format!(
            "line {lineno}: field `rows`: expected an array of integer arrays"
        ))
    };
    let rows = field(lineno, v, "rows")?.as_array().ok_or_else(bad)?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_i64().ok_or_else(bad))
                .collect()
        })
        .collect()
}

fn parse_astz(lineno: usize, v: &Value) -> Result<Astz, Failure> {
    let l = uint_field(lineno, v, "l")? as usize;
    let rows = int_rows(lineno, v)?;
    Astz::new(l, rows).map_err(|e| usage(format!("line {lineno}: field `rows`: {e}")))
}

fn parse_csspp(lineno: usize, v: &Value) -> Result<Csspp, Failure> {
    let class = u32::try_from(uint_field(lineno, v, "class")?)
        .map_err(|_| usage(format!("line {lineno}: field `class`: out of range")))?;
    let rows = int_rows(lineno, v)?
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| u32::try_from(x).ok())
                .collect::<Option<Vec<u32>>>()
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| {
            usage(format!(
                "line {lineno}: field `rows`: entries must be positive integers"
            ))
        })?;
    Csspp::new(class, rows).map_err(|e| usage(format!("line {lineno}: field `rows`: {e}")))
}

fn map(cfg: &BijectionConfig, input: Option<PathBuf>, out: &mut impl Write) -> Outcome {
    for (lineno, line) in read_lines(input)? {
        let a = parse_astz(lineno, &parse_value(lineno, &line)?)?;
        if cfg.d == 0 || cfg.d as usize >= a.l() {
            return Err(usage(format!(
                "--d: must lie in 1..={} for l = {}",
                a.l().saturating_sub(1),
                a.l()
            )));
        }
        let c = astz_to_partition(&a, cfg)
            .map_err(|e| Failure::Check(format!("line {lineno}: {e}")))?;
        let stats = astz_stats(&a).map_err(|e| Failure::Check(format!("line {lineno}: {e}")))?;
        let rec = json!({"config": cfg, "input": a, "output": c, "stats": stats});
        emit(out, &rec.to_string())?;
    }
    Ok(())
}

fn unmap(cfg: &BijectionConfig, n: usize, input: Option<PathBuf>, out: &mut impl Write) -> Outcome {
    for (lineno, line) in read_lines(input)? {
        let c = parse_csspp(lineno, &parse_value(lineno, &line)?)?;
        if cfg.d == 0 || cfg.d > c.class() {
            return Err(usage(format!(
                "--d: must lie in 1..={} for class {}",
                c.class(),
                c.class()
            )));
        }
        let a = partition_to_astz(&c, n, cfg)
            .map_err(|e| Failure::Check(format!("line {lineno}: {e}")))?;
        let stats =
            csspp_stats(&c, cfg.d).map_err(|e| Failure::Check(format!("line {lineno}: {e}")))?;
        let rec = json!({"config": cfg, "input": c, "output": a, "stats": stats});
        emit(out, &rec.to_string())?;
    }
    Ok(())
}

fn repro(which: ReproWhich, out: &mut impl Write) -> Outcome {
    let fail = |e: &dyn std::fmt::Display| Failure::Check(e.to_string());
    match which {
        ReproWhich::MrqPairs => {
            let pairs = mrq_pairs().map_err(|e| fail(&e))?;
            for p in &pairs {
                emit(out, &serde_json::to_string(p).expect("serialises"))?;
            }
            match pairs.iter().filter(|p| !p.matches).count() {
                0 => Ok(()),
                k => Err(Failure::Check(format!(
                    "{k} of {} pairs do not match",
                    pairs.len()
                ))),
            }
        }
        ReproWhich::RunningExample => {
            let p = running_example().map_err(|e| fail(&e))?;
            emit(out, &serde_json::to_string(&p).expect("serialises"))?;
            if p.matches {
                Ok(())
            } else {
                Err(Failure::Check("running example does not match".into()))
            }
        }
        ReproWhich::Obstruction => {
            let f = obstruction().map_err(|e| fail(&e))?;
            let doc = json!({
                "counts": {"astz": f.astz, "csspp": f.csspp},
                "astz": f.astz_objects,
                "csspp": f.csspp_objects,
            });
            emit(
                out,
                &serde_json::to_string_pretty(&doc).expect("serialises"),
            )
        }
    }
}

fn render(input: Option<PathBuf>, out: &mut impl Write) -> Outcome {
    let mut first = true;
    for (lineno, line) in read_lines(input)? {
        let v = parse_value(lineno, &line)?;
        let text = if v.get("l").is_some() {
            parse_astz(lineno, &v)?.render()
        } else if v.get("class").is_some() {
            parse_csspp(lineno, &v)?.render()
        } else {
            return Err(usage(format!(
                "line {lineno}: expected field `l` (trapezoid) or `class` (partition)"
            )));
        };
        if !first {
            emit(out, "")?;
        }
        first = false;
        write!(out, "{text}").map_err(|e| Failure::Check(e.to_string()))?;
        if !text.ends_with('\n') {
            emit(out, "")?;
        }
    }
    Ok(())
}
