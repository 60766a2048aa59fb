//! Command-line front end: enumerate, convert, verify, gf, render.

use std::collections::BTreeMap;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use burge_core::bijection;
use burge_core::convert::{convert_json, Family};
use burge_core::lattice::{self, Format, PathWord};
use burge_core::multipartition::enumerate_multipartitions;
use burge_core::partition::{enumerate_restricted, restricted_counts};
use burge_core::qseries::{andrews_sum, andrews_sum_in, gf_from_counts};
use burge_core::verify;
use burge_core::BoundaryConfig;

#[derive(Parser)]
#[command(
    name = "burge",
    version,
    about = "Restricted partitions, multipartitions and lattice paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List or count the objects of one family for a given weight.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short, long = "k")]
        k: i64,
        #[arg(short, long = "i")]
        i: i64,
        #[arg(short, long = "n")]
        n: u64,
        /// Only objects of this length / charge.
        #[arg(long = "m")]
        m: Option<usize>,
        #[arg(long)]
        count_only: bool,
        /// One JSON object per line.
        #[arg(long)]
        json: bool,
    },
    /// Map an object of one family to its image in another.
    Convert {
        #[arg(long, value_enum)]
        from: Object,
        #[arg(long, value_enum)]
        to: Object,
        #[arg(short, long = "k")]
        k: i64,
        #[arg(short, long = "i")]
        i: i64,
        /// JSON input; stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Print every grouping, interchange and insertion step to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Check that all four counts agree on every cell.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "2..5", value_parser = parse_range)]
        k_range: (usize, usize),
        #[arg(long, env = "BURGE_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Flip one count and report the resulting mismatch.
        #[arg(long)]
        self_test: bool,
    },
    /// Dump the generating function as `m,n,coeff` CSV rows.
    Gf {
        #[arg(short, long = "k")]
        k: i64,
        #[arg(short, long = "i")]
        i: i64,
        #[arg(long)]
        q_order: usize,
        /// Defaults to the q order.
        #[arg(long)]
        z_order: Option<usize>,
        #[arg(long, value_enum, default_value = "sum")]
        source: Source,
        /// Arbitrary-precision coefficients (sum source only).
        #[arg(long)]
        exact: bool,
    },
    /// Draw a path given as JSON.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "ascii")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Partitions,
    Multipartitions,
    Paths,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Partition,
    Multipartition,
    Path,
}

impl From<Object> for Family {
    fn from(o: Object) -> Self {
        match o {
            Object::Partition => Family::Partition,
            Object::Multipartition => Family::Multipartition,
            Object::Path => Family::Path,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Sum,
    Enumeration,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: usize = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

/// Failure with its exit code: 1 mismatch, 2 bad configuration, 3 invalid input.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(e: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            message: e.to_string(),
        }
    }

    fn input(e: impl std::fmt::Display) -> Self {
        Self {
            code: 3,
            message: e.to_string(),
        }
    }

    fn io(e: impl std::fmt::Display) -> Self {
        Self {
            code: 3,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn config(k: i64, i: i64) -> Result<BoundaryConfig, Failure> {
    BoundaryConfig::new(k, i).map_err(Failure::config)
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, Failure> {
    match command {
        Command::Enumerate {
            kind,
            k,
            i,
            n,
            m,
            count_only,
            json,
        } => {
            let cfg = config(k, i)?;
            enumerate(out, kind, cfg, n, m, count_only, json).map_err(Failure::io)?;
            Ok(0)
        }
        Command::Convert {
            from,
            to,
            k,
            i,
            input,
            trace,
        } => {
            let cfg = config(k, i)?;
            let text = read_input(input.as_ref())?;
            let mut steps = Vec::new();
            let line = convert_json(cfg, from.into(), to.into(), &text, trace.then_some(&mut steps));
            for s in &steps {
                eprintln!("{s}");
            }
            let line = line.map_err(Failure::input)?;
            writeln!(out, "{line}").map_err(Failure::io)?;
            Ok(0)
        }
        Command::Verify {
            max_n,
            k_range,
            jobs,
            self_test,
        } => {
            if k_range.0 < 2 {
                return Err(Failure::config(format!(
                    "k range must start at 2 or more, got {}",
                    k_range.0
                )));
            }
            let mut report = verify::run(k_range.0..=k_range.1, max_n, jobs).map_err(Failure::config)?;
            if self_test {
                verify::inject_fault(&mut report);
            }
            write_report(out, &report).map_err(Failure::io)?;
            Ok(if report.all_agree() { 0 } else { 1 })
        }
        Command::Gf {
            k,
            i,
            q_order,
            z_order,
            source,
            exact,
        } => {
            let cfg = config(k, i)?;
            let z_order = z_order.unwrap_or(q_order);
            let csv = match (source, exact) {
                (Source::Sum, false) => andrews_sum(cfg, q_order, z_order).map_err(Failure::config)?.to_csv(),
                (Source::Sum, true) => andrews_sum_in::<BigInt>(cfg, q_order, z_order)
                    .map_err(Failure::config)?
                    .to_csv(),
                (Source::Enumeration, _) => {
                    let mut counts = BTreeMap::new();
                    for n in 0..=q_order {
                        let by_m = restricted_counts(cfg, n as u64);
                        for m in 0..=z_order {
                            counts.insert((n, m), by_m.get(m).copied().unwrap_or(0));
                        }
                    }
                    gf_from_counts(&counts, q_order, z_order)
                        .map_err(Failure::config)?
                        .to_csv()
                }
            };
            out.write_all(csv.as_bytes()).map_err(Failure::io)?;
            Ok(0)
        }
        Command::Render {
            input,
            format,
            out: target,
        } => {
            let format: Format = format.parse().map_err(Failure::config)?;
            let text = read_input(Some(&input))?;
            let path: PathWord = serde_json::from_str(&text).map_err(Failure::input)?;
            let drawing = lattice::render(&path, format).map_err(Failure::input)?;
            match target {
                Some(p) => std::fs::write(&p, drawing).map_err(Failure::io)?,
                None => out.write_all(drawing.as_bytes()).map_err(Failure::io)?,
            }
            Ok(0)
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::io(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(Failure::io)?;
            Ok(s)
        }
    }
}

fn enumerate(
    out: &mut impl Write,
    kind: Kind,
    cfg: BoundaryConfig,
    n: u64,
    m: Option<usize>,
    count_only: bool,
    json: bool,
) -> io::Result<()> {
    let lines: Vec<String> = match kind {
        Kind::Partitions => {
            let all = enumerate_restricted(cfg, n, m);
            if count_only {
                return writeln!(out, "{}", all.len());
            }
            all.iter()
                .map(|p| if json { to_json(p) } else { p.to_string() })
                .collect()
        }
        Kind::Multipartitions => {
            let all = enumerate_multipartitions(cfg, n, m);
            if count_only {
                return writeln!(out, "{}", all.len());
            }
            all.iter()
                .map(|x| if json { to_json(x) } else { x.to_string() })
                .collect()
        }
        Kind::Paths => {
            let all = lattice::enumerate_paths(cfg, n, m);
            if count_only {
                return writeln!(out, "{}", all.len());
            }
            all.iter()
                .map(|p| {
                    if json {
                        to_json(p)
                    } else {
                        let peaks = p.clusters().map(|c| c.to_string()).unwrap_or_default();
                        format!("{p}  {peaks}")
                    }
                })
                .collect()
        }
    };
    for l in lines {
        writeln!(out, "{l}")?;
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn write_report(out: &mut impl Write, report: &verify::Report) -> io::Result<()> {
    writeln!(out, "k,i,n,m,F,G,P,AG")?;
    for c in report.cells.iter().filter(|c| !c.is_zero()) {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            c.cfg.k(),
            c.cfg.i(),
            c.n,
            c.m,
            c.partitions,
            c.multipartitions,
            c.paths,
            c.series
        )?;
    }
    let bad = report.mismatches();
    if bad.is_empty() {
        writeln!(out, "all cells agree ({} cells)", report.cells.len())?;
    } else {
        for c in &bad {
            writeln!(
                out,
                "MISMATCH k={} i={} n={} m={}: F={} G={} P={} AG={}",
                c.cfg.k(),
                c.cfg.i(),
                c.n,
                c.m,
                c.partitions,
                c.multipartitions,
                c.paths,
                c.series
            )?;
            if let Some(w) = witness(c) {
                writeln!(out, "  witness: {w}")?;
            }
        }
        writeln!(out, "{} mismatched cell(s)", bad.len())?;
    }
    Ok(())
}

/// A partition from the offending cell, and what it maps to.
fn witness(c: &verify::Cell) -> Option<String> {
    let p = enumerate_restricted(c.cfg, c.n as u64, Some(c.m)).into_iter().next()?;
    let image = bijection::partition_to_multipartition(&p, c.cfg)
        .map(|x| x.to_string())
        .unwrap_or_else(|e| e.to_string());
    Some(format!("{p} -> {image}"))
}
