//! Command-line front door. Exit codes encode tool success, not the
//! decision answer: 0 on a completed computation (including "NO"), 1 on a
//! crosscheck mismatch, 2 on usage or input errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::instance::{generate_random, to_permutation_text, GeneratorConfig, SplitMix64};
use crate::oracle::{oracle_frontier, GeneralGraph, DEFAULT_GUARD};
use crate::perm::{Coloring, Color, Permutation, Piece, Scanline, ScanlineChain};
use crate::render::render_diagram;
use crate::solver::{chain_frontier, witness, PieceSolver};

#[derive(Parser)]
#[command(
    name = "bwperm",
    version,
    about = "Black-and-white coloring of permutation graphs",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct InstanceArgs {
    /// Bottom-rail label order, e.g. "3 5 1 4 2"
    #[arg(long, conflicts_with = "input")]
    perm: Option<String>,
    /// Instance file in permutation text format
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether b black and w white vertices fit
    Decide {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(short)]
        b: usize,
        #[arg(short)]
        w: usize,
    },
    /// Print the full feasibility frontier as TSV
    Frontier {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Print a witness coloring with its scanline chain, or NONE
    Witness {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(short)]
        b: usize,
        #[arg(short)]
        w: usize,
    },
    /// Check a coloring file against an instance
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Generate a seeded random instance
    Gen {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the solver against the exhaustive oracle on random instances
    Crosscheck {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Wall-clock statistics per solve path
    Bench {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Render the diagram (optionally with a coloring file) as SVG
    Render {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
}

/// Runs the CLI against explicit argv and output streams; returns the exit
/// code.
pub fn run<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match execute(cli.cmd, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn execute<O: Write>(cmd: Cmd, out: &mut O) -> Result<i32, String> {
    match cmd {
        Cmd::Decide { instance, b, w } => {
            let p = load_instance(&instance)?;
            let answer = if chain_frontier(&p).member(b, w) { "YES" } else { "NO" };
            writeln!(out, "{answer}").map_err(io_err)?;
            Ok(0)
        }
        Cmd::Frontier { instance } => {
            let p = load_instance(&instance)?;
            write!(out, "{}", chain_frontier(&p).to_tsv()).map_err(io_err)?;
            Ok(0)
        }
        Cmd::Witness { instance, b, w } => {
            let p = load_instance(&instance)?;
            match witness(&p, b, w) {
                Some(wit) => {
                    write!(out, "{}", format_witness(&wit.coloring, &wit.chain)).map_err(io_err)?
                }
                None => writeln!(out, "NONE").map_err(io_err)?,
            }
            Ok(0)
        }
        Cmd::Verify { instance, coloring } => {
            let p = load_instance(&instance)?;
            let text = read_file(&coloring)?;
            let (c, _) = parse_coloring_file(&text, p.n())?;
            let check = p.verify_coloring(&c);
            if check.valid {
                writeln!(out, "VALID b={} w={}", check.black, check.white).map_err(io_err)?;
            } else {
                let (u, v) = check.violation.expect("invalid check carries an edge");
                writeln!(out, "INVALID: edge {u}-{v}").map_err(io_err)?;
            }
            Ok(0)
        }
        Cmd::Gen { n, seed } => {
            let p = generate_random(&GeneratorConfig { n, seed }).map_err(|e| e.to_string())?;
            write!(out, "{}", to_permutation_text(&p)).map_err(io_err)?;
            Ok(0)
        }
        Cmd::Crosscheck { n, trials, seed } => crosscheck(n, trials, seed, out),
        Cmd::Bench { n, trials, seed } => bench(n, trials, seed, out),
        Cmd::Render { instance, coloring } => {
            let p = load_instance(&instance)?;
            let parsed = match coloring {
                Some(path) => {
                    let text = read_file(&path)?;
                    Some(parse_coloring_file(&text, p.n())?)
                }
                None => None,
            };
            let svg = match &parsed {
                Some((c, chain)) => render_diagram(&p, Some(c), chain.as_ref()),
                None => render_diagram(&p, None, None),
            };
            write!(out, "{svg}").map_err(io_err)?;
            Ok(0)
        }
    }
}

fn io_err(e: std::io::Error) -> String {
    format!("write failed: {e}")
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_instance(args: &InstanceArgs) -> Result<Permutation, String> {
    match (&args.perm, &args.input) {
        (Some(text), None) => {
            let labels: Vec<usize> = text
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| format!("--perm: {t:?} is not a label")))
                .collect::<Result<_, _>>()?;
            Permutation::from_bottom(&labels).map_err(|e| e.to_string())
        }
        (None, Some(path)) => {
            Permutation::parse(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
        }
        _ => Err("exactly one of --perm or --input is required".to_string()),
    }
}

/// Witness text: one line each for black, white, uncolored labels, then the
/// scanline chain.
pub fn format_witness(c: &Coloring, chain: &ScanlineChain) -> String {
    let join = |labels: Vec<usize>| {
        labels.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ")
    };
    let scanlines = chain
        .scanlines
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let mut text = String::new();
    let _ = writeln!(text, "black: {}", join(c.labels(Color::Black)));
    let _ = writeln!(text, "white: {}", join(c.labels(Color::White)));
    let _ = writeln!(text, "uncolored: {}", join(c.labels(Color::Uncolored)));
    let _ = writeln!(text, "scanlines: {scanlines}");
    text
}

/// Parses the witness text format back into a coloring and optional chain.
pub fn parse_coloring_file(
    text: &str,
    n: usize,
) -> Result<(Coloring, Option<ScanlineChain>), String> {
    let mut c = Coloring::uncolored(n);
    let mut chain = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| format!("coloring line {}: expected \"<key>: ...\"", i + 1))?;
        match key.trim() {
            "black" | "white" => {
                let color = if key.trim() == "black" { Color::Black } else { Color::White };
                for tok in rest.split_whitespace() {
                    let k: usize = tok
                        .parse()
                        .map_err(|_| format!("coloring line {}: bad label {tok:?}", i + 1))?;
                    if k < 1 || k > n {
                        return Err(format!("coloring line {}: label {k} out of range 1..={n}", i + 1));
                    }
                    if c.color(k) != Color::Uncolored {
                        return Err(format!("coloring line {}: label {k} colored twice", i + 1));
                    }
                    c.set(k, color);
                }
            }
            "uncolored" => {}
            "scanlines" => {
                let mut scanlines = Vec::new();
                for tok in rest.split_whitespace() {
                    let inner = tok
                        .strip_prefix('(')
                        .and_then(|t| t.strip_suffix(')'))
                        .ok_or_else(|| format!("coloring line {}: bad scanline {tok:?}", i + 1))?;
                    let (a, b) = inner
                        .split_once(',')
                        .ok_or_else(|| format!("coloring line {}: bad scanline {tok:?}", i + 1))?;
                    let parse = |t: &str| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| format!("coloring line {}: bad scanline {tok:?}", i + 1))
                    };
                    scanlines.push(Scanline::new(parse(a)?, parse(b)?));
                }
                chain = Some(ScanlineChain { scanlines });
            }
            other => return Err(format!("coloring line {}: unknown key {other:?}", i + 1)),
        }
    }
    Ok((c, chain))
}

fn crosscheck<O: Write>(n: usize, trials: usize, seed: u64, out: &mut O) -> Result<i32, String> {
    if !(1..=DEFAULT_GUARD).contains(&n) {
        return Err(format!("crosscheck requires 1 <= n <= {DEFAULT_GUARD} (oracle guard)"));
    }
    let mut rng = SplitMix64::new(seed);
    for trial in 0..trials {
        let size = (rng.next_u64() % n as u64) as usize + 1;
        let p = generate_random(&GeneratorConfig { n: size, seed: rng.next_u64() })
            .map_err(|e| e.to_string())?;
        if let Some(bad) = mismatch(&p)? {
            let shrunk = shrink(&bad)?;
            let solver = chain_frontier(&shrunk);
            let truth = oracle_frontier(&GeneralGraph::from_permutation(&shrunk))
                .map_err(|e| e.to_string())?;
            writeln!(out, "MISMATCH after {trial} trials; minimized instance:").map_err(io_err)?;
            write!(out, "{}", to_permutation_text(&shrunk)).map_err(io_err)?;
            writeln!(out, "solver: {:?}", solver.maxw()).map_err(io_err)?;
            writeln!(out, "oracle: {:?}", truth.maxw()).map_err(io_err)?;
            return Ok(1);
        }
    }
    writeln!(out, "OK {trials}/{trials}").map_err(io_err)?;
    Ok(0)
}

fn mismatch(p: &Permutation) -> Result<Option<Permutation>, String> {
    let truth = oracle_frontier(&GeneralGraph::from_permutation(p)).map_err(|e| e.to_string())?;
    if chain_frontier(p) != truth {
        Ok(Some(p.clone()))
    } else {
        Ok(None)
    }
}

/// Greedy shrink: keep deleting one label (renormalizing the rest) while the
/// mismatch persists.
fn shrink(p: &Permutation) -> Result<Permutation, String> {
    let mut cur = p.clone();
    'outer: while cur.n() > 1 {
        for drop in 1..=cur.n() {
            let bottom: Vec<usize> = cur
                .bottom_order()
                .iter()
                .filter(|&&k| k != drop)
                .map(|&k| if k > drop { k - 1 } else { k })
                .collect();
            let smaller = Permutation::from_bottom(&bottom).map_err(|e| e.to_string())?;
            if mismatch(&smaller)?.is_some() {
                cur = smaller;
                continue 'outer;
            }
        }
        break;
    }
    Ok(cur)
}

fn bench<O: Write>(n: usize, trials: usize, seed: u64, out: &mut O) -> Result<i32, String> {
    if n < 1 || trials < 1 {
        return Err("bench requires n >= 1 and trials >= 1".to_string());
    }
    let mut chain_ms = Vec::with_capacity(trials);
    let mut piece_ms = Vec::with_capacity(trials);
    for t in 0..trials {
        let p = generate_random(&GeneratorConfig { n, seed: seed.wrapping_add(t as u64) })
            .map_err(|e| e.to_string())?;
        let start = Instant::now();
        let chain = chain_frontier(&p);
        chain_ms.push(start.elapsed().as_secs_f64() * 1e3);
        if n <= 12 {
            let start = Instant::now();
            let mut solver = PieceSolver::new(&p);
            let table = solver.piece_table(Piece::extreme(n));
            piece_ms.push(start.elapsed().as_secs_f64() * 1e3);
            assert_eq!(table, chain);
        }
    }
    write_stats(out, "chain", n, &chain_ms)?;
    if !piece_ms.is_empty() {
        write_stats(out, "piece", n, &piece_ms)?;
    } else {
        writeln!(out, "piece\tn={n}\tskipped (reference path is kept to n <= 12)")
            .map_err(io_err)?;
    }
    Ok(0)
}

fn write_stats<O: Write>(out: &mut O, path: &str, n: usize, ms: &[f64]) -> Result<(), String> {
    let min = ms.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = ms.iter().cloned().fold(0.0, f64::max);
    let mean = ms.iter().sum::<f64>() / ms.len() as f64;
    writeln!(
        out,
        "{path}\tn={n}\ttrials={}\tmin={min:.3}ms\tmean={mean:.3}ms\tmax={max:.3}ms",
        ms.len()
    )
    .map_err(io_err)
}

