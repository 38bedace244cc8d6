use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Mutex;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use lspgen::catalog;
use lspgen::chamber::apply;
use lspgen::completion::{complete, completion_rates};
use lspgen::decoration::format::{read_decos, write_deco};
use lspgen::decoration::Decoration;
use lspgen::embedded::planar_code::{read_planar_code, write_graph, write_graph_from, HEADER};
use lspgen::embedded::PlaneGraph;
use lspgen::generator::{generate, GenerationTask};
use lspgen::oracle::{cross_check, MAX_RATE};

#[derive(Parser)]
#[command(name = "lspgen", about = "Generate and apply local symmetry-preserving operations")]
struct Cli {
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate decorations or completable predecorations.
    Generate(GenerateArgs),
    /// Apply an operation to seed graphs, writing planar_code.
    Apply(ApplyArgs),
    /// Cross-check the generator against brute force.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// A rate `N` or a range `A-B`.
    #[arg(long, value_parser = parse_rates)]
    rate: (usize, usize),
    #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    k: u8,
    /// Emit or count the predecorations that complete at each rate.
    #[arg(long)]
    predecorations: bool,
    /// Print `rate k count` lines instead of records.
    #[arg(long)]
    count: bool,
    /// Order records canonically; output is then independent of threads.
    #[arg(long)]
    sorted: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Sidecar file for vertex types and corners when decorations are written as planar_code.
    #[arg(long)]
    types: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Deco,
    Pc,
}

#[derive(Args)]
struct ApplyArgs {
    #[arg(long, conflicts_with = "op_file", required_unless_present = "op_file")]
    op: Option<String>,
    /// First record of a `.deco` file.
    #[arg(long)]
    op_file: Option<PathBuf>,
    #[arg(long, conflicts_with = "seed_file", required_unless_present = "seed_file")]
    seed: Option<String>,
    /// Every graph of a planar_code file.
    #[arg(long)]
    seed_file: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_rates)]
    rate: (usize, usize),
    #[arg(short, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    k: u8,
}

fn parse_rates(s: &str) -> Result<(usize, usize), String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    let (a, b) = match s.split_once('-') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => (num(s)?, num(s)?),
    };
    if a == 0 || a > b {
        return Err(format!("empty or zero rate range {s:?}"));
    }
    Ok((a, b))
}

/// Failures that are the caller's fault rather than a failed check.
struct Usage(anyhow::Error);

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("lspgen: {e}");
            return ExitCode::from(2);
        }
    }
    let run = match cli.cmd {
        Cmd::Generate(a) => cmd_generate(&a).map(|()| true),
        Cmd::Apply(a) => cmd_apply(&a).map(|()| true),
        Cmd::Verify(a) => cmd_verify(&a),
    };
    match run {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("lspgen: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn usage<T>(r: Result<T>) -> Result<T, Usage> {
    r.map_err(Usage)
}

fn cmd_generate(a: &GenerateArgs) -> Result<(), Usage> {
    let format = match (a.predecorations, a.format) {
        (true, Some(Format::Deco)) => return usage(Err(anyhow::anyhow!("predecorations have no .deco form; use --format pc"))),
        (true, _) => Format::Pc,
        (false, f) => f.unwrap_or(Format::Deco),
    };
    if a.count && (a.format.is_some() || a.types.is_some()) {
        return usage(Err(anyhow::anyhow!("--count prints no records; drop --format and --types")));
    }
    if !a.count && format == Format::Pc && !a.predecorations && a.types.is_none() {
        return usage(Err(anyhow::anyhow!("planar_code output of decorations needs a --types sidecar")));
    }
    if a.types.is_some() && (format != Format::Pc || a.predecorations) {
        return usage(Err(anyhow::anyhow!("--types only applies to decorations written as planar_code")));
    }
    let (lo, hi) = a.rate;
    let task = GenerationTask::new(lo, hi, a.k);

    if a.count {
        let counts = Mutex::new(BTreeMap::new());
        generate(&task, |p| {
            let rates: Vec<usize> = if a.predecorations {
                completion_rates(p, lo, hi, a.k).into_iter().collect()
            } else {
                complete(p, lo, hi, a.k).iter().map(Decoration::inflation_rate).collect()
            };
            let mut c = counts.lock().unwrap();
            for r in rates {
                *c.entry(r).or_insert(0usize) += 1;
            }
        });
        let counts = counts.into_inner().unwrap();
        let mut out = io::stdout().lock();
        for r in lo..=hi {
            usage(writeln!(out, "{r} {} {}", a.k, counts.get(&r).unwrap_or(&0)).map_err(Into::into))?;
        }
        return Ok(());
    }

    // a record is its bytes plus, for planar_code decorations, a sidecar line
    let sink = Sink::new(a.sorted, format)?;
    generate(&task, |p| {
        if a.predecorations {
            for _ in completion_rates(p, lo, hi, a.k) {
                let mut bytes = Vec::new();
                write_graph(p.graph(), &mut bytes).expect("predecorations stay small");
                sink.push(bytes, None);
            }
        } else {
            for d in complete(p, lo, hi, a.k) {
                match format {
                    Format::Deco => sink.push(write_deco(&d).into_bytes(), None),
                    Format::Pc => {
                        let (bytes, line) = pc_record(&d);
                        sink.push(bytes, Some(line));
                    }
                }
            }
        }
    });
    usage(sink.finish(a.types.as_deref()))
}

/// The decoration graph as planar_code with `v0` as vertex 1 and its outer
/// dart first, and the matching `types ... corners ...` sidecar line.
fn pc_record(d: &Decoration) -> (Vec<u8>, String) {
    // write_deco numbers vertices canonically from the outer dart of v0
    let g = read_decos(&write_deco(d)).expect("round trip").remove(0);
    let root = g.boundary_dart(g.corners()[0]).expect("v0 is on the boundary");
    let mut bytes = Vec::new();
    let label = write_graph_from(g.graph(), root, &mut bytes).expect("decorations of desk-scale rates stay small");
    let mut types = vec![String::new(); label.len()];
    for (v, &l) in label.iter().enumerate() {
        types[l] = g.vertex_type(v).to_string();
    }
    let corners: Vec<String> = g.corners().iter().map(|&c| (label[c] + 1).to_string()).collect();
    (bytes, format!("types {} corners {}", types.join(" "), corners.join(" ")))
}

struct Sink {
    sorted: bool,
    format: Format,
    records: Mutex<Vec<(Vec<u8>, Option<String>)>>,
}

impl Sink {
    fn new(sorted: bool, format: Format) -> Result<Sink, Usage> {
        if format == Format::Pc {
            usage(io::stdout().lock().write_all(HEADER).map_err(Into::into))?;
        }
        Ok(Sink { sorted, format, records: Mutex::new(Vec::new()) })
    }

    fn push(&self, bytes: Vec<u8>, line: Option<String>) {
        let mut r = self.records.lock().unwrap();
        if self.sorted || line.is_some() {
            r.push((bytes, line));
        } else {
            // streaming keeps memory flat for large unsorted runs
            let mut out = io::stdout().lock();
            out.write_all(&bytes).and_then(|()| separate(self.format, &mut out)).expect("stdout");
        }
    }

    fn finish(self, types: Option<&Path>) -> Result<()> {
        let Sink { sorted, format, records } = self;
        let mut records = records.into_inner().unwrap();
        if sorted {
            records.sort();
        }
        let mut out = io::stdout().lock();
        let mut side = String::new();
        for (bytes, line) in &records {
            out.write_all(bytes)?;
            separate(format, &mut out)?;
            if let Some(l) = line {
                side.push_str(l);
                side.push('\n');
            }
        }
        out.flush()?;
        if let Some(path) = types {
            fs::write(path, side).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }
}

// .deco records are separated by blank lines
fn separate(format: Format, out: &mut impl Write) -> io::Result<()> {
    if format == Format::Deco {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn cmd_apply(a: &ApplyArgs) -> Result<(), Usage> {
    let op = usage(load_op(a))?;
    let seeds = usage(load_seeds(a))?;
    let mut bytes = HEADER.to_vec();
    for g in &seeds {
        let h = usage(apply(&op, g).context("application failed"))?;
        usage(write_graph(&h, &mut bytes).context("result too large for planar_code"))?;
    }
    usage(io::stdout().lock().write_all(&bytes).map_err(Into::into))
}

fn load_op(a: &ApplyArgs) -> Result<Decoration> {
    if let Some(name) = &a.op {
        return Ok(catalog::lookup(name)?.decoration);
    }
    let path = a.op_file.as_ref().expect("clap requires one of the two");
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut ds = read_decos(&text).with_context(|| format!("parsing {}", path.display()))?;
    if ds.is_empty() {
        bail!("{} holds no decoration", path.display());
    }
    Ok(ds.swap_remove(0))
}

fn load_seeds(a: &ApplyArgs) -> Result<Vec<PlaneGraph>> {
    if let Some(name) = &a.seed {
        return Ok(vec![catalog::seed(name)?]);
    }
    let path = a.seed_file.as_ref().expect("clap requires one of the two");
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(read_planar_code(&bytes).with_context(|| format!("parsing {}", path.display()))?)
}

fn cmd_verify(a: &VerifyArgs) -> Result<bool, Usage> {
    let (lo, hi) = a.rate;
    if hi > MAX_RATE {
        return usage(Err(anyhow::anyhow!("verification is limited to rates up to {MAX_RATE}")));
    }
    let mut ok = true;
    for r in lo..=hi {
        let rep = usage(cross_check(r, a.k).map_err(Into::into))?;
        let verdict = if rep.agrees() { "ok" } else { "MISMATCH" };
        println!(
            "{r} {} oracle {} pipeline {} only-oracle {} only-pipeline {} {verdict}",
            a.k,
            rep.oracle,
            rep.pipeline,
            rep.only_oracle.len(),
            rep.only_pipeline.len()
        );
        ok &= rep.agrees();
    }
    Ok(ok)
}
