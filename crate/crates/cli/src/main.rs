mod fixture;
mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use treepack::graph::parse_edge_list;
use treepack::packing::{nu_f_bounds, nu_f_exact, tau, verify_decomposition, DEFAULT_EXACT_LIMIT};
use treepack::property_p::{check_p, verify_certificate, CheckOptions, PQuery, DEFAULT_NODE_BUDGET};
use treepack::spectral::{spectrum, spectrum_alpha};
use treepack::theorems::{random_validation, reproduce_paper, Evaluator, ValidationConfig};
use treepack::{parse_rational, ExactValue, Graph, PartitionCertificate, Rational, VertexSet};

use output::{render, Format};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(name = "treepack", version, about = "Spanning-tree packing, spectra and property P(k, d)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed echoed in every report; overrides the seed of a validation config.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for parallel stages.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Leave the timing field out of the report.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Args, Clone)]
struct GraphInput {
    /// Edge-list file.
    graph: Option<PathBuf>,
    /// Built-in graph: h1, h2, petersen, kN, kAxB, bN,S,K.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Adjacency or A_alpha eigenvalues.
    Eigen {
        #[command(flatten)]
        input: GraphInput,
        /// Exact alpha in [0, 1), e.g. 1/2.
        #[arg(long)]
        alpha: Option<String>,
        /// 1-based index into the descending spectrum.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Spanning-tree packing number with a tree certificate.
    Tau {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Fractional packing number, exact or bracketed.
    Nuf {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        exact_limit: usize,
    },
    /// Decide property P(k, d).
    CheckP {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        /// File listing one side U of a bipartition to try.
        #[arg(long)]
        bipartition: Option<PathBuf>,
        /// Node budget of the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Evaluate one of the spectral theorems.
    Theorem {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Recompute the published numbers; exit 1 on any mismatch.
    Reproduce,
    /// Randomized theorem validation; exit 1 on any violation.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    T16,
    T17,
    T41,
}

enum Failure {
    Usage(String),
    Input(String),
}

struct Outcome {
    inputs: Value,
    results: Value,
    ok: bool,
}

fn load(input: &GraphInput) -> Result<(Graph, Value), Failure> {
    match (&input.graph, &input.fixture) {
        (Some(_), Some(_)) => Err(Failure::Usage("give either a graph file or --fixture, not both".into())),
        (None, None) => Err(Failure::Usage("a graph file or --fixture is required".into())),
        (None, Some(name)) => {
            let g = fixture::fixture(name).ok_or_else(|| Failure::Usage(format!("unknown fixture {name:?}")))?;
            let src = json!({"fixture": name.to_ascii_lowercase(), "n": g.order(), "m": g.size()});
            Ok((g, src))
        }
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let g = parse_edge_list(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let src = json!({"file": path.display().to_string(), "n": g.order(), "m": g.size()});
            Ok((g, src))
        }
    }
}

fn alpha_arg(a: &Option<String>) -> Result<Option<Rational>, Failure> {
    let Some(text) = a else { return Ok(None) };
    let r = parse_rational(text).ok_or_else(|| Failure::Usage(format!("alpha {text:?} is not a rational")))?;
    if r < Rational::from_integer(0) || r >= Rational::from_integer(1) {
        return Err(Failure::Usage(format!("alpha {text} outside [0, 1)")));
    }
    Ok(Some(r))
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn partition_json(c: &PartitionCertificate) -> Value {
    json!({
        "parts": c.partition.parts(),
        "cross_total": c.cross_total,
        "ratio": ExactValue::from(c.ratio),
    })
}

fn read_side(path: &PathBuf, n: usize) -> Result<VertexSet, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut vs = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Failure::Input(format!("{}: {tok:?} is not a vertex", path.display())))?;
            vs.push(v);
        }
    }
    VertexSet::new(n, vs).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cmd: &Command, seed: Option<u64>) -> Result<Outcome, Failure> {
    let usage = |e: &dyn std::fmt::Display| Failure::Usage(e.to_string());
    match cmd {
        Command::Eigen { input, alpha, i } => {
            let (g, src) = load(input)?;
            let a = alpha_arg(alpha)?;
            let s = match a {
                None => spectrum(&g),
                Some(a) => spectrum_alpha(&g, to_f64(a)),
            }
            .map_err(|e| usage(&e))?;
            let value = match i {
                Some(i) => Some(s.nth(*i).map_err(|e| usage(&e))?),
                None => None,
            };
            Ok(Outcome {
                inputs: json!({"graph": src, "alpha": a.map(ExactValue::from), "i": i}),
                results: json!({
                    "matrix": if a.is_some() { "a_alpha" } else { "adjacency" },
                    "eigenvalues": s.values(),
                    "value": value,
                    "residual": s.residual,
                }),
                ok: true,
            })
        }
        Command::Tau { input } => {
            let (g, src) = load(input)?;
            let (t, d) = tau(&g).map_err(|e| usage(&e))?;
            Ok(Outcome {
                inputs: json!({"graph": src}),
                results: json!({
                    "tau": t,
                    "trees": d.forests(),
                    "verified": verify_decomposition(&g, &d, t).is_ok(),
                }),
                ok: true,
            })
        }
        Command::Nuf { input, exact_limit } => {
            let (g, src) = load(input)?;
            let results = if g.order() <= *exact_limit {
                let (v, cert) = nu_f_exact(&g, *exact_limit).map_err(|e| usage(&e))?;
                json!({"exact": true, "value": ExactValue::from(v), "partition": partition_json(&cert)})
            } else {
                let b = nu_f_bounds(&g).map_err(|e| usage(&e))?;
                json!({
                    "exact": b.lower == b.upper,
                    "lower": ExactValue::from(b.lower),
                    "upper": ExactValue::from(b.upper),
                    "partition": partition_json(&b.upper_certificate),
                })
            };
            Ok(Outcome {
                inputs: json!({"graph": src, "exact_limit": exact_limit}),
                results,
                ok: true,
            })
        }
        Command::CheckP {
            input,
            k,
            d,
            bipartition,
            budget,
        } => {
            let (g, src) = load(input)?;
            let q = PQuery::new(*k, *d).map_err(|e| usage(&e))?;
            let mut opts = CheckOptions {
                exhaustive_budget: *budget,
                ..CheckOptions::default()
            };
            if let Some(path) = bipartition {
                opts.sides.push(read_side(path, g.order())?);
            }
            let v = check_p(&g, q, &opts);
            let verified = v.decomposition(g.order()).map(|dec| verify_certificate(&g, q, &dec).is_ok());
            Ok(Outcome {
                inputs: json!({
                    "graph": src,
                    "k": k,
                    "d": d,
                    "budget": budget,
                    "bipartition": opts.sides.first(),
                }),
                results: json!({"verdict": v, "certificate_verified": verified}),
                ok: true,
            })
        }
        Command::Theorem { input, which, k, alpha } => {
            let (g, src) = load(input)?;
            let a = alpha_arg(alpha)?;
            let ev = Evaluator::default();
            let mut case = ev.case(&g).map_err(|e| usage(&e))?;
            let report = match which {
                Which::T16 => case.t16(*k),
                Which::T17 => case.t17(*k),
                Which::T41 => case.t41(*k, a.unwrap_or(Rational::from_integer(0))),
            }
            .map_err(|e| usage(&e))?;
            Ok(Outcome {
                inputs: json!({
                    "graph": src,
                    "which": format!("{which:?}").to_ascii_lowercase(),
                    "k": k,
                    "alpha": a.map(ExactValue::from),
                }),
                ok: report.consistent,
                results: serde_json::to_value(&report).expect("serializable"),
            })
        }
        Command::Reproduce => {
            let t = reproduce_paper();
            Ok(Outcome {
                inputs: json!({}),
                ok: t.all_match,
                results: serde_json::to_value(&t).expect("serializable"),
            })
        }
        Command::Validate { config } => {
            let text = fs::read_to_string(config).map_err(|e| Failure::Input(format!("{}: {e}", config.display())))?;
            let mut cfg: ValidationConfig =
                serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", config.display())))?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let report = random_validation(&cfg).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(Outcome {
                inputs: json!({"config": cfg}),
                ok: report.passed,
                results: serde_json::to_value(&report).expect("serializable"),
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eigen { .. } => "eigen",
        Command::Tau { .. } => "tau",
        Command::Nuf { .. } => "nuf",
        Command::CheckP { .. } => "check-p",
        Command::Theorem { .. } => "theorem",
        Command::Reproduce => "reproduce",
        Command::Validate { .. } => "validate",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = match run(&cli.command, cli.seed) {
        Ok(o) => o,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(3);
        }
    };
    let seed = match &cli.command {
        Command::Validate { .. } => outcome.inputs["config"]["seed"].as_u64().unwrap_or(0),
        _ => cli.seed.unwrap_or(0),
    };
    let mut report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command_name(&cli.command),
        "version": env!("CARGO_PKG_VERSION"),
        "seed": seed,
        "inputs": outcome.inputs,
        "results": outcome.results,
    });
    if !cli.no_timing {
        report["timing"] = json!({"elapsed_ms": start.elapsed().as_secs_f64() * 1e3});
    }
    let text = render(&report, cli.format);
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(3);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
