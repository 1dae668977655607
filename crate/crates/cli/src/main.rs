//! Command-line front-end: graph generation, exact chi_f certificates,
//! lemma property suites, Monte Carlo runs, and bound reports.
//!
//! Machine-readable output goes to stdout, logs to stderr. Exit codes:
//! 0 success/consistent, 1 verification failure, 2 usage error,
//! 3 resource cap exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use fracsub::bounds::theorem_bounds;
use fracsub::error::Error;
use fracsub::graph::{complete_graph, cycle_graph, kneser_graph, mycielskian, Graph};
use fracsub::harness::{mc_lemma5, mc_theorem, McReport, SampleConfig, Verdict, DEFAULT_TIME_BUDGET_MS};
use fracsub::lp::{solve_chi_f_with_caps, DEFAULT_MIS_CAP};
use fracsub::ratio::parse_rational;
use fracsub::verify::run_lemma_suite;
use fracsub::{dimacs, indset};
use num::rational::BigRational;
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "fracsub", version, about = "Exact fractional chromatic numbers and random-subgraph bound verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum McMode {
    Theorem,
    Lemma5,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph and write it as DIMACS.
    Gen {
        /// complete:N | cycle:N | kneser:N:K | mycielski:<spec-or-file>
        #[arg(long)]
        gen: String,
        /// Output file; stdout when omitted.
        #[arg(long)]
        output: Option<String>,
    },
    /// Solve chi_f exactly and print the JSON certificate.
    Chif {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = indset::DEFAULT_MAXIMAL_CAP)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_MIS_CAP)]
        max_mis: usize,
    },
    /// Run the sparse/decomposition property suites with the dual weights.
    VerifyLemmas {
        #[command(flatten)]
        input: InputArgs,
        /// Sparseness parameter; defaults to the solved chi_f.
        #[arg(long)]
        s: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Test hook: corrupt the certificate before verification.
        #[arg(long, hide = true)]
        inject_corruption: bool,
    },
    /// Monte Carlo estimation of the theorem or bad-event probability.
    Mc {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        mode: McMode,
        /// Edge probability as an exact rational, e.g. 1/2.
        #[arg(long)]
        p: String,
        #[arg(long, default_value = "1")]
        c: String,
        /// Sparseness parameter for lemma5 mode; defaults to chi_f.
        #[arg(long)]
        s: Option<String>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use the corollary threshold and probability (c is ignored).
        #[arg(long)]
        corollary: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_TIME_BUDGET_MS)]
        time_budget_ms: u64,
    },
    /// Evaluate the closed-form thresholds and probability bounds.
    Bounds {
        #[arg(long)]
        t: String,
        #[arg(long)]
        p: String,
        #[arg(long, default_value = "1")]
        c: String,
    },
}

#[derive(clap::Args)]
struct InputArgs {
    /// DIMACS input file.
    #[arg(long, conflicts_with = "gen")]
    input: Option<String>,
    /// Generator spec, as in `gen --gen`.
    #[arg(long)]
    gen: Option<String>,
}

impl InputArgs {
    fn load(&self) -> Result<(Graph, String), Error> {
        match (&self.input, &self.gen) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)?;
                Ok((dimacs::parse(&text)?, path.clone()))
            }
            (None, Some(spec)) => Ok((build_spec(spec)?, spec.clone())),
            _ => Err(Error::InvalidArgument("exactly one of --input / --gen required".into())),
        }
    }
}

fn build_spec(spec: &str) -> Result<Graph, Error> {
    let mut parts = spec.splitn(2, ':');
    let kind = parts.next().unwrap_or_default();
    let rest = parts.next();
    let num = |s: Option<&str>| -> Result<usize, Error> {
        s.ok_or_else(|| Error::InvalidArgument(format!("malformed spec '{spec}'")))?
            .parse()
            .map_err(|e| Error::InvalidArgument(format!("malformed spec '{spec}': {e}")))
    };
    match kind {
        "complete" => complete_graph(num(rest)?),
        "cycle" => cycle_graph(num(rest)?),
        "kneser" => {
            let rest = rest.ok_or_else(|| Error::InvalidArgument(format!("malformed spec '{spec}'")))?;
            let (n, k) = rest
                .split_once(':')
                .ok_or_else(|| Error::InvalidArgument(format!("malformed spec '{spec}'")))?;
            kneser_graph(num(Some(n))?, num(Some(k))?)
        }
        "mycielski" => {
            let rest = rest.ok_or_else(|| Error::InvalidArgument(format!("malformed spec '{spec}'")))?;
            let base = if rest.contains(':') || rest.chars().all(|c| c.is_ascii_alphanumeric()) {
                match build_spec(rest) {
                    Ok(g) => g,
                    Err(_) => dimacs::parse(&std::fs::read_to_string(rest)?)?,
                }
            } else {
                dimacs::parse(&std::fs::read_to_string(rest)?)?
            };
            mycielskian(&base)
        }
        _ => Err(Error::InvalidArgument(format!("unknown generator '{spec}'"))),
    }
}

fn parse_pos_rational(label: &str, s: &str) -> Result<BigRational, Error> {
    parse_rational(s).map_err(|e| Error::InvalidArgument(format!("bad {label}: {e}")))
}

fn run() -> Result<i32, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { gen, output } => {
            let g = build_spec(&gen)?;
            let text = dimacs::write(&g);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Chif { input, max_n, max_mis } => {
            let (g, label) = input.load()?;
            eprintln!("solving chi_f for {label} (n = {}, m = {})", g.n(), g.edge_count());
            let cert = solve_chi_f_with_caps(&g, max_n, max_mis)?;
            println!("{}", serde_json::to_string_pretty(&cert.to_json()).unwrap());
            Ok(0)
        }
        Command::VerifyLemmas { input, s, trials, seed, inject_corruption } => {
            let (g, label) = input.load()?;
            let s = s.as_deref().map(|v| parse_pos_rational("--s", v)).transpose()?;
            let report = run_lemma_suite(&g, &label, s, trials, seed, inject_corruption)?;
            println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::Mc { input, mode, p, c, s, trials, seed, corollary, format, time_budget_ms } => {
            let (g, label) = input.load()?;
            let p = parse_pos_rational("--p", &p)?;
            let c = parse_pos_rational("--c", &c)?;
            let cfg = SampleConfig::new(p, seed, trials)?;
            let report: McReport = match mode {
                McMode::Theorem => mc_theorem(
                    &g,
                    &label,
                    &c,
                    &cfg,
                    corollary,
                    Duration::from_millis(time_budget_ms),
                )?,
                McMode::Lemma5 => {
                    let cert = fracsub::lp::solve_chi_f(&g)?;
                    let s = match s {
                        Some(v) => parse_pos_rational("--s", &v)?,
                        None => cert.value.clone(),
                    };
                    mc_lemma5(&g, &label, &cert.dual, &s, &c, &cfg)?
                }
            };
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap())
                }
                Format::Csv => {
                    println!("{}", McReport::csv_header());
                    println!("{}", report.to_csv_row());
                }
            }
            Ok(if report.verdict == Verdict::Inconsistent { 1 } else { 0 })
        }
        Command::Bounds { t, p, c } => {
            let t = parse_pos_rational("--t", &t)?;
            let p = parse_pos_rational("--p", &p)?;
            let c = parse_pos_rational("--c", &c)?;
            let report = theorem_bounds(&t, &p, &c)?;
            if !report.applicable {
                eprintln!("note: theorem hypothesis needs t >= 2; values computed anyway");
            }
            println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::CapExceeded(_) => 3,
                Error::InvalidArgument(_) | Error::Parse(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
