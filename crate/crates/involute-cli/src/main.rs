//! Command-line front end: parses polynomial-system files or generates
//! benchmark families, runs the basis algorithms with configurable
//! criteria, prints a statistics table, and optionally verifies every
//! output against the conventional Buchberger oracle.

use std::path::PathBuf;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use involute::engine::{self, BasisRun, CriteriaConfig};
use involute::oracle;
use involute::report::{BenchReport, ReportRow};
use involute::sysfile;
use involute::systems::generate_cyclic;
use involute::verify;
use involute::{MonomialOrder, Polynomial};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "involute", version, about = "Janet involutive bases over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute involutive bases for one or more systems.
    Compute(ComputeArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// System file(s) to read (repeatable).
    #[arg(long = "input", value_name = "FILE")]
    inputs: Vec<PathBuf>,

    /// Generated system(s), currently `cyclic:<n>` (repeatable).
    #[arg(long = "generate", value_name = "FAMILY:N")]
    generate: Vec<String>,

    /// Algorithm to run: invbasis, gerdt, vargerdt, or all.
    #[arg(long, default_value = "vargerdt")]
    algorithm: String,

    /// Comma-separated subset of c1,c2,c3,c4,rewritten, or `none`.
    /// Defaults to `c1,c2,rewritten`.
    #[arg(long, value_name = "LIST")]
    criteria: Option<String>,

    /// Override the monomial ordering (`lex` or `degrevlex`).
    #[arg(long, value_name = "NAME")]
    order: Option<String>,

    /// Check every output basis against the Buchberger oracle.
    #[arg(long)]
    verify: bool,

    /// Tail-autoreduce each basis before reporting and verifying.
    #[arg(long = "autoreduce-tail")]
    autoreduce_tail: bool,

    /// Write the report rows as JSON to this path.
    #[arg(long = "stats-json", value_name = "PATH")]
    stats_json: Option<PathBuf>,

    /// Per-(system, algorithm) wall-clock budget in seconds.
    #[arg(long = "time-limit", value_name = "SECONDS")]
    time_limit: Option<f64>,

    /// Input preprocessing; only `autoreduce` is recognized.
    #[arg(long, value_name = "MODE")]
    preprocess: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Algorithm {
    InvBasis,
    Gerdt,
    VarGerdt,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::InvBasis => "invbasis",
            Algorithm::Gerdt => "gerdt",
            Algorithm::VarGerdt => "vargerdt",
        }
    }
}

fn parse_algorithms(s: &str) -> Result<Vec<Algorithm>> {
    match s {
        "invbasis" => Ok(vec![Algorithm::InvBasis]),
        "gerdt" => Ok(vec![Algorithm::Gerdt]),
        "vargerdt" => Ok(vec![Algorithm::VarGerdt]),
        "all" => Ok(vec![
            Algorithm::InvBasis,
            Algorithm::Gerdt,
            Algorithm::VarGerdt,
        ]),
        other => bail!("unknown algorithm `{other}` (expected invbasis, gerdt, vargerdt, all)"),
    }
}

fn parse_criteria(s: Option<&str>) -> Result<CriteriaConfig> {
    let Some(s) = s else {
        return Ok(CriteriaConfig::c1_c2());
    };
    if s == "none" {
        return Ok(CriteriaConfig::none());
    }
    let mut cfg = CriteriaConfig::none();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match tok {
            "c1" => cfg.c1 = true,
            "c2" => cfg.c2 = true,
            "c3" => cfg.c3 = true,
            "c4" => cfg.c4 = true,
            "rewritten" => cfg.rewritten = true,
            other => bail!("unknown criteria token `{other}`"),
        }
    }
    Ok(cfg)
}

struct Job {
    system_name: String,
    polynomials: Vec<Polynomial>,
    algorithm: Algorithm,
}

struct JobResult {
    row: ReportRow,
    error: Option<String>,
}

fn load_systems(args: &ComputeArgs) -> Result<Vec<(String, Vec<Polynomial>)>> {
    let order_override: Option<MonomialOrder> = match &args.order {
        Some(name) => Some(name.parse().map_err(anyhow::Error::msg)?),
        None => None,
    };

    let mut systems = Vec::new();
    for path in &args.inputs {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let parsed = sysfile::parse_system(&text)
            .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let polys = match order_override {
            Some(o) if o != parsed.order => {
                parsed.polynomials.iter().map(|p| p.reordered(o)).collect()
            }
            _ => parsed.polynomials,
        };
        systems.push((name, polys));
    }
    for spec in &args.generate {
        let Some(("cyclic", n)) = spec.split_once(':') else {
            bail!("unknown generator `{spec}` (expected cyclic:<n>)");
        };
        let n: usize = n
            .parse()
            .with_context(|| format!("bad generator size in `{spec}`"))?;
        if n < 2 {
            bail!("cyclic systems need n >= 2");
        }
        let order = order_override.unwrap_or(MonomialOrder::DegRevLex);
        let (_, polys) = generate_cyclic(n, order);
        systems.push((format!("cyclic{n}"), polys));
    }
    if systems.is_empty() {
        bail!("nothing to do: pass --input and/or --generate");
    }
    Ok(systems)
}

fn run_job(job: &Job, cfg: &CriteriaConfig, args: &ComputeArgs) -> JobResult {
    let budget = args.time_limit.map(Duration::from_secs_f64);
    let outcome: Result<BasisRun, engine::EngineTimeout> = match job.algorithm {
        Algorithm::InvBasis => engine::invbasis(&job.polynomials, budget),
        Algorithm::Gerdt => engine::gerdt(&job.polynomials, cfg, budget),
        Algorithm::VarGerdt => engine::vargerdt(&job.polynomials, cfg, budget),
    };

    match outcome {
        Ok(mut run) => {
            if args.autoreduce_tail {
                run.basis = engine::tail_autoreduce(&run.basis);
            }
            let verified = args
                .verify
                .then(|| verify::verify_involutive_output(&job.polynomials, &run.basis));
            let error = match &verified {
                Some(v) if !v.is_ok() => Some(format!(
                    "verification failed for {} / {}: {v:?}",
                    job.system_name,
                    job.algorithm.name()
                )),
                _ => None,
            };
            JobResult {
                row: ReportRow {
                    system: job.system_name.clone(),
                    algorithm: job.algorithm.name().to_string(),
                    stats: run.stats,
                    timed_out: false,
                    verified,
                },
                error,
            }
        }
        Err(timeout) => JobResult {
            row: ReportRow {
                system: job.system_name.clone(),
                algorithm: job.algorithm.name().to_string(),
                stats: timeout.stats,
                timed_out: true,
                verified: None,
            },
            error: Some(format!(
                "time limit exceeded for {} / {}",
                job.system_name,
                job.algorithm.name()
            )),
        },
    }
}

/// Peak resident set size of this process in megabytes, if the kernel
/// exposes it. Best-effort; process-wide, not per run.
fn peak_rss_mb() -> Option<f64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: f64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb / 1024.0)
}

fn print_table(report: &BenchReport) {
    println!(
        "{:<12} {:<9} {:>10} {:>9} {:>6} {:>5} {:>5} {:>5} {:>5} {:>4} {:>5} {:>5}  {}",
        "system", "algorithm", "time_ms", "memo_mb", "reds", "c1", "c2", "c3", "c4", "R", "deg",
        "size", "verified"
    );
    let memo = peak_rss_mb();
    for row in &report.rows {
        let s = &row.stats;
        let verdict = if row.timed_out {
            "timeout".to_string()
        } else {
            match &row.verified {
                None => "-".to_string(),
                Some(v) if v.is_ok() => "ok".to_string(),
                Some(v) => format!(
                    "FAIL[t5={} sp={} id={} hm={}]",
                    v.theorem5, v.spoly, v.ideal_equal, v.heads_minimal
                ),
            }
        };
        println!(
            "{:<12} {:<9} {:>10.1} {:>9} {:>6} {:>5} {:>5} {:>5} {:>5} {:>4} {:>5} {:>5}  {}",
            row.system,
            row.algorithm,
            s.cpu_ms,
            memo.map_or_else(|| "-".to_string(), |m| format!("{m:.1}")),
            s.zero_reductions,
            s.c1,
            s.c2,
            s.c3,
            s.c4,
            s.rewritten,
            s.max_degree,
            s.basis_size,
            verdict
        );
    }
}

fn compute(args: &ComputeArgs) -> Result<i32> {
    let algorithms = parse_algorithms(&args.algorithm)?;
    let cfg = parse_criteria(args.criteria.as_deref())?;
    if let Some(mode) = &args.preprocess {
        if mode != "autoreduce" {
            bail!("unknown preprocess mode `{mode}` (expected autoreduce)");
        }
    }

    let mut systems = load_systems(args)?;
    if args.preprocess.as_deref() == Some("autoreduce") {
        for (_, polys) in &mut systems {
            *polys = oracle::autoreduce(polys);
        }
    }

    let jobs: Vec<Job> = systems
        .iter()
        .flat_map(|(name, polys)| {
            algorithms.iter().map(|&algorithm| Job {
                system_name: name.clone(),
                polynomials: polys.clone(),
                algorithm,
            })
        })
        .collect();

    // systems are independent; job results are assembled in input order
    #[cfg(feature = "parallel")]
    let results: Vec<JobResult> = jobs.par_iter().map(|j| run_job(j, &cfg, args)).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<JobResult> = jobs.iter().map(|j| run_job(j, &cfg, args)).collect();

    let mut report = BenchReport::default();
    let mut failures = Vec::new();
    for r in results {
        if let Some(e) = r.error {
            failures.push(e);
        }
        report.rows.push(r.row);
    }

    print_table(&report);

    if let Some(path) = &args.stats_json {
        let json = serde_json::to_string_pretty(&report)?;
        std::fs::write(path, json)
            .with_context(|| format!("cannot write {}", path.display()))?;
    }

    for f in &failures {
        eprintln!("error: {f}");
    }
    Ok(if failures.is_empty() { 0 } else { 1 })
}

fn main() {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Compute(args) => match compute(args) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("error: {e:#}");
                1
            }
        },
    };
    std::process::exit(code);
}
