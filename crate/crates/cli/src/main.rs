use clap::{Parser, Subcommand, ValueEnum};
use lagcheck::registry::{registry, Ctx};
use lagcheck::{parse_range, run_ids, sweep, write_sweep_csv};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lagcheck", version, about = "Numerical verification of Lagrangian constructions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(clap::Args)]
struct Common {
    /// Random samples per sampled check.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Root seed; each check derives its own stream.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Override the tolerance of checks with a numeric tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Data-parallel evaluation.
    #[arg(long, value_enum, default_value = "on")]
    parallel: OnOff,
}

impl Common {
    fn ctx(&self) -> Ctx {
        Ctx { samples: self.samples, seed: self.seed, tol: self.tol, parallel: matches!(self.parallel, OnOff::On) }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run checks by id (`base?key=value&...`) or `all`.
    Run {
        #[arg(required = true)]
        ids: Vec<String>,
        #[command(flatten)]
        common: Common,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Evaluate a sweepable check over a parameter range and write CSV.
    Sweep {
        id: String,
        #[arg(long)]
        param: String,
        /// Inclusive `start:stop:step`.
        #[arg(long)]
        range: String,
        /// CSV output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// List registered checks.
    List,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.cmd {
        Cmd::List => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            for d in registry() {
                let params: Vec<String> = d.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let sweep = d.sweep.map(|(p, _)| format!(" [sweep {p}]")).unwrap_or_default();
                let line = format!("{:<28} {:<12} {}{}{}", d.id, d.module, d.description, if params.is_empty() { String::new() } else { format!(" ({})", params.join(", ")) }, sweep);
                if writeln!(out, "{line}").is_err() {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Cmd::Run { ids, common, json } => {
            let report = match run_ids(&common.ctx(), &ids) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            for c in &report.checks {
                println!("{:<5} {:<40} metric={:.3e} tol={:.1e} samples={} {}ms  {}", c.status.label(), c.id, c.metric, c.tolerance, c.samples, c.elapsed_ms, c.notes);
            }
            if let Some(path) = json {
                if let Err(e) = std::fs::write(&path, report.to_json()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::Sweep { id, param, range, out, common } => {
            let grid = match parse_range(&range) {
                Ok(g) => g,
                Err(e) => return usage(e),
            };
            let rows = match sweep(&common.ctx(), &id, &param, &grid) {
                Ok(Ok(r)) => r,
                Ok(Err(e)) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(1);
                }
                Err(e) => return usage(e),
            };
            let res = match out {
                Some(p) => std::fs::File::create(&p).map_err(anyhow::Error::from).and_then(|f| write_sweep_csv(f, &rows)),
                None => write_sweep_csv(std::io::stdout().lock(), &rows),
            };
            match res {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
