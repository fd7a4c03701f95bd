use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use exotic4::fpgroup::Effort;
use exotic4_cli::{Options, Report, RunError, Runner};
use rayon::prelude::*;
use serde_json::Value as Json;

#[derive(Parser)]
#[command(name = "exotic4", about = "Run construction scripts and report on them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Common {
    /// Maximum number of cosets in coset enumeration.
    #[arg(long, default_value_t = 1_000_000)]
    effort: usize,
    /// Node expansions allowed when deriving relations.
    #[arg(long, default_value_t = 10_000)]
    rewrite_steps: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    report: Format,
    /// Scripts evaluated in parallel.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Include per-step wall-clock times (reports are then not reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or more scripts.
    Run {
        #[arg(required = true)]
        scripts: Vec<PathBuf>,
        /// Override a script parameter, as `name=value` (value parsed as JSON when possible).
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, Json)>,
        #[command(flatten)]
        common: Common,
    },
    /// Run every script in the scripts directory.
    VerifyAll {
        #[arg(long, env = "EXOTIC4_SCRIPTS_DIR")]
        dir: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_param(s: &str) -> Result<(String, Json), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("`{s}` is not name=value"))?;
    let v = serde_json::from_str(v).unwrap_or_else(|_| Json::String(v.to_string()));
    Ok((k.to_string(), v))
}

fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scripts")
}

fn corpus(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    v.sort();
    Ok(v)
}

fn run_all(paths: &[PathBuf], params: &BTreeMap<String, Json>, common: &Common) -> ExitCode {
    let options = Options {
        effort: Effort {
            cosets: exotic4::fpgroup::Limits { max_cosets: common.effort, ..Default::default() },
            rewrite_steps: common.rewrite_steps,
        },
        timing: common.timing,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(common.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let results: Vec<Result<Report, RunError>> =
        pool.install(|| paths.par_iter().map(|p| Runner::new(options).run_file_with(p, params)).collect());
    let mut code = 0u8;
    let mut reports = Vec::new();
    for r in &results {
        match r {
            Ok(rep) => {
                let c = rep.status_code();
                code = code.max(c);
                reports.push(rep);
            }
            Err(e) => {
                eprintln!("error: {e}");
                code = 4;
            }
        }
    }
    match common.report {
        Format::Json if reports.len() == 1 => println!("{}", reports[0].to_json()),
        Format::Json => {
            let all: Vec<Json> = reports.iter().map(|r| serde_json::to_value(r).expect("report serializes")).collect();
            println!("{}", serde_json::to_string_pretty(&all).expect("reports serialize"));
        }
        Format::Text => {
            for r in &reports {
                print!("{}", r.to_text());
            }
        }
    }
    // load errors outrank inconsistencies, which outrank failed expectations
    ExitCode::from(match code {
        4 => 2,
        2 => 3,
        c => c,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { scripts, params, common } => run_all(&scripts, &params.into_iter().collect(), &common),
        Command::VerifyAll { dir, common } => {
            let dir = dir.unwrap_or_else(default_dir);
            match corpus(&dir) {
                Ok(paths) if !paths.is_empty() => run_all(&paths, &BTreeMap::new(), &common),
                Ok(_) => {
                    eprintln!("error: no scripts in {}", dir.display());
                    ExitCode::from(2)
                }
                Err(e) => {
                    eprintln!("error: {}: {e}", dir.display());
                    ExitCode::from(2)
                }
            }
        }
    }
}
