mod crosscheck;
mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use plat4::cobordism::build_filling;
use plat4::tuple::PlatTuple;

#[derive(Parser)]
#[command(
    name = "plat4",
    version,
    about = "Invariants, fillability and filling transcripts for 4-plat fronts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant and fillability report for one tuple.
    Analyze {
        /// Band tuple, e.g. "[3,(6,2),2,(2,0),4]".
        tuple: String,
        /// Machine-readable JSON output (the default).
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Human-readable text output.
        #[arg(long)]
        text: bool,
        /// Skip the filling and positivity transcripts.
        #[arg(long)]
        no_transcripts: bool,
    },
    /// Enumerate all tuples up to a crossing bound and cross-check every
    /// claim; exits nonzero if any tuple is inconsistent.
    Crosscheck {
        /// Total crossing bound (at least 1).
        max_crossings: u32,
        /// Worker threads; defaults to PLAT4_WORKERS or all cores.
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Draw the front, or a filling transcript frame by frame, as SVG.
    Render {
        /// Band tuple to draw.
        tuple: String,
        /// Output path.
        #[arg(long)]
        svg: PathBuf,
        /// Render the filling transcript, one frame per move.
        #[arg(long)]
        transcript: bool,
    },
}

fn parse_tuple(text: &str) -> Result<PlatTuple> {
    text.parse::<PlatTuple>().map_err(|e| anyhow!("{e}"))
}

fn worker_count(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("PLAT4_WORKERS").ok().and_then(|v| v.parse().ok())
    })
    .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    .max(1)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { tuple, text, no_transcripts, .. } => {
            let tuple = parse_tuple(&tuple)?;
            let report = report::analyze(&tuple, !no_transcripts)?;
            if text {
                print!("{}", report::to_text(&report));
            } else {
                println!("{}", report::to_json(&report));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Crosscheck { max_crossings, parallel } => {
            if max_crossings == 0 {
                return Err(anyhow!("max_crossings must be at least 1"));
            }
            let summary = crosscheck::run(max_crossings, worker_count(parallel));
            println!(
                "checked {} tuples up to {} crossings: {} knots ({} fillable, {} unfillable), {} links",
                summary.tuples,
                max_crossings,
                summary.knots,
                summary.fillable,
                summary.unfillable,
                summary.links
            );
            if summary.outcomes_with_issues.is_empty() {
                println!("0 discrepancies");
                Ok(ExitCode::SUCCESS)
            } else {
                let total: usize =
                    summary.outcomes_with_issues.iter().map(|o| o.issues.len()).sum();
                println!("{total} discrepancies:");
                for outcome in &summary.outcomes_with_issues {
                    for issue in &outcome.issues {
                        println!("  {}: {issue}", outcome.tuple);
                    }
                }
                Ok(ExitCode::from(2))
            }
        }
        Command::Render { tuple, svg, transcript } => {
            let tuple = parse_tuple(&tuple)?;
            let contents = if transcript {
                let filling = build_filling(&tuple).map_err(|e| anyhow!("{e}"))?;
                svg::transcript_svg(&filling)
            } else {
                svg::front_svg(&tuple)
            };
            std::fs::write(&svg, contents)
                .with_context(|| format!("writing {}", svg.display()))?;
            println!("wrote {}", svg.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage and parse problems exit 1; --help and --version exit 0.
            let _ = e.print();
            return if e.use_stderr() { ExitCode::FAILURE } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
