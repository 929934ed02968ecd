use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qdet_core::identitylab::lookup;

#[derive(Parser)]
#[command(name = "qdet-lab", version, about = "Exact verifier for determinant, Pfaffian and q-series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print every check id with a short description.
    List,
    /// Show how a check builds both sides and which parameters it samples.
    Explain { id: String },
    /// Run checks at sampled points and write a report.
    Run {
        /// Check ids, comma separated or repeated; `all` selects everything.
        #[arg(long = "check", value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        /// Smallest size (overrides per-check defaults together with --n-max).
        #[arg(long, requires = "n_max")]
        n_min: Option<i64>,
        #[arg(long, requires = "n_min")]
        n_max: Option<i64>,
        #[arg(long, default_value_t = 5)]
        trials: u32,
        #[arg(long, env = "QDETLAB_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::List => {
            print!("{}", qdet_lab::list());
            ExitCode::SUCCESS
        }
        Command::Explain { id } => match lookup(&id) {
            Some(spec) => {
                print!("{}", qdet_lab::explain(spec));
                ExitCode::SUCCESS
            }
            None => {
                eprintln!("error: unknown check id `{id}`");
                ExitCode::from(EXIT_USAGE)
            }
        },
        Command::Run { checks, n_min, n_max, trials, seed, format, output } => {
            let ids: Vec<&str> = checks.iter().map(String::as_str).collect();
            let range = n_min.zip(n_max);
            let report = match qdet_lab::run(&ids, range, trials, seed) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let body = match format {
                Format::Text => qdet_lab::to_text(&report),
                Format::Json => qdet_lab::to_json(&report),
            };
            let written = match &output {
                Some(path) => std::fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display())),
                None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(EXIT_FAIL);
            }
            if report.summary.evidence_fail > 0 {
                eprintln!(
                    "warning: {} evidence-mode result(s) disagree; see the report for witnesses",
                    report.summary.evidence_fail
                );
            }
            if report.summary.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
    }
}
