mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "vassiliev",
    version,
    about = "Exact gl and so weight systems, Brauer algebra and dimension tables"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Limit on internal vertices before the STU expansion refuses to run.
    #[arg(long, global = true, value_name = "N")]
    pub max_vertices: Option<usize>,
    /// Directory for cached dimension reports.
    #[arg(long, global = true, env = "VASSILIEV_CACHE", value_name = "DIR")]
    pub cache: Option<std::path::PathBuf>,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    /// Output format. csv is accepted by `dims` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Lift the size limit on chord enumeration.
    #[arg(long, global = true)]
    pub no_guard: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlavorArg {
    Gl,
    So,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a diagram file.
    Eval {
        #[arg(long = "in", value_name = "FILE")]
        input: std::path::PathBuf,
        #[arg(long, value_enum, default_value_t = FlavorArg::Both)]
        flavor: FlavorArg,
        /// Skip deframing.
        #[arg(long)]
        framed: bool,
    },
    /// Build a named diagram, combination or list.
    Family {
        #[arg(long)]
        spec: String,
        /// Write the diagram in the JSON file format.
        #[arg(long, value_name = "FILE")]
        out: Option<std::path::PathBuf>,
        /// Print deframed values instead of a description.
        #[arg(long, value_enum)]
        eval: Option<FlavorArg>,
    },
    /// Evaluate an expression in the Brauer algebra.
    Brauer {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        trace: bool,
    },
    /// Dimensions of the spans of the weight systems on chord diagrams.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
    },
    /// Rank of the values on a list of family elements.
    Rank {
        /// Specs separated by `;`, lists allowed.
        #[arg(long)]
        list: String,
        #[arg(long, default_value = "both")]
        projection: vassiliev_core::Projection,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// List or count chord diagrams.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        count: bool,
    },
}

fn wants_json(args: &[String]) -> bool {
    args.windows(2)
        .any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json")
}

fn report(failure: &Failure, json_errors: bool) -> ExitCode {
    let (kind, message, code) = match failure {
        Failure::Usage(m) => ("usage", m.as_str(), 2),
        Failure::Input(m) => ("input", m.as_str(), 3),
        Failure::Verification => return ExitCode::from(1),
    };
    if json_errors {
        println!(
            "{}",
            json!({ "error": { "kind": kind, "message": message } })
        );
    } else {
        eprintln!("error: {message}");
    }
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) if wants_json(&args) => {
            let text = e.to_string();
            let msg = text
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ");
            return report(&Failure::Usage(msg.to_string()), true);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    let json_errors = cli.global.format == Format::Json;
    match commands::run(&cli.global, cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => report(&f, json_errors),
    }
}
