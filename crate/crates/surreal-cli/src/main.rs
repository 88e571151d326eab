use std::io;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use surreal_cli::run::{self, TreeFormat};

/// Exact arithmetic on finitely born surreal numbers.
#[derive(Parser)]
#[command(name = "surreal", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression; print its canonical cut, value, birthday, and signs.
    Eval {
        /// Expression, e.g. '{0|1} * 2' or 'sign(3/4)'.
        expr: String,
        /// Emit one JSON object instead of labeled lines.
        #[arg(long)]
        json: bool,
    },
    /// Generate the day-by-day tree of canonical values.
    Tree {
        /// Last day to generate.
        #[arg(long, default_value_t = 2)]
        days: u32,
        /// Output format: line-delimited JSON or DOT.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Re-verify the structural conditions; exit 1 on any violation.
        #[arg(long)]
        check: bool,
    },
    /// Check algebraic and order laws over a bounded corpus.
    Laws {
        /// Run a single law by name instead of the whole registry.
        #[arg(long)]
        law: Option<String>,
        /// Corpus bound: all canonical values born by this day.
        #[arg(long = "max-day", default_value_t = 2)]
        max_day: u32,
        /// Restrict the corpus to positive values.
        #[arg(long)]
        positive: bool,
    },
    /// Evaluate expressions interactively; :quit exits.
    Repl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

impl From<Format> for TreeFormat {
    fn from(f: Format) -> TreeFormat {
        match f {
            Format::Json => TreeFormat::Json,
            Format::Dot => TreeFormat::Dot,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run::budget_from_env().and_then(|budget| {
        let mut out = io::stdout().lock();
        match cli.command {
            Command::Eval { expr, json } => run::eval_cmd(budget, &expr, json, &mut out),
            Command::Tree { days, format, check } => {
                run::tree_cmd(budget, days, format.into(), check, &mut out)
            }
            Command::Laws { law, max_day, positive } => {
                run::laws_cmd(budget, law.as_deref(), max_day, positive, &mut out)
            }
            Command::Repl => {
                let mut input = io::stdin().lock();
                run::repl_cmd(budget, &mut input, &mut out)
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(u8::try_from(failure.code).unwrap_or(1))
        }
    }
}
