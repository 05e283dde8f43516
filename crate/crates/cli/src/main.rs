use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod render;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Example {
    Heisenberg,
    Solvable,
}

#[derive(Debug, Parser)]
#[command(name = "skewtor", version, about = "Intrinsic torsion types of G-structures, computed exactly")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "markdown", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the case studies and matrix models.
    Cases,
    /// Decomposition tables of 𝔪, ℝⁿ⊗𝔪 and Λ³ℝⁿ for a case study.
    Decompose { case: String },
    /// Torsion admissibility report, with a Θ₁ rank check where a matrix model exists.
    Torsion { case: String },
    /// Rank of Θ₁ for a matrix model.
    ThetaRank { model: String },
    /// Solve Θ₁(T) = −2Γ for Γ read from a file of `dir i j p/q` lines.
    SolveTorsion {
        model: String,
        #[arg(long)]
        gamma: PathBuf,
    },
    /// Isotropy algebra of a torsion form inside 𝔤.
    Isotropy {
        /// One of the built-in G₂ examples.
        #[arg(long, value_enum, conflicts_with_all = ["model", "torsion"])]
        example: Option<Example>,
        /// Matrix model whose 𝔤 is searched.
        #[arg(long, requires = "torsion")]
        model: Option<String>,
        /// File of `i j k p/q` lines.
        #[arg(long, requires = "model")]
        torsion: Option<PathBuf>,
    },
    /// Replay of the classification argument.
    Classify {
        /// Largest rank parameter in the classical-family scans.
        #[arg(long, default_value_t = 12)]
        max_m: u64,
    },
    /// Formal-character identities and Weyl-dimension cross-checks for a case study.
    CheckCharacters { case: String },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let echo: Vec<String> = argv.into_iter().skip(1).collect();
    let result = match cli.command {
        Command::Cases => commands::cases(),
        Command::Decompose { case } => commands::decompose(&case),
        Command::Torsion { case } => commands::torsion(&case),
        Command::ThetaRank { model } => commands::theta_rank(&model),
        Command::SolveTorsion { model, gamma } => commands::solve_torsion(&model, &gamma),
        Command::Isotropy {
            example,
            model,
            torsion,
        } => match (example, model, torsion) {
            (Some(e), _, _) => commands::isotropy_example(e),
            (None, Some(m), Some(t)) => commands::isotropy_model(&m, &t),
            _ => Err(commands::CliError::Usage(
                "isotropy needs --example or both --model and --torsion".into(),
            )),
        },
        Command::Classify { max_m } => commands::classify(max_m),
        Command::CheckCharacters { case } => commands::check_characters(&case),
    };
    match result {
        Ok(payload) => {
            let report = render::Report::new(echo, payload);
            print!("{}", report.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
