//! Command-line front end: JSON (default) or table output, exit code 0 on
//! success, 1 on a domain error, 2 on a usage error.

mod commands;
mod render;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use projquant::rational::{self, Rational};
use projquant::{IrrepLabel, YoungDiagram};

#[derive(Parser, Debug)]
#[command(name = "projquant", version, about = "Representation theory and flat-model checks for projectively equivariant quantization")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "PROJQUANT_FORMAT", default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_diagram(s: &str) -> Result<YoungDiagram, String> {
    s.parse().map_err(|e: projquant::Error| e.to_string())
}

fn parse_label(s: &str) -> Result<IrrepLabel, String> {
    s.parse().map_err(|e: projquant::Error| e.to_string())
}

/// An irreducible given either as `--label "D=..; m=..; n=..; delta=.."` or
/// through the individual flags.
#[derive(Args, Debug, Clone)]
pub struct LabelArgs {
    /// Full label text, as printed by this tool.
    #[arg(long, value_parser = parse_label, conflicts_with_all = ["m", "diagram", "n", "delta"])]
    label: Option<IrrepLabel>,
    /// Rank m.
    #[arg(long)]
    m: Option<usize>,
    /// Row lengths, e.g. `3,2,2`; `0` is the empty diagram.
    #[arg(long, value_parser = parse_diagram)]
    diagram: Option<YoungDiagram>,
    /// Determinant twist n.
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    /// Weight δ as `p/q`.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    delta: Option<Rational>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Casimir eigenvalue as a polynomial in the weight, and its value at δ.
    Eigenvalue(LabelArgs),
    /// Resonant weights of an irreducible.
    Resonances {
        #[command(flatten)]
        label: LabelArgs,
        /// Report resonances relative to this base weight.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        base: Option<Rational>,
    },
    /// Components of the restriction from GL(m+1) to GL(m); `--m` is the smaller rank.
    Branch(LabelArgs),
    /// Decomposition of V1* ⊗ V2 ⊗ S^k, or of V1 ⊗ V2 with `--product`.
    Decompose {
        #[arg(long, value_parser = parse_label)]
        v1: IrrepLabel,
        #[arg(long, value_parser = parse_label)]
        v2: IrrepLabel,
        #[arg(short = 'k', long, default_value_t = 0)]
        k: u32,
        /// Plain tensor product instead of the symbol representation.
        #[arg(long, conflicts_with = "k")]
        product: bool,
    },
    /// Coefficients of the equivariant quantization from λ- to μ-densities.
    Quantize {
        #[arg(long)]
        m: usize,
        #[arg(short = 'k', long)]
        k: u32,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        mu: Rational,
        /// Report an object with the coefficients as functions of δ and the singular weights.
        #[arg(long)]
        symbolic: bool,
    },
    /// Compares the flat-model Casimir operator with the eigenvalue formula.
    CasimirCheck {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coefficient degree of the random sections.
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Coefficient DAG of the eigenvector lift through the components of tilde(V).
    LiftPlan(LabelArgs),
}

impl LabelArgs {
    /// The label, with `--m` shifted by `rank_offset`. Missing or invalid
    /// flags are usage errors.
    fn resolve(&self, rank_offset: usize) -> IrrepLabel {
        if let Some(label) = &self.label {
            return label.clone();
        }
        let (Some(m), Some(diagram)) = (self.m, &self.diagram) else {
            Cli::command()
                .error(ErrorKind::MissingRequiredArgument, "either --label or both --m and --diagram are required")
                .exit();
        };
        let weight = self.delta.clone().unwrap_or_else(Rational::zero);
        IrrepLabel::new(diagram.clone(), m + rank_offset, self.n.unwrap_or(0), weight)
            .unwrap_or_else(|e| Cli::command().error(ErrorKind::ValueValidation, format!("--diagram/--m: {e}")).exit())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eigenvalue(l) => commands::eigenvalue(&l.resolve(0)),
        Command::Resonances { label, base } => commands::resonances(&label.resolve(0), base.as_ref()),
        Command::Branch(l) => commands::branch(&l.resolve(1)),
        Command::Decompose { v1, v2, k, product } => commands::decompose(&v1, &v2, k, product),
        Command::Quantize { m, k, lambda, mu, symbolic } => commands::quantize(m, k, &lambda, &mu, symbolic),
        Command::CasimirCheck { label, trials, seed, max_degree } => {
            commands::casimir_check(&label.resolve(0), trials, seed, max_degree)
        }
        Command::LiftPlan(l) => commands::lift_plan(&l.resolve(0)),
    };
    match result {
        Ok(value) => {
            println!("{}", render::render(&value, cli.format));
            ExitCode::SUCCESS
        }
        Err(failure) => {
            println!("{}", render::render(&failure.to_json(), cli.format));
            ExitCode::from(1)
        }
    }
}
