mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::output::{Alphabet, Format, Output};

#[derive(Debug, Parser)]
#[command(
    name = "sturmian",
    version,
    about = "Central words, Christoffel words, fraction trees and Stern's sequence"
)]
struct Cli {
    /// Output format; csv is only offered by tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Letters used when printing words. Input accepts either.
    #[arg(long, global = true, value_enum, default_value_t = Alphabet::Ab)]
    alphabet: Alphabet,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Iterated palindromic closure ψ(v) of a directive word.
    Psi {
        /// Directive word (use `eps` for the empty word).
        word: String,
        /// Refuse results longer than this many letters.
        #[arg(long, default_value_t = sturmian::palindrome::DEFAULT_PSI_BUDGET)]
        budget: usize,
    },
    /// Shortest palindrome having the word as a prefix.
    Closure { word: String },
    /// Directive word of a central word.
    Directive { word: String },
    /// Christoffel word from a slope p/q or from a directive word.
    Christoffel {
        /// Slope |w|_b / |w|_a.
        #[arg(
            long,
            conflicts_with = "directive",
            required_unless_present = "directive"
        )]
        slope: Option<String>,
        /// Directive word v of aψ(v)b.
        #[arg(long)]
        directive: Option<String>,
    },
    /// Stern's diatomic sequence s(n).
    Stern {
        n: String,
        #[arg(long, value_enum, default_value_t = SternMethod::Recurrence)]
        method: SternMethod,
    },
    /// Sorted occurrences of b(ab)* in bwb and the resulting marker word.
    Occ { word: String },
    /// Node of the Raney and Stern-Brocot trees.
    Tree {
        /// Path from the root, as a word.
        #[arg(required_unless_present = "fraction", conflicts_with = "fraction")]
        path: Option<String>,
        /// Locate the node carrying this label instead.
        #[arg(long)]
        fraction: Option<String>,
        #[arg(long, value_enum, default_value_t = FlavorArg::Raney)]
        flavor: FlavorArg,
    },
    /// Length distribution of Christoffel words of order k.
    Dist {
        k: u32,
        /// Enumerate half the directives and use complement symmetry.
        #[arg(long)]
        symmetry: bool,
        /// Largest order accepted.
        #[arg(long, default_value_t = sturmian::distribution::DEFAULT_MAX_ORDER)]
        max_order: u32,
    },
    /// Replay the identity checks and the published tables.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_k: u32,
        #[arg(long, default_value_t = 4096)]
        max_n: u64,
        /// Include the distribution table rows up to order 22.
        #[arg(long)]
        extended: bool,
        /// Run only the named check.
        #[arg(long)]
        check: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SternMethod {
    All,
    Recurrence,
    Christoffel,
    Subwords,
    Zeta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Raney,
    Sternbrocot,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut out = Output::new(cli.format, cli.alphabet);
    let result = match cli.command {
        Command::Psi { word, budget } => commands::psi(&mut out, &word, budget),
        Command::Closure { word } => commands::closure(&mut out, &word),
        Command::Directive { word } => commands::directive(&mut out, &word),
        Command::Christoffel { slope, directive } => {
            commands::christoffel(&mut out, slope.as_deref(), directive.as_deref())
        }
        Command::Stern { n, method } => commands::stern(&mut out, &n, method),
        Command::Occ { word } => commands::occ(&mut out, &word),
        Command::Tree {
            path,
            fraction,
            flavor,
        } => commands::tree(&mut out, path.as_deref(), fraction.as_deref(), flavor),
        Command::Dist {
            k,
            symmetry,
            max_order,
        } => commands::dist(&mut out, k, symmetry, max_order),
        Command::Verify {
            max_k,
            max_n,
            extended,
            check,
        } => commands::verify(&mut out, max_k, max_n, extended, check.as_deref()),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
