use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cmtype",
    version,
    about = "Graded invariants and Cohen-Macaulay representation type of k[x]/I"
)]
pub struct Cli {
    /// Emit the canonical JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the linear system of parameters search.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Maximum number of S-pairs per Gröbner basis computation.
    #[arg(long, global = true, value_name = "N")]
    pub budget_pairs: Option<usize>,
    /// Maximum degree of a Gröbner basis element.
    #[arg(long, global = true, value_name = "N")]
    pub budget_degree: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension, h-vector, multiplicity, CM type, singular locus, family.
    Analyze { file: PathBuf },
    /// Decide the graded CM representation type.
    Classify {
        file: PathBuf,
        /// Hypotheses vouched for by the user.
        #[arg(long = "assume", value_enum)]
        assume: Vec<AssumeArg>,
    },
    /// Drozd–Roĭter data of the numerical semigroup ring k[[t^a₁, …]].
    Semigroup {
        #[arg(value_delimiter = ',', required = true, value_name = "A1,A2,...")]
        generators: Vec<u64>,
    },
    /// Drozd–Roĭter data of a reduced arrangement of lines through the origin.
    Arrangement {
        file: PathBuf,
        /// Linear form used as the minimal reduction.
        #[arg(long, value_name = "FORM")]
        reduction: String,
    },
    /// Print the presentation of a catalog family.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Reduced Gröbner basis of the ideal.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
        order: OrderArg,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum Family {
    /// k[x1..xn].
    Polynomial { n: usize },
    /// x1² + … + x_r² in n variables.
    Quadric { rank: usize, n: usize },
    /// Product of distinct lines raised to the given multiplicities.
    Binary {
        #[arg(value_delimiter = ',', required = true, value_name = "M1,M2,...")]
        profile: Vec<u32>,
    },
    /// Rational normal scroll of the given type.
    Scroll {
        #[arg(value_delimiter = ',', required = true, value_name = "A1,A2,...")]
        entries: Vec<u32>,
    },
    /// 2×2 minors of a symmetric 3×3 matrix, on n+1 variables.
    Veronese { n: usize },
    /// Same ring as `veronese 5`.
    Sym3x3,
    /// k[x,y,z]/(xy, yz, z²).
    Gw12,
    /// 2×2 minors of [[x,y,z],[y,z,x]].
    Graded12,
}

impl Family {
    pub fn describe(&self) -> String {
        fn list(v: &[u32]) -> String {
            v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        }
        match self {
            Family::Polynomial { n } => format!("polynomial {n}"),
            Family::Quadric { rank, n } => format!("quadric {rank} {n}"),
            Family::Binary { profile } => format!("binary {}", list(profile)),
            Family::Scroll { entries } => format!("scroll {}", list(entries)),
            Family::Veronese { n } => format!("veronese {n}"),
            Family::Sym3x3 => "sym3x3".into(),
            Family::Gw12 => "gw12".into(),
            Family::Graded12 => "graded12".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AssumeArg {
    Reduced,
    Domain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Degrevlex,
    Lex,
}
