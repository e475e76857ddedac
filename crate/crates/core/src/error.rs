use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Which resource cap tripped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    Pairs,
    Degree,
    Minors,
    Permutations,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BudgetKind::Pairs => "S-pair",
            BudgetKind::Degree => "degree",
            BudgetKind::Minors => "minor",
            BudgetKind::Permutations => "permutation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    DuplicateVariable(String),
    InvalidVariableName(String),
    NoVariables,
    /// Generator `index` of the ideal is not homogeneous.
    Inhomogeneous {
        index: usize,
    },
    UnitIdeal,
    NonMonomialGenerator {
        index: usize,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    BudgetExceeded {
        kind: BudgetKind,
        limit: usize,
    },
    /// No linear system of parameters found; carries the last candidate forms.
    LsopExhausted {
        attempts: usize,
        last_candidate: Vec<String>,
    },
    SemigroupGcd(u64),
    EmptySemigroup,
    NotLinearForm {
        index: usize,
    },
    ProportionalLines {
        first: usize,
        second: usize,
    },
    ReductionVanishes {
        line: usize,
    },
    NotQuadric,
    NotBinaryForm,
    ZeroPolynomial,
    InvalidScrollType,
    VeroneseTooSmall(usize),
    NotMinimalMultiplicity,
    NotNonzeroDivisor {
        index: usize,
    },
    InconsistentRewrite,
    NotMinimalized,
    InvalidIndex(usize),
    InvalidArgument(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax {
                line,
                column,
                message,
            } => write!(f, "syntax error at {line}:{column}: {message}"),
            Error::UnknownVariable { name, line, column } => {
                write!(f, "unknown variable `{name}` at {line}:{column}")
            }
            Error::DuplicateVariable(v) => write!(f, "variable `{v}` declared twice"),
            Error::InvalidVariableName(v) => write!(f, "invalid variable name `{v}`"),
            Error::NoVariables => f.write_str("at least one variable is required"),
            Error::Inhomogeneous { index } => {
                write!(f, "generator {} is not homogeneous", index + 1)
            }
            Error::UnitIdeal => f.write_str("the ideal is the whole ring"),
            Error::NonMonomialGenerator { index } => {
                write!(f, "generator {} is not a monomial", index + 1)
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} variables, found {found}")
            }
            Error::BudgetExceeded { kind, limit } => {
                write!(f, "{kind} budget of {limit} exceeded")
            }
            Error::LsopExhausted {
                attempts,
                last_candidate,
            } => write!(
                f,
                "no linear system of parameters found after {attempts} attempts (last candidate: {})",
                last_candidate.join(", ")
            ),
            Error::SemigroupGcd(g) => write!(f, "semigroup generators have gcd {g}, expected 1"),
            Error::EmptySemigroup => f.write_str("semigroup needs at least one positive generator"),
            Error::NotLinearForm { index } => write!(f, "line {} is not a linear form", index + 1),
            Error::ProportionalLines { first, second } => {
                write!(f, "lines {} and {} are proportional", first + 1, second + 1)
            }
            Error::ReductionVanishes { line } => {
                write!(f, "reduction vanishes on line {}", line + 1)
            }
            Error::NotQuadric => f.write_str("not a homogeneous quadric"),
            Error::NotBinaryForm => f.write_str("not a homogeneous form in two variables"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::InvalidScrollType => {
                f.write_str("scroll type needs nonnegative entries with at least one positive")
            }
            Error::VeroneseTooSmall(n) => write!(f, "Veronese cone needs n >= 5, got {n}"),
            Error::NotMinimalMultiplicity => {
                f.write_str("ring is not one-dimensional of minimal multiplicity")
            }
            Error::NotNonzeroDivisor { index } => {
                write!(f, "variable {} is a zero divisor", index + 1)
            }
            Error::InconsistentRewrite => f.write_str("degree-2 rewrite m^2 = x m is inconsistent"),
            Error::NotMinimalized => f.write_str("presentation has linear generators"),
            Error::InvalidIndex(i) => write!(f, "invalid variable index {i}"),
            Error::InvalidArgument(s) => f.write_str(s),
        }
    }
}

impl core::error::Error for Error {}
