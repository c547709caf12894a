use sturmian::christoffel::ChristoffelError;
use sturmian::distribution::DistributionError;
use sturmian::frac::FracError;
use sturmian::palindrome::PsiError;
use sturmian::stern::SternError;
use sturmian::tree::TreeError;
use sturmian::word::WordError;
use thiserror::Error;

/// Failure of a command, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    NotInClass(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Arithmetic(String),
    #[error("{0}")]
    Disagreement(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::NotInClass(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Arithmetic(_) => 5,
            CliError::Disagreement(_) => 6,
            CliError::Io(_) => 1,
        }
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        match e {
            WordError::InvalidLetter(_) | WordError::MalformedRep(_) => {
                CliError::Parse(e.to_string())
            }
            WordError::TooManyOccurrences { .. } => CliError::Budget(e.to_string()),
            WordError::Empty | WordError::Constant => CliError::Arithmetic(e.to_string()),
        }
    }
}

impl From<FracError> for CliError {
    fn from(e: FracError) -> Self {
        match e {
            FracError::Syntax(_) => CliError::Parse(e.to_string()),
            FracError::NotIrreducible(_) => CliError::Arithmetic(e.to_string()),
        }
    }
}

impl From<PsiError> for CliError {
    fn from(e: PsiError) -> Self {
        match e {
            PsiError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            PsiError::NotCentral(_) => CliError::NotInClass(e.to_string()),
            PsiError::EmptyPeriod => CliError::Parse(e.to_string()),
        }
    }
}

impl From<ChristoffelError> for CliError {
    fn from(e: ChristoffelError) -> Self {
        match e {
            ChristoffelError::Psi(inner) => inner.into(),
            ChristoffelError::Word(inner) => inner.into(),
            ChristoffelError::TooLong(..) => CliError::Budget(e.to_string()),
            ChristoffelError::NotChristoffel(_) | ChristoffelError::Improper(_) => {
                CliError::NotInClass(e.to_string())
            }
            ChristoffelError::NotIrreducible(..)
            | ChristoffelError::InvalidCoefficient { .. }
            | ChristoffelError::MissingCoefficients { .. } => CliError::Arithmetic(e.to_string()),
        }
    }
}

impl From<TreeError> for CliError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::TooDeep { .. } => CliError::Budget(e.to_string()),
            TreeError::NumberTooSmall(_) | TreeError::NotPositive(_) => {
                CliError::Arithmetic(e.to_string())
            }
        }
    }
}

impl From<SternError> for CliError {
    fn from(e: SternError) -> Self {
        match e {
            SternError::TooManyOccurrences { .. } => CliError::Budget(e.to_string()),
            SternError::OutOfDomain { .. } => CliError::Arithmetic(e.to_string()),
            SternError::Word(inner) => inner.into(),
        }
    }
}

impl From<DistributionError> for CliError {
    fn from(e: DistributionError) -> Self {
        match e {
            DistributionError::Budget { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Arithmetic(e.to_string()),
        }
    }
}
