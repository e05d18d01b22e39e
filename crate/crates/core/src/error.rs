use thiserror::Error;

/// Every failure the library can report.
///
/// [`Error::Parse`] is the only variant caused by malformed input text; all
/// the others are domain errors on well-formed values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DuplicateResidue: window entries {0} and {1} are congruent mod {2}")]
    DuplicateResidue(i64, i64, i64),
    #[error("WrongWindowLength: expected {expected} window entries, got {got}")]
    WrongWindowLength { expected: usize, got: usize },
    #[error("NotAWindowPermutation: values are not a permutation of [{lo}, {hi}]")]
    NotAWindowPermutation { lo: i64, hi: i64 },
    #[error("BadPeriod: period {0} is neither 0 nor at least 2")]
    BadPeriod(i64),
    #[error("PeriodMismatch: periods {0} and {1} differ")]
    PeriodMismatch(i64, i64),
    #[error("ShiftMismatch: shifts {0} and {1} differ")]
    ShiftMismatch(i64, i64),
    #[error("NotSubmodular: submodularity fails at ({0}, {1})")]
    NotSubmodular(i64, i64),
    #[error("BadAsymptotics: value at ({0}, {1}) violates the asymptotic form")]
    BadAsymptotics(i64, i64),
    #[error("InconsistentPeriod: table is not invariant under ({0}, {1}) -> (+k, +k)")]
    InconsistentPeriod(i64, i64),
    #[error("TableTooSmall: slipface table does not determine a permutation")]
    TableTooSmall,
    #[error("EmptySequence: at least one factor is required")]
    EmptySequence,
    #[error("TooLarge: enumeration would exceed {0} candidates")]
    TooLarge(u64),
    #[error("NoUniqueMax: product set has no Bruhat maximum")]
    NoUniqueMax,
    #[error("ShiftNonzero: permutation has shift {0}, expected 0")]
    ShiftNonzero(i64),
    #[error("ShiftSumMismatch: factor shifts sum to {got}, target has shift {expected}")]
    ShiftSumMismatch { expected: i64, got: i64 },
    #[error("BadParameters: {0}")]
    BadParameters(String),
    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// Short name of the error case, as printed in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateResidue(..) => "DuplicateResidue",
            Error::WrongWindowLength { .. } => "WrongWindowLength",
            Error::NotAWindowPermutation { .. } => "NotAWindowPermutation",
            Error::BadPeriod(_) => "BadPeriod",
            Error::PeriodMismatch(..) => "PeriodMismatch",
            Error::ShiftMismatch(..) => "ShiftMismatch",
            Error::NotSubmodular(..) => "NotSubmodular",
            Error::BadAsymptotics(..) => "BadAsymptotics",
            Error::InconsistentPeriod(..) => "InconsistentPeriod",
            Error::TableTooSmall => "TableTooSmall",
            Error::EmptySequence => "EmptySequence",
            Error::TooLarge(_) => "TooLarge",
            Error::NoUniqueMax => "NoUniqueMax",
            Error::ShiftNonzero(_) => "ShiftNonzero",
            Error::ShiftSumMismatch { .. } => "ShiftSumMismatch",
            Error::BadParameters(_) => "BadParameters",
            Error::Parse(_) => "ParseError",
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
