use thiserror::Error;

use crate::fp::EnumerationStats;

pub type Result<T> = std::result::Result<T, Error>;

/// Which hypothesis of the active-sum cellularity theorem failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    DistinctMembers,
    ConjugationClosed,
    ExponentDivides,
    MemberCertificate,
    Generating,
    SchurPrimes,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Hypothesis::DistinctMembers => "distinct",
            Hypothesis::ConjugationClosed => "closed",
            Hypothesis::ExponentDivides => "exponent",
            Hypothesis::MemberCertificate => "member-certificate",
            Hypothesis::Generating => "generating",
            Hypothesis::SchurPrimes => "schur-primes",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("element {0} is not a member of the group")]
    Membership(String),
    #[error("{what} has size {size}, above the cutoff {cutoff}")]
    CutoffExceeded {
        what: &'static str,
        size: u64,
        cutoff: u64,
    },
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
    #[error("family grew past {cap} members")]
    FamilyTooLarge { cap: usize },
    #[error("coset enumeration exceeded the budget of {budget} live cosets")]
    BudgetExceeded {
        budget: usize,
        stats: EnumerationStats,
    },
    #[error("encoding error: {0}")]
    Encoding(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("hypothesis violated ({which}): {witness}")]
    HypothesisViolation { which: Hypothesis, witness: String },
    #[error("no Schur multiplier data for {0}")]
    MissingSchurData(String),
    #[error("{m} does not divide {n}")]
    Divisibility { m: u64, n: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
