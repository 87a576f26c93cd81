use thiserror::Error;

use crate::inverse_set::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no generalized inverse")]
    NotRegular(usize),
    #[error("element {element} has several generalized inverses {candidates:?}")]
    NotUnique { element: usize, candidates: Vec<usize> },
    #[error("pairing is not regular: {0}")]
    NotRegularSet(AxiomReport),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("semigroup has no zero element")]
    NoZero,
    #[error("condition ({condition}) fails at {witness:?}")]
    ConditionFails {
        condition: &'static str,
        witness: Vec<usize>,
    },
    #[error("not a subsemigroup: {0}")]
    NotSubsemigroup(String),
    #[error("not a partial Morita equivalence: {0}")]
    NotPartialMorita(String),
    #[error("middle semigroups do not match")]
    MiddleMismatch,
    #[error("correspondence is degenerate")]
    Degenerate,
    #[error("correspondence is not non-degenerate")]
    NotNonDegenerate,
    #[error("not an ideal: {0}")]
    NotIdeal(String),
    #[error("not a Morita equivalence: {0}")]
    NotMorita(String),
    #[error("invalid certificate: {0}")]
    CertInvalid(String),
    #[error("not a partial McAlister function: {0}")]
    NotMcAlister(AxiomReport),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Stable upper-case code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidTable(_) => "INVALID_TABLE",
            Error::NotAssociative(..) => "NOT_ASSOCIATIVE",
            Error::NotRegular(_) => "NOT_REGULAR",
            Error::NotUnique { .. } => "NOT_INVERSE",
            Error::NotRegularSet(_) => "NOT_REGULAR_SET",
            Error::SizeLimit(_) => "SIZE_LIMIT",
            Error::PreconditionFailed(_) => "PRECONDITION_FAILED",
            Error::NoZero => "NO_ZERO",
            Error::ConditionFails { .. } => "CONDITION_FAILS",
            Error::NotSubsemigroup(_) => "NOT_SUBSEMIGROUP",
            Error::NotPartialMorita(_) => "NOT_PARTIAL_MORITA",
            Error::MiddleMismatch => "MIDDLE_MISMATCH",
            Error::Degenerate => "DEGENERATE",
            Error::NotNonDegenerate => "NOT_NON_DEGENERATE",
            Error::NotIdeal(_) => "NOT_IDEAL",
            Error::NotMorita(_) => "NOT_MORITA",
            Error::CertInvalid(_) => "CERT_INVALID",
            Error::NotMcAlister(_) => "NOT_MCALISTER",
            Error::InvalidMap(_) => "INVALID_MAP",
            Error::Inconsistency(_) => "INCONSISTENCY",
        }
    }

    /// True for errors caused by an exhausted search budget.
    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimit(_))
    }
}
