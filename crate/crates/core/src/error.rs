use serde::Serialize;
use thiserror::Error;

/// A single violated invariant of a Langlands parameter or weight.
///
/// Indices are 1-based, matching the usual indexing of weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
#[serde(tag = "rule")]
pub enum Violation {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("entries not strictly decreasing at index {index}")]
    NotDecreasing { index: usize },
    #[error("l_{index} + l_(n+1-{index}) != 0")]
    NotAntisymmetric { index: usize },
    #[error("parity rule violated at index {index}")]
    ParityViolation { index: usize },
    #[error("sign bit must be 0 or 1, found {value}")]
    BadDelta { value: i64 },
    #[error("weight not dominant at index {index}")]
    NotDominant { index: usize },
    #[error("weight not pure at index {index}")]
    NotPure { index: usize },
}

impl Violation {
    /// Stable machine-readable rule name.
    pub fn rule(&self) -> &'static str {
        match self {
            Violation::ZeroRank => "ZeroRank",
            Violation::LengthMismatch { .. } => "LengthMismatch",
            Violation::NotDecreasing { .. } => "NotDecreasing",
            Violation::NotAntisymmetric { .. } => "NotAntisymmetric",
            Violation::ParityViolation { .. } => "ParityViolation",
            Violation::BadDelta { .. } => "BadDelta",
            Violation::NotDominant { .. } => "NotDominant",
            Violation::NotPure { .. } => "NotPure",
        }
    }

    pub fn index(&self) -> Option<usize> {
        match self {
            Violation::NotDecreasing { index }
            | Violation::NotAntisymmetric { index }
            | Violation::ParityViolation { index }
            | Violation::NotDominant { index }
            | Violation::NotPure { index } => Some(*index),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {}", display_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("the rank pair n = m = 1 is excluded")]
    RankPairExcluded,
    #[error("normalization hypothesis l_1 > l'_1 does not hold")]
    HypothesisViolated,
    #[error("coincident nonzero spectra: l_{i} = l'_{j} = {value}")]
    Coincidence { i: usize, j: usize, value: i64 },
    #[error("splitting map needs zero defect, found {defect}")]
    DefectNonzero { defect: i64 },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("length {0} is not even")]
    OddLength(usize),
    #[error("enumeration of {count} branches exceeds cap {cap}")]
    EnumerationTooLarge { count: u128, cap: u128 },
    #[error("internal invariant `{rule}` violated: {detail}")]
    InvariantViolated { rule: &'static str, detail: String },
}

fn display_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl From<Vec<Violation>> for Error {
    fn from(v: Vec<Violation>) -> Self {
        Error::Invalid(v)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invariant(
    ok: bool,
    rule: &'static str,
    detail: impl FnOnce() -> String,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvariantViolated {
            rule,
            detail: detail(),
        })
    }
}
