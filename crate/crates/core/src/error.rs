use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed rational {0:?}: expected \"p/q\" or an integer")]
    MalformedRational(String),

    #[error("probability out of range at state {state:?}{}: {value}", location(.letter, .target))]
    ProbabilityOutOfRange {
        state: String,
        letter: Option<String>,
        target: Option<String>,
        value: Box<Rational>,
    },

    #[error("distribution of state {state:?} sums to {sum}, expected 1")]
    DistributionSumViolation { state: String, sum: Rational },

    #[error("unknown {kind} {name:?}")]
    UnknownIdentifier { kind: IdentKind, name: String },

    #[error("duplicate {kind} {name:?}")]
    DuplicateIdentifier { kind: IdentKind, name: String },

    #[error("empty {0} name")]
    EmptyIdentifier(IdentKind),

    #[error("invalid query {0:?}")]
    InvalidQuery(String),

    #[error("step budget must be at least 1")]
    InvalidBudget,

    #[error("restricted absorption system is singular")]
    SingularRestrictedSystem,

    #[error("invalid document: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentKind {
    State,
    Letter,
    Move,
}

impl std::fmt::Display for IdentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            IdentKind::State => "state",
            IdentKind::Letter => "letter",
            IdentKind::Move => "move",
        })
    }
}

fn location(letter: &Option<String>, target: &Option<String>) -> String {
    match (letter, target) {
        (Some(l), Some(t)) => format!(" (letter {l:?} to {t:?})"),
        _ => " (stop)".to_string(),
    }
}
