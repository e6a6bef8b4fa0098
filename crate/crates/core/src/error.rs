use num_bigint::BigInt;

/// Which clause of the acceptability definition a point set violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    /// (i) two distinct points share an x-coordinate
    DistinctAbscissas,
    /// (ii) a coordinate is zero
    NonzeroCoordinates,
    /// (iii) a coordinate is not an integer
    IntegralCoordinates,
}

impl std::fmt::Display for Clause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Clause::DistinctAbscissas => write!(f, "(i)"),
            Clause::NonzeroCoordinates => write!(f, "(ii)"),
            Clause::IntegralCoordinates => write!(f, "(iii)"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(BigInt),

    #[error("bad reduction at {prime}: {detail}")]
    BadReduction { prime: BigInt, detail: String },

    #[error("point set not acceptable: clause {clause} violated by {offenders:?}")]
    NotAcceptable {
        clause: Clause,
        offenders: Vec<String>,
    },

    #[error("singleton point set: route through the fixed-curve path")]
    SingletonCase,

    #[error("effort exhausted during {stage}: {detail}")]
    EffortExhausted { stage: &'static str, detail: String },

    #[error("cannot complete factorization of {0} within the trial-division bound")]
    FactorizationIncomplete(BigInt),

    #[error("internal inconsistency (bug): {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}
