use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("closure exceeds the order bound of {limit} elements")]
    ClosureTooLarge { limit: usize },

    #[error("generator {generator} is not a permutation of 0..{degree}: {reason}")]
    InvalidPermutation {
        generator: usize,
        degree: usize,
        reason: String,
    },

    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("table is not a Latin square: {detail}")]
    NotLatinSquare { detail: String },

    #[error("table has no identity element")]
    NoIdentity,

    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },

    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("element set is not a subgroup: {detail}")]
    NotASubgroup { detail: String },

    #[error("subgroup is not normal: conjugating by {witness} leaves it")]
    NotNormal { witness: usize },

    #[error("lattice exceeds the cap of {limit} subgroups")]
    LatticeTooLarge { limit: usize },

    #[error("subgroup is not a member of the lattice")]
    SubgroupNotInLattice,

    #[error("quasicenter chain term {step} is not normal in the group")]
    QuasicenterNotNormal { step: usize },

    #[error("group orders {left} and {right} are not coprime")]
    NotCoprime { left: usize, right: usize },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("invalid parameter for family {family}: {reason}")]
    InvalidParameter { family: String, reason: String },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("malformed document: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Format(err.to_string())
    }
}
