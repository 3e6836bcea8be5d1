use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds the configured cap of {cap}")]
    OrderExceeded { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("table has no two-sided identity element")]
    NoIdentity,

    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },

    #[error("malformed Cayley table: {0}")]
    BadTable(String),

    #[error("neither factor of the product is normal")]
    NeitherNormal,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("normal subgroup lattice exceeds the cap of {cap} members")]
    LatticeTooLarge { cap: usize },

    #[error("search exceeded its node budget of {budget}")]
    SearchBudgetExceeded { budget: u64 },

    #[error("|G/Z(G)| = {size} exceeds the direct isoclinism search cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("cyclotomic values of different orders ({0} vs {1})")]
    MixedOrder(u32, u32),

    #[error("eigenspace splitting stalled on a subspace of dimension {dim}")]
    SplitFailed { dim: usize },

    #[error("character lift is inconsistent: {0}")]
    LiftInconsistent(String),

    #[error("group is abelian")]
    AbelianInput,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("quotient character matching failed: {0}")]
    MatchFailed(String),

    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),

    #[error("group of order {order} is not a p-group")]
    NotPGroup { order: usize },

    #[error("bad recipe: {0}")]
    BadRecipe(String),

    #[error("parse error at line {line}: {message} (near `{token}`)")]
    Parse {
        line: usize,
        token: String,
        message: String,
    },

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Whether the error comes from a configured resource cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderExceeded { .. }
                | Error::LatticeTooLarge { .. }
                | Error::SearchBudgetExceeded { .. }
                | Error::CapExceeded { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
