use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("osp(k|2) requires k > 2, got k = {0}")]
    InvalidRank(u32),
    #[error("weights belong to different algebras (k = {left} vs k = {right})")]
    RankMismatch { left: u32, right: u32 },
    #[error("k = {k} needs {expected} coordinates, got {found}")]
    Arity {
        k: u32,
        expected: usize,
        found: usize,
    },
    #[error("invalid signed permutation: {0}")]
    InvalidSignedPermutation(String),
    #[error("no unique dominant conjugate: {0} is not regular")]
    NotRegular(String),
    #[error("{0} is not integral g0-dominant")]
    NotG0Dominant(String),
    #[error("{0} is not integral g-dominant")]
    NotGDominant(String),
    #[error("{0} is typical")]
    Typical(String),
    #[error("{0} is not a dominant weight for so(k)")]
    NotSoDominant(String),
    #[error("lambda_i undefined for A∞∞ blocks (the λ± weights are not constructed)")]
    AInfinityOrbit,
    #[error("negative quiver index {0}")]
    NegativeIndex(i64),
    #[error("brute-force orbit search limited to m <= {max}, got m = {m}")]
    OrbitTooLarge { m: usize, max: usize },
    #[error("sequence too short: {len} points after burn-in, need at least {needed}")]
    SequenceTooShort { len: usize, needed: usize },
    #[error("sequence is not polynomial within the sampled range")]
    NotPolynomial,
    #[error("depth {depth} too small for k = {k}; need at least {needed}")]
    InsufficientDepth { k: u32, depth: usize, needed: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
