use num_bigint::BigUint;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus {0} out of range (need 2 <= n <= 2^31)")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("polynomial parse error: {0}")]
    PolyParse(String),
    #[error("cycle parse error: {0}")]
    CycleParse(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("images do not form a bijection")]
    NotPermutation,
    #[error("value {value} out of range for modulus {modulus}")]
    OutOfRange { value: u64, modulus: u64 },
    #[error("gate exceeded: {0}")]
    GateExceeded(String),
    #[error("formula requires p >= k (p = {p}, k = {k}); formula value would be {formula_value}")]
    HypothesisViolated {
        p: u64,
        k: u32,
        formula_value: BigUint,
    },
    #[error("permutation does not respect residue classes modulo {modulus}")]
    NotReducible { modulus: u64 },
    #[error("function is not induced by any polynomial")]
    NotPolynomial,
    #[error("polynomial does not permute Z/{0}")]
    NotPermutationPolynomial(u64),
    #[error("modulus {0} is not a power of two >= 4")]
    NotPowerOfTwo(u64),
    #[error("element {0} is not in the group")]
    NotInGroup(String),
    #[error("group of order {order} exceeds the limit {limit} for this operation")]
    TooLarge { order: BigUint, limit: u64 },
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
