use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u32),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of order {0} is too large (limit 2^16)")]
    UnsupportedSize(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element code {code} out of range for F_{q}")]
    ElementOutOfRange { code: u64, q: u32 },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("duplicate roots")]
    DuplicateRoots,
    #[error("ring element is not a unit")]
    NotAUnit,
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid factor basis: {0}")]
    InvalidFactorBasis(String),
    #[error("constant term of x^n - a^({component})(x) is not a unit")]
    NonUnitConstantTerm { component: usize },
    #[error("g^({component})(x) does not divide x^n - a^({component})(x)")]
    NotADivisor { component: usize },
    #[error("degree {degree} exceeds {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },
    #[error("enumeration of {needed} items exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("codes have different moduli")]
    ModulusMismatch,
    #[error("zero code has no minimum distance")]
    ZeroCode,
    #[error("distance is only a lower bound")]
    DistanceNotExact,
    #[error("C2^perp is not contained in C1")]
    NotNested,
    #[error("code is not annihilator dual-containing")]
    NotDualContaining,
    #[error("M M^T is not a unit multiple of the identity")]
    MNotScaledOrthogonal,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("empty input")]
    EmptyInput,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
}
