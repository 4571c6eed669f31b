use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("modulus is not a monic irreducible polynomial of the requested degree")]
    ReducibleModulus,

    #[error("gcd of the zero polynomials is undefined")]
    UndefinedGcd,
    #[error("polynomial of degree {degree} does not fit in {dim} coordinates")]
    DegreeOverflow { degree: usize, dim: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("type is inconsistent with the polynomial degrees")]
    TypeMismatch,

    #[error("at least two polynomials are required")]
    TooFewPolynomials,
    #[error("input polynomial {0} is not monic")]
    NotMonic(usize),
    #[error("input polynomials are not coprime")]
    NotCoprime,
    #[error("input polynomials are not pairwise coprime")]
    NotPairwiseCoprime,
    #[error("input polynomial {0} is constant")]
    ConstantInput(usize),
    #[error("characteristic {p} is too small for {n} polynomials")]
    CharacteristicTooSmall { p: u64, n: usize },
    #[error("characteristic {p} must satisfy 0 < p <= {n}")]
    CharacteristicMismatch { p: u64, n: usize },
    #[error("field too small: {types} types at degree {degree} but only {size} elements")]
    FieldTooSmall {
        degree: usize,
        types: u64,
        size: u64,
    },
    #[error("target degree must exceed deg A + deg B")]
    DegreeTooSmall,
    #[error("rank of A_T equals d, no normal vector independent of e exists")]
    RankTooHigh,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("capacity exceeded: {needed} > {cap}")]
    CapacityExceeded { needed: u128, cap: u64 },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
