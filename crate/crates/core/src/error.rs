//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands belong to different coefficient fields")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("element is a zero divisor modulo the asserted minimal polynomial")]
    NotInvertible,

    #[error("minimal polynomial must be monic of degree at least 1")]
    BadMinimalPolynomial,

    #[error("minimal polynomial is reducible over the rationals")]
    ReducibleMinimalPolynomial,

    #[error("irreducibility is only verified up to degree 4; use the asserting constructor")]
    IrreducibilityNotChecked,

    #[error("cannot verify irreducibility: coefficient factorization exceeded the trial bound")]
    IrreducibilityVerificationFailed,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCountMismatch { expected: usize, found: usize },

    #[error("terms do not all have the stated total degree")]
    NotHomogeneous,

    #[error("matrix dimension mismatch")]
    DimensionMismatch,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("all map components are zero")]
    AllComponentsZero,

    #[error("map components reduce to a constant tuple (degree 0)")]
    ConstantAfterReduction,

    #[error("operation requires a certified-regular map")]
    UncertifiedInput,

    #[error("regularity certification supports n forms in n variables only")]
    UnsupportedShape,

    #[error("map degree {found} is below the minimum {minimum} for this operation")]
    DegreeTooSmall { minimum: usize, found: usize },

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("generator matrix is not invertible")]
    SingularGenerator,

    #[error("no invariants of the requested degree exist")]
    NoInvariants,

    #[error("no smooth invariant found within the search budget of {budget} candidates")]
    SearchBudgetExhausted { budget: usize },

    #[error("form has not been certified smooth")]
    SmoothnessNotCertified,

    #[error("equivariance verification failed on group element {element}")]
    EquivarianceFailed { element: usize },

    #[error("one-parameter subgroup exponents (c, b) must not both be zero")]
    ZeroSubgroup,

    #[error("irreducible character degrees violate the order sum: {detail}")]
    CharacterDegreeSum { detail: String },

    #[error("unknown builtin group family: {0}")]
    UnknownFamily(String),

    #[error("brute-force enumeration supports genus 1 and 2 only, got {0}")]
    GenusUnsupported(usize),

    #[error("brute-force enumeration size {size} exceeds the guard {guard}")]
    EnumerationGuard { size: u128, guard: u128 },

    #[error("twist solving requires k >= 2 (k*k - 1 must be nonzero), got {0}")]
    DegenerateTwist(i64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
