use thiserror::Error;

/// Everything that can go wrong while building fields, groups, oracles or
/// running a reduction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of size {p}^{k} exceeds the desk-scale cap of 2^16 elements")]
    TooLarge { p: u64, k: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("value {value} is not an element of a field with {q} elements")]
    NotAnElement { value: u64, q: u32 },
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("linear system does not have a unique solution")]
    Singular,
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("interpolation points repeat the abscissa {0}")]
    DuplicateAbscissa(u32),
    #[error("need at least {needed} interpolation points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("point {0} is outside the action domain")]
    DomainMismatch(usize),
    #[error("invalid group description: {0}")]
    InvalidGroup(String),
    #[error("group with {order} elements exceeds the desk-scale bound {bound} for {what}")]
    GroupTooLarge {
        order: usize,
        bound: usize,
        what: &'static str,
    },
    #[error("the action is not faithful")]
    NotFaithful,
    #[error("the hidden subgroup is not closed under the action")]
    NotClosed,
    #[error("the quadratic shift problem needs odd characteristic")]
    EvenCharacteristic,
    #[error("complement order equals |K| - 1 (sharply 2-transitive); no small strong base exists")]
    SharplyTwoTransitive,
    #[error("the group is not a Frobenius group under this action: {0}")]
    NotFrobenius(String),
    #[error("field with {q} elements has fewer than {needed} distinct abscissas")]
    FieldTooSmall { q: u32, needed: usize },
    #[error("no polynomial-size strong base exists for {n}-variate function graph groups")]
    NoPolynomialSizeBase { n: usize },
    #[error("base points must be distinct and non-empty")]
    InvalidBase,
    #[error("base is not strong: lifted oracle violates the coset promise ({0})")]
    BadBase(String),
    #[error("oracle violates its promise: {0}")]
    PromiseViolation(String),
    #[error("the given shifts do not generate the additive group of the field")]
    NotGenerating,
    #[error("no subgroup in the family is consistent with the oracle")]
    NoConsistentSubgroup,
    #[error("{0} subgroups in the family are consistent with the oracle")]
    Ambiguous(usize),
    #[error("reduction left the hidden object undetermined: {0}")]
    Undetermined(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by an oracle that does not honour its promise.
    pub fn is_promise_violation(&self) -> bool {
        matches!(
            self,
            Error::PromiseViolation(_)
                | Error::BadBase(_)
                | Error::NoConsistentSubgroup
                | Error::Ambiguous(_)
                | Error::NotClosed
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
