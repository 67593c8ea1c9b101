use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the zero polynomial has no roots to isolate")]
    ZeroPolynomial,
    #[error("polynomial has repeated factors; pass its squarefree part P/gcd(P, P') instead")]
    NotSquarefree,
    #[error("minimal polynomial must be monic with integer coefficients")]
    NotMonicInteger,
    #[error("no real root greater than 1 in the selected interval")]
    NoRootAboveOne,
    #[error("root hint does not isolate exactly one real root ({0} found)")]
    BadRootHint(usize),
    #[error("division by zero in the number field")]
    DivisionByZero,
    #[error("operands belong to different number fields")]
    FieldMismatch,
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateLength { expected: usize, got: usize },
    #[error("base beta_{0} is not greater than 1")]
    BaseNotAboveOne(usize),
    #[error("product of the bases differs from the field root")]
    ProductMismatch,
    #[error("an alternate base needs at least one base")]
    EmptyBase,
    #[error("digit {digit} at position {position} outside [0, {max}]")]
    DigitOutOfRange { position: usize, digit: i64, max: i64 },
    #[error("digit bound of beta_{0} does not fit in a machine integer")]
    DigitBoundTooLarge(usize),
    #[error("sequence length {len} is not a multiple of p = {p}")]
    LengthNotMultiple { len: usize, p: usize },
    #[error("x must lie in [0, 1)")]
    OutOfUnitInterval,
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("series base must exceed 1 in modulus")]
    SeriesBaseTooSmall,
    #[error("sequence inputs are inconsistent: {0}")]
    InconsistentInputs(String),
    #[error("no Galois conjugate of modulus greater than 1 (product base is Pisot or Salem)")]
    NoExpandingConjugate,
    #[error("embedding is not certified to have modulus greater than 1")]
    ConjugateNotExpanding,
    #[error("digit set must be nonempty")]
    EmptyDigitSet,
    #[error("window must satisfy lo < hi")]
    DegenerateWindow,
    #[error("brute-force enumeration of {words} words exceeds the cap of {cap}")]
    BruteForceCap { words: u128, cap: u128 },
    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "zero_polynomial",
            Error::NotSquarefree => "not_squarefree",
            Error::NotMonicInteger => "not_monic_integer",
            Error::NoRootAboveOne => "no_root_above_one",
            Error::BadRootHint(_) => "bad_root_hint",
            Error::DivisionByZero => "division_by_zero",
            Error::FieldMismatch => "field_mismatch",
            Error::CoordinateLength { .. } => "coordinate_length",
            Error::BaseNotAboveOne(_) => "base_not_above_one",
            Error::ProductMismatch => "product_mismatch",
            Error::EmptyBase => "empty_base",
            Error::DigitOutOfRange { .. } => "digit_out_of_range",
            Error::DigitBoundTooLarge(_) => "digit_bound_too_large",
            Error::LengthNotMultiple { .. } => "length_not_multiple",
            Error::OutOfUnitInterval => "out_of_unit_interval",
            Error::EmptyPeriod => "empty_period",
            Error::SeriesBaseTooSmall => "series_base_too_small",
            Error::InconsistentInputs(_) => "inconsistent_inputs",
            Error::NoExpandingConjugate => "no_expanding_conjugate",
            Error::ConjugateNotExpanding => "conjugate_not_expanding",
            Error::EmptyDigitSet => "empty_digit_set",
            Error::DegenerateWindow => "degenerate_window",
            Error::BruteForceCap { .. } => "brute_force_cap",
            Error::Parse(_) => "parse",
        }
    }
}
