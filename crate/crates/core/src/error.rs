use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Field characteristic is not prime.
    NonPrime(u64),
    /// Base-field size is not a prime power.
    NotPrimePower(u64),
    /// Extension degree must be at least 1.
    InvalidDegree(u32),
    /// `p^m` exceeds the configured table size cap.
    SizeCapExceeded { size: u128, cap: u64 },
    NotASubfield,
    /// Element does not belong to the field it was used with, or two fields
    /// that must be related are not.
    FieldMismatch,
    ZeroElement,
    ZeroArgument,
    /// `alpha1` and `alpha2` are Frobenius conjugates over the base field.
    ConjugateNonzeros,
    /// `alpha_side` has order 1.
    DegenerateOrder { side: u8 },
    /// `alpha_side` lies in a proper subfield of `GF(q^k_side)`.
    ProperSubfield { side: u8, degree: u32 },
    /// `e_side` does not divide `Q_side - 1`.
    BadIndex { side: u8, e: u64, group_order: u64 },
    LengthMismatch { expected: usize, found: usize },
    RangeError { value: u64, min: u64, max: u64 },
    /// Subspace enumeration would exceed the configured cap.
    CapExceeded { count: u128, cap: u128 },
    Overflow,
    /// The character-sum expansion needs `gcd(n1, n2) = 1`.
    NonCoprimeOrders { n1: u64, n2: u64 },
    /// Imaginary residue of a real character-sum quantity is too large.
    Precision { residual: f64 },
    HypothesisViolated(&'static str),
    /// A closed form produced a nonpositive count.
    NonPositive,
    /// Two computation routes returned different values.
    RouteDisagreement { left: u64, right: u64 },
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPrime(_) => "NonPrime",
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::InvalidDegree(_) => "InvalidDegree",
            Error::SizeCapExceeded { .. } => "SizeCapExceeded",
            Error::NotASubfield => "NotASubfield",
            Error::FieldMismatch => "FieldMismatch",
            Error::ZeroElement => "ZeroElement",
            Error::ZeroArgument => "ZeroArgument",
            Error::ConjugateNonzeros => "ConjugateNonzeros",
            Error::DegenerateOrder { .. } => "DegenerateOrder",
            Error::ProperSubfield { .. } => "ProperSubfield",
            Error::BadIndex { .. } => "BadIndex",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::RangeError { .. } => "RangeError",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::Overflow => "Overflow",
            Error::NonCoprimeOrders { .. } => "NonCoprimeOrders",
            Error::Precision { .. } => "Precision",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::NonPositive => "NonPositive",
            Error::RouteDisagreement { .. } => "RouteDisagreement",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrime(p) => write!(f, "{p} is not prime"),
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::InvalidDegree(m) => write!(f, "extension degree {m} must be positive"),
            Error::SizeCapExceeded { size, cap } => {
                write!(f, "field size {size} exceeds the table cap {cap}")
            }
            Error::NotASubfield => write!(f, "first field is not a subfield of the second"),
            Error::FieldMismatch => write!(f, "element or field does not match"),
            Error::ZeroElement => write!(f, "operation undefined for the zero element"),
            Error::ZeroArgument => write!(f, "character evaluated at zero"),
            Error::ConjugateNonzeros => write!(f, "alpha1 and alpha2 are conjugate"),
            Error::DegenerateOrder { side } => write!(f, "alpha{side} has order 1"),
            Error::ProperSubfield { side, degree } => {
                write!(f, "alpha{side} has degree {degree}, it lies in a proper subfield")
            }
            Error::BadIndex { side, e, group_order } => {
                write!(f, "e{side} = {e} does not divide {group_order}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::RangeError { value, min, max } => {
                write!(f, "{value} is outside {min}..={max}")
            }
            Error::CapExceeded { count, cap } => {
                write!(f, "enumeration of {count} subspaces exceeds cap {cap}")
            }
            Error::Overflow => write!(f, "integer overflow"),
            Error::NonCoprimeOrders { n1, n2 } => {
                write!(f, "orders n1 = {n1} and n2 = {n2} are not coprime")
            }
            Error::Precision { residual } => {
                write!(f, "imaginary residue {residual:e} exceeds tolerance")
            }
            Error::HypothesisViolated(what) => write!(f, "hypothesis violated: {what}"),
            Error::NonPositive => write!(f, "closed form produced a nonpositive value"),
            Error::RouteDisagreement { left, right } => {
                write!(f, "routes disagree: {left} != {right}")
            }
        }
    }
}

impl core::error::Error for Error {}
