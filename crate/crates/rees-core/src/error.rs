//! Error taxonomy shared by every module of the crate.

use core::fmt;

/// All failure modes of the library.
///
/// Every operation that can fail returns `Result<T, Error>`; errors carry the
/// offending values where that aids diagnosis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// gcd(d, u) != 1 (or a Sylvester-count argument pair is not coprime).
    NonCoprime { a: u64, b: u64 },
    /// Input outside the admissible range (u <= 0, 2u >= d without swap, d < 3, ...).
    OutOfRange { what: &'static str },
    /// A sequence index outside its documented 1-based range.
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },
    /// The two-term Diophantine equation a = b*gamma - c*delta has no solution
    /// (gcd(b, c) does not divide a).
    NoSolution,
    /// Module elements of different ambient ranks were combined or compared.
    RankMismatch { left: usize, right: usize },
    /// A leading term of the zero polynomial / zero module element was requested.
    ZeroElement,
    /// A set presented as a Groebner basis failed the Buchberger criterion.
    NotGroebner,
    /// sigma_q = 0 encountered; the term order and the generator family are
    /// defined by the sign of sigma_q and this case never arises for valid input.
    SigmaQZero,
    /// An adjoint-theory operation was invoked with u = 1 (the theory assumes u > 1).
    RequiresUGreaterOne,
    /// A pencil-dimension operation was invoked below the minimal degree d - 2.
    BelowAdjointThreshold { ell: i64, min: i64 },
    /// A polynomial expected to be (bi)homogeneous is not.
    NotHomogeneous,
    /// Degrees of pencil components are inconsistent with any single total degree.
    DegreeMismatch,
    /// The quotient dimension nu varied with the degree ell, which signals an
    /// implementation bug (the theory makes it independent of ell >= d - 2).
    StabilityViolation,
    /// An iteration guard tripped (saturation failed to stabilize within its cap).
    NonTermination { cap: usize },
    /// A cooperative deadline expired inside a long computation.
    DeadlineExceeded,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonCoprime { a, b } => write!(f, "arguments {a} and {b} are not coprime"),
            Error::OutOfRange { what } => write!(f, "input out of range: {what}"),
            Error::IndexOutOfRange { index, min, max } => {
                write!(f, "index {index} outside [{min}, {max}]")
            }
            Error::NoSolution => write!(f, "Diophantine equation has no solution"),
            Error::RankMismatch { left, right } => {
                write!(f, "module rank mismatch: {left} vs {right}")
            }
            Error::ZeroElement => write!(f, "operation undefined on the zero element"),
            Error::NotGroebner => write!(f, "set is not a Groebner basis"),
            Error::SigmaQZero => write!(
                f,
                "sigma_q = 0: term order and generator family are undefined for this input"
            ),
            Error::RequiresUGreaterOne => {
                write!(f, "adjoint-theory operations require u > 1")
            }
            Error::BelowAdjointThreshold { ell, min } => {
                write!(f, "degree {ell} is below the adjoint threshold {min}")
            }
            Error::NotHomogeneous => write!(f, "polynomial is not bihomogeneous"),
            Error::DegreeMismatch => write!(f, "pencil component degrees are inconsistent"),
            Error::StabilityViolation => {
                write!(f, "nu depends on ell: implementation bug detected")
            }
            Error::NonTermination { cap } => {
                write!(f, "iteration failed to stabilize within {cap} steps")
            }
            Error::DeadlineExceeded => write!(f, "cooperative deadline expired"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
