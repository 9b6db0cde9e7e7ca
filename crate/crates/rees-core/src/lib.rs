//! Exact computation of the minimal bigraded free resolution of the Rees
//! algebra of a monomial plane parametrization (t0 : t1) -> (t0^d : t0^(d-u) t1^u : t1^d)
//! for a coprime pair (d, u) with u < d/2, together with an independent
//! Groebner-basis/syzygy oracle and adjoint-pencil dimension counts.
//!
//! The crate is `no_std` + `alloc`: all arithmetic is exact (arbitrary-precision
//! rationals) and every operation is a pure function over immutable values.
//!
//! Module map:
//! - [`euclid`] — classical and slow Euclidean remainder sequences, their extended
//!   (Bezout) companions, the index maps `ell`/`rho`, and minimal solutions of
//!   two-term linear Diophantine equations.
//! - [`polyengine`] — multivariate polynomials and free-module elements over
//!   T0, T1, X0, X1, X2 (plus one auxiliary elimination variable), lexicographic
//!   and induced module term orders, division, S-polynomials, Buchberger's
//!   algorithm, reduced bases, and Schreyer syzygy extraction.
//! - [`reesfamilies`] — the closed-form generator family F0 and syzygy families
//!   F1, F2, the assembled resolution with twists and Betti numbers, and the
//!   self-verification the structure theorems promise.
//! - [`oracle`] — ground truth computed from scratch: the kernel by elimination,
//!   the kernel by saturation of the two linear syzygies, and syzygy modules via
//!   the generic machinery; used to falsify the closed forms without trusting them.
//! - [`adjoint`] — singular points, Sylvester gap counts, forbidden exponent sets,
//!   dimensions of adjoint pencils and of the degree-(1,*) part of the moving-curve
//!   ideal, and the quotient dimension nu.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(feature = "std")]
extern crate std;

pub mod adjoint;
pub mod error;
pub mod euclid;
pub mod oracle;
pub mod polyengine;
pub mod reesfamilies;

pub use error::Error;

/// Re-export of the arbitrary-precision integer type appearing in public
/// sequence fields, so downstream crates need not name the dependency.
pub use num_bigint::BigInt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Cooperative cancellation for long-running basis computations.
///
/// The core never reads a clock; callers that want wall-clock limits implement
/// this trait (the CLI does so with `std::time::Instant`) and the Buchberger and
/// saturation loops poll it between reduction steps, failing with
/// [`Error::DeadlineExceeded`] once it reports expiry.
pub trait Deadline {
    /// True once the computation should abort.
    fn expired(&self) -> bool;
}

/// A deadline that never expires.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoDeadline;

impl Deadline for NoDeadline {
    fn expired(&self) -> bool {
        false
    }
}
