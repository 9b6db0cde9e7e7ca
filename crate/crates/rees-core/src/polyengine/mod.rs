//! Exact multivariate polynomial and free-module arithmetic over the
//! variables T0, T1, X0, X1, X2 (plus one auxiliary elimination variable Z),
//! with the lexicographic term orders the theory uses, induced module orders,
//! division with quotients, S-polynomials, Buchberger's algorithm for ideals
//! and submodules, reduced bases, and Schreyer syzygy extraction.
//!
//! Coefficients are exact rationals over arbitrary-precision integers.
//! Polynomials and module elements are immutable values stored in a canonical
//! structural form, so equality is structural; leading terms are computed on
//! demand under whichever order a caller supplies, and rendering sorts terms
//! descending under that order.

mod groebner;
mod modelem;
mod monomial;
mod order;
mod poly;

pub use groebner::{
    buchberger, buchberger_mod, ideal_equal, is_groebner, is_groebner_mod,
    leading_term_formula_holds, module_equal, reduce_basis, reduce_basis_mod, reduce_mod,
    reduce_poly, s_pair_mod, s_polynomial, syzygy_basis, syzygy_basis_mod,
};
pub use modelem::{ModElem, ModTerm};
pub use monomial::{Monomial, NVARS, T0, T1, VAR_NAMES, X0, X1, X2, Z};
pub use order::{LexVariant, ModuleOrder, TermOrder};
pub use poly::{Poly, Term};
