//! Exponent vectors over the fixed variable set `T0, T1, X0, X1, X2, Z`.
//!
//! The slot order in the backing array is fixed once and for all; the derived
//! `Ord` (lexicographic on the array) serves as the canonical *structural*
//! order used for storing terms deterministically. Semantic term orders live
//! in [`super::order`].

use alloc::string::String;
use core::fmt::Write as _;

/// Number of variable slots.
pub const NVARS: usize = 6;

/// Slot of the parameter variable `T0` (bidegree `(1, 0)`).
pub const T0: usize = 0;
/// Slot of the parameter variable `T1` (bidegree `(1, 0)`).
pub const T1: usize = 1;
/// Slot of the coordinate variable `X0` (bidegree `(0, 1)`).
pub const X0: usize = 2;
/// Slot of the coordinate variable `X1` (bidegree `(0, 1)`).
pub const X1: usize = 3;
/// Slot of the coordinate variable `X2` (bidegree `(0, 1)`).
pub const X2: usize = 4;
/// Slot of the auxiliary elimination variable `Z` (bidegree `(-d, 1)`).
pub const Z: usize = 5;

/// Display names, indexed by slot.
pub const VAR_NAMES: [&str; NVARS] = ["T0", "T1", "X0", "X1", "X2", "Z"];

/// A monomial: an exponent vector over the six fixed slots.
///
/// `Monomial` is `Copy`; all operations are pure. Exponent arithmetic is
/// checked: products that would overflow `u32` panic rather than wrap (the
/// computations in this crate stay far below that bound).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    /// The constant monomial `1`.
    pub const fn one() -> Self {
        Monomial([0; NVARS])
    }

    /// The single variable `slot` raised to `exp`.
    pub fn var(slot: usize, exp: u32) -> Self {
        assert!(slot < NVARS, "variable slot out of range");
        let mut e = [0; NVARS];
        e[slot] = exp;
        Monomial(e)
    }

    /// Exponent of the variable in `slot`.
    pub fn exp(&self, slot: usize) -> u32 {
        self.0[slot]
    }

    /// Whether this is the constant monomial `1`.
    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    /// Product of two monomials (exponent-wise sum).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow");
        }
        Monomial(e)
    }

    /// Whether `self` divides `other` (exponent-wise `<=`).
    pub fn divides(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.0[i] <= other.0[i])
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide
    /// `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NVARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }

    /// Least common multiple (exponent-wise max).
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].max(other.0[i]);
        }
        Monomial(e)
    }

    /// Whether the two monomials share no variable (disjoint supports).
    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.0[i] == 0 || other.0[i] == 0)
    }

    /// Total degree (sum of all exponents).
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Bidegree under the grading `T0, T1 -> (1, 0)`, `X0, X1, X2 -> (0, 1)`,
    /// `Z -> (-d, 1)` for the given curve degree `d`.
    pub fn bidegree(&self, d: u64) -> (i64, i64) {
        let t = i64::from(self.0[T0]) + i64::from(self.0[T1]);
        let x = i64::from(self.0[X0]) + i64::from(self.0[X1]) + i64::from(self.0[X2]);
        let z = i64::from(self.0[Z]);
        (t - (d as i64) * z, x + z)
    }

    /// Render as `T0^a*T1^b*X0^p*X1^q*X2^r*Z^s` with zero-exponent factors
    /// omitted and exponent `1` elided; the constant monomial renders as `1`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, &e) in VAR_NAMES.iter().zip(&self.0) {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(name);
            if e != 1 {
                let _ = write!(out, "^{}", e);
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let a = Monomial([2, 0, 1, 0, 0, 0]);
        let b = Monomial([1, 3, 0, 0, 2, 0]);
        assert_eq!(a.mul(&b), Monomial([3, 3, 1, 0, 2, 0]));
        assert_eq!(a.lcm(&b), Monomial([2, 3, 1, 0, 2, 0]));
        assert!(!a.divides(&b));
        assert!(a.divides(&a.mul(&b)));
        assert_eq!(a.mul(&b).div(&b), Some(a));
        assert_eq!(a.div(&b), None);
        assert!(Monomial::var(T0, 5).is_coprime_with(&Monomial::var(X1, 2)));
        assert!(!a.is_coprime_with(&b));
        assert_eq!(a.total_degree(), 3);
    }

    #[test]
    fn bidegree_grading() {
        // T0^7 * X2 has bidegree (7, 1).
        let m = Monomial([7, 0, 0, 0, 1, 0]);
        assert_eq!(m.bidegree(10), (7, 1));
        // Z carries bidegree (-d, 1): substituting X0 -> Z*T0^d keeps bidegree.
        let x0 = Monomial::var(X0, 1);
        let img = Monomial([10, 0, 0, 0, 0, 1]);
        assert_eq!(x0.bidegree(10), img.bidegree(10));
    }

    #[test]
    fn rendering() {
        assert_eq!(Monomial::one().render(), "1");
        assert_eq!(Monomial::var(X1, 1).render(), "X1");
        assert_eq!(Monomial([7, 0, 0, 0, 1, 0]).render(), "T0^7*X2");
        assert_eq!(Monomial([0, 4, 1, 0, 2, 3]).render(), "T1^4*X0*X2^2*Z^3");
    }

    #[test]
    fn canonical_struct_order_is_slot_lex() {
        // Derived Ord compares slot by slot, so it agrees with lex in the
        // priority T0 > T1 > X0 > X1 > X2 > Z.
        let a = Monomial([2, 0, 0, 0, 0, 0]);
        let b = Monomial([1, 9, 9, 9, 9, 9]);
        assert!(a > b);
    }
}
