//! Polynomials with exact rational coefficients over the fixed variable set.
//!
//! Terms are stored sorted strictly descending under the canonical structural
//! order on monomials (slot-wise lex), with no zero coefficients, so `Eq` is
//! structural equality of polynomials. Leading terms are computed on demand
//! under a caller-supplied [`TermOrder`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

use super::monomial::{Monomial, T0, T1, X0, X1, X2, Z};
use super::order::TermOrder;

/// One term of a polynomial: a nonzero rational coefficient times a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    /// Coefficient (never zero inside a normalized [`Poly`]).
    pub coeff: BigRational,
    /// Monomial part.
    pub mon: Monomial,
}

/// A polynomial in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: Vec<Term>,
}

/// Sort descending under the canonical structural order, merge equal
/// monomials, drop zero coefficients.
fn normalize(mut raw: Vec<Term>) -> Vec<Term> {
    raw.sort_by_key(|t| core::cmp::Reverse(t.mon));
    let mut out: Vec<Term> = Vec::with_capacity(raw.len());
    for t in raw {
        if let Some(last) = out.last_mut() {
            if last.mon == t.mon {
                last.coeff += t.coeff;
                if last.coeff.is_zero() {
                    out.pop();
                }
                continue;
            }
        }
        if !t.coeff.is_zero() {
            out.push(t);
        }
    }
    out
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Poly::monomial(BigRational::one(), Monomial::one())
    }

    /// A single term `c * m` (zero if `c` is zero).
    pub fn monomial(c: BigRational, m: Monomial) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: alloc::vec![Term { coeff: c, mon: m }],
            }
        }
    }

    /// Build from arbitrary (coefficient, monomial) pairs; normalizes.
    pub fn from_terms(raw: Vec<(BigRational, Monomial)>) -> Self {
        Poly {
            terms: normalize(
                raw.into_iter()
                    .map(|(coeff, mon)| Term { coeff, mon })
                    .collect(),
            ),
        }
    }

    /// Build from integer coefficients; normalizes.
    pub fn from_int_terms(raw: &[(i64, Monomial)]) -> Self {
        Poly::from_terms(
            raw.iter()
                .map(|&(c, m)| (BigRational::from_integer(BigInt::from(c)), m))
                .collect(),
        )
    }

    /// The terms in canonical storage order (descending structural order).
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether there are no terms (same as [`Poly::is_zero`]).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum.
    pub fn add(&self, other: &Poly) -> Poly {
        let mut raw = Vec::with_capacity(self.terms.len() + other.terms.len());
        raw.extend(self.terms.iter().cloned());
        raw.extend(other.terms.iter().cloned());
        Poly {
            terms: normalize(raw),
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -t.coeff.clone(),
                    mon: t.mon,
                })
                .collect(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push(Term {
                    coeff: &a.coeff * &b.coeff,
                    mon: a.mon.mul(&b.mon),
                });
            }
        }
        Poly {
            terms: normalize(raw),
        }
    }

    /// Product with a single term `c * m`.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mon: t.mon.mul(m),
                })
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> Poly {
        self.mul_term(c, &Monomial::one())
    }

    /// Leading term under `ord`.
    ///
    /// # Errors
    /// [`Error::ZeroElement`] on the zero polynomial.
    pub fn leading_term(&self, ord: &TermOrder) -> Result<(&BigRational, &Monomial)> {
        let mut best: Option<&Term> = None;
        for t in &self.terms {
            best = Some(match best {
                None => t,
                Some(b) => {
                    if ord.cmp_monomials(&t.mon, &b.mon) == core::cmp::Ordering::Greater {
                        t
                    } else {
                        b
                    }
                }
            });
        }
        best.map(|t| (&t.coeff, &t.mon)).ok_or(Error::ZeroElement)
    }

    /// The monic multiple (leading coefficient `1` under `ord`).
    ///
    /// # Errors
    /// [`Error::ZeroElement`] on the zero polynomial.
    pub fn make_monic(&self, ord: &TermOrder) -> Result<Poly> {
        let (c, _) = self.leading_term(ord)?;
        let inv = BigRational::one() / c.clone();
        Ok(self.scale(&inv))
    }

    /// Whether some term is a nonzero constant.
    pub fn has_constant_term(&self) -> bool {
        self.terms.iter().any(|t| t.mon.is_one())
    }

    /// Whether this polynomial is a difference of two monomials with
    /// coefficients `+1` and `-1` (in either storage order).
    pub fn is_pm_binomial(&self) -> bool {
        if self.terms.len() != 2 {
            return false;
        }
        let (a, b) = (&self.terms[0].coeff, &self.terms[1].coeff);
        (a.is_one() && (-b).is_one()) || ((-a).is_one() && b.is_one())
    }

    /// Bidegree under the grading `T -> (1, 0)`, `X -> (0, 1)`, `Z -> (-d, 1)`.
    ///
    /// # Errors
    /// [`Error::ZeroElement`] on zero; [`Error::NotHomogeneous`] if terms have
    /// different bidegrees.
    pub fn bidegree(&self, d: u64) -> Result<(i64, i64)> {
        let mut it = self.terms.iter();
        let first = it.next().ok_or(Error::ZeroElement)?;
        let deg = first.mon.bidegree(d);
        for t in it {
            if t.mon.bidegree(d) != deg {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(deg)
    }

    /// Image under the Rees substitution `X0 -> Z*T0^d`,
    /// `X1 -> Z*T0^(d-u)*T1^u`, `X2 -> Z*T1^d` (and `T0, T1` fixed).
    ///
    /// The input must not involve `Z`.
    pub fn rees_substitute(&self, d: u64, u: u64) -> Poly {
        let d32 = u32::try_from(d).expect("degree fits in u32");
        let u32_ = u32::try_from(u).expect("parameter fits in u32");
        let raw = self
            .terms
            .iter()
            .map(|t| {
                assert_eq!(t.mon.exp(Z), 0, "Rees substitution input must be Z-free");
                let e0 = t.mon.exp(X0);
                let e1 = t.mon.exp(X1);
                let e2 = t.mon.exp(X2);
                let mut m = [0u32; super::monomial::NVARS];
                m[T0] = t.mon.exp(T0) + d32 * e0 + (d32 - u32_) * e1;
                m[T1] = t.mon.exp(T1) + u32_ * e1 + d32 * e2;
                m[Z] = e0 + e1 + e2;
                Term {
                    coeff: t.coeff.clone(),
                    mon: Monomial(m),
                }
            })
            .collect();
        Poly {
            terms: normalize(raw),
        }
    }

    /// Render with terms sorted descending under `ord`.
    ///
    /// Grammar: terms joined by `+`/`-`, each `c*mono` with coefficient `1`
    /// elided and the constant monomial rendered as the bare coefficient;
    /// zero renders as `0`.
    pub fn render(&self, ord: &TermOrder) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut sorted: Vec<&Term> = self.terms.iter().collect();
        sorted.sort_by(|a, b| ord.cmp_monomials(&b.mon, &a.mon));
        let mut out = String::new();
        for (i, t) in sorted.iter().enumerate() {
            let neg = t.coeff.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mag = t.coeff.abs();
            if mag.is_one() {
                out.push_str(&t.mon.render());
            } else if t.mon.is_one() {
                let _ = write!(out, "{}", mag);
            } else {
                let _ = write!(out, "{}*{}", mag, t.mon.render());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(t0: u32, t1: u32, x0: u32, x1: u32, x2: u32) -> Monomial {
        Monomial([t0, t1, x0, x1, x2, 0])
    }

    #[test]
    fn construction_normalizes() {
        let p = Poly::from_int_terms(&[(2, m(1, 0, 0, 0, 0)), (-2, m(1, 0, 0, 0, 0))]);
        assert!(p.is_zero());
        let q = Poly::from_int_terms(&[
            (1, m(0, 0, 1, 0, 0)),
            (3, m(1, 0, 0, 0, 0)),
            (2, m(0, 0, 1, 0, 0)),
        ]);
        assert_eq!(q.terms().len(), 2);
        assert_eq!(q.terms()[0].mon, m(1, 0, 0, 0, 0));
        assert_eq!(q.terms()[1].coeff, BigRational::from_integer(3.into()));
    }

    #[test]
    fn ring_axioms_on_samples() {
        let a = Poly::from_int_terms(&[(1, m(1, 0, 0, 0, 0)), (1, m(0, 1, 0, 0, 0))]);
        let b = Poly::from_int_terms(&[(1, m(1, 0, 0, 0, 0)), (-1, m(0, 1, 0, 0, 0))]);
        // (T0+T1)(T0-T1) = T0^2 - T1^2
        let prod = a.mul(&b);
        let expect = Poly::from_int_terms(&[(1, m(2, 0, 0, 0, 0)), (-1, m(0, 2, 0, 0, 0))]);
        assert_eq!(prod, expect);
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(a.add(&b).mul(&b), a.mul(&b).add(&b.mul(&b)));
    }

    #[test]
    fn leading_term_depends_on_order() {
        // X0^2 + X1^3
        let p = Poly::from_int_terms(&[(1, m(0, 0, 2, 0, 0)), (1, m(0, 0, 0, 3, 0))]);
        let (_, lm_pos) = p.leading_term(&TermOrder::LexSigmaPositive).unwrap();
        assert_eq!(*lm_pos, m(0, 0, 2, 0, 0));
        let (_, lm_neg) = p.leading_term(&TermOrder::LexSigmaNonpositive).unwrap();
        assert_eq!(*lm_neg, m(0, 0, 0, 3, 0));
        assert!(Poly::zero()
            .leading_term(&TermOrder::LexSigmaPositive)
            .is_err());
    }

    #[test]
    fn bidegree_and_homogeneity() {
        // T0^7*X2 - T1^7*X1 is bihomogeneous of bidegree (7, 1).
        let p = Poly::from_int_terms(&[(1, m(7, 0, 0, 0, 1)), (-1, m(0, 7, 0, 1, 0))]);
        assert_eq!(p.bidegree(10).unwrap(), (7, 1));
        let q = Poly::from_int_terms(&[(1, m(7, 0, 0, 0, 1)), (-1, m(0, 6, 0, 1, 0))]);
        assert_eq!(q.bidegree(10), Err(Error::NotHomogeneous));
        assert_eq!(Poly::zero().bidegree(10), Err(Error::ZeroElement));
    }

    #[test]
    fn rees_substitution_preserves_bidegree_and_kills_kernel_elements() {
        // X0^7*X2^3 - X1^10 lies in the kernel for (d, u) = (10, 3).
        let p = Poly::from_int_terms(&[(1, m(0, 0, 7, 0, 3)), (-1, m(0, 0, 0, 10, 0))]);
        let img = p.rees_substitute(10, 3);
        assert!(img.is_zero());
        // A non-kernel element maps to something nonzero of equal bidegree.
        let q = Poly::from_int_terms(&[(1, m(0, 0, 1, 0, 0)), (-1, m(0, 0, 0, 1, 0))]);
        let img_q = q.rees_substitute(10, 3);
        assert!(!img_q.is_zero());
        assert_eq!(img_q.bidegree(10).unwrap(), q.bidegree(10).unwrap());
    }

    #[test]
    fn rendering_matches_grammar() {
        assert_eq!(Poly::zero().render(&TermOrder::LexSigmaPositive), "0");
        let p = Poly::from_int_terms(&[(-1, m(0, 7, 0, 1, 0)), (1, m(7, 0, 0, 0, 1))]);
        assert_eq!(p.render(&TermOrder::LexSigmaPositive), "T0^7*X2-T1^7*X1");
        let c = Poly::from_terms(alloc::vec![(
            BigRational::new(BigInt::from(-3), BigInt::from(2)),
            m(0, 0, 1, 0, 0)
        )]);
        assert_eq!(c.render(&TermOrder::LexSigmaPositive), "-3/2*X0");
        let k = Poly::from_int_terms(&[(5, Monomial::one())]);
        assert_eq!(k.render(&TermOrder::LexSigmaPositive), "5");
    }

    #[test]
    fn pm_binomial_recognition() {
        let p = Poly::from_int_terms(&[(1, m(7, 0, 0, 0, 1)), (-1, m(0, 7, 0, 1, 0))]);
        assert!(p.is_pm_binomial());
        let q = Poly::from_int_terms(&[(1, m(7, 0, 0, 0, 1)), (-2, m(0, 7, 0, 1, 0))]);
        assert!(!q.is_pm_binomial());
        assert!(!Poly::one().is_pm_binomial());
    }
}
