//! Elements of a free module `R^rank` over the polynomial ring, with exact
//! rational coefficients.
//!
//! A module element is a sum of terms `c * m * e_i` (basis vectors `e_i`
//! indexed from 0 internally, rendered 1-based). Terms are stored sorted by
//! (index ascending, monomial descending structural), so `Eq` is structural.
//! Leading terms are computed on demand under a caller-supplied
//! [`ModuleOrder`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

use super::monomial::Monomial;
use super::order::ModuleOrder;
use super::poly::Poly;

/// One term of a module element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModTerm {
    /// Coefficient (never zero inside a normalized [`ModElem`]).
    pub coeff: BigRational,
    /// Monomial part.
    pub mon: Monomial,
    /// 0-based coordinate index.
    pub index: usize,
}

/// A free-module element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModElem {
    rank: usize,
    terms: Vec<ModTerm>,
}

fn normalize(mut raw: Vec<ModTerm>) -> Vec<ModTerm> {
    raw.sort_by(|a, b| a.index.cmp(&b.index).then_with(|| b.mon.cmp(&a.mon)));
    let mut out: Vec<ModTerm> = Vec::with_capacity(raw.len());
    for t in raw {
        if let Some(last) = out.last_mut() {
            if last.index == t.index && last.mon == t.mon {
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

impl ModElem {
    /// The zero element of `R^rank`.
    pub fn zero(rank: usize) -> Self {
        ModElem {
            rank,
            terms: Vec::new(),
        }
    }

    /// The basis vector `e_index` of `R^rank` (0-based).
    ///
    /// # Errors
    /// [`Error::IndexOutOfRange`] if `index >= rank`.
    pub fn basis(rank: usize, index: usize) -> Result<Self> {
        if index >= rank {
            return Err(Error::IndexOutOfRange {
                index,
                min: 0,
                max: rank.saturating_sub(1),
            });
        }
        Ok(ModElem {
            rank,
            terms: alloc::vec![ModTerm {
                coeff: BigRational::one(),
                mon: Monomial::one(),
                index,
            }],
        })
    }

    /// Build from (coefficient, monomial, 0-based index) triples; normalizes.
    ///
    /// # Errors
    /// [`Error::IndexOutOfRange`] if some index is `>= rank`.
    pub fn from_terms(rank: usize, raw: Vec<(BigRational, Monomial, usize)>) -> Result<Self> {
        for &(_, _, index) in &raw {
            if index >= rank {
                return Err(Error::IndexOutOfRange {
                    index,
                    min: 0,
                    max: rank.saturating_sub(1),
                });
            }
        }
        Ok(ModElem {
            rank,
            terms: normalize(
                raw.into_iter()
                    .map(|(coeff, mon, index)| ModTerm { coeff, mon, index })
                    .collect(),
            ),
        })
    }

    /// Build from integer coefficients; normalizes.
    ///
    /// # Errors
    /// [`Error::IndexOutOfRange`] if some index is `>= rank`.
    pub fn from_int_terms(rank: usize, raw: &[(i64, Monomial, usize)]) -> Result<Self> {
        ModElem::from_terms(
            rank,
            raw.iter()
                .map(|&(c, m, i)| (BigRational::from_integer(BigInt::from(c)), m, i))
                .collect(),
        )
    }

    /// Number of coordinates of the ambient free module.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The terms in canonical storage order.
    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum.
    ///
    /// # Errors
    /// [`Error::RankMismatch`] if the ranks differ.
    pub fn add(&self, other: &ModElem) -> Result<ModElem> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut raw = Vec::with_capacity(self.terms.len() + other.terms.len());
        raw.extend(self.terms.iter().cloned());
        raw.extend(other.terms.iter().cloned());
        Ok(ModElem {
            rank: self.rank,
            terms: normalize(raw),
        })
    }

    /// Difference.
    ///
    /// # Errors
    /// [`Error::RankMismatch`] if the ranks differ.
    pub fn sub(&self, other: &ModElem) -> Result<ModElem> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> ModElem {
        ModElem {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    coeff: -t.coeff.clone(),
                    mon: t.mon,
                    index: t.index,
                })
                .collect(),
        }
    }

    /// Product with a single term `c * m`.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> ModElem {
        if c.is_zero() {
            return ModElem::zero(self.rank);
        }
        ModElem {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    coeff: &t.coeff * c,
                    mon: t.mon.mul(m),
                    index: t.index,
                })
                .collect(),
        }
    }

    /// Product with a polynomial.
    pub fn mul_poly(&self, p: &Poly) -> ModElem {
        let mut raw = Vec::with_capacity(self.terms.len() * p.terms().len());
        for a in p.terms() {
            for t in &self.terms {
                raw.push(ModTerm {
                    coeff: &t.coeff * &a.coeff,
                    mon: t.mon.mul(&a.mon),
                    index: t.index,
                });
            }
        }
        ModElem {
            rank: self.rank,
            terms: normalize(raw),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> ModElem {
        self.mul_term(c, &Monomial::one())
    }

    /// Leading term `(coefficient, monomial, 0-based index)` under `ord`.
    ///
    /// # Errors
    /// [`Error::ZeroElement`] on the zero element.
    pub fn leading_term(&self, ord: &ModuleOrder) -> Result<(&BigRational, &Monomial, usize)> {
        let mut best: Option<&ModTerm> = None;
        for t in &self.terms {
            best = Some(match best {
                None => t,
                Some(b) => {
                    if ord.cmp_terms((&t.mon, t.index), (&b.mon, b.index))
                        == core::cmp::Ordering::Greater
                    {
                        t
                    } else {
                        b
                    }
                }
            });
        }
        best.map(|t| (&t.coeff, &t.mon, t.index))
            .ok_or(Error::ZeroElement)
    }

    /// The monic multiple (leading coefficient `1` under `ord`).
    ///
    /// # Errors
    /// [`Error::ZeroElement`] on the zero element.
    pub fn make_monic(&self, ord: &ModuleOrder) -> Result<ModElem> {
        let (c, _, _) = self.leading_term(ord)?;
        let inv = BigRational::one() / c.clone();
        Ok(self.scale(&inv))
    }

    /// The polynomial coefficient of `e_index`.
    pub fn coefficient(&self, index: usize) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|t| t.index == index)
                .map(|t| (t.coeff.clone(), t.mon))
                .collect(),
        )
    }

    /// All polynomial coefficients, indexed by coordinate.
    pub fn coefficient_vector(&self) -> Vec<Poly> {
        (0..self.rank).map(|i| self.coefficient(i)).collect()
    }

    /// Assemble from a coefficient vector (rank = `coeffs.len()`).
    pub fn from_coefficient_vector(coeffs: &[Poly]) -> ModElem {
        let mut raw = Vec::new();
        for (index, p) in coeffs.iter().enumerate() {
            for t in p.terms() {
                raw.push(ModTerm {
                    coeff: t.coeff.clone(),
                    mon: t.mon,
                    index,
                });
            }
        }
        ModElem {
            rank: coeffs.len(),
            terms: normalize(raw),
        }
    }

    /// Evaluate against a polynomial family: `sum_i coeff_i(self) * family[i]`.
    ///
    /// # Errors
    /// [`Error::RankMismatch`] if `family.len() != rank`.
    pub fn apply(&self, family: &[Poly]) -> Result<Poly> {
        if family.len() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: family.len(),
            });
        }
        let mut acc = Poly::zero();
        for t in &self.terms {
            acc = acc.add(&family[t.index].mul_term(&t.coeff, &t.mon));
        }
        Ok(acc)
    }

    /// Evaluate against a module family: `sum_i coeff_i(self) * family[i]`.
    ///
    /// # Errors
    /// [`Error::RankMismatch`] if `family.len() != rank` or the family members
    /// disagree in rank.
    pub fn apply_mod(&self, family: &[ModElem]) -> Result<ModElem> {
        if family.len() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: family.len(),
            });
        }
        let target_rank = match family.first() {
            Some(g) => g.rank,
            None => 0,
        };
        let mut acc = ModElem::zero(target_rank);
        for t in &self.terms {
            acc = acc.add(&family[t.index].mul_term(&t.coeff, &t.mon))?;
        }
        Ok(acc)
    }

    /// Bidegree under the standard grading with coordinate `i` twisted by
    /// `twists[i]`: a term `c * m * e_i` has bidegree `bideg(m) + twists[i]`.
    ///
    /// # Errors
    /// [`Error::ZeroElement`] on zero; [`Error::RankMismatch`] if
    /// `twists.len() != rank`; [`Error::NotHomogeneous`] if terms disagree.
    pub fn bidegree(&self, d: u64, twists: &[(i64, i64)]) -> Result<(i64, i64)> {
        if twists.len() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: twists.len(),
            });
        }
        let mut it = self.terms.iter();
        let first = it.next().ok_or(Error::ZeroElement)?;
        let of = |t: &ModTerm| -> (i64, i64) {
            let (a, b) = t.mon.bidegree(d);
            let (ta, tb) = twists[t.index];
            (a + ta, b + tb)
        };
        let deg = of(first);
        for t in it {
            if of(t) != deg {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(deg)
    }

    /// Render with terms sorted descending under `ord`.
    ///
    /// Grammar: terms joined by `+`/`-`, each `c*mono*e{i}` (1-based `i`) with
    /// coefficient `1` and constant monomial elided; zero renders as `0`.
    pub fn render(&self, ord: &ModuleOrder) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut sorted: Vec<&ModTerm> = self.terms.iter().collect();
        sorted.sort_by(|a, b| ord.cmp_terms((&b.mon, b.index), (&a.mon, a.index)));
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
            if !mag.is_one() {
                let _ = write!(out, "{}*", mag);
            }
            if !t.mon.is_one() {
                let _ = write!(out, "{}*", t.mon.render());
            }
            let _ = write!(out, "e{}", t.index + 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::order::TermOrder;
    use super::*;

    fn m(t0: u32, t1: u32, x0: u32, x1: u32, x2: u32) -> Monomial {
        Monomial([t0, t1, x0, x1, x2, 0])
    }

    #[test]
    fn construction_and_rank_checks() {
        assert!(ModElem::basis(3, 2).is_ok());
        assert_eq!(
            ModElem::basis(3, 3),
            Err(Error::IndexOutOfRange {
                index: 3,
                min: 0,
                max: 2
            })
        );
        let a = ModElem::from_int_terms(2, &[(1, m(1, 0, 0, 0, 0), 0)]).unwrap();
        let b = ModElem::from_int_terms(3, &[(1, m(1, 0, 0, 0, 0), 0)]).unwrap();
        assert_eq!(a.add(&b), Err(Error::RankMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn apply_recovers_combinations() {
        // e_0 * f + e_1 * g with f = T0, g = T1.
        let fam = alloc::vec![
            Poly::from_int_terms(&[(1, m(1, 0, 0, 0, 0))]),
            Poly::from_int_terms(&[(1, m(0, 1, 0, 0, 0))]),
        ];
        let v = ModElem::from_int_terms(2, &[(1, m(0, 1, 0, 0, 0), 0), (-1, m(1, 0, 0, 0, 0), 1)])
            .unwrap();
        // T1 * T0 - T0 * T1 = 0: the Koszul syzygy.
        assert!(v.apply(&fam).unwrap().is_zero());
    }

    #[test]
    fn coefficient_vector_round_trip() {
        let v = ModElem::from_int_terms(
            3,
            &[
                (1, m(0, 0, 1, 0, 0), 0),
                (-1, m(3, 0, 0, 0, 0), 1),
                (-1, m(0, 4, 0, 1, 0), 2),
            ],
        )
        .unwrap();
        let coeffs = v.coefficient_vector();
        assert_eq!(coeffs.len(), 3);
        assert_eq!(ModElem::from_coefficient_vector(&coeffs), v);
    }

    #[test]
    fn twisted_bidegree() {
        // s = X0*e1 - T0^3*e2 - T1^4*X1*e3 over twists (7,1), (4,2), (3,1):
        // each term has bidegree (7, 2).
        let v = ModElem::from_int_terms(
            3,
            &[
                (1, m(0, 0, 1, 0, 0), 0),
                (-1, m(3, 0, 0, 0, 0), 1),
                (-1, m(0, 4, 0, 1, 0), 2),
            ],
        )
        .unwrap();
        let twists = [(7, 1), (4, 2), (3, 1)];
        assert_eq!(v.bidegree(10, &twists).unwrap(), (7, 2));
        let bad = [(7, 1), (4, 2), (3, 2)];
        assert_eq!(v.bidegree(10, &bad), Err(Error::NotHomogeneous));
    }

    #[test]
    fn rendering_matches_grammar() {
        let ord = ModuleOrder::Term(TermOrder::LexSigmaPositive);
        assert_eq!(ModElem::zero(2).render(&ord), "0");
        let v = ModElem::from_int_terms(
            3,
            &[
                (-1, m(3, 0, 0, 0, 0), 1),
                (1, m(0, 0, 1, 0, 0), 0),
                (-1, m(0, 4, 0, 1, 0), 2),
            ],
        )
        .unwrap();
        // Under plain term-over-position lex: T0^3*e2 > T1^4*X1*e3 > X0*e1.
        assert_eq!(v.render(&ord), "-T0^3*e2-T1^4*X1*e3+X0*e1");
        let e = ModElem::basis(4, 3).unwrap();
        assert_eq!(e.render(&ord), "e4");
    }
}
