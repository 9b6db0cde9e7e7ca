//! Integer-sequence arithmetic: classical and slow Euclidean remainder
//! sequences, their extended (Bezout-type) companions, the marker sequence
//! m_0..m_p with the index maps `ell(n)` and `rho(n)`, and minimal solutions
//! of two-term linear Diophantine equations.
//!
//! Conventions. For a validated pair (d, u) the classical sequence starts at
//! a_0 = d - u, a_1 = u and runs a_{i-1} = q_i * a_i + a_{i+1} down to a_p = 0;
//! q = q_1 + ... + q_{p-1}. The slow sequence starts at (b_1, c_1) = (d - u, u)
//! and replaces {b, c} by {b - c, c} re-sorted so b >= c, ending at
//! (b_{q+1}, c_{q+1}) = (1, 0). The extended companions satisfy
//! sigma_n * u + tau_n * (d - u) = b_n and alpha_n * u + beta_n * (d - u) = c_n.
//!
//! All stored integers are arbitrary precision (`BigInt`): values stay small
//! for these sequences, but downstream oracle reductions multiply them into
//! coefficients where machine range is not a safe assumption.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A validated input pair (d, u): gcd(d, u) = 1 and 1 <= u with 2u < d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InputPair {
    d: u64,
    u: u64,
}

impl InputPair {
    /// Curve degree d.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Inner exponent u.
    pub fn u(&self) -> u64 {
        self.u
    }
}

/// Validate (d, u) without the swap normalization.
///
/// Errors: [`Error::NonCoprime`] when gcd(d, u) != 1; [`Error::OutOfRange`]
/// when u = 0, d < 3, u >= d, or 2u >= d.
pub fn validate(d: u64, u: u64) -> Result<InputPair> {
    validate_with_swap(d, u, false)
}

/// Validate (d, u), optionally normalizing via the symmetry (d, u) -> (d, d - u).
///
/// With `allow_swap` and d/2 < u < d the pair is replaced by (d, d - u); this
/// corresponds to exchanging T0 with T1 and X0 with X2 in the parametrization
/// and is cross-checked by the oracle's kernel computation.
pub fn validate_with_swap(d: u64, mut u: u64, allow_swap: bool) -> Result<InputPair> {
    if d < 3 {
        return Err(Error::OutOfRange {
            what: "d must be at least 3",
        });
    }
    if u == 0 {
        return Err(Error::OutOfRange {
            what: "u must be positive",
        });
    }
    if u >= d {
        return Err(Error::OutOfRange {
            what: "u must be smaller than d",
        });
    }
    if d.gcd(&u) != 1 {
        return Err(Error::NonCoprime { a: d, b: u });
    }
    if 2 * u >= d {
        if allow_swap {
            u = d - u;
        } else {
            return Err(Error::OutOfRange {
                what: "2u >= d (pass allow_swap to normalize via u -> d - u)",
            });
        }
    }
    // gcd(d, u) = 1 and 2u < d force u < d/2 strictly (u = d/2 would need even d
    // sharing the factor 2), so the pair is now in the canonical range.
    Ok(InputPair { d, u })
}

/// Classical Euclidean remainder sequence with extended (Bezout) companions.
///
/// Indexing: `a_seq[i]` is a_i for i = 0..=p; `q_seq[i]` is q_{i+1} for
/// i = 0..p-1 (that is, q_1..q_{p-1}); `s_seq`/`t_seq` hold s_0..s_p, t_0..t_p
/// with s_i * u + t_i * (d - u) = a_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidData {
    /// a_0 = d - u, a_1 = u, ..., a_p = 0.
    pub a_seq: Vec<BigInt>,
    /// Quotients q_1..q_{p-1}.
    pub q_seq: Vec<BigInt>,
    /// Length of the remainder sequence: a_p = 0.
    pub p: usize,
    /// q = q_1 + ... + q_{p-1}; the slow sequence has q + 1 entries.
    pub q: usize,
    /// Bezout coefficients s_0..s_p (coefficient of u).
    pub s_seq: Vec<BigInt>,
    /// Bezout coefficients t_0..t_p (coefficient of d - u).
    pub t_seq: Vec<BigInt>,
}

/// Compute the classical remainder sequence and its extended companions.
pub fn euclid_data(pair: &InputPair) -> EuclidData {
    let d = BigInt::from(pair.d);
    let u = BigInt::from(pair.u);
    let mut a_seq = vec![&d - &u, u];
    let mut q_seq: Vec<BigInt> = Vec::new();
    // s_0 = 0, t_0 = 1 (a_0 = d - u); s_1 = 1, t_1 = 0 (a_1 = u).
    let mut s_seq = vec![BigInt::zero(), BigInt::one()];
    let mut t_seq = vec![BigInt::one(), BigInt::zero()];
    while !a_seq.last().expect("nonempty").is_zero() {
        let i = a_seq.len() - 1;
        let (quot, rem) = a_seq[i - 1].div_rem(&a_seq[i]);
        let s_next = &s_seq[i - 1] - &quot * &s_seq[i];
        let t_next = &t_seq[i - 1] - &quot * &t_seq[i];
        q_seq.push(quot);
        a_seq.push(rem);
        s_seq.push(s_next);
        t_seq.push(t_next);
    }
    let p = a_seq.len() - 1;
    let q: usize = q_seq
        .iter()
        .map(|x| usize::try_from(x).expect("quotient fits usize"))
        .sum();
    EuclidData {
        a_seq,
        q_seq,
        p,
        q,
        s_seq,
        t_seq,
    }
}

/// Slow Euclidean remainder sequence with its extended companions and markers.
///
/// Indexing: every per-step sequence is stored with a dummy entry at index 0
/// so that `b_seq[n]` is b_n for n = 1..=q+1, and likewise for c, sigma, tau,
/// alpha, beta. `m_seq[l]` is m_l for l = 0..=p (m_0 = 1, m_p = q + 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SersData {
    /// Curve degree d (cached for convenience).
    pub d: u64,
    /// Inner exponent u.
    pub u: u64,
    /// q = q_1 + ... + q_{p-1}.
    pub q: usize,
    /// Length of the classical remainder sequence.
    pub p: usize,
    /// b_1 = d - u, ..., b_{q+1} = 1 (index 0 unused).
    pub b_seq: Vec<BigInt>,
    /// c_1 = u, ..., c_{q+1} = 0 (index 0 unused).
    pub c_seq: Vec<BigInt>,
    /// sigma_n with sigma_n * u + tau_n * (d - u) = b_n (index 0 unused).
    pub sigma_seq: Vec<BigInt>,
    /// tau_n companion of sigma_n (index 0 unused).
    pub tau_seq: Vec<BigInt>,
    /// alpha_n with alpha_n * u + beta_n * (d - u) = c_n (index 0 unused).
    pub alpha_seq: Vec<BigInt>,
    /// beta_n companion of alpha_n (index 0 unused).
    pub beta_seq: Vec<BigInt>,
    /// Markers m_0..m_p: m_0 = 1, m_l = 1 + q_1 + ... + q_l, m_p = q + 2.
    pub m_seq: Vec<usize>,
}

/// Compute the slow remainder sequence, its extended companions, and markers.
pub fn sers_data(pair: &InputPair, e: &EuclidData) -> SersData {
    let d = BigInt::from(pair.d);
    let u = BigInt::from(pair.u);
    let q = e.q;
    let dummy = BigInt::zero();
    let mut b_seq = vec![dummy.clone(), &d - &u];
    let mut c_seq = vec![dummy.clone(), u];
    let mut sigma_seq = vec![dummy.clone(), BigInt::zero()];
    let mut tau_seq = vec![dummy.clone(), BigInt::one()];
    let mut alpha_seq = vec![dummy.clone(), BigInt::one()];
    let mut beta_seq = vec![dummy, BigInt::zero()];
    for n in 1..=q {
        let diff_b = &b_seq[n] - &c_seq[n];
        let diff_sigma = &sigma_seq[n] - &alpha_seq[n];
        let diff_tau = &tau_seq[n] - &beta_seq[n];
        if diff_b >= c_seq[n] {
            // {b - c, c} already sorted: the difference takes the b slot.
            b_seq.push(diff_b);
            c_seq.push(c_seq[n].clone());
            sigma_seq.push(diff_sigma);
            tau_seq.push(diff_tau);
            alpha_seq.push(alpha_seq[n].clone());
            beta_seq.push(beta_seq[n].clone());
        } else {
            // c becomes the larger entry: companions swap roles.
            b_seq.push(c_seq[n].clone());
            c_seq.push(diff_b);
            sigma_seq.push(alpha_seq[n].clone());
            tau_seq.push(beta_seq[n].clone());
            alpha_seq.push(diff_sigma);
            beta_seq.push(diff_tau);
        }
    }
    debug_assert!(b_seq[q + 1].is_one() && c_seq[q + 1].is_zero());
    let mut m_seq = vec![1usize];
    let mut acc = 1usize;
    for qm in &e.q_seq {
        acc += usize::try_from(qm).expect("quotient fits usize");
        m_seq.push(acc);
    }
    // The partial sums end at m_{p-1} = q + 1; m_p is defined as q + 2.
    m_seq.push(q + 2);
    debug_assert_eq!(m_seq.len(), e.p + 1);
    SersData {
        d: pair.d,
        u: pair.u,
        q,
        p: e.p,
        b_seq,
        c_seq,
        sigma_seq,
        tau_seq,
        alpha_seq,
        beta_seq,
        m_seq,
    }
}

impl SersData {
    fn check_index(&self, n: usize, max: usize) -> Result<()> {
        if n < 1 || n > max {
            Err(Error::IndexOutOfRange {
                index: n,
                min: 1,
                max,
            })
        } else {
            Ok(())
        }
    }

    /// b_n for n = 1..=q+2 (with the convention b_{q+2} = 0).
    pub fn b_ext(&self, n: usize) -> Result<BigInt> {
        self.check_index(n, self.q + 2)?;
        if n == self.q + 2 {
            Ok(BigInt::zero())
        } else {
            Ok(self.b_seq[n].clone())
        }
    }

    /// The unique l >= 1 with m_{l-1} <= n < m_l, for n = 1..=q+1.
    pub fn ell_of(&self, n: usize) -> Result<usize> {
        self.check_index(n, self.q + 1)?;
        for l in 1..=self.p {
            if self.m_seq[l - 1] <= n && n < self.m_seq[l] {
                return Ok(l);
            }
        }
        unreachable!("markers cover 1..=q+1");
    }

    /// rho(n) = n + 1 if n + 1 < m_{ell(n)}, else m_{ell(n)+1}, for n = 1..=q.
    ///
    /// Always b_{rho(n)} = b_n - c_n and b_{m_ell(n)} = c_n.
    pub fn rho_of(&self, n: usize) -> Result<usize> {
        self.check_index(n, self.q)?;
        let l = self.ell_of(n)?;
        if n + 1 < self.m_seq[l] {
            Ok(n + 1)
        } else {
            Ok(self.m_seq[l + 1])
        }
    }
}

/// Minimal nonnegative solution (gamma, delta) of a = b*gamma - c*delta.
///
/// Requires a, b, c positive, b != c, and gcd(b, c) | a. The returned pair
/// minimizes gamma + delta over all nonnegative solutions; it is the unique
/// nonnegative solution with gamma < c or delta < b.
pub fn minimal_solution(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<(BigInt, BigInt)> {
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(Error::OutOfRange {
            what: "minimal_solution needs positive a, b, c",
        });
    }
    if b == c {
        return Err(Error::OutOfRange {
            what: "minimal_solution needs b != c",
        });
    }
    let gcd = b.gcd(c);
    if !(a % &gcd).is_zero() {
        return Err(Error::NoSolution);
    }
    let b1 = b / &gcd;
    let c1 = c / &gcd;
    let a1 = a / &gcd;
    // x*b1 + y*c1 = 1, hence b1*(a1*x) - c1*(-a1*y) = a1.
    let eg = b1.extended_gcd(&c1);
    debug_assert!(eg.gcd.is_one());
    let gamma0 = &a1 * &eg.x;
    let delta0 = -&a1 * &eg.y;
    // General solution: (gamma0 + k*c1, delta0 + k*b1); both coordinates and
    // their sum are strictly increasing in k, so the smallest feasible k is
    // the minimizer.
    let k = Integer::div_ceil(&-&gamma0, &c1).max(Integer::div_ceil(&-&delta0, &b1));
    let gamma = gamma0 + &k * &c1;
    let delta = delta0 + &k * &b1;
    debug_assert_eq!(&(b * &gamma) - &(c * &delta), *a);
    debug_assert!(!gamma.is_negative() && !delta.is_negative());
    Ok((gamma, delta))
}

/// Convert a small BigInt to i64 (used for exponent arithmetic where values
/// are bounded by d).
pub(crate) fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("sequence value fits i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn validate_accepts_and_rejects() {
        assert!(validate(10, 3).is_ok());
        assert_eq!(validate(10, 4), Err(Error::NonCoprime { a: 10, b: 4 }));
        assert!(matches!(validate(10, 7), Err(Error::OutOfRange { .. })));
        let swapped = validate_with_swap(14, 11, true).unwrap();
        assert_eq!((swapped.d(), swapped.u()), (14, 3));
        assert!(matches!(validate(2, 1), Err(Error::OutOfRange { .. })));
        assert!(matches!(validate(9, 0), Err(Error::OutOfRange { .. })));
        assert!(matches!(validate(9, 9), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn euclid_data_10_3() {
        let pair = validate(10, 3).unwrap();
        let e = euclid_data(&pair);
        assert_eq!(e.a_seq, vec![big(7), big(3), big(1), big(0)]);
        assert_eq!(e.q_seq, vec![big(2), big(3)]);
        assert_eq!(e.p, 3);
        assert_eq!(e.q, 5);
        assert_eq!(e.s_seq, vec![big(0), big(1), big(-2), big(7)]);
        assert_eq!(e.t_seq, vec![big(1), big(0), big(1), big(-3)]);
    }

    #[test]
    fn euclid_data_14_3() {
        let pair = validate(14, 3).unwrap();
        let e = euclid_data(&pair);
        assert_eq!(e.a_seq, vec![big(11), big(3), big(2), big(1), big(0)]);
        assert_eq!(e.q_seq, vec![big(3), big(1), big(2)]);
        assert_eq!(e.p, 4);
        assert_eq!(e.q, 6);
    }

    #[test]
    fn sers_data_10_3() {
        let pair = validate(10, 3).unwrap();
        let e = euclid_data(&pair);
        let s = sers_data(&pair, &e);
        let bc: Vec<(i64, i64)> = (1..=6)
            .map(|n| {
                (
                    i64::try_from(&s.b_seq[n]).unwrap(),
                    i64::try_from(&s.c_seq[n]).unwrap(),
                )
            })
            .collect();
        assert_eq!(bc, vec![(7, 3), (4, 3), (3, 1), (2, 1), (1, 1), (1, 0)]);
        let quad: Vec<(i64, i64, i64, i64)> = (1..=6)
            .map(|n| {
                (
                    i64::try_from(&s.sigma_seq[n]).unwrap(),
                    i64::try_from(&s.tau_seq[n]).unwrap(),
                    i64::try_from(&s.alpha_seq[n]).unwrap(),
                    i64::try_from(&s.beta_seq[n]).unwrap(),
                )
            })
            .collect();
        assert_eq!(
            quad,
            vec![
                (0, 1, 1, 0),
                (-1, 1, 1, 0),
                (1, 0, -2, 1),
                (3, -1, -2, 1),
                (5, -2, -2, 1),
                (-2, 1, 7, -3),
            ]
        );
        assert_eq!(s.m_seq, vec![1, 3, 6, 7]);
    }

    #[test]
    fn sers_data_14_3() {
        let pair = validate(14, 3).unwrap();
        let e = euclid_data(&pair);
        let s = sers_data(&pair, &e);
        let bc: Vec<(i64, i64)> = (1..=7)
            .map(|n| {
                (
                    i64::try_from(&s.b_seq[n]).unwrap(),
                    i64::try_from(&s.c_seq[n]).unwrap(),
                )
            })
            .collect();
        assert_eq!(
            bc,
            vec![(11, 3), (8, 3), (5, 3), (3, 2), (2, 1), (1, 1), (1, 0)]
        );
        assert_eq!(
            (
                i64::try_from(&s.sigma_seq[7]).unwrap(),
                i64::try_from(&s.tau_seq[7]).unwrap(),
            ),
            (4, -1)
        );
        assert_eq!(s.m_seq, vec![1, 4, 5, 7, 8]);
    }

    #[test]
    fn index_maps() {
        let pair = validate(10, 3).unwrap();
        let e = euclid_data(&pair);
        let s = sers_data(&pair, &e);
        assert_eq!(s.ell_of(5).unwrap(), 2);
        assert_eq!(s.ell_of(1).unwrap(), 1);
        assert_eq!(s.rho_of(2).unwrap(), 6);
        assert_eq!(s.rho_of(1).unwrap(), 2);
        assert!(matches!(s.ell_of(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(s.rho_of(6), Err(Error::IndexOutOfRange { .. })));

        let pair = validate(14, 3).unwrap();
        let e = euclid_data(&pair);
        let s = sers_data(&pair, &e);
        assert_eq!(s.ell_of(4).unwrap(), 2);
        assert_eq!(s.rho_of(6).unwrap(), 8);
    }

    #[test]
    fn minimal_solution_examples() {
        let sol = minimal_solution(&big(7), &big(7), &big(3)).unwrap();
        assert_eq!(sol, (big(1), big(0)));
        let sol = minimal_solution(&big(4), &big(7), &big(3)).unwrap();
        assert_eq!(sol, (big(1), big(1)));
        let sol = minimal_solution(&big(1), &big(3), &big(7)).unwrap();
        assert_eq!(sol, (big(5), big(2)));
        assert_eq!(
            minimal_solution(&big(3), &big(4), &big(2)),
            Err(Error::NoSolution)
        );
        assert!(matches!(
            minimal_solution(&big(3), &big(4), &big(4)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn minimal_solution_matches_brute_force() {
        for b in 1i64..=12 {
            for c in 1i64..=12 {
                if b == c {
                    continue;
                }
                for a in 1i64..=20 {
                    let g = num_integer::gcd(b, c);
                    let expect_none = a % g != 0;
                    let got = minimal_solution(&big(a), &big(b), &big(c));
                    if expect_none {
                        assert_eq!(got, Err(Error::NoSolution));
                        continue;
                    }
                    let (gamma, delta) = got.unwrap();
                    // Brute force the minimizer of gamma + delta.
                    let mut best: Option<(i64, i64)> = None;
                    for g0 in 0..=(b * c + a).abs() {
                        let num = b * g0 - a;
                        if num >= 0 && num % c == 0 {
                            let d0 = num / c;
                            if best.is_none_or(|(bg, bd)| g0 + d0 < bg + bd) {
                                best = Some((g0, d0));
                            }
                        }
                        if best.is_some() && g0 > c + a {
                            break;
                        }
                    }
                    let (bg, bd) = best.expect("solution exists when gcd divides");
                    assert_eq!((gamma, delta), (big(bg), big(bd)), "a={a} b={b} c={c}");
                    // Remark: the minimal solution satisfies gamma < c or delta < b.
                    assert!(bg < c || bd < b);
                }
            }
        }
    }
}
