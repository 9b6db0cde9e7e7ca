//! Independent cross-checks of the closed-form families.
//!
//! Nothing in this module trusts the formulas of [`crate::reesfamilies`]: the
//! kernel of the Rees map is recomputed from its very definition in two
//! different ways (variable elimination and saturation of the symmetric
//! algebra presentation), syzygies are computed from scratch by a
//! cofactor-tracking Buchberger run, and the initial ideal is compared
//! against an explicitly described monomial set. Agreement of all routes is
//! what the verification commands report.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Error;
use crate::euclid::minimal_solution;
use crate::polyengine::{
    buchberger, module_equal, reduce_basis, reduce_poly, syzygy_basis, ModElem, ModuleOrder,
    Monomial, Poly, TermOrder, NVARS, T0, T1, X0, X1, X2, Z,
};
use crate::reesfamilies::{f0_family, f1_family, ReesSetup};
use crate::{Deadline, Result};

fn one() -> BigRational {
    BigRational::one()
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// The three relations defining the Rees map as an ideal of `K[Z, T, X]`:
/// `X0 - Z T0^d`, `X1 - Z T0^(d-u) T1^u`, `X2 - Z T1^d`. Eliminating `Z`
/// from the ideal they generate yields the kernel.
pub fn rees_map_generators(setup: &ReesSetup) -> Vec<Poly> {
    let d = u32::try_from(setup.d()).expect("degree within supported range");
    let u = u32::try_from(setup.u()).expect("parameter within supported range");
    let image = |t0: u32, t1: u32| {
        let mut m = [0u32; NVARS];
        m[T0] = t0;
        m[T1] = t1;
        m[Z] = 1;
        Monomial(m)
    };
    vec![
        Poly::from_int_terms(&[(1, Monomial::var(X0, 1)), (-1, image(d, 0))]),
        Poly::from_int_terms(&[(1, Monomial::var(X1, 1)), (-1, image(d - u, u))]),
        Poly::from_int_terms(&[(1, Monomial::var(X2, 1)), (-1, image(0, d))]),
    ]
}

/// Reduced Groebner basis (under the active lexicographic order, listed with
/// ascending leading terms) of the kernel of the Rees map, computed by
/// eliminating `Z` from the ideal of [`rees_map_generators`].
///
/// # Errors
/// [`Error::DeadlineExceeded`] if the deadline expires mid-computation.
pub fn kernel_by_elimination(setup: &ReesSetup, deadline: &dyn Deadline) -> Result<Vec<Poly>> {
    let elim = TermOrder::elimination_for(setup.sigma_q_positive());
    let gb = buchberger(&rees_map_generators(setup), &elim, deadline)?;
    let reduced = reduce_basis(&gb, &elim)?;
    // The restriction of the elimination order to Z-free monomials is the
    // active lexicographic order, so the Z-free part is the reduced Groebner
    // basis of the elimination ideal under that order, already sorted.
    Ok(reduced
        .into_iter()
        .filter(|g| g.terms().iter().all(|t| t.mon.exp(Z) == 0))
        .collect())
}

/// The presentation of the symmetric algebra of the base-point ideal: the
/// two X-linear generators `T0^(d-u) X2 - T1^(d-u) X1` and
/// `T0^u X1 - T1^u X0` (the two syzygies of the parametrizing monomials).
/// The kernel of the Rees map is their saturation with respect to `T0 T1`.
pub fn sym_presentation(setup: &ReesSetup) -> Vec<Poly> {
    let d = u32::try_from(setup.d()).expect("degree within supported range");
    let u = u32::try_from(setup.u()).expect("parameter within supported range");
    let t = |slot: usize, e: u32, x: usize| Monomial::var(slot, e).mul(&Monomial::var(x, 1));
    vec![
        Poly::from_int_terms(&[(1, t(T0, d - u, X2)), (-1, t(T1, d - u, X1))]),
        Poly::from_int_terms(&[(1, t(T0, u, X1)), (-1, t(T1, u, X0))]),
    ]
}

/// Reduced Groebner basis (under the active lexicographic order) of the
/// ideal quotient `I : f`, computed with the auxiliary variable `Z`:
/// `I` is intersected with the principal ideal of `f` by eliminating `Z`
/// from `Z I + (1 - Z) f`, and every generator of the intersection is then
/// divided exactly by `f`.
///
/// Inputs must be `Z`-free; `f` must be nonzero.
///
/// # Errors
/// [`Error::ZeroElement`] if `f` is zero; [`Error::DeadlineExceeded`] if the
/// deadline expires.
pub fn colon_by_element(
    ideal: &[Poly],
    f: &Poly,
    sigma_q_positive: bool,
    deadline: &dyn Deadline,
) -> Result<Vec<Poly>> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let elim = TermOrder::elimination_for(sigma_q_positive);
    let lex = TermOrder::lex_for(sigma_q_positive);
    let z = Poly::monomial(one(), Monomial::var(Z, 1));
    let one_minus_z = Poly::from_int_terms(&[(1, Monomial::one()), (-1, Monomial::var(Z, 1))]);
    let mut gens: Vec<Poly> = ideal.iter().map(|g| g.mul(&z)).collect();
    gens.push(one_minus_z.mul(f));
    let gb = buchberger(&gens, &elim, deadline)?;
    let intersection: Vec<Poly> = reduce_basis(&gb, &elim)?
        .into_iter()
        .filter(|g| g.terms().iter().all(|t| t.mon.exp(Z) == 0))
        .collect();
    let mut quotient = Vec::with_capacity(intersection.len());
    for g in &intersection {
        let (rem, quots) = reduce_poly(g, core::slice::from_ref(f), &lex)?;
        assert!(
            rem.is_zero(),
            "member of the intersection with a principal ideal must be divisible"
        );
        quotient.push(quots[0].clone());
    }
    let gb2 = buchberger(&quotient, &lex, deadline)?;
    reduce_basis(&gb2, &lex)
}

/// Saturation `I : f^infinity` by iterating [`colon_by_element`] until the
/// reduced Groebner basis stabilizes.
///
/// # Errors
/// [`Error::NonTermination`] if no fixed point is reached within `cap`
/// iterations; otherwise as [`colon_by_element`].
pub fn saturate(
    ideal: &[Poly],
    f: &Poly,
    sigma_q_positive: bool,
    deadline: &dyn Deadline,
    cap: usize,
) -> Result<Vec<Poly>> {
    let lex = TermOrder::lex_for(sigma_q_positive);
    let gb = buchberger(ideal, &lex, deadline)?;
    let mut current = reduce_basis(&gb, &lex)?;
    for _ in 0..cap {
        let next = colon_by_element(&current, f, sigma_q_positive, deadline)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
    Err(Error::NonTermination { cap })
}

/// Reduced Groebner basis of the kernel of the Rees map computed by the
/// second, independent route: saturate the symmetric-algebra presentation
/// by `T0 T1`.
///
/// # Errors
/// As [`saturate`], with an iteration cap of `d^2`.
pub fn kernel_by_saturation(setup: &ReesSetup, deadline: &dyn Deadline) -> Result<Vec<Poly>> {
    let t0t1 = Poly::monomial(one(), Monomial::var(T0, 1).mul(&Monomial::var(T1, 1)));
    let cap = usize::try_from(setup.d() * setup.d()).expect("degree cap bounded");
    saturate(
        &sym_presentation(setup),
        &t0t1,
        setup.sigma_q_positive(),
        deadline,
        cap,
    )
}

// ---------------------------------------------------------------------------
// Syzygies from scratch.
// ---------------------------------------------------------------------------

/// Buchberger completion that tracks, for every basis member, its cofactor
/// row expressing it in terms of the original family.
fn tracked_groebner(
    family: &[Poly],
    ord: &TermOrder,
    deadline: &dyn Deadline,
) -> Result<(Vec<Poly>, Vec<ModElem>)> {
    let rank = family.len();
    let mut gb: Vec<Poly> = Vec::new();
    let mut cof: Vec<ModElem> = Vec::new();
    for (i, f) in family.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let inv = {
            let (c, _) = f.leading_term(ord)?;
            one() / c.clone()
        };
        gb.push(f.scale(&inv));
        cof.push(ModElem::basis(rank, i)?.scale(&inv));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..gb.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        if deadline.expired() {
            return Err(Error::DeadlineExceeded);
        }
        let (ci, mi) = {
            let (c, m) = gb[i].leading_term(ord)?;
            (c.clone(), *m)
        };
        let (cj, mj) = {
            let (c, m) = gb[j].leading_term(ord)?;
            (c.clone(), *m)
        };
        // Product criterion (valid for ideals): coprime leading monomials
        // always yield S-polynomials reducing to zero.
        if mi.is_coprime_with(&mj) {
            continue;
        }
        let lcm = mi.lcm(&mj);
        let ui = lcm.div(&mi).expect("lcm is divisible by both");
        let uj = lcm.div(&mj).expect("lcm is divisible by both");
        let spoly = gb[i]
            .mul_term(&(one() / ci.clone()), &ui)
            .sub(&gb[j].mul_term(&(one() / cj.clone()), &uj));
        let scof = cof[i]
            .mul_term(&(one() / ci), &ui)
            .sub(&cof[j].mul_term(&(one() / cj), &uj))?;
        let (rem, quots) = reduce_poly(&spoly, &gb, ord)?;
        if rem.is_zero() {
            continue;
        }
        let mut rcof = scof;
        for (k, qk) in quots.iter().enumerate() {
            if !qk.is_zero() {
                rcof = rcof.sub(&cof[k].mul_poly(qk))?;
            }
        }
        let inv = {
            let (c, _) = rem.leading_term(ord)?;
            one() / c.clone()
        };
        gb.push(rem.scale(&inv));
        cof.push(rcof.scale(&inv));
        let j_new = gb.len() - 1;
        for i_new in 0..j_new {
            pairs.push((i_new, j_new));
        }
    }
    Ok((gb, cof))
}

/// Generators of the syzygy module of an arbitrary polynomial family (no
/// Groebner assumption), as elements of the free module of rank
/// `family.len()`.
///
/// Method: complete the family to a Groebner basis while tracking cofactors,
/// pull the Schreyer syzygies of the completed basis back through the
/// cofactor rows, and add the unit syzygies `e_i - (reduction of f_i)` that
/// record how each original member re-expresses over the completed basis.
///
/// # Errors
/// [`Error::DeadlineExceeded`] if the deadline expires.
pub fn syzygies_of_family(
    family: &[Poly],
    ord: &TermOrder,
    deadline: &dyn Deadline,
) -> Result<Vec<ModElem>> {
    let rank = family.len();
    let mut syzygies: Vec<ModElem> = Vec::new();
    for (i, f) in family.iter().enumerate() {
        if f.is_zero() {
            syzygies.push(ModElem::basis(rank, i)?);
        }
    }
    let (gb, cof) = tracked_groebner(family, ord, deadline)?;
    if gb.is_empty() {
        return Ok(syzygies);
    }
    for s in syzygy_basis(&gb, ord)? {
        let coeffs = s.coefficient_vector();
        let mut pulled = ModElem::zero(rank);
        for (k, h) in coeffs.iter().enumerate() {
            if !h.is_zero() {
                pulled = pulled.add(&cof[k].mul_poly(h))?;
            }
        }
        if !pulled.is_zero() {
            syzygies.push(pulled);
        }
    }
    for (i, f) in family.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let (rem, quots) = reduce_poly(f, &gb, ord)?;
        assert!(
            rem.is_zero(),
            "family member must reduce to zero against the completed basis"
        );
        let mut unit = ModElem::basis(rank, i)?;
        for (k, qk) in quots.iter().enumerate() {
            if !qk.is_zero() {
                unit = unit.sub(&cof[k].mul_poly(qk))?;
            }
        }
        if !unit.is_zero() {
            syzygies.push(unit);
        }
    }
    debug_assert!(syzygies
        .iter()
        .all(|s| s.apply(family).map(|p| p.is_zero()).unwrap_or(false)));
    Ok(syzygies)
}

// ---------------------------------------------------------------------------
// The explicit initial-ideal description.
// ---------------------------------------------------------------------------

/// The `d + 1` monomials that generate the initial ideal of the kernel under
/// the active lexicographic order: the leading monomial of the implicit
/// plane-curve equation, the monomials `T0^a X0^delta X2^gamma` with
/// `(gamma, delta)` the minimal solution of `a = (d-u) gamma - u delta` for
/// `a = 1, ..., d-u`, and the monomials `T0^a X1^(gamma+delta)` with
/// `(gamma, delta)` the minimal solution of `a = u gamma - (d-u) delta` for
/// `a = 1, ..., u`.
pub fn monomial_set_s(setup: &ReesSetup) -> Vec<Monomial> {
    let d = setup.d() as i64;
    let u = setup.u() as i64;
    let cast = |v: &BigInt| {
        u32::try_from(crate::euclid::to_i64(v)).expect("minimal solutions are nonnegative")
    };
    let mut out = Vec::with_capacity(usize::try_from(d + 1).expect("degree fits"));
    let curve_lm = if setup.sigma_q_positive() {
        let mut m = [0u32; NVARS];
        m[X0] = u32::try_from(d - u).expect("fits");
        m[X2] = u32::try_from(u).expect("fits");
        Monomial(m)
    } else {
        Monomial::var(X1, u32::try_from(d).expect("fits"))
    };
    out.push(curve_lm);
    for a in 1..=(d - u) {
        let (gamma, delta) = minimal_solution(&big(a), &big(d - u), &big(u))
            .expect("coprime moduli admit solutions");
        let mut m = [0u32; NVARS];
        m[T0] = u32::try_from(a).expect("fits");
        m[X0] = cast(&delta);
        m[X2] = cast(&gamma);
        out.push(Monomial(m));
    }
    for a in 1..=u {
        let (gamma, delta) = minimal_solution(&big(a), &big(u), &big(d - u))
            .expect("coprime moduli admit solutions");
        let mut m = [0u32; NVARS];
        m[T0] = u32::try_from(a).expect("fits");
        m[X1] = cast(&gamma) + cast(&delta);
        out.push(Monomial(m));
    }
    debug_assert_eq!(out.len() as i64, d + 1);
    out
}

/// Whether two monomial families generate the same monomial ideal (mutual
/// divisibility of generators).
pub fn monomial_ideal_equal(a: &[Monomial], b: &[Monomial]) -> bool {
    a.iter().all(|m| b.iter().any(|n| n.divides(m)))
        && b.iter().all(|m| a.iter().any(|n| n.divides(m)))
}

/// Whether a kernel element has one of the four support patterns that
/// bihomogeneous irreducible binomials of the kernel can take:
///
/// ```text
/// T0^a X0^g0 X2^g2 - T1^a X1^(g0+g2)   with a = -u g0 + (d-u) g2
/// T0^a X1^(h0+h2)  - T1^a X0^h0 X2^h2  with a =  u h0 - (d-u) h2
/// T0^a X2^(h0+h1)  - T1^a X0^h0 X1^h1  with a =  d h0 + (d-u) h1
/// T0^a X1^g1 X2^g2 - T1^a X0^(g1+g2)   with a =  u g1 + d g2
/// ```
///
/// (up to overall sign; the plane curve is the `a = 0` case of the first two
/// patterns).
pub fn matches_support_pattern(g: &Poly, d: u64, u: u64) -> bool {
    if !g.is_pm_binomial() {
        return false;
    }
    let (m1, m2) = (&g.terms()[0].mon, &g.terms()[1].mon);
    pattern_holds(m1, m2, d as i64, u as i64) || pattern_holds(m2, m1, d as i64, u as i64)
}

/// Checks the patterns with `lhs` as the `T0` side and `rhs` as the `T1`
/// side.
fn pattern_holds(lhs: &Monomial, rhs: &Monomial, d: i64, u: i64) -> bool {
    if lhs.exp(Z) != 0 || rhs.exp(Z) != 0 || lhs.exp(T1) != 0 || rhs.exp(T0) != 0 {
        return false;
    }
    let a = i64::from(lhs.exp(T0));
    if i64::from(rhs.exp(T1)) != a {
        return false;
    }
    let l = [
        i64::from(lhs.exp(X0)),
        i64::from(lhs.exp(X1)),
        i64::from(lhs.exp(X2)),
    ];
    let r = [
        i64::from(rhs.exp(X0)),
        i64::from(rhs.exp(X1)),
        i64::from(rhs.exp(X2)),
    ];
    if l.iter().sum::<i64>() != r.iter().sum::<i64>() {
        return false;
    }
    // Coprime X-supports: no variable on both sides.
    if (0..3).any(|i| l[i] > 0 && r[i] > 0) {
        return false;
    }
    // Pattern 1: X0^g0 X2^g2 vs X1^(g0+g2).
    (l[1] == 0 && r[0] == 0 && r[2] == 0 && a == -u * l[0] + (d - u) * l[2])
        // Pattern 2: X1^(h0+h2) vs X0^h0 X2^h2.
        || (l[0] == 0 && l[2] == 0 && r[1] == 0 && a == u * r[0] - (d - u) * r[2])
        // Pattern 3: X2^(h0+h1) vs X0^h0 X1^h1.
        || (l[0] == 0 && l[1] == 0 && r[2] == 0 && a == d * r[0] + (d - u) * r[1])
        // Pattern 4: X1^g1 X2^g2 vs X0^(g1+g2).
        || (l[0] == 0 && r[1] == 0 && r[2] == 0 && a == u * l[1] + d * l[2])
}

// ---------------------------------------------------------------------------
// The combined report.
// ---------------------------------------------------------------------------

/// Outcome of all oracle cross-checks for one input pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    /// The elimination kernel equals the closed-form generator family (as
    /// reduced Groebner bases).
    pub elimination_matches_family: bool,
    /// The saturation kernel equals the elimination kernel.
    pub saturation_matches_elimination: bool,
    /// The initial ideal of the kernel is generated by the explicit
    /// `d + 1`-element monomial set.
    pub initial_ideal_matches: bool,
    /// Every leading term of the closed-form family belongs to that set.
    pub family_leading_terms_in_set: bool,
    /// Every kernel basis element is a binomial of one of the four
    /// admissible support patterns.
    pub support_patterns_hold: bool,
    /// The from-scratch syzygies of the generators span the same module as
    /// the closed-form first-syzygy family.
    pub syzygies_match: bool,
}

impl OracleReport {
    /// Whether every cross-check passed.
    pub fn all_pass(&self) -> bool {
        self.elimination_matches_family
            && self.saturation_matches_elimination
            && self.initial_ideal_matches
            && self.family_leading_terms_in_set
            && self.support_patterns_hold
            && self.syzygies_match
    }

    /// The checks as `(name, passed)` pairs, in a fixed order.
    pub fn entries(&self) -> [(&'static str, bool); 6] {
        [
            (
                "elimination_matches_family",
                self.elimination_matches_family,
            ),
            (
                "saturation_matches_elimination",
                self.saturation_matches_elimination,
            ),
            ("initial_ideal_matches", self.initial_ideal_matches),
            (
                "family_leading_terms_in_set",
                self.family_leading_terms_in_set,
            ),
            ("support_patterns_hold", self.support_patterns_hold),
            ("syzygies_match", self.syzygies_match),
        ]
    }
}

/// Run every oracle cross-check for one input pair.
///
/// # Errors
/// [`Error::DeadlineExceeded`] if the deadline expires; Groebner-machinery
/// errors propagate.
pub fn oracle_report(setup: &ReesSetup, deadline: &dyn Deadline) -> Result<OracleReport> {
    let ord = setup.term_order();
    let f0 = f0_family(setup);
    let mut f0_sorted = f0.clone();
    f0_sorted.sort_by(|a, b| {
        let (_, ma) = a.leading_term(&ord).expect("generators are nonzero");
        let (_, mb) = b.leading_term(&ord).expect("generators are nonzero");
        ord.cmp_monomials(ma, mb)
    });

    let elimination = kernel_by_elimination(setup, deadline)?;
    let elimination_matches_family = elimination == f0_sorted;
    let saturation = kernel_by_saturation(setup, deadline)?;
    let saturation_matches_elimination = saturation == elimination;

    let set_s = monomial_set_s(setup);
    let mut kernel_lts = Vec::with_capacity(elimination.len());
    for g in &elimination {
        let (_, m) = g.leading_term(&ord)?;
        kernel_lts.push(*m);
    }
    let initial_ideal_matches = monomial_ideal_equal(&kernel_lts, &set_s);
    let family_leading_terms_in_set = f0.iter().all(|g| {
        g.leading_term(&ord)
            .map(|(_, m)| set_s.contains(m))
            .unwrap_or(false)
    });
    let support_patterns_hold = elimination
        .iter()
        .all(|g| matches_support_pattern(g, setup.d(), setup.u()));

    let scratch = syzygies_of_family(&f0, &ord, deadline)?;
    let induced0 = ModuleOrder::induced_from_polys(&f0, ord)?;
    let f1 = f1_family(setup);
    let syzygies_match = module_equal(&scratch, &f1, &induced0, deadline)?;

    Ok(OracleReport {
        elimination_matches_family,
        saturation_matches_elimination,
        initial_ideal_matches,
        family_leading_terms_in_set,
        support_patterns_hold,
        syzygies_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::NoDeadline;

    fn mon(t0: u32, t1: u32, x0: u32, x1: u32, x2: u32) -> Monomial {
        Monomial([t0, t1, x0, x1, x2, 0])
    }

    fn setup(d: u64, u: u64) -> ReesSetup {
        ReesSetup::new(d, u).expect("valid pair")
    }

    #[test]
    fn elimination_kernel_5_2_matches_family() {
        let s = setup(5, 2);
        let kernel = kernel_by_elimination(&s, &NoDeadline).unwrap();
        let ord = s.term_order();
        let mut family = f0_family(&s);
        family.sort_by(|a, b| {
            let (_, ma) = a.leading_term(&ord).unwrap();
            let (_, mb) = b.leading_term(&ord).unwrap();
            ord.cmp_monomials(ma, mb)
        });
        assert_eq!(kernel, family);
    }

    #[test]
    fn saturation_kernel_5_2_matches_elimination() {
        let s = setup(5, 2);
        let a = kernel_by_elimination(&s, &NoDeadline).unwrap();
        let b = kernel_by_saturation(&s, &NoDeadline).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn colon_of_principal_multiple() {
        // (T0 X0) : T0 = (X0).
        let t0x0 = Poly::from_int_terms(&[(1, mon(1, 0, 1, 0, 0))]);
        let t0 = Poly::from_int_terms(&[(1, mon(1, 0, 0, 0, 0))]);
        let x0 = Poly::from_int_terms(&[(1, mon(0, 0, 1, 0, 0))]);
        let got = colon_by_element(&[t0x0], &t0, true, &NoDeadline).unwrap();
        assert_eq!(got, [x0]);
    }

    #[test]
    fn monomial_set_10_3() {
        let s = setup(10, 3);
        let set = monomial_set_s(&s);
        assert_eq!(set.len(), 11);
        let expected = [
            mon(0, 0, 7, 0, 3),
            mon(1, 0, 2, 0, 1),
            mon(2, 0, 4, 0, 2),
            mon(3, 0, 6, 0, 3),
            mon(4, 0, 1, 0, 1),
            mon(5, 0, 3, 0, 2),
            mon(6, 0, 5, 0, 3),
            mon(7, 0, 0, 0, 1),
            mon(1, 0, 0, 7, 0),
            mon(2, 0, 0, 4, 0),
            mon(3, 0, 0, 1, 0),
        ];
        assert_eq!(set, expected);
    }

    #[test]
    fn support_patterns_accept_the_family_and_reject_garbage() {
        let s = setup(10, 3);
        for g in f0_family(&s) {
            assert!(matches_support_pattern(&g, 10, 3), "{:?}", g);
        }
        // X0*X2 - X1^2 is bihomogeneous with coprime supports but fails the
        // diophantine constraints for (10, 3).
        let bad = Poly::from_int_terms(&[(1, mon(0, 0, 1, 0, 1)), (-1, mon(0, 0, 0, 2, 0))]);
        assert!(!matches_support_pattern(&bad, 10, 3));
    }

    #[test]
    fn syzygies_of_koszul_pair() {
        // syz(T0, T1) = <T1 e1 - T0 e2>.
        let t0 = Poly::from_int_terms(&[(1, mon(1, 0, 0, 0, 0))]);
        let t1 = Poly::from_int_terms(&[(1, mon(0, 1, 0, 0, 0))]);
        let ord = TermOrder::LexSigmaPositive;
        let syz = syzygies_of_family(&[t0.clone(), t1.clone()], &ord, &NoDeadline).unwrap();
        let expected = ModElem::from_int_terms(
            2,
            &[(1, mon(0, 1, 0, 0, 0), 0), (-1, mon(1, 0, 0, 0, 0), 1)],
        )
        .unwrap();
        let induced = ModuleOrder::induced_from_polys(&[t0, t1], ord).unwrap();
        assert!(module_equal(&syz, &[expected], &induced, &NoDeadline).unwrap());
    }

    #[test]
    fn oracle_report_5_2_all_pass() {
        let s = setup(5, 2);
        let report = oracle_report(&s, &NoDeadline).unwrap();
        assert!(report.all_pass(), "{:?}", report);
    }

    #[test]
    fn oracle_report_7_3_all_pass() {
        let s = setup(7, 3);
        let report = oracle_report(&s, &NoDeadline).unwrap();
        assert!(report.all_pass(), "{:?}", report);
    }
}
