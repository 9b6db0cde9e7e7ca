//! Division with quotients, S-pairs, Buchberger's algorithm, reduced bases,
//! and Schreyer syzygy extraction — implemented once for free-module elements
//! and wrapped for the rank-1 (ideal) case.
//!
//! Everything is deterministic: division always picks the basis member of
//! lowest index whose leading term divides, the S-pair queue is processed in
//! ascending least-common-multiple order (ties by index pair), and reduced
//! bases come out sorted ascending by leading term.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

use crate::error::Error;
use crate::{Deadline, Result};

use super::modelem::ModElem;
use super::monomial::Monomial;
use super::order::{ModuleOrder, TermOrder};
use super::poly::Poly;

fn poly_to_mod(f: &Poly) -> ModElem {
    ModElem::from_coefficient_vector(core::slice::from_ref(f))
}

fn mod_to_poly(v: &ModElem) -> Poly {
    debug_assert_eq!(v.rank(), 1);
    v.coefficient(0)
}

fn check_equal_ranks(family: &[ModElem]) -> Result<usize> {
    let mut rank = None;
    for g in family {
        match rank {
            None => rank = Some(g.rank()),
            Some(r) => {
                if g.rank() != r {
                    return Err(Error::RankMismatch {
                        left: r,
                        right: g.rank(),
                    });
                }
            }
        }
    }
    Ok(rank.unwrap_or(0))
}

/// The S-pair of two module elements:
/// `(lcm / lt(f)) * f - (lcm / lt(g)) * g` where `lcm` is the least common
/// multiple of the leading monomials. Zero when the leading terms live in
/// different coordinates.
///
/// # Errors
/// [`Error::RankMismatch`] on differing ranks; [`Error::ZeroElement`] if
/// either element is zero.
pub fn s_pair_mod(f: &ModElem, g: &ModElem, ord: &ModuleOrder) -> Result<ModElem> {
    if f.rank() != g.rank() {
        return Err(Error::RankMismatch {
            left: f.rank(),
            right: g.rank(),
        });
    }
    let (cf, mf, inf) = f.leading_term(ord)?;
    let (cg, mg, ing) = g.leading_term(ord)?;
    if inf != ing {
        return Ok(ModElem::zero(f.rank()));
    }
    let lcm = mf.lcm(mg);
    let uf = lcm.div(mf).expect("lcm divisible by both inputs");
    let ug = lcm.div(mg).expect("lcm divisible by both inputs");
    let cf = cf.clone();
    let cg = cg.clone();
    let sf = f.mul_term(&(BigRational::one() / cf), &uf);
    let sg = g.mul_term(&(BigRational::one() / cg), &ug);
    sf.sub(&sg)
}

/// Divide `f` by the family `basis`, returning `(remainder, quotients)` with
/// `f = sum_k quotients[k] * basis[k] + remainder` and no remainder term
/// divisible by any leading term of the family.
///
/// At each step the divisor chosen is the basis member of *lowest index*
/// whose leading term divides the current leading term, which makes the
/// result deterministic. Every intermediate leading term is bounded by the
/// leading term of `f` (the standard-representation degree bound); debug
/// builds assert this and the reconstruction identity.
///
/// # Errors
/// [`Error::RankMismatch`] if ranks disagree; [`Error::ZeroElement`] if some
/// basis member is zero.
pub fn reduce_mod(
    f: &ModElem,
    basis: &[ModElem],
    ord: &ModuleOrder,
) -> Result<(ModElem, Vec<Poly>)> {
    let rank = f.rank();
    for g in basis {
        if g.rank() != rank {
            return Err(Error::RankMismatch {
                left: rank,
                right: g.rank(),
            });
        }
    }
    let mut lts = Vec::with_capacity(basis.len());
    for g in basis {
        let (c, m, i) = g.leading_term(ord)?;
        lts.push((c.clone(), *m, i));
    }

    let mut quotients = alloc::vec![Poly::zero(); basis.len()];
    let mut remainder = ModElem::zero(rank);
    let mut rest = f.clone();
    #[cfg(debug_assertions)]
    let bound = f.leading_term(ord).ok().map(|(_, m, i)| (*m, i));
    'outer: while !rest.is_zero() {
        let (c, m, idx) = {
            let (c, m, idx) = rest.leading_term(ord).expect("nonzero");
            (c.clone(), *m, idx)
        };
        #[cfg(debug_assertions)]
        if let Some((bm, bi)) = &bound {
            debug_assert_ne!(
                ord.cmp_terms((&m, idx), (bm, *bi)),
                core::cmp::Ordering::Greater,
                "division exceeded the standard-representation degree bound"
            );
        }
        for (k, (gc, gm, gidx)) in lts.iter().enumerate() {
            if *gidx == idx && gm.divides(&m) {
                let um = m.div(gm).expect("checked divisibility");
                let uc = &c / gc;
                rest = rest.sub(&basis[k].mul_term(&uc, &um))?;
                quotients[k] = quotients[k].add(&Poly::monomial(uc, um));
                continue 'outer;
            }
        }
        let t = ModElem::from_terms(rank, alloc::vec![(c, m, idx)])?;
        remainder = remainder.add(&t)?;
        rest = rest.sub(&t)?;
    }

    #[cfg(debug_assertions)]
    {
        let mut recon = remainder.clone();
        for (q, g) in quotients.iter().zip(basis) {
            recon = recon.add(&g.mul_poly(q)).expect("ranks agree");
        }
        debug_assert_eq!(recon, *f, "division reconstruction identity failed");
    }
    Ok((remainder, quotients))
}

/// All candidate S-pair indices `(i, j)`, `i < j`, whose leading terms share
/// a coordinate.
fn same_coord_pairs(lts: &[(BigRational, Monomial, usize)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..lts.len() {
        for i in 0..j {
            if lts[i].2 == lts[j].2 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Buchberger's algorithm: completes `gens` to a Groebner basis under `ord`.
///
/// Zero generators are dropped; basis elements are kept monic. The S-pair
/// queue is processed in ascending order of the pair's least common multiple
/// (ties by index pair). For rank-1 input (an ideal) the coprime-leading-term
/// criterion is applied; it is not valid for general modules and is not used
/// there. Cross-coordinate pairs have zero S-pairs and are never enqueued.
///
/// # Errors
/// [`Error::RankMismatch`] on mixed ranks; [`Error::DeadlineExceeded`] if the
/// deadline expires.
pub fn buchberger_mod(
    gens: &[ModElem],
    ord: &ModuleOrder,
    deadline: &dyn Deadline,
) -> Result<Vec<ModElem>> {
    check_equal_ranks(gens)?;
    let mut basis: Vec<ModElem> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.make_monic(ord)?);
        }
    }
    if basis.is_empty() {
        return Ok(basis);
    }
    let rank1 = basis[0].rank() == 1;
    let mut lts: Vec<(BigRational, Monomial, usize)> = Vec::with_capacity(basis.len());
    for g in &basis {
        let (c, m, i) = g.leading_term(ord)?;
        lts.push((c.clone(), *m, i));
    }
    // Queue entries: (lcm, i, j). Kept sorted descending so the smallest is
    // popped from the back.
    let mut queue: Vec<(Monomial, usize, usize)> = same_coord_pairs(&lts)
        .into_iter()
        .map(|(i, j)| (lts[i].1.lcm(&lts[j].1), i, j))
        .collect();
    let mut dirty = true;
    while !queue.is_empty() {
        if deadline.expired() {
            return Err(Error::DeadlineExceeded);
        }
        if dirty {
            queue.sort_by(|a, b| {
                ord.cmp_terms((&b.0, 0), (&a.0, 0))
                    .then_with(|| b.1.cmp(&a.1))
                    .then_with(|| b.2.cmp(&a.2))
            });
            dirty = false;
        }
        let (_, i, j) = queue.pop().expect("nonempty");
        if rank1 && lts[i].1.is_coprime_with(&lts[j].1) {
            continue;
        }
        let s = s_pair_mod(&basis[i], &basis[j], ord)?;
        if s.is_zero() {
            continue;
        }
        let (nf, _) = reduce_mod(&s, &basis, ord)?;
        if nf.is_zero() {
            continue;
        }
        let nf = nf.make_monic(ord)?;
        let (c, m, idx) = {
            let (c, m, i) = nf.leading_term(ord)?;
            (c.clone(), *m, i)
        };
        let new = basis.len();
        for (k, lt) in lts.iter().enumerate() {
            if lt.2 == idx {
                queue.push((lt.1.lcm(&m), k, new));
            }
        }
        lts.push((c, m, idx));
        basis.push(nf);
        dirty = true;
    }
    Ok(basis)
}

/// Whether every same-coordinate S-pair of `basis` reduces to zero modulo
/// `basis` — i.e. whether `basis` is a Groebner basis under `ord`.
///
/// # Errors
/// [`Error::RankMismatch`] on mixed ranks; [`Error::ZeroElement`] if some
/// member is zero.
pub fn is_groebner_mod(basis: &[ModElem], ord: &ModuleOrder) -> Result<bool> {
    check_equal_ranks(basis)?;
    let mut lts = Vec::with_capacity(basis.len());
    for g in basis {
        let (c, m, i) = g.leading_term(ord)?;
        lts.push((c.clone(), *m, i));
    }
    let rank1 = basis.first().map(|g| g.rank() == 1).unwrap_or(true);
    for (i, j) in same_coord_pairs(&lts) {
        if rank1 && lts[i].1.is_coprime_with(&lts[j].1) {
            continue;
        }
        let s = s_pair_mod(&basis[i], &basis[j], ord)?;
        if s.is_zero() {
            continue;
        }
        let (nf, _) = reduce_mod(&s, basis, ord)?;
        if !nf.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The reduced Groebner basis spanning the same module as the Groebner basis
/// `basis`: monic, no element's term divisible by another element's leading
/// term, sorted ascending by leading term under `ord`.
///
/// # Errors
/// [`Error::NotGroebner`] if the result fails the Groebner self-check (which
/// happens exactly when the input was not a Groebner basis);
/// [`Error::RankMismatch`] on mixed ranks.
pub fn reduce_basis_mod(basis: &[ModElem], ord: &ModuleOrder) -> Result<Vec<ModElem>> {
    check_equal_ranks(basis)?;
    let mut work: Vec<ModElem> = Vec::new();
    for g in basis {
        if !g.is_zero() {
            work.push(g.make_monic(ord)?);
        }
    }
    // Sort ascending by leading term so divisors precede multiples; ties
    // (equal leading terms) are broken structurally for determinism.
    let mut keyed: Vec<(Monomial, usize, ModElem)> = Vec::with_capacity(work.len());
    for g in work {
        let (_, m, i) = g.leading_term(ord)?;
        keyed.push((*m, i, g));
    }
    keyed.sort_by(|a, b| {
        ord.cmp_terms((&a.0, a.1), (&b.0, b.1))
            .then_with(|| a.2.terms().len().cmp(&b.2.terms().len()))
    });
    let mut minimal: Vec<(Monomial, usize, ModElem)> = Vec::new();
    for (m, i, g) in keyed {
        let redundant = minimal.iter().any(|(pm, pi, _)| *pi == i && pm.divides(&m));
        if !redundant {
            minimal.push((m, i, g));
        }
    }
    // Tail-reduce each element against all the others. Leading terms are
    // pairwise indivisible, so only tails change.
    let elems: Vec<ModElem> = minimal.iter().map(|(_, _, g)| g.clone()).collect();
    let mut reduced = Vec::with_capacity(elems.len());
    for (k, g) in elems.iter().enumerate() {
        let others: Vec<ModElem> = elems
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, h)| h.clone())
            .collect();
        let (nf, _) = reduce_mod(g, &others, ord)?;
        if nf.is_zero() {
            // Cannot happen when leading terms are pairwise indivisible.
            return Err(Error::NotGroebner);
        }
        reduced.push(nf.make_monic(ord)?);
    }
    // Already in ascending leading-term order from the sort above.
    if !is_groebner_mod(&reduced, ord)? {
        return Err(Error::NotGroebner);
    }
    Ok(reduced)
}

/// Schreyer syzygies of a Groebner basis: for every same-coordinate pair
/// `i < j` the S-pair has a standard representation
/// `S(g_i, g_j) = sum_k q_k g_k`, and
/// `s_{i,j} = (lcm/lt(g_i)) E_i - (lcm/lt(g_j)) E_j - sum_k q_k E_k`
/// is a syzygy. The returned family, ordered by `(i, j)` ascending, is a
/// Groebner basis of the full syzygy module under the order induced by the
/// input family; its leading terms are the `(lcm/lt(g_i)) E_i` (asserted in
/// debug builds).
///
/// # Errors
/// [`Error::NotGroebner`] if some S-pair has a nonzero normal form (the input
/// was not a Groebner basis); [`Error::RankMismatch`] on mixed ranks.
pub fn syzygy_basis_mod(gb: &[ModElem], ord: &ModuleOrder) -> Result<Vec<ModElem>> {
    check_equal_ranks(gb)?;
    let mut lts = Vec::with_capacity(gb.len());
    for g in gb {
        let (c, m, i) = g.leading_term(ord)?;
        lts.push((c.clone(), *m, i));
    }
    let rank = gb.len();
    let mut out = Vec::new();
    for (i, j) in same_coord_pairs(&lts) {
        let lcm = lts[i].1.lcm(&lts[j].1);
        let ui_mon = lcm.div(&lts[i].1).expect("lcm divisible");
        let uj_mon = lcm.div(&lts[j].1).expect("lcm divisible");
        let ui_coeff = BigRational::one() / lts[i].0.clone();
        let uj_coeff = BigRational::one() / lts[j].0.clone();
        let s = gb[i]
            .mul_term(&ui_coeff, &ui_mon)
            .sub(&gb[j].mul_term(&uj_coeff, &uj_mon))?;
        let (nf, quotients) = reduce_mod(&s, gb, ord)?;
        if !nf.is_zero() {
            return Err(Error::NotGroebner);
        }
        let mut raw: Vec<(BigRational, Monomial, usize)> =
            alloc::vec![(ui_coeff, ui_mon, i), (-uj_coeff, uj_mon, j),];
        for (k, q) in quotients.iter().enumerate() {
            for t in q.terms() {
                raw.push((-t.coeff.clone(), t.mon, k));
            }
        }
        let syz = ModElem::from_terms(rank, raw)?;
        #[cfg(debug_assertions)]
        {
            let induced = ModuleOrder::induced_from_modelems(gb, ord)?;
            let (_, lm, li) = syz.leading_term(&induced)?;
            debug_assert_eq!((*lm, li), (ui_mon, i), "syzygy leading-term formula failed");
        }
        out.push(syz);
    }
    Ok(out)
}

/// Check the syzygy leading-term formula: under the order induced by `gb`,
/// the leading term of the syzygy for the pair `(i, j)` is
/// `(lcm / lm(g_i)) E_i`. `syzygies` must be listed in the same pair order
/// that [`syzygy_basis_mod`] produces.
///
/// # Errors
/// Propagates zero-element/rank errors from leading-term computations.
pub fn leading_term_formula_holds(
    gb: &[ModElem],
    ord: &ModuleOrder,
    syzygies: &[ModElem],
) -> Result<bool> {
    check_equal_ranks(gb)?;
    let mut lts = Vec::with_capacity(gb.len());
    for g in gb {
        let (c, m, i) = g.leading_term(ord)?;
        lts.push((c.clone(), *m, i));
    }
    let pairs = same_coord_pairs(&lts);
    if pairs.len() != syzygies.len() {
        return Ok(false);
    }
    let induced = ModuleOrder::induced_from_modelems(gb, ord)?;
    for ((i, j), s) in pairs.into_iter().zip(syzygies) {
        let lcm = lts[i].1.lcm(&lts[j].1);
        let expect = lcm.div(&lts[i].1).expect("lcm divisible");
        let (_, lm, li) = s.leading_term(&induced)?;
        if (*lm, li) != (expect, i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether two generating families span the same submodule, decided by
/// comparing reduced Groebner bases (which are unique for a fixed order).
///
/// # Errors
/// [`Error::RankMismatch`] if the families have incompatible ranks;
/// [`Error::DeadlineExceeded`] if the deadline expires.
pub fn module_equal(
    a: &[ModElem],
    b: &[ModElem],
    ord: &ModuleOrder,
    deadline: &dyn Deadline,
) -> Result<bool> {
    let ra = check_equal_ranks(a)?;
    let rb = check_equal_ranks(b)?;
    if !a.is_empty() && !b.is_empty() && ra != rb {
        return Err(Error::RankMismatch {
            left: ra,
            right: rb,
        });
    }
    let gb_a = reduce_basis_mod(&buchberger_mod(a, ord, deadline)?, ord)?;
    let gb_b = reduce_basis_mod(&buchberger_mod(b, ord, deadline)?, ord)?;
    Ok(gb_a == gb_b)
}

// ---------------------------------------------------------------------------
// Rank-1 wrappers: ideals of the polynomial ring.
// ---------------------------------------------------------------------------

/// The S-polynomial `(lcm / lt(f)) * f - (lcm / lt(g)) * g`.
///
/// # Errors
/// [`Error::ZeroElement`] if either polynomial is zero.
pub fn s_polynomial(f: &Poly, g: &Poly, ord: &TermOrder) -> Result<Poly> {
    let s = s_pair_mod(&poly_to_mod(f), &poly_to_mod(g), &ModuleOrder::Term(*ord))?;
    Ok(mod_to_poly(&s))
}

/// Polynomial division with quotients; see [`reduce_mod`].
///
/// # Errors
/// [`Error::ZeroElement`] if some basis member is zero.
pub fn reduce_poly(f: &Poly, basis: &[Poly], ord: &TermOrder) -> Result<(Poly, Vec<Poly>)> {
    let mbasis: Vec<ModElem> = basis.iter().map(poly_to_mod).collect();
    let (r, q) = reduce_mod(&poly_to_mod(f), &mbasis, &ModuleOrder::Term(*ord))?;
    Ok((mod_to_poly(&r), q))
}

/// Buchberger's algorithm for ideals; see [`buchberger_mod`].
///
/// # Errors
/// [`Error::DeadlineExceeded`] if the deadline expires.
pub fn buchberger(gens: &[Poly], ord: &TermOrder, deadline: &dyn Deadline) -> Result<Vec<Poly>> {
    let mgens: Vec<ModElem> = gens.iter().map(poly_to_mod).collect();
    let gb = buchberger_mod(&mgens, &ModuleOrder::Term(*ord), deadline)?;
    Ok(gb.iter().map(mod_to_poly).collect())
}

/// Groebner-basis check for ideals; see [`is_groebner_mod`].
///
/// # Errors
/// [`Error::ZeroElement`] if some member is zero.
pub fn is_groebner(basis: &[Poly], ord: &TermOrder) -> Result<bool> {
    let mbasis: Vec<ModElem> = basis.iter().map(poly_to_mod).collect();
    is_groebner_mod(&mbasis, &ModuleOrder::Term(*ord))
}

/// Reduced Groebner basis for ideals; see [`reduce_basis_mod`].
///
/// # Errors
/// [`Error::NotGroebner`] if the input was not a Groebner basis.
pub fn reduce_basis(basis: &[Poly], ord: &TermOrder) -> Result<Vec<Poly>> {
    let mbasis: Vec<ModElem> = basis.iter().map(poly_to_mod).collect();
    let r = reduce_basis_mod(&mbasis, &ModuleOrder::Term(*ord))?;
    Ok(r.iter().map(mod_to_poly).collect())
}

/// Schreyer syzygies of a polynomial Groebner basis; see
/// [`syzygy_basis_mod`]. The result lives in a free module of rank
/// `family.len()`.
///
/// # Errors
/// [`Error::NotGroebner`] if `family` is not a Groebner basis under `ord`.
pub fn syzygy_basis(family: &[Poly], ord: &TermOrder) -> Result<Vec<ModElem>> {
    let mfam: Vec<ModElem> = family.iter().map(poly_to_mod).collect();
    syzygy_basis_mod(&mfam, &ModuleOrder::Term(*ord))
}

/// Whether two polynomial families generate the same ideal; see
/// [`module_equal`].
///
/// # Errors
/// [`Error::DeadlineExceeded`] if the deadline expires.
pub fn ideal_equal(
    a: &[Poly],
    b: &[Poly],
    ord: &TermOrder,
    deadline: &dyn Deadline,
) -> Result<bool> {
    let ma: Vec<ModElem> = a.iter().map(poly_to_mod).collect();
    let mb: Vec<ModElem> = b.iter().map(poly_to_mod).collect();
    module_equal(&ma, &mb, &ModuleOrder::Term(*ord), deadline)
}

#[cfg(test)]
mod tests {
    use super::super::monomial::{T0, T1, X0, X1};
    use super::*;
    use crate::NoDeadline;

    fn m(t0: u32, t1: u32, x0: u32, x1: u32, x2: u32) -> Monomial {
        Monomial([t0, t1, x0, x1, x2, 0])
    }

    const ORD: TermOrder = TermOrder::LexSigmaPositive;

    #[test]
    fn s_polynomial_cases() {
        // f = T0^2 - T1, g = T0*T1 - 1: lcm = T0^2*T1,
        // S = T1*f - T0*g = -T1^2 + T0.
        let f = Poly::from_int_terms(&[(1, m(2, 0, 0, 0, 0)), (-1, m(0, 1, 0, 0, 0))]);
        let g = Poly::from_int_terms(&[(1, m(1, 1, 0, 0, 0)), (-1, Monomial::one())]);
        let s = s_polynomial(&f, &g, &ORD).unwrap();
        let expect = Poly::from_int_terms(&[(1, m(1, 0, 0, 0, 0)), (-1, m(0, 2, 0, 0, 0))]);
        assert_eq!(s, expect);
        assert!(s_polynomial(&f, &Poly::zero(), &ORD).is_err());
    }

    #[test]
    fn division_produces_standard_representation() {
        let f = Poly::from_int_terms(&[(1, m(2, 0, 0, 0, 0)), (-1, m(0, 1, 0, 0, 0))]);
        let g = Poly::from_int_terms(&[(1, m(1, 1, 0, 0, 0)), (-1, Monomial::one())]);
        let target = f
            .mul(&g)
            .add(&Poly::from_int_terms(&[(3, m(0, 1, 0, 0, 0))]));
        let (r, q) = reduce_poly(&target, &[f.clone(), g.clone()], &ORD).unwrap();
        let mut recon = r.clone();
        recon = recon.add(&q[0].mul(&f)).add(&q[1].mul(&g));
        assert_eq!(recon, target);
        // No remainder term divisible by a leading monomial of the basis.
        for t in r.terms() {
            assert!(!m(2, 0, 0, 0, 0).divides(&t.mon));
            assert!(!m(1, 1, 0, 0, 0).divides(&t.mon));
        }
    }

    #[test]
    fn buchberger_and_reduced_basis_on_a_unit_ideal() {
        // T0*T1 - 1 and T0^2 together force 1 into the ideal.
        let f = Poly::from_int_terms(&[(1, m(1, 1, 0, 0, 0)), (-1, Monomial::one())]);
        let g = Poly::from_int_terms(&[(1, m(2, 0, 0, 0, 0))]);
        let gb = buchberger(&[f, g], &ORD, &NoDeadline).unwrap();
        let red = reduce_basis(&gb, &ORD).unwrap();
        assert_eq!(red, alloc::vec![Poly::one()]);
    }

    #[test]
    fn buchberger_is_idempotent_on_groebner_input() {
        let f = Poly::from_int_terms(&[(1, m(2, 0, 0, 0, 0)), (-1, m(0, 0, 1, 0, 0))]);
        let g = Poly::from_int_terms(&[(1, m(0, 1, 0, 0, 0)), (-1, m(0, 0, 0, 1, 0))]);
        // Leading monomials T0^2 and T1 are coprime: already a GB.
        assert!(is_groebner(&[f.clone(), g.clone()], &ORD).unwrap());
        let gb = buchberger(&[f.clone(), g.clone()], &ORD, &NoDeadline).unwrap();
        assert_eq!(gb.len(), 2);
        let red = reduce_basis(&gb, &ORD).unwrap();
        assert_eq!(red.len(), 2);
        assert!(is_groebner(&red, &ORD).unwrap());
    }

    #[test]
    fn reduce_basis_rejects_non_groebner_input() {
        // T0*T1 - 1 and T0^2 alone are not a Groebner basis.
        let f = Poly::from_int_terms(&[(1, m(1, 1, 0, 0, 0)), (-1, Monomial::one())]);
        let g = Poly::from_int_terms(&[(1, m(2, 0, 0, 0, 0))]);
        assert!(!is_groebner(&[f.clone(), g.clone()], &ORD).unwrap());
        assert_eq!(reduce_basis(&[f, g], &ORD), Err(Error::NotGroebner));
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let f = Poly::from_int_terms(&[(1, Monomial::var(T0, 1))]);
        let g = Poly::from_int_terms(&[(1, Monomial::var(T1, 1))]);
        let syz = syzygy_basis(&[f, g], &ORD).unwrap();
        assert_eq!(syz.len(), 1);
        let expect = ModElem::from_int_terms(
            2,
            &[(1, Monomial::var(T1, 1), 0), (-1, Monomial::var(T0, 1), 1)],
        )
        .unwrap();
        assert_eq!(syz[0], expect);
        // And the leading-term formula holds.
        let mfam = alloc::vec![
            poly_to_mod(&Poly::from_int_terms(&[(1, Monomial::var(T0, 1))])),
            poly_to_mod(&Poly::from_int_terms(&[(1, Monomial::var(T1, 1))])),
        ];
        assert!(leading_term_formula_holds(&mfam, &ModuleOrder::Term(ORD), &syz).unwrap());
    }

    #[test]
    fn syzygies_annihilate_the_family() {
        // A non-trivial Groebner basis: the toric ideal of the twisted cubic
        // in variables (X0, X1, X2, T0) playing (x, y, z, w).
        let f1 = Poly::from_int_terms(&[(1, m(0, 0, 1, 0, 1)), (-1, m(0, 0, 0, 2, 0))]);
        let f2 = Poly::from_int_terms(&[(1, m(1, 0, 1, 0, 0)), (-1, m(0, 0, 0, 1, 1))]);
        let f3 = Poly::from_int_terms(&[(1, m(1, 0, 0, 1, 0)), (-1, m(0, 0, 0, 0, 2))]);
        let gens = [f1, f2, f3];
        let gb = buchberger(&gens, &ORD, &NoDeadline).unwrap();
        let red = reduce_basis(&gb, &ORD).unwrap();
        let syz = syzygy_basis(&red, &ORD).unwrap();
        assert!(!syz.is_empty());
        for s in &syz {
            assert!(s.apply(&red).unwrap().is_zero());
        }
    }

    #[test]
    fn module_buchberger_handles_positionwise_input() {
        // Submodule of R^2 generated by (T0, T1) and (T1, T0).
        let a = ModElem::from_int_terms(
            2,
            &[(1, Monomial::var(T0, 1), 0), (1, Monomial::var(T1, 1), 1)],
        )
        .unwrap();
        let b = ModElem::from_int_terms(
            2,
            &[(1, Monomial::var(T1, 1), 0), (1, Monomial::var(T0, 1), 1)],
        )
        .unwrap();
        let ord = ModuleOrder::Term(ORD);
        let gb = buchberger_mod(&[a.clone(), b.clone()], &ord, &NoDeadline).unwrap();
        assert!(is_groebner_mod(&gb, &ord).unwrap());
        let red = reduce_basis_mod(&gb, &ord).unwrap();
        // Membership of a combination: T1*a - T0*b.
        let comb = a
            .mul_term(&BigRational::one(), &Monomial::var(T1, 1))
            .sub(&b.mul_term(&BigRational::one(), &Monomial::var(T0, 1)))
            .unwrap();
        let (nf, _) = reduce_mod(&comb, &red, &ord).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn module_equal_detects_equality_and_difference() {
        let f = Poly::from_int_terms(&[(1, m(2, 0, 0, 0, 0)), (-1, m(0, 1, 0, 0, 0))]);
        let doubled = f.scale(&BigRational::from_integer(2.into()));
        assert!(ideal_equal(
            core::slice::from_ref(&f),
            core::slice::from_ref(&doubled),
            &ORD,
            &NoDeadline
        )
        .unwrap());
        let g = Poly::from_int_terms(&[(1, m(1, 0, 0, 0, 0))]);
        assert!(!ideal_equal(&[f], &[g], &ORD, &NoDeadline).unwrap());
    }

    #[test]
    fn deadline_is_honored() {
        struct Expired;
        impl Deadline for Expired {
            fn expired(&self) -> bool {
                true
            }
        }
        let f = Poly::from_int_terms(&[(1, m(1, 1, 0, 0, 0)), (-1, Monomial::one())]);
        let g = Poly::from_int_terms(&[(1, m(2, 0, 0, 0, 0))]);
        assert_eq!(
            buchberger(&[f, g], &ORD, &Expired),
            Err(Error::DeadlineExceeded)
        );
    }

    #[test]
    fn variable_helpers_compile() {
        // Silence unused-import lint for X0/X1 helpers used sparsely above.
        let _ = (Monomial::var(X0, 1), Monomial::var(X1, 1));
    }
}
