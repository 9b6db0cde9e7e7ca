//! Adjoint curves of the monomial plane curve and their pencils.
//!
//! The curve parametrized by `(t0^d : t0^(d-u) t1^u : t1^d)` has exactly two
//! singular points, both unibranch: `(1:0:0)` with multiplicity `u` and
//! `(0:0:1)` with multiplicity `d - u`. A degree-`ell` form is adjoint to the
//! curve precisely when its intersection multiplicity with the branch at each
//! point reaches the conductor of the branch value semigroup — `(d-1)(u-1)`
//! at the first point and `(d-1)(d-u-1)` at the second — and, because values
//! below a conductor have at most one representation, this is equivalent to
//! the vanishing of every coefficient on a "forbidden" exponent.
//!
//! The bidegree-`(1, ell)` part of the Rees kernel is a free module on the
//! two generators of T-degree one; the codimension of its intersection with
//! the space of adjoint pencils is a constant `nu` (independent of
//! `ell >= d - 2`), computed here both by direct enumeration of the two
//! inequality systems and — as a cross-check — by the rank of the explicit
//! coefficient-vanishing linear system.
//!
//! Everything in this module requires `u > 1`: for `u = 1` the first point is
//! smooth and the adjoint theory below does not apply.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::polyengine::{Monomial, Poly, T0, T1, X0, X1, X2, Z};
use crate::reesfamilies::{f0_family, x_degree, ReesSetup};
use crate::Result;

fn require_u_greater_one(setup: &ReesSetup) -> Result<()> {
    if setup.u() > 1 {
        Ok(())
    } else {
        Err(Error::RequiresUGreaterOne)
    }
}

fn d_i(setup: &ReesSetup) -> i64 {
    setup.d() as i64
}

fn u_i(setup: &ReesSetup) -> i64 {
    setup.u() as i64
}

/// `n * (n - 1) / 2` for `n >= 2`, else `0` (the "choose 2" convention used
/// throughout the dimension formulas).
fn choose2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// All exponent triples of total degree `deg`, in ascending lexicographic
/// order; empty when `deg < 0`.
fn monomials_of_degree(deg: i64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    if deg < 0 {
        return out;
    }
    let deg = deg as u64;
    for g0 in 0..=deg {
        for g1 in 0..=(deg - g0) {
            out.push([g0, g1, deg - g0 - g1]);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Singular points.
// ---------------------------------------------------------------------------

/// One singular point of the curve, with the local data of its single branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    /// Projective coordinates (entries 0 or 1).
    pub point: [u32; 3],
    /// Multiplicity of the curve at the point.
    pub multiplicity: u64,
    /// Conductor of the branch value semigroup: intersection multiplicities
    /// at or above this threshold are the adjoint condition at this point.
    pub conductor: u64,
    /// Number of gaps of the branch value semigroup (the delta invariant).
    pub delta: u64,
}

/// The two singular points of the curve: `(1:0:0)` with multiplicity `u` and
/// `(0:0:1)` with multiplicity `d - u`.
///
/// The multiplicities are cross-checked against the implicit curve equation
/// by re-expanding it in the affine chart of each point and taking the
/// minimal total degree.
///
/// # Errors
/// [`Error::RequiresUGreaterOne`] when `u = 1` (the first point is then
/// smooth and the curve has a single singularity).
pub fn singular_points(setup: &ReesSetup) -> Result<Vec<SingularPoint>> {
    require_u_greater_one(setup)?;
    let d = setup.d();
    let u = setup.u();
    let curve = f0_family(setup)
        .pop()
        .expect("generator family is never empty");
    let chart_multiplicity = |skip: usize| {
        curve
            .terms()
            .iter()
            .map(|t| {
                [X0, X1, X2]
                    .iter()
                    .filter(|&&v| v != skip)
                    .map(|&v| u64::from(t.mon.exp(v)))
                    .sum::<u64>()
            })
            .min()
            .expect("curve equation is nonzero")
    };
    assert_eq!(
        chart_multiplicity(X0),
        u,
        "chart expansion at (1:0:0) must reproduce multiplicity u"
    );
    assert_eq!(
        chart_multiplicity(X2),
        d - u,
        "chart expansion at (0:0:1) must reproduce multiplicity d - u"
    );
    Ok(vec![
        SingularPoint {
            point: [1, 0, 0],
            multiplicity: u,
            conductor: (d - 1) * (u - 1),
            delta: sylvester_gap_count(u, d)?,
        },
        SingularPoint {
            point: [0, 0, 1],
            multiplicity: d - u,
            conductor: (d - 1) * (d - u - 1),
            delta: sylvester_gap_count(d - u, d)?,
        },
    ])
}

// ---------------------------------------------------------------------------
// Sylvester counting.
// ---------------------------------------------------------------------------

/// Whether `j = a*x + b*y` has a solution in nonnegative integers.
pub fn representable(a: u64, b: u64, j: u64) -> bool {
    assert!(a > 0 && b > 0, "moduli must be positive");
    let mut rest = j;
    loop {
        if rest.is_multiple_of(b) {
            return true;
        }
        if rest < a {
            return false;
        }
        rest -= a;
    }
}

/// The number of natural numbers not representable as `a*x + b*y` with
/// `x, y >= 0`, for coprime `a, b`: the classical count `(a-1)(b-1)/2`.
/// Every `j >= (a-1)(b-1)` is representable.
///
/// # Errors
/// [`Error::OutOfRange`] if `a` or `b` is zero; [`Error::NonCoprime`] if
/// `gcd(a, b) != 1`.
pub fn sylvester_gap_count(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange {
            what: "Sylvester counting requires positive moduli",
        });
    }
    if num_integer::gcd(a, b) != 1 {
        return Err(Error::NonCoprime { a, b });
    }
    Ok((a - 1) * (b - 1) / 2)
}

/// Whether the uniqueness property behind the adjoint criterion holds for
/// this pair: every value `j <= (d-1)(u-1)` has at most one representation
/// `j = u*x + d*y`, and every `j <= (d-1)(d-u-1)` at most one representation
/// `j = d*x + (d-u)*y` (checked exhaustively).
pub fn diophantine_uniqueness_holds(setup: &ReesSetup) -> bool {
    let d = setup.d();
    let u = setup.u();
    let unique_below = |a: u64, b: u64, cap: u64| {
        (0..=cap).all(|j| {
            let count = (0..=j / a)
                .filter(|x| (j - a * x).is_multiple_of(b))
                .take(2)
                .count();
            count <= 1
        })
    };
    unique_below(u, d, (d - 1) * (u - 1)) && unique_below(d, d - u, (d - 1) * (d - u - 1))
}

// ---------------------------------------------------------------------------
// The adjoint criterion on exponents.
// ---------------------------------------------------------------------------

/// Whether a monomial exponent violates the adjoint conditions: the exponent
/// is forbidden when `u*g1 + d*g2 < (d-1)(u-1)` (the branch at `(1:0:0)`) or
/// `d*g0 + (d-u)*g1 < (d-1)(d-u-1)` (the branch at `(0:0:1)`).
pub fn is_forbidden(setup: &ReesSetup, gamma: [u64; 3]) -> bool {
    let (d, u) = (d_i(setup), u_i(setup));
    let [g0, g1, g2] = gamma.map(|v| v as i64);
    u * g1 + d * g2 < (d - 1) * (u - 1) || d * g0 + (d - u) * g1 < (d - 1) * (d - u - 1)
}

/// All exponent triples of total degree `ell` violating the adjoint
/// conditions, in ascending lexicographic order. For `ell >= d - 2` the two
/// violations are mutually exclusive and the set has exactly
/// `(d-1)(d-2)/2` elements.
///
/// # Errors
/// [`Error::RequiresUGreaterOne`] when `u = 1`.
pub fn forbidden_exponents(setup: &ReesSetup, ell: u64) -> Result<Vec<[u64; 3]>> {
    require_u_greater_one(setup)?;
    Ok(monomials_of_degree(ell as i64)
        .into_iter()
        .filter(|&g| is_forbidden(setup, g))
        .collect())
}

/// Dimension of the space of degree-`ell` adjoint pencils, as the pair
/// `(value, below_threshold)`: for `ell >= d - 2` the closed formula
/// `(ell+2)(ell+1) - (d-1)(d-2)` (twice the number of non-forbidden
/// exponents), and `(0, true)` below the threshold degree `d - 2`, where no
/// nonzero adjoint exists.
///
/// # Errors
/// [`Error::RequiresUGreaterOne`] when `u = 1`.
pub fn dim_adjoint_pencils(setup: &ReesSetup, ell: u64) -> Result<(i64, bool)> {
    require_u_greater_one(setup)?;
    let d = d_i(setup);
    let ell = ell as i64;
    if ell < d - 2 {
        return Ok((0, true));
    }
    Ok(((ell + 2) * (ell + 1) - (d - 1) * (d - 2), false))
}

/// Dimension of the bidegree-`(1, ell)` part of the Rees kernel:
/// `C(ell - |sigma_q - tau_q| + 2, 2) + C(ell - |sigma_(q+1) - tau_(q+1)| + 2, 2)`
/// with the convention `C(a, 2) = 0` for `a < 2` (the kernel in T-degree one
/// is a free module on the two generators of T-degree one).
pub fn dim_ker_degree_one(setup: &ReesSetup, ell: u64) -> u64 {
    let q = setup.q();
    let ell = ell as i64;
    let total = choose2(ell - x_degree(setup, q) + 2) + choose2(ell - x_degree(setup, q + 1) + 2);
    total as u64
}

// ---------------------------------------------------------------------------
// The two inequality systems and nu.
// ---------------------------------------------------------------------------

/// Right-hand sides of the two inequalities of the first system (on the
/// coefficients of the T-degree-one generator of higher X-degree):
/// `u*a1 + d*a2 < (d-1)(u-1) - d*|tau_q|` or
/// `d*a0 + (d-u)*a1 < (d-1)(d-u-1) - (d-u)*|sigma_q - tau_q|`.
fn first_system_thresholds(setup: &ReesSetup) -> (i64, i64) {
    let (d, u) = (d_i(setup), u_i(setup));
    let q = setup.q();
    (
        (d - 1) * (u - 1) - d * setup.tau(q).abs(),
        (d - 1) * (d - u - 1) - (d - u) * x_degree(setup, q),
    )
}

/// Right-hand sides of the two inequalities of the second system (on the
/// coefficients of the other T-degree-one generator):
/// `u*b1 + d*b2 < (d-1)(u-1) - u*|sigma_(q+1) - tau_(q+1)|` or
/// `d*b0 + (d-u)*b1 < (d-1)(d-u-1) - d*|sigma_(q+1)|`.
fn second_system_thresholds(setup: &ReesSetup) -> (i64, i64) {
    let (d, u) = (d_i(setup), u_i(setup));
    let q = setup.q();
    (
        (d - 1) * (u - 1) - u * x_degree(setup, q + 1),
        (d - 1) * (d - u - 1) - d * setup.sigma(q + 1).abs(),
    )
}

/// Solutions of one inequality system among exponents of total degree `deg`,
/// with the per-branch breakdown `(first_count, second_count)` and a flag set
/// if some triple satisfies both branches (never expected for
/// `ell >= d - 2`; reported rather than silently double-counted).
fn system_solutions(
    setup: &ReesSetup,
    deg: i64,
    thresholds: (i64, i64),
) -> (Vec<[u64; 3]>, usize, usize, bool) {
    let (d, u) = (d_i(setup), u_i(setup));
    let (t1, t2) = thresholds;
    let mut solutions = Vec::new();
    let (mut first, mut second, mut overlap) = (0usize, 0usize, false);
    for g in monomials_of_degree(deg) {
        let [g0, g1, g2] = g.map(|v| v as i64);
        let in_first = u * g1 + d * g2 < t1;
        let in_second = d * g0 + (d - u) * g1 < t2;
        if in_first && in_second {
            overlap = true;
        }
        if in_first {
            first += 1;
        } else if in_second {
            second += 1;
        }
        if in_first || in_second {
            solutions.push(g);
        }
    }
    (solutions, first, second, overlap)
}

/// The quotient dimension `nu` at one degree, with its per-branch breakdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuBreakdown {
    /// Degree at which the solution sets were enumerated.
    pub ell: u64,
    /// Solutions of the first system (degree `ell - |sigma_q - tau_q|`).
    pub alpha_solutions: Vec<[u64; 3]>,
    /// Solutions of the second system (degree
    /// `ell - |sigma_(q+1) - tau_(q+1)|`).
    pub beta_solutions: Vec<[u64; 3]>,
    /// Counts per inequality branch:
    /// `[alpha_first, alpha_second, beta_first, beta_second]`.
    pub branch_counts: [usize; 4],
    /// Set when some triple satisfies both branches of one system; the
    /// branch counts then overlap and only the solution sets are reliable.
    pub branch_overlap: bool,
}

impl NuBreakdown {
    /// The quotient dimension: total number of solutions of both systems.
    pub fn total(&self) -> usize {
        self.alpha_solutions.len() + self.beta_solutions.len()
    }
}

/// Enumerate both inequality systems at a given degree `ell >= d - 2`.
///
/// # Errors
/// [`Error::RequiresUGreaterOne`] when `u = 1`;
/// [`Error::BelowAdjointThreshold`] when `ell < d - 2`.
pub fn nu_at(setup: &ReesSetup, ell: u64) -> Result<NuBreakdown> {
    require_u_greater_one(setup)?;
    let d = d_i(setup);
    if (ell as i64) < d - 2 {
        return Err(Error::BelowAdjointThreshold {
            ell: ell as i64,
            min: d - 2,
        });
    }
    let q = setup.q();
    let (alpha_solutions, a1, a2, overlap_a) = system_solutions(
        setup,
        ell as i64 - x_degree(setup, q),
        first_system_thresholds(setup),
    );
    let (beta_solutions, b1, b2, overlap_b) = system_solutions(
        setup,
        ell as i64 - x_degree(setup, q + 1),
        second_system_thresholds(setup),
    );
    Ok(NuBreakdown {
        ell,
        alpha_solutions,
        beta_solutions,
        branch_counts: [a1, a2, b1, b2],
        branch_overlap: overlap_a || overlap_b,
    })
}

/// The quotient dimension `nu` of the pair: the codimension, inside the
/// bidegree-`(1, ell)` part of the Rees kernel, of the subspace of adjoint
/// pencils — independent of `ell >= d - 2`.
///
/// Computed by direct enumeration at `ell = d - 2` and asserted stable at
/// `ell` in `{d-1, d, d+5}`.
///
/// # Errors
/// [`Error::RequiresUGreaterOne`] when `u = 1`;
/// [`Error::StabilityViolation`] if the count varies with `ell` (an
/// implementation bug, never valid input).
pub fn nu(setup: &ReesSetup) -> Result<NuBreakdown> {
    let d = setup.d();
    let base = nu_at(setup, d - 2)?;
    for ell in [d - 1, d, d + 5] {
        if nu_at(setup, ell)?.total() != base.total() {
            return Err(Error::StabilityViolation);
        }
    }
    Ok(base)
}

// ---------------------------------------------------------------------------
// Adjointness of forms and pencils.
// ---------------------------------------------------------------------------

/// Validate that a polynomial involves only the X variables and is
/// homogeneous; returns its total degree, or `None` for the zero polynomial.
fn x_form_degree(form: &Poly) -> Result<Option<i64>> {
    let mut degree: Option<i64> = None;
    for t in form.terms() {
        if t.mon.exp(T0) != 0 || t.mon.exp(T1) != 0 || t.mon.exp(Z) != 0 {
            return Err(Error::NotHomogeneous);
        }
        let deg = i64::from(t.mon.exp(X0)) + i64::from(t.mon.exp(X1)) + i64::from(t.mon.exp(X2));
        match degree {
            None => degree = Some(deg),
            Some(seen) if seen != deg => return Err(Error::NotHomogeneous),
            Some(_) => {}
        }
    }
    Ok(degree)
}

/// Order in `t` of the form evaluated along a branch `X_i -> t^(w_i)`
/// (`None` for the zero substitution result, i.e. order infinity).
fn branch_order(form: &Poly, weights: [u64; 3]) -> Option<u64> {
    let mut by_order: BTreeMap<u64, BigRational> = BTreeMap::new();
    for t in form.terms() {
        let order = u64::from(t.mon.exp(X0)) * weights[0]
            + u64::from(t.mon.exp(X1)) * weights[1]
            + u64::from(t.mon.exp(X2)) * weights[2];
        *by_order.entry(order).or_insert_with(BigRational::zero) += t.coeff.clone();
    }
    by_order
        .into_iter()
        .find(|(_, c)| !c.is_zero())
        .map(|(o, _)| o)
}

/// Whether a homogeneous form in the X variables defines an adjoint curve.
///
/// Two equivalent tests are run and asserted to agree: the order of the form
/// along each singular branch (`X -> (1, t^u, t^d)` and
/// `X -> (t^d, t^(d-u), 1)`) must reach the conductor of that branch, and
/// every coefficient on a forbidden exponent must vanish. The zero form is
/// adjoint.
///
/// # Errors
/// [`Error::RequiresUGreaterOne`] when `u = 1`; [`Error::NotHomogeneous`]
/// if the input involves T or Z variables or is not homogeneous.
pub fn is_adjoint(setup: &ReesSetup, form: &Poly) -> Result<bool> {
    require_u_greater_one(setup)?;
    x_form_degree(form)?;
    let d = setup.d();
    let u = setup.u();
    let meets = |order: Option<u64>, conductor: u64| order.map(|o| o >= conductor).unwrap_or(true);
    let by_orders = meets(branch_order(form, [0, u, d]), (d - 1) * (u - 1))
        && meets(branch_order(form, [d, d - u, 0]), (d - 1) * (d - u - 1));
    let by_exponents = form.terms().iter().all(|t| {
        let g = [
            u64::from(t.mon.exp(X0)),
            u64::from(t.mon.exp(X1)),
            u64::from(t.mon.exp(X2)),
        ];
        !is_forbidden(setup, g)
    });
    assert_eq!(
        by_orders, by_exponents,
        "branch-order and coefficient tests must agree on homogeneous forms"
    );
    Ok(by_orders)
}

/// Whether the pencil `A * F_q + B * F_(q+1)` consists of adjoint curves,
/// where `A` and `B` are homogeneous forms in the X variables of degrees
/// `ell - |sigma_q - tau_q|` and `ell - |sigma_(q+1) - tau_(q+1)|` for a
/// common `ell >= d - 2`.
///
/// Decided by the two inequality systems on the coefficients of `A` and `B`,
/// and cross-validated against [`is_adjoint`] applied to both coefficient
/// forms of the expanded pencil. The zero pencil is adjoint.
///
/// # Errors
/// [`Error::RequiresUGreaterOne`] when `u = 1`; [`Error::NotHomogeneous`]
/// for invalid component forms; [`Error::DegreeMismatch`] if the two degrees
/// do not determine a common `ell`; [`Error::BelowAdjointThreshold`] when
/// that `ell` is below `d - 2`.
pub fn pencil_in_adjoints(setup: &ReesSetup, a_form: &Poly, b_form: &Poly) -> Result<bool> {
    require_u_greater_one(setup)?;
    let q = setup.q();
    let ell_a = x_form_degree(a_form)?.map(|deg| deg + x_degree(setup, q));
    let ell_b = x_form_degree(b_form)?.map(|deg| deg + x_degree(setup, q + 1));
    let ell = match (ell_a, ell_b) {
        (None, None) => return Ok(true),
        (Some(l), None) | (None, Some(l)) => l,
        (Some(la), Some(lb)) if la == lb => la,
        _ => return Err(Error::DegreeMismatch),
    };
    let d = d_i(setup);
    if ell < d - 2 {
        return Err(Error::BelowAdjointThreshold { ell, min: d - 2 });
    }
    let breakdown = nu_at(setup, ell as u64)?;
    let vanishes_on = |form: &Poly, solutions: &[[u64; 3]]| {
        let set: BTreeSet<&[u64; 3]> = solutions.iter().collect();
        form.terms().iter().all(|t| {
            let g = [
                u64::from(t.mon.exp(X0)),
                u64::from(t.mon.exp(X1)),
                u64::from(t.mon.exp(X2)),
            ];
            !set.contains(&g)
        })
    };
    let by_systems = vanishes_on(a_form, &breakdown.alpha_solutions)
        && vanishes_on(b_form, &breakdown.beta_solutions);

    let one = BigRational::one();
    let component =
        |am: &Monomial, bm: &Monomial| a_form.mul_term(&one, am).add(&b_form.mul_term(&one, bm));
    let c0 = component(&setup.t0_side(q), &setup.t0_side(q + 1));
    let c1 = component(&setup.t1_side(q), &setup.t1_side(q + 1));
    let by_adjointness = is_adjoint(setup, &c0)? && is_adjoint(setup, &c1)?;
    assert_eq!(
        by_systems, by_adjointness,
        "coefficient systems and component adjointness must agree"
    );
    Ok(by_systems)
}

/// The quotient dimension at one degree, computed independently of the
/// inequality systems: the rank (over the rationals) of the linear system
/// expressing that both coefficient forms of a general kernel element of
/// bidegree `(1, ell)` have vanishing coefficients on every forbidden
/// exponent. Equals `nu` for every `ell >= d - 2`.
///
/// # Errors
/// [`Error::RequiresUGreaterOne`] when `u = 1`;
/// [`Error::BelowAdjointThreshold`] when `ell < d - 2`.
pub fn quotient_dimension(setup: &ReesSetup, ell: u64) -> Result<usize> {
    require_u_greater_one(setup)?;
    let d = d_i(setup);
    if (ell as i64) < d - 2 {
        return Err(Error::BelowAdjointThreshold {
            ell: ell as i64,
            min: d - 2,
        });
    }
    let q = setup.q();
    let alphas = monomials_of_degree(ell as i64 - x_degree(setup, q));
    let betas = monomials_of_degree(ell as i64 - x_degree(setup, q + 1));
    let alpha_index: BTreeMap<[u64; 3], usize> =
        alphas.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let beta_index: BTreeMap<[u64; 3], usize> = betas
        .iter()
        .enumerate()
        .map(|(i, &g)| (g, alphas.len() + i))
        .collect();
    let ncols = alphas.len() + betas.len();

    let exponents = |m: &Monomial| {
        [
            u64::from(m.exp(X0)),
            u64::from(m.exp(X1)),
            u64::from(m.exp(X2)),
        ]
    };
    let shift_down = |g: [u64; 3], s: [u64; 3]| -> Option<[u64; 3]> {
        if g[0] >= s[0] && g[1] >= s[1] && g[2] >= s[2] {
            Some([g[0] - s[0], g[1] - s[1], g[2] - s[2]])
        } else {
            None
        }
    };
    let m0 = exponents(&setup.t0_side(q));
    let m1 = exponents(&setup.t1_side(q));
    let n0 = exponents(&setup.t0_side(q + 1));
    let n1 = exponents(&setup.t1_side(q + 1));

    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for gamma in monomials_of_degree(ell as i64) {
        if !is_forbidden(setup, gamma) {
            continue;
        }
        for (a_shift, b_shift) in [(m0, n0), (m1, n1)] {
            let mut row = vec![BigRational::zero(); ncols];
            let mut nonzero = false;
            if let Some(alpha) = shift_down(gamma, a_shift) {
                if let Some(&col) = alpha_index.get(&alpha) {
                    row[col] = BigRational::one();
                    nonzero = true;
                }
            }
            if let Some(beta) = shift_down(gamma, b_shift) {
                if let Some(&col) = beta_index.get(&beta) {
                    row[col] = BigRational::one();
                    nonzero = true;
                }
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    Ok(matrix_rank(rows, ncols))
}

/// Rank of a rational matrix given as rows, by Gaussian elimination.
fn matrix_rank(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / rows[rank][col].clone();
        for entry in rows[rank].iter_mut() {
            *entry *= inv.clone();
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (entry, pivot_entry) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *entry -= factor.clone() * pivot_entry.clone();
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

// ---------------------------------------------------------------------------
// The combined report.
// ---------------------------------------------------------------------------

/// All adjoint-theory data of a pair at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointReport {
    /// The requested degree.
    pub ell: u64,
    /// Degree at which the solution sets were enumerated (`max(ell, d - 2)`;
    /// the quotient data is defined from the threshold degree upward).
    pub enumerated_at: u64,
    /// Dimension of the space of degree-`ell` adjoint pencils (0 below the
    /// threshold).
    pub dim_adj: i64,
    /// Set when `ell < d - 2`.
    pub below_threshold: bool,
    /// Dimension of the bidegree-`(1, ell)` part of the Rees kernel.
    pub dim_ker_1: u64,
    /// The quotient dimension: `|forbidden_alpha| + |forbidden_beta|`.
    pub nu: usize,
    /// Counts per inequality branch:
    /// `[alpha_first, alpha_second, beta_first, beta_second]`.
    pub nu_breakdown: [usize; 4],
    /// Set when some triple satisfies both branches of one system (the
    /// branch counts then overlap; never observed, but reported rather than
    /// silently double-counted).
    pub branch_overlap: bool,
    /// Solutions of the first inequality system.
    pub forbidden_alpha: Vec<[u64; 3]>,
    /// Solutions of the second inequality system.
    pub forbidden_beta: Vec<[u64; 3]>,
    /// The proven upper bound `d^2 - 6d + 6` for `nu`.
    pub bound: u64,
    /// The two singular points with their multiplicities.
    pub singular: Vec<SingularPoint>,
}

/// Compute the full adjoint report at degree `ell` (defaulting to the
/// threshold degree `d - 2`). The stability of `nu` across
/// `{d-2, d-1, d, d+5}` is always verified.
///
/// # Errors
/// [`Error::RequiresUGreaterOne`] when `u = 1`;
/// [`Error::StabilityViolation`] if `nu` varies with the degree.
pub fn adjoint_report(setup: &ReesSetup, ell: Option<u64>) -> Result<AdjointReport> {
    require_u_greater_one(setup)?;
    let d = setup.d();
    let ell = ell.unwrap_or(d - 2);
    let stable = nu(setup)?;
    let enumerated_at = ell.max(d - 2);
    let breakdown = if enumerated_at == d - 2 {
        stable
    } else {
        let at_ell = nu_at(setup, enumerated_at)?;
        if at_ell.total() != stable.total() {
            return Err(Error::StabilityViolation);
        }
        at_ell
    };
    let (dim_adj, below_threshold) = dim_adjoint_pencils(setup, ell)?;
    let di = d as i64;
    let bound = (di * di - 6 * di + 6).max(0) as u64;
    let report = AdjointReport {
        ell,
        enumerated_at,
        dim_adj,
        below_threshold,
        dim_ker_1: dim_ker_degree_one(setup, ell),
        nu: breakdown.total(),
        nu_breakdown: breakdown.branch_counts,
        branch_overlap: breakdown.branch_overlap,
        forbidden_alpha: breakdown.alpha_solutions,
        forbidden_beta: breakdown.beta_solutions,
        bound,
        singular: singular_points(setup)?,
    };
    debug_assert!(report.nu >= 1 && report.nu as u64 <= bound);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(d: u64, u: u64) -> ReesSetup {
        ReesSetup::new(d, u).expect("valid pair")
    }

    fn x_poly(terms: &[(i64, [u32; 3])]) -> Poly {
        let with_mons: Vec<(i64, Monomial)> = terms
            .iter()
            .map(|&(c, [g0, g1, g2])| {
                let mut m = [0u32; crate::polyengine::NVARS];
                m[X0] = g0;
                m[X1] = g1;
                m[X2] = g2;
                (c, Monomial(m))
            })
            .collect();
        Poly::from_int_terms(&with_mons)
    }

    #[test]
    fn singular_points_goldens() {
        let points = singular_points(&setup(10, 3)).unwrap();
        assert_eq!(points[0].point, [1, 0, 0]);
        assert_eq!(points[0].multiplicity, 3);
        assert_eq!(points[1].point, [0, 0, 1]);
        assert_eq!(points[1].multiplicity, 7);
        let points = singular_points(&setup(14, 3)).unwrap();
        assert_eq!(points[0].multiplicity, 3);
        assert_eq!(points[1].multiplicity, 11);
        let points = singular_points(&setup(5, 2)).unwrap();
        assert_eq!(points[0].multiplicity, 2);
        assert_eq!(points[1].multiplicity, 3);
        // The delta invariants of the two cusps account for the full genus
        // deficit of a rational curve: their sum is (d-1)(d-2)/2.
        assert_eq!(points[0].delta + points[1].delta, 4 * 3 / 2);
        assert_eq!(
            singular_points(&setup(7, 1)).unwrap_err(),
            Error::RequiresUGreaterOne
        );
    }

    #[test]
    fn sylvester_count_examples_and_brute_force() {
        assert_eq!(sylvester_gap_count(3, 10).unwrap(), 9);
        assert_eq!(sylvester_gap_count(2, 5).unwrap(), 2);
        assert_eq!(sylvester_gap_count(1, 17).unwrap(), 0);
        assert_eq!(
            sylvester_gap_count(6, 9).unwrap_err(),
            Error::NonCoprime { a: 6, b: 9 }
        );
        for (a, b) in [(2u64, 5u64), (3, 10), (7, 11), (4, 9)] {
            let conductor = (a - 1) * (b - 1);
            let gaps = (0..conductor).filter(|&j| !representable(a, b, j)).count() as u64;
            assert_eq!(gaps, sylvester_gap_count(a, b).unwrap());
            // Everything from the conductor onward is representable; one
            // period of length a*b suffices to confirm all larger values.
            assert!((conductor..conductor + a * b).all(|j| representable(a, b, j)));
        }
    }

    #[test]
    fn diophantine_uniqueness_for_goldens() {
        for (d, u) in [(5, 2), (7, 2), (7, 3), (10, 3), (14, 3)] {
            assert!(diophantine_uniqueness_holds(&setup(d, u)), "({d},{u})");
        }
    }

    #[test]
    fn forbidden_exponent_counts() {
        let s = setup(10, 3);
        assert_eq!(forbidden_exponents(&s, 8).unwrap().len(), 36);
        assert_eq!(forbidden_exponents(&setup(14, 3), 12).unwrap().len(), 78);
        assert_eq!(forbidden_exponents(&s, 0).unwrap(), vec![[0, 0, 0]]);
        // From the threshold degree onward the count is constant and the two
        // violations never hold simultaneously.
        for ell in 8..=14 {
            let forbidden = forbidden_exponents(&s, ell).unwrap();
            assert_eq!(forbidden.len(), 36);
            for g in forbidden {
                let [g0, g1, g2] = g.map(|v| v as i64);
                assert!(!(3 * g1 + 10 * g2 < 18 && 10 * g0 + 7 * g1 < 54));
            }
        }
    }

    #[test]
    fn adjoint_pencil_dimensions() {
        let s = setup(10, 3);
        assert_eq!(dim_adjoint_pencils(&s, 8).unwrap(), (18, false));
        assert_eq!(dim_adjoint_pencils(&s, 7).unwrap(), (0, true));
        for ell in 12..=20u64 {
            let l = ell as i64;
            assert_eq!(
                dim_adjoint_pencils(&setup(14, 3), ell).unwrap(),
                (l * l + 3 * l - 154, false)
            );
        }
        // Closed form agrees with twice the count of non-forbidden exponents.
        for ell in 8..=14u64 {
            let monomials = (ell + 2) * (ell + 1) / 2;
            let allowed = monomials - forbidden_exponents(&s, ell).unwrap().len() as u64;
            assert_eq!(dim_adjoint_pencils(&s, ell).unwrap().0, 2 * allowed as i64);
        }
    }

    #[test]
    fn kernel_dimension_formulas() {
        let s = setup(10, 3);
        assert_eq!(dim_ker_degree_one(&s, 0), 0);
        for ell in 5..=15u64 {
            let l = ell as i64;
            assert_eq!(dim_ker_degree_one(&s, ell) as i64, l * l - 7 * l + 16);
        }
        for ell in 9..=20u64 {
            let l = ell as i64;
            assert_eq!(
                dim_ker_degree_one(&setup(14, 3), ell) as i64,
                l * l - 11 * l + 34
            );
        }
    }

    #[test]
    fn nu_goldens_with_breakdowns() {
        let cases = [
            (5, 2, 1, [0, 0, 0, 1]),
            (7, 2, 4, [0, 1, 0, 3]),
            (7, 3, 6, [0, 0, 2, 4]),
            (10, 3, 16, [0, 1, 3, 12]),
            (14, 3, 34, [0, 6, 4, 24]),
        ];
        for (d, u, expected, branches) in cases {
            let breakdown = nu(&setup(d, u)).unwrap();
            assert_eq!(breakdown.total(), expected, "nu({d},{u})");
            assert_eq!(breakdown.branch_counts, branches, "breakdown({d},{u})");
            assert!(!breakdown.branch_overlap);
            let bound = (d as i64) * (d as i64) - 6 * (d as i64) + 6;
            assert!(breakdown.total() >= 1 && breakdown.total() as i64 <= bound);
        }
    }

    #[test]
    fn nu_solution_sets_match_report_invariants() {
        let report = adjoint_report(&setup(10, 3), None).unwrap();
        assert_eq!(report.ell, 8);
        assert_eq!(
            report.nu,
            report.forbidden_alpha.len() + report.forbidden_beta.len()
        );
        assert_eq!(report.dim_adj, 18);
        assert_eq!(report.dim_ker_1, 8 * 8 - 7 * 8 + 16);
        assert_eq!(report.bound, 46);
        assert_eq!(report.singular.len(), 2);
        // The single first-system solution is the pure X2 power.
        assert_eq!(report.forbidden_alpha, vec![[0, 0, 1]]);
    }

    #[test]
    fn adjoint_membership_both_methods() {
        let s = setup(10, 3);
        // The product of the two T1-side monomials of the degree-one kernel
        // generators is adjoint (degree d).
        let witness = x_poly(&[(1, [5, 3, 2])]);
        assert!(is_adjoint(&s, &witness).unwrap());
        assert!(!is_adjoint(&s, &Poly::one()).unwrap());
        assert!(is_adjoint(&s, &Poly::zero()).unwrap());
        // X2^8 vanishes to low order along the branch at (0:0:1).
        assert!(!is_adjoint(&s, &x_poly(&[(1, [0, 0, 8])])).unwrap());
        // Sums test the order computation with possible cancellation.
        let sum = x_poly(&[(1, [5, 3, 2]), (-1, [4, 5, 1]), (1, [2, 8, 0])]);
        let _ = is_adjoint(&s, &sum).unwrap();
        assert_eq!(
            is_adjoint(&s, &x_poly(&[(1, [1, 0, 0]), (1, [2, 0, 0])])).unwrap_err(),
            Error::NotHomogeneous
        );
    }

    #[test]
    fn pencil_membership_examples() {
        let s = setup(10, 3);
        assert!(pencil_in_adjoints(&s, &Poly::zero(), &Poly::zero()).unwrap());
        // ell = 8: A has degree 1, B degree 5.
        assert!(pencil_in_adjoints(&s, &x_poly(&[(1, [1, 0, 0])]), &Poly::zero()).unwrap());
        assert!(!pencil_in_adjoints(&s, &x_poly(&[(1, [0, 0, 1])]), &Poly::zero()).unwrap());
        assert_eq!(
            pencil_in_adjoints(&s, &x_poly(&[(1, [1, 0, 0])]), &x_poly(&[(1, [0, 0, 1])]))
                .unwrap_err(),
            Error::DegreeMismatch
        );
        assert_eq!(
            pencil_in_adjoints(&s, &Poly::one(), &Poly::zero()).unwrap_err(),
            Error::BelowAdjointThreshold { ell: 7, min: 8 }
        );
    }

    #[test]
    fn rank_method_agrees_with_enumeration() {
        for (d, u) in [(5u64, 2u64), (7, 2), (7, 3)] {
            let s = setup(d, u);
            let expected = nu(&s).unwrap().total();
            for ell in [d - 2, d] {
                assert_eq!(
                    quotient_dimension(&s, ell).unwrap(),
                    expected,
                    "rank at ({d},{u}), ell={ell}"
                );
            }
        }
    }
}
