//! Closed-form generator and syzygy families of the Rees algebra of the
//! parametrization `(t0 : t1) -> (t0^d : t0^(d-u) t1^u : t1^d)`, the bigraded
//! minimal free resolution they assemble into, and structural checks tying
//! them to the Groebner machinery.
//!
//! Everything is driven by the slow Euclidean remainder sequence of the pair
//! `(d - u, u)` and its Bezout data (see [`crate::euclid`]). With `q` the sum
//! of the Euclidean quotients, the resolution has the shape
//!
//! ```text
//! 0 -> S^(q-1) -> S^(2q) -> S^(q+2) -> S -> Rees -> 0
//! ```
//!
//! with explicit binomial generators (the `F` family) and explicit three- and
//! four-term syzygies between them. Each family constructor asserts the
//! defining algebraic identities (annihilation) at build time.

use alloc::vec::Vec;

use crate::error::Error;
use crate::euclid::{self, EuclidData, InputPair, SersData};
use crate::polyengine::{
    is_groebner, is_groebner_mod, module_equal, reduce_basis, syzygy_basis, syzygy_basis_mod,
    ModElem, ModuleOrder, Monomial, Poly, TermOrder, T0, T1, X0, X1, X2,
};
use crate::{Deadline, Result};

/// Largest supported curve degree. Exponent arithmetic (in particular the
/// Rees substitution, which multiplies exponents by `d`) stays far inside
/// `u32` under this cap.
pub const MAX_DEGREE: u64 = 10_000;

/// Validated input pair together with all Euclidean data the closed-form
/// families consume: remainder/quotient sequences, the slow remainder
/// sequence `(b_n, c_n)`, its Bezout coefficients `(sigma_n, tau_n)`, and the
/// block markers `m_0 < m_1 < ... < m_p`.
#[derive(Clone, Debug)]
pub struct ReesSetup {
    pair: InputPair,
    euclid: EuclidData,
    sers: SersData,
    sigma: Vec<i64>,
    tau: Vec<i64>,
    b: Vec<u64>,
}

impl ReesSetup {
    /// Validate `(d, u)` and precompute all Euclidean sequences.
    ///
    /// # Errors
    /// Propagates validation errors from [`euclid::validate`]; additionally
    /// [`Error::OutOfRange`] if `d` exceeds [`MAX_DEGREE`] and
    /// [`Error::SigmaQZero`] if the next-to-last Bezout coefficient vanishes
    /// (which the theory rules out; the guard protects the order selection).
    pub fn new(d: u64, u: u64) -> Result<Self> {
        Self::from_pair(euclid::validate(d, u)?)
    }

    /// Like [`ReesSetup::new`], but optionally replaces `u` by `d - u` when
    /// `u > d/2` (the two parametrizations differ by swapping the parameters).
    ///
    /// # Errors
    /// Same as [`ReesSetup::new`].
    pub fn with_swap(d: u64, u: u64, allow_swap: bool) -> Result<Self> {
        Self::from_pair(euclid::validate_with_swap(d, u, allow_swap)?)
    }

    fn from_pair(pair: InputPair) -> Result<Self> {
        if pair.d() > MAX_DEGREE {
            return Err(Error::OutOfRange {
                what: "curve degree exceeds the supported exponent range",
            });
        }
        let euclid = euclid::euclid_data(&pair);
        let sers = euclid::sers_data(&pair, &euclid);
        let q = sers.q;
        let mut sigma = alloc::vec![0i64; q + 2];
        let mut tau = alloc::vec![0i64; q + 2];
        let mut b = alloc::vec![0u64; q + 3];
        for n in 1..=(q + 1) {
            sigma[n] = euclid::to_i64(&sers.sigma_seq[n]);
            tau[n] = euclid::to_i64(&sers.tau_seq[n]);
            b[n] = u64::try_from(euclid::to_i64(&sers.b_seq[n])).expect("b_n is nonnegative");
        }
        b[q + 2] = 0;
        if sigma[q] == 0 {
            return Err(Error::SigmaQZero);
        }
        Ok(ReesSetup {
            pair,
            euclid,
            sers,
            sigma,
            tau,
            b,
        })
    }

    /// Curve degree `d`.
    pub fn d(&self) -> u64 {
        self.pair.d()
    }

    /// Inner exponent `u` (coprime to `d`, `0 < u < d/2`).
    pub fn u(&self) -> u64 {
        self.pair.u()
    }

    /// Sum of the Euclidean quotients; the resolution ranks are
    /// `1, q + 2, 2q, q - 1`.
    pub fn q(&self) -> usize {
        self.sers.q
    }

    /// Length of the Euclidean remainder sequence (`a_p = 0`).
    pub fn p(&self) -> usize {
        self.sers.p
    }

    /// The validated input pair.
    pub fn pair(&self) -> &InputPair {
        &self.pair
    }

    /// The ordinary extended Euclidean data.
    pub fn euclid(&self) -> &EuclidData {
        &self.euclid
    }

    /// The slow Euclidean remainder sequence data.
    pub fn sers(&self) -> &SersData {
        &self.sers
    }

    /// `b_n` for `n = 1, ..., q + 2` (with `b_{q+2} = 0`).
    pub fn b(&self, n: usize) -> u64 {
        assert!(
            (1..=self.q() + 2).contains(&n),
            "index {} outside 1..=q+2",
            n
        );
        self.b[n]
    }

    /// Bezout coefficient `sigma_n` for `n = 1, ..., q + 1`
    /// (`sigma_n * u + tau_n * (d - u) = b_n`).
    pub fn sigma(&self, n: usize) -> i64 {
        assert!(
            (1..=self.q() + 1).contains(&n),
            "index {} outside 1..=q+1",
            n
        );
        self.sigma[n]
    }

    /// Bezout coefficient `tau_n` for `n = 1, ..., q + 1`.
    pub fn tau(&self, n: usize) -> i64 {
        assert!(
            (1..=self.q() + 1).contains(&n),
            "index {} outside 1..=q+1",
            n
        );
        self.tau[n]
    }

    /// Block marker `m_l` for `l = 0, ..., p` (`m_0 = 1`, `m_{p-1} = q + 1`,
    /// `m_p = q + 2`).
    pub fn m(&self, l: usize) -> usize {
        self.sers.m_seq[l]
    }

    /// The block index `l(n)` with `m_{l-1} <= n < m_l`, for
    /// `n = 1, ..., q + 1`.
    ///
    /// # Errors
    /// [`Error::IndexOutOfRange`] outside that range.
    pub fn ell_of(&self, n: usize) -> Result<usize> {
        self.sers.ell_of(n)
    }

    /// The successor map: `rho(n) = n + 1` inside a block, and the next block
    /// marker `m_{l(n)+1}` at a block's end, for `n = 1, ..., q`.
    ///
    /// # Errors
    /// [`Error::IndexOutOfRange`] outside that range.
    pub fn rho_of(&self, n: usize) -> Result<usize> {
        self.sers.rho_of(n)
    }

    /// Whether the next-to-last Bezout coefficient `sigma_q` is positive;
    /// this single sign selects the variable arrangement of the term order
    /// and the orientation of the closed-form families.
    pub fn sigma_q_positive(&self) -> bool {
        self.sigma[self.q()] > 0
    }

    /// The lexicographic term order the theory fixes for this input.
    pub fn term_order(&self) -> TermOrder {
        TermOrder::lex_for(self.sigma_q_positive())
    }

    /// X-monomial on the `T0` side of the generator `F_n`
    /// (`n = 1, ..., q + 1`): `X0^(-sigma_n) * X2^(tau_n)` when
    /// `sigma_n <= 0`, else `X1^(sigma_n - tau_n)`.
    pub(crate) fn t0_side(&self, n: usize) -> Monomial {
        let (s, t) = (self.sigma(n), self.tau(n));
        if s <= 0 {
            x_mon(-s, 0, t)
        } else {
            x_mon(0, s - t, 0)
        }
    }

    /// X-monomial on the `T1` side of the generator `F_n`
    /// (`n = 1, ..., q + 1`): `X1^(tau_n - sigma_n)` when `sigma_n <= 0`,
    /// else `X0^(sigma_n) * X2^(-tau_n)`.
    pub(crate) fn t1_side(&self, n: usize) -> Monomial {
        let (s, t) = (self.sigma(n), self.tau(n));
        if s <= 0 {
            x_mon(0, t - s, 0)
        } else {
            x_mon(s, 0, -t)
        }
    }
}

/// Build `X0^a * X1^b * X2^c` from exponents that are nonnegative by the
/// Bezout sign pattern (asserted).
fn x_mon(a: i64, b: i64, c: i64) -> Monomial {
    let cast = |v: i64| u32::try_from(v).expect("Bezout sign pattern guarantees nonnegativity");
    let mut m = [0u32; crate::polyengine::NVARS];
    m[X0] = cast(a);
    m[X1] = cast(b);
    m[X2] = cast(c);
    Monomial(m)
}

fn t_pow(slot: usize, e: u64) -> Monomial {
    Monomial::var(
        slot,
        u32::try_from(e).expect("degree bounded by MAX_DEGREE"),
    )
}

/// `|sigma_n - tau_n|`, the X-degree of the generator `F_n`.
pub(crate) fn x_degree(setup: &ReesSetup, n: usize) -> i64 {
    (setup.sigma(n) - setup.tau(n)).abs()
}

// ---------------------------------------------------------------------------
// The generator family F_0.
// ---------------------------------------------------------------------------

/// The `q + 2` minimal generators of the defining ideal of the Rees algebra,
/// in index order `n = 1, ..., q + 2`.
///
/// For `n <= q + 1` the generator is
/// `T0^(b_n) * X^(t0 side) - T1^(b_n) * X^(t1 side)`; the last one is the
/// implicit equation of the parametrized curve, oriented to be monic under
/// the active term order:
/// `X0^(d-u) * X2^u - X1^d` when `sigma_q > 0`, and
/// `X1^d - X0^(d-u) * X2^u` otherwise.
pub fn f0_family(setup: &ReesSetup) -> Vec<Poly> {
    let q = setup.q();
    let d = setup.d();
    let u = setup.u();
    let mut out = Vec::with_capacity(q + 2);
    for n in 1..=(q + 1) {
        let b = setup.b(n);
        let f = Poly::from_int_terms(&[
            (1, t_pow(T0, b).mul(&setup.t0_side(n))),
            (-1, t_pow(T1, b).mul(&setup.t1_side(n))),
        ]);
        out.push(f);
    }
    let plane_curve = {
        let x0x2 = x_mon((d - u) as i64, 0, u as i64);
        let x1 = x_mon(0, d as i64, 0);
        if setup.sigma_q_positive() {
            Poly::from_int_terms(&[(1, x0x2), (-1, x1)])
        } else {
            Poly::from_int_terms(&[(1, x1), (-1, x0x2)])
        }
    };
    out.push(plane_curve);
    debug_assert!(out
        .iter()
        .all(|f| f.rees_substitute(setup.d(), setup.u()).is_zero()));
    out
}

/// The same family computed by the leading-coefficient-free recursion: start
/// from the two syzygies of `(T0^d, T0^(d-u) T1^u, T1^d)` — indices `1` and
/// `m_1` — and repeatedly cross-combine the X-parts:
/// the element at index `rho(n)` has `T0`-side `(T0`-side of `F_n) * (T1`-side
/// of `F_(m_l(n)))` and `T1`-side the opposite product, with `T`-exponent
/// `b_n - b_(m_l(n))`. Each output is normalized to be monic under the active
/// term order, which only reorients the final, `T`-free element.
pub fn f0_family_recursive(setup: &ReesSetup) -> Vec<Poly> {
    let q = setup.q();
    let d = setup.d();
    let u = setup.u();
    let ord = setup.term_order();
    // X-parts of the T0 and T1 side per index, 1-based.
    let mut t0x: Vec<Option<Monomial>> = alloc::vec![None; q + 3];
    let mut t1x: Vec<Option<Monomial>> = alloc::vec![None; q + 3];
    t0x[1] = Some(Monomial::var(X2, 1));
    t1x[1] = Some(Monomial::var(X1, 1));
    let m1 = setup.m(1);
    t0x[m1] = Some(Monomial::var(X1, 1));
    t1x[m1] = Some(Monomial::var(X0, 1));
    debug_assert_eq!(setup.b(1), d - u);
    debug_assert_eq!(setup.b(m1), u);
    for n in 1..=q {
        let m = setup.m(setup.ell_of(n).expect("1..=q is in range"));
        let target = setup.rho_of(n).expect("1..=q is in range");
        let a0 = t0x[n].expect("operand computed earlier in the recursion");
        let a1 = t1x[n].expect("operand computed earlier in the recursion");
        let b0 = t0x[m].expect("block marker computed earlier in the recursion");
        let b1 = t1x[m].expect("block marker computed earlier in the recursion");
        assert!(t0x[target].is_none(), "recursion target assigned twice");
        t0x[target] = Some(a0.mul(&b1));
        t1x[target] = Some(a1.mul(&b0));
        debug_assert_eq!(setup.b(target), setup.b(n) - setup.b(m));
    }
    (1..=(q + 2))
        .map(|n| {
            let b = setup.b(n);
            let raw = Poly::from_int_terms(&[
                (1, t_pow(T0, b).mul(&t0x[n].expect("all indices filled"))),
                (-1, t_pow(T1, b).mul(&t1x[n].expect("all indices filled"))),
            ]);
            raw.make_monic(&ord).expect("binomial is nonzero")
        })
        .collect()
}

/// Bidegrees of the generators: `(b_n, |sigma_n - tau_n|)` for
/// `n = 1, ..., q + 1`, and `(0, d)` for the plane curve.
pub fn f0_twists(setup: &ReesSetup) -> Vec<(i64, i64)> {
    let q = setup.q();
    let mut out = Vec::with_capacity(q + 2);
    for n in 1..=(q + 1) {
        out.push((setup.b(n) as i64, x_degree(setup, n)));
    }
    out.push((0, setup.d() as i64));
    out
}

// ---------------------------------------------------------------------------
// The first syzygy family F_1.
// ---------------------------------------------------------------------------

/// Labels `(i, j)` (1-based generator indices, `i < j`) of the `2q` first
/// syzygies, in ascending lexicographic order: for each `n = 1, ..., q - 1`
/// the two partners `rho(n)` and `m_l(n)` of `n`, then `(q, q+1)` and
/// `(q+1, q+2)`.
pub fn f1_labels(setup: &ReesSetup) -> Vec<(usize, usize)> {
    let q = setup.q();
    let mut out = Vec::with_capacity(2 * q);
    for n in 1..=(q - 1) {
        let rho = setup.rho_of(n).expect("in range");
        let m = setup.m(setup.ell_of(n).expect("in range"));
        let (k1, k2) = if rho < m { (rho, m) } else { (m, rho) };
        out.push((n, k1));
        out.push((n, k2));
    }
    out.push((q, q + 1));
    out.push((q + 1, q + 2));
    out
}

/// The `2q` minimal first syzygies among the generators, as elements of the
/// free module with basis `e_1, ..., e_(q+2)`, listed in [`f1_labels`] order.
///
/// For `n = 1, ..., q - 1` (with `m = m_l(n)`, `r = rho(n)`):
///
/// ```text
/// s_(n,r) = (T1 side of F_m) e_n - T0^(b_m) e_r - T1^(b_r) (T1 side of F_n) e_m
/// s_(n,m) = (T0 side of F_m) e_n - T0^(b_r) (T0 side of F_n) e_m - T1^(b_m) e_r
/// ```
///
/// and the two tail syzygies
///
/// ```text
/// s_(q,q+1)   = (T0 side of F_(q+1)) e_q - (T0 side of F_q) e_(q+1) + T1^(b_(q+1)) e_(q+2)
/// s_(q+1,q+2) = (T1 side of F_q) e_(q+1) - T0^(b_(q+1)) e_(q+2) - (T1 side of F_(q+1)) e_q
/// ```
///
/// Annihilation against [`f0_family`] is asserted at construction.
pub fn f1_family(setup: &ReesSetup) -> Vec<ModElem> {
    let q = setup.q();
    let rank = q + 2;
    let e = |n: usize| n - 1; // 1-based index -> coordinate
    let mut out = Vec::with_capacity(2 * q);
    for n in 1..=(q - 1) {
        let r = setup.rho_of(n).expect("in range");
        let m = setup.m(setup.ell_of(n).expect("in range"));
        let s_rho = ModElem::from_int_terms(
            rank,
            &[
                (1, setup.t1_side(m), e(n)),
                (-1, t_pow(T0, setup.b(m)), e(r)),
                (-1, t_pow(T1, setup.b(r)).mul(&setup.t1_side(n)), e(m)),
            ],
        )
        .expect("indices within rank");
        let s_m = ModElem::from_int_terms(
            rank,
            &[
                (1, setup.t0_side(m), e(n)),
                (-1, t_pow(T0, setup.b(r)).mul(&setup.t0_side(n)), e(m)),
                (-1, t_pow(T1, setup.b(m)), e(r)),
            ],
        )
        .expect("indices within rank");
        if r < m {
            out.push(s_rho);
            out.push(s_m);
        } else {
            out.push(s_m);
            out.push(s_rho);
        }
    }
    // s_(q, q+1): the in-block formula for n = q degenerates (b_(q+2) = 0 and
    // the partner rho(q) = q + 2 carries a plus sign).
    let s_q = ModElem::from_int_terms(
        rank,
        &[
            (1, setup.t0_side(q + 1), e(q)),
            (-1, setup.t0_side(q), e(q + 1)),
            (1, t_pow(T1, setup.b(q + 1)), e(q + 2)),
        ],
    )
    .expect("indices within rank");
    out.push(s_q);
    // s_(q+1, q+2).
    let s_last = ModElem::from_int_terms(
        rank,
        &[
            (1, setup.t1_side(q), e(q + 1)),
            (-1, t_pow(T0, setup.b(q + 1)), e(q + 2)),
            (-1, setup.t1_side(q + 1), e(q)),
        ],
    )
    .expect("indices within rank");
    out.push(s_last);

    let f0 = f0_family(setup);
    for s in &out {
        assert!(
            s.apply(&f0).expect("ranks agree").is_zero(),
            "first-syzygy family fails to annihilate the generators"
        );
    }
    out
}

/// Bidegrees of the first syzygies, in [`f1_labels`] order: both syzygies of
/// the pair `n` have bidegree
/// `(b_n, |sigma_n - tau_n| + |sigma_(m_l(n)) - tau_(m_l(n))|)`,
/// and the two tail syzygies have bidegree `(1, d)`.
pub fn f1_twists(setup: &ReesSetup) -> Vec<(i64, i64)> {
    let q = setup.q();
    let mut out = Vec::with_capacity(2 * q);
    for n in 1..=(q - 1) {
        let m = setup.m(setup.ell_of(n).expect("in range"));
        let t = (setup.b(n) as i64, x_degree(setup, n) + x_degree(setup, m));
        out.push(t);
        out.push(t);
    }
    out.push((1, setup.d() as i64));
    out.push((1, setup.d() as i64));
    out
}

// ---------------------------------------------------------------------------
// The second syzygy family F_2.
// ---------------------------------------------------------------------------

/// Labels `(n, j, k)` of the `q - 1` second syzygies: `{j, k}` is
/// `{rho(n), m_l(n)}` sorted ascending, for `n = 1, ..., q - 1`.
pub fn f2_labels(setup: &ReesSetup) -> Vec<(usize, usize, usize)> {
    (1..=(setup.q() - 1))
        .map(|n| {
            let r = setup.rho_of(n).expect("in range");
            let m = setup.m(setup.ell_of(n).expect("in range"));
            if r < m {
                (n, r, m)
            } else {
                (n, m, r)
            }
        })
        .collect()
}

/// The `q - 1` minimal second syzygies, as elements of the free module whose
/// basis is indexed by the first-syzygy labels (so the coordinate written
/// `e_(i,j)` is the position of `(i, j)` in [`f1_labels`]).
///
/// With `m = m_l(n)` and `r = rho(n)`:
///
/// * in-block step (`r = n + 1`):
///   `(T0 side of F_m) e_(n,n+1) - (T1 side of F_m) e_(n,m)
///    + T0^(b_m) e_(n+1,m) - T1^(b_m) e_(n+1,rho(n+1))`
/// * block-end step (`r = m_(l(n)+1)`):
///   `(T1 side of F_m) e_(n,m) - (T0 side of F_m) e_(n,r)
///    + T0^(b_r) e_(n+1,r) - T1^(b_r) e_(n+1,rho(n+1))`
///
/// At `n = q - 1` the reference `e_(q, q+2)` in the in-block step does not
/// exist in the basis; the corresponding term is `+T1^(b_(q+1)) e_(q+1,q+2)`.
/// Annihilation against [`f1_family`] is asserted at construction.
pub fn f2_family(setup: &ReesSetup) -> Vec<ModElem> {
    let q = setup.q();
    let labels = f1_labels(setup);
    let rank = labels.len();
    let pos = |i: usize, j: usize| -> usize {
        labels
            .iter()
            .position(|&p| p == (i, j))
            .expect("second-syzygy term references a first-syzygy label")
    };
    let mut out = Vec::with_capacity(q - 1);
    for n in 1..=(q - 1) {
        let r = setup.rho_of(n).expect("in range");
        let m = setup.m(setup.ell_of(n).expect("in range"));
        let rho_next = setup.rho_of(n + 1).expect("n + 1 <= q");
        let mut terms: Vec<(i64, Monomial, usize)> = Vec::with_capacity(4);
        if r == n + 1 {
            terms.push((1, setup.t0_side(m), pos(n, n + 1)));
            terms.push((-1, setup.t1_side(m), pos(n, m)));
            terms.push((1, t_pow(T0, setup.b(m)), pos(n + 1, m)));
            if n + 1 == q {
                // rho(q) = q + 2: the phantom coordinate e_(q, q+2) becomes
                // +T1^(b_(q+1)) e_(q+1, q+2); here b_m = b_(q+1) as well.
                terms.push((1, t_pow(T1, setup.b(q + 1)), pos(q + 1, q + 2)));
            } else {
                terms.push((-1, t_pow(T1, setup.b(m)), pos(n + 1, rho_next)));
            }
        } else {
            // Block end: r = m_(l(n)+1) and n + 1 = m, so n + 1 < q and no
            // phantom coordinate can occur.
            debug_assert_eq!(n + 1, m);
            terms.push((1, setup.t1_side(m), pos(n, m)));
            terms.push((-1, setup.t0_side(m), pos(n, r)));
            terms.push((1, t_pow(T0, setup.b(r)), pos(n + 1, r)));
            terms.push((-1, t_pow(T1, setup.b(r)), pos(n + 1, rho_next)));
        }
        out.push(ModElem::from_int_terms(rank, &terms).expect("indices within rank"));
    }
    let f1 = f1_family(setup);
    for s in &out {
        assert!(
            s.apply_mod(&f1).expect("ranks agree").is_zero(),
            "second-syzygy family fails to annihilate the first syzygies"
        );
    }
    out
}

/// Bidegrees of the second syzygies, in [`f2_labels`] order:
/// `(b_n, |sigma_n - tau_n| + 2 |sigma_(m_l(n)) - tau_(m_l(n))|)`.
pub fn f2_twists(setup: &ReesSetup) -> Vec<(i64, i64)> {
    (1..=(setup.q() - 1))
        .map(|n| {
            let m = setup.m(setup.ell_of(n).expect("in range"));
            (
                setup.b(n) as i64,
                x_degree(setup, n) + 2 * x_degree(setup, m),
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// The assembled resolution.
// ---------------------------------------------------------------------------

/// The full bigraded minimal free resolution data: families, labels, and the
/// twists of each free module.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// Curve degree.
    pub d: u64,
    /// Inner exponent.
    pub u: u64,
    /// Sum of Euclidean quotients.
    pub q: usize,
    /// Generators (columns of the first map).
    pub f0: Vec<Poly>,
    /// First syzygies (columns of the second map).
    pub f1: Vec<ModElem>,
    /// Second syzygies (columns of the third map).
    pub f2: Vec<ModElem>,
    /// Labels of the first syzygies.
    pub f1_labels: Vec<(usize, usize)>,
    /// Labels of the second syzygies.
    pub f2_labels: Vec<(usize, usize, usize)>,
    /// Twists of the four free modules, from homological degree 0 to 3.
    pub twists: [Vec<(i64, i64)>; 4],
}

/// Assemble the resolution for a validated setup.
pub fn resolution(setup: &ReesSetup) -> Resolution {
    Resolution {
        d: setup.d(),
        u: setup.u(),
        q: setup.q(),
        f0: f0_family(setup),
        f1: f1_family(setup),
        f2: f2_family(setup),
        f1_labels: f1_labels(setup),
        f2_labels: f2_labels(setup),
        twists: [
            alloc::vec![(0, 0)],
            f0_twists(setup),
            f1_twists(setup),
            f2_twists(setup),
        ],
    }
}

impl Resolution {
    /// Ranks of the free modules: `[1, q + 2, 2q, q - 1]`.
    pub fn ranks(&self) -> [usize; 4] {
        [1, self.q + 2, 2 * self.q, self.q - 1]
    }

    /// First map as a column-major matrix (one row; columns are the
    /// generators).
    pub fn phi1_matrix(&self) -> Vec<Vec<Poly>> {
        self.f0.iter().map(|f| alloc::vec![f.clone()]).collect()
    }

    /// Second map as a column-major matrix (`q + 2` rows, `2q` columns).
    pub fn phi2_matrix(&self) -> Vec<Vec<Poly>> {
        self.f1.iter().map(|s| s.coefficient_vector()).collect()
    }

    /// Third map as a column-major matrix (`2q` rows, `q - 1` columns).
    pub fn phi3_matrix(&self) -> Vec<Vec<Poly>> {
        self.f2.iter().map(|s| s.coefficient_vector()).collect()
    }

    /// Whether consecutive maps compose to zero.
    pub fn composition_is_zero(&self) -> bool {
        self.f1
            .iter()
            .all(|s| s.apply(&self.f0).map(|p| p.is_zero()).unwrap_or(false))
            && self
                .f2
                .iter()
                .all(|s| s.apply_mod(&self.f1).map(|v| v.is_zero()).unwrap_or(false))
    }

    /// Whether every matrix entry is bihomogeneous of the bidegree forced by
    /// the twists: the entry in row `r`, column `c` of the map from module
    /// `i` to module `i - 1` must have bidegree
    /// `twists[i][c] - twists[i-1][r]`.
    pub fn is_bihomogeneous(&self) -> bool {
        let matrices = [self.phi1_matrix(), self.phi2_matrix(), self.phi3_matrix()];
        for (i, matrix) in matrices.iter().enumerate() {
            let (src, dst) = (&self.twists[i + 1], &self.twists[i]);
            if matrix.len() != src.len() {
                return false;
            }
            for (c, col) in matrix.iter().enumerate() {
                if col.len() != dst.len() {
                    return false;
                }
                for (r, entry) in col.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    let expect = (src[c].0 - dst[r].0, src[c].1 - dst[r].1);
                    match entry.bidegree(self.d) {
                        Ok(got) if got == expect => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    /// Whether the resolution is minimal: no matrix entry has a constant
    /// term (all entries lie in the irrelevant maximal ideal).
    pub fn is_minimal(&self) -> bool {
        let matrices = [self.phi1_matrix(), self.phi2_matrix(), self.phi3_matrix()];
        matrices.iter().all(|m| {
            m.iter()
                .all(|col| col.iter().all(|e| !e.has_constant_term()))
        })
    }
}

/// Graded Betti data: ranks and twist multisets of the four free modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiNumbers {
    /// Ranks `[1, q + 2, 2q, q - 1]`.
    pub ranks: [usize; 4],
    /// Twists per homological degree, sorted ascending.
    pub twists: [Vec<(i64, i64)>; 4],
}

/// Compute the Betti data (twist lists sorted for canonical comparison).
pub fn betti_numbers(setup: &ReesSetup) -> BettiNumbers {
    let q = setup.q();
    let mut t1 = f0_twists(setup);
    let mut t2 = f1_twists(setup);
    let mut t3 = f2_twists(setup);
    t1.sort_unstable();
    t2.sort_unstable();
    t3.sort_unstable();
    BettiNumbers {
        ranks: [1, q + 2, 2 * q, q - 1],
        twists: [alloc::vec![(0, 0)], t1, t2, t3],
    }
}

/// Whether every generator maps to zero under the Rees substitution
/// `X0 -> Z T0^d`, `X1 -> Z T0^(d-u) T1^u`, `X2 -> Z T1^d`.
pub fn verify_kernel_membership(setup: &ReesSetup) -> bool {
    f0_family(setup)
        .iter()
        .all(|f| f.rees_substitute(setup.d(), setup.u()).is_zero())
}

// ---------------------------------------------------------------------------
// Structural verification against the Groebner machinery.
// ---------------------------------------------------------------------------

/// Outcome of the structural checks tying the closed-form families to
/// independently computed Groebner/syzygy data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    /// The generator family is a reduced Groebner basis of the ideal it
    /// generates under the active lexicographic order.
    pub f0_is_reduced_gb: bool,
    /// Every first syzygy annihilates the generators.
    pub f1_annihilates: bool,
    /// The first-syzygy family is a Groebner basis (of the module it spans)
    /// under the order induced by the generators.
    pub f1_is_gb_under_induced: bool,
    /// The first-syzygy family spans the full syzygy module of the
    /// generators (compared against Schreyer syzygies).
    pub f1_generates_syzygies: bool,
    /// The second-syzygy family is a Groebner basis under the order induced
    /// by the first syzygies.
    pub f2_is_gb: bool,
    /// The second-syzygy family spans the full syzygy module of the first
    /// syzygies.
    pub f2_generates_syzygies: bool,
    /// The second syzygies admit no relations: their syzygy module is zero,
    /// so the resolution stops after three steps.
    pub f2_linearly_independent: bool,
    /// All resolution matrix entries avoid constant terms.
    pub minimality: bool,
    /// Consecutive maps compose to zero.
    pub composition_zero: bool,
    /// All matrix entries are bihomogeneous of the twist-forced bidegrees.
    pub bihomogeneous: bool,
}

impl TheoremReport {
    /// Whether every check passed.
    pub fn all_pass(&self) -> bool {
        self.f0_is_reduced_gb
            && self.f1_annihilates
            && self.f1_is_gb_under_induced
            && self.f1_generates_syzygies
            && self.f2_is_gb
            && self.f2_generates_syzygies
            && self.f2_linearly_independent
            && self.minimality
            && self.composition_zero
            && self.bihomogeneous
    }

    /// The checks as `(name, passed)` pairs, in a fixed order.
    pub fn entries(&self) -> [(&'static str, bool); 10] {
        [
            ("f0_is_reduced_gb", self.f0_is_reduced_gb),
            ("f1_annihilates", self.f1_annihilates),
            ("f1_is_gb_under_induced", self.f1_is_gb_under_induced),
            ("f1_generates_syzygies", self.f1_generates_syzygies),
            ("f2_is_gb", self.f2_is_gb),
            ("f2_generates_syzygies", self.f2_generates_syzygies),
            ("f2_linearly_independent", self.f2_linearly_independent),
            ("minimality", self.minimality),
            ("composition_zero", self.composition_zero),
            ("bihomogeneous", self.bihomogeneous),
        ]
    }
}

/// Run the structural checks for one input pair.
///
/// # Errors
/// [`Error::DeadlineExceeded`] if the deadline expires mid-computation;
/// Groebner-machinery errors propagate.
pub fn verify_theorems(setup: &ReesSetup, deadline: &dyn Deadline) -> Result<TheoremReport> {
    let ord = setup.term_order();
    let resolution = resolution(setup);
    let f0 = &resolution.f0;
    let f1 = &resolution.f1;
    let f2 = &resolution.f2;

    // F_0: a reduced Groebner basis of the ideal it spans. (That the ideal
    // is the full kernel of the Rees map is checked independently by the
    // oracle module.)
    let f0_is_gb = is_groebner(f0, &ord)?;
    let f0_is_reduced_gb = if f0_is_gb {
        let reduced = reduce_basis(f0, &ord)?;
        let mut sorted = f0.clone();
        sorted.sort_by(|a, b| {
            let (_, ma) = a.leading_term(&ord).expect("generators are nonzero");
            let (_, mb) = b.leading_term(&ord).expect("generators are nonzero");
            ord.cmp_monomials(ma, mb)
        });
        reduced == sorted
    } else {
        false
    };

    // F_1 against the Schreyer syzygies of F_0, under the induced order.
    let induced0 = ModuleOrder::induced_from_polys(f0, ord)?;
    let induced1 = ModuleOrder::induced_from_modelems(f1, &induced0)?;
    let f1_annihilates = f1
        .iter()
        .all(|s| s.apply(f0).map(|p| p.is_zero()).unwrap_or(false));
    let f1_is_gb_under_induced = is_groebner_mod(f1, &induced0)?;
    let f1_generates_syzygies = if f0_is_gb {
        let schreyer1 = syzygy_basis(f0, &ord)?;
        module_equal(f1, &schreyer1, &induced0, deadline)?
    } else {
        false
    };

    // F_2 against the Schreyer syzygies of F_1.
    let f2_is_gb = is_groebner_mod(f2, &induced1)?;
    let f2_generates_syzygies = if f1_is_gb_under_induced {
        let schreyer2 = syzygy_basis_mod(f1, &induced0)?;
        module_equal(f2, &schreyer2, &induced1, deadline)?
    } else {
        false
    };
    let f2_linearly_independent = if f2_is_gb {
        let schreyer3 = syzygy_basis_mod(f2, &induced1)?;
        schreyer3.iter().all(|s| s.is_zero())
    } else {
        false
    };

    Ok(TheoremReport {
        f0_is_reduced_gb,
        f1_annihilates,
        f1_is_gb_under_induced,
        f1_generates_syzygies,
        f2_is_gb,
        f2_generates_syzygies,
        f2_linearly_independent,
        minimality: resolution.is_minimal(),
        composition_zero: resolution.composition_is_zero(),
        bihomogeneous: resolution.is_bihomogeneous(),
    })
}

// ---------------------------------------------------------------------------
// Euler characteristic cross-check.
// ---------------------------------------------------------------------------

/// One bidegree where the alternating sum over the resolution disagrees with
/// the dimension of the Rees algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerMismatch {
    /// T-degree.
    pub k: i64,
    /// X-degree.
    pub n: i64,
    /// Alternating sum of free-module dimensions.
    pub resolution_side: i64,
    /// Monomial count in the Rees algebra.
    pub rees_side: i64,
}

/// Result of the Euler characteristic scan over a bidegree rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCheck {
    /// Number of bidegrees compared.
    pub bidegrees_checked: usize,
    /// All disagreements (empty iff the check passed).
    pub mismatches: Vec<EulerMismatch>,
}

impl EulerCheck {
    /// Whether every compared bidegree agreed.
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Dimension of the bigraded piece `(k, n)` of the free module `S(-(a, b))`
/// over `S = K[T0, T1, X0, X1, X2]` with `T`-variables of bidegree `(1, 0)`
/// and `X`-variables of bidegree `(0, 1)`.
fn twisted_dimension(k: i64, n: i64, twist: (i64, i64)) -> i64 {
    let (kk, nn) = (k - twist.0, n - twist.1);
    if kk < 0 || nn < 0 {
        return 0;
    }
    (kk + 1) * (nn + 2) * (nn + 1) / 2
}

/// Dimension of the bigraded piece `(k, n)` of the Rees algebra: the number
/// of monomials `T0^i T1^j` of total degree `k + d n` lying in the `n`-th
/// power of the monomial ideal `(T0^d, T0^(d-u) T1^u, T1^d)`.
fn rees_dimension(d: u64, u: u64, k: i64, n: i64) -> i64 {
    let (d, u) = (d as i64, u as i64);
    let total = k + d * n;
    let mut count = 0;
    for i in 0..=total {
        let j = total - i;
        // Is (i, j) >= (d a + (d-u) b, u b + d c) for some a + b + c = n?
        let mut member = false;
        'outer: for a in 0..=n {
            for bb in 0..=(n - a) {
                let c = n - a - bb;
                if i >= d * a + (d - u) * bb && j >= u * bb + d * c {
                    member = true;
                    break 'outer;
                }
            }
        }
        if member {
            count += 1;
        }
    }
    count
}

/// Compare, for every bidegree `(k, n)` with `k <= k_max` and `n <= n_max`,
/// the alternating sum of the resolution's free-module dimensions against
/// the dimension of the Rees algebra.
pub fn euler_characteristic_check(setup: &ReesSetup, k_max: i64, n_max: i64) -> EulerCheck {
    let twists = [
        alloc::vec![(0, 0)],
        f0_twists(setup),
        f1_twists(setup),
        f2_twists(setup),
    ];
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for k in 0..=k_max {
        for n in 0..=n_max {
            checked += 1;
            let mut resolution_side = 0;
            for (i, batch) in twists.iter().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for &t in batch {
                    resolution_side += sign * twisted_dimension(k, n, t);
                }
            }
            let rees_side = rees_dimension(setup.d(), setup.u(), k, n);
            if resolution_side != rees_side {
                mismatches.push(EulerMismatch {
                    k,
                    n,
                    resolution_side,
                    rees_side,
                });
            }
        }
    }
    EulerCheck {
        bidegrees_checked: checked,
        mismatches,
    }
}
