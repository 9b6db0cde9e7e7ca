//! Command-line front end for the Rees-resolution library.
//!
//! Subcommands compute the Euclidean sequence data, the generator and syzygy
//! families, the assembled resolution, Betti numbers, verification reports
//! (structural checks plus the optional from-scratch Groebner oracle), adjoint
//! reports, and a whole-range verification sweep.
//!
//! Output formats:
//! - `text` (default): human-readable report; polynomial content uses the
//!   canonical grammar of the core library.
//! - `json`: one `OutputDocument` per invocation with canonical serialization
//!   (sorted keys, two-space indentation, trailing newline). JSON and text
//!   carry the same mathematical content; JSON is the machine-readable
//!   authority.
//! - `cas-script`: a plain-text script for a general-purpose computer-algebra
//!   system (Macaulay2 grammar) that rebuilds the kernel independently and
//!   asserts ideal equality and the syzygy containments. Available for the
//!   `generators`, `syzygies`, and `resolution` subcommands.
//!
//! Exit codes: 0 success, 1 validation/usage error, 2 verification failure,
//! 3 deadline expired.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use rees_core::adjoint::{adjoint_report, AdjointReport};
use rees_core::oracle::oracle_report;
use rees_core::polyengine::ModuleOrder;
use rees_core::reesfamilies::{
    betti_numbers, euler_characteristic_check, f0_twists, f1_labels, f1_twists, f2_labels,
    f2_twists, resolution, verify_kernel_membership, verify_theorems, ReesSetup,
};
use rees_core::{Deadline, Error as CoreError, NoDeadline};

/// Version stamp of the JSON output schema.
pub const SCHEMA_VERSION: &str = "1";

// ---------------------------------------------------------------------------
// Wall-clock deadline.
// ---------------------------------------------------------------------------

/// A wall-clock deadline for the cooperative-cancellation hooks of the core.
pub struct WallClock {
    start: Instant,
    limit: Duration,
}

impl WallClock {
    /// A deadline expiring `secs` seconds from now.
    pub fn after_secs(secs: u64) -> Self {
        WallClock {
            start: Instant::now(),
            limit: Duration::from_secs(secs),
        }
    }
}

impl Deadline for WallClock {
    fn expired(&self) -> bool {
        self.start.elapsed() >= self.limit
    }
}

// ---------------------------------------------------------------------------
// Argument grammar.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable report.
    Text,
    /// Canonical JSON document.
    Json,
    /// Computer-algebra cross-check script.
    CasScript,
}

#[derive(Debug, Parser)]
#[command(
    name = "rees",
    version,
    about = "Exact bigraded free resolutions of Rees algebras of monomial plane parametrizations",
    long_about = "Computes, for a coprime pair (d, u) with u < d/2, the explicit minimal \
bigraded free resolution of the Rees algebra of (t0 : t1) -> (t0^d : t0^(d-u) t1^u : t1^d), \
verifies it against an independent Groebner-basis oracle, and reports adjoint-pencil data."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Accept u > d/2 by replacing u with d - u (the two parametrizations
    /// differ by swapping t0 and t1).
    #[arg(long, global = true)]
    allow_swap: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Euclidean remainder sequences (classical and slow) with their
    /// extended companions and index maps.
    Euclid { d: u64, u: u64 },
    /// The generator family of the Rees kernel (a reduced Groebner basis).
    Generators { d: u64, u: u64 },
    /// The first or second syzygy family of the resolution.
    Syzygies {
        d: u64,
        u: u64,
        /// Syzygy level: 1 (relations among the generators) or 2.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        level: u8,
    },
    /// The full resolution: ranks, twists, and all three matrices.
    Resolution { d: u64, u: u64 },
    /// Bigraded Betti numbers (ranks and sorted twist lists).
    Betti { d: u64, u: u64 },
    /// Run the structural verification checks for one pair.
    Verify {
        d: u64,
        u: u64,
        /// Also run the from-scratch Groebner oracle (elimination kernel,
        /// saturation kernel, Schreyer syzygies, support patterns).
        #[arg(long)]
        oracle: bool,
        /// Abort with exit code 3 after this many seconds.
        #[arg(long, value_name = "SECS")]
        deadline: Option<u64>,
    },
    /// Adjoint-pencil report: singular points, dimension formulas, and the
    /// quotient dimension nu with its solution sets.
    Adjoint {
        d: u64,
        u: u64,
        /// Degree to report at (default: the threshold degree d - 2).
        #[arg(long, value_name = "L")]
        ell: Option<u64>,
    },
    /// Verify every coprime pair (d, u) with u < d/2 and d <= dmax.
    Sweep {
        /// Largest curve degree to include.
        #[arg(long, value_name = "N")]
        dmax: u64,
        /// Also run the Groebner oracle on every pair.
        #[arg(long)]
        oracle: bool,
    },
}

// ---------------------------------------------------------------------------
// JSON document model.
// ---------------------------------------------------------------------------

/// Echo of the validated input pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub d: u64,
    pub u: u64,
}

/// Top-level JSON document: schema version, validated input (absent for
/// sweeps), and one payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub input: Option<InputEcho>,
    pub payload: Payload,
}

/// The payload variants, externally tagged in JSON by kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Payload {
    Euclid(EuclidPayload),
    Families(FamiliesPayload),
    Resolution(ResolutionPayload),
    Betti(BettiPayload),
    VerifyReport(VerifyPayload),
    AdjointReport(AdjointPayload),
}

/// Euclidean sequence data. Sequence fields drop the unused index-0 slots of
/// the core types: `classical_remainders[i]` is the i-th classical remainder
/// starting from d - u, u; `slow_b[n-1]` is the n-th slow remainder, and the
/// companion sequences are aligned the same way; `ell[n-1]`/`rho[n-1]` are
/// the index maps at n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidPayload {
    pub d: u64,
    pub u: u64,
    pub p: usize,
    pub q: usize,
    pub classical_remainders: Vec<i64>,
    pub classical_quotients: Vec<i64>,
    pub bezout_s: Vec<i64>,
    pub bezout_t: Vec<i64>,
    pub slow_b: Vec<i64>,
    pub slow_c: Vec<i64>,
    pub sigma: Vec<i64>,
    pub tau: Vec<i64>,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub markers: Vec<usize>,
    pub ell: Vec<usize>,
    pub rho: Vec<usize>,
}

/// One family element: label, bigraded twist, and canonical text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyElement {
    pub label: String,
    pub bidegree: (i64, i64),
    pub text: String,
}

/// A generator or syzygy family (`level` 0, 1, or 2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamiliesPayload {
    pub d: u64,
    pub u: u64,
    pub q: usize,
    pub level: u8,
    pub elements: Vec<FamilyElement>,
}

/// The assembled resolution with its structural check results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionPayload {
    pub d: u64,
    pub u: u64,
    pub q: usize,
    pub ranks: [usize; 4],
    pub twists: [Vec<(i64, i64)>; 4],
    pub generators: Vec<FamilyElement>,
    pub first_syzygies: Vec<FamilyElement>,
    pub second_syzygies: Vec<FamilyElement>,
    pub minimal: bool,
    pub bihomogeneous: bool,
    pub composition_zero: bool,
}

/// Ranks and sorted twist multisets of the four free modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiPayload {
    pub d: u64,
    pub u: u64,
    pub ranks: [usize; 4],
    pub twists: [Vec<(i64, i64)>; 4],
}

/// One named check result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
}

/// Verification outcome for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerification {
    pub d: u64,
    pub u: u64,
    pub theorem_checks: Vec<CheckEntry>,
    pub kernel_membership: bool,
    pub euler_characteristic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_checks: Option<Vec<CheckEntry>>,
    pub all_pass: bool,
}

/// Verification report: one pair for `verify`, every swept pair for `sweep`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub pair_count: usize,
    pub failures: usize,
    pub pairs: Vec<PairVerification>,
}

/// One singular point of the curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPointOut {
    pub point: [u32; 3],
    pub multiplicity: u64,
    pub conductor: u64,
    pub delta: u64,
}

/// Adjoint-pencil data at one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointPayload {
    pub d: u64,
    pub u: u64,
    pub ell: u64,
    pub enumerated_at: u64,
    pub dim_adjoint_pencils: i64,
    pub below_threshold: bool,
    pub dim_kernel_degree_one: u64,
    pub nu: usize,
    pub nu_branch_counts: [usize; 4],
    pub branch_overlap: bool,
    pub forbidden_alpha: Vec<[u64; 3]>,
    pub forbidden_beta: Vec<[u64; 3]>,
    pub upper_bound: u64,
    pub singular_points: Vec<SingularPointOut>,
}

// ---------------------------------------------------------------------------
// Payload construction.
// ---------------------------------------------------------------------------

fn small_ints(v: &[rees_core::BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| i64::try_from(x).expect("sequence value fits i64"))
        .collect()
}

fn small_ints_skip_dummy(v: &[rees_core::BigInt]) -> Vec<i64> {
    small_ints(&v[1..])
}

/// Build the Euclidean payload for a validated pair.
pub fn euclid_payload(setup: &ReesSetup) -> EuclidPayload {
    let e = setup.euclid();
    let s = setup.sers();
    let q = setup.q();
    let skip_dummy = small_ints_skip_dummy;
    EuclidPayload {
        d: setup.d(),
        u: setup.u(),
        p: setup.p(),
        q,
        classical_remainders: small_ints(&e.a_seq),
        classical_quotients: small_ints(&e.q_seq),
        bezout_s: small_ints(&e.s_seq),
        bezout_t: small_ints(&e.t_seq),
        slow_b: skip_dummy(&s.b_seq),
        slow_c: skip_dummy(&s.c_seq),
        sigma: skip_dummy(&s.sigma_seq),
        tau: skip_dummy(&s.tau_seq),
        alpha: skip_dummy(&s.alpha_seq),
        beta: skip_dummy(&s.beta_seq),
        markers: s.m_seq.clone(),
        ell: (1..=q + 1)
            .map(|n| s.ell_of(n).expect("in range"))
            .collect(),
        rho: (1..=q).map(|n| s.rho_of(n).expect("in range")).collect(),
    }
}

/// Render one family at the requested level (0 = generators, 1, 2).
pub fn families_payload(setup: &ReesSetup, level: u8) -> rees_core::Result<FamiliesPayload> {
    let res = resolution(setup);
    let ord = setup.term_order();
    let elements = match level {
        0 => res
            .f0
            .iter()
            .zip(f0_twists(setup))
            .enumerate()
            .map(|(i, (f, twist))| FamilyElement {
                label: format!("F_{}", i + 1),
                bidegree: twist,
                text: f.render(&ord),
            })
            .collect(),
        1 => {
            let induced = ModuleOrder::induced_from_polys(&res.f0, ord)?;
            res.f1
                .iter()
                .zip(f1_labels(setup))
                .zip(f1_twists(setup))
                .map(|((s, (i, j)), twist)| FamilyElement {
                    label: format!("s_{{{i},{j}}}"),
                    bidegree: twist,
                    text: s.render(&induced),
                })
                .collect()
        }
        2 => {
            let induced = ModuleOrder::induced_from_polys(&res.f0, ord)?;
            let induced2 = ModuleOrder::induced_from_modelems(&res.f1, &induced)?;
            res.f2
                .iter()
                .zip(f2_labels(setup))
                .zip(f2_twists(setup))
                .map(|((s, (n, r, l)), twist)| FamilyElement {
                    label: format!("s_{{{n},{r},{l}}}"),
                    bidegree: twist,
                    text: s.render(&induced2),
                })
                .collect()
        }
        _ => {
            return Err(CoreError::OutOfRange {
                what: "syzygy level must be 0 (generators), 1, or 2",
            })
        }
    };
    Ok(FamiliesPayload {
        d: setup.d(),
        u: setup.u(),
        q: setup.q(),
        level,
        elements,
    })
}

/// Build the full resolution payload.
pub fn resolution_payload(setup: &ReesSetup) -> rees_core::Result<ResolutionPayload> {
    let res = resolution(setup);
    let generators = families_payload(setup, 0)?.elements;
    let first_syzygies = families_payload(setup, 1)?.elements;
    let second_syzygies = families_payload(setup, 2)?.elements;
    Ok(ResolutionPayload {
        d: setup.d(),
        u: setup.u(),
        q: setup.q(),
        ranks: res.ranks(),
        twists: res.twists.clone(),
        generators,
        first_syzygies,
        second_syzygies,
        minimal: res.is_minimal(),
        bihomogeneous: res.is_bihomogeneous(),
        composition_zero: res.composition_is_zero(),
    })
}

/// Build the Betti payload (sorted twist lists).
pub fn betti_payload(setup: &ReesSetup) -> BettiPayload {
    let betti = betti_numbers(setup);
    BettiPayload {
        d: setup.d(),
        u: setup.u(),
        ranks: betti.ranks,
        twists: betti.twists,
    }
}

/// Run the verification checks for one validated pair.
pub fn verify_pair(
    setup: &ReesSetup,
    oracle: bool,
    deadline: &dyn Deadline,
) -> rees_core::Result<PairVerification> {
    let theorem = verify_theorems(setup, deadline)?;
    let theorem_checks: Vec<CheckEntry> = theorem
        .entries()
        .iter()
        .map(|&(name, passed)| CheckEntry {
            name: name.to_string(),
            passed,
        })
        .collect();
    let kernel_membership = verify_kernel_membership(setup);
    let euler = euler_characteristic_check(setup, 2 * setup.d() as i64, 4);
    let oracle_checks = if oracle {
        let report = oracle_report(setup, deadline)?;
        Some(
            report
                .entries()
                .iter()
                .map(|&(name, passed)| CheckEntry {
                    name: name.to_string(),
                    passed,
                })
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let all_pass = theorem.all_pass()
        && kernel_membership
        && euler.passed()
        && oracle_checks
            .as_ref()
            .map(|cs| cs.iter().all(|c| c.passed))
            .unwrap_or(true);
    Ok(PairVerification {
        d: setup.d(),
        u: setup.u(),
        theorem_checks,
        kernel_membership,
        euler_characteristic: euler.passed(),
        oracle_checks,
        all_pass,
    })
}

/// All coprime pairs (d, u) with u < d/2 and 3 <= d <= dmax, ascending.
pub fn sweep_pairs(dmax: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for d in 3..=dmax {
        for u in 1..=(d - 1) / 2 {
            if 2 * u < d && gcd(d, u) == 1 {
                pairs.push((d, u));
            }
        }
    }
    pairs
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Run the verification sweep over all pairs up to `dmax`, in parallel, with
/// results in ascending (d, u) order.
pub fn sweep_payload(dmax: u64, oracle: bool) -> rees_core::Result<VerifyPayload> {
    let pairs = sweep_pairs(dmax);
    let results: Vec<rees_core::Result<PairVerification>> = pairs
        .par_iter()
        .map(|&(d, u)| {
            let setup = ReesSetup::new(d, u)?;
            verify_pair(&setup, oracle, &NoDeadline)
        })
        .collect();
    let mut verified = Vec::with_capacity(results.len());
    for r in results {
        verified.push(r?);
    }
    let failures = verified.iter().filter(|p| !p.all_pass).count();
    Ok(VerifyPayload {
        pair_count: verified.len(),
        failures,
        pairs: verified,
    })
}

/// Build the adjoint payload (requires u > 1).
pub fn adjoint_payload(setup: &ReesSetup, ell: Option<u64>) -> rees_core::Result<AdjointPayload> {
    let report: AdjointReport = adjoint_report(setup, ell)?;
    Ok(AdjointPayload {
        d: setup.d(),
        u: setup.u(),
        ell: report.ell,
        enumerated_at: report.enumerated_at,
        dim_adjoint_pencils: report.dim_adj,
        below_threshold: report.below_threshold,
        dim_kernel_degree_one: report.dim_ker_1,
        nu: report.nu,
        nu_branch_counts: report.nu_breakdown,
        branch_overlap: report.branch_overlap,
        forbidden_alpha: report.forbidden_alpha,
        forbidden_beta: report.forbidden_beta,
        upper_bound: report.bound,
        singular_points: report
            .singular
            .iter()
            .map(|p| SingularPointOut {
                point: p.point,
                multiplicity: p.multiplicity,
                conductor: p.conductor,
                delta: p.delta,
            })
            .collect(),
    })
}

// ---------------------------------------------------------------------------
// Canonical JSON.
// ---------------------------------------------------------------------------

/// Serialize a document canonically: sorted keys, two-space indentation,
/// trailing newline.
pub fn to_canonical_json(doc: &OutputDocument) -> String {
    let value = serde_json::to_value(doc).expect("document serializes");
    let mut s = serde_json::to_string_pretty(&value).expect("value prints");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Computer-algebra cross-check script.
// ---------------------------------------------------------------------------

fn cas_power(base: &str, e: u64) -> String {
    match e {
        0 => String::from("1"),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn cas_product(factors: &[(&str, u64)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|&&(_, e)| e > 0)
        .map(|&(b, e)| cas_power(b, e))
        .collect();
    if parts.is_empty() {
        String::from("1")
    } else {
        parts.join("*")
    }
}

/// Emit a deterministic plain-text script (Macaulay2 grammar) that defines
/// the parametrization, recomputes the kernel, and asserts ideal equality
/// with the generator family plus both syzygy containments.
pub fn export_cas_script(setup: &ReesSetup) -> String {
    let d = setup.d();
    let u = setup.u();
    let res = resolution(setup);
    let ord = setup.term_order();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "-- Cross-check of the Rees-kernel resolution for (d, u) = ({d}, {u})."
    );
    let _ = writeln!(
        s,
        "-- Grammar: Macaulay2. Every assert must hold; the script prints a"
    );
    let _ = writeln!(s, "-- confirmation line when all checks pass.");
    let _ = writeln!(s, "S = QQ[t0, t1, z];");
    let _ = writeln!(s, "R = QQ[T0, T1, X0, X1, X2];");
    let x0 = cas_product(&[("z", 1), ("t0", d)]);
    let x1 = cas_product(&[("z", 1), ("t0", d - u), ("t1", u)]);
    let x2 = cas_product(&[("z", 1), ("t1", d)]);
    let _ = writeln!(s, "phi = map(S, R, {{t0, t1, {x0}, {x1}, {x2}}});");
    let _ = writeln!(s, "I = ker phi;");
    let _ = writeln!(s, "F0 = ideal(");
    for (i, f) in res.f0.iter().enumerate() {
        let sep = if i + 1 < res.f0.len() { "," } else { "" };
        let _ = writeln!(s, "  {}{sep}", f.render(&ord));
    }
    let _ = writeln!(s, ");");
    let _ = writeln!(s, "assert(I == F0);");
    let _ = writeln!(s, "G = gens F0;");
    let write_matrix =
        |s: &mut String, name: &str, columns: &[Vec<rees_core::polyengine::Poly>]| {
            let rows = columns.first().map(|c| c.len()).unwrap_or(0);
            let _ = writeln!(s, "{name} = matrix {{");
            for r in 0..rows {
                let entries: Vec<String> = columns.iter().map(|col| col[r].render(&ord)).collect();
                let sep = if r + 1 < rows { "," } else { "" };
                let _ = writeln!(s, "  {{{}}}{sep}", entries.join(", "));
            }
            let _ = writeln!(s, "}};");
        };
    write_matrix(&mut s, "Phi2", &res.phi2_matrix());
    write_matrix(&mut s, "Phi3", &res.phi3_matrix());
    let _ = writeln!(s, "assert(G * Phi2 == 0);");
    let _ = writeln!(s, "assert(image Phi2 == image syz G);");
    let _ = writeln!(s, "assert(Phi2 * Phi3 == 0);");
    let _ = writeln!(s, "assert(image Phi3 == image syz Phi2);");
    let _ = writeln!(s, "assert(syz Phi3 == 0);");
    let _ = writeln!(s, "print \"all checks passed\";");
    s
}

// ---------------------------------------------------------------------------
// Text rendering.
// ---------------------------------------------------------------------------

fn join<T: std::fmt::Display>(values: &[T]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn join_twists(twists: &[(i64, i64)]) -> String {
    twists
        .iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn join_triples(triples: &[[u64; 3]]) -> String {
    if triples.is_empty() {
        return String::from("none");
    }
    triples
        .iter()
        .map(|g| format!("({},{},{})", g[0], g[1], g[2]))
        .collect::<Vec<_>>()
        .join(", ")
}

fn euclid_text(p: &EuclidPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pair: d = {}, u = {}", p.d, p.u);
    let _ = writeln!(s, "p = {}, q = {}", p.p, p.q);
    let _ = writeln!(
        s,
        "classical remainders a_0..a_{}: {}",
        p.p,
        join(&p.classical_remainders)
    );
    let _ = writeln!(
        s,
        "classical quotients q_1..q_{}: {}",
        p.p - 1,
        join(&p.classical_quotients)
    );
    let _ = writeln!(s, "bezout s_0..s_{}: {}", p.p, join(&p.bezout_s));
    let _ = writeln!(s, "bezout t_0..t_{}: {}", p.p, join(&p.bezout_t));
    let top = p.q + 1;
    let _ = writeln!(s, "slow remainders b_1..b_{top}: {}", join(&p.slow_b));
    let _ = writeln!(s, "slow remainders c_1..c_{top}: {}", join(&p.slow_c));
    let _ = writeln!(s, "sigma_1..sigma_{top}: {}", join(&p.sigma));
    let _ = writeln!(s, "tau_1..tau_{top}: {}", join(&p.tau));
    let _ = writeln!(s, "alpha_1..alpha_{top}: {}", join(&p.alpha));
    let _ = writeln!(s, "beta_1..beta_{top}: {}", join(&p.beta));
    let _ = writeln!(s, "markers m_0..m_{}: {}", p.p, join(&p.markers));
    let _ = writeln!(s, "ell(1..{top}): {}", join(&p.ell));
    let _ = writeln!(s, "rho(1..{}): {}", p.q, join(&p.rho));
    s
}

fn families_text(p: &FamiliesPayload) -> String {
    let mut s = String::new();
    if p.level == 0 {
        // Generators print bare, one per line, in canonical grammar.
        for e in &p.elements {
            let _ = writeln!(s, "{}", e.text);
        }
    } else {
        for e in &p.elements {
            let _ = writeln!(s, "{} = {}", e.label, e.text);
        }
    }
    s
}

fn resolution_text(p: &ResolutionPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pair: d = {}, u = {} (q = {})", p.d, p.u, p.q);
    let _ = writeln!(s, "ranks: {}", join(&p.ranks));
    for (i, twists) in p.twists.iter().enumerate() {
        let _ = writeln!(s, "twists[{i}]: {}", join_twists(twists));
    }
    let _ = writeln!(s, "generators:");
    for e in &p.generators {
        let _ = writeln!(s, "  {} = {}", e.label, e.text);
    }
    let _ = writeln!(s, "first syzygies:");
    for e in &p.first_syzygies {
        let _ = writeln!(s, "  {} = {}", e.label, e.text);
    }
    let _ = writeln!(s, "second syzygies:");
    for e in &p.second_syzygies {
        let _ = writeln!(s, "  {} = {}", e.label, e.text);
    }
    let _ = writeln!(
        s,
        "checks: minimal = {}, bihomogeneous = {}, composition zero = {}",
        p.minimal, p.bihomogeneous, p.composition_zero
    );
    s
}

fn betti_text(p: &BettiPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pair: d = {}, u = {}", p.d, p.u);
    let _ = writeln!(s, "ranks: {}", join(&p.ranks));
    for (i, twists) in p.twists.iter().enumerate() {
        let _ = writeln!(s, "position {i}: {}", join_twists(twists));
    }
    s
}

fn pair_verification_text(p: &PairVerification, s: &mut String) {
    let _ = writeln!(s, "pair: d = {}, u = {}", p.d, p.u);
    let _ = writeln!(s, "theorem checks:");
    for c in &p.theorem_checks {
        let _ = writeln!(
            s,
            "  {}: {}",
            c.name,
            if c.passed { "pass" } else { "FAIL" }
        );
    }
    let _ = writeln!(
        s,
        "kernel membership: {}",
        if p.kernel_membership { "pass" } else { "FAIL" }
    );
    let _ = writeln!(
        s,
        "euler characteristic: {}",
        if p.euler_characteristic {
            "pass"
        } else {
            "FAIL"
        }
    );
    if let Some(oracle) = &p.oracle_checks {
        let _ = writeln!(s, "oracle checks:");
        for c in oracle {
            let _ = writeln!(
                s,
                "  {}: {}",
                c.name,
                if c.passed { "pass" } else { "FAIL" }
            );
        }
    }
    let _ = writeln!(s, "overall: {}", if p.all_pass { "PASS" } else { "FAIL" });
}

fn verify_text(p: &VerifyPayload) -> String {
    let mut s = String::new();
    if p.pair_count == 1 {
        pair_verification_text(&p.pairs[0], &mut s);
    } else {
        for pv in &p.pairs {
            let _ = writeln!(
                s,
                "({},{}): {}",
                pv.d,
                pv.u,
                if pv.all_pass { "PASS" } else { "FAIL" }
            );
        }
        let _ = writeln!(s, "pairs: {}, failures: {}", p.pair_count, p.failures);
    }
    s
}

fn adjoint_text(p: &AdjointPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pair: d = {}, u = {}", p.d, p.u);
    let _ = writeln!(s, "singular points:");
    for sp in &p.singular_points {
        let _ = writeln!(
            s,
            "  ({}:{}:{}): multiplicity {}, conductor {}, delta {}",
            sp.point[0], sp.point[1], sp.point[2], sp.multiplicity, sp.conductor, sp.delta
        );
    }
    let _ = writeln!(s, "degree ell = {}", p.ell);
    if p.below_threshold {
        let _ = writeln!(
            s,
            "dim adjoint pencils = 0 (below threshold; solution sets shown at ell = {})",
            p.enumerated_at
        );
    } else {
        let _ = writeln!(s, "dim adjoint pencils = {}", p.dim_adjoint_pencils);
    }
    let _ = writeln!(
        s,
        "dim kernel degree-one part = {}",
        p.dim_kernel_degree_one
    );
    let _ = writeln!(
        s,
        "nu = {} (branch counts: alpha {}+{}, beta {}+{})",
        p.nu,
        p.nu_branch_counts[0],
        p.nu_branch_counts[1],
        p.nu_branch_counts[2],
        p.nu_branch_counts[3]
    );
    if p.branch_overlap {
        let _ = writeln!(
            s,
            "WARNING: inequality branches overlap; counts are not additive"
        );
    }
    let _ = writeln!(s, "upper bound = {}", p.upper_bound);
    let _ = writeln!(
        s,
        "forbidden alpha exponents: {}",
        join_triples(&p.forbidden_alpha)
    );
    let _ = writeln!(
        s,
        "forbidden beta exponents: {}",
        join_triples(&p.forbidden_beta)
    );
    s
}

fn payload_text(payload: &Payload) -> String {
    match payload {
        Payload::Euclid(p) => euclid_text(p),
        Payload::Families(p) => families_text(p),
        Payload::Resolution(p) => resolution_text(p),
        Payload::Betti(p) => betti_text(p),
        Payload::VerifyReport(p) => verify_text(p),
        Payload::AdjointReport(p) => adjoint_text(p),
    }
}

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------

/// What a successful invocation produced.
struct Outcome {
    rendered: String,
    /// False when a verification-style command found failing checks.
    verified: bool,
}

fn setup_for(d: u64, u: u64, allow_swap: bool) -> rees_core::Result<ReesSetup> {
    ReesSetup::with_swap(d, u, allow_swap)
}

fn document(input: Option<InputEcho>, payload: Payload) -> OutputDocument {
    OutputDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        input,
        payload,
    }
}

fn render(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Text => payload_text(&doc.payload),
        Format::Json => to_canonical_json(doc),
        Format::CasScript => unreachable!("cas-script handled before rendering"),
    }
}

fn dispatch(cli: &Cli) -> rees_core::Result<Outcome> {
    let format = cli.format;
    if format == Format::CasScript {
        let setup =
            match cli.command {
                Command::Generators { d, u }
                | Command::Syzygies { d, u, .. }
                | Command::Resolution { d, u } => setup_for(d, u, cli.allow_swap)?,
                _ => return Err(CoreError::OutOfRange {
                    what: "cas-script format is available for generators, syzygies, and resolution",
                }),
            };
        return Ok(Outcome {
            rendered: export_cas_script(&setup),
            verified: true,
        });
    }
    match cli.command {
        Command::Euclid { d, u } => {
            let setup = setup_for(d, u, cli.allow_swap)?;
            let echo = InputEcho {
                d: setup.d(),
                u: setup.u(),
            };
            let doc = document(Some(echo), Payload::Euclid(euclid_payload(&setup)));
            Ok(Outcome {
                rendered: render(&doc, format),
                verified: true,
            })
        }
        Command::Generators { d, u } => {
            let setup = setup_for(d, u, cli.allow_swap)?;
            let echo = InputEcho {
                d: setup.d(),
                u: setup.u(),
            };
            let doc = document(Some(echo), Payload::Families(families_payload(&setup, 0)?));
            Ok(Outcome {
                rendered: render(&doc, format),
                verified: true,
            })
        }
        Command::Syzygies { d, u, level } => {
            let setup = setup_for(d, u, cli.allow_swap)?;
            let echo = InputEcho {
                d: setup.d(),
                u: setup.u(),
            };
            let doc = document(
                Some(echo),
                Payload::Families(families_payload(&setup, level)?),
            );
            Ok(Outcome {
                rendered: render(&doc, format),
                verified: true,
            })
        }
        Command::Resolution { d, u } => {
            let setup = setup_for(d, u, cli.allow_swap)?;
            let echo = InputEcho {
                d: setup.d(),
                u: setup.u(),
            };
            let doc = document(Some(echo), Payload::Resolution(resolution_payload(&setup)?));
            Ok(Outcome {
                rendered: render(&doc, format),
                verified: true,
            })
        }
        Command::Betti { d, u } => {
            let setup = setup_for(d, u, cli.allow_swap)?;
            let echo = InputEcho {
                d: setup.d(),
                u: setup.u(),
            };
            let doc = document(Some(echo), Payload::Betti(betti_payload(&setup)));
            Ok(Outcome {
                rendered: render(&doc, format),
                verified: true,
            })
        }
        Command::Verify {
            d,
            u,
            oracle,
            deadline,
        } => {
            let setup = setup_for(d, u, cli.allow_swap)?;
            let echo = InputEcho {
                d: setup.d(),
                u: setup.u(),
            };
            let pair = match deadline {
                Some(secs) => verify_pair(&setup, oracle, &WallClock::after_secs(secs))?,
                None => verify_pair(&setup, oracle, &NoDeadline)?,
            };
            let verified = pair.all_pass;
            let payload = VerifyPayload {
                pair_count: 1,
                failures: usize::from(!verified),
                pairs: vec![pair],
            };
            let doc = document(Some(echo), Payload::VerifyReport(payload));
            Ok(Outcome {
                rendered: render(&doc, format),
                verified,
            })
        }
        Command::Adjoint { d, u, ell } => {
            let setup = setup_for(d, u, cli.allow_swap)?;
            let echo = InputEcho {
                d: setup.d(),
                u: setup.u(),
            };
            let doc = document(
                Some(echo),
                Payload::AdjointReport(adjoint_payload(&setup, ell)?),
            );
            Ok(Outcome {
                rendered: render(&doc, format),
                verified: true,
            })
        }
        Command::Sweep { dmax, oracle } => {
            let payload = sweep_payload(dmax, oracle)?;
            let verified = payload.failures == 0;
            let doc = document(None, Payload::VerifyReport(payload));
            Ok(Outcome {
                rendered: render(&doc, format),
                verified,
            })
        }
    }
}

/// Exit code for a core error: deadline expiry is 3, everything else is a
/// validation error (1).
fn exit_code_for(e: &CoreError) -> i32 {
    match e {
        CoreError::DeadlineExceeded => 3,
        _ => 1,
    }
}

/// Parse arguments, run the requested computation, and write the output.
///
/// Returns the process exit code: 0 success, 1 validation/usage error,
/// 2 verification failure, 3 deadline expired.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            if out.write_all(outcome.rendered.as_bytes()).is_err() {
                return 1;
            }
            if outcome.verified {
                0
            } else {
                2
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}
