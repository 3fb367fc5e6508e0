//! The invariant suites behind `torsionlab verify`.
//!
//! Each suite is a pure function of the configuration; `run_all` fans them
//! out over scoped threads.

use std::fmt::Display;
use std::thread;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torsionlab_core::exactalg::{int, rat, Poly, Rational, Var};
use torsionlab_core::kostant::verify_casimir_split;
use torsionlab_core::plancherel::{
    lambdas_at, pi_and_q, q_by_interpolation, reduced_density, segment_split, CrossIdentity,
};
use torsionlab_core::rootsys::{
    dominant_weights_up_to, sl3_from_fundamental, theta_twist, weyl_dim_poly, AffineWeight, GroupName,
    GroupSpec, Weight,
};
use torsionlab_core::spectrum::{
    convexhull_violations, growth_certificates, p_character, sl3_weight_labels, spectral_gap, SU2Char,
};
use torsionlab_core::torsion::{
    classify, compute, deficiency, kostant_route, kostant_route_raw, l2_torsion, leading_constant,
    prefactor_constant, sandwich_violation, sl3_closed_form, torsion_prefactor, SymbolicConstant,
};

use crate::app::dispatch;
use crate::golden::{self, parse_jsonl};
use crate::latex::{parse_poly, poly_to_latex};
use crate::schema;
use crate::serial::{poly_from_json, Response, SuiteReport};

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_MAX_RANK: usize = 8;
const LISTED_FAILURES: usize = 12;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Groups of larger rank are left out of the sweeps.
    pub max_rank: usize,
    /// Golden corpus as JSON Lines.
    pub golden: String,
}

impl VerifyConfig {
    pub fn new(seed: u64, max_rank: usize) -> Self {
        VerifyConfig { seed, max_rank, golden: golden::EMBEDDED.to_string() }
    }

    fn rng(&self, suite: u32) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ u64::from(suite).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

#[derive(Debug, Default)]
struct Tally {
    passed: u64,
    total: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < LISTED_FAILURES {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, got: &T, want: &T, what: impl FnOnce() -> String) {
        self.check(got == want, || format!("{}: got {got}, want {want}", what()));
    }

    fn ok<T, E: Display>(&mut self, r: Result<T, E>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }
}

pub struct Suite {
    pub id: u32,
    pub name: &'static str,
    run: fn(&VerifyConfig) -> Tally,
}

pub const SUITES: [Suite; 15] = [
    Suite { id: 1, name: "sl3-fundamental", run: sl3_fundamental },
    Suite { id: 2, name: "sl3-leading-constants", run: sl3_leading },
    Suite { id: 3, name: "so31-fundamental", run: so31_fundamental },
    Suite { id: 4, name: "sl3-route-equivalence", run: sl3_routes },
    Suite { id: 5, name: "theta-symmetry", run: theta_symmetry },
    Suite { id: 6, name: "interpolation", run: interpolation },
    Suite { id: 7, name: "cross-identity", run: cross_identity },
    Suite { id: 8, name: "casimir-split", run: casimir_split },
    Suite { id: 9, name: "sandwich", run: sandwich },
    Suite { id: 10, name: "sl3-density", run: sl3_density },
    Suite { id: 11, name: "constant-table", run: constant_table },
    Suite { id: 12, name: "vanishing", run: vanishing },
    Suite { id: 13, name: "sl3-spectrum", run: sl3_spectrum },
    Suite { id: 14, name: "convex-hull", run: convex_hull },
    Suite { id: 15, name: "end-to-end", run: end_to_end },
];

pub fn suite(id: u32) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}

pub fn run_suite(s: &Suite, cfg: &VerifyConfig) -> SuiteReport {
    let started = Instant::now();
    let tally = (s.run)(cfg);
    SuiteReport {
        id: s.id,
        name: s.name.into(),
        passed: tally.passed,
        ok: tally.total > 0 && tally.passed == tally.total,
        total: tally.total,
        millis: started.elapsed().as_millis() as u64,
        failures: tally.failures,
    }
}

/// Runs every suite concurrently; `on_done` sees each report as it lands.
pub fn run_all(cfg: &VerifyConfig, on_done: impl Fn(&SuiteReport) + Sync) -> Vec<SuiteReport> {
    let on_done = &on_done;
    let mut reports: Vec<SuiteReport> = thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|s| {
                scope.spawn(move || {
                    let r = run_suite(s, cfg);
                    on_done(&r);
                    r
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    reports.sort_by_key(|r| r.id);
    reports
}

fn so(p: u32, q: u32) -> GroupSpec {
    GroupSpec::so(p, q).expect("odd-odd")
}

/// Odd-odd `so(p,q)` with `p ≤ 15` whose rank is at most `max_rank` and
/// `n` at most `max_n`.
fn so_groups(max_rank: usize, max_n: usize) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for p in (3..=15).step_by(2) {
        for q in (1..=p).step_by(2) {
            let g = so(p, q);
            if g.rank() <= max_rank && g.n() <= max_n {
                out.push(g);
            }
        }
    }
    out
}

fn within(cfg: &VerifyConfig, groups: &[GroupSpec]) -> Vec<GroupSpec> {
    groups.iter().copied().filter(|g| g.rank() <= cfg.max_rank).collect()
}

fn sl3(t1: i64, t2: i64) -> Weight {
    sl3_from_fundamental(&int(t1), &int(t2))
}

/// A dominant SO weight with `k₁ ≥ … ≥ k_{n+1} ≥ low`, entries at most `bound`.
fn random_so_weight(rng: &mut ChaCha8Rng, g: GroupSpec, low: i64, bound: i64) -> Weight {
    let mut k: Vec<i64> = (0..g.rank()).map(|_| rng.gen_range(low..=bound)).collect();
    k.sort_unstable_by(|a, b| b.cmp(a));
    Weight::from_ints(g.basis(), &k).expect("rank matches")
}

fn pick<T: Copy>(rng: &mut ChaCha8Rng, xs: &[T]) -> T {
    xs[rng.gen_range(0..xs.len())]
}

fn m_poly(c: &[Rational]) -> Poly {
    Poly::from_coeffs(Var::M, c.to_vec())
}

/// Lagrange interpolant through `(x_i, y_i)` as a polynomial in `m`.
fn lagrange(points: &[(Rational, Rational)]) -> Poly {
    let mut acc = Poly::zero(Var::M);
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Poly::constant(Var::M, yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let factor = Poly::linear(Var::M, Rational::one(), -xj.clone());
                basis = basis * factor.scale(&(Rational::one() / (xi - xj)));
            }
        }
        acc = acc + basis;
    }
    acc
}

/// `P_Λ(m)` for SL3 from the `A_k`, `C_k` sums evaluated pointwise.
fn sl3_pointwise(t1: i64, t2: i64, m: i64) -> Rational {
    let (t1, t2) = if t1 >= t2 { (t1, t2) } else { (t2, t1) };
    let (t1, t2, m) = (int(t1), int(t2), int(m));
    let a = [
        (&m * &t1 + int(1)) / int(2),
        (&m * (&t1 + &t2) + int(2)) / int(2),
        (&m * &t2 + int(1)) / int(2),
    ];
    let c = [
        (&m * (&t1 + &t2 * int(2)) + int(3)) / int(3),
        &m * (&t1 - &t2) / int(3),
        (&m * (&t1 * int(2) + &t2) + int(3)) / int(3),
    ];
    let mut total = Rational::zero();
    for k in 0..3 {
        let term = &a[k] * c[k].abs() * (int(3) * &c[k] * &c[k] - int(4) * &a[k] * &a[k]) / int(4);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn sl3_prefactor() -> SymbolicConstant {
    SymbolicConstant { pi_exp: 1, vol_x_exp: 1, vol_dual_exp: -1, ..SymbolicConstant::one() }
}

fn sl3_fundamental(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let want = m_poly(&[rat(1, 2), rat(4, 3), int(1), rat(2, 9)]);
    let samples: Vec<_> = (1..=5).map(|m| (int(m), sl3_pointwise(1, 0, m))).collect();
    t.eq(&lagrange(&samples), &want, || "interpolated closed form".into());
    for m in 6..=12 {
        t.eq(&want.eval(&int(m)), &sl3_pointwise(1, 0, m), || format!("closed form at m={m}"));
    }
    t.eq(&want.eval(&int(1)), &rat(55, 18), || "value at m=1".into());
    for (t1, t2) in [(1, 0), (0, 1)] {
        if let Some(r) = t.ok(compute(GroupName::Sl3, &[int(t1), int(t2)]), || format!("compute ({t1},{t2})")) {
            t.eq(&r.poly, &want, || format!("P for ({t1},{t2})"));
            t.eq(&r.prefactor, &sl3_prefactor(), || format!("prefactor for ({t1},{t2})"));
            t.check(!r.zero_flag, || "sl3 flagged as vanishing".into());
        }
    }
    t
}

fn alpha4(t1: i64, t2: i64) -> Rational {
    let (a, b) = (int(t1), int(t2));
    -(&b * &b * &b * &b) / int(18) + int(2) * &a * &a * &a * &b / int(9) + &a * &a * &b * &b / int(3)
}

fn sl3_leading(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for (t1, t2) in [(1, 0), (0, 1)] {
        if let Some(lc) = t.ok(leading_constant(GroupSpec::Sl3, &sl3(t1, t2)), || format!("C_Λ for ({t1},{t2})")) {
            t.eq(&lc.constant, &rat(4, 9), || format!("C_Λ for ({t1},{t2})"));
            t.check(lc.residual_degree.is_none_or(|d| d <= 2), || {
                format!("residual degree {:?} for ({t1},{t2})", lc.residual_degree)
            });
        }
    }
    for t1 in 2..=6 {
        for t2 in 1..t1 {
            let Some(r) = t.ok(l2_torsion(GroupSpec::Sl3, &sl3(t1, t2)), || format!("P for ({t1},{t2})")) else {
                continue;
            };
            let lead = r.poly.leading_coeff().cloned().unwrap_or_default();
            t.check(r.poly.degree() == Some(4), || format!("deg P = {:?} for ({t1},{t2})", r.poly.degree()));
            t.eq(&lead, &alpha4(t1, t2), || format!("α₄ for ({t1},{t2})"));
        }
    }
    t.eq(&alpha4(2, 1), &rat(55, 18), || "α₄(2,1)".into());
    t
}

fn so31_fundamental(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let g = so(3, 1);
    let w = Weight::from_ints(g.basis(), &[1, 1]).expect("rank 2");
    if let Some(r) = t.ok(l2_torsion(g, &w), || "so(3,1) (1,1)".into()) {
        t.eq(&r.poly, &m_poly(&[rat(1, 3), int(2), int(2)]), || "so(3,1) P".into());
        t.eq(&r.poly.eval(&int(1)), &rat(13, 3), || "so(3,1) P(1)".into());
        let want = SymbolicConstant { pi_exp: 1, vol_x_exp: 1, vol_dual_exp: -1, ..SymbolicConstant::rational(int(-1)) };
        t.eq(&r.prefactor, &want, || "so(3,1) prefactor".into());
    }
    for g in so_groups(cfg.max_rank, usize::MAX) {
        let ones = Weight::from_ints(g.basis(), &vec![1; g.rank()]).expect("rank matches");
        if let Some(lc) = t.ok(leading_constant(g, &ones), || format!("{g} C_Λ")) {
            t.eq(&lc.constant, &int(1), || format!("{g} C_Λ"));
            let dim_deg = weyl_dim_poly(g, &ones).ok().and_then(|d| d.degree());
            t.check(lc.residual_degree <= dim_deg, || format!("{g} residual degree {:?}", lc.residual_degree));
        }
    }
    t
}

fn sl3_routes(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for t1 in 0..=4 {
        for t2 in 0..t1 {
            let w = sl3(t1, t2);
            let generic = t.ok(kostant_route(GroupSpec::Sl3, &w), || format!("generic route ({t1},{t2})"));
            let closed = t.ok(sl3_closed_form(&w), || format!("closed form ({t1},{t2})"));
            if let (Some(a), Some(b)) = (generic, closed) {
                t.eq(&a, &b, || format!("routes differ at ({t1},{t2})"));
            }
        }
    }
    t
}

fn theta_symmetry(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let mut groups = within(cfg, &[so(3, 1), so(5, 1), so(5, 3), so(7, 5), so(9, 7)]);
    groups.push(GroupSpec::Sl3);
    for g in groups {
        for w in dominant_weights_up_to(g, 3) {
            let sig = g.theta_signature(&w);
            if sig.is_zero() {
                let r = l2_torsion(g, &w);
                t.check(r.as_ref().is_err_and(|e| e.is_theta_invariant()), || format!("{g} {w}: θ-invariant weight accepted"));
                continue;
            }
            if sig.is_negative() {
                continue;
            }
            let Ok(tw) = theta_twist(g, &w) else {
                t.check(false, || format!("{g} {w}: twist failed"));
                continue;
            };
            let (Some(a), Some(b)) = (
                t.ok(l2_torsion(g, &w), || format!("{g} {w}")),
                t.ok(l2_torsion(g, &tw), || format!("{g} {tw}")),
            ) else {
                continue;
            };
            t.check(a == b, || format!("{g}: results for {w} and {tw} differ"));
            if let Some(raw) = t.ok(kostant_route_raw(g, &tw), || format!("{g} raw route at {tw}")) {
                t.eq(&raw, &a.poly, || format!("{g}: raw route at {tw}"));
            }
        }
    }
    t
}

/// Strictly decreasing positive rationals of length `len`.
fn random_abscissas(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    let mut acc = Rational::zero();
    let mut out: Vec<Rational> = (0..len)
        .map(|_| {
            acc += rat(rng.gen_range(1..=9), rng.gen_range(1..=5));
            acc.clone()
        })
        .collect();
    out.reverse();
    out
}

fn interpolation(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let mut rng = cfg.rng(6);
    let groups = so_groups(cfg.max_rank, 6);
    for case in 0..200 {
        let lambdas = if case % 2 == 0 || groups.is_empty() {
            let n = rng.gen_range(0..=6);
            random_abscissas(&mut rng, n + 1)
        } else {
            let g = pick(&mut rng, &groups);
            let w = random_so_weight(&mut rng, g, 1, 5);
            let m = int(rng.gen_range(1..=10));
            match lambdas_at(g, &w, &m) {
                Ok(l) => l,
                Err(e) => {
                    t.check(false, || format!("{g} {w}: {e}"));
                    continue;
                }
            }
        };
        let label = || format!("λ = {}", lambdas.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
        let (Some(basis), Some(split)) = (t.ok(pi_and_q(&lambdas), label), t.ok(segment_split(&lambdas), label))
        else {
            continue;
        };
        let q_last_one = basis.q.last() == Some(&Poly::one(Var::T));
        let q_match = (0..lambdas.len()).all(|k| q_by_interpolation(&lambdas, k).as_ref() == Ok(&basis.q[k]));
        t.check(q_last_one && q_match && split.holds() && split.all_positive(), || {
            format!(
                "{}: Q_n≡1 {q_last_one}, Q_k by interpolation {q_match}, split {}, positive {}",
                label(),
                split.holds(),
                split.all_positive()
            )
        });
    }
    t
}

fn cross_identity(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let mut rng = cfg.rng(7);
    for g in so_groups(cfg.max_rank, 5) {
        let mut weights = vec![Weight::from_ints(g.basis(), &vec![1; g.rank()]).expect("rank matches")];
        weights.extend((0..2).map(|_| random_so_weight(&mut rng, g, 1, 3)));
        for w in weights {
            let report = CrossIdentity::new(g, &w).and_then(|c| c.check());
            if let Some(r) = t.ok(report, || format!("{g} {w}")) {
                t.check(r.first_failure.is_none(), || {
                    format!("{g} {w}: fails at m = {}", r.first_failure.clone().unwrap_or_default())
                });
            }
        }
    }
    t
}

fn casimir_split(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let mut groups = so_groups(cfg.max_rank.min(6), usize::MAX);
    groups.push(GroupSpec::Sl3);
    for g in groups {
        for w in dominant_weights_up_to(g, 4) {
            if !g.theta_signature(&w).is_positive() {
                continue;
            }
            if let Some(report) = t.ok(verify_casimir_split(g, &w), || format!("{g} {w}")) {
                t.check(report.all_hold(), || format!("{g} {w}: {}", report.describe()));
            }
        }
    }
    t
}

fn sandwich(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let mut rng = cfg.rng(9);
    let groups = so_groups(cfg.max_rank.min(7), usize::MAX);
    if groups.is_empty() {
        return t;
    }
    for _ in 0..50 {
        let g = pick(&mut rng, &groups);
        let mut w = random_so_weight(&mut rng, g, 1, 4);
        if rng.gen_bool(0.5) {
            w = theta_twist(g, &w).expect("dominant");
        }
        if let Some(bad) = t.ok(sandwich_violation(g, &w, 20), || format!("{g} {w}")) {
            t.check(bad.is_none(), || format!("{g} {w}: bound fails at m = {}", bad.unwrap_or_default()));
        }
        let degrees = l2_torsion(g, &w).ok().map(|r| r.poly.degree()).zip(weyl_dim_poly(g, &w).ok().map(|d| d.degree()));
        t.check(matches!(degrees, Some((Some(p), Some(d))) if p == d + 1), || format!("{g} {w}: degrees {degrees:?}"));
    }
    t
}

fn sl3_density(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let g = GroupSpec::Sl3;
    for k in 0..=20i64 {
        let sigma = AffineWeight::new(g.m_basis(), vec![Poly::constant(Var::M, int(k))]).expect("rank 1");
        let Some(d) = t.ok(reduced_density(g, &sigma), || format!("k = {k}")) else { continue };
        let c = rat(9, 8) * int(k + 1);
        let r = rat(k + 1, 3);
        let want = Poly::from_coeffs(Var::T, vec![-(&c * &r * &r), Rational::zero(), c]);
        let got = d.eval_m(&Rational::one());
        t.check(d.bipoly().degree_m().unwrap_or(0) == 0, || format!("k = {k}: density depends on m"));
        t.eq(&got, &want, || format!("k = {k}"));
    }
    t
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

fn constant_table(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for ((p, q), r) in [((3, 1), -1), ((5, 3), -6), ((7, 5), -20)] {
        if let Some(c) = t.ok(prefactor_constant(p, q), || format!("C_{{{p},{q}}}")) {
            let want = SymbolicConstant { pi_exp: 1, vol_dual_exp: -1, ..SymbolicConstant::rational(int(r)) };
            t.eq(&c, &want, || format!("C_{{{p},{q}}}"));
        }
    }
    for p in (3..=15u64).step_by(2) {
        for q in (1..=p).step_by(2) {
            let n = (p + q - 2) / 2;
            let sign: i128 = if ((p * q - 1) / 2) % 2 == 0 { 1 } else { -1 };
            let eps: i128 = if q == 1 { 1 } else { 2 };
            let r = sign * eps * binomial(n, (p - 1) / 2) as i128;
            let want = Rational::from_integer(r.into());
            let g = so(p as u32, q as u32);
            let c = torsion_prefactor(g);
            t.eq(&c.rational, &want, || format!("{g} rational part"));
            t.check((c.pi_exp, c.vol_x_exp, c.vol_dual_exp) == (1, 1, -1), || format!("{g} exponents {c}"));
        }
    }
    t
}

fn vanishing(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    for p in 1..=9u32 {
        for q in 1..=p {
            let c = classify(GroupName::So { p, q });
            let odd_odd = p % 2 == 1 && q % 2 == 1;
            t.check(c.zero_flag == !odd_odd, || format!("so({p},{q}): zero_flag = {}", c.zero_flag));
            if odd_odd {
                t.check(c.delta == 1, || format!("so({p},{q}): δ = {}", c.delta));
            }
        }
    }
    t.check(deficiency(GroupName::Sl3) == 1, || "sl3 δ".into());
    t.check(!classify(GroupName::Sl3).zero_flag, || "sl3 flagged".into());
    t.check(deficiency(GroupName::So { p: 4, q: 3 }) == 0, || "so(4,3) δ".into());
    t.check(deficiency(GroupName::So { p: 3, q: 1 }) == 1, || "so(3,1) δ".into());
    if let Some(r) = t.ok(compute(GroupName::So { p: 4, q: 3 }, &[int(1), int(1), int(1)]), || "so(4,3)".into()) {
        t.check(r.zero_flag && r.poly.is_zero(), || "so(4,3) not vanishing".into());
    }
    t
}

fn sl3_spectrum(_: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let spin2 = p_character();
    let dims: Vec<i64> = (0..=5).map(|p| spin2.exterior_power(p).dim()).collect();
    t.check(dims == [1, 5, 10, 10, 5, 1], || format!("exterior dimensions {dims:?}"));
    for p in 0..=5 {
        t.check(spin2.exterior_power(p) == spin2.exterior_power(5 - p), || format!("Λ^{p} ≇ Λ^{}", 5 - p));
    }
    t.check(spin2.exterior_power(2).decompose().ok() == Some([(1, 1), (3, 1)].into()), || "Λ²(spin 2)".into());
    let weights = [(1, 0), (2, 0), (2, 1), (3, 1)];
    for (t1, t2) in weights {
        let w = sl3(t1, t2);
        let dim = weyl_dim_poly(GroupSpec::Sl3, &w).expect("dominant");
        for m in 1..=12 {
            let labels = sl3_weight_labels(&w, m);
            t.eq(&int(labels.dim()), &dim.eval(&int(m)), || format!("mass of ({t1},{t2}) at m={m}"));
            t.check(labels.decompose().is_ok(), || format!("({t1},{t2}) m={m} does not decompose"));
        }
        match growth_certificates(&w, 40) {
            Ok(certs) => {
                for c in certs {
                    t.check(c.holds && c.tail_non_increasing, || {
                        format!("({t1},{t2}) p={}: C = {}, holds {}, monotone {}", c.p, c.constant, c.holds, c.tail_non_increasing)
                    });
                }
            }
            Err(e) => t.check(false, || format!("({t1},{t2}): {e}")),
        }
    }
    let trivial = sl3(0, 0);
    for p in 0..=5 {
        if let Some(g) = t.ok(spectral_gap(&trivial, 1, p), || format!("trivial p={p}")) {
            let edge = p == 0 || p == 5;
            t.check(if edge { g.is_zero() } else { g.is_negative() }, || format!("trivial gap p={p} is {g}"));
        }
    }
    for (p, want) in [(0, rat(10, 9)), (1, rat(-20, 9))] {
        if let Some(g) = t.ok(spectral_gap(&sl3(1, 0), 1, p), || format!("ω₁ p={p}")) {
            t.eq(&g, &want, || format!("ω₁ m=1 p={p}"));
        }
    }
    t.check(sl3_weight_labels(&sl3(1, 0), 1) == SU2Char::spin(1), || "standard restriction".into());
    t
}

fn convex_hull(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    let mut rng = cfg.rng(14);
    let groups = so_groups(cfg.max_rank.min(6), usize::MAX);
    if groups.is_empty() {
        return t;
    }
    for i in 0..20u64 {
        let g = pick(&mut rng, &groups);
        let w = random_so_weight(&mut rng, g, 0, 6);
        let seed = cfg.seed.wrapping_add(i);
        if let Some(v) = t.ok(convexhull_violations(g, &w, 10_000, seed), || format!("{g} {w}")) {
            t.check(v == 0, || format!("{g} {w}: {v} violations"));
        }
    }
    t
}

/// Commands whose output must validate against the schema, with the exit
/// code each should produce.
const SAMPLE_COMMANDS: &[(&[&str], i32)] = &[
    (&["compute", "--group", "so(3,1)", "--weight", "1,1", "--m", "1", "--format", "json"], 0),
    (&["compute", "--group", "sl3", "--weight", "1,0", "--symbolic"], 0),
    (&["compute", "--group", "so(4,3)", "--weight", "1,1,1"], 0),
    (&["compute", "--group", "so(3,1)", "--weight", "1,0"], 2),
    (&["compute", "--group", "so(3,2", "--weight", "1,0"], 2),
    (&["compute", "--group", "so(5,3)", "--weight", "1,2,1,1"], 2),
    (&["compute", "--group", "so(5,3)", "--weight", "1,1"], 2),
    (&["compute", "--group", "so(5,3)", "--weight", "1,x,1,1"], 2),
    (&["dim", "--group", "sl3", "--weight", "1,0", "--m", "2"], 0),
    (&["dim", "--group", "so(7,5)", "--weight", "2,1,1,1,1,-1"], 0),
    (&["kostant", "--group", "so(5,3)", "--weight", "2,1,1,-1"], 0),
    (&["kostant", "--group", "sl3", "--weight", "1,0"], 0),
    (&["plancherel", "--group", "so(5,3)", "--sigma", "m+1,m,0", "--m", "2"], 0),
    (&["plancherel", "--group", "sl3", "--sigma", "2m-1"], 0),
    (&["plancherel", "--group", "sl3", "--sigma", "m^"], 2),
    (&["gap", "--group", "sl3", "--weight", "1,0", "--m", "1", "--p", "1"], 0),
    (&["gap", "--group", "sl3", "--weight", "1,0", "--m", "1", "--p", "6"], 2),
    (&["table", "corollary-constants"], 0),
    (&["frobnicate"], 2),
];

fn end_to_end(cfg: &VerifyConfig) -> Tally {
    let mut t = Tally::default();
    match parse_jsonl(&cfg.golden) {
        Ok(records) => {
            t.check(!records.is_empty(), || "golden corpus is empty".into());
            let diffs = golden::diff(&records);
            t.check(diffs.is_empty(), || format!("{} golden mismatches; first: {}", diffs.len(), diffs[0]));
            for rec in &records {
                let p = poly_from_json(Var::M, &rec.poly_coeffs);
                let back = parse_poly(&poly_to_latex(&p), Var::M);
                t.check(back.as_ref() == Ok(&p), || format!("latex round trip for {} {:?}", rec.group, rec.weight));
            }
        }
        Err(e) => t.check(false, || format!("golden corpus: {e}")),
    }
    for (args, code) in SAMPLE_COMMANDS {
        let argv = std::iter::once("torsionlab").chain(args.iter().copied());
        let out = dispatch(argv);
        let label = || args.join(" ");
        t.check(out.code == *code, || format!("`{}` exited {} (want {code})", label(), out.code));
        if let Err(errs) = schema::validate_text(&out.stdout) {
            t.check(false, || format!("`{}` fails the schema: {}", label(), errs.join("; ")));
            continue;
        }
        match Response::from_json(&out.stdout) {
            Ok(resp) => t.check(resp.to_json() == out.stdout, || format!("`{}` does not round-trip", label())),
            Err(e) => t.check(false, || format!("`{}`: {e}", label())),
        }
    }
    t
}
