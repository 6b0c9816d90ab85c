//! Sweep batteries over enumerated shifted order ideals.
//!
//! Each suite expands into instances `(U, t)` (or just `U`), checks every
//! instance independently and merges the outcomes in enumeration order, so a
//! report does not depend on the execution mode.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{self, StableOperator};
use crate::complex::{BallSphere, ComplexError, SimplicialComplex, VdOptions};
use crate::homology::HochsterOptions;
use crate::io::OrderIdealDoc;
use crate::lefschetz::{self, Mode};
use crate::monomial::{
    collect_shifted_order_ideals, monomials_of_degree, squarefree_extended_ideal, EnumerationConfig, Monomial,
    MonomialError, OrderIdeal,
};
use crate::par::Exec;
use crate::rational::Rational;
use crate::squeeze::{self, Decomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Enumeration(#[from] MonomialError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Construction,
    SrIdeal,
    Betti,
    Lefschetz,
    Singularity,
    Monotonicity,
    Decompose,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Duality,
        Suite::Construction,
        Suite::SrIdeal,
        Suite::Betti,
        Suite::Lefschetz,
        Suite::Singularity,
        Suite::Monotonicity,
        Suite::Decompose,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Construction => "construction",
            Suite::SrIdeal => "sr-ideal",
            Suite::Betti => "betti",
            Suite::Lefschetz => "lefschetz",
            Suite::Singularity => "singularity",
            Suite::Monotonicity => "monotonicity",
            Suite::Decompose => "decompose",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// Which values of `t` accompany each `U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TPolicy {
    /// `0 <= t <= d_max(U)`.
    #[default]
    UpToD,
    /// `0 <= t <= d_max(U) + 1`, adding the first cone.
    UpToDPlusOne,
}

impl FromStr for TPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "d" => Ok(TPolicy::UpToD),
            "d+1" => Ok(TPolicy::UpToDPlusOne),
            other => Err(format!("unknown t policy {other:?} (expected d or d+1)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub m_max: usize,
    pub d_max: usize,
    pub t_policy: TPolicy,
    /// Drives the random (not necessarily shifted) order ideals of the duality suite.
    pub seed: u64,
    pub exec: Exec,
    /// Cap on enumerated ideals per `m`.
    pub enumeration_budget: Option<usize>,
    pub vd_budget: usize,
    pub random_ideals: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            m_max: 3,
            d_max: 3,
            t_policy: TPolicy::default(),
            seed: 0,
            exec: Exec::default(),
            enumeration_budget: None,
            vd_budget: 200_000,
            random_ideals: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Name of the violated property.
    pub property: String,
    /// The order ideal document, plus `t` when the instance has one.
    pub input: serde_json::Value,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub attempted: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
    /// Wall-clock time; kept out of JSON so reports stay byte-stable.
    #[serde(skip)]
    pub duration: Duration,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs one suite, or every suite in order for [`Suite::All`].
pub fn run_verify(suite: Suite, config: &VerifyConfig) -> Result<Vec<VerificationReport>, VerifyError> {
    let ideals = enumerate(config, config.d_max)?;
    match suite {
        Suite::All => Suite::EACH.into_iter().map(|s| run_one(s, config, &ideals)).collect(),
        s => Ok(vec![run_one(s, config, &ideals)?]),
    }
}

fn enumerate(config: &VerifyConfig, d_max: usize) -> Result<Vec<OrderIdeal>, VerifyError> {
    let mut all = Vec::new();
    for m in 1..=config.m_max {
        let mut enumeration = EnumerationConfig::new(m, d_max);
        enumeration.budget = config.enumeration_budget;
        all.extend(collect_shifted_order_ideals(enumeration)?);
    }
    Ok(all)
}

/// Instance of a sweep: an order ideal and, for per-`t` suites, a value of `t`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub ideal: OrderIdeal,
    pub t: Option<usize>,
}

fn with_t(ideals: &[OrderIdeal], policy: TPolicy) -> Vec<Instance> {
    let mut out = Vec::new();
    for u in ideals {
        let top = match policy {
            TPolicy::UpToD => u.d_max(),
            TPolicy::UpToDPlusOne => u.d_max() + 1,
        };
        out.extend((0..=top).map(|t| Instance { ideal: u.clone(), t: Some(t) }));
    }
    out
}

fn without_t(ideals: &[OrderIdeal]) -> Vec<Instance> {
    ideals.iter().map(|u| Instance { ideal: u.clone(), t: None }).collect()
}

fn run_one(suite: Suite, config: &VerifyConfig, ideals: &[OrderIdeal]) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let instances = match suite {
        Suite::Duality => {
            let mut v = without_t(ideals);
            v.extend(without_t(&random_order_ideals(config)));
            v.extend(without_t(&extended_family(config.m_max)));
            v
        }
        Suite::Construction | Suite::SrIdeal | Suite::Betti | Suite::Singularity => with_t(ideals, config.t_policy),
        Suite::Lefschetz | Suite::Monotonicity | Suite::Decompose => without_t(ideals),
        Suite::All => unreachable!("expanded by run_verify"),
    };
    let vd_budget = config.vd_budget;
    let exec = config.exec;
    let outcomes = exec.map_collect(instances, |inst| check_instance(suite, &inst, vd_budget));
    let attempted = outcomes.len();
    let passed = outcomes.iter().filter(|f| f.is_empty()).count();
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        attempted,
        passed,
        failed: attempted - passed,
        failures: outcomes.into_iter().flatten().collect(),
        duration: start.elapsed(),
    })
}

/// Failures of one instance under `suite`; empty means it passed.
pub fn check_instance(suite: Suite, inst: &Instance, vd_budget: usize) -> Vec<Failure> {
    let mut c = Checker { inst, failures: Vec::new() };
    let u = &inst.ideal;
    match (suite, inst.t) {
        (Suite::Duality, _) => check_duality(&mut c, u),
        (Suite::Construction, Some(t)) => check_construction(&mut c, u, t, vd_budget),
        (Suite::SrIdeal, Some(t)) => check_sr_ideal(&mut c, u, t),
        (Suite::Betti, Some(t)) => check_betti(&mut c, u, t),
        (Suite::Lefschetz, _) => check_lefschetz(&mut c, u),
        (Suite::Singularity, Some(t)) => check_singularity(&mut c, u, t, vd_budget),
        (Suite::Monotonicity, _) => check_monotonicity(&mut c, u),
        (Suite::Decompose, _) => check_decompose(&mut c, u),
        _ => c.fail("instance shape", "suite-specific instance", "mismatched instance"),
    }
    c.failures
}

struct Checker<'a> {
    inst: &'a Instance,
    failures: Vec<Failure>,
}

impl Checker<'_> {
    fn fail(&mut self, property: &str, expected: impl ToString, actual: impl ToString) {
        let mut input = serde_json::to_value(OrderIdealDoc::from(&self.inst.ideal)).unwrap();
        if let Some(t) = self.inst.t {
            input["t"] = t.into();
        }
        self.failures.push(Failure {
            property: property.to_string(),
            input,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, property: &str, expected: T, actual: T) {
        if expected != actual {
            self.fail(property, format!("{expected:?}"), format!("{actual:?}"));
        }
    }

    fn holds(&mut self, property: &str, ok: bool) {
        if !ok {
            self.fail(property, true, false);
        }
    }
}

fn check_duality(c: &mut Checker, u: &OrderIdeal) {
    let ideal = u.ideal();
    match ideal.complement() {
        Ok(back) => c.eq("complement of I(U) is U", u, &back),
        Err(e) => c.fail("complement of I(U) is U", "an order ideal", e),
    }
    c.eq("I(U) strongly stable iff U shifted", u.is_shifted(), ideal.is_strongly_stable());
    let d = ideal.d_max();
    c.holds("2 <= d_max(I(U)) <= d_max(U)+1", 2 <= d && d <= u.d_max() + 1);
    if u.is_shifted() {
        c.eq("d_max(I(U)) = d_max(U)+1 for shifted U", u.d_max() + 1, d);
    }
}

/// `U^{(ℓ)}` for `1 <= ℓ <= m <= m_max`.
pub fn extended_family(m_max: usize) -> Vec<OrderIdeal> {
    (1..=m_max).flat_map(|m| (1..=m).map(move |l| squarefree_extended_ideal(m, l))).collect()
}

/// Degree of the extension level, recovered from `U^{(ℓ)}`: the largest `k` with every degree-`k` monomial present.
pub fn extension_level(u: &OrderIdeal) -> usize {
    (1..=u.d_max()).take_while(|&k| monomials_of_degree(u.m(), k).iter().all(|w| u.contains(w))).last().unwrap_or(0)
}

/// Random order ideals (not necessarily shifted), deterministic in the seed.
pub fn random_order_ideals(config: &VerifyConfig) -> Vec<OrderIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.random_ideals)
        .map(|_| {
            let m = rng.gen_range(1..=config.m_max);
            let d = rng.gen_range(1..=config.d_max);
            let mut set: BTreeSet<Monomial> = BTreeSet::new();
            set.insert(Monomial::one(m));
            set.extend((1..=m).map(|i| Monomial::var(m, i)));
            for k in 2..=d {
                for w in monomials_of_degree(m, k) {
                    let divisors_in = w.support().iter().all(|&i| set.contains(&w.div_var(i).unwrap()));
                    if divisors_in && rng.gen_bool(0.6) {
                        set.insert(w);
                    }
                }
            }
            OrderIdeal::new(m, set).expect("divisor-closed by construction")
        })
        .collect()
}

fn check_construction(c: &mut Checker, u: &OrderIdeal, t: usize, vd_budget: usize) {
    let (m, d) = (u.m(), u.d_max());
    let delta = match squeeze::build(u, t) {
        Ok(delta) => delta,
        Err(e) => return c.fail("build", "a complex", e),
    };
    c.holds("pure", delta.is_pure());
    c.eq("dimension d+t-1", (d + t) as isize - 1, delta.dim());
    c.eq("facet count |U|", u.len(), delta.facets().len());
    c.eq("vertex count m+t+d", m + t + d, delta.n());
    c.eq(
        "link of vertex 1",
        squeeze::predicted_link_of_first_vertex(u, t),
        delta.link(&[1]).expect("1 is a vertex"),
    );
    c.eq("deletion of vertex 1", squeeze::predicted_deletion_of_first_vertex(u, t), delta.delete_vertex(1));
    let options = VdOptions { budget: vd_budget, ..VdOptions::strict().with_hint(1) };
    match delta.vertex_decomposable(&options) {
        Ok(out) => {
            c.holds("vertex decomposable", out.decomposable);
            c.eq("shedding vertex 1", Some(&1), out.shedding.first());
            c.holds("h-vector shedding recursion", out.h_recursion_ok);
        }
        Err(e) => c.fail("vertex decomposable", "certificate", e),
    }
    if t <= d {
        let h: Vec<i64> = squeeze::squeezed_h_vector(u, t).unwrap().into_iter().map(|x| x as i64).collect();
        c.eq("h-vector is the degree histogram", Ok(h), delta.h_vector());
    } else {
        match squeeze::cone_structure(u, t) {
            Ok(Some(cone)) => {
                c.eq("cone apex m+t+d", m + t + d, cone.apex);
                c.eq("cone over the previous complex", &delta, &cone.assemble());
            }
            other => c.fail("cone structure for t > d", "a cone", format!("{other:?}")),
        }
    }
}

fn check_sr_ideal(c: &mut Checker, u: &OrderIdeal, t: usize) {
    let delta = squeeze::build(u, t).unwrap();
    let n = delta.n();
    let sr = algebra::stanley_reisner_ideal(&delta);
    let phi = algebra::apply_operator_to_ideal(&StableOperator::Phi(t), &u.ideal());
    let expected: BTreeSet<Monomial> = phi.generators().iter().map(|g| g.padded(n)).collect();
    let actual: BTreeSet<Monomial> = sr.generators().iter().cloned().collect();
    c.eq("minimal non-faces equal phi_t(I(U))", expected, actual);
    c.holds("phi_t images are squarefree", phi.is_squarefree());
}

fn check_betti(c: &mut Checker, u: &OrderIdeal, t: usize) {
    match algebra::verify_gin_claim(u, t, HochsterOptions { exec: Exec::Sequential, ..Default::default() }) {
        Ok(r) => {
            c.eq("Hilbert function of phi_t(I(U)) and I(U)P(n)", &r.hilbert_extended, &r.hilbert_squarefree);
            c.eq("Eliahou-Kervaire table equals Hochster table", r.ek.nonzero(), r.hochster.nonzero());
        }
        Err(e) => c.fail("gin consistency", "report", e),
    }
}

fn check_lefschetz(c: &mut Checker, u: &OrderIdeal) {
    let wlp = lefschetz::has_wlp(u, Mode::Both);
    let slp = lefschetz::has_slp(u, Mode::Both);
    match (&wlp, &slp) {
        (Ok(w), Ok(s)) => c.holds("SLP implies WLP", !s.holds || w.holds),
        _ => {
            if let Err(e) = &wlp {
                c.fail("WLP criterion equals rank oracle", "agreement", e);
            }
            if let Err(e) = &slp {
                c.fail("SLP criterion equals rank oracle", "agreement", e);
            }
        }
    }
    let m = u.m();
    let d = u.d_max();
    let generators = u.shift_generators().unwrap();
    for i in 0..=d {
        for j in 1..=d + 1 - i {
            let r = lefschetz::psi_rank(u, i, j).unwrap();
            let source = u.layer(i);
            let target = u.layer(i + j);
            let surjective = r.rank == target.len();
            let divisible = target.iter().all(|w| w.exponent(m) >= j as u32);
            c.eq("surjective iff target divisible by x_m^j", divisible, surjective);
            let injective = r.rank == source.len();
            let products = generators
                .iter()
                .filter(|g| g.degree() == i)
                .all(|g| u.contains(&g.times_var_pow(m, j as u32)));
            c.eq("injective iff shift generators map into U", products, injective);
        }
    }
}

fn check_singularity(c: &mut Checker, u: &OrderIdeal, t: usize, vd_budget: usize) {
    let (m, d) = (u.m(), u.d_max());
    let delta = squeeze::build(u, t).unwrap();
    let report = delta.ridge_degree_map().unwrap();
    match delta.singularity_index() {
        Ok(index) => {
            let f0 = delta.f_vector()[1] as i64;
            let bound = (f0 - delta.dim() as i64 - 2).max(0);
            c.holds("0 <= D <= max(0, f_0 - dim - 2)", !index.is_negative() && index <= Rational::integer(bound));
            c.eq("D = 0 iff every ridge degree <= 2", report.max_degree() <= 2, index.is_zero());
        }
        Err(ComplexError::NoRidges(_)) => c.eq("index undefined only in dimension 0", 0, delta.dim()),
        Err(e) => c.fail("singularity index", "a value", e),
    }
    let classification = delta.classify_ball_sphere(vd_budget).unwrap();
    if classification.homology_agrees == Some(false) {
        c.fail("ball/sphere verdict matches homology", "consistent", format!("{:?}", classification.verdict));
    }
    if t >= d {
        c.eq("pseudomanifold for t >= d", Ok(true), delta.is_pseudomanifold());
        c.eq("ball for t >= d", BallSphere::Ball, classification.verdict);
    }
    if m >= 2 {
        c.holds("never a sphere for m >= 2", classification.verdict != BallSphere::Sphere);
    }
    let top_divisible = u.layer(d).iter().all(|w| w.exponent(m) > 0);
    if top_divisible && d >= 2 && t == d - 1 {
        c.eq("common x_m divisor gives a ball", BallSphere::Ball, classification.verdict);
        c.eq("common x_m divisor gives D = 0", Ok(Rational::zero()), delta.singularity_index());
    }
    if *u == OrderIdeal::maximal(m, d) && m >= 2 && d >= 2 {
        let pm = delta.is_pseudomanifold().unwrap();
        let ball = classification.verdict == BallSphere::Ball;
        c.eq("maximal U: pseudomanifold iff t >= d", t >= d, pm);
        c.eq("maximal U: ball iff t >= d", t >= d, ball);
        if t < d {
            let ridge: Vec<usize> = (1..=d + t - 1).collect();
            c.eq("maximal U: ridge [d+t-1] has degree m+1", Some(m + 1), report.degree(&ridge));
        }
    }
}

/// Strictly decreasing until the first zero, zero afterwards, ending in zero.
pub fn is_strictly_decreasing_to_zero(profile: &[Rational]) -> bool {
    let first_zero = profile.iter().position(Rational::is_zero);
    let Some(z) = first_zero else {
        return false;
    };
    profile[..=z].windows(2).all(|w| w[0] > w[1]) && profile[z..].iter().all(Rational::is_zero)
}

fn check_monotonicity(c: &mut Checker, u: &OrderIdeal) {
    let d = u.d_max();
    let profile = squeeze::sing_index_profile_with(u, Exec::Sequential).unwrap();
    let defined: Vec<Rational> = profile.iter().flatten().cloned().collect();
    c.holds("undefined entries only at t = 0 in dimension 0", profile.iter().skip(1).all(Option::is_some));
    if !is_strictly_decreasing_to_zero(&defined) {
        let shown: Vec<String> = profile.iter().map(|x| x.as_ref().map_or("NA".into(), ToString::to_string)).collect();
        c.fail("profile strictly decreasing to zero", "strictly decreasing to 0", shown.join(", "));
    }
    let excess: Vec<usize> = (0..=d)
        .map(|t| squeeze::build(u, t).unwrap().ridge_degree_map().unwrap().total_excess)
        .collect();
    c.holds("total excess weakly decreasing in t", excess.windows(2).all(|w| w[0] >= w[1]));
}

/// `Δ_0(U) ∗ simplex` for join factors of `0..=2` new vertices.
pub fn joined_complexes(u: &OrderIdeal) -> Vec<(SimplicialComplex, isize)> {
    let base = squeeze::build(u, 0).unwrap();
    (0..=2).map(|k| (base.join_simplex(k), k as isize - 1)).collect()
}

fn check_decompose(c: &mut Checker, u: &OrderIdeal) {
    for (delta, cone_dim) in joined_complexes(u) {
        let expected = Decomposition { ideal: u.clone(), cone_dim };
        match squeeze::decompose_shifted(&delta) {
            Ok(found) => c.eq("decomposition recovers (U, e)", expected, found),
            Err(e) => c.fail("decomposition recovers (U, e)", format!("{expected:?}"), e),
        }
    }
}
