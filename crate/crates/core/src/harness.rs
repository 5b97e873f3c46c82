//! Verification campaigns: run the router and the oracles over a grid of
//! instances and record one [`ClaimResult`] per checked claim.
//!
//! Observed values always come from [`crate::oracles`]; the router only ever
//! supplies the object under test (containers) or, when the exhaustive wide
//! diameter search runs out of budget, an audited constructive upper bound.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::embeddings::{self, MeshGraph, SimplexGraph, TripyGraph};
use crate::oracles::{self, Extent, FaultEnumeration, OracleError, OracleGraph, DEFAULT_BUDGET};
use crate::routing::{self, container_width};
use crate::simplex::{self, GraphParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ClaimValue {
    Count(u64),
    Flag(bool),
    Extent(Extent),
}

impl std::fmt::Display for ClaimValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClaimValue::Count(c) => write!(f, "{c}"),
            ClaimValue::Flag(b) => write!(f, "{b}"),
            ClaimValue::Extent(e) => write!(f, "{e}"),
        }
    }
}

impl From<u32> for ClaimValue {
    fn from(value: u32) -> Self {
        ClaimValue::Extent(Extent::Finite(value))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim: &'static str,
    pub params: GraphParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    pub expected: ClaimValue,
    pub observed: ClaimValue,
    pub witness: serde_json::Value,
    pub verdict: Verdict,
    /// The instance lies outside the claim's hypothesis; a failure here is not
    /// counted against the campaign.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub outside_hypothesis: bool,
}

impl ClaimResult {
    fn new(
        claim: &'static str,
        params: GraphParams,
        expected: ClaimValue,
        observed: ClaimValue,
        witness: serde_json::Value,
    ) -> Self {
        let verdict = if expected == observed { Verdict::Pass } else { Verdict::Fail };
        ClaimResult { claim, params, omega: None, expected, observed, witness, verdict, outside_hypothesis: false }
    }

    fn with_omega(mut self, omega: usize) -> Self {
        self.omega = Some(omega);
        self
    }

    fn outside_hypothesis(mut self) -> Self {
        self.outside_hypothesis = true;
        self
    }

    /// A failure that counts against the campaign.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Fail && !self.outside_hypothesis
    }
}

/// Checks every container (both directions of each unordered pair) when the
/// instance has at most `pair_budget` pairs, otherwise `pair_budget` pairs
/// drawn uniformly with a seeded generator.
pub fn verify_lemma1(params: GraphParams, pair_budget: usize, seed: u64) -> Vec<ClaimResult> {
    let graph = OracleGraph::new(params);
    let count = graph.vertex_count();
    let total_pairs = count * (count - 1) / 2;
    let exhaustive = total_pairs <= pair_budget;
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..count).flat_map(|a| (a + 1..count).map(move |b| (a, b))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..pair_budget)
            .map(|_| {
                let a = rng.random_range(0..count);
                let b = (a + rng.random_range(1..count)) % count;
                (a.min(b), a.max(b))
            })
            .collect()
    };

    let mut passing = 0u64;
    let mut first_failure = None;
    for &(a, b) in &pairs {
        let outcome = check_container(&graph, a, b).and_then(|()| check_container(&graph, b, a));
        match outcome {
            Ok(()) => passing += 1,
            Err(reason) => {
                first_failure.get_or_insert_with(|| {
                    json!({"pair": [graph.vertex(a), graph.vertex(b)], "reason": reason})
                });
            }
        }
    }
    let mut witness = json!({
        "mode": if exhaustive { "exhaustive" } else { "sampled" },
        "pairs": pairs.len(),
    });
    if !exhaustive {
        witness["seed"] = json!(seed);
    }
    if let Some(failure) = first_failure {
        witness["first_failure"] = failure;
    }
    vec![ClaimResult::new(
        "container",
        params,
        ClaimValue::Count(pairs.len() as u64),
        ClaimValue::Count(passing),
        witness,
    )]
}

fn check_container(graph: &OracleGraph, a: usize, b: usize) -> Result<(), String> {
    let (u, v) = (graph.vertex(a), graph.vertex(b));
    let n = u.n();
    let p = u.coords().iter().zip(v.coords()).filter(|(x, y)| x > y).count();
    let q = u.coords().iter().zip(v.coords()).filter(|(x, y)| x < y).count();
    let dist = graph.bfs_from(a, &vec![false; graph.vertex_count()])[b] as usize;

    let container = routing::build_container(u, v).map_err(|e| e.to_string())?;
    let expected_width = container_width(n, p, q);
    if container.len() != expected_width || container.len() < n {
        return Err(format!("width {} != {expected_width}", container.len()));
    }
    if container.short_paths.len() != p * q {
        return Err(format!("{} short paths, expected {}", container.short_paths.len(), p * q));
    }
    if let Some(bad) = container.short_paths.iter().find(|path| path.len() != dist) {
        return Err(format!("short path of length {} != distance {dist}", bad.len()));
    }
    if let Some(bad) = container.detour_paths.iter().find(|path| path.len() != dist + 1) {
        return Err(format!("detour of length {} != distance + 1", bad.len()));
    }
    oracles::audit_disjoint_paths(u, v, container.paths().map(|path| path.vertices()))
        .map_err(|defect| defect.to_string())
}

/// Connectivity, minimum degree, diameter and the distance formula, all from
/// the oracle graph.
pub fn verify_connectivity_and_diameter(params: GraphParams) -> Vec<ClaimResult> {
    let graph = OracleGraph::new(params);
    let n = params.n as u64;
    let mut results = Vec::new();

    let kappa = graph.connectivity().map(|k| k as u64);
    results.push(ClaimResult::new(
        "connectivity",
        params,
        ClaimValue::Count(n),
        ClaimValue::Count(kappa.clone().unwrap_or(0)),
        kappa.err().map_or(json!(null), |e| json!(e.to_string())),
    ));

    let (min_deg, at) = (0..graph.vertex_count())
        .map(|i| (graph.neighbors(i).len() as u64, i))
        .min()
        .expect("nonempty");
    results.push(ClaimResult::new(
        "min_degree",
        params,
        ClaimValue::Count(n),
        ClaimValue::Count(min_deg),
        json!({"vertex": graph.vertex(at)}),
    ));

    let report = graph.diameter(&oracles::FaultSet::new()).expect("at least two vertices");
    results.push(ClaimResult::new(
        "diameter",
        params,
        params.m.into(),
        ClaimValue::Extent(report.value),
        json!({"witness_pair": report.witness_pair}),
    ));

    let unblocked = vec![false; graph.vertex_count()];
    let mut agreeing = 0u64;
    let mut pairs = 0u64;
    let mut mismatch = None;
    for a in 0..graph.vertex_count() {
        let dist = graph.bfs_from(a, &unblocked);
        for (b, &d) in dist.iter().enumerate().skip(a + 1) {
            pairs += 1;
            let h = simplex::h_distance(graph.vertex(a), graph.vertex(b)).expect("same instance");
            if d == h {
                agreeing += 1;
            } else {
                mismatch.get_or_insert_with(|| json!({"pair": [graph.vertex(a), graph.vertex(b)], "bfs": d, "h": h}));
            }
        }
    }
    results.push(ClaimResult::new(
        "distance_formula",
        params,
        ClaimValue::Count(pairs),
        ClaimValue::Count(agreeing),
        mismatch.unwrap_or(json!(null)),
    ));
    results
}

/// Every shortest path between the corners `m0^n` and `0^n m` passes through
/// `(m-1)0^{n-1}1`.
pub fn verify_bottleneck(params: GraphParams) -> ClaimResult {
    let graph = OracleGraph::new(params);
    let (u, v) = (params.top_corner(), params.bottom_corner());
    let forced = u.transfer(params.n, 0).expect("corner coordinate is m >= 1");
    let idx = |x| graph.index_of(x).expect("own vertex");
    let observed = graph.all_shortest_paths_through(idx(&u), idx(&v), idx(&forced));
    ClaimResult::new(
        "bottleneck",
        params,
        ClaimValue::Flag(true),
        ClaimValue::Flag(observed),
        json!({"u": u, "v": v, "forced": forced}),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum WideMethod {
    Exhaustive,
    /// Budget overrun: the fault diameter bounds it below and audited
    /// container paths bound it above.
    Sandwich { lower: Extent, upper: Extent, overrun: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WideOutcome {
    pub value: Extent,
    #[serde(flatten)]
    pub method: WideMethod,
}

/// Fault and wide diameters for every width `1..=n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiameterProfile {
    pub params: GraphParams,
    pub fault: Vec<oracles::DiameterReport>,
    pub wide: Vec<WideOutcome>,
}

impl DiameterProfile {
    pub fn fault_value(&self, omega: usize) -> Extent {
        self.fault[omega - 1].value
    }

    pub fn wide_value(&self, omega: usize) -> Extent {
        self.wide[omega - 1].value
    }
}

pub fn diameter_profile(params: GraphParams, budget: u64, mode: FaultEnumeration) -> DiameterProfile {
    let graph = OracleGraph::new(params);
    let mut fault = Vec::with_capacity(params.n);
    let mut wide = Vec::with_capacity(params.n);
    for omega in 1..=params.n {
        let report = graph.fault_diameter(omega, mode).expect("omega <= n leaves survivors");
        let outcome = match graph.wide_diameter(omega, budget) {
            Ok(r) => WideOutcome { value: r.value, method: WideMethod::Exhaustive },
            Err(err @ OracleError::BudgetExceeded { .. }) => {
                let lower = report.value;
                let upper = constructive_wide_bound(&graph, omega);
                WideOutcome {
                    value: if lower == upper { lower } else { upper },
                    method: WideMethod::Sandwich { lower, upper, overrun: err.to_string() },
                }
            }
            Err(other) => panic!("wide diameter search failed: {other}"),
        };
        fault.push(report);
        wide.push(outcome);
    }
    DiameterProfile { params, fault, wide }
}

/// Largest maximum length over all pairs when taking `omega` container paths,
/// with every selection audited. `Infinite` if any selection is unavailable or
/// fails the audit.
fn constructive_wide_bound(graph: &OracleGraph, omega: usize) -> Extent {
    let mut worst = 0;
    for a in 0..graph.vertex_count() {
        for b in a + 1..graph.vertex_count() {
            let (u, v) = (graph.vertex(a), graph.vertex(b));
            let Ok(container) = routing::build_container(u, v) else { return Extent::Infinite };
            let Ok(paths) = routing::select_width(&container, omega) else { return Extent::Infinite };
            if oracles::audit_disjoint_paths(u, v, paths.iter().map(|p| p.vertices())).is_err() {
                return Extent::Infinite;
            }
            worst = worst.max(paths.iter().map(|p| p.len()).max().unwrap_or(0));
        }
    }
    Extent::Finite(worst as u32)
}

/// For `2 <= omega <= n`: fault diameter and wide diameter both equal `m + 1`.
/// Instances with `m = 1` are complete graphs and are labelled outside the
/// hypothesis instead of failing.
pub fn verify_theorem(params: GraphParams) -> Vec<ClaimResult> {
    theorem_claims(&diameter_profile(params, DEFAULT_BUDGET, FaultEnumeration::MaximalOnly))
}

pub fn theorem_claims(profile: &DiameterProfile) -> Vec<ClaimResult> {
    let params = profile.params;
    let mut results = Vec::new();
    for omega in 1..=params.n {
        let expected = if omega == 1 { params.m } else { params.m + 1 };
        let fault = &profile.fault[omega - 1];
        let wide = &profile.wide[omega - 1];
        let claims = [
            ClaimResult::new(
                "fault_diameter",
                params,
                expected.into(),
                ClaimValue::Extent(fault.value),
                json!({"witness_pair": fault.witness_pair, "witness_faults": fault.witness_faults}),
            ),
            ClaimResult::new(
                "wide_diameter",
                params,
                expected.into(),
                ClaimValue::Extent(wide.value),
                serde_json::to_value(&wide.method).expect("serializable"),
            ),
        ];
        for claim in claims {
            let claim = claim.with_omega(omega);
            results.push(if omega >= 2 && params.m == 1 { claim.outside_hypothesis() } else { claim });
        }
    }
    results
}

/// `D_1 <= ... <= D_n`, `d_1 <= ... <= d_n` and `D_w <= d_w` for every width.
pub fn verify_monotonicity(profile: &DiameterProfile) -> ClaimResult {
    let n = profile.params.n;
    let fault: Vec<Extent> = (1..=n).map(|w| profile.fault_value(w)).collect();
    let wide: Vec<Extent> = (1..=n).map(|w| profile.wide_value(w)).collect();
    let chains = fault.windows(2).all(|w| w[0] <= w[1]) && wide.windows(2).all(|w| w[0] <= w[1]);
    let pointwise = fault.iter().zip(&wide).all(|(f, w)| f <= w);
    ClaimResult::new(
        "monotonicity",
        profile.params,
        ClaimValue::Flag(true),
        ClaimValue::Flag(chains && pointwise),
        json!({"fault": fault, "wide": wide}),
    )
}

/// `sigma1` for `n = 2` instances, the corrected `sigma2` for `n = 3`.
pub fn verify_embedding(params: GraphParams) -> Option<ClaimResult> {
    let target = SimplexGraph { params };
    let (claim, ok) = match params.n {
        2 => ("sigma1_isomorphism", {
            let side = params.m;
            embeddings::verify_isomorphism(|a| embeddings::sigma1(*a, side), &MeshGraph { side }, &target)
        }),
        3 => ("sigma2_isomorphism", {
            let levels = params.m;
            embeddings::verify_isomorphism(|a| embeddings::sigma2(*a, levels), &TripyGraph { levels }, &target)
        }),
        _ => return None,
    };
    Some(ClaimResult::new(claim, params, ClaimValue::Flag(true), ClaimValue::Flag(ok), json!(null)))
}

/// Instances `n in ns`, `m in ms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub ns: RangeInclusive<usize>,
    pub ms: RangeInclusive<u32>,
}

impl std::str::FromStr for Grid {
    type Err = String;

    /// `"n1..n2,m1..m2"`, either side may be a single number.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        fn range<T: std::str::FromStr + PartialOrd + Copy>(part: &str) -> Result<RangeInclusive<T>, String> {
            let parse = |t: &str| t.trim().parse::<T>().map_err(|_| format!("bad bound {t:?}"));
            let (lo, hi) = match part.split_once("..") {
                Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
                None => {
                    let v = parse(part)?;
                    (v, v)
                }
            };
            if lo > hi {
                return Err(format!("empty range {part:?}"));
            }
            Ok(lo..=hi)
        }
        let (ns, ms) = s.split_once(',').ok_or_else(|| format!("grid {s:?} is not n1..n2,m1..m2"))?;
        let grid = Grid { ns: range(ns)?, ms: range(ms)? };
        if *grid.ns.start() < 1 || *grid.ms.start() < 1 {
            return Err("grid bounds must be >= 1".into());
        }
        Ok(grid)
    }
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub grid: Grid,
    pub seed: u64,
    pub pair_budget: usize,
    pub search_budget: u64,
    pub fault_mode: FaultEnumeration,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            grid: Grid { ns: 2..=3, ms: 1..=3 },
            seed: 0,
            pair_budget: 500,
            search_budget: DEFAULT_BUDGET,
            fault_mode: FaultEnumeration::MaximalOnly,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub seed: u64,
    pub results: Vec<ClaimResult>,
}

impl CampaignReport {
    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| r.is_failure()).count()
    }

    pub fn to_json_lines(&self) -> String {
        self.results
            .iter()
            .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
            .collect()
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let (main, outside): (Vec<&ClaimResult>, Vec<&ClaimResult>) =
            self.results.iter().partition(|r| !r.outside_hypothesis);
        let header = format!(
            "{:<20} {:<8} {:>5} {:>10} {:>10}  {}\n",
            "claim", "instance", "omega", "expected", "observed", "verdict"
        );
        let row = |r: &ClaimResult| {
            let omega = r.omega.map_or("-".to_string(), |w| w.to_string());
            let verdict = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail if r.outside_hypothesis => "mismatch",
                Verdict::Fail => "FAIL",
            };
            format!(
                "{:<20} {:<8} {:>5} {:>10} {:>10}  {}\n",
                r.claim,
                r.params.to_string(),
                omega,
                r.expected.to_string(),
                r.observed.to_string(),
                verdict
            )
        };
        out.push_str(&header);
        main.iter().for_each(|r| out.push_str(&row(r)));
        if !outside.is_empty() {
            out.push_str("\noutside theorem hypothesis (m = 1: complete graph, fault diameter stays 1)\n");
            out.push_str(&header);
            outside.iter().for_each(|r| out.push_str(&row(r)));
        }
        let passed = self.results.iter().filter(|r| r.verdict == Verdict::Pass).count();
        writeln!(
            out,
            "\n{} claims: {passed} passed, {} failed, {} outside hypothesis (seed {})",
            self.results.len(),
            self.failures(),
            outside.len(),
            self.seed
        )
        .expect("write to String");
        out
    }
}

pub fn run_campaign(config: &CampaignConfig) -> CampaignReport {
    let mut results = Vec::new();
    for n in config.grid.ns.clone() {
        for m in config.grid.ms.clone() {
            let params = GraphParams { n, m };
            results.extend(verify_lemma1(params, config.pair_budget, config.seed));
            results.extend(verify_connectivity_and_diameter(params));
            if n >= 2 && m >= 2 {
                results.push(verify_bottleneck(params));
            }
            let profile = diameter_profile(params, config.search_budget, config.fault_mode);
            results.extend(theorem_claims(&profile));
            results.push(verify_monotonicity(&profile));
            results.extend(verify_embedding(params));
        }
    }
    CampaignReport { seed: config.seed, results }
}
