//! Verification campaigns: exhaustive and seeded-random checks of the
//! boundary-connectedness theorems and the cycle lemma on lattice boxes and
//! random connected graphs.

mod enumerate;
mod hypotheses;
mod sample;

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub use enumerate::{
    check_budget, enumerate_connected_subsets, enumerate_within, for_each_connected_subset,
    EXHAUSTIVE_SIZE_LIMIT, EXHAUSTIVE_VERTEX_LIMIT,
};
pub use hypotheses::{check_dp_hypotheses, check_k_hypotheses, HypothesisCache};
pub use sample::{
    random_connected_graph, rng_from_seed, sample_connected_subset, sample_within, trial_seed,
    TrialRng,
};

use crate::boundary::{full_report, outer_boundary, outer_visible_boundary, BoundaryReport};
use crate::cycle_space::{fundamental_basis, lemma_regi_witness, CycleGen, EdgeVector};
use crate::error::{input, Error, Result};
use crate::graph::{Graph, GraphPair, VertexSet};
use crate::json::{edge_vector_value, report_value, set_value, vertex_value};
use crate::lattice::{box_pair, face_cycles, oe_map, with_apex, BoxSpec, Flavor};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "BOUNDARYKIT_THREADS";
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Visible boundary of a connected set is connected in `G⁺`.
    Dp,
    /// `G⁺`-visible boundary of a `G⁺`-connected set is connected in `G`.
    K,
    /// Constructive cycle witness for bipartitioned minimal cutsets.
    Lemma,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Dp => "dp",
            Theorem::K => "k",
            Theorem::Lemma => "lemma",
        })
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dp" => Ok(Theorem::Dp),
            "k" => Ok(Theorem::K),
            "lemma" => Ok(Theorem::Lemma),
            other => input(format!(
                "unknown theorem '{other}' (expected dp, k or lemma)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Random => "random",
        })
    }
}

/// Which observer vertices `x` are tested against each set `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XPolicy {
    /// The apex attached to the box surface.
    Apex,
    /// Every box vertex outside `c`, plus the apex when `c` respects the margin.
    AllOutside,
    /// One box vertex.
    Fixed(usize),
}

impl fmt::Display for XPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XPolicy::Apex => f.write_str("apex"),
            XPolicy::AllOutside => f.write_str("all"),
            XPolicy::Fixed(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub theorem: Theorem,
    /// Box dimension and side; the flavor field is ignored.
    pub box_spec: BoxSpec,
    pub mode: Mode,
    pub max_size: usize,
    pub trials: usize,
    pub seed: u64,
    /// Minimum L∞-distance of `c` from the complement of the box when the
    /// apex is the observer.
    pub margin: usize,
    pub x_policy: XPolicy,
    /// Graph in which `dp` checks connectivity (default plus).
    pub probe: Flavor,
    /// The `G⁺` of `k` runs (default star).
    pub adjacency: Flavor,
    pub skip_hypotheses: bool,
}

impl TrialConfig {
    pub fn new(theorem: Theorem, box_spec: BoxSpec) -> Self {
        TrialConfig {
            theorem,
            box_spec: box_spec.with_flavor(Flavor::Plain),
            mode: Mode::Exhaustive,
            max_size: 6,
            trials: 1000,
            seed: 0,
            margin: 2,
            x_policy: XPolicy::Apex,
            probe: Flavor::Plus,
            adjacency: Flavor::Star,
            skip_hypotheses: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.box_spec.vertex_count()?;
        if self.box_spec.dim < 2 {
            return input("verification runs need dimension at least 2");
        }
        if self.max_size == 0 {
            return input("max_size must be at least 1");
        }
        if self.mode == Mode::Exhaustive {
            check_budget(n, self.max_size)?;
        }
        if self.mode == Mode::Random && self.trials == 0 {
            return input("random mode needs at least one trial");
        }
        if self.x_policy == XPolicy::Apex && self.margin < 2 {
            return input("the apex observer needs margin at least 2");
        }
        if let XPolicy::Fixed(v) = self.x_policy {
            if v >= n {
                return Err(Error::InvalidVertex(v));
            }
        }
        Ok(())
    }

    fn echo(&self) -> Value {
        json!({
            "theorem": self.theorem.to_string(),
            "box": format!("z{}:{}", self.box_spec.dim, self.box_spec.side),
            "mode": self.mode.to_string(),
            "max_size": self.max_size,
            "trials": self.trials,
            "seed": self.seed,
            "margin": self.margin,
            "x": self.x_policy.to_string(),
            "probe": self.probe.name(),
            "adjacency": self.adjacency.name(),
            "skip_hypotheses": self.skip_hypotheses,
        })
    }
}

/// One counterexample, with everything needed to replay it.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    /// Position of the set in enumeration order, or the trial index.
    pub index: usize,
    /// Trial seed (random mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// `"box"`, `"apex"` or `"random-graph"`.
    pub graph: String,
    pub c: Value,
    pub x: Value,
    pub detail: Value,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub config: TrialConfig,
    /// Number of sets `c` processed.
    pub trials_run: usize,
    /// Number of individual `(c, x)` (or `(c, x, partition)`) checks.
    pub checks: usize,
    /// Checks whose instance was degenerate (e.g. a cutset too small to split).
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub elapsed_seconds: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_value(&self, include_elapsed: bool) -> Value {
        let mut out = json!({
            "schema": REPORT_SCHEMA,
            "config": self.config.echo(),
            "trials_run": self.trials_run,
            "checks": self.checks,
            "skipped": self.skipped,
            "pass": self.passed(),
            "failures": self.failures,
        });
        if include_elapsed {
            out["elapsed_seconds"] = json!(self.elapsed_seconds);
        }
        out
    }

    pub fn to_json(&self, include_elapsed: bool) -> String {
        serde_json::to_string_pretty(&self.to_value(include_elapsed)).expect("report serializes")
    }
}

/// Checks a `dp` instance: `c` must be nonempty and connected in `g`; the
/// returned report counts components of the visible boundary (taken with
/// `g' = g`) inside `probe`.
pub fn check_dp_instance(
    g: &Graph,
    probe: &Graph,
    c: &VertexSet,
    x: usize,
) -> Result<BoundaryReport> {
    if c.is_empty() || !g.is_connected_in(c)? {
        return input("c must be a nonempty connected set of g");
    }
    full_report(g, g, probe, c, x)
}

/// Checks a `k` instance: `c` must be nonempty and connected in `g_plus`;
/// the report counts components of the `g_plus`-visible boundary inside `g`.
pub fn check_k_instance(pair: &GraphPair, c: &VertexSet, x: usize) -> Result<BoundaryReport> {
    if c.is_empty() || !pair.g_plus().is_connected_in(c)? {
        return input("c must be a nonempty connected set of g_plus");
    }
    full_report(pair.g(), pair.g_plus(), pair.g(), c, x)
}

/// The cutset used for lemma trials: the outer-visible boundary of `c` from
/// `x` (with `g' = g`), and the smallest vertex of `c` as the far endpoint.
/// `None` when `x` touches `c` or the cutset has fewer than two vertices.
pub fn lemma_cutset(g: &Graph, c: &VertexSet, x: usize) -> Result<Option<(VertexSet, usize)>> {
    let cut = outer_visible_boundary(g, g, c, x)?;
    let Some(y) = c.first() else {
        return input("c must be nonempty");
    };
    if cut.contains(x) || cut.len() < 2 {
        return Ok(None);
    }
    Ok(Some((cut, y)))
}

/// Re-checks a witness without the machinery that produced it: membership
/// of `o` in `gen`, contact with both parts, and the parity of edges between
/// `s2` and the component of `x` in `g ∖ (s1 ∪ s2)`.
pub fn verify_lemma_witness(
    g: &Graph,
    gen: &CycleGen,
    s1: &VertexSet,
    s2: &VertexSet,
    x: usize,
    o: &EdgeVector,
) -> bool {
    if !gen.cycles().iter().any(|c| c == o) {
        return false;
    }
    let pairs = o.edge_pairs();
    let touches = |s: &VertexSet| pairs.iter().any(|&(u, v)| s.contains(u) || s.contains(v));
    if !touches(s1) || !touches(s2) {
        return false;
    }
    let cut = s1.union(s2);
    let mut side = vec![false; g.vertex_count()];
    let mut stack = vec![x];
    side[x] = true;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !side[w] && !cut.contains(w) {
                side[w] = true;
                stack.push(w);
            }
        }
    }
    let crossings = pairs
        .iter()
        .filter(|&&(u, v)| (s2.contains(u) && side[v]) || (s2.contains(v) && side[u]))
        .count();
    crossings % 2 == 1
}

/// Deterministic family of bipartitions `(s1, s2)` of `cut`: every split
/// for cutsets of at most six vertices, otherwise each single vertex against
/// the rest in both orders.
fn all_bipartitions(cut: &VertexSet) -> Vec<(VertexSet, VertexSet)> {
    let members = cut.to_vec();
    let k = members.len();
    let universe = cut.universe();
    let from_mask = |mask: u64| {
        let s1 = VertexSet::from_ids(
            universe,
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v),
        )
        .expect("members are valid");
        let s2 = cut.difference(&s1);
        (s1, s2)
    };
    if k <= 6 {
        (1..(1u64 << k) - 1).map(from_mask).collect()
    } else {
        (0..k)
            .flat_map(|i| [1u64 << i, ((1u64 << k) - 1) ^ (1u64 << i)])
            .map(from_mask)
            .collect()
    }
}

fn random_bipartition<R: Rng>(cut: &VertexSet, rng: &mut R) -> (VertexSet, VertexSet) {
    let members = cut.to_vec();
    let mut s1 = VertexSet::empty(cut.universe());
    for &v in &members {
        if rng.gen_bool(0.5) {
            s1.insert(v);
        }
    }
    let pick = members[rng.gen_range(0..members.len())];
    if s1.is_empty() {
        s1.insert(pick);
    } else if s1.len() == members.len() {
        s1.remove(pick);
    }
    let s2 = cut.difference(&s1);
    (s1, s2)
}

/// Graphs and generators for one observer setting (box or box + apex).
struct Frame {
    label: &'static str,
    /// Paths for visibility.
    g: Graph,
    /// Adjacency to `c`.
    g_prime: Graph,
    /// Where connectivity of the visible boundary is asserted.
    probe: Graph,
    /// Where `c` must be connected.
    connect: Graph,
    gen: CycleGen,
}

impl Frame {
    fn lift(&self, c: &VertexSet) -> VertexSet {
        if c.universe() == self.g.vertex_count() {
            c.clone()
        } else {
            VertexSet::from_ids(self.g.vertex_count(), c.iter()).expect("box ids stay valid")
        }
    }
}

fn hypothesis_cache() -> &'static HypothesisCache {
    static CACHE: OnceLock<HypothesisCache> = OnceLock::new();
    CACHE.get_or_init(HypothesisCache::new)
}

fn build_frames(cfg: &TrialConfig) -> Result<(Option<Frame>, Option<Frame>)> {
    let (dim, side) = (cfg.box_spec.dim, cfg.box_spec.side);
    let (g_prime_flavor, probe_flavor) = match cfg.theorem {
        Theorem::Dp => (Flavor::Plain, cfg.probe),
        Theorem::K => (cfg.adjacency, Flavor::Plain),
        Theorem::Lemma => (Flavor::Plain, Flavor::Plain),
    };
    let adjacency = box_pair(dim, side, Flavor::Plain, g_prime_flavor)?;
    let probing = box_pair(dim, side, Flavor::Plain, probe_flavor)?;
    let connect_plus = cfg.theorem == Theorem::K;

    let want_box = cfg.x_policy != XPolicy::Apex;
    let want_apex = !matches!(cfg.x_policy, XPolicy::Fixed(_));

    let box_frame = if want_box {
        let g = adjacency.g().clone();
        let gen = CycleGen::new(&g, face_cycles(&g)?)?;
        Some(Frame {
            label: "box",
            connect: if connect_plus {
                adjacency.g_plus().clone()
            } else {
                g.clone()
            },
            g_prime: adjacency.g_plus().clone(),
            probe: probing.g_plus().clone(),
            g,
            gen,
        })
    } else {
        None
    };
    let apex_frame = if want_apex {
        let adj = with_apex(&adjacency)?;
        let prb = with_apex(&probing)?;
        let gen = adj.generators()?;
        let g = adj.pair().g().clone();
        Some(Frame {
            label: "apex",
            connect: if connect_plus {
                adj.pair().g_plus().clone()
            } else {
                g.clone()
            },
            g_prime: adj.pair().g_plus().clone(),
            probe: prb.pair().g_plus().clone(),
            g,
            gen,
        })
    } else {
        None
    };

    if !cfg.skip_hypotheses {
        for frame in box_frame.iter().chain(apex_frame.iter()) {
            let ok = match cfg.theorem {
                Theorem::Dp => hypothesis_cache().dp(
                    &GraphPair::new(frame.g.clone(), frame.probe.clone())?,
                    &frame.gen,
                )?,
                Theorem::K => {
                    let pair = GraphPair::new(frame.g.clone(), frame.g_prime.clone())?;
                    let map = oe_map(&pair)?;
                    hypothesis_cache().k(&pair, &frame.gen, &map)?
                }
                Theorem::Lemma => frame.gen.is_generating(&frame.g)?,
            };
            if !ok {
                return input(format!(
                    "hypotheses of '{}' fail on the {} setting of z{dim}:{side}; refusing to run",
                    cfg.theorem, frame.label
                ));
            }
        }
    }
    Ok((box_frame, apex_frame))
}

/// Observers for set `c` under the configured policy, with their frames.
fn observers<'a>(
    cfg: &TrialConfig,
    frames: &'a (Option<Frame>, Option<Frame>),
    c: &VertexSet,
    margin_ok: bool,
) -> Vec<(&'a Frame, usize)> {
    let mut out = Vec::new();
    match &cfg.x_policy {
        XPolicy::Apex => {
            if let Some(f) = &frames.1 {
                out.push((f, f.g.vertex_count() - 1));
            }
        }
        XPolicy::AllOutside => {
            if let Some(f) = &frames.0 {
                out.extend(
                    (0..f.g.vertex_count())
                        .filter(|&v| !c.contains(v))
                        .map(|v| (f, v)),
                );
            }
            if margin_ok {
                if let Some(f) = &frames.1 {
                    out.push((f, f.g.vertex_count() - 1));
                }
            }
        }
        XPolicy::Fixed(v) => {
            if let Some(f) = &frames.0 {
                if !c.contains(*v) {
                    out.push((f, *v));
                }
            }
        }
    }
    out
}

#[derive(Default)]
struct Tally {
    checks: usize,
    skipped: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
        self
    }
}

enum Partitions<'r> {
    All,
    Random(&'r mut TrialRng),
}

/// Runs the configured theorem on one `(c, x)`; `c` is in frame ids.
fn check_one(
    theorem: Theorem,
    frame: &Frame,
    c: &VertexSet,
    x: usize,
    partitions: &mut Partitions<'_>,
    tally: &mut Tally,
    mut record: impl FnMut(Value, &mut Tally),
) {
    match theorem {
        Theorem::Dp | Theorem::K => {
            tally.checks += 1;
            let result = if theorem == Theorem::Dp {
                check_dp_instance(&frame.g, &frame.probe, c, x)
            } else {
                full_report(&frame.g, &frame.g_prime, &frame.g, c, x)
            };
            match result {
                Ok(r) if r.is_connected() => {}
                Ok(r) => record(json!({ "report": report_value(&frame.g, &r) }), tally),
                Err(e) => record(json!({ "error": e.to_string() }), tally),
            }
        }
        Theorem::Lemma => {
            let (cut, y) = match lemma_cutset(&frame.g, c, x) {
                Ok(Some(found)) => found,
                Ok(None) => {
                    tally.skipped += 1;
                    return;
                }
                Err(e) => {
                    tally.checks += 1;
                    record(json!({ "error": e.to_string() }), tally);
                    return;
                }
            };
            let target = VertexSet::from_ids(frame.g.vertex_count(), [y]).expect("y in range");
            if !frame.g.is_minimal_cutset(&cut, x, &target).unwrap_or(false) {
                tally.checks += 1;
                record(
                    json!({ "error": "outer-visible boundary is not a minimal cutset",
                            "cutset": set_value(&frame.g, &cut) }),
                    tally,
                );
                return;
            }
            let splits = match partitions {
                Partitions::All => all_bipartitions(&cut),
                Partitions::Random(rng) => vec![random_bipartition(&cut, *rng)],
            };
            for (s1, s2) in splits {
                tally.checks += 1;
                let outcome = lemma_regi_witness(&frame.g, &frame.gen, &s1, &s2, x, y);
                let ok = matches!(&outcome, Ok(w) if verify_lemma_witness(&frame.g, &frame.gen, &s1, &s2, x, &w.cycle));
                if !ok {
                    let mut detail = json!({
                        "s1": set_value(&frame.g, &s1),
                        "s2": set_value(&frame.g, &s2),
                        "y": vertex_value(&frame.g, y),
                    });
                    match outcome {
                        Ok(w) => detail["witness"] = edge_vector_value(&w.cycle),
                        Err(e) => detail["error"] = json!(e.to_string()),
                    }
                    record(detail, tally);
                }
            }
        }
    }
}

// k needs c connected in g_plus, dp and lemma in g
fn precondition_holds(frame: &Frame, c: &VertexSet) -> bool {
    !c.is_empty() && frame.connect.is_connected_in(c).unwrap_or(false)
}

fn run_set(
    cfg: &TrialConfig,
    frames: &(Option<Frame>, Option<Frame>),
    region: &VertexSet,
    c: &VertexSet,
    index: usize,
    seed: Option<u64>,
    rng: Option<&mut TrialRng>,
) -> Tally {
    let mut tally = Tally::default();
    let margin_ok = c.is_subset(region);
    let obs = observers(cfg, frames, c, margin_ok);
    let mut partitions = match rng {
        Some(r) => Partitions::Random(r),
        None => Partitions::All,
    };
    for (frame, x) in obs {
        let lifted = frame.lift(c);
        if !precondition_holds(frame, &lifted) {
            tally.checks += 1;
            tally.failures.push(Failure {
                index,
                seed,
                graph: frame.label.into(),
                c: set_value(&frame.g, &lifted),
                x: vertex_value(&frame.g, x),
                detail: json!({ "error": "generated set violates the connectivity precondition" }),
            });
            continue;
        }
        let (c_json, x_json) = (set_value(&frame.g, &lifted), vertex_value(&frame.g, x));
        check_one(
            cfg.theorem,
            frame,
            &lifted,
            x,
            &mut partitions,
            &mut tally,
            |detail, t| {
                t.failures.push(Failure {
                    index,
                    seed,
                    graph: frame.label.into(),
                    c: c_json.clone(),
                    x: x_json.clone(),
                    detail,
                })
            },
        );
    }
    tally
}

/// One lemma trial on a seeded random connected graph.
fn random_graph_lemma_trial(
    cfg: &TrialConfig,
    index: usize,
    seed: u64,
    rng: &mut TrialRng,
) -> Result<Tally> {
    let n = cfg.box_spec.vertex_count()?.max(6);
    let g = random_connected_graph(n, n / 2, rng)?;
    let gen = fundamental_basis(&g)?;
    let size = rng.gen_range(1..=cfg.max_size.min(n - 2));
    let c = sample_within(&g, &VertexSet::full(n), size, rng)?;
    let near = c.union(&outer_boundary(&g, &c)?);
    let candidates: Vec<usize> = (0..n).filter(|&v| !near.contains(v)).collect();
    let mut tally = Tally::default();
    if candidates.is_empty() {
        tally.skipped += 1;
        return Ok(tally);
    }
    let x = candidates[rng.gen_range(0..candidates.len())];
    let frame = Frame {
        label: "random-graph",
        connect: g.clone(),
        g_prime: g.clone(),
        probe: g.clone(),
        g,
        gen,
    };
    let (c_json, x_json) = (set_value(&frame.g, &c), vertex_value(&frame.g, x));
    let graph_json: Value =
        serde_json::from_str(&crate::json::graph_to_string(&frame.g)).expect("valid JSON");
    check_one(
        Theorem::Lemma,
        &frame,
        &c,
        x,
        &mut Partitions::Random(rng),
        &mut tally,
        |mut detail, t| {
            detail["graph"] = graph_json.clone();
            t.failures.push(Failure {
                index,
                seed: Some(seed),
                graph: frame.label.into(),
                c: c_json.clone(),
                x: x_json.clone(),
                detail,
            })
        },
    );
    Ok(tally)
}

fn with_pool<T: Send>(work: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t > 0);
    match threads.and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok()) {
        Some(pool) => pool.install(work),
        None => work(),
    }
}

/// Runs a verification campaign. Sets are processed in parallel; the report
/// lists failures in enumeration (or trial-index) order, so identical
/// configurations give identical reports apart from the elapsed time.
pub fn run_verification(cfg: &TrialConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let started = Instant::now();
    let frames = build_frames(cfg)?;
    let n = cfg.box_spec.vertex_count()?;
    let margin_region = cfg.box_spec.margin_region(n, cfg.margin)?;
    let full = VertexSet::full(n);
    let sample_region = if cfg.x_policy == XPolicy::Apex {
        &margin_region
    } else {
        &full
    };
    if sample_region.is_empty() {
        return input(format!(
            "no box vertex of z{}:{} lies at margin {}",
            cfg.box_spec.dim, cfg.box_spec.side, cfg.margin
        ));
    }
    let connect_box = match (&frames.0, &frames.1) {
        (Some(f), _) => f.connect.clone(),
        // box ids are a prefix of the apex graph's ids
        (None, Some(f)) => restrict_to_prefix(&f.connect, n)?,
        (None, None) => return Err(Error::Internal("no frame built".into())),
    };

    let (trials_run, tally) = match cfg.mode {
        Mode::Exhaustive => {
            let sets = enumerate_within(&connect_box, sample_region, cfg.max_size)?;
            let tally = with_pool(|| {
                sets.par_iter()
                    .enumerate()
                    .map(|(i, c)| run_set(cfg, &frames, &margin_region, c, i, None, None))
                    .reduce(Tally::default, Tally::merge)
            });
            (sets.len(), tally)
        }
        Mode::Random => {
            let tally = with_pool(|| {
                (0..cfg.trials)
                    .into_par_iter()
                    .map(|i| {
                        let seed = trial_seed(cfg.seed, i as u64);
                        let mut rng = rng_from_seed(seed);
                        if cfg.theorem == Theorem::Lemma && i % 2 == 1 {
                            return random_graph_lemma_trial(cfg, i, seed, &mut rng);
                        }
                        let cap = cfg.max_size.min(sample_region.len());
                        let size = rng.gen_range(1..=cap);
                        let c = sample_within(&connect_box, sample_region, size, &mut rng)?;
                        Ok(run_set(
                            cfg,
                            &frames,
                            &margin_region,
                            &c,
                            i,
                            Some(seed),
                            Some(&mut rng),
                        ))
                    })
                    .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
            })?;
            (cfg.trials, tally)
        }
    };

    Ok(VerifyReport {
        config: cfg.clone(),
        trials_run,
        checks: tally.checks,
        skipped: tally.skipped,
        failures: tally.failures,
        elapsed_seconds: started.elapsed().as_secs_f64(),
    })
}

/// Subgraph induced on vertices `0..keep`.
fn restrict_to_prefix(g: &Graph, keep: usize) -> Result<Graph> {
    let sub = Graph::new(keep, g.edges().iter().copied().filter(|&(_, v)| v < keep))?;
    match g.labels() {
        Some(l) => sub.with_labels(l[..keep.min(l.len())].to_vec()),
        None => Ok(sub),
    }
}

/// `O_e` for every extra edge of a lattice pair, keyed by `(min, max)`.
pub fn lattice_oe_map(pair: &GraphPair) -> Result<HashMap<(usize, usize), EdgeVector>> {
    oe_map(pair)
}

/// Streams every connected subset to `visit` (used by the CLI).
pub fn stream_connected_subsets(
    g: &Graph,
    max_size: usize,
    visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<()> {
    for_each_connected_subset(g, &VertexSet::full(g.vertex_count()), max_size, visit).map(|_| ())
}
