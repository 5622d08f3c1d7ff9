//! Seeded random connected subsets and random connected graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{input, Result};
use crate::graph::{Graph, VertexSet};

pub type TrialRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `index` in a campaign with master seed `seed`.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index))
}

/// A connected subset of exactly `size` vertices grown from a seeded random
/// start by repeatedly absorbing a uniformly chosen frontier vertex.
pub fn sample_connected_subset(g: &Graph, size: usize, seed: u64) -> Result<VertexSet> {
    sample_within(
        g,
        &VertexSet::full(g.vertex_count()),
        size,
        &mut rng_from_seed(seed),
    )
}

/// As [`sample_connected_subset`], restricted to `allowed` and drawing from
/// the caller's generator.
pub fn sample_within<R: Rng>(
    g: &Graph,
    allowed: &VertexSet,
    size: usize,
    rng: &mut R,
) -> Result<VertexSet> {
    g.check_set(allowed)?;
    if size == 0 {
        return input("sample size must be at least 1");
    }
    if size > allowed.len() {
        return input(format!(
            "cannot grow {size} vertices inside a region of {}",
            allowed.len()
        ));
    }
    let region = allowed.to_vec();
    let start = region[rng.gen_range(0..region.len())];
    let mut set = VertexSet::empty(g.vertex_count());
    let mut queued = VertexSet::empty(g.vertex_count());
    set.insert(start);
    queued.insert(start);
    let mut frontier = Vec::new();
    let push_nbrs = |v: usize, frontier: &mut Vec<usize>, queued: &mut VertexSet| {
        for &w in g.neighbors(v) {
            if allowed.contains(w) && queued.insert(w) {
                frontier.push(w);
            }
        }
    };
    push_nbrs(start, &mut frontier, &mut queued);
    while set.len() < size {
        if frontier.is_empty() {
            return input(format!(
                "the component of vertex {start} has fewer than {size} vertices"
            ));
        }
        let v = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        set.insert(v);
        push_nbrs(v, &mut frontier, &mut queued);
    }
    Ok(set)
}

/// Random spanning tree on `n` vertices (each vertex of a random order
/// attaches to a uniformly chosen earlier one) plus up to `extra` random
/// additional edges.
pub fn random_connected_graph<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return input("graph needs at least one vertex");
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = std::collections::BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (order[i], order[j]);
        edges.insert((u.min(v), u.max(v)));
    }
    let max_edges = n * (n - 1) / 2;
    let target = (edges.len() + extra).min(max_edges);
    let mut attempts = 0;
    while edges.len() < target && attempts < 64 * (extra + 1) {
        attempts += 1;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Graph::new(n, edges)
}
