//! Reference implementations straight from the definitions: pair scans for
//! adjacency and explicit simple-path enumeration for visibility. Slow on
//! purpose; only for graphs of a few dozen vertices.

#![allow(dead_code)]

use boundarykit::{build_box, BoxSpec, Graph, VertexSet};

pub fn grid(spec: &str) -> Graph {
    build_box(&spec.parse::<BoxSpec>().unwrap()).unwrap()
}

pub fn pt(g: &Graph, c: &[i32]) -> usize {
    g.vertex_at(c)
        .unwrap_or_else(|| panic!("no vertex at {c:?}"))
}

pub fn pts<const D: usize>(g: &Graph, cs: &[[i32; D]]) -> VertexSet {
    VertexSet::from_ids(g.vertex_count(), cs.iter().map(|c| pt(g, c))).unwrap()
}

pub fn ids(g: &Graph, v: impl IntoIterator<Item = usize>) -> VertexSet {
    VertexSet::from_ids(g.vertex_count(), v).unwrap()
}

/// Vertices outside `c` with a `g_prime`-neighbour in `c`, by scanning all pairs.
pub fn boundary_raw(g_prime: &Graph, c: &VertexSet) -> VertexSet {
    let n = g_prime.vertex_count();
    ids(
        g_prime,
        (0..n).filter(|&v| !c.contains(v) && c.iter().any(|u| g_prime.has_edge(u, v))),
    )
}

/// Depth-first walk over every simple path from `x` whose vertices avoid
/// `c`. A path is extended past its endpoint `v` only when `through(v)`;
/// every endpoint is marked in `seen`. Stops once all of `wanted` are seen.
#[allow(clippy::too_many_arguments)]
fn walk(
    g: &Graph,
    c: &VertexSet,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    through: &dyn Fn(usize) -> bool,
    wanted: &VertexSet,
    seen: &mut [bool],
    missing: &mut usize,
) {
    let v = *path.last().unwrap();
    if !seen[v] {
        seen[v] = true;
        if wanted.contains(v) {
            *missing -= 1;
        }
    }
    if *missing == 0 || (path.len() > 1 && !through(v)) {
        return;
    }
    for w in 0..g.vertex_count() {
        if *missing == 0 {
            return;
        }
        if g.has_edge(v, w) && !on_path[w] && !c.contains(w) {
            on_path[w] = true;
            path.push(w);
            walk(g, c, path, on_path, through, wanted, seen, missing);
            path.pop();
            on_path[w] = false;
        }
    }
}

fn endpoints(
    g: &Graph,
    c: &VertexSet,
    x: usize,
    through: &dyn Fn(usize) -> bool,
    wanted: &VertexSet,
) -> VertexSet {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut on_path = vec![false; n];
    on_path[x] = true;
    let mut missing = wanted.len();
    walk(
        g,
        c,
        &mut vec![x],
        &mut on_path,
        through,
        wanted,
        &mut seen,
        &mut missing,
    );
    ids(g, (0..n).filter(|&v| seen[v]))
}

/// Every vertex joined to `x` by a simple `g`-path avoiding `c`.
pub fn reach_raw(g: &Graph, c: &VertexSet, x: usize) -> VertexSet {
    endpoints(g, c, x, &|_| true, &VertexSet::full(g.vertex_count()))
}

/// Flood fill from `x` avoiding `c`, scanning all pairs for adjacency.
pub fn flood_raw(g: &Graph, c: &VertexSet, x: usize) -> VertexSet {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut frontier = vec![x];
    while let Some(v) = frontier.pop() {
        let fresh: Vec<usize> = (0..n)
            .filter(|&w| !seen[w] && !c.contains(w) && g.has_edge(v, w))
            .collect();
        for w in fresh {
            seen[w] = true;
            frontier.push(w);
        }
    }
    ids(g, (0..n).filter(|&v| seen[v]))
}

/// Boundary vertices joined to `x` by a simple `g`-path that avoids `c`.
pub fn visible_raw(g: &Graph, g_prime: &Graph, c: &VertexSet, x: usize) -> VertexSet {
    let boundary = boundary_raw(g_prime, c);
    endpoints(g, c, x, &|_| true, &boundary).intersection(&boundary)
}

/// Visible vertices reachable by such a path with no inner vertex visible.
pub fn outer_visible_raw(g: &Graph, g_prime: &Graph, c: &VertexSet, x: usize) -> VertexSet {
    let visible = visible_raw(g, g_prime, c, x);
    endpoints(g, c, x, &|v| !visible.contains(v), &visible).intersection(&visible)
}

/// Components of `s` in `probe`, by repeated pair-scan closure.
pub fn component_count_raw(probe: &Graph, s: &VertexSet) -> usize {
    let mut left = s.to_vec();
    let mut count = 0;
    while let Some(seed) = left.pop() {
        count += 1;
        let mut comp = vec![seed];
        loop {
            let before = comp.len();
            left.retain(|&w| {
                let joins = comp.iter().any(|&u| probe.has_edge(u, w));
                if joins {
                    comp.push(w);
                }
                !joins
            });
            if comp.len() == before {
                break;
            }
        }
    }
    count.max(1)
}

/// A `(g, g_prime)` setting on at most twenty vertices.
pub struct CorpusEntry {
    pub name: String,
    pub g: Graph,
    pub g_prime: Graph,
}

/// Boxes of at most twenty vertices in every adjacency, small boxes with the
/// apex, and seeded random connected graphs.
pub fn small_corpus() -> Vec<CorpusEntry> {
    use boundarykit::harness::{random_connected_graph, rng_from_seed};
    use boundarykit::lattice::box_pair;
    use boundarykit::{with_apex, Flavor};

    let mut out = Vec::new();
    let flavors = [Flavor::Plain, Flavor::Plus, Flavor::Star];
    for (d, n) in [(2, 2), (2, 3), (2, 4), (3, 2)] {
        for g_flavor in flavors {
            // path graphs richer than plain only where enumeration stays small
            if g_flavor != Flavor::Plain && d * n > 6 {
                continue;
            }
            for gp in flavors {
                let gp = if gp == Flavor::Plain { g_flavor } else { gp };
                let Ok(pair) = box_pair(d, n, g_flavor, gp) else {
                    continue;
                };
                out.push(CorpusEntry {
                    name: format!("z{d}:{n} g={g_flavor} g'={gp}"),
                    g: pair.g().clone(),
                    g_prime: pair.g_plus().clone(),
                });
            }
        }
    }
    for (d, n) in [(2, 3), (2, 4), (3, 2)] {
        for gp in flavors {
            let apex = with_apex(&box_pair(d, n, Flavor::Plain, gp).unwrap()).unwrap();
            out.push(CorpusEntry {
                name: format!("z{d}:{n}+apex g'={gp}"),
                g: apex.pair().g().clone(),
                g_prime: apex.pair().g_plus().clone(),
            });
        }
    }
    let mut rng = rng_from_seed(2024);
    for n in [6, 9, 12, 15, 20] {
        let g = random_connected_graph(n, n / 3, &mut rng).unwrap();
        let plus = random_connected_graph(n, n, &mut rng).unwrap();
        let g_prime = g
            .with_extra_edges(
                plus.edges()
                    .iter()
                    .copied()
                    .filter(|&(u, v)| !g.has_edge(u, v)),
            )
            .unwrap();
        out.push(CorpusEntry {
            name: format!("random n={n} g'=g"),
            g: g.clone(),
            g_prime: g.clone(),
        });
        out.push(CorpusEntry {
            name: format!("random n={n} g'⊋g"),
            g,
            g_prime,
        });
    }
    out.dedup_by(|a, b| a.name == b.name);
    out
}

/// Compares the library operators with the path-enumeration oracle on every
/// connected set of up to `max_size` vertices (in `g_prime`) and every
/// observer outside it. Returns the number of `(c, x)` queries checked.
pub fn oracle_equivalence(entry: &CorpusEntry, max_size: usize) -> Result<usize, String> {
    use boundarykit::harness::enumerate_connected_subsets;
    use boundarykit::{full_report, outer_boundary, outer_visible_boundary, visible_boundary};

    let (g, gp) = (&entry.g, &entry.g_prime);
    let mut checks = 0;
    for c in enumerate_connected_subsets(gp, max_size).unwrap() {
        let boundary = outer_boundary(gp, &c).unwrap();
        if boundary != boundary_raw(gp, &c) {
            return Err(format!("{}: boundary differs for {c:?}", entry.name));
        }
        for x in (0..g.vertex_count()).filter(|&x| !c.contains(x)) {
            checks += 1;
            let vis = visible_boundary(g, gp, &c, x).unwrap();
            let vis_raw = visible_raw(g, gp, &c, x);
            if vis != vis_raw {
                return Err(format!(
                    "{}: visible {vis:?} vs {vis_raw:?} for c={c:?} x={x}",
                    entry.name
                ));
            }
            let ov = outer_visible_boundary(g, gp, &c, x).unwrap();
            let ov_raw = outer_visible_raw(g, gp, &c, x);
            if ov != ov_raw {
                return Err(format!(
                    "{}: outer-visible {ov:?} vs {ov_raw:?} for c={c:?} x={x}",
                    entry.name
                ));
            }
            let report = full_report(g, gp, gp, &c, x).unwrap();
            if report.component_count != component_count_raw(gp, &vis_raw) {
                return Err(format!(
                    "{}: component count differs for c={c:?} x={x}",
                    entry.name
                ));
            }
        }
    }
    Ok(checks)
}
