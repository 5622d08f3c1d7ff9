//! Exterior, visible and outer-visible boundaries of a vertex set `c`, where
//! adjacency to `c` is taken in `g_prime` and visibility from `x` means a
//! `g`-path avoiding `c`.

use crate::error::{input, Result};
use crate::graph::{Graph, VertexSet};

/// Boundary sets of one `(c, x)` query plus the connectivity of the visible
/// set inside a probe graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryReport {
    pub boundary: VertexSet,
    pub visible: VertexSet,
    pub outer_visible: VertexSet,
    /// Components of `visible` in the probe graph; the empty set counts as one.
    pub component_count: usize,
    /// Smallest vertex pair lying in different probe components.
    pub witness_disconnect: Option<(usize, usize)>,
}

impl BoundaryReport {
    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }
}

/// Vertices outside `c` with a `g_prime`-neighbour in `c`.
pub fn outer_boundary(g_prime: &Graph, c: &VertexSet) -> Result<VertexSet> {
    g_prime.check_set(c)?;
    let mut out = VertexSet::empty(g_prime.vertex_count());
    for v in c.iter() {
        for &w in g_prime.neighbors(v) {
            if !c.contains(w) {
                out.insert(w);
            }
        }
    }
    Ok(out)
}

fn check_query(g: &Graph, g_prime: &Graph, c: &VertexSet, x: usize) -> Result<()> {
    if g.vertex_count() != g_prime.vertex_count() {
        return input("g and g_prime have different vertex sets");
    }
    g.check_set(c)?;
    g.check_vertex(x)?;
    if c.contains(x) {
        return input(format!("x = {x} lies in c"));
    }
    Ok(())
}

/// Outer `g_prime`-boundary points of `c` joined to `x` by a `g`-path
/// disjoint from `c`. `x` itself belongs when it is `g_prime`-adjacent to `c`.
pub fn visible_boundary(g: &Graph, g_prime: &Graph, c: &VertexSet, x: usize) -> Result<VertexSet> {
    check_query(g, g_prime, c, x)?;
    let reach = g.reach_avoiding(x, c);
    Ok(outer_boundary(g_prime, c)?.intersection(&reach))
}

/// Visible boundary points `v` reached from `x` by a `g`-path avoiding `c`
/// whose inner vertices avoid the visible boundary.
pub fn outer_visible_boundary(
    g: &Graph,
    g_prime: &Graph,
    c: &VertexSet,
    x: usize,
) -> Result<VertexSet> {
    let visible = visible_boundary(g, g_prime, c, x)?;
    Ok(outer_visible_from(g, c, &visible, x))
}

fn outer_visible_from(g: &Graph, c: &VertexSet, visible: &VertexSet, x: usize) -> VertexSet {
    let mut blocked = c.union(visible);
    blocked.remove(x);
    // vertices reachable from x through non-boundary vertices, x included
    let inner = g.reach_avoiding(x, &blocked);
    let mut out = VertexSet::empty(g.vertex_count());
    for v in visible.iter() {
        if v == x || g.neighbors(v).iter().any(|&w| inner.contains(w)) {
            out.insert(v);
        }
    }
    out
}

fn components_report(probe: &Graph, set: &VertexSet) -> Result<(usize, Option<(usize, usize)>)> {
    let comps = probe.components_of_set(set)?;
    let witness = match comps.as_slice() {
        [first, ..] if comps.len() > 1 => {
            let a = first.first().expect("components are nonempty");
            let b = set.difference(first).first().expect("second component");
            Some((a, b))
        }
        _ => None,
    };
    Ok((comps.len().max(1), witness))
}

/// Boundary, visible and outer-visible sets, with the visible set's
/// components counted in `probe`.
pub fn full_report(
    g: &Graph,
    g_prime: &Graph,
    probe: &Graph,
    c: &VertexSet,
    x: usize,
) -> Result<BoundaryReport> {
    check_query(g, g_prime, c, x)?;
    if probe.vertex_count() != g.vertex_count() {
        return input("probe graph has a different vertex set");
    }
    let boundary = outer_boundary(g_prime, c)?;
    let visible = boundary.intersection(&g.reach_avoiding(x, c));
    let outer_visible = outer_visible_from(g, c, &visible, x);
    let (component_count, witness_disconnect) = components_report(probe, &visible)?;
    Ok(BoundaryReport {
        boundary,
        visible,
        outer_visible,
        component_count,
        witness_disconnect,
    })
}

/// The same sets with the roles of `c` and its complement exchanged:
/// vertices of `c` with a `g_prime`-neighbour outside `c`, those adjacent
/// to the component of `x` in `g ∖ c`, and among them the ones with a
/// `g`-neighbour in that component. Components are counted in `g`.
pub fn inner_boundary_variants(
    g: &Graph,
    g_prime: &Graph,
    c: &VertexSet,
    x: usize,
) -> Result<BoundaryReport> {
    check_query(g, g_prime, c, x)?;
    let reach = g.reach_avoiding(x, c);
    let mut boundary = VertexSet::empty(g.vertex_count());
    let mut visible = VertexSet::empty(g.vertex_count());
    let mut outer_visible = VertexSet::empty(g.vertex_count());
    for v in c.iter() {
        let nbrs = g_prime.neighbors(v);
        if nbrs.iter().any(|&w| !c.contains(w)) {
            boundary.insert(v);
        }
        if nbrs.iter().any(|&w| reach.contains(w)) {
            visible.insert(v);
            if g.neighbors(v).iter().any(|&w| reach.contains(w)) {
                outer_visible.insert(v);
            }
        }
    }
    let (component_count, witness_disconnect) = components_report(g, &visible)?;
    Ok(BoundaryReport {
        boundary,
        visible,
        outer_visible,
        component_count,
        witness_disconnect,
    })
}
