//! Exhaustive enumeration of connected vertex subsets (lattice animals when
//! the graph is a box), by Redelmeier's untried-set recursion.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest vertex count enumerated without a size cap.
pub const EXHAUSTIVE_VERTEX_LIMIT: usize = 25;
/// Largest subset size enumerated on bigger graphs.
pub const EXHAUSTIVE_SIZE_LIMIT: usize = 9;

pub fn check_budget(vertex_count: usize, max_size: usize) -> Result<()> {
    if vertex_count <= EXHAUSTIVE_VERTEX_LIMIT || max_size <= EXHAUSTIVE_SIZE_LIMIT {
        Ok(())
    } else {
        Err(Error::Budget(format!(
            "exhaustive enumeration needs at most {EXHAUSTIVE_VERTEX_LIMIT} vertices or subsets of \
             size at most {EXHAUSTIVE_SIZE_LIMIT} (got {vertex_count} vertices, size {max_size})"
        )))
    }
}

/// Calls `visit` once for every nonempty connected subset of `allowed` with
/// at most `max_size` vertices. Subsets are grouped by their smallest vertex
/// in increasing order; `visit` sees the members in insertion order.
pub fn for_each_connected_subset<F>(
    g: &Graph,
    allowed: &VertexSet,
    max_size: usize,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    g.check_set(allowed)?;
    check_budget(allowed.len(), max_size)?;
    if max_size == 0 {
        return Ok(ControlFlow::Continue(()));
    }
    let n = g.vertex_count();
    let mut reached = vec![false; n];
    for v in (0..n).filter(|&v| !allowed.contains(v)) {
        reached[v] = true;
    }
    let mut subset = Vec::with_capacity(max_size);
    for root in allowed.iter() {
        // vertices below the root are never added for this root
        reached[root] = true;
        let mut untried = vec![root];
        let flow = extend(
            g,
            max_size,
            &mut subset,
            &mut untried,
            &mut reached,
            &mut visit,
        );
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

fn extend<F>(
    g: &Graph,
    max_size: usize,
    subset: &mut Vec<usize>,
    untried: &mut Vec<usize>,
    reached: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    while let Some(v) = untried.pop() {
        subset.push(v);
        visit(subset)?;
        if subset.len() < max_size {
            let mut next = untried.clone();
            let mut added = Vec::new();
            for &w in g.neighbors(v) {
                if !reached[w] {
                    reached[w] = true;
                    added.push(w);
                    next.push(w);
                }
            }
            let flow = extend(g, max_size, subset, &mut next, reached, visit);
            for w in added {
                reached[w] = false;
            }
            flow?;
        }
        subset.pop();
    }
    ControlFlow::Continue(())
}

/// Every connected subset of `g` with at most `max_size` vertices.
pub fn enumerate_connected_subsets(g: &Graph, max_size: usize) -> Result<Vec<VertexSet>> {
    enumerate_within(g, &VertexSet::full(g.vertex_count()), max_size)
}

pub fn enumerate_within(g: &Graph, allowed: &VertexSet, max_size: usize) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let _ = for_each_connected_subset(g, allowed, max_size, |s| {
        out.push(VertexSet::from_ids(n, s.iter().copied()).expect("ids in range"));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}
