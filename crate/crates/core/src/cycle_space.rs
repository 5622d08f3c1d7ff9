//! Edge sets as vectors over GF(2): cycle-space bases, rank, decomposition
//! over a generating set, chordality, and the constructive cycle witness for
//! bipartitioned minimal cutsets.

use std::fmt;
use std::ops::{Add, AddAssign};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{input, Error, Result};
use crate::graph::{EdgeTable, Graph, VertexSet};

/// A set of edges of one host graph, added by symmetric difference.
#[derive(Clone)]
pub struct EdgeVector {
    table: Arc<EdgeTable>,
    bits: FixedBitSet,
}

impl EdgeVector {
    pub fn zero(g: &Graph) -> Self {
        EdgeVector {
            table: Arc::clone(g.edge_table()),
            bits: FixedBitSet::with_capacity(g.edge_count()),
        }
    }

    /// Sum of the given edges; an edge listed twice cancels.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(g: &Graph, edges: I) -> Result<Self> {
        let mut out = EdgeVector::zero(g);
        for (u, v) in edges {
            match g.edge_id(u, v) {
                Some(id) => out.bits.toggle(id),
                None => return input(format!("{{{u}, {v}}} is not an edge")),
            }
        }
        Ok(out)
    }

    pub fn from_edge_ids<I: IntoIterator<Item = usize>>(g: &Graph, ids: I) -> Result<Self> {
        let mut out = EdgeVector::zero(g);
        for id in ids {
            if id >= g.edge_count() {
                return input(format!("edge id {id} out of range"));
            }
            out.bits.toggle(id);
        }
        Ok(out)
    }

    /// Edges between consecutive vertices of `walk`.
    pub fn from_walk(g: &Graph, walk: &[usize]) -> Result<Self> {
        Self::from_edges(g, walk.windows(2).map(|w| (w[0], w[1])))
    }

    /// Edges of the closed walk `cycle[0], cycle[1], …, cycle[0]`.
    pub fn from_cycle(g: &Graph, cycle: &[usize]) -> Result<Self> {
        let closing = cycle.last().zip(cycle.first()).map(|(&a, &b)| (a, b));
        Self::from_edges(g, cycle.windows(2).map(|w| (w[0], w[1])).chain(closing))
    }

    pub fn is_hosted_on(&self, g: &Graph) -> bool {
        Arc::ptr_eq(&self.table, g.edge_table()) || self.table.fingerprint == g.fingerprint()
    }

    fn same_host(&self, other: &EdgeVector) -> bool {
        Arc::ptr_eq(&self.table, &other.table) || self.table.fingerprint == other.table.fingerprint
    }

    pub fn checked_add(&self, other: &EdgeVector) -> Result<EdgeVector> {
        if !self.same_host(other) {
            return input("edge vectors live in different graphs");
        }
        let mut bits = self.bits.clone();
        bits.symmetric_difference_with(&other.bits);
        Ok(EdgeVector {
            table: Arc::clone(&self.table),
            bits,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_clear()
    }

    /// Number of edges.
    pub fn weight(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn contains_edge(&self, id: usize) -> bool {
        id < self.bits.len() && self.bits.contains(id)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    /// Edges as sorted `(min, max)` endpoint pairs.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edge_ids().map(|id| self.table.endpoints[id]).collect()
    }

    /// Number of edges shared with `other`.
    pub fn common_edges(&self, other: &EdgeVector) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.table.vertex_count];
        for (u, v) in self.edge_ids().map(|id| self.table.endpoints[id]) {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Every vertex has even degree, i.e. the vector lies in the cycle space.
    pub fn is_even(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    /// Vertices incident to at least one edge.
    pub fn vertices(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.table.vertex_count);
        for (u, v) in self.edge_ids().map(|id| self.table.endpoints[id]) {
            out.insert(u);
            out.insert(v);
        }
        out
    }

    pub fn meets(&self, s: &VertexSet) -> bool {
        self.edge_ids().any(|id| {
            let (u, v) = self.table.endpoints[id];
            s.contains(u) || s.contains(v)
        })
    }

    /// Nonempty, connected and 2-regular on its vertices.
    pub fn is_cycle(&self) -> bool {
        if self.is_zero() || self.degrees().iter().any(|&d| d != 0 && d != 2) {
            return false;
        }
        self.vertex_sequence().len() == self.vertices().len()
    }

    /// Walks the edge set from its smallest vertex, always taking the
    /// smallest unused incident edge. For a cycle this is its vertex order.
    pub fn vertex_sequence(&self) -> Vec<usize> {
        let n = self.table.vertex_count;
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for id in self.edge_ids() {
            let (u, v) = self.table.endpoints[id];
            incident[u].push(id);
            incident[v].push(id);
        }
        let Some(start) = (0..n).find(|&v| !incident[v].is_empty()) else {
            return Vec::new();
        };
        let mut used = FixedBitSet::with_capacity(self.bits.len());
        let mut seq = vec![start];
        let mut cur = start;
        while let Some(&id) = incident[cur].iter().find(|&&id| !used.contains(id)) {
            used.insert(id);
            let (u, v) = self.table.endpoints[id];
            cur = if u == cur { v } else { u };
            if cur == start {
                break;
            }
            seq.push(cur);
        }
        seq
    }
}

impl PartialEq for EdgeVector {
    fn eq(&self, other: &Self) -> bool {
        self.same_host(other) && self.bits == other.bits
    }
}

impl Eq for EdgeVector {}

impl fmt::Debug for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edge_pairs()).finish()
    }
}

/// Panics when the operands belong to different graphs; use
/// [`EdgeVector::checked_add`] for a fallible sum.
impl Add<&EdgeVector> for &EdgeVector {
    type Output = EdgeVector;

    fn add(self, rhs: &EdgeVector) -> EdgeVector {
        self.checked_add(rhs)
            .expect("edge vectors from different graphs")
    }
}

impl AddAssign<&EdgeVector> for EdgeVector {
    fn add_assign(&mut self, rhs: &EdgeVector) {
        assert!(self.same_host(rhs), "edge vectors from different graphs");
        self.bits.symmetric_difference_with(&rhs.bits);
    }
}

#[derive(Clone, Debug)]
struct EchelonRow {
    bits: FixedBitSet,
    // which generators sum to this row
    combo: FixedBitSet,
}

/// An ordered list of cycles together with a row-echelon form over GF(2)
/// used for rank and decomposition queries.
#[derive(Clone, Debug)]
pub struct CycleGen {
    table: Arc<EdgeTable>,
    cycles: Vec<EdgeVector>,
    rows: Vec<EchelonRow>,
    pivot_row: Vec<Option<usize>>,
}

impl CycleGen {
    pub fn new(g: &Graph, cycles: Vec<EdgeVector>) -> Result<Self> {
        for (i, c) in cycles.iter().enumerate() {
            if !c.is_hosted_on(g) {
                return input(format!("generator {i} lives in another graph"));
            }
            if !c.is_cycle() {
                return input(format!("generator {i} is not a cycle"));
            }
        }
        let mut gen = CycleGen {
            table: Arc::clone(g.edge_table()),
            cycles: Vec::with_capacity(cycles.len()),
            rows: Vec::new(),
            pivot_row: vec![None; g.edge_count()],
        };
        for c in cycles {
            gen.push_row(&c);
            gen.cycles.push(c);
        }
        Ok(gen)
    }

    fn push_row(&mut self, c: &EdgeVector) {
        let mut combo = FixedBitSet::with_capacity(self.cycles.len() + 1);
        combo.insert(self.cycles.len());
        let (bits, combo) = self.reduce(c.bits.clone(), combo);
        if let Some(pivot) = bits.minimum() {
            self.pivot_row[pivot] = Some(self.rows.len());
            self.rows.push(EchelonRow { bits, combo });
        }
    }

    /// Clears every pivot position reachable from the lowest bit upwards.
    /// Rows have their pivot as lowest bit, so each step strictly raises the
    /// lowest bit of `bits`.
    fn reduce(&self, mut bits: FixedBitSet, mut combo: FixedBitSet) -> (FixedBitSet, FixedBitSet) {
        let mut floor = 0;
        while let Some(low) = bits.ones().find(|&b| b >= floor) {
            match self.pivot_row[low] {
                Some(r) => {
                    let row = &self.rows[r];
                    bits.symmetric_difference_with(&row.bits);
                    combo.grow(row.combo.len());
                    combo.symmetric_difference_with(&row.combo);
                }
                None => floor = low + 1,
            }
        }
        (bits, combo)
    }

    pub fn cycles(&self) -> &[EdgeVector] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&EdgeVector> {
        self.cycles.get(i)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_hosted_on(&self, g: &Graph) -> bool {
        Arc::ptr_eq(&self.table, g.edge_table()) || self.table.fingerprint == g.fingerprint()
    }

    /// Fingerprint of the host graph and the generator list.
    pub fn fingerprint(&self) -> u64 {
        use std::collections::hash_map::DefaultHasher;
        use std::hash::{Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.table.fingerprint.hash(&mut h);
        for c in &self.cycles {
            c.edge_ids().collect::<Vec<_>>().hash(&mut h);
        }
        h.finish()
    }

    /// Whether the GF(2) span of the generators is the whole cycle space of
    /// `g`, i.e. `rank = |E| - |V| + components`.
    pub fn is_generating(&self, g: &Graph) -> Result<bool> {
        if !self.is_hosted_on(g) {
            return input("generators contain edges foreign to the graph");
        }
        let all = VertexSet::full(g.vertex_count());
        let components = g.components_of_set(&all)?.len();
        Ok(self.rank() + g.vertex_count() == g.edge_count() + components)
    }

    /// Indices `A` of generators with `Σ_{i∈A} gen[i] = target`, determined
    /// by echelon back-substitution. Dependent generators never appear.
    pub fn decompose(&self, target: &EdgeVector) -> Result<Vec<usize>> {
        if !(Arc::ptr_eq(&self.table, &target.table)
            || self.table.fingerprint == target.table.fingerprint)
        {
            return input("target lives in another graph");
        }
        if !target.is_even() {
            return input("target has vertices of odd degree");
        }
        let (residual, combo) = self.reduce(
            target.bits.clone(),
            FixedBitSet::with_capacity(self.cycles.len()),
        );
        if !residual.is_clear() {
            return Err(Error::NotInSpan);
        }
        Ok(combo.ones().collect())
    }
}

/// One fundamental cycle per non-tree edge of the BFS tree rooted at 0,
/// listed in edge-id order.
pub fn fundamental_basis(g: &Graph) -> Result<CycleGen> {
    let n = g.vertex_count();
    if n == 0 {
        return CycleGen::new(g, Vec::new());
    }
    let tree_reach = g.component_of(0, &VertexSet::empty(n))?;
    if tree_reach.len() != n {
        return input("graph is disconnected");
    }
    let mut parent_edge = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    parent[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                parent_edge[w] = g.edge_id(u, w).expect("adjacent");
                queue.push_back(w);
            }
        }
    }
    let mut in_tree = FixedBitSet::with_capacity(g.edge_count());
    for &e in &parent_edge[1..] {
        in_tree.insert(e);
    }
    let mut cycles = Vec::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if in_tree.contains(id) {
            continue;
        }
        let mut c = EdgeVector::zero(g);
        c.bits.insert(id);
        for mut w in [u, v] {
            while w != 0 {
                c.bits.toggle(parent_edge[w]);
                w = parent[w];
            }
        }
        cycles.push(c);
    }
    CycleGen::new(g, cycles)
}

/// Every pair of distinct vertices on the cycle is adjacent in `g_plus`.
pub fn is_chordal_cycle(o: &EdgeVector, g_plus: &Graph) -> Result<bool> {
    if !o.is_cycle() {
        return input("not a cycle");
    }
    if o.table.vertex_count != g_plus.vertex_count() {
        return input("cycle and host graph have different vertex sets");
    }
    let verts = o.vertices().to_vec();
    Ok(verts
        .iter()
        .enumerate()
        .all(|(i, &a)| verts[i + 1..].iter().all(|&b| g_plus.has_edge(a, b))))
}

/// Edges joining `s2` to `component`.
pub fn crossing_edges(g: &Graph, s2: &VertexSet, component: &VertexSet) -> EdgeVector {
    let mut out = EdgeVector::zero(g);
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if (s2.contains(u) && component.contains(v)) || (s2.contains(v) && component.contains(u)) {
            out.bits.insert(id);
        }
    }
    out
}

/// A generator meeting both sides of a bipartitioned minimal cutset and
/// crossing into the `x`-side component through `s2` an odd number of times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaWitness {
    pub index: usize,
    pub cycle: EdgeVector,
    pub odd_crossings: usize,
}

/// Constructs the cycle `O ∈ gen` with `O ∩ s1 ≠ ∅`, `O ∩ s2 ≠ ∅` and an odd
/// number of edges from `s2` into the component of `x` in `g ∖ (s1 ∪ s2)`.
///
/// Paths `P1` (avoiding `s2`) and `P2` (avoiding `s1`) from `x` to `y` are
/// shortest paths; `P1 + P2` is decomposed over `gen`, and the first summand
/// meeting `s1` with an odd crossing count is returned.
pub fn lemma_regi_witness(
    g: &Graph,
    gen: &CycleGen,
    s1: &VertexSet,
    s2: &VertexSet,
    x: usize,
    y: usize,
) -> Result<LemmaWitness> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    g.check_set(s1)?;
    g.check_set(s2)?;
    if !s1.is_disjoint(s2) {
        return input("s1 and s2 overlap");
    }
    if s1.is_empty() || s2.is_empty() {
        return input("both parts of the partition must be nonempty");
    }
    if x == y {
        return input("x and y coincide");
    }
    let cut = s1.union(s2);
    let target = VertexSet::from_ids(g.vertex_count(), [y])?;
    if !g.is_minimal_cutset(&cut, x, &target)? {
        return input("s1 ∪ s2 is not a minimal cutset between x and y");
    }
    if !gen.is_generating(g)? {
        return input("generators do not span the cycle space");
    }

    let p1 = g
        .shortest_path(x, y, s2)?
        .ok_or_else(|| Error::Internal("no x-y path avoiding s2 despite minimality".into()))?;
    let p2 = g
        .shortest_path(x, y, s1)?
        .ok_or_else(|| Error::Internal("no x-y path avoiding s1 despite minimality".into()))?;
    let sum = &EdgeVector::from_walk(g, &p1)? + &EdgeVector::from_walk(g, &p2)?;
    let summands = gen.decompose(&sum).map_err(|e| match e {
        Error::NotInSpan => Error::Internal("P1 + P2 outside the span of a generating set".into()),
        other => other,
    })?;

    let x_side = g.reach_avoiding(x, &cut);
    let e2 = crossing_edges(g, s2, &x_side);
    for i in summands {
        let cycle = &gen.cycles[i];
        if !cycle.vertices().is_disjoint(s1) {
            let crossings = cycle.common_edges(&e2);
            if crossings % 2 == 1 {
                return Ok(LemmaWitness {
                    index: i,
                    cycle: cycle.clone(),
                    odd_crossings: crossings,
                });
            }
        }
    }
    Err(Error::Internal(
        "no summand meets s1 with an odd number of s2 crossings".into(),
    ))
}
