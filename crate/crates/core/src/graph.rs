//! Finite undirected simple graphs, vertex sets, and the traversal and cutset
//! primitives the boundary operators are built from.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{input, Error, Result};

/// Integer lattice coordinates attached to a vertex.
pub type Coord = Vec<i32>;

/// A subset of the vertex ids `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<Self> {
        let mut set = VertexSet::empty(universe);
        for v in ids {
            if v >= universe {
                return Err(Error::InvalidVertex(v));
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.bits.len() && self.bits.contains(v)
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) -> bool {
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.bits.len() {
            self.bits.set(v, false);
        }
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Shared edge numbering of a graph. Edge vectors keep a handle to it so they
/// can report their endpoints without the owning graph.
#[derive(Debug)]
pub(crate) struct EdgeTable {
    pub(crate) vertex_count: usize,
    pub(crate) endpoints: Vec<(usize, usize)>,
    ids: HashMap<(usize, usize), usize>,
    pub(crate) fingerprint: u64,
}

impl EdgeTable {
    pub(crate) fn id(&self, u: usize, v: usize) -> Option<usize> {
        self.ids.get(&(u.min(v), u.max(v))).copied()
    }
}

#[derive(Debug)]
struct Labels {
    coords: Vec<Coord>,
    index: HashMap<Coord, usize>,
}

/// Immutable finite undirected simple graph on vertices `0..vertex_count`.
///
/// Edges are numbered `0..edge_count` in lexicographic order of their
/// `(min, max)` endpoint pairs. Optional coordinate labels cover a prefix of
/// the vertices; an apex vertex appended after a lattice box stays unlabeled.
#[derive(Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Arc<EdgeTable>,
    labels: Option<Arc<Labels>>,
}

impl Graph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(
        vertex_count: usize,
        edges: I,
    ) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::InvalidVertex(w));
                }
            }
            if u == v {
                return input(format!("loop at vertex {u}"));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return input(format!("duplicate edge {{{}, {}}}", w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut ids = HashMap::with_capacity(list.len());
        for (id, &(u, v)) in list.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            ids.insert((u, v), id);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }

        let mut hasher = DefaultHasher::new();
        vertex_count.hash(&mut hasher);
        list.hash(&mut hasher);
        let fingerprint = hasher.finish();

        Ok(Graph {
            adjacency,
            edges: Arc::new(EdgeTable {
                vertex_count,
                endpoints: list,
                ids,
                fingerprint,
            }),
            labels: None,
        })
    }

    /// Attaches coordinates to vertices `0..coords.len()`.
    pub fn with_labels(mut self, coords: Vec<Coord>) -> Result<Self> {
        if coords.len() > self.vertex_count() {
            return input(format!(
                "{} labels for {} vertices",
                coords.len(),
                self.vertex_count()
            ));
        }
        if let Some(first) = coords.first() {
            if coords.iter().any(|c| c.len() != first.len()) {
                return input("labels have mixed dimensions");
            }
        }
        let mut index = HashMap::with_capacity(coords.len());
        for (v, c) in coords.iter().enumerate() {
            if index.insert(c.clone(), v).is_some() {
                return input(format!("label {c:?} used twice"));
            }
        }
        self.labels = Some(Arc::new(Labels { coords, index }));
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.endpoints.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.id(u, v)
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges.endpoints[edge]
    }

    /// All edges as `(min, max)` pairs, indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges.endpoints
    }

    pub fn labels(&self) -> Option<&[Coord]> {
        self.labels.as_ref().map(|l| l.coords.as_slice())
    }

    pub fn label(&self, v: usize) -> Option<&Coord> {
        self.labels.as_ref().and_then(|l| l.coords.get(v))
    }

    pub fn vertex_at(&self, coord: &[i32]) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.index.get(coord).copied())
    }

    /// Stable hash of the vertex count and edge list.
    pub fn fingerprint(&self) -> u64 {
        self.edges.fingerprint
    }

    pub(crate) fn edge_table(&self) -> &Arc<EdgeTable> {
        &self.edges
    }

    pub(crate) fn same_labels(&self, other: &Graph) -> bool {
        self.labels() == other.labels()
    }

    pub(crate) fn labels_cloned(&self) -> Option<Vec<Coord>> {
        self.labels().map(<[Coord]>::to_vec)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.vertex_count() {
            Ok(())
        } else {
            input(format!(
                "vertex set over {} ids used with a graph on {} vertices",
                s.universe(),
                self.vertex_count()
            ))
        }
    }

    pub(crate) fn reach_avoiding(&self, start: usize, forbidden: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.vertex_count());
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !forbidden.contains(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Vertex set of the component containing `start` in the subgraph induced
    /// on the complement of `forbidden`.
    pub fn component_of(&self, start: usize, forbidden: &VertexSet) -> Result<VertexSet> {
        self.check_vertex(start)?;
        self.check_set(forbidden)?;
        if forbidden.contains(start) {
            return input(format!("start vertex {start} is forbidden"));
        }
        Ok(self.reach_avoiding(start, forbidden))
    }

    /// Components of the subgraph induced on `s`, ordered by smallest member.
    pub fn components_of_set(&self, s: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(s)?;
        let outside = VertexSet::full(self.vertex_count()).difference(s);
        let mut left = s.clone();
        let mut comps = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach_avoiding(v, &outside);
            left = left.difference(&comp);
            comps.push(comp);
        }
        Ok(comps)
    }

    /// Whether the subgraph induced on `s` is connected. The empty set counts
    /// as connected.
    pub fn is_connected_in(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        match s.first() {
            None => Ok(true),
            Some(v) => {
                let outside = VertexSet::full(self.vertex_count()).difference(s);
                Ok(self.reach_avoiding(v, &outside).len() == s.len())
            }
        }
    }

    fn check_cutset_args(&self, s: &VertexSet, x: usize, target: &VertexSet) -> Result<()> {
        self.check_vertex(x)?;
        self.check_set(s)?;
        self.check_set(target)?;
        if s.contains(x) {
            return input(format!("x = {x} lies in the cutset"));
        }
        if target.contains(x) {
            return input(format!("x = {x} lies in the target"));
        }
        if !target.is_disjoint(s) {
            return input("target meets the cutset");
        }
        Ok(())
    }

    /// Whether every path from `x` to `target` meets `s`.
    pub fn is_cutset(&self, s: &VertexSet, x: usize, target: &VertexSet) -> Result<bool> {
        self.check_cutset_args(s, x, target)?;
        Ok(self.reach_avoiding(x, s).is_disjoint(target))
    }

    pub fn is_minimal_cutset(&self, s: &VertexSet, x: usize, target: &VertexSet) -> Result<bool> {
        if !self.is_cutset(s, x, target)? {
            return Ok(false);
        }
        for v in s.iter() {
            let mut smaller = s.clone();
            smaller.remove(v);
            if self.reach_avoiding(x, &smaller).is_disjoint(target) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Shortest path from `from` to `to` avoiding `forbidden`, as a vertex
    /// sequence. Neighbours are scanned in increasing id order, so among
    /// shortest paths the one found first is deterministic.
    pub fn shortest_path(
        &self,
        from: usize,
        to: usize,
        forbidden: &VertexSet,
    ) -> Result<Option<Vec<usize>>> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        self.check_set(forbidden)?;
        if forbidden.contains(from) || forbidden.contains(to) {
            return Ok(None);
        }
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &w in &self.adjacency[u] {
                if parent[w] == usize::MAX && !forbidden.contains(w) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return Ok(None);
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Ok(Some(path))
    }

    /// Same vertex set and labels with additional edges.
    pub fn with_extra_edges<I: IntoIterator<Item = (usize, usize)>>(
        &self,
        extra: I,
    ) -> Result<Graph> {
        let g = Graph::new(
            self.vertex_count(),
            self.edges().iter().copied().chain(extra),
        )?;
        match self.labels_cloned() {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }

    /// Appends one vertex adjacent to `neighbors`; labels are kept, the new
    /// vertex is unlabeled.
    pub fn with_extra_vertex(&self, neighbors: &VertexSet) -> Result<(Graph, usize)> {
        self.check_set(neighbors)?;
        let new = self.vertex_count();
        let g = Graph::new(
            new + 1,
            self.edges()
                .iter()
                .copied()
                .chain(neighbors.iter().map(|v| (v, new))),
        )?;
        let g = match self.labels_cloned() {
            Some(l) => g.with_labels(l)?,
            None => g,
        };
        Ok((g, new))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edge_count())
            .field("labeled", &self.labels.is_some())
            .finish()
    }
}

/// Two graphs `g ⊆ g_plus` on the same labelled vertex set.
#[derive(Clone, Debug)]
pub struct GraphPair {
    g: Graph,
    g_plus: Graph,
}

impl GraphPair {
    pub fn new(g: Graph, g_plus: Graph) -> Result<Self> {
        if g.vertex_count() != g_plus.vertex_count() {
            return input(format!(
                "pair has {} vs {} vertices",
                g.vertex_count(),
                g_plus.vertex_count()
            ));
        }
        if !g.same_labels(&g_plus) {
            return input("pair graphs carry different labels");
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| !g_plus.has_edge(u, v)) {
            return input(format!("edge {{{u}, {v}}} of g is missing from g_plus"));
        }
        Ok(GraphPair { g, g_plus })
    }

    pub fn g(&self) -> &Graph {
        &self.g
    }

    pub fn g_plus(&self) -> &Graph {
        &self.g_plus
    }

    /// Edges of `g_plus` absent from `g`.
    pub fn extra_edges(&self) -> Vec<(usize, usize)> {
        self.g_plus
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| !self.g.has_edge(u, v))
            .collect()
    }
}
