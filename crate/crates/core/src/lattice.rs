//! Boxes `{1,…,n}^d` of `Z^d`, `Z^{d*}` and `(Z^d)⁺`, their unit-face
//! 4-cycles, the short cycles `O_e` closing a star edge through plain edges,
//! and the apex vertex that stands in for the end of `Z^d`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::cycle_space::{is_chordal_cycle, CycleGen, EdgeVector};
use crate::error::{input, Error, Result};
use crate::graph::{Coord, Graph, GraphPair, VertexSet};

/// Adjacency rule of a lattice box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Points at L1-distance 1.
    Plain,
    /// Distinct points at L∞-distance 1.
    Star,
    /// Plain edges plus both diagonals of every unit 2-face.
    Plus,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Plain => "plain",
            Flavor::Star => "star",
            Flavor::Plus => "plus",
        }
    }

    fn admits(self, nonzero_axes: usize) -> bool {
        match self {
            Flavor::Plain => nonzero_axes == 1,
            Flavor::Star => nonzero_axes >= 1,
            Flavor::Plus => nonzero_axes == 1 || nonzero_axes == 2,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Flavor::Plain),
            "star" => Ok(Flavor::Star),
            "plus" => Ok(Flavor::Plus),
            other => input(format!(
                "unknown flavor '{other}' (expected plain, star or plus)"
            )),
        }
    }
}

/// The box `{1,…,side}^dim` with a given adjacency flavor.
///
/// Vertex ids enumerate coordinates with the first axis varying fastest:
/// `id = Σ_k (c_k − 1)·side^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxSpec {
    pub dim: usize,
    pub side: usize,
    pub flavor: Flavor,
}

impl BoxSpec {
    pub fn new(dim: usize, side: usize, flavor: Flavor) -> Result<Self> {
        let spec = BoxSpec { dim, side, flavor };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_flavor(self, flavor: Flavor) -> Self {
        BoxSpec { flavor, ..self }
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 || self.side == 0 {
            return input("box dimension and side must be at least 1");
        }
        if self.flavor == Flavor::Plus && self.dim < 2 {
            return input("the plus flavor needs dimension at least 2");
        }
        if i32::try_from(self.side).is_err() {
            return input("box side too large");
        }
        self.vertex_count().map(|_| ())
    }

    pub fn vertex_count(&self) -> Result<usize> {
        u32::try_from(self.dim)
            .ok()
            .and_then(|d| self.side.checked_pow(d))
            .ok_or_else(|| {
                Error::Input(format!(
                    "{}^{} vertices overflow the id space",
                    self.side, self.dim
                ))
            })
    }

    pub fn coord(&self, mut id: usize) -> Coord {
        (0..self.dim)
            .map(|_| {
                let c = (id % self.side) as i32 + 1;
                id /= self.side;
                c
            })
            .collect()
    }

    pub fn id_of(&self, coord: &[i32]) -> Option<usize> {
        if coord.len() != self.dim {
            return None;
        }
        let mut id = 0;
        for &c in coord.iter().rev() {
            if c < 1 || c as usize > self.side {
                return None;
            }
            id = id * self.side + (c as usize - 1);
        }
        Some(id)
    }

    /// L∞-distance from `coord` to the complement `Z^d ∖ B_n`; surface
    /// points are at distance 1.
    pub fn surface_distance(&self, coord: &[i32]) -> usize {
        coord
            .iter()
            .map(|&c| (c as usize).min(self.side + 1 - c as usize))
            .min()
            .unwrap_or(0)
    }

    /// Box vertices at distance at least `margin` from the complement,
    /// as a subset of `0..universe` (`universe` may include an apex).
    pub fn margin_region(&self, universe: usize, margin: usize) -> Result<VertexSet> {
        let n = self.vertex_count()?;
        VertexSet::from_ids(
            universe,
            (0..n).filter(|&v| self.surface_distance(&self.coord(v)) >= margin),
        )
    }
}

impl fmt::Display for BoxSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}:{}:{}", self.dim, self.side, self.flavor)
    }
}

/// Parses `z{d}:{n}:{plain|star|plus}`; the flavor defaults to plain.
impl FromStr for BoxSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Input(format!(
                "bad box spec '{s}' (expected z<d>:<n>:<plain|star|plus>)"
            ))
        };
        let rest = s.strip_prefix('z').ok_or_else(bad)?;
        let mut parts = rest.split(':');
        let dim = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
        let side = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
        let flavor = match parts.next() {
            Some(f) => f.parse()?,
            None => Flavor::Plain,
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        BoxSpec::new(dim, side, flavor)
    }
}

/// The box graph with coordinate labels.
pub fn build_box(spec: &BoxSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.vertex_count()?;
    let offsets: Vec<Vec<i32>> = (0..3usize.pow(spec.dim as u32))
        .map(|mut k| {
            (0..spec.dim)
                .map(|_| {
                    let o = (k % 3) as i32 - 1;
                    k /= 3;
                    o
                })
                .collect::<Vec<i32>>()
        })
        .filter(|o| spec.flavor.admits(o.iter().filter(|&&x| x != 0).count()))
        .collect();

    let coords: Vec<Coord> = (0..n).map(|v| spec.coord(v)).collect();
    let mut edges = Vec::new();
    for (u, cu) in coords.iter().enumerate() {
        for off in &offsets {
            let cv: Coord = cu.iter().zip(off).map(|(a, b)| a + b).collect();
            if let Some(v) = spec.id_of(&cv) {
                if v > u {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::new(n, edges)?.with_labels(coords)
}

/// `(g, g_plus)` on the same box.
pub fn box_pair(dim: usize, side: usize, g: Flavor, g_plus: Flavor) -> Result<GraphPair> {
    GraphPair::new(
        build_box(&BoxSpec::new(dim, side, g)?)?,
        build_box(&BoxSpec::new(dim, side, g_plus)?)?,
    )
}

/// Vertex quadruples `p, p+e_i, p+e_i+e_j, p+e_j` of every unit 2-face whose
/// corners are all labelled vertices of `g`.
pub fn unit_faces(g: &Graph) -> Vec<[usize; 4]> {
    let Some(labels) = g.labels() else {
        return Vec::new();
    };
    let dim = labels.first().map_or(0, Vec::len);
    let mut faces = Vec::new();
    for (p, c) in labels.iter().enumerate() {
        for i in 0..dim {
            for j in i + 1..dim {
                let shift = |di: i32, dj: i32| {
                    let mut q = c.clone();
                    q[i] += di;
                    q[j] += dj;
                    g.vertex_at(&q)
                };
                if let (Some(a), Some(b), Some(d)) = (shift(1, 0), shift(1, 1), shift(0, 1)) {
                    faces.push([p, a, b, d]);
                }
            }
        }
    }
    faces
}

/// The boundary 4-cycles of unit 2-faces, as edge vectors of `g`.
pub fn face_cycles(g: &Graph) -> Result<Vec<EdgeVector>> {
    unit_faces(g)
        .iter()
        .map(|f| EdgeVector::from_cycle(g, f))
        .collect()
}

/// One 4-cycle per axis-aligned unit 2-face of the plain box.
pub fn basic_four_cycles(spec: &BoxSpec) -> Result<Vec<EdgeVector>> {
    if spec.flavor != Flavor::Plain {
        return input("basic 4-cycles are taken in the plain box");
    }
    if spec.dim < 2 {
        return input("no 2-faces below dimension 2");
    }
    face_cycles(&build_box(spec)?)
}

/// Shortest cycle through the `g_plus` edge `e` whose other edges lie in `g`
/// and whose vertices stay in the smallest unit cube face containing `e`,
/// chordal in `g_plus`. Among equally short candidates the path from the
/// smaller endpoint with the lexicographically smallest vertex-id sequence
/// wins. The result is an edge vector of `g_plus`.
pub fn oe_cycle(pair: &GraphPair, e: (usize, usize)) -> Result<EdgeVector> {
    let (g, plus) = (pair.g(), pair.g_plus());
    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    plus.check_vertex(b)?;
    if !plus.has_edge(a, b) {
        return input(format!("{{{a}, {b}}} is not an edge of g_plus"));
    }
    if g.has_edge(a, b) {
        return input(format!("{{{a}, {b}}} already belongs to g"));
    }
    let (Some(ca), Some(cb)) = (g.label(a), g.label(b)) else {
        return input("oe_cycle needs coordinate labels on both endpoints");
    };
    if ca.iter().zip(cb).any(|(x, y)| (x - y).abs() > 1) {
        return Err(Error::Internal(format!(
            "endpoints {ca:?} and {cb:?} share no unit cube"
        )));
    }
    let lo: Coord = ca.iter().zip(cb).map(|(x, y)| *x.min(y)).collect();
    let hi: Coord = ca.iter().zip(cb).map(|(x, y)| *x.max(y)).collect();
    let in_face = |v: usize| {
        g.label(v).is_some_and(|c| {
            c.iter()
                .zip(lo.iter().zip(&hi))
                .all(|(x, (l, h))| l <= x && x <= h)
        })
    };
    let face_size = 1usize << lo.iter().zip(&hi).filter(|(l, h)| l != h).count();

    for len in 2..face_size {
        let mut path = vec![a];
        if let Some(found) = search_paths(g, b, len, &in_face, &mut path, &mut |p| {
            EdgeVector::from_cycle(plus, p)
                .ok()
                .filter(|c| is_chordal_cycle(c, plus).unwrap_or(false))
        }) {
            return Ok(found);
        }
    }
    Err(Error::Internal(format!(
        "no chordal cycle closes {{{a}, {b}}} inside its unit cube"
    )))
}

/// Depth-first enumeration, in lexicographic order, of simple paths with
/// exactly `len` edges from `path[0]` to `goal`; returns the first accepted.
fn search_paths<T>(
    g: &Graph,
    goal: usize,
    len: usize,
    allowed: &dyn Fn(usize) -> bool,
    path: &mut Vec<usize>,
    accept: &mut dyn FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    let last = *path.last().expect("path starts at the source");
    if path.len() == len + 1 {
        return if last == goal { accept(path) } else { None };
    }
    for &w in g.neighbors(last) {
        let closes = w == goal && path.len() == len;
        if (closes || (w != goal && allowed(w))) && !path.contains(&w) {
            path.push(w);
            let found = search_paths(g, goal, len, allowed, path, accept);
            path.pop();
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

/// `O_e` for every edge of `g_plus ∖ g`.
pub fn oe_map(pair: &GraphPair) -> Result<HashMap<(usize, usize), EdgeVector>> {
    pair.extra_edges()
        .into_iter()
        .map(|e| oe_cycle(pair, e).map(|c| (e, c)))
        .collect()
}

/// A lattice pair with one extra vertex joined, in both graphs, to every
/// vertex on the surface of the box.
#[derive(Clone, Debug)]
pub struct ApexGraph {
    pair: GraphPair,
    apex: usize,
    shell: VertexSet,
}

impl ApexGraph {
    pub fn pair(&self) -> &GraphPair {
        &self.pair
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    pub fn shell(&self) -> &VertexSet {
        &self.shell
    }

    /// Unit-face 4-cycles plus the triangles `(apex, s, t)` over every
    /// `g`-edge `s–t` inside the shell; generating for a connected shell.
    pub fn generators(&self) -> Result<CycleGen> {
        let g = self.pair.g();
        let mut cycles = face_cycles(g)?;
        for &(s, t) in g.edges() {
            if self.shell.contains(s) && self.shell.contains(t) {
                cycles.push(EdgeVector::from_cycle(g, &[self.apex, s, t])?);
            }
        }
        CycleGen::new(g, cycles)
    }
}

/// Adds the apex; the shell is every vertex with some coordinate at the
/// minimum or maximum of its axis.
pub fn with_apex(pair: &GraphPair) -> Result<ApexGraph> {
    let g = pair.g();
    let labels = match g.labels() {
        Some(l) if l.len() == g.vertex_count() && !l.is_empty() => l,
        _ => return input("with_apex needs a fully labelled pair"),
    };
    let dim = labels[0].len();
    let lo: Vec<i32> = (0..dim)
        .map(|k| labels.iter().map(|c| c[k]).min().unwrap())
        .collect();
    let hi: Vec<i32> = (0..dim)
        .map(|k| labels.iter().map(|c| c[k]).max().unwrap())
        .collect();
    let shell = VertexSet::from_ids(
        g.vertex_count(),
        labels
            .iter()
            .enumerate()
            .filter(|(_, c)| (0..dim).any(|k| c[k] == lo[k] || c[k] == hi[k]))
            .map(|(v, _)| v),
    )?;
    let (g2, apex) = g.with_extra_vertex(&shell)?;
    let (plus2, _) = pair.g_plus().with_extra_vertex(&shell)?;
    let mut shell2 = VertexSet::empty(apex + 1);
    for v in shell.iter() {
        shell2.insert(v);
    }
    Ok(ApexGraph {
        pair: GraphPair::new(g2, plus2)?,
        apex,
        shell: shell2,
    })
}
