//! Connectedness of exterior boundaries in pairs of graphs `G ⊆ G⁺`.
//!
//! The crate computes exterior, visible and outer-visible boundaries of vertex
//! sets, works with cycle spaces over GF(2), builds the lattice graphs
//! `Z^d`, `Z^{d*}` and `(Z^d)⁺` restricted to boxes, and drives exhaustive and
//! randomized verification campaigns for the boundary-connectedness theorems.

pub mod boundary;
pub mod cli;
pub mod cycle_space;
pub mod error;
pub mod graph;
pub mod harness;
pub mod json;
pub mod lattice;

pub use boundary::{
    full_report, inner_boundary_variants, outer_boundary, outer_visible_boundary, visible_boundary,
    BoundaryReport,
};
pub use cycle_space::{
    fundamental_basis, is_chordal_cycle, lemma_regi_witness, CycleGen, EdgeVector, LemmaWitness,
};
pub use error::{Error, Result};
pub use graph::{Coord, Graph, GraphPair, VertexSet};
pub use lattice::{basic_four_cycles, build_box, oe_cycle, with_apex, ApexGraph, BoxSpec, Flavor};
