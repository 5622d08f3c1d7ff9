//! Worked instances checked against independently computed expectations.

mod common;

use boundarykit::lattice::{box_pair, face_cycles};
use boundarykit::{
    fundamental_basis, inner_boundary_variants, lemma_regi_witness, outer_boundary,
    outer_visible_boundary, visible_boundary, with_apex, CycleGen, EdgeVector, Flavor, Graph,
    VertexSet,
};
use common::*;

fn apex_pair(d: usize, n: usize, g_prime: Flavor) -> (Graph, Graph, usize) {
    let a = with_apex(&box_pair(d, n, Flavor::Plain, g_prime).unwrap()).unwrap();
    (a.pair().g().clone(), a.pair().g_plus().clone(), a.apex())
}

#[test]
fn flood_fill_left_of_a_wall() {
    let g = grid("z2:4");
    let wall = pts(&g, &[[2, 1], [2, 2], [2, 3], [2, 4]]);
    let got = g.component_of(pt(&g, &[1, 1]), &wall).unwrap();
    assert_eq!(got, pts(&g, &[[1, 1], [1, 2], [1, 3], [1, 4]]));
    assert_eq!(got, reach_raw(&g, &wall, pt(&g, &[1, 1])));
    let right = g.component_of(pt(&g, &[4, 4]), &wall).unwrap();
    assert_eq!(right.len(), 8);
}

#[test]
fn star_ring_separates_center() {
    let g = grid("z2:5");
    let ring = boundary_raw(&grid("z2:5:star"), &pts(&g, &[[3, 3]]));
    assert_eq!(ring.len(), 8);
    let (corner, center) = (pt(&g, &[1, 1]), pts(&g, &[[3, 3]]));
    assert!(g.is_cutset(&ring, corner, &center).unwrap());
    assert!(reach_raw(&g, &ring, corner).is_disjoint(&center));
    // the diagonal corners of the ring are redundant in Z^2
    assert!(!g.is_minimal_cutset(&ring, corner, &center).unwrap());
}

#[test]
fn axis_neighbours_form_a_minimal_cutset() {
    let g = grid("z2:5");
    let (corner, center) = (pt(&g, &[1, 1]), pts(&g, &[[3, 3]]));
    let s = outer_boundary(&g, &center).unwrap();
    assert_eq!(s, pts(&g, &[[3, 2], [2, 3], [4, 3], [3, 4]]));
    assert!(g.is_minimal_cutset(&s, corner, &center).unwrap());
    for v in s.iter() {
        let mut smaller = s.clone();
        smaller.remove(v);
        assert!(!reach_raw(&g, &smaller, corner).is_disjoint(&center));
    }
}

#[test]
fn ring_seen_from_apex_and_from_inside() {
    let (g, _, apex) = apex_pair(2, 7, Flavor::Plain);
    let ring: Vec<[i32; 2]> = (3..=5)
        .flat_map(|a| (3..=5).map(move |b| [a, b]))
        .filter(|&p| p != [4, 4])
        .collect();
    let c = pts(&g, &ring);
    let from_apex = visible_boundary(&g, &g, &c, apex).unwrap();
    assert_eq!(from_apex.len(), 12);
    assert!(!from_apex.contains(pt(&g, &[4, 4])));
    assert_eq!(
        from_apex,
        boundary_raw(&g, &c).intersection(&flood_raw(&g, &c, apex))
    );

    let inside = pt(&g, &[4, 4]);
    let from_center = visible_boundary(&g, &g, &c, inside).unwrap();
    assert_eq!(from_center, pts(&g, &[[4, 4]]));
    let inner = inner_boundary_variants(&g, &g, &c, inside).unwrap();
    assert_eq!(inner.visible, pts(&g, &[[4, 3], [3, 4], [5, 4], [4, 5]]));
}

#[test]
fn domino_is_fully_outer_visible() {
    for (flavor, size) in [(Flavor::Plain, 6), (Flavor::Star, 10)] {
        let (g, gp, apex) = apex_pair(2, 7, flavor);
        let c = pts(&g, &[[3, 3], [3, 4]]);
        let visible = visible_boundary(&g, &gp, &c, apex).unwrap();
        assert_eq!(visible, boundary_raw(&gp, &c));
        assert_eq!(visible.len(), size);
        let outer = outer_visible_boundary(&g, &gp, &c, apex).unwrap();
        assert_eq!(outer, visible);
        assert_eq!(outer, outer_visible_raw(&g, &gp, &c, apex));
    }
}

#[test]
fn complement_component_boundary_is_outer_visible_from_inside() {
    // an L-shaped set and the component of the apex beyond its visible boundary
    let (g, gp, apex) = apex_pair(2, 7, Flavor::Plain);
    let c = pts(&g, &[[3, 3], [3, 4], [3, 5], [4, 3], [5, 3]]);
    let s = visible_boundary(&g, &gp, &c, apex).unwrap();
    let c_prime = g.component_of(apex, &s).unwrap();
    let edge = outer_boundary(&g, &c_prime).unwrap();
    assert!(edge.is_subset(&s));
    assert!(edge
        .iter()
        .all(|v| g.neighbors(v).iter().any(|&w| c.contains(w))));
    for y in c.iter() {
        assert_eq!(outer_visible_boundary(&g, &g, &c_prime, y).unwrap(), edge);
        assert_eq!(outer_visible_raw(&g, &g, &c_prime, y), edge);
    }
}

#[test]
fn inner_boundary_of_a_block() {
    for flavor in [Flavor::Plain, Flavor::Star] {
        let (g, gp, apex) = apex_pair(2, 5, flavor);
        let block: Vec<[i32; 2]> = (2..=4).flat_map(|a| (2..=4).map(move |b| [a, b])).collect();
        let c = pts(&g, &block);
        let r = inner_boundary_variants(&g, &gp, &c, apex).unwrap();
        let mut ring = c.clone();
        ring.remove(pt(&g, &[3, 3]));
        assert_eq!(r.boundary, ring, "{flavor}");
        assert_eq!(r.visible, ring, "{flavor}");
    }
    let g = grid("z2:5");
    let single = pts(&g, &[[3, 3]]);
    let r = inner_boundary_variants(&g, &g, &single, pt(&g, &[1, 1])).unwrap();
    assert_eq!(r.boundary, single);
}

#[test]
fn cube_faces_minus_one_still_generate() {
    let g = grid("z3:2");
    let mut faces = face_cycles(&g).unwrap();
    assert_eq!(faces.len(), 6);
    assert_eq!(CycleGen::new(&g, faces.clone()).unwrap().rank(), 5);
    // the six faces sum to zero
    let total = faces.iter().fold(EdgeVector::zero(&g), |acc, f| &acc + f);
    assert!(total.is_zero());
    faces.pop();
    let gen = CycleGen::new(&g, faces).unwrap();
    assert_eq!(gen.rank(), 5);
    assert!(gen.is_generating(&g).unwrap());
}

#[test]
fn perimeter_is_the_sum_of_all_faces() {
    let g = grid("z2:3");
    let gen = CycleGen::new(&g, face_cycles(&g).unwrap()).unwrap();
    let ring = [
        [1, 1],
        [2, 1],
        [3, 1],
        [3, 2],
        [3, 3],
        [2, 3],
        [1, 3],
        [1, 2],
    ];
    let perimeter =
        EdgeVector::from_cycle(&g, &ring.iter().map(|c| pt(&g, c)).collect::<Vec<_>>()).unwrap();
    assert_eq!(gen.decompose(&perimeter).unwrap(), vec![0, 1, 2, 3]);
    // brute force over all 16 subsets of faces
    let hits: Vec<u32> = (0u32..16)
        .filter(|m| {
            let sum = (0..4)
                .filter(|i| m >> i & 1 == 1)
                .fold(EdgeVector::zero(&g), |acc, i| &acc + gen.get(i).unwrap());
            sum == perimeter
        })
        .collect();
    assert_eq!(hits, vec![15]);
}

#[test]
fn tree_basis_and_faces_span_each_other() {
    let g = grid("z2:3");
    let tree = fundamental_basis(&g).unwrap();
    let faces = CycleGen::new(&g, face_cycles(&g).unwrap()).unwrap();
    assert_eq!(tree.rank(), 4);
    for c in tree.cycles() {
        assert!(faces.decompose(c).is_ok());
    }
    for c in faces.cycles() {
        assert!(tree.decompose(c).is_ok());
    }
}

#[test]
fn anti_diagonal_lemma_instance() {
    let g = grid("z2:3");
    let gen = CycleGen::new(&g, face_cycles(&g).unwrap()).unwrap();
    let (x, y) = (pt(&g, &[1, 1]), pt(&g, &[3, 3]));
    let s1 = pts(&g, &[[2, 2]]);
    let s2 = pts(&g, &[[3, 1], [1, 3]]);
    let s = s1.union(&s2);
    assert!(g.is_minimal_cutset(&s, x, &pts(&g, &[[3, 3]])).unwrap());

    // every face meeting both parts with an odd number of edges from s2 to x's side
    let side = reach_raw(&g, &s, x);
    let valid: Vec<usize> = (0..gen.len())
        .filter(|&i| {
            let o = gen.get(i).unwrap();
            let pairs = o.edge_pairs();
            let meets = |t: &VertexSet| pairs.iter().any(|&(a, b)| t.contains(a) || t.contains(b));
            let odd = pairs
                .iter()
                .filter(|&&(a, b)| {
                    (s2.contains(a) && side.contains(b)) || (s2.contains(b) && side.contains(a))
                })
                .count()
                % 2
                == 1;
            meets(&s1) && meets(&s2) && odd
        })
        .collect();
    assert!(!valid.is_empty());
    let w = lemma_regi_witness(&g, &gen, &s1, &s2, x, y).unwrap();
    assert!(
        valid.contains(&w.index),
        "witness {} not among {valid:?}",
        w.index
    );
    assert_eq!(&w.cycle, gen.get(w.index).unwrap());
    assert_eq!(w.odd_crossings % 2, 1);
}

#[test]
fn four_cycle_lemma_instance() {
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let whole = EdgeVector::from_cycle(&g, &[0, 1, 2, 3]).unwrap();
    let gen = CycleGen::new(&g, vec![whole.clone()]).unwrap();
    let w = lemma_regi_witness(&g, &gen, &ids(&g, [1]), &ids(&g, [3]), 0, 2).unwrap();
    assert_eq!(w.cycle, whole);
    assert_eq!(w.odd_crossings, 1);
}

#[test]
fn operators_match_definitions_on_small_corpus() {
    let mut total = 0;
    for entry in small_corpus() {
        assert!(entry.g.vertex_count() <= 20, "{}", entry.name);
        total += oracle_equivalence(&entry, 3).unwrap_or_else(|e| panic!("{e}"));
    }
    assert!(total > 1000, "only {total} queries");
}
