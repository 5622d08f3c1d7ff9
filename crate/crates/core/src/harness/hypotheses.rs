//! Premises of the two boundary theorems, checked on a concrete graph pair.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::cycle_space::{is_chordal_cycle, CycleGen, EdgeVector};
use crate::error::{input, Result};
use crate::graph::{GraphPair, VertexSet};

/// `gen` generates the cycle space of `g` and each of its cycles is chordal
/// in `g_plus`.
pub fn check_dp_hypotheses(pair: &GraphPair, gen: &CycleGen) -> Result<bool> {
    if !gen.is_hosted_on(pair.g()) {
        return input("generators must be cycles of g");
    }
    if !gen.is_generating(pair.g())? {
        return Ok(false);
    }
    for c in gen.cycles() {
        if !is_chordal_cycle(c, pair.g_plus())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Premises of the visible-boundary theorem for `g ⊆ g_plus`: both graphs
/// connected, the conditions of [`check_dp_hypotheses`], and for every edge
/// `e` of `g_plus ∖ g` a cycle `O_e` of `g_plus` through `e`, chordal in
/// `g_plus`, all of whose other edges lie in `g`.
pub fn check_k_hypotheses(
    pair: &GraphPair,
    gen: &CycleGen,
    oe_map: &HashMap<(usize, usize), EdgeVector>,
) -> Result<bool> {
    let extra = pair.extra_edges();
    let missing: Vec<_> = extra.iter().filter(|e| !oe_map.contains_key(e)).collect();
    if !missing.is_empty() {
        return input(format!("no O_e supplied for edges {missing:?}"));
    }
    let everything = VertexSet::full(pair.g().vertex_count());
    if !pair.g().is_connected_in(&everything)? || !pair.g_plus().is_connected_in(&everything)? {
        return Ok(false);
    }
    if !check_dp_hypotheses(pair, gen)? {
        return Ok(false);
    }
    for &(u, v) in &extra {
        let o = &oe_map[&(u, v)];
        if !o.is_hosted_on(pair.g_plus()) || !o.is_cycle() {
            return Ok(false);
        }
        let e = pair.g_plus().edge_id(u, v).expect("extra edge of g_plus");
        if !o.contains_edge(e) {
            return Ok(false);
        }
        let rest_in_g = o
            .edge_pairs()
            .into_iter()
            .filter(|&p| p != (u, v))
            .all(|(a, b)| pair.g().has_edge(a, b));
        if !rest_in_g || !is_chordal_cycle(o, pair.g_plus())? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Dp,
    K,
}

/// Memoizes hypothesis checks by `(g, g_plus, generators)` fingerprint.
#[derive(Debug, Default)]
pub struct HypothesisCache {
    known: Mutex<HashMap<(Kind, u64, u64, u64), bool>>,
}

impl HypothesisCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn key(kind: Kind, pair: &GraphPair, gen: &CycleGen) -> (Kind, u64, u64, u64) {
        (
            kind,
            pair.g().fingerprint(),
            pair.g_plus().fingerprint(),
            gen.fingerprint(),
        )
    }

    fn lookup(
        &self,
        key: (Kind, u64, u64, u64),
        check: impl FnOnce() -> Result<bool>,
    ) -> Result<bool> {
        if let Some(&hit) = self.known.lock().expect("cache lock").get(&key) {
            return Ok(hit);
        }
        let value = check()?;
        self.known.lock().expect("cache lock").insert(key, value);
        Ok(value)
    }

    pub fn dp(&self, pair: &GraphPair, gen: &CycleGen) -> Result<bool> {
        self.lookup(Self::key(Kind::Dp, pair, gen), || {
            check_dp_hypotheses(pair, gen)
        })
    }

    /// The `O_e` family is derived from the pair, so it is not part of the key.
    pub fn k(
        &self,
        pair: &GraphPair,
        gen: &CycleGen,
        oe_map: &HashMap<(usize, usize), EdgeVector>,
    ) -> Result<bool> {
        self.lookup(Self::key(Kind::K, pair, gen), || {
            check_k_hypotheses(pair, gen, oe_map)
        })
    }

    pub fn len(&self) -> usize {
        self.known.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_space::fundamental_basis;
    use crate::lattice::{basic_four_cycles, box_pair, face_cycles, oe_map, BoxSpec, Flavor};

    fn faces(pair: &GraphPair) -> CycleGen {
        CycleGen::new(pair.g(), face_cycles(pair.g()).unwrap()).unwrap()
    }

    #[test]
    fn dp_premises_on_lattices() {
        let plus = box_pair(2, 4, Flavor::Plain, Flavor::Plus).unwrap();
        assert!(check_dp_hypotheses(&plus, &faces(&plus)).unwrap());
        let flat = box_pair(2, 4, Flavor::Plain, Flavor::Plain).unwrap();
        assert!(!check_dp_hypotheses(&flat, &faces(&flat)).unwrap());
        let star = box_pair(2, 4, Flavor::Plain, Flavor::Star).unwrap();
        let tree_basis = fundamental_basis(star.g()).unwrap();
        assert!(!check_dp_hypotheses(&star, &tree_basis).unwrap());
    }

    #[test]
    fn foreign_generators_rejected() {
        let pair = box_pair(2, 3, Flavor::Plain, Flavor::Plus).unwrap();
        let other = box_pair(2, 4, Flavor::Plain, Flavor::Plus).unwrap();
        assert!(check_dp_hypotheses(&pair, &faces(&other)).is_err());
    }

    #[test]
    fn k_premises_with_generated_oe() {
        for (d, n) in [(2, 3), (2, 4), (3, 3)] {
            let pair = box_pair(d, n, Flavor::Plain, Flavor::Star).unwrap();
            let map = oe_map(&pair).unwrap();
            assert!(
                check_k_hypotheses(&pair, &faces(&pair), &map).unwrap(),
                "z{d}:{n}"
            );
        }
    }

    #[test]
    fn k_premises_fail_with_non_chordal_oe() {
        let pair = box_pair(2, 4, Flavor::Plain, Flavor::Star).unwrap();
        let mut map = oe_map(&pair).unwrap();
        let s: BoxSpec = "z2:4".parse().unwrap();
        let id = |c: [i32; 2]| s.id_of(&c).unwrap();
        let e = (id([1, 1]), id([2, 2]));
        // through e, other edges plain, but (1,1) and (3,2) are not *-adjacent
        let five = EdgeVector::from_cycle(
            pair.g_plus(),
            &[id([1, 1]), id([2, 2]), id([3, 2]), id([3, 1]), id([2, 1])],
        )
        .unwrap();
        assert!(!is_chordal_cycle(&five, pair.g_plus()).unwrap());
        map.insert(e, five);
        assert!(!check_k_hypotheses(&pair, &faces(&pair), &map).unwrap());
        // the 6-cycle around a domino of faces does not even pass through e
        let six = EdgeVector::from_cycle(
            pair.g_plus(),
            &[
                id([1, 1]),
                id([2, 1]),
                id([3, 1]),
                id([3, 2]),
                id([2, 2]),
                id([1, 2]),
            ],
        )
        .unwrap();
        map.insert(e, six);
        assert!(!check_k_hypotheses(&pair, &faces(&pair), &map).unwrap());
    }

    #[test]
    fn k_missing_key_is_an_error() {
        let pair = box_pair(2, 3, Flavor::Plain, Flavor::Star).unwrap();
        let mut map = oe_map(&pair).unwrap();
        let key = *map.keys().next().unwrap();
        map.remove(&key);
        assert!(check_k_hypotheses(&pair, &faces(&pair), &map).is_err());
    }

    #[test]
    fn cache_hits() {
        let pair = box_pair(2, 3, Flavor::Plain, Flavor::Plus).unwrap();
        let gen = CycleGen::new(
            pair.g(),
            basic_four_cycles(&"z2:3".parse().unwrap()).unwrap(),
        )
        .unwrap();
        let cache = HypothesisCache::new();
        assert!(cache.dp(&pair, &gen).unwrap());
        assert!(cache.dp(&pair, &gen).unwrap());
        assert_eq!(cache.len(), 1);
    }
}
