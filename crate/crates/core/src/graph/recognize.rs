use serde::Serialize;

use super::{find_induced, Graph, Pattern, VertexSet};
use crate::error::{Error, Result};

/// Structural certificate for a (C4, 2K2)-free graph.
///
/// `v1` is independent, `v2` is a clique, and `v3` is either empty or an
/// induced 5-cycle joined completely to `v2` and not at all to `v1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub v3: VertexSet,
    /// Cyclic order of `v3`, empty when `v3` is.
    pub c5_order: Vec<usize>,
}

/// Outcome of [`recognize_c4_2k2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Free(Partition),
    /// Not (C4, 2K2)-free; `witness` induces `pattern`.
    Obstructed { pattern: Pattern, witness: VertexSet },
}

impl Recognition {
    pub fn partition(&self) -> Option<&Partition> {
        match self {
            Recognition::Free(p) => Some(p),
            Recognition::Obstructed { .. } => None,
        }
    }

    pub fn into_partition(self) -> Option<Partition> {
        match self {
            Recognition::Free(p) => Some(p),
            Recognition::Obstructed { .. } => None,
        }
    }
}

impl Partition {
    /// Builds a partition around the given five cycle vertices (or none) and
    /// canonicalises the cycle order.
    pub fn new(g: &Graph, v1: VertexSet, v2: VertexSet, v3: VertexSet) -> Result<Partition> {
        let c5_order = if v3.is_empty() {
            Vec::new()
        } else {
            canonical_cycle_order(g, v3)
                .ok_or_else(|| Error::InvalidPartition("v3 does not induce a 5-cycle".into()))?
        };
        let p = Partition {
            v1,
            v2,
            v3,
            c5_order,
        };
        p.validate(g)?;
        Ok(p)
    }

    pub fn has_c5(&self) -> bool {
        !self.v3.is_empty()
    }

    /// Checks every structural invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |m: &str| Err(Error::InvalidPartition(m.to_string()));
        let all = self.v1.union(self.v2).union(self.v3);
        if all != g.vertices()
            || self.v1.len() + self.v2.len() + self.v3.len() != g.n()
        {
            return fail("parts are not a partition of the vertex set");
        }
        if !g.is_independent(self.v1) {
            return fail("v1 is not independent");
        }
        if !g.is_clique(self.v2) {
            return fail("v2 is not a clique");
        }
        if self.v3.is_empty() {
            return if self.c5_order.is_empty() {
                Ok(())
            } else {
                fail("c5_order given for empty v3")
            };
        }
        if self.v3.len() != 5 || self.c5_order.len() != 5 {
            return fail("v3 must have 0 or 5 vertices");
        }
        if VertexSet::from_indices(self.c5_order.iter().copied()) != self.v3 {
            return fail("c5_order does not enumerate v3");
        }
        for i in 0..5 {
            for j in i + 1..5 {
                let cyclic = j == i + 1 || (i == 0 && j == 4);
                if g.adjacent(self.c5_order[i], self.c5_order[j]) != cyclic {
                    return fail("c5_order does not induce exactly the cycle edges");
                }
            }
        }
        for v in self.v2.iter() {
            if !self.v3.is_subset(g.neighbors(v)) {
                return fail("some v2-v3 pair is not adjacent");
            }
        }
        for v in self.v1.iter() {
            if !g.neighbors(v).is_disjoint(self.v3) {
                return fail("some v1-v3 pair is adjacent");
            }
        }
        Ok(())
    }

    /// `(v1, v2, v3)` as label lists, with `v3` in cycle order.
    pub fn labelled(&self, g: &Graph) -> PartitionLabels {
        let names = |s: VertexSet| s.iter().map(|v| g.label(v).to_string()).collect();
        PartitionLabels {
            v1: names(self.v1),
            v2: names(self.v2),
            v3: self.c5_order.iter().map(|&v| g.label(v).to_string()).collect(),
        }
    }
}

/// Serializable view of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionLabels {
    pub v1: Vec<String>,
    pub v2: Vec<String>,
    pub v3: Vec<String>,
}

/// Cycle order of an induced 5-cycle, starting at the smallest label and
/// continuing towards its smaller-labelled neighbour.
fn canonical_cycle_order(g: &Graph, set: VertexSet) -> Option<Vec<usize>> {
    if set.len() != 5 || set.iter().any(|v| g.neighbors(v).intersection(set).len() != 2) {
        return None;
    }
    let by_label = |a: &usize, b: &usize| g.label(*a).cmp(g.label(*b));
    let start = set.iter().min_by(by_label)?;
    let mut nb: Vec<usize> = g.neighbors(start).intersection(set).to_vec();
    nb.sort_by(by_label);
    let mut order = vec![start, nb[0]];
    while order.len() < 5 {
        let last = order[order.len() - 1];
        let prev = order[order.len() - 2];
        let next = g
            .neighbors(last)
            .intersection(set)
            .iter()
            .find(|&w| w != prev)?;
        if order.contains(&next) {
            return None;
        }
        order.push(next);
    }
    g.adjacent(order[4], start).then_some(order)
}

/// Decides (C4, 2K2)-freeness and extracts the three-part partition.
///
/// With an induced 5-cycle present its placement is forced: the cycle is
/// `v3`, vertices adjacent to all of it form `v2` and the rest `v1`. Without
/// one the graph must be split, and the degree-sequence split test supplies
/// the clique. On any failed check a C4 or 2K2 witness is returned.
pub fn recognize_c4_2k2(g: &Graph) -> Recognition {
    if let Some(p) = forced_partition(g) {
        return Recognition::Free(p);
    }
    for pattern in [Pattern::C4, Pattern::TwoK2] {
        if let Some(witness) = find_induced(g, pattern) {
            return Recognition::Obstructed { pattern, witness };
        }
    }
    // Only reachable if the forced construction above is wrong.
    match exhaustive_partition(g) {
        Some(p) => Recognition::Free(p),
        None => panic!("no partition and no C4/2K2 witness for {g:?}"),
    }
}

fn forced_partition(g: &Graph) -> Option<Partition> {
    if let Some(c5) = find_induced(g, Pattern::C5) {
        let rest = g.vertices().difference(c5);
        let v2: VertexSet = rest
            .iter()
            .filter(|&v| c5.is_subset(g.neighbors(v)))
            .collect();
        let v1 = rest.difference(v2);
        return Partition::new(g, v1, v2, c5).ok();
    }
    let clique = split_clique(g);
    Partition::new(g, g.vertices().difference(clique), clique, VertexSet::EMPTY).ok()
}

/// Hammer-Simeone: with degrees sorted decreasingly, the first
/// `max{i : d_i >= i - 1}` vertices are the clique of a split partition
/// whenever one exists.
fn split_clique(g: &Graph) -> VertexSet {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    order[..m].iter().copied().collect()
}

fn exhaustive_partition(g: &Graph) -> Option<Partition> {
    const LIMIT: usize = 12;
    if g.n() > LIMIT {
        return None;
    }
    let mut v3_options = vec![VertexSet::EMPTY];
    let n = g.n();
    for mask in 0u64..1 << n {
        let s = VertexSet(mask);
        if s.len() == 5 && canonical_cycle_order(g, s).is_some() {
            v3_options.push(s);
        }
    }
    for v3 in v3_options {
        let rest = g.vertices().difference(v3);
        let rest_idx = rest.to_vec();
        for sub in 0u64..1 << rest_idx.len() {
            let v2: VertexSet = rest_idx
                .iter()
                .enumerate()
                .filter(|(i, _)| sub >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if let Ok(p) = Partition::new(g, rest.difference(v2), v2, v3) {
                return Some(p);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::order_sensitive_graph;

    #[test]
    fn c5_is_its_own_v3() {
        let g = Graph::cycle(5, "u");
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        assert!(p.v1.is_empty() && p.v2.is_empty());
        assert_eq!(p.v3, g.vertices());
        assert_eq!(p.c5_order, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn order_sensitive_graph_partition() {
        let g = order_sensitive_graph();
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        let l = p.labelled(&g);
        assert_eq!(l.v1, ["a"]);
        assert_eq!(l.v2, ["b"]);
        assert_eq!(l.v3, ["c", "d", "e", "f", "g"]);
    }

    #[test]
    fn c4_is_obstructed() {
        let g = Graph::cycle(4, "v");
        match recognize_c4_2k2(&g) {
            Recognition::Obstructed { pattern, witness } => {
                assert_eq!(pattern, Pattern::C4);
                assert_eq!(witness, g.vertices());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn two_k2_is_obstructed() {
        let g = Graph::from_edges(&[("a", "b"), ("c", "d")]).unwrap();
        assert!(matches!(
            recognize_c4_2k2(&g),
            Recognition::Obstructed {
                pattern: Pattern::TwoK2,
                ..
            }
        ));
    }

    #[test]
    fn reflection_tie_break_uses_labels() {
        // cycle a-e-d-c-b-a: smallest start a, smaller neighbour b
        let g = Graph::from_edges(&[("a", "e"), ("e", "d"), ("d", "c"), ("c", "b"), ("b", "a")])
            .unwrap();
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        let names: Vec<&str> = p.c5_order.iter().map(|&v| g.label(v)).collect();
        assert_eq!(names, ["a", "b", "c", "d", "e"]);
    }

    #[test]
    fn validate_catches_broken_partitions() {
        let g = order_sensitive_graph();
        let mut p = recognize_c4_2k2(&g).into_partition().unwrap();
        p.v1 = p.v1.union(p.v2);
        assert!(p.validate(&g).is_err());
        let mut q = recognize_c4_2k2(&g).into_partition().unwrap();
        q.c5_order.swap(0, 1);
        assert!(q.validate(&g).is_err());
    }

    #[test]
    fn empty_graph_is_free() {
        let g = Graph::new(Vec::<String>::new()).unwrap();
        assert!(recognize_c4_2k2(&g).partition().is_some());
    }
}
