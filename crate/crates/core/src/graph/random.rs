use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Partition, VertexSet};

/// Samples a (C4, 2K2)-free graph with a known partition.
///
/// Vertices are `x1..` (independent part), `z1..` (clique part) and, when
/// `with_c5` is set, `u1..u5` (the 5-cycle joined completely to the clique).
/// Each `x`-`z` pair is an edge with probability `bipartite_density`.
/// Output is a pure function of the arguments.
pub fn random_c4_2k2_graph(
    n1: usize,
    n2: usize,
    with_c5: bool,
    bipartite_density: f64,
    seed: u64,
) -> (Graph, Partition) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n3 = if with_c5 { 5 } else { 0 };
    let labels = (1..=n1)
        .map(|i| format!("x{i}"))
        .chain((1..=n2).map(|i| format!("z{i}")))
        .chain((1..=n3).map(|i| format!("u{i}")));
    let mut g = Graph::new(labels).expect("generated labels are unique");
    let v1: VertexSet = (0..n1).collect();
    let v2: VertexSet = (n1..n1 + n2).collect();
    let v3: VertexSet = (n1 + n2..n1 + n2 + n3).collect();
    let p = bipartite_density.clamp(0.0, 1.0);
    for x in v1.iter() {
        for z in v2.iter() {
            if rng.random_bool(p) {
                g.add_edge(x, z).unwrap();
            }
        }
    }
    for (i, z) in v2.iter().enumerate() {
        for w in v2.iter().skip(i + 1) {
            g.add_edge(z, w).unwrap();
        }
        for u in v3.iter() {
            g.add_edge(z, u).unwrap();
        }
    }
    let cycle = v3.to_vec();
    for i in 0..n3 {
        g.add_edge(cycle[i], cycle[(i + 1) % n3]).unwrap();
    }
    let partition = Partition::new(&g, v1, v2, v3).expect("construction satisfies the partition invariants");
    (g, partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_induced, is_chordal, recognize_c4_2k2, Pattern};

    #[test]
    fn bare_c5() {
        let (g, p) = random_c4_2k2_graph(0, 0, true, 0.5, 9);
        assert_eq!(g, Graph::cycle(5, "u"));
        assert_eq!(p.c5_order, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn complete_split_graph_is_chordal_and_cochordal() {
        let (g, _) = random_c4_2k2_graph(3, 2, false, 1.0, 1);
        assert_eq!(g.edge_count(), 3 * 2 + 1);
        assert!(is_chordal(&g));
        assert!(is_chordal(&g.complement()));
    }

    #[test]
    fn deterministic_per_seed() {
        let a = random_c4_2k2_graph(4, 3, true, 0.5, 77);
        let b = random_c4_2k2_graph(4, 3, true, 0.5, 77);
        assert_eq!(a, b);
    }

    #[test]
    fn samples_are_recognized_and_pattern_free() {
        for seed in 0..60 {
            let n1 = (seed % 4) as usize;
            let n2 = (seed / 4 % 3) as usize;
            let c5 = seed % 2 == 0 && n1 + n2 <= 5;
            let (g, _) = random_c4_2k2_graph(n1, n2, c5, 0.5, seed);
            assert!(find_induced(&g, Pattern::C4).is_none());
            assert!(find_induced(&g, Pattern::TwoK2).is_none());
            assert!(recognize_c4_2k2(&g).partition().is_some());
        }
    }
}
