use super::{Graph, Partition, VertexSet};
use crate::error::{Error, Result};

/// The two shapes a minimal vertex cover can take when `v3` is nonempty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverForm {
    /// `V2 ∪ {a, b, c}` with `a, b, c ∈ V3`, `ab` an edge and `c` adjacent to
    /// neither.
    TypeI { a: usize, b: usize, c: usize },
    /// `N(center)` for some `center ∈ V2`.
    TypeII { center: usize },
}

/// All minimal vertex covers, as complements of the maximal independent sets.
///
/// Sorted by their increasing index lists. Isolated vertices never appear.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexSet> {
    let co = g.complement();
    let mut out = Vec::new();
    bron_kerbosch(&co, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    let mut covers: Vec<VertexSet> = out
        .into_iter()
        .map(|mis| g.vertices().difference(mis))
        .collect();
    covers.sort_by_key(|c| c.to_vec());
    covers
}

/// Maximal cliques of `g` with Tomita pivoting.
fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(p).len())
        .expect("p nonempty");
    for v in p.difference(g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        let mut r2 = r;
        r2.insert(v);
        bron_kerbosch(g, r2, p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Tags each minimal vertex cover with its catalogue form.
///
/// Requires a valid partition with a nonempty `v3`; a cover matching neither
/// form is reported as an error.
pub fn classify_covers(g: &Graph, p: &Partition) -> Result<Vec<(VertexSet, CoverForm)>> {
    if !p.has_c5() {
        return Err(Error::EmptyV3);
    }
    p.validate(g)?;
    minimal_vertex_covers(g)
        .into_iter()
        .map(|cover| {
            classify_one(g, p, cover)
                .map(|form| (cover, form))
                .ok_or_else(|| Error::UncataloguedCover(g.format_set(cover)))
        })
        .collect()
}

fn classify_one(g: &Graph, p: &Partition, cover: VertexSet) -> Option<CoverForm> {
    let on_cycle = cover.intersection(p.v3);
    if cover.difference(p.v3) == p.v2 && on_cycle.len() == 3 {
        let pts = on_cycle.to_vec();
        for &c in &pts {
            let others: Vec<usize> = pts.iter().copied().filter(|&v| v != c).collect();
            let (a, b) = (others[0], others[1]);
            if g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c) {
                return Some(CoverForm::TypeI { a, b, c });
            }
        }
    }
    p.v2
        .iter()
        .find(|&z| g.neighbors(z) == cover)
        .map(|center| CoverForm::TypeII { center })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::recognize_c4_2k2;

    fn brute_force_covers(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut out: Vec<VertexSet> = (0u64..1 << n)
            .map(VertexSet)
            .filter(|&s| g.is_vertex_cover(s))
            .filter(|&s| {
                s.iter()
                    .all(|v| !g.is_vertex_cover(s.difference(VertexSet::singleton(v))))
            })
            .collect();
        out.sort_by_key(|c| c.to_vec());
        out
    }

    fn names(g: &Graph, sets: &[VertexSet]) -> Vec<String> {
        sets.iter().map(|&s| g.format_set(s)).collect()
    }

    #[test]
    fn c4_covers() {
        let g = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        assert_eq!(names(&g, &minimal_vertex_covers(&g)), ["{a,c}", "{b,d}"]);
    }

    #[test]
    fn c5_covers_match_catalogue() {
        let g = Graph::cycle(5, "u");
        let got: std::collections::BTreeSet<String> =
            names(&g, &minimal_vertex_covers(&g)).into_iter().collect();
        let expected: std::collections::BTreeSet<String> = [
            "{u1,u2,u4}",
            "{u2,u4,u5}",
            "{u2,u3,u5}",
            "{u1,u3,u4}",
            "{u1,u3,u5}",
        ]
        .into_iter()
        .map(String::from)
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn edgeless_graph_has_empty_cover() {
        let g = Graph::new(["a", "b"]).unwrap();
        assert_eq!(minimal_vertex_covers(&g), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn matches_brute_force_on_all_five_vertex_graphs() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        for mask in (0u32..1 << pairs.len()).step_by(7) {
            let mut g = Graph::new(["a", "b", "c", "d", "e"]).unwrap();
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
            assert_eq!(minimal_vertex_covers(&g), brute_force_covers(&g));
        }
    }

    #[test]
    fn classify_c5() {
        let g = Graph::cycle(5, "u");
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        let tagged = classify_covers(&g, &p).unwrap();
        assert_eq!(tagged.len(), 5);
        assert!(tagged
            .iter()
            .all(|(_, f)| matches!(f, CoverForm::TypeI { .. })));
    }

    #[test]
    fn classify_order_sensitive_graph() {
        let g = crate::fixtures::order_sensitive_graph();
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        let tagged = classify_covers(&g, &p).unwrap();
        let b = g.index_of("b").unwrap();
        let type2: Vec<_> = tagged
            .iter()
            .filter(|(_, f)| matches!(f, CoverForm::TypeII { .. }))
            .collect();
        assert_eq!(type2.len(), 1);
        assert_eq!(type2[0].1, CoverForm::TypeII { center: b });
        assert_eq!(g.format_set(type2[0].0), "{a,c,d,e,f,g}");
        let type1: Vec<_> = tagged
            .iter()
            .filter(|(_, f)| matches!(f, CoverForm::TypeI { .. }))
            .collect();
        assert_eq!(type1.len(), 5);
        for (cover, _) in type1 {
            assert!(cover.contains(b));
            assert_eq!(cover.len(), 4);
        }
        // brute force agrees
        assert_eq!(
            minimal_vertex_covers(&g),
            brute_force_covers(&g)
        );
    }

    #[test]
    fn classify_rejects_split_partitions() {
        let g = Graph::complete(3, "k");
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        assert_eq!(classify_covers(&g, &p).unwrap_err(), Error::EmptyV3);
    }
}
