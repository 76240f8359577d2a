use super::{Graph, VertexSet};

/// Perfect elimination order via maximum cardinality search, or `None` if
/// the graph has an induced cycle of length 4 or more.
///
/// In the returned order every vertex's later neighbours form a clique.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = VertexSet::EMPTY;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex");
        numbered.insert(v);
        visit.push(v);
        for w in g.neighbors(v).difference(numbered).iter() {
            weight[w] += 1;
        }
    }
    visit.reverse();
    is_perfect_elimination_order(g, &visit).then_some(visit)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

pub(crate) fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order.iter().enumerate().all(|(i, &v)| {
        let later: VertexSet = g.neighbors(v).iter().filter(|&w| position[w] > i).collect();
        match later.iter().min_by_key(|&w| position[w]) {
            None => true,
            Some(u) => later
                .difference(VertexSet::singleton(u))
                .is_subset(g.neighbors(u)),
        }
    })
}
