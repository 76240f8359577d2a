use super::{Graph, VertexSet};

/// Induced-subgraph patterns used by the recognition and chordality code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    C4,
    TwoK2,
    C5,
    /// Any induced cycle of length at least 4.
    CycleGe4,
    /// Any induced subgraph whose complement is a cycle of length at least 5.
    CycleComplementGe5,
}

/// Returns a vertex set inducing `pattern`, or `None` if `g` has no such
/// induced subgraph.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<VertexSet> {
    match pattern {
        Pattern::C4 => find_regular_subset(g, 4, 2),
        Pattern::TwoK2 => find_regular_subset(g, 4, 1),
        // A 2-regular graph on five vertices is connected, hence C5.
        Pattern::C5 => find_regular_subset(g, 5, 2),
        Pattern::CycleGe4 => chordless_cycle(g),
        Pattern::CycleComplementGe5 => induced_cycle_at_least(&g.complement(), 5),
    }
}

/// Exhaustive search for a `k`-subset inducing a `d`-regular subgraph.
fn find_regular_subset(g: &Graph, k: usize, d: usize) -> Option<VertexSet> {
    let n = g.n();
    if n < k {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    search_subsets(g, 0, k, d, &mut chosen)
}

fn search_subsets(
    g: &Graph,
    start: usize,
    k: usize,
    d: usize,
    chosen: &mut Vec<usize>,
) -> Option<VertexSet> {
    if chosen.len() == k {
        let set = VertexSet::from_indices(chosen.iter().copied());
        let regular = chosen
            .iter()
            .all(|&v| g.neighbors(v).intersection(set).len() == d);
        return regular.then_some(set);
    }
    let partial = VertexSet::from_indices(chosen.iter().copied());
    // prune: no chosen vertex may already exceed degree d
    if chosen
        .iter()
        .any(|&v| g.neighbors(v).intersection(partial).len() > d)
    {
        return None;
    }
    let remaining = k - chosen.len();
    for v in start..=g.n() - remaining {
        chosen.push(v);
        if let Some(found) = search_subsets(g, v + 1, k, d, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Chordless cycle of length >= 4 in polynomial time.
///
/// Every such cycle passes through some vertex `v` with two non-adjacent
/// neighbours `a`, `b` joined by a path avoiding the rest of `N[v]`; a
/// shortest such path closes an induced cycle.
fn chordless_cycle(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    for v in 0..n {
        let nb = g.neighbors(v).to_vec();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.adjacent(a, b) {
                    continue;
                }
                let blocked = g
                    .closed_neighbors(v)
                    .difference(VertexSet::from_indices([a, b]));
                if let Some(path) = shortest_path(g, a, b, blocked) {
                    let mut set = VertexSet::from_indices(path);
                    set.insert(v);
                    return Some(set);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: VertexSet) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = blocked;
    seen.insert(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            return Some(path);
        }
        for w in g.neighbors(u).difference(seen).iter() {
            seen.insert(w);
            prev[w] = u;
            queue.push_back(w);
        }
    }
    None
}

/// Induced cycle with at least `min_len` vertices, by extending induced
/// paths from their smallest vertex. Exponential, fine at desk scale.
pub(crate) fn induced_cycle_at_least(g: &Graph, min_len: usize) -> Option<VertexSet> {
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.clear();
        path.push(s);
        if extend_path(g, s, min_len, &mut path) {
            return Some(VertexSet::from_indices(path.iter().copied()));
        }
    }
    None
}

fn extend_path(g: &Graph, s: usize, min_len: usize, path: &mut Vec<usize>) -> bool {
    let last = *path.last().unwrap();
    let on_path = VertexSet::from_indices(path.iter().copied());
    let interior = on_path.difference(VertexSet::from_indices([s, last]));
    for w in g.neighbors(last).difference(on_path).iter() {
        if w < s || !g.neighbors(w).is_disjoint(interior) {
            continue;
        }
        let closes = path.len() >= 2 && g.adjacent(w, s);
        if closes {
            if path.len() + 1 >= min_len {
                path.push(w);
                return true;
            }
            continue;
        }
        path.push(w);
        if extend_path(g, s, min_len, path) {
            return true;
        }
        path.pop();
    }
    false
}
