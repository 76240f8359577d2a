//! Simple graphs on at most 64 labelled vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, which keeps the
//! exhaustive pattern searches and the clique enumeration cheap at the sizes
//! this crate targets.

mod chordal;
mod covers;
mod patterns;
mod random;
mod recognize;

pub use chordal::{is_chordal, perfect_elimination_order};
pub use covers::{classify_covers, minimal_vertex_covers, CoverForm};
pub use patterns::{find_induced, Pattern};
pub use random::random_c4_2k2_graph;
pub use recognize::{recognize_c4_2k2, Partition, Recognition};

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices, packed into a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// The first `n` vertices.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter)
    }
}

/// An undirected simple graph with string vertex labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                count: labels.len(),
                max: MAX_VERTICES,
            });
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from labelled edges; vertices appear in first-mention order.
    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Self> {
        let mut labels: Vec<&str> = Vec::new();
        for &(u, v) in edges {
            for l in [u, v] {
                if !labels.contains(&l) {
                    labels.push(l);
                }
            }
        }
        let mut g = Graph::new(labels.iter().copied())?;
        for &(u, v) in edges {
            let (a, b) = (g.index_of(u).unwrap(), g.index_of(v).unwrap());
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// The cycle `prefix1 - prefix2 - ... - prefixN - prefix1`.
    pub fn cycle(n: usize, prefix: &str) -> Self {
        let mut g = Graph::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("labels");
        for i in 0..n {
            g.add_edge(i, (i + 1) % n).expect("cycle edge");
        }
        g
    }

    pub fn complete(n: usize, prefix: &str) -> Self {
        let mut g = Graph::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("labels");
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j).expect("clique edge");
            }
        }
        g
    }

    pub fn path(n: usize, prefix: &str) -> Self {
        let mut g = Graph::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("labels");
        for i in 1..n {
            g.add_edge(i - 1, i).expect("path edge");
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::UnknownVertex(format!("#{w}")));
            }
        }
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Largest vertex degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v] == 0
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.is_isolated(v)).collect()
    }

    /// Whether `set` spans no edge.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.neighbors(v).is_disjoint(set))
    }

    /// Whether every pair in `set` is adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    /// Whether every edge has an endpoint in `set`.
    pub fn is_vertex_cover(&self, set: VertexSet) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| set.contains(u) || set.contains(v))
    }

    /// Number of edges inside `set`.
    pub fn induced_edge_count(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| self.neighbors(v).intersection(set).len())
            .sum::<usize>()
            / 2
    }

    /// The complement graph on the same labels.
    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = (0..self.n())
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        Graph {
            labels: self.labels.clone(),
            adj,
        }
    }

    /// Induced subgraph on `keep`, relabelled densely in index order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let idx: Vec<usize> = keep.iter().collect();
        let mut g = Graph::new(idx.iter().map(|&v| self.labels[v].clone())).expect("subset labels");
        for (i, &u) in idx.iter().enumerate() {
            for (j, &v) in idx.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(i, j).expect("induced edge");
                }
            }
        }
        g
    }

    /// `G - set`.
    pub fn remove(&self, set: VertexSet) -> Graph {
        self.induced(self.vertices().difference(set))
    }

    /// Comma-separated labels of a vertex set.
    pub fn format_set(&self, set: VertexSet) -> String {
        let parts: Vec<&str> = set.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Parses the edge-list text format.
    ///
    /// One edge per line as two whitespace-separated labels, `#` starts a
    /// comment line, and `vertex <label>` declares a vertex without edges.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut intern = |l: &str, line: usize| -> Result<usize> {
            if l.is_empty() || !l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Parse {
                    line,
                    message: format!("invalid vertex label `{l}`"),
                });
            }
            if let Some(&i) = index.get(l) {
                return Ok(i);
            }
            labels.push(l.to_string());
            index.insert(l.to_string(), labels.len() - 1);
            Ok(labels.len() - 1)
        };
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = trimmed.split_whitespace().collect();
            match toks.as_slice() {
                ["vertex", l] => {
                    intern(l, line)?;
                }
                [u, v] => {
                    let a = intern(u, line)?;
                    let b = intern(v, line)?;
                    if a == b {
                        return Err(Error::Parse {
                            line,
                            message: format!("self-loop on `{u}`"),
                        });
                    }
                    edges.push((a, b));
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected `u v` or `vertex u`, got `{trimmed}`"),
                    })
                }
            }
        }
        let mut g = Graph::new(labels)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Writes the edge-list text format; isolated vertices get `vertex` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in self.isolated_vertices().iter() {
            out.push_str(&format!("vertex {}\n", self.labels[v]));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", self.labels[u], self.labels[v]));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}{}", self.labels[u], self.labels[v]))
            .collect();
        write!(f, "Graph({:?}; {})", self.labels, edges.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_c4_is_two_k2() {
        let c4 = Graph::cycle(4, "v");
        let co = c4.complement();
        assert_eq!(co.edge_count(), 2);
        assert_eq!(co.edges(), vec![(0, 2), (1, 3)]);
        assert!((0..4).all(|v| co.degree(v) == 1));
    }

    #[test]
    fn complement_of_k3_is_edgeless() {
        let co = Graph::complete(3, "k").complement();
        assert_eq!(co.edge_count(), 0);
        assert_eq!(co.isolated_vertices().len(), 3);
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::cycle(5, "u").max_degree(), 2);
        assert_eq!(Graph::complete(6, "k").max_degree(), 5);
        assert_eq!(Graph::new(["a", "b"]).unwrap().max_degree(), 0);
    }

    #[test]
    fn parse_round_trip_with_isolated_vertices() {
        let text = "# a comment\nvertex q\na b\nb c\n\nvertex a\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.labels(), ["q", "a", "b", "c"]);
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_isolated(0));
        let again = Graph::parse(&g.to_text()).unwrap();
        assert_eq!(again.edge_count(), 2);
        assert_eq!(again.n(), 4);
    }

    #[test]
    fn parse_rejects_bad_lines() {
        assert!(matches!(
            Graph::parse("a b c"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(Graph::parse("a a"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("a b-c"), Err(Error::Parse { .. })));
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert_eq!(
            Graph::new(["x", "x"]).unwrap_err(),
            Error::DuplicateVertex("x".into())
        );
    }

    #[test]
    fn too_many_vertices_rejected() {
        let labels: Vec<String> = (0..65).map(|i| format!("v{i}")).collect();
        assert!(matches!(
            Graph::new(labels),
            Err(Error::TooManyVertices { count: 65, .. })
        ));
    }

    #[test]
    fn induced_and_remove() {
        let c5 = Graph::cycle(5, "u");
        let p = c5.remove(VertexSet::singleton(0));
        assert_eq!(p.labels(), ["u2", "u3", "u4", "u5"]);
        assert_eq!(p.edge_count(), 3);
    }
}
