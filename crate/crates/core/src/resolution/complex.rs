use std::collections::{HashMap, HashSet};

use super::linalg::{rank, Field};

/// A simplicial complex on vertices `0..n`, stored by its facets.
///
/// Faces are `u64` bitmasks. The void complex has no faces at all; the
/// empty complex `{∅}` has the single facet `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Keeps only the inclusion-maximal sets.
    pub fn from_facets(n: usize, mut sets: Vec<u64>) -> Self {
        assert!(n <= 64, "at most 64 vertices");
        sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
        sets.dedup();
        let mut facets: Vec<u64> = Vec::new();
        for s in sets {
            if !facets.iter().any(|&f| s & !f == 0) {
                facets.push(s);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![] }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex::from_facets(n, vec![full_mask(n)])
    }

    /// Boundary of the simplex on `n` vertices, a sphere of dimension `n - 2`.
    pub fn simplex_boundary(n: usize) -> Self {
        let full = full_mask(n);
        SimplicialComplex::from_facets(n, (0..n).map(|v| full & !(1 << v)).collect())
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, `-1` for `{∅}` and `None` for the void complex.
    pub fn dimension(&self) -> Option<i32> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i32 - 1)
            .max()
    }

    /// Every face, including `∅` when the complex is not void.
    pub fn faces(&self) -> Vec<u64> {
        let mut seen = HashSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut v: Vec<u64> = seen.into_iter().collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Ranks of reduced homology in dimensions `-1, 0, ..., dim`; entry `k`
    /// holds dimension `k - 1`. Empty for the void complex.
    pub fn reduced_homology_ranks(&self, field: Field) -> Vec<usize> {
        reduced_homology_of_faces(&self.faces(), field)
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Reduced homology from an explicit downward-closed face list.
pub(crate) fn reduced_homology_of_faces(faces: &[u64], field: Field) -> Vec<usize> {
    if faces.is_empty() {
        return vec![];
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    // by_size[k] = faces with k vertices, i.e. dimension k - 1
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank_boundary[k] = rank of the map from k-vertex faces to (k-1)-vertex faces
    let mut rank_boundary = vec![0usize; top + 2];
    for k in 1..=top {
        let lower: HashMap<u64, usize> = by_size[k - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        if by_size[k].is_empty() || lower.is_empty() {
            continue;
        }
        let rows: Vec<Vec<i64>> = by_size[k]
            .iter()
            .map(|&face| {
                let mut row = vec![0i64; lower.len()];
                let mut bits = face;
                let mut pos = 0;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    bits &= bits - 1;
                    let col = lower[&(face & !(1u64 << v))];
                    row[col] = if pos % 2 == 0 { 1 } else { -1 };
                    pos += 1;
                }
                row
            })
            .collect();
        rank_boundary[k] = rank(&rows, field);
    }
    (0..=top)
        .map(|k| by_size[k].len() - rank_boundary[k] - rank_boundary[k + 1])
        .collect()
}

/// All sets reachable from `∅` by adding vertices in increasing order while
/// `is_face` holds. Correct for any downward-closed predicate.
pub(crate) fn enumerate_faces(n: usize, is_face: impl Fn(u64) -> bool) -> Vec<u64> {
    let mut out = Vec::new();
    if !is_face(0) {
        return out;
    }
    let mut stack = vec![(0u64, 0usize)];
    while let Some((face, next)) = stack.pop() {
        out.push(face);
        for v in next..n {
            let bigger = face | 1 << v;
            if is_face(bigger) {
                stack.push((bigger, v + 1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle() {
        // boundary of a triangle
        let k = SimplicialComplex::simplex_boundary(3);
        assert_eq!(k.facets().len(), 3);
        assert_eq!(k.reduced_homology_ranks(Field::Rationals), vec![0, 0, 1]);
    }

    #[test]
    fn simplex_is_acyclic() {
        for n in 1..6 {
            let h = SimplicialComplex::simplex(n).reduced_homology_ranks(Field::Rationals);
            assert!(h.iter().all(|&r| r == 0), "{n}: {h:?}");
        }
    }

    #[test]
    fn three_sphere() {
        let h = SimplicialComplex::simplex_boundary(5).reduced_homology_ranks(Field::Rationals);
        assert_eq!(h, vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn empty_and_void() {
        let empty = SimplicialComplex::from_facets(3, vec![0]);
        assert_eq!(empty.dimension(), Some(-1));
        assert_eq!(empty.reduced_homology_ranks(Field::Rationals), vec![1]);
        let void = SimplicialComplex::void(3);
        assert_eq!(void.dimension(), None);
        assert!(void.reduced_homology_ranks(Field::Rationals).is_empty());
    }

    #[test]
    fn two_points_and_projective_plane() {
        let two = SimplicialComplex::from_facets(2, vec![0b01, 0b10]);
        assert_eq!(two.reduced_homology_ranks(Field::Rationals), vec![0, 1]);
        // 6-vertex triangulation of RP^2: torsion Z/2 in H_1
        let tri = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets = tri
            .iter()
            .map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let rp2 = SimplicialComplex::from_facets(6, facets);
        assert_eq!(rp2.reduced_homology_ranks(Field::Rationals), vec![0, 0, 0, 0]);
        assert_eq!(rp2.reduced_homology_ranks(Field::GF2), vec![0, 0, 1, 1]);
    }

    #[test]
    fn facets_are_an_antichain() {
        let k = SimplicialComplex::from_facets(4, vec![0b0011, 0b0001, 0b0111, 0b1000, 0b0111]);
        assert_eq!(k.facets(), [0b0111, 0b1000]);
        assert!(k.contains(0b0101));
        assert!(!k.contains(0b1001));
    }

    #[test]
    fn enumerate_matches_facet_expansion() {
        let k = SimplicialComplex::from_facets(5, vec![0b00111, 0b11100, 0b01010]);
        let mut a = enumerate_faces(5, |f| k.contains(f));
        a.sort_unstable();
        assert_eq!(a, k.faces());
    }
}
