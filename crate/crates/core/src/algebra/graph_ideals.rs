use super::{Monomial, MonomialIdeal, Ring};
use crate::error::{Error, Result};
use crate::graph::{minimal_vertex_covers, Graph, VertexSet};

/// Squarefree monomial of a vertex set, in the graph's ring.
pub fn vertex_set_monomial(set: VertexSet) -> Monomial {
    Monomial::squarefree(set.iter())
}

/// `I(G)`, one `xy` per edge, over the ring of all vertex labels.
///
/// Isolated vertices stay in the ring but contribute nothing; an edgeless
/// graph gives the zero ideal.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let ring = Ring::new(g.labels().iter().cloned());
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::squarefree([u, v]))
        .collect();
    MonomialIdeal::new(ring, gens).expect("edge monomials lie in the vertex ring")
}

/// The cover ideal: one squarefree generator per minimal vertex cover.
///
/// Edgeless graphs are rejected since their cover ideal is the unit ideal.
pub fn cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessCoverIdeal);
    }
    let ring = Ring::new(g.labels().iter().cloned());
    let gens = minimal_vertex_covers(g)
        .into_iter()
        .map(vertex_set_monomial)
        .collect();
    MonomialIdeal::new(ring, gens)
}
