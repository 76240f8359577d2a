//! Monomials, monomial ideals and the operations the rest of the crate is
//! built on.

mod graph_ideals;
mod ideal;
mod monomial;
mod order;
mod polarize;

pub use graph_ideals::{cover_ideal, edge_ideal, vertex_set_monomial};
pub use ideal::{minimalize, IdealJson, MonomialIdeal, Ring};
pub use monomial::{Monomial, MonomialDisplay};
pub use order::{induced_power_order, factorizations, lex_max_expression, OrderedGenerators, Provenance};
pub use polarize::{polarize, Polarization};
