//! Combinatorics and homological algebra for (C4, 2K2)-free graphs.
//!
//! The crate recognises (C4, 2K2)-free graphs and extracts their three-part
//! structure, builds edge ideals, cover ideals and their powers, computes
//! graded Betti numbers and Castelnuovo-Mumford regularity from scratch, and
//! certifies linear quotients with replayable certificates.
//!
//! ```
//! use idealis::algebra::edge_ideal;
//! use idealis::graph::Graph;
//! use idealis::resolution::{regularity, Field};
//!
//! let c5 = Graph::cycle(5, "u");
//! assert_eq!(regularity(&edge_ideal(&c5), Field::Rationals).unwrap(), 3);
//! ```

pub mod algebra;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod lab;
pub mod quotients;
pub mod resolution;

pub use algebra::{cover_ideal, edge_ideal, Monomial, MonomialIdeal, OrderedGenerators, Ring};
pub use error::{Error, Result};
pub use graph::{recognize_c4_2k2, Graph, Partition, Recognition, VertexSet};
pub use quotients::LinearQuotientsCertificate;
pub use resolution::{regularity, BettiTable, Field};
