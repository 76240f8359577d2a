//! Named example objects used throughout the tests, benches and CLI.

use crate::algebra::MonomialIdeal;
use crate::graph::Graph;

/// Edges of the 7-vertex graph with `V1 = {a}`, `V2 = {b}` and the 5-cycle
/// `c-d-e-f-g`.
pub const ORDER_SENSITIVE_EDGES: [(&str, &str); 11] = [
    ("a", "b"),
    ("b", "c"),
    ("b", "d"),
    ("b", "e"),
    ("b", "f"),
    ("b", "g"),
    ("c", "d"),
    ("d", "e"),
    ("e", "f"),
    ("f", "g"),
    ("g", "c"),
];

pub fn order_sensitive_graph() -> Graph {
    Graph::from_edges(&ORDER_SENSITIVE_EDGES).expect("fixed edge list")
}

/// A cubic ideal with linear quotients whose square has
/// regularity 7.
pub fn nonlinear_square_ideal() -> MonomialIdeal {
    MonomialIdeal::parse("vars a b c d e f\nd*e*f\nc*e*f\nc*d*f\nc*d*e\nb*e*f\nb*c*d\na*c*f\na*d*e")
        .expect("fixed ideal")
}

/// Printed generator order of [`nonlinear_square_ideal`].
pub const NONLINEAR_SQUARE_PRINTED: [&str; 8] = ["def", "cef", "cdf", "cde", "bef", "bcd", "acf", "ade"];
