//! Reproduction suites: seeded corpora, checked claims and JSON reports.

mod chain;
mod corpus;
mod neighbor;
mod report;
mod suites;

pub use chain::{a_before_b_edge_order, edge_order_starting_with, verify_colon_chain, verify_colon_chain_with_order};
pub use corpus::{
    free_graph_corpus, monomial_ideal_corpus, random_graph, random_graph_corpus, random_monomial_ideal,
    CycleChoice, SuiteConfig,
};
pub use neighbor::verify_neighbor_bound;
pub use report::{input_hash, CaseRecord, SuiteReport, SCHEMA_VERSION};
pub use suites::{
    criterion_suites, suite_betti_oracle, suite_colon_chain, suite_cover_power_orders,
    suite_cover_power_regularity, suite_edge_regularity, suite_linear_edge_powers, suite_nonlinear_square,
    suite_order_sensitivity, suite_properties, suite_reproduce, CRITERIA, DEFAULT_SEED,
};
