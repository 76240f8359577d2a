//! Shared inputs for the benchmarks.

use idealis::lab::{free_graph_corpus, CycleChoice, SuiteConfig};
use idealis::Graph;

/// A fixed set of (C4, 2K2)-free graphs on at most `max_vertices` vertices.
pub fn bench_graphs(count: usize, max_vertices: usize) -> Vec<Graph> {
    let cfg = SuiteConfig {
        max_vertices,
        ..SuiteConfig::default()
    };
    free_graph_corpus(42, count, &cfg, CycleChoice::With)
}
