use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, MonomialIdeal, Ring};
use crate::graph::{random_c4_2k2_graph, Graph};

/// Corpus sizes for the reproduction suites.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Random free graphs for the edge-ideal regularity bound.
    pub edge_graphs: usize,
    /// Random free graphs with a 5-cycle part, for powers.
    pub power_graphs: usize,
    /// Random free graphs without a 5-cycle part.
    pub split_graphs: usize,
    pub max_vertices: usize,
    pub n1_max: usize,
    pub n2_max: usize,
    pub max_power: u32,
    /// Edge-ideal cubes are only taken up to this many vertices.
    pub cube_max_vertices: usize,
    pub oracle_ideals: usize,
    pub oracle_max_gens: usize,
    pub oracle_max_vars: usize,
    pub max_exponent: u32,
    /// Cases per randomized property.
    pub property_cases: usize,
    /// Vertex bound for arbitrary random graphs in the properties.
    pub random_graph_max_vertices: usize,
    /// Graphs whose full colon chain is checked.
    pub chain_graphs: usize,
    pub chain_max_power: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            edge_graphs: 100,
            power_graphs: 30,
            split_graphs: 20,
            max_vertices: 8,
            n1_max: 4,
            n2_max: 3,
            max_power: 3,
            cube_max_vertices: 6,
            oracle_ideals: 200,
            oracle_max_gens: 10,
            oracle_max_vars: 6,
            max_exponent: 3,
            property_cases: 60,
            random_graph_max_vertices: 7,
            chain_graphs: 8,
            chain_max_power: 2,
        }
    }
}

impl SuiteConfig {
    /// A small configuration for smoke tests.
    pub fn quick() -> Self {
        SuiteConfig {
            edge_graphs: 10,
            power_graphs: 4,
            split_graphs: 3,
            max_vertices: 7,
            max_power: 2,
            oracle_ideals: 10,
            property_cases: 6,
            chain_graphs: 2,
            chain_max_power: 1,
            ..Default::default()
        }
    }
}

/// Which random free graphs to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleChoice {
    Any,
    With,
    Without,
}

/// `count` random (C4, 2K2)-free graphs with at least one edge, a pure
/// function of the arguments.
pub fn free_graph_corpus(seed: u64, count: usize, cfg: &SuiteConfig, cycle: CycleChoice) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let with_c5 = match cycle {
            CycleChoice::Any => rng.random_bool(0.5),
            CycleChoice::With => true,
            CycleChoice::Without => false,
        };
        let n1 = rng.random_range(0..=cfg.n1_max);
        let n2 = rng.random_range(0..=cfg.n2_max);
        let density = rng.random_range(0.2..0.9);
        let sub_seed: u64 = rng.random();
        if n1 + n2 + if with_c5 { 5 } else { 0 } > cfg.max_vertices {
            continue;
        }
        let (g, _) = random_c4_2k2_graph(n1, n2, with_c5, density, sub_seed);
        if g.edge_count() > 0 {
            out.push(g);
        }
    }
    out
}

/// Erdős-Rényi graph on `v1..vn`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new((1..=n).map(|i| format!("v{i}"))).expect("unique labels");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// `count` random graphs with at least one edge and `2..=max_n` vertices.
pub fn random_graph_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(2..=max_n);
        let p = rng.random_range(0.2..0.8);
        let g = random_graph(n, p, rng.random());
        if g.edge_count() > 0 {
            out.push(g);
        }
    }
    out
}

/// A random proper nonzero monomial ideal in `1..=max_vars` variables.
pub fn random_monomial_ideal(rng: &mut impl Rng, max_vars: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let nvars = rng.random_range(1..=max_vars);
    let ring = Ring::new((1..=nvars).map(|i| format!("x{i}")));
    let ngens = rng.random_range(1..=max_gens);
    let mut gens = Vec::with_capacity(ngens);
    while gens.len() < ngens {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.random_range(0..=max_exp)).collect();
        let m = Monomial::from_exponents(&exps);
        if !m.is_one() {
            gens.push(m);
        }
    }
    MonomialIdeal::new(ring, gens).expect("generators lie in the ring")
}

pub fn monomial_ideal_corpus(seed: u64, count: usize, max_vars: usize, max_gens: usize, max_exp: u32) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_monomial_ideal(&mut rng, max_vars, max_gens, max_exp))
        .collect()
}
