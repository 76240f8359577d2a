use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::chain::verify_colon_chain;
use super::corpus::{free_graph_corpus, monomial_ideal_corpus, random_graph_corpus, CycleChoice, SuiteConfig};
use super::neighbor::verify_neighbor_bound;
use super::report::{run_case, CaseRecord, CaseSpec, Outcome, SuiteReport};
use crate::algebra::{cover_ideal, edge_ideal, factorizations, polarize, Monomial, MonomialIdeal, Ring};
use crate::error::{Error, Result};
use crate::fixtures::{nonlinear_square_ideal, order_sensitive_graph};
use crate::graph::{is_chordal, minimal_vertex_covers, recognize_c4_2k2, Graph, Partition};
use crate::quotients::{
    check_linear_quotients_order, check_products_minimal, cover_power_order, find_linear_quotients, OrderCheck,
    SearchOutcome,
};
use crate::resolution::{betti_table, has_linear_resolution, regularity, taylor_betti_oracle, Field};

pub const DEFAULT_SEED: u64 = 2026;

const FIELDS: [Field; 2] = [Field::Rationals, Field::GF2];

/// The eight acceptance suites, in order.
pub const CRITERIA: [&str; 8] = [
    "nonlinear-square",
    "order-sensitivity",
    "edge-regularity",
    "linear-edge-powers",
    "cover-power-orders",
    "cover-power-regularity",
    "betti-oracle",
    "properties",
];

fn partition_of(g: &Graph) -> Result<Partition> {
    recognize_c4_2k2(g).into_partition().ok_or(Error::NotC4TwoK2Free)
}

/// Independent sub-seed for suite `k`.
fn sub_seed(seed: u64, k: u64) -> u64 {
    ChaCha8Rng::seed_from_u64(seed ^ k.wrapping_mul(0x9e37_79b9_7f4a_7c15)).random()
}

struct Job<'a> {
    spec: CaseSpec<'static>,
    run: Box<dyn Fn() -> Outcome + Send + Sync + 'a>,
}

fn job<'a>(id: String, anchor: &'static str, claim: String, input: String, run: impl Fn() -> Outcome + Send + Sync + 'a) -> Job<'a> {
    Job {
        spec: CaseSpec { id, anchor, claim, input },
        run: Box::new(run),
    }
}

fn run_jobs(suite: &str, jobs: Vec<Job<'_>>) -> SuiteReport {
    let cases: Vec<CaseRecord> = jobs
        .into_par_iter()
        .map(|j| run_case(j.spec, || (j.run)()))
        .collect();
    SuiteReport::new(suite, cases)
}

fn equal(computed: Value, expected: Value) -> Outcome {
    let pass = computed == expected;
    Ok((computed, expected, pass))
}

pub fn suite_nonlinear_square() -> SuiteReport {
    let ideal = nonlinear_square_ideal();
    let text = ideal.to_text();
    let anchor = "nonlinear-square-example";
    let i = &ideal;
    let mut jobs = vec![
        job("nonlinear-square/linear-quotients".into(), anchor, "I has linear quotients".into(), text.clone(), move || {
            let found = match find_linear_quotients(i)? {
                SearchOutcome::Found(c) => c.replay(),
                SearchOutcome::NoneExists => false,
            };
            equal(json!(found), json!(true))
        }),
        job("nonlinear-square/reg-I".into(), anchor, "reg(I) = 3".into(), text.clone(), move || {
            equal(json!(regularity(i, Field::Rationals)?), json!(3))
        }),
    ];
    for field in FIELDS {
        jobs.push(job(
            format!("nonlinear-square/reg-I2/{}", field.tag()),
            anchor,
            "reg(I^2) = 7".into(),
            text.clone(),
            move || equal(json!(regularity(&i.power(2)?, field)?), json!(7)),
        ));
        jobs.push(job(
            format!("nonlinear-square/linear-I2/{}", field.tag()),
            anchor,
            "I^2 does not have a linear resolution".into(),
            text.clone(),
            move || equal(json!(has_linear_resolution(&i.power(2)?, field)?), json!(false)),
        ));
    }
    run_jobs(CRITERIA[0], jobs)
}

pub fn suite_order_sensitivity() -> SuiteReport {
    let g = order_sensitive_graph();
    let text = g.to_text();
    let g = &g;
    let jobs = vec![job(
        "order-sensitivity/reg-colon".into(),
        "order-sensitivity-example",
        "reg(I(G)^2 : ab) = 3".into(),
        format!("{text}power 2\nby a*b"),
        move || {
            let i = edge_ideal(g);
            let ab = i.ring().parse_monomial("a*b")?;
            equal(json!(regularity(&i.power(2)?.colon(&ab)?, Field::Rationals)?), json!(3))
        },
    )];
    run_jobs(CRITERIA[1], jobs)
}

pub fn suite_edge_regularity(seed: u64, cfg: &SuiteConfig) -> SuiteReport {
    let graphs = free_graph_corpus(seed, cfg.edge_graphs, cfg, CycleChoice::Any);
    let jobs = graphs
        .iter()
        .enumerate()
        .map(|(k, g)| {
            job(format!("edge-regularity/g{k}"), "edge-regularity-bound", "reg I(G) <= 3".into(), g.to_text(), move || {
                partition_of(g)?;
                let r = regularity(&edge_ideal(g), Field::Rationals)?;
                Ok((json!(r), json!({ "at_most": 3 }), r <= 3))
            })
        })
        .collect();
    run_jobs(CRITERIA[2], jobs)
}

pub fn suite_linear_edge_powers(seed: u64, cfg: &SuiteConfig) -> SuiteReport {
    let graphs = free_graph_corpus(seed, cfg.power_graphs, cfg, CycleChoice::With);
    let mut jobs = Vec::new();
    for (k, g) in graphs.iter().enumerate() {
        let top = if g.n() <= cfg.cube_max_vertices { 3 } else { 2 };
        for s in 2..=top.min(cfg.max_power.max(2)) {
            jobs.push(job(
                format!("linear-edge-powers/g{k}/s{s}"),
                "linear-edge-powers",
                format!("I(G)^{s} has a linear resolution"),
                format!("{}power {s}", g.to_text()),
                move || {
                    if !partition_of(g)?.has_c5() {
                        return Err(Error::EmptyV3);
                    }
                    equal(json!(has_linear_resolution(&edge_ideal(g).power(s)?, Field::Rationals)?), json!(true))
                },
            ));
        }
    }
    run_jobs(CRITERIA[3], jobs)
}

/// Graphs for the cover-ideal suites: the 5-cycle with up to two isolated
/// vertices, the power corpus and a split corpus.
fn cover_corpus(seed: u64, cfg: &SuiteConfig) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for extra in 0..=2usize {
        let mut labels: Vec<String> = (1..=5).map(|i| format!("u{i}")).collect();
        labels.extend((1..=extra).map(|i| format!("w{i}")));
        let mut g = Graph::new(labels).expect("unique labels");
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
        }
        out.push((format!("c5+{extra}"), g));
    }
    let with = free_graph_corpus(seed, cfg.power_graphs, cfg, CycleChoice::With);
    out.extend(with.into_iter().enumerate().map(|(k, g)| (format!("g{k}"), g)));
    let split = free_graph_corpus(seed.wrapping_add(1), cfg.split_graphs, cfg, CycleChoice::Without);
    out.extend(split.into_iter().enumerate().map(|(k, g)| (format!("split{k}"), g)));
    out
}

pub fn suite_cover_power_orders(seed: u64, cfg: &SuiteConfig) -> SuiteReport {
    let graphs = cover_corpus(seed, cfg);
    let mut jobs = Vec::new();
    for (name, g) in &graphs {
        for s in 1..=cfg.max_power {
            jobs.push(job(
                format!("cover-power-orders/{name}/s{s}"),
                "cover-power-linear-quotients",
                format!("the cover power order on J(G)^{s} has linear quotients"),
                format!("{}power {s}", g.to_text()),
                move || {
                    let p = partition_of(g)?;
                    let order = cover_power_order(g, &p, s)?;
                    let verdict = match check_linear_quotients_order(&order) {
                        OrderCheck::Certified(c) => {
                            json!({ "certified": c.replay(), "generators": order.order().len() })
                        }
                        OrderCheck::Failed { step, witness } => {
                            json!({ "certified": false, "step": step, "witness": order.ideal().show(&witness) })
                        }
                    };
                    let pass = verdict["certified"] == json!(true);
                    Ok((verdict, json!({ "certified": true }), pass))
                },
            ));
        }
    }
    run_jobs(CRITERIA[4], jobs)
}

pub fn suite_cover_power_regularity(seed: u64, cfg: &SuiteConfig) -> SuiteReport {
    let graphs = cover_corpus(seed, cfg);
    let mut jobs = Vec::new();
    for (name, g) in &graphs {
        for s in 1..=cfg.max_power {
            jobs.push(job(
                format!("cover-power-regularity/{name}/s{s}"),
                "cover-power-regularity",
                format!("reg J(G)^{s} is 3s when G is a 5-cycle plus isolated vertices, else s * max degree"),
                format!("{}power {s}", g.to_text()),
                move || {
                    let p = partition_of(g)?;
                    let expected = if p.has_c5() && p.v2.is_empty() {
                        3 * s as i64
                    } else {
                        s as i64 * g.max_degree() as i64
                    };
                    let r = regularity(&cover_ideal(g)?.power(s)?, Field::Rationals)?;
                    equal(json!(r), json!(expected))
                },
            ));
        }
    }
    run_jobs(CRITERIA[5], jobs)
}

pub fn suite_betti_oracle(seed: u64, cfg: &SuiteConfig) -> SuiteReport {
    let ideals = monomial_ideal_corpus(seed, cfg.oracle_ideals, cfg.oracle_max_vars, cfg.oracle_max_gens, cfg.max_exponent);
    let mut jobs = Vec::new();
    for (k, i) in ideals.iter().enumerate() {
        for field in FIELDS {
            jobs.push(job(
                format!("betti-oracle/i{k}/{}", field.tag()),
                "betti-oracle-agreement",
                "the lcm-lattice Betti table equals the Taylor oracle".into(),
                i.to_text(),
                move || {
                    let fast = betti_table(i, field)?.to_json();
                    let slow = taylor_betti_oracle(i, field)?.to_json();
                    equal(serde_json::to_value(fast)?, serde_json::to_value(slow)?)
                },
            ));
        }
    }
    run_jobs(CRITERIA[6], jobs)
}

/// Regularity with `(I, x)` in a ring that may gain the fresh variable `x`.
fn with_variable(i: &MonomialIdeal, var: Option<usize>) -> Result<MonomialIdeal> {
    match var {
        Some(v) => i.sum_with(&[Monomial::var(v)]),
        None => {
            let n = i.ring().len();
            let ring = Ring::new(i.ring().names().iter().cloned().chain(["t".to_string()]));
            let mut gens = i.gens().to_vec();
            gens.push(Monomial::var(n));
            MonomialIdeal::new(ring, gens)
        }
    }
}

pub fn suite_properties(seed: u64, cfg: &SuiteConfig) -> SuiteReport {
    let n = cfg.property_cases;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_graphs = random_graph_corpus(rng.random(), n, cfg.random_graph_max_vertices);
    let ideals = monomial_ideal_corpus(rng.random(), n, cfg.oracle_max_vars, cfg.oracle_max_gens, cfg.max_exponent);
    let mut small = cfg.clone();
    small.max_vertices = cfg.max_vertices.min(cfg.random_graph_max_vertices);
    let free_graphs = free_graph_corpus(rng.random(), n, &small, CycleChoice::Any);
    let c5_graphs = free_graph_corpus(rng.random(), cfg.power_graphs.min(n), cfg, CycleChoice::With);

    // variable choice for (I, x) and a monomial outside I for the colon bound
    let mut extras = Vec::with_capacity(ideals.len());
    for i in &ideals {
        let nv = i.ring().len();
        let var = if rng.random_bool(0.3) { None } else { Some(rng.random_range(0..nv)) };
        let mut m = None;
        for _ in 0..50 {
            let exps: Vec<u32> = (0..nv).map(|_| rng.random_range(0..=2)).collect();
            let cand = Monomial::from_exponents(&exps);
            if !cand.is_one() && !i.contains(&cand) {
                m = Some(cand);
                break;
            }
        }
        extras.push((var, m));
    }

    let mut jobs = Vec::new();
    for (k, g) in random_graphs.iter().enumerate() {
        jobs.push(job(
            format!("properties/co-chordal/g{k}"),
            "co-chordal-criterion",
            "reg I(G) = 2 exactly when the complement is chordal".into(),
            g.to_text(),
            move || {
                let r = regularity(&edge_ideal(g), Field::Rationals)?;
                let chordal = is_chordal(&g.complement());
                Ok((json!({ "reg": r, "complement_chordal": chordal }), json!({ "equivalent": true }), (r == 2) == chordal))
            },
        ));
    }
    for (k, (i, (var, m))) in ideals.iter().zip(&extras).enumerate() {
        jobs.push(job(
            format!("properties/polarization/i{k}"),
            "polarization-invariance",
            "polarization preserves the Betti table".into(),
            i.to_text(),
            move || {
                let pol = polarize(i).ideal;
                let (a, b) = (betti_table(i, Field::Rationals)?, betti_table(&pol, Field::Rationals)?);
                let computed = json!({ "reg": a.regularity(), "reg_polarized": b.regularity() });
                Ok((computed, json!({ "equal_tables": true }), a == b))
            },
        ));
        let var = *var;
        jobs.push(job(
            format!("properties/adding-a-variable/i{k}"),
            "adding-a-variable",
            "reg (I, x) <= reg I".into(),
            format!("{}x {var:?}", i.to_text()),
            move || {
                let before = regularity(i, Field::Rationals)?;
                let after = regularity(&with_variable(i, var)?, Field::Rationals)?;
                Ok((json!({ "reg": before, "reg_with_x": after }), json!({ "at_most_reg": true }), after <= before))
            },
        ));
        if let Some(m) = m {
            jobs.push(job(
                format!("properties/colon-sum-bound/i{k}"),
                "colon-sum-bound",
                "reg I <= max(reg(I : m) + deg m, reg(I, m))".into(),
                format!("{}m {}", i.to_text(), i.show(m)),
                move || {
                    let r = regularity(i, Field::Rationals)?;
                    let colon = regularity(&i.colon(m)?, Field::Rationals)? + m.degree() as i64;
                    let sum = regularity(&i.sum_with(std::slice::from_ref(m))?, Field::Rationals)?;
                    Ok((json!({ "reg": r, "colon_term": colon, "sum_term": sum }), json!({ "at_most": colon.max(sum) }), r <= colon.max(sum)))
                },
            ));
        }
    }
    for (k, g) in free_graphs.iter().enumerate() {
        jobs.push(job(
            format!("properties/neighbor-bound/g{k}"),
            "neighbor-bound",
            "reg I(G) is bounded by and equal to a neighbour term at every vertex".into(),
            g.to_text(),
            move || {
                let r = verify_neighbor_bound(g)?;
                let failures: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
                Ok((json!({ "vertices": r.cases.len(), "failures": failures }), json!({ "failures": [] }), r.all_pass()))
            },
        ));
    }
    let c5 = Graph::cycle(5, "u");
    let c5_covers: Vec<Monomial> = minimal_vertex_covers(&c5)
        .into_iter()
        .map(crate::algebra::vertex_set_monomial)
        .collect();
    for p in 1..=cfg.max_power {
        let covers = c5_covers.clone();
        let c5 = c5.clone();
        jobs.push(job(
            format!("properties/c5-unique-expression/p{p}"),
            "c5-unique-expression",
            format!("every generator of J(C5)^{p} is a product of {p} covers in exactly one way"),
            format!("{}power {p}", c5.to_text()),
            move || {
                let power = cover_ideal(&c5)?.power(p)?;
                let bad: Vec<String> = power
                    .gens()
                    .iter()
                    .filter(|m| factorizations(m, &covers, p).len() != 1)
                    .map(|m| power.show(m))
                    .collect();
                Ok((json!({ "generators": power.len(), "not_unique": bad }), json!({ "not_unique": [] }), bad.is_empty()))
            },
        ));
    }
    for (k, g) in c5_graphs.iter().enumerate() {
        for s in 1..=cfg.max_power {
            jobs.push(job(
                format!("properties/cover-product-minimality/g{k}/s{s}"),
                "cover-product-minimality",
                format!("every product of {s} minimal covers is a minimal generator of J(G)^{s}"),
                format!("{}power {s}", g.to_text()),
                move || {
                    let r = check_products_minimal(g, &partition_of(g)?, s)?;
                    Ok((json!({ "all_minimal": r.all_minimal, "products": r.count }), json!({ "all_minimal": true }), r.all_minimal))
                },
            ));
        }
    }
    for (k, g) in c5_graphs.iter().take(n.min(10)).enumerate() {
        for s in 1..=2u32 {
            for (kind, cover) in [("edge", false), ("cover", true)] {
                jobs.push(job(
                    format!("properties/field-consistency/g{k}/{kind}/s{s}"),
                    "field-consistency",
                    format!("reg of the {kind} ideal power {s} is the same over Q and GF(2)"),
                    format!("{}{kind} {s}", g.to_text()),
                    move || {
                        let base = if cover { cover_ideal(g)? } else { edge_ideal(g) };
                        let i = base.power(s)?;
                        let (q, f2) = (regularity(&i, Field::Rationals)?, regularity(&i, Field::GF2)?);
                        Ok((json!({ "q": q, "gf2": f2 }), json!({ "equal": true }), q == f2))
                    },
                ));
            }
        }
    }
    run_jobs(CRITERIA[7], jobs)
}

/// Full colon chains on small graphs with a 5-cycle part.
pub fn suite_colon_chain(seed: u64, cfg: &SuiteConfig) -> SuiteReport {
    let mut small = cfg.clone();
    small.max_vertices = cfg.max_vertices.min(7);
    let mut graphs = vec![Graph::cycle(5, "u"), order_sensitive_graph()];
    graphs.extend(free_graph_corpus(seed, cfg.chain_graphs, &small, CycleChoice::With));
    let mut cases = Vec::new();
    for (k, g) in graphs.iter().enumerate() {
        for s in 1..=cfg.chain_max_power {
            match verify_colon_chain(g, s) {
                Ok(r) => cases.extend(r.cases.into_iter().map(|mut c| {
                    c.id = format!("g{k}/{}", c.id);
                    c
                })),
                Err(e) => cases.push(run_case(
                    CaseSpec {
                        id: format!("g{k}/colon-chain/s{s}"),
                        anchor: "ordered-colon-chain",
                        claim: "the colon chain can be built".into(),
                        input: g.to_text(),
                    },
                    || Err(e),
                )),
            }
        }
    }
    SuiteReport::new("colon-chain", cases)
}

/// One report per acceptance criterion.
pub fn criterion_suites(seed: u64, cfg: &SuiteConfig) -> Vec<SuiteReport> {
    vec![
        suite_nonlinear_square(),
        suite_order_sensitivity(),
        suite_edge_regularity(sub_seed(seed, 3), cfg),
        suite_linear_edge_powers(sub_seed(seed, 4), cfg),
        suite_cover_power_orders(sub_seed(seed, 4), cfg),
        suite_cover_power_regularity(sub_seed(seed, 4), cfg),
        suite_betti_oracle(sub_seed(seed, 7), cfg),
        suite_properties(sub_seed(seed, 8), cfg),
    ]
}

/// Every suite merged into one report, a pure function of `seed` and `cfg`
/// apart from timings.
pub fn suite_reproduce(seed: u64, cfg: &SuiteConfig) -> SuiteReport {
    let mut suites = criterion_suites(seed, cfg);
    suites.push(suite_colon_chain(sub_seed(seed, 9), cfg));
    let cases = suites.into_iter().flat_map(|r| r.cases).collect();
    let mut report = SuiteReport::new("reproduce", cases);
    report.seed = Some(seed);
    report.config = Some(cfg.clone());
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_suites_pass() {
        assert!(suite_order_sensitivity().all_pass());
        let r = suite_nonlinear_square();
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.cases.len(), 6);
    }

    #[test]
    fn quick_reproduce_is_deterministic() {
        let cfg = SuiteConfig::quick();
        let a = suite_reproduce(5, &cfg);
        let b = suite_reproduce(5, &cfg);
        assert_eq!(a.without_timings(), b.without_timings());
        assert!(a.all_pass(), "{:?}", a.failures().collect::<Vec<_>>());
        assert_eq!(a.seed, Some(5));
    }
}
