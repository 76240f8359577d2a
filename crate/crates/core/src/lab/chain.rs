use rayon::prelude::*;
use serde_json::json;

use super::report::{run_case, CaseSpec, SuiteReport};
use crate::algebra::{edge_ideal, induced_power_order, Monomial, OrderedGenerators, Provenance};
use crate::error::{Error, Result};
use crate::graph::{recognize_c4_2k2, Graph, Partition, VertexSet};
use crate::resolution::{regularity_with, BettiOptions};

/// Edges meeting `V3` first, sorted by (cycle endpoint label, other label),
/// then the rest in label order.
pub fn a_before_b_edge_order(g: &Graph, p: &Partition) -> Result<OrderedGenerators> {
    if !p.has_c5() {
        return Err(Error::EmptyV3);
    }
    let label = |v: usize| g.label(v).to_string();
    let mut a_edges = Vec::new();
    let mut b_edges = Vec::new();
    for (u, v) in g.edges() {
        match (p.v3.contains(u), p.v3.contains(v)) {
            (false, false) => {
                let (x, y) = if label(u) <= label(v) { (u, v) } else { (v, u) };
                b_edges.push(((label(x), label(y)), (u, v)));
            }
            (true, true) => {
                let (x, y) = if label(u) <= label(v) { (u, v) } else { (v, u) };
                a_edges.push(((label(x), label(y)), (u, v)));
            }
            (true, false) => a_edges.push(((label(u), label(v)), (u, v))),
            (false, true) => a_edges.push(((label(v), label(u)), (u, v))),
        }
    }
    a_edges.sort();
    b_edges.sort();
    let order = a_edges
        .into_iter()
        .chain(b_edges)
        .map(|(_, (u, v))| Monomial::squarefree([u, v]))
        .collect();
    OrderedGenerators::new(edge_ideal(g), order, Provenance::UserGiven)
}

/// `first` followed by the remaining edges in label order.
pub fn edge_order_starting_with(g: &Graph, first: (&str, &str)) -> Result<OrderedGenerators> {
    let idx = |l: &str| g.index_of(l).ok_or_else(|| Error::UnknownVertex(l.to_string()));
    let (a, b) = (idx(first.0)?, idx(first.1)?);
    if !g.adjacent(a, b) {
        return Err(Error::NotAGenerator(format!("{}{}", first.0, first.1)));
    }
    let lead = VertexSet::from_indices([a, b]);
    let mut rest: Vec<((String, String), (usize, usize))> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| VertexSet::from_indices([u, v]) != lead)
        .map(|(u, v)| {
            let (lu, lv) = (g.label(u).to_string(), g.label(v).to_string());
            (if lu <= lv { (lu, lv) } else { (lv, lu) }, (u, v))
        })
        .collect();
    rest.sort();
    let order = std::iter::once(Monomial::squarefree([a, b]))
        .chain(rest.into_iter().map(|(_, (u, v))| Monomial::squarefree([u, v])))
        .collect();
    OrderedGenerators::new(edge_ideal(g), order, Provenance::UserGiven)
}

/// Checks `reg((I^{s+1}, M_1..M_l) : M_{l+1}) <= 2` along the order induced
/// by the A-before-B edge order, together with the claim that each colon is
/// `(I^{s+1} : M_{l+1})` plus variables.
pub fn verify_colon_chain(g: &Graph, s: u32) -> Result<SuiteReport> {
    let p = recognize_c4_2k2(g).into_partition().ok_or(Error::NotC4TwoK2Free)?;
    let edges = a_before_b_edge_order(g, &p)?;
    verify_colon_chain_with_order(&edges, s, &BettiOptions::default())
}

/// The same chain for an arbitrary edge order.
pub fn verify_colon_chain_with_order(
    edges: &OrderedGenerators,
    s: u32,
    opts: &BettiOptions,
) -> Result<SuiteReport> {
    let ideal = edges.ideal();
    let next_power = ideal.power(s + 1)?;
    let ordered = induced_power_order(edges, s)?;
    let ms = ordered.order();
    let input = format!("{}order {}\ns {s}", ideal.to_text(), edges.labels().join(" "));
    let cases = (0..ms.len())
        .into_par_iter()
        .map(|l| {
            let spec = CaseSpec {
                id: format!("colon-chain/s{s}/l{l}"),
                anchor: "ordered-colon-chain",
                claim: format!(
                    "reg of the colon by {} is at most 2 and the colon adds only variables",
                    ideal.show(&ms[l])
                ),
                input: format!("{input}\nl {l}"),
            };
            run_case(spec, || {
                let colon = next_power.sum_with(&ms[..l])?.colon(&ms[l])?;
                let base = next_power.colon(&ms[l])?;
                let structural = colon
                    .gens()
                    .iter()
                    .all(|m| m.degree() == 1 || base.is_generator(m));
                let reg = regularity_with(&colon, opts)?;
                Ok((
                    json!({ "reg": reg, "structural": structural }),
                    json!({ "reg_at_most": 2, "structural": true }),
                    reg <= 2 && structural,
                ))
            })
        })
        .collect();
    Ok(SuiteReport::new("colon-chain", cases))
}
