use serde_json::json;

use super::report::{run_case, CaseSpec, SuiteReport};
use crate::algebra::edge_ideal;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::resolution::{regularity, Field};

/// Regularity of `I(h)` with the edgeless convention: `None` when `h` has no
/// edges.
fn edge_regularity(h: &Graph) -> Result<Option<i64>> {
    if h.edge_count() == 0 {
        return Ok(None);
    }
    regularity(&edge_ideal(h), Field::Rationals).map(Some)
}

/// For each non-isolated `x`: `reg I(G) <= max(reg I(G - N[x]) + 1, reg I(G - x))`
/// and `reg I(G)` equals one of the two terms.
///
/// An edgeless `G - N[x]` contributes `2`; an edgeless `G - x` drops out.
pub fn verify_neighbor_bound(g: &Graph) -> Result<SuiteReport> {
    if g.edge_count() == 0 {
        return Err(Error::ZeroIdeal);
    }
    let reg = regularity(&edge_ideal(g), Field::Rationals)?;
    let text = g.to_text();
    let cases = g
        .vertices()
        .iter()
        .filter(|&x| !g.is_isolated(x))
        .map(|x| {
            let spec = CaseSpec {
                id: format!("neighbor-bound/{}", g.label(x)),
                anchor: "neighbor-bound",
                claim: format!("reg I(G) is bounded by and equal to a term at {}", g.label(x)),
                input: format!("{text}x {}", g.label(x)),
            };
            run_case(spec, || {
                let star = edge_regularity(&g.remove(g.closed_neighbors(x)))?.map_or(2, |r| r + 1);
                let deleted = edge_regularity(&g.remove(VertexSet::singleton(x)))?;
                let bound = deleted.map_or(star, |d| d.max(star));
                let equal = reg == star || Some(reg) == deleted;
                Ok((
                    json!({ "reg": reg, "star_term": star, "deletion_term": deleted }),
                    json!({ "reg_at_most": bound, "equals_a_term": true }),
                    reg <= bound && equal,
                ))
            })
        })
        .collect();
    Ok(SuiteReport::new("neighbor-bound", cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cycle_is_tight() {
        let r = verify_neighbor_bound(&Graph::cycle(5, "u")).unwrap();
        assert_eq!(r.cases.len(), 5);
        for c in &r.cases {
            assert!(c.pass);
            assert_eq!(c.computed["reg"], 3);
            assert_eq!(c.computed["star_term"], 3);
        }
    }

    #[test]
    fn single_edge() {
        let r = verify_neighbor_bound(&Graph::complete(2, "v")).unwrap();
        assert!(r.all_pass());
        assert!(r.cases[0].computed["deletion_term"].is_null());
    }
}
