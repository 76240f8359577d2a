use std::collections::{BTreeMap, HashMap};

use super::betti::{require_proper, BettiTable};
use super::linalg::{rank, Field};
use crate::algebra::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

pub const TAYLOR_MAX_GENERATORS: usize = 16;

/// Betti numbers from the Taylor complex tensored with the field.
///
/// After reduction modulo the variables only the differential entries
/// between subsets with the same lcm survive, so each multidegree splits off
/// as its own small complex.
pub fn taylor_betti_oracle(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    require_proper(ideal)?;
    field.validate()?;
    let gens = ideal.gens();
    let r = gens.len();
    if r > TAYLOR_MAX_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: r,
            max: TAYLOR_MAX_GENERATORS,
        });
    }
    let mut lcms = vec![Monomial::one(); 1 << r];
    let mut groups: HashMap<Monomial, Vec<u32>> = HashMap::new();
    for mask in 1usize..1 << r {
        let low = mask.trailing_zeros() as usize;
        lcms[mask] = lcms[mask & (mask - 1)].lcm(&gens[low]);
        groups.entry(lcms[mask].clone()).or_default().push(mask as u32);
    }

    let mut entries = BTreeMap::new();
    for (b, subsets) in groups {
        let top = subsets.iter().map(|s| s.count_ones() as usize).max().unwrap();
        // by_size[k] = subsets with k elements, homological degree k - 1
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        for &s in &subsets {
            by_size[s.count_ones() as usize].push(s);
        }
        let mut d_rank = vec![0usize; top + 2];
        for k in 2..=top {
            let index: HashMap<u32, usize> =
                by_size[k - 1].iter().enumerate().map(|(i, &s)| (s, i)).collect();
            if by_size[k].is_empty() || index.is_empty() {
                continue;
            }
            let rows: Vec<Vec<i64>> = by_size[k]
                .iter()
                .map(|&s| {
                    let mut row = vec![0i64; index.len()];
                    let mut bits = s;
                    let mut pos = 0;
                    while bits != 0 {
                        let g = bits.trailing_zeros();
                        bits &= bits - 1;
                        if let Some(&col) = index.get(&(s & !(1 << g))) {
                            row[col] = if pos % 2 == 0 { 1 } else { -1 };
                        }
                        pos += 1;
                    }
                    row
                })
                .collect();
            d_rank[k] = rank(&rows, field);
        }
        for k in 1..=top {
            let betti = by_size[k].len() - d_rank[k] - d_rank[k + 1];
            if betti > 0 {
                *entries.entry((k - 1, b.degree())).or_insert(0) += betti;
            }
        }
    }
    Ok(BettiTable::from_entries(field, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;
    use crate::resolution::betti_table;

    fn ideal(vars: &[&str], gens: &[&str]) -> MonomialIdeal {
        let ring = Ring::new(vars.iter().copied());
        let gens = gens.iter().map(|s| ring.parse_monomial(s).unwrap()).collect();
        MonomialIdeal::new(ring, gens).unwrap()
    }

    #[test]
    fn koszul_pair() {
        let t = taylor_betti_oracle(&ideal(&["x", "y"], &["x", "y"]), Field::Rationals).unwrap();
        assert_eq!(t.to_json().entries, vec![(0, 1, 2), (1, 2, 1)]);
    }

    #[test]
    fn agrees_on_cycles() {
        for n in [4, 5] {
            let g = crate::graph::Graph::cycle(n, "x");
            let i = crate::algebra::edge_ideal(&g);
            for field in [Field::Rationals, Field::GF2] {
                assert_eq!(
                    taylor_betti_oracle(&i, field).unwrap(),
                    betti_table(&i, field).unwrap()
                );
            }
        }
    }

    #[test]
    fn five_cycle_values() {
        let i = crate::algebra::edge_ideal(&crate::graph::Graph::cycle(5, "u"));
        let t = taylor_betti_oracle(&i, Field::Rationals).unwrap();
        assert_eq!(t.to_json().entries, vec![(0, 2, 5), (1, 3, 5), (2, 5, 1)]);
        assert_eq!(t.regularity(), 3);
    }

    #[test]
    fn generator_limit() {
        let ring = Ring::new((0..17).map(|k| format!("x{k}")));
        let i = MonomialIdeal::variables(ring, 0..17);
        assert_eq!(
            taylor_betti_oracle(&i, Field::Rationals).unwrap_err(),
            Error::TooManyGenerators { count: 17, max: 16 }
        );
    }
}
