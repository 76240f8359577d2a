use std::collections::HashSet;

use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

/// Where an order on generators came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Induced on a power of an edge ideal from an order on the edges.
    InducedPower,
    /// The sort-key order on cover-ideal powers.
    CoverKeys,
    /// Descending lex on powers of the 5-cycle cover ideal.
    LexC5,
    /// Found by a linear-quotients search.
    Search,
    UserGiven,
}

/// A total order on the minimal generators of an ideal, first element first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGenerators {
    ideal: MonomialIdeal,
    order: Vec<Monomial>,
    provenance: Provenance,
}

impl OrderedGenerators {
    /// Fails unless `order` lists every minimal generator exactly once.
    pub fn new(ideal: MonomialIdeal, order: Vec<Monomial>, provenance: Provenance) -> Result<Self> {
        if order.len() != ideal.len() {
            return Err(Error::NotAPermutation);
        }
        let mut seen = HashSet::with_capacity(order.len());
        for m in &order {
            if !ideal.is_generator(m) || !seen.insert(m) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(OrderedGenerators {
            ideal,
            order,
            provenance,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.order.iter().position(|g| g == m)
    }

    /// Generators rendered with the ring's variable names.
    pub fn labels(&self) -> Vec<String> {
        self.order.iter().map(|m| self.ideal.show(m)).collect()
    }
}

/// All ways to write `m` as a product of `s` of the `gens`, as exponent
/// vectors over `gens`, in decreasing lex order.
pub fn factorizations(m: &Monomial, gens: &[Monomial], s: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; gens.len()];
    search(m, gens, 0, s, &mut current, &mut out, usize::MAX);
    out
}

/// The lex-greatest factorization of `m` into `s` of the `gens`.
pub fn lex_max_expression(m: &Monomial, gens: &[Monomial], s: u32) -> Option<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; gens.len()];
    search(m, gens, 0, s, &mut current, &mut out, 1);
    out.pop()
}

fn search(
    rest: &Monomial,
    gens: &[Monomial],
    k: usize,
    left: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if left == 0 {
        if rest.is_one() {
            out.push(current.clone());
        }
        return;
    }
    if k == gens.len() {
        return;
    }
    // largest feasible exponent of gens[k] first, so output is lex-descending
    let mut max_e = 0;
    let mut pow = Monomial::one();
    while max_e < left {
        let next = pow.mul(&gens[k]);
        if !next.divides(rest) {
            break;
        }
        pow = next;
        max_e += 1;
    }
    for e in (0..=max_e).rev() {
        let quotient = rest
            .checked_div(&gens[k].pow(e))
            .expect("power divides by construction");
        current[k] = e;
        search(&quotient, gens, k + 1, left - e, current, out, limit);
        if out.len() >= limit {
            break;
        }
    }
    current[k] = 0;
}

/// The order on the minimal generators of `I^s` induced by an order on the
/// edge generators `L_1 > L_2 > ...`.
///
/// `M` precedes `N` when the lex-greatest exponent vector over all
/// factorizations of `M` exceeds that of `N`. Distinct generators have
/// distinct lex-greatest vectors, so this is total.
pub fn induced_power_order(edges: &OrderedGenerators, s: u32) -> Result<OrderedGenerators> {
    if s == 0 {
        return Err(Error::InvalidPower(s));
    }
    if s == 1 {
        return Ok(edges.clone());
    }
    let power = edges.ideal().power(s)?;
    let mut keyed: Vec<(Vec<u32>, Monomial)> = power
        .gens()
        .iter()
        .map(|m| {
            let key = lex_max_expression(m, edges.order(), s)
                .expect("every generator of I^s is a product of s generators");
            (key, m.clone())
        })
        .collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    let order = keyed.into_iter().map(|(_, m)| m).collect();
    OrderedGenerators::new(power, order, Provenance::InducedPower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{edge_ideal, Ring};
    use crate::graph::Graph;

    fn mono(ring: &Ring, s: &str) -> Monomial {
        ring.parse_monomial(s).unwrap()
    }

    #[test]
    fn factorizations_examples() {
        let ring = Ring::new(["x", "y"]);
        let xy = mono(&ring, "x*y");
        assert_eq!(
            factorizations(&mono(&ring, "x^2*y^2"), &[xy.clone()], 2),
            vec![vec![2]]
        );
        let c5 = Graph::cycle(5, "u");
        let i = edge_ideal(&c5);
        let edges: Vec<Monomial> = i.gens().to_vec();
        let m = mono(i.ring(), "u1*u2^2*u3");
        let f = factorizations(&m, &edges, 2);
        assert_eq!(f.len(), 1);
        let used: Vec<String> = f[0]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| i.show(&edges[k]))
            .collect();
        assert_eq!(used, ["u1*u2", "u2*u3"]);
    }

    #[test]
    fn multiple_factorizations_come_lex_descending() {
        // u1u2u3u4 in C4 = (u1u2)(u3u4) = (u2u3)(u4u1)
        let ring = Ring::new(["a", "b", "c", "d"]);
        let gens: Vec<Monomial> = ["a*b", "b*c", "c*d", "a*d"]
            .iter()
            .map(|s| mono(&ring, s))
            .collect();
        let f = factorizations(&mono(&ring, "a*b*c*d"), &gens, 2);
        assert_eq!(f, vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        assert_eq!(
            lex_max_expression(&mono(&ring, "a*b*c*d"), &gens, 2),
            Some(vec![1, 0, 1, 0])
        );
        assert_eq!(lex_max_expression(&mono(&ring, "a*c"), &gens, 1), None);
    }

    fn c5_edges_in_cycle_order() -> OrderedGenerators {
        let g = Graph::cycle(5, "u");
        let i = edge_ideal(&g);
        let order = ["u1*u2", "u2*u3", "u3*u4", "u4*u5", "u1*u5"]
            .iter()
            .map(|s| mono(i.ring(), s))
            .collect();
        OrderedGenerators::new(i, order, Provenance::UserGiven).unwrap()
    }

    #[test]
    fn s1_is_identity() {
        let e = c5_edges_in_cycle_order();
        assert_eq!(induced_power_order(&e, 1).unwrap(), e);
        assert_eq!(induced_power_order(&e, 0).unwrap_err(), Error::InvalidPower(0));
    }

    #[test]
    fn square_of_first_edge_leads() {
        let e = c5_edges_in_cycle_order();
        let o = induced_power_order(&e, 2).unwrap();
        assert_eq!(o.order().len(), 15);
        assert_eq!(o.labels()[0], "u1^2*u2^2");
        assert_eq!(o.labels()[1], "u1*u2^2*u3");
    }

    #[test]
    fn rejects_non_permutations() {
        let e = c5_edges_in_cycle_order();
        let mut bad = e.order().to_vec();
        bad[1] = bad[0].clone();
        assert_eq!(
            OrderedGenerators::new(e.ideal().clone(), bad, Provenance::UserGiven).unwrap_err(),
            Error::NotAPermutation
        );
    }

    #[test]
    fn every_factorization_has_s_factors() {
        let (g, _) = crate::graph::random_c4_2k2_graph(2, 2, true, 0.5, 4);
        let i = edge_ideal(&g);
        for s in 1..=3 {
            let p = i.power(s).unwrap();
            for m in p.gens() {
                let fs = factorizations(m, i.gens(), s);
                assert!(!fs.is_empty());
                for f in fs {
                    assert_eq!(f.iter().sum::<u32>(), s);
                    let prod = f
                        .iter()
                        .zip(i.gens())
                        .fold(Monomial::one(), |acc, (&e, g)| acc.mul(&g.pow(e)));
                    assert_eq!(&prod, m);
                }
            }
        }
    }
}
