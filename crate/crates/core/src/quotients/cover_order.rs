use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use super::certificate::{check_linear_quotients_order, OrderCheck};
use super::search::{find_linear_quotients, SearchOutcome};
use crate::algebra::{
    cover_ideal, factorizations, vertex_set_monomial, Monomial, MonomialIdeal, OrderedGenerators,
    Provenance,
};
use crate::error::{Error, Result};
use crate::graph::{minimal_vertex_covers, Graph, Partition, VertexSet};

/// Positions in the cycle order `u1..u5` of the five minimal covers of C5.
pub const C5_COVERS: [[usize; 3]; 5] = [[0, 1, 3], [3, 4, 1], [1, 2, 4], [2, 3, 0], [4, 0, 2]];

/// `M = prod (V2 f_i)^alpha_i * prod N(z_j)^beta_j` for `V2 = {z_1 < ... < z_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverPowerExpression {
    pub alpha: [u32; 5],
    pub beta: Vec<u32>,
}

impl CoverPowerExpression {
    pub fn alpha_sum(&self) -> u32 {
        self.alpha.iter().sum()
    }

    pub fn power(&self) -> u32 {
        self.alpha_sum() + self.beta.iter().sum::<u32>()
    }

    /// Rebuilds the monomial in the graph's ring.
    pub fn monomial(&self, g: &Graph, p: &Partition) -> Monomial {
        let v2 = vertex_set_monomial(p.v2);
        let mut m = Monomial::one();
        for (i, &a) in self.alpha.iter().enumerate() {
            m = m.mul(&v2.mul(&c5_cover(p, i)).pow(a));
        }
        for (z, &b) in p.v2.iter().zip(&self.beta) {
            m = m.mul(&vertex_set_monomial(g.neighbors(z)).pow(b));
        }
        m
    }
}

fn c5_cover(p: &Partition, i: usize) -> Monomial {
    Monomial::squarefree(C5_COVERS[i].iter().map(|&k| p.c5_order[k]))
}

/// Exponents of `m` along the cycle order of `V3`.
fn cycle_vector(m: &Monomial, p: &Partition) -> Vec<u32> {
    p.c5_order.iter().map(|&v| m.exponent(v)).collect()
}

/// A linear-quotients order on `(I(C5)^v)^p` over `u1..u5`: decreasing lex.
///
/// The order is checked before it is returned; a failure is an error, never
/// a silent reordering.
pub fn c5_cover_power_order(p: u32) -> Result<OrderedGenerators> {
    let ideal = cover_ideal(&Graph::cycle(5, "u"))?.power(p)?;
    let mut order = ideal.gens().to_vec();
    order.sort_by(|a, b| b.lex_cmp(a));
    validated(ideal, order, Provenance::LexC5)
}

fn validated(ideal: MonomialIdeal, order: Vec<Monomial>, provenance: Provenance) -> Result<OrderedGenerators> {
    let og = OrderedGenerators::new(ideal, order, provenance)?;
    match check_linear_quotients_order(&og) {
        OrderCheck::Certified(_) => Ok(og),
        OrderCheck::Failed { step, witness } => Err(Error::OrderValidation {
            step,
            witness: og.ideal().show(&witness),
        }),
    }
}

/// The unique expression of a minimal generator of `(I(G)^v)^s`.
pub fn expressions_of_cover_power_gen(
    g: &Graph,
    p: &Partition,
    s: u32,
    m: &Monomial,
) -> Result<CoverPowerExpression> {
    require_both_parts(p)?;
    p.validate(g)?;
    let power = cover_ideal(g)?.power(s)?;
    if !power.is_generator(m) {
        return Err(Error::NotAGenerator(power.show(m)));
    }
    expression_unchecked(g, p, s, m).ok_or_else(|| Error::NoExpression(power.show(m)))
}

fn require_both_parts(p: &Partition) -> Result<()> {
    if !p.has_c5() {
        return Err(Error::EmptyV3);
    }
    if p.v2.is_empty() {
        return Err(Error::EmptyV2);
    }
    Ok(())
}

/// Reads `beta_j` off the `z_j` exponent, then factors what is left over
/// the C5 covers.
fn expression_unchecked(g: &Graph, p: &Partition, s: u32, m: &Monomial) -> Option<CoverPowerExpression> {
    let mut beta = Vec::with_capacity(p.v2.len());
    let mut rest = m.clone();
    for z in p.v2.iter() {
        let b = s.checked_sub(m.exponent(z))?;
        rest = rest.checked_div(&vertex_set_monomial(g.neighbors(z)).pow(b))?;
        beta.push(b);
    }
    let a = s.checked_sub(beta.iter().sum())?;
    rest = rest.checked_div(&vertex_set_monomial(p.v2).pow(a))?;
    let covers: Vec<Monomial> = (0..5).map(|i| c5_cover(p, i)).collect();
    let mut fs = factorizations(&rest, &covers, a);
    if fs.len() != 1 {
        return None;
    }
    let f = fs.pop().unwrap();
    let alpha = [f[0], f[1], f[2], f[3], f[4]];
    Some(CoverPowerExpression { alpha, beta })
}

/// The order on `(I(G)^v)^s` used for linear quotients.
///
/// With `V2` and `V3` both nonempty, `M` precedes `N` when its `alpha` sum is
/// larger; on equal sums, when its C5 part comes earlier in
/// [`c5_cover_power_order`]; on equal C5 parts, when its `beta` is lex
/// larger. With `V2` empty the C5 order is used directly. With `V3` empty
/// the order comes from a search. The result is always validated.
pub fn cover_power_order(g: &Graph, p: &Partition, s: u32) -> Result<OrderedGenerators> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessCoverIdeal);
    }
    p.validate(g)?;
    let ideal = cover_ideal(g)?.power(s)?;
    if !p.has_c5() {
        return match find_linear_quotients(&ideal)? {
            SearchOutcome::Found(c) => c.ordered(ideal, Provenance::Search),
            SearchOutcome::NoneExists => Err(Error::NoLinearQuotients(format!(
                "cover ideal power {s} of a split graph"
            ))),
        };
    }
    if p.v2.is_empty() {
        let mut order = ideal.gens().to_vec();
        order.sort_by(|a, b| cycle_vector(b, p).cmp(&cycle_vector(a, p)));
        return validated(ideal, order, Provenance::LexC5);
    }

    let mut position: HashMap<(u32, Vec<u32>), usize> = HashMap::new();
    for a in 1..=s {
        for (k, m) in c5_cover_power_order(a)?.order().iter().enumerate() {
            position.insert((a, m.to_dense(5)), k);
        }
    }
    let mut keyed = Vec::with_capacity(ideal.len());
    for m in ideal.gens() {
        let e = expression_unchecked(g, p, s, m).ok_or_else(|| Error::NoExpression(ideal.show(m)))?;
        let a = e.alpha_sum();
        let c5_part = (0..5).fold(Monomial::one(), |acc, i| {
            acc.mul(&Monomial::squarefree(C5_COVERS[i].iter().copied()).pow(e.alpha[i]))
        });
        let pos = if a == 0 { 0 } else { position[&(a, c5_part.to_dense(5))] };
        keyed.push(((a, pos, e.beta), m.clone()));
    }
    keyed.sort_by(|(x, _), (y, _)| cover_key_cmp(x, y));
    let order = keyed.into_iter().map(|(_, m)| m).collect();
    validated(ideal, order, Provenance::CoverKeys)
}

fn cover_key_cmp(x: &(u32, usize, Vec<u32>), y: &(u32, usize, Vec<u32>)) -> Ordering {
    y.0.cmp(&x.0)
        .then(x.1.cmp(&y.1))
        .then_with(|| y.2.cmp(&x.2))
}

/// Whether every product of `s` minimal covers is a minimal generator of
/// `(I(G)^v)^s`, with the number of distinct products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductsMinimal {
    pub all_minimal: bool,
    pub count: usize,
}

pub fn check_products_minimal(g: &Graph, p: &Partition, s: u32) -> Result<ProductsMinimal> {
    if !p.has_c5() {
        return Err(Error::EmptyV3);
    }
    if s == 0 {
        return Err(Error::InvalidPower(s));
    }
    p.validate(g)?;
    let covers: Vec<Monomial> = minimal_vertex_covers(g)
        .into_iter()
        .map(vertex_set_monomial)
        .collect();
    let power = cover_ideal(g)?.power(s)?;
    let mut products = HashSet::new();
    let mut all_minimal = true;
    for_each_multiset(covers.len(), s as usize, &mut |idx| {
        let m = idx.iter().fold(Monomial::one(), |acc, &k| acc.mul(&covers[k]));
        if !power.is_generator(&m) {
            all_minimal = false;
        }
        products.insert(m);
    });
    Ok(ProductsMinimal {
        all_minimal,
        count: products.len(),
    })
}

fn for_each_multiset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

/// The cover `V2 ∪ f_i` or `N(z)` for display.
pub fn cover_sets(g: &Graph, p: &Partition) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = (0..5)
        .map(|i| p.v2.union(VertexSet::from_indices(C5_COVERS[i].iter().map(|&k| p.c5_order[k]))))
        .collect();
    out.extend(p.v2.iter().map(|z| g.neighbors(z)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::order_sensitive_graph;
    use crate::graph::{random_c4_2k2_graph, recognize_c4_2k2};

    #[test]
    fn c5_powers() {
        for (p, count) in [(1, 5), (2, 15), (3, 35)] {
            let o = c5_cover_power_order(p).unwrap();
            assert_eq!(o.order().len(), count);
        }
        let o = c5_cover_power_order(1).unwrap();
        assert_eq!(o.labels(), ["u1*u2*u4", "u1*u3*u4", "u1*u3*u5", "u2*u3*u5", "u2*u4*u5"]);
    }

    #[test]
    fn five_cycle_delegates() {
        let g = Graph::cycle(5, "u");
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        let o = cover_power_order(&g, &p, 2).unwrap();
        assert_eq!(o.labels(), c5_cover_power_order(2).unwrap().labels());
    }

    #[test]
    fn order_sensitive_graph_expressions() {
        let g = order_sensitive_graph();
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        let power = cover_ideal(&g).unwrap().power(2).unwrap();
        let covers: Vec<Monomial> = cover_sets(&g, &p).into_iter().map(vertex_set_monomial).collect();
        for m in power.gens() {
            let e = expressions_of_cover_power_gen(&g, &p, 2, m).unwrap();
            assert_eq!(&e.monomial(&g, &p), m);
            assert_eq!(e.power(), 2);
            let brute = factorizations(m, &covers, 2);
            assert_eq!(brute.len(), 1);
            assert_eq!(&brute[0][..5], &e.alpha[..]);
            assert_eq!(&brute[0][5..], &e.beta[..]);
        }
    }

    #[test]
    fn single_covers() {
        let g = order_sensitive_graph();
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        let b = g.index_of("b").unwrap();
        let nb = vertex_set_monomial(g.neighbors(b));
        let e = expressions_of_cover_power_gen(&g, &p, 1, &nb).unwrap();
        assert_eq!(e.alpha, [0; 5]);
        assert_eq!(e.beta, vec![1]);
        let f1 = vertex_set_monomial(p.v2).mul(&c5_cover(&p, 0));
        let e = expressions_of_cover_power_gen(&g, &p, 1, &f1).unwrap();
        assert_eq!(e.alpha, [1, 0, 0, 0, 0]);
        assert_eq!(e.beta, vec![0]);
        let not_gen = Monomial::var(b);
        assert!(matches!(
            expressions_of_cover_power_gen(&g, &p, 1, &not_gen),
            Err(Error::NotAGenerator(_))
        ));
    }

    #[test]
    fn products_are_minimal() {
        let c5 = Graph::cycle(5, "u");
        let p = recognize_c4_2k2(&c5).into_partition().unwrap();
        assert_eq!(
            check_products_minimal(&c5, &p, 2).unwrap(),
            ProductsMinimal { all_minimal: true, count: 15 }
        );
        let g = order_sensitive_graph();
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        assert_eq!(
            check_products_minimal(&g, &p, 2).unwrap(),
            ProductsMinimal { all_minimal: true, count: 21 }
        );
    }

    #[test]
    fn orders_validate_on_random_graphs() {
        for seed in 0..6 {
            let (g, p) = random_c4_2k2_graph(2, 2, seed % 2 == 0, 0.5, seed);
            for s in 1..=2 {
                let o = cover_power_order(&g, &p, s).unwrap();
                assert!(check_linear_quotients_order(&o).is_certified());
            }
        }
    }

    #[test]
    fn keys_are_total() {
        let g = order_sensitive_graph();
        let p = recognize_c4_2k2(&g).into_partition().unwrap();
        let power = cover_ideal(&g).unwrap().power(3).unwrap();
        let mut keys = HashSet::new();
        for m in power.gens() {
            let e = expression_unchecked(&g, &p, 3, m).unwrap();
            assert!(keys.insert(e));
        }
    }
}
