use super::betti::{betti_table_with, BettiOptions};
use super::linalg::Field;
use crate::algebra::{minimalize, Monomial, MonomialIdeal};
use crate::error::Result;

/// Castelnuovo-Mumford regularity, `max(j - i)` over nonzero `b_{i,j}`.
pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<i64> {
    regularity_with(ideal, &BettiOptions::over(field))
}

pub fn regularity_with(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<i64> {
    Ok(betti_table_with(ideal, opts)?.regularity())
}

/// Equigenerated in degree `d` with regularity `d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    has_linear_resolution_with(ideal, &BettiOptions::over(field))
}

pub fn has_linear_resolution_with(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<bool> {
    let t = betti_table_with(ideal, opts)?;
    Ok(ideal.is_equigenerated() && t.regularity() == ideal.min_degree().unwrap_or(0) as i64)
}

/// `I_<d>`, generated by all degree-`d` monomials of `I`.
pub fn component_ideal(ideal: &MonomialIdeal, d: u32) -> MonomialIdeal {
    let n = ideal.ring().len();
    let mut gens = Vec::new();
    for g in ideal.gens().iter().filter(|g| g.degree() <= d) {
        for m in monomials_of_degree(n, d - g.degree()) {
            gens.push(g.mul(&m));
        }
    }
    minimalize(ideal.ring().clone(), gens)
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn fill(k: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 >= exps.len() {
            if let Some(k) = exps.len().checked_sub(1) {
                exps[k] = left;
                out.push(Monomial::from_exponents(exps));
                exps[k] = 0;
            } else if left == 0 {
                out.push(Monomial::one());
            }
            return;
        }
        for e in (0..=left).rev() {
            exps[k] = e;
            fill(k + 1, left - e, exps, out);
        }
        exps[k] = 0;
    }
    fill(0, d, &mut exps, &mut out);
    out
}

/// Every component `I_<d>` has a linear resolution.
///
/// Degrees run upward from the least generator degree. Once `d` reaches the
/// largest generator degree, `I_<d+1> = m I_<d>`, and a linear `I_<d>` keeps
/// every later component linear, so the scan stops there. The scan never
/// passes `max degree + number of variables`.
pub fn is_componentwise_linear(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    let opts = BettiOptions::over(field);
    let (Some(lo), Some(hi)) = (ideal.min_degree(), ideal.max_degree()) else {
        return Err(crate::error::Error::ZeroIdeal);
    };
    let stop = hi + ideal.ring().len() as u32;
    for d in lo..=stop {
        let linear = has_linear_resolution_with(&component_ideal(ideal, d), &opts)?;
        if !linear {
            return Ok(false);
        }
        if d >= hi {
            return Ok(true);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cover_ideal, edge_ideal, Ring};
    use crate::graph::Graph;

    fn ideal(vars: &[&str], gens: &[&str]) -> MonomialIdeal {
        let ring = Ring::new(vars.iter().copied());
        let gens = gens.iter().map(|s| ring.parse_monomial(s).unwrap()).collect();
        MonomialIdeal::new(ring, gens).unwrap()
    }

    #[test]
    fn five_cycle_regularity() {
        let i = edge_ideal(&Graph::cycle(5, "u"));
        assert_eq!(regularity(&i, Field::Rationals).unwrap(), 3);
        assert!(!has_linear_resolution(&i, Field::Rationals).unwrap());
    }

    #[test]
    fn two_k2_is_not_linear() {
        let i = ideal(&["a", "b", "c", "d"], &["a*b", "c*d"]);
        assert_eq!(regularity(&i, Field::Rationals).unwrap(), 3);
        assert!(!has_linear_resolution(&i, Field::Rationals).unwrap());
    }

    #[test]
    fn components() {
        let i = ideal(&["x", "y"], &["x^2", "y^2"]);
        assert_eq!(component_ideal(&i, 2), i);
        assert!(!is_componentwise_linear(&i, Field::Rationals).unwrap());
        let j = ideal(&["x", "y", "z"], &["x", "y^2", "y*z"]);
        let c = component_ideal(&j, 2);
        assert_eq!(c.len(), 5);
        assert!(is_componentwise_linear(&j, Field::Rationals).unwrap());
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(0, 0), vec![Monomial::one()]);
    }

    #[test]
    fn linear_equigenerated_is_componentwise_linear() {
        let i = ideal(&["a", "b", "c", "d"], &["a*b", "b*c", "c*d", "a*d"]);
        assert!(has_linear_resolution(&i, Field::Rationals).unwrap());
        assert!(is_componentwise_linear(&i, Field::Rationals).unwrap());
    }

    #[test]
    fn cover_ideal_of_order_sensitive_graph() {
        let i = cover_ideal(&crate::fixtures::order_sensitive_graph()).unwrap();
        assert!(is_componentwise_linear(&i, Field::Rationals).unwrap());
    }
}
