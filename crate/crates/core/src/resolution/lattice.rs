use std::collections::HashSet;

use crate::algebra::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

/// Least common multiples of all nonempty sets of minimal generators.
///
/// The bottom element `1` is not included. Elements are sorted by degree,
/// then decreasing lex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmLattice {
    elements: Vec<Monomial>,
}

impl LcmLattice {
    /// Closes the generators under lcm; fails once more than `cap` elements appear.
    pub fn new(ideal: &MonomialIdeal, cap: usize) -> Result<Self> {
        let gens = ideal.gens();
        let mut seen: HashSet<Monomial> = HashSet::with_capacity(gens.len() * 4);
        let mut frontier: Vec<Monomial> = Vec::new();
        for g in gens {
            if seen.insert(g.clone()) {
                frontier.push(g.clone());
            }
        }
        if seen.len() > cap {
            return Err(Error::LatticeCap { cap });
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in &frontier {
                for g in gens {
                    if g.divides(m) {
                        continue;
                    }
                    let l = m.lcm(g);
                    if !seen.contains(&l) {
                        seen.insert(l.clone());
                        if seen.len() > cap {
                            return Err(Error::LatticeCap { cap });
                        }
                        next.push(l);
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Monomial> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(LcmLattice { elements })
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    /// The top element, the lcm of every generator.
    pub fn top(&self) -> Option<&Monomial> {
        self.elements.last()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    fn ideal(vars: &[&str], gens: &[&str]) -> MonomialIdeal {
        let ring = Ring::new(vars.iter().copied());
        let gens = gens.iter().map(|s| ring.parse_monomial(s).unwrap()).collect();
        MonomialIdeal::new(ring, gens).unwrap()
    }

    #[test]
    fn closed_under_lcm() {
        let i = ideal(&["a", "b", "c", "d"], &["a*b", "b*c", "c*d", "a*d"]);
        let l = LcmLattice::new(&i, 1000).unwrap();
        for x in l.elements() {
            for y in l.elements() {
                assert!(l.contains(&x.lcm(y)));
            }
        }
        // 4 edges, 4 paths of length 2... abc, bcd, acd, abd, and abcd
        assert_eq!(l.len(), 9);
        assert_eq!(i.show(l.top().unwrap()), "a*b*c*d");
    }

    #[test]
    fn brute_force_subsets() {
        let i = ideal(&["x", "y", "z"], &["x^2", "x*y", "y^3*z", "z^2"]);
        let l = LcmLattice::new(&i, 1000).unwrap();
        let gens = i.gens();
        let mut expect = HashSet::new();
        for mask in 1u32..1 << gens.len() {
            let m = (0..gens.len())
                .filter(|k| mask >> k & 1 == 1)
                .fold(Monomial::one(), |acc, k| acc.lcm(&gens[k]));
            expect.insert(m);
        }
        let got: HashSet<Monomial> = l.elements().iter().cloned().collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn cap_is_enforced() {
        let i = ideal(&["a", "b", "c", "d"], &["a*b", "b*c", "c*d", "a*d"]);
        assert_eq!(LcmLattice::new(&i, 5).unwrap_err(), Error::LatticeCap { cap: 5 });
    }
}
