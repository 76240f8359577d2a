use super::certificate::{check_sequence, colon_variables, LinearQuotientsCertificate, OrderCheck};
use crate::algebra::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

pub const EXHAUSTIVE_MAX_GENERATORS: usize = 20;
const EXHAUSTIVE_MAX_VARIABLES: usize = 128;

/// Result of a complete search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(LinearQuotientsCertificate),
    /// No order of the generators has linear quotients.
    NoneExists,
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&LinearQuotientsCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            SearchOutcome::NoneExists => None,
        }
    }
}

/// Greedy placement in the ideal's generator order.
///
/// Success is a valid certificate; failure proves nothing.
pub fn greedy_linear_quotients(ideal: &MonomialIdeal) -> Option<LinearQuotientsCertificate> {
    greedy_linear_quotients_from(ideal, ideal.gens())
}

/// Greedy placement that prefers candidates earlier in `candidates`.
pub fn greedy_linear_quotients_from(
    ideal: &MonomialIdeal,
    candidates: &[Monomial],
) -> Option<LinearQuotientsCertificate> {
    let mut placed: Vec<Monomial> = Vec::with_capacity(candidates.len());
    let mut used = vec![false; candidates.len()];
    while placed.len() < candidates.len() {
        let next = (0..candidates.len())
            .find(|&k| !used[k] && colon_variables(ideal.ring(), &placed, &candidates[k]).is_ok())?;
        used[next] = true;
        placed.push(candidates[next].clone());
    }
    match check_sequence(ideal.ring(), &placed) {
        OrderCheck::Certified(c) => Some(c),
        OrderCheck::Failed { .. } => unreachable!("every placement was checked"),
    }
}

/// Dynamic program over sets of placed generators.
///
/// The colon `(placed) : m` depends only on the set placed, so an order
/// exists iff the full set is reachable from the empty set.
pub fn exhaustive_linear_quotients(ideal: &MonomialIdeal) -> Result<SearchOutcome> {
    let gens = ideal.gens();
    let r = gens.len();
    if r > EXHAUSTIVE_MAX_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: r,
            max: EXHAUSTIVE_MAX_GENERATORS,
        });
    }
    let nvars = ideal.ring().len();
    if nvars > EXHAUSTIVE_MAX_VARIABLES {
        return Err(Error::TooManyVariables {
            count: nvars,
            max: EXHAUSTIVE_MAX_VARIABLES,
        });
    }
    if r == 0 {
        return Ok(SearchOutcome::Found(
            match check_sequence(ideal.ring(), &[]) {
                OrderCheck::Certified(c) => c,
                OrderCheck::Failed { .. } => unreachable!(),
            },
        ));
    }
    // support[j][i] = support of m_j : m_i; single[j][i] = that quotient is one variable
    let mut support = vec![vec![0u128; r]; r];
    let mut single = vec![vec![false; r]; r];
    for j in 0..r {
        for i in 0..r {
            if i == j {
                continue;
            }
            let q = gens[j].colon(&gens[i]);
            support[j][i] = q.support().fold(0u128, |m, v| m | 1 << v);
            single[j][i] = q.as_variable().is_some();
        }
    }
    let full = (1usize << r) - 1;
    const UNSEEN: u8 = u8::MAX;
    let mut parent = vec![UNSEEN; 1 << r];
    parent[0] = 0;
    let mut frontier = vec![0usize];
    while !frontier.is_empty() && parent[full] == UNSEEN {
        let mut next = Vec::new();
        for &mask in &frontier {
            for i in 0..r {
                let bigger = mask | 1 << i;
                if mask & 1 << i != 0 || parent[bigger] != UNSEEN {
                    continue;
                }
                let vars = (0..r)
                    .filter(|&k| mask >> k & 1 == 1 && single[k][i])
                    .fold(0u128, |m, k| m | support[k][i]);
                let ok = (0..r).all(|j| mask >> j & 1 == 0 || support[j][i] & vars != 0);
                if ok {
                    parent[bigger] = i as u8;
                    next.push(bigger);
                }
            }
        }
        frontier = next;
    }
    if parent[full] == UNSEEN {
        return Ok(SearchOutcome::NoneExists);
    }
    let mut order = Vec::with_capacity(r);
    let mut mask = full;
    while mask != 0 {
        let i = parent[mask] as usize;
        order.push(gens[i].clone());
        mask &= !(1 << i);
    }
    order.reverse();
    match check_sequence(ideal.ring(), &order) {
        OrderCheck::Certified(c) => Ok(SearchOutcome::Found(c)),
        OrderCheck::Failed { step, .. } => {
            unreachable!("search produced an order failing at step {step}")
        }
    }
}

/// Greedy first, then the exhaustive search when the ideal is small enough.
pub fn find_linear_quotients(ideal: &MonomialIdeal) -> Result<SearchOutcome> {
    if let Some(c) = greedy_linear_quotients(ideal) {
        return Ok(SearchOutcome::Found(c));
    }
    exhaustive_linear_quotients(ideal)
}
