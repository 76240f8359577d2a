use serde::{Deserialize, Serialize};

use crate::algebra::{minimalize, Monomial, MonomialIdeal, OrderedGenerators, Ring};
use crate::error::{Error, Result};

/// An order on the minimal generators together with, for every step
/// `l >= 2`, the variables generating `(m_1, ..., m_{l-1}) : m_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientsCertificate {
    ring: Ring,
    order: Vec<Monomial>,
    /// `steps[k]` belongs to generator `k + 1` (0-based), so step `k + 2` in
    /// 1-based numbering.
    steps: Vec<Vec<usize>>,
}

/// Outcome of checking one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderCheck {
    Certified(LinearQuotientsCertificate),
    /// `step` is 1-based; `witness` is a minimal generator of that colon
    /// ideal which is not a variable.
    Failed { step: usize, witness: Monomial },
}

impl OrderCheck {
    pub fn certificate(&self) -> Option<&LinearQuotientsCertificate> {
        match self {
            OrderCheck::Certified(c) => Some(c),
            OrderCheck::Failed { .. } => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, OrderCheck::Certified(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub index: usize,
    pub colon_vars: Vec<String>,
}

/// `{"order":[gen,...], "steps":[{"index":l, "colon_vars":[...]},...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub order: Vec<String>,
    pub steps: Vec<StepJson>,
}

/// Variables generating the colon of `prev` by `m`, or a non-variable
/// minimal generator of it.
pub(crate) fn colon_variables(
    ring: &Ring,
    prev: &[Monomial],
    m: &Monomial,
) -> std::result::Result<Vec<usize>, Monomial> {
    let quotients: Vec<Monomial> = prev.iter().map(|p| p.colon(m)).collect();
    let mut vars: Vec<usize> = quotients.iter().filter_map(Monomial::as_variable).collect();
    vars.sort_unstable();
    vars.dedup();
    let covered = |q: &Monomial| q.support().any(|v| vars.binary_search(&v).is_ok());
    if quotients.iter().all(covered) {
        return Ok(vars);
    }
    let colon = minimalize(ring.clone(), quotients);
    let witness = colon
        .gens()
        .iter()
        .find(|g| g.degree() != 1)
        .cloned()
        .expect("an uncovered quotient leaves a non-variable generator");
    Err(witness)
}

/// Checks every successive colon ideal of the order.
pub fn check_linear_quotients_order(og: &OrderedGenerators) -> OrderCheck {
    check_sequence(og.ideal().ring(), og.order())
}

pub(crate) fn check_sequence(ring: &Ring, order: &[Monomial]) -> OrderCheck {
    let mut steps = Vec::with_capacity(order.len().saturating_sub(1));
    for l in 1..order.len() {
        match colon_variables(ring, &order[..l], &order[l]) {
            Ok(vars) => steps.push(vars),
            Err(witness) => return OrderCheck::Failed { step: l + 1, witness },
        }
    }
    OrderCheck::Certified(LinearQuotientsCertificate {
        ring: ring.clone(),
        order: order.to_vec(),
        steps,
    })
}

impl LinearQuotientsCertificate {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    /// Colon variables of step `l` (1-based, `l >= 2`).
    pub fn colon_vars(&self, l: usize) -> Option<&[usize]> {
        l.checked_sub(2).and_then(|k| self.steps.get(k)).map(Vec::as_slice)
    }

    pub fn steps(&self) -> &[Vec<usize>] {
        &self.steps
    }

    /// Number of colon variables at each step, `0` for the first generator.
    pub fn colon_sizes(&self) -> Vec<usize> {
        std::iter::once(0).chain(self.steps.iter().map(Vec::len)).collect()
    }

    /// Recomputes every colon ideal and compares with the recorded variables.
    pub fn replay(&self) -> bool {
        match check_sequence(&self.ring, &self.order) {
            OrderCheck::Certified(c) => c.steps == self.steps,
            OrderCheck::Failed { .. } => false,
        }
    }

    /// The certified order as [`OrderedGenerators`] of `ideal`.
    pub fn ordered(
        &self,
        ideal: MonomialIdeal,
        provenance: crate::algebra::Provenance,
    ) -> Result<OrderedGenerators> {
        OrderedGenerators::new(ideal, self.order.clone(), provenance)
    }

    pub fn to_json(&self) -> CertificateJson {
        let names = self.ring.names();
        CertificateJson {
            vars: Some(names.to_vec()),
            order: self
                .order
                .iter()
                .map(|m| m.display(names).to_string())
                .collect(),
            steps: self
                .steps
                .iter()
                .enumerate()
                .map(|(k, vars)| StepJson {
                    index: k + 2,
                    colon_vars: vars.iter().map(|&v| names[v].clone()).collect(),
                })
                .collect(),
        }
    }

    /// Parses a certificate and verifies it; `ring` is used when the JSON has
    /// no `vars` entry.
    pub fn from_json(j: &CertificateJson, ring: Option<&Ring>) -> Result<Self> {
        let ring = match (&j.vars, ring) {
            (Some(v), _) => Ring::new(v.iter().cloned()),
            (None, Some(r)) => r.clone(),
            (None, None) => {
                return Err(Error::Json("certificate has no vars and no ring was given".into()))
            }
        };
        let order = j
            .order
            .iter()
            .map(|s| ring.parse_monomial(s))
            .collect::<Result<Vec<_>>>()?;
        let mut steps = Vec::with_capacity(j.steps.len());
        for (k, step) in j.steps.iter().enumerate() {
            if step.index != k + 2 {
                return Err(Error::Json(format!("step {} out of sequence", step.index)));
            }
            let mut vars = step
                .colon_vars
                .iter()
                .map(|n| ring.index_of(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
                .collect::<Result<Vec<_>>>()?;
            vars.sort_unstable();
            steps.push(vars);
        }
        Ok(LinearQuotientsCertificate { ring, order, steps })
    }
}
