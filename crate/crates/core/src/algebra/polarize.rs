use super::{minimalize, Monomial, MonomialIdeal, Ring};

/// Result of [`polarize`]: the squarefree ideal and, for each new variable,
/// the original variable and copy number it stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// `origin[k] = (original variable, copy index starting at 1)`.
    pub origin: Vec<(usize, u32)>,
}

/// Standard polarization: `x^e` becomes `x_1 x_2 ... x_e` in fresh variables.
///
/// Variables whose exponent never exceeds 1 keep their name, so squarefree
/// ideals come back unchanged.
pub fn polarize(ideal: &MonomialIdeal) -> Polarization {
    let ring = ideal.ring();
    let mut max_exp = vec![0u32; ring.len()];
    for g in ideal.gens() {
        for (v, e) in g.iter() {
            max_exp[v] = max_exp[v].max(e);
        }
    }
    let mut names = Vec::new();
    let mut origin = Vec::new();
    let mut first_copy = vec![0usize; ring.len()];
    for (v, &e) in max_exp.iter().enumerate() {
        first_copy[v] = names.len();
        if e <= 1 {
            names.push(ring.name(v).to_string());
            origin.push((v, 1));
        } else {
            for k in 1..=e {
                names.push(format!("{}_{k}", ring.name(v)));
                origin.push((v, k));
            }
        }
    }
    let first_copy = &first_copy;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            Monomial::squarefree(
                g.iter()
                    .flat_map(|(v, e)| (0..e as usize).map(move |k| first_copy[v] + k)),
            )
        })
        .collect();
    Polarization {
        ideal: minimalize(Ring::new(names), gens),
        origin,
    }
}
