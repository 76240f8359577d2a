use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::complex::{enumerate_faces, reduced_homology_of_faces};
use super::lattice::LcmLattice;
use super::linalg::Field;
use crate::algebra::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

pub const DEFAULT_LATTICE_CAP: usize = 200_000;

/// Graded Betti numbers `b_{i,j}` of an ideal, nonzero entries only.
#[derive(Clone, Debug)]
pub struct BettiTable {
    field: Field,
    entries: BTreeMap<(usize, u32), usize>,
    multigraded: Option<Vec<(usize, Monomial, usize)>>,
}

/// Two tables are equal when they agree on the field and the coarse entries.
impl PartialEq for BettiTable {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.entries == other.entries
    }
}

impl Eq for BettiTable {}

#[derive(Clone, Debug)]
pub struct BettiOptions {
    pub field: Field,
    pub cap: usize,
    /// Keep the per-multidegree ranks.
    pub multigraded: bool,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            field: Field::Rationals,
            cap: DEFAULT_LATTICE_CAP,
            multigraded: false,
        }
    }
}

impl BettiOptions {
    pub fn over(field: Field) -> Self {
        BettiOptions {
            field,
            ..Default::default()
        }
    }
}

/// JSON form: `{"field", "entries":[[i,j,rank],...], "reg", "linear"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub field: String,
    pub entries: Vec<(usize, u32, usize)>,
    pub reg: i64,
    pub linear: bool,
}

impl BettiTable {
    pub(crate) fn from_entries(field: Field, entries: BTreeMap<(usize, u32), usize>) -> Self {
        BettiTable {
            field,
            entries: entries.into_iter().filter(|&(_, r)| r > 0).collect(),
            multigraded: None,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, u32), usize> {
        &self.entries
    }

    /// `(i, multidegree, rank)` triples, present when requested.
    pub fn multigraded(&self) -> Option<&[(usize, Monomial, usize)]> {
        self.multigraded.as_deref()
    }

    /// `max(j - i)` over nonzero entries.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Generated in one degree `d` with every entry on the line `j = i + d`.
    pub fn is_linear(&self) -> bool {
        let mut diffs = self.entries.keys().map(|&(i, j)| j as i64 - i as i64);
        match diffs.next() {
            Some(d) => diffs.all(|e| e == d),
            None => false,
        }
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, &r)| r)
            .sum()
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            field: self.field.tag(),
            entries: self.entries.iter().map(|(&(i, j), &r)| (i, j, r)).collect(),
            reg: self.regularity(),
            linear: self.is_linear(),
        }
    }
}

/// Macaulay2-style layout: columns `i`, rows `j - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(empty)");
        }
        let pd = self.projective_dimension();
        let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap();
        let hi = self.regularity();
        let width = self.entries.values().map(|r| r.to_string().len()).max().unwrap().max(2);
        write!(f, "{:>4}", "")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        for row in lo..=hi {
            write!(f, "{:>3}:", row)?;
            for i in 0..=pd {
                let j = row + i as i64;
                let r = if j >= 0 { self.get(i, j as u32) } else { 0 };
                if r == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {:>width$}", r)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub(crate) fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// Betti numbers over the rationals with the default lattice cap.
pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    betti_table_with(ideal, &BettiOptions::over(field))
}

/// Betti numbers from the upper Koszul complexes of the lcm lattice.
///
/// `b_{i,b}(I)` is the rank of `H~_{i-1}(K^b)` where
/// `K^b = { squarefree t : x^(b - t) in I }`. Only lattice elements can carry
/// nonzero ranks, and they are evaluated in parallel.
pub fn betti_table_with(ideal: &MonomialIdeal, opts: &BettiOptions) -> Result<BettiTable> {
    require_proper(ideal)?;
    opts.field.validate()?;
    let lattice = LcmLattice::new(ideal, opts.cap)?;
    let gens = ideal.gens();
    let per_degree: Vec<Vec<(usize, usize)>> = lattice
        .elements()
        .par_iter()
        .map(|b| multidegree_ranks(b, gens, opts.field))
        .collect();

    let mut entries = BTreeMap::new();
    let mut multi = Vec::new();
    for (b, ranks) in lattice.elements().iter().zip(per_degree) {
        for (i, r) in ranks {
            *entries.entry((i, b.degree())).or_insert(0) += r;
            if opts.multigraded {
                multi.push((i, b.clone(), r));
            }
        }
    }
    let mut table = BettiTable::from_entries(opts.field, entries);
    if opts.multigraded {
        multi.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        table.multigraded = Some(multi);
    }
    Ok(table)
}

/// Nonzero `(i, b_{i,b})` at one multidegree.
fn multidegree_ranks(b: &Monomial, gens: &[Monomial], field: Field) -> Vec<(usize, usize)> {
    let below: Vec<&Monomial> = gens.iter().filter(|g| g.divides(b)).collect();
    if below.iter().any(|g| *g == b) {
        return vec![(0, 1)];
    }
    let support: Vec<usize> = b.support().collect();
    let faces = if support.len() <= below.len() || below.len() > 64 {
        // facets F_g = { v : b_v > g_v } on the support of b
        let facets: Vec<u64> = below
            .iter()
            .map(|g| {
                support
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| b.exponent(v) > g.exponent(v))
                    .fold(0u64, |m, (k, _)| m | 1 << k)
            })
            .collect();
        enumerate_faces(support.len(), |t| facets.iter().any(|&f| t & !f == 0))
    } else {
        // nerve of the facets: generator sets whose lcm falls short of b
        enumerate_faces(below.len(), |s| {
            let mut l = Monomial::one();
            let mut bits = s;
            while bits != 0 {
                l = l.lcm(below[bits.trailing_zeros() as usize]);
                bits &= bits - 1;
            }
            l != *b
        })
    };
    reduced_homology_of_faces(&faces, field)
        .into_iter()
        .enumerate()
        .filter(|&(_, r)| r > 0)
        .map(|(k, r)| (k, r))
        .collect()
}
