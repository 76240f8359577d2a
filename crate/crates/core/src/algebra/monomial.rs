use std::cmp::Ordering;
use std::fmt;

/// A monomial as a sparse exponent vector.
///
/// Entries are `(variable index, exponent)` sorted by index with no zero
/// exponents, so structural equality is monomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(index: usize) -> Self {
        Monomial {
            exps: vec![(index as u32, 1)],
            degree: 1,
        }
    }

    /// From a dense exponent vector.
    pub fn from_exponents(dense: &[u32]) -> Self {
        let exps: Vec<(u32, u32)> = dense
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i as u32, e))
            .collect();
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    /// From `(variable, exponent)` pairs in any order; repeated variables add up.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(i, e)| (i as u32, e))
            .collect();
        v.sort_unstable();
        let mut exps: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (i, e) in v {
            match exps.last_mut() {
                Some(last) if last.0 == i => {
                    last.1 = last.1.checked_add(e).expect("exponent overflow")
                }
                _ => exps.push((i, e)),
            }
        }
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    /// Squarefree product of the given variables.
    pub fn squarefree<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .binary_search_by_key(&(var as u32), |&(i, _)| i)
            .map(|k| self.exps[k].1)
            .unwrap_or(0)
    }

    /// `(variable, exponent)` pairs with positive exponent.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(i, e)| (i as usize, e))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|&(i, _)| i as usize)
    }

    /// One past the largest variable index used.
    pub fn var_bound(&self) -> usize {
        self.exps.last().map_or(0, |&(i, _)| i as usize + 1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    /// `Some(v)` when the monomial is the single variable `v`.
    pub fn as_variable(&self) -> Option<usize> {
        match self.exps.as_slice() {
            [(i, 1)] => Some(*i as usize),
            _ => None,
        }
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut d = vec![0; nvars];
        for &(i, e) in &self.exps {
            d[i as usize] = e;
        }
        d
    }

    fn merge(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut exps = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (var, x, y) = match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        i += 1;
                        (va, ea, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (vb, 0, eb)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (va, ea, eb)
                    }
                },
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, ea, 0)
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, 0, eb)
                }
                (None, None) => unreachable!(),
            };
            let e = f(x, y);
            if e > 0 {
                exps.push((var, e));
            }
        }
        let degree = exps.iter().map(|&(_, e)| e).sum();
        Monomial { exps, degree }
    }

    /// Product; `None` on exponent overflow.
    pub fn checked_mul(&self, other: &Self) -> Option<Monomial> {
        let overflow = std::cell::Cell::new(false);
        let m = self.merge(other, |x, y| {
            x.checked_add(y).unwrap_or_else(|| {
                overflow.set(true);
                0
            })
        });
        (!overflow.get()).then_some(m)
    }

    /// Product. Panics on exponent overflow.
    pub fn mul(&self, other: &Self) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&(i, e)| (i, e.checked_mul(k).expect("exponent overflow")))
                .filter(|&(_, e)| e > 0)
                .collect(),
            degree: self.degree.checked_mul(k).expect("exponent overflow"),
        }
    }

    pub fn gcd(&self, other: &Self) -> Monomial {
        self.merge(other, u32::min)
    }

    pub fn lcm(&self, other: &Self) -> Monomial {
        self.merge(other, u32::max)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let mut j = 0;
        let b = &other.exps;
        for &(v, e) in &self.exps {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| self.merge(other, |x, y| x - y))
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn colon(&self, other: &Self) -> Monomial {
        self.merge(other, |x, y| x.saturating_sub(y))
    }

    /// Lexicographic comparison of exponent vectors in variable order.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.exps.iter().zip(&other.exps) {
            match a.0.cmp(&b.0) {
                // a has a variable b lacks at this position, so a is larger
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match a.1.cmp(&b.1) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }

    /// Renders with variable names as `x1^2*x3`; the unit monomial is `1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, names }
    }
}

/// Generators are kept sorted by degree, then by decreasing lex order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.lex_cmp(self))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(i, e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        for (k, (i, e)) in self.m.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            let name = self.names.get(i).map(String::as_str).unwrap_or("?");
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}
