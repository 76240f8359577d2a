use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// The ordered variable list of a polynomial ring.
///
/// All lexicographic comparisons use this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<[String]>);

impl Ring {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Ring {
        Ring(names.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Parses a monomial such as `x1^2*x3` or `1` over this ring.
    ///
    /// A token that is not a variable name is also accepted as a
    /// concatenation of single-character variable names, so `ab` reads as
    /// `a*b` when `ab` itself is not a variable.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::UnknownVariable(factor.to_string()))?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            if let Some(i) = self.index_of(name) {
                pairs.push((i, exp));
            } else if exp == 1 && !name.is_empty() {
                for ch in name.chars() {
                    let i = self
                        .index_of(&ch.to_string())
                        .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                    pairs.push((i, 1));
                }
            } else {
                return Err(Error::UnknownVariable(name.to_string()));
            }
        }
        Ok(Monomial::from_pairs(pairs))
    }

    fn check(&self, m: &Monomial) -> Result<()> {
        if m.var_bound() > self.len() {
            return Err(Error::VariableOutOfRange {
                index: m.var_bound() - 1,
                len: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A monomial ideal stored by its minimal generators.
///
/// No generator divides another and generators are sorted by degree, then by
/// decreasing lex order. The zero ideal has no generators; the unit ideal is
/// generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            ring.check(g)?;
        }
        Ok(minimalize(ring, gens))
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    pub fn unit(ring: Ring) -> Self {
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one()],
        }
    }

    /// The ideal generated by the given variables.
    pub fn variables<I: IntoIterator<Item = usize>>(ring: Ring, vars: I) -> Self {
        let gens = vars.into_iter().map(Monomial::var).collect();
        minimalize(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// All generators share one degree.
    pub fn is_equigenerated(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_generator(&self, m: &Monomial) -> bool {
        self.gens.binary_search(m).is_ok()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b).ok_or(Error::ExponentOverflow)?);
            }
        }
        Ok(minimalize(self.ring.clone(), gens))
    }

    /// `I^s` for `s >= 1`.
    pub fn power(&self, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidPower(s));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : m)`, generated by `g / gcd(g, m)` over the generators `g`.
    pub fn colon(&self, m: &Monomial) -> Result<Self> {
        self.ring.check(m)?;
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Ok(minimalize(self.ring.clone(), gens))
    }

    /// `I + (ms)`.
    pub fn sum_with(&self, ms: &[Monomial]) -> Result<Self> {
        for m in ms {
            self.ring.check(m)?;
        }
        let gens = self.gens.iter().chain(ms).cloned().collect();
        Ok(minimalize(self.ring.clone(), gens))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        self.sum_with(&other.gens)
    }

    /// Generators of a given degree.
    pub fn gens_of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }

    /// Renders a monomial with this ideal's variable names.
    pub fn show(&self, m: &Monomial) -> String {
        m.display(self.ring.names()).to_string()
    }

    /// One generator per line in `x1^2*x3` form, preceded by a `vars` line.
    pub fn to_text(&self) -> String {
        let mut out = format!("vars {}\n", self.ring.names().join(" "));
        for g in &self.gens {
            out.push_str(&self.show(g));
            out.push('\n');
        }
        out
    }

    /// Parses the text form.
    ///
    /// Lines starting with `#` are comments. An optional `vars a b c` line
    /// fixes the ring; otherwise variables are taken in order of first
    /// appearance. Without generators the result is the zero ideal.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut declared = false;
        let mut raw: Vec<(usize, Vec<(String, u32)>)> = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line_no = no + 1;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if let Some(rest) = t.strip_prefix("vars") {
                if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                    names = rest.split_whitespace().map(String::from).collect();
                    declared = true;
                    continue;
                }
            }
            let mut factors = Vec::new();
            if t != "1" {
                for f in t.split('*') {
                    let f = f.trim();
                    let (name, exp) = match f.split_once('^') {
                        Some((n, e)) => (
                            n.trim(),
                            e.trim().parse::<u32>().map_err(|_| Error::Parse {
                                line: line_no,
                                message: format!("bad exponent in `{f}`"),
                            })?,
                        ),
                        None => (f, 1),
                    };
                    if name.is_empty()
                        || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                    {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("bad variable in `{f}`"),
                        });
                    }
                    factors.push((name.to_string(), exp));
                }
            }
            raw.push((line_no, factors));
        }
        if !declared {
            for (_, factors) in &raw {
                for (n, _) in factors {
                    if !names.contains(n) {
                        names.push(n.clone());
                    }
                }
            }
        }
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let mut gens = Vec::new();
        for (line, factors) in &raw {
            let mut pairs = Vec::new();
            for (n, e) in factors {
                let i = *index.get(n.as_str()).ok_or_else(|| Error::Parse {
                    line: *line,
                    message: format!("variable `{n}` not declared"),
                })?;
                pairs.push((i, *e));
            }
            gens.push(Monomial::from_pairs(pairs));
        }
        MonomialIdeal::new(Ring::new(names), gens)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            vars: self.ring.names().to_vec(),
            gens: self
                .gens
                .iter()
                .map(|g| g.iter().map(|(i, e)| (self.ring.name(i).to_string(), e)).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &IdealJson) -> Result<Self> {
        let ring = Ring::new(j.vars.iter().cloned());
        let mut gens = Vec::with_capacity(j.gens.len());
        for g in &j.gens {
            let mut pairs = Vec::with_capacity(g.len());
            for (name, e) in g {
                let i = ring
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                pairs.push((i, *e));
            }
            gens.push(Monomial::from_pairs(pairs));
        }
        MonomialIdeal::new(ring, gens)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.show(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// JSON form of an ideal: each generator is a list of `[variable, exponent]`
/// pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<(String, u32)>>,
}

/// The unique minimal generating set: keep `m` iff no other generator
/// properly divides it. Order of the input does not matter.
pub fn minimalize(ring: Ring, mut gens: Vec<Monomial>) -> MonomialIdeal {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    MonomialIdeal { ring, gens: kept }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring {
        Ring::new((1..=n).map(|i| format!("x{i}")))
    }

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(text).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let r = Ring::new(["x"]);
        let i = minimalize(r, vec![Monomial::from_exponents(&[2]), Monomial::var(0)]);
        assert_eq!(i.gens(), [Monomial::var(0)]);
        let j = ideal("vars a b c\na*b\nb*c\na*b*c");
        assert_eq!(format!("{j:?}"), "(a*b, b*c)");
    }

    #[test]
    fn power_of_maximal_ideal() {
        let m = ideal("x\ny");
        assert_eq!(format!("{:?}", m.power(2).unwrap()), "(x^2, x*y, y^2)");
        assert_eq!(m.power(1).unwrap(), m);
        assert_eq!(m.power(0).unwrap_err(), Error::InvalidPower(0));
    }

    #[test]
    fn colon_examples() {
        let i = ideal("x*y\ny*z");
        let y = i.ring().parse_monomial("y").unwrap();
        assert_eq!(format!("{:?}", i.colon(&y).unwrap()), "(x, z)");
    }

    #[test]
    fn sum_examples() {
        let i = ideal("vars x y\nx");
        let y = i.ring().parse_monomial("y").unwrap();
        assert_eq!(format!("{:?}", i.sum_with(&[y]).unwrap()), "(x, y)");
        let j = ideal("x^2");
        let x = j.ring().parse_monomial("x").unwrap();
        assert_eq!(format!("{:?}", j.sum_with(&[x]).unwrap()), "(x)");
    }

    #[test]
    fn zero_and_unit() {
        let z = MonomialIdeal::zero(ring(2));
        assert!(z.is_zero() && !z.is_unit());
        let u = ideal("vars x\nx\n1");
        assert!(u.is_unit());
        assert_eq!(u.len(), 1);
    }

    #[test]
    fn parse_monomial_forms() {
        let r = Ring::new(["a", "b", "x1"]);
        assert_eq!(r.parse_monomial("ab").unwrap(), Monomial::squarefree([0, 1]));
        assert_eq!(
            r.parse_monomial("x1^2*a").unwrap(),
            Monomial::from_pairs([(2, 2), (0, 1)])
        );
        assert!(r.parse_monomial("q").is_err());
        assert_eq!(r.parse_monomial("1").unwrap(), Monomial::one());
    }

    #[test]
    fn text_and_json_round_trip() {
        let i = ideal("# sample\nvars a b c d\nb^2*c\na*d\nc*d^3");
        assert_eq!(MonomialIdeal::parse(&i.to_text()).unwrap(), i);
        let j = i.to_json();
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(
            s,
            r#"{"vars":["a","b","c","d"],"gens":[[["a",1],["d",1]],[["b",2],["c",1]],[["c",1],["d",3]]]}"#
        );
        let back: IdealJson = serde_json::from_str(&s).unwrap();
        assert_eq!(MonomialIdeal::from_json(&back).unwrap(), i);
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!(
            MonomialIdeal::parse("x\ny^z"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("vars x\ny"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn ring_mismatch() {
        let a = ideal("x");
        let b = ideal("y");
        assert_eq!(a.product(&b).unwrap_err(), Error::RingMismatch);
    }

    fn arb_gens(nvars: usize) -> impl Strategy<Value = Vec<Monomial>> {
        prop::collection::vec(
            prop::collection::vec(0u32..3, nvars).prop_map(|d| Monomial::from_exponents(&d)),
            1..7,
        )
    }

    fn arb_mono(nvars: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..3, nvars).prop_map(|d| Monomial::from_exponents(&d))
    }

    proptest! {
        #[test]
        fn minimalize_idempotent_and_order_free(gens in arb_gens(4), seed in any::<u64>()) {
            let i = minimalize(ring(4), gens.clone());
            prop_assert_eq!(minimalize(ring(4), i.gens().to_vec()), i.clone());
            let mut shuffled = gens;
            let k = shuffled.len();
            shuffled.rotate_left((seed as usize) % k);
            shuffled.reverse();
            prop_assert_eq!(minimalize(ring(4), shuffled), i.clone());
            for a in i.gens() {
                for b in i.gens() {
                    prop_assert!(a == b || !a.divides(b));
                }
            }
        }

        #[test]
        fn power_splits(gens in arb_gens(3), a in 1u32..3, b in 1u32..3) {
            let i = minimalize(ring(3), gens);
            prop_assume!(!i.is_unit());
            let lhs = i.power(a + b).unwrap();
            let rhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn colon_composes(gens in arb_gens(6), m1 in arb_mono(6), m2 in arb_mono(6)) {
            let i = minimalize(ring(6), gens);
            let lhs = i.colon(&m1.mul(&m2)).unwrap();
            let rhs = i.colon(&m1).unwrap().colon(&m2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
