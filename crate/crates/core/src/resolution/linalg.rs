//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    /// `GF(p)` for a prime `p`.
    Prime(u64),
}

impl Field {
    pub const GF2: Field = Field::Prime(2);

    /// Short tag: `Q`, `GF2`, `GF3`, ...
    pub fn tag(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("GF{p}"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Field::Rationals => Ok(()),
            Field::Prime(p) if is_prime(p) => Ok(()),
            Field::Prime(p) => Err(Error::NotPrime(p)),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let lower = s.to_ascii_lowercase();
        let field = match lower.as_str() {
            "q" | "qq" | "rationals" => Field::Rationals,
            _ => {
                let p = lower
                    .strip_prefix("gf")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse {
                        line: 0,
                        message: format!("unknown field `{s}`"),
                    })?;
                Field::Prime(p)
            }
        };
        field.validate()?;
        Ok(field)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of a dense integer matrix over `field`.
pub fn rank(rows: &[Vec<i64>], field: Field) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match field {
        Field::Rationals => rank_integer(rows.to_vec()).unwrap_or_else(|| rank_bigint(rows)),
        Field::Prime(p) => rank_mod_p(rows, p),
    }
}

/// Fraction-free elimination in `i64`, dividing each updated row by the gcd
/// of its entries. Returns `None` on overflow.
fn rank_integer(mut m: Vec<Vec<i64>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows)
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].unsigned_abs())
        else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot = &top[rank];
        let pv = pivot[col];
        for row in rest.iter_mut() {
            let a = row[col];
            if a == 0 {
                continue;
            }
            if a % pv == 0 {
                let q = a / pv;
                for c in col..ncols {
                    row[c] = row[c].checked_sub(q.checked_mul(pivot[c])?)?;
                }
            } else {
                let mut g = 0i64;
                for c in col..ncols {
                    row[c] = pv.checked_mul(row[c])?.checked_sub(a.checked_mul(pivot[c])?)?;
                    g = g.gcd(&row[c]);
                }
                if g > 1 {
                    for c in col..ncols {
                        row[c] /= g;
                    }
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Same elimination without overflow, for the rare matrices that need it.
fn rank_bigint(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs())
        else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot = &top[rank];
        let pv = pivot[col].clone();
        for row in rest.iter_mut() {
            let a = row[col].clone();
            if a.is_zero() {
                continue;
            }
            let mut g = BigInt::zero();
            for c in col..ncols {
                row[c] = &pv * &row[c] - &a * &pivot[c];
                g = g.gcd(&row[c]);
            }
            if g > BigInt::from(1) {
                for c in col..ncols {
                    row[c] = &row[c] / &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let reduce = |x: i64| x.rem_euclid(p as i64) as u64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m[0].len();
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        // Fermat
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot = &top[rank];
        let pinv = inv(pivot[col]);
        for row in rest.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let f = mulmod(row[col], pinv);
            for c in col..ncols {
                row[c] = (row[c] + p - mulmod(f, pivot[c])) % p;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(rank(&m, Field::Rationals), 1);
        let m = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank(&m, Field::Rationals), 2);
        assert_eq!(rank(&m, Field::GF2), 0);
        assert_eq!(rank(&m, Field::Prime(3)), 2);
    }

    #[test]
    fn bigint_path_agrees() {
        // entries large enough that the i64 path overflows
        let big = i64::MAX / 3;
        let m = vec![vec![big, 3, 7], vec![5, big, 11], vec![13, 17, big]];
        assert!(rank_integer(m.clone()).is_none());
        assert_eq!(rank(&m, Field::Rationals), 3);
        assert_eq!(rank_bigint(&[vec![2, 4], vec![3, 6]]), 1);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("gf2".parse::<Field>().unwrap(), Field::GF2);
        assert_eq!("GF7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("gf4".parse::<Field>().unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::GF2.tag(), "GF2");
    }

    /// Rank via exact rational Gauss-Jordan on i128 numerators/denominators.
    fn rank_fractions(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<(i128, i128)>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| (x as i128, 1i128)).collect())
            .collect();
        let norm = |(a, b): (i128, i128)| {
            let mut g = (a.abs(), b.abs());
            while g.1 != 0 {
                g = (g.1, g.0 % g.1);
            }
            let g = g.0.max(1);
            let s = if b < 0 { -1 } else { 1 };
            (s * a / g, s * b / g)
        };
        let (nr, nc) = (m.len(), m[0].len());
        let mut rank = 0;
        for c in 0..nc {
            let Some(p) = (rank..nr).find(|&r| m[r][c].0 != 0) else { continue };
            m.swap(rank, p);
            let pv = m[rank][c];
            for r in rank + 1..nr {
                let a = m[r][c];
                if a.0 == 0 {
                    continue;
                }
                // f = a / pv
                let f = norm((a.0 * pv.1, a.1 * pv.0));
                for k in c..nc {
                    let x = m[rank][k];
                    let sub = norm((f.0 * x.0, f.1 * x.1));
                    let y = m[r][k];
                    m[r][k] = norm((y.0 * sub.1 - sub.0 * y.1, y.1 * sub.1));
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn integer_rank_matches_fraction_rank(
            rows in prop::collection::vec(prop::collection::vec(-2i64..3, 5), 1..6)
        ) {
            prop_assert_eq!(rank(&rows, Field::Rationals), rank_fractions(&rows));
        }
    }
}
