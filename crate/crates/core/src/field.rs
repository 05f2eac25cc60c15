//! Exact matrices over GF(p) and the rationals, with column-rank by Gaussian
//! elimination.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest modulus accepted for prime fields (exclusive).
pub const PRIME_LIMIT: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Prime(u64),
    Rational,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Entries {
    Prime(Vec<u64>),
    Rational(Vec<BigRational>),
}

/// Row-major matrix; column `j` represents ground element `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixOverField {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Entries,
}

impl MatrixOverField {
    pub fn over_prime(p: u64, rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self> {
        if p >= PRIME_LIMIT || !is_prime(p) {
            return Err(Error::precondition(format!(
                "GF(p) needs a prime p < 2^31, got {p}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::precondition(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&x| x >= p) {
            return Err(Error::precondition(format!("entry {bad} is not reduced mod {p}")));
        }
        Ok(MatrixOverField {
            field: Field::Prime(p),
            rows,
            cols,
            entries: Entries::Prime(entries),
        })
    }

    pub fn over_rationals(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::precondition(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(MatrixOverField {
            field: Field::Rational,
            rows,
            cols,
            entries: Entries::Rational(entries),
        })
    }

    pub fn identity_gf(p: u64, n: usize) -> Result<Self> {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Self::over_prime(p, n, n, e)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prime_entry(&self, r: usize, c: usize) -> Option<u64> {
        match &self.entries {
            Entries::Prime(e) => Some(e[r * self.cols + c]),
            Entries::Rational(_) => None,
        }
    }

    /// Entries rendered for the exchange format: integers for GF(p), "num/den"
    /// strings for rationals.
    pub fn entry_strings(&self) -> Vec<String> {
        match &self.entries {
            Entries::Prime(e) => e.iter().map(|x| x.to_string()).collect(),
            Entries::Rational(e) => e.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).collect(),
        }
    }

    /// Rank of the submatrix formed by the columns in `cols`.
    pub fn column_rank(&self, cols: &ElementSet) -> usize {
        let picked: Vec<usize> = cols.iter().collect();
        match &self.entries {
            Entries::Prime(e) => {
                let Field::Prime(p) = self.field else { unreachable!() };
                let mut m: Vec<Vec<u64>> = (0..self.rows)
                    .map(|r| picked.iter().map(|&c| e[r * self.cols + c]).collect())
                    .collect();
                rank_mod_p(&mut m, p)
            }
            Entries::Rational(e) => {
                let mut m: Vec<Vec<BigRational>> = (0..self.rows)
                    .map(|r| picked.iter().map(|&c| e[r * self.cols + c].clone()).collect())
                    .collect();
                rank_rational(&mut m)
            }
        }
    }

    pub fn columns_independent(&self, cols: &ElementSet) -> bool {
        cols.len() <= self.rows && self.column_rank(cols) == cols.len()
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn rank_mod_p(m: &mut [Vec<u64>], p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inv_mod(m[rank][c], p);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let factor = m[r][c] * inv % p;
                for k in c..cols {
                    let sub = factor * m[rank][k] % p;
                    m[r][k] = (m[r][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn rank_rational(m: &mut [Vec<BigRational>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = BigRational::one() / m[rank][c].clone();
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone() * inv.clone();
                for k in c..cols {
                    let sub = factor.clone() * m[rank][k].clone();
                    m[r][k] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Parses "n", "-n" or "n/d".
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Format(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<serde_json::Value>,
}

impl Serialize for MatrixOverField {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = match &self.entries {
            Entries::Prime(e) => e.iter().map(|&x| serde_json::Value::from(x)).collect(),
            Entries::Rational(_) => self
                .entry_strings()
                .into_iter()
                .map(serde_json::Value::String)
                .collect(),
        };
        RawMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatrixOverField {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawMatrix::deserialize(d)?;
        let built = match raw.field {
            Field::Prime(p) => {
                let entries = raw
                    .entries
                    .iter()
                    .map(|v| v.as_u64().ok_or_else(|| D::Error::custom(format!("bad GF({p}) entry {v}"))))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                MatrixOverField::over_prime(p, raw.rows, raw.cols, entries)
            }
            Field::Rational => {
                let entries = raw
                    .entries
                    .iter()
                    .map(|v| match v {
                        serde_json::Value::String(s) => parse_rational(s),
                        serde_json::Value::Number(n) => parse_rational(&n.to_string()),
                        other => Err(Error::Format(format!("bad rational entry {other}"))),
                    })
                    .collect::<Result<Vec<_>>>()
                    .map_err(D::Error::custom)?;
                MatrixOverField::over_rationals(raw.rows, raw.cols, entries)
            }
        };
        built.map_err(D::Error::custom)
    }
}
