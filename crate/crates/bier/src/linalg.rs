//! Exact rational vectors and small dense linear algebra.
//!
//! Everything here works over `num::BigRational`; there is no floating point
//! anywhere in the crate. The matrices that show up are tiny (at most ~40
//! rows), so plain fraction-free-ish Gaussian elimination is all we need.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for small rational constants.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    BigRational::from_integer(BigInt::from(num))
}

/// Parse a rational written as `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    BigRational::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Render with an explicit denominator only when it is not 1, e.g. `-2/3`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// An exact point of `R^n`. Points of `H_0` additionally have zero
/// coordinate sum, which the operations that need it check explicitly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector {
    coords: Vec<Rational>,
}

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector { coords }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RationalVector::new(v.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        RationalVector::new(vec![Rational::zero(); n])
    }

    pub fn parse(parts: &[&str]) -> Result<Self> {
        let coords = parts
            .iter()
            .map(|p| parse_rational(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalVector::new(coords))
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    /// Coordinate at the 1-based position `i`.
    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i - 1]
    }

    pub fn sum(&self) -> Rational {
        self.coords.iter().sum()
    }

    pub fn is_zero_sum(&self) -> bool {
        self.sum().is_zero()
    }

    pub fn dot(&self, other: &RationalVector) -> Rational {
        debug_assert_eq!(self.len(), other.len());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn neg(&self) -> RationalVector {
        RationalVector::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn scaled(&self, s: &Rational) -> RationalVector {
        RationalVector::new(self.coords.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.len(), other.len());
        RationalVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &RationalVector) -> RationalVector {
        debug_assert_eq!(self.len(), other.len());
        RationalVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<Rational>> for RationalVector {
    fn from(coords: Vec<Rational>) -> Self {
        RationalVector::new(coords)
    }
}

impl Serialize for RationalVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coords.iter().map(format_rational).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coords = strings
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(RationalVector::new(coords))
    }
}

/// Row echelon reduction in place. Returns the pivot columns.
// elimination reads row r while updating row i, so index loops stay
#[allow(clippy::needless_range_loop)]
fn echelon(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &factor;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rectangular matrix.
pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let mut m = matrix.to_vec();
    echelon(&mut m).len()
}

/// Solve `A x = b` exactly; returns one solution or `None` if inconsistent.
pub fn solve_linear(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 {
        return Some(Vec::new());
    } else {
        a[0].len()
    };
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m);
    // Inconsistent iff some pivot lands in the rhs column.
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Basis of the nullspace `{x : A x = 0}`.
pub fn nullspace(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let rows = a.len();
    let cols = if rows == 0 {
        return Vec::new();
    } else {
        a[0].len()
    };
    let mut m = a.to_vec();
    let pivots = echelon(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m[r][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square matrix.
#[allow(clippy::needless_range_loop)]
pub fn determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        det *= m[c][c].clone();
        let inv = m[c][c].clone();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = &m[i][c] / &inv;
            for j in c..n {
                let t = &m[c][j] * &factor;
                m[i][j] = &m[i][j] - t;
            }
        }
    }
    det
}

/// Clear denominators and divide by the gcd, preserving the direction of the
/// vector. The result generates the same ray as the input.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in v {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &gcd).collect()
}

/// Split a positive integer as `s^2 * m` with `m` squarefree; returns `(s, m)`.
pub fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive());
    let mut rest = n.clone();
    let mut s = BigInt::one();
    let mut m = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let mut mult = 0u32;
        while (&rest % &d).is_zero() {
            rest /= &d;
            mult += 1;
        }
        if mult > 0 {
            s *= d.pow(mult / 2);
            if mult % 2 == 1 {
                m *= &d;
            }
        }
        d += 1;
    }
    // rest is now 1 or a prime
    m *= rest;
    (s, m)
}
