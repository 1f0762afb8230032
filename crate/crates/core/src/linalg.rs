//! Dense square matrices over the rationals.
//!
//! Determinants go through fraction-free (Bareiss) elimination on an
//! integer matrix obtained by clearing each row's denominators, so no
//! intermediate fraction ever appears. Rank uses ordinary elimination over
//! the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::{format_rational, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { int(1) } else { int(0) })
    }

    /// Builds from `f(row, col)`, both zero-based.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { n, entries }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RationalMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| int(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.n + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        // chunks(0) panics, so an empty matrix yields no rows explicitly
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, a: &Rational) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) * a)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| {
            (0..self.n).fold(Rational::zero(), |acc, k| {
                acc + self.get(i, k) * other.get(k, j)
            })
        })
    }

    /// The lower-right `size`×`size` block.
    pub fn trailing_block(&self, size: usize) -> Self {
        assert!(size <= self.n);
        let off = self.n - size;
        Self::from_fn(size, |i, j| self.get(off + i, off + j).clone())
    }

    pub fn det(&self) -> Rational {
        det(self)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn trailing_minors(&self) -> MinorSequence {
        trailing_minors(self)
    }
}

impl fmt::Display for RationalMatrix {
    /// Row-major, top row first, columns right-aligned.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(format_rational).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.n {
            f.write_str("[")?;
            for j in 0..self.n {
                write!(f, " {:>width$}", cells[i * self.n + j])?;
            }
            f.write_str(" ]")?;
            if i + 1 < self.n {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Trailing principal minors by size: position `s` (1-based) holds the
/// determinant of the lower-right `s`×`s` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSequence {
    values: Vec<Rational>,
}

impl MinorSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        MinorSequence { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Minor of the given size, `1..=len`.
    pub fn size(&self, size: usize) -> &Rational {
        &self.values[size - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Translates a size to the `k` of the `|b_ij|_{i,j=k+1..n}` indexing.
    pub fn k_of_size(&self, size: usize) -> usize {
        self.values.len() - size
    }
}

/// Exact determinant.
pub fn det(m: &RationalMatrix) -> Rational {
    let n = m.dim();
    if n == 0 {
        return int(1);
    }
    let (mut rows, scale) = clear_denominators(m);
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !rows[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            rows.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j];
                debug_assert!(v.is_multiple_of(&prev));
                rows[i][j] = v / &prev;
            }
            rows[i][k] = BigInt::zero();
        }
        prev = rows[k][k].clone();
    }
    let value = Rational::new(rows[n - 1][n - 1].clone(), scale);
    if sign {
        -value
    } else {
        value
    }
}

/// Multiplies each row by the lcm of its denominators; returns the integer
/// rows and the product of the multipliers.
fn clear_denominators(m: &RationalMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut total = BigInt::one();
    let rows = m
        .rows()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            total *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    (rows, total)
}

/// Exact rank by Gaussian elimination over the rationals.
pub fn rank(m: &RationalMatrix) -> usize {
    let n = m.dim();
    let mut a: Vec<Vec<Rational>> = m.rows().map(<[Rational]>::to_vec).collect();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let pivot = a[r][c].clone();
        for i in r + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            for j in c..n {
                let d = &f * &a[r][j];
                a[i][j] -= d;
            }
        }
        r += 1;
    }
    r
}

/// Trailing principal minors of sizes `1..=n`, one determinant per size.
pub fn trailing_minors(m: &RationalMatrix) -> MinorSequence {
    MinorSequence::new((1..=m.dim()).map(|s| det(&m.trailing_block(s))).collect())
}

/// Largest size whose trailing minor is nonzero, 0 if none.
pub fn last_nonvanishing_size(minors: &MinorSequence) -> usize {
    (1..=minors.len())
        .rev()
        .find(|&s| !minors.size(s).is_zero())
        .unwrap_or(0)
}
