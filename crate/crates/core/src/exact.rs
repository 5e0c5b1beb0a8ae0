//! Exact fraction arithmetic and exact matrix rank over the rationals.
//!
//! Scalars are arbitrary-precision [`Rational`] values (backed by `num`), so
//! rank results are certificates, not threshold judgements. The instance
//! sizes here are tiny (at most a few dozen rows), which keeps plain exact
//! elimination cheap.

use num::{BigInt, Signed, Zero};
use thiserror::Error;

pub use crate::scalar::Rational;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ExactError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("cannot invert zero")]
    InvertZero,
    #[error("malformed rational literal {0:?} (expected \"p\" or \"p/q\")")]
    Malformed(String),
    #[error("matrix dimensions {rows}x{cols} do not match entry count {entries}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        entries: usize,
    },
}

/// Builds the reduced fraction `numer/denom`, normalizing the sign into the
/// numerator.
pub fn rational(numer: i64, denom: i64) -> Result<Rational, ExactError> {
    if denom == 0 {
        return Err(ExactError::ZeroDenominator);
    }
    Ok(Rational::new(BigInt::from(numer), BigInt::from(denom)))
}

pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact reciprocal; zero has none.
pub fn invert(value: &Rational) -> Result<Rational, ExactError> {
    if value.is_zero() {
        return Err(ExactError::InvertZero);
    }
    Ok(value.recip())
}

/// Parses `"p"` or `"p/q"` with optional sign, in lowest terms on return.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let trimmed = text.trim();
    if let Some((num, den)) = trimmed.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ExactError::Malformed(text.to_owned()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ExactError::Malformed(text.to_owned()))?;
        if d.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational::new(n, d))
    } else {
        let n: BigInt = trimmed
            .parse()
            .map_err(|_| ExactError::Malformed(text.to_owned()))?;
        Ok(Rational::from_integer(n))
    }
}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, ExactError> {
        if entries.len() != rows * cols {
            return Err(ExactError::DimensionMismatch {
                rows,
                cols,
                entries: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let entries: Vec<Rational> = rows.into_iter().flatten().collect();
        Self::new(nrows, ncols, entries)
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self, ExactError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rational_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.at(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Copy with one column removed.
    pub fn without_column(&self, col: usize) -> Self {
        assert!(col < self.cols, "column out of range");
        let mut entries = Vec::with_capacity(self.rows * (self.cols - 1));
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c != col {
                    entries.push(self.at(r, c).clone());
                }
            }
        }
        Self {
            rows: self.rows,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Copy with an extra row appended.
    pub fn with_row(&self, row: Vec<Rational>) -> Result<Self, ExactError> {
        if row.len() != self.cols {
            return Err(ExactError::DimensionMismatch {
                rows: self.rows + 1,
                cols: self.cols,
                entries: self.entries.len() + row.len(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(row);
        Ok(Self {
            rows: self.rows + 1,
            cols: self.cols,
            entries,
        })
    }
}

/// Rank over the rational field by exact Gaussian elimination.
///
/// Pivots are chosen as the largest-magnitude entry in the current column to
/// curb coefficient growth; any nonzero pivot would be mathematically valid.
/// The result is exact: no thresholds are involved anywhere.
pub fn exact_rank(m: &RationalMatrix) -> usize {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|r| (0..cols).map(|c| m.at(r, c).clone()).collect())
        .collect();

    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&r1, &r2| a[r1][col].abs().cmp(&a[r2][col].abs()));
        let Some(pivot) = pivot else { continue };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[rank][col];
            for c in col..cols {
                let delta = &factor * &a[rank][c];
                a[r][c] = &a[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
