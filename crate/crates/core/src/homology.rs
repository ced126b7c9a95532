//! Exact ranks over the rationals and homology of chain complexes.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: alloc::vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                got: r.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    fn is_zero_product(&self, other: &Self) -> bool {
        (0..self.rows).all(|r| {
            (0..other.cols).all(|c| {
                (0..self.cols)
                    .map(|k| i128::from(self.get(r, k)) * i128::from(other.get(k, c)))
                    .sum::<i128>()
                    == 0
            })
        })
    }

    /// Rank over ℚ.
    ///
    /// Unit pivots are eliminated first with integer row operations; the
    /// remainder goes through Bareiss fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| BigInt::from(self.get(r, c))).collect())
            .collect();
        let mut rank = 0;
        let mut live_rows: Vec<usize> = (0..self.rows).collect();
        let mut live_cols: Vec<usize> = (0..self.cols).collect();

        while let Some((ri, ci)) = find_unit(&m, &live_rows, &live_cols) {
            let (pr, pc) = (live_rows[ri], live_cols[ci]);
            let pivot = m[pr][pc].clone();
            for &r in &live_rows {
                if r == pr || m[r][pc].is_zero() {
                    continue;
                }
                // pivot is ±1, so f = m[r][pc] / pivot is exact.
                let f = &m[r][pc] * &pivot;
                for &c in &live_cols {
                    if !m[pr][c].is_zero() {
                        let delta = &f * &m[pr][c];
                        m[r][c] -= delta;
                    }
                }
            }
            live_rows.swap_remove(ri);
            live_cols.swap_remove(ci);
            rank += 1;
        }

        let mut rest: Vec<Vec<BigInt>> = live_rows
            .iter()
            .map(|&r| live_cols.iter().map(|&c| m[r][c].clone()).collect())
            .collect();
        rank + bareiss_rank(&mut rest)
    }
}

fn find_unit(m: &[Vec<BigInt>], rows: &[usize], cols: &[usize]) -> Option<(usize, usize)> {
    for (ri, &r) in rows.iter().enumerate() {
        for (ci, &c) in cols.iter().enumerate() {
            if m[r][c].abs().is_one() {
                return Some((ri, ci));
            }
        }
    }
    None
}

fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Homology ranks of `C_0 ← C_1 ← ... ← C_m`.
///
/// `maps[k]` is the matrix of `C_{k+1} → C_k`, of shape
/// `dims[k] × dims[k+1]`.
pub fn homology_ranks(dims: &[usize], maps: &[IntMatrix]) -> Result<Vec<usize>> {
    if maps.len() + 1 != dims.len().max(1) {
        return Err(Error::DimensionMismatch(maps.len()));
    }
    for (k, d) in maps.iter().enumerate() {
        if d.rows() != dims[k] || d.cols() != dims[k + 1] {
            return Err(Error::DimensionMismatch(k));
        }
    }
    for k in 1..maps.len() {
        if !maps[k - 1].is_zero_product(&maps[k]) {
            return Err(Error::NotAComplex(k));
        }
    }
    let ranks: Vec<usize> = maps.iter().map(IntMatrix::rank).collect();
    Ok((0..dims.len())
        .map(|k| {
            let out = if k > 0 { ranks[k - 1] } else { 0 };
            let inc = ranks.get(k).copied().unwrap_or(0);
            dims[k] - out - inc
        })
        .collect())
}
