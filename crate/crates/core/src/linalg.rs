//! Exact matrix rank over `Q` or `F_p`.
//!
//! Over characteristic zero the rank is computed by fraction-free (Bareiss)
//! elimination on integers: first with checked `i128` arithmetic, and on
//! overflow again from scratch with arbitrary-precision integers. No floating
//! point is involved.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficient field: `Q` (characteristic 0) or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Field {
    characteristic: u32,
}

impl Field {
    pub const RATIONALS: Field = Field { characteristic: 0 };

    /// `0` selects the rationals; otherwise `p` must be prime.
    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::NotPrime(characteristic));
        }
        Ok(Field { characteristic })
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::RATIONALS
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => f.write_str("QQ"),
            p => write!(f, "ZZ/{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= u64::from(p) {
        if u64::from(p) % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            m.data[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
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

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

/// Exact rank of `m` over `field`.
pub fn rank_over_field(m: &IntMatrix, field: Field) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match field.characteristic {
        0 => {
            let rows: Vec<Vec<i128>> = (0..m.rows)
                .map(|r| (0..m.cols).map(|c| i128::from(m.get(r, c))).collect())
                .collect();
            bareiss_rank_i128(rows).unwrap_or_else(|| {
                let rows = (0..m.rows)
                    .map(|r| (0..m.cols).map(|c| BigInt::from(m.get(r, c))).collect())
                    .collect();
                bareiss_rank_big(rows)
            })
        }
        p => rank_mod_p(m, u64::from(p)),
    }
}

/// Fraction-free elimination; `None` when an intermediate overflows.
fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col];
        for r in rank + 1..rows {
            let f = a[r][col];
            for c in col + 1..cols {
                let lhs = a[r][c].checked_mul(p)?;
                let rhs = f.checked_mul(a[rank][c])?;
                a[r][c] = lhs.checked_sub(rhs)? / prev;
            }
            a[r][col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col].clone();
        for r in rank + 1..rows {
            let f = a[r][col].clone();
            for c in col + 1..cols {
                let v = (&a[r][c] * &p - &f * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut a: Vec<Vec<u64>> = (0..m.rows).map(|r| (0..m.cols).map(|c| reduce(m.get(r, c))).collect()).collect();
    let rows = m.rows;
    let cols = m.cols;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_pow(a[rank][col], p - 2, p);
        for c in col..cols {
            a[rank][c] = a[rank][c] * inv % p;
        }
        for r in rank + 1..rows {
            let f = a[r][col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                a[r][c] = (a[r][c] + (p - f) * a[rank][c]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
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

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn field_validation() {
        assert!(Field::new(0).is_ok());
        assert!(Field::new(2).is_ok());
        assert!(Field::new(32003).is_ok());
        assert_eq!(Field::new(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(1).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn small_ranks() {
        let id = IntMatrix::identity(3);
        assert_eq!(rank_over_field(&id, Field::RATIONALS), 3);
        assert_eq!(rank_over_field(&IntMatrix::zeros(3, 4), Field::RATIONALS), 0);
        // Boundary of the hollow triangle: edges {1,2},{1,3},{2,3} -> vertices.
        let d1 = IntMatrix::from_rows(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(rank_over_field(&d1, Field::RATIONALS), 2);
        assert_eq!(rank_over_field(&d1, Field::new(2).unwrap()), 2);
    }

    #[test]
    fn characteristic_matters() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]);
        assert_eq!(rank_over_field(&m, Field::RATIONALS), 2);
        assert_eq!(rank_over_field(&m, Field::new(2).unwrap()), 1);
    }

    #[test]
    fn big_integer_fallback_agrees() {
        // Entries near 10^10 push i128 Bareiss past its range after a few pivots.
        let n = 12;
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| ((i * 7 + j * 13) % 17) as i64 * 1_000_000_007 + (i == j) as i64).collect()).collect();
        let m = IntMatrix::from_rows(&rows);
        let big_rows = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        assert_eq!(rank_over_field(&m, Field::RATIONALS), bareiss_rank_big(big_rows));
    }

    /// Rank over Q by elimination with exact rationals as numerator/denominator pairs of BigInt.
    fn rational_rank(m: &IntMatrix) -> usize {
        use num_bigint::BigInt as B;
        let mut a: Vec<Vec<(B, B)>> = (0..m.rows()).map(|r| (0..m.cols()).map(|c| (B::from(m.get(r, c)), B::from(1))).collect()).collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(piv) = (rank..m.rows()).find(|&r| !a[r][col].0.is_zero()) else { continue };
            a.swap(rank, piv);
            for r in rank + 1..m.rows() {
                if a[r][col].0.is_zero() { continue; }
                let (pn, pd) = a[rank][col].clone();
                let (fnum, fden) = a[r][col].clone();
                for c in col..m.cols() {
                    // a[r][c] -= (f/p) * a[rank][c]
                    let (xn, xd) = a[r][c].clone();
                    let (yn, yd) = a[rank][c].clone();
                    let tn = &fnum * &pd * &yn;
                    let td = &fden * &pn * &yd;
                    a[r][c] = (&xn * &td - &tn * &xd, &xd * &td);
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_elimination(rows in 1usize..6, cols in 1usize..6, seed in proptest::collection::vec(-3i64..=3, 36)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|r| (0..cols).map(|c| seed[r * 6 + c]).collect()).collect();
            let m = IntMatrix::from_rows(&data);
            prop_assert_eq!(rank_over_field(&m, Field::RATIONALS), rational_rank(&m));
            prop_assert!(rank_over_field(&m, Field::new(32003).unwrap()) <= rational_rank(&m));
        }
    }
}
