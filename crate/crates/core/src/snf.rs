//! Smith normal form of integer matrices.
//!
//! Elimination runs in checked `i64` arithmetic first; if any operation
//! overflows, the whole reduction is restarted over arbitrary-precision
//! integers. Pivots are always the entry of least absolute value.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SnfError {
    #[error("invariant factor does not fit in 64 bits")]
    FactorOverflow,
    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedRows { row: usize, len: usize, expected: usize },
}

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
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
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, SnfError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(SnfError::RaggedRows {
                    row,
                    len: r.len(),
                    expected: cols,
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
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

    /// Matrix product, or `None` on shape mismatch or overflow.
    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = out.get(i, j).checked_add(a.checked_mul(b)?)?;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Nonzero diagonal of the Smith normal form: `d_1 | d_2 | ... | d_r`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<u64>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<u64> {
        self.invariant_factors.iter().copied().filter(|&d| d > 1).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithForm, SnfError> {
    let columns: Vec<Vec<(usize, i64)>> = (0..m.cols)
        .map(|c| (0..m.rows).map(|r| (r, m.get(r, c))).filter(|&(_, x)| x != 0).collect())
        .collect();
    smith_normal_form_sparse(m.rows, &columns)
}

/// Smith form of a sparse matrix given column-wise as `(row, value)` lists.
///
/// Entries equal to `±1` are eliminated first without densifying; the
/// remaining block, usually small, goes through dense reduction.
pub fn smith_normal_form_sparse(rows: usize, columns: &[Vec<(usize, i64)>]) -> Result<SmithForm, SnfError> {
    let (units, rest) = match eliminate_units(rows, columns) {
        Some(reduced) => reduced,
        None => (0, dense_rows(rows, columns)),
    };
    let mut factors = vec![1u64; units];
    factors.extend(dense_smith(rest)?);
    Ok(SmithForm {
        invariant_factors: factors,
    })
}

fn dense_rows(rows: usize, columns: &[Vec<(usize, i64)>]) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; columns.len()]; rows];
    for (c, col) in columns.iter().enumerate() {
        for &(r, x) in col {
            a[r][c] = x;
        }
    }
    a
}

/// Repeatedly pivots on a unit entry, replacing the matrix by the Schur
/// complement. Returns the number of pivots and the dense remainder, or
/// `None` on overflow.
fn eliminate_units(rows: usize, columns: &[Vec<(usize, i64)>]) -> Option<(usize, Vec<Vec<i64>>)> {
    let mut row_maps: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); rows];
    let mut col_sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); columns.len()];
    for (c, col) in columns.iter().enumerate() {
        for &(r, x) in col {
            if x != 0 {
                row_maps[r].insert(c, x);
                col_sets[c].insert(r);
            }
        }
    }
    let mut units = 0;
    loop {
        // unit pivot with the smallest fill-in estimate
        let pivot = col_sets
            .iter()
            .enumerate()
            .filter(|(_, rs)| !rs.is_empty())
            .flat_map(|(c, rs)| {
                let row_maps = &row_maps;
                rs.iter()
                    .filter(move |&&r| row_maps[r][&c].unsigned_abs() == 1)
                    .map(move |&r| ((row_maps[r].len() - 1) * (rs.len() - 1), r, c))
            })
            .min();
        let Some((_, pr, pc)) = pivot else {
            break;
        };
        let pivot_row = core::mem::take(&mut row_maps[pr]);
        let p = pivot_row[&pc];
        for &c in pivot_row.keys() {
            col_sets[c].remove(&pr);
        }
        let targets: Vec<usize> = col_sets[pc].iter().copied().collect();
        for r in targets {
            // row_r -= (a_r,pc / p) * pivot_row, with p = ±1
            let q = row_maps[r][&pc].checked_mul(p)?;
            for (&c, &x) in &pivot_row {
                let entry = row_maps[r].entry(c).or_insert(0);
                *entry = entry.checked_sub(q.checked_mul(x)?)?;
                if *entry == 0 {
                    row_maps[r].remove(&c);
                    col_sets[c].remove(&r);
                } else {
                    col_sets[c].insert(r);
                }
            }
        }
        units += 1;
    }
    let live_rows: Vec<usize> = (0..rows).filter(|&r| !row_maps[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..columns.len()).filter(|&c| !col_sets[c].is_empty()).collect();
    let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let rest = live_rows
        .iter()
        .map(|&r| {
            let mut row = vec![0i64; live_cols.len()];
            for (c, &x) in &row_maps[r] {
                row[col_pos[c]] = x;
            }
            row
        })
        .collect();
    Some((units, rest))
}

fn dense_smith(native: Vec<Vec<i64>>) -> Result<Vec<u64>, SnfError> {
    if let Some(d) = reduce(native.clone()) {
        return Ok(d.into_iter().map(i64::unsigned_abs).collect());
    }
    let big: Vec<Vec<BigInt>> = native
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    reduce(big)
        .expect("bigint arithmetic cannot overflow")
        .into_iter()
        .map(|x| x.abs().to_u64().ok_or(SnfError::FactorOverflow))
        .collect()
}

trait Scalar: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn abs_cmp(&self, other: &Self) -> core::cmp::Ordering;
    /// Truncated quotient, `None` on overflow.
    fn quot(&self, d: &Self) -> Option<Self>;
    fn divides(&self, other: &Self) -> bool;
    /// `self - q * other`, `None` on overflow.
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn divides(&self, other: &Self) -> bool {
        other.wrapping_rem(*self) == 0
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*other)?)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
}

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn divides(&self, other: &Self) -> bool {
        other.is_multiple_of(self)
    }
    fn sub_mul(&self, q: &Self, other: &Self) -> Option<Self> {
        Some(self - q * other)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
}

/// Returns the nonzero diagonal of a Smith form of `a`, or `None` if the
/// scalar type overflowed.
#[allow(clippy::needless_range_loop)]
fn reduce<T: Scalar>(mut a: Vec<Vec<T>>) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pr, pc)) = min_abs_entry(&a, k..rows, k..cols) else {
            break;
        };
        a.swap(k, pr);
        swap_cols(&mut a, k, pc);
        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if !a[i][k].is_zero() {
                    let q = a[i][k].quot(&a[k][k])?;
                    for j in k..cols {
                        a[i][j] = a[i][j].sub_mul(&q, &a[k][j])?;
                    }
                    dirty |= !a[i][k].is_zero();
                }
            }
            for j in k + 1..cols {
                if !a[k][j].is_zero() {
                    let q = a[k][j].quot(&a[k][k])?;
                    for i in k..rows {
                        a[i][j] = a[i][j].sub_mul(&q, &a[i][k])?;
                    }
                    dirty |= !a[k][j].is_zero();
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot; promote it
                let (pr, pc) = smallest_in_cross(&a, k);
                a.swap(k, pr);
                swap_cols(&mut a, k, pc);
                continue;
            }
            let offender = (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !a[k][k].divides(&a[i][j])));
            match offender {
                Some(i) => {
                    for j in k..cols {
                        a[k][j] = a[k][j].add(&a[i][j])?;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[k][k].clone());
        k += 1;
    }
    Some(diagonal)
}

fn min_abs_entry<T: Scalar>(
    a: &[Vec<T>],
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs_cmp(&a[bi][bj]).is_lt()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross<T: Scalar>(a: &[Vec<T>], k: usize) -> (usize, usize) {
    let rows = a.len();
    let cols = a[0].len();
    let cells = (k..rows).map(|i| (i, k)).chain((k + 1..cols).map(|j| (k, j)));
    let mut best = (k, k);
    for (i, j) in cells {
        if !a[i][j].is_zero() && (a[best.0][best.1].is_zero() || a[i][j].abs_cmp(&a[best.0][best.1]).is_lt()) {
            best = (i, j);
        }
    }
    best
}

fn swap_cols<T>(a: &mut [Vec<T>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> Vec<u64> {
        smith_normal_form(&IntMatrix::from_rows(rows).unwrap())
            .unwrap()
            .invariant_factors
    }

    #[test]
    fn two_by_two_example() {
        // hand elimination: gcd of entries is 2, |det| = 8, so (2, 4)
        assert_eq!(snf(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
    }

    #[test]
    fn identity_and_zero() {
        let id = smith_normal_form(&IntMatrix::identity(3)).unwrap();
        assert_eq!(id.invariant_factors, vec![1, 1, 1]);
        let z = smith_normal_form(&IntMatrix::zeros(3, 4)).unwrap();
        assert_eq!(z.rank(), 0);
        assert!(z.invariant_factors.is_empty());
        assert_eq!(smith_normal_form(&IntMatrix::zeros(0, 5)).unwrap().rank(), 0);
        assert_eq!(smith_normal_form(&IntMatrix::zeros(5, 0)).unwrap().rank(), 0);
    }

    #[test]
    fn divisibility_chain_is_enforced() {
        // diag(2, 3) has Smith form diag(1, 6)
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(snf(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]), vec![2, 2, 60]);
    }

    #[test]
    fn overflow_escalates_to_bigint() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, big - 1], vec![big - 1, big - 2]];
        // det = big(big-2) - (big-1)^2 = -1, so the form is (1, 1)
        assert_eq!(snf(&m), vec![1, 1]);
    }

    #[test]
    fn factor_overflow_is_reported() {
        let huge = i64::MAX;
        let m = IntMatrix::from_rows(&[vec![huge, 0], vec![0, huge - 1]]).unwrap();
        assert_eq!(smith_normal_form(&m), Err(SnfError::FactorOverflow));
    }

    #[test]
    fn sparse_and_dense_agree() {
        let rows = vec![vec![1, 2, 0, 3], vec![2, 4, 0, 6], vec![0, 1, 5, 0], vec![3, 0, 2, 1]];
        let m = IntMatrix::from_rows(&rows).unwrap();
        let columns: Vec<Vec<(usize, i64)>> = (0..4)
            .map(|c| (0..4).filter(|&r| rows[r][c] != 0).map(|r| (r, rows[r][c])).collect())
            .collect();
        let sparse = smith_normal_form_sparse(4, &columns).unwrap();
        assert_eq!(sparse.invariant_factors, reduce(rows.clone()).unwrap().into_iter().map(i64::unsigned_abs).collect::<Vec<_>>());
        assert_eq!(smith_normal_form(&m).unwrap(), sparse);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
    }
}
