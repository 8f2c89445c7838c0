//! Square matrices over rational functions with determinant one.

use std::fmt;
use std::ops::Mul;

use crate::arith::RatFunc;
use crate::error::{Error, Result};

/// An `n x n` matrix of [`RatFunc`] entries lying in `SL_n`.
///
/// Entries are addressed 1-based through [`GroupMatrix::at`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupMatrix {
    n: usize,
    entries: Vec<RatFunc>,
}

impl GroupMatrix {
    /// Builds a matrix from rows, checking that the determinant is 1.
    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
        }
        let m = GroupMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        };
        let det = m.det();
        if !det.is_one() {
            return Err(Error::DeterminantNotOne(det.to_string()));
        }
        Ok(m)
    }

    /// Skips the determinant check; for products of known group elements.
    pub(crate) fn trusted(n: usize, entries: Vec<RatFunc>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        GroupMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = vec![RatFunc::zero(); n * n];
        for i in 0..n {
            e[i * n + i] = RatFunc::one();
        }
        GroupMatrix { n, entries: e }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn at(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<RatFunc>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut e = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                e.push(self.entries[i * n + j].clone());
            }
        }
        GroupMatrix { n, entries: e }
    }

    /// Applies `f` to every entry; the caller guarantees the result is
    /// still in `SL_n`.
    pub(crate) fn map_trusted(&self, f: impl Fn(usize, usize, &RatFunc) -> RatFunc) -> Self {
        let n = self.n;
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(k, x)| f(k / n + 1, k % n + 1, x))
            .collect();
        GroupMatrix { n, entries }
    }

    /// Applies `f` to every entry and rechecks the determinant.
    pub fn try_map(&self, f: impl Fn(&RatFunc) -> Result<RatFunc>) -> Result<Self> {
        let rows = self
            .rows()
            .into_iter()
            .map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        GroupMatrix::from_rows(rows)
    }

    /// Determinant of the submatrix on the given rows and columns (1-based,
    /// equal lengths), by expansion over column subsets.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> RatFunc {
        assert_eq!(rows.len(), cols.len());
        let k = rows.len();
        if k == 0 {
            return RatFunc::one();
        }
        // dp[mask] = minor on the first popcount(mask) rows and the columns in mask
        let mut dp: Vec<Option<RatFunc>> = vec![None; 1 << k];
        dp[0] = Some(RatFunc::one());
        for mask in 0usize..(1 << k) {
            let Some(cur) = dp[mask].take() else { continue };
            if cur.is_zero() {
                continue;
            }
            let r = mask.count_ones() as usize;
            if r == k {
                dp[mask] = Some(cur);
                continue;
            }
            let row = rows[r];
            for c in 0..k {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let x = self.at(row, cols[c]);
                if x.is_zero() {
                    continue;
                }
                // sign: number of chosen columns to the right of c
                let right = (mask >> (c + 1)).count_ones();
                let term = &cur * x;
                let term = if right % 2 == 1 { -term } else { term };
                let slot = &mut dp[mask | (1 << c)];
                *slot = Some(match slot.take() {
                    Some(s) => &s + &term,
                    None => term,
                });
            }
        }
        dp[(1 << k) - 1].take().unwrap_or_else(RatFunc::zero)
    }

    pub fn det(&self) -> RatFunc {
        let all: Vec<usize> = (1..=self.n).collect();
        self.minor(&all, &all)
    }

    /// The leading principal `i x i` minor.
    pub fn leading_minor(&self, i: usize) -> RatFunc {
        let idx: Vec<usize> = (1..=i).collect();
        self.minor(&idx, &idx)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Self {
        let n = self.n;
        let mut a = self.rows();
        let mut b = GroupMatrix::identity(n).rows();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("determinant-one matrix is invertible");
            a.swap(col, p);
            b.swap(col, p);
            let piv = a[col][col].inv().unwrap();
            if !piv.is_one() {
                for x in a[col].iter_mut().chain(b[col].iter_mut()) {
                    *x = &*x * &piv;
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    if !a[col][c].is_zero() {
                        a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                    }
                    if !b[col][c].is_zero() {
                        b[r][c] = &b[r][c] - &(&f * &b[col][c]);
                    }
                }
            }
        }
        GroupMatrix {
            n,
            entries: b.into_iter().flatten().collect(),
        }
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (1..=self.n).all(|i| {
            (1..=self.n).all(|j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => self.at(i, j).is_one(),
                std::cmp::Ordering::Greater => self.at(i, j).is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.transpose().is_upper_unitriangular()
    }

    pub fn is_diagonal(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| i == j || self.at(i, j).is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupMatrix::identity(self.n)
    }
}

impl Mul for &GroupMatrix {
    type Output = GroupMatrix;

    fn mul(self, rhs: &GroupMatrix) -> GroupMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut out = vec![RatFunc::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = &self.entries[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &rhs.entries[k * n + j];
                    if y.is_zero() {
                        continue;
                    }
                    let t = if x.is_one() {
                        y.clone()
                    } else if y.is_one() {
                        x.clone()
                    } else {
                        x * y
                    };
                    let slot = &mut out[i * n + j];
                    *slot = if slot.is_zero() { t } else { &*slot + &t };
                }
            }
        }
        GroupMatrix { n, entries: out }
    }
}

impl Mul for GroupMatrix {
    type Output = GroupMatrix;

    fn mul(self, rhs: GroupMatrix) -> GroupMatrix {
        &self * &rhs
    }
}

impl fmt::Display for GroupMatrix {
    /// Row-major nested lists, e.g. `[[1, a1], [0, 1]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.entries.chunks(self.n).enumerate() {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for GroupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
