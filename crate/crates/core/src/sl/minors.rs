//! Generalized minors, Gauss decomposition and the twist map.

use crate::arith::RatFunc;
use crate::error::{Error, Result};
use crate::roots::{CartanDatum, Weight, Word};

use super::charts::{iota, lift, longest_lift, LiftStyle};
use super::matrix::GroupMatrix;

/// A weight `gamma = w omega_i` given by the node `i` and a reduced word
/// for `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSpec {
    pub i: usize,
    pub word: Word,
}

impl MinorSpec {
    pub fn new(i: usize, word: Word) -> Self {
        MinorSpec { i, word }
    }

    /// Minor data for `gamma` with the minimal-length witness.
    pub fn for_weight(d: &CartanDatum, gamma: &Weight) -> Result<Self> {
        let (i, w) = d.minimal_coset_rep(gamma)?;
        Ok(MinorSpec {
            i,
            word: w.word().clone(),
        })
    }

    pub fn gamma(&self, d: &CartanDatum) -> Weight {
        d.weyl_apply(&self.word, &d.omega(self.i))
    }
}

/// `Delta_gamma(g) = Delta_i(g w.ddot)`, with `Delta_i` the leading
/// principal `i x i` minor.
pub fn gen_minor(spec: &MinorSpec, g: &GroupMatrix) -> Result<RatFunc> {
    let n = g.n();
    if spec.i == 0 || spec.i >= n {
        return Err(Error::IndexOutOfRange {
            index: spec.i,
            max: n - 1,
        });
    }
    let w = lift(&spec.word, LiftStyle::Ddot, n)?;
    Ok((g * &w).leading_minor(spec.i))
}

/// `g = L D U` with `L` lower unitriangular, `D` diagonal and `U` upper
/// unitriangular.
pub fn gauss_decompose(g: &GroupMatrix) -> Result<(GroupMatrix, GroupMatrix, GroupMatrix)> {
    let n = g.n();
    let mut a = g.rows();
    let mut l = GroupMatrix::identity(n).rows();
    for k in 0..n {
        if a[k][k].is_zero() {
            return Err(Error::NotGaussDecomposable(k + 1));
        }
        let piv_inv = a[k][k].inv()?;
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] * &piv_inv;
            let (top, bottom) = a.split_at_mut(r);
            for (x, p) in bottom[0][k..].iter_mut().zip(&top[k][k..]) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
            l[r][k] = f;
        }
    }
    let mut d = vec![RatFunc::zero(); n * n];
    let mut u = GroupMatrix::identity(n).entries().to_vec();
    for k in 0..n {
        d[k * n + k] = a[k][k].clone();
        let inv = a[k][k].inv()?;
        for c in k + 1..n {
            u[k * n + c] = &a[k][c] * &inv;
        }
    }
    Ok((
        GroupMatrix::trusted(n, l.into_iter().flatten().collect()),
        GroupMatrix::trusted(n, d),
        GroupMatrix::trusted(n, u),
    ))
}

/// `A(u) = iota(L)` where `u w0.dot^-1 = L D U'`.
pub fn twist(u: &GroupMatrix) -> Result<GroupMatrix> {
    if !u.is_upper_unitriangular() {
        return Err(Error::NotUnipotent);
    }
    let w0_inv = longest_lift(u.n(), LiftStyle::Dot)?.inverse();
    let (l, _, _) = gauss_decompose(&(u * &w0_inv)).map_err(|_| Error::TwistUndefined)?;
    Ok(iota(&l))
}
