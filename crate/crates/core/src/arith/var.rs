//! Named variables and monomials.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A named indeterminate such as `x`, `a3`, `t1` or `u(1,2)`.
///
/// A variable is a lowercase family letter together with zero, one or two
/// indices. Variables are totally ordered by family, then arity, then
/// indices; that order fixes the lexicographic tie-break of the monomial
/// order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    family: u8,
    arity: u8,
    idx: [u16; 2],
}

/// Families whose compact spelling carries two single-digit indices (`u12`).
pub const MATRIX_FAMILIES: &[char] = &['g', 'u'];

impl Var {
    /// A bare variable with no index, e.g. `x`.
    pub fn bare(family: char) -> Self {
        Self::checked(family, 0, [0, 0])
    }

    /// A single-index variable, e.g. `a3`.
    pub fn indexed(family: char, i: u16) -> Self {
        Self::checked(family, 1, [i, 0])
    }

    /// A double-index variable, e.g. `u(1,2)`.
    pub fn entry(family: char, i: u16, j: u16) -> Self {
        Self::checked(family, 2, [i, j])
    }

    fn checked(family: char, arity: u8, idx: [u16; 2]) -> Self {
        assert!(
            family.is_ascii_lowercase(),
            "variable family must be an ASCII lowercase letter, got {family:?}"
        );
        Var {
            family: family as u8,
            arity,
            idx,
        }
    }

    pub fn family(&self) -> char {
        self.family as char
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn indices(&self) -> &[u16] {
        &self.idx[..self.arity as usize]
    }

    /// First index (0 for bare variables).
    pub fn i(&self) -> u16 {
        self.idx[0]
    }

    /// Second index (0 unless the variable has two indices).
    pub fn j(&self) -> u16 {
        self.idx[1]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = self.family();
        let matrix_family = MATRIX_FAMILIES.contains(&fam);
        match self.arity {
            0 => write!(f, "{fam}"),
            1 if !matrix_family => write!(f, "{fam}{}", self.idx[0]),
            1 => write!(f, "{fam}({})", self.idx[0]),
            _ if matrix_family && self.idx[0] < 10 && self.idx[1] < 10 => {
                write!(f, "{fam}{}{}", self.idx[0], self.idx[1])
            }
            _ => write!(f, "{fam}({},{})", self.idx[0], self.idx[1]),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A power product of variables, stored as `(variable, exponent)` pairs
/// sorted by variable with strictly positive exponents.
///
/// `Ord` is graded lexicographic: total degree first, then the exponent of
/// the smallest variable, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut s = SmallVec::new();
        s.push((v, e));
        Monomial(s)
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are merged
    /// and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut v: SmallVec<[(Var, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|a| a.0);
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|p| p.0.cmp(&v))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|p| p.0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::new();
        for &(v, e) in &self.0 {
            let d = other.exponent(v);
            if d > 0 {
                out.push((v, e.min(d)));
            }
        }
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Removes `v` from the monomial, returning its exponent and the rest.
    pub fn split_off(&self, v: Var) -> (u32, Monomial) {
        let mut e = 0;
        let rest = self
            .0
            .iter()
            .filter(|p| {
                if p.0 == v {
                    e = p.1;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        (e, Monomial(rest))
    }

    /// Splits the monomial into the part over `vars` and the remainder.
    pub fn partition(&self, keep: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let mut a = SmallVec::new();
        let mut b = SmallVec::new();
        for &p in &self.0 {
            if keep(p.0) {
                a.push(p);
            } else {
                b.push(p);
            }
        }
        (Monomial(a), Monomial(b))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                    // `self` has a positive exponent where `other` has zero
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match x.1.cmp(&y.1) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Var {
        Var::indexed('x', 1)
    }
    fn y() -> Var {
        Var::indexed('x', 2)
    }

    #[test]
    fn display_forms() {
        assert_eq!(Var::indexed('a', 3).to_string(), "a3");
        assert_eq!(Var::entry('u', 1, 2).to_string(), "u12");
        assert_eq!(Var::entry('u', 1, 12).to_string(), "u(1,12)");
        assert_eq!(Var::indexed('u', 4).to_string(), "u(4)");
        assert_eq!(Var::bare('s').to_string(), "s");
    }

    #[test]
    fn grlex_order() {
        let x2 = Monomial::var_pow(x(), 2);
        let xy = Monomial::from_pairs([(x(), 1), (y(), 1)]);
        let y2 = Monomial::var_pow(y(), 2);
        let y3 = Monomial::var_pow(y(), 3);
        assert!(x2 > xy && xy > y2);
        assert!(y3 > x2);
        assert!(Monomial::var(y()) > Monomial::one());
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = Monomial::from_pairs([(x(), 2), (y(), 1)]);
        let b = Monomial::from_pairs([(y(), 3)]);
        let p = a.mul(&b);
        assert_eq!(p.div(&b), Some(a.clone()));
        assert_eq!(p.div(&a), Some(b.clone()));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.gcd(&b), Monomial::var(y()));
    }
}
