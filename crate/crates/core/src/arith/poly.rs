//! Sparse multivariate polynomials over `BigInt` or `BigRational`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::var::{Monomial, Var};

/// Coefficient ring of a [`Poly`].
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Zero + One {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_neg(&self) -> bool;
}

macro_rules! impl_coeff {
    ($t:ty) => {
        impl Coeff for $t {
            fn add_ref(&self, o: &Self) -> Self {
                self + o
            }
            fn sub_ref(&self, o: &Self) -> Self {
                self - o
            }
            fn mul_ref(&self, o: &Self) -> Self {
                self * o
            }
            fn neg_ref(&self) -> Self {
                -self
            }
            fn is_neg(&self) -> bool {
                Signed::is_negative(self)
            }
        }
    };
}

impl_coeff!(BigInt);
impl_coeff!(BigRational);

/// A polynomial as a map from monomials to nonzero coefficients.
///
/// The map is ordered by graded-lex, so the leading term is the last entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C: Coeff> {
    terms: BTreeMap<Monomial, C>,
}

/// Polynomial with rational coefficients.
pub type MultiPoly = Poly<BigRational>;
/// Polynomial with integer coefficients.
pub type IntPoly = Poly<BigInt>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add_ref(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The value of a constant polynomial (`Some(0)` for zero).
    pub fn constant_value(&self) -> Option<C> {
        if self.terms.is_empty() {
            return Some(C::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.leading_term().map(|t| t.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Coefficients in `v`: entry `k` is the coefficient of `v^k`, free of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Self> {
        let mut out: Vec<Self> = vec![Self::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            out[e as usize].terms.insert(rest, c.clone());
        }
        out
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(v: Var, coeffs: &[Self]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let vk = Monomial::var_pow(v, k as u32);
            for (m, a) in &c.terms {
                p.terms.insert(m.mul(&vk), a.clone());
            }
        }
        p
    }

    /// Groups terms by their part over the variables selected by `outer`,
    /// returning the coefficient polynomials in the remaining variables.
    pub fn coeffs_over(&self, outer: impl Fn(Var) -> bool) -> BTreeMap<Monomial, Self> {
        let mut out: BTreeMap<Monomial, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (o, rest) = m.partition(&outer);
            out.entry(o).or_default().terms.insert(rest, c.clone());
        }
        out
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for m in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul_ref(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        if m.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    /// Exact division by a monomial; `None` unless every term is divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (k, a) in &self.terms {
            terms.insert(k.div(m)?, a.clone());
        }
        Some(Poly { terms })
    }

    pub fn pow(&self, mut k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        if self.is_monomial() {
            let (m, c) = self.leading_term().unwrap();
            let mut cc = C::one();
            for _ in 0..k {
                cc = cc.mul_ref(c);
            }
            return Self::term(m.pow(k), cc);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        loop {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = &base * &base;
        }
        acc
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Replaces each coefficient sign so the leading coefficient is positive.
    pub fn with_positive_lead(self) -> Self {
        match self.leading_coeff() {
            Some(c) if c.is_neg() => -&self,
            _ => self,
        }
    }

    /// True when all coefficients are positive.
    pub fn is_subtraction_free(&self) -> bool {
        self.terms.values().all(|c| !c.is_neg())
    }

    /// Evaluates by substituting each variable through `value`, working in an
    /// arbitrary target ring given by the closures.
    pub fn eval_with<T: Clone>(
        &self,
        zero: T,
        lift: impl Fn(&C) -> T,
        value: impl Fn(Var, u32) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> T {
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut t = lift(c);
            for (v, e) in m.iter() {
                t = mul(&t, &value(v, e));
            }
            acc = add(&acc, &t);
        }
        acc
    }
}

impl IntPoly {
    /// Gcd of the integer coefficients (nonnegative; zero for the zero poly).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division of every coefficient by an integer.
    pub fn div_int(&self, d: &BigInt) -> Self {
        if d.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!((c % d).is_zero());
                    (m.clone(), c / d)
                })
                .collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        self.div_int(&c)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if let Some(c) = d.constant_value() {
            if self.terms.values().all(|a| (a % &c).is_zero()) {
                return Some(Poly {
                    terms: self.terms.iter().map(|(m, a)| (m.clone(), a / &c)).collect(),
                });
            }
            return None;
        }
        if d.is_monomial() {
            let (dm, dc) = d.leading_term().unwrap();
            let mut terms = BTreeMap::new();
            for (m, a) in &self.terms {
                if !(a % dc).is_zero() {
                    return None;
                }
                terms.insert(m.div(dm)?, a / dc);
            }
            return Some(Poly { terms });
        }
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quo = IntPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&dm)?;
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let t = IntPoly::term(qm.clone(), q.clone());
            rem = &rem - &(d * &t);
            quo.add_term(qm, q);
        }
        Some(quo)
    }

    pub fn to_rational(&self) -> MultiPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl MultiPoly {
    /// Clears denominators: returns `(p, d)` with `self = p / d`, `p` integral
    /// and `d > 0` minimal.
    pub fn to_integral(&self) -> (IntPoly, BigInt) {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let p = self.map_coeffs(|c| c.numer() * (&l / c.denom()));
        (p, l)
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg_ref());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        let mut acc: std::collections::HashMap<Monomial, C> =
            std::collections::HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add_ref(&c);
                        *e.get_mut() = s;
                    }
                }
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect(),
        }
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Terms in descending graded-lex order, e.g. `a1*a2 - 3*a3^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_neg();
            let abs = if neg { c.neg_ref() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u16) -> IntPoly {
        IntPoly::var(Var::indexed('x', i))
    }
    fn c(k: i64) -> IntPoly {
        IntPoly::constant(BigInt::from(k))
    }

    #[test]
    fn arithmetic_and_printing() {
        let p = &(&v(1) + &c(1)) * &(&v(1) - &c(1));
        assert_eq!(p.to_string(), "x1^2 - 1");
        let q = &(&v(1) * &v(2)) + &c(3);
        assert_eq!(q.pow(2).to_string(), "x1^2*x2^2 + 6*x1*x2 + 9");
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = &v(1) + &v(2);
        let b = &(&v(1) - &v(2)) + &c(2);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.div_exact(&(&v(1) + &c(5))), None);
        assert_eq!(
            p.scale(&BigInt::from(6)).div_exact(&c(3)),
            Some(p.scale(&BigInt::from(2)))
        );
    }

    #[test]
    fn coeffs_in_roundtrip() {
        let p = &(&v(1).pow(3) * &v(2)) + &(&v(1) * &c(4));
        let x = Var::indexed('x', 1);
        let cs = p.coeffs_in(x);
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[1], c(4));
        assert_eq!(IntPoly::from_coeffs_in(x, &cs), p);
    }
}
