//! Rational functions in canonical form.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::gcd::gcd_int;
use super::poly::{IntPoly, MultiPoly};
use super::var::{Monomial, Var};
use crate::error::{Error, Result};

/// A quotient of integer polynomials in lowest terms.
///
/// Canonical form: `gcd(num, den) = 1` as polynomials, the integer
/// coefficients of `num` and `den` have no common factor, and the leading
/// (graded-lex) coefficient of `den` is positive. Zero is `0/1`. Two
/// `RatFunc`s are equal as functions iff they are equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(k: i64) -> Self {
        RatFunc {
            num: IntPoly::constant(BigInt::from(k)),
            den: IntPoly::one(),
        }
    }

    pub fn rational(r: &BigRational) -> Self {
        RatFunc {
            num: IntPoly::constant(r.numer().clone()),
            den: IntPoly::constant(r.denom().clone()),
        }
    }

    pub fn var(v: Var) -> Self {
        RatFunc {
            num: IntPoly::var(v),
            den: IntPoly::one(),
        }
    }

    pub fn from_int_poly(p: IntPoly) -> Self {
        Self::normalize_int(p, IntPoly::one()).unwrap()
    }

    pub fn from_poly(p: &MultiPoly) -> Self {
        let (n, d) = p.to_integral();
        Self::normalize_int(n, IntPoly::constant(d)).unwrap()
    }

    /// Canonical form of `num / den` for rational polynomials.
    pub fn normalize(num: &MultiPoly, den: &MultiPoly) -> Result<Self> {
        let (n, dn) = num.to_integral();
        let (d, dd) = den.to_integral();
        // num/den = (n/dn) / (d/dd) = (n*dd) / (d*dn)
        Self::normalize_int(n.scale(&dd), d.scale(&dn))
    }

    /// Canonical form of `num / den` for integer polynomials.
    pub fn normalize_int(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd_int(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::fix_scalars(num, den))
    }

    /// Removes the common integer content and fixes the denominator sign.
    /// Assumes `num` and `den` are already coprime as polynomials.
    fn fix_scalars(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.div_int(&c),
                den: den.div_int(&c),
            }
        }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value of a constant function.
    pub fn constant_value(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    /// True iff the canonical denominator is a nonzero constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// True iff the canonical denominator is a single term whose variables
    /// all lie in `torus`, i.e. the function is a polynomial in the other
    /// variables and a Laurent polynomial in `torus`.
    pub fn is_laurent_in(&self, torus: &BTreeSet<Var>) -> bool {
        self.den.is_monomial() && self.den.vars().iter().all(|v| torus.contains(v))
    }

    /// All variables occurring in numerator or denominator.
    pub fn vars(&self) -> BTreeSet<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    /// True when numerator and denominator have only positive coefficients.
    pub fn is_subtraction_free(&self) -> bool {
        self.num.is_subtraction_free() && self.den.is_subtraction_free()
    }

    /// The numerator and denominator as rational polynomials.
    pub fn to_polys(&self) -> (MultiPoly, MultiPoly) {
        (self.num.to_rational(), self.den.to_rational())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::fix_scalars(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = k as u32;
        Ok(RatFunc {
            num: self.num.pow(k),
            den: self.den.pow(k),
        })
    }

    /// Composes `self` with `assignment`, which must cover every variable of
    /// `self`.
    ///
    /// All values are brought to a common denominator per variable before a
    /// single gcd, so intermediate results are never reduced.
    pub fn substitute(&self, assignment: &HashMap<Var, RatFunc>) -> Result<RatFunc> {
        let vars = self.vars();
        for v in &vars {
            if !assignment.contains_key(v) {
                return Err(Error::UnassignedVariable(v.to_string()));
            }
        }
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let mut cache = PowerCache::default();
        let mut top: HashMap<Var, u32> = HashMap::new();
        for v in &vars {
            let d = self.num.degree_in(*v).max(self.den.degree_in(*v));
            top.insert(*v, d);
        }
        let num = cache.homogenized(&self.num, assignment, &top);
        let den = cache.homogenized(&self.den, assignment, &top);
        if den.is_zero() {
            return Err(Error::PoleLocus);
        }
        Self::normalize_int(num, den)
    }

    /// Substitution when every assigned value is a rational constant.
    pub fn eval(&self, point: &HashMap<Var, BigRational>) -> Result<BigRational> {
        let asg: HashMap<Var, RatFunc> = point.iter().map(|(v, r)| (*v, RatFunc::rational(r))).collect();
        let r = self.substitute(&asg)?;
        r.constant_value()
            .ok_or_else(|| Error::UnassignedVariable(r.to_string()))
    }
}

/// Memoized powers of substituted numerators and denominators.
#[derive(Default)]
struct PowerCache {
    num: HashMap<(Var, u32), IntPoly>,
    den: HashMap<(Var, u32), IntPoly>,
}

impl PowerCache {
    fn get(map: &mut HashMap<(Var, u32), IntPoly>, v: Var, e: u32, base: &IntPoly) -> IntPoly {
        if e == 0 {
            return IntPoly::one();
        }
        if e == 1 {
            return base.clone();
        }
        if let Some(p) = map.get(&(v, e)) {
            return p.clone();
        }
        let prev = Self::get(map, v, e - 1, base);
        let p = &prev * base;
        map.insert((v, e), p.clone());
        p
    }

    /// `sum c * prod n_v^e * d_v^(top_v - e)` over the terms of `p`.
    fn homogenized(&mut self, p: &IntPoly, asg: &HashMap<Var, RatFunc>, top: &HashMap<Var, u32>) -> IntPoly {
        let mut acc = IntPoly::zero();
        for (m, c) in p.terms() {
            let mut t = IntPoly::constant(c.clone());
            let mut seen: Vec<Var> = Vec::new();
            for (v, e) in m.iter() {
                let val = &asg[&v];
                t = &t * &Self::get(&mut self.num, v, e, &val.num);
                if !val.den.is_one() {
                    t = &t * &Self::get(&mut self.den, v, top[&v] - e, &val.den);
                }
                seen.push(v);
            }
            for (v, d) in top {
                if seen.contains(v) || *d == 0 {
                    continue;
                }
                let val = &asg[v];
                if !val.den.is_one() {
                    t = &t * &Self::get(&mut self.den, *v, *d, &val.den);
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl From<i64> for RatFunc {
    fn from(k: i64) -> Self {
        RatFunc::int(k)
    }
}

impl From<Var> for RatFunc {
    fn from(v: Var) -> Self {
        RatFunc::var(v)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let n = &self.num + &rhs.num;
            if self.den.is_constant() {
                return RatFunc::fix_scalars(n, self.den.clone());
            }
            return RatFunc::normalize_int(n, self.den.clone()).unwrap();
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::fix_scalars(n, &self.den * &rhs.den);
        }
        // split off the common part of the denominators first
        let g = gcd_int(&self.den, &rhs.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = rhs.den.div_exact(&g).unwrap();
        let n = &(&self.num * &d2) + &(&rhs.num * &d1);
        let d = &(&d1 * &d2) * &g;
        if g.is_one() {
            // n is coprime to d1*d2 already
            return RatFunc::fix_scalars(n, d);
        }
        RatFunc::normalize_int(n, d).unwrap()
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel, then the product is already reduced
        let g1 = gcd_int(&self.num, &rhs.den);
        let g2 = gcd_int(&rhs.num, &self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), rhs.den.div_exact(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        RatFunc::fix_scalars(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by the zero function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    /// `num` alone for polynomials with unit denominator, otherwise
    /// `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `v^e` as a rational function.
pub fn monomial(pairs: &[(Var, u32)]) -> RatFunc {
    RatFunc::from_int_poly(IntPoly::term(
        Monomial::from_pairs(pairs.iter().copied()),
        BigInt::one(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> RatFunc {
        RatFunc::var(Var::bare('x'))
    }
    fn y() -> RatFunc {
        RatFunc::var(Var::bare('y'))
    }
    fn k(c: i64) -> RatFunc {
        RatFunc::int(c)
    }

    #[test]
    fn normalize_examples() {
        let xq = MultiPoly::var(Var::bare('x'));
        let one = MultiPoly::one();
        let r = RatFunc::normalize(&(&(&xq * &xq) - &one), &(&xq - &one)).unwrap();
        assert_eq!(r, &x() + &k(1));
        assert!(r.is_polynomial());

        let r = RatFunc::normalize(&MultiPoly::zero(), &xq).unwrap();
        assert_eq!(r, RatFunc::zero());
        assert!(r.denom().is_one());

        let two = MultiPoly::constant(BigRational::from_integer(2.into()));
        let four = MultiPoly::constant(BigRational::from_integer(4.into()));
        let r = RatFunc::normalize(&(&xq * &two), &four).unwrap();
        assert_eq!(r.numer(), &IntPoly::var(Var::bare('x')));
        assert_eq!(r.denom(), &IntPoly::constant(2.into()));
        assert_eq!(r.to_string(), "(x)/(2)");

        assert_eq!(RatFunc::normalize(&xq, &MultiPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn arithmetic_examples() {
        let s = &(&k(1) / &x()) + &(&k(1) / &y());
        assert_eq!(s, &(&x() + &y()) / &(&x() * &y()));
        let xy = &x() + &y();
        assert_eq!(&xy * &xy.inv().unwrap(), k(1));
        let a2 = RatFunc::var(Var::indexed('a', 2));
        let a5 = RatFunc::var(Var::indexed('a', 5));
        assert_eq!(&(&a2 + &a5) - &a2, a5);
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn denominator_sign_is_positive() {
        let r = &k(1) / &(&k(-1) - &x());
        assert_eq!(r.to_string(), "(-1)/(x + 1)");
    }

    #[test]
    fn laurent_and_polynomial_predicates() {
        let t = Var::bare('t');
        let a = x();
        let f = &(&a + &RatFunc::var(t)) / &RatFunc::var(t).pow(2).unwrap();
        let torus: BTreeSet<Var> = [t].into();
        assert!(f.is_laurent_in(&torus));
        assert!(!f.is_polynomial());
        let g = &k(1) / &(&RatFunc::var(t).pow(2).unwrap() + &(&x() * &y()));
        assert!(!g.is_laurent_in(&torus));
        assert!((&x() * &y()).is_laurent_in(&BTreeSet::new()));
        assert!(k(5).is_polynomial());
        assert!(!(&k(1) / &(&x() + &y())).is_polynomial());
    }

    #[test]
    fn substitution_pole_and_identity() {
        let f = &k(1) / &(&x() - &y());
        let mut asg = HashMap::new();
        asg.insert(Var::bare('x'), y());
        asg.insert(Var::bare('y'), y());
        assert_eq!(f.substitute(&asg), Err(Error::PoleLocus));

        let mut id = HashMap::new();
        id.insert(Var::bare('x'), x());
        id.insert(Var::bare('y'), y());
        assert_eq!(f.substitute(&id).unwrap(), f);
    }
}
