//! Multivariate gcd over the integers.
//!
//! Recursive content/primitive-part decomposition in a chosen main variable,
//! with the subresultant polynomial remainder sequence for the primitive
//! parts. Cheap structural cases (constants, monomial factors, variables
//! present on one side only) are peeled off before any PRS is run, and a
//! modular image test settles the common coprime case.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::{IntPoly, MultiPoly};
use super::var::Var;

/// Gcd of two rational polynomials: primitive with positive leading
/// coefficient, and `gcd(p, 0)` is `p` normalized.
pub fn poly_gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let (pi, _) = p.to_integral();
    let (qi, _) = q.to_integral();
    gcd_int(&pi, &qi).to_rational()
}

/// Gcd of integer polynomials, returned primitive with positive leading
/// coefficient. The integer content is ignored, so `gcd(4, 6) = 1`.
pub fn gcd_int(p: &IntPoly, q: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return q.primitive();
    }
    if q.is_zero() {
        return p.primitive();
    }
    let p = p.primitive();
    let q = q.primitive();
    if p.is_constant() || q.is_constant() {
        return IntPoly::one();
    }
    if p == q {
        return p;
    }

    // common monomial factor
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mono = mp.gcd(&mq);
    let p = p.div_monomial(&mp).unwrap();
    let q = q.div_monomial(&mq).unwrap();
    let rest = gcd_no_monomial(&p, &q);
    rest.mul_monomial(&mono)
}

/// Gcd of primitive polynomials neither of which has a monomial factor.
fn gcd_no_monomial(p: &IntPoly, q: &IntPoly) -> IntPoly {
    if p.is_constant() || q.is_constant() {
        return IntPoly::one();
    }
    if p == q {
        return p.clone();
    }
    let vp = p.vars();
    let vq = q.vars();
    if vp.is_disjoint(&vq) {
        return IntPoly::one();
    }
    // the gcd only involves variables common to both sides: reduce a side
    // with private variables to the gcd of its coefficients over them
    if !vp.is_subset(&vq) {
        return gcd_with_coeffs(q, p, &vq);
    }
    if !vq.is_subset(&vp) {
        return gcd_with_coeffs(p, q, &vp);
    }
    // trial division catches the frequent "one divides the other" case
    if p.num_terms() <= q.num_terms() {
        if q.div_exact(p).is_some() {
            return p.clone();
        }
    } else if p.div_exact(q).is_some() {
        return q.clone();
    }

    let x = main_var(p, q, &vp);
    let pc = p.coeffs_in(x);
    let qc = q.coeffs_in(x);
    let cont_p = content_of(&pc);
    let cont_q = content_of(&qc);
    let cont = gcd_int(&cont_p, &cont_q);
    let pc: Vec<IntPoly> = pc.iter().map(|c| c.div_exact(&cont_p).unwrap()).collect();
    let qc: Vec<IntPoly> = qc.iter().map(|c| c.div_exact(&cont_q).unwrap()).collect();
    if coprime_image(&pc, &qc, &vp) {
        return cont;
    }
    let g = subresultant_gcd(pc, qc);
    let g_cont = content_of(&g);
    let g: Vec<IntPoly> = g.iter().map(|c| c.div_exact(&g_cont).unwrap()).collect();
    let g = IntPoly::from_coeffs_in(x, &g);
    (&g * &cont).primitive()
}

/// `gcd(base, other)` where `other` has variables outside `base_vars`.
fn gcd_with_coeffs(base: &IntPoly, other: &IntPoly, base_vars: &BTreeSet<Var>) -> IntPoly {
    let coeffs = other.coeffs_over(|v| !base_vars.contains(&v));
    let mut cs: Vec<IntPoly> = coeffs.into_values().collect();
    cs.sort_by_key(|c| c.num_terms());
    let mut g = base.clone();
    for c in cs {
        g = gcd_int(&g, &c);
        if g.is_constant() {
            return IntPoly::one();
        }
    }
    g
}

/// Picks the shared variable of smallest maximal degree.
fn main_var(p: &IntPoly, q: &IntPoly, vars: &BTreeSet<Var>) -> Var {
    *vars
        .iter()
        .min_by_key(|&&v| (p.degree_in(v).max(q.degree_in(v)), p.degree_in(v).min(q.degree_in(v))))
        .unwrap()
}

/// Gcd of a list of coefficient polynomials, primitive.
fn content_of(cs: &[IntPoly]) -> IntPoly {
    let mut nz: Vec<&IntPoly> = cs.iter().filter(|c| !c.is_zero()).collect();
    nz.sort_by_key(|c| c.num_terms());
    let mut g = IntPoly::zero();
    for c in nz {
        g = gcd_int(&g, c);
        if g.is_constant() {
            return IntPoly::one();
        }
    }
    if g.is_zero() {
        IntPoly::one()
    } else {
        g
    }
}

const PRIME: u64 = 2_147_483_647;

fn mulmod(a: u64, b: u64) -> u64 {
    a * b % PRIME
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn eval_mod(p: &IntPoly, point: &BTreeMap<Var, u64>) -> u64 {
    let prime = BigInt::from(PRIME);
    p.eval_with(
        0u64,
        |c: &BigInt| c.mod_floor(&prime).to_u64().unwrap(),
        |v, e| powmod(point[&v], e as u64),
        |a, b| (a + b) % PRIME,
        |a, b| mulmod(*a, *b),
    )
}

/// Degree of the gcd of two dense univariate polynomials mod `PRIME`.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let strip = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    strip(&mut a);
    strip(&mut b);
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), PRIME - 2);
        while a.len() >= b.len() {
            let f = mulmod(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (k, &bc) in b.iter().enumerate() {
                a[k + shift] = (a[k + shift] + PRIME - mulmod(f, bc)) % PRIME;
            }
            strip(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when the images at a point with nonvanishing leading coefficients
/// are coprime mod `PRIME`. The gcd of the primitive parts then has degree
/// zero in the main variable, hence is 1. A `false` is inconclusive.
fn coprime_image(pc: &[IntPoly], qc: &[IntPoly], vars: &BTreeSet<Var>) -> bool {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..3 {
        let point: BTreeMap<Var, u64> = vars
            .iter()
            .map(|&v| {
                state = state
                    .wrapping_mul(6_364_136_223_846_793_005)
                    .wrapping_add(1_442_695_040_888_963_407);
                (v, (state >> 33) % PRIME)
            })
            .collect();
        let a: Vec<u64> = pc.iter().map(|c| eval_mod(c, &point)).collect();
        let b: Vec<u64> = qc.iter().map(|c| eval_mod(c, &point)).collect();
        if a.last() == Some(&0) || b.last() == Some(&0) {
            continue;
        }
        return gcd_degree_mod(a, b) == 0;
    }
    false
}

type UPoly = Vec<IntPoly>;

fn trim(a: &mut UPoly) {
    while a.len() > 1 && a.last().unwrap().is_zero() {
        a.pop();
    }
}

fn deg(a: &UPoly) -> usize {
    a.len() - 1
}

fn is_zero_u(a: &UPoly) -> bool {
    a.iter().all(|c| c.is_zero())
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = deg(b);
    let lb = b[db].clone();
    let mut r = a.clone();
    let mut e = deg(a) as i64 - db as i64 + 1;
    while !is_zero_u(&r) && deg(&r) >= db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (k, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[k + shift] = &r[k + shift] - &t;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        if r.is_empty() {
            r.push(IntPoly::zero());
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn subresultant_gcd(mut a: UPoly, mut b: UPoly) -> UPoly {
    trim(&mut a);
    trim(&mut b);
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = IntPoly::one();
    let mut h = IntPoly::one();
    loop {
        let delta = (deg(&a) - deg(&b)) as u32;
        let r = prem(&a, &b);
        if is_zero_u(&r) {
            return b;
        }
        if deg(&r) == 0 {
            return vec![IntPoly::one()];
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        g = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g
                .pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant division is exact"),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn x() -> IntPoly {
        IntPoly::var(Var::bare('x'))
    }
    fn y() -> IntPoly {
        IntPoly::var(Var::bare('y'))
    }
    fn z() -> IntPoly {
        IntPoly::var(Var::bare('z'))
    }
    fn k(c: i64) -> IntPoly {
        IntPoly::constant(BigInt::from(c))
    }

    #[test]
    fn difference_of_squares_and_square() {
        // (x-y)(x+y) and (x+y)^2 share x+y
        let p = &(&x() * &x()) - &(&y() * &y());
        let q = (&x() + &y()).pow(2);
        assert_eq!(gcd_int(&p, &q), &x() + &y());
    }

    #[test]
    fn coprime_and_zero() {
        let p = &x() + &k(1);
        let q = &y() + &k(1);
        assert_eq!(gcd_int(&p, &q), IntPoly::one());
        let r = &(&x() * &k(-2)) + &k(4);
        assert_eq!(gcd_int(&r, &IntPoly::zero()), &x() - &k(2));
    }

    #[test]
    fn hidden_common_factor() {
        let d = &(&(&x() * &y()) + &z()) + &k(3);
        let p = &d * &(&(&x() * &x()) - &z());
        let q = &d * &(&(&y() * &z()) + &x());
        assert_eq!(gcd_int(&p, &q), d);
    }

    #[test]
    fn univariate_high_degree() {
        let d = &x().pow(3) - &(&x() * &k(2));
        let p = &d * &(&x().pow(4) + &k(7));
        let q = &d * &(&x().pow(2) + &k(5));
        assert_eq!(gcd_int(&p, &q), d);
    }
}
