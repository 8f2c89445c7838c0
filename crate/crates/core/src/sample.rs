//! Seeded random inputs for randomized checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{IntPoly, Monomial, RatFunc, Var};

/// Default seed of every randomized suite.
pub const DEFAULT_SEED: u64 = 20_240_601;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random rational `p/q` with `1 <= p, q <= max`.
pub fn positive_rational(rng: &mut SampleRng, max: i64) -> RatFunc {
    let p = rng.gen_range(1..=max);
    let q = rng.gen_range(1..=max);
    RatFunc::rational(&BigRational::new(BigInt::from(p), BigInt::from(q)))
}

/// A random nonzero rational `p/q` with `|p|, q <= max`.
pub fn nonzero_rational(rng: &mut SampleRng, max: i64) -> RatFunc {
    let r = positive_rational(rng, max);
    if rng.gen_bool(0.5) {
        -r
    } else {
        r
    }
}

/// A random polynomial in `vars` with at most `terms` terms, total degree
/// at most `degree` and integer coefficients in `[-9, 9]`.
pub fn polynomial(rng: &mut SampleRng, vars: &[Var], degree: u32, terms: usize) -> RatFunc {
    let mut p = IntPoly::zero();
    let count = rng.gen_range(1..=terms);
    for _ in 0..count {
        let deg = rng.gen_range(0..=degree);
        let mut m = Monomial::one();
        for _ in 0..deg {
            m = m.mul(&Monomial::var(vars[rng.gen_range(0..vars.len())]));
        }
        let mut c = rng.gen_range(-9i64..=9);
        if c == 0 {
            c = 1;
        }
        p = &p + &IntPoly::term(m, BigInt::from(c));
    }
    RatFunc::from_int_poly(p)
}
