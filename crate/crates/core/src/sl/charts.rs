//! The pinning of `SL_n`, Weyl group lifts, the involution `iota` and the
//! chart maps built from them.

use std::fmt;

use crate::arith::{RatFunc, Var};
use crate::error::{Error, Result};
use crate::roots::{CartanDatum, CartanType, Word};

use super::matrix::GroupMatrix;

/// The four kinds of pinning generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `x_i(a) = I + a E_{i,i+1}`
    X,
    /// `y_i(a) = I + a E_{i+1,i}`
    Y,
    /// `x_i(1) y_i(-1) x_i(1)`
    SDot,
    /// `y_i(1) x_i(-1) y_i(1)`
    SDdot,
}

/// Which lift of simple reflections to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftStyle {
    Dot,
    Ddot,
}

/// The two charts of `G/U^-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// The two chart shapes on `G`: `x t y` and `y t^-1 x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    PlusMinus,
    MinusPlus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::PlusMinus => "+-",
            Variant::MinusPlus => "-+",
        })
    }
}

/// The Cartan datum `A_{n-1}` of `SL_n`.
pub fn sl_datum(n: usize) -> Result<CartanDatum> {
    if n < 2 {
        return Err(Error::InvalidCartanType(format!("SL{n}")));
    }
    CartanDatum::new(CartanType::A, n - 1)
}

fn check_node(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n - 1 });
    }
    Ok(())
}

fn elementary(n: usize, row: usize, col: usize, a: &RatFunc) -> GroupMatrix {
    let mut e = GroupMatrix::identity(n).entries().to_vec();
    e[(row - 1) * n + (col - 1)] = a.clone();
    GroupMatrix::trusted(n, e)
}

/// `x_i(a)`, `y_i(a)`, `s.dot_i` or `s.ddot_i` in `SL_n`. The argument is
/// required for `X` and `Y` and ignored otherwise.
pub fn generator(kind: GeneratorKind, i: usize, arg: Option<&RatFunc>, n: usize) -> Result<GroupMatrix> {
    check_node(i, n)?;
    let one = RatFunc::one();
    let m_one = RatFunc::int(-1);
    let need = || arg.ok_or(Error::LengthMismatch { expected: 1, got: 0 });
    Ok(match kind {
        GeneratorKind::X => elementary(n, i, i + 1, need()?),
        GeneratorKind::Y => elementary(n, i + 1, i, need()?),
        GeneratorKind::SDot => {
            let x = elementary(n, i, i + 1, &one);
            &(&x * &elementary(n, i + 1, i, &m_one)) * &x
        }
        GeneratorKind::SDdot => {
            let y = elementary(n, i + 1, i, &one);
            &(&y * &elementary(n, i, i + 1, &m_one)) * &y
        }
    })
}

pub fn x(i: usize, a: &RatFunc, n: usize) -> Result<GroupMatrix> {
    generator(GeneratorKind::X, i, Some(a), n)
}

pub fn y(i: usize, a: &RatFunc, n: usize) -> Result<GroupMatrix> {
    generator(GeneratorKind::Y, i, Some(a), n)
}

/// A point of the diagonal torus in coordinates with `omega_i(t) = t_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusPoint {
    coords: Vec<RatFunc>,
}

impl TorusPoint {
    pub fn new(coords: Vec<RatFunc>) -> Result<Self> {
        if coords.iter().any(RatFunc::is_zero) {
            return Err(Error::ZeroCoordinate);
        }
        Ok(TorusPoint { coords })
    }

    /// `(t1, ..., t_{n-1})` as symbols.
    pub fn symbolic(n: usize) -> Self {
        TorusPoint {
            coords: (1..n).map(|i| RatFunc::var(Var::indexed('t', i as u16))).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        TorusPoint {
            coords: vec![RatFunc::one(); n - 1],
        }
    }

    pub fn coords(&self) -> &[RatFunc] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len() + 1
    }

    pub fn inverse(&self) -> Self {
        TorusPoint {
            coords: self.coords.iter().map(|c| c.inv().unwrap()).collect(),
        }
    }

    /// `diag(t1, t2/t1, ..., t_{n-1}/t_{n-2}, 1/t_{n-1})`.
    pub fn matrix(&self) -> GroupMatrix {
        let n = self.n();
        let mut e = vec![RatFunc::zero(); n * n];
        let one = RatFunc::one();
        for k in 0..n {
            let num = self.coords.get(k).unwrap_or(&one);
            let d = match k.checked_sub(1) {
                Some(p) => num * &self.coords[p].inv().unwrap(),
                None => num.clone(),
            };
            e[k * n + k] = d;
        }
        GroupMatrix::trusted(n, e)
    }
}

pub fn torus_point(coords: Vec<RatFunc>) -> Result<GroupMatrix> {
    Ok(TorusPoint::new(coords)?.matrix())
}

fn check_params(word: &Word, params: &[RatFunc], n: usize) -> Result<()> {
    if word.len() != params.len() {
        return Err(Error::LengthMismatch {
            expected: word.len(),
            got: params.len(),
        });
    }
    for &i in word.letters() {
        check_node(i, n)?;
    }
    Ok(())
}

fn product(word: &Word, params: &[RatFunc], n: usize, kind: GeneratorKind) -> Result<GroupMatrix> {
    check_params(word, params, n)?;
    let mut g = GroupMatrix::identity(n);
    for (&i, a) in word.letters().iter().zip(params) {
        if a.is_zero() {
            continue;
        }
        g = &g * &generator(kind, i, Some(a), n)?;
    }
    Ok(g)
}

/// `x_{i_1}(a_1) ... x_{i_k}(a_k)`.
pub fn chart_u(word: &Word, params: &[RatFunc], n: usize) -> Result<GroupMatrix> {
    product(word, params, n, GeneratorKind::X)
}

/// `y_{i_1}(a_1) ... y_{i_k}(a_k)`.
pub fn chart_u_minus(word: &Word, params: &[RatFunc], n: usize) -> Result<GroupMatrix> {
    product(word, params, n, GeneratorKind::Y)
}

fn check_torus(t: &TorusPoint, n: usize) -> Result<()> {
    if t.n() != n {
        return Err(Error::LengthMismatch {
            expected: n - 1,
            got: t.coords.len(),
        });
    }
    Ok(())
}

/// Coset representative of the `G/U^-` chart: `x(a) t` for `Plus`,
/// `y(a) t w0.dot` for `Minus`.
pub fn chart_gmodu(word: &Word, params: &[RatFunc], t: &TorusPoint, sign: Sign, n: usize) -> Result<GroupMatrix> {
    check_torus(t, n)?;
    Ok(match sign {
        Sign::Plus => &chart_u(word, params, n)? * &t.matrix(),
        Sign::Minus => &(&chart_u_minus(word, params, n)? * &t.matrix()) * &longest_lift(n, LiftStyle::Dot)?,
    })
}

/// The chart of `G`: `x_word(a) t y_word2(b)` for `PlusMinus` and
/// `y_word(a) t^-1 x_word2(b)` for `MinusPlus`.
pub fn chart_g(
    word: &Word,
    word2: &Word,
    params: &[RatFunc],
    t: &TorusPoint,
    params2: &[RatFunc],
    variant: Variant,
    n: usize,
) -> Result<GroupMatrix> {
    check_torus(t, n)?;
    Ok(match variant {
        Variant::PlusMinus => &(&chart_u(word, params, n)? * &t.matrix()) * &chart_u_minus(word2, params2, n)?,
        Variant::MinusPlus => {
            &(&chart_u_minus(word, params, n)? * &t.inverse().matrix()) * &chart_u(word2, params2, n)?
        }
    })
}

/// Product of `s.dot_i` (or `s.ddot_i`) along a reduced word.
pub fn lift(word: &Word, style: LiftStyle, n: usize) -> Result<GroupMatrix> {
    let d = sl_datum(n)?;
    d.check_word(word)?;
    if !d.is_reduced(word) {
        return Err(Error::NotReduced(word.to_string()));
    }
    let kind = match style {
        LiftStyle::Dot => GeneratorKind::SDot,
        LiftStyle::Ddot => GeneratorKind::SDdot,
    };
    let mut g = GroupMatrix::identity(n);
    for &i in word.letters() {
        g = &g * &generator(kind, i, None, n)?;
    }
    Ok(g)
}

/// Lift of the longest element along `jj^0`.
pub fn longest_lift(n: usize, style: LiftStyle) -> Result<GroupMatrix> {
    let d = sl_datum(n)?;
    lift(&d.distinguished_word(0), style, n)
}

/// The pinning involution: `g -> h (g^T)^-1 h^-1` with
/// `h = diag(1, -1, 1, ...)`.
pub fn iota(g: &GroupMatrix) -> GroupMatrix {
    g.inverse()
        .transpose()
        .map_trusted(|i, j, e| if (i + j) % 2 == 1 { -e } else { e.clone() })
}

/// `a1, ..., ak` (or any other family letter) as symbols.
pub fn symbols(family: char, k: usize) -> Vec<RatFunc> {
    (1..=k).map(|i| RatFunc::var(Var::indexed(family, i as u16))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> RatFunc {
        RatFunc::var(Var::bare('a'))
    }

    fn int_rows(m: &GroupMatrix) -> Vec<Vec<String>> {
        m.rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect()
    }

    #[test]
    fn weyl_generators_sl2() {
        let s = generator(GeneratorKind::SDot, 1, None, 2).unwrap();
        assert_eq!(int_rows(&s), vec![vec!["0", "1"], vec!["-1", "0"]]);
        let s = generator(GeneratorKind::SDdot, 1, None, 2).unwrap();
        assert_eq!(int_rows(&s), vec![vec!["0", "-1"], vec!["1", "0"]]);
        assert!(generator(GeneratorKind::X, 2, Some(&a()), 2).is_err());
        assert!(generator(GeneratorKind::X, 1, None, 2).is_err());
    }

    #[test]
    fn x1_in_sl4() {
        let m = x(1, &a(), 4).unwrap();
        assert_eq!(m.at(1, 2), &a());
        let mut rest = m.entries().to_vec();
        rest[1] = RatFunc::zero();
        assert_eq!(GroupMatrix::trusted(4, rest), GroupMatrix::identity(4));
    }

    #[test]
    fn torus_examples() {
        let t = RatFunc::var(Var::indexed('t', 1));
        let m = torus_point(vec![t.clone()]).unwrap();
        assert_eq!(m.at(1, 1), &t);
        assert_eq!(m.at(2, 2), &t.inv().unwrap());
        assert!(torus_point(vec![RatFunc::one(); 3]).unwrap().is_identity());
        let m3 = TorusPoint::symbolic(3).matrix();
        assert_eq!(m3.leading_minor(2), RatFunc::var(Var::indexed('t', 2)));
        assert!(matches!(torus_point(vec![RatFunc::zero()]), Err(Error::ZeroCoordinate)));
    }

    #[test]
    fn chart_u_sl3() {
        let p = symbols('a', 3);
        let m = chart_u(&Word::new(vec![1, 2, 1]), &p, 3).unwrap();
        assert_eq!(m.at(1, 2), &(&p[0] + &p[2]));
        assert_eq!(m.at(1, 3), &(&p[0] * &p[1]));
        assert_eq!(m.at(2, 3), &p[1]);
        assert!(m.is_upper_unitriangular());
        assert!(chart_u(&Word::new(vec![1, 2]), &p, 3).is_err());
        assert!(chart_u(&Word::new(vec![1, 2, 1]), &vec![RatFunc::zero(); 3], 3)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn lift_examples() {
        assert_eq!(
            lift(&Word::new(vec![1, 2, 1]), LiftStyle::Dot, 3).unwrap(),
            lift(&Word::new(vec![2, 1, 2]), LiftStyle::Dot, 3).unwrap()
        );
        assert!(lift(&Word::empty(), LiftStyle::Ddot, 3).unwrap().is_identity());
        assert!(matches!(
            lift(&Word::new(vec![1, 1]), LiftStyle::Dot, 3),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn iota_on_generators() {
        for n in 2..=4 {
            for i in 1..n {
                assert_eq!(iota(&x(i, &a(), n).unwrap()), y(i, &a(), n).unwrap());
                assert_eq!(iota(&y(i, &a(), n).unwrap()), x(i, &a(), n).unwrap());
            }
            let t = TorusPoint::symbolic(n);
            assert_eq!(iota(&t.matrix()), t.inverse().matrix());
        }
    }
}
