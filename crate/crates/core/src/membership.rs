//! Membership in `O(U+)`, `O(G/U-)` and `O(G)` by pulling back along the
//! distinguished charts, and inversion of the unipotent charts for small `n`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::arith::{RatFunc, Var};
use crate::braid::{transition, DEFAULT_BFS_BUDGET};
use crate::error::{Error, Result};
use crate::roots::{CartanDatum, Word};
use crate::sl::{chart_g, chart_gmodu, chart_u, sl_datum, symbols, GroupMatrix, Sign, TorusPoint, Variant};

/// The three spaces whose coordinate rings are tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    U,
    GmodU,
    G,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::U => "U",
            Space::GmodU => "G/U-",
            Space::G => "G",
        })
    }
}

/// One of the distinguished charts of a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChartId {
    pub space: Space,
    pub eps: usize,
    pub sign: Option<Sign>,
    pub eps2: Option<usize>,
    pub variant: Option<Variant>,
}

impl ChartId {
    pub fn u(eps: usize) -> Self {
        ChartId {
            space: Space::U,
            eps,
            sign: None,
            eps2: None,
            variant: None,
        }
    }

    pub fn gmodu(eps: usize, sign: Sign) -> Self {
        ChartId {
            space: Space::GmodU,
            eps,
            sign: Some(sign),
            eps2: None,
            variant: None,
        }
    }

    pub fn g(eps: usize, eps2: usize, variant: Variant) -> Self {
        ChartId {
            space: Space::G,
            eps,
            sign: None,
            eps2: Some(eps2),
            variant: Some(variant),
        }
    }

    /// All charts of `space`: 2 for `U`, 4 for `G/U-`, 8 for `G`.
    pub fn all(space: Space) -> Vec<ChartId> {
        match space {
            Space::U => vec![ChartId::u(0), ChartId::u(1)],
            Space::GmodU => [Sign::Plus, Sign::Minus]
                .into_iter()
                .flat_map(|s| (0..2).map(move |e| ChartId::gmodu(e, s)))
                .collect(),
            Space::G => [Variant::PlusMinus, Variant::MinusPlus]
                .into_iter()
                .flat_map(|v| (0..2).flat_map(move |e| (0..2).map(move |e2| ChartId::g(e, e2, v))))
                .collect(),
        }
    }
}

impl fmt::Display for ChartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.space {
            Space::U => write!(f, "U:jj{}", self.eps),
            Space::GmodU => write!(f, "G/U-:jj{}:{}", self.eps, self.sign.unwrap()),
            Space::G => write!(f, "G:jj{},jj{}:{}", self.eps, self.eps2.unwrap(), self.variant.unwrap()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub chart: ChartId,
    pub pullback: RatFunc,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    pub certificates: Vec<Certificate>,
    pub failing_chart: Option<ChartId>,
}

/// Parameter family of the `eps`-th block: `a` for 0, `b` for 1.
fn family(eps: usize) -> char {
    if eps.is_multiple_of(2) {
        'a'
    } else {
        'b'
    }
}

fn torus_vars(n: usize) -> BTreeSet<Var> {
    (1..n).map(|i| Var::indexed('t', i as u16)).collect()
}

/// The chart as a symbolic matrix. Parameters are `a`/`b` by `eps` on `U`
/// and `G/U-`, `a` and `b` for the two blocks on `G`, and `t1, t2, ...` on
/// the torus.
pub fn chart_matrix(chart: ChartId, d: &CartanDatum) -> Result<GroupMatrix> {
    let n = d.rank() + 1;
    let nu = d.nu();
    let jj = d.distinguished_word(chart.eps);
    match chart.space {
        Space::U => chart_u(&jj, &symbols(family(chart.eps), nu), n),
        Space::GmodU => chart_gmodu(
            &jj,
            &symbols(family(chart.eps), nu),
            &TorusPoint::symbolic(n),
            chart.sign.unwrap_or(Sign::Plus),
            n,
        ),
        Space::G => chart_g(
            &jj,
            &d.distinguished_word(chart.eps2.unwrap_or(0)),
            &symbols('a', nu),
            &TorusPoint::symbolic(n),
            &symbols('b', nu),
            chart.variant.unwrap_or(Variant::PlusMinus),
            n,
        ),
    }
}

/// Checks that `phi` only uses `family(i,j)` with `1 <= i, j <= n`, and
/// `i < j` when `upper`.
fn check_universe(phi: &RatFunc, fam: char, n: usize, upper: bool) -> Result<()> {
    let universe = if upper {
        format!("{{{fam}(i,j) : 1 <= i < j <= {n}}}")
    } else {
        format!("{{{fam}(i,j) : 1 <= i, j <= {n}}}")
    };
    for v in phi.vars() {
        let ok = v.family() == fam && v.arity() == 2 && {
            let (i, j) = (v.i() as usize, v.j() as usize);
            i >= 1 && j >= 1 && i <= n && j <= n && (!upper || i < j)
        };
        if !ok {
            return Err(Error::UniverseMismatch {
                var: v.to_string(),
                universe,
            });
        }
    }
    Ok(())
}

fn entry_assignment(fam: char, m: &GroupMatrix) -> HashMap<Var, RatFunc> {
    let n = m.n();
    let mut asg = HashMap::new();
    for i in 1..=n {
        for j in 1..=n {
            asg.insert(Var::entry(fam, i as u16, j as u16), m.at(i, j).clone());
        }
    }
    asg
}

/// `phi` pulled back along `chart`.
pub fn pullback(phi: &RatFunc, chart: ChartId, d: &CartanDatum) -> Result<RatFunc> {
    let n = d.rank() + 1;
    let fam = match chart.space {
        Space::U => 'u',
        _ => 'g',
    };
    check_universe(phi, fam, n, chart.space == Space::U)?;
    let m = chart_matrix(chart, d)?;
    phi.substitute(&entry_assignment(fam, &m))
}

/// `f_{jj^eps}^*(phi)` for `phi` in the entries `u(i,j)`, `i < j`.
pub fn pullback_u(phi: &RatFunc, eps: usize, d: &CartanDatum) -> Result<RatFunc> {
    pullback(phi, ChartId::u(eps), d)
}

fn decide(phi: &RatFunc, space: Space, d: &CartanDatum) -> Result<MembershipVerdict> {
    let torus = match space {
        Space::U => BTreeSet::new(),
        _ => torus_vars(d.rank() + 1),
    };
    let mut certificates = Vec::new();
    for chart in ChartId::all(space) {
        let pb = pullback(phi, chart, d)?;
        let ok = pb.is_laurent_in(&torus);
        certificates.push(Certificate {
            chart,
            pullback: pb,
            ok,
        });
    }
    let failing_chart = certificates.iter().find(|c| !c.ok).map(|c| c.chart);
    Ok(MembershipVerdict {
        member: failing_chart.is_none(),
        certificates,
        failing_chart,
    })
}

/// Membership in `O(U+)`: both unipotent pullbacks are polynomials.
pub fn decide_o_u(phi: &RatFunc, d: &CartanDatum) -> Result<MembershipVerdict> {
    decide(phi, Space::U, d)
}

/// Whether `phi(g y_j(s)) = phi(g)` for all `j`, with a fresh symbol `s`.
pub fn check_invariance(phi: &RatFunc, n: usize) -> Result<bool> {
    Ok(non_invariant_node(phi, n)?.is_none())
}

fn non_invariant_node(phi: &RatFunc, n: usize) -> Result<Option<usize>> {
    check_universe(phi, 'g', n, false)?;
    let s = RatFunc::var(Var::bare('s'));
    let g = |i: usize, j: usize| RatFunc::var(Var::entry('g', i as u16, j as u16));
    for j in 1..n {
        let mut asg = HashMap::new();
        for k in 1..=n {
            for l in 1..=n {
                let val = if l == j {
                    &g(k, j) + &(&s * &g(k, j + 1))
                } else {
                    g(k, l)
                };
                asg.insert(Var::entry('g', k as u16, l as u16), val);
            }
        }
        if phi.substitute(&asg)? != *phi {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// Membership in `O(G/U-)` for a right-`U-`-invariant `phi`: all four
/// pullbacks are polynomial in the parameters and Laurent in the torus.
pub fn decide_o_gmodu(phi: &RatFunc, d: &CartanDatum) -> Result<MembershipVerdict> {
    if let Some(j) = non_invariant_node(phi, d.rank() + 1)? {
        return Err(Error::NotInvariant(j));
    }
    decide(phi, Space::GmodU, d)
}

/// Membership in `O(G)`: all eight pullbacks are polynomial in both
/// parameter blocks and Laurent in the torus.
pub fn decide_o_g(phi: &RatFunc, d: &CartanDatum) -> Result<MembershipVerdict> {
    decide(phi, Space::G, d)
}

fn u(i: u16, j: u16) -> RatFunc {
    RatFunc::var(Var::entry('u', i, j))
}

/// Inverse formulas in the entries `u(i,j)` for the words that have them.
fn base_inverse(word: &[usize]) -> Option<Vec<RatFunc>> {
    let div = |p: RatFunc, q: RatFunc| &p / &q;
    match word {
        [1] => Some(vec![u(1, 2)]),
        [1, 2, 1] => Some(vec![div(u(1, 3), u(2, 3)), u(2, 3), &u(1, 2) - &div(u(1, 3), u(2, 3))]),
        [2, 1, 2] => Some(vec![&u(2, 3) - &div(u(1, 3), u(1, 2)), u(1, 2), div(u(1, 3), u(1, 2))]),
        [2, 1, 3, 2, 1, 3] => {
            let m = &(&u(1, 3) * &u(3, 4)) - &u(1, 4);
            let k = &(&u(2, 3) * &u(3, 4)) - &u(2, 4);
            Some(vec![
                div(&(&u(1, 3) * &u(2, 4)) - &(&u(1, 4) * &u(2, 3)), m.clone()),
                div(m.clone(), k.clone()),
                div(m.clone(), u(1, 3)),
                div(&u(1, 3) * &k, m.clone()),
                &u(1, 2) - &div(m, k),
                div(u(1, 4), u(1, 3)),
            ])
        }
        [1, 3, 2, 1, 3, 2] => {
            // the anti-transpose u(i,j) -> u(5-j,5-i) turns this word into
            // (2,1,3,2,1,3) with the parameters reversed
            let flip: HashMap<Var, RatFunc> = (1..=4u16)
                .flat_map(|i| (i + 1..=4).map(move |j| (Var::entry('u', i, j), u(5 - j, 5 - i))))
                .collect();
            let mut out: Vec<RatFunc> = base_inverse(&[2, 1, 3, 2, 1, 3])?
                .iter()
                .map(|f| f.substitute(&flip).unwrap())
                .collect();
            out.reverse();
            Some(out)
        }
        _ => None,
    }
}

/// Parameters `p` with `chart_u(word, p) = m`, for `n <= 4` and any
/// reduced word of `w0`.
pub fn invert_word(m: &GroupMatrix, word: &Word) -> Result<Vec<RatFunc>> {
    let n = m.n();
    if n > 4 {
        return Err(Error::InversionNotImplemented(n));
    }
    if !m.is_upper_unitriangular() {
        return Err(Error::NotUnipotent);
    }
    if n == 1 {
        return Ok(vec![]);
    }
    let d = sl_datum(n)?;
    d.check_word(word)?;
    if !d.is_reduced(word) || d.element(word) != d.longest_element() {
        return Err(Error::NotReduced(word.to_string()));
    }
    let asg = entry_assignment('u', m);
    let eval = |fs: &[RatFunc]| -> Result<Vec<RatFunc>> {
        fs.iter()
            .map(|f| f.substitute(&asg).map_err(|_| Error::InverseUndefined))
            .collect()
    };
    let params = match base_inverse(word.letters()) {
        Some(fs) => eval(&fs)?,
        None => {
            let base = d.distinguished_word(0);
            let start = eval(&base_inverse(base.letters()).expect("distinguished word has an inverse"))?;
            let map = transition(&base, word, &d, 'p', DEFAULT_BFS_BUDGET)?;
            map.apply(&start).map_err(|_| Error::InverseUndefined)?
        }
    };
    if chart_u(word, &params, n)? != *m {
        return Err(Error::InverseUndefined);
    }
    Ok(params)
}

/// Parameters of `m` in the chart of `jj^eps` of `d` (type `A_{n-1}`).
pub fn invert_chart(m: &GroupMatrix, eps: usize, d: &CartanDatum) -> Result<Vec<RatFunc>> {
    if m.n() > 4 {
        return Err(Error::InversionNotImplemented(m.n()));
    }
    if d.rank() + 1 != m.n() {
        return Err(Error::LengthMismatch {
            expected: d.rank() + 1,
            got: m.n(),
        });
    }
    invert_word(m, &d.distinguished_word(eps))
}
