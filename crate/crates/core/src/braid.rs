//! Commutation and braid moves on reduced words, and the parameter
//! transition maps they induce on unipotent charts.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::arith::{RatFunc, Var};
use crate::error::{Error, Result};
use crate::roots::{CartanDatum, Word};

/// Default cap on the number of reduced words visited by [`word_path`].
pub const DEFAULT_BFS_BUDGET: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// `(i, j) -> (j, i)` for orthogonal `i, j`.
    Commute,
    /// `(i, j, i) -> (j, i, j)` for `i, j` joined by a simple edge.
    Braid3,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Commute => "commute",
            MoveKind::Braid3 => "braid3",
        })
    }
}

/// A move acting on the letters starting at the 0-based `position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub position: usize,
    pub kind: MoveKind,
}

impl Move {
    pub fn commute(position: usize) -> Self {
        Move {
            position,
            kind: MoveKind::Commute,
        }
    }

    pub fn braid3(position: usize) -> Self {
        Move {
            position,
            kind: MoveKind::Braid3,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind, self.position)
    }
}

fn inapplicable(mv: Move) -> Error {
    Error::InapplicableMove {
        position: mv.position,
        kind: mv.kind.to_string(),
    }
}

/// The word after `mv`, or an error when the letters do not match.
pub fn move_word(d: &CartanDatum, word: &[usize], mv: Move) -> Result<Vec<usize>> {
    let p = mv.position;
    let mut out = word.to_vec();
    match mv.kind {
        MoveKind::Commute => {
            let (Some(&i), Some(&j)) = (word.get(p), word.get(p + 1)) else {
                return Err(inapplicable(mv));
            };
            if i == j || d.a(i, j) != 0 {
                return Err(inapplicable(mv));
            }
            out.swap(p, p + 1);
        }
        MoveKind::Braid3 => {
            let (Some(&i), Some(&j), Some(&k)) = (word.get(p), word.get(p + 1), word.get(p + 2)) else {
                return Err(inapplicable(mv));
            };
            if i != k || i == j || d.braid_order(i, j) != 3 {
                return Err(inapplicable(mv));
            }
            out[p] = j;
            out[p + 1] = i;
            out[p + 2] = j;
        }
    }
    Ok(out)
}

/// Applies `mv` to the word and its chart parameters.
///
/// A braid move sends `x_i(a) x_j(b) x_i(c)` to
/// `x_j(bc/(a+c)) x_i(a+c) x_j(ab/(a+c))`.
pub fn apply_move(d: &CartanDatum, word: &Word, params: &[RatFunc], mv: Move) -> Result<(Word, Vec<RatFunc>)> {
    if word.len() != params.len() {
        return Err(Error::LengthMismatch {
            expected: word.len(),
            got: params.len(),
        });
    }
    let letters = move_word(d, word.letters(), mv)?;
    let p = mv.position;
    let mut out = params.to_vec();
    match mv.kind {
        MoveKind::Commute => out.swap(p, p + 1),
        MoveKind::Braid3 => {
            let (a, b, c) = (&params[p], &params[p + 1], &params[p + 2]);
            let s = a + c;
            if s.is_zero() {
                return Err(Error::DegenerateTransition);
            }
            let si = s.inv()?;
            out[p] = &(b * c) * &si;
            out[p + 2] = &(a * b) * &si;
            out[p + 1] = s;
        }
    }
    Ok((Word::new(letters), out))
}

/// Applies a sequence of moves.
pub fn apply_path(d: &CartanDatum, word: &Word, params: &[RatFunc], path: &[Move]) -> Result<(Word, Vec<RatFunc>)> {
    let mut cur = (word.clone(), params.to_vec());
    for &mv in path {
        cur = apply_move(d, &cur.0, &cur.1, mv)?;
    }
    Ok(cur)
}

fn neighbours(d: &CartanDatum, w: &[usize]) -> Vec<(Move, Vec<usize>)> {
    let mut out = Vec::new();
    for p in 0..w.len() {
        for mv in [Move::commute(p), Move::braid3(p)] {
            if let Ok(next) = move_word(d, w, mv) {
                out.push((mv, next));
            }
        }
    }
    out
}

/// A shortest sequence of commutation and braid moves turning `w1` into
/// `w2`, by breadth-first search over reduced words.
pub fn word_path(w1: &Word, w2: &Word, d: &CartanDatum, budget: usize) -> Result<Vec<Move>> {
    for w in [w1, w2] {
        d.check_word(w)?;
        if !d.is_reduced(w) {
            return Err(Error::NotReduced(w.to_string()));
        }
    }
    if d.element(w1) != d.element(w2) {
        return Err(Error::DifferentProducts);
    }
    let start = w1.letters().to_vec();
    let goal = w2.letters().to_vec();
    let mut parent: HashMap<Vec<usize>, Option<(Vec<usize>, Move)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            let mut path = Vec::new();
            let mut node = cur;
            while let Some(Some((prev, mv))) = parent.get(&node) {
                path.push(*mv);
                node = prev.clone();
            }
            path.reverse();
            return Ok(path);
        }
        for (mv, next) in neighbours(d, &cur) {
            if parent.contains_key(&next) {
                continue;
            }
            if parent.len() >= budget {
                return Err(Error::SearchBudgetExceeded(budget));
            }
            parent.insert(next.clone(), Some((cur.clone(), mv)));
            queue.push_back(next);
        }
    }
    // the commute/braid3 component is exhausted: a longer braid relation
    // is needed
    let order = d
        .nodes()
        .flat_map(|i| d.nodes().map(move |j| (i, j)))
        .map(|(i, j)| d.braid_order(i, j))
        .filter(|&m| m > 3)
        .max()
        .unwrap_or(0);
    Err(Error::UnsupportedMove(order))
}

/// Formulas expressing the parameters of `target_word` through the symbols
/// of `source_word`, so that `chart_u(target, formulas) = chart_u(source,
/// symbols)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMap {
    pub source_word: Word,
    pub target_word: Word,
    pub source_vars: Vec<Var>,
    pub formulas: Vec<RatFunc>,
}

impl TransitionMap {
    /// The map along an explicit move sequence.
    pub fn along(d: &CartanDatum, source: &Word, path: &[Move], family: char) -> Result<Self> {
        let vars: Vec<Var> = (1..=source.len()).map(|k| Var::indexed(family, k as u16)).collect();
        let params: Vec<RatFunc> = vars.iter().map(|&v| RatFunc::var(v)).collect();
        let (target, formulas) = apply_path(d, source, &params, path)?;
        Ok(TransitionMap {
            source_word: source.clone(),
            target_word: target,
            source_vars: vars,
            formulas,
        })
    }

    /// Evaluates the formulas at the given source parameters.
    pub fn apply(&self, params: &[RatFunc]) -> Result<Vec<RatFunc>> {
        if params.len() != self.source_vars.len() {
            return Err(Error::LengthMismatch {
                expected: self.source_vars.len(),
                got: params.len(),
            });
        }
        let asg: HashMap<Var, RatFunc> = self.source_vars.iter().copied().zip(params.iter().cloned()).collect();
        self.formulas
            .iter()
            .map(|f| f.substitute(&asg).map_err(|_| Error::DegenerateTransition))
            .collect()
    }

    /// `other` after `self`: from the source of `self` to the target of
    /// `other`.
    pub fn then(&self, other: &TransitionMap) -> Result<TransitionMap> {
        if self.target_word != other.source_word {
            return Err(Error::DifferentProducts);
        }
        Ok(TransitionMap {
            source_word: self.source_word.clone(),
            target_word: other.target_word.clone(),
            source_vars: self.source_vars.clone(),
            formulas: other.apply(&self.formulas)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source_word == self.target_word
            && self
                .formulas
                .iter()
                .zip(&self.source_vars)
                .all(|(f, &v)| *f == RatFunc::var(v))
    }
}

/// The transition map from `w1` (parameters `family1, family2, ...`) to `w2`.
pub fn transition(w1: &Word, w2: &Word, d: &CartanDatum, family: char, budget: usize) -> Result<TransitionMap> {
    let path = word_path(w1, w2, d, budget)?;
    TransitionMap::along(d, w1, &path, family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(k: u16) -> RatFunc {
        RatFunc::var(Var::indexed('a', k))
    }

    fn a3() -> CartanDatum {
        CartanDatum::parse("A3").unwrap()
    }

    #[test]
    fn braid_move_sl3() {
        let d = CartanDatum::parse("A2").unwrap();
        let (w, p) = apply_move(&d, &Word::new(vec![1, 2, 1]), &[a(1), a(2), a(3)], Move::braid3(0)).unwrap();
        assert_eq!(w, Word::new(vec![2, 1, 2]));
        let s = &a(1) + &a(3);
        assert_eq!(p, vec![&(&a(2) * &a(3)) / &s, s.clone(), &(&a(1) * &a(2)) / &s]);
    }

    #[test]
    fn commute_move_sl4() {
        let d = a3();
        let (w, p) = apply_move(&d, &Word::new(vec![2, 1, 3]), &[a(1), a(2), a(3)], Move::commute(1)).unwrap();
        assert_eq!(w, Word::new(vec![2, 3, 1]));
        assert_eq!(p, vec![a(1), a(3), a(2)]);
        assert!(apply_move(&d, &Word::new(vec![2, 1, 3]), &[a(1), a(2), a(3)], Move::commute(0)).is_err());
        assert!(apply_move(&d, &Word::new(vec![2, 1, 3]), &[a(1), a(2), a(3)], Move::braid3(0)).is_err());
    }

    #[test]
    fn degenerate_braid() {
        let d = CartanDatum::parse("A2").unwrap();
        let w = Word::new(vec![1, 2, 1]);
        let (_, p) = apply_move(&d, &w, &[a(1), a(2), RatFunc::zero()], Move::braid3(0)).unwrap();
        assert_eq!(p, vec![RatFunc::zero(), a(1), a(2)]);
        let r = apply_move(&d, &w, &[a(1), a(2), -a(1)], Move::braid3(0));
        assert_eq!(r, Err(Error::DegenerateTransition));
    }

    #[test]
    fn paths() {
        let d = CartanDatum::parse("A2").unwrap();
        let w = Word::new(vec![1, 2, 1]);
        assert!(word_path(&w, &w, &d, 10).unwrap().is_empty());
        assert_eq!(
            word_path(&w, &Word::new(vec![2, 1, 2]), &d, 10).unwrap(),
            vec![Move::braid3(0)]
        );
        assert_eq!(
            word_path(&w, &Word::new(vec![1, 2]), &d, 10),
            Err(Error::DifferentProducts)
        );
        let d = a3();
        let p = word_path(&d.distinguished_word(1), &d.distinguished_word(0), &d, 1000).unwrap();
        assert!(!p.is_empty());
        assert_eq!(
            word_path(&d.distinguished_word(1), &d.distinguished_word(0), &d, 2),
            Err(Error::SearchBudgetExceeded(2))
        );
    }

    #[test]
    fn unsupported_in_b2() {
        let d = CartanDatum::parse("B2").unwrap();
        let r = word_path(&Word::new(vec![1, 2, 1, 2]), &Word::new(vec![2, 1, 2, 1]), &d, 100);
        assert_eq!(r, Err(Error::UnsupportedMove(4)));
    }
}
