//! Weights, words and Weyl group elements.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::cartan::CartanDatum;

/// An integral weight in fundamental-weight coordinates:
/// `coords[j - 1] = <coroot_j, weight>`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `<coroot_j, self>` for a 1-based node `j`.
    pub fn pairing(&self, j: usize) -> i64 {
        self.0[j - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }

    /// The node `i` if this is the fundamental weight `omega_i`.
    pub fn as_fundamental(&self) -> Option<usize> {
        let mut found = None;
        for (k, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(k + 1),
                _ => return None,
            }
        }
        found
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sequence of nodes `(i_1, ..., i_k)` standing for `s_{i_1} ... s_{i_k}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(vec![])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word([self.0.as_slice(), other.0.as_slice()].concat())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `2,1,3`, `(2,1,3)`, `2 1 3` and the empty word `()`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let letters = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidCartanType(format!("bad word letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}

/// An element of the Weyl group, identified by its action on weights.
///
/// `on_weights` acts on fundamental-weight coordinates and `on_roots` on
/// simple-root coordinates; both are `r x r` row-major integer matrices.
/// Equality compares only the weight action.
#[derive(Clone)]
pub struct WeylElement {
    rank: usize,
    on_weights: Vec<i64>,
    on_roots: Vec<i64>,
    word: Word,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.on_weights == other.on_weights
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.on_weights.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{}", self.word)
    }
}

fn mat_mul(r: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x != 0 {
                for j in 0..r {
                    c[i * r + j] += x * b[k * r + j];
                }
            }
        }
    }
    c
}

fn mat_vec(r: usize, a: &[i64], v: &[i64]) -> Vec<i64> {
    (0..r).map(|i| (0..r).map(|k| a[i * r + k] * v[k]).sum()).collect()
}

fn identity(r: usize) -> Vec<i64> {
    let mut m = vec![0; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

impl WeylElement {
    /// The witness word this element was built from.
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn weight_matrix(&self) -> &[i64] {
        &self.on_weights
    }

    pub fn is_identity(&self) -> bool {
        self.on_weights == identity(self.rank)
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let r = self.rank;
        WeylElement {
            rank: r,
            on_weights: mat_mul(r, &self.on_weights, &other.on_weights),
            on_roots: mat_mul(r, &self.on_roots, &other.on_roots),
            word: self.word.concat(&other.word),
        }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(mat_vec(self.rank, &self.on_weights, &w.0))
    }

    /// Image of a root given in simple-root coordinates.
    pub fn apply_root(&self, beta: &[i64]) -> Vec<i64> {
        mat_vec(self.rank, &self.on_roots, beta)
    }
}

impl CartanDatum {
    /// `s_i(lambda) = lambda - <coroot_i, lambda> alpha_i`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let li = lambda.pairing(i);
        if li == 0 {
            return lambda.clone();
        }
        let mut c = lambda.0.clone();
        for (k, ck) in c.iter_mut().enumerate() {
            *ck -= li * self.a(k + 1, i);
        }
        Weight(c)
    }

    /// `s_{i_1}(s_{i_2}(... s_{i_k}(lambda)))` for `word = (i_1, ..., i_k)`:
    /// the last letter acts first.
    ///
    /// A suffix product `s_{j_m} ... s_{j_k} lambda` of a word `j` is
    /// therefore `weyl_apply((j_m, ..., j_k), lambda)`, i.e. the reversed
    /// suffix read left to right as written.
    pub fn weyl_apply(&self, word: &Word, lambda: &Weight) -> Weight {
        word.letters()
            .iter()
            .rev()
            .fold(lambda.clone(), |acc, &i| self.reflect(i, &acc))
    }

    pub fn identity_element(&self) -> WeylElement {
        let r = self.rank();
        WeylElement {
            rank: r,
            on_weights: identity(r),
            on_roots: identity(r),
            word: Word::empty(),
        }
    }

    /// The simple reflection `s_i`.
    pub fn reflection(&self, i: usize) -> WeylElement {
        let r = self.rank();
        let mut w = identity(r);
        let mut q = identity(r);
        for k in 0..r {
            // weights: column i picks up -alpha_i
            w[k * r + (i - 1)] -= self.a(k + 1, i);
            // roots: row i picks up -<coroot_i, .>
            q[(i - 1) * r + k] -= self.a(i, k + 1);
        }
        WeylElement {
            rank: r,
            on_weights: w,
            on_roots: q,
            word: Word::new(vec![i]),
        }
    }

    /// The product `s_{i_1} ... s_{i_k}`.
    pub fn element(&self, word: &Word) -> WeylElement {
        let mut e = self.identity_element();
        for &i in word.letters() {
            e = e.compose(&self.reflection(i));
        }
        e
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots()
            .iter()
            .filter(|beta| w.apply_root(beta).iter().all(|&c| c <= 0))
            .count()
    }

    pub fn is_reduced(&self, word: &Word) -> bool {
        self.length(&self.element(word)) == word.len()
    }

    /// The longest element, found by descending from the identity until
    /// `rho` becomes antidominant.
    pub fn longest_element(&self) -> WeylElement {
        let rho = Weight(vec![1; self.rank()]);
        let mut w = self.identity_element();
        loop {
            let cur = w.apply(&rho);
            match self.nodes().find(|&i| cur.pairing(i) > 0) {
                Some(i) => w = self.reflection(i).compose(&w),
                None => return w,
            }
        }
    }

    /// Minimal-length `w` with `w(omega_i) = gamma`, together with `i`.
    ///
    /// Walks `gamma` up to the dominant chamber through simple reflections
    /// `s_j` with `<coroot_j, current> < 0`; the recorded letters, in order,
    /// form a reduced word for `w`.
    pub fn minimal_coset_rep(&self, gamma: &Weight) -> Result<(usize, WeylElement)> {
        let mut cur = gamma.clone();
        let mut letters = Vec::new();
        while let Some(j) = self.nodes().find(|&j| cur.pairing(j) < 0) {
            cur = self.reflect(j, &cur);
            letters.push(j);
        }
        let i = cur
            .as_fundamental()
            .ok_or_else(|| Error::NotInFundamentalOrbit(gamma.to_string()))?;
        Ok((i, self.element(&Word::new(letters))))
    }

    /// `s_i <= w` in the Bruhat order, i.e. `w` moves `omega_i`.
    pub fn simple_below(&self, i: usize, w: &WeylElement) -> bool {
        w.apply(&self.omega(i)) != self.omega(i)
    }

    /// All elements of `W` with a shortest witness word each, in
    /// breadth-first (length) order. Fails past `budget` elements.
    pub fn all_elements(&self, budget: usize) -> Result<Vec<WeylElement>> {
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut out = vec![self.identity_element()];
        seen.insert(out[0].on_weights.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for i in self.nodes() {
                let next = out[k].compose(&self.reflection(i));
                if !seen.contains_key(&next.on_weights) {
                    if out.len() >= budget {
                        return Err(Error::SearchBudgetExceeded(budget));
                    }
                    seen.insert(next.on_weights.clone(), out.len());
                    queue.push_back(out.len());
                    out.push(next);
                }
            }
        }
        Ok(out)
    }

    /// All reduced words of `w` (only sensible for small groups).
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Word> {
        let len = self.length(w);
        let mut out = Vec::new();
        self.extend_reduced(w, len, &mut Vec::new(), &mut out);
        out
    }

    fn extend_reduced(&self, w: &WeylElement, len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Word>) {
        if len == 0 {
            out.push(Word::new(prefix.clone()));
            return;
        }
        for i in self.nodes() {
            let shorter = self.reflection(i).compose(w);
            if self.length(&shorter) + 1 == len {
                prefix.push(i);
                self.extend_reduced(&shorter, len - 1, prefix, out);
                prefix.pop();
            }
        }
    }
}
