//! Finite-type Cartan data in Bourbaki numbering.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::weyl::{Weight, Word};

/// The Cartan–Killing family of a simple root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }
}

/// Root datum of a simply connected almost simple group.
///
/// Nodes are numbered `1..=rank`. The Cartan matrix entry `a(i, j)` is
/// `<coroot_i, root_j>`. Weights are written in the fundamental-weight
/// basis and positive roots in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    /// `classes[0]` and `classes[1]`, each sorted ascending.
    classes: [Vec<usize>; 2],
    coxeter_number: usize,
}

impl CartanDatum {
    /// Builds the datum with the default bipartition, which puts node 1 in
    /// the class `I_1`.
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        let cartan =
            cartan_matrix(kind, rank).ok_or_else(|| Error::InvalidCartanType(format!("{}{}", kind.letter(), rank)))?;
        let positive_roots = enumerate_positive_roots(&cartan);
        let nu = positive_roots.len();
        debug_assert_eq!((2 * nu) % rank, 0);
        let mut d = CartanDatum {
            kind,
            rank,
            cartan,
            positive_roots,
            classes: [vec![], vec![]],
            coxeter_number: 2 * nu / rank,
        };
        d.classes = d.default_classes();
        Ok(d)
    }

    /// Parses labels such as `"A3"`, `"g2"` or `"E6"`.
    pub fn parse(label: &str) -> Result<Self> {
        label.parse()
    }

    /// Overrides the bipartition: `i0` lists the nodes of `I_0`, the rest
    /// form `I_1`. Each class must consist of pairwise orthogonal nodes.
    pub fn with_labeling(mut self, i0: &[usize]) -> Result<Self> {
        for &i in i0 {
            if i == 0 || i > self.rank {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    max: self.rank,
                });
            }
        }
        let mut c0: Vec<usize> = i0.to_vec();
        c0.sort_unstable();
        c0.dedup();
        let c1: Vec<usize> = (1..=self.rank).filter(|i| !c0.contains(i)).collect();
        for class in [&c0, &c1] {
            for &i in class {
                for &j in class {
                    if i != j && self.a(i, j) != 0 {
                        return Err(Error::InvalidBipartition(format!(
                            "nodes {i} and {j} are joined in the Dynkin diagram"
                        )));
                    }
                }
            }
        }
        self.classes = [c0, c1];
        Ok(self)
    }

    fn default_classes(&self) -> [Vec<usize>; 2] {
        let r = self.rank;
        let mut color = vec![usize::MAX; r + 1];
        color[1] = 1;
        let mut stack = vec![1];
        while let Some(i) = stack.pop() {
            for j in 1..=r {
                if j != i && self.a(i, j) != 0 && color[j] == usize::MAX {
                    color[j] = 1 - color[i];
                    stack.push(j);
                }
            }
        }
        let c0 = (1..=r).filter(|&i| color[i] == 0).collect();
        let c1 = (1..=r).filter(|&i| color[i] == 1).collect();
        [c0, c1]
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn nu(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    /// `<coroot_i, root_j>` for 1-based nodes.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }

    /// The class `I_[eps]`, for any integer `eps` (taken mod 2).
    pub fn class(&self, eps: usize) -> &[usize] {
        &self.classes[eps % 2]
    }

    /// Whether root subgroups `i` and `j` commute (`i == j` included).
    pub fn commute(&self, i: usize, j: usize) -> bool {
        i == j || self.a(i, j) == 0
    }

    /// Order of `s_i s_j` in the Weyl group.
    pub fn braid_order(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        match self.a(i, j) * self.a(j, i) {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("finite-type product {p}"),
        }
    }

    pub fn omega(&self, i: usize) -> Weight {
        let mut c = vec![0; self.rank];
        c[i - 1] = 1;
        Weight::new(c)
    }

    /// The simple root `alpha_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new((0..self.rank).map(|k| self.cartan[k][i - 1]).collect())
    }

    /// Checks that every letter is a node.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        for &i in w.letters() {
            if i == 0 || i > self.rank {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    max: self.rank,
                });
            }
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidCartanType(s.to_string());
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanType::A,
            Some('B') => CartanType::B,
            Some('C') => CartanType::C,
            Some('D') => CartanType::D,
            Some('E') => CartanType::E,
            Some('F') => CartanType::F,
            Some('G') => CartanType::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanDatum::new(kind, rank).map_err(|_| bad())
    }
}

/// Cartan matrix `a[i][j] = <coroot_i, root_j>` (0-based), or `None` for an
/// invalid type/rank pair.
fn cartan_matrix(kind: CartanType, n: usize) -> Option<Vec<Vec<i64>>> {
    use CartanType::*;
    let valid = match kind {
        A => n >= 1,
        B => n >= 2,
        C => n >= 3,
        D => n >= 4,
        E => (6..=8).contains(&n),
        F => n == 4,
        G => n == 2,
    };
    if !valid {
        return None;
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut join = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match kind {
        A | B | C | F => (1..n).for_each(|i| join(i, i + 1)),
        D => {
            (1..n - 1).for_each(|i| join(i, i + 1));
            join(n - 2, n);
        }
        E => {
            join(1, 3);
            join(3, 4);
            join(2, 4);
            (4..n).for_each(|i| join(i, i + 1));
        }
        G => join(1, 2),
    }
    match kind {
        // alpha_n short
        B => a[n - 1][n - 2] = -2,
        // alpha_n long
        C => a[n - 2][n - 1] = -2,
        // alpha_3, alpha_4 short
        F => a[2][1] = -2,
        // alpha_1 short
        G => a[0][1] = -3,
        _ => {}
    }
    Some(a)
}

/// Closure of the simple roots under simple reflections, positive part,
/// sorted by height then lexicographically.
fn enumerate_positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut e = vec![0; r];
            e[i] = 1;
            e
        })
        .collect();
    while let Some(beta) = stack.pop() {
        if !seen.insert(beta.clone()) {
            continue;
        }
        for i in 0..r {
            let pairing: i64 = (0..r).map(|j| a[i][j] * beta[j]).sum();
            if pairing != 0 {
                let mut g = beta.clone();
                g[i] -= pairing;
                if !seen.contains(&g) {
                    stack.push(g);
                }
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|b| b.iter().all(|&c| c >= 0)).collect();
    pos.sort_by_key(|b| (b.iter().sum::<i64>(), b.clone()));
    pos
}
