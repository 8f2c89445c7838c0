//! Bipartite distinguished words and the weight families attached to them.
//!
//! All suffix products `s_{j_nu} ... s_{j_m} lambda` are evaluated with
//! [`CartanDatum::weyl_apply`] on the word `(j_nu, ..., j_m)`, i.e. on the
//! reversed suffix.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::cartan::CartanDatum;
use super::weyl::{Weight, Word};

/// Weights attached to the chart of `jj^eps`. Positions `k` are 1-based.
#[derive(Clone, Debug)]
pub struct ChartWeights {
    pub eps: usize,
    pub word: Word,
    /// `blocks[m - 1]` lists the positions of the block `X_m`.
    pub blocks: Vec<Vec<usize>>,
    /// `gamma[k - 1] = s_{j_nu} ... s_{j_k} omega_{j_k}`.
    pub gamma: Vec<Weight>,
    /// `gamma_tilde[k - 1] = s_{j_nu} ... s_{j_{k+1}} omega_{j_k}`.
    pub gamma_tilde: Vec<Weight>,
    /// `v[(l, i)]` for `1 <= l <= h - 2` and `i` in `I_[eps + h - l]`.
    pub v: BTreeMap<(usize, usize), Weight>,
}

impl ChartWeights {
    /// The block index `m` with `k` in `X_m`.
    pub fn block_of(&self, k: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&k)).unwrap() + 1
    }
}

/// The sets `Y'` (fundamental weights), `Y''` (their `w0`-images) and
/// `Y^eps` (all `v_{l,i}`), each in a fixed deterministic order.
#[derive(Clone, Debug)]
pub struct WeightSets {
    pub y_prime: Vec<Weight>,
    pub y_double_prime: Vec<Weight>,
    pub y_eps: Vec<Weight>,
}

impl CartanDatum {
    /// The letters of `z^eps = prod_{i in I_[eps]} s_i` in ascending order.
    pub fn z_word(&self, eps: usize) -> Word {
        Word::new(self.class(eps).to_vec())
    }

    /// `jj^eps`: the classes `I_[eps], I_[eps+1], ...` alternated `h` times.
    pub fn distinguished_word(&self, eps: usize) -> Word {
        let mut letters = Vec::with_capacity(self.nu());
        for m in 0..self.coxeter_number() {
            letters.extend_from_slice(self.class(eps + m));
        }
        Word::new(letters)
    }

    /// Positions of the blocks `X_1, ..., X_h` of `jj^eps`.
    pub fn blocks(&self, eps: usize) -> Vec<Vec<usize>> {
        let mut next = 1;
        (0..self.coxeter_number())
            .map(|m| {
                let size = self.class(eps + m).len();
                let b: Vec<usize> = (next..next + size).collect();
                next += size;
                b
            })
            .collect()
    }

    /// `v_{l,i} = z^[eps+h-1] z^[eps+h-2] ... z^[eps+h-l+1] s_i omega_i`.
    pub fn v_weight(&self, eps: usize, l: usize, i: usize) -> Result<Weight> {
        let h = self.coxeter_number();
        if l == 0 || l + 2 > h {
            return Err(Error::IndexOutOfRange {
                index: l,
                max: h.saturating_sub(2),
            });
        }
        if !self.class(eps + h - l).contains(&i) {
            return Err(Error::InvalidBipartition(format!(
                "node {i} is not in the class I_[eps+h-l] for l = {l}"
            )));
        }
        Ok(self.weyl_apply(&self.v_word(eps, l, i), &self.omega(i)))
    }

    /// The word `z^[eps+h-1] ... z^[eps+h-l+1] s_i` used for `v_{l,i}`.
    pub fn v_word(&self, eps: usize, l: usize, i: usize) -> Word {
        let h = self.coxeter_number();
        let mut letters = Vec::new();
        for q in 1..l {
            letters.extend_from_slice(self.class(eps + h - q));
        }
        letters.push(i);
        Word::new(letters)
    }

    fn suffix_word(word: &Word, from: usize) -> Word {
        // positions from..=nu, written j_nu first
        Word::new(word.letters()[from - 1..].iter().rev().copied().collect())
    }

    /// `gamma_{k,k'} = s_{j_nu} ... s_{j_k} omega_{j_k'}`.
    pub fn gamma_pair(&self, eps: usize, k: usize, k2: usize) -> Weight {
        let word = self.distinguished_word(eps);
        let j2 = word.letters()[k2 - 1];
        self.weyl_apply(&Self::suffix_word(&word, k), &self.omega(j2))
    }

    pub fn chart_weights(&self, eps: usize) -> ChartWeights {
        let eps = eps % 2;
        let word = self.distinguished_word(eps);
        let nu = word.len();
        let mut gamma = Vec::with_capacity(nu);
        let mut gamma_tilde = Vec::with_capacity(nu);
        for k in 1..=nu {
            let jk = word.letters()[k - 1];
            let om = self.omega(jk);
            gamma.push(self.weyl_apply(&Self::suffix_word(&word, k), &om));
            gamma_tilde.push(if k == nu {
                om
            } else {
                self.weyl_apply(&Self::suffix_word(&word, k + 1), &om)
            });
        }
        let h = self.coxeter_number();
        let mut v = BTreeMap::new();
        for l in 1..h.saturating_sub(1) {
            for &i in self.class(eps + h - l) {
                v.insert((l, i), self.v_weight(eps, l, i).unwrap());
            }
        }
        ChartWeights {
            eps,
            word,
            blocks: self.blocks(eps),
            gamma,
            gamma_tilde,
            v,
        }
    }

    pub fn weight_sets(&self, eps: usize) -> WeightSets {
        let w0 = self.longest_element();
        let y_prime: Vec<Weight> = self.nodes().map(|i| self.omega(i)).collect();
        let y_double_prime = y_prime.iter().map(|w| w0.apply(w)).collect();
        let mut y_eps: Vec<Weight> = Vec::new();
        for w in self.chart_weights(eps).v.into_values() {
            if !y_eps.contains(&w) {
                y_eps.push(w);
            }
        }
        WeightSets {
            y_prime,
            y_double_prime,
            y_eps,
        }
    }
}
