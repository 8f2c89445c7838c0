//! Exhaustive checks of the combinatorics of bipartite words and their
//! weight families for a single root datum.

use std::fmt;

use super::cartan::{CartanDatum, CartanType};
use super::weyl::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub label: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    /// True when no check failed (skipped checks count as passing).
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.status, CheckStatus::Failed(_)))
    }

    pub fn get(&self, name: &str) -> Option<&CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.status)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.status {
                CheckStatus::Passed => writeln!(f, "{} {:<32} pass", self.label, c.name)?,
                CheckStatus::Failed(why) => writeln!(f, "{} {:<32} FAIL: {why}", self.label, c.name)?,
                CheckStatus::Skipped(why) => writeln!(f, "{} {:<32} skipped: {why}", self.label, c.name)?,
            }
        }
        Ok(())
    }
}

/// Check names, in report order.
pub const CHECK_NAMES: [&str; 10] = [
    "bipartite_word_is_longest",
    "partial_products_additive",
    "chart_weight_classification",
    "adjacent_pair_weights",
    "descent_signs",
    "coset_rep_descents",
    "interior_weights_distinct",
    "interior_weight_count",
    "disjoint_from_fundamental",
    "disjoint_from_lowest",
];

type Check = Result<(), String>;

fn subsets(class: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << class.len())
        .map(|mask| {
            class
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &i)| i)
                .collect()
        })
        .collect()
}

fn check_longest(d: &CartanDatum) -> Check {
    let w0 = d.longest_element();
    for eps in 0..2 {
        let jj = d.distinguished_word(eps);
        if jj.len() != d.nu() {
            return Err(format!("jj^{eps} = {jj} has length {} != {}", jj.len(), d.nu()));
        }
        let z_total: usize = (0..d.coxeter_number()).map(|m| d.class(eps + m).len()).sum();
        if z_total != d.nu() {
            return Err(format!("class sizes along jj^{eps} sum to {z_total}"));
        }
        if !d.is_reduced(&jj) {
            return Err(format!("jj^{eps} = {jj} is not reduced"));
        }
        if d.element(&jj) != w0 {
            return Err(format!("jj^{eps} = {jj} is not a word for w0"));
        }
    }
    Ok(())
}

/// `|w z^[eps+1] ... z^[eps+l] w'| = |w| + sum |z| + |w'|` for `w` a product
/// over a subset of `I_[eps]` and `w'` over a subset of `I_[eps+l+1]`;
/// `l <= h - 2` in general, and `l = h - 1` when `w` or `w'` is trivial.
fn check_partial_products(d: &CartanDatum) -> Check {
    let h = d.coxeter_number();
    for eps in 0..2 {
        let left = subsets(d.class(eps));
        for l in 0..h {
            let mut middle = Vec::new();
            for m in 1..=l {
                middle.extend_from_slice(d.class(eps + m));
            }
            let right = subsets(d.class(eps + l + 1));
            for a in &left {
                for b in &right {
                    if l == h - 1 && !a.is_empty() && !b.is_empty() {
                        continue;
                    }
                    let word = Word::new([a.as_slice(), &middle, b.as_slice()].concat());
                    if !d.is_reduced(&word) {
                        return Err(format!("eps = {eps}, l = {l}: {word} is not reduced"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// With `k` in the block `X_m`: `gamma_k = v_{h+1-m, j_k}` for `m >= 3`,
/// `gamma_k` in `Y''` for `m <= 2`, `gamma~_k = v_{h-1-m, j_k}` for
/// `m <= h - 2` and `gamma~_k` in `Y'` for `m >= h - 1`.
fn check_classification(d: &CartanDatum) -> Check {
    let h = d.coxeter_number();
    for eps in 0..2 {
        let cw = d.chart_weights(eps);
        let sets = d.weight_sets(eps);
        for k in 1..=d.nu() {
            let m = cw.block_of(k);
            let jk = cw.word.letters()[k - 1];
            let g = &cw.gamma[k - 1];
            let gt = &cw.gamma_tilde[k - 1];
            if m >= 3 {
                let v = &cw.v[&(h + 1 - m, jk)];
                if g != v {
                    return Err(format!("eps = {eps}, k = {k}: gamma = {g} but v = {v}"));
                }
            } else if !sets.y_double_prime.contains(g) {
                return Err(format!("eps = {eps}, k = {k}: gamma = {g} is not a lowest weight"));
            }
            if m + 2 <= h {
                let v = &cw.v[&(h - 1 - m, jk)];
                if gt != v {
                    return Err(format!("eps = {eps}, k = {k}: gamma~ = {gt} but v = {v}"));
                }
            } else if !sets.y_prime.contains(gt) {
                return Err(format!("eps = {eps}, k = {k}: gamma~ = {gt} is not fundamental"));
            }
        }
    }
    Ok(())
}

fn check_adjacent_pairs(d: &CartanDatum) -> Check {
    for eps in 0..2 {
        let cw = d.chart_weights(eps);
        let letters = cw.word.letters();
        for k in 1..=d.nu() {
            for k2 in 1..=d.nu() {
                if d.commute(letters[k - 1], letters[k2 - 1]) {
                    continue;
                }
                let g = d.gamma_pair(eps, k, k2);
                if !cw.gamma.contains(&g) && g.as_fundamental().is_none() {
                    return Err(format!("eps = {eps}, (k, k') = ({k}, {k2}): {g}"));
                }
            }
        }
    }
    Ok(())
}

fn check_descent_signs(d: &CartanDatum) -> Check {
    let h = d.coxeter_number();
    for eps in 0..2 {
        for (&(l, i), v) in &d.chart_weights(eps).v {
            if let Some(&j) = d.class(eps + h).iter().find(|&&j| v.pairing(j) < 0) {
                return Err(format!("eps = {eps}, v_({l},{i}) = {v}: negative at {j}"));
            }
            if !d.class(eps + h + 1).iter().any(|&j| v.pairing(j) < 0) {
                return Err(format!("eps = {eps}, v_({l},{i}) = {v}: no negative pairing"));
            }
        }
    }
    Ok(())
}

fn check_coset_descents(d: &CartanDatum) -> Check {
    let h = d.coxeter_number();
    for eps in 0..2 {
        for (&(l, i), v) in &d.chart_weights(eps).v {
            let (node, w) = d.minimal_coset_rep(v).map_err(|e| e.to_string())?;
            if node != i || w.apply(&d.omega(i)) != *v {
                return Err(format!("eps = {eps}, v_({l},{i}): bad coset representative"));
            }
            let len = d.length(&w);
            let sjw = |j: usize| d.length(&d.reflection(j).compose(&w));
            if let Some(&j) = d.class(eps + h).iter().find(|&&j| sjw(j) < len) {
                return Err(format!("eps = {eps}, v_({l},{i}): s_{j} is a left descent"));
            }
            if !d.class(eps + h + 1).iter().any(|&j| sjw(j) < len) {
                return Err(format!("eps = {eps}, v_({l},{i}): no left descent"));
            }
        }
    }
    Ok(())
}

fn check_distinct(d: &CartanDatum) -> Check {
    for eps in 0..2 {
        let v: Vec<_> = d.chart_weights(eps).v.into_iter().collect();
        for (x, (kx, wx)) in v.iter().enumerate() {
            if let Some((ky, _)) = v[x + 1..].iter().find(|(_, wy)| wy == wx) {
                return Err(format!("eps = {eps}: v{kx:?} = v{ky:?} = {wx}"));
            }
        }
    }
    Ok(())
}

fn check_count(d: &CartanDatum) -> Check {
    for eps in 0..2 {
        let n = d.weight_sets(eps).y_eps.len();
        if n != d.nu() - d.rank() {
            return Err(format!(
                "eps = {eps}: {n} interior weights, expected {}",
                d.nu() - d.rank()
            ));
        }
    }
    Ok(())
}

fn check_disjoint(d: &CartanDatum, lowest: bool) -> Check {
    for eps in 0..2 {
        let sets = d.weight_sets(eps);
        let other = if lowest { &sets.y_double_prime } else { &sets.y_prime };
        if let Some(w) = sets.y_eps.iter().find(|w| other.contains(w)) {
            return Err(format!("eps = {eps}: {w} lies in both sets"));
        }
    }
    Ok(())
}

fn status(c: Check) -> CheckStatus {
    match c {
        Ok(()) => CheckStatus::Passed,
        Err(e) => CheckStatus::Failed(e),
    }
}

/// Runs every check on `d` by enumeration.
pub fn verify_section1(d: &CartanDatum) -> VerificationReport {
    let is_a1 = d.kind() == CartanType::A && d.rank() == 1;
    let disjoint = |lowest| {
        if is_a1 {
            CheckStatus::Skipped("not applicable in type A1".into())
        } else {
            status(check_disjoint(d, lowest))
        }
    };
    let statuses = [
        status(check_longest(d)),
        status(check_partial_products(d)),
        status(check_classification(d)),
        status(check_adjacent_pairs(d)),
        status(check_descent_signs(d)),
        status(check_coset_descents(d)),
        status(check_distinct(d)),
        status(check_count(d)),
        disjoint(false),
        disjoint(true),
    ];
    VerificationReport {
        label: d.label(),
        checks: CHECK_NAMES
            .iter()
            .zip(statuses)
            .map(|(&name, status)| CheckResult { name, status })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_passes() {
        let r = verify_section1(&CartanDatum::parse("A3").unwrap());
        assert!(r.all_passed(), "{r}");
        assert!(r.checks.iter().all(|c| c.status == CheckStatus::Passed));
    }

    #[test]
    fn a1_skips_disjointness() {
        let r = verify_section1(&CartanDatum::parse("A1").unwrap());
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.get("bipartite_word_is_longest"), Some(&CheckStatus::Passed));
        assert!(matches!(
            r.get("disjoint_from_fundamental"),
            Some(CheckStatus::Skipped(_))
        ));
        assert!(matches!(r.get("disjoint_from_lowest"), Some(CheckStatus::Skipped(_))));
    }

    #[test]
    fn g2_passes() {
        let r = verify_section1(&CartanDatum::parse("G2").unwrap());
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn swapped_labeling_also_passes() {
        let d = CartanDatum::parse("A3").unwrap().with_labeling(&[1, 3]).unwrap();
        assert!(verify_section1(&d).all_passed());
    }
}
