use std::collections::HashMap;

use coordring::arith::{RatFunc, Var};
use coordring::braid::{transition, DEFAULT_BFS_BUDGET};
use coordring::membership::*;
use coordring::roots::Word;
use coordring::sample;
use coordring::sl::{chart_u, gen_minor, sl_datum, symbols, GroupMatrix, MinorSpec};

fn u(i: u16, j: u16) -> RatFunc {
    RatFunc::var(Var::entry('u', i, j))
}

fn g(i: u16, j: u16) -> RatFunc {
    RatFunc::var(Var::entry('g', i, j))
}

fn b(k: u16) -> RatFunc {
    RatFunc::var(Var::indexed('b', k))
}

fn generic_unipotent(n: usize) -> GroupMatrix {
    let rows = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => u(i as u16, j as u16),
                    std::cmp::Ordering::Equal => RatFunc::one(),
                    std::cmp::Ordering::Greater => RatFunc::zero(),
                })
                .collect()
        })
        .collect();
    GroupMatrix::from_rows(rows).unwrap()
}

fn upper_vars(n: usize) -> Vec<Var> {
    (1..=n as u16)
        .flat_map(|i| (i + 1..=n as u16).map(move |j| Var::entry('u', i, j)))
        .collect()
}

#[test]
fn witness_is_rejected_with_certificates() {
    let d = sl_datum(4).unwrap();
    let phi = &u(1, 2) - &(&(&(&u(1, 3) * &u(3, 4)) - &u(1, 4)) / &(&(&u(2, 3) * &u(3, 4)) - &u(2, 4)));
    let v = decide_o_u(&phi, &d).unwrap();
    assert!(!v.member);
    assert_eq!(v.failing_chart, Some(ChartId::u(1)));
    assert_eq!(v.certificates[0].pullback, RatFunc::var(Var::indexed('a', 5)));
    assert!(v.certificates[0].ok);
    let q = &(&(&b(2) * &b(3)) + &(&b(2) * &b(6))) + &(&b(5) * &b(6));
    assert_eq!(v.certificates[1].pullback, &(&(&b(2) * &b(3)) * &b(4)) / &q);
    assert!(!v.certificates[1].ok);
    // certificates are reproducible
    for c in &v.certificates {
        assert_eq!(pullback(&phi, c.chart, &d).unwrap(), c.pullback);
    }
}

#[test]
fn reciprocal_entry_is_rejected_on_both_charts() {
    let d = sl_datum(4).unwrap();
    let v = decide_o_u(&u(1, 2).inv().unwrap(), &d).unwrap();
    let a = |k| RatFunc::var(Var::indexed('a', k));
    assert_eq!(v.certificates[0].pullback, (&a(2) + &a(5)).inv().unwrap());
    assert_eq!(v.certificates[1].pullback, (&b(1) + &b(4)).inv().unwrap());
    assert!(v.certificates.iter().all(|c| !c.ok));
}

#[test]
fn random_polynomials_are_accepted() {
    let mut rng = sample::rng(sample::DEFAULT_SEED);
    for n in [3, 4] {
        let d = sl_datum(n).unwrap();
        let vars = upper_vars(n);
        for _ in 0..50 {
            let phi = sample::polynomial(&mut rng, &vars, 3, 5);
            let v = decide_o_u(&phi, &d).unwrap();
            assert!(v.member, "{phi}");
        }
    }
}

#[test]
fn reciprocal_interior_minors_are_rejected() {
    let d = sl_datum(4).unwrap();
    let m = generic_unipotent(4);
    for eps in 0..2 {
        for gamma in d.weight_sets(eps).y_eps {
            let spec = MinorSpec::for_weight(&d, &gamma).unwrap();
            let minor = gen_minor(&spec, &m).unwrap();
            assert!(!minor.is_zero());
            let v = decide_o_u(&minor.inv().unwrap(), &d).unwrap();
            assert!(!v.member, "{gamma}");
        }
    }
}

#[test]
fn inversion_round_trips() {
    for n in 2..=4 {
        let d = sl_datum(n).unwrap();
        for eps in 0..2 {
            let jj = d.distinguished_word(eps);
            let p = symbols('a', jj.len());
            let m = chart_u(&jj, &p, n).unwrap();
            assert_eq!(invert_chart(&m, eps, &d).unwrap(), p, "n = {n}, eps = {eps}");
            // and the formulas compose back to the generic matrix
            let inv = invert_chart(&generic_unipotent(n), eps, &d).unwrap();
            assert_eq!(chart_u(&jj, &inv, n).unwrap(), generic_unipotent(n));
        }
    }
    // any other reduced word of w0 in SL4
    let w = Word::new(vec![1, 2, 1, 3, 2, 1]);
    let p = symbols('a', 6);
    assert_eq!(invert_word(&chart_u(&w, &p, 4).unwrap(), &w).unwrap(), p);
    assert!(invert_word(&generic_unipotent(4), &Word::new(vec![1, 2, 1])).is_err());
}

#[test]
fn golden_inverse_formulas() {
    let d = sl_datum(4).unwrap();
    let inv = invert_chart(&generic_unipotent(4), 0, &d).unwrap();
    let m = &(&u(1, 3) * &u(3, 4)) - &u(1, 4);
    assert_eq!(inv[5], &u(1, 4) / &u(1, 3));
    assert_eq!(inv[2], &m / &u(1, 3));
}

#[test]
fn two_routes_agree() {
    let d = sl_datum(4).unwrap();
    let (w0, w1) = (d.distinguished_word(0), d.distinguished_word(1));
    let map = transition(&w1, &w0, &d, 'b', DEFAULT_BFS_BUDGET).unwrap();
    let avars: Vec<Var> = (1..=6).map(|k| Var::indexed('a', k)).collect();
    let to_u = invert_chart(&generic_unipotent(4), 0, &d).unwrap();
    let a_to_u: HashMap<Var, RatFunc> = avars.iter().copied().zip(to_u).collect();
    let a_to_b: HashMap<Var, RatFunc> = avars.iter().copied().zip(map.formulas.clone()).collect();
    let mut rng = sample::rng(11);
    let mut members = 0;
    for trial in 0..30 {
        // mix genuine pullbacks of polynomials with arbitrary polynomials
        let big_phi = if trial % 2 == 0 {
            let phi = sample::polynomial(&mut rng, &upper_vars(4), 2, 4);
            pullback_u(&phi, 0, &d).unwrap()
        } else {
            sample::polynomial(&mut rng, &avars, 2, 4)
        };
        let phi = big_phi.substitute(&a_to_u).unwrap();
        let via_u = decide_o_u(&phi, &d).unwrap().member;
        let via_b = big_phi.substitute(&a_to_b).unwrap().is_polynomial();
        assert_eq!(via_u, via_b, "{big_phi}");
        members += via_u as usize;
    }
    assert!(members >= 15);
}

#[test]
fn invariant_polynomials_are_accepted() {
    let mut rng = sample::rng(5);
    for n in [2, 3] {
        let d = sl_datum(n).unwrap();
        // trailing-column minors: the last column and, for n = 3, the 2x2
        // minors on columns 2, 3
        let mut gens: Vec<RatFunc> = (1..=n as u16).map(|i| g(i, n as u16)).collect();
        if n == 3 {
            for (r1, r2) in [(1, 2), (1, 3), (2, 3)] {
                gens.push(&(&g(r1, 2) * &g(r2, 3)) - &(&g(r1, 3) * &g(r2, 2)));
            }
        }
        for _ in 0..5 {
            let gv: Vec<Var> = (1..=gens.len() as u16).map(|k| Var::indexed('z', k)).collect();
            let p = sample::polynomial(&mut rng, &gv, 2, 3);
            let asg: HashMap<Var, RatFunc> = gv.iter().copied().zip(gens.iter().cloned()).collect();
            let phi = p.substitute(&asg).unwrap();
            assert!(check_invariance(&phi, n).unwrap());
            assert!(decide_o_gmodu(&phi, &d).unwrap().member, "{phi}");
        }
        let entries: Vec<Var> = (1..=n as u16)
            .flat_map(|i| (1..=n as u16).map(move |j| Var::entry('g', i, j)))
            .collect();
        for _ in 0..3 {
            let phi = sample::polynomial(&mut rng, &entries, 2, 3);
            assert!(decide_o_g(&phi, &d).unwrap().member, "{phi}");
        }
    }
}

#[test]
fn rejection_witnesses_on_flag_and_group() {
    let d = sl_datum(2).unwrap();
    let t = RatFunc::var(Var::indexed('t', 1));
    let a = RatFunc::var(Var::indexed('a', 1));
    let v = decide_o_gmodu(&g(1, 2).inv().unwrap(), &d).unwrap();
    assert!(!v.member);
    let c = v
        .certificates
        .iter()
        .find(|c| Some(c.chart) == v.failing_chart)
        .unwrap();
    assert_eq!(c.pullback, &t / &a);
    let v = decide_o_g(&g(1, 1).inv().unwrap(), &d).unwrap();
    assert!(!v.member);
    let c = v
        .certificates
        .iter()
        .find(|c| Some(c.chart) == v.failing_chart)
        .unwrap();
    assert!(!c.pullback.is_laurent_in(&[Var::indexed('t', 1)].into_iter().collect()));
    assert_eq!(pullback(&g(1, 1).inv().unwrap(), c.chart, &d).unwrap(), c.pullback);
}
