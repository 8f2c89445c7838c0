use coordring::arith::{RatFunc, Var};
use coordring::roots::Word;
use coordring::sample;
use coordring::sl::*;

fn s(name: char) -> RatFunc {
    RatFunc::var(Var::bare(name))
}

fn rows_str(m: &GroupMatrix) -> Vec<Vec<String>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

#[test]
fn golden_sl4_charts() {
    let w0 = Word::new(vec![2, 1, 3, 2, 1, 3]);
    let m = chart_u(&w0, &symbols('a', 6), 4).unwrap();
    assert_eq!(
        rows_str(&m),
        vec![
            vec!["1", "a2 + a5", "a2*a4", "a2*a4*a6"],
            vec!["0", "1", "a1 + a4", "a1*a3 + a1*a6 + a4*a6"],
            vec!["0", "0", "1", "a3 + a6"],
            vec!["0", "0", "0", "1"],
        ]
    );
    let w1 = Word::new(vec![1, 3, 2, 1, 3, 2]);
    let m = chart_u(&w1, &symbols('b', 6), 4).unwrap();
    assert_eq!(
        rows_str(&m),
        vec![
            vec!["1", "b1 + b4", "b1*b3 + b1*b6 + b4*b6", "b1*b3*b5"],
            vec!["0", "1", "b3 + b6", "b3*b5"],
            vec!["0", "0", "1", "b2 + b5"],
            vec!["0", "0", "0", "1"],
        ]
    );
}

#[test]
fn pinning_relations() {
    let (a, b) = (s('a'), s('b'));
    for n in 2..=5 {
        let t = TorusPoint::symbolic(n);
        let tm = t.matrix();
        let tinv = t.inverse().matrix();
        for i in 1..n {
            assert_eq!(
                &x(i, &a, n).unwrap() * &x(i, &b, n).unwrap(),
                x(i, &(&a + &b), n).unwrap()
            );
            assert_eq!(
                &y(i, &a, n).unwrap() * &y(i, &b, n).unwrap(),
                y(i, &(&a + &b), n).unwrap()
            );
            // alpha_i(t) = t_{i-1}^{-1} t_i^2 t_{i+1}^{-1}
            let d = |k: usize| tm.at(k, k).clone();
            let alpha = &d(i) * &d(i + 1).inv().unwrap();
            let lhs = &(&tm * &x(i, &a, n).unwrap()) * &tinv;
            assert_eq!(lhs, x(i, &(&alpha * &a), n).unwrap());
            // s.dot_i = x(1) y(-1) x(1) = y(-1) x(1) y(-1)
            let one = RatFunc::one();
            let m1 = RatFunc::int(-1);
            let alt = &(&y(i, &m1, n).unwrap() * &x(i, &one, n).unwrap()) * &y(i, &m1, n).unwrap();
            assert_eq!(generator(GeneratorKind::SDot, i, None, n).unwrap(), alt);
            let sd = generator(GeneratorKind::SDot, i, None, n).unwrap();
            let sdd = generator(GeneratorKind::SDdot, i, None, n).unwrap();
            assert!((&sd * &sdd).is_identity());
        }
    }
}

#[test]
fn a2_braid_identity() {
    let (a, b, c) = (s('a'), s('b'), s('c'));
    let sum = &a + &c;
    for (i, j) in [(1, 2), (2, 1), (2, 3), (3, 2)] {
        let n = 4;
        let lhs = chart_u(&Word::new(vec![i, j, i]), &[a.clone(), b.clone(), c.clone()], n).unwrap();
        let rhs = chart_u(
            &Word::new(vec![j, i, j]),
            &[&(&b * &c) / &sum, sum.clone(), &(&a * &b) / &sum],
            n,
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn lifts_do_not_depend_on_reduced_word() {
    for n in [3, 4] {
        let d = sl_datum(n).unwrap();
        for w in d.all_elements(1000).unwrap() {
            let words = d.reduced_words(&w);
            for style in [LiftStyle::Dot, LiftStyle::Ddot] {
                let first = lift(&words[0], style, n).unwrap();
                for wd in &words[1..] {
                    assert_eq!(lift(wd, style, n).unwrap(), first, "{wd}");
                }
            }
        }
    }
}

#[test]
fn iota_is_an_involution() {
    let mut rng = sample::rng(sample::DEFAULT_SEED);
    for n in 2..=4 {
        let d = sl_datum(n).unwrap();
        let jj = d.distinguished_word(0);
        let p: Vec<_> = (0..jj.len()).map(|_| sample::nonzero_rational(&mut rng, 9)).collect();
        let q: Vec<_> = (0..jj.len()).map(|_| sample::nonzero_rational(&mut rng, 9)).collect();
        let t = TorusPoint::new((1..n).map(|_| sample::nonzero_rational(&mut rng, 9)).collect()).unwrap();
        let g = chart_g(&jj, &jj, &p, &t, &q, Variant::PlusMinus, n).unwrap();
        assert_eq!(iota(&iota(&g)), g);
    }
    // symbolic in SL3
    let d = sl_datum(3).unwrap();
    let jj = d.distinguished_word(0);
    let g = chart_g(
        &jj,
        &jj,
        &symbols('a', 3),
        &TorusPoint::symbolic(3),
        &symbols('b', 3),
        Variant::PlusMinus,
        3,
    )
    .unwrap();
    assert_eq!(iota(&iota(&g)), g);
}

#[test]
fn chart_g_variants_are_related_by_iota() {
    for n in [2, 3] {
        let d = sl_datum(n).unwrap();
        for e in 0..2 {
            for e2 in 0..2 {
                let (w, w2) = (d.distinguished_word(e), d.distinguished_word(e2));
                let nu = d.nu();
                let t = TorusPoint::symbolic(n);
                let plus = chart_g(&w, &w2, &symbols('a', nu), &t, &symbols('b', nu), Variant::PlusMinus, n).unwrap();
                let minus = chart_g(&w, &w2, &symbols('a', nu), &t, &symbols('b', nu), Variant::MinusPlus, n).unwrap();
                assert_eq!(iota(&plus), minus);
            }
        }
    }
}

#[test]
fn chart_examples_sl2() {
    let (a, b) = (s('a'), s('b'));
    let t = TorusPoint::symbolic(2);
    let tv = RatFunc::var(Var::indexed('t', 1));
    let ti = tv.inv().unwrap();
    let w = Word::new(vec![1]);
    let plus = chart_gmodu(&w, std::slice::from_ref(&a), &t, Sign::Plus, 2).unwrap();
    assert_eq!(
        plus.rows(),
        vec![vec![tv.clone(), &a * &ti], vec![RatFunc::zero(), ti.clone()]]
    );
    let minus = chart_gmodu(&w, std::slice::from_ref(&a), &t, Sign::Minus, 2).unwrap();
    assert_eq!(
        minus.rows(),
        vec![vec![RatFunc::zero(), tv.clone()], vec![-&ti, &a * &tv]]
    );
    let g = chart_g(
        &w,
        &w,
        std::slice::from_ref(&a),
        &t,
        std::slice::from_ref(&b),
        Variant::PlusMinus,
        2,
    )
    .unwrap();
    assert_eq!(
        g.rows(),
        vec![vec![&tv + &(&(&a * &b) * &ti), &a * &ti], vec![&b * &ti, ti.clone()]]
    );
    assert!(g.det().is_one());
    let g = chart_g(
        &w,
        &w,
        &[RatFunc::zero()],
        &t,
        &[RatFunc::zero()],
        Variant::MinusPlus,
        2,
    )
    .unwrap();
    assert_eq!(g, t.inverse().matrix());
}

#[test]
fn twist_is_an_involution_sl3() {
    let u = chart_u(
        &Word::new(vec![1, 2, 1]),
        &[RatFunc::int(1), RatFunc::int(2), RatFunc::int(3)],
        3,
    )
    .unwrap();
    let au = twist(&u).unwrap();
    assert!(au.is_upper_unitriangular());
    assert_eq!(twist(&au).unwrap(), u);
    let sym = chart_u(&Word::new(vec![1, 2, 1]), &symbols('a', 3), 3).unwrap();
    assert_eq!(twist(&twist(&sym).unwrap()).unwrap(), sym);
}

#[test]
fn minor_defining_properties() {
    let mut rng = sample::rng(3);
    for n in [3, 4] {
        let d = sl_datum(n).unwrap();
        let jj = d.distinguished_word(0);
        let nu = jj.len();
        let g = chart_g(
            &jj,
            &jj,
            &symbols('a', nu),
            &TorusPoint::new((1..n).map(|_| sample::nonzero_rational(&mut rng, 5)).collect()).unwrap(),
            &symbols('b', nu),
            Variant::PlusMinus,
            n,
        )
        .unwrap();
        let lower = chart_u_minus(
            &jj,
            &(0..nu)
                .map(|_| sample::nonzero_rational(&mut rng, 5))
                .collect::<Vec<_>>(),
            n,
        )
        .unwrap();
        let upper = chart_u(
            &jj,
            &(0..nu)
                .map(|_| sample::nonzero_rational(&mut rng, 5))
                .collect::<Vec<_>>(),
            n,
        )
        .unwrap();
        let t = TorusPoint::symbolic(n);
        for i in 1..n {
            let spec = MinorSpec::new(i, Word::empty());
            let base = gen_minor(&spec, &g).unwrap();
            let left = gen_minor(&spec, &(&(&lower * &t.matrix()) * &g)).unwrap();
            assert_eq!(left, &t.coords()[i - 1] * &base);
            assert_eq!(gen_minor(&spec, &(&g * &upper)).unwrap(), base);
            assert!(gen_minor(&spec, &GroupMatrix::identity(n)).unwrap().is_one());
        }
    }
}

#[test]
fn generalized_minor_ignores_witness() {
    for n in [3, 4] {
        let d = sl_datum(n).unwrap();
        let jj = d.distinguished_word(0);
        let u = chart_u(&jj, &symbols('a', jj.len()), n).unwrap();
        for w in d.all_elements(1000).unwrap() {
            for i in 1..n {
                let gamma = w.apply(&d.omega(i));
                let minimal = MinorSpec::for_weight(&d, &gamma).unwrap();
                let other = MinorSpec::new(i, w.word().clone());
                assert_eq!(other.gamma(&d), gamma);
                assert_eq!(
                    gen_minor(&other, &u).unwrap(),
                    gen_minor(&minimal, &u).unwrap(),
                    "{gamma}"
                );
            }
        }
    }
}

#[test]
fn sl4_corner_minor_matches_inverse_formula() {
    let d = sl_datum(4).unwrap();
    let jj = d.distinguished_word(0);
    let u = chart_u(&jj, &symbols('a', 6), 4).unwrap();
    let w0 = d.longest_element();
    let top = gen_minor(&MinorSpec::for_weight(&d, &w0.apply(&d.omega(1))).unwrap(), &u).unwrap();
    assert!(top == *u.at(1, 4) || top == -u.at(1, 4));
}
