use coordring::arith::{RatFunc, Var};
use coordring_cli::{parse_expression, Universe};
use proptest::prelude::*;

const N: usize = 5;

fn var() -> impl Strategy<Value = Var> {
    prop_oneof![
        (1u16..N as u16)
            .prop_flat_map(|i| (Just(i), i + 1..=N as u16))
            .prop_map(|(i, j)| Var::entry('u', i, j)),
        (1u16..=N as u16, 1u16..=N as u16).prop_map(|(i, j)| Var::entry('g', i, j)),
        (1u16..=10).prop_map(|k| Var::indexed('a', k)),
        (1u16..=10).prop_map(|k| Var::indexed('b', k)),
        (1u16..N as u16).prop_map(|k| Var::indexed('t', k)),
    ]
}

fn poly() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-40i64..=40, prop::collection::vec((var(), 1i32..=3), 0..3)), 1..4).prop_map(|terms| {
        terms.into_iter().fold(RatFunc::zero(), |acc, (c, vs)| {
            let m = vs
                .iter()
                .fold(RatFunc::int(c), |m, (v, e)| &m * &RatFunc::var(*v).pow(*e).unwrap());
            &acc + &m
        })
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly(), 1i64..=7).prop_filter_map("nonzero denominator", |(n, d, k)| {
        let q = &n / &(&d + &RatFunc::int(k));
        (!(&d + &RatFunc::int(k)).is_zero()).then_some(q)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_print_round_trip(f in ratfunc()) {
        let printed = f.to_string();
        let back = parse_expression(&printed, &Universe::new(N)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn ast_print_round_trip(f in poly(), g in poly()) {
        let text = format!("({f}) * ({g}) - -({g})^2");
        let u = Universe::new(N);
        let ast = coordring_cli::expr::parse_ast(&text, &u).unwrap();
        let again = coordring_cli::expr::parse_ast(&ast.to_string(), &u).unwrap();
        prop_assert_eq!(&again, &ast);
        prop_assert_eq!(ast.eval().unwrap(), &(&f * &g) + &g.pow(2).unwrap());
    }
}
