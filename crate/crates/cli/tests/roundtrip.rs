use octoroots::{Octonion, Rational, Scalar};
use octoroots_cli::literal::{format_octonion, parse_octonion};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => Just(0i64).prop_map(Rational::from_i64),
        5 => (-1000i64..=1000, 1i64..=50).prop_map(|(n, d)| Rational::from_ratio(n, d)),
        1 => (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rational::from_ratio(n, d)),
    ]
}

fn float() -> impl Strategy<Value = f64> {
    prop_oneof![
        1 => Just(0.0),
        1 => Just(1.0),
        1 => Just(-1.0),
        6 => -1e6f64..1e6,
        2 => any::<f64>().prop_filter("finite", |x| x.is_finite()),
    ]
}

proptest! {
    #[test]
    fn exact_literals_round_trip(c in proptest::array::uniform8(rational())) {
        let x = Octonion::from_coords(c);
        let text = format_octonion(&x);
        prop_assert_eq!(parse_octonion::<Rational>(&text).unwrap(), x);
    }

    #[test]
    fn float_literals_round_trip(c in proptest::array::uniform8(float())) {
        let x = Octonion::from_coords(c);
        let text = format_octonion(&x);
        let y = parse_octonion::<f64>(&text).unwrap();
        for (a, b) in x.coords().iter().zip(y.coords()) {
            prop_assert_eq!(a.to_bits() == b.to_bits() || (*a == 0.0 && *b == 0.0), true, "{} -> {}", text, b);
        }
    }
}
