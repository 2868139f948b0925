use pqn_core::random::{polynomial, trial_rng};
use pqn_core::ratpoly::{rat, Polynomial};
use proptest::prelude::*;

fn triple(seed: u64, n: usize) -> (Polynomial, Polynomial, Polynomial) {
    let mut rng = trial_rng(seed, 0);
    (
        polynomial(&mut rng, n, 3),
        polynomial(&mut rng, n, 3),
        polynomial(&mut rng, n, 3),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(seed in any::<u64>(), n in 1usize..=4) {
        let (p, q, r) = triple(seed, n);
        let zero = Polynomial::zero(n);
        let one = Polynomial::one(n);
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &zero, p.clone());
        prop_assert_eq!(&p * &one, p.clone());
        prop_assert!((&p - &p).is_zero());
        prop_assert!((&p * &zero).is_zero());
    }

    #[test]
    fn leibniz_rule(seed in any::<u64>(), n in 1usize..=4, i in 0usize..4) {
        let i = i % n;
        let (p, q, _) = triple(seed, n);
        let lhs = (&p * &q).diff(i);
        let rhs = &(&p.diff(i) * &q) + &(&p * &q.diff(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_partials_commute(seed in any::<u64>(), n in 1usize..=4, i in 0usize..4, j in 0usize..4) {
        let (i, j) = (i % n, j % n);
        let (p, _, _) = triple(seed, n);
        prop_assert_eq!(p.diff(i).diff(j), p.diff(j).diff(i));
    }

    #[test]
    fn format_parse_round_trip(seed in any::<u64>(), n in 1usize..=4, a in -9i64..=9, b in 1i64..=9) {
        let (p, q, _) = triple(seed, n);
        let p = &p.scale(&rat(a, b)) + &q;
        let text = p.to_string();
        let back = Polynomial::parse(&text, n).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn evaluation_is_a_ring_map(seed in any::<u64>(), n in 1usize..=4, pt in prop::collection::vec(-5i64..=5, 4)) {
        let (p, q, _) = triple(seed, n);
        let point: Vec<_> = pt[..n].iter().map(|&v| rat(v, 1)).collect();
        let (vp, vq) = (p.eval(&point).unwrap(), q.eval(&point).unwrap());
        prop_assert_eq!((&p * &q).eval(&point).unwrap(), &vp * &vq);
        prop_assert_eq!((&p + &q).eval(&point).unwrap(), &vp + &vq);
    }
}

#[test]
fn parser_examples() {
    let p = Polynomial::parse("3/2*x1^2", 2).unwrap();
    assert_eq!(p.to_string(), "3/2*x1^2");
    let q = Polynomial::parse("(x1 + x2)^2 - 2*x1*x2", 2).unwrap();
    assert_eq!(q, Polynomial::parse("x1^2 + x2^2", 2).unwrap());
    assert!(Polynomial::parse("x3", 2).is_err());
    assert!(Polynomial::parse("1/0", 2).is_err());
    assert!(Polynomial::parse("x1 +", 2).is_err());
}
