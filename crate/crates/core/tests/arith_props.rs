use bidlab_core::arith::{exact_divide, int, lcm, multivar_gcd, Polynomial, VarContext};
use proptest::prelude::*;

fn ctx() -> VarContext {
    VarContext::polynomial(&["x", "y", "z"])
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0i32..3, 0i32..3, 0i32..3), -4i64..=4), 1..5).prop_map(|terms| {
        Polynomial::from_terms(&ctx(), terms.into_iter().map(|((a, b, c), k)| (vec![a, b, c], int(k)))).unwrap()
    })
}

fn nonzero() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn divides(a: &Polynomial, b: &Polynomial) -> bool {
    exact_divide(b, a).unwrap().is_some()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_divide_recovers_factor(p in poly(), q in nonzero()) {
        let prod = &p * &q;
        let r = exact_divide(&prod, &q).unwrap().expect("q divides p*q");
        prop_assert_eq!(&r * &q, prod);
        prop_assert_eq!(r, p);
    }

    #[test]
    fn parity_split_is_linear(p in poly(), q in poly()) {
        let (pe, po) = p.parity_split();
        let (qe, qo) = q.parity_split();
        let (se, so) = (&p + &q).parity_split();
        prop_assert_eq!(se, &pe + &qe);
        prop_assert_eq!(so, &po + &qo);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn gcd_symmetric_and_divides(p in nonzero(), q in nonzero()) {
        let g = multivar_gcd(&p, &q).unwrap();
        prop_assert_eq!(&g, &multivar_gcd(&q, &p).unwrap());
        prop_assert!(divides(&g, &p));
        prop_assert!(divides(&g, &q));
    }

    #[test]
    fn gcd_fold_is_associative(a in nonzero(), b in nonzero(), c in nonzero()) {
        let left = multivar_gcd(&multivar_gcd(&a, &b).unwrap(), &c).unwrap();
        let right = multivar_gcd(&a, &multivar_gcd(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn gcd_finds_planted_factor(f in nonzero(), p in nonzero(), q in nonzero()) {
        let g = multivar_gcd(&(&f * &p), &(&f * &q)).unwrap();
        prop_assert!(divides(&f, &g));
    }

    #[test]
    fn lcm_is_common_multiple(p in nonzero(), q in nonzero()) {
        let l = lcm(&p, &q).unwrap();
        prop_assert!(divides(&p, &l));
        prop_assert!(divides(&q, &l));
    }
}
