use bidlab_core::arith::{int, Polynomial};
use bidlab_core::construction_a::{context, in_d, in_q, X, Y};
use proptest::prelude::*;

fn mono(i: i32, j: i32) -> Polynomial {
    let mut e = vec![0; 3];
    e[X] = i;
    e[Y] = j;
    Polynomial::monomial(&context(), e, int(1)).unwrap()
}

fn d_monomial() -> impl Strategy<Value = (i32, i32)> {
    (-4i32..=4, 0i32..=5).prop_filter("in D", |&(i, j)| in_d(&mono(i, j), false).unwrap())
}

fn q_monomial() -> impl Strategy<Value = (i32, i32)> {
    (-4i32..=4, 0i32..=5).prop_filter("in Q", |&(i, j)| in_q(&mono(i, j)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn d_is_multiplicative(a in d_monomial(), b in d_monomial()) {
        prop_assert!(in_d(&mono(a.0 + b.0, a.1 + b.1), false).unwrap());
    }

    #[test]
    fn q_absorbs_d(q in q_monomial(), d in d_monomial()) {
        prop_assert!(in_q(&mono(q.0 + d.0, q.1 + d.1)).unwrap());
    }

    #[test]
    fn q_lies_in_every_power_of_x(q in q_monomial(), n in 0i32..=10) {
        prop_assert!(in_d(&mono(q.0 - n, q.1), false).unwrap());
    }
}
