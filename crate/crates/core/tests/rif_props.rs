use bidlab_core::monoid::{Exp, ExpVec};
use bidlab_core::rif::{rif_member, sbid_witness_family, FFamily, RifError, RifMonomial, RifRing};
use proptest::prelude::*;

fn squarefree_ring() -> impl Strategy<Value = RifRing> {
    prop_oneof![Just(vec![1]), Just(vec![2]), Just(vec![3, 4])]
        .prop_map(|ideal| RifRing::new(&[1], &ideal, FFamily::Squarefree).unwrap())
}

fn sq_monomial() -> impl Strategy<Value = RifMonomial> {
    (0i64..=3, prop::collection::vec(0i64..=3, 3)).prop_map(|(k, a)| RifMonomial::new(k, ExpVec::ints(&a)))
}

fn rp_monomial() -> impl Strategy<Value = RifMonomial> {
    (0i64..=3, 0i64..=24, prop_oneof![Just(1i64), Just(2), Just(3), Just(4), Just(6), Just(12)])
        .prop_map(|(k, n, d)| RifMonomial::new(k, ExpVec(vec![Exp::new(n, d)])))
}

/// Raise the power of `a` until the monomial lies in the ring.
fn lift(d: &RifRing, m: &RifMonomial) -> RifMonomial {
    let mut m = m.clone();
    while !rif_member(d, &m) {
        m.k += 1;
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn squarefree_membership_is_multiplicative(d in squarefree_ring(), a in sq_monomial(), b in sq_monomial()) {
        let (a, b) = (lift(&d, &a), lift(&d, &b));
        prop_assert!(rif_member(&d, &a.mul(&b)));
    }

    #[test]
    fn rational_membership_is_multiplicative(e in 1i64..=3, a in rp_monomial(), b in rp_monomial()) {
        let d = RifRing::over_naturals(e, FFamily::RationalPowers).unwrap();
        let (a, b) = (lift(&d, &a), lift(&d, &b));
        prop_assert!(rif_member(&d, &a.mul(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    /// Every produced member has all its quotients in the ring; only
    /// precondition failures on the inputs are acceptable.
    #[test]
    fn witness_families_verify(d in squarefree_ring(), a in sq_monomial(), b in sq_monomial()) {
        let (a, b) = (lift(&d, &a), lift(&d, &b));
        match sbid_witness_family(&d, &[a.clone(), b.clone()], 4) {
            Ok(w) => {
                prop_assert_eq!(w.elements.len(), 4);
                for e in &w.elements {
                    prop_assert!(rif_member(&d, e));
                    prop_assert!(rif_member(&d, &e.div(&a)) && rif_member(&d, &e.div(&b)));
                }
            }
            Err(RifError::Precondition(_)) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }
}
