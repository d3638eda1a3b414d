use bidlab_core::arith::{exact_divide, int, linalg, Monomial, Polynomial, Rational, VarContext};
use bidlab_core::ideal::FinitenessVerdict;
use bidlab_core::krull::{
    bounded_intersection_oracle, classify_even_intersection, companion, is_even, lcm_all, monomials_of_degree,
    oracle_agrees, EvenElement, KrullError,
};
use proptest::prelude::*;

fn ctx(n: usize) -> VarContext {
    let names: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    VarContext::polynomial(&names)
}

/// Homogeneous polynomial of degree `d` in four variables with small coefficients.
fn homogeneous(d: u32) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_of_degree(4, d);
    let n = monos.len();
    prop::collection::vec((0..n, -2i64..=2), 1..3).prop_filter_map("nonzero", move |terms| {
        let p = Polynomial::from_terms(&ctx(4), terms.into_iter().map(|(i, c)| (monos[i].0.clone(), int(c)))).unwrap();
        (!p.is_zero()).then_some(p)
    })
}

/// `X1 + r(X2, X3)` with `r` of mixed parity: linear in `X1`, hence irreducible.
fn irreducible_mixed() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0i32..3, 0i32..3), -3i64..=3), 1..4).prop_filter_map("mixed parity", |terms| {
        let c = ctx(3);
        let r = Polynomial::from_terms(&c, terms.into_iter().filter(|((a, b), _)| a + b <= 2).map(|((a, b), k)| (vec![0, a, b], int(k))))
            .unwrap();
        let h = &Polynomial::var(&c, 0) + &r;
        let (p, d) = h.parity_split();
        (!p.is_zero() && !d.is_zero()).then_some(h)
    })
}

fn from_coords(c: &VarContext, basis: &[Monomial], coords: &[Rational]) -> Polynomial {
    Polynomial::from_terms(c, basis.iter().zip(coords).map(|(m, k)| (m.0.clone(), k.clone()))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn companion_is_the_unique_even_cofactor(h in irreducible_mixed()) {
        let c = h.ctx().clone();
        let hc = companion(&h).unwrap();
        prop_assert!(is_even(&(&h * &hc)));
        let d = h.total_degree().unwrap() as u32;
        let basis: Vec<Monomial> = (0..=d).flat_map(|k| monomials_of_degree(3, k)).collect();
        let one = Rational::from_integer(1.into());
        let prods: Vec<Polynomial> = basis.iter().map(|m| h.mul_monomial(m, &one)).collect();
        let mut odd: Vec<Monomial> = prods
            .iter()
            .flat_map(|q| q.parity_split().1.terms().map(|(m, _)| m.clone()).collect::<Vec<_>>())
            .collect();
        odd.sort();
        odd.dedup();
        let system: Vec<linalg::Row> = odd.iter().map(|m| prods.iter().map(|q| q.coefficient(&m.0)).collect()).collect();
        let ns = linalg::nullspace(&system, basis.len());
        prop_assert_eq!(ns.len(), 1);
        prop_assert_eq!(from_coords(&c, &basis, &ns[0]).primitive_normalized(), hc.primitive_normalized());
    }

    #[test]
    fn classifier_matches_oracle(f1 in homogeneous(2), f2 in homogeneous(2)) {
        let f = [EvenElement::new(f1).unwrap(), EvenElement::new(f2).unwrap()];
        let v = match classify_even_intersection(&f) {
            Ok(v) => v,
            Err(KrullError::MixedParity(_) | KrullError::Precondition(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let lambda = lcm_all(&f).unwrap();
        for e in &f {
            prop_assert!(exact_divide(&lambda, e.poly()).unwrap().is_some());
        }
        let top = lambda.total_degree().unwrap() as u32 + 1;
        let pieces = bounded_intersection_oracle(&f, top.max(2)).unwrap();
        let a = oracle_agrees(&v, &pieces);
        prop_assert!(a.agrees, "{:?}: {}", v, a.detail);
        if let FinitenessVerdict::NotFg { certificate } = &v {
            prop_assert_eq!(certificate.instances.len(), 3);
        }
    }
}
