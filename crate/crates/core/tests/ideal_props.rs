use std::sync::OnceLock;

use bidlab_core::ideal::{
    classify_finiteness, ideal_inverse, intersect_principals, trace, v_closure, w_closure, xi_closure_with,
    FinitenessVerdict, FilterKind, MonoidRingCtx, MonomialIdeal, TraceCatalogue, Window,
};
use bidlab_core::monoid::{ExpVec, ExponentMonoid};
use proptest::prelude::*;

struct Ring {
    ctx: MonoidRingCtx,
    window: Window,
    pts: Vec<ExpVec>,
    catalogue: TraceCatalogue,
}

fn ring(monoid: ExponentMonoid, bound: i64) -> Ring {
    let ctx = MonoidRingCtx::new(monoid, true);
    let window = Window::int(bound);
    let pts: Vec<ExpVec> = ctx
        .monoid
        .enumerate_up_to(window.bound, window.denominator_cap)
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    let catalogue = TraceCatalogue::build(&ctx, &window, 2);
    Ring { ctx, window, pts, catalogue }
}

fn rings() -> &'static [Ring] {
    static R: OnceLock<Vec<Ring>> = OnceLock::new();
    R.get_or_init(|| {
        vec![
            ring(ExponentMonoid::numerical(&[2, 3]).unwrap(), 10),
            ring(ExponentMonoid::numerical(&[3, 4, 5]).unwrap(), 12),
            ring(ExponentMonoid::numerical(&[3, 5, 7]).unwrap(), 12),
            ring(ExponentMonoid::naturals(), 8),
            ring(ExponentMonoid::even_degree(2).unwrap(), 4),
        ]
    })
}

/// A few small generators drawn from the window's lower part.
fn ideal(r: &Ring, picks: &[usize]) -> MonomialIdeal {
    let low: Vec<&ExpVec> = r.pts.iter().take(8).collect();
    let gens: Vec<ExpVec> = picks.iter().map(|&i| low[i % low.len()].clone()).collect();
    MonomialIdeal::new(&r.ctx, &gens).unwrap()
}

fn small_point(r: &Ring, i: usize) -> ExpVec {
    let mut with_zero = vec![r.ctx.zero()];
    with_zero.extend(r.pts.iter().take(8).cloned());
    with_zero[i % with_zero.len()].clone()
}

fn picks() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn xi_contains_ideal(which in 0usize..5, p in picks()) {
        let r = &rings()[which];
        let i = ideal(r, &p);
        for g in i.generators() {
            prop_assert!(xi_closure_with(&r.catalogue, &i, g).member);
        }
    }

    #[test]
    fn xi_commutes_with_translation(which in 0usize..5, p in picks(), xi in 0usize..64, yi in 0usize..64) {
        let r = &rings()[which];
        let i = ideal(r, &p);
        let (x, y) = (small_point(r, xi), small_point(r, yi));
        let a = xi_closure_with(&r.catalogue, &i, &x).member;
        let b = xi_closure_with(&r.catalogue, &i.translate(&y), &x.add(&y)).member;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn xi_is_monotone(which in 0usize..5, p in picks(), extra in 0usize..64, xi in 0usize..64) {
        let r = &rings()[which];
        let i = ideal(r, &p);
        let mut gens = i.generators().to_vec();
        gens.push(small_point(r, extra + 1));
        let bigger = MonomialIdeal::new(&r.ctx, &gens).unwrap();
        let x = small_point(r, xi);
        if xi_closure_with(&r.catalogue, &i, &x).member {
            prop_assert!(xi_closure_with(&r.catalogue, &bigger, &x).member);
        }
    }

    #[test]
    fn w_membership_implies_xi(which in 0usize..5, p in picks(), xi in 0usize..64) {
        let r = &rings()[which];
        let i = ideal(r, &p);
        let x = small_point(r, xi);
        if w_closure(&i, &x, &r.window).member {
            prop_assert!(xi_closure_with(&r.catalogue, &i, &x).member);
        }
    }

    /// `J⁻¹ = −a + ⋂ (a − aᵢ)` with `a = Σ aᵢ`.
    #[test]
    fn inverse_is_shifted_intersection(which in 0usize..5, p in picks()) {
        let r = &rings()[which];
        let j = ideal(r, &p);
        let a = j.generators().iter().skip(1).fold(j.generators()[0].clone(), |s, g| s.add(g));
        let shifted: Vec<ExpVec> = j.generators().iter().map(|g| a.sub(g)).collect();
        let meet = intersect_principals(&r.ctx, &shifted).unwrap();
        let inv = ideal_inverse(&j);
        let lower = a.neg();
        for v in r.ctx.monoid.lattice_points(&lower, r.window.bound, 1) {
            prop_assert_eq!(inv.contains(&v), meet.contains(&v.add(&a)), "{}", v);
        }
    }

    #[test]
    fn v_is_a_closure(which in 0usize..5, p in picks(), extra in 0usize..64) {
        let r = &rings()[which];
        let i = ideal(r, &p);
        let iv = v_closure(&i, &r.window);
        for g in i.generators() {
            prop_assert!(iv.contains(g));
        }
        let mut gens = i.generators().to_vec();
        gens.push(small_point(r, extra + 1));
        let bigger = v_closure(&MonomialIdeal::new(&r.ctx, &gens).unwrap(), &r.window);
        let pts = r.ctx.monoid.enumerate_up_to(r.window.bound, 1);
        for v in &pts {
            if iv.contains(v) {
                prop_assert!(bigger.contains(v));
            }
        }
        let w = iv.minimal_generators_auto(&r.window);
        prop_assume!(w.complete);
        let ivv = v_closure(&MonomialIdeal::new(&r.ctx, &w.gens).unwrap(), &r.window);
        for v in &pts {
            prop_assert_eq!(iv.contains(v), ivv.contains(v));
        }
    }

    #[test]
    fn trace_is_idempotent(which in 0usize..5, p in picks()) {
        let r = &rings()[which];
        let i = ideal(r, &p);
        let t = trace(&i, &r.window);
        let FilterKind::AnyOf(gens) = &t.kind else { unreachable!() };
        let t_ideal = MonomialIdeal::new(&r.ctx, gens).unwrap();
        let tt = trace(&t_ideal, &r.window);
        let FilterKind::AnyOf(gens2) = &tt.kind else { unreachable!() };
        prop_assert_eq!(gens, gens2);
    }

    #[test]
    fn principal_only_with_one_complete_generator(which in 0usize..5, p in picks()) {
        let r = &rings()[which];
        let gens: Vec<ExpVec> = p.iter().map(|&i| small_point(r, i + 1)).collect();
        let f = intersect_principals(&r.ctx, &gens).unwrap();
        let v = classify_finiteness(&f, &r.window).unwrap();
        if let FinitenessVerdict::Principal { generator } = v {
            let w = f.minimal_generators_up_to(&r.window);
            prop_assert!(w.complete);
            prop_assert_eq!(w.gens, vec![generator]);
        }
    }
}

/// ξ agrees with w on integrally closed monoids.
#[test]
fn xi_equals_w_on_normal_monoids() {
    let cone = ExponentMonoid::fin_gen_cone(2, vec![ExpVec::ints(&[1, 0]), ExpVec::ints(&[0, 1])]).unwrap();
    let normal = [ring(ExponentMonoid::naturals(), 8), ring(ExponentMonoid::even_degree(2).unwrap(), 4), ring(cone, 4)];
    for r in &normal {
        assert!(r.ctx.monoid.is_normal());
        let low: Vec<ExpVec> = r.pts.iter().take(6).cloned().collect();
        for a in 0..low.len() {
            for b in a..low.len() {
                let i = MonomialIdeal::new(&r.ctx, &[low[a].clone(), low[b].clone()]).unwrap();
                for x in std::iter::once(r.ctx.zero()).chain(low.iter().cloned()) {
                    let w = w_closure(&i, &x, &r.window).member;
                    let xi = xi_closure_with(&r.catalogue, &i, &x).member;
                    assert_eq!(w, xi, "{} at {x} in {}", i, r.ctx.monoid.describe());
                }
            }
        }
    }
}
