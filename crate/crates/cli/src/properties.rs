//! Seeded property battery over the monomial closure engine.

use bidlab_core::ideal::{
    ideal_inverse, intersect_principals, trace, v_closure, w_closure, xi_closure_with, FilterKind, MonoidRingCtx,
    MonomialIdeal, TraceCatalogue, Window,
};
use bidlab_core::monoid::{ExpVec, ExponentMonoid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub struct Ring {
    pub ctx: MonoidRingCtx,
    pub window: Window,
    low: Vec<ExpVec>,
    pub catalogue: TraceCatalogue,
}

impl Ring {
    pub fn new(monoid: ExponentMonoid, bound: i64) -> Self {
        let ctx = MonoidRingCtx::new(monoid, true);
        let window = Window::int(bound);
        let low: Vec<ExpVec> = ctx
            .monoid
            .enumerate_up_to(window.bound, 1)
            .into_iter()
            .filter(|v| !v.is_zero())
            .take(8)
            .collect();
        let catalogue = TraceCatalogue::build(&ctx, &window, 2);
        Ring { ctx, window, low, catalogue }
    }

    fn random_ideal(&self, rng: &mut ChaCha8Rng) -> MonomialIdeal {
        let k = rng.gen_range(1..=3);
        let gens: Vec<ExpVec> = (0..k).map(|_| self.low[rng.gen_range(0..self.low.len())].clone()).collect();
        MonomialIdeal::new(&self.ctx, &gens).expect("nonempty")
    }

    /// `0` or one of the low members.
    fn random_point(&self, rng: &mut ChaCha8Rng) -> ExpVec {
        let i = rng.gen_range(0..=self.low.len());
        if i == 0 {
            self.ctx.zero()
        } else {
            self.low[i - 1].clone()
        }
    }

    fn window_points(&self) -> Vec<ExpVec> {
        self.ctx.monoid.enumerate_up_to(self.window.bound, 1)
    }
}

/// `{2,3}`, `{3,4,5}`, `ℕ` and the even-degree monoid in two variables.
pub fn standard_rings() -> Vec<Ring> {
    vec![
        Ring::new(ExponentMonoid::numerical(&[2, 3]).expect("valid"), 10),
        Ring::new(ExponentMonoid::numerical(&[3, 4, 5]).expect("valid"), 12),
        Ring::new(ExponentMonoid::naturals(), 8),
        Ring::new(ExponentMonoid::even_degree(2).expect("valid"), 4),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub samples: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

type Check = fn(&Ring, &mut ChaCha8Rng) -> Option<String>;

fn xi_contains_ideal(r: &Ring, rng: &mut ChaCha8Rng) -> Option<String> {
    let i = r.random_ideal(rng);
    i.generators()
        .iter()
        .find(|g| !xi_closure_with(&r.catalogue, &i, g).member)
        .map(|g| format!("{g} in {i} but not in its closure"))
}

fn xi_translation(r: &Ring, rng: &mut ChaCha8Rng) -> Option<String> {
    let i = r.random_ideal(rng);
    let (x, y) = (r.random_point(rng), r.random_point(rng));
    let a = xi_closure_with(&r.catalogue, &i, &x).member;
    let b = xi_closure_with(&r.catalogue, &i.translate(&y), &x.add(&y)).member;
    (a != b).then(|| format!("{i}, x = {x}, shift {y}: {a} vs {b}"))
}

fn xi_monotone(r: &Ring, rng: &mut ChaCha8Rng) -> Option<String> {
    let i = r.random_ideal(rng);
    let mut gens = i.generators().to_vec();
    gens.push(r.low[rng.gen_range(0..r.low.len())].clone());
    let bigger = MonomialIdeal::new(&r.ctx, &gens).expect("nonempty");
    let x = r.random_point(rng);
    (xi_closure_with(&r.catalogue, &i, &x).member && !xi_closure_with(&r.catalogue, &bigger, &x).member)
        .then(|| format!("{x} in closure of {i} but not of {bigger}"))
}

fn w_implies_xi(r: &Ring, rng: &mut ChaCha8Rng) -> Option<String> {
    let i = r.random_ideal(rng);
    let x = r.random_point(rng);
    (w_closure(&i, &x, &r.window).member && !xi_closure_with(&r.catalogue, &i, &x).member)
        .then(|| format!("{x} in the w-closure of {i} only"))
}

fn inverse_identity(r: &Ring, rng: &mut ChaCha8Rng) -> Option<String> {
    let j = r.random_ideal(rng);
    let a = j.generators().iter().skip(1).fold(j.generators()[0].clone(), |s, g| s.add(g));
    let shifted: Vec<ExpVec> = j.generators().iter().map(|g| a.sub(g)).collect();
    let meet = intersect_principals(&r.ctx, &shifted).expect("valid exponents");
    let inv = ideal_inverse(&j);
    r.ctx
        .monoid
        .lattice_points(&a.neg(), r.window.bound, 1)
        .into_iter()
        .find(|v| inv.contains(v) != meet.contains(&v.add(&a)))
        .map(|v| format!("inverse of {j} differs at {v}"))
}

fn v_axioms(r: &Ring, rng: &mut ChaCha8Rng) -> Option<String> {
    let i = r.random_ideal(rng);
    let iv = v_closure(&i, &r.window);
    if let Some(g) = i.generators().iter().find(|g| !iv.contains(g)) {
        return Some(format!("{g} of {i} missing from its v-closure"));
    }
    let mut gens = i.generators().to_vec();
    gens.push(r.low[rng.gen_range(0..r.low.len())].clone());
    let bigger = v_closure(&MonomialIdeal::new(&r.ctx, &gens).expect("nonempty"), &r.window);
    let pts = r.window_points();
    if let Some(v) = pts.iter().find(|v| iv.contains(v) && !bigger.contains(v)) {
        return Some(format!("v-closure of {i} not monotone at {v}"));
    }
    let w = iv.minimal_generators_auto(&r.window);
    if !w.complete {
        return None;
    }
    let ivv = v_closure(&MonomialIdeal::new(&r.ctx, &w.gens).expect("nonempty"), &r.window);
    pts.iter()
        .find(|v| iv.contains(v) != ivv.contains(v))
        .map(|v| format!("v-closure of {i} not idempotent at {v}"))
}

fn trace_idempotent(r: &Ring, rng: &mut ChaCha8Rng) -> Option<String> {
    let i = r.random_ideal(rng);
    let gens = |f: &bidlab_core::ideal::IdealFilter| match &f.kind {
        FilterKind::AnyOf(g) => g.clone(),
        FilterKind::AllOf(_) => unreachable!("traces are generated"),
    };
    let t = gens(&trace(&i, &r.window));
    let tt = gens(&trace(&MonomialIdeal::new(&r.ctx, &t).expect("nonzero"), &r.window));
    (t != tt).then(|| format!("trace of {i} is not a fixed point"))
}

fn xi_equals_w(r: &Ring, rng: &mut ChaCha8Rng) -> Option<String> {
    if !r.ctx.monoid.is_normal() {
        return None;
    }
    let i = r.random_ideal(rng);
    let x = r.random_point(rng);
    let w = w_closure(&i, &x, &r.window).member;
    let xi = xi_closure_with(&r.catalogue, &i, &x).member;
    (w != xi).then(|| format!("{i} at {x}: w {w}, xi {xi}"))
}

pub const CHECKS: [(&str, Check); 8] = [
    ("xi-extensive", xi_contains_ideal),
    ("xi-translation", xi_translation),
    ("xi-monotone", xi_monotone),
    ("w-implies-xi", w_implies_xi),
    ("inverse-identity", inverse_identity),
    ("v-closure-axioms", v_axioms),
    ("trace-idempotent", trace_idempotent),
    ("xi-equals-w-normal", xi_equals_w),
];

/// Run every property `samples` times per ring. Each ring and property pair
/// draws from its own stream derived from `seed`, so the result does not
/// depend on scheduling.
pub fn run_properties(rings: &[Ring], seed: u64, samples: usize) -> Vec<PropertyOutcome> {
    CHECKS
        .par_iter()
        .enumerate()
        .map(|(pi, (name, check))| {
            let mut failures = Vec::new();
            for (ri, ring) in rings.iter().enumerate() {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((pi as u64) << 32) ^ ri as u64);
                for _ in 0..samples {
                    if let Some(f) = check(ring, &mut rng) {
                        failures.push(format!("{}: {f}", ring.ctx.monoid.describe()));
                    }
                }
            }
            PropertyOutcome {
                name: (*name).to_string(),
                samples: samples * rings.len(),
                passed: failures.is_empty(),
                failures: failures.into_iter().take(5).collect(),
            }
        })
        .collect()
}
