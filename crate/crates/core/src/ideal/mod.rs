//! Fractional monomial ideals over a monoid ring and exponent filters.
//!
//! A finitely generated monomial ideal is an up-set generated by finitely
//! many exponents. Intersections and inverses need not be finitely
//! generated, so they are kept as predicates ([`IdealFilter`]) and only
//! inspected through bounded windows.

mod classify;
mod closure;

pub use classify::{classify_finiteness, Certificate, FinitenessVerdict};
pub use closure::{
    colon, ideal_inverse, is_gv, is_invertible, is_trace_ideal, j_max, locally_cyclic_cover, trace,
    v_closure, w_closure, xi_closure, xi_closure_with, GvResult, TraceCatalogue, TraceCheck, WResult,
    XiResult, XiVia,
};

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use crate::monoid::{b_level, fmt_exp, is_unit_basis, Exp, ExpVec, ExponentMonoid, MonoidError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("the filter is empty: {0}")]
    EmptyFilter(String),
}

/// Scan limits: every coordinate at most `bound`, denominators dividing
/// `denominator_cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub bound: Exp,
    pub denominator_cap: i64,
}

impl Window {
    pub fn new(bound: Exp, denominator_cap: i64) -> Self {
        Window { bound, denominator_cap: denominator_cap.max(1) }
    }

    pub fn int(bound: i64) -> Self {
        Self::new(Exp::from_integer(bound), 1)
    }

    /// Smallest window containing both.
    pub fn union(&self, o: &Window) -> Window {
        Window {
            bound: self.bound.max(o.bound),
            denominator_cap: self.denominator_cap.lcm(&o.denominator_cap),
        }
    }

    /// Whether `self` is at least as large as `o`.
    pub fn covers(&self, o: &Window) -> bool {
        self.bound >= o.bound && self.denominator_cap % o.denominator_cap == 0
    }

    pub fn describe(&self) -> String {
        format!("bound {} denominator cap {}", fmt_exp(&self.bound), self.denominator_cap)
    }
}

#[derive(Debug, Clone)]
pub struct MonoidRingCtx {
    pub monoid: Arc<ExponentMonoid>,
    pub localized: bool,
}

impl MonoidRingCtx {
    pub fn new(monoid: ExponentMonoid, localized: bool) -> Self {
        MonoidRingCtx { monoid: Arc::new(monoid), localized }
    }

    pub fn dim(&self) -> usize {
        self.monoid.dim()
    }

    /// Membership, with exponents outside the group counting as non-members.
    pub fn mem(&self, v: &ExpVec) -> bool {
        self.monoid.member(v).unwrap_or(false)
    }

    pub fn divides(&self, a: &ExpVec, b: &ExpVec) -> bool {
        self.mem(&b.sub(a))
    }

    pub fn zero(&self) -> ExpVec {
        ExpVec::zero(self.dim())
    }

    fn check(&self, v: &ExpVec) -> Result<(), IdealError> {
        if v.dim() != self.dim() {
            return Err(IdealError::Precondition(format!(
                "exponent {v} does not have dimension {}",
                self.dim()
            )));
        }
        if let ExponentMonoid::RootFamily { base, .. } = &*self.monoid {
            if b_level(*base, v.denominator()).is_none() {
                return Err(MonoidError::Domain(format!("denominator of {v} is not a power of {base}")).into());
            }
        }
        Ok(())
    }

    /// Divisibility-minimal elements, canonical order, duplicates removed.
    pub fn reduce(&self, gens: &[ExpVec]) -> Vec<ExpVec> {
        let mut v: Vec<ExpVec> = gens.to_vec();
        v.sort();
        v.dedup();
        let mut out: Vec<ExpVec> = Vec::new();
        for g in v {
            if !out.iter().any(|h| self.divides(h, &g)) {
                out.push(g);
            }
        }
        out
    }

    /// Window holding every exponent of `gens`.
    pub fn window_of(&self, gens: &[ExpVec]) -> Window {
        let bound = gens.iter().map(ExpVec::max_coord).max().unwrap_or_else(Exp::zero).max(Exp::zero());
        let cap = gens.iter().fold(1, |l, g| l.lcm(&g.denominator()));
        Window::new(bound, cap)
    }

    /// Smallest window on which the minimal generators of `⋂ (e)` are
    /// provably complete, when such a bound is known.
    pub fn completeness_window(&self, exps: &[ExpVec]) -> Option<Window> {
        let top = exps.iter().cloned().reduce(|a, b| a.join(&b))?;
        let top_max = top.max_coord();
        match &*self.monoid {
            ExponentMonoid::NumericalSemigroup(s) => {
                Some(Window::new(top_max + 2 * s.conductor(), 1))
            }
            ExponentMonoid::RootFamily { base, include_unit: true, .. } => {
                let n0 = self.max_level(exps);
                let big_b = base.pow(n0);
                let c = self.monoid.level_semigroup(n0)?.conductor();
                Some(Window::new(top_max + Exp::new(2 * c, big_b), big_b))
            }
            ExponentMonoid::RootFamily { include_unit: false, .. } => Some(self.window_of(&[top])),
            ExponentMonoid::EvenDegree { .. } => {
                Some(self.window_of(&[top.add(&ExpVec::ints(&vec![1; self.dim()]))]))
            }
            ExponentMonoid::FinGenCone { dim, generators } => {
                is_unit_basis(*dim, generators).then(|| self.window_of(&[top]))
            }
        }
    }

    fn max_level(&self, exps: &[ExpVec]) -> u32 {
        match &*self.monoid {
            ExponentMonoid::RootFamily { base, .. } => {
                exps.iter().filter_map(|e| b_level(*base, e.denominator())).max().unwrap_or(0)
            }
            _ => 0,
        }
    }
}

/// Finitely generated fractional monomial ideal with reduced generators.
#[derive(Debug, Clone)]
pub struct MonomialIdeal {
    ctx: MonoidRingCtx,
    generators: Vec<ExpVec>,
}

impl MonomialIdeal {
    pub fn new(ctx: &MonoidRingCtx, gens: &[ExpVec]) -> Result<Self, IdealError> {
        if gens.is_empty() {
            return Err(IdealError::Precondition("an ideal needs at least one generator".into()));
        }
        for g in gens {
            ctx.check(g)?;
        }
        Ok(MonomialIdeal { ctx: ctx.clone(), generators: ctx.reduce(gens) })
    }

    /// The unit ideal `D`.
    pub fn unit(ctx: &MonoidRingCtx) -> Self {
        MonomialIdeal { ctx: ctx.clone(), generators: vec![ctx.zero()] }
    }

    pub fn ctx(&self) -> &MonoidRingCtx {
        &self.ctx
    }

    pub fn generators(&self) -> &[ExpVec] {
        &self.generators
    }

    pub fn contains(&self, x: &ExpVec) -> bool {
        self.generators.iter().any(|g| self.ctx.divides(g, x))
    }

    pub fn is_integral(&self) -> bool {
        self.generators.iter().all(|g| self.ctx.mem(g))
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    pub fn translate(&self, x: &ExpVec) -> MonomialIdeal {
        let g: Vec<ExpVec> = self.generators.iter().map(|g| g.add(x)).collect();
        MonomialIdeal { ctx: self.ctx.clone(), generators: self.ctx.reduce(&g) }
    }

    /// Same generating set, as a filter.
    pub fn as_filter(&self) -> IdealFilter {
        IdealFilter {
            ctx: self.ctx.clone(),
            kind: FilterKind::AnyOf(self.generators.clone()),
            provenance: Provenance::Generated(self.generators.clone()),
            exact: true,
        }
    }

    pub fn same_as(&self, o: &MonomialIdeal) -> bool {
        self.generators == o.generators
    }

    pub fn subset_of(&self, o: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| o.contains(g))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "({})", g.join(", "))
    }
}

/// How a filter tests membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterKind {
    /// `x` is a member iff some `g` divides it.
    AnyOf(Vec<ExpVec>),
    /// `x` is a member iff every `e` divides it.
    AllOf(Vec<ExpVec>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Generated(Vec<ExpVec>),
    Intersection(Vec<ExpVec>),
    Inverse(Vec<ExpVec>),
    Colon { ideal: Vec<ExpVec>, x: ExpVec },
    Product(Vec<Vec<ExpVec>>),
}

fn list(v: &[ExpVec]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Generated(g) => write!(f, "GENERATED({})", list(g)),
            Provenance::Intersection(g) => write!(f, "INTERSECTION({})", list(g)),
            Provenance::Inverse(g) => write!(f, "INVERSE(({}))", list(g)),
            Provenance::Colon { ideal, x } => write!(f, "COLON(({}), {x})", list(ideal)),
            Provenance::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|g| format!("({})", list(g))).collect();
                write!(f, "PRODUCT({})", parts.join(", "))
            }
        }
    }
}

/// Exponent filter: an up-set of the group closed under adding `M`.
#[derive(Debug, Clone)]
pub struct IdealFilter {
    pub ctx: MonoidRingCtx,
    pub kind: FilterKind,
    pub provenance: Provenance,
    /// False when the predicate was built from an incomplete window.
    pub exact: bool,
}

/// Minimal generators found in a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWindow {
    pub gens: Vec<ExpVec>,
    /// True only when a proved bound shows no other minimal generators exist.
    pub complete: bool,
    pub window: Window,
}

impl IdealFilter {
    pub fn contains(&self, x: &ExpVec) -> bool {
        match &self.kind {
            FilterKind::AnyOf(g) => g.iter().any(|g| self.ctx.divides(g, x)),
            FilterKind::AllOf(e) => e.iter().all(|e| self.ctx.divides(e, x)),
        }
    }

    /// Candidates in `window`: exponents above the filter's lower corner.
    fn candidates(&self, window: &Window) -> Vec<ExpVec> {
        let lower = match &self.kind {
            FilterKind::AllOf(e) => e.iter().cloned().reduce(|a, b| a.join(&b)),
            FilterKind::AnyOf(g) => g.iter().cloned().reduce(|a, b| a.meet(&b)),
        }
        .unwrap_or_else(|| self.ctx.zero());
        self.ctx.monoid.lattice_points(&lower, window.bound, window.denominator_cap)
    }

    /// Members of the filter in the window, canonical order.
    pub fn members_in(&self, window: &Window) -> Vec<ExpVec> {
        self.candidates(window).into_iter().filter(|x| self.contains(x)).collect()
    }

    /// Smallest window where the minimal generators are provably complete.
    pub fn completeness_window(&self) -> Option<Window> {
        match &self.kind {
            FilterKind::AnyOf(g) => Some(self.ctx.window_of(g)),
            FilterKind::AllOf(e) => self.ctx.completeness_window(e),
        }
    }

    /// Divisibility-minimal members of the filter inside `window`.
    pub fn minimal_generators_up_to(&self, window: &Window) -> GeneratorWindow {
        let proved = self.completeness_window();
        let complete = proved.is_some_and(|p| window.covers(&p));
        let gens = match (&self.kind, &*self.ctx.monoid) {
            (FilterKind::AnyOf(g), _) => {
                let r = self.ctx.reduce(g);
                let inside: Vec<ExpVec> = r.iter().filter(|x| in_window(x, window)).cloned().collect();
                let all = inside.len() == r.len();
                return GeneratorWindow { gens: inside, complete: all, window: *window };
            }
            (FilterKind::AllOf(e), ExponentMonoid::EvenDegree { dim }) => {
                even_degree_minimal(e, *dim).into_iter().filter(|x| in_window(x, window)).collect()
            }
            (FilterKind::AllOf(e), ExponentMonoid::RootFamily { include_unit: false, .. })
            | (FilterKind::AllOf(e), ExponentMonoid::FinGenCone { .. })
                if complete =>
            {
                let top = e.iter().cloned().reduce(|a, b| a.join(&b)).expect("nonempty");
                if self.contains(&top) {
                    vec![top]
                } else {
                    Vec::new()
                }
            }
            (FilterKind::AllOf(e), ExponentMonoid::RootFamily { include_unit: true, .. }) if complete => {
                // Minimal elements live at level ≤ n0; scan that grid only.
                let p = proved.expect("complete");
                let coarse = Window::new(p.bound, p.denominator_cap);
                self.scan_minimal(&coarse)
            }
            (FilterKind::AllOf(_), _) => self.scan_minimal(window),
        };
        GeneratorWindow { gens, complete, window: *window }
    }

    fn scan_minimal(&self, window: &Window) -> Vec<ExpVec> {
        let mut out: Vec<ExpVec> = Vec::new();
        for x in self.candidates(window) {
            if self.contains(&x) && !out.iter().any(|g| self.ctx.divides(g, &x)) {
                out.push(x);
            }
        }
        out
    }

    /// Minimal generators on a window enlarged to the proved completeness
    /// bound when one exists.
    pub fn minimal_generators_auto(&self, window: &Window) -> GeneratorWindow {
        let w = match self.completeness_window() {
            Some(p) => window.union(&p),
            None => *window,
        };
        self.minimal_generators_up_to(&w)
    }

    pub fn describe(&self) -> String {
        self.provenance.to_string()
    }
}

fn in_window(x: &ExpVec, w: &Window) -> bool {
    x.0.iter().all(|c| c <= &w.bound) && w.denominator_cap % x.denominator() == 0
}

/// Minimal elements of `⋂ (eᵢ)` over the even-degree monoid of dimension
/// `dim`: the join `λ` when its degree is even, else `λ + eⱼ` for each `j`.
/// Empty when the inputs lie in different parity classes.
fn even_degree_minimal(exps: &[ExpVec], dim: usize) -> Vec<ExpVec> {
    let parity = |v: &ExpVec| v.sum().to_integer().rem_euclid(2);
    if exps.iter().any(|e| !e.0.iter().all(|c| c.is_integer())) {
        return Vec::new();
    }
    let p0 = parity(&exps[0]);
    if exps.iter().any(|e| parity(e) != p0) {
        return Vec::new();
    }
    let top = exps.iter().cloned().reduce(|a, b| a.join(&b)).expect("nonempty");
    if parity(&top) == p0 {
        return vec![top];
    }
    let mut out: Vec<ExpVec> = (0..dim)
        .map(|j| {
            let mut v = top.clone();
            v.0[j] += 1;
            v
        })
        .collect();
    out.sort();
    out
}

/// `⋂ (e)` over the listed exponents.
pub fn intersect_principals(ctx: &MonoidRingCtx, exps: &[ExpVec]) -> Result<IdealFilter, IdealError> {
    if exps.is_empty() {
        return Err(IdealError::Precondition("intersection of an empty list".into()));
    }
    for e in exps {
        ctx.check(e)?;
    }
    Ok(IdealFilter {
        ctx: ctx.clone(),
        kind: FilterKind::AllOf(exps.to_vec()),
        provenance: Provenance::Intersection(exps.to_vec()),
        exact: true,
    })
}

/// Whether no exponent divides another.
pub fn pairwise_incomparable(ctx: &MonoidRingCtx, exps: &[ExpVec]) -> bool {
    exps.iter().enumerate().all(|(i, a)| {
        exps.iter().enumerate().all(|(j, b)| i == j || !ctx.divides(a, b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[i64]) -> MonoidRingCtx {
        MonoidRingCtx::new(ExponentMonoid::numerical(g).unwrap(), true)
    }

    fn ints(v: &[i64]) -> Vec<ExpVec> {
        v.iter().map(|&x| ExpVec::int(x)).collect()
    }

    #[test]
    fn intersection_two_three() {
        let ctx = ns(&[2, 3]);
        let f = intersect_principals(&ctx, &ints(&[2, 3])).unwrap();
        let w = f.minimal_generators_up_to(&Window::int(10));
        assert_eq!(w.gens, ints(&[5, 6]));
        assert!(w.complete);
        let short = f.minimal_generators_up_to(&Window::int(6));
        assert!(!short.complete);
    }

    #[test]
    fn intersection_hochster_membership() {
        let ctx = MonoidRingCtx::new(ExponentMonoid::root_family(3, 2, true).unwrap(), false);
        let f = intersect_principals(&ctx, &[ExpVec::int(1), ExpVec::ratio(2, 3)]).unwrap();
        assert!(f.contains(&ExpVec::ratio(5, 3)));
    }

    #[test]
    fn singleton_intersection_is_principal() {
        let ctx = ns(&[3, 4, 5]);
        let f = intersect_principals(&ctx, &ints(&[4])).unwrap();
        assert_eq!(f.minimal_generators_auto(&Window::int(0)).gens, ints(&[4]));
    }

    /// Window scans agree with the closed form for even degree.
    #[test]
    fn even_degree_closed_form_matches_scan() {
        let ctx = MonoidRingCtx::new(ExponentMonoid::even_degree(3).unwrap(), false);
        let cases = [
            vec![ExpVec::ints(&[1, 1, 0]), ExpVec::ints(&[1, 0, 1])],
            vec![ExpVec::ints(&[1, 1, 0]), ExpVec::ints(&[0, 0, 2])],
            vec![ExpVec::ints(&[2, 0, 0]), ExpVec::ints(&[1, 1, 0])],
        ];
        for exps in cases {
            let f = intersect_principals(&ctx, &exps).unwrap();
            let closed = f.minimal_generators_up_to(&Window::int(5)).gens;
            let scanned = f.scan_minimal(&Window::int(5));
            assert_eq!(closed, scanned, "{exps:?}");
        }
    }

    #[test]
    fn reduce_removes_multiples() {
        let ctx = ns(&[2, 3]);
        assert_eq!(ctx.reduce(&ints(&[5, 2, 4, 3])), ints(&[2, 3]));
    }

    #[test]
    fn pairwise_incomparability() {
        let ctx = ns(&[2, 3]);
        assert!(pairwise_incomparable(&ctx, &ints(&[2, 3])));
        assert!(!pairwise_incomparable(&ctx, &ints(&[2, 4])));
        let ev = MonoidRingCtx::new(ExponentMonoid::even_degree(3).unwrap(), false);
        assert!(pairwise_incomparable(&ev, &[ExpVec::ints(&[1, 1, 0]), ExpVec::ints(&[1, 0, 1])]));
    }
}
