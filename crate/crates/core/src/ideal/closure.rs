//! Inverse, colon, v, trace, GV, w and ξ on monomial ideals.
//!
//! Closures quantify over monomial ideals only. For w this loses nothing in a
//! graded ring: the monomial ideal spanned by the supports of a GV ideal is
//! again GV. For ξ the answer is a sound lower bound.

use rayon::prelude::*;

use super::{FilterKind, IdealError, IdealFilter, MonoidRingCtx, MonomialIdeal, Provenance, Window};
use crate::monoid::ExpVec;

/// `I⁻¹ = {v : v + g ∈ M for every generator g}`.
pub fn ideal_inverse(i: &MonomialIdeal) -> IdealFilter {
    let neg: Vec<ExpVec> = i.generators().iter().map(ExpVec::neg).collect();
    IdealFilter {
        ctx: i.ctx().clone(),
        kind: FilterKind::AllOf(neg),
        provenance: Provenance::Inverse(i.generators().to_vec()),
        exact: true,
    }
}

/// `(I : x) = {v : v + x ∈ I}`.
pub fn colon(i: &MonomialIdeal, x: &ExpVec) -> IdealFilter {
    let g: Vec<ExpVec> = i.generators().iter().map(|g| g.sub(x)).collect();
    IdealFilter {
        ctx: i.ctx().clone(),
        kind: FilterKind::AnyOf(g),
        provenance: Provenance::Colon { ideal: i.generators().to_vec(), x: x.clone() },
        exact: true,
    }
}

/// `I_v = (I⁻¹)⁻¹`, the intersection of the principal ideals `(−u)` over the
/// minimal generators `u` of `I⁻¹`. Equals `I_t` for finitely generated `I`.
pub fn v_closure(i: &MonomialIdeal, window: &Window) -> IdealFilter {
    let inv = ideal_inverse(i).minimal_generators_auto(window);
    let neg: Vec<ExpVec> = inv.gens.iter().map(ExpVec::neg).collect();
    IdealFilter {
        ctx: i.ctx().clone(),
        kind: FilterKind::AllOf(neg),
        provenance: Provenance::Inverse(inv.gens.clone()),
        exact: inv.complete,
    }
}

/// `Tr(I) = I·I⁻¹`, generated by the sums of generators of `I` and `I⁻¹`.
pub fn trace(i: &MonomialIdeal, window: &Window) -> IdealFilter {
    let inv = ideal_inverse(i).minimal_generators_auto(window);
    let sums: Vec<ExpVec> = i
        .generators()
        .iter()
        .flat_map(|g| inv.gens.iter().map(move |u| g.add(u)))
        .collect();
    let gens = i.ctx().reduce(&sums);
    IdealFilter {
        ctx: i.ctx().clone(),
        kind: FilterKind::AnyOf(gens),
        provenance: Provenance::Product(vec![i.generators().to_vec(), inv.gens]),
        exact: inv.complete,
    }
}

fn any_of_gens(f: &IdealFilter) -> &[ExpVec] {
    match &f.kind {
        FilterKind::AnyOf(g) => g,
        FilterKind::AllOf(_) => unreachable!("trace filters are generated"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceCheck {
    pub is_trace: bool,
    pub trace: Vec<ExpVec>,
    /// False when the inverse was read off an incomplete window.
    pub exact: bool,
}

/// `Tr(J) = J`, compared through reduced generating sets.
pub fn is_trace_ideal(j: &MonomialIdeal, window: &Window) -> TraceCheck {
    let t = trace(j, window);
    let gens = any_of_gens(&t).to_vec();
    TraceCheck { is_trace: gens == j.generators(), trace: gens, exact: t.exact }
}

/// `Tr(I) = D`.
pub fn is_invertible(i: &MonomialIdeal, window: &Window) -> bool {
    let t = trace(i, window);
    t.contains(&i.ctx().zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvResult {
    pub is_gv: bool,
    /// Least exponent of `J⁻¹` outside `M`.
    pub witness: Option<ExpVec>,
    pub inverse_generators: Vec<ExpVec>,
    pub exact: bool,
}

/// `J⁻¹ = D` for an integral monomial ideal `J`.
pub fn is_gv(j: &MonomialIdeal, window: &Window) -> Result<GvResult, IdealError> {
    if !j.is_integral() {
        return Err(IdealError::Precondition(format!("{j} is not an integral ideal")));
    }
    let inv = ideal_inverse(j).minimal_generators_auto(window);
    let witness = inv.gens.iter().find(|u| !j.ctx().mem(u)).cloned();
    Ok(GvResult { is_gv: witness.is_none(), witness, inverse_generators: inv.gens, exact: inv.complete })
}

/// The largest monomial ideal `J ⊆ D` with `x + J ⊆ I`, i.e. `(I : x) ∩ D`,
/// computed as the union of `(g − x) ∩ (0)` over the generators `g`.
/// `None` when it is zero. The flag reports whether every piece was complete.
pub fn j_max(i: &MonomialIdeal, x: &ExpVec, window: &Window) -> (Option<MonomialIdeal>, bool) {
    let ctx = i.ctx();
    let mut gens = Vec::new();
    let mut exact = true;
    for g in i.generators() {
        let f = super::intersect_principals(ctx, &[g.sub(x), ctx.zero()]).expect("valid exponents");
        let w = f.minimal_generators_auto(window);
        exact &= w.complete;
        gens.extend(w.gens);
    }
    if gens.is_empty() {
        return (None, exact);
    }
    (Some(MonomialIdeal::new(ctx, &gens).expect("nonempty")), exact)
}

#[derive(Debug, Clone)]
pub struct WResult {
    pub member: bool,
    /// A GV ideal `J` with `x + J ⊆ I`.
    pub witness: Option<MonomialIdeal>,
    pub exact: bool,
}

/// `x ∈ I_w`: some GV ideal `J` has `x + J ⊆ I`. GV ideals form an up-set,
/// so it suffices to test the largest candidate `(I : x) ∩ D`.
pub fn w_closure(i: &MonomialIdeal, x: &ExpVec, window: &Window) -> WResult {
    if i.contains(x) {
        return WResult { member: true, witness: Some(MonomialIdeal::unit(i.ctx())), exact: true };
    }
    let (j, exact) = j_max(i, x, window);
    let Some(j) = j else {
        return WResult { member: false, witness: None, exact };
    };
    let gv = is_gv(&j, window).expect("integral by construction");
    WResult {
        member: gv.is_gv,
        witness: gv.is_gv.then_some(j),
        exact: exact && gv.exact,
    }
}

#[derive(Debug, Clone)]
pub struct CatalogueEntry {
    /// Ideal whose trace was taken.
    pub source: Vec<ExpVec>,
    pub trace: MonomialIdeal,
}

/// Verified finitely generated trace ideals `Tr(K)` for every `K` generated
/// by at most `max_gens` nonzero monoid elements inside a window.
#[derive(Debug, Clone)]
pub struct TraceCatalogue {
    pub window: Window,
    pub max_gens: usize,
    pub entries: Vec<CatalogueEntry>,
    pub exact: bool,
}

impl TraceCatalogue {
    pub fn build(ctx: &MonoidRingCtx, window: &Window, max_gens: usize) -> Self {
        let pts: Vec<ExpVec> = ctx
            .monoid
            .enumerate_up_to(window.bound, window.denominator_cap)
            .into_iter()
            .filter(|v| !v.is_zero())
            .collect();
        let sources = incomparable_subsets(ctx, &pts, max_gens);
        let mut computed: Vec<(CatalogueEntry, bool)> = sources
            .par_iter()
            .map(|s| {
                let k = MonomialIdeal::new(ctx, s).expect("nonempty");
                let t = trace(&k, window);
                let tr = MonomialIdeal::new(ctx, any_of_gens(&t)).expect("traces are nonzero");
                (CatalogueEntry { source: s.clone(), trace: tr }, t.exact)
            })
            .collect();
        let exact = computed.iter().all(|(_, e)| *e);
        computed.sort_by(|a, b| a.0.trace.generators().cmp(b.0.trace.generators()));
        computed.dedup_by(|a, b| a.0.trace.generators() == b.0.trace.generators());
        TraceCatalogue {
            window: *window,
            max_gens,
            entries: computed.into_iter().map(|(e, _)| e).collect(),
            exact,
        }
    }

    /// First catalogued trace ideal contained in `j`.
    pub fn find_inside(&self, j: &MonomialIdeal) -> Option<&CatalogueEntry> {
        self.entries.iter().find(|e| e.trace.subset_of(j))
    }
}

/// Pairwise incomparable subsets of `pts` of size `1..=k`, canonical order.
pub(crate) fn incomparable_subsets(ctx: &MonoidRingCtx, pts: &[ExpVec], k: usize) -> Vec<Vec<ExpVec>> {
    fn go(
        ctx: &MonoidRingCtx,
        pts: &[ExpVec],
        start: usize,
        k: usize,
        cur: &mut Vec<ExpVec>,
        out: &mut Vec<Vec<ExpVec>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in start..pts.len() {
            let p = &pts[i];
            if cur.iter().all(|c| !ctx.divides(c, p) && !ctx.divides(p, c)) {
                cur.push(p.clone());
                go(ctx, pts, i + 1, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(ctx, pts, 0, k, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum XiVia {
    /// `x ∈ I`; witness `D`.
    Contained,
    /// A catalogued trace ideal fits inside `(I : x) ∩ D`.
    Catalogue,
    /// `(I : x) ∩ D` is GV, hence its own trace.
    Gv,
}

#[derive(Debug, Clone)]
pub struct XiResult {
    pub member: bool,
    /// A finitely generated trace ideal `J` with `x + J ⊆ I`.
    pub witness: Option<MonomialIdeal>,
    pub via: Option<XiVia>,
    /// Monomial-relative answer: a positive result is certified, a negative
    /// one is only relative to the catalogue.
    pub lower_bound_only: bool,
}

/// Monomial-relative ξ-membership against a prebuilt catalogue.
pub fn xi_closure_with(cat: &TraceCatalogue, i: &MonomialIdeal, x: &ExpVec) -> XiResult {
    let hit = |w: MonomialIdeal, via| XiResult {
        member: true,
        witness: Some(w),
        via: Some(via),
        lower_bound_only: true,
    };
    if i.contains(x) {
        return hit(MonomialIdeal::unit(i.ctx()), XiVia::Contained);
    }
    let (j, _) = j_max(i, x, &cat.window);
    let Some(j) = j else {
        return XiResult { member: false, witness: None, via: None, lower_bound_only: true };
    };
    if let Some(e) = cat.find_inside(&j) {
        return hit(e.trace.clone(), XiVia::Catalogue);
    }
    if is_gv(&j, &cat.window).map(|g| g.is_gv).unwrap_or(false) {
        return hit(j, XiVia::Gv);
    }
    XiResult { member: false, witness: None, via: None, lower_bound_only: true }
}

/// ξ-membership with a catalogue of traces of ideals on at most two
/// generators from `window`.
pub fn xi_closure(i: &MonomialIdeal, x: &ExpVec, window: &Window) -> XiResult {
    let cat = TraceCatalogue::build(i.ctx(), window, 2);
    xi_closure_with(&cat, i, x)
}

/// A nonzero monoid element `y` dividing every generator, chosen
/// divisibility-maximal and then least in canonical order.
pub fn locally_cyclic_cover(
    ctx: &MonoidRingCtx,
    gens: &[ExpVec],
    window: &Window,
) -> Result<Option<ExpVec>, IdealError> {
    if gens.is_empty() {
        return Err(IdealError::Precondition("empty generator list".into()));
    }
    if let Some(g) = gens.iter().find(|g| g.is_zero() || !ctx.mem(g)) {
        return Err(IdealError::Precondition(format!("{g} is not in the maximal ideal")));
    }
    let covers: Vec<ExpVec> = ctx
        .monoid
        .enumerate_up_to(window.bound, window.denominator_cap)
        .into_iter()
        .filter(|y| !y.is_zero() && gens.iter().all(|g| ctx.divides(y, g)))
        .collect();
    Ok(covers
        .iter()
        .find(|y| !covers.iter().any(|z| z != *y && ctx.divides(y, z)))
        .cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::intersect_principals;
    use crate::monoid::{Exp, ExponentMonoid};

    fn ns(g: &[i64]) -> MonoidRingCtx {
        MonoidRingCtx::new(ExponentMonoid::numerical(g).unwrap(), true)
    }

    fn hochster() -> MonoidRingCtx {
        MonoidRingCtx::new(ExponentMonoid::root_family(3, 2, true).unwrap(), true)
    }

    fn ints(v: &[i64]) -> Vec<ExpVec> {
        v.iter().map(|&x| ExpVec::int(x)).collect()
    }

    fn ideal(ctx: &MonoidRingCtx, v: &[i64]) -> MonomialIdeal {
        MonomialIdeal::new(ctx, &ints(v)).unwrap()
    }

    /// Brute scan of `v` with `v + g ∈ S` for every generator.
    fn inverse_oracle(ctx: &MonoidRingCtx, gens: &[i64], lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi)
            .filter(|&v| gens.iter().all(|&g| ctx.mem(&ExpVec::int(v + g))))
            .collect()
    }

    #[test]
    fn inverse_examples() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(6);
        let inv = ideal_inverse(&ideal(&ctx, &[2, 3])).minimal_generators_up_to(&w);
        assert_eq!(inv.gens, ints(&[0, 1]));
        assert!(inv.complete);
        assert_eq!(inverse_oracle(&ctx, &[2, 3], -10, 6), (0..=6).collect::<Vec<_>>());

        let inv = ideal_inverse(&ideal(&ctx, &[4, 5])).minimal_generators_auto(&w);
        assert_eq!(inv.gens, ints(&[-2, -1]));
        assert_eq!(inverse_oracle(&ctx, &[4, 5], -10, 6), (-2..=6).collect::<Vec<_>>());

        let inv = ideal_inverse(&ideal(&ctx, &[3])).minimal_generators_auto(&w);
        assert_eq!(inv.gens, ints(&[-3]));
    }

    #[test]
    fn hochster_inverse_contains_non_member() {
        let ctx = hochster();
        let j = MonomialIdeal::new(&ctx, &[ExpVec::int(1), ExpVec::ratio(2, 3)]).unwrap();
        let f = ideal_inverse(&j);
        let w = Window::new(Exp::from_integer(2), 27);
        let gens = f.minimal_generators_up_to(&w).gens;
        assert!(gens.contains(&ExpVec::ratio(1, 3)));
    }

    #[test]
    fn v_closure_examples() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(12);
        let v = v_closure(&ideal(&ctx, &[4, 5]), &w);
        assert_eq!(v.minimal_generators_up_to(&Window::int(7)).gens, ints(&[4, 5]));
        let members: Vec<ExpVec> = v.members_in(&Window::int(9));
        assert_eq!(members, ints(&[4, 5, 6, 7, 8, 9]));

        let v = v_closure(&ideal(&ctx, &[5]), &w);
        assert_eq!(v.minimal_generators_auto(&w).gens, ints(&[5]));

        let v = v_closure(&ideal(&ctx, &[2, 3]), &w);
        assert_eq!(v.minimal_generators_auto(&w).gens, ints(&[2, 3]));
    }

    #[test]
    fn trace_examples() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(12);
        let gens = |f: IdealFilter| f.minimal_generators_auto(&w).gens;
        assert_eq!(gens(trace(&ideal(&ctx, &[2, 3]), &w)), ints(&[2, 3]));
        assert_eq!(gens(trace(&ideal(&ctx, &[7]), &w)), ints(&[0]));
        assert_eq!(gens(trace(&ideal(&ctx, &[3, 4]), &w)), ints(&[2, 3]));

        assert!(is_trace_ideal(&ideal(&ctx, &[2, 3]), &w).is_trace);
        assert!(!is_trace_ideal(&ideal(&ctx, &[3, 4]), &w).is_trace);
    }

    #[test]
    fn hochster_trace_not_gv() {
        let ctx = hochster();
        let j = MonomialIdeal::new(&ctx, &[ExpVec::int(1), ExpVec::ratio(2, 3)]).unwrap();
        let w = Window::new(Exp::from_integer(2), 81);
        let t = is_trace_ideal(&j, &w);
        assert!(t.is_trace && t.exact);
        let gv = is_gv(&j, &w).unwrap();
        assert!(!gv.is_gv);
        assert_eq!(gv.witness, Some(ExpVec::ratio(1, 3)));
    }

    #[test]
    fn gv_examples() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(12);
        let r = is_gv(&ideal(&ctx, &[2, 3]), &w).unwrap();
        assert_eq!(r.witness, Some(ExpVec::int(1)));
        assert!(is_gv(&MonomialIdeal::unit(&ctx), &w).unwrap().is_gv);
        let frac = MonomialIdeal::new(&ctx, &ints(&[-1])).unwrap();
        assert!(is_gv(&frac, &w).is_err());
    }

    #[test]
    fn invertibility() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(12);
        assert!(is_invertible(&ideal(&ctx, &[6]), &w));
        assert!(!is_invertible(&ideal(&ctx, &[2, 3]), &w));
        assert!(!is_invertible(&ideal(&ctx, &[4, 5]), &w));
    }

    #[test]
    fn w_closure_examples() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(12);
        assert!(!w_closure(&ideal(&ctx, &[4, 5]), &ExpVec::int(2), &w).member);
        assert!(w_closure(&ideal(&ctx, &[4, 5]), &ExpVec::int(6), &w).member);
        let ev = MonoidRingCtx::new(ExponentMonoid::even_degree(2).unwrap(), true);
        let i = MonomialIdeal::new(&ev, &[ExpVec::ints(&[2, 0])]).unwrap();
        assert!(w_closure(&i, &ExpVec::ints(&[2, 0]), &w).member);
    }

    /// Exhaustive search for a proper GV monomial ideal in `k[X², X³]` up to bound 12.
    #[test]
    fn no_proper_gv_in_two_three() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(12);
        let pts: Vec<ExpVec> = ctx.monoid.enumerate_up_to(Exp::from_integer(12), 1)[1..].to_vec();
        for s in incomparable_subsets(&ctx, &pts, 3) {
            let j = MonomialIdeal::new(&ctx, &s).unwrap();
            assert!(!is_gv(&j, &w).unwrap().is_gv, "{j}");
        }
    }

    #[test]
    fn xi_closure_examples() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(12);
        let r = xi_closure(&ideal(&ctx, &[4, 5]), &ExpVec::int(2), &w);
        assert!(r.member);
        assert_eq!(r.witness.unwrap().generators(), &ints(&[2, 3])[..]);

        let r = xi_closure(&ideal(&ctx, &[2, 3]), &ExpVec::int(1), &w);
        assert!(r.member);
        assert_eq!(r.witness.unwrap().generators(), &ints(&[2, 3])[..]);

        let r = xi_closure(&ideal(&ctx, &[4, 5]), &ExpVec::int(9), &w);
        assert_eq!(r.via, Some(XiVia::Contained));
        assert!(r.witness.unwrap().is_unit());
    }

    #[test]
    fn j_max_is_the_colon_inside_d() {
        let ctx = ns(&[2, 3]);
        let (j, exact) = j_max(&ideal(&ctx, &[4, 5]), &ExpVec::int(2), &Window::int(12));
        assert!(exact);
        assert_eq!(j.unwrap().generators(), &ints(&[2, 3])[..]);
        let f = intersect_principals(&ctx, &ints(&[0])).unwrap();
        assert!(f.contains(&ExpVec::int(0)));
    }

    #[test]
    fn locally_cyclic_examples() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(12);
        assert_eq!(locally_cyclic_cover(&ctx, &ints(&[2, 3]), &w).unwrap(), None);
        assert_eq!(locally_cyclic_cover(&ctx, &ints(&[5, 6]), &w).unwrap(), Some(ExpVec::int(2)));
        assert_eq!(locally_cyclic_cover(&ctx, &ints(&[7]), &w).unwrap(), Some(ExpVec::int(7)));
        assert!(locally_cyclic_cover(&ctx, &ints(&[1]), &w).is_err());
    }
}
