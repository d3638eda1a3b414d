//! BID/SBID witness search and the characterization probes.

use rayon::prelude::*;
use serde::Serialize;

use crate::ideal::{
    classify_finiteness, intersect_principals, is_gv, pairwise_incomparable, w_closure, xi_closure_with,
    FinitenessVerdict, IdealError, MonoidRingCtx, MonomialIdeal, TraceCatalogue, Window,
};
use crate::monoid::ExpVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ViolationKind {
    /// Finitely generated but not principal.
    Bid,
    /// Principal; only the strong property forbids it.
    Sbid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub tuple: Vec<ExpVec>,
    pub kind: ViolationKind,
    pub verdict: FinitenessVerdict<ExpVec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub ring: String,
    pub tuple_size: usize,
    pub bound: String,
    pub tuples_examined: usize,
    pub violations: Vec<Violation>,
    pub inconclusive: Vec<Vec<ExpVec>>,
    pub not_fg: usize,
}

impl WitnessReport {
    pub fn bid_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| v.kind == ViolationKind::Bid)
    }

    pub fn has_bid_violation(&self) -> bool {
        self.bid_violations().next().is_some()
    }

    pub fn has_sbid_violation(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// Pairwise incomparable `k`-subsets of `pts`, ordered by largest element
/// and then lexicographically.
pub fn incomparable_tuples(ctx: &MonoidRingCtx, pts: &[ExpVec], k: usize) -> Vec<Vec<ExpVec>> {
    fn go(
        ctx: &MonoidRingCtx,
        pts: &[ExpVec],
        start: usize,
        k: usize,
        cur: &mut Vec<ExpVec>,
        out: &mut Vec<Vec<ExpVec>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pts.len() {
            if cur.iter().all(|c| !ctx.divides(c, &pts[i]) && !ctx.divides(&pts[i], c)) {
                cur.push(pts[i].clone());
                go(ctx, pts, i + 1, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(ctx, pts, 0, k, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.last().cmp(&b.last()).then_with(|| a.cmp(b)));
    out
}

/// Classify the intersection of a tuple on a window enlarged to the proved
/// completeness bound.
pub fn classify_tuple(ctx: &MonoidRingCtx, tuple: &[ExpVec], window: &Window) -> Result<FinitenessVerdict<ExpVec>, IdealError> {
    let f = intersect_principals(ctx, tuple)?;
    let w = match f.completeness_window() {
        Some(p) => window.union(&p),
        None => *window,
    };
    classify_finiteness(&f, &w)
}

/// Classify the intersection of every pairwise incomparable tuple of nonzero
/// monoid elements in the window.
pub fn witness_search(
    ctx: &MonoidRingCtx,
    tuple_size: usize,
    window: &Window,
) -> Result<WitnessReport, IdealError> {
    if tuple_size < 2 {
        return Err(IdealError::Precondition("tuple size must be at least 2".into()));
    }
    let pts: Vec<ExpVec> = ctx
        .monoid
        .enumerate_up_to(window.bound, window.denominator_cap)
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    let tuples = incomparable_tuples(ctx, &pts, tuple_size);
    let verdicts: Vec<FinitenessVerdict<ExpVec>> = tuples
        .par_iter()
        .map(|t| classify_tuple(ctx, t, window))
        .collect::<Result<_, _>>()?;
    let mut violations = Vec::new();
    let mut inconclusive = Vec::new();
    let mut not_fg = 0;
    for (t, v) in tuples.iter().zip(verdicts) {
        debug_assert!(pairwise_incomparable(ctx, t));
        match v {
            FinitenessVerdict::FgNonPrincipal { .. } => {
                violations.push(Violation { tuple: t.clone(), kind: ViolationKind::Bid, verdict: v })
            }
            FinitenessVerdict::Principal { .. } => {
                violations.push(Violation { tuple: t.clone(), kind: ViolationKind::Sbid, verdict: v })
            }
            FinitenessVerdict::NotFg { .. } => not_fg += 1,
            FinitenessVerdict::Inconclusive { .. } => inconclusive.push(t.clone()),
        }
    }
    Ok(WitnessReport {
        ring: ctx.monoid.describe(),
        tuple_size,
        bound: window.describe(),
        tuples_examined: tuples.len(),
        violations,
        inconclusive,
        not_fg,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateRecord {
    pub ideal: Vec<ExpVec>,
    /// Exponent of `J⁻¹` outside `M`.
    pub witness: ExpVec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TLocalOutcome {
    /// No proper monomial GV ideal in the window.
    NoneFound { bound: String, candidates: Vec<CandidateRecord> },
    Found { ideal: Vec<ExpVec> },
}

impl TLocalOutcome {
    pub fn none_found(&self) -> bool {
        matches!(self, TLocalOutcome::NoneFound { .. })
    }
}

/// Search for a proper GV monomial ideal among ideals on one or two
/// generators and the window's maximal ideal. GV ideals form an up-set, so
/// the maximal ideal alone decides the monomial question.
pub fn t_local_probe(ctx: &MonoidRingCtx, window: &Window) -> Result<TLocalOutcome, IdealError> {
    if !ctx.localized {
        return Err(IdealError::Precondition("t-locality needs a localized ring".into()));
    }
    let pts: Vec<ExpVec> = ctx
        .monoid
        .enumerate_up_to(window.bound, window.denominator_cap)
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    if pts.is_empty() {
        return Ok(TLocalOutcome::NoneFound { bound: window.describe(), candidates: Vec::new() });
    }
    let mut candidates: Vec<Vec<ExpVec>> = (1..=2).flat_map(|k| incomparable_tuples(ctx, &pts, k)).collect();
    candidates.push(ctx.reduce(&pts));
    let results: Vec<(Vec<ExpVec>, Option<ExpVec>)> = candidates
        .par_iter()
        .map(|c| {
            let j = MonomialIdeal::new(ctx, c)?;
            Ok((j.generators().to_vec(), is_gv(&j, window)?.witness))
        })
        .collect::<Result<_, IdealError>>()?;
    let mut records = Vec::new();
    for (ideal, w) in results {
        match w {
            None => return Ok(TLocalOutcome::Found { ideal }),
            Some(witness) => records.push(CandidateRecord { ideal, witness }),
        }
    }
    Ok(TLocalOutcome::NoneFound { bound: window.describe(), candidates: records })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum XiWOutcome {
    Pass { bound: String, pairs_checked: usize },
    Counterexample { ideal: Vec<ExpVec>, x: ExpVec, xi_witness: Vec<ExpVec> },
}

impl XiWOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, XiWOutcome::Pass { .. })
    }
}

/// Boundary exponents `g − p` outside `I`, for generators `g` and `p` among
/// the atoms of `M` in the window or `0`.
pub fn boundary_exponents(i: &MonomialIdeal, atoms: &[ExpVec]) -> Vec<ExpVec> {
    let zero = i.ctx().zero();
    let mut xs: Vec<ExpVec> = i
        .generators()
        .iter()
        .flat_map(|g| atoms.iter().chain(std::iter::once(&zero)).map(move |p| g.sub(p)))
        .filter(|x| !i.contains(x))
        .collect();
    xs.sort();
    xs.dedup();
    xs
}

/// Compare ξ- and w-membership on ideals with one or two generators and
/// their boundary exponents; report the first pair where they differ.
pub fn xi_equals_w_probe(
    ctx: &MonoidRingCtx,
    sample_count: usize,
    window: &Window,
) -> Result<XiWOutcome, IdealError> {
    let cat = TraceCatalogue::build(ctx, window, 2);
    let pts: Vec<ExpVec> = ctx
        .monoid
        .enumerate_up_to(window.bound, window.denominator_cap)
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    let atoms = ctx.reduce(&pts);
    let mut ideals: Vec<Vec<ExpVec>> = (1..=2).flat_map(|k| incomparable_tuples(ctx, &pts, k)).collect();
    ideals.sort_by(|a, b| a.last().cmp(&b.last()).then_with(|| a.cmp(b)));
    ideals.truncate(sample_count);
    let mut pairs = 0;
    for gens in ideals {
        let i = MonomialIdeal::new(ctx, &gens)?;
        for x in boundary_exponents(&i, &atoms) {
            pairs += 1;
            let xi = xi_closure_with(&cat, &i, &x);
            if xi.member && !w_closure(&i, &x, window).member {
                return Ok(XiWOutcome::Counterexample {
                    ideal: gens,
                    x,
                    xi_witness: xi.witness.map(|w| w.generators().to_vec()).unwrap_or_default(),
                });
            }
        }
    }
    Ok(XiWOutcome::Pass { bound: window.describe(), pairs_checked: pairs })
}

/// Joint outcome of the three probes for one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyRecord {
    pub ring: String,
    pub sbid_violation: bool,
    pub bid_violation: bool,
    pub t_local_none_found: Option<bool>,
    pub xi_equals_w: bool,
    /// `(no SBID violation ∧ t-local) ⟹ ξ = w` and `ξ ≠ w ⟹ SBID violation`.
    pub consistent: bool,
}

pub fn consistency_chain(
    ctx: &MonoidRingCtx,
    window: &Window,
    sample_count: usize,
) -> Result<ConsistencyRecord, IdealError> {
    let report = witness_search(ctx, 2, window)?;
    let t_local = if ctx.localized { Some(t_local_probe(ctx, window)?.none_found()) } else { None };
    let xi_w = xi_equals_w_probe(ctx, sample_count, window)?.passed();
    let sbid = report.has_sbid_violation();
    let forward = !(!sbid && t_local.unwrap_or(false)) || xi_w;
    let backward = xi_w || sbid;
    Ok(ConsistencyRecord {
        ring: ctx.monoid.describe(),
        sbid_violation: sbid,
        bid_violation: report.has_bid_violation(),
        t_local_none_found: t_local,
        xi_equals_w: xi_w,
        consistent: forward && backward,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::ExponentMonoid;

    fn ns(g: &[i64]) -> MonoidRingCtx {
        MonoidRingCtx::new(ExponentMonoid::numerical(g).unwrap(), true)
    }

    #[test]
    fn two_three_is_not_bid() {
        let ctx = ns(&[2, 3]);
        let r = witness_search(&ctx, 2, &Window::int(8)).unwrap();
        let first = r.bid_violations().next().unwrap();
        assert_eq!(first.tuple, vec![ExpVec::int(2), ExpVec::int(3)]);
        assert_eq!(
            first.verdict,
            FinitenessVerdict::FgNonPrincipal { generators: vec![ExpVec::int(5), ExpVec::int(6)] }
        );
    }

    #[test]
    fn naturals_have_no_incomparable_tuples() {
        let ctx = MonoidRingCtx::new(ExponentMonoid::naturals(), true);
        let r = witness_search(&ctx, 2, &Window::int(8)).unwrap();
        assert_eq!(r.tuples_examined, 0);
        assert!(!r.has_sbid_violation());
    }

    #[test]
    fn even_degree_pairs_are_principal_or_not_fg() {
        let ctx = MonoidRingCtx::new(ExponentMonoid::even_degree(3).unwrap(), false);
        let r = witness_search(&ctx, 2, &Window::int(2)).unwrap();
        assert!(r.tuples_examined > 0);
        assert!(!r.has_bid_violation());
        assert!(r.inconclusive.is_empty());
        assert!(r.not_fg > 0);
    }

    /// Stored verdicts reproduce byte-for-byte.
    #[test]
    fn violations_revalidate() {
        let ctx = ns(&[3, 4, 5]);
        let w = Window::int(9);
        let r = witness_search(&ctx, 2, &w).unwrap();
        for v in &r.violations {
            let again = classify_tuple(&ctx, &v.tuple, &w).unwrap();
            assert_eq!(serde_json::to_string(&again).unwrap(), serde_json::to_string(&v.verdict).unwrap());
        }
    }

    #[test]
    fn t_local_examples() {
        for gens in [vec![2, 3], vec![1], vec![3, 4, 5]] {
            let out = t_local_probe(&ns(&gens), &Window::int(12)).unwrap();
            assert!(out.none_found(), "{gens:?}");
        }
        if let TLocalOutcome::NoneFound { candidates, .. } = t_local_probe(&ns(&[3, 4, 5]), &Window::int(12)).unwrap() {
            assert!(!candidates.is_empty());
        }
        let unlocalized = MonoidRingCtx::new(ExponentMonoid::naturals(), false);
        assert!(t_local_probe(&unlocalized, &Window::int(4)).is_err());
    }

    #[test]
    fn xi_w_probe_examples() {
        let w = Window::int(12);
        assert!(!xi_equals_w_probe(&ns(&[2, 3]), 50, &w).unwrap().passed());
        assert!(xi_equals_w_probe(&ns(&[1]), 50, &w).unwrap().passed());
        let ev = MonoidRingCtx::new(ExponentMonoid::even_degree(2).unwrap(), true);
        assert!(xi_equals_w_probe(&ev, 50, &Window::int(6)).unwrap().passed());
    }

    #[test]
    fn four_five_at_two_separates_xi_and_w() {
        let ctx = ns(&[2, 3]);
        let w = Window::int(12);
        let cat = TraceCatalogue::build(&ctx, &w, 2);
        let i = MonomialIdeal::new(&ctx, &[ExpVec::int(4), ExpVec::int(5)]).unwrap();
        assert!(xi_closure_with(&cat, &i, &ExpVec::int(2)).member);
        assert!(!w_closure(&i, &ExpVec::int(2), &w).member);
    }

    #[test]
    fn chain_is_consistent() {
        for ctx in [ns(&[2, 3]), ns(&[1]), ns(&[3, 4, 5])] {
            let rec = consistency_chain(&ctx, &Window::int(12), 40).unwrap();
            assert!(rec.consistent, "{rec:?}");
        }
    }
}
