//! The rings `R(I, F) = R[I·F]_𝔐` over a base `R` with monomial valuation
//! data: `ℕ` for `k[a]_(a)`, or a numerical semigroup.
//!
//! A monomial `aᵏ·x^α` belongs to `R[I·F]` when `α` is a sum of `s` family
//! elements and `aᵏ ∈ Iˢ`. Localization at `𝔐` only adds units and is
//! invisible at monomial level.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::monoid::{fmt_exp, Exp, ExpVec, MonoidError, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RifError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("witness family check failed: {0}")]
    TheoremViolation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FFamily {
    /// Nonconstant squarefree monomials in countably many variables.
    Squarefree,
    /// `x^q` with `q ∈ ℚ ∩ (0, 1)`.
    RationalPowers,
    /// `xⁿ` with `n ≥ 1`.
    PowersOfX,
}

impl FFamily {
    pub fn contains(&self, alpha: &ExpVec) -> bool {
        if alpha.0.iter().any(Signed::is_negative) || alpha.is_zero() {
            return false;
        }
        match self {
            FFamily::Squarefree => alpha.0.iter().all(|c| c.is_zero() || c.is_one()),
            FFamily::RationalPowers => alpha.dim() == 1 && alpha.0[0] < Exp::one(),
            FFamily::PowersOfX => alpha.dim() == 1 && alpha.0[0].is_integer(),
        }
    }

    /// Smallest number of family summands of `α ≠ 0`, if any.
    pub fn min_summands(&self, alpha: &ExpVec) -> Option<i64> {
        if alpha.0.iter().any(Signed::is_negative) || alpha.is_zero() {
            return None;
        }
        match self {
            FFamily::Squarefree => {
                alpha.0.iter().all(Exp::is_integer).then(|| alpha.max_coord().to_integer())
            }
            FFamily::RationalPowers => (alpha.dim() == 1).then(|| alpha.0[0].floor().to_integer() + 1),
            FFamily::PowersOfX => (alpha.dim() == 1 && alpha.0[0].is_integer()).then_some(1),
        }
    }

    pub fn is_single_variable(&self) -> bool {
        !matches!(self, FFamily::Squarefree)
    }
}

/// `aᵏ·x^α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RifMonomial {
    pub k: i64,
    pub alpha: ExpVec,
}

impl RifMonomial {
    pub fn new(k: i64, alpha: ExpVec) -> Self {
        RifMonomial { k, alpha }
    }

    pub fn mul(&self, o: &RifMonomial) -> RifMonomial {
        let (a, b) = padded(&self.alpha, &o.alpha);
        RifMonomial { k: self.k + o.k, alpha: a.add(&b) }
    }

    pub fn div(&self, o: &RifMonomial) -> RifMonomial {
        let (a, b) = padded(&self.alpha, &o.alpha);
        RifMonomial { k: self.k - o.k, alpha: a.sub(&b) }
    }

    pub fn pow(&self, n: i64) -> RifMonomial {
        RifMonomial { k: self.k * n, alpha: self.alpha.scale(n) }
    }
}

impl fmt::Display for RifMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.k {
            0 => {}
            1 => parts.push("a".to_string()),
            k => parts.push(format!("a^{k}")),
        }
        let single = self.alpha.dim() == 1;
        for (i, c) in self.alpha.0.iter().enumerate() {
            let name = if single { "x".to_string() } else { format!("x{}", i + 1) };
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(name);
            } else if c.is_integer() {
                parts.push(format!("{name}^{c}"));
            } else {
                parts.push(format!("{name}^({})", fmt_exp(c)));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

fn padded(a: &ExpVec, b: &ExpVec) -> (ExpVec, ExpVec) {
    let n = a.dim().max(b.dim());
    let pad = |v: &ExpVec| {
        let mut c = v.0.clone();
        c.resize(n, Exp::zero());
        ExpVec(c)
    };
    (pad(a), pad(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RifRing {
    pub base: NumericalSemigroup,
    /// Generators of the monomial ideal `I` of the base.
    pub ideal: Vec<i64>,
    pub family: FFamily,
}

impl RifRing {
    /// Base `k[a]_(a)` with `I = (aᵉ)`.
    pub fn over_naturals(e: i64, family: FFamily) -> Result<Self, RifError> {
        Self::new(&[1], &[e], family)
    }

    pub fn new(base_gens: &[i64], ideal: &[i64], family: FFamily) -> Result<Self, RifError> {
        let base = NumericalSemigroup::new(base_gens)?;
        if ideal.is_empty() {
            return Err(RifError::Precondition("empty ideal".into()));
        }
        for &g in ideal {
            if g <= 0 || !base.contains(g) {
                return Err(RifError::Precondition(format!("{g} is not a nonunit of the base")));
            }
        }
        let mut gens: Vec<i64> = ideal.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let reduced: Vec<i64> = gens
            .iter()
            .copied()
            .filter(|&g| !gens.iter().any(|&h| h < g && base.contains(g - h)))
            .collect();
        Ok(RifRing { base, ideal: reduced, family })
    }

    pub fn in_ideal(&self, k: i64) -> bool {
        self.ideal.iter().any(|&g| k >= g && self.base.contains(k - g))
    }

    /// `aᵏ ∈ Iˢ`, via sums of `s` generators.
    pub fn in_ideal_power(&self, k: i64, s: i64) -> bool {
        if s == 0 {
            return k >= 0 && self.base.contains(k);
        }
        let mut sums: BTreeSet<i64> = BTreeSet::from([0]);
        for _ in 0..s {
            sums = sums
                .iter()
                .flat_map(|a| self.ideal.iter().map(move |g| a + g))
                .filter(|&v| v <= k)
                .collect();
            if sums.is_empty() {
                return false;
            }
        }
        sums.iter().any(|&v| self.base.contains(k - v))
    }

    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.base.generators().iter().map(ToString::to_string).collect();
        let ideal: Vec<String> = self.ideal.iter().map(|g| format!("a^{g}")).collect();
        format!("R(I, F) over <{}>, I = ({}), F = {:?}", gens.join(", "), ideal.join(", "), self.family)
    }
}

/// Membership in `R(I, F)` by closed form.
pub fn rif_member(d: &RifRing, m: &RifMonomial) -> bool {
    if m.k < 0 || !d.base.contains(m.k) {
        return false;
    }
    if m.alpha.is_zero() {
        return true;
    }
    match d.family.min_summands(&m.alpha) {
        Some(s) => d.in_ideal_power(m.k, s),
        None => false,
    }
}

/// Membership of `m` in the ambient ring `T = R[F]`.
pub fn in_ambient(d: &RifRing, m: &RifMonomial) -> bool {
    m.k >= 0 && d.base.contains(m.k) && (m.alpha.is_zero() || d.family.min_summands(&m.alpha).is_some())
}

/// Can `α` be written as exactly `s` family elements? Exhaustive search.
pub fn decomposes(family: FFamily, alpha: &ExpVec, s: i64) -> bool {
    if s <= 0 {
        return s == 0 && alpha.is_zero();
    }
    if alpha.0.iter().any(Signed::is_negative) || alpha.is_zero() {
        return false;
    }
    match family {
        FFamily::Squarefree => {
            if !alpha.0.iter().all(Exp::is_integer) {
                return false;
            }
            let support: Vec<usize> = (0..alpha.dim()).filter(|&i| !alpha.0[i].is_zero()).collect();
            // Nonempty subsets of the support as the first summand.
            (1u32..(1 << support.len())).any(|mask| {
                let mut rest = alpha.clone();
                for (b, &i) in support.iter().enumerate() {
                    if mask & (1 << b) != 0 {
                        rest.0[i] -= Exp::one();
                    }
                }
                decomposes(family, &rest, s - 1)
            })
        }
        FFamily::RationalPowers => {
            if alpha.dim() != 1 {
                return false;
            }
            let q = alpha.0[0];
            let den = q.denom() * s * 2;
            let target = (q * den).to_integer();
            // Reachable numerators with j summands from {1, …, den − 1}.
            let mut reach: BTreeSet<i64> = BTreeSet::from([0]);
            for _ in 0..s {
                reach = reach
                    .iter()
                    .flat_map(|&r| (1..den).map(move |c| r + c))
                    .filter(|&v| v <= target)
                    .collect();
            }
            reach.contains(&target)
        }
        FFamily::PowersOfX => {
            alpha.dim() == 1 && alpha.0[0].is_integer() && (1..=alpha.0[0].to_integer()).contains(&s)
        }
    }
}

/// `aᵏ ∈ Iˢ` from the `s`-fold sumset of the ideal's elements up to `k`.
pub fn in_ideal_power_brute(d: &RifRing, k: i64, s: i64) -> bool {
    if s == 0 {
        return k >= 0 && d.base.contains(k);
    }
    let elems: Vec<i64> = (0..=k).filter(|&v| d.in_ideal(v)).collect();
    let mut sums: BTreeSet<i64> = BTreeSet::from([0]);
    for _ in 0..s {
        sums = sums.iter().flat_map(|a| elems.iter().map(move |e| a + e)).filter(|&v| v <= k).collect();
    }
    sums.contains(&k)
}

/// Membership by searching every summand count and decomposition.
pub fn rif_member_brute(d: &RifRing, m: &RifMonomial) -> bool {
    if m.k < 0 || !d.base.contains(m.k) {
        return false;
    }
    if m.alpha.is_zero() {
        return true;
    }
    let min_gen = d.ideal[0];
    (1..=m.k / min_gen).any(|s| decomposes(d.family, &m.alpha, s) && in_ideal_power_brute(d, m.k, s))
}

/// Squarefree grid `k ≤ 3`, `|α| ≤ 4` over three variables: points where the
/// closed form and the exhaustive search disagree, and the grid size.
pub fn squarefree_grid_mismatches(d: &RifRing) -> (Vec<RifMonomial>, usize) {
    let mut bad = Vec::new();
    let mut n = 0;
    for k in 0..=3 {
        for a in 0..=4 {
            for b in 0..=4 - a {
                for c in 0..=4 - a - b {
                    let m = RifMonomial::new(k, ExpVec::ints(&[a, b, c]));
                    n += 1;
                    if rif_member(d, &m) != rif_member_brute(d, &m) {
                        bad.push(m);
                    }
                }
            }
        }
    }
    (bad, n)
}

/// Rational-powers grid `k ≤ 6`, `α = n/den ≤ 3` with `den ≤ max_den`.
pub fn rational_grid_mismatches(d: &RifRing, max_den: i64) -> (Vec<RifMonomial>, usize) {
    let mut bad = Vec::new();
    let mut n = 0;
    for k in 0..=6 {
        for den in 1..=max_den {
            for num in 0..=3 * den {
                let m = RifMonomial::new(k, q(num, den));
                n += 1;
                if rif_member(d, &m) != rif_member_brute(d, &m) {
                    bad.push(m);
                }
            }
        }
    }
    (bad, n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub g: Vec<ExpVec>,
    pub products_checked: usize,
    pub fullness_samples: usize,
    pub violation: Option<String>,
    pub passed: bool,
}

/// Divisors of `α` sampled for the fullness check.
fn family_divisors(family: FFamily, alpha: &ExpVec) -> Vec<ExpVec> {
    match family {
        FFamily::Squarefree => {
            let support: Vec<usize> = (0..alpha.dim()).filter(|&i| !alpha.0[i].is_zero()).collect();
            (1u32..(1 << support.len()))
                .map(|mask| {
                    let mut v = ExpVec::zero(alpha.dim());
                    for (b, &i) in support.iter().enumerate() {
                        if mask & (1 << b) != 0 {
                            v.0[i] = alpha.0[i];
                        }
                    }
                    v
                })
                .collect()
        }
        FFamily::RationalPowers => (1..=4).map(|j| ExpVec::scalar(alpha.0[0] * Exp::new(j, 5))).collect(),
        FFamily::PowersOfX => {
            (1..=alpha.0[0].to_integer()).map(ExpVec::int).collect()
        }
    }
}

/// Family elements in a shortest decomposition of `α`: the layers
/// `{i : αᵢ ≥ j}` for squarefree monomials, equal parts `α/m` for rational
/// powers.
pub fn family_parts(family: FFamily, alpha: &ExpVec) -> Option<Vec<ExpVec>> {
    let m = family.min_summands(alpha)?;
    Some(match family {
        FFamily::Squarefree => (1..=m)
            .map(|j| ExpVec(alpha.0.iter().map(|c| if *c >= Exp::from_integer(j) { Exp::one() } else { Exp::zero() }).collect()))
            .collect(),
        FFamily::RationalPowers => vec![ExpVec::scalar(alpha.0[0] / Exp::from_integer(m))],
        FFamily::PowersOfX => vec![alpha.clone()],
    })
}

/// Build `g_size` elements `g` with `h·g ∈ F` for every `h ∈ H`, then check
/// that divisors of the products stay in `F`.
pub fn family_check(family: FFamily, h: &[ExpVec], g_size: usize) -> Result<FamilyCheck, RifError> {
    if let Some(bad) = h.iter().find(|v| !family.contains(v)) {
        return Err(RifError::Precondition(format!("{bad} is not in the family")));
    }
    let g: Vec<ExpVec> = match family {
        FFamily::Squarefree => {
            let used = h.iter().filter_map(|v| v.0.iter().rposition(|c| !c.is_zero())).map(|i| i + 1).max().unwrap_or(0);
            (0..g_size)
                .map(|n| {
                    let mut v = ExpVec::zero(used + n + 1);
                    v.0[used + n] = Exp::one();
                    v
                })
                .collect()
        }
        FFamily::RationalPowers => {
            let headroom = h.iter().map(|v| Exp::one() - v.0[0]).min().unwrap_or(Exp::one());
            let mut step = headroom;
            (0..g_size)
                .map(|_| {
                    step /= 2;
                    ExpVec::scalar(step)
                })
                .collect()
        }
        FFamily::PowersOfX => (1..=g_size as i64).map(ExpVec::int).collect(),
    };
    let mut products = 0;
    let mut fullness = 0;
    let mut violation = None;
    'outer: for hv in h {
        for gv in &g {
            let (a, b) = padded(hv, gv);
            let p = a.add(&b);
            products += 1;
            if !family.contains(&p) {
                violation = Some(format!("{hv} + {gv} leaves the family"));
                break 'outer;
            }
            for dv in family_divisors(family, &p) {
                fullness += 1;
                if !family.contains(&dv) {
                    violation = Some(format!("divisor {dv} of {p} leaves the family"));
                    break 'outer;
                }
            }
        }
    }
    Ok(FamilyCheck { passed: violation.is_none(), g, products_checked: products, fullness_samples: fullness, violation })
}

/// `t ∉ I` with `rᵢ·t ∈ I` for every `i`, found as a divisibility-maximal
/// element of `{∏ rᵢ^{hᵢ} : hᵢ ≤ eᵢ}` outside `I`, where `eᵢ` is least with
/// `rᵢ^{eᵢ} ∈ I`. Exponents are valuations in the base.
pub fn lemma_find_t(base: &NumericalSemigroup, ideal: &[i64], r: &[i64]) -> Result<i64, RifError> {
    let ring = RifRing::new(base.generators(), ideal, FFamily::PowersOfX)?;
    if let Some(&bad) = r.iter().find(|&&x| x <= 0 || !base.contains(x)) {
        return Err(RifError::Precondition(format!("{bad} is not in the maximal ideal")));
    }
    let exps: Vec<i64> = r
        .iter()
        .map(|&x| (1..).find(|&e| ring.in_ideal(e * x)).expect("positive valuations reach I"))
        .collect();
    let mut l: BTreeSet<i64> = BTreeSet::from([0]);
    for (&x, &e) in r.iter().zip(&exps) {
        l = l.iter().flat_map(|&v| (0..=e).map(move |h| v + h * x)).collect();
    }
    let outside: Vec<i64> = l.into_iter().filter(|&v| !ring.in_ideal(v)).collect();
    let maximal = outside
        .iter()
        .copied()
        .filter(|&t| !outside.iter().any(|&u| u != t && u > t && base.contains(u - t)))
        .max()
        .ok_or_else(|| RifError::Precondition("every candidate lies in I".into()))?;
    if r.iter().any(|&x| !ring.in_ideal(x + maximal)) {
        return Err(RifError::TheoremViolation(format!("t = a^{maximal} fails r·t ∈ I")));
    }
    Ok(maximal)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessFamily {
    pub ring: String,
    pub product: RifMonomial,
    pub t: i64,
    pub h: Vec<ExpVec>,
    pub elements: Vec<RifMonomial>,
    pub membership_checks: usize,
    pub non_redundant_pairs: usize,
}

/// Explicit members `a·t·f` of `⋂(aᵢ)`, `f` ranging over `G`, each verified
/// to lie in every `(aᵢ)` and to be pairwise non-redundant.
pub fn sbid_witness_family(d: &RifRing, a: &[RifMonomial], count: usize) -> Result<WitnessFamily, RifError> {
    if a.len() < 2 {
        return Err(RifError::Precondition("need at least two elements".into()));
    }
    for x in a {
        if !rif_member(d, x) {
            return Err(RifError::Precondition(format!("{x} is not in the ring")));
        }
    }
    for (i, x) in a.iter().enumerate() {
        for (j, y) in a.iter().enumerate() {
            if i != j && rif_member(d, &x.div(y)) {
                return Err(RifError::Precondition(format!("{y} divides {x}")));
            }
        }
    }
    let product = a.iter().skip(1).fold(a[0].clone(), |acc, x| acc.mul(x));
    let cofactors: Vec<RifMonomial> = a.iter().map(|x| product.div(x)).collect();
    let mut h: Vec<ExpVec> = Vec::new();
    for b in cofactors.iter().filter(|b| !b.alpha.is_zero()) {
        let parts = family_parts(d.family, &b.alpha)
            .ok_or_else(|| RifError::Precondition(format!("{b} has no decomposition over the family")))?;
        h.extend(parts);
    }
    h.sort();
    h.dedup();
    // The ring part of a cofactor is nonzero only for pure powers of a.
    let r: Vec<i64> = cofactors.iter().filter(|b| b.alpha.is_zero() && b.k > 0).map(|b| b.k).collect();
    let t = if r.is_empty() { 0 } else { lemma_find_t(&d.base, &d.ideal, &r)? };
    let fam = family_check(d.family, &h, count)?;
    if let Some(v) = fam.violation {
        return Err(RifError::TheoremViolation(v));
    }
    let at = product.mul(&RifMonomial::new(t, ExpVec::zero(0)));
    let elements: Vec<RifMonomial> = fam.g.iter().map(|g| at.mul(&RifMonomial::new(0, g.clone()))).collect();
    let failures: Vec<String> = elements
        .par_iter()
        .flat_map_iter(|e| {
            a.iter()
                .filter(|x| !rif_member(d, &e.div(x)))
                .map(|x| format!("{e} / {x}"))
                .collect::<Vec<_>>()
        })
        .collect();
    if !failures.is_empty() {
        return Err(RifError::TheoremViolation(format!("quotients outside the ring: {}", failures.join(", "))));
    }
    let mut pairs = 0;
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            if i == j {
                continue;
            }
            pairs += 1;
            if rif_member(d, &x.div(y)) {
                return Err(RifError::TheoremViolation(format!("{y} divides {x}")));
            }
        }
    }
    Ok(WitnessFamily {
        ring: d.describe(),
        product,
        t,
        h,
        membership_checks: elements.len() * a.len(),
        elements,
        non_redundant_pairs: pairs,
    })
}

/// Least `n ≤ n_max` with `d·xⁿ ∉ D`.
pub fn cic_escape_probe(d: &RifRing, dm: &RifMonomial, x: &RifMonomial, n_max: u32) -> Result<Option<u32>, RifError> {
    if !rif_member(d, dm) {
        return Err(RifError::Precondition(format!("{dm} is not in the ring")));
    }
    if !in_ambient(d, x) {
        return Err(RifError::Precondition(format!("{x} is outside the ambient ring")));
    }
    if rif_member(d, x) {
        return Err(RifError::Precondition(format!("{x} lies in the ring")));
    }
    Ok((1..=n_max).find(|&n| !rif_member(d, &dm.mul(&x.pow(n as i64)))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralityWitness {
    pub element: RifMonomial,
    pub e: i64,
}

/// Candidate family elements of the search, smallest search first.
fn family_candidates(family: FFamily) -> Vec<ExpVec> {
    match family {
        FFamily::Squarefree => (1u32..8)
            .map(|mask| ExpVec(((0..3).map(|i| Exp::from_integer(((mask >> i) & 1) as i64))).collect()))
            .collect(),
        FFamily::RationalPowers => (1..=6).map(|j| ExpVec::scalar(Exp::new(1, 1 << j))).collect(),
        FFamily::PowersOfX => (1..=3).map(ExpVec::int).collect(),
    }
}

/// `x·f ∉ D` with `(x·f)ᵉ ∈ D`, for `x ∈ 𝔪 ∖ I` with `xᵉ ∈ I` and `f, fᵉ ∈ F`.
pub fn integrality_witness(d: &RifRing) -> Option<IntegralityWitness> {
    let top = d.ideal.iter().copied().max().unwrap_or(1);
    for k in 1..top {
        if !d.base.contains(k) || d.in_ideal(k) {
            continue;
        }
        for e in 2..=4 {
            if !d.in_ideal(e * k) {
                continue;
            }
            for f in family_candidates(d.family) {
                if !d.family.contains(&f.scale(e)) {
                    continue;
                }
                let m = RifMonomial::new(k, f);
                if !rif_member(d, &m) && rif_member(d, &m.pow(e)) {
                    return Some(IntegralityWitness { element: m, e });
                }
            }
        }
    }
    None
}

/// Small helper: `q` as a one-variable exponent.
pub fn q(n: i64, den: i64) -> ExpVec {
    ExpVec::ratio(n, den)
}

fn sqm(k: i64, a: &[i64]) -> RifMonomial {
    RifMonomial::new(k, ExpVec::ints(a))
}

fn rpm(k: i64, n: i64, den: i64) -> RifMonomial {
    RifMonomial::new(k, q(n, den))
}

/// The 20-case escape grids: five members `d` against four `x ∉ D`, both
/// over `I = (a)`.
pub fn escape_grid(family: FFamily) -> (Vec<RifMonomial>, Vec<RifMonomial>) {
    match family {
        FFamily::Squarefree => (
            vec![sqm(0, &[]), sqm(1, &[]), sqm(1, &[1]), sqm(2, &[]), sqm(2, &[1, 1])],
            vec![sqm(0, &[1]), sqm(0, &[0, 1]), sqm(1, &[2]), sqm(1, &[2, 1])],
        ),
        _ => (
            vec![rpm(0, 0, 1), rpm(1, 0, 1), rpm(1, 1, 2), rpm(2, 0, 1), rpm(2, 1, 1)],
            vec![rpm(0, 1, 2), rpm(0, 2, 3), rpm(0, 3, 4), rpm(1, 3, 2)],
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(k: i64, a: &[i64]) -> RifMonomial {
        RifMonomial::new(k, ExpVec::ints(a))
    }

    fn rp(k: i64, n: i64, den: i64) -> RifMonomial {
        RifMonomial::new(k, q(n, den))
    }

    #[test]
    fn membership_examples() {
        let d = RifRing::over_naturals(1, FFamily::Squarefree).unwrap();
        assert!(rif_member(&d, &sq(1, &[1, 1])));
        assert!(!rif_member(&d, &sq(1, &[2])));
        assert!(rif_member(&d, &sq(2, &[2])));
        let d = RifRing::over_naturals(1, FFamily::RationalPowers).unwrap();
        assert!(rif_member(&d, &rp(1, 1, 2)));
        assert!(!rif_member(&d, &rp(1, 3, 2)));
        assert!(rif_member(&d, &rp(2, 3, 2)));
        assert!(decomposes(FFamily::RationalPowers, &q(3, 2), 2));
    }

    #[test]
    fn closed_form_matches_brute_squarefree() {
        for base in [&[1][..], &[2, 3]] {
            for ideal in [&[1][..], &[2], &[3, 4]] {
                let Ok(d) = RifRing::new(base, ideal, FFamily::Squarefree) else { continue };
                let (bad, n) = squarefree_grid_mismatches(&d);
                assert!(n > 100);
                assert!(bad.is_empty(), "{bad:?} in {}", d.describe());
            }
        }
    }

    #[test]
    fn closed_form_matches_brute_rational_powers() {
        for e in 1..=3 {
            let d = RifRing::over_naturals(e, FFamily::RationalPowers).unwrap();
            let (bad, _) = rational_grid_mismatches(&d, 12);
            assert!(bad.is_empty(), "{bad:?}, e = {e}");
        }
    }

    #[test]
    fn family_checks() {
        let f = family_check(FFamily::Squarefree, &[ExpVec::ints(&[1, 1]), ExpVec::ints(&[0, 0, 1])], 3).unwrap();
        assert!(f.passed);
        assert_eq!(f.g[0], ExpVec::ints(&[0, 0, 0, 1]));
        assert_eq!(f.g[2], ExpVec::ints(&[0, 0, 0, 0, 0, 1]));
        let f = family_check(FFamily::RationalPowers, &[q(1, 2)], 3).unwrap();
        assert!(f.passed);
        assert_eq!(f.g, vec![q(1, 4), q(1, 8), q(1, 16)]);
        assert!(family_check(FFamily::PowersOfX, &[ExpVec::int(2)], 4).unwrap().passed);
        assert!(family_check(FFamily::Squarefree, &[ExpVec::ints(&[2])], 1).is_err());
    }

    #[test]
    fn find_t_examples() {
        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert_eq!(lemma_find_t(&n, &[2], &[1]).unwrap(), 1);
        assert_eq!(lemma_find_t(&n, &[1], &[3]).unwrap(), 0);
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(lemma_find_t(&s, &[3, 4], &[2]).unwrap(), 2);
    }

    #[test]
    fn witness_families() {
        let d = RifRing::over_naturals(1, FFamily::Squarefree).unwrap();
        let w = sbid_witness_family(&d, &[sq(1, &[1]), sq(1, &[0, 1])], 10).unwrap();
        assert_eq!(w.elements.len(), 10);
        assert_eq!(w.elements[0], sq(2, &[1, 1, 1]));
        assert_eq!(w.elements[9].to_string(), "a^2*x1*x2*x12");
        let d = RifRing::over_naturals(1, FFamily::RationalPowers).unwrap();
        let w = sbid_witness_family(&d, &[rp(1, 1, 2), rp(1, 1, 3)], 5).unwrap();
        assert_eq!(w.product, rp(2, 5, 6));
        assert_eq!(w.elements[0], rp(2, 5, 6).mul(&RifMonomial::new(0, q(1, 4))));
        assert!(matches!(
            sbid_witness_family(&d, &[rp(1, 1, 2), rp(2, 1, 2)], 3),
            Err(RifError::Precondition(_))
        ));
    }

    /// Cofactors outside the family still contribute their layers to `H`,
    /// and only pure powers of `a` feed the search for `t`.
    #[test]
    fn witness_family_with_non_family_cofactors() {
        let d = RifRing::over_naturals(1, FFamily::Squarefree).unwrap();
        let w = sbid_witness_family(&d, &[sq(2, &[2]), sq(3, &[0, 0, 2])], 3).unwrap();
        assert_eq!(w.h, vec![ExpVec::ints(&[1, 0, 0]), ExpVec::ints(&[0, 0, 1])]);
        assert_eq!(w.elements[0], sq(5, &[2, 0, 2, 1]));
        let w = sbid_witness_family(&d, &[sq(2, &[]), sq(1, &[1])], 3).unwrap();
        assert_eq!(w.t, 0);
        assert_eq!(family_parts(FFamily::Squarefree, &ExpVec::ints(&[2, 1])).unwrap(), vec![ExpVec::ints(&[1, 1]), ExpVec::ints(&[1, 0])]);
        assert_eq!(family_parts(FFamily::RationalPowers, &q(3, 2)).unwrap(), vec![q(3, 4)]);
    }

    #[test]
    fn escape_examples() {
        let d = RifRing::over_naturals(1, FFamily::Squarefree).unwrap();
        assert_eq!(cic_escape_probe(&d, &sq(2, &[]), &sq(0, &[1]), 5).unwrap(), Some(3));
        assert_eq!(cic_escape_probe(&d, &sq(0, &[]), &sq(0, &[1]), 5).unwrap(), Some(1));
        let d = RifRing::over_naturals(1, FFamily::RationalPowers).unwrap();
        assert_eq!(cic_escape_probe(&d, &rp(1, 0, 1), &rp(0, 1, 2), 5).unwrap(), Some(2));
        assert!(cic_escape_probe(&d, &rp(1, 0, 1), &rp(1, 1, 2), 5).is_err());
    }

    /// `d = a`, `x = a·x¹` never escapes: `a^{1+n}·xⁿ` needs `n + 1` summands
    /// and `a^{n+1} ∈ I^{n+1}`, which always holds for `I = (a)`.
    #[test]
    fn rational_powers_boundary_does_not_escape() {
        let d = RifRing::over_naturals(1, FFamily::RationalPowers).unwrap();
        assert!(!rif_member(&d, &rp(1, 1, 1)));
        assert_eq!(cic_escape_probe(&d, &rp(1, 0, 1), &rp(1, 1, 1), 50).unwrap(), None);
    }

    #[test]
    fn escape_grids_within_five() {
        for family in [FFamily::Squarefree, FFamily::RationalPowers] {
            let d = RifRing::over_naturals(1, family).unwrap();
            let (ds, xs) = escape_grid(family);
            for dm in &ds {
                for x in &xs {
                    let n = cic_escape_probe(&d, dm, x, 5).unwrap();
                    assert!(n.is_some(), "{dm}, {x}");
                }
            }
        }
    }

    #[test]
    fn integrality_examples() {
        let d = RifRing::over_naturals(2, FFamily::RationalPowers).unwrap();
        let w = integrality_witness(&d).unwrap();
        assert_eq!(w, IntegralityWitness { element: rp(1, 1, 4), e: 2 });
        assert!(integrality_witness(&RifRing::over_naturals(2, FFamily::Squarefree).unwrap()).is_none());
        assert!(integrality_witness(&RifRing::over_naturals(1, FFamily::RationalPowers).unwrap()).is_none());
    }

    #[test]
    fn membership_is_multiplicative() {
        let d = RifRing::new(&[2, 3], &[2, 3], FFamily::Squarefree).unwrap();
        let mut ms = Vec::new();
        for k in 0..=5 {
            for a in 0..=2 {
                for b in 0..=2 {
                    ms.push(sq(k, &[a, b]));
                }
            }
        }
        let members: Vec<_> = ms.iter().filter(|m| rif_member(&d, m)).collect();
        for x in &members {
            for y in &members {
                assert!(rif_member(&d, &x.mul(y)), "{x} * {y}");
            }
        }
    }
}
