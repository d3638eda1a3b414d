//! Exponent monoids of the graded rings: membership, divisibility,
//! bounded enumeration and conductor data.

use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap};
use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Exp = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid monoid: {0}")]
    Invalid(String),
    #[error("cannot parse exponent `{0}`")]
    Parse(String),
}

/// Rational exponent vector. Ordered by coordinate sum, then reverse
/// lexicographically, so `(2,0) < (1,1) < (0,2)`. For monoids inside the
/// nonnegative orthant a divisor never comes after its multiple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpVec(pub Vec<Exp>);

impl ExpVec {
    pub fn zero(dim: usize) -> Self {
        ExpVec(vec![Exp::zero(); dim])
    }

    pub fn scalar(x: Exp) -> Self {
        ExpVec(vec![x])
    }

    pub fn int(x: i64) -> Self {
        ExpVec(vec![Exp::from_integer(x)])
    }

    pub fn ints(xs: &[i64]) -> Self {
        ExpVec(xs.iter().map(|&x| Exp::from_integer(x)).collect())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ExpVec(vec![Exp::new(n, d)])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> Exp {
        self.0.iter().fold(Exp::zero(), |a, b| a + b)
    }

    pub fn add(&self, o: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> ExpVec {
        ExpVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> ExpVec {
        ExpVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coordinatewise maximum.
    pub fn join(&self, o: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn meet(&self, o: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&o.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn leq(&self, o: &ExpVec) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator(&self) -> i64 {
        self.0.iter().fold(1, |l, a| l.lcm(a.denom()))
    }

    pub fn max_coord(&self) -> Exp {
        self.0.iter().copied().max().unwrap_or_else(Exp::zero)
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sum().cmp(&other.sum()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn fmt_exp(x: &Exp) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", fmt_exp(&self.0[0]))
        } else {
            let parts: Vec<String> = self.0.iter().map(fmt_exp).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

fn parse_exp(s: &str) -> Result<Exp, MonoidError> {
    let s = s.trim();
    let bad = || MonoidError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Exp::new(n, d))
        }
        None => Ok(Exp::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for ExpVec {
    type Err = MonoidError;
    /// `5`, `-2/3` or `(1,1,0)`.
    fn from_str(s: &str) -> Result<Self, MonoidError> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            inner.split(',').map(parse_exp).collect::<Result<_, _>>().map(ExpVec)
        } else {
            Ok(ExpVec(vec![parse_exp(t)?]))
        }
    }
}

impl serde::Serialize for ExpVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for ExpVec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Numerical semigroup with its Apéry set with respect to the smallest generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    apery: Vec<i64>,
}

impl NumericalSemigroup {
    pub fn new(gens: &[i64]) -> Result<Self, MonoidError> {
        if gens.is_empty() || gens.iter().any(|&g| g <= 0) {
            return Err(MonoidError::Invalid("generators must be positive".into()));
        }
        if gens.iter().fold(0i64, |a, &g| a.gcd(&g)) != 1 {
            return Err(MonoidError::Invalid(format!("generators {gens:?} have gcd > 1")));
        }
        let mut generators: Vec<i64> = gens.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let m = generators[0];
        // Dijkstra over residues mod m: apery[r] = least element ≡ r (mod m).
        let mut apery = vec![i64::MAX; m as usize];
        apery[0] = 0;
        let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > apery[r] {
                continue;
            }
            for &g in &generators[1..] {
                let nr = ((r as i64 + g) % m) as usize;
                let nd = d + g;
                if nd < apery[nr] {
                    apery[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        // Drop generators that are sums of others.
        let probe = NumericalSemigroup { generators: generators.clone(), apery: apery.clone() };
        generators.retain(|&g| {
            !(1..g).any(|a| {
                let b = g - a;
                a <= b && probe.contains(a) && probe.contains(b)
            })
        });
        Ok(NumericalSemigroup { generators, apery })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.apery.len() as i64
    }

    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && n >= self.apery[n.rem_euclid(self.multiplicity()) as usize]
    }

    pub fn frobenius(&self) -> i64 {
        self.apery.iter().max().copied().unwrap_or(0) - self.multiplicity()
    }

    /// Least `c` with `[c, ∞) ⊆ S`.
    pub fn conductor(&self) -> i64 {
        self.frobenius() + 1
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.conductor()).filter(|&n| !self.contains(n)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExponentMonoid {
    NumericalSemigroup(NumericalSemigroup),
    /// Generated by `{1} ∪ {g/bⁿ : n ≥ 1}` (or without `1`).
    RootFamily { base: i64, seed: i64, include_unit: bool },
    /// Nonnegative integer combinations of rational vectors.
    FinGenCone { dim: usize, generators: Vec<ExpVec> },
    /// Integer points of the orthant with even coordinate sum.
    EvenDegree { dim: usize },
}

impl ExponentMonoid {
    pub fn numerical(gens: &[i64]) -> Result<Self, MonoidError> {
        Ok(ExponentMonoid::NumericalSemigroup(NumericalSemigroup::new(gens)?))
    }

    /// The monoid ℕ.
    pub fn naturals() -> Self {
        Self::numerical(&[1]).expect("valid")
    }

    pub fn root_family(base: i64, seed: i64, include_unit: bool) -> Result<Self, MonoidError> {
        if base < 2 {
            return Err(MonoidError::Invalid("base must be at least 2".into()));
        }
        if seed < 1 {
            return Err(MonoidError::Invalid("seed must be positive".into()));
        }
        if seed.gcd(&base) != 1 {
            return Err(MonoidError::Invalid(format!("gcd(seed {seed}, base {base}) must be 1")));
        }
        Ok(ExponentMonoid::RootFamily { base, seed, include_unit })
    }

    pub fn fin_gen_cone(dim: usize, generators: Vec<ExpVec>) -> Result<Self, MonoidError> {
        if dim == 0 {
            return Err(MonoidError::Invalid("dimension must be positive".into()));
        }
        for g in &generators {
            if g.dim() != dim || g.0.iter().any(|c| c.is_negative()) || g.is_zero() {
                return Err(MonoidError::Invalid(format!("bad cone generator {g}")));
            }
        }
        Ok(ExponentMonoid::FinGenCone { dim, generators })
    }

    pub fn even_degree(dim: usize) -> Result<Self, MonoidError> {
        if dim == 0 {
            return Err(MonoidError::Invalid("dimension must be positive".into()));
        }
        Ok(ExponentMonoid::EvenDegree { dim })
    }

    pub fn dim(&self) -> usize {
        match self {
            ExponentMonoid::NumericalSemigroup(_) | ExponentMonoid::RootFamily { .. } => 1,
            ExponentMonoid::FinGenCone { dim, .. } | ExponentMonoid::EvenDegree { dim } => *dim,
        }
    }

    fn check_dim(&self, v: &ExpVec) -> Result<(), MonoidError> {
        if v.dim() != self.dim() {
            return Err(MonoidError::Domain(format!(
                "exponent {v} has dimension {}, monoid has {}",
                v.dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// Is `v` a nonnegative integer combination of generators?
    pub fn member(&self, v: &ExpVec) -> Result<bool, MonoidError> {
        self.check_dim(v)?;
        Ok(match self {
            ExponentMonoid::NumericalSemigroup(s) => v.0[0].is_integer() && s.contains(v.0[0].to_integer()),
            ExponentMonoid::RootFamily { base, seed, include_unit } => {
                let x = v.0[0];
                let level = b_level(*base, *x.denom()).ok_or_else(|| {
                    MonoidError::Domain(format!("denominator of {} is not a power of {base}", fmt_exp(&x)))
                })?;
                !x.is_negative() && root_member(*base, *seed, *include_unit, *x.numer(), level)
            }
            ExponentMonoid::EvenDegree { .. } => {
                v.0.iter().all(|c| c.is_integer() && !c.is_negative())
                    && v.sum().to_integer().rem_euclid(2) == 0
            }
            ExponentMonoid::FinGenCone { generators, .. } => cone_member(generators, v),
        })
    }

    /// `x^a | x^b` in the monoid ring, i.e. `b − a ∈ M`.
    pub fn divides(&self, a: &ExpVec, b: &ExpVec) -> Result<bool, MonoidError> {
        self.check_dim(a)?;
        self.member(&b.sub(a))
    }

    /// Members with every coordinate ≤ `bound` and denominators dividing
    /// `denominator_cap`, in canonical order.
    pub fn enumerate_up_to(&self, bound: Exp, denominator_cap: i64) -> Vec<ExpVec> {
        let lower = ExpVec::zero(self.dim());
        self.lattice_points(&lower, bound, denominator_cap)
            .into_iter()
            .filter(|v| self.member(v).unwrap_or(false))
            .collect()
    }

    /// Grid step used for windows over this monoid's group.
    pub fn grid_denominator(&self, denominator_cap: i64) -> i64 {
        match self {
            ExponentMonoid::NumericalSemigroup(_) | ExponentMonoid::EvenDegree { .. } => 1,
            ExponentMonoid::RootFamily { base, .. } => b_part(*base, denominator_cap.max(1)),
            ExponentMonoid::FinGenCone { generators, .. } => {
                generators.iter().fold(1, |l, g| l.lcm(&g.denominator()))
            }
        }
    }

    /// Points of the ambient grid with `lower ≤ v ≤ (bound, …, bound)`,
    /// canonical order. Candidates for filter scans.
    pub fn lattice_points(&self, lower: &ExpVec, bound: Exp, denominator_cap: i64) -> Vec<ExpVec> {
        let den = self.grid_denominator(denominator_cap);
        let step = match self {
            ExponentMonoid::RootFamily { seed, include_unit: false, .. } => *seed,
            _ => 1,
        };
        let hi = (bound * den).floor().to_integer();
        let axes: Vec<Vec<Exp>> = lower
            .0
            .iter()
            .map(|lo| {
                let lo_n = (lo * den).ceil().to_integer();
                let start = lo_n + (-lo_n).rem_euclid(step);
                (start..=hi).step_by(step as usize).map(|k| Exp::new(k, den)).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(axes.len());
        cartesian(&axes, &mut cur, &mut out);
        if let ExponentMonoid::EvenDegree { .. } = self {
            out.retain(|v: &ExpVec| v.sum().to_integer().rem_euclid(2) == 0);
        }
        out.sort();
        out
    }

    /// Smallest `c` with `[c, ∞) ⊆ M`, for numerical semigroups.
    pub fn conductor(&self) -> Result<i64, MonoidError> {
        match self {
            ExponentMonoid::NumericalSemigroup(s) => Ok(s.conductor()),
            _ => Err(MonoidError::Unsupported("conductor of a non-numerical semigroup".into())),
        }
    }

    /// Numerators of members with denominator dividing `bⁿ`, as a
    /// numerical semigroup (root family with unit only).
    pub fn level_semigroup(&self, n: u32) -> Option<NumericalSemigroup> {
        match self {
            ExponentMonoid::RootFamily { base, seed, include_unit: true } => {
                let mut gens = vec![base.pow(n)];
                gens.extend((0..n).map(|k| seed * base.pow(k)));
                NumericalSemigroup::new(&gens).ok()
            }
            _ => None,
        }
    }

    /// Short human-readable description.
    pub fn describe(&self) -> String {
        match self {
            ExponentMonoid::NumericalSemigroup(s) => format!("numerical semigroup {:?}", s.generators()),
            ExponentMonoid::RootFamily { base, seed, include_unit } => format!(
                "root family base {base} seed {seed}{}",
                if *include_unit { "" } else { " without unit" }
            ),
            ExponentMonoid::FinGenCone { dim, generators } => {
                let g: Vec<String> = generators.iter().map(ToString::to_string).collect();
                format!("cone in dimension {dim} generated by [{}]", g.join(", "))
            }
            ExponentMonoid::EvenDegree { dim } => format!("even degree in dimension {dim}"),
        }
    }

    /// Whether the monoid is normal (the monoid ring is integrally closed).
    pub fn is_normal(&self) -> bool {
        match self {
            ExponentMonoid::NumericalSemigroup(s) => s.conductor() == 0,
            ExponentMonoid::EvenDegree { .. } => true,
            ExponentMonoid::FinGenCone { dim, generators } => is_unit_basis(*dim, generators),
            ExponentMonoid::RootFamily { include_unit, .. } => !include_unit,
        }
    }
}

pub(crate) fn is_unit_basis(dim: usize, generators: &[ExpVec]) -> bool {
    (0..dim).all(|i| {
        generators.iter().any(|g| {
            g.0.iter().enumerate().all(|(j, c)| if j == i { c == &Exp::from_integer(1) } else { c.is_zero() })
        })
    })
}

fn cartesian(axes: &[Vec<Exp>], cur: &mut Vec<Exp>, out: &mut Vec<ExpVec>) {
    if cur.len() == axes.len() {
        out.push(ExpVec(cur.clone()));
        return;
    }
    for x in &axes[cur.len()] {
        cur.push(*x);
        cartesian(axes, cur, out);
        cur.pop();
    }
}

/// `n` with `bⁿ = d`, if `d` is a power of `b`.
pub fn b_level(b: i64, mut d: i64) -> Option<u32> {
    let mut n = 0;
    while d > 1 {
        if d % b != 0 {
            return None;
        }
        d /= b;
        n += 1;
    }
    (d == 1).then_some(n)
}

/// Largest power of `b` dividing `cap`.
pub fn b_part(b: i64, mut cap: i64) -> i64 {
    let mut p = 1;
    while cap % b == 0 {
        cap /= b;
        p *= b;
    }
    p
}

/// Membership of `N/bⁿ` in the root-family monoid.
///
/// Normalization: `b` copies of `g/bᵐ` collapse to one `g/bᵐ⁻¹`, so some
/// representation uses `g/bⁿ` at most `b − 1` times. Because `gcd(g, b) = 1`
/// that count `c` is forced by `N ≡ c·g (mod b)`, and `N/bⁿ ∈ M` iff
/// `c·g ≤ N` and `(N − c·g)/bⁿ⁻¹ ∈ M`. At level 0 only the unit (or
/// multiples of `g` when the unit is excluded) remain.
fn root_member(b: i64, g: i64, include_unit: bool, mut num: i64, level: u32) -> bool {
    let g_inv = modinv(g.rem_euclid(b), b);
    for _ in 0..level {
        let c = (num.rem_euclid(b) * g_inv) % b;
        num -= c * g;
        if num < 0 {
            return false;
        }
        num /= b;
    }
    if include_unit {
        num >= 0
    } else {
        num >= 0 && num % g == 0
    }
}

fn modinv(a: i64, m: i64) -> i64 {
    let e = num_integer::Integer::extended_gcd(&a, &m);
    e.x.rem_euclid(m)
}

/// Bounded multiplicity search: each generator is used at most as often as
/// the smallest coordinate ratio allows.
fn cone_member(generators: &[ExpVec], v: &ExpVec) -> bool {
    if v.0.iter().any(|c| c.is_negative()) {
        return false;
    }
    fn go(gens: &[ExpVec], rest: &ExpVec) -> bool {
        if rest.is_zero() {
            return true;
        }
        let Some((g, tail)) = gens.split_first() else {
            return false;
        };
        let mut cur = rest.clone();
        loop {
            if go(tail, &cur) {
                return true;
            }
            cur = cur.sub(g);
            if cur.0.iter().any(|c| c.is_negative()) {
                return false;
            }
        }
    }
    go(generators, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[i64]) -> ExponentMonoid {
        ExponentMonoid::numerical(g).unwrap()
    }

    fn hochster() -> ExponentMonoid {
        ExponentMonoid::root_family(3, 2, true).unwrap()
    }

    /// Bounded coin search after clearing denominators to `bⁿ`: coins `bⁿ`
    /// and `g·bⁿ⁻ᵐ` for `1 ≤ m ≤ n`.
    fn coin_oracle(b: i64, g: i64, unit: bool, x: Exp, n: u32) -> bool {
        let scale = b.pow(n);
        let target = x * scale;
        if !target.is_integer() || target.is_negative() {
            return false;
        }
        let t = target.to_integer() as usize;
        let mut coins: Vec<usize> = (1..=n).map(|m| (g * b.pow(n - m)) as usize).collect();
        if unit {
            coins.push(scale as usize);
        }
        let mut reach = vec![false; t + 1];
        reach[0] = true;
        for i in 1..=t {
            reach[i] = coins.iter().any(|&c| c <= i && reach[i - c]);
        }
        reach[t]
    }

    #[test]
    fn numerical_semigroup_membership() {
        let m = ns(&[2, 3]);
        assert!(!m.member(&ExpVec::int(1)).unwrap());
        assert!(m.member(&ExpVec::int(5)).unwrap());
        assert!(m.member(&ExpVec::int(0)).unwrap());
        assert!(!m.member(&ExpVec::int(-2)).unwrap());
    }

    #[test]
    fn root_family_membership() {
        let m = hochster();
        assert!(m.member(&ExpVec::ratio(2, 3)).unwrap());
        assert!(!m.member(&ExpVec::ratio(1, 3)).unwrap());
        assert!(m.member(&ExpVec::ratio(4, 3)).unwrap());
        assert!(matches!(m.member(&ExpVec::ratio(1, 2)), Err(MonoidError::Domain(_))));
    }

    #[test]
    fn root_family_matches_coin_oracle() {
        for (b, g) in [(3, 2), (2, 3), (3, 4), (5, 2)] {
            for unit in [true, false] {
                let m = ExponentMonoid::root_family(b, g, unit).unwrap();
                let n = 3;
                let den = b.pow(n);
                for k in 0..=3 * den {
                    let x = Exp::new(k, den);
                    assert_eq!(
                        m.member(&ExpVec::scalar(x)).unwrap(),
                        coin_oracle(b, g, unit, x, n),
                        "b={b} g={g} unit={unit} x={x}"
                    );
                }
            }
        }
    }

    /// Members with denominator bⁿ need no generator finer than g/bⁿ.
    #[test]
    fn root_family_normalization() {
        for n in 0..=3u32 {
            let den = 3i64.pow(n);
            for k in 0..=2 * den {
                let x = Exp::new(k, den);
                assert_eq!(coin_oracle(3, 2, true, x, n), coin_oracle(3, 2, true, x, n + 2), "{x}");
            }
        }
    }

    #[test]
    fn root_family_dense_in_one_two() {
        let m = hochster();
        for n in 0..=4u32 {
            let den = 3i64.pow(n);
            for k in (den + 1)..(2 * den) {
                assert!(m.member(&ExpVec::ratio(k, den)).unwrap(), "{k}/{den}");
            }
        }
    }

    #[test]
    fn root_family_rejects_shared_factor() {
        assert!(ExponentMonoid::root_family(3, 6, true).is_err());
        assert!(ExponentMonoid::root_family(1, 2, true).is_err());
    }

    #[test]
    fn even_degree_membership() {
        let m = ExponentMonoid::even_degree(3).unwrap();
        assert!(m.member(&ExpVec::ints(&[1, 1, 0])).unwrap());
        assert!(!m.member(&ExpVec::ints(&[1, 0, 0])).unwrap());
        assert!(m.divides(&ExpVec::ints(&[1, 1, 0]), &ExpVec::ints(&[2, 2, 0])).unwrap());
        assert!(!m.divides(&ExpVec::ints(&[1, 1, 0]), &ExpVec::ints(&[1, 0, 1])).unwrap());
    }

    #[test]
    fn divides_examples() {
        let m = ns(&[2, 3]);
        assert!(m.divides(&ExpVec::int(2), &ExpVec::int(5)).unwrap());
        assert!(!m.divides(&ExpVec::int(2), &ExpVec::int(3)).unwrap());
        for v in [ExpVec::int(7), ExpVec::ratio(5, 3)] {
            assert!(hochster().divides(&v, &v).unwrap());
        }
    }

    #[test]
    fn enumerate_examples() {
        let to_s = |v: Vec<ExpVec>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        assert_eq!(to_s(ns(&[2, 3]).enumerate_up_to(Exp::from_integer(6), 1)), ["0", "2", "3", "4", "5", "6"]);
        assert_eq!(
            to_s(hochster().enumerate_up_to(Exp::from_integer(1), 9)),
            ["0", "2/9", "4/9", "2/3", "8/9", "1"]
        );
        let ev = ExponentMonoid::even_degree(2).unwrap().enumerate_up_to(Exp::from_integer(2), 1);
        assert_eq!(to_s(ev), ["(0,0)", "(2,0)", "(1,1)", "(0,2)", "(2,2)"]);
    }

    #[test]
    fn conductor_examples() {
        assert_eq!(ns(&[2, 3]).conductor().unwrap(), 2);
        assert_eq!(ns(&[3, 4, 5]).conductor().unwrap(), 3);
        assert_eq!(ns(&[2, 5]).conductor().unwrap(), 4);
        assert_eq!(ExponentMonoid::naturals().conductor().unwrap(), 0);
        assert!(hochster().conductor().is_err());
    }

    #[test]
    fn conductor_matches_scan() {
        for gens in [vec![2, 3], vec![3, 4, 5], vec![2, 5], vec![5, 7, 9], vec![4, 6, 9]] {
            let m = ns(&gens);
            let c = m.conductor().unwrap();
            let member = |n: i64| m.member(&ExpVec::int(n)).unwrap();
            assert!((c..c + 20).all(member));
            assert!(c == 0 || !member(c - 1));
        }
    }

    #[test]
    fn gcd_validation() {
        assert!(ExponentMonoid::numerical(&[2, 4]).is_err());
    }

    #[test]
    fn cone_membership() {
        let m = ExponentMonoid::fin_gen_cone(2, vec!["(2,0)".parse().unwrap(), "(1,1)".parse().unwrap(), "(0,2)".parse().unwrap()]).unwrap();
        assert!(m.member(&ExpVec::ints(&[3, 1])).unwrap());
        assert!(!m.member(&ExpVec::ints(&[1, 0])).unwrap());
        let h = ExponentMonoid::fin_gen_cone(1, vec!["1/2".parse().unwrap()]).unwrap();
        assert!(h.member(&ExpVec::ratio(3, 2)).unwrap());
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![ExpVec::ints(&[0, 2]), ExpVec::ints(&[1, 1]), ExpVec::ints(&[2, 0])];
        v.sort();
        assert_eq!(v, vec![ExpVec::ints(&[2, 0]), ExpVec::ints(&[1, 1]), ExpVec::ints(&[0, 2])]);
        assert_eq!("(1,-2/3)".parse::<ExpVec>().unwrap().to_string(), "(1,-2/3)");
    }
}
