//! `D = k + 𝔪` inside `T = k(X)[Y]_(Y)`, with `𝔪 = Y·T`.
//!
//! An element of `T` is a rational function whose reduced denominator does
//! not vanish identically at `Y = 0`; it lies in `D` when its value at
//! `Y = 0` is a constant.

use serde::Serialize;

use crate::arith::{linalg, parse_rational_function, ArithError, Polynomial, Rational, RationalFunction, VarContext};

pub const X: usize = 0;
pub const Y: usize = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KmError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("not an element of T: {0}")]
    NotInT(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub fn context() -> VarContext {
    VarContext::polynomial(&["X", "Y"])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KmElement(RationalFunction);

impl KmElement {
    pub fn new(f: RationalFunction) -> Result<Self, KmError> {
        if *f.ctx() != context() {
            return Err(KmError::NotInT(format!("{f} is not over X, Y")));
        }
        if f.den().substitute(Y, &Rational::from_integer(0.into()))?.is_zero() {
            return Err(KmError::NotInT(f.to_string()));
        }
        Ok(KmElement(f))
    }

    pub fn parse(s: &str) -> Result<Self, KmError> {
        Self::new(parse_rational_function(&context(), s)?)
    }

    pub fn value(&self) -> &RationalFunction {
        &self.0
    }

    /// Value at `Y = 0`.
    pub fn residue(&self) -> RationalFunction {
        self.0.substitute(Y, &Rational::from_integer(0.into())).expect("denominator nonzero at Y = 0")
    }

    /// `Y`-adic order; `None` for zero.
    pub fn order(&self) -> Option<i32> {
        self.0.num().coefficients_in(Y).keys().next().copied()
    }

    /// Coefficient of the lowest power of `Y`, a function of `X`.
    pub fn lowest_coefficient(&self) -> Option<RationalFunction> {
        let (_, c) = self.0.num().coefficients_in(Y).into_iter().next()?;
        let d0 = self.0.den().substitute(Y, &Rational::from_integer(0.into())).ok()?;
        RationalFunction::new(c, d0).ok()
    }

    pub fn mul(&self, o: &Self) -> Self {
        KmElement(self.0.mul(&o.0).expect("same context"))
    }

    pub fn add(&self, o: &Self) -> Self {
        KmElement(self.0.add(&o.0).expect("same context"))
    }

    /// `self / o` when it lies in `T`.
    pub fn div(&self, o: &Self) -> Result<Option<Self>, KmError> {
        let q = self.0.div(&o.0)?;
        Ok(KmElement::new(q).ok())
    }
}

impl std::fmt::Display for KmElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn km_in_d(e: &KmElement) -> bool {
    e.residue().as_constant().is_some()
}

/// Membership in `𝔪`: the value at `Y = 0` is zero.
pub fn km_in_m(e: &KmElement) -> bool {
    e.residue().is_zero()
}

/// `a | f` in `D`.
pub fn km_divides(a: &KmElement, f: &KmElement) -> Result<bool, KmError> {
    Ok(f.div(a)?.is_some_and(|q| km_in_d(&q)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KmGrid {
    pub h_min: i32,
    pub h_max: i32,
    pub h_star: i32,
    pub max_y_order: u32,
}

impl Default for KmGrid {
    fn default() -> Self {
        KmGrid { h_min: -5, h_max: 5, h_star: 7, max_y_order: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KmReport {
    pub a1: String,
    pub a2: String,
    pub samples: usize,
    /// Sample members of `I = (a₁) ∩ (a₂)` are exactly those `f` with `f/a₁ ∈ 𝔪`.
    pub divided_by_a1_is_m: bool,
    pub a1_outside: bool,
    pub y_multiples_inside: bool,
    pub proposed_generators: usize,
    pub h_star: i32,
    pub refutation: bool,
    pub passed: bool,
}

fn monomial_x(ctx: &VarContext, h: i32, yk: i32) -> RationalFunction {
    let num = Polynomial::monomial(ctx, vec![h.max(0), yk], Rational::from_integer(1.into())).expect("nonnegative");
    let den = Polynomial::monomial(ctx, vec![(-h).max(0), 0], Rational::from_integer(1.into())).expect("nonnegative");
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// Clear denominators and express each rational function in `X` as a
/// coordinate row over the `X`-monomials that occur.
fn x_coordinates(fs: &[RationalFunction]) -> Vec<linalg::Row> {
    let ctx = fs[0].ctx().clone();
    let common = fs.iter().fold(Polynomial::one(&ctx), |acc, f| &acc * f.den());
    let polys: Vec<Polynomial> = fs
        .iter()
        .map(|f| {
            let cleared = f.mul(&RationalFunction::from_poly(common.clone())).expect("same context");
            debug_assert!(cleared.den().is_one());
            cleared.num().clone()
        })
        .collect();
    let mut monos: Vec<_> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone()).collect::<Vec<_>>()).collect();
    monos.sort();
    monos.dedup();
    polys.iter().map(|p| monos.iter().map(|m| p.coefficient(&m.0)).collect()).collect()
}

/// Bounded checks of the proof that `(a₁) ∩ (a₂) = a₁𝔪` for incomparable
/// nonunits, which is not finitely generated.
pub fn km_intersection_probe(a1: &KmElement, a2: &KmElement, grid: &KmGrid) -> Result<KmReport, KmError> {
    for a in [a1, a2] {
        if !km_in_m(a) {
            return Err(KmError::Precondition(format!("{a} is not a nonunit of D")));
        }
    }
    if km_divides(a1, a2)? || km_divides(a2, a1)? {
        return Err(KmError::Precondition(format!("{a1} and {a2} are comparable")));
    }
    let ctx = context();
    let in_i = |f: &KmElement| -> Result<bool, KmError> { Ok(km_divides(a1, f)? && km_divides(a2, f)?) };
    let unit_twist = KmElement::parse("1/(1 + X)")?;

    // (i) f ∈ I iff f/a₁ ∈ 𝔪, over f = a₁·Yʲ·Xʰ and twisted variants.
    let mut samples = 0;
    let mut equiv = true;
    for j in 0..=grid.max_y_order as i32 {
        for h in grid.h_min..=grid.h_max {
            let base = a1.mul(&KmElement::new(monomial_x(&ctx, h, j))?);
            for f in [base.clone(), base.mul(&unit_twist), base.add(&a2.mul(&KmElement::new(monomial_x(&ctx, 0, 1))?))] {
                samples += 1;
                let q = f.div(a1)?.expect("a1 divides its multiples in T");
                if in_i(&f)? != km_in_m(&q) {
                    equiv = false;
                }
            }
        }
    }

    // (ii) a₁ ∉ I while a₁·Y·Xʰ ∈ I across the grid.
    let a1_outside = !in_i(a1)?;
    let mut gens = Vec::new();
    let mut inside = true;
    for h in grid.h_min..=grid.h_max {
        let g = a1.mul(&KmElement::new(monomial_x(&ctx, h, 1))?);
        inside &= in_i(&g)?;
        gens.push(g);
    }

    // (iii) D-multiples of the proposed generators have lowest coefficients
    // in their k-span, which misses a₁·Y·X^{h*} ∈ I.
    let target = a1.mul(&KmElement::new(monomial_x(&ctx, grid.h_star, 1))?);
    let target_in = in_i(&target)?;
    let order = target.order();
    let mut coeffs: Vec<RationalFunction> = gens
        .iter()
        .filter(|g| g.order() == order)
        .filter_map(KmElement::lowest_coefficient)
        .collect();
    let target_coeff = target.lowest_coefficient().expect("nonzero");
    coeffs.push(target_coeff);
    let rows = x_coordinates(&coeffs);
    let (span, t) = rows.split_at(rows.len() - 1);
    let refutation = target_in && !linalg::span_contains(span, &t[0]);

    let passed = equiv && a1_outside && inside && refutation;
    Ok(KmReport {
        a1: a1.to_string(),
        a2: a2.to_string(),
        samples,
        divided_by_a1_is_m: equiv,
        a1_outside,
        y_multiples_inside: inside,
        proposed_generators: gens.len(),
        h_star: grid.h_star,
        refutation,
        passed,
    })
}
