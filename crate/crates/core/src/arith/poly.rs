//! Sparse multivariate polynomials over ℚ.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose order is graded
//! lexicographic, so the last entry is always the leading term. Variables may
//! be flagged as Laurent, in which case negative exponents are allowed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    pub name: String,
    pub laurent: bool,
}

impl Var {
    pub fn new(name: impl Into<String>) -> Self {
        Var { name: name.into(), laurent: false }
    }

    pub fn laurent(name: impl Into<String>) -> Self {
        Var { name: name.into(), laurent: true }
    }
}

/// Ordered list of variables shared by every polynomial built over it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    vars: Arc<[Var]>,
}

impl VarContext {
    pub fn new(vars: impl IntoIterator<Item = Var>) -> Result<Self, ArithError> {
        let vars: Vec<Var> = vars.into_iter().collect();
        for (i, v) in vars.iter().enumerate() {
            if v.name.is_empty() {
                return Err(ArithError::Context("empty variable name".into()));
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(ArithError::Context(format!("duplicate variable `{}`", v.name)));
            }
        }
        Ok(VarContext { vars: vars.into() })
    }

    /// Context of ordinary (non-Laurent) variables.
    pub fn polynomial<S: AsRef<str>>(names: &[S]) -> Self {
        Self::new(names.iter().map(|n| Var::new(n.as_ref())))
            .expect("distinct variable names")
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn is_laurent(&self, i: usize) -> bool {
        self.vars[i].laurent
    }

    pub fn has_laurent(&self) -> bool {
        self.vars.iter().any(|v| v.laurent)
    }

    /// A new context with `extra` appended after the current variables.
    pub fn extended(&self, extra: impl IntoIterator<Item = Var>) -> Result<Self, ArithError> {
        Self::new(self.vars.iter().cloned().chain(extra))
    }
}

/// Exponent vector with graded lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: VarContext,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ctx: &VarContext) -> Self {
        Polynomial { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &VarContext, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx.len()), c);
        }
        p
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn from_int(ctx: &VarContext, c: i64) -> Self {
        Self::constant(ctx, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(ctx: &VarContext, i: usize) -> Self {
        let mut e = vec![0; ctx.len()];
        e[i] = 1;
        Self::monomial(ctx, e, Rational::one()).expect("positive exponent")
    }

    /// Single term `c·x^exps`; rejects negative exponents on non-Laurent variables.
    pub fn monomial(ctx: &VarContext, exps: Vec<i32>, c: Rational) -> Result<Self, ArithError> {
        if exps.len() != ctx.len() {
            return Err(ArithError::Context(format!(
                "exponent vector of length {} for {} variables",
                exps.len(),
                ctx.len()
            )));
        }
        for (i, &e) in exps.iter().enumerate() {
            if e < 0 && !ctx.is_laurent(i) {
                return Err(ArithError::NegativeExponent(ctx.vars()[i].name.clone()));
            }
        }
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        Ok(p)
    }

    pub fn from_terms(
        ctx: &VarContext,
        terms: impl IntoIterator<Item = (Vec<i32>, Rational)>,
    ) -> Result<Self, ArithError> {
        let mut p = Self::zero(ctx);
        for (e, c) in terms {
            p = &p + &Self::monomial(ctx, e, c)?;
        }
        Ok(p)
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.ctx.len()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, exps: &[i32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// Maximum total degree over the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_total_degree()
    }

    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn min_degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).min()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] != 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients with respect to variable `i`: `(exponent, coefficient)` pairs
    /// where the coefficients no longer involve `i`.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<i32, Polynomial> {
        let mut out: BTreeMap<i32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = rest.0[i];
            rest.0[i] = 0;
            out.entry(e)
                .or_insert_with(|| Self::zero(&self.ctx))
                .terms
                .insert(rest, c.clone());
        }
        out
    }

    /// Substitute the rational value `value` for variable `i`.
    pub fn substitute(&self, i: usize, value: &Rational) -> Result<Self, ArithError> {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.0[i];
            let factor = if e >= 0 {
                num_traits::pow(value.clone(), e as usize)
            } else {
                if value.is_zero() {
                    return Err(ArithError::DivisionByZero);
                }
                num_traits::pow(value.recip(), (-e) as usize)
            };
            let mut rest = m.clone();
            rest.0[i] = 0;
            out.add_term(rest, c * factor);
        }
        Ok(out)
    }

    /// Re-embed into a context that extends this one (new variables appended).
    pub fn embed(&self, target: &VarContext) -> Result<Self, ArithError> {
        if target.len() < self.ctx.len() || target.vars()[..self.ctx.len()] != *self.ctx.vars() {
            return Err(ArithError::Context("target context does not extend source".into()));
        }
        let pad = target.len() - self.ctx.len();
        Ok(Polynomial {
            ctx: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.extend(std::iter::repeat_n(0, pad));
                    (Monomial(e), c.clone())
                })
                .collect(),
        })
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self -= c·m·other`, in place.
    pub(crate) fn sub_scaled(&mut self, other: &Polynomial, m: &Monomial, c: &Rational) {
        for (k, a) in &other.terms {
            self.add_term(k.mul(m), -(a * c));
        }
    }

    pub fn same_ctx(&self, other: &Polynomial) -> Result<(), ArithError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(ArithError::Context("polynomials over different variable lists".into()))
        }
    }

    /// Scale to coprime integer coefficients with a positive leading coefficient.
    pub fn primitive_normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut factor = Rational::new(den_lcm, num_gcd);
        if self.leading_coefficient().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coefficient().recip())
    }

    /// Terms of even total degree and terms of odd total degree.
    pub fn parity_split(&self) -> (Polynomial, Polynomial) {
        let mut even = Self::zero(&self.ctx);
        let mut odd = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let target = if m.degree().rem_euclid(2) == 0 { &mut even } else { &mut odd };
            target.terms.insert(m.clone(), c.clone());
        }
        (even, odd)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ctx, rhs.ctx, "polynomials over different variable lists");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ctx, rhs.ctx, "polynomials over different variable lists");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ctx, rhs.ctx, "polynomials over different variable lists");
        let mut out = Polynomial::zero(&self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: terms in descending graded-lex order, `*` between
    /// factors, `^` for exponents other than 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    let name = &self.ctx.vars()[i].name;
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> VarContext {
        VarContext::polynomial(&["x", "y"])
    }

    #[test]
    fn grlex_leading_term() {
        let ctx = xy();
        let p = Polynomial::from_terms(
            &ctx,
            [
                (vec![1, 0], Rational::one()),
                (vec![0, 2], Rational::one()),
                (vec![1, 1], Rational::one()),
            ],
        )
        .unwrap();
        assert_eq!(p.leading_term().unwrap().0, &Monomial(vec![1, 1]));
        assert_eq!(p.to_string(), "x*y + y^2 + x");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let ctx = xy();
        let x = Polynomial::var(&ctx, 0);
        let d = &x - &x;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
    }

    #[test]
    fn negative_exponent_rejected_without_laurent() {
        let ctx = xy();
        assert!(matches!(
            Polynomial::monomial(&ctx, vec![-1, 0], Rational::one()),
            Err(ArithError::NegativeExponent(_))
        ));
        let lctx = VarContext::new([Var::laurent("x3")]).unwrap();
        let p = Polynomial::monomial(&lctx, vec![-2], Rational::one()).unwrap();
        assert_eq!(p.to_string(), "x3^-2");
    }

    #[test]
    fn parity_split_examples() {
        let ctx = VarContext::polynomial(&["x1", "x2", "x3"]);
        let x = |i| Polynomial::var(&ctx, i);
        let p = &x(0) + &(&x(1) * &x(2));
        let (e, o) = p.parity_split();
        assert_eq!(e, &x(1) * &x(2));
        assert_eq!(o, x(0));
        assert_eq!(&e + &o, p);
        let q = &x(0) * &x(1);
        assert_eq!(q.parity_split(), (q.clone(), Polynomial::zero(&ctx)));
        let z = Polynomial::zero(&ctx);
        assert_eq!(z.parity_split(), (z.clone(), z.clone()));
    }

    #[test]
    fn primitive_normalization() {
        let ctx = xy();
        let p = Polynomial::from_terms(
            &ctx,
            [
                (vec![1, 0], Rational::new((-2).into(), 3.into())),
                (vec![0, 0], Rational::new(4.into(), 9.into())),
            ],
        )
        .unwrap();
        assert_eq!(p.primitive_normalized().to_string(), "3*x - 2");
    }
}
