use std::fmt;

use num_traits::One;

use super::gcd::{exact_divide, multivar_gcd};
use super::poly::{Polynomial, Rational, VarContext};
use super::ArithError;

/// Reduced fraction `num/den`: `gcd(num, den) = 1` and the leading
/// coefficient of `den` is 1. Zero is stored as `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ArithError> {
        num.same_ctx(&den)?;
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Polynomial::zero(num.ctx())));
        }
        let g = multivar_gcd(&num, &den)?;
        let mut n = exact_divide(&num, &g)?.ok_or(ArithError::NotExact)?;
        let mut d = exact_divide(&den, &g)?.ok_or(ArithError::NotExact)?;
        let s = d.leading_coefficient().recip();
        n = n.scale(&s);
        d = d.scale(&s);
        Ok(RationalFunction { num: n, den: d })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let den = Polynomial::one(p.ctx());
        RationalFunction { num: p, den }
    }

    pub fn zero(ctx: &VarContext) -> Self {
        Self::from_poly(Polynomial::zero(ctx))
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::from_poly(Polynomial::one(ctx))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn ctx(&self) -> &VarContext {
        self.num.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self, ArithError> {
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, ArithError> {
        Self::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn mul(&self, o: &Self) -> Result<Self, ArithError> {
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &Self) -> Result<Self, ArithError> {
        if o.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn pow(&self, n: i32) -> Result<Self, ArithError> {
        let base = if n < 0 { Self::one(self.ctx()).div(self)? } else { self.clone() };
        let k = n.unsigned_abs();
        Ok(RationalFunction { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Substitute a rational value for variable `i`.
    pub fn substitute(&self, i: usize, value: &Rational) -> Result<Self, ArithError> {
        let d = self.den.substitute(i, value)?;
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Self::new(self.num.substitute(i, value)?, d)
    }

    /// The constant value when this is an element of the base field.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.constant_term() / self.den.constant_term())
        } else {
            None
        }
    }

    /// Cross-multiplication equality, independent of normal form.
    pub fn cross_eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            if p.num_terms() > 1 || (!p.is_constant() && !p.leading_coefficient().is_one()) {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
