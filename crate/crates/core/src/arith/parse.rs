//! Recursive-descent parser for polynomial and rational-function text.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary (('*'|'/') unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' '-'? int)?`,
//! `atom := int | ident | '(' expr ')'`.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::gcd::exact_divide;
use super::poly::{Polynomial, Rational, VarContext};
use super::ratfun::RationalFunction;
use super::ArithError;

trait Target: Sized + Clone {
    fn constant(ctx: &VarContext, c: Rational) -> Self;
    fn var(ctx: &VarContext, i: usize) -> Self;
    fn add(&self, o: &Self) -> Result<Self, ArithError>;
    fn sub(&self, o: &Self) -> Result<Self, ArithError>;
    fn mul(&self, o: &Self) -> Result<Self, ArithError>;
    fn div(&self, o: &Self) -> Result<Self, ArithError>;
    fn pow(&self, n: i32) -> Result<Self, ArithError>;
    fn neg(&self) -> Self;
}

impl Target for Polynomial {
    fn constant(ctx: &VarContext, c: Rational) -> Self {
        Polynomial::constant(ctx, c)
    }
    fn var(ctx: &VarContext, i: usize) -> Self {
        Polynomial::var(ctx, i)
    }
    fn add(&self, o: &Self) -> Result<Self, ArithError> {
        Ok(self + o)
    }
    fn sub(&self, o: &Self) -> Result<Self, ArithError> {
        Ok(self - o)
    }
    fn mul(&self, o: &Self) -> Result<Self, ArithError> {
        Ok(self * o)
    }
    fn div(&self, o: &Self) -> Result<Self, ArithError> {
        exact_divide(self, o)?.ok_or(ArithError::NotExact)
    }
    fn pow(&self, n: i32) -> Result<Self, ArithError> {
        let p = Polynomial::pow(self, n.unsigned_abs());
        if n >= 0 {
            Ok(p)
        } else {
            Target::div(&Polynomial::one(self.ctx()), &p)
        }
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Target for RationalFunction {
    fn constant(ctx: &VarContext, c: Rational) -> Self {
        RationalFunction::from_poly(Polynomial::constant(ctx, c))
    }
    fn var(ctx: &VarContext, i: usize) -> Self {
        RationalFunction::from_poly(Polynomial::var(ctx, i))
    }
    fn add(&self, o: &Self) -> Result<Self, ArithError> {
        RationalFunction::add(self, o)
    }
    fn sub(&self, o: &Self) -> Result<Self, ArithError> {
        RationalFunction::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Result<Self, ArithError> {
        RationalFunction::mul(self, o)
    }
    fn div(&self, o: &Self) -> Result<Self, ArithError> {
        RationalFunction::div(self, o)
    }
    fn pow(&self, n: i32) -> Result<Self, ArithError> {
        RationalFunction::pow(self, n)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ArithError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(s[start..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ArithError::Parse { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a VarContext,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ArithError> {
        Err(ArithError::Parse { pos: self.here(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn located<T>(&self, at: usize, r: Result<T, ArithError>) -> Result<T, ArithError> {
        r.map_err(|e| match e {
            ArithError::Parse { .. } => e,
            other => ArithError::Parse { pos: at, msg: other.to_string() },
        })
    }

    fn expr<T: Target>(&mut self) -> Result<T, ArithError> {
        let mut acc = self.term::<T>()?;
        loop {
            let at = self.here();
            if self.eat('+') {
                let rhs = self.term::<T>()?;
                acc = self.located(at, acc.add(&rhs))?;
            } else if self.eat('-') {
                let rhs = self.term::<T>()?;
                acc = self.located(at, acc.sub(&rhs))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<T: Target>(&mut self) -> Result<T, ArithError> {
        let mut acc = self.unary::<T>()?;
        loop {
            let at = self.here();
            if self.eat('*') {
                let rhs = self.unary::<T>()?;
                acc = self.located(at, acc.mul(&rhs))?;
            } else if self.eat('/') {
                let rhs = self.unary::<T>()?;
                acc = self.located(at, acc.div(&rhs))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<T: Target>(&mut self) -> Result<T, ArithError> {
        if self.eat('-') {
            Ok(self.unary::<T>()?.neg())
        } else {
            self.power()
        }
    }

    fn power<T: Target>(&mut self) -> Result<T, ArithError> {
        let base = self.atom::<T>()?;
        let at = self.here();
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let n = match self.peek() {
            Some(Tok::Int(n)) => {
                let n: i32 = match i32::try_from(n.clone()) {
                    Ok(v) => v,
                    Err(_) => return self.err("exponent out of range"),
                };
                self.pos += 1;
                if neg {
                    -n
                } else {
                    n
                }
            }
            _ => return self.err("expected integer exponent"),
        };
        self.located(at, base.pow(n))
    }

    fn atom<T: Target>(&mut self) -> Result<T, ArithError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(T::constant(self.ctx, Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => match self.ctx.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(T::var(self.ctx, i))
                }
                None => self.err(format!("unknown variable `{name}`")),
            },
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr::<T>()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_with<T: Target>(ctx: &VarContext, s: &str) -> Result<T, ArithError> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0, end: s.len(), ctx };
    let v = p.expr::<T>()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parse polynomial text; `/` is allowed only when the division is exact.
pub fn parse_polynomial(ctx: &VarContext, s: &str) -> Result<Polynomial, ArithError> {
    parse_with(ctx, s)
}

pub fn parse_rational_function(ctx: &VarContext, s: &str) -> Result<RationalFunction, ArithError> {
    parse_with(ctx, s)
}

/// Parse `p`, `-p` or `p/q` with integer `p`, `q`.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let ctx = VarContext::polynomial::<&str>(&[]);
    let p = parse_polynomial(&ctx, s)?;
    Ok(p.constant_term())
}

/// Identifiers occurring in `s`, in natural order.
pub fn collect_identifiers(s: &str) -> Result<Vec<String>, ArithError> {
    let set: BTreeSet<String> = tokenize(s)?
        .into_iter()
        .filter_map(|(_, t)| match t {
            Tok::Ident(n) => Some(n),
            _ => None,
        })
        .collect();
    let mut v: Vec<String> = set.into_iter().collect();
    v.sort_by(|a, b| natural_order(a, b));
    Ok(v)
}

/// Order names by alphabetic prefix, then numeric suffix (`x2 < x10`).
pub fn natural_order(a: &str, b: &str) -> std::cmp::Ordering {
    fn split(s: &str) -> (&str, Option<u64>) {
        let cut = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        (&s[..cut], s[cut..].parse().ok())
    }
    split(a).cmp(&split(b)).then_with(|| a.cmp(b))
}
