//! Exact division and multivariate gcd by primitive polynomial remainder sequences.

use std::collections::BTreeMap;

use num_traits::One;

use super::poly::{Monomial, Polynomial, Rational};
use super::ArithError;

/// Multiply by `x^shift` on every Laurent variable.
fn shift(p: &Polynomial, shift: &[i32]) -> Polynomial {
    p.mul_monomial(&Monomial(shift.to_vec()), &Rational::one())
}

/// Exponent shift that clears negative (and superfluous positive) powers of
/// the Laurent variables; zero on ordinary variables.
fn laurent_floor(p: &Polynomial) -> Vec<i32> {
    let ctx = p.ctx();
    (0..ctx.len())
        .map(|i| {
            if ctx.is_laurent(i) {
                p.min_degree_in(i).unwrap_or(0)
            } else {
                0
            }
        })
        .collect()
}

/// Returns `r` with `q·r = p` if such an element exists in the (partially
/// Laurent) polynomial ring of the common context.
pub fn exact_divide(p: &Polynomial, q: &Polynomial) -> Result<Option<Polynomial>, ArithError> {
    p.same_ctx(q)?;
    if q.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    if p.is_zero() {
        return Ok(Some(Polynomial::zero(p.ctx())));
    }
    // Write p = x^mp·p', q = x^mq·q' with p', q' ordinary polynomials not
    // divisible by any Laurent variable. The lowest x-part of a product is the
    // product of lowest parts, so any Laurent quotient of p' by q' is an
    // ordinary polynomial.
    let mp = laurent_floor(p);
    let mq = laurent_floor(q);
    let neg = |v: &[i32]| v.iter().map(|e| -e).collect::<Vec<_>>();
    let pn = shift(p, &neg(&mp));
    let qn = shift(q, &neg(&mq));
    let r = match poly_divide(&pn, &qn) {
        Some(r) => r,
        None => return Ok(None),
    };
    let diff: Vec<i32> = mp.iter().zip(&mq).map(|(a, b)| a - b).collect();
    Ok(Some(shift(&r, &diff)))
}

/// Division in the ordinary polynomial ring by leading-term reduction.
fn poly_divide(p: &Polynomial, q: &Polynomial) -> Option<Polynomial> {
    let (lq_m, lq_c) = q.leading_term()?;
    let (lq_m, lq_inv) = (lq_m.clone(), lq_c.recip());
    let mut rem = p.clone();
    let mut quot = Polynomial::zero(p.ctx());
    while let Some((lm, lc)) = rem.leading_term() {
        let m = lm.div(&lq_m);
        if m.0.iter().any(|&e| e < 0) {
            return None;
        }
        let c = lc * &lq_inv;
        rem.sub_scaled(q, &m, &c);
        quot = &quot + &Polynomial::one(p.ctx()).mul_monomial(&m, &c);
    }
    Some(quot)
}

fn univariate(p: &Polynomial, v: usize) -> BTreeMap<i32, Polynomial> {
    p.coefficients_in(v)
}

fn lead_in(p: &Polynomial, v: usize) -> (i32, Polynomial) {
    let coeffs = univariate(p, v);
    let (d, c) = coeffs.into_iter().next_back().expect("nonzero polynomial");
    (d, c)
}

fn var_power(p: &Polynomial, v: usize, d: i32) -> Monomial {
    let mut e = vec![0; p.ctx().len()];
    e[v] = d;
    Monomial(e)
}

/// Pseudo-remainder of `a` by `b` with respect to variable `v`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let (db, lb) = lead_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() {
        let (dr, lr) = lead_in(&r, v);
        if dr < db {
            break;
        }
        let shifted = b.mul_monomial(&var_power(b, v, dr - db), &Rational::one());
        r = &(&lb * &r) - &(&lr * &shifted);
    }
    r
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.ctx());
    for c in univariate(p, v).values() {
        g = gcd_rec(&g, c);
        if g.is_constant() {
            break;
        }
    }
    g
}

fn primitive_in(p: &Polynomial, v: usize) -> Polynomial {
    let c = content_in(p, v);
    poly_divide(p, &c).expect("content divides")
}

fn gcd_rec(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let ctx = p.ctx();
    if p.is_zero() {
        return q.primitive_normalized();
    }
    if q.is_zero() {
        return p.primitive_normalized();
    }
    let v = match (0..ctx.len()).find(|&i| p.involves(i) || q.involves(i)) {
        Some(v) => v,
        None => return Polynomial::one(ctx),
    };
    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let cont = gcd_rec(&cp, &cq);
    let mut a = poly_divide(p, &cp).expect("content divides");
    let mut b = poly_divide(q, &cq).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.degree_in(v) == Some(0) {
            // b is primitive in v and free of v, hence a constant.
            a = Polynomial::one(ctx);
            break;
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        // Content over Q is a unit, so strip the numeric content as well.
        b = if r.is_zero() { r } else { primitive_in(&r, v).primitive_normalized() };
    }
    (&cont * &primitive_in(&a, v)).primitive_normalized()
}

/// Primitive gcd with integer coefficients and positive leading coefficient.
pub fn multivar_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, ArithError> {
    p.same_ctx(q)?;
    if p.ctx().has_laurent() {
        return Err(ArithError::Unsupported("gcd over Laurent variables".into()));
    }
    if p.is_zero() && q.is_zero() {
        return Err(ArithError::Unsupported("gcd(0, 0)".into()));
    }
    Ok(gcd_rec(p, q))
}

/// `p·q / gcd(p, q)`, normalized like the gcd.
pub fn lcm(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, ArithError> {
    if p.is_zero() || q.is_zero() {
        return Ok(Polynomial::zero(p.ctx()));
    }
    let g = multivar_gcd(p, q)?;
    let prod = p * q;
    let l = exact_divide(&prod, &g)?.ok_or(ArithError::NotExact)?;
    Ok(l.primitive_normalized())
}
