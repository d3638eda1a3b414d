//! Exact arithmetic: rationals, sparse polynomials, gcd, rational functions,
//! a small expression parser and dense linear algebra over ℚ.

mod gcd;
pub mod linalg;
mod parse;
mod poly;
mod ratfun;

pub use gcd::{exact_divide, lcm, multivar_gcd};
pub use parse::{collect_identifiers, natural_order, parse_polynomial, parse_rational_function, parse_rational};
pub use poly::{Monomial, Polynomial, Rational, Var, VarContext};
pub use ratfun::RationalFunction;

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("context error: {0}")]
    Context(String),
    #[error("negative exponent on non-Laurent variable `{0}`")]
    NegativeExponent(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("division is not exact")]
    NotExact,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
