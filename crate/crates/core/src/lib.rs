//! Exact ideal calculus for Bezout intersection domains: monoid rings,
//! fractional monomial ideals and their closures, and the polynomial
//! constructions built on top of them.

pub mod arith;
pub mod ideal;
pub mod monoid;
pub mod bid;
pub mod krull;
pub mod construction_a;
pub mod km;
pub mod rif;
