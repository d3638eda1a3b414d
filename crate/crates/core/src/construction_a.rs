//! Membership in `A = D(z) ∩ D[z]_(Q,z)` for fraction-free elements.
//!
//! `D = ⋃ Rₙ` over `x` (Laurent), `y`. A monomial `xⁱyʲ` lies in `D` when
//! `j ∈ ⟨2,3⟩ ∪ {0}` and, for `j = 0`, `i ≥ 0`: a positive power of `y`
//! absorbs any negative power of `x` once `n` is large. `Q = ⋂ xⁿD` is
//! spanned by the monomials with `j ≥ 2`.

use serde::Serialize;

use crate::arith::{exact_divide, int, parse_polynomial, ArithError, Monomial, Polynomial, Var, VarContext};

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("instance cap must be at least 3, got {0}")]
    Cap(u32),
}

/// Variables `x` (Laurent), `y`, `z`.
pub fn context() -> VarContext {
    VarContext::new([Var::laurent("x"), Var::new("y"), Var::new("z")]).expect("distinct names")
}

pub fn element(s: &str) -> Result<Polynomial, ConstructionError> {
    Ok(parse_polynomial(&context(), s)?)
}

fn check_ctx(e: &Polynomial) -> Result<(), ConstructionError> {
    if *e.ctx() != context() {
        return Err(ConstructionError::Domain(format!("{e} is not over x, y, z")));
    }
    Ok(())
}

fn monomial_in_d(i: i32, j: i32) -> bool {
    match j {
        0 => i >= 0,
        1 => false,
        j => j >= 2,
    }
}

/// Monomial-wise membership in `D`. With `ignore_z` the `z`-exponents are
/// disregarded, which tests membership in `D[z]`.
pub fn in_d(e: &Polynomial, ignore_z: bool) -> Result<bool, ConstructionError> {
    check_ctx(e)?;
    if !ignore_z && e.involves(Z) {
        return Err(ConstructionError::Domain(format!("{e} involves z")));
    }
    Ok(e.terms().all(|(m, _)| monomial_in_d(m.0[X], m.0[Y])))
}

/// Membership in `Q`; `z` must be absent.
pub fn in_q(e: &Polynomial) -> Result<bool, ConstructionError> {
    check_ctx(e)?;
    if e.involves(Z) {
        return Err(ConstructionError::Domain(format!("{e} involves z")));
    }
    Ok(e.terms().all(|(m, _)| m.0[Y] >= 2))
}

/// `num/den ∈ D[z] ⊆ A` when the quotient exists as a polynomial; other
/// quotients are reported as non-members.
pub fn quotient_in_a(num: &Polynomial, den: &Polynomial) -> Result<bool, ConstructionError> {
    check_ctx(num)?;
    check_ctx(den)?;
    match exact_divide(num, den)? {
        Some(q) => in_d(&q, true),
        None => Ok(false),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    pub calls: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemarkReport {
    pub cap: u32,
    pub w: String,
    pub checks: Vec<NamedCheck>,
    pub passed: bool,
}

impl RemarkReport {
    pub fn failed(&self) -> impl Iterator<Item = &NamedCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub const W: &str = "y^5*z*(z - y^2)*(z - y^3)";
pub const IDEALS: [&str; 3] = ["y^2*z", "y^3*(z - y^2)", "y^5*(z - y^3)"];
pub const C: &str = "z*(z - y^2)";

/// One family member `c·yᵖ/xᵏ`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Member {
    power: i32,
    depth: i32,
    value: Polynomial,
}

/// Check the triple intersection `(y²z) ∩ (y³(z−y²)) ∩ (y⁵(z−y³))` with
/// the standard `w`.
pub fn verify_remark_triple(cap: u32) -> Result<RemarkReport, ConstructionError> {
    verify_remark_triple_with(&element(W)?, cap)
}

pub fn verify_remark_triple_with(w: &Polynomial, cap: u32) -> Result<RemarkReport, ConstructionError> {
    if cap < 3 {
        return Err(ConstructionError::Cap(cap));
    }
    let ctx = context();
    let ideals: Vec<Polynomial> = IDEALS.iter().map(|s| element(s)).collect::<Result<_, _>>()?;
    let c = element(C)?;
    let mut checks = Vec::new();

    // (1) w in each principal ideal.
    let mut failed = Vec::new();
    for (k, a) in ideals.iter().enumerate() {
        if !quotient_in_a(w, a)? {
            failed.push(format!("w not in ({}) [ideal {}]", IDEALS[k], k + 1));
        }
    }
    checks.push(NamedCheck {
        name: "w-in-all-three".into(),
        passed: failed.is_empty(),
        calls: ideals.len(),
        detail: if failed.is_empty() { format!("{w} lies in all three ideals") } else { failed.join("; ") },
    });

    // (2) c = w / (y^5 (z - y^3)) is outside (x) and outside Q-extended form.
    let x = Polynomial::var(&ctx, X);
    let in_x = quotient_in_a(&c, &x)?;
    let zero_x = c.terms().any(|(m, _)| m.0[X] == 0);
    let outside_q = c
        .coefficients_in(Z)
        .values()
        .map(in_q)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .any(|b| !b);
    let ok2 = !in_x && zero_x && outside_q;
    checks.push(NamedCheck {
        name: "quotient-outside-x".into(),
        passed: ok2,
        calls: 1,
        detail: format!("c = {c}: in (x) = {in_x}, x-exponent 0 monomial = {zero_x}, z-coefficient outside Q = {outside_q}"),
    });

    // (3) c·y^5/x^k and c·y^6/x^k lie in the first two ideals.
    let mut members = Vec::new();
    for k in 0..=cap as i32 {
        for p in [5, 6] {
            let mut e = vec![0; 3];
            e[X] = -k;
            e[Y] = p;
            members.push(Member {
                power: p,
                depth: k,
                value: c.mul_monomial(&Monomial(e), &int(1)),
            });
        }
    }
    let mut bad = Vec::new();
    for m in &members {
        for (k, a) in ideals[..2].iter().enumerate() {
            if !quotient_in_a(&m.value, a)? {
                bad.push(format!("{} not in ({})", m.value, IDEALS[k]));
            }
        }
    }
    checks.push(NamedCheck {
        name: "family-in-first-two".into(),
        passed: bad.is_empty(),
        calls: members.len(),
        detail: if bad.is_empty() {
            format!("{} members c*y^p/x^k, p in {{5, 6}}, k <= {cap}", members.len())
        } else {
            bad.join("; ")
        },
    });

    // (4) No member is divisible by one of smaller depth or by the other
    // y-power: the principal ideals form a strictly ascending chain.
    let mut pairs = 0;
    let mut bad = Vec::new();
    for a in &members {
        for b in &members {
            if a == b || (a.power == b.power && b.depth >= a.depth) {
                continue;
            }
            pairs += 1;
            if quotient_in_a(&a.value, &b.value)? {
                bad.push(format!("({}) divides ({})", b.value, a.value));
            }
        }
    }
    checks.push(NamedCheck {
        name: "irredundancy".into(),
        passed: bad.is_empty(),
        calls: pairs,
        detail: if bad.is_empty() { format!("{pairs} ordered pairs, none divisible") } else { bad.join("; ") },
    });

    let passed = checks.iter().all(|c| c.passed);
    Ok(RemarkReport { cap, w: w.to_string(), checks, passed })
}
