//! The even-degree ring `D = K[{XᵢXⱼ}]` inside `R = K[X₁, …, Xₙ]`.
//!
//! Every `f ∈ R` splits as `f_p + f_d` (even and odd degree parts). For
//! `a₁, …, aₙ ∈ D` the intersection `⋂ aᵢD` is governed by `λ = lcm(aᵢ)` in
//! `R`: it is principal when `λ` is even, and not finitely generated when `λ`
//! is odd, since then every `λ·X` over a fresh variable `X` is a minimal
//! element.

use serde::Serialize;

use crate::arith::{exact_divide, lcm, linalg, ArithError, Monomial, Polynomial, Rational, Var, VarContext};
use crate::ideal::{Certificate, FinitenessVerdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KrullError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not an even element: {0}")]
    NotEven(String),
    #[error("mixed parity lcm {0}")]
    MixedParity(String),
}

/// Polynomial all of whose terms have even total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenElement(Polynomial);

impl EvenElement {
    pub fn new(p: Polynomial) -> Result<Self, KrullError> {
        if p.ctx().has_laurent() {
            return Err(KrullError::NotEven(format!("{p} lives over Laurent variables")));
        }
        if !p.parity_split().1.is_zero() {
            return Err(KrullError::NotEven(p.to_string()));
        }
        Ok(EvenElement(p))
    }

    pub fn poly(&self) -> &Polynomial {
        &self.0
    }
}

pub fn is_even(p: &Polynomial) -> bool {
    p.parity_split().1.is_zero()
}

/// `h' = h_p − h_d`; then `h·h' = h_p² − h_d²` is even. Irreducibility of
/// `h` is not checked.
pub fn companion(h: &Polynomial) -> Result<Polynomial, KrullError> {
    let (p, d) = h.parity_split();
    if p.is_zero() || d.is_zero() {
        return Err(KrullError::Precondition(format!("{h} is not of mixed parity")));
    }
    Ok(&p - &d)
}

/// `a | b` inside `D`: the quotient exists in `R` and is even.
pub fn divides_in_d(a: &Polynomial, b: &Polynomial) -> Result<bool, KrullError> {
    Ok(matches!(exact_divide(b, a)?, Some(q) if is_even(&q)))
}

/// Least common multiple of all inputs in `R`.
pub fn lcm_all(f: &[EvenElement]) -> Result<Polynomial, KrullError> {
    let mut acc = f[0].poly().primitive_normalized();
    for e in &f[1..] {
        acc = lcm(&acc, e.poly())?;
    }
    Ok(acc)
}

/// Names not yet in `ctx`, continuing an `X1, X2, …` pattern when present.
pub fn fresh_names(ctx: &VarContext, count: usize) -> Vec<String> {
    let stem = ctx
        .vars()
        .last()
        .map(|v| v.name.trim_end_matches(|c: char| c.is_ascii_digit()).to_string())
        .filter(|s| !s.is_empty())
        .unwrap_or_else(|| "t".into());
    let mut out = Vec::new();
    let mut k = ctx.len() + 1;
    while out.len() < count {
        let name = format!("{stem}{k}");
        if ctx.index_of(&name).is_none() {
            out.push(name);
        }
        k += 1;
    }
    out
}

pub const FRESH_VARIABLES: usize = 3;

/// Classify `⋂ fᵢD` for pairwise incomparable even elements.
pub fn classify_even_intersection(f: &[EvenElement]) -> Result<FinitenessVerdict<Polynomial>, KrullError> {
    if f.is_empty() {
        return Err(KrullError::Precondition("empty input".into()));
    }
    let ctx = f[0].poly().ctx().clone();
    for (i, a) in f.iter().enumerate() {
        a.poly().same_ctx(f[0].poly())?;
        if a.poly().is_zero() {
            return Err(KrullError::Precondition("zero input".into()));
        }
        for (j, b) in f.iter().enumerate() {
            if i != j && divides_in_d(a.poly(), b.poly())? {
                return Err(KrullError::Precondition(format!("{} divides {} in D", a.poly(), b.poly())));
            }
        }
    }
    let lam = lcm_all(f)?;
    let (even, odd) = lam.parity_split();
    if odd.is_zero() {
        return Ok(FinitenessVerdict::Principal { generator: lam });
    }
    if !even.is_zero() {
        return Err(KrullError::MixedParity(lam.to_string()));
    }
    let names = fresh_names(&ctx, FRESH_VARIABLES);
    let ext = ctx.extended(names.iter().map(|n| Var::new(n.clone())))?;
    let lam_e = lam.embed(&ext)?;
    let lifted: Vec<Polynomial> = f.iter().map(|a| a.poly().embed(&ext)).collect::<Result<_, _>>()?;
    let instances: Vec<Polynomial> = (ctx.len()..ext.len()).map(|n| &lam_e * &Polynomial::var(&ext, n)).collect();
    for (k, inst) in instances.iter().enumerate() {
        for a in &lifted {
            if !divides_in_d(a, inst)? {
                return Err(KrullError::Precondition(format!("certificate instance {inst} not in ({a})")));
            }
        }
        for (j, o) in instances.iter().enumerate() {
            if j != k && divides_in_d(o, inst)? {
                return Err(KrullError::Precondition(format!("certificate instance {inst} is redundant")));
            }
        }
    }
    Ok(FinitenessVerdict::NotFg {
        certificate: Certificate {
            template: format!("({lam})*{}_n for every fresh variable n", names[0].trim_end_matches(|c: char| c.is_ascii_digit())),
            instances,
        },
    })
}

/// Monomials of total degree `d` in `n` variables, ascending graded-lex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, cur: &mut Vec<i32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == n {
            cur.push(d as i32);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=d {
            cur.push(e as i32);
            go(n, d - e, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn coords(p: &Polynomial, basis: &[Monomial]) -> linalg::Row {
    basis.iter().map(|m| p.coefficient(&m.0)).collect()
}

fn from_coords(ctx: &VarContext, basis: &[Monomial], row: &[Rational]) -> Polynomial {
    Polynomial::from_terms(ctx, basis.iter().zip(row).map(|(m, c)| (m.0.clone(), c.clone())))
        .expect("nonnegative exponents")
}

/// Degree-`d` part of the intersection, basis in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub degree: u32,
    pub basis: Vec<Polynomial>,
}

/// `span{a·m : m even monomial of degree d − deg a}` in coordinates.
fn multiples_span(a: &Polynomial, d: u32, basis: &[Monomial]) -> Vec<linalg::Row> {
    let da = a.total_degree().unwrap_or(0) as u32;
    if da > d || !(d - da).is_multiple_of(2) {
        return Vec::new();
    }
    let n = a.ctx().len();
    monomials_of_degree(n, d - da)
        .iter()
        .map(|m| coords(&a.mul_monomial(m, &Rational::from_integer(1.into())), basis))
        .collect()
}

/// Degree-by-degree linear algebra for `⋂ fᵢD` up to `degree_bound`, for
/// homogeneous inputs. Only even degrees can be nonzero.
pub fn bounded_intersection_oracle(f: &[EvenElement], degree_bound: u32) -> Result<Vec<GradedPiece>, KrullError> {
    if f.is_empty() {
        return Err(KrullError::Precondition("empty input".into()));
    }
    if let Some(a) = f.iter().find(|a| !a.poly().is_homogeneous()) {
        return Err(KrullError::Precondition(format!("{} is not homogeneous", a.poly())));
    }
    let max_deg = f.iter().filter_map(|a| a.poly().total_degree()).max().unwrap_or(0) as u32;
    if degree_bound < max_deg {
        return Err(KrullError::Precondition("degree bound below an input degree".into()));
    }
    let ctx = f[0].poly().ctx().clone();
    let n = ctx.len();
    let mut out = Vec::new();
    for d in (0..=degree_bound).step_by(2) {
        let basis = monomials_of_degree(n, d);
        let mut acc: Option<Vec<linalg::Row>> = None;
        for a in f {
            let span = linalg::canonical_basis(&multiples_span(a.poly(), d, &basis));
            acc = Some(match acc {
                None => span,
                Some(prev) => linalg::intersect_spans(&prev, &span, basis.len()),
            });
        }
        let rows = acc.unwrap_or_default();
        out.push(GradedPiece { degree: d, basis: rows.iter().map(|r| from_coords(&ctx, &basis, r)).collect() });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub agrees: bool,
    pub detail: String,
}

/// Compare a verdict with oracle pieces: a principal `λ` must generate every
/// piece; a non-finitely-generated verdict must show a lowest nonzero piece
/// of dimension at least two with nothing below it, so no single element
/// generates the intersection.
pub fn oracle_agrees(verdict: &FinitenessVerdict<Polynomial>, pieces: &[GradedPiece]) -> Agreement {
    match verdict {
        FinitenessVerdict::Principal { generator } => {
            let n = generator.ctx().len();
            for p in pieces {
                let basis = monomials_of_degree(n, p.degree);
                let expect = linalg::canonical_basis(&multiples_span(generator, p.degree, &basis));
                let got: Vec<linalg::Row> = p.basis.iter().map(|q| coords(q, &basis)).collect();
                if linalg::canonical_basis(&got) != expect {
                    return Agreement { agrees: false, detail: format!("degree {} differs from multiples of {generator}", p.degree) };
                }
            }
            Agreement { agrees: true, detail: format!("{} pieces are multiples of {generator}", pieces.len()) }
        }
        FinitenessVerdict::NotFg { certificate } => {
            let Some(first) = pieces.iter().find(|p| !p.basis.is_empty()) else {
                return Agreement { agrees: false, detail: "oracle found nothing below the bound".into() };
            };
            let lam_deg = certificate
                .instances
                .first()
                .and_then(|i| i.total_degree())
                .map(|d| d as u32);
            let ok = first.basis.len() >= 2 && lam_deg == Some(first.degree);
            Agreement {
                agrees: ok,
                detail: format!(
                    "lowest nonzero degree {} has dimension {}",
                    first.degree,
                    first.basis.len()
                ),
            }
        }
        other => Agreement { agrees: false, detail: format!("no oracle comparison for {}", other.label()) },
    }
}
