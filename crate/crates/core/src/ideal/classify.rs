use serde::Serialize;

use super::{FilterKind, IdealError, IdealFilter, Window};
use crate::monoid::{fmt_exp, ExpVec, ExponentMonoid};

/// Parametric family of pairwise non-redundant members, with the instances
/// that were actually checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate<G> {
    pub template: String,
    pub instances: Vec<G>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FinitenessVerdict<G> {
    Principal { generator: G },
    FgNonPrincipal { generators: Vec<G> },
    NotFg { certificate: Certificate<G> },
    Inconclusive { bound: String },
}

impl<G> FinitenessVerdict<G> {
    pub fn label(&self) -> &'static str {
        match self {
            FinitenessVerdict::Principal { .. } => "PRINCIPAL",
            FinitenessVerdict::FgNonPrincipal { .. } => "FG_NON_PRINCIPAL",
            FinitenessVerdict::NotFg { .. } => "NOT_FG",
            FinitenessVerdict::Inconclusive { .. } => "INCONCLUSIVE",
        }
    }

    pub fn is_principal(&self) -> bool {
        matches!(self, FinitenessVerdict::Principal { .. })
    }

    pub fn is_fg_non_principal(&self) -> bool {
        matches!(self, FinitenessVerdict::FgNonPrincipal { .. })
    }

    pub fn is_not_fg(&self) -> bool {
        matches!(self, FinitenessVerdict::NotFg { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, FinitenessVerdict::Inconclusive { .. })
    }
}

/// Number of fresh coordinates named in even-degree certificates.
pub const FRESH_INSTANCES: usize = 3;

/// Finiteness of a filter's generating set, judged on `window`.
///
/// Generated filters are finite by construction. Intersections are settled
/// by complete minimal-generator windows, or, in the even-degree ring read
/// with countably many variables, by the join `λ`: when `λ` has odd degree
/// every `λ + eₙ` over fresh coordinates `n` is a minimal element.
pub fn classify_finiteness(f: &IdealFilter, window: &Window) -> Result<FinitenessVerdict<ExpVec>, IdealError> {
    if let (FilterKind::AllOf(exps), ExponentMonoid::EvenDegree { dim }) = (&f.kind, &*f.ctx.monoid) {
        return even_degree_verdict(f, exps, *dim, window);
    }
    let w = f.minimal_generators_up_to(window);
    if !w.complete {
        return Ok(FinitenessVerdict::Inconclusive { bound: window_label(window) });
    }
    match w.gens.len() {
        0 => Err(IdealError::EmptyFilter(f.describe())),
        1 => Ok(FinitenessVerdict::Principal { generator: w.gens[0].clone() }),
        _ => Ok(FinitenessVerdict::FgNonPrincipal { generators: w.gens }),
    }
}

fn window_label(w: &Window) -> String {
    if w.denominator_cap == 1 {
        fmt_exp(&w.bound)
    } else {
        format!("{} (denominator cap {})", fmt_exp(&w.bound), w.denominator_cap)
    }
}

fn even_degree_verdict(
    f: &IdealFilter,
    exps: &[ExpVec],
    dim: usize,
    window: &Window,
) -> Result<FinitenessVerdict<ExpVec>, IdealError> {
    let w = f.minimal_generators_up_to(window);
    let Some(top) = exps.iter().cloned().reduce(|a, b| a.join(&b)) else {
        return Err(IdealError::Precondition("empty intersection list".into()));
    };
    if !w.complete {
        return Ok(FinitenessVerdict::Inconclusive { bound: window_label(window) });
    }
    if w.gens.is_empty() {
        return Err(IdealError::EmptyFilter(f.describe()));
    }
    if w.gens == [top.clone()] {
        return Ok(FinitenessVerdict::Principal { generator: top });
    }
    // Odd join: pass to dim + FRESH_INSTANCES coordinates and check each
    // λ + eₙ over the fresh ones.
    let big = dim + FRESH_INSTANCES;
    let ext = ExponentMonoid::even_degree(big).expect("positive dimension");
    let pad = |v: &ExpVec| {
        let mut c = v.0.clone();
        c.resize(big, 0.into());
        ExpVec(c)
    };
    let lifted: Vec<ExpVec> = exps.iter().map(pad).collect();
    let instances: Vec<ExpVec> = (dim..big)
        .map(|n| {
            let mut v = pad(&top);
            v.0[n] += 1;
            v
        })
        .collect();
    let divides = |a: &ExpVec, b: &ExpVec| ext.divides(a, b).unwrap_or(false);
    for (k, inst) in instances.iter().enumerate() {
        if !lifted.iter().all(|e| divides(e, inst)) {
            return Err(IdealError::Precondition(format!("certificate instance {inst} is not a member")));
        }
        if instances.iter().enumerate().any(|(j, o)| j != k && divides(o, inst)) {
            return Err(IdealError::Precondition(format!("certificate instance {inst} is redundant")));
        }
    }
    Ok(FinitenessVerdict::NotFg {
        certificate: Certificate {
            template: format!("{top} + e_n for each fresh coordinate n > {dim} (countably many variables)"),
            instances,
        },
    })
}
