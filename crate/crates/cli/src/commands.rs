//! Argument parsing and subcommand dispatch.

use std::path::PathBuf;

use bidlab_core::arith::{collect_identifiers, natural_order, parse_polynomial, VarContext};
use bidlab_core::bid::witness_search;
use bidlab_core::construction_a::verify_remark_triple;
use bidlab_core::ideal::{
    classify_finiteness, intersect_principals, is_gv, is_trace_ideal, v_closure, w_closure, xi_closure_with,
    FilterKind, IdealFilter, MonoidRingCtx, MonomialIdeal, TraceCatalogue, Window,
};
use bidlab_core::km::{km_intersection_probe, KmElement, KmGrid};
use bidlab_core::krull::{bounded_intersection_oracle, classify_even_intersection, oracle_agrees, EvenElement};
use bidlab_core::monoid::{Exp, ExpVec, ExponentMonoid};
use bidlab_core::rif::{
    cic_escape_probe, in_ambient, integrality_witness, rif_member, rif_member_brute, sbid_witness_family, RifMonomial,
    RifRing,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::report::{render_text, run_report, Bounds, Status, Suite};
use crate::spec::{parse_ring_spec, RingSpec, SpecError};

#[derive(Debug, Parser)]
#[command(name = "bidlab", version, about = "Exact experiments on intersections of principal ideals")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Window bound on exponent coordinates (or the command's own size parameter).
    #[arg(long, global = true, value_parser = parse_exp_arg, allow_negative_numbers = true)]
    pub bound: Option<Exp>,
    /// Largest denominator scanned in rational exponent windows.
    #[arg(long, global = true)]
    pub denominator_cap: Option<i64>,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Ring specification as a JSON document, or `@path` to read one from a file.
    #[arg(long, global = true)]
    pub ring: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClosureOp {
    V,
    T,
    W,
    Xi,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of an intersection of principal ideals.
    Intersect { exponents: Vec<String> },
    /// Closure of a monomial ideal, or membership of one exponent.
    Closure {
        #[arg(long, value_enum)]
        op: ClosureOp,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        ideal: Vec<String>,
        #[arg(long, allow_negative_numbers = true)]
        x: Option<String>,
    },
    /// Trace of a monomial ideal.
    Trace {
        #[arg(long, num_args = 1.., required = true)]
        ideal: Vec<String>,
    },
    /// Whether an integral monomial ideal is Glaz-Vasconcelos.
    Gv {
        #[arg(long, num_args = 1.., required = true)]
        ideal: Vec<String>,
    },
    /// Finiteness verdict for an intersection of principal ideals.
    Classify { exponents: Vec<String> },
    /// Classify every pairwise incomparable tuple in the window.
    WitnessSearch {
        #[arg(long, default_value_t = 2)]
        tuple_size: usize,
    },
    /// Even-degree polynomial rings.
    Krull {
        #[command(subcommand)]
        command: KrullCommand,
    },
    /// The ring A built from D(z) and D[z].
    ConstructionA {
        #[command(subcommand)]
        command: ConstructionACommand,
    },
    /// The ring k + Y·k(X)[Y]_(Y).
    Km {
        #[command(subcommand)]
        command: KmCommand,
    },
    /// Rings R(I, F).
    Rif {
        #[command(subcommand)]
        command: RifCommand,
    },
    /// Run a named battery of checks.
    Report {
        #[arg(long)]
        suite: String,
        /// Also write the structured document here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum KrullCommand {
    Classify {
        /// Variable names; defaults to those occurring in the inputs.
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
        #[arg(required = true)]
        polynomials: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructionACommand {
    Verify {
        #[arg(long, default_value_t = 10)]
        cap: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum KmCommand {
    Probe {
        #[arg(long, default_value = "Y")]
        a1: String,
        #[arg(long, default_value = "Y*X")]
        a2: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum RifCommand {
    /// Membership of monomials written `k:alpha`, e.g. `2:(1,1)`.
    Member {
        #[arg(required = true)]
        monomials: Vec<String>,
    },
    /// Pairwise non-redundant members of `(a₁) ∩ … ∩ (aₙ)`.
    Witness {
        #[arg(required = true)]
        monomials: Vec<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Least `n` with `d·xⁿ` outside the ring.
    Escape {
        #[arg(long)]
        d: String,
        #[arg(long)]
        x: String,
    },
    /// An element integral over the ring but not in it.
    Integral,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_exp_arg(s: &str) -> Result<Exp, String> {
    match s.parse::<ExpVec>() {
        Ok(v) if v.dim() == 1 => Ok(v.0[0]),
        _ => Err(format!("expected a rational number, got {s:?}")),
    }
}

/// Result of one command: a structured value, its text rendering, and
/// whether every check it ran passed.
#[derive(Debug, Clone)]
pub struct Output {
    pub value: Value,
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(value: Value, text: String) -> Self {
        Output { value, text, passed: true }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Structured => serde_json::to_string_pretty(&self.value).expect("serializable") + "\n",
        }
    }
}

fn ring_spec(c: &Common) -> Result<RingSpec, CliError> {
    let Some(text) = &c.ring else {
        return Err(usage("this command needs --ring"));
    };
    let text = match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?,
        None => text.clone(),
    };
    Ok(parse_ring_spec(&text)?)
}

fn default_cap(m: &ExponentMonoid) -> i64 {
    match m {
        ExponentMonoid::RootFamily { .. } => 81,
        _ => 1,
    }
}

fn monoid_ring(c: &Common) -> Result<(MonoidRingCtx, Window), CliError> {
    let ctx = ring_spec(c)?.ctx()?;
    let cap = c.denominator_cap.unwrap_or_else(|| default_cap(&ctx.monoid));
    let w = Window::new(c.bound.unwrap_or_else(|| Exp::from_integer(12)), cap);
    Ok((ctx, w))
}

fn exps(ctx: &MonoidRingCtx, items: &[String]) -> Result<Vec<ExpVec>, CliError> {
    if items.is_empty() {
        return Err(usage("expected at least one exponent"));
    }
    items
        .iter()
        .map(|s| {
            let v: ExpVec = s.parse().map_err(usage)?;
            if v.dim() != ctx.dim() {
                return Err(usage(format!("{s} has dimension {}, the ring has {}", v.dim(), ctx.dim())));
            }
            Ok(v)
        })
        .collect()
}

fn list(v: &[ExpVec]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn filter_generators(f: &IdealFilter, w: &Window) -> (Vec<ExpVec>, bool) {
    match &f.kind {
        FilterKind::AnyOf(g) => (g.clone(), f.exact),
        FilterKind::AllOf(_) => {
            let g = f.minimal_generators_auto(w);
            (g.gens, g.complete)
        }
    }
}

fn parse_rif_monomial(s: &str) -> Result<RifMonomial, CliError> {
    let (k, alpha) = s.split_once(':').ok_or_else(|| usage(format!("expected k:alpha, got {s:?}")))?;
    let k: i64 = k.trim().parse().map_err(|_| usage(format!("bad power of a in {s:?}")))?;
    Ok(RifMonomial::new(k, alpha.parse().map_err(usage)?))
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let c = &cli.common;
    match &cli.command {
        Command::Intersect { exponents } => {
            let (ctx, w) = monoid_ring(c)?;
            let f = intersect_principals(&ctx, &exps(&ctx, exponents)?).map_err(usage)?;
            let g = f.minimal_generators_up_to(&w);
            Ok(Output::ok(
                json!({ "intersection": f.provenance.to_string(), "generators": g.gens, "complete": g.complete, "window": w.describe() }),
                format!("{}\ngenerators: {}\ncomplete: {}", f.provenance, list(&g.gens), g.complete),
            ))
        }
        Command::Classify { exponents } => {
            let (ctx, w) = monoid_ring(c)?;
            let f = intersect_principals(&ctx, &exps(&ctx, exponents)?).map_err(usage)?;
            let v = classify_finiteness(&f, &w).map_err(usage)?;
            let text = format!("{}: {}\n{}", f.provenance, v.label(), serde_json::to_string(&v).expect("serializable"));
            let passed = !v.is_inconclusive();
            Ok(Output { value: json!({ "verdict": v, "window": w.describe() }), text, passed })
        }
        Command::Closure { op, ideal, x } => closure(c, *op, ideal, x.as_deref()),
        Command::Trace { ideal } => {
            let (ctx, w) = monoid_ring(c)?;
            let i = MonomialIdeal::new(&ctx, &exps(&ctx, ideal)?).map_err(usage)?;
            let t = is_trace_ideal(&i, &w);
            Ok(Output::ok(
                json!({ "ideal": i.generators(), "trace": t.trace, "is_trace": t.is_trace, "exact": t.exact }),
                format!("Tr({}) = ({})\ntrace ideal: {}\nexact: {}", list(i.generators()), list(&t.trace), t.is_trace, t.exact),
            ))
        }
        Command::Gv { ideal } => {
            let (ctx, w) = monoid_ring(c)?;
            let i = MonomialIdeal::new(&ctx, &exps(&ctx, ideal)?).map_err(usage)?;
            let g = is_gv(&i, &w).map_err(usage)?;
            Ok(Output::ok(
                json!({ "ideal": i.generators(), "is_gv": g.is_gv, "witness": g.witness, "inverse_generators": g.inverse_generators, "exact": g.exact }),
                format!(
                    "GV: {}\ninverse generators: {}\nwitness outside D: {}",
                    g.is_gv,
                    list(&g.inverse_generators),
                    g.witness.map(|v| v.to_string()).unwrap_or_else(|| "none".into())
                ),
            ))
        }
        Command::WitnessSearch { tuple_size } => {
            let (ctx, w) = monoid_ring(c)?;
            let r = witness_search(&ctx, *tuple_size, &w).map_err(usage)?;
            let mut text = format!(
                "{}: {} tuples, {} violations, {} not finitely generated, {} inconclusive",
                r.ring,
                r.tuples_examined,
                r.violations.len(),
                r.not_fg,
                r.inconclusive.len()
            );
            for v in r.violations.iter().take(10) {
                text += &format!("\n  ({}) {:?} {}", list(&v.tuple), v.kind, v.verdict.label());
            }
            Ok(Output::ok(serde_json::to_value(&r).expect("serializable"), text))
        }
        Command::Krull { command: KrullCommand::Classify { vars, polynomials } } => krull(c, vars.as_deref(), polynomials),
        Command::ConstructionA { command: ConstructionACommand::Verify { cap } } => {
            let r = verify_remark_triple(*cap).map_err(usage)?;
            let mut text = String::new();
            for ch in &r.checks {
                text += &format!("{} {} ({} calls): {}\n", if ch.passed { "PASS" } else { "FAIL" }, ch.name, ch.calls, ch.detail);
            }
            text += &format!("overall: {}", if r.passed { "PASS" } else { "FAIL" });
            Ok(Output { value: serde_json::to_value(&r).expect("serializable"), text, passed: r.passed })
        }
        Command::Km { command: KmCommand::Probe { a1, a2 } } => {
            let a1 = KmElement::parse(a1).map_err(usage)?;
            let a2 = KmElement::parse(a2).map_err(usage)?;
            let mut grid = KmGrid::default();
            if let Some(b) = c.bound {
                let h = b.floor().to_integer() as i32;
                grid.h_min = -h;
                grid.h_max = h;
                grid.h_star = h + 2;
            }
            let r = km_intersection_probe(&a1, &a2, &grid).map_err(usage)?;
            let text = format!(
                "I = ({}) ∩ ({})\nf in I iff f/a1 in m on {} samples: {}\na1 outside I: {}\na1*Y*X^h in I for h in [{}, {}]: {}\nrefutation at h* = {}: {}\noverall: {}",
                r.a1, r.a2, r.samples, r.divided_by_a1_is_m, r.a1_outside, grid.h_min, grid.h_max, r.y_multiples_inside,
                r.h_star, r.refutation, if r.passed { "PASS" } else { "FAIL" }
            );
            Ok(Output { value: serde_json::to_value(&r).expect("serializable"), text, passed: r.passed })
        }
        Command::Rif { command } => rif(c, command),
        Command::Report { suite, output } => {
            let suite = Suite::parse(suite)
                .ok_or_else(|| usage(format!("unknown suite {suite:?}; expected paper-examples or properties")))?;
            let b = Bounds { bound: c.bound, denominator_cap: c.denominator_cap, seed: c.seed };
            let doc = run_report(suite, &b);
            let value = serde_json::to_value(&doc).expect("serializable");
            if let Some(path) = output {
                std::fs::write(path, serde_json::to_string_pretty(&value).expect("serializable") + "\n")
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            let passed = doc.body.passed && doc.body.checks.iter().all(|o| o.status == Status::Pass);
            Ok(Output { value, text: render_text(&doc), passed })
        }
    }
}

fn closure(c: &Common, op: ClosureOp, ideal: &[String], x: Option<&str>) -> Result<Output, CliError> {
    let (ctx, w) = monoid_ring(c)?;
    let i = MonomialIdeal::new(&ctx, &exps(&ctx, ideal)?).map_err(usage)?;
    let x = x.map(|s| exps(&ctx, &[s.to_string()]).map(|mut v| v.remove(0))).transpose()?;
    let cat = (op == ClosureOp::Xi).then(|| TraceCatalogue::build(&ctx, &w, 2));
    let name = match op {
        ClosureOp::V => "v",
        ClosureOp::T => "t",
        ClosureOp::W => "w",
        ClosureOp::Xi => "xi",
    };
    // For a finitely generated ideal the t- and v-closures agree.
    let vf = matches!(op, ClosureOp::V | ClosureOp::T).then(|| v_closure(&i, &w));
    let member = |p: &ExpVec| -> (bool, Option<Vec<ExpVec>>) {
        match op {
            ClosureOp::V | ClosureOp::T => (vf.as_ref().expect("built").contains(p), None),
            ClosureOp::W => {
                let r = w_closure(&i, p, &w);
                (r.member, r.witness.map(|j| j.generators().to_vec()))
            }
            ClosureOp::Xi => {
                let r = xi_closure_with(cat.as_ref().expect("built"), &i, p);
                (r.member, r.witness.map(|j| j.generators().to_vec()))
            }
        }
    };
    let head = format!("({})_{name}", list(i.generators()));
    if let Some(x) = x {
        let (m, wit) = member(&x);
        let text = format!(
            "{x} in {head}: {m}{}",
            wit.as_ref().map(|j| format!("\nwitness J = ({})", list(j))).unwrap_or_default()
        );
        return Ok(Output::ok(json!({ "op": name, "ideal": i.generators(), "x": x, "member": m, "witness": wit }), text));
    }
    let members: Vec<ExpVec> = ctx
        .monoid
        .enumerate_up_to(w.bound, w.denominator_cap)
        .into_iter()
        .filter(|p| member(p).0)
        .collect();
    let gens = ctx.reduce(&members);
    let mut value = json!({ "op": name, "ideal": i.generators(), "window": w.describe(), "window_generators": gens });
    if let Some(vf) = &vf {
        let (g, exact) = filter_generators(vf, &w);
        value["generators"] = json!(g);
        value["exact"] = json!(exact);
    }
    let text = format!("{head} on {}: minimal members ({})", w.describe(), list(&gens));
    Ok(Output::ok(value, text))
}

fn krull(c: &Common, vars: Option<&[String]>, polys: &[String]) -> Result<Output, CliError> {
    let names: Vec<String> = match vars {
        Some(v) => v.to_vec(),
        None => {
            let mut all = Vec::new();
            for p in polys {
                all.extend(collect_identifiers(p).map_err(usage)?);
            }
            all.sort_by(|a, b| natural_order(a, b));
            all.dedup();
            all
        }
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ctx = VarContext::polynomial(&refs);
    let f: Vec<EvenElement> = polys
        .iter()
        .map(|s| parse_polynomial(&ctx, s).map_err(usage).and_then(|p| EvenElement::new(p).map_err(usage)))
        .collect::<Result<_, _>>()?;
    let v = classify_even_intersection(&f).map_err(usage)?;
    let max_deg = f.iter().filter_map(|e| e.poly().total_degree()).max().unwrap_or(0) as u32;
    let degree = c.bound.map(|b| b.floor().to_integer().max(0) as u32).unwrap_or(6).max(max_deg);
    let mut value = json!({ "verdict": v });
    let mut text = format!("{}\n{}", v.label(), serde_json::to_string(&v).expect("serializable"));
    let mut passed = true;
    if f.iter().all(|e| e.poly().is_homogeneous()) {
        let pieces = bounded_intersection_oracle(&f, degree).map_err(usage)?;
        let a = oracle_agrees(&v, &pieces);
        passed = a.agrees;
        text += &format!("\noracle to degree {degree}: {} ({})", if a.agrees { "agrees" } else { "DISAGREES" }, a.detail);
        value["oracle"] = json!({ "degree": degree, "agrees": a.agrees, "detail": a.detail,
            "dimensions": pieces.iter().map(|p| json!([p.degree, p.basis.len()])).collect::<Vec<_>>() });
    }
    Ok(Output { value, text, passed })
}

fn rif(c: &Common, command: &RifCommand) -> Result<Output, CliError> {
    let d: RifRing = ring_spec(c)?.rif_ring()?;
    match command {
        RifCommand::Member { monomials } => {
            let mut rows = Vec::new();
            let mut text = d.describe();
            let mut passed = true;
            for s in monomials {
                let m = parse_rif_monomial(s)?;
                if !in_ambient(&d, &m) {
                    return Err(usage(format!("{m} is not a monomial of the ambient ring")));
                }
                let closed = rif_member(&d, &m);
                let brute = rif_member_brute(&d, &m);
                passed &= closed == brute;
                text += &format!("\n{m}: {closed}{}", if closed == brute { "" } else { " (brute force disagrees)" });
                rows.push(json!({ "monomial": m.to_string(), "member": closed, "brute": brute }));
            }
            Ok(Output { value: json!({ "ring": d.describe(), "results": rows }), text, passed })
        }
        RifCommand::Witness { monomials, count } => {
            let a: Vec<RifMonomial> = monomials.iter().map(|s| parse_rif_monomial(s)).collect::<Result<_, _>>()?;
            let w = sbid_witness_family(&d, &a, *count).map_err(usage)?;
            let text = format!(
                "{}\nproduct {}, t = {}\n{} members, {} membership checks, {} non-redundant pairs:\n  {}",
                w.ring,
                w.product,
                w.t,
                w.elements.len(),
                w.membership_checks,
                w.non_redundant_pairs,
                w.elements.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n  ")
            );
            Ok(Output::ok(serde_json::to_value(&w).expect("serializable"), text))
        }
        RifCommand::Escape { d: dm, x } => {
            let dm = parse_rif_monomial(dm)?;
            let x = parse_rif_monomial(x)?;
            let n_max = c.bound.map(|b| b.floor().to_integer().max(0) as u32).unwrap_or(50);
            let n = cic_escape_probe(&d, &dm, &x, n_max).map_err(usage)?;
            let text = match n {
                Some(n) => format!("{dm}*({x})^{n} is outside {}", d.describe()),
                None => format!("no escape up to n = {n_max}"),
            };
            Ok(Output { value: json!({ "d": dm.to_string(), "x": x.to_string(), "n_max": n_max, "escape": n }), text, passed: n.is_some() })
        }
        RifCommand::Integral => {
            let w = integrality_witness(&d);
            let text = match &w {
                Some(w) => format!("{} satisfies an integral equation of degree {} and lies outside the ring", w.element, w.e),
                None => "none: the ring is completely integrally closed in its monomials".into(),
            };
            Ok(Output::ok(json!({ "ring": d.describe(), "witness": w }), text))
        }
    }
}
