//! The subcommands. Each produces a list of checks in a deterministic
//! order; independent checks of `report` run on the rayon pool.

use std::sync::Arc;

use cotlab_algmod::{is_injective, is_projective, tor_dim, Algebra, LeftModule, RightModule};
use cotlab_encat::{chain_diagnostic, validate_category, ChainDirection, EnrichedCategory};
use cotlab_functorcat::{
    functor_ext_dim, functor_to_module, induced_p, induced_q, stalk, AddFunctor, AdjunctionHandle, FunctorCategory,
};
use cotlab_instances::{enumerate_functors, enumerate_modules, simple_modules, RingMorInstance};
use cotlab_linalg::FpMatrix;
use cotlab_transfer::{
    classify_functor, is_flat_for, left_derived_dim, omega_map, perp_membership, theta_map, zero_detect,
    ClassSelector, Classification, ObjectEvidence, PerpSelector, PerpVerdict, Side, TransferError, TransferMap,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::document::{Loaded, Setting};
use crate::error::{schema, CliError, Result};
use crate::report::{obj, Check, Status};

/// A parsed subcommand (without the input file).
#[derive(Clone, Debug)]
pub enum Command {
    Validate,
    Classify { side: Side, functor: Option<String> },
    Theta { backend: String, degree: usize, source: String, target: String },
    Perp { selector: PerpSelector, classes: String },
    Enumerate { max_dim: usize, classify: bool },
    Report,
}

pub fn run(cmd: &Command, doc: &Loaded) -> Result<Vec<Check>> {
    match cmd {
        Command::Validate => Ok(validate(doc)),
        Command::Classify { side, functor } => classify(doc, *side, functor.as_deref()),
        Command::Theta { backend, degree, source, target } => {
            let h = handle(doc, backend)?;
            let (c, d) = (left_object(doc, &h, source)?, right_object(doc, &h, target)?);
            Ok(vec![theta_check(&format!("theta.{backend}.{source}.{target}"), &h, *degree, &c, &d)])
        }
        Command::Perp { selector, classes } => perp(doc, *selector, classes),
        Command::Enumerate { max_dim, classify } => enumerate(doc, *max_dim, *classify),
        Command::Report => report(doc),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// A degree as a superscript.
fn sup(k: usize) -> String {
    k.to_string().chars().map(|c| "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().nth(c.to_digit(10).unwrap_or(0) as usize).unwrap_or(c)).collect()
}

fn matrix_json(m: &FpMatrix) -> Value {
    json!((0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn dims_json(ctx: &FunctorCategory, x: &AddFunctor) -> Value {
    Value::Object((0..ctx.object_count()).map(|a| (ctx.object_name(a).to_string(), json!(x.dim(a)))).collect())
}

/// Structure matrices of a functor keyed `"A|B"`, as in input documents.
fn functor_json(x: &AddFunctor) -> Value {
    let ctx = x.ctx();
    let n = ctx.object_count();
    let mut maps = serde_json::Map::new();
    for a in 0..n {
        for b in 0..n {
            if !x.acts()[a][b].is_empty() {
                let key = format!("{}|{}", ctx.object_name(a), ctx.object_name(b));
                maps.insert(key, Value::Array(x.acts()[a][b].iter().map(matrix_json).collect()));
            }
        }
    }
    obj([("dims", dims_json(ctx, x)), ("maps", Value::Object(maps))])
}

// ---------------------------------------------------------------- validate

fn names(cat: &EnrichedCategory, path: &[usize], arrow: &str) -> String {
    path.iter().map(|&a| cat.objects()[a].as_str()).collect::<Vec<_>>().join(arrow)
}

fn category_checks(cat: &EnrichedCategory) -> Vec<Check> {
    let report = validate_category(cat, true);
    let lines = report.describe(cat);
    let axioms = report.is_category();
    let mut out = vec![if axioms {
        Check::pass("category.axioms", "associativity, units and Hom bimodules hold", json!({"failures": []}))
    } else {
        let first = lines.first().cloned().unwrap_or_default();
        Check::fail("category.axioms", first, json!({"failures": lines.clone()}))
    }];
    let o = cat.objects();
    let zt: Vec<String> =
        report.zero_trace_failures.iter().map(|&(a, b)| format!("{} → {} → {}", o[b], o[a], o[b])).collect();
    out.push(if zt.is_empty() {
        Check::pass("category.zeroTrace", "every composite B → A → B with A ≠ B vanishes", json!({"failures": []}))
    } else {
        Check::fail("category.zeroTrace", format!("{} is not zero", zt[0]), json!({"failures": zt}))
    });
    for (dir, label, arrow) in [(ChainDirection::Incoming, "incoming", " ← "), (ChainDirection::Outgoing, "outgoing", " → ")] {
        let d = chain_diagnostic(cat, dir);
        let path = names(cat, &d.witness, arrow);
        out.push(Check::pass(
            format!("category.chainDiagnostic.{label}"),
            format!("longest nonvanishing chain has length {} ({})", d.max_len, if path.is_empty() { "-" } else { &path }),
            json!({"maxLen": d.max_len, "witness": d.witness.iter().map(|&a| o[a].clone()).collect::<Vec<_>>()}),
        ));
    }
    out
}

fn hypothesis_check(ctx: &Arc<FunctorCategory>) -> Check {
    let mut per = serde_json::Map::new();
    let mut parts = Vec::new();
    for a in 0..ctx.object_count() {
        let q = AdjunctionHandle::q_ev(ctx, a).and_then(|h| h.q_exact());
        let p = AdjunctionHandle::ev_p(ctx, a).and_then(|h| h.t_exact());
        match (q, p) {
            (Ok(q), Ok(p)) => {
                parts.push(format!("{}: q {}, p {}", ctx.object_name(a), if q { "exact" } else { "not exact" }, if p {
                    "exact"
                } else {
                    "not exact"
                }));
                per.insert(ctx.object_name(a).to_string(), json!({"qExact": q, "pExact": p}));
            }
            (Err(e), _) | (_, Err(e)) => return Check::error("hypothesis.exactness", e),
        }
    }
    Check::pass("hypothesis.exactness", parts.join("; "), Value::Object(per))
}

fn functor_checks(doc: &Loaded) -> Vec<Check> {
    doc.functors
        .iter()
        .map(|f| match &f.functor {
            Ok(x) => Check::pass(format!("functor.{}", f.name), "functorial", obj([("dims", dims_json(x.ctx(), x))])),
            Err(e) => Check::fail(format!("functor.{}", f.name), e.clone(), obj([("error", json!(e))])),
        })
        .collect()
}

fn ring_mor_checks(r: &RingMorInstance, doc: &Loaded) -> Vec<Check> {
    let h = &r.adjunction;
    let mut out = vec![Check::pass(
        "ringMor.morphism",
        format!("unital algebra map of dimension {} → {}", r.source().dim(), r.target().dim()),
        json!({"sourceDim": r.source().dim(), "targetDim": r.target().dim(), "matrix": matrix_json(&r.morphism.matrix)}),
    )];
    let (cs, ds) = (source_modules(doc, r, 2), target_modules(doc, r, 2));
    let mut checked = 0;
    let mut bad = Vec::new();
    for (name, c) in &cs {
        match h.left_triangle_holds(c) {
            Ok(true) => checked += 1,
            Ok(false) => bad.push(format!("left triangle at {name}")),
            Err(e) => return vec![Check::error("ringMor.triangles", e)],
        }
    }
    for (name, d) in &ds {
        match h.right_triangle_holds(d) {
            Ok(true) => checked += 1,
            Ok(false) => bad.push(format!("right triangle at {name}")),
            Err(e) => return vec![Check::error("ringMor.triangles", e)],
        }
    }
    out.push(if bad.is_empty() {
        Check::pass("ringMor.triangles", format!("triangle identities hold on {checked} modules"), json!({"checked": checked}))
    } else {
        Check::fail("ringMor.triangles", bad[0].clone(), json!({"failures": bad}))
    });
    out
}

fn validate(doc: &Loaded) -> Vec<Check> {
    match &doc.setting {
        Setting::Category { cat, ctx } => {
            let mut out = category_checks(cat);
            if let Ok(ctx) = ctx {
                out.push(hypothesis_check(ctx));
            }
            out.extend(functor_checks(doc));
            out
        }
        Setting::RingMor(r) => ring_mor_checks(r, doc),
    }
}

// ---------------------------------------------------------------- classify

fn witness_text(side: Side, ctx: &FunctorCategory, w: &ObjectEvidence) -> String {
    let obj = ctx.object_name(w.object);
    let (reduced, class, comparison, direction) = match side {
        Side::Projective => ("c", "projective", "cokerPhi", "into"),
        Side::Injective => ("k", "injective", "kerMu", "from"),
    };
    match w.comparison {
        Some((d, false)) => {
            let prop = if side == Side::Projective { "injective" } else { "surjective" };
            format!("{comparison} at {obj} (dim {d}) {direction} X({obj}) (dim {}) is not {prop}", w.value_dim)
        }
        _ => format!("{reduced}_{obj}(X) (dim {}) is not {class}", w.tested_dim),
    }
}

fn evidence_json(ctx: &FunctorCategory, e: &[ObjectEvidence]) -> Value {
    Value::Array(
        e.iter()
            .map(|w| {
                json!({
                    "object": ctx.object_name(w.object),
                    "valueDim": w.value_dim,
                    "testedDim": w.tested_dim,
                    "inClass": w.in_class,
                    "comparison": w.comparison.map(|(d, ok)| json!({"dim": d, "ok": ok})),
                })
            })
            .collect(),
    )
}

fn classification_json(x: &AddFunctor, c: &Classification) -> Value {
    let ctx = x.ctx();
    json!({
        "side": c.side.name(),
        "direct": c.direct,
        "characterization": c.characterization,
        "witness": c.witness().map(|w| ctx.object_name(w.object)),
        "objects": evidence_json(ctx, &c.evidence),
        "functor": functor_json(x),
    })
}

/// Membership check: passes iff `X` is projective (injective).
fn membership_check(name: &str, x: &Arc<AddFunctor>, side: Side) -> Check {
    match classify_functor(x, side) {
        Ok(c) => {
            let ev = classification_json(x, &c);
            if !c.agrees() {
                Check::fail(name, format!("routes disagree: direct {}, characterization {}", c.direct, c.characterization), ev)
            } else if c.direct {
                Check::pass(name, format!("{} (both routes)", side.name()), ev)
            } else {
                let w = c.witness().map(|w| witness_text(side, x.ctx(), w)).unwrap_or_default();
                Check::fail(name, format!("not {} (both routes); witness: {w}", side.name()), ev)
            }
        }
        Err(TransferError::Inapplicable(msg)) => Check::inapplicable(name, msg),
        Err(e) => Check::error(name, e),
    }
}

/// Consistency check: passes iff both routes agree.
fn agreement_check(name: &str, x: &Arc<AddFunctor>, side: Side) -> Check {
    match classify_functor(x, side) {
        Ok(c) => {
            let ev = classification_json(x, &c);
            if c.agrees() {
                Check::pass(name, format!("{}: {} (routes agree)", side.name(), yes(c.direct)), ev)
            } else {
                Check::fail(name, format!("routes disagree: direct {}, characterization {}", c.direct, c.characterization), ev)
            }
        }
        Err(TransferError::Inapplicable(msg)) => Check::inapplicable(name, msg),
        Err(e) => Check::error(name, e),
    }
}

fn valid_functors(doc: &Loaded) -> Vec<(String, Arc<AddFunctor>)> {
    doc.functors.iter().filter_map(|f| f.functor.as_ref().ok().map(|x| (f.name.clone(), x.clone()))).collect()
}

fn classify(doc: &Loaded, side: Side, only: Option<&str>) -> Result<Vec<Check>> {
    if doc.ctx().is_none() {
        return Err(schema("classify needs a category document"));
    }
    let mut out = Vec::new();
    for f in &doc.functors {
        if only.is_some_and(|n| n != f.name) {
            continue;
        }
        let name = format!("classify.{}.{}", side.name(), f.name);
        out.push(match &f.functor {
            Ok(x) => membership_check(&name, x, side),
            Err(e) => Check::fail(name, format!("invalid functor: {e}"), obj([("error", json!(e))])),
        });
    }
    if let Some(n) = only {
        if out.is_empty() {
            return Err(schema(format!("no functor {n:?}")));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- theta

fn handle(doc: &Loaded, backend: &str) -> Result<AdjunctionHandle> {
    let object = |s: &str| -> Result<usize> {
        let ctx = doc.ctx().ok_or_else(|| schema("this backend needs a category document"))?;
        (0..ctx.object_count()).find(|&a| ctx.object_name(a) == s).ok_or_else(|| schema(format!("no object {s:?}")))
    };
    let lift = |r: cotlab_functorcat::Result<AdjunctionHandle>| r.map_err(|e| schema(e.to_string()));
    match (backend, &doc.setting) {
        ("ringmor", Setting::RingMor(r)) => Ok(r.adjunction.clone()),
        ("ringmor", _) => Err(schema("backend ringmor needs a ringMor instance")),
        ("cs", _) => lift(AdjunctionHandle::c_s(doc.ctx().ok_or_else(|| schema("backend cs needs a category"))?)),
        ("sk", _) => lift(AdjunctionHandle::s_k(doc.ctx().ok_or_else(|| schema("backend sk needs a category"))?)),
        (b, _) => match b.split_once(':') {
            Some(("q", a)) => lift(AdjunctionHandle::q_ev(doc.ctx().unwrap_or_else(|| unreachable!()), object(a)?)),
            Some(("p", a)) => lift(AdjunctionHandle::ev_p(doc.ctx().unwrap_or_else(|| unreachable!()), object(a)?)),
            _ => Err(CliError::Usage(format!("unknown backend {b:?} (use ringmor, q:A, p:A, cs, sk)"))),
        },
    }
}

fn is_lambda(doc: &Loaded, alg: &Arc<Algebra>) -> bool {
    doc.ctx().is_some_and(|ctx| Arc::ptr_eq(&ctx.lambda().algebra, alg) || *ctx.lambda().algebra == **alg)
}

fn is_product(doc: &Loaded, alg: &Arc<Algebra>) -> bool {
    doc.ctx().is_some_and(|ctx| Arc::ptr_eq(ctx.product(), alg) || **ctx.product() == **alg)
}

/// An object of the category `alg`-Mod by name: a functor for the
/// category algebra, a product module for `∏ R_A`, a module otherwise.
fn object_over(doc: &Loaded, alg: &Arc<Algebra>, name: &str) -> Result<Arc<LeftModule>> {
    if is_lambda(doc, alg) {
        Ok(functor_to_module(&doc.functor(name)?))
    } else if is_product(doc, alg) {
        doc.product_module(name)
    } else {
        doc.module(name, alg)
    }
}

fn left_object(doc: &Loaded, h: &AdjunctionHandle, name: &str) -> Result<Arc<LeftModule>> {
    object_over(doc, h.left_algebra(), name)
}

fn right_object(doc: &Loaded, h: &AdjunctionHandle, name: &str) -> Result<Arc<LeftModule>> {
    object_over(doc, h.right_algebra(), name)
}

fn derived_name(h: &AdjunctionHandle, k: usize) -> String {
    match h.tag() {
        cotlab_functorcat::AdjunctionTag::RingMor(_) => format!("Tor{k}"),
        _ => format!("L{k}"),
    }
}

fn transfer_json(t: &TransferMap) -> Value {
    json!({
        "degree": t.degree,
        "sourceDim": t.source.dim(),
        "targetDim": t.target.dim(),
        "rank": t.rank(),
        "mono": t.is_injective(),
        "iso": t.is_isomorphism(),
        "matrix": matrix_json(&t.matrix),
    })
}

/// Θⁿ with its rank data; in degree 1 a non-injective Θ fails.
fn theta_check(name: &str, h: &AdjunctionHandle, degree: usize, c: &Arc<LeftModule>, d: &Arc<LeftModule>) -> Check {
    let theta = match theta_map(h, degree, c, d) {
        Ok(t) => t,
        Err(TransferError::Inapplicable(msg)) => return Check::inapplicable(name, msg),
        Err(e) => return Check::error(name, e),
    };
    let derived = match left_derived_dim(h, c, degree) {
        Ok(k) => k,
        Err(e) => return Check::error(name, e),
    };
    let omega = match omega_map(h, degree, c, d) {
        Ok(o) => Some(o),
        Err(TransferError::Inapplicable(_)) => None,
        Err(e) => return Check::error(name, e),
    };
    let omega_inverse = omega.as_ref().map(|o| {
        let n = theta.matrix.cols();
        o.matrix.mul(&theta.matrix) == FpMatrix::identity(o.matrix.prime(), n)
    });
    let label = derived_name(h, degree);
    let summary = format!("mono: {}, iso: {}, {label} dim {derived}", yes(theta.is_injective()), yes(theta.is_isomorphism()));
    let mut ev = transfer_json(&theta);
    ev["derived"] = json!({"name": label, "dim": derived});
    ev["omega"] = match (&omega, omega_inverse) {
        (Some(o), Some(inv)) => json!({"defined": true, "leftInverse": inv, "matrix": matrix_json(&o.matrix)}),
        _ => json!({"defined": false}),
    };
    let status = if (degree == 1 && !theta.is_injective()) || (theta.is_isomorphism() && omega_inverse == Some(false)) {
        Status::Fail
    } else {
        Status::Pass
    };
    Check::new(name, status, summary, ev)
}

// ---------------------------------------------------------------- perp

fn perp_check(name: &str, selector: PerpSelector, x: &Arc<AddFunctor>, classes: &[ClassSelector]) -> Check {
    match perp_membership(selector, x, classes) {
        Ok(PerpVerdict::Member { member, evidence }) => {
            let ctx = x.ctx();
            let ev = json!({"member": member, "objects": evidence_json(ctx, &evidence), "functor": functor_json(x)});
            if member {
                Check::pass(name, format!("member of {}", selector.name()), ev)
            } else {
                let w = evidence.iter().find(|e| !e.holds()).map(|e| ctx.object_name(e.object)).unwrap_or("-");
                Check::fail(name, format!("not a member of {}; witness object {w}", selector.name()), ev)
            }
        }
        Ok(PerpVerdict::Inapplicable(msg)) => Check::inapplicable(name, msg),
        Err(e) => Check::error(name, e),
    }
}

fn perp(doc: &Loaded, selector: PerpSelector, classes: &str) -> Result<Vec<Check>> {
    let (cname, spec) = doc.class_spec(classes)?;
    Ok(doc
        .functors
        .iter()
        .map(|f| {
            let name = format!("perp.{}.{cname}.{}", selector.name(), f.name);
            match &f.functor {
                Ok(x) => perp_check(&name, selector, x, &spec),
                Err(e) => Check::fail(name, format!("invalid functor: {e}"), obj([("error", json!(e))])),
            }
        })
        .collect())
}

/// Small members of the other half of the cotorsion pair a class spec is
/// half of: the `F_A` that `q_A` / `s_A` are applied to for a right half
/// `G_A`, the `G_A` that `p_A` / `s_A` are applied to for a left half `F_A`.
/// Perpendicular generators stand in for `⊥(L^⊥)` and `(L^⊥)`-style halves.
fn companion(class: &ClassSelector, right_half: bool, small: &[Arc<LeftModule>]) -> cotlab_transfer::Result<Vec<Arc<LeftModule>>> {
    let filter = |f: fn(&Arc<LeftModule>) -> cotlab_algmod::Result<bool>| -> cotlab_transfer::Result<Vec<_>> {
        let mut out = Vec::new();
        for m in small {
            if f(m)? {
                out.push(m.clone());
            }
        }
        Ok(out)
    };
    Ok(match (class, right_half) {
        (ClassSelector::All, true) => filter(is_projective)?,
        (ClassSelector::All, false) => filter(is_injective)?,
        (ClassSelector::Injectives, true) | (ClassSelector::Projectives, false) => small.to_vec(),
        (ClassSelector::RightPerpOf(ls), true) | (ClassSelector::LeftPerpOf(ls), false) => ls.clone(),
        _ => Vec::new(),
    })
}

/// Membership against the defining Ext¹ condition: a member has no
/// nonzero Ext¹ against the induced functors of the small companion
/// modules; for a non-member the first such Ext¹ found is reported.
fn perp_oracle_check(
    name: &str,
    selector: PerpSelector,
    x: &Arc<AddFunctor>,
    classes: &[ClassSelector],
    small: &[Vec<Arc<LeftModule>>],
) -> Check {
    let verdict = match perp_membership(selector, x, classes) {
        Ok(v) => v,
        Err(e) => return Check::error(name, e),
    };
    let member = match verdict {
        PerpVerdict::Member { member, .. } => member,
        PerpVerdict::Inapplicable(msg) => return Check::inapplicable(name, msg),
    };
    let ctx = x.ctx();
    let mut counterexample = None;
    let mut checked = 0;
    'outer: for (a, class) in classes.iter().enumerate() {
        let mods = match companion(class, selector.uses_right_half(), &small[a]) {
            Ok(m) => m,
            Err(e) => return Check::error(name, e),
        };
        for m in &mods {
            let dim = match selector {
                PerpSelector::QPerp => induced_q(ctx, a, m).and_then(|q| functor_ext_dim(&q.functor, x, 1)),
                PerpSelector::PPerp => induced_p(ctx, a, m).and_then(|p| functor_ext_dim(x, &p.functor, 1)),
                PerpSelector::SPerp => stalk(ctx, a, m).and_then(|s| functor_ext_dim(&s, x, 1)),
                PerpSelector::PerpS => stalk(ctx, a, m).and_then(|s| functor_ext_dim(x, &s, 1)),
            };
            let dim = match dim {
                Ok(d) => d,
                Err(e) => return Check::error(name, e),
            };
            checked += 1;
            if dim != 0 {
                counterexample = Some((a, m.dim(), dim));
                break 'outer;
            }
        }
    }
    let ce = counterexample.map(|(a, d, e)| json!({"object": ctx.object_name(a), "moduleDim": d, "ext1Dim": e}));
    let ev = json!({"member": member, "checked": checked, "counterexample": ce});
    match (member, counterexample) {
        (true, None) => Check::pass(name, format!("member; Ext¹ vanishes on {checked} test modules"), ev),
        (true, Some((a, _, e))) => {
            Check::fail(name, format!("member, but Ext¹ has dim {e} against a test module at {}", ctx.object_name(a)), ev)
        }
        (false, Some((a, _, e))) => Check::pass(
            name,
            format!("not a member; Ext¹ has dim {e} against a test module at {}", ctx.object_name(a)),
            ev,
        ),
        (false, None) => Check::pass(name, format!("not a member; no Ext¹ witness among {checked} small test modules"), ev),
    }
}

// ---------------------------------------------------------------- enumerate

fn enumerate(doc: &Loaded, max_dim: usize, classify: bool) -> Result<Vec<Check>> {
    match &doc.setting {
        Setting::Category { ctx: Ok(ctx), .. } => Ok(enumerate_category(ctx, max_dim, classify)),
        Setting::Category { ctx: Err(e), .. } => Err(schema(format!("not a category: {e}"))),
        Setting::RingMor(r) => Ok(enumerate_ring_mor(doc, r, max_dim, classify)),
    }
}

fn enumerate_category(ctx: &Arc<FunctorCategory>, max_dim: usize, classify: bool) -> Vec<Check> {
    let all = match enumerate_functors(ctx, max_dim) {
        Ok(v) => v,
        Err(e) => return vec![Check::error("enumerate", e)],
    };
    let dims: Vec<Value> = all.iter().map(|x| dims_json(ctx, x)).collect();
    let mut out = vec![Check::pass(
        "enumerate",
        format!("{} functors up to natural isomorphism with every dim X(A) ≤ {max_dim}", all.len()),
        json!({"count": all.len(), "maxDim": max_dim, "dims": dims}),
    )];
    if classify {
        out.push(classify_universe(ctx, &all));
    }
    out
}

/// Both routes on every functor of a universe, with the verdicts.
fn classify_universe(ctx: &Arc<FunctorCategory>, all: &[Arc<AddFunctor>]) -> Check {
    let results: Vec<std::result::Result<(bool, bool, bool), String>> = all
        .par_iter()
        .map(|x| {
            let p = classify_functor(x, Side::Projective).map_err(|e| e.to_string())?;
            let i = classify_functor(x, Side::Injective).map_err(|e| e.to_string())?;
            Ok((p.direct, i.direct, p.agrees() && i.agrees()))
        })
        .collect();
    let mut verdicts = Vec::with_capacity(all.len());
    let (mut proj, mut inj, mut disagreements) = (0, 0, Vec::new());
    for (k, r) in results.into_iter().enumerate() {
        match r {
            Ok((p, i, agree)) => {
                proj += usize::from(p);
                inj += usize::from(i);
                if !agree {
                    disagreements.push(k);
                }
                verdicts.push(json!({"projective": p, "injective": i}));
            }
            Err(e) => return Check::error("enumerate.classify", e),
        }
    }
    let ev = json!({
        "checked": all.len(),
        "projective": proj,
        "injective": inj,
        "disagreements": disagreements.len(),
        "firstDisagreement": disagreements.first().map(|&k| functor_json(&all[k])),
        "verdicts": verdicts,
    });
    let _ = ctx;
    if disagreements.is_empty() {
        Check::pass(
            "enumerate.classify",
            format!("routes agree on all {}: {proj} projective, {inj} injective", all.len()),
            ev,
        )
    } else {
        Check::fail("enumerate.classify", format!("routes disagree on {} functors", disagreements.len()), ev)
    }
}

/// `R`, `S` (restricted), the declared source modules and the enumerated
/// ones.
fn source_modules(doc: &Loaded, r: &RingMorInstance, max_dim: usize) -> Vec<(String, Arc<LeftModule>)> {
    let mut out = builtin_modules(doc, r.source(), &["R", "S"]);
    out.extend(named_modules(doc, r.source(), max_dim));
    out
}

/// `S`, the declared target modules and the enumerated ones.
fn target_modules(doc: &Loaded, r: &RingMorInstance, max_dim: usize) -> Vec<(String, Arc<LeftModule>)> {
    let mut out = builtin_modules(doc, r.target(), &["S"]);
    out.extend(named_modules(doc, r.target(), max_dim));
    out
}

fn builtin_modules(doc: &Loaded, alg: &Arc<Algebra>, names: &[&str]) -> Vec<(String, Arc<LeftModule>)> {
    names.iter().filter_map(|n| doc.module(n, alg).ok().map(|m| (n.to_string(), m))).collect()
}

/// Declared modules over `alg` followed by the enumerated ones (`M0`, `M1`,
/// ... in enumeration order).
fn named_modules(doc: &Loaded, alg: &Arc<Algebra>, max_dim: usize) -> Vec<(String, Arc<LeftModule>)> {
    let mut out: Vec<(String, Arc<LeftModule>)> = doc
        .modules
        .iter()
        .filter(|m| cotlab_algmod::same_algebra(m.module.alg(), alg))
        .map(|m| (m.name.clone(), m.module.clone()))
        .collect();
    if let Ok(ms) = enumerate_modules(alg, max_dim) {
        out.extend(ms.into_iter().enumerate().map(|(i, m)| (format!("M{i}"), m)));
    }
    out
}

/// Flatness of `C` against invertibility of Θ¹ and Θ² for every tested `D`.
fn flatness_check(name: &str, h: &AdjunctionHandle, c: &Arc<LeftModule>, ds: &[(String, Arc<LeftModule>)]) -> Check {
    let flat = match is_flat_for(h, c) {
        Ok(f) => f,
        Err(e) => return Check::error(name, e),
    };
    let mut non_iso = None;
    let mut tested = 0;
    for (dname, d) in ds {
        for degree in 1..=2 {
            match theta_map(h, degree, c, d) {
                Ok(t) => {
                    tested += 1;
                    if !t.is_isomorphism() && non_iso.is_none() {
                        non_iso = Some((dname.clone(), degree, t.is_surjective()));
                    }
                }
                Err(TransferError::Inapplicable(_)) => {}
                Err(e) => return Check::error(name, e),
            }
        }
    }
    let ev = json!({
        "flat": flat,
        "tested": tested,
        "nonIsomorphism": non_iso.as_ref().map(|(d, k, s)| json!({"target": d, "degree": k, "surjective": s})),
    });
    match (flat, non_iso) {
        (true, None) => Check::pass(name, format!("flat; Θ¹, Θ² invertible for all {} targets", ds.len()), ev),
        (true, Some((d, k, _))) => Check::fail(name, format!("flat, but Θ{} is not invertible at {d}", sup(k)), ev),
        (false, Some((d, k, _))) => Check::pass(name, format!("not flat; Θ{} is not invertible at {d}", sup(k)), ev),
        (false, None) => Check::inapplicable(name, "not flat, but no non-invertible Θ among the tested targets"),
    }
}

/// `S` as a right `R`-module through the morphism.
fn target_as_right_module(r: &RingMorInstance) -> RightModule {
    let (src, tgt) = (r.source(), r.target());
    let p = src.prime();
    let actions = (0..src.dim())
        .map(|i| {
            let fi = r.morphism.apply(&src.basis_vector(i));
            let mut m = FpMatrix::zeros(p, tgt.dim(), tgt.dim());
            for (j, &c) in fi.iter().enumerate() {
                if c != 0 {
                    m.add_scaled(&tgt.right_mult(j), c);
                }
            }
            m
        })
        .collect();
    RightModule::new(src.clone(), tgt.dim(), actions).expect("restriction of the right regular module")
}

fn tor_check(name: &str, r: &RingMorInstance, c: &Arc<LeftModule>) -> Check {
    let right = target_as_right_module(r);
    let mut dims = Vec::new();
    for k in 1..=2 {
        match (left_derived_dim(&r.adjunction, c, k), tor_dim(&right, c, k)) {
            (Ok(l), Ok(t)) => dims.push((l, t)),
            (Err(e), _) => return Check::error(name, e),
            (_, Err(e)) => return Check::error(name, e),
        }
    }
    let ev = json!({"derived": dims.iter().map(|d| d.0).collect::<Vec<_>>(), "tor": dims.iter().map(|d| d.1).collect::<Vec<_>>()});
    if dims.iter().all(|(l, t)| l == t) {
        Check::pass(name, format!("L1, L2 = Tor1, Tor2 = {}, {}", dims[0].0, dims[1].0), ev)
    } else {
        Check::fail(name, "left derived functors differ from Tor", ev)
    }
}

fn enumerate_ring_mor(doc: &Loaded, r: &RingMorInstance, max_dim: usize, classify: bool) -> Vec<Check> {
    let cs = match enumerate_modules(r.source(), max_dim) {
        Ok(v) => v,
        Err(e) => return vec![Check::error("enumerate", e)],
    };
    let mut out = vec![Check::pass(
        "enumerate",
        format!("{} source modules up to isomorphism with dimension ≤ {max_dim}", cs.len()),
        json!({"count": cs.len(), "dims": cs.iter().map(|m| m.dim()).collect::<Vec<_>>()}),
    )];
    if classify {
        let ds = target_modules(doc, r, max_dim);
        out.extend(cs.iter().enumerate().map(|(i, c)| flatness_check(&format!("flatness.M{i}"), &r.adjunction, c, &ds)));
    }
    out
}

// ---------------------------------------------------------------- report

type Job<'a> = Box<dyn Fn() -> Vec<Check> + Send + Sync + 'a>;

fn report(doc: &Loaded) -> Result<Vec<Check>> {
    let mut jobs: Vec<Job> = vec![Box::new(|| validate(doc))];
    match &doc.setting {
        Setting::Category { ctx: Ok(ctx), .. } => category_jobs(doc, ctx, &mut jobs),
        Setting::Category { ctx: Err(_), .. } => {}
        Setting::RingMor(r) => ring_mor_jobs(doc, r, &mut jobs),
    }
    Ok(jobs.par_iter().map(|j| j()).collect::<Vec<_>>().into_iter().flatten().collect())
}

fn category_jobs<'a>(doc: &'a Loaded, ctx: &'a Arc<FunctorCategory>, jobs: &mut Vec<Job<'a>>) {
    let n = ctx.object_count();
    let functors = valid_functors(doc);
    for (name, x) in functors.clone() {
        jobs.push(Box::new(move || {
            let mut out = vec![
                agreement_check(&format!("classify.projective.{name}"), &x, Side::Projective),
                agreement_check(&format!("classify.injective.{name}"), &x, Side::Injective),
            ];
            out.push(match zero_detect(&x) {
                Ok(z) if z.agrees() => Check::pass(
                    format!("zeroDetect.{name}"),
                    format!("zero: {} (three ways agree)", yes(z.is_zero)),
                    json!({"isZero": z.is_zero, "cVanishing": z.c_vanishing, "kVanishing": z.k_vanishing}),
                ),
                Ok(z) => Check::fail(
                    format!("zeroDetect.{name}"),
                    "vanishing tests disagree",
                    json!({"isZero": z.is_zero, "cVanishing": z.c_vanishing, "kVanishing": z.k_vanishing}),
                ),
                Err(e) => Check::error(format!("zeroDetect.{name}"), e),
            });
            out
        }));
    }

    // Perpendicular classes against the Ext¹ definition on small modules.
    let tested: Arc<Vec<Vec<Arc<LeftModule>>>> =
        Arc::new((0..n).map(|a| enumerate_modules(ctx.endo(a), 2).unwrap_or_default()).collect());
    for (cname, spec) in &doc.classes {
        for selector in [PerpSelector::QPerp, PerpSelector::PPerp, PerpSelector::SPerp, PerpSelector::PerpS] {
            for (fname, x) in functors.clone() {
                let (tested, spec) = (tested.clone(), spec.clone());
                let name = format!("perp.{}.{cname}.{fname}", selector.name());
                jobs.push(Box::new(move || vec![perp_oracle_check(&name, selector, &x, &spec, &tested)]));
            }
        }
    }

    // Θ¹ on every backend: C and D from the declared objects and simples.
    for a in 0..n {
        let alg = ctx.endo(a).clone();
        let mut mods: Vec<(String, Arc<LeftModule>)> = vec![("regular".into(), Arc::new(LeftModule::regular(alg.clone())))];
        mods.extend(doc.modules.iter().filter(|m| m.over == crate::document::Over::Object(a)).map(|m| (m.name.clone(), m.module.clone())));
        mods.extend(simple_modules(&alg).unwrap_or_default().into_iter().enumerate().map(|(i, m)| (format!("simple{i}"), m)));
        let oname = ctx.object_name(a).to_string();
        for (fname, x) in functors.clone() {
            let mods = mods.clone();
            let oname = oname.clone();
            jobs.push(Box::new(move || {
                let xm = functor_to_module(&x);
                let mut out = Vec::new();
                match (AdjunctionHandle::q_ev(ctx, a), AdjunctionHandle::ev_p(ctx, a)) {
                    (Ok(q), Ok(p)) => {
                        for (mname, m) in &mods {
                            out.push(theta_check(&format!("theta.q:{oname}.{mname}.{fname}"), &q, 1, m, &xm));
                            out.push(theta_check(&format!("theta.p:{oname}.{fname}.{mname}"), &p, 1, &xm, m));
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => out.push(Check::error(format!("theta.{oname}.{fname}"), e)),
                }
                out
            }));
        }
    }
    for (fname, x) in functors {
        jobs.push(Box::new(move || {
            let xm = functor_to_module(&x);
            let mut out = Vec::new();
            let regular = doc.product_module("regular");
            match (AdjunctionHandle::c_s(ctx), AdjunctionHandle::s_k(ctx), regular) {
                (Ok(cs), Ok(sk), Ok(m)) => {
                    out.push(theta_check(&format!("theta.cs.{fname}.regular"), &cs, 1, &xm, &m));
                    out.push(theta_check(&format!("theta.sk.regular.{fname}"), &sk, 1, &m, &xm));
                }
                (Err(e), _, _) | (_, Err(e), _) => out.push(Check::error(format!("theta.product.{fname}"), e)),
                (_, _, Err(e)) => out.push(Check::error(format!("theta.product.{fname}"), e)),
            }
            out
        }));
    }

    // The whole universe with dim X(A) ≤ 1.
    jobs.push(Box::new(move || enumerate_category(ctx, 1, true)));
}

fn ring_mor_jobs<'a>(doc: &'a Loaded, r: &'a RingMorInstance, jobs: &mut Vec<Job<'a>>) {
    let cs = source_modules(doc, r, 2);
    let ds = Arc::new(target_modules(doc, r, 2));
    for (cname, c) in cs {
        let ds = ds.clone();
        jobs.push(Box::new(move || {
            let mut out = vec![
                flatness_check(&format!("flatness.{cname}"), &r.adjunction, &c, &ds),
                tor_check(&format!("tor.{cname}"), r, &c),
            ];
            for (dname, d) in ds.iter() {
                for degree in 1..=2 {
                    out.push(theta_check(&format!("theta.ringmor.{degree}.{cname}.{dname}"), &r.adjunction, degree, &c, d));
                }
            }
            out
        }));
    }
}
