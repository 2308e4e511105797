//! The JSON input document: schema, loading into library objects, and the
//! canonical serialisation.
//!
//! Index conventions: a matrix is a list of rows; the structure matrices of
//! a functor are keyed `"A|B"` with one matrix (`dim X(B) x dim X(A)`) per
//! basis element of `Hom(A, B)`; composition tensors are keyed `"A|B|C"`
//! with `comp["A|B|C"][g][f]` the coordinate vector of `g ∘ f` for basis
//! elements `f` of `Hom(A, B)` and `g` of `Hom(B, C)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use cotlab_algmod::{same_algebra, Algebra, AlgebraMorphism, Bimodule, LeftModule};
use cotlab_encat::EnrichedCategory;
use cotlab_functorcat::{product_module, AddFunctor, FunctorCategory};
use cotlab_instances::{build_instance, Instance, InstanceSpec, RingMorInstance};
use cotlab_linalg::{field, FpMatrix};
use cotlab_transfer::ClassSelector;
use serde::{Deserialize, Serialize};

use crate::error::{schema, CliError, Result};

pub type Matrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub prime: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<CategoryDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functors: BTreeMap<String, FunctorDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleDoc>,
    /// Named class specs: one class per object.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub classes: BTreeMap<String, BTreeMap<String, ClassDoc>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    /// `"A|B"` → `dim Hom(A, B)`; absent pairs are zero.
    pub homs: BTreeMap<String, usize>,
    /// `"A|B|C"` → `[g][f]` → coordinates of `g ∘ f`.
    #[serde(default)]
    pub comp: BTreeMap<String, Vec<Vec<Vec<i64>>>>,
    /// Object → coordinates of the identity in `Hom(A, A)`.
    pub identities: BTreeMap<String, Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", deny_unknown_fields)]
pub enum InstanceDoc {
    Chain {
        length: usize,
    },
    Fib {
        #[serde(rename = "maxObject")]
        max_object: usize,
    },
    /// `N` is an `(S, T)`-bimodule, `M` a `(T, S)`-bimodule.
    Morita {
        t: AlgebraDoc,
        s: AlgebraDoc,
        n: BimoduleDoc,
        m: BimoduleDoc,
    },
    /// `matrix` has one column per basis element of the source: its image
    /// in target coordinates.
    RingMor {
        source: AlgebraDoc,
        target: AlgebraDoc,
        matrix: Matrix,
    },
    OneObject {
        algebra: AlgebraDoc,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", deny_unknown_fields)]
pub enum AlgebraDoc {
    Field,
    TruncatedPolynomial { degree: usize },
    UpperTriangular,
}

/// Actions of every basis element of the left and right algebras.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDoc {
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Matrix>>,
}

/// A module over `R_A` (`over` an object name), or over the source or
/// target of a ring morphism (`over` = `"source"` / `"target"`), by the
/// action of every basis element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub over: String,
    pub dim: usize,
    pub actions: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassDoc {
    /// `"all"`, `"projectives"` or `"injectives"`.
    Named(String),
    RightPerpOf {
        #[serde(rename = "rightPerpOf")]
        right_perp_of: Vec<String>,
    },
    LeftPerpOf {
        #[serde(rename = "leftPerpOf")]
        left_perp_of: Vec<String>,
    },
}

impl SpecDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| schema(e.to_string()))
    }

    /// Every integer reduced into `0..prime`.
    pub fn canonicalize(&self) -> Self {
        let p = self.prime as i64;
        let red = |x: &i64| if p > 0 { x.rem_euclid(p) } else { *x };
        let mat = |m: &Matrix| m.iter().map(|r| r.iter().map(red).collect()).collect::<Matrix>();
        let mats = |ms: &Vec<Matrix>| ms.iter().map(mat).collect::<Vec<Matrix>>();
        let mut doc = self.clone();
        if let Some(c) = &mut doc.category {
            for t in c.comp.values_mut() {
                *t = t.iter().map(mat).collect();
            }
            for v in c.identities.values_mut() {
                *v = v.iter().map(red).collect();
            }
        }
        let bim = |b: &BimoduleDoc| BimoduleDoc { dim: b.dim, left: mats(&b.left), right: mats(&b.right) };
        doc.instance = doc.instance.as_ref().map(|i| match i {
            InstanceDoc::Morita { t, s, n, m } => {
                InstanceDoc::Morita { t: t.clone(), s: s.clone(), n: bim(n), m: bim(m) }
            }
            InstanceDoc::RingMor { source, target, matrix } => {
                InstanceDoc::RingMor { source: source.clone(), target: target.clone(), matrix: mat(matrix) }
            }
            other => other.clone(),
        });
        for f in doc.functors.values_mut() {
            for ms in f.maps.values_mut() {
                *ms = mats(ms);
            }
        }
        for m in doc.modules.values_mut() {
            m.actions = mats(&m.actions);
        }
        doc
    }

    /// The canonical serialisation: reduced integers, sorted keys, pretty
    /// printed; stable under parse/serialise round trips.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.canonicalize()).expect("documents serialise");
        s.push('\n');
        s
    }
}

/// A functor from the document, or why its data is not functorial.
#[derive(Clone, Debug)]
pub struct NamedFunctor {
    pub name: String,
    pub functor: std::result::Result<Arc<AddFunctor>, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Over {
    Object(usize),
    Source,
    Target,
}

#[derive(Clone, Debug)]
pub struct NamedModule {
    pub name: String,
    pub over: Over,
    pub module: Arc<LeftModule>,
}

/// What the document is about.
#[derive(Clone, Debug)]
pub enum Setting {
    /// A category, and its functor category when the axioms hold.
    Category { cat: Arc<EnrichedCategory>, ctx: std::result::Result<Arc<FunctorCategory>, String> },
    RingMor(RingMorInstance),
}

/// A document turned into library objects.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub prime: u32,
    pub setting: Setting,
    pub functors: Vec<NamedFunctor>,
    pub modules: Vec<NamedModule>,
    /// Named class specs, one selector per object.
    pub classes: Vec<(String, Vec<ClassSelector>)>,
}

fn matrix(p: u32, rows: usize, cols: usize, m: &Matrix, what: &str) -> Result<FpMatrix> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(schema(format!("{what} must be {rows}x{cols}")));
    }
    let data = m.iter().flatten().map(|x| x.rem_euclid(p as i64) as u32).collect();
    Ok(FpMatrix::from_vec(p, rows, cols, data).expect("shape checked"))
}

fn algebra(p: u32, doc: &AlgebraDoc) -> Result<Arc<Algebra>> {
    Ok(Arc::new(match doc {
        AlgebraDoc::Field => Algebra::field(p),
        AlgebraDoc::TruncatedPolynomial { degree } => {
            Algebra::truncated_polynomial(p, *degree).map_err(|e| schema(e.to_string()))?
        }
        AlgebraDoc::UpperTriangular => Algebra::upper_triangular(p),
    }))
}

fn bimodule(p: u32, left: &Arc<Algebra>, right: &Arc<Algebra>, doc: &BimoduleDoc, what: &str) -> Result<Bimodule> {
    let acts = |ms: &[Matrix], alg: &Algebra, side: &str| -> Result<Vec<FpMatrix>> {
        if ms.len() != alg.dim() {
            return Err(schema(format!("{what}: {side} actions needed for all {} basis elements", alg.dim())));
        }
        ms.iter().map(|m| matrix(p, doc.dim, doc.dim, m, &format!("{what} {side} action"))).collect()
    };
    let l = acts(&doc.left, left, "left")?;
    let r = acts(&doc.right, right, "right")?;
    Bimodule::new(left.clone(), right.clone(), doc.dim, l, r).map_err(|e| schema(format!("{what}: {e}")))
}

fn split_key<const N: usize>(key: &str) -> Result<[&str; N]> {
    let parts: Vec<&str> = key.split('|').collect();
    parts.try_into().map_err(|_| schema(format!("key {key:?} must have {N} parts separated by '|'")))
}

fn category(p: u32, doc: &CategoryDoc) -> Result<EnrichedCategory> {
    let n = doc.objects.len();
    let index = |name: &str| {
        doc.objects.iter().position(|o| o == name).ok_or_else(|| schema(format!("undeclared object {name:?}")))
    };
    let mut seen = std::collections::BTreeSet::new();
    if let Some(dup) = doc.objects.iter().find(|o| !seen.insert(o.as_str())) {
        return Err(schema(format!("object {dup:?} declared twice")));
    }
    let mut dims = vec![vec![0usize; n]; n];
    for (key, &d) in &doc.homs {
        let [a, b] = split_key::<2>(key)?;
        dims[index(a)?][index(b)?] = d;
    }
    let mut ids = vec![Vec::new(); n];
    for (name, v) in &doc.identities {
        ids[index(name)?] = v.iter().map(|x| x.rem_euclid(p as i64) as u32).collect();
    }
    for a in 0..n {
        if ids[a].len() != dims[a][a] || dims[a][a] == 0 {
            return Err(schema(format!(
                "object {:?} needs a nonzero endomorphism space and identity coordinates of matching length",
                doc.objects[a]
            )));
        }
    }
    let mut tensors: BTreeMap<(usize, usize, usize), &Vec<Vec<Vec<i64>>>> = BTreeMap::new();
    for (key, t) in &doc.comp {
        let [a, b, c] = split_key::<3>(key)?;
        let (a, b, c) = (index(a)?, index(b)?, index(c)?);
        let (dab, dbc, dac) = (dims[a][b], dims[b][c], dims[a][c]);
        if t.len() != dbc || t.iter().any(|row| row.len() != dab || row.iter().any(|v| v.len() != dac)) {
            return Err(schema(format!("composition {key:?} must be {dbc} x {dab} x {dac}")));
        }
        tensors.insert((a, b, c), t);
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if dims[a][b] * dims[b][c] * dims[a][c] > 0 && !tensors.contains_key(&(a, b, c)) {
                    let o = &doc.objects;
                    return Err(schema(format!("missing composition \"{}|{}|{}\"", o[a], o[b], o[c])));
                }
            }
        }
    }
    let dac = dims.clone();
    EnrichedCategory::new(p, doc.objects.clone(), dims, ids, |a, b, c, g, f| match tensors.get(&(a, b, c)) {
        Some(t) => t[g][f].iter().map(|x| x.rem_euclid(p as i64) as u32).collect(),
        None => vec![0; dac[a][c]],
    })
    .map_err(|e| schema(e.to_string()))
}

fn functor(p: u32, ctx: &Arc<FunctorCategory>, name: &str, doc: &FunctorDoc) -> Result<NamedFunctor> {
    let cat = ctx.category();
    let n = cat.object_count();
    let index = |o: &str| {
        (0..n)
            .find(|&a| ctx.object_name(a) == o)
            .ok_or_else(|| schema(format!("functor {name:?} refers to undeclared object {o:?}")))
    };
    let mut dims = vec![0usize; n];
    for (o, &d) in &doc.dims {
        dims[index(o)?] = d;
    }
    let mut act: Vec<Vec<Vec<FpMatrix>>> = (0..n)
        .map(|a| {
            (0..n).map(|b| vec![FpMatrix::zeros(p, dims[b], dims[a]); cat.hom_dim(a, b)]).collect()
        })
        .collect();
    let mut given = vec![vec![false; n]; n];
    for (key, ms) in &doc.maps {
        let [a, b] = split_key::<2>(key)?;
        let (a, b) = (index(a)?, index(b)?);
        if ms.len() != cat.hom_dim(a, b) {
            return Err(schema(format!("functor {name:?}: {key:?} needs one matrix per basis morphism ({})", cat.hom_dim(a, b))));
        }
        for (k, m) in ms.iter().enumerate() {
            act[a][b][k] = matrix(p, dims[b], dims[a], m, &format!("functor {name:?} map {key:?}"))?;
        }
        given[a][b] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if !given[a][b] && cat.hom_dim(a, b) > 0 && dims[a] > 0 && dims[b] > 0 {
                return Err(schema(format!(
                    "functor {name:?} is missing maps \"{}|{}\"",
                    ctx.object_name(a),
                    ctx.object_name(b)
                )));
            }
        }
    }
    let functor = AddFunctor::new(ctx.clone(), dims, act).map(Arc::new).map_err(|e| e.to_string());
    Ok(NamedFunctor { name: name.to_string(), functor })
}

impl Loaded {
    pub fn from_document(doc: &SpecDocument) -> Result<Self> {
        let p = doc.prime;
        field::check_prime(p).map_err(|e| schema(e.to_string()))?;
        let setting = match (&doc.category, &doc.instance) {
            (Some(_), Some(_)) => return Err(schema("give either \"category\" or \"instance\", not both")),
            (None, None) => return Err(schema("missing \"category\" or \"instance\"")),
            (Some(c), None) => {
                let cat = Arc::new(category(p, c)?);
                let ctx = FunctorCategory::new(cat.clone()).map_err(|e| e.to_string());
                Setting::Category { cat, ctx }
            }
            (None, Some(i)) => {
                let spec = match i {
                    InstanceDoc::Chain { length } => InstanceSpec::Chain { p, length: *length },
                    InstanceDoc::Fib { max_object } => InstanceSpec::Fib { p, max_object: *max_object },
                    InstanceDoc::OneObject { algebra: a } => InstanceSpec::OneObject { alg: algebra(p, a)? },
                    InstanceDoc::Morita { t, s, n, m } => {
                        let (t, s) = (algebra(p, t)?, algebra(p, s)?);
                        let n = bimodule(p, &s, &t, n, "N")?;
                        let m = bimodule(p, &t, &s, m, "M")?;
                        InstanceSpec::Morita { t, s, n, m }
                    }
                    InstanceDoc::RingMor { source, target, matrix: mat } => {
                        let (r, s) = (algebra(p, source)?, algebra(p, target)?);
                        let f = matrix(p, s.dim(), r.dim(), mat, "ring morphism matrix")?;
                        let morphism = AlgebraMorphism::new(r, s, f).map_err(|e| schema(e.to_string()))?;
                        InstanceSpec::RingMor { morphism }
                    }
                };
                match build_instance(&spec).map_err(|e| schema(e.to_string()))? {
                    Instance::Category(cat) => {
                        let cat = Arc::new(cat);
                        let ctx = FunctorCategory::new(cat.clone()).map_err(|e| e.to_string());
                        Setting::Category { cat, ctx }
                    }
                    Instance::RingMor(r) => Setting::RingMor(r),
                }
            }
        };

        let mut loaded = Loaded { prime: p, setting, functors: Vec::new(), modules: Vec::new(), classes: Vec::new() };
        if !doc.functors.is_empty() {
            let ctx = match &loaded.setting {
                Setting::Category { ctx: Ok(ctx), .. } => ctx.clone(),
                Setting::Category { ctx: Err(_), .. } => {
                    // Functors on a non-category are reported by `validate`.
                    return Ok(loaded);
                }
                Setting::RingMor(_) => return Err(schema("functors need a category")),
            };
            for (name, f) in &doc.functors {
                loaded.functors.push(functor(p, &ctx, name, f)?);
            }
        }
        for (name, m) in &doc.modules {
            let over = loaded.over(&m.over)?;
            let alg = loaded.algebra_over(over)?;
            if m.actions.len() != alg.dim() {
                return Err(schema(format!("module {name:?} needs one action per basis element ({})", alg.dim())));
            }
            let acts =
                m.actions.iter().map(|a| matrix(p, m.dim, m.dim, a, &format!("module {name:?} action"))).collect::<Result<_>>()?;
            let module = LeftModule::new(alg, m.dim, acts).map_err(|e| schema(format!("module {name:?}: {e}")))?;
            loaded.modules.push(NamedModule { name: name.clone(), over, module: Arc::new(module) });
        }
        for (name, per_object) in &doc.classes {
            let spec = loaded.class_spec_from_doc(name, per_object)?;
            loaded.classes.push((name.clone(), spec));
        }
        Ok(loaded)
    }

    pub fn ctx(&self) -> Option<&Arc<FunctorCategory>> {
        match &self.setting {
            Setting::Category { ctx: Ok(ctx), .. } => Some(ctx),
            _ => None,
        }
    }

    fn over(&self, s: &str) -> Result<Over> {
        match (&self.setting, s) {
            (Setting::RingMor(_), "source") => Ok(Over::Source),
            (Setting::RingMor(_), "target") => Ok(Over::Target),
            (Setting::Category { cat, .. }, name) => (0..cat.object_count())
                .find(|&a| cat.objects()[a] == name)
                .map(Over::Object)
                .ok_or_else(|| schema(format!("modules over {name:?}: no such object"))),
            (Setting::RingMor(_), other) => Err(schema(format!("modules over {other:?}: use \"source\" or \"target\""))),
        }
    }

    pub fn algebra_over(&self, over: Over) -> Result<Arc<Algebra>> {
        match (&self.setting, over) {
            (Setting::RingMor(r), Over::Source) => Ok(r.source().clone()),
            (Setting::RingMor(r), Over::Target) => Ok(r.target().clone()),
            (Setting::Category { ctx: Ok(ctx), .. }, Over::Object(a)) => Ok(ctx.endo(a).clone()),
            (Setting::Category { ctx: Err(e), .. }, _) => Err(schema(format!("not a category: {e}"))),
            _ => Err(schema("module side does not match the document")),
        }
    }

    /// A module over `alg` by name: `regular`, `zero`, for ring morphisms
    /// `R` (the source, regular) and `S` (the target, regular, or restricted
    /// to the source), or a declared module over `alg`.
    pub fn module(&self, name: &str, alg: &Arc<Algebra>) -> Result<Arc<LeftModule>> {
        match name {
            "regular" => return Ok(Arc::new(LeftModule::regular(alg.clone()))),
            "zero" => return Ok(Arc::new(LeftModule::zero(alg.clone()))),
            _ => {}
        }
        if let Setting::RingMor(r) = &self.setting {
            let on_source = same_algebra(alg, r.source());
            match name {
                "R" if on_source => return Ok(Arc::new(LeftModule::regular(r.source().clone()))),
                "S" if on_source => {
                    return r.restrict(&LeftModule::regular(r.target().clone())).map_err(|e| schema(e.to_string()))
                }
                "S" => return Ok(Arc::new(LeftModule::regular(r.target().clone()))),
                _ => {}
            }
        }
        self.modules
            .iter()
            .find(|m| m.name == name && same_algebra(m.module.alg(), alg))
            .map(|m| m.module.clone())
            .ok_or_else(|| schema(format!("no module {name:?} over the required algebra")))
    }

    /// A functor by name.
    pub fn functor(&self, name: &str) -> Result<Arc<AddFunctor>> {
        let f = self.functors.iter().find(|f| f.name == name).ok_or_else(|| schema(format!("no functor {name:?}")))?;
        f.functor.clone().map_err(|e| schema(format!("functor {name:?} is invalid: {e}")))
    }

    /// A module over `∏ R_A` from comma-separated per-object module names
    /// (a single name applies to every object).
    pub fn product_module(&self, spec: &str) -> Result<Arc<LeftModule>> {
        let ctx = self.ctx().ok_or_else(|| schema("product modules need a category"))?;
        let names: Vec<&str> = spec.split(',').map(str::trim).collect();
        let n = ctx.object_count();
        if names.len() != 1 && names.len() != n {
            return Err(schema(format!("product module needs 1 or {n} comma-separated names")));
        }
        let parts = (0..n)
            .map(|a| self.module(names[if names.len() == 1 { 0 } else { a }], ctx.endo(a)))
            .collect::<Result<Vec<_>>>()?;
        Ok(product_module(ctx, &parts))
    }

    fn selector(&self, a: usize, doc: &ClassDoc) -> Result<ClassSelector> {
        let alg = self.algebra_over(Over::Object(a))?;
        let mods = |names: &[String]| names.iter().map(|n| self.module(n, &alg)).collect::<Result<Vec<_>>>();
        match doc {
            ClassDoc::Named(s) => match s.as_str() {
                "all" => Ok(ClassSelector::All),
                "projectives" => Ok(ClassSelector::Projectives),
                "injectives" => Ok(ClassSelector::Injectives),
                other => Err(schema(format!("unknown class {other:?}"))),
            },
            ClassDoc::RightPerpOf { right_perp_of } => Ok(ClassSelector::RightPerpOf(mods(right_perp_of)?)),
            ClassDoc::LeftPerpOf { left_perp_of } => Ok(ClassSelector::LeftPerpOf(mods(left_perp_of)?)),
        }
    }

    fn class_spec_from_doc(&self, name: &str, per_object: &BTreeMap<String, ClassDoc>) -> Result<Vec<ClassSelector>> {
        let ctx = self.ctx().ok_or_else(|| schema(format!("class spec {name:?} needs a category")))?;
        let n = ctx.object_count();
        let mut out = vec![None; n];
        for (o, d) in per_object {
            let a = (0..n).find(|&a| ctx.object_name(a) == o).ok_or_else(|| {
                schema(format!("class spec {name:?} refers to undeclared object {o:?}"))
            })?;
            out[a] = Some(self.selector(a, d)?);
        }
        out.into_iter()
            .enumerate()
            .map(|(a, s)| s.ok_or_else(|| schema(format!("class spec {name:?} has no entry for {:?}", ctx.object_name(a)))))
            .collect()
    }

    /// A class spec by name, as `all` / `projectives` / `injectives` for
    /// every object, or inline as `A=injectives,B=all`.
    pub fn class_spec(&self, spec: &str) -> Result<(String, Vec<ClassSelector>)> {
        if let Some((name, s)) = self.classes.iter().find(|(n, _)| n == spec) {
            return Ok((name.clone(), s.clone()));
        }
        let ctx = self.ctx().ok_or_else(|| schema("class specs need a category"))?;
        let n = ctx.object_count();
        let mut per_object = BTreeMap::new();
        if !spec.contains('=') {
            for a in 0..n {
                per_object.insert(ctx.object_name(a).to_string(), ClassDoc::Named(spec.to_string()));
            }
        } else {
            for part in spec.split(',') {
                let (o, c) = part.split_once('=').ok_or_else(|| CliError::Usage(format!("bad class entry {part:?}")))?;
                per_object.insert(o.trim().to_string(), ClassDoc::Named(c.trim().to_string()));
            }
        }
        Ok((spec.to_string(), self.class_spec_from_doc(spec, &per_object)?))
    }
}

/// Reads and loads a document file.
pub fn load_file(path: &str) -> Result<(SpecDocument, Loaded)> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })?;
    let doc = SpecDocument::parse(&text)?;
    let loaded = Loaded::from_document(&doc)?;
    Ok((doc, loaded))
}
