//! Command implementations. Each produces a text rendering, a JSON value and
//! an exit status from the same data.

use std::fmt::Write as _;

use serde_json::{json, Value as Json};

use psbck_core::algebra::{validate_with, Algebra, Elem, Limits, ValidationError};
use psbck_core::classes::{self, Substructure};
use psbck_core::deduction::{self, Quotient};
use psbck_core::error::{Error, Violation};
use psbck_core::generate;
use psbck_core::morphisms::{self, Homomorphism};
use psbck_core::operators::{self, OperatorKind, UnaryMap};
use psbck_core::subset::Subset;
use psbck_core::theorems::{self, SuiteReport};
use psbck_core::valuations::{self, PseudoValuation, Value};

use crate::document::{Document, ParseError};

pub const SCHEMA: u32 = 1;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(Vec<ParseError>),
    Core { error: Error, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core { error: Error::CarrierTooLarge { .. }, .. } => 2,
            CliError::Core { .. } => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "E_USAGE",
            CliError::Parse(_) => "E_PARSE",
            CliError::Core { error, .. } => error.code(),
        }
    }

    pub fn messages(&self) -> Vec<String> {
        match self {
            CliError::Usage(m) => vec![m.clone()],
            CliError::Parse(errs) => errs.iter().map(ToString::to_string).collect(),
            CliError::Core { message, .. } => vec![message.clone()],
        }
    }
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError::Core { message: error.to_string(), error }
    }
}

/// Converts a core error, naming witnesses by the elements of `alg`.
fn named(alg: &Algebra) -> impl Fn(Error) -> CliError + '_ {
    move |error| CliError::Core { message: error.render(alg), error }
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A finished command: what to print and how to exit.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub json: Json,
    pub status: i32,
}

impl Output {
    fn new(command: &str, text: String, mut json: Json, ok: bool) -> Self {
        let obj = json.as_object_mut().expect("report is an object");
        obj.insert("schema".into(), json!(SCHEMA));
        obj.insert("command".into(), json!(command));
        Output { text, json, status: if ok { 0 } else { 1 } }
    }
}

/// Names of objects the command operates on.
#[derive(Debug, Clone, Default)]
pub struct Selection {
    pub algebra: Option<String>,
    pub vto: Option<String>,
    pub target: Option<String>,
    pub target_vto: Option<String>,
    pub q: Option<String>,
    pub ds: Option<String>,
    pub hom: Option<String>,
    pub valuation: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumKind {
    Into,
    Clo,
    Vto,
    Ds,
    Dsn,
    Dsv,
    Hom,
    Vthom,
    Cong,
    Smarandache,
    Svto,
}

/// A parsed document with every algebra put through certification.
pub struct Workbench {
    pub doc: Document,
    pub certified: Vec<std::result::Result<Algebra, ValidationError>>,
    pub limits: Limits,
}

impl Workbench {
    pub fn new(doc: Document, limits: Limits) -> Self {
        let certified = doc.algebras.iter().map(|a| validate_with(&a.raw, &limits)).collect();
        Workbench { doc, certified, limits }
    }

    fn algebra(&self, i: usize) -> CliResult<&Algebra> {
        self.certified[i].as_ref().map_err(|e| {
            let def = &self.doc.algebras[i];
            CliError::Usage(format!("algebra `{}` (line {}) is not certified: {e}", def.name, def.line))
        })
    }

    fn algebra_name(&self, i: usize) -> &str {
        &self.doc.algebras[i].name
    }

    fn pick(&self, name: Option<&str>) -> CliResult<usize> {
        match name {
            None => Ok(0),
            Some(n) => self.doc.algebra_index(n).ok_or_else(|| CliError::Usage(format!("no algebra named `{n}`"))),
        }
    }

    fn map(&self, name: &str) -> CliResult<(usize, UnaryMap)> {
        let def = self
            .doc
            .maps
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| CliError::Usage(format!("no map named `{name}`")))?;
        let alg = self.algebra(def.algebra)?;
        Ok((def.algebra, UnaryMap::new(alg, def.image.clone())?))
    }

    /// The document name of `f` on algebra `i`, or its image vector.
    fn map_label(&self, i: usize, alg: &Algebra, f: &UnaryMap) -> String {
        self.doc
            .maps
            .iter()
            .find(|m| m.algebra == i && m.image == f.image())
            .map_or_else(|| f.render(alg).join(" "), |m| m.name.clone())
    }

    fn subset(&self, name: &str) -> CliResult<(usize, Subset)> {
        let def = self
            .doc
            .subsets
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| CliError::Usage(format!("no subset named `{name}`")))?;
        self.algebra(def.algebra)?;
        Ok((def.algebra, def.members.iter().copied().collect()))
    }

    fn valuation(&self, name: &str) -> CliResult<(usize, Vec<Value>)> {
        let def = self
            .doc
            .valuations
            .iter()
            .find(|v| v.name == name)
            .ok_or_else(|| CliError::Usage(format!("no valuation named `{name}`")))?;
        self.algebra(def.algebra)?;
        Ok((def.algebra, def.values.clone()))
    }

    fn hom(&self, name: &str) -> CliResult<(usize, usize, Homomorphism)> {
        let def = self
            .doc
            .homs
            .iter()
            .find(|h| h.name == name)
            .ok_or_else(|| CliError::Usage(format!("no hom named `{name}`")))?;
        let (a, b) = (self.algebra(def.source)?, self.algebra(def.target)?);
        Ok((def.source, def.target, Homomorphism::new(a, b, def.image.clone())?))
    }
}

fn required<'a>(flag: &str, value: &'a Option<String>) -> CliResult<&'a str> {
    value.as_deref().ok_or_else(|| CliError::Usage(format!("missing required option --{flag}")))
}

fn names(alg: &Algebra, xs: impl IntoIterator<Item = Elem>) -> Vec<String> {
    xs.into_iter().map(|x| alg.name(x).to_string()).collect()
}

fn set_names(alg: &Algebra, s: Subset) -> Vec<String> {
    names(alg, s.iter())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn violation_json(alg: &Algebra, v: &Violation) -> Json {
    json!({ "law": v.law, "witness": names(alg, v.witness.iter().copied()) })
}

fn verdict_json(alg: &Algebra, v: &std::result::Result<(), Violation>) -> Json {
    match v {
        Ok(()) => json!({ "holds": true }),
        Err(w) => json!({ "holds": false, "violation": violation_json(alg, w) }),
    }
}

fn verdict_text(alg: &Algebra, v: &std::result::Result<(), Violation>) -> String {
    match v {
        Ok(()) => "yes".into(),
        Err(w) => format!("no ({})", w.render(alg)),
    }
}

/// An algebra in document syntax.
pub fn algebra_block(name: &str, alg: &Algebra) -> String {
    let all: Vec<Elem> = alg.elements().collect();
    let width = alg.names().iter().map(|n| n.chars().count()).max().unwrap_or(1);
    let row = |r: &[Elem]| r.iter().map(|&y| format!("{:<width$}", alg.name(y))).collect::<Vec<_>>().join(" ");
    let mut s =
        format!("algebra {name}\n  elements: {}\n  one: {}\n", names(alg, all.clone()).join(" "), alg.name(alg.one()));
    if let Some(z) = alg.zero() {
        let _ = writeln!(s, "  zero: {}", alg.name(z));
    }
    for (key, rows) in [("arrow", alg.arrow_rows()), ("squig", alg.squig_rows())] {
        let _ = writeln!(s, "  {key}:");
        for r in rows {
            let _ = writeln!(s, "    {}", row(&r).trim_end());
        }
    }
    s
}

fn algebra_json(alg: &Algebra) -> Json {
    let table = |rows: Vec<Vec<Elem>>| -> Vec<Vec<String>> { rows.into_iter().map(|r| names(alg, r)).collect() };
    json!({
        "elements": alg.names(),
        "one": alg.name(alg.one()),
        "zero": alg.zero().map(|z| alg.name(z)),
        "arrow": table(alg.arrow_rows()),
        "squig": table(alg.squig_rows()),
    })
}

fn map_line(label: &str, on: &str, alg: &Algebra, f: &UnaryMap) -> String {
    format!("map {label} on {on}: {}", f.render(alg).join(" "))
}

fn limits_from_env(value: Option<String>) -> CliResult<Limits> {
    match value {
        None => Ok(Limits::default()),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .map(Limits::with_enumeration_cap)
            .map_err(|_| CliError::Usage(format!("PSBCK_MAX_N must be a positive integer, got `{v}`"))),
    }
}

pub fn limits(env: Option<String>) -> CliResult<Limits> {
    limits_from_env(env)
}

// ---------------------------------------------------------------- validate

pub fn validate(wb: &Workbench) -> Output {
    let mut text = String::new();
    let mut ok = true;
    let mut algebras = Vec::new();
    for (i, def) in wb.doc.algebras.iter().enumerate() {
        match &wb.certified[i] {
            Ok(a) => {
                let zero = a.zero().map_or("unbounded".to_string(), |z| format!("zero {}", a.name(z)));
                let _ = writeln!(
                    text,
                    "algebra {}: certified ({}, {zero})",
                    def.name,
                    plural(a.n(), "element", "elements")
                );
                algebras.push(json!({ "name": def.name, "certified": true, "size": a.n() }));
            }
            Err(e) => {
                ok = false;
                let _ = writeln!(text, "algebra {} (line {}): not certified", def.name, def.line);
                let problems = validation_problems(&def.raw.names, e);
                for p in &problems {
                    let _ = writeln!(text, "  {p}");
                }
                algebras.push(json!({ "name": def.name, "certified": false, "line": def.line, "problems": problems }));
            }
        }
    }

    let mut maps = Vec::new();
    for m in &wb.doc.maps {
        let Ok(a) = &wb.certified[m.algebra] else { continue };
        let f = UnaryMap::new(a, m.image.clone()).expect("parser checked arity");
        let kinds: Vec<&str> = [
            ("interior", OperatorKind::Interior),
            ("closure", OperatorKind::Closure),
            ("very-true", OperatorKind::VeryTrue),
        ]
        .into_iter()
        .filter(|(_, k)| k.check(a, &f).is_ok())
        .map(|(n, _)| n)
        .collect();
        let shown = if kinds.is_empty() { "plain map".to_string() } else { kinds.join(", ") };
        let _ = writeln!(text, "map {}: {shown}", m.name);
        maps.push(json!({ "name": m.name, "kinds": kinds }));
    }
    let mut subsets = Vec::new();
    for s in &wb.doc.subsets {
        let Ok(a) = &wb.certified[s.algebra] else { continue };
        let set: Subset = s.members.iter().copied().collect();
        let (ds, normal, sub) = (deduction::is_ds(a, set), deduction::is_normal_ds(a, set), a.is_subalgebra(set));
        let _ = writeln!(
            text,
            "subset {}: deductive system {}, normal {}, subalgebra {}",
            s.name,
            yes(ds),
            yes(normal),
            yes(sub)
        );
        subsets.push(json!({ "name": s.name, "deductive_system": ds, "normal": normal, "subalgebra": sub }));
    }
    let mut vals = Vec::new();
    for v in &wb.doc.valuations {
        let Ok(a) = &wb.certified[v.algebra] else { continue };
        let pv = valuations::is_pseudo_valuation(a, &v.values).expect("parser checked arity");
        let full = valuations::is_valuation(a, &v.values).expect("parser checked arity");
        let _ = writeln!(
            text,
            "valuation {}: pseudo-valuation {}, valuation {}",
            v.name,
            verdict_text(a, &pv),
            yes(full.is_ok())
        );
        vals.push(json!({ "name": v.name, "pseudo_valuation": verdict_json(a, &pv), "valuation": full.is_ok() }));
    }
    let mut homs = Vec::new();
    for h in &wb.doc.homs {
        let (Ok(a), Ok(b)) = (&wb.certified[h.source], &wb.certified[h.target]) else { continue };
        let f = Homomorphism::new(a, b, h.image.clone()).expect("parser checked arity");
        let verdict = morphisms::is_hom(a, b, &f).expect("same algebras");
        ok &= verdict.is_ok();
        let _ = writeln!(text, "hom {}: homomorphism {}", h.name, verdict_text(a, &verdict));
        homs.push(json!({ "name": h.name, "homomorphism": verdict_json(a, &verdict) }));
    }
    let json =
        json!({ "ok": ok, "algebras": algebras, "maps": maps, "subsets": subsets, "valuations": vals, "homs": homs });
    Output::new("validate", text, json, ok)
}

fn validation_problems(names: &[String], e: &ValidationError) -> Vec<String> {
    match e {
        ValidationError::Malformed(list) => list.iter().map(ToString::to_string).collect(),
        ValidationError::Axioms(list) => list
            .iter()
            .map(|v| {
                let w: Vec<&str> = v.witness.iter().map(|&x| names.get(x).map_or("?", String::as_str)).collect();
                format!("{} fails at ({})", v.law, w.join(", "))
            })
            .collect(),
    }
}

// ------------------------------------------------------------------- props

pub fn props(wb: &Workbench, sel: &Selection) -> CliResult<Output> {
    let i = wb.pick(sel.algebra.as_deref())?;
    let a = wb.algebra(i)?;
    let name = wb.algebra_name(i);
    let mut text = format!("algebra {name}\n");
    let _ = writeln!(text, "  size: {}", a.n());
    let _ = writeln!(text, "  linear: {}", yes(a.is_linear()));
    let mut json = json!({ "algebra": name, "size": a.n(), "linear": a.is_linear(), "bounded": a.is_bounded() });
    if a.is_bounded() {
        let (reg, den) = (a.regular_elements()?, a.dense_elements()?);
        let (good, inv, gl) = (a.is_good()?, a.is_involutive()?, a.is_glivenko()?);
        let _ = writeln!(text, "  bounded: yes (zero {})", a.name(a.require_zero()?));
        let _ = writeln!(text, "  good: {}\n  involutive: {}\n  glivenko: {}", yes(good), yes(inv), yes(gl));
        let _ = writeln!(text, "  regular: {}", set_names(a, reg).join(" "));
        let _ = writeln!(text, "  dense: {}", set_names(a, den).join(" "));
        let obj = json.as_object_mut().expect("object");
        obj.insert("good".into(), json!(good));
        obj.insert("involutive".into(), json!(inv));
        obj.insert("glivenko".into(), json!(gl));
        obj.insert("regular".into(), json!(set_names(a, reg)));
        obj.insert("dense".into(), json!(set_names(a, den)));
    } else {
        let _ = writeln!(text, "  bounded: no");
    }
    if let Ok(p) = classes::pseudo_product(a) {
        let rows: Vec<Vec<Elem>> = p.odot.clone();
        let _ = writeln!(text, "  product:");
        for (x, r) in rows.iter().enumerate() {
            let _ = writeln!(text, "    {}: {}", a.name(x), names(a, r.iter().copied()).join(" "));
        }
        json["product"] = json!(rows.iter().map(|r| names(a, r.iter().copied())).collect::<Vec<_>>());
    }
    let report = classes::classify(a);
    let _ = writeln!(text, "  classes:");
    let mut levels = serde_json::Map::new();
    for (label, level) in report.levels() {
        let detail = match (&level.witness, level.holds) {
            (_, true) => "yes".to_string(),
            (Some(w), false) if w.witness.is_empty() => format!("no ({})", w.law),
            (Some(w), false) => format!("no ({})", w.render(a)),
            (None, false) => "no".to_string(),
        };
        let _ = writeln!(text, "    {label}: {detail}");
        let mut entry = json!({ "holds": level.holds });
        if let Some(w) = &level.witness {
            entry["witness"] = violation_json(a, w);
        }
        levels.insert(label.into(), entry);
    }
    json["classes"] = Json::Object(levels);
    Ok(Output::new("props", text, json, true))
}

// -------------------------------------------------------------------- enum

pub fn enumerate(wb: &Workbench, kind: EnumKind, sel: &Selection) -> CliResult<Output> {
    let limits = &wb.limits;
    match kind {
        EnumKind::Into | EnumKind::Clo | EnumKind::Vto => {
            let i = wb.pick(sel.algebra.as_deref())?;
            let a = wb.algebra(i)?;
            let (op, label, what) = match kind {
                EnumKind::Into => (OperatorKind::Interior, "phi", "interior operators"),
                EnumKind::Clo => (OperatorKind::Closure, "c", "closure operators"),
                _ => (OperatorKind::VeryTrue, "v", "very true operators"),
            };
            let maps = op.enumerate(a, limits)?;
            Ok(map_list(&format!("enum {}", kind_name(kind)), wb.algebra_name(i), a, label, what, &maps))
        }
        EnumKind::Ds | EnumKind::Dsn | EnumKind::Dsv => {
            let (i, systems, what) = match kind {
                EnumKind::Dsv => {
                    let (i, v) = wb.map(required("vto", &sel.vto)?)?;
                    (i, deduction::enumerate_ds_v(wb.algebra(i)?, &v, limits)?, "v-deductive systems")
                }
                EnumKind::Dsn => {
                    let i = wb.pick(sel.algebra.as_deref())?;
                    (i, deduction::enumerate_ds_n(wb.algebra(i)?, limits)?, "normal deductive systems")
                }
                _ => {
                    let i = wb.pick(sel.algebra.as_deref())?;
                    (i, deduction::enumerate_ds(wb.algebra(i)?, limits)?, "deductive systems")
                }
            };
            let a = wb.algebra(i)?;
            let on = wb.algebra_name(i);
            let mut text = format!("# {} {what} on {on}\n", systems.len());
            let mut items = Vec::new();
            for (k, d) in systems.iter().enumerate() {
                let members = set_names(a, d.members);
                let _ = writeln!(
                    text,
                    "subset D{} on {on}: {}{}",
                    k + 1,
                    members.join(" "),
                    if d.normal { "  # normal" } else { "" }
                );
                items.push(json!({ "name": format!("D{}", k + 1), "members": members, "normal": d.normal }));
            }
            let json = json!({ "algebra": on, "kind": kind_name(kind), "count": systems.len(), "items": items });
            Ok(Output::new(&format!("enum {}", kind_name(kind)), text, json, true))
        }
        EnumKind::Hom | EnumKind::Vthom => {
            let (i, j, homs) = if kind == EnumKind::Hom {
                let i = wb.pick(sel.algebra.as_deref())?;
                let j = match &sel.target {
                    Some(t) => wb.pick(Some(t))?,
                    None => i,
                };
                (i, j, morphisms::enumerate_hom(wb.algebra(i)?, wb.algebra(j)?, limits)?)
            } else {
                let (i, v) = wb.map(required("vto", &sel.vto)?)?;
                let (j, u) = match &sel.target_vto {
                    Some(name) => wb.map(name)?,
                    None => (i, v.clone()),
                };
                (i, j, morphisms::enumerate_vthom(wb.algebra(i)?, &v, wb.algebra(j)?, &u, limits)?)
            };
            let b = wb.algebra(j)?;
            let (from, to) = (wb.algebra_name(i), wb.algebra_name(j));
            let what = if kind == EnumKind::Hom { "homomorphisms" } else { "VT-homomorphisms" };
            let mut text = format!("# {} {what} from {from} to {to}\n", homs.len());
            let mut items = Vec::new();
            for (k, h) in homs.iter().enumerate() {
                let image = h.render(b);
                let _ = writeln!(text, "hom psi{} from {from} to {to}: {}", k + 1, image.join(" "));
                items.push(json!({ "name": format!("psi{}", k + 1), "image": image }));
            }
            let json =
                json!({ "source": from, "target": to, "kind": kind_name(kind), "count": homs.len(), "items": items });
            Ok(Output::new(&format!("enum {}", kind_name(kind)), text, json, true))
        }
        EnumKind::Cong => {
            let i = wb.pick(sel.algebra.as_deref())?;
            let a = wb.algebra(i)?;
            let on = wb.algebra_name(i);
            let quotients = deduction::enumerate_congruences(a, limits)?;
            let mut text = format!("# {} congruences on {on}\n", quotients.len());
            let mut items = Vec::new();
            for q in &quotients {
                let classes = class_lists(a, q);
                let rendered: Vec<String> = classes.iter().map(|c| format!("{{{}}}", c.join(" "))).collect();
                let kernel = set_names(a, q.kernel);
                let _ = writeln!(
                    text,
                    "H = {{{}}}: {} {}",
                    kernel.join(" "),
                    plural(q.algebra.n(), "class", "classes"),
                    rendered.join(" ")
                );
                items.push(json!({ "kernel": kernel, "classes": classes }));
            }
            let json = json!({ "algebra": on, "count": quotients.len(), "items": items });
            Ok(Output::new("enum cong", text, json, true))
        }
        EnumKind::Smarandache => {
            let i = wb.pick(sel.algebra.as_deref())?;
            let a = wb.algebra(i)?;
            let on = wb.algebra_name(i);
            let subs = classes::smarandache_search(a, limits)?;
            let mut text = format!("# {} Smarandache substructures on {on}\n", subs.len());
            let mut items = Vec::new();
            for (k, s) in subs.iter().enumerate() {
                let members = set_names(a, s.q);
                let _ = writeln!(text, "subset Q{} on {on}: {}", k + 1, members.join(" "));
                items.push(json!({ "name": format!("Q{}", k + 1), "members": members }));
            }
            let json = json!({ "algebra": on, "count": subs.len(), "items": items });
            Ok(Output::new("enum smarandache", text, json, true))
        }
        EnumKind::Svto => {
            let qname = required("q", &sel.q)?;
            let (i, q) = wb.subset(qname)?;
            let a = wb.algebra(i)?;
            let sub = classes::smarandache_substructure(a, q).map_err(named(a))?;
            let maps = classes::svto(&sub, limits)?;
            let mut out = map_list("enum svto", qname, &sub.algebra, "w", "very true operators", &maps);
            out.text.insert_str(0, &algebra_block(qname, &sub.algebra));
            out.json["substructure"] = algebra_json(&sub.algebra);
            let restrictions = restrictions(a, &sub, &maps, limits)?;
            for (v, hit) in &restrictions {
                let shown = hit.map_or("nothing (Q is not mapped into itself)".to_string(), |k| format!("w{}", k + 1));
                let _ = writeln!(out.text, "# {} restricts to {shown}", wb.map_label(i, a, v));
            }
            out.json["restrictions"] = json!(restrictions
                .iter()
                .map(|(v, hit)| json!({ "vto": wb.map_label(i, a, v), "restriction": hit.map(|k| format!("w{}", k + 1)) }))
                .collect::<Vec<_>>());
            Ok(out)
        }
    }
}

/// For each operator of the parent, which operator of the substructure it restricts to.
fn restrictions(
    a: &Algebra,
    sub: &Substructure,
    maps: &[UnaryMap],
    limits: &Limits,
) -> CliResult<Vec<(UnaryMap, Option<usize>)>> {
    let mut out = Vec::new();
    for v in operators::enumerate_vto(a, limits)? {
        let hit = match classes::restrict_vto(a, &v, sub)? {
            Ok(w) => maps.iter().position(|m| *m == w),
            Err(_) => None,
        };
        out.push((v, hit));
    }
    Ok(out)
}

pub fn kind_name(kind: EnumKind) -> &'static str {
    match kind {
        EnumKind::Into => "into",
        EnumKind::Clo => "clo",
        EnumKind::Vto => "vto",
        EnumKind::Ds => "ds",
        EnumKind::Dsn => "dsn",
        EnumKind::Dsv => "dsv",
        EnumKind::Hom => "hom",
        EnumKind::Vthom => "vthom",
        EnumKind::Cong => "cong",
        EnumKind::Smarandache => "smarandache",
        EnumKind::Svto => "svto",
    }
}

fn map_list(command: &str, on: &str, alg: &Algebra, label: &str, what: &str, maps: &[UnaryMap]) -> Output {
    let mut text = format!("# {} {what} on {on}\n", maps.len());
    let mut items = Vec::new();
    for (k, f) in maps.iter().enumerate() {
        let name = format!("{label}{}", k + 1);
        let _ = writeln!(text, "{}", map_line(&name, on, alg, f));
        items.push(json!({ "name": name, "image": f.render(alg) }));
    }
    Output::new(command, text, json!({ "algebra": on, "count": maps.len(), "items": items }), true)
}

fn class_lists(a: &Algebra, q: &Quotient) -> Vec<Vec<String>> {
    (0..q.algebra.n()).map(|c| set_names(a, q.class(c))).collect()
}

// --------------------------------------------------- quotient, lift, hedges

fn quotient_text(name: &str, a: &Algebra, q: &Quotient) -> String {
    let mut text = String::new();
    for (c, members) in class_lists(a, q).iter().enumerate() {
        let _ = writeln!(text, "# {} = {{{}}}", q.algebra.name(c), members.join(" "));
    }
    text + &algebra_block(name, &q.algebra)
}

fn quotient_json(a: &Algebra, q: &Quotient) -> Json {
    json!({ "classes": class_lists(a, q), "algebra": algebra_json(&q.algebra) })
}

pub fn quotient(wb: &Workbench, sel: &Selection) -> CliResult<Output> {
    let hname = required("ds", &sel.ds)?;
    let (i, h) = wb.subset(hname)?;
    let a = wb.algebra(i)?;
    let q = deduction::congruence_from(a, h).map_err(named(a))?;
    let name = format!("{}/{hname}", wb.algebra_name(i));
    let text = quotient_text(&name, a, &q);
    let mut json = quotient_json(a, &q);
    json["name"] = json!(name);
    Ok(Output::new("quotient", text, json, true))
}

pub fn lift(wb: &Workbench, sel: &Selection) -> CliResult<Output> {
    let vname = required("vto", &sel.vto)?;
    let hname = required("ds", &sel.ds)?;
    let (i, v) = wb.map(vname)?;
    let (j, h) = wb.subset(hname)?;
    if i != j {
        return Err(CliError::Usage(format!("`{vname}` and `{hname}` live on different algebras")));
    }
    let a = wb.algebra(i)?;
    let (q, vhat) = deduction::lift_vto_to_quotient(a, &v, h).map_err(named(a))?;
    let name = format!("{}/{hname}", wb.algebra_name(i));
    let mut text = quotient_text(&name, a, &q);
    let _ = writeln!(text, "{}", map_line(&format!("{vname}_hat"), &name, &q.algebra, &vhat));
    let mut json = quotient_json(a, &q);
    json["name"] = json!(name);
    json["vhat"] = json!(vhat.render(&q.algebra));
    Ok(Output::new("lift", text, json, true))
}

pub fn hedges(wb: &Workbench, sel: &Selection) -> CliResult<Output> {
    let vname = required("vto", &sel.vto)?;
    let (i, v) = wb.map(vname)?;
    let a = wb.algebra(i)?;
    let on = wb.algebra_name(i);
    let (s1, s2) = operators::sigma_hedges(a, &v).map_err(named(a))?;
    let vtst = operators::is_vtst(a, &v, &s1, &s2).map_err(named(a))?;
    let closure = [&s1, &s2].map(|s| operators::is_closure(a, s).is_ok());
    let mut text = String::new();
    let _ = writeln!(text, "{}", map_line(&format!("{vname}_s1"), on, a, &s1));
    let _ = writeln!(text, "{}", map_line(&format!("{vname}_s2"), on, a, &s2));
    let _ = writeln!(text, "# vt,st structure: {}", verdict_text(a, &vtst));
    let _ = writeln!(text, "# closure operators: {} {}", yes(closure[0]), yes(closure[1]));
    let json = json!({
        "algebra": on,
        "s1": s1.render(a),
        "s2": s2.render(a),
        "vtst": verdict_json(a, &vtst),
        "closure": closure,
    });
    let ok = vtst.is_ok();
    Ok(Output::new("hedges", text, json, ok))
}

// ------------------------------------------------------------------ factor

pub fn factor(wb: &Workbench, sel: &Selection) -> CliResult<Output> {
    let (i, j, f) = wb.hom(required("hom", &sel.hom)?)?;
    let (vi, v) = wb.map(required("vto", &sel.vto)?)?;
    let (ui, u) = wb.map(required("target-vto", &sel.target_vto)?)?;
    let hname = required("ds", &sel.ds)?;
    let (hi, h) = wb.subset(hname)?;
    if vi != i || hi != i || ui != j {
        return Err(CliError::Usage("--vto and --ds must live on the source, --target-vto on the target".into()));
    }
    let (a, b) = (wb.algebra(i)?, wb.algebra(j)?);
    let fac = morphisms::factor(a, &v, b, &u, &f, h, &wb.limits).map_err(named(a))?;
    let qa = &fac.quotient.algebra;
    let name = format!("{}/{hname}", wb.algebra_name(i));
    let target = wb.algebra_name(j);
    let mut text = quotient_text(&name, a, &fac.quotient);
    let _ = writeln!(text, "{}", map_line("vhat", &name, qa, &fac.vhat));
    let induced = fac.induced.render(b);
    let _ = writeln!(text, "hom induced from {name} to {target}: {}", induced.join(" "));
    let image = set_names(b, fac.induced.image());
    let kernel = set_names(qa, fac.induced.kernel(qa, b));
    let _ = writeln!(text, "# unique: yes\n# image: {}\n# kernel: {}", image.join(" "), kernel.join(" "));
    let mut json = quotient_json(a, &fac.quotient);
    json["name"] = json!(name);
    json["vhat"] = json!(fac.vhat.render(qa));
    json["induced"] = json!(induced);
    json["unique"] = json!(true);
    json["image"] = json!(image);
    json["kernel"] = json!(kernel);
    Ok(Output::new("factor", text, json, true))
}

// --------------------------------------------------------------- valuation

pub fn valuation_check(wb: &Workbench, sel: &Selection) -> CliResult<Output> {
    let pname = required("valuation", &sel.valuation)?;
    let (i, values) = wb.valuation(pname)?;
    let a = wb.algebra(i)?;
    let pv = valuations::is_pseudo_valuation(a, &values)?;
    let full = valuations::is_valuation(a, &values)?;
    let mut text = format!("valuation {pname} on {}: {}\n", wb.algebra_name(i), valuation_entries(a, &values));
    let _ = writeln!(text, "# pseudo-valuation: {}", verdict_text(a, &pv));
    let _ = writeln!(text, "# valuation: {}", verdict_text(a, &full));
    if pv.is_ok() {
        let derived = valuations::derived_verdict(a, &values);
        let _ = writeln!(text, "# order reversing and nonnegative: {}", verdict_text(a, &derived));
    }
    let json = json!({
        "valuation": pname,
        "values": value_strings(&values),
        "pseudo_valuation": verdict_json(a, &pv),
        "valuation_proper": verdict_json(a, &full),
    });
    let ok = pv.is_ok();
    Ok(Output::new("valuation check", text, json, ok))
}

pub fn valuation_compose(wb: &Workbench, sel: &Selection) -> CliResult<Output> {
    let pname = required("valuation", &sel.valuation)?;
    let vname = required("vto", &sel.vto)?;
    let (i, values) = wb.valuation(pname)?;
    let (j, v) = wb.map(vname)?;
    if i != j {
        return Err(CliError::Usage(format!("`{pname}` and `{vname}` live on different algebras")));
    }
    let a = wb.algebra(i)?;
    let phi = PseudoValuation::new(a, values).map_err(named(a))?;
    let composed = valuations::compose_with_vto(a, &phi, &v).map_err(named(a))?;
    let pv = valuations::is_pseudo_valuation(a, composed.values())?;
    let mut text =
        format!("valuation {pname}_{vname} on {}: {}\n", wb.algebra_name(i), valuation_entries(a, composed.values()));
    let _ = writeln!(text, "# pseudo-valuation: {}", verdict_text(a, &pv));
    let json = json!({
        "valuation": pname,
        "vto": vname,
        "values": value_strings(composed.values()),
        "pseudo_valuation": verdict_json(a, &pv),
    });
    let ok = pv.is_ok();
    Ok(Output::new("valuation compose", text, json, ok))
}

fn valuation_entries(a: &Algebra, values: &[Value]) -> String {
    a.elements().map(|x| format!("{}={}", a.name(x), values[x])).collect::<Vec<_>>().join(" ")
}

fn value_strings(values: &[Value]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

// ------------------------------------------------------------------- suite

#[derive(Debug, Clone, Copy)]
pub struct Generated {
    pub count: usize,
    pub seed: u64,
    pub max_n: usize,
}

pub fn suite(wb: &Workbench, generated: Option<Generated>) -> CliResult<Output> {
    let mut total = SuiteReport::default();
    let mut text = String::new();
    let mut runs = Vec::new();
    for (i, def) in wb.doc.algebras.iter().enumerate() {
        let a = wb.algebra(i)?;
        let r = theorems::run_suite(a, &wb.limits)?;
        let _ = writeln!(text, "algebra {}: {} checks, {} failed", def.name, r.instances(), r.failed());
        runs.push(json!({ "algebra": def.name, "checks": r.instances(), "failed": r.failed() }));
        total.absorb(r);
    }
    if let Some(g) = generated {
        let sample = generate::sample(g.seed, g.count, g.max_n);
        let mut checks = 0;
        let mut failed = 0;
        for a in &sample {
            let r = theorems::run_suite(a, &wb.limits)?;
            checks += r.instances();
            failed += r.failed();
            total.absorb(r);
        }
        let _ = writeln!(
            text,
            "generated: {} algebras (seed {}, n <= {}), {checks} checks, {failed} failed",
            sample.len(),
            g.seed,
            g.max_n
        );
        runs.push(
            json!({ "generated": sample.len(), "seed": g.seed, "max_n": g.max_n, "checks": checks, "failed": failed }),
        );
    }
    text.push('\n');
    for fam in &total.families {
        match (&fam.skipped, fam.passed()) {
            (Some(reason), _) if fam.instances == 0 => {
                let _ = writeln!(text, "SKIP {}: {reason}", fam.name);
            }
            (None, _) if fam.instances == 0 => {
                let _ = writeln!(text, "SKIP {}: no applicable instances", fam.name);
            }
            (_, true) => {
                let _ = writeln!(text, "PASS {}: {}", fam.name, plural(fam.instances, "instance", "instances"));
            }
            (_, false) => {
                let _ = writeln!(text, "FAIL {}: {} of {} instances", fam.name, fam.failed, fam.instances);
                for msg in &fam.failures {
                    let _ = writeln!(text, "  {msg}");
                }
            }
        }
    }
    let ok = total.passed();
    let _ = writeln!(
        text,
        "\n{}: {} checks, {} failed",
        if ok { "all passed" } else { "FAILED" },
        total.instances(),
        total.failed()
    );
    let json = json!({ "ok": ok, "runs": runs, "families": total.families, "checks": total.instances(), "failed": total.failed() });
    Ok(Output::new("suite", text, json, ok))
}
