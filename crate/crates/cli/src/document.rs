//! The workbench text format.
//!
//! ```text
//! # comment
//! algebra A
//!   elements: 1 a b c
//!   one: 1
//!   zero: a
//!   arrow:
//!     1 a b c
//!     ...
//!   squig:
//!     ...
//! map v on A: 1 a a a
//! valuation phi on A: 1=0 a=3 b=1 c=2
//! subset H on A: 1 b
//! hom psi from A to B: 1 a b c
//! ```

use std::collections::HashMap;
use std::fmt;

use psbck_core::valuations::Value;
use psbck_core::{Elem, RawAlgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct AlgebraDef {
    pub name: String,
    pub line: usize,
    pub raw: RawAlgebra,
}

#[derive(Debug, Clone)]
pub struct MapDef {
    pub name: String,
    pub line: usize,
    pub algebra: usize,
    pub image: Vec<Elem>,
}

#[derive(Debug, Clone)]
pub struct ValuationDef {
    pub name: String,
    pub line: usize,
    pub algebra: usize,
    pub values: Vec<Value>,
}

#[derive(Debug, Clone)]
pub struct SubsetDef {
    pub name: String,
    pub line: usize,
    pub algebra: usize,
    pub members: Vec<Elem>,
}

#[derive(Debug, Clone)]
pub struct HomDef {
    pub name: String,
    pub line: usize,
    pub source: usize,
    pub target: usize,
    pub image: Vec<Elem>,
}

#[derive(Debug, Clone, Default)]
pub struct Document {
    pub algebras: Vec<AlgebraDef>,
    pub maps: Vec<MapDef>,
    pub valuations: Vec<ValuationDef>,
    pub subsets: Vec<SubsetDef>,
    pub homs: Vec<HomDef>,
}

impl Document {
    pub fn algebra_index(&self, name: &str) -> Option<usize> {
        self.algebras.iter().position(|a| a.name == name)
    }
}

/// A whitespace-delimited token with its 1-based column.
#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    col: usize,
    text: &'a str,
}

fn tokens(line: &str, from: usize) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().skip_while(|&(i, _)| i < from) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Tok { col: line[..s].chars().count() + 1, text: &line[s..i] });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Tok { col: line[..s].chars().count() + 1, text: &line[s..] });
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.find('#').map_or(line, |i| &line[..i])
}

const KEYWORDS: [&str; 5] = ["algebra", "map", "valuation", "subset", "hom"];
const KEYS: [&str; 5] = ["elements", "one", "zero", "arrow", "squig"];

struct Parser<'a> {
    lines: Vec<&'a str>,
    pos: usize,
    doc: Document,
    names: HashMap<String, usize>,
    errors: Vec<ParseError>,
}

type Step<T> = std::result::Result<T, ParseError>;

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, col, message: message.into() }
}

/// Splits `key: rest` at the first colon; returns the key tokens and the column offset of the rest.
fn split_colon(line: &str) -> Option<(&str, usize)> {
    line.find(':').map(|i| (&line[..i], i + 1))
}

pub fn parse(text: &str) -> std::result::Result<Document, Vec<ParseError>> {
    let mut p = Parser {
        lines: text.lines().map(strip_comment).collect(),
        pos: 0,
        doc: Document::default(),
        names: HashMap::new(),
        errors: Vec::new(),
    };
    while p.pos < p.lines.len() {
        let ln = p.pos + 1;
        let line = p.lines[p.pos];
        let toks = tokens(line, 0);
        p.pos += 1;
        let Some(first) = toks.first() else { continue };
        let result = match first.text {
            "algebra" => p.algebra(ln, &toks),
            "map" | "subset" | "valuation" | "hom" => p.object(ln, line, first.text),
            other => Err(err(ln, first.col, format!("expected a definition, found `{other}`"))),
        };
        if let Err(e) = result {
            p.errors.push(e);
            while p.pos < p.lines.len() && p.continues_block() {
                p.pos += 1;
            }
        }
    }
    if p.doc.algebras.is_empty() && p.errors.is_empty() {
        p.errors.push(err(1, 1, "no algebra defined"));
    }
    if p.errors.is_empty() {
        Ok(p.doc)
    } else {
        Err(p.errors)
    }
}

impl<'a> Parser<'a> {
    fn claim(&mut self, tok: Tok<'_>, ln: usize) -> Step<()> {
        if let Some(prev) = self.names.get(tok.text) {
            return Err(err(
                ln,
                tok.col,
                format!("duplicate definition of `{}` (first defined on line {prev})", tok.text),
            ));
        }
        self.names.insert(tok.text.to_string(), ln);
        Ok(())
    }

    /// Whether the line at `pos` begins a new top-level definition.
    fn at_definition(&self) -> bool {
        tokens(self.lines[self.pos], 0).first().is_some_and(|t| KEYWORDS.contains(&t.text))
    }

    /// Whether the line at `pos` belongs to the block before it: blank, indented
    /// or an algebra field, and not a new definition.
    fn continues_block(&self) -> bool {
        let line = self.lines[self.pos];
        match tokens(line, 0).first() {
            None => true,
            Some(t) if KEYWORDS.contains(&t.text) => false,
            Some(t) => line.starts_with(char::is_whitespace) || KEYS.contains(&t.text.trim_end_matches(':')),
        }
    }

    fn algebra(&mut self, ln: usize, toks: &[Tok<'_>]) -> Step<()> {
        let name = match toks {
            [_, name] => *name,
            [kw] => return Err(err(ln, kw.col + kw.text.len(), "expected an algebra name")),
            [_, _, extra, ..] => return Err(err(ln, extra.col, "unexpected token after the algebra name")),
            [] => unreachable!(),
        };
        self.claim(name, ln)?;

        let mut elements: Option<Vec<String>> = None;
        let mut one = None;
        let mut zero = None;
        let mut tables: [Option<Vec<Vec<Elem>>>; 2] = [None, None];
        let mut seen: HashMap<&str, usize> = HashMap::new();

        while self.pos < self.lines.len() && !self.at_definition() {
            let kln = self.pos + 1;
            let line = self.lines[self.pos];
            self.pos += 1;
            let Some(first) = tokens(line, 0).first().copied() else { continue };
            let Some((head, rest)) = split_colon(line) else {
                return Err(err(kln, first.col, format!("expected one of {} followed by `:`", KEYS.join(", "))));
            };
            let key = head.trim();
            if !KEYS.contains(&key) {
                return Err(err(kln, first.col, format!("unknown key `{key}`")));
            }
            if let Some(prev) = seen.insert(key, kln) {
                return Err(err(kln, first.col, format!("duplicate `{key}` (first given on line {prev})")));
            }
            let vals = tokens(line, rest);
            let end_col = line.chars().count() + 1;
            match key {
                "elements" => {
                    if vals.is_empty() {
                        return Err(err(kln, end_col, "expected at least one element name"));
                    }
                    let mut names: Vec<String> = Vec::new();
                    for t in &vals {
                        if names.iter().any(|n| n == t.text) {
                            return Err(err(kln, t.col, format!("duplicate element `{}`", t.text)));
                        }
                        names.push(t.text.to_string());
                    }
                    elements = Some(names);
                }
                "one" | "zero" => {
                    let els = elements.as_ref().ok_or_else(|| err(kln, first.col, "`elements` must come first"))?;
                    let t = match vals.as_slice() {
                        [t] => *t,
                        [] => return Err(err(kln, end_col, "expected an element name")),
                        [_, extra, ..] => return Err(err(kln, extra.col, "expected a single element name")),
                    };
                    let id = lookup(els, t, kln)?;
                    if key == "one" {
                        one = Some(id);
                    } else {
                        zero = Some(id);
                    }
                }
                _ => {
                    let els = elements.as_ref().ok_or_else(|| err(kln, first.col, "`elements` must come first"))?;
                    if let Some(t) = vals.first() {
                        return Err(err(kln, t.col, "table rows go on the following lines"));
                    }
                    let rows = self.table(els, key, kln, first.col)?;
                    tables[usize::from(key == "squig")] = Some(rows);
                }
            }
        }

        let missing = |what: &str| err(ln, name.col, format!("algebra `{}` has no `{what}`", name.text));
        let names = elements.ok_or_else(|| missing("elements"))?;
        let one = one.ok_or_else(|| missing("one"))?;
        let [arrow, squig] = tables;
        let arrow = arrow.ok_or_else(|| missing("arrow"))?;
        let squig = squig.ok_or_else(|| missing("squig"))?;
        self.doc.algebras.push(AlgebraDef {
            name: name.text.to_string(),
            line: ln,
            raw: RawAlgebra { names, one, zero, arrow, squig },
        });
        Ok(())
    }

    /// Reads exactly one row per element after a table key.
    fn table(&mut self, els: &[String], key: &str, kln: usize, kcol: usize) -> Step<Vec<Vec<Elem>>> {
        let n = els.len();
        let mut rows = Vec::with_capacity(n);
        while rows.len() < n && self.pos < self.lines.len() {
            let rln = self.pos + 1;
            let line = self.lines[self.pos];
            let toks = tokens(line, 0);
            if toks.is_empty() {
                self.pos += 1;
                continue;
            }
            if line.contains(':') || KEYWORDS.contains(&toks[0].text) {
                break;
            }
            self.pos += 1;
            if toks.len() != n {
                let col = toks.get(n).map_or(line.chars().count() + 1, |t| t.col);
                return Err(err(rln, col, format!("`{key}` row has {} entries, expected {n}", toks.len())));
            }
            rows.push(toks.iter().map(|&t| lookup(els, t, rln)).collect::<Step<Vec<_>>>()?);
        }
        if rows.len() < n {
            return Err(err(kln, kcol, format!("`{key}` table has {} rows, expected {n}", rows.len())));
        }
        Ok(rows)
    }

    fn algebra_ref(&self, t: Tok<'_>, ln: usize) -> Step<usize> {
        self.doc.algebra_index(t.text).ok_or_else(|| err(ln, t.col, format!("unknown algebra `{}`", t.text)))
    }

    fn object(&mut self, ln: usize, line: &str, kind: &str) -> Step<()> {
        let (head, rest) = split_colon(line).ok_or_else(|| {
            err(ln, line.trim_end().chars().count() + 1, format!("expected `:` after the {kind} header"))
        })?;
        let h = tokens(head, 0);
        let vals = tokens(line, rest);
        let shape =
            if kind == "hom" { "hom <name> from <algebra> to <algebra>:" } else { "<kind> <name> on <algebra>:" };
        let bad_header = |t: Option<&Tok<'_>>| {
            let col = t.map_or(head.chars().count() + 1, |t| t.col);
            err(ln, col, format!("malformed header, expected `{}`", shape.replace("<kind>", kind)))
        };
        if kind == "hom" {
            let [_, name, from, src, to, dst] = h.as_slice() else {
                return Err(bad_header(h.get(6).or(h.get(1))));
            };
            if from.text != "from" || to.text != "to" {
                return Err(bad_header(Some(if from.text != "from" { from } else { to })));
            }
            let (source, target) = (self.algebra_ref(*src, ln)?, self.algebra_ref(*dst, ln)?);
            let image = self.elements_of(target, &vals, ln, line, Some(self.doc.algebras[source].raw.names.len()))?;
            self.claim(*name, ln)?;
            self.doc.homs.push(HomDef { name: name.text.into(), line: ln, source, target, image });
            return Ok(());
        }
        let [_, name, on, alg] = h.as_slice() else {
            return Err(bad_header(h.get(4).or(h.get(1))));
        };
        if on.text != "on" {
            return Err(bad_header(Some(on)));
        }
        let algebra = self.algebra_ref(*alg, ln)?;
        let n = self.doc.algebras[algebra].raw.names.len();
        match kind {
            "map" => {
                let image = self.elements_of(algebra, &vals, ln, line, Some(n))?;
                self.claim(*name, ln)?;
                self.doc.maps.push(MapDef { name: name.text.into(), line: ln, algebra, image });
            }
            "subset" => {
                let mut members = self.elements_of(algebra, &vals, ln, line, None)?;
                members.sort_unstable();
                members.dedup();
                self.claim(*name, ln)?;
                self.doc.subsets.push(SubsetDef { name: name.text.into(), line: ln, algebra, members });
            }
            _ => {
                let values = self.valuation(algebra, &vals, ln, line)?;
                self.claim(*name, ln)?;
                self.doc.valuations.push(ValuationDef { name: name.text.into(), line: ln, algebra, values });
            }
        }
        Ok(())
    }

    fn elements_of(
        &self,
        alg: usize,
        vals: &[Tok<'_>],
        ln: usize,
        line: &str,
        arity: Option<usize>,
    ) -> Step<Vec<Elem>> {
        let els = &self.doc.algebras[alg].raw.names;
        if let Some(n) = arity {
            if vals.len() != n {
                let col = vals.get(n).map_or(line.chars().count() + 1, |t| t.col);
                return Err(err(ln, col, format!("expected {n} entries, found {}", vals.len())));
            }
        }
        vals.iter().map(|&t| lookup(els, t, ln)).collect()
    }

    fn valuation(&self, alg: usize, vals: &[Tok<'_>], ln: usize, line: &str) -> Step<Vec<Value>> {
        let els = &self.doc.algebras[alg].raw.names;
        let mut values: Vec<Option<Value>> = vec![None; els.len()];
        for t in vals {
            let (el, num) = t.text.split_once('=').ok_or_else(|| err(ln, t.col, "expected `element=value`"))?;
            let id = lookup(els, Tok { col: t.col, text: el }, ln)?;
            let vcol = t.col + el.chars().count() + 1;
            let value: Value = num.parse().map_err(|_| err(ln, vcol, format!("`{num}` is not a rational number")))?;
            if values[id].replace(value).is_some() {
                return Err(err(ln, t.col, format!("value for `{el}` given twice")));
            }
        }
        if let Some(missing) = values.iter().position(Option::is_none) {
            let col = line.chars().count() + 1;
            return Err(err(ln, col, format!("no value given for `{}`", els[missing])));
        }
        Ok(values.into_iter().map(|v| v.expect("checked")).collect())
    }
}

fn lookup(els: &[String], t: Tok<'_>, ln: usize) -> Step<Elem> {
    els.iter().position(|e| e == t.text).ok_or_else(|| err(ln, t.col, format!("unknown element `{}`", t.text)))
}
