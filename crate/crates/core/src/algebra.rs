//! Finite pseudo-BCK algebras given by their two implication tables.
//!
//! An [`Algebra`] can only be obtained through [`validate`], so every value of
//! the type satisfies psBCK1–psBCK6 (and `0 ≤ x` when a zero is declared).

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result, Violation};
use crate::subset::{Subset, MAX_BITS};

/// Dense 0-based element id.
pub type Elem = usize;

/// Size caps for certification and for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier accepted by [`validate_with`].
    pub carrier: usize,
    /// Interior / closure / very-true operator enumeration.
    pub maps: usize,
    /// Deductive-system and subalgebra enumeration.
    pub subsets: usize,
    /// Homomorphism enumeration (source carrier).
    pub homs: usize,
    /// Smarandache substructure search.
    pub smarandache: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { carrier: 24, maps: 10, subsets: 20, homs: 8, smarandache: 16 }
    }
}

impl Limits {
    /// Caps with every enumeration limit replaced by `n` (the carrier cap grows if needed).
    pub fn with_enumeration_cap(n: usize) -> Self {
        let n = n.min(MAX_BITS);
        Limits { carrier: Limits::default().carrier.max(n), maps: n, subsets: n, homs: n, smarandache: n }
    }

    pub fn check(n: usize, cap: usize, what: &'static str) -> Result<()> {
        if n > cap {
            Err(Error::CarrierTooLarge { what, n, cap })
        } else {
            Ok(())
        }
    }
}

/// Unchecked input to [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAlgebra {
    pub names: Vec<String>,
    pub one: Elem,
    pub zero: Option<Elem>,
    pub arrow: Vec<Vec<Elem>>,
    pub squig: Vec<Vec<Elem>>,
}

/// Structural problem found before any axiom is evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Malformation {
    EmptyCarrier,
    TooLarge { n: usize, cap: usize },
    EmptyName { index: usize },
    DuplicateName { name: String },
    ConstantOutOfRange { constant: &'static str, value: Elem },
    RowCount { table: &'static str, rows: usize },
    RaggedRow { table: &'static str, row: usize, len: usize },
    EntryOutOfRange { table: &'static str, row: usize, col: usize, value: Elem },
}

impl fmt::Display for Malformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Malformation::EmptyCarrier => write!(f, "carrier is empty"),
            Malformation::TooLarge { n, cap } => write!(f, "carrier size {n} exceeds the cap of {cap}"),
            Malformation::EmptyName { index } => write!(f, "element {index} has an empty name"),
            Malformation::DuplicateName { name } => write!(f, "duplicate element name `{name}`"),
            Malformation::ConstantOutOfRange { constant, value } => {
                write!(f, "constant {constant} = {value} is outside the carrier")
            }
            Malformation::RowCount { table, rows } => write!(f, "{table} table has {rows} rows"),
            Malformation::RaggedRow { table, row, len } => {
                write!(f, "{table} table row {row} has {len} entries")
            }
            Malformation::EntryOutOfRange { table, row, col, value } => {
                write!(f, "{table} table entry ({row}, {col}) = {value} is outside the carrier")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationError {
    Malformed(Vec<Malformation>),
    /// One entry per violated axiom, each with its least witness.
    Axioms(Vec<Violation>),
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationError::Malformed(list) => {
                let parts: Vec<String> = list.iter().map(|m| m.to_string()).collect();
                write!(f, "malformed tables: {}", parts.join("; "))
            }
            ValidationError::Axioms(list) => {
                let parts: Vec<String> = list.iter().map(|v| v.to_string()).collect();
                write!(f, "axioms violated: {}", parts.join("; "))
            }
        }
    }
}

impl std::error::Error for ValidationError {}

/// A certified finite pseudo-BCK algebra.
#[derive(Clone)]
pub struct Algebra {
    names: Vec<String>,
    one: Elem,
    zero: Option<Elem>,
    n: usize,
    arrow: Vec<Elem>,
    squig: Vec<Elem>,
    down: Vec<Subset>,
    fingerprint: u64,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("names", &self.names)
            .field("one", &self.one)
            .field("zero", &self.zero)
            .finish_non_exhaustive()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.one == other.one
            && self.zero == other.zero
            && self.arrow == other.arrow
            && self.squig == other.squig
    }
}

impl Eq for Algebra {}

pub fn validate(raw: &RawAlgebra) -> std::result::Result<Algebra, ValidationError> {
    validate_with(raw, &Limits::default())
}

pub fn validate_with(raw: &RawAlgebra, limits: &Limits) -> std::result::Result<Algebra, ValidationError> {
    let malformed = structural_problems(raw, limits.carrier.min(MAX_BITS));
    if !malformed.is_empty() {
        return Err(ValidationError::Malformed(malformed));
    }
    let n = raw.names.len();
    let arrow: Vec<Elem> = raw.arrow.iter().flatten().copied().collect();
    let squig: Vec<Elem> = raw.squig.iter().flatten().copied().collect();
    let violations = axiom_violations(n, raw.one, raw.zero, &arrow, &squig);
    if !violations.is_empty() {
        return Err(ValidationError::Axioms(violations));
    }
    Ok(Algebra::assemble(raw.names.clone(), raw.one, raw.zero, arrow, squig))
}

fn structural_problems(raw: &RawAlgebra, cap: usize) -> Vec<Malformation> {
    let mut out = Vec::new();
    let n = raw.names.len();
    if n == 0 {
        out.push(Malformation::EmptyCarrier);
        return out;
    }
    if n > cap {
        out.push(Malformation::TooLarge { n, cap });
        return out;
    }
    let mut seen = HashSet::new();
    for (i, name) in raw.names.iter().enumerate() {
        if name.is_empty() {
            out.push(Malformation::EmptyName { index: i });
        } else if !seen.insert(name.as_str()) {
            out.push(Malformation::DuplicateName { name: name.clone() });
        }
    }
    if raw.one >= n {
        out.push(Malformation::ConstantOutOfRange { constant: "one", value: raw.one });
    }
    if let Some(z) = raw.zero {
        if z >= n {
            out.push(Malformation::ConstantOutOfRange { constant: "zero", value: z });
        }
    }
    for (table, rows) in [("arrow", &raw.arrow), ("squig", &raw.squig)] {
        if rows.len() != n {
            out.push(Malformation::RowCount { table, rows: rows.len() });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                out.push(Malformation::RaggedRow { table, row: r, len: row.len() });
            }
            for (c, &value) in row.iter().enumerate() {
                if value >= n {
                    out.push(Malformation::EntryOutOfRange { table, row: r, col: c, value });
                }
            }
        }
    }
    out
}

/// Evaluates every axiom and returns one least witness per violated axiom.
fn axiom_violations(n: usize, one: Elem, zero: Option<Elem>, arrow: &[Elem], squig: &[Elem]) -> Vec<Violation> {
    let imp = |x: Elem, y: Elem| arrow[x * n + y];
    let sq = |x: Elem, y: Elem| squig[x * n + y];
    let leq = |x: Elem, y: Elem| imp(x, y) == one;
    let mut out = Vec::new();

    let first_triple = |law: &'static str, bad: &dyn Fn(Elem, Elem, Elem) -> bool| {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if bad(x, y, z) {
                        return Some(Violation::new(law, vec![x, y, z]));
                    }
                }
            }
        }
        None
    };
    let first_pair = |law: &'static str, bad: &dyn Fn(Elem, Elem) -> bool| {
        for x in 0..n {
            for y in 0..n {
                if bad(x, y) {
                    return Some(Violation::new(law, vec![x, y]));
                }
            }
        }
        None
    };
    let first_single =
        |law: &'static str, bad: &dyn Fn(Elem) -> bool| (0..n).find(|&x| bad(x)).map(|x| Violation::new(law, vec![x]));

    out.extend(first_triple("psBCK1 (->)", &|x, y, z| !leq(imp(x, y), sq(imp(y, z), imp(x, z)))));
    out.extend(first_triple("psBCK1 (~>)", &|x, y, z| !leq(sq(x, y), imp(sq(y, z), sq(x, z)))));
    out.extend(first_pair("psBCK2 (->)", &|x, y| !leq(x, sq(imp(x, y), y))));
    out.extend(first_pair("psBCK2 (~>)", &|x, y| !leq(x, imp(sq(x, y), y))));
    out.extend(first_single("psBCK3", &|x| imp(x, x) != one || sq(x, x) != one));
    out.extend(first_single("psBCK4", &|x| imp(x, one) != one || sq(x, one) != one));
    out.extend(first_pair("psBCK5", &|x, y| x != y && leq(x, y) && leq(y, x)));
    out.extend(first_pair("psBCK6", &|x, y| (imp(x, y) == one) != (sq(x, y) == one)));
    if let Some(z) = zero {
        out.extend(first_single("bounded (0 <= x)", &|x| !leq(z, x)));
    }
    out
}

impl Algebra {
    fn assemble(names: Vec<String>, one: Elem, zero: Option<Elem>, arrow: Vec<Elem>, squig: Vec<Elem>) -> Algebra {
        let n = names.len();
        let down = (0..n).map(|y| (0..n).filter(|&x| arrow[x * n + y] == one).collect()).collect();
        let mut hasher = DefaultHasher::new();
        (&names, one, zero, &arrow, &squig).hash(&mut hasher);
        Algebra { names, one, zero, n, arrow, squig, down, fingerprint: hasher.finish() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.n
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|s| s == name)
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn zero(&self) -> Option<Elem> {
        self.zero
    }

    pub fn require_zero(&self) -> Result<Elem> {
        self.zero.ok_or(Error::Unbounded)
    }

    pub fn is_bounded(&self) -> bool {
        self.zero.is_some()
    }

    /// Identity of the tables; two maps with the same fingerprint live on the same algebra.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// `x → y`
    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.arrow[x * self.n + y]
    }

    /// `x ⇝ y`
    #[inline]
    pub fn sq(&self, x: Elem, y: Elem) -> Elem {
        self.squig[x * self.n + y]
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.arrow[x * self.n + y] == self.one
    }

    /// `{x | x ≤ y}`
    pub fn down_set(&self, y: Elem) -> Subset {
        self.down[y]
    }

    pub fn up_set(&self, x: Elem) -> Subset {
        self.elements().filter(|&y| self.leq(x, y)).collect()
    }

    pub fn arrow_rows(&self) -> Vec<Vec<Elem>> {
        self.arrow.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn squig_rows(&self) -> Vec<Vec<Elem>> {
        self.squig.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn to_raw(&self) -> RawAlgebra {
        RawAlgebra {
            names: self.names.clone(),
            one: self.one,
            zero: self.zero,
            arrow: self.arrow_rows(),
            squig: self.squig_rows(),
        }
    }

    pub fn order(&self) -> OrderRelation {
        OrderRelation { n: self.n, leq: (0..self.n * self.n).map(|i| self.leq(i / self.n, i % self.n)).collect() }
    }

    /// `x⁻ = x → 0`
    pub fn neg_minus(&self, x: Elem) -> Result<Elem> {
        Ok(self.imp(x, self.require_zero()?))
    }

    /// `x∼ = x ⇝ 0`
    pub fn neg_sim(&self, x: Elem) -> Result<Elem> {
        Ok(self.sq(x, self.require_zero()?))
    }

    /// `x⁻∼`
    pub fn dneg_minus_sim(&self, x: Elem) -> Result<Elem> {
        self.neg_sim(self.neg_minus(x)?)
    }

    /// `x∼⁻`
    pub fn dneg_sim_minus(&self, x: Elem) -> Result<Elem> {
        self.neg_minus(self.neg_sim(x)?)
    }

    pub fn regular_elements(&self) -> Result<Subset> {
        let mut out = Subset::EMPTY;
        for x in self.elements() {
            if self.dneg_minus_sim(x)? == x && self.dneg_sim_minus(x)? == x {
                out.insert(x);
            }
        }
        Ok(out)
    }

    pub fn dense_elements(&self) -> Result<Subset> {
        let mut out = Subset::EMPTY;
        for x in self.elements() {
            if self.dneg_minus_sim(x)? == self.one && self.dneg_sim_minus(x)? == self.one {
                out.insert(x);
            }
        }
        Ok(out)
    }

    pub fn is_good(&self) -> Result<bool> {
        for x in self.elements() {
            if self.dneg_minus_sim(x)? != self.dneg_sim_minus(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_involutive(&self) -> Result<bool> {
        Ok(self.regular_elements()? == self.carrier())
    }

    /// Good, and double negation commutes with both implications in the second argument.
    pub fn is_glivenko(&self) -> Result<bool> {
        if !self.is_good()? {
            return Ok(false);
        }
        for x in self.elements() {
            for y in self.elements() {
                let dy = self.dneg_minus_sim(y)?;
                if self.dneg_minus_sim(self.imp(x, y))? != self.imp(x, dy)
                    || self.dneg_minus_sim(self.sq(x, y))? != self.sq(x, dy)
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_linear(&self) -> bool {
        self.elements().all(|x| self.elements().all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    /// True when `s` contains 1 and is closed under both implications.
    pub fn is_subalgebra(&self, s: Subset) -> bool {
        self.subalgebra_violation(s).is_none()
    }

    pub fn subalgebra_violation(&self, s: Subset) -> Option<Violation> {
        if !s.contains(self.one) {
            return Some(Violation::new("contains 1", vec![self.one]));
        }
        for x in s {
            for y in s {
                if !s.contains(self.imp(x, y)) || !s.contains(self.sq(x, y)) {
                    return Some(Violation::new("closed under -> and ~>", vec![x, y]));
                }
            }
        }
        None
    }

    /// The algebra induced on a subalgebra `s`.
    ///
    /// Elements keep their names and relative order; the returned vector maps
    /// new ids to parent ids. The zero is kept when it lies in `s`.
    pub fn subalgebra(&self, s: Subset) -> Result<(Algebra, Vec<Elem>)> {
        if let Some(v) = self.subalgebra_violation(s) {
            return Err(Error::NotSubalgebra(v));
        }
        let members = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in members.iter().enumerate() {
            index[x] = i;
        }
        let table = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
            members.iter().map(|&x| members.iter().map(|&y| index[op(x, y)]).collect()).collect()
        };
        let raw = RawAlgebra {
            names: members.iter().map(|&x| self.names[x].clone()).collect(),
            one: index[self.one],
            zero: self.zero.filter(|&z| s.contains(z)).map(|z| index[z]),
            arrow: table(&|x, y| self.imp(x, y)),
            squig: table(&|x, y| self.sq(x, y)),
        };
        let limits = Limits { carrier: MAX_BITS, ..Limits::default() };
        let sub = validate_with(&raw, &limits)
            .map_err(|e| Error::Internal(format!("induced subalgebra failed certification: {e}")))?;
        Ok((sub, members))
    }

    /// Copy of this algebra with element names replaced.
    pub fn renamed(&self, names: Vec<String>) -> std::result::Result<Algebra, ValidationError> {
        let mut raw = self.to_raw();
        raw.names = names;
        let limits = Limits { carrier: MAX_BITS, ..Limits::default() };
        validate_with(&raw, &limits)
    }

    /// Elements listed so that `x < y` implies `x` comes first (ties by id).
    pub fn linear_extension(&self) -> Vec<Elem> {
        let mut order: Vec<Elem> = self.elements().collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        order
    }
}

/// The order `x ≤ y ⇔ x → y = 1` as a boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    n: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|x| self.leq(x, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| x == y || !(self.leq(x, y) && self.leq(y, x))))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n)
            .all(|x| (0..self.n).all(|y| !self.leq(x, y) || (0..self.n).all(|z| !self.leq(y, z) || self.leq(x, z))))
    }

    pub fn is_total(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    pub fn is_top(&self, t: Elem) -> bool {
        (0..self.n).all(|x| self.leq(x, t))
    }

    pub fn is_bottom(&self, b: Elem) -> bool {
        (0..self.n).all(|x| self.leq(b, x))
    }

    /// Greatest lower bound of `x` and `y`, if it exists.
    pub fn meet(&self, x: Elem, y: Elem) -> Option<Elem> {
        let lower: Vec<Elem> = (0..self.n).filter(|&z| self.leq(z, x) && self.leq(z, y)).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&z| self.leq(z, m)))
    }

    /// Least upper bound of `x` and `y`, if it exists.
    pub fn join(&self, x: Elem, y: Elem) -> Option<Elem> {
        let upper: Vec<Elem> = (0..self.n).filter(|&z| self.leq(x, z) && self.leq(y, z)).collect();
        upper.iter().copied().find(|&j| upper.iter().all(|&z| self.leq(j, z)))
    }

    /// Least element of `s` under this order, if `s` has one.
    pub fn minimum(&self, s: Subset) -> Option<Elem> {
        s.iter().find(|&m| s.iter().all(|z| self.leq(m, z)))
    }

    /// Covering pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let lt = |a: Elem, b: Elem| a != b && self.leq(a, b);
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if lt(x, y) && !(0..self.n).any(|z| lt(x, z) && lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bck4_certifies_and_is_bounded() {
        let a = fixtures::bck4();
        assert_eq!(a.n(), 4);
        assert_eq!(a.zero(), Some(1));
        assert!(a.is_bounded());
    }

    #[test]
    fn one_element_algebra() {
        let a = fixtures::trivial();
        assert_eq!(a.n(), 1);
        assert!(a.is_good().unwrap());
        assert!(a.is_involutive().unwrap());
        assert!(a.is_glivenko().unwrap());
        assert!(a.is_linear());
    }

    #[test]
    fn corrupted_entry_is_reported_with_witness() {
        let mut raw = fixtures::bck4().to_raw();
        // arrow[b][c]: c -> 1
        raw.arrow[2][3] = 0;
        let err = validate(&raw).unwrap_err();
        let ValidationError::Axioms(list) = err else { panic!("expected axiom diagnostics") };
        let laws: Vec<&str> = list.iter().map(|v| v.law).collect();
        assert!(laws.contains(&"psBCK6") || laws.contains(&"psBCK5"), "{laws:?}");
        let v6 = list.iter().find(|v| v.law == "psBCK6").unwrap();
        assert_eq!(v6.witness, vec![2, 3]);
        let v5 = list.iter().find(|v| v.law == "psBCK5").unwrap();
        assert_eq!(v5.witness, vec![2, 3]);
    }

    #[test]
    fn every_single_entry_corruption_is_caught() {
        for base in [fixtures::bck4(), fixtures::involutive6(), fixtures::pentagon6()] {
            let raw = base.to_raw();
            let n = base.n();
            for table in 0..2 {
                for x in 0..n {
                    for y in 0..n {
                        for v in 0..n {
                            let mut bad = raw.clone();
                            let rows = if table == 0 { &mut bad.arrow } else { &mut bad.squig };
                            if rows[x][y] == v {
                                continue;
                            }
                            rows[x][y] = v;
                            assert!(validate(&bad).is_err(), "corruption ({table},{x},{y})={v} accepted");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn malformed_tables_are_reported_before_axioms() {
        let mut raw = fixtures::bck4().to_raw();
        raw.arrow[1].pop();
        raw.squig[0][0] = 9;
        raw.names[3] = "a".into();
        let ValidationError::Malformed(list) = validate(&raw).unwrap_err() else { panic!("expected malformation") };
        assert!(list.contains(&Malformation::RaggedRow { table: "arrow", row: 1, len: 3 }));
        assert!(list.contains(&Malformation::EntryOutOfRange { table: "squig", row: 0, col: 0, value: 9 }));
        assert!(list.contains(&Malformation::DuplicateName { name: "a".into() }));

        let empty = RawAlgebra { names: vec![], one: 0, zero: None, arrow: vec![], squig: vec![] };
        assert_eq!(validate(&empty), Err(ValidationError::Malformed(vec![Malformation::EmptyCarrier])));
    }

    #[test]
    fn carrier_cap_is_enforced() {
        let a = fixtures::involutive6();
        let limits = Limits { carrier: 5, ..Limits::default() };
        assert_eq!(
            validate_with(&a.to_raw(), &limits),
            Err(ValidationError::Malformed(vec![Malformation::TooLarge { n: 6, cap: 5 }]))
        );
    }

    #[test]
    fn leq_examples() {
        let a = fixtures::bck4();
        let (c, b) = (a.index_of("c").unwrap(), a.index_of("b").unwrap());
        assert!(a.leq(c, b));
        assert!(!a.leq(b, c));
        let e = fixtures::pentagon6();
        let (c, d) = (e.index_of("c").unwrap(), e.index_of("d").unwrap());
        assert!(e.leq(d, c));
        assert!(!e.leq(c, d));
        for x in e.elements() {
            assert!(e.leq(x, x));
        }
    }

    #[test]
    fn negations_on_bck4() {
        let a = fixtures::bck4();
        let id = |s: &str| a.index_of(s).unwrap();
        assert_eq!(a.neg_minus(id("c")).unwrap(), id("b"));
        assert_eq!(a.neg_sim(id("c")).unwrap(), id("c"));
        assert_eq!(a.neg_minus(a.one()).unwrap(), id("a"));
        assert_eq!(a.neg_minus(id("a")).unwrap(), a.one());
        // brute-force lookups: x⁻ = (a 1 a b), x∼ = (a 1 c c) in order 1 a b c
        assert_eq!(a.regular_elements().unwrap(), Subset::from_iter([id("1"), id("a")]));
        assert_eq!(a.dense_elements().unwrap(), Subset::singleton(id("1")));
        assert!(!a.is_good().unwrap());
        assert!(!a.is_glivenko().unwrap());
    }

    #[test]
    fn unbounded_algebra_has_no_negations() {
        let chain = fixtures::unbounded_pair();
        assert_eq!(chain.neg_minus(0), Err(Error::Unbounded));
        assert_eq!(chain.regular_elements(), Err(Error::Unbounded));
        assert_eq!(chain.is_glivenko(), Err(Error::Unbounded));
    }

    #[test]
    fn involutive6_is_involutive() {
        let a = fixtures::involutive6();
        assert!(a.is_involutive().unwrap());
        assert!(a.is_good().unwrap());
        assert!(a.is_glivenko().unwrap());
        assert_eq!(a.regular_elements().unwrap(), a.carrier());
        assert_eq!(a.dense_elements().unwrap(), Subset::singleton(a.one()));
        // x⁻ column: 1 a b c d e -> e d c a b 1
        let expect = ["e", "d", "c", "a", "b", "1"];
        for (x, want) in a.elements().zip(expect) {
            assert_eq!(a.name(a.neg_minus(x).unwrap()), want);
            let triple = a.neg_minus(a.neg_sim(a.neg_minus(x).unwrap()).unwrap()).unwrap();
            assert_eq!(triple, a.neg_minus(x).unwrap());
        }
    }

    #[test]
    fn order_is_partial_with_top_and_bottom() {
        for a in fixtures::corpus() {
            let o = a.order();
            assert!(o.is_reflexive() && o.is_antisymmetric() && o.is_transitive());
            assert!(o.is_top(a.one()));
            if let Some(z) = a.zero() {
                assert!(o.is_bottom(z));
            }
            for x in a.elements() {
                for y in a.elements() {
                    assert_eq!(a.imp(x, y) == a.one(), a.sq(x, y) == a.one());
                }
            }
        }
    }

    #[test]
    fn q_of_pentagon6_is_a_linear_subalgebra() {
        let a = fixtures::pentagon6();
        let q: Subset = ["0", "c", "d", "1"].iter().map(|s| a.index_of(s).unwrap()).collect();
        let (sub, members) = a.subalgebra(q).unwrap();
        assert_eq!(sub.n(), 4);
        assert_eq!(members, q.to_vec());
        assert!(sub.is_linear());
        assert!(!a.is_linear());
        // a→d = c escapes {0,a,d,1}
        assert!(a.subalgebra(Subset::from_iter([0, 1, 4, 5])).is_err());
    }
}
