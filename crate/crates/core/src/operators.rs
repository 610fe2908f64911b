//! Interior, closure and very true operators, and the truth-depressing hedges
//! attached to a very true operator.

use std::cmp::Ordering;

use serde::Serialize;

use crate::algebra::{Algebra, Elem, Limits};
use crate::deduction::{self, Quotient};
use crate::error::{Error, Result, Verdict, Violation};
use crate::subset::Subset;

/// A total self-map of a certified algebra's carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct UnaryMap {
    image: Vec<Elem>,
    #[serde(skip)]
    parent: u64,
}

impl UnaryMap {
    pub fn new(alg: &Algebra, image: Vec<Elem>) -> Result<Self> {
        if image.len() != alg.n() {
            return Err(Error::MapArity { expected: alg.n(), got: image.len() });
        }
        if let Some((at, &value)) = image.iter().enumerate().find(|(_, &v)| v >= alg.n()) {
            return Err(Error::MapOutOfRange { at, value });
        }
        Ok(UnaryMap { image, parent: alg.fingerprint() })
    }

    pub fn identity(alg: &Algebra) -> Self {
        UnaryMap { image: alg.elements().collect(), parent: alg.fingerprint() }
    }

    pub fn constant(alg: &Algebra, c: Elem) -> Self {
        UnaryMap { image: vec![c; alg.n()], parent: alg.fingerprint() }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x]
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn parent(&self) -> u64 {
        self.parent
    }

    pub fn belongs_to(&self, alg: &Algebra) -> bool {
        self.parent == alg.fingerprint()
    }

    /// Names of the values, in element order.
    pub fn render(&self, alg: &Algebra) -> Vec<String> {
        self.image.iter().map(|&y| alg.name(y).to_string()).collect()
    }

    /// Pointwise `self ≤ other`.
    pub fn pointwise_leq(&self, alg: &Algebra, other: &UnaryMap) -> bool {
        alg.elements().all(|x| alg.leq(self.apply(x), other.apply(x)))
    }
}

impl PartialOrd for UnaryMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on image vectors.
impl Ord for UnaryMap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.image.cmp(&other.image).then(self.parent.cmp(&other.parent))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    Interior,
    Closure,
    VeryTrue,
}

impl OperatorKind {
    pub fn check(self, alg: &Algebra, f: &UnaryMap) -> Verdict {
        match self {
            OperatorKind::Interior => is_interior(alg, f),
            OperatorKind::Closure => is_closure(alg, f),
            OperatorKind::VeryTrue => is_vto(alg, f),
        }
    }

    pub fn enumerate(self, alg: &Algebra, limits: &Limits) -> Result<Vec<UnaryMap>> {
        match self {
            OperatorKind::Interior => enumerate_interior(alg, limits),
            OperatorKind::Closure => enumerate_closure(alg, limits),
            OperatorKind::VeryTrue => enumerate_vto(alg, limits),
        }
    }
}

fn first_x(alg: &Algebra, law: &'static str, bad: impl Fn(Elem) -> bool) -> Verdict {
    match alg.elements().find(|&x| bad(x)) {
        Some(x) => Err(Violation::new(law, vec![x])),
        None => Ok(()),
    }
}

fn first_xy(alg: &Algebra, law: &'static str, bad: impl Fn(Elem, Elem) -> bool) -> Verdict {
    for x in alg.elements() {
        for y in alg.elements() {
            if bad(x, y) {
                return Err(Violation::new(law, vec![x, y]));
            }
        }
    }
    Ok(())
}

fn monotone(alg: &Algebra, f: &UnaryMap, law: &'static str) -> Verdict {
    first_xy(alg, law, |x, y| alg.leq(x, y) && !alg.leq(f.apply(x), f.apply(y)))
}

fn idempotent(alg: &Algebra, f: &UnaryMap, law: &'static str) -> Verdict {
    first_x(alg, law, |x| f.apply(f.apply(x)) != f.apply(x))
}

/// IO1 decreasing, IO2 monotone, IO3 idempotent.
pub fn is_interior(alg: &Algebra, f: &UnaryMap) -> Verdict {
    first_x(alg, "IO1", |x| !alg.leq(f.apply(x), x))?;
    monotone(alg, f, "IO2")?;
    idempotent(alg, f, "IO3")
}

/// Increasing, monotone and idempotent.
pub fn is_closure(alg: &Algebra, f: &UnaryMap) -> Verdict {
    first_x(alg, "CL1", |x| !alg.leq(x, f.apply(x)))?;
    monotone(alg, f, "CL2")?;
    idempotent(alg, f, "CL3")
}

/// VT1–VT4.
pub fn is_vto(alg: &Algebra, v: &UnaryMap) -> Verdict {
    let one = alg.one();
    if v.apply(one) != one {
        return Err(Violation::new("VT1", vec![one]));
    }
    first_x(alg, "VT2", |x| !alg.leq(v.apply(x), x))?;
    first_x(alg, "VT3", |x| !alg.leq(v.apply(x), v.apply(v.apply(x))))?;
    vt4(alg, v)
}

/// `v(x→y) ≤ v(x)→v(y)` and `v(x⇝y) ≤ v(x)⇝v(y)`.
pub fn vt4(alg: &Algebra, v: &UnaryMap) -> Verdict {
    first_xy(alg, "VT4 (->)", |x, y| !alg.leq(v.apply(alg.imp(x, y)), alg.imp(v.apply(x), v.apply(y))))?;
    first_xy(alg, "VT4 (~>)", |x, y| !alg.leq(v.apply(alg.sq(x, y)), alg.sq(v.apply(x), v.apply(y))))
}

/// Depth-first search over self-maps.
///
/// Elements are assigned along a linear extension of the order; each element
/// draws its value from `candidates[x]`, and monotonicity / idempotence are
/// checked against the already-assigned prefix. `accept` filters complete maps.
struct MapSearch<'a> {
    alg: &'a Algebra,
    order: Vec<Elem>,
    candidates: Vec<Subset>,
    monotone: bool,
    idempotent: bool,
}

impl<'a> MapSearch<'a> {
    fn run(&self, accept: &dyn Fn(&UnaryMap) -> bool) -> Vec<UnaryMap> {
        let mut image = vec![usize::MAX; self.alg.n()];
        let mut out = Vec::new();
        self.extend(0, &mut image, accept, &mut out);
        out.sort();
        out
    }

    fn consistent(&self, depth: usize, image: &[Elem]) -> bool {
        let alg = self.alg;
        let x = self.order[depth];
        let fx = image[x];
        for &y in &self.order[..depth] {
            let fy = image[y];
            if self.monotone && ((alg.leq(y, x) && !alg.leq(fy, fx)) || (alg.leq(x, y) && !alg.leq(fx, fy))) {
                return false;
            }
            if self.idempotent && fy == x && fx != x {
                return false;
            }
        }
        if self.idempotent {
            let ffx = image[fx];
            if ffx != usize::MAX && ffx != fx {
                return false;
            }
        }
        true
    }

    fn extend(&self, depth: usize, image: &mut Vec<Elem>, accept: &dyn Fn(&UnaryMap) -> bool, out: &mut Vec<UnaryMap>) {
        if depth == self.order.len() {
            let map = UnaryMap { image: image.clone(), parent: self.alg.fingerprint() };
            if accept(&map) {
                out.push(map);
            }
            return;
        }
        let x = self.order[depth];
        for value in self.candidates[x] {
            image[x] = value;
            if self.consistent(depth, image) {
                self.extend(depth + 1, image, accept, out);
            }
        }
        image[x] = usize::MAX;
    }
}

/// All interior operators, in lexicographic order of image vectors.
pub fn enumerate_interior(alg: &Algebra, limits: &Limits) -> Result<Vec<UnaryMap>> {
    Limits::check(alg.n(), limits.maps, "interior operator enumeration")?;
    let search = MapSearch {
        alg,
        order: alg.linear_extension(),
        candidates: alg.elements().map(|x| alg.down_set(x)).collect(),
        monotone: true,
        idempotent: true,
    };
    Ok(search.run(&|f| is_interior(alg, f).is_ok()))
}

/// All closure operators, in lexicographic order of image vectors.
pub fn enumerate_closure(alg: &Algebra, limits: &Limits) -> Result<Vec<UnaryMap>> {
    Limits::check(alg.n(), limits.maps, "closure operator enumeration")?;
    let mut order = alg.linear_extension();
    order.reverse();
    let search = MapSearch {
        alg,
        order,
        candidates: alg.elements().map(|x| alg.up_set(x)).collect(),
        monotone: true,
        idempotent: true,
    };
    Ok(search.run(&|f| is_closure(alg, f).is_ok()))
}

/// All very true operators, in lexicographic order of image vectors.
pub fn enumerate_vto(alg: &Algebra, limits: &Limits) -> Result<Vec<UnaryMap>> {
    Limits::check(alg.n(), limits.maps, "very true operator enumeration")?;
    let mut candidates: Vec<Subset> = alg.elements().map(|x| alg.down_set(x)).collect();
    candidates[alg.one()] = Subset::singleton(alg.one());
    let search = MapSearch { alg, order: alg.linear_extension(), candidates, monotone: true, idempotent: true };
    Ok(search.run(&|f| vt4(alg, f).is_ok()))
}

fn same_parent(f: &UnaryMap, g: &UnaryMap) -> Result<()> {
    if f.parent != g.parent || f.len() != g.len() {
        Err(Error::ParentMismatch)
    } else {
        Ok(())
    }
}

/// `f ∘ g`, i.e. `x ↦ f(g(x))`.
pub fn compose(f: &UnaryMap, g: &UnaryMap) -> Result<UnaryMap> {
    same_parent(f, g)?;
    Ok(UnaryMap { image: g.image.iter().map(|&y| f.apply(y)).collect(), parent: f.parent })
}

pub fn fix_points(f: &UnaryMap) -> Subset {
    f.image.iter().enumerate().filter(|(x, &y)| *x == y).map(|(x, _)| x).collect()
}

pub fn image_set(f: &UnaryMap) -> Subset {
    f.image.iter().copied().collect()
}

/// `{x | f(x) = 1}`
pub fn kernel(alg: &Algebra, f: &UnaryMap) -> Subset {
    alg.elements().filter(|&x| f.apply(x) == alg.one()).collect()
}

/// `x ↦ 1` if `x = 1`, else `0`.
pub fn globalization(alg: &Algebra) -> Result<UnaryMap> {
    let zero = alg.require_zero()?;
    let image = alg.elements().map(|x| if x == alg.one() { x } else { zero }).collect();
    Ok(UnaryMap { image, parent: alg.fingerprint() })
}

fn certify(alg: &Algebra, f: &UnaryMap, kind: OperatorKind) -> Result<()> {
    if !f.belongs_to(alg) {
        return Err(Error::ParentMismatch);
    }
    match (kind, kind.check(alg, f)) {
        (_, Ok(())) => Ok(()),
        (OperatorKind::VeryTrue, Err(v)) => Err(Error::NotVto(v)),
        (_, Err(v)) => Err(Error::NotInterior(v)),
    }
}

fn require_good_glivenko(alg: &Algebra) -> Result<()> {
    alg.require_zero()?;
    if alg.is_glivenko()? {
        Ok(())
    } else {
        Err(Error::GlivenkoRequired)
    }
}

/// An operator carried over to `Reg(A)`.
#[derive(Debug, Clone)]
pub struct RegLift {
    pub algebra: Algebra,
    /// Parent id of each element of `algebra`.
    pub members: Vec<Elem>,
    pub map: UnaryMap,
}

/// `x ↦ f(x)⁻∼` on the subalgebra of regular elements.
///
/// `kind` must be [`OperatorKind::Interior`] or [`OperatorKind::VeryTrue`];
/// the result is certified to be of the same kind.
pub fn lift_to_reg(alg: &Algebra, f: &UnaryMap, kind: OperatorKind) -> Result<RegLift> {
    require_good_glivenko(alg)?;
    certify(alg, f, kind)?;
    let reg = alg.regular_elements()?;
    let (sub, members) = alg.subalgebra(reg)?;
    let mut image = Vec::with_capacity(members.len());
    for &x in &members {
        let y = alg.dneg_minus_sim(f.apply(x))?;
        let local = members
            .iter()
            .position(|&m| m == y)
            .ok_or_else(|| Error::Internal(format!("lifted value {} is not regular", alg.name(y))))?;
        image.push(local);
    }
    let map = UnaryMap::new(&sub, image)?;
    kind.check(&sub, &map)
        .map_err(|v| Error::Internal(format!("lift to Reg(A) is not certified: {}", v.render(&sub))))?;
    Ok(RegLift { algebra: sub, members, map })
}

/// The operator induced on `A/Den(A)` by `[x] ↦ [f(x)]`.
pub fn lift_to_den_quotient(alg: &Algebra, f: &UnaryMap, kind: OperatorKind) -> Result<(Quotient, UnaryMap)> {
    require_good_glivenko(alg)?;
    certify(alg, f, kind)?;
    let quotient = deduction::congruence_from(alg, alg.dense_elements()?)?;
    let map = quotient.induced_map(f)?;
    kind.check(&quotient.algebra, &map)
        .map_err(|v| Error::Internal(format!("lift to A/Den(A) is not certified: {}", v.render(&quotient.algebra))))?;
    Ok((quotient, map))
}

/// `ς¹(x) = v(x⁻)∼` and `ς²(x) = v(x∼)⁻`.
pub fn sigma_hedges(alg: &Algebra, v: &UnaryMap) -> Result<(UnaryMap, UnaryMap)> {
    alg.require_zero()?;
    certify(alg, v, OperatorKind::VeryTrue)?;
    let mut s1 = Vec::with_capacity(alg.n());
    let mut s2 = Vec::with_capacity(alg.n());
    for x in alg.elements() {
        s1.push(alg.neg_sim(v.apply(alg.neg_minus(x)?))?);
        s2.push(alg.neg_minus(v.apply(alg.neg_sim(x)?))?);
    }
    Ok((UnaryMap { image: s1, parent: alg.fingerprint() }, UnaryMap { image: s2, parent: alg.fingerprint() }))
}

/// ST1–ST3 for the triple `(v, s1, s2)`.
pub fn is_vtst(alg: &Algebra, v: &UnaryMap, s1: &UnaryMap, s2: &UnaryMap) -> Result<Verdict> {
    let zero = alg.require_zero()?;
    Ok(vtst_verdict(alg, zero, v, s1, s2))
}

fn vtst_verdict(alg: &Algebra, zero: Elem, v: &UnaryMap, s1: &UnaryMap, s2: &UnaryMap) -> Verdict {
    if s1.apply(zero) != zero || s2.apply(zero) != zero {
        return Err(Violation::new("ST1", vec![zero]));
    }
    first_x(alg, "ST2", |x| !alg.leq(x, s1.apply(x)) || !alg.leq(x, s2.apply(x)))?;
    st3_imp(alg, v, s1)?;
    st3_sq(alg, v, s2)
}

fn st3_imp(alg: &Algebra, v: &UnaryMap, s1: &UnaryMap) -> Verdict {
    first_xy(alg, "ST3 (->)", |x, y| !alg.leq(v.apply(alg.imp(x, y)), alg.imp(s1.apply(x), s1.apply(y))))
}

fn st3_sq(alg: &Algebra, v: &UnaryMap, s2: &UnaryMap) -> Verdict {
    first_xy(alg, "ST3 (~>)", |x, y| !alg.leq(v.apply(alg.sq(x, y)), alg.sq(s2.apply(x), s2.apply(y))))
}

/// A very true operator together with a truth-depressing pair satisfying ST1–ST3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VtstStructure {
    pub v: UnaryMap,
    pub s1: UnaryMap,
    pub s2: UnaryMap,
}

impl VtstStructure {
    pub fn new(alg: &Algebra, v: UnaryMap, s1: UnaryMap, s2: UnaryMap) -> Result<Self> {
        certify(alg, &v, OperatorKind::VeryTrue)?;
        is_vtst(alg, &v, &s1, &s2)?.map_err(|e| Error::Internal(format!("not a vt,st structure: {e}")))?;
        Ok(VtstStructure { v, s1, s2 })
    }

    /// The canonical structure `(v, ς¹_v, ς²_v)`.
    pub fn canonical(alg: &Algebra, v: UnaryMap) -> Result<Self> {
        let (s1, s2) = sigma_hedges(alg, &v)?;
        VtstStructure::new(alg, v, s1, s2)
    }
}

/// Which half of ST3 a truth-depressing candidate must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HedgeSide {
    /// `s1`, paired with `→`.
    Arrow,
    /// `s2`, paired with `⇝`.
    Squig,
}

/// Every `s` with `s(0) = 0`, `x ≤ s(x)` and the chosen half of ST3 for `v`.
///
/// With `monotone_only`, non-monotone candidates are dropped.
pub fn enumerate_truth_depressing(
    alg: &Algebra,
    v: &UnaryMap,
    side: HedgeSide,
    monotone_only: bool,
    limits: &Limits,
) -> Result<Vec<UnaryMap>> {
    let zero = alg.require_zero()?;
    Limits::check(alg.n(), limits.maps, "truth-depressing hedge enumeration")?;
    let mut candidates: Vec<Subset> = alg.elements().map(|x| alg.up_set(x)).collect();
    candidates[zero] = Subset::singleton(zero);
    let search =
        MapSearch { alg, order: alg.linear_extension(), candidates, monotone: monotone_only, idempotent: false };
    Ok(search.run(&|s| match side {
        HedgeSide::Arrow => st3_imp(alg, v, s).is_ok(),
        HedgeSide::Squig => st3_sq(alg, v, s).is_ok(),
    }))
}
