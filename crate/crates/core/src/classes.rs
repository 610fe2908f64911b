//! The pseudo-product, the FLw class tower (pseudo-MTL, divisible, pseudo-BL,
//! pseudo-MV), very true operators on FLw-algebras, and Smarandache substructures.

use serde::Serialize;

use crate::algebra::{Algebra, Elem, Limits};
use crate::error::{Error, Result, Verdict, Violation};
use crate::operators::{self, UnaryMap};
use crate::subset::Subset;

type Table = Vec<Vec<Elem>>;

/// `⊙` derived from the order, with meet and join when the order is a lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductStructure {
    pub odot: Table,
    pub meet: Option<Table>,
    pub join: Option<Table>,
}

impl ProductStructure {
    #[inline]
    pub fn prod(&self, x: Elem, y: Elem) -> Elem {
        self.odot[x][y]
    }
}

/// `x⊙y = min{z | x ≤ y→z} = min{z | y ≤ x⇝z}` for every pair, or the first pair where
/// either minimum is missing or the two differ.
pub fn pseudo_product(alg: &Algebra) -> std::result::Result<ProductStructure, Violation> {
    let order = alg.order();
    let n = alg.n();
    let mut odot = vec![vec![0; n]; n];
    for x in alg.elements() {
        for y in alg.elements() {
            let left: Subset = alg.elements().filter(|&z| alg.leq(x, alg.imp(y, z))).collect();
            let right: Subset = alg.elements().filter(|&z| alg.leq(y, alg.sq(x, z))).collect();
            match (order.minimum(left), order.minimum(right)) {
                (Some(p), Some(q)) if p == q => odot[x][y] = p,
                _ => return Err(Violation::new("pP", vec![x, y])),
            }
        }
    }
    let (meet, join) = match lattice_tables(alg) {
        Ok((m, j)) => (Some(m), Some(j)),
        Err(_) => (None, None),
    };
    Ok(ProductStructure { odot, meet, join })
}

/// Meet and join tables, or the first pair lacking one of them.
pub fn lattice_tables(alg: &Algebra) -> std::result::Result<(Table, Table), Violation> {
    let order = alg.order();
    let n = alg.n();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for x in alg.elements() {
        for y in alg.elements() {
            match (order.meet(x, y), order.join(x, y)) {
                (Some(m), Some(j)) => {
                    meet[x][y] = m;
                    join[x][y] = j;
                }
                _ => return Err(Violation::new("lattice", vec![x, y])),
            }
        }
    }
    Ok((meet, join))
}

/// A certified FLw-algebra: bounded lattice with the pseudo-product, a monoid, residuated.
#[derive(Debug, Clone)]
pub struct Flw<'a> {
    pub alg: &'a Algebra,
    pub zero: Elem,
    pub odot: Table,
    pub meet: Table,
    pub join: Table,
}

impl<'a> Flw<'a> {
    pub fn new(alg: &'a Algebra) -> std::result::Result<Self, Violation> {
        let zero = alg.zero().ok_or_else(|| Violation::new("bounded", vec![]))?;
        let p = pseudo_product(alg)?;
        let (meet, join) = lattice_tables(alg)?;
        let flw = Flw { alg, zero, odot: p.odot, meet, join };
        flw.monoid()?;
        flw.residuation()?;
        Ok(flw)
    }

    #[inline]
    pub fn prod(&self, x: Elem, y: Elem) -> Elem {
        self.odot[x][y]
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x][y]
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x][y]
    }

    fn monoid(&self) -> Verdict {
        let a = self.alg;
        for x in a.elements() {
            if self.prod(x, a.one()) != x || self.prod(a.one(), x) != x {
                return Err(Violation::new("monoid unit", vec![x]));
            }
        }
        for x in a.elements() {
            for y in a.elements() {
                for z in a.elements() {
                    if self.prod(self.prod(x, y), z) != self.prod(x, self.prod(y, z)) {
                        return Err(Violation::new("associativity", vec![x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }

    fn residuation(&self) -> Verdict {
        let a = self.alg;
        for x in a.elements() {
            for y in a.elements() {
                for z in a.elements() {
                    let p = a.leq(self.prod(x, y), z);
                    if p != a.leq(x, a.imp(y, z)) || p != a.leq(y, a.sq(x, z)) {
                        return Err(Violation::new("residuation", vec![x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }

    /// `(x→y)∨(y→x) = 1` and `(x⇝y)∨(y⇝x) = 1`.
    pub fn prelinearity(&self) -> Verdict {
        let a = self.alg;
        pairs(a, "prelinearity", |x, y| {
            self.join(a.imp(x, y), a.imp(y, x)) == a.one() && self.join(a.sq(x, y), a.sq(y, x)) == a.one()
        })
    }

    /// `(x→y)⊙x = x∧y = x⊙(x⇝y)`.
    pub fn divisibility(&self) -> Verdict {
        let a = self.alg;
        pairs(a, "divisibility", |x, y| {
            let m = self.meet(x, y);
            self.prod(a.imp(x, y), x) == m && self.prod(x, a.sq(x, y)) == m
        })
    }

    /// `x∨y = (x→y)⇝y = (x⇝y)→y`.
    pub fn mv_identity(&self) -> Verdict {
        let a = self.alg;
        pairs(a, "pseudo-MV identity", |x, y| {
            let j = self.join(x, y);
            a.sq(a.imp(x, y), y) == j && a.imp(a.sq(x, y), y) == j
        })
    }

    /// VT5: `v(x∨y) ≤ v(x)∨v(y)`.
    pub fn vt5(&self, v: &UnaryMap) -> Verdict {
        let a = self.alg;
        pairs(a, "VT5", |x, y| a.leq(v.apply(self.join(x, y)), self.join(v.apply(x), v.apply(y))))
    }

    /// VT5′: `v(x→y)∨v(y→x) = 1` and `v(x⇝y)∨v(y⇝x) = 1`.
    pub fn vt5_prime(&self, v: &UnaryMap) -> Verdict {
        let a = self.alg;
        pairs(a, "VT5'", |x, y| {
            self.join(v.apply(a.imp(x, y)), v.apply(a.imp(y, x))) == a.one()
                && self.join(v.apply(a.sq(x, y)), v.apply(a.sq(y, x))) == a.one()
        })
    }
}

fn pairs(alg: &Algebra, law: &'static str, ok: impl Fn(Elem, Elem) -> bool) -> Verdict {
    for x in alg.elements() {
        for y in alg.elements() {
            if !ok(x, y) {
                return Err(Violation::new(law, vec![x, y]));
            }
        }
    }
    Ok(())
}

/// Outcome of one level of the classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Level {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Violation>,
}

impl Level {
    fn from(v: Verdict) -> Self {
        match v {
            Ok(()) => Level { holds: true, witness: None },
            Err(w) => Level { holds: false, witness: Some(w) },
        }
    }

    fn requires(what: &'static str) -> Self {
        Level { holds: false, witness: Some(Violation::new(what, vec![])) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub bounded: Level,
    pub pp: Level,
    pub lattice: Level,
    pub flw: Level,
    pub pseudo_mtl: Level,
    pub divisible: Level,
    pub pseudo_bl: Level,
    pub pseudo_mv: Level,
}

impl ClassificationReport {
    /// `(name, level)` pairs from the bottom of the tower up.
    pub fn levels(&self) -> [(&'static str, &Level); 8] {
        [
            ("bounded", &self.bounded),
            ("pP", &self.pp),
            ("lattice", &self.lattice),
            ("FLw", &self.flw),
            ("pseudo-MTL", &self.pseudo_mtl),
            ("divisible", &self.divisible),
            ("pseudo-BL", &self.pseudo_bl),
            ("pseudo-MV", &self.pseudo_mv),
        ]
    }

    /// pseudo-MV ⇒ pseudo-BL ⇒ pseudo-MTL ∧ divisible ⇒ FLw ⇒ pP.
    pub fn inclusions_hold(&self) -> bool {
        let imp = |p: &Level, q: &Level| !p.holds || q.holds;
        imp(&self.pseudo_mv, &self.pseudo_bl)
            && imp(&self.pseudo_bl, &self.pseudo_mtl)
            && imp(&self.pseudo_bl, &self.divisible)
            && imp(&self.pseudo_mtl, &self.flw)
            && imp(&self.divisible, &self.flw)
            && imp(&self.flw, &self.pp)
            && imp(&self.flw, &self.lattice)
            && imp(&self.flw, &self.bounded)
    }
}

pub fn classify(alg: &Algebra) -> ClassificationReport {
    let bounded = Level::from(if alg.is_bounded() { Ok(()) } else { Err(Violation::new("bounded", vec![])) });
    let pp = Level::from(pseudo_product(alg).map(|_| ()));
    let lattice = Level::from(lattice_tables(alg).map(|_| ()));
    let flw = Flw::new(alg);
    let flw_level = Level::from(flw.as_ref().map(|_| ()).map_err(Clone::clone));
    let Ok(flw) = flw else {
        return ClassificationReport {
            bounded,
            pp,
            lattice,
            flw: flw_level,
            pseudo_mtl: Level::requires("FLw"),
            divisible: Level::requires("FLw"),
            pseudo_bl: Level::requires("FLw"),
            pseudo_mv: Level::requires("FLw"),
        };
    };
    let pseudo_mtl = Level::from(flw.prelinearity());
    let divisible = Level::from(flw.divisibility());
    let pseudo_bl = match (&pseudo_mtl.witness, &divisible.witness) {
        (None, None) => Level::from(Ok(())),
        (Some(w), _) | (None, Some(w)) => Level::from(Err(w.clone())),
    };
    let pseudo_mv = Level::from(flw.mv_identity());
    ClassificationReport { bounded, pp, lattice, flw: flw_level, pseudo_mtl, divisible, pseudo_bl, pseudo_mv }
}

fn require_pp(alg: &Algebra) -> Result<ProductStructure> {
    pseudo_product(alg).map_err(Error::PpRequired)
}

fn require_flw(alg: &Algebra) -> Result<Flw<'_>> {
    Flw::new(alg).map_err(Error::NotFlw)
}

fn require_vto(alg: &Algebra, v: &UnaryMap) -> Result<()> {
    if !v.belongs_to(alg) {
        return Err(Error::ParentMismatch);
    }
    operators::is_vto(alg, v).map_err(Error::NotVto)
}

/// Independent evaluations of the three forms of the implication axiom on an
/// algebra with the pseudo-product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Vt4Forms {
    /// `v(x→y) ≤ v(x)→v(y)` and `v(x⇝y) ≤ v(x)⇝v(y)`.
    pub vt4: bool,
    /// `x⊙y ≤ z ⇒ v(x)⊙v(y) ≤ v(z)`.
    pub vt4_prime: bool,
    /// `v(x)⊙v(y) ≤ v(x⊙y)`.
    pub vt4_second: bool,
}

impl Vt4Forms {
    pub fn agree(&self) -> bool {
        self.vt4 == self.vt4_prime && self.vt4 == self.vt4_second
    }
}

pub fn vt4_forms(alg: &Algebra, p: &ProductStructure, f: &UnaryMap) -> Vt4Forms {
    let vt4 = operators::vt4(alg, f).is_ok();
    let mut vt4_prime = true;
    for x in alg.elements() {
        for y in alg.elements() {
            let lhs = p.prod(f.apply(x), f.apply(y));
            for z in alg.elements() {
                if alg.leq(p.prod(x, y), z) && !alg.leq(lhs, f.apply(z)) {
                    vt4_prime = false;
                }
            }
        }
    }
    let vt4_second = pairs(alg, "VT4''", |x, y| alg.leq(p.prod(f.apply(x), f.apply(y)), f.apply(p.prod(x, y)))).is_ok();
    Vt4Forms { vt4, vt4_prime, vt4_second }
}

#[derive(Debug, Clone, Serialize)]
pub struct VtPpReport {
    /// `x⊙y ≤ z ⇒ v(x)⊙v(y) ≤ v(z)`.
    pub monotone_product: Option<Violation>,
    /// `v(x)⊙v(y) ≤ v(x⊙y)`.
    pub submultiplicative: Option<Violation>,
    /// `v(x→y) ≤ v(x)→(v(z)→v(y))` and its `⇝` twin.
    pub weakened_implication: Option<Violation>,
    pub forms: Vt4Forms,
}

impl VtPpReport {
    pub fn holds(&self) -> bool {
        self.monotone_product.is_none()
            && self.submultiplicative.is_none()
            && self.weakened_implication.is_none()
            && self.forms.agree()
            && self.forms.vt4
    }
}

pub fn vt_pp_suite(alg: &Algebra, v: &UnaryMap) -> Result<VtPpReport> {
    let p = require_pp(alg)?;
    require_vto(alg, v)?;
    let mut monotone_product = None;
    let mut weakened_implication = None;
    'outer: for x in alg.elements() {
        for y in alg.elements() {
            for z in alg.elements() {
                if alg.leq(p.prod(x, y), z) && !alg.leq(p.prod(v.apply(x), v.apply(y)), v.apply(z)) {
                    monotone_product = Some(Violation::new("x*y <= z => v(x)*v(y) <= v(z)", vec![x, y, z]));
                    break 'outer;
                }
            }
        }
    }
    'outer: for x in alg.elements() {
        for y in alg.elements() {
            for z in alg.elements() {
                let (vx, vy, vz) = (v.apply(x), v.apply(y), v.apply(z));
                if !alg.leq(v.apply(alg.imp(x, y)), alg.imp(vx, alg.imp(vz, vy)))
                    || !alg.leq(v.apply(alg.sq(x, y)), alg.sq(vx, alg.sq(vz, vy)))
                {
                    weakened_implication = Some(Violation::new("v(x->y) <= v(x)->(v(z)->v(y))", vec![x, y, z]));
                    break 'outer;
                }
            }
        }
    }
    let submultiplicative =
        pairs(alg, "v(x)*v(y) <= v(x*y)", |x, y| alg.leq(p.prod(v.apply(x), v.apply(y)), v.apply(p.prod(x, y)))).err();
    Ok(VtPpReport { monotone_product, submultiplicative, weakened_implication, forms: vt4_forms(alg, &p, v) })
}

/// VT1–VT5 on a certified FLw-algebra. When VT5 holds, `v(x∨y) = v(x)∨v(y)` is asserted too.
pub fn is_vto_flw(alg: &Algebra, v: &UnaryMap) -> Result<Verdict> {
    let flw = require_flw(alg)?;
    Ok(vto_flw_verdict(&flw, v))
}

fn vto_flw_verdict(flw: &Flw<'_>, v: &UnaryMap) -> Verdict {
    operators::is_vto(flw.alg, v)?;
    flw.vt5(v)?;
    pairs(flw.alg, "v(x v y) = v(x) v v(y)", |x, y| v.apply(flw.join(x, y)) == flw.join(v.apply(x), v.apply(y)))
}

/// Very true operators of an FLw-algebra (VT1–VT5), in lexicographic order.
pub fn enumerate_vto_flw(alg: &Algebra, limits: &Limits) -> Result<Vec<UnaryMap>> {
    let flw = require_flw(alg)?;
    Ok(operators::enumerate_vto(alg, limits)?.into_iter().filter(|v| flw.vt5(v).is_ok()).collect())
}

/// Both sides of the prelinearity characterization, evaluated independently.
#[derive(Debug, Clone, Serialize)]
pub struct MtlCharacterization {
    /// VT5′ for each operator of [`enumerate_vto_flw`], in order.
    pub per_operator: Vec<bool>,
    pub prelinear: bool,
}

impl MtlCharacterization {
    pub fn left(&self) -> bool {
        self.per_operator.iter().all(|&b| b)
    }

    /// Each operator's VT5′ matches prelinearity.
    pub fn agree(&self) -> bool {
        self.per_operator.iter().all(|&b| b == self.prelinear)
    }
}

pub fn mtl_characterization(alg: &Algebra, limits: &Limits) -> Result<MtlCharacterization> {
    let flw = require_flw(alg)?;
    let per_operator = enumerate_vto_flw(alg, limits)?.iter().map(|v| flw.vt5_prime(v).is_ok()).collect();
    Ok(MtlCharacterization { per_operator, prelinear: flw.prelinearity().is_ok() })
}

/// Both sides of the pseudo-MV characterization, evaluated independently.
#[derive(Debug, Clone, Serialize)]
pub struct MvCharacterization {
    /// `v(x∨y) = (v(x)→v(y))⇝v(y) = (v(x)⇝v(y))→v(y)` for every operator of [`enumerate_vto_flw`].
    pub left: bool,
    pub right: bool,
}

impl MvCharacterization {
    pub fn agree(&self) -> bool {
        self.left == self.right
    }
}

pub fn mv_characterization(alg: &Algebra, limits: &Limits) -> Result<MvCharacterization> {
    let flw = require_flw(alg)?;
    let left = enumerate_vto_flw(alg, limits)?.iter().all(|v| {
        pairs(alg, "join identity", |x, y| {
            let (vx, vy) = (v.apply(x), v.apply(y));
            let j = v.apply(flw.join(x, y));
            alg.sq(alg.imp(vx, vy), vy) == j && alg.imp(alg.sq(vx, vy), vy) == j
        })
        .is_ok()
    });
    Ok(MvCharacterization { left, right: flw.mv_identity().is_ok() })
}

/// A proper subalgebra `Q ∋ 0` with `|Q| ≥ 3` whose induced structure is pseudo-MTL.
#[derive(Debug, Clone)]
pub struct Substructure {
    pub q: Subset,
    pub algebra: Algebra,
    /// Parent id of each element of `algebra`.
    pub members: Vec<Elem>,
    pub report: ClassificationReport,
}

impl Substructure {
    pub fn local(&self, x: Elem) -> Option<Elem> {
        self.members.iter().position(|&m| m == x)
    }
}

fn smarandache_reason(alg: &Algebra, q: Subset) -> std::result::Result<Substructure, String> {
    let zero = alg.zero().ok_or("algebra is not bounded")?;
    if !q.contains(zero) || !q.contains(alg.one()) {
        return Err("Q must contain 0 and 1".into());
    }
    if q.len() < 3 {
        return Err("Q must have at least 3 elements".into());
    }
    if q == alg.carrier() {
        return Err("Q must be a proper subset".into());
    }
    if let Some(v) = alg.subalgebra_violation(q) {
        return Err(format!("Q is not closed under the implications: {}", v.render(alg)));
    }
    let (algebra, members) = alg.subalgebra(q).map_err(|e| e.to_string())?;
    let report = classify(&algebra);
    if let Some(w) = &report.pseudo_mtl.witness {
        return Err(format!("Q is not pseudo-MTL: {}", w.render(&algebra)));
    }
    Ok(Substructure { q, algebra, members, report })
}

pub fn smarandache_substructure(alg: &Algebra, q: Subset) -> Result<Substructure> {
    if !alg.is_bounded() {
        return Err(Error::Unbounded);
    }
    smarandache_reason(alg, q).map_err(Error::NotSmarandache)
}

/// Every Smarandache substructure, ordered by cardinality then bit pattern.
pub fn smarandache_search(alg: &Algebra, limits: &Limits) -> Result<Vec<Substructure>> {
    let zero = alg.require_zero()?;
    Limits::check(alg.n(), limits.smarandache, "Smarandache search")?;
    let fixed = Subset::singleton(zero).with(alg.one());
    let free: Vec<Elem> = alg.elements().filter(|&x| !fixed.contains(x)).collect();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << free.len()) {
        let q = free.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &x)| x).fold(fixed, Subset::with);
        if let Ok(s) = smarandache_reason(alg, q) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.q.enumeration_key());
    Ok(out)
}

/// Very true operators of the pseudo-MTL algebra on `Q` (VT1–VT5), lexicographic.
pub fn svto(sub: &Substructure, limits: &Limits) -> Result<Vec<UnaryMap>> {
    enumerate_vto_flw(&sub.algebra, limits)
}

/// `v|Q` as an operator on `Q`, or the reason it is not one.
pub fn restrict_vto(
    alg: &Algebra,
    v: &UnaryMap,
    sub: &Substructure,
) -> Result<std::result::Result<UnaryMap, Violation>> {
    require_vto(alg, v)?;
    let mut image = Vec::with_capacity(sub.members.len());
    for &x in &sub.members {
        match sub.local(v.apply(x)) {
            Some(y) => image.push(y),
            None => return Ok(Err(Violation::new("v(Q) ⊆ Q", vec![x]))),
        }
    }
    let w = UnaryMap::new(&sub.algebra, image)?;
    let flw = require_flw(&sub.algebra)?;
    Ok(vto_flw_verdict(&flw, &w).map(|()| w))
}

/// The lattice identities holding in every FLw-algebra.
pub fn lattice_law_verdict(alg: &Algebra) -> Result<Verdict> {
    let f = require_flw(alg)?;
    let a = alg;
    for x in a.elements() {
        for y in a.elements() {
            for z in a.elements() {
                let ok = a.imp(f.join(x, y), z) == f.meet(a.imp(x, z), a.imp(y, z))
                    && a.sq(f.join(x, y), z) == f.meet(a.sq(x, z), a.sq(y, z))
                    && a.imp(z, f.meet(x, y)) == f.meet(a.imp(z, x), a.imp(z, y))
                    && a.sq(z, f.meet(x, y)) == f.meet(a.sq(z, x), a.sq(z, y))
                    && a.leq(f.join(a.imp(x, z), a.imp(y, z)), a.imp(f.meet(x, y), z))
                    && a.leq(f.join(a.sq(x, z), a.sq(y, z)), a.sq(f.meet(x, y), z))
                    && a.leq(f.join(a.imp(z, x), a.imp(z, y)), a.imp(z, f.join(x, y)))
                    && a.leq(f.join(a.sq(z, x), a.sq(z, y)), a.sq(z, f.join(x, y)))
                    && f.prod(f.join(x, y), z) == f.join(f.prod(x, z), f.prod(y, z))
                    && f.prod(z, f.join(x, y)) == f.join(f.prod(z, x), f.prod(z, y));
                if !ok {
                    return Ok(Err(Violation::new("FLw lattice identities", vec![x, y, z])));
                }
            }
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, map, subset};
    use crate::generate;
    use crate::operators::{enumerate_vto, globalization};
    use proptest::prelude::*;

    fn odot_oracle(alg: &Algebra) -> Option<Table> {
        // brute force: z0 is the product iff it lies in both sets and below every member of each
        let n = alg.n();
        let mut t = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                let ok = |z: Elem| alg.leq(x, alg.imp(y, z)) && alg.leq(y, alg.sq(x, z));
                let least = (0..n).find(|&z| {
                    ok(z)
                        && (0..n).all(|w| !alg.leq(x, alg.imp(y, w)) || alg.leq(z, w))
                        && (0..n).all(|w| !alg.leq(y, alg.sq(x, w)) || alg.leq(z, w))
                })?;
                t[x][y] = least;
            }
        }
        Some(t)
    }

    #[test]
    fn product_on_q_has_swapped_printed_rows() {
        // printed rows, labelled 0 d c 1, over columns 0 c d 1
        let a = fixtures::pentagon6();
        let sub = smarandache_substructure(&a, subset(&a, "0 c d 1")).unwrap();
        let q = &sub.algebra;
        let p = pseudo_product(q).unwrap();
        let row = |name: &str| -> Vec<&str> {
            let x = q.index_of(name).unwrap();
            ["0", "c", "d", "1"].iter().map(|c| q.name(p.prod(x, q.index_of(c).unwrap()))).collect()
        };
        assert_eq!(row("0"), ["0", "0", "0", "0"]);
        assert_eq!(row("c"), ["0", "d", "d", "c"]);
        assert_eq!(row("d"), ["0", "d", "d", "d"]);
        assert_eq!(row("1"), ["0", "c", "d", "1"]);
        let printed_d = ["0", "d", "d", "c"];
        assert_ne!(row("d"), printed_d);
        assert_eq!(Some(p.odot.clone()), odot_oracle(q));
    }

    #[test]
    fn involutive_algebras_have_the_product() {
        let a = fixtures::involutive6();
        let p = pseudo_product(&a).unwrap();
        assert_eq!(Some(p.odot), odot_oracle(&a));
    }

    #[test]
    fn two_chain_is_boolean() {
        let a = fixtures::chain2();
        let p = pseudo_product(&a).unwrap();
        assert_eq!(p.odot, vec![vec![0, 0], vec![0, 1]]);
        let r = classify(&a);
        assert!(r.levels().iter().all(|(_, l)| l.holds));
    }

    #[test]
    fn classification_of_bck4() {
        let a = fixtures::bck4();
        let r = classify(&a);
        assert!(r.bounded.holds);
        assert_eq!(r.pp.holds, odot_oracle(&a).is_some());
        assert!(r.inclusions_hold());
    }

    #[test]
    fn q_of_pentagon6_is_pseudo_mtl() {
        let a = fixtures::pentagon6();
        let found = smarandache_search(&a, &Limits::default()).unwrap();
        assert!(found.iter().any(|s| s.q == subset(&a, "0 c d 1")));
        let sub = smarandache_substructure(&a, subset(&a, "0 c d 1")).unwrap();
        assert!(sub.report.pseudo_mtl.holds);
        let m = mtl_characterization(&sub.algebra, &Limits::default()).unwrap();
        assert!(m.left() && m.prelinear && m.agree());
    }

    #[test]
    fn svto_on_q() {
        let a = fixtures::pentagon6();
        let l = Limits::default();
        let sub = smarandache_substructure(&a, subset(&a, "0 c d 1")).unwrap();
        let q = &sub.algebra;
        let got = svto(&sub, &l).unwrap();
        assert_eq!(got, vec![map(q, "0 0 0 1"), map(q, "0 c d 1"), map(q, "0 d d 1")]);
        let vs = enumerate_vto(&a, &l).unwrap();
        let restricted: Vec<UnaryMap> = vs.iter().map(|v| restrict_vto(&a, v, &sub).unwrap().unwrap()).collect();
        assert_eq!(restricted[0], got[0]);
        assert_eq!(restricted[1], got[1]);
        assert_eq!(restricted[3], got[1]);
        assert_eq!(restricted[4], got[1]);
        assert_eq!(restricted[2], got[2]);
        let id = UnaryMap::identity(&a);
        assert_eq!(restrict_vto(&a, &id, &sub).unwrap().unwrap(), UnaryMap::identity(q));
    }

    #[test]
    fn smarandache_edge_cases() {
        let l = Limits::default();
        assert!(smarandache_search(&fixtures::chain2(), &l).unwrap().is_empty());
        assert_eq!(smarandache_search(&fixtures::unbounded_pair(), &l).unwrap_err(), Error::Unbounded);
        let a = fixtures::pentagon6();
        assert!(matches!(smarandache_substructure(&a, subset(&a, "0 a d 1")), Err(Error::NotSmarandache(_))));
        assert!(matches!(smarandache_substructure(&a, a.carrier()), Err(Error::NotSmarandache(_))));
    }

    #[test]
    fn svto_on_three_chain_matches_brute_force() {
        let a = fixtures::godel3();
        let flw = Flw::new(&a).unwrap();
        let mut brute = Vec::new();
        for code in 0..27 {
            let image = vec![code % 3, code / 3 % 3, code / 9];
            let f = UnaryMap::new(&a, image).unwrap();
            if vto_flw_verdict(&flw, &f).is_ok() {
                brute.push(f);
            }
        }
        brute.sort();
        assert_eq!(enumerate_vto_flw(&a, &Limits::default()).unwrap(), brute);
        assert_eq!(brute, vec![map(&a, "0 0 1"), map(&a, "0 h 1")]);
    }

    #[test]
    fn vt_pp_suite_examples() {
        let a = fixtures::involutive6();
        for v in enumerate_vto(&a, &Limits::default()).unwrap() {
            assert!(vt_pp_suite(&a, &v).unwrap().holds());
        }
        for b in [fixtures::godel3(), fixtures::chain2(), fixtures::pentagon6()] {
            if pseudo_product(&b).is_ok() {
                assert!(vt_pp_suite(&b, &globalization(&b).unwrap()).unwrap().holds());
                assert!(vt_pp_suite(&b, &UnaryMap::identity(&b)).unwrap().holds());
            }
        }
    }

    #[test]
    fn vto_flw_examples() {
        for a in [fixtures::chain2(), fixtures::godel3()] {
            assert_eq!(is_vto_flw(&a, &UnaryMap::identity(&a)), Ok(Ok(())));
            assert_eq!(is_vto_flw(&a, &globalization(&a).unwrap()), Ok(Ok(())));
        }
        assert!(matches!(
            is_vto_flw(&fixtures::unbounded_pair(), &UnaryMap::identity(&fixtures::unbounded_pair())),
            Err(Error::NotFlw(_))
        ));
    }

    /// Heyting algebra on 0 < a, b < c < 1.
    fn non_prelinear() -> Algebra {
        fixtures::from_tables(
            "0 a b c 1",
            "1",
            Some("0"),
            &["1 1 1 1 1", "b 1 b 1 1", "a a 1 1 1", "0 a b 1 1", "0 a b c 1"],
            &["1 1 1 1 1", "b 1 b 1 1", "a a 1 1 1", "0 a b 1 1", "0 a b c 1"],
        )
    }

    #[test]
    fn vt5_violation_on_a_non_chain() {
        let a = non_prelinear();
        let flw = Flw::new(&a).unwrap();
        // c is the join of a and b; v keeps c but sends a, b to 0
        let v = map(&a, "0 0 0 c 1");
        assert!(operators::is_vto(&a, &v).is_ok());
        assert_eq!(flw.vt5(&v), Err(Violation::new("VT5", vec![1, 2])));
    }

    #[test]
    fn characterizations_on_non_prelinear_heyting() {
        let a = non_prelinear();
        let r = classify(&a);
        assert!(r.flw.holds && !r.pseudo_mtl.holds && r.divisible.holds && !r.pseudo_mv.holds);
        let m = mtl_characterization(&a, &Limits::default()).unwrap();
        assert!(!m.prelinear && !m.left() && m.agree());
        let mv = mv_characterization(&a, &Limits::default()).unwrap();
        assert!(!mv.left && !mv.right);
    }

    #[test]
    fn mv_characterization_examples() {
        let l = Limits::default();
        let c = mv_characterization(&fixtures::chain2(), &l).unwrap();
        assert!(c.left && c.right);
        // Gödel chain: pseudo-MTL but not pseudo-MV
        let g = fixtures::godel3();
        assert!(classify(&g).pseudo_mtl.holds);
        let c = mv_characterization(&g, &l).unwrap();
        assert!(!c.left && !c.right);
        if let Ok(c) = mv_characterization(&fixtures::involutive6(), &l) {
            assert!(c.agree());
        }
    }

    proptest! {
        #[test]
        fn tower_inclusions(seed in any::<u64>()) {
            let a = generate::random_algebra(seed, 6);
            let r = classify(&a);
            prop_assert!(r.inclusions_hold());
            if r.pp.holds {
                prop_assert_eq!(Some(pseudo_product(&a).unwrap().odot), odot_oracle(&a));
            }
            if r.pseudo_mv.holds {
                prop_assert!(a.is_involutive().unwrap());
            }
        }

        #[test]
        fn flw_characterizations_agree(seed in any::<u64>()) {
            let a = generate::random_algebra(seed, 6);
            if Flw::new(&a).is_ok() {
                let l = Limits::default();
                prop_assert!(mtl_characterization(&a, &l).unwrap().agree());
                prop_assert!(mv_characterization(&a, &l).unwrap().agree());
                prop_assert_eq!(lattice_law_verdict(&a).unwrap(), Ok(()));
            }
        }
    }
}
