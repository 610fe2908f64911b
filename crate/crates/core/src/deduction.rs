//! Deductive systems, normality, operator-stable deductive systems and the
//! quotients they induce.

use serde::Serialize;

use crate::algebra::{validate, Algebra, Elem, Limits, RawAlgebra};
use crate::error::{Error, Result, Verdict, Violation};
use crate::operators::{self, UnaryMap};
use crate::subset::Subset;

/// Carrier size up to which deductive systems are enumerated by scanning all subsets.
pub const BRUTE_FORCE_MAX: usize = 12;

/// A deductive system with its normality flag and, for `v`-deductive
/// systems, the operator it is stable under.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeductiveSystem {
    pub members: Subset,
    pub normal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub for_vto: Option<UnaryMap>,
}

/// DS1 (`1 ∈ D`) and DS2 (`x, x→y ∈ D ⇒ y ∈ D`).
pub fn ds_verdict(alg: &Algebra, d: Subset) -> Verdict {
    if !d.contains(alg.one()) {
        return Err(Violation::new("DS1", vec![alg.one()]));
    }
    for x in d {
        for y in alg.elements() {
            if d.contains(alg.imp(x, y)) && !d.contains(y) {
                return Err(Violation::new("DS2", vec![x, y]));
            }
        }
    }
    Ok(())
}

pub fn is_ds(alg: &Algebra, d: Subset) -> bool {
    ds_verdict(alg, d).is_ok()
}

/// DS3: `x→y ∈ H ⇔ x⇝y ∈ H`.
pub fn normality_verdict(alg: &Algebra, h: Subset) -> Verdict {
    for x in alg.elements() {
        for y in alg.elements() {
            if h.contains(alg.imp(x, y)) != h.contains(alg.sq(x, y)) {
                return Err(Violation::new("DS3", vec![x, y]));
            }
        }
    }
    Ok(())
}

pub fn is_normal_ds(alg: &Algebra, h: Subset) -> bool {
    is_ds(alg, h) && normality_verdict(alg, h).is_ok()
}

/// `v(D) ⊆ D` for a deductive system `D`.
pub fn is_vds(alg: &Algebra, v: &UnaryMap, d: Subset) -> bool {
    is_ds(alg, d) && vds_witness(v, d).is_none()
}

fn vds_witness(v: &UnaryMap, d: Subset) -> Option<Elem> {
    d.iter().find(|&x| !d.contains(v.apply(x)))
}

/// The least deductive system containing `s`.
pub fn generated_ds(alg: &Algebra, s: Subset) -> Subset {
    let mut d = s.with(alg.one());
    loop {
        let mut next = d;
        for x in d {
            for y in alg.elements() {
                if d.contains(alg.imp(x, y)) {
                    next.insert(y);
                }
            }
        }
        if next == d {
            return d;
        }
        d = next;
    }
}

/// Every deductive system, by testing each subset containing `1`.
pub fn enumerate_ds_brute_force(alg: &Algebra) -> Vec<Subset> {
    let one = alg.one();
    let others: Vec<Elem> = alg.elements().filter(|&x| x != one).collect();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << others.len()) {
        let d = others
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect::<Subset>()
            .with(one);
        if is_ds(alg, d) {
            out.push(d);
        }
    }
    out.sort_by_key(|d| d.enumeration_key());
    out
}

/// Every deductive system, as the closed sets of [`generated_ds`] (NextClosure).
pub fn enumerate_ds_next_closure(alg: &Algebra) -> Vec<Subset> {
    let n = alg.n();
    let below = |i: usize| Subset::from_bits((1u64 << i) - 1);
    let mut out = Vec::new();
    let mut a = generated_ds(alg, Subset::EMPTY);
    loop {
        out.push(a);
        let mut next = None;
        for i in (0..n).rev() {
            if a.contains(i) {
                continue;
            }
            let prefix = a.intersection(below(i));
            let b = generated_ds(alg, prefix.with(i));
            if b.intersection(below(i)) == prefix {
                next = Some(b);
                break;
            }
        }
        match next {
            Some(b) => a = b,
            None => break,
        }
    }
    out.sort_by_key(|d| d.enumeration_key());
    out
}

fn ds_subsets(alg: &Algebra, limits: &Limits) -> Result<Vec<Subset>> {
    Limits::check(alg.n(), limits.subsets, "deductive system enumeration")?;
    Ok(if alg.n() <= BRUTE_FORCE_MAX { enumerate_ds_brute_force(alg) } else { enumerate_ds_next_closure(alg) })
}

fn tagged(alg: &Algebra, subsets: Vec<Subset>, for_vto: Option<&UnaryMap>) -> Vec<DeductiveSystem> {
    subsets
        .into_iter()
        .map(|members| DeductiveSystem {
            members,
            normal: normality_verdict(alg, members).is_ok(),
            for_vto: for_vto.cloned(),
        })
        .collect()
}

/// `DS(A)` ordered by cardinality, then bit pattern.
pub fn enumerate_ds(alg: &Algebra, limits: &Limits) -> Result<Vec<DeductiveSystem>> {
    Ok(tagged(alg, ds_subsets(alg, limits)?, None))
}

/// `DS_n(A)`.
pub fn enumerate_ds_n(alg: &Algebra, limits: &Limits) -> Result<Vec<DeductiveSystem>> {
    Ok(enumerate_ds(alg, limits)?.into_iter().filter(|d| d.normal).collect())
}

fn require_vto(alg: &Algebra, v: &UnaryMap) -> Result<()> {
    if !v.belongs_to(alg) {
        return Err(Error::ParentMismatch);
    }
    operators::is_vto(alg, v).map_err(Error::NotVto)
}

/// `DS^v(A)`.
pub fn enumerate_ds_v(alg: &Algebra, v: &UnaryMap, limits: &Limits) -> Result<Vec<DeductiveSystem>> {
    require_vto(alg, v)?;
    let all = ds_subsets(alg, limits)?;
    Ok(tagged(alg, all.into_iter().filter(|&d| vds_witness(v, d).is_none()).collect(), Some(v)))
}

/// `DS_n^v(A)`.
pub fn enumerate_ds_nv(alg: &Algebra, v: &UnaryMap, limits: &Limits) -> Result<Vec<DeductiveSystem>> {
    Ok(enumerate_ds_v(alg, v, limits)?.into_iter().filter(|d| d.normal).collect())
}

/// `A/H` for a normal deductive system `H`, with the canonical projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: Algebra,
    /// Class index of each parent element.
    pub class_of: Vec<Elem>,
    /// Least parent element of each class.
    pub representatives: Vec<Elem>,
    pub kernel: Subset,
    parent: u64,
}

impl Quotient {
    pub fn project(&self, x: Elem) -> Elem {
        self.class_of[x]
    }

    /// Parent elements of class `c`.
    pub fn class(&self, c: Elem) -> Subset {
        self.class_of.iter().enumerate().filter(|(_, &k)| k == c).map(|(x, _)| x).collect()
    }

    pub fn parent(&self) -> u64 {
        self.parent
    }

    /// `[x] ↦ [f(x)]`, failing if some class is not mapped into a single class.
    pub fn induced_map(&self, f: &UnaryMap) -> Result<UnaryMap> {
        if f.parent() != self.parent {
            return Err(Error::ParentMismatch);
        }
        let mut image = Vec::with_capacity(self.representatives.len());
        for (c, &rep) in self.representatives.iter().enumerate() {
            let value = self.project(f.apply(rep));
            if let Some(x) = self.class(c).iter().find(|&x| self.project(f.apply(x)) != value) {
                return Err(Error::WellDefinedness(format!(
                    "elements {} and {} share a class but their images do not",
                    rep, x
                )));
            }
            image.push(value);
        }
        UnaryMap::new(&self.algebra, image)
    }
}

/// `x Θ_H y` iff `x→y ∈ H` and `y→x ∈ H`.
pub fn related(alg: &Algebra, h: Subset, x: Elem, y: Elem) -> bool {
    h.contains(alg.imp(x, y)) && h.contains(alg.imp(y, x))
}

/// Builds `A/H`, checking that `H` is a normal deductive system and that the
/// inherited operations are well defined.
pub fn congruence_from(alg: &Algebra, h: Subset) -> Result<Quotient> {
    ds_verdict(alg, h).map_err(Error::NotDeductiveSystem)?;
    normality_verdict(alg, h).map_err(Error::NotNormal)?;

    let mut class_of = vec![usize::MAX; alg.n()];
    let mut representatives = Vec::new();
    for x in alg.elements() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(x);
        for y in alg.elements() {
            if related(alg, h, x, y) {
                class_of[y] = c;
            }
        }
    }

    let k = representatives.len();
    let mut arrow = vec![vec![0; k]; k];
    let mut squig = vec![vec![0; k]; k];
    for x in alg.elements() {
        for y in alg.elements() {
            let (cx, cy) = (class_of[x], class_of[y]);
            let (rx, ry) = (representatives[cx], representatives[cy]);
            let (a, s) = (class_of[alg.imp(x, y)], class_of[alg.sq(x, y)]);
            if a != class_of[alg.imp(rx, ry)] || s != class_of[alg.sq(rx, ry)] {
                return Err(Error::WellDefinedness(format!(
                    "operations on classes of {} and {} depend on the representative",
                    alg.name(x),
                    alg.name(y)
                )));
            }
            arrow[cx][cy] = a;
            squig[cx][cy] = s;
        }
    }

    let raw = RawAlgebra {
        names: (0..k)
            .map(|c| {
                let r = if c == class_of[alg.one()] { alg.one() } else { representatives[c] };
                format!("[{}]", alg.name(r))
            })
            .collect(),
        one: class_of[alg.one()],
        zero: alg.zero().map(|z| class_of[z]),
        arrow,
        squig,
    };
    let algebra = validate(&raw).map_err(|e| Error::Internal(format!("quotient failed certification: {e}")))?;
    let kernel: Subset = alg.elements().filter(|&x| class_of[x] == raw.one).collect();
    if kernel != h {
        return Err(Error::Internal("kernel of the projection differs from H".into()));
    }
    Ok(Quotient { algebra, class_of, representatives, kernel, parent: alg.fingerprint() })
}

/// One quotient per normal deductive system, in the order of [`enumerate_ds_n`].
pub fn enumerate_congruences(alg: &Algebra, limits: &Limits) -> Result<Vec<Quotient>> {
    enumerate_ds_n(alg, limits)?.into_iter().map(|d| congruence_from(alg, d.members)).collect()
}

/// `(A/H, v̂)` with `v̂([x]) = [v(x)]`, for a normal `v`-stable deductive system `H`.
pub fn lift_vto_to_quotient(alg: &Algebra, v: &UnaryMap, h: Subset) -> Result<(Quotient, UnaryMap)> {
    require_vto(alg, v)?;
    ds_verdict(alg, h).map_err(Error::NotDeductiveSystem)?;
    normality_verdict(alg, h).map_err(Error::NotNormal)?;
    if let Some(witness) = vds_witness(v, h) {
        return Err(Error::NotVds { witness });
    }
    let quotient = congruence_from(alg, h)?;
    let vhat = quotient.induced_map(v)?;
    operators::is_vto(&quotient.algebra, &vhat)
        .map_err(|e| Error::Internal(format!("induced operator is not very true: {}", e.render(&quotient.algebra))))?;
    Ok((quotient, vhat))
}

/// Whether `v` preserves `Θ_H` for every normal `v`-stable deductive system `H`.
///
/// The first failing `(H, x, y)` is returned as a violation.
pub fn vto_congruence_check(alg: &Algebra, v: &UnaryMap, limits: &Limits) -> Result<Verdict> {
    for d in enumerate_ds_nv(alg, v, limits)? {
        let h = d.members;
        for x in alg.elements() {
            for y in alg.elements() {
                if related(alg, h, x, y) && !related(alg, h, v.apply(x), v.apply(y)) {
                    return Ok(Err(Violation::new("v preserves Θ_H", vec![x, y])));
                }
            }
        }
    }
    Ok(Ok(()))
}
