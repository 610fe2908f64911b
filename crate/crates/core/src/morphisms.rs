//! Homomorphisms and very true homomorphisms: enumeration, transport of
//! subalgebras and deductive systems, and the factor theorem.

use serde::Serialize;

use crate::algebra::{Algebra, Elem, Limits};
use crate::deduction::{self, Quotient};
use crate::error::{Error, Result, Verdict, Violation};
use crate::operators::{self, UnaryMap};
use crate::subset::Subset;

/// A map between the carriers of two certified algebras.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Homomorphism {
    map: Vec<Elem>,
    #[serde(skip)]
    source: u64,
    #[serde(skip)]
    target: u64,
}

impl Homomorphism {
    /// Wraps `map` after checking arity and range; preservation is checked by [`is_hom`].
    pub fn new(source: &Algebra, target: &Algebra, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.n() {
            return Err(Error::MapArity { expected: source.n(), got: map.len() });
        }
        if let Some((at, &value)) = map.iter().enumerate().find(|(_, &y)| y >= target.n()) {
            return Err(Error::MapOutOfRange { at, value });
        }
        Ok(Homomorphism { map, source: source.fingerprint(), target: target.fingerprint() })
    }

    pub fn identity(alg: &Algebra) -> Self {
        Homomorphism { map: alg.elements().collect(), source: alg.fingerprint(), target: alg.fingerprint() }
    }

    /// `x ↦ 1`.
    pub fn constant_one(source: &Algebra, target: &Algebra) -> Self {
        Homomorphism { map: vec![target.one(); source.n()], source: source.fingerprint(), target: target.fingerprint() }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn render(&self, target: &Algebra) -> Vec<String> {
        self.map.iter().map(|&y| target.name(y).to_string()).collect()
    }

    fn fits(&self, source: &Algebra, target: &Algebra) -> Result<()> {
        if self.source == source.fingerprint() && self.target == target.fingerprint() && self.map.len() == source.n() {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// `{x | f(x) = 1}`
    pub fn kernel(&self, source: &Algebra, target: &Algebra) -> Subset {
        source.elements().filter(|&x| self.apply(x) == target.one()).collect()
    }

    pub fn image(&self) -> Subset {
        self.map.iter().copied().collect()
    }

    pub fn is_surjective(&self, target: &Algebra) -> bool {
        self.image() == target.carrier()
    }

    pub fn image_of(&self, s: Subset) -> Subset {
        s.iter().map(|x| self.apply(x)).collect()
    }

    pub fn preimage_of(&self, source: &Algebra, t: Subset) -> Subset {
        source.elements().filter(|&x| t.contains(self.apply(x))).collect()
    }
}

/// Preservation of both implications; the witness is the least failing pair.
pub fn hom_verdict(a: &Algebra, b: &Algebra, f: &Homomorphism) -> Verdict {
    for x in a.elements() {
        for y in a.elements() {
            if f.apply(a.imp(x, y)) != b.imp(f.apply(x), f.apply(y)) {
                return Err(Violation::new("f(x->y) = f(x)->f(y)", vec![x, y]));
            }
            if f.apply(a.sq(x, y)) != b.sq(f.apply(x), f.apply(y)) {
                return Err(Violation::new("f(x~>y) = f(x)~>f(y)", vec![x, y]));
            }
        }
    }
    Ok(())
}

pub fn is_hom(a: &Algebra, b: &Algebra, f: &Homomorphism) -> Result<Verdict> {
    f.fits(a, b)?;
    Ok(hom_verdict(a, b, f))
}

/// `f ∘ v = u ∘ f` on top of [`hom_verdict`].
pub fn is_vthom(a: &Algebra, v: &UnaryMap, b: &Algebra, u: &UnaryMap, f: &Homomorphism) -> Result<Verdict> {
    f.fits(a, b)?;
    if !v.belongs_to(a) || !u.belongs_to(b) {
        return Err(Error::ParentMismatch);
    }
    Ok(hom_verdict(a, b, f).and_then(|()| intertwining(a, v, u, f)))
}

fn intertwining(a: &Algebra, v: &UnaryMap, u: &UnaryMap, f: &Homomorphism) -> Verdict {
    match a.elements().find(|&x| f.apply(v.apply(x)) != u.apply(f.apply(x))) {
        Some(x) => Err(Violation::new("f(v(x)) = u(f(x))", vec![x])),
        None => Ok(()),
    }
}

fn require_vthom(a: &Algebra, v: &UnaryMap, b: &Algebra, u: &UnaryMap, f: &Homomorphism) -> Result<()> {
    operators::is_vto(a, v).map_err(Error::NotVto)?;
    operators::is_vto(b, u).map_err(Error::NotVto)?;
    hom_verdict(a, b, f).map_err(Error::NotHom)?;
    is_vthom(a, v, b, u, f)?.map_err(Error::NotVtHom)
}

/// Backtracking over maps `A → B` in element order.
///
/// After each assignment every pair whose operands and results are already
/// assigned is checked; `bijective` restricts to injective maps that keep
/// the size of principal down-sets.
struct HomSearch<'a> {
    a: &'a Algebra,
    b: &'a Algebra,
    bijective: bool,
    first_only: bool,
}

impl HomSearch<'_> {
    fn run(&self) -> Vec<Vec<Elem>> {
        let mut image = vec![usize::MAX; self.a.n()];
        let mut out = Vec::new();
        self.extend(0, &mut image, &mut out);
        out
    }

    fn consistent(&self, x: Elem, image: &[Elem]) -> bool {
        let (a, b) = (self.a, self.b);
        let assigned = |y: Elem| image[y] != usize::MAX;
        if x == a.one() && image[x] != b.one() {
            return false;
        }
        if self.bijective {
            if a.down_set(x).len() != b.down_set(image[x]).len() {
                return false;
            }
            if (0..x).any(|y| image[y] == image[x]) {
                return false;
            }
        }
        for p in 0..=x {
            for q in 0..=x {
                if p != x && q != x && a.imp(p, q) != x && a.sq(p, q) != x {
                    continue;
                }
                let (r, s) = (a.imp(p, q), a.sq(p, q));
                if assigned(r) && image[r] != b.imp(image[p], image[q]) {
                    return false;
                }
                if assigned(s) && image[s] != b.sq(image[p], image[q]) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, x: Elem, image: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        if self.first_only && !out.is_empty() {
            return;
        }
        if x == self.a.n() {
            out.push(image.clone());
            return;
        }
        for y in self.b.elements() {
            image[x] = y;
            if self.consistent(x, image) {
                self.extend(x + 1, image, out);
            }
        }
        image[x] = usize::MAX;
    }
}

/// `HOM(A, B)` in lexicographic order of image vectors.
pub fn enumerate_hom(a: &Algebra, b: &Algebra, limits: &Limits) -> Result<Vec<Homomorphism>> {
    Limits::check(a.n(), limits.homs, "homomorphism enumeration")?;
    let search = HomSearch { a, b, bijective: false, first_only: false };
    let mut out: Vec<Homomorphism> = search
        .run()
        .into_iter()
        .map(|map| Homomorphism { map, source: a.fingerprint(), target: b.fingerprint() })
        .collect();
    out.sort();
    Ok(out)
}

/// `VHOM((A,v),(B,u))` in lexicographic order.
pub fn enumerate_vthom(
    a: &Algebra,
    v: &UnaryMap,
    b: &Algebra,
    u: &UnaryMap,
    limits: &Limits,
) -> Result<Vec<Homomorphism>> {
    operators::is_vto(a, v).map_err(Error::NotVto)?;
    operators::is_vto(b, u).map_err(Error::NotVto)?;
    Ok(enumerate_hom(a, b, limits)?.into_iter().filter(|f| intertwining(a, v, u, f).is_ok()).collect())
}

/// The lexicographically least isomorphism `A → B`, if any.
pub fn is_isomorphic(a: &Algebra, b: &Algebra) -> Option<Homomorphism> {
    if a.n() != b.n() {
        return None;
    }
    let search = HomSearch { a, b, bijective: true, first_only: true };
    search.run().into_iter().next().map(|map| Homomorphism { map, source: a.fingerprint(), target: b.fingerprint() })
}

/// Subsets containing `1`, closed under both implications and stable under `v`.
pub fn vt_subalgebras(a: &Algebra, v: &UnaryMap, limits: &Limits) -> Result<Vec<Subset>> {
    Limits::check(a.n(), limits.subsets, "subalgebra enumeration")?;
    let one = a.one();
    let others: Vec<Elem> = a.elements().filter(|&x| x != one).collect();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << others.len()) {
        let s: Subset = others
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect::<Subset>()
            .with(one);
        if a.is_subalgebra(s) && s.iter().all(|x| s.contains(v.apply(x))) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.enumeration_key());
    Ok(out)
}

/// `u` restricted to a `u`-stable subset, as a map on the induced subalgebra.
pub fn restrict(b: &Algebra, u: &UnaryMap, s: Subset) -> Result<(Algebra, Vec<Elem>, UnaryMap)> {
    let (sub, members) = b.subalgebra(s)?;
    let mut image = Vec::with_capacity(members.len());
    for &x in &members {
        let y = u.apply(x);
        let local = members
            .iter()
            .position(|&m| m == y)
            .ok_or_else(|| Error::NotSubalgebra(Violation::new("u(S) ⊆ S", vec![x])))?;
        image.push(local);
    }
    let map = UnaryMap::new(&sub, image)?;
    Ok((sub, members, map))
}

/// `ψ(D)` for a `v`-deductive system `D`, which is a `u`-deductive system when `ψ` is onto.
pub fn push_forward(
    a: &Algebra,
    v: &UnaryMap,
    b: &Algebra,
    u: &UnaryMap,
    f: &Homomorphism,
    d: Subset,
) -> Result<Subset> {
    require_vthom(a, v, b, u, f)?;
    if !f.is_surjective(b) {
        return Err(Error::SurjectivityRequired);
    }
    Ok(f.image_of(d))
}

/// Kernel, image and transport of subalgebras and deductive systems along a VT-homomorphism.
#[derive(Debug, Clone, Serialize)]
pub struct TransportReport {
    pub kernel: Subset,
    pub image: Subset,
    pub surjective: bool,
    /// Very true subalgebras of the source with their images.
    pub subalgebras: Vec<(Subset, Subset)>,
    /// `(D, ψ(D))` for every `v`-deductive system; absent unless `ψ` is onto.
    pub pushforwards: Option<Vec<(Subset, Subset)>>,
    /// `(G, ψ⁻¹(G))` for every `u`-deductive system.
    pub pullbacks: Vec<(Subset, Subset)>,
    /// `ψ⁻¹(Ker u)`.
    pub kernel_u_preimage: Subset,
    /// `ψ(Ker v)`, when `ψ` is onto.
    pub kernel_v_image: Option<Subset>,
    pub failures: Vec<String>,
}

impl TransportReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn transport(
    a: &Algebra,
    v: &UnaryMap,
    b: &Algebra,
    u: &UnaryMap,
    f: &Homomorphism,
    limits: &Limits,
) -> Result<TransportReport> {
    require_vthom(a, v, b, u, f)?;
    let mut failures = Vec::new();
    let kernel = f.kernel(a, b);
    let image = f.image();
    let surjective = f.is_surjective(b);

    let mut subalgebras = Vec::new();
    for s in vt_subalgebras(a, v, limits)? {
        let t = f.image_of(s);
        match restrict(b, u, t) {
            Ok((sub, _, w)) => {
                if let Err(e) = operators::is_vto(&sub, &w) {
                    failures.push(format!("image of subalgebra {s:?} carries no very true operator: {e}"));
                }
            }
            Err(e) => failures.push(format!("image of subalgebra {s:?} is not a very true subalgebra: {e}")),
        }
        subalgebras.push((s, t));
    }

    if !deduction::is_normal_ds(a, kernel) || !deduction::is_vds(a, v, kernel) {
        failures.push(format!("kernel {kernel:?} is not a normal v-deductive system"));
    }

    let pushforwards = if surjective {
        let mut pairs = Vec::new();
        for d in deduction::enumerate_ds_v(a, v, limits)? {
            let t = f.image_of(d.members);
            if !deduction::is_vds(b, u, t) {
                failures.push(format!("image of {:?} is not a u-deductive system", d.members));
            }
            pairs.push((d.members, t));
        }
        Some(pairs)
    } else {
        None
    };

    let mut pullbacks = Vec::new();
    for g in deduction::enumerate_ds_v(b, u, limits)? {
        let p = f.preimage_of(a, g.members);
        if !deduction::is_vds(a, v, p) {
            failures.push(format!("preimage of {:?} is not a v-deductive system", g.members));
        }
        pullbacks.push((g.members, p));
    }

    let kernel_u_preimage = f.preimage_of(a, operators::kernel(b, u));
    if !deduction::is_vds(a, v, kernel_u_preimage) {
        failures.push("preimage of Ker(u) is not a v-deductive system".into());
    }
    let kernel_v_image = surjective.then(|| f.image_of(operators::kernel(a, v)));
    if let Some(t) = kernel_v_image {
        if !deduction::is_vds(b, u, t) {
            failures.push("image of Ker(v) is not a u-deductive system".into());
        }
    }

    Ok(TransportReport {
        kernel,
        image,
        surjective,
        subalgebras,
        pushforwards,
        pullbacks,
        kernel_u_preimage,
        kernel_v_image,
        failures,
    })
}

/// `ψ̃ : (A/H, v̂) → (B, u)` with `ψ̃ ∘ π_H = ψ`.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub quotient: Quotient,
    pub vhat: UnaryMap,
    pub induced: Homomorphism,
}

pub fn factor(
    a: &Algebra,
    v: &UnaryMap,
    b: &Algebra,
    u: &UnaryMap,
    f: &Homomorphism,
    h: Subset,
    limits: &Limits,
) -> Result<Factorization> {
    require_vthom(a, v, b, u, f)?;
    let ker = f.kernel(a, b);
    if let Some(witness) = h.iter().find(|&x| !ker.contains(x)) {
        return Err(Error::KernelContainmentViolated { witness });
    }
    let (quotient, vhat) = deduction::lift_vto_to_quotient(a, v, h)?;
    let qa = &quotient.algebra;

    let mut map = Vec::with_capacity(qa.n());
    for (c, &rep) in quotient.representatives.iter().enumerate() {
        if let Some(x) = quotient.class(c).iter().find(|&x| f.apply(x) != f.apply(rep)) {
            return Err(Error::WellDefinedness(format!(
                "{} and {} share a class but have different images",
                a.name(rep),
                a.name(x)
            )));
        }
        map.push(f.apply(rep));
    }
    let induced = Homomorphism { map, source: qa.fingerprint(), target: b.fingerprint() };
    is_vthom(qa, &vhat, b, u, &induced)?
        .map_err(|e| Error::Internal(format!("induced map is not a VT-homomorphism: {}", e.render(qa))))?;

    let composes = |g: &Homomorphism| a.elements().all(|x| g.apply(quotient.project(x)) == f.apply(x));
    if !composes(&induced) {
        return Err(Error::Internal("induced map does not factor the homomorphism".into()));
    }
    let rivals = if qa.n() <= limits.homs {
        enumerate_hom(qa, b, limits)?.into_iter().filter(|g| composes(g)).count()
    } else {
        // π is onto, so any g with g∘π = ψ is pinned down class by class
        let choices: usize =
            (0..qa.n()).map(|c| quotient.class(c).iter().map(|x| f.apply(x)).collect::<Subset>().len()).product();
        choices
    };
    if rivals != 1 {
        return Err(Error::Internal(format!("{rivals} homomorphisms factor through the quotient")));
    }

    if induced.image() != f.image() {
        return Err(Error::Internal("Im of the induced map differs from Im of the homomorphism".into()));
    }
    let projected_kernel: Subset = ker.iter().map(|x| quotient.project(x)).collect();
    if induced.kernel(qa, b) != projected_kernel {
        return Err(Error::Internal("Ker of the induced map differs from Ker/H".into()));
    }
    Ok(Factorization { quotient, vhat, induced })
}

/// `(A/Ker ψ, v̂) ≅ (Im ψ, u|Im ψ)`.
#[derive(Debug, Clone)]
pub struct FirstIsomorphism {
    pub factorization: Factorization,
    pub image: Algebra,
    /// Target ids of the image elements.
    pub members: Vec<Elem>,
    pub u_image: UnaryMap,
}

pub fn first_isomorphism(
    a: &Algebra,
    v: &UnaryMap,
    b: &Algebra,
    u: &UnaryMap,
    f: &Homomorphism,
    limits: &Limits,
) -> Result<FirstIsomorphism> {
    require_vthom(a, v, b, u, f)?;
    let (image, members, u_image) = restrict(b, u, f.image())?;
    let local: Vec<Elem> = f.map.iter().map(|y| members.iter().position(|m| m == y).expect("image member")).collect();
    let onto = Homomorphism::new(a, &image, local)?;
    let factorization = factor(a, v, &image, &u_image, &onto, f.kernel(a, b), limits)?;
    let qn = factorization.quotient.algebra.n();
    if qn != image.n() || factorization.induced.image().len() != qn {
        return Err(Error::Internal("induced map onto the image is not bijective".into()));
    }
    Ok(FirstIsomorphism { factorization, image, members, u_image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, map, subset};
    use crate::operators::enumerate_vto;

    fn hom(a: &Algebra, b: &Algebra, names: &str) -> Homomorphism {
        let m = names.split_whitespace().map(|s| b.index_of(s).unwrap()).collect();
        Homomorphism::new(a, b, m).unwrap()
    }

    fn brute_homs(a: &Algebra, b: &Algebra) -> Vec<Homomorphism> {
        let (n, m) = (a.n(), b.n());
        let mut out = Vec::new();
        for mut code in 0..m.pow(n as u32) {
            let image: Vec<Elem> = (0..n)
                .map(|_| {
                    let d = code % m;
                    code /= m;
                    d
                })
                .collect();
            let f = Homomorphism::new(a, b, image).unwrap();
            if hom_verdict(a, b, &f).is_ok() {
                out.push(f);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn endomorphisms_of_involutive6() {
        let a = fixtures::involutive6();
        let got = enumerate_hom(&a, &a, &Limits::default()).unwrap();
        let want = vec![hom(&a, &a, "1 1 1 1 1 1"), hom(&a, &a, "1 a b c d e"), hom(&a, &a, "1 b a d c e")];
        assert_eq!(got, want);
    }

    #[test]
    fn endomorphisms_of_bck4() {
        let a = fixtures::bck4();
        let got = enumerate_hom(&a, &a, &Limits::default()).unwrap();
        assert_eq!(got, vec![hom(&a, &a, "1 1 1 1"), Homomorphism::identity(&a)]);
    }

    #[test]
    fn enumeration_matches_brute_force_on_corpus() {
        let corpus = fixtures::corpus();
        for a in &corpus {
            for b in &corpus {
                if a.n().pow(b.n() as u32) <= 50_000 && b.n().pow(a.n() as u32) <= 50_000 {
                    assert_eq!(enumerate_hom(a, b, &Limits::default()).unwrap(), brute_homs(a, b));
                }
            }
        }
    }

    #[test]
    fn vthoms_of_involutive6() {
        let a = fixtures::involutive6();
        let l = Limits::default();
        let vs = enumerate_vto(&a, &l).unwrap();
        assert_eq!(vs.len(), 10);
        let (psi1, psi2, psi3) = (hom(&a, &a, "1 1 1 1 1 1"), hom(&a, &a, "1 a b c d e"), hom(&a, &a, "1 b a d c e"));
        // the identity operator commutes with every endomorphism, the swap included
        assert_eq!(vs[0], UnaryMap::identity(&a));
        assert_eq!(
            enumerate_vthom(&a, &vs[0], &a, &vs[0], &l).unwrap(),
            vec![psi1.clone(), psi2.clone(), psi3.clone()]
        );
        for v in &vs[1..9] {
            assert_eq!(enumerate_vthom(&a, v, &a, v, &l).unwrap(), vec![psi1.clone(), psi2.clone()]);
        }
        assert_eq!(vs[9], map(&a, "1 e e e e e"));
        assert_eq!(enumerate_vthom(&a, &vs[9], &a, &vs[9], &l).unwrap(), vec![psi1, psi2, psi3]);
    }

    #[test]
    fn constant_and_identity_are_always_vt_endomorphisms() {
        let l = Limits::default();
        for a in fixtures::corpus() {
            for v in enumerate_vto(&a, &l).unwrap() {
                let homs = enumerate_vthom(&a, &v, &a, &v, &l).unwrap();
                assert!(homs.contains(&Homomorphism::identity(&a)));
                assert!(homs.contains(&Homomorphism::constant_one(&a, &a)));
            }
        }
    }

    #[test]
    fn transport_on_involutive6() {
        let a = fixtures::involutive6();
        let l = Limits::default();
        let v10 = map(&a, "1 e e e e e");
        let psi3 = hom(&a, &a, "1 b a d c e");
        let r = transport(&a, &v10, &a, &v10, &psi3, &l).unwrap();
        assert!(r.holds(), "{:?}", r.failures);
        assert_eq!(r.kernel, subset(&a, "1"));
        assert!(r.surjective);

        let one = Homomorphism::constant_one(&a, &a);
        let r = transport(&a, &v10, &a, &v10, &one, &l).unwrap();
        assert!(r.holds());
        assert_eq!(r.kernel, a.carrier());
        assert_eq!(r.image, subset(&a, "1"));
        assert!(r.pushforwards.is_none());
        assert_eq!(push_forward(&a, &v10, &a, &v10, &one, a.carrier()), Err(Error::SurjectivityRequired));

        let id = Homomorphism::identity(&a);
        let r = transport(&a, &v10, &a, &v10, &id, &l).unwrap();
        assert!(r.pushforwards.unwrap().iter().all(|(d, t)| d == t));
        assert!(r.pullbacks.iter().all(|(g, p)| g == p));
        assert!(r.subalgebras.iter().all(|(s, t)| s == t));
    }

    #[test]
    fn factor_examples() {
        let a = fixtures::involutive6();
        let l = Limits::default();
        let v = map(&a, "1 e e e e e");
        let psi3 = hom(&a, &a, "1 b a d c e");
        let f = factor(&a, &v, &a, &v, &psi3, subset(&a, "1"), &l).unwrap();
        assert_eq!(f.quotient.algebra.n(), 6);
        assert_eq!(f.induced.map(), psi3.map());

        let one = Homomorphism::constant_one(&a, &a);
        let f = factor(&a, &v, &a, &v, &one, a.carrier(), &l).unwrap();
        assert_eq!(f.quotient.algebra.n(), 1);
        assert_eq!(f.induced.map(), &[a.one()]);

        assert_eq!(
            factor(&a, &v, &a, &v, &psi3, a.carrier(), &l).unwrap_err(),
            Error::KernelContainmentViolated { witness: 1 }
        );
    }

    #[test]
    fn first_isomorphism_on_corpus() {
        let l = Limits::default();
        for a in fixtures::corpus() {
            for v in enumerate_vto(&a, &l).unwrap() {
                for f in enumerate_vthom(&a, &v, &a, &v, &l).unwrap() {
                    let fi = first_isomorphism(&a, &v, &a, &v, &f, &l).unwrap();
                    let q = &fi.factorization.quotient.algebra;
                    let iso = fi.factorization.induced.clone();
                    assert_eq!(iso.image().len(), q.n());
                    assert!(is_isomorphic(q, &fi.image).is_some());
                }
            }
        }
    }

    #[test]
    fn isomorphism_search() {
        let a = fixtures::involutive6();
        assert_eq!(is_isomorphic(&a, &a), Some(Homomorphism::identity(&a)));
        assert_eq!(is_isomorphic(&a, &fixtures::bck4()), None);
        for b in fixtures::corpus() {
            let q = deduction::congruence_from(&b, Subset::singleton(b.one())).unwrap();
            assert!(is_isomorphic(&q.algebra, &b).is_some());
        }
        // same size, different structure
        assert_eq!(is_isomorphic(&fixtures::involutive6(), &fixtures::pentagon6()), None);
    }

    #[test]
    fn mismatched_parents_are_rejected() {
        let a = fixtures::bck4();
        let b = fixtures::godel3();
        let f = Homomorphism::identity(&a);
        assert_eq!(is_hom(&b, &a, &f), Err(Error::ParentMismatch));
        assert_eq!(Homomorphism::new(&a, &b, vec![0, 1]), Err(Error::MapArity { expected: 4, got: 2 }));
    }
}
