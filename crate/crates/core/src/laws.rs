//! Identities and inequalities that hold in every pseudo-BCK algebra (and in
//! every bounded one, pP one, or FLw one). Used as a self-test: a failure on a
//! certified algebra points at a bug in certification or in the tables.

use serde::Serialize;

use crate::algebra::{Algebra, Elem};
use crate::classes::{pseudo_product, Flw};
use crate::error::Violation;

/// Laws checked and the first counterexample found, if any.
#[derive(Debug, Clone, Default, Serialize)]
pub struct LawReport {
    pub checked: Vec<&'static str>,
    pub skipped: Vec<&'static str>,
    pub failure: Option<Violation>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn run<const K: usize>(&mut self, alg: &Algebra, law: &'static str, holds: impl Fn([Elem; K]) -> bool) {
        if self.failure.is_some() {
            return;
        }
        self.checked.push(law);
        let n = alg.n();
        let total = n.pow(K as u32);
        for code in 0..total {
            let mut t = [0; K];
            let mut c = code;
            for slot in t.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            if !holds(t) {
                self.failure = Some(Violation::new(law, t.to_vec()));
                return;
            }
        }
    }
}

/// Laws of all pseudo-BCK algebras, plus the negation laws when the algebra is bounded.
pub fn derived_law_suite(alg: &Algebra) -> LawReport {
    let a = alg;
    let le = |x, y| a.leq(x, y);
    let mut r = LawReport::default();

    r.run(a, "x->(y~>z) = y~>(x->z)", |[x, y, z]| a.imp(x, a.sq(y, z)) == a.sq(y, a.imp(x, z)));
    r.run(a, "x <= y => y->z <= x->z, y~>z <= x~>z", |[x, y, z]| {
        !le(x, y) || (le(a.imp(y, z), a.imp(x, z)) && le(a.sq(y, z), a.sq(x, z)))
    });
    r.run(a, "x <= y => z->x <= z->y, z~>x <= z~>y", |[x, y, z]| {
        !le(x, y) || (le(a.imp(z, x), a.imp(z, y)) && le(a.sq(z, x), a.sq(z, y)))
    });
    r.run(a, "x->y <= (z->x)->(z->y), x~>y <= (z~>x)~>(z~>y)", |[x, y, z]| {
        le(a.imp(x, y), a.imp(a.imp(z, x), a.imp(z, y))) && le(a.sq(x, y), a.sq(a.sq(z, x), a.sq(z, y)))
    });

    const BOUNDED: [&str; 9] = [
        "x <= x-~, x <= x~-",
        "x->y~ = y~>x-, x~>y- = y->x~",
        "x~->y-~ = y-~>x~-, x-~>y~- = y~->x-~",
        "x <= y => y- <= x-, y~ <= x~, x-~ <= y-~, x~- <= y~-",
        "x-~- = x-, x~-~ = x~",
        "x->y-~ = y-~>x- = x-~->y-~ and twin",
        "x->y~ = y~-~>x- = x-~->y~ and twin",
        "(x->y~-)~- = x->y~-, (x~>y-~)-~ = x~>y-~",
        "x->y <= y-~>x-, x~>y <= y~->x~",
    ];
    let Some(zero) = a.zero() else {
        r.skipped.extend(BOUNDED);
        return r;
    };
    let m = |x: Elem| a.imp(x, zero);
    let s = |x: Elem| a.sq(x, zero);
    r.run(a, BOUNDED[0], |[x]| le(x, s(m(x))) && le(x, m(s(x))));
    r.run(a, BOUNDED[1], |[x, y]| a.imp(x, s(y)) == a.sq(y, m(x)) && a.sq(x, m(y)) == a.imp(y, s(x)));
    r.run(a, BOUNDED[2], |[x, y]| {
        a.imp(s(x), s(m(y))) == a.sq(m(y), m(s(x))) && a.sq(m(x), m(s(y))) == a.imp(s(y), s(m(x)))
    });
    r.run(a, BOUNDED[3], |[x, y]| {
        !le(x, y) || (le(m(y), m(x)) && le(s(y), s(x)) && le(s(m(x)), s(m(y))) && le(m(s(x)), m(s(y))))
    });
    r.run(a, BOUNDED[4], |[x]| m(s(m(x))) == m(x) && s(m(s(x))) == s(x));
    r.run(a, BOUNDED[5], |[x, y]| {
        let l = a.imp(x, s(m(y)));
        let k = a.sq(x, m(s(y)));
        l == a.sq(m(y), m(x)) && l == a.imp(s(m(x)), s(m(y))) && k == a.imp(s(y), s(x)) && k == a.sq(m(s(x)), m(s(y)))
    });
    r.run(a, BOUNDED[6], |[x, y]| {
        let l = a.imp(x, s(y));
        let k = a.sq(x, m(y));
        l == a.sq(m(s(y)), m(x)) && l == a.imp(s(m(x)), s(y)) && k == a.imp(s(m(y)), s(x)) && k == a.sq(m(s(x)), m(y))
    });
    r.run(a, BOUNDED[7], |[x, y]| {
        let l = a.imp(x, m(s(y)));
        let k = a.sq(x, s(m(y)));
        m(s(l)) == l && s(m(k)) == k
    });
    r.run(a, BOUNDED[8], |[x, y]| le(a.imp(x, y), a.sq(m(y), m(x))) && le(a.sq(x, y), a.imp(s(y), s(x))));
    r
}

/// Laws of pseudo-BCK(pP) algebras and of FLw-algebras; skipped where the structure is missing.
pub fn product_law_suite(alg: &Algebra) -> LawReport {
    let a = alg;
    let le = |x, y| a.leq(x, y);
    let mut r = LawReport::default();
    const PP: [&str; 2] = ["x*y <= x, y", "x->y <= (x*z)->(y*z) <= x->(z->y) and twin"];
    const FLW: [&str; 3] = [
        "(x->y)*x <= x^y, x*(x~>y) <= x^y",
        "(x->z)^(y->z) = (xvy)->z and twin",
        "xvy <= ((x->y)~>y)^((y->x)~>x) and twin",
    ];
    let Ok(p) = pseudo_product(a) else {
        r.skipped.extend(PP);
        r.skipped.extend(FLW);
        return r;
    };
    let o = |x: Elem, y: Elem| p.prod(x, y);
    r.run(a, PP[0], |[x, y]| le(o(x, y), x) && le(o(x, y), y));
    r.run(a, PP[1], |[x, y, z]| {
        let mid = a.imp(o(x, z), o(y, z));
        let twin = a.sq(o(z, x), o(z, y));
        le(a.imp(x, y), mid) && le(mid, a.imp(x, a.imp(z, y))) && le(a.sq(x, y), twin) && le(twin, a.sq(x, a.sq(z, y)))
    });

    let Ok(f) = Flw::new(a) else {
        r.skipped.extend(FLW);
        return r;
    };
    r.run(a, FLW[0], |[x, y]| le(o(a.imp(x, y), x), f.meet(x, y)) && le(o(x, a.sq(x, y)), f.meet(x, y)));
    r.run(a, FLW[1], |[x, y, z]| {
        f.meet(a.imp(x, z), a.imp(y, z)) == a.imp(f.join(x, y), z)
            && f.meet(a.sq(x, z), a.sq(y, z)) == a.sq(f.join(x, y), z)
    });
    r.run(a, FLW[2], |[x, y]| {
        let j = f.join(x, y);
        le(j, f.meet(a.sq(a.imp(x, y), y), a.sq(a.imp(y, x), x)))
            && le(j, f.meet(a.imp(a.sq(x, y), y), a.imp(a.sq(y, x), x)))
    });
    r
}
