//! Seeded random generation of small certified algebras.
//!
//! Instances are built from a few constructions (posets, Gödel and Łukasiewicz
//! chains, Heyting algebras of down-sets, the worked examples) combined with
//! ordinal sums, direct products, generated subalgebras, quotients and random
//! relabelling. Every candidate goes through [`validate`]; rejects are retried.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{validate, Algebra, Elem, RawAlgebra};
use crate::deduction;
use crate::fixtures;
use crate::subset::Subset;

const ATTEMPTS: usize = 256;

/// Operation tables without names, used while combining.
#[derive(Debug, Clone)]
struct Tables {
    one: Elem,
    zero: Option<Elem>,
    arrow: Vec<Vec<Elem>>,
    squig: Vec<Vec<Elem>>,
}

impl Tables {
    fn n(&self) -> usize {
        self.arrow.len()
    }

    fn of(alg: &Algebra) -> Self {
        Tables { one: alg.one(), zero: alg.zero(), arrow: alg.arrow_rows(), squig: alg.squig_rows() }
    }

    fn certify(&self) -> Option<Algebra> {
        let n = self.n();
        let mut letters = (b'a'..=b'z').map(|c| (c as char).to_string());
        let names = (0..n)
            .map(|x| {
                if x == self.one {
                    "1".to_string()
                } else if Some(x) == self.zero {
                    "0".to_string()
                } else {
                    letters.next().unwrap_or_else(|| format!("e{x}"))
                }
            })
            .collect();
        let raw =
            RawAlgebra { names, one: self.one, zero: self.zero, arrow: self.arrow.clone(), squig: self.squig.clone() };
        validate(&raw).ok()
    }

    fn relabel(&self, perm: &[Elem]) -> Tables {
        let n = self.n();
        let mut arrow = vec![vec![0; n]; n];
        let mut squig = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                arrow[perm[x]][perm[y]] = perm[self.arrow[x][y]];
                squig[perm[x]][perm[y]] = perm[self.squig[x][y]];
            }
        }
        Tables { one: perm[self.one], zero: self.zero.map(|z| perm[z]), arrow, squig }
    }
}

/// Random partial order on `0..n` with `n-1` on top; `x→y = 1` if `x ≤ y`, else `y`.
fn poset_bck(rng: &mut ChaCha8Rng, n: usize) -> Tables {
    let top = n - 1;
    let mut le = vec![vec![false; n]; n];
    for x in 0..n {
        le[x][x] = true;
        le[x][top] = true;
    }
    let density = rng.gen_range(0.1..0.9);
    for x in 0..top {
        for y in x + 1..top {
            if rng.gen_bool(density) {
                le[x][y] = true;
            }
        }
    }
    for k in 0..n {
        for x in 0..n {
            for y in 0..n {
                if le[x][k] && le[k][y] {
                    le[x][y] = true;
                }
            }
        }
    }
    let arrow: Vec<Vec<Elem>> = (0..n).map(|x| (0..n).map(|y| if le[x][y] { top } else { y }).collect()).collect();
    let zero = (0..n).find(|&z| (0..n).all(|x| le[z][x]));
    Tables { one: top, zero, squig: arrow.clone(), arrow }
}

/// Gödel chain `0 < 1 < … < n-1`.
fn godel_chain(n: usize) -> Tables {
    let arrow: Vec<Vec<Elem>> = (0..n).map(|x| (0..n).map(|y| if x <= y { n - 1 } else { y }).collect()).collect();
    Tables { one: n - 1, zero: Some(0), squig: arrow.clone(), arrow }
}

/// Łukasiewicz chain on `0..n`, `x→y = min(n-1, n-1-x+y)`.
fn lukasiewicz_chain(n: usize) -> Tables {
    let top = n - 1;
    let arrow: Vec<Vec<Elem>> = (0..n).map(|x| (0..n).map(|y| top.min(top - x + y)).collect()).collect();
    Tables { one: top, zero: Some(0), squig: arrow.clone(), arrow }
}

/// Heyting algebra of the down-sets of a random poset on `k` points.
fn heyting_of_downsets(rng: &mut ChaCha8Rng, k: usize) -> Tables {
    let mut below = vec![0u32; k];
    for x in 0..k {
        below[x] |= 1 << x;
        for y in 0..x {
            if rng.gen_bool(0.4) {
                below[x] |= below[y];
            }
        }
    }
    let downsets: Vec<u32> =
        (0u32..(1 << k)).filter(|&s| (0..k).all(|x| s >> x & 1 == 0 || below[x] & !s == 0)).collect();
    let index = |s: u32| downsets.iter().position(|&d| d == s).expect("down-set");
    let m = downsets.len();
    let arrow: Vec<Vec<Elem>> = (0..m)
        .map(|x| {
            (0..m)
                .map(|y| {
                    let (dx, dy) = (downsets[x], downsets[y]);
                    let z = downsets.iter().filter(|&&z| z & dx & !dy == 0).fold(0, |acc, &z| acc | z);
                    index(z)
                })
                .collect()
        })
        .collect();
    Tables { one: index((1 << k) - 1), zero: Some(index(0)), squig: arrow.clone(), arrow }
}

/// `a` placed below `b`, the tops identified.
fn ordinal_sum(a: &Tables, b: &Tables) -> Tables {
    let lower: Vec<Elem> = (0..a.n()).filter(|&x| x != a.one).collect();
    let n = lower.len() + b.n();
    let embed_a = |x: Elem| if x == a.one { lower.len() + b.one } else { lower.iter().position(|&l| l == x).unwrap() };
    let embed_b = |x: Elem| lower.len() + x;
    let mut arrow = vec![vec![0; n]; n];
    let mut squig = vec![vec![0; n]; n];
    let top = embed_b(b.one);
    for (i, &x) in lower.iter().enumerate() {
        for (j, &y) in lower.iter().enumerate() {
            arrow[i][j] = embed_a(a.arrow[x][y]);
            squig[i][j] = embed_a(a.squig[x][y]);
        }
        for y in 0..b.n() {
            arrow[i][embed_b(y)] = top;
            squig[i][embed_b(y)] = top;
            arrow[embed_b(y)][i] = i;
            squig[embed_b(y)][i] = i;
        }
    }
    for x in 0..b.n() {
        for y in 0..b.n() {
            arrow[embed_b(x)][embed_b(y)] = embed_b(b.arrow[x][y]);
            squig[embed_b(x)][embed_b(y)] = embed_b(b.squig[x][y]);
        }
    }
    let zero = match a.zero {
        Some(z) if z != a.one => Some(embed_a(z)),
        _ => b.zero.map(embed_b),
    };
    Tables { one: top, zero, arrow, squig }
}

fn product(a: &Tables, b: &Tables) -> Tables {
    let (na, nb) = (a.n(), b.n());
    let pair = |x: Elem, y: Elem| x * nb + y;
    let n = na * nb;
    let mut arrow = vec![vec![0; n]; n];
    let mut squig = vec![vec![0; n]; n];
    for x1 in 0..na {
        for x2 in 0..nb {
            for y1 in 0..na {
                for y2 in 0..nb {
                    arrow[pair(x1, x2)][pair(y1, y2)] = pair(a.arrow[x1][y1], b.arrow[x2][y2]);
                    squig[pair(x1, x2)][pair(y1, y2)] = pair(a.squig[x1][y1], b.squig[x2][y2]);
                }
            }
        }
    }
    let zero = match (a.zero, b.zero) {
        (Some(z1), Some(z2)) => Some(pair(z1, z2)),
        _ => None,
    };
    Tables { one: pair(a.one, b.one), zero, arrow, squig }
}

/// Closure of `seed ∪ {1}` under both implications.
fn generated_subalgebra(alg: &Algebra, seed: Subset) -> Subset {
    let mut s = seed.with(alg.one());
    loop {
        let mut next = s;
        for x in s {
            for y in s {
                next.insert(alg.imp(x, y));
                next.insert(alg.sq(x, y));
            }
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

fn base(rng: &mut ChaCha8Rng, max_n: usize) -> Tables {
    let n = rng.gen_range(1..=max_n);
    match rng.gen_range(0..6) {
        0 => poset_bck(rng, n),
        1 => godel_chain(n),
        2 => lukasiewicz_chain(n),
        3 => {
            let k = rng.gen_range(0..=3);
            heyting_of_downsets(rng, k)
        }
        _ => {
            let pool = [
                fixtures::bck4(),
                fixtures::involutive6(),
                fixtures::pentagon6(),
                fixtures::godel3(),
                fixtures::chain2(),
            ];
            Tables::of(pool.choose(rng).expect("non-empty pool"))
        }
    }
}

fn candidate(rng: &mut ChaCha8Rng, max_n: usize) -> Option<Algebra> {
    let mut t = base(rng, max_n);
    match rng.gen_range(0..5) {
        0 => {
            let b = base(rng, max_n);
            t = ordinal_sum(&t, &b);
        }
        1 => {
            let b = base(rng, max_n);
            if t.n() * b.n() <= max_n.max(1) * 2 {
                t = product(&t, &b);
            }
        }
        _ => {}
    }
    let mut alg = t.certify()?;
    if rng.gen_bool(0.3) || alg.n() > max_n {
        let seed: Subset = alg.elements().filter(|_| rng.gen_bool(0.4)).collect();
        let (sub, _) = alg.subalgebra(generated_subalgebra(&alg, seed)).ok()?;
        alg = sub;
    }
    if rng.gen_bool(0.2) {
        let normal: Vec<Subset> = deduction::enumerate_ds_brute_force(&alg)
            .into_iter()
            .filter(|&h| deduction::normality_verdict(&alg, h).is_ok())
            .collect();
        let h = *normal.choose(rng)?;
        alg = deduction::congruence_from(&alg, h).ok()?.algebra;
    }
    if alg.n() > max_n {
        return None;
    }
    let mut perm: Vec<Elem> = alg.elements().collect();
    perm.shuffle(rng);
    Tables::of(&alg).relabel(&perm).certify()
}

/// A certified algebra with at most `max_n` elements (`max_n ≥ 1`), determined by `seed`.
pub fn random_algebra(seed: u64, max_n: usize) -> Algebra {
    let max_n = max_n.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        if let Some(alg) = candidate(&mut rng, max_n) {
            return alg;
        }
    }
    Tables::of(&fixtures::trivial()).certify().expect("trivial algebra")
}

/// `count` pairwise distinct certified algebras with at most `max_n` elements.
///
/// Distinctness is on operation tables, not up to isomorphism. Fewer than
/// `count` instances are returned only if the constructions run dry.
pub fn sample(seed: u64, count: usize, max_n: usize) -> Vec<Algebra> {
    let max_n = max_n.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    let mut misses = 0;
    while out.len() < count && misses < count * ATTEMPTS {
        match candidate(&mut rng, max_n) {
            Some(alg) if seen.insert((alg.one(), alg.zero(), alg.arrow_rows(), alg.squig_rows())) => out.push(alg),
            _ => misses += 1,
        }
    }
    out
}

/// Bounded members of [`sample`].
pub fn sample_bounded(seed: u64, count: usize, max_n: usize) -> Vec<Algebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut seen = HashSet::new();
    let mut round = 0;
    while out.len() < count && round < 64 {
        for alg in sample(rng.gen(), count, max_n) {
            if alg.is_bounded() && out.len() < count && seen.insert((alg.arrow_rows(), alg.squig_rows(), alg.one())) {
                out.push(alg);
            }
        }
        round += 1;
    }
    out
}
