//! Acceptance criteria, one test per criterion. Each prints a single
//! `criterion N: PASS|FAIL` line; run with `--nocapture` to see passing lines.

mod common;

use std::time::{Duration, Instant};

use psbck_cli::document;
use psbck_core::algebra::{validate, Algebra};
use psbck_core::classes::{pseudo_product, smarandache_substructure};
use psbck_core::fixtures::{map, subset};
use psbck_core::operators::{compose, is_vto};
use psbck_core::{generate, laws};

use common::{hom_images, map_images, psbck, subset_members, CORPUS_COMMANDS};

const CORPUS: [&str; 6] = [
    "examples/ex_1_element.alg",
    "examples/ex_2_5.alg",
    "examples/ex_2_6.alg",
    "examples/ex_6_8.alg",
    "examples/chain2.alg",
    "examples/godel3.alg",
];

fn report(n: u32, title: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("criterion {n} ({title}): PASS"),
        Err(why) => {
            println!("criterion {n} ({title}): FAIL: {why}");
            panic!("criterion {n} failed: {why}");
        }
    }
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn verdict(failures: Vec<String>) -> Result<(), String> {
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn load(path: &str) -> Vec<Algebra> {
    let text = std::fs::read_to_string(common::crate_dir().join(path)).unwrap();
    let doc = document::parse(&text).unwrap();
    doc.algebras.iter().map(|a| validate(&a.raw).unwrap()).collect()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

#[test]
fn criterion_1_golden_enumeration() {
    let mut fail = Vec::new();
    let into_table = ["1 a a a", "1 a b a", "1 a b c", "1 a c c", "a a a a", "b a b a", "b a b c", "c a c c"];
    let vto_table = ["1 a a a", "1 a b a", "1 a b c", "1 a c c"];
    let (into, t1) = timed(|| psbck(&["enum", "into", "examples/ex_2_5.alg"]));
    let (vto, t2) = timed(|| psbck(&["enum", "vto", "examples/ex_2_5.alg"]));
    check(&mut fail, into.code == 0 && vto.code == 0, || "non-zero exit".into());
    check(&mut fail, map_images(&into.stdout) == strings(&into_table), || {
        format!("interior operators {:?}", map_images(&into.stdout))
    });
    check(&mut fail, map_images(&vto.stdout) == strings(&vto_table), || {
        format!("very true operators {:?}", map_images(&vto.stdout))
    });
    check(&mut fail, t1 < Duration::from_secs(1) && t2 < Duration::from_secs(1), || format!("took {t1:?} and {t2:?}"));
    report(1, "ex_2_5 interior and very true operators", verdict(fail));
}

#[test]
fn criterion_2_golden_composition() {
    let a = &load("examples/ex_2_5.alg")[0];
    let (v1, v2, v4) = (map(a, "1 a a a"), map(a, "1 a b a"), map(a, "1 a c c"));
    let mut fail = Vec::new();
    let (v1v2, v2v1) = (compose(&v1, &v2).unwrap(), compose(&v2, &v1).unwrap());
    check(&mut fail, v1v2 == v1 && v2v1 == v1, || "v1 v2 and v2 v1 should both be v1".into());
    check(&mut fail, is_vto(a, &v1v2).is_ok(), || "v1 v2 is not very true".into());
    let (v4v2, v2v4) = (compose(&v4, &v2).unwrap(), compose(&v2, &v4).unwrap());
    check(&mut fail, v4v2 != v2v4, || "v4 v2 = v2 v4".into());
    check(&mut fail, is_vto(a, &v4v2).is_err(), || "v4 v2 is very true".into());
    let cli = psbck(&["validate", "examples/ex_2_5.alg"]);
    check(&mut fail, cli.stdout.contains("map v4v2: plain map\n"), || "validate accepts v4v2".into());
    report(2, "ex_2_5 compositions", verdict(fail));
}

#[test]
fn criterion_3_golden_deduction() {
    let mut fail = Vec::new();
    let ds = subset_members(&psbck(&["enum", "ds", "examples/ex_2_5.alg"]).stdout);
    check(&mut fail, ds == strings(&["1", "1 b", "1 a b c"]), || format!("DS(A) = {ds:?}"));
    for (v, want) in [
        ("v1", &["1", "1 a b c"][..]),
        ("v4", &["1", "1 a b c"]),
        ("v2", &["1", "1 b", "1 a b c"]),
        ("v3", &["1", "1 b", "1 a b c"]),
    ] {
        let got = subset_members(&psbck(&["enum", "dsv", "examples/ex_2_5.alg", "--vto", v]).stdout);
        check(&mut fail, got == strings(want), || format!("DS^{v} = {got:?}"));
    }
    report(3, "ex_2_5 deductive systems", verdict(fail));
}

#[test]
fn criterion_4_golden_morphisms() {
    let mut fail = Vec::new();
    let vto_table = [
        "1 a b c d e",
        "1 a e a a e",
        "1 a e a d e",
        "1 a e c a e",
        "1 e b b b e",
        "1 e b b d e",
        "1 e b c b e",
        "1 e e c e e",
        "1 e e e d e",
        "1 e e e e e",
    ];
    let homs = ["1 1 1 1 1 1", "1 a b c d e", "1 b a d c e"];
    let ((), took) = timed(|| {
        let vto = map_images(&psbck(&["enum", "vto", "examples/ex_2_6.alg"]).stdout);
        check(&mut fail, vto == strings(&vto_table), || format!("VTO(A) = {vto:?}"));
        let hom = hom_images(&psbck(&["enum", "hom", "examples/ex_2_6.alg"]).stdout);
        check(&mut fail, hom == strings(&homs), || format!("HOM(A, A) = {hom:?}"));
        for i in 1..=10 {
            let v = format!("v{i}");
            let got = hom_images(&psbck(&["enum", "vthom", "examples/ex_2_6.alg", "--vto", &v]).stdout);
            let want = if i == 10 { &homs[..] } else { &homs[..2] };
            check(&mut fail, got == strings(want), || format!("VHOM for {v} = {got:?}, expected {want:?}"));
        }
    });
    check(&mut fail, took < Duration::from_secs(10), || format!("took {took:?}"));
    report(4, "ex_2_6 operators and morphisms", verdict(fail));
}

#[test]
fn criterion_5_golden_valuation() {
    let mut fail = Vec::new();
    let r = psbck(&["--json", "valuation", "compose", "examples/ex_2_5.alg", "--valuation", "phi", "--vto", "v2"]);
    let json: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    check(&mut fail, r.code == 0, || format!("exit {}", r.code));
    check(&mut fail, json["values"] == serde_json::json!(["0", "3", "1", "3"]), || {
        format!("values {}", json["values"])
    });
    check(&mut fail, json["pseudo_valuation"]["holds"] == true, || "not a pseudo-valuation".into());
    report(5, "ex_2_5 composed valuation", verdict(fail));
}

#[test]
fn criterion_6_golden_smarandache() {
    let mut fail = Vec::new();
    let vto_table = ["0 0 0 0 0 1", "0 0 0 c d 1", "0 0 0 d d 1", "0 a a c d 1", "0 a b c d 1"];
    let vto = map_images(&psbck(&["enum", "vto", "examples/ex_6_8.alg"]).stdout);
    check(&mut fail, vto == strings(&vto_table), || format!("VTO(A) = {vto:?}"));
    let found = subset_members(&psbck(&["enum", "smarandache", "examples/ex_6_8.alg"]).stdout);
    check(&mut fail, found.contains(&"0 c d 1".to_string()), || format!("Q not found among {found:?}"));
    let svto = psbck(&["enum", "svto", "examples/ex_6_8.alg", "--q", "Q"]).stdout;
    let got = map_images(&svto);
    check(&mut fail, got == strings(&["0 0 0 1", "0 c d 1", "0 d d 1"]), || format!("SVTO = {got:?}"));
    for (v, w) in [("v1", "w1"), ("v2", "w2"), ("v3", "w3"), ("v4", "w2"), ("v5", "w2")] {
        check(&mut fail, svto.contains(&format!("# {v} restricts to {w}\n")), || {
            format!("{v} does not restrict to {w}")
        });
    }

    // product on Q against x*y = min{z : x <= y->z}, computed from the order
    let a = &load("examples/ex_6_8.alg")[0];
    let q = smarandache_substructure(a, subset(a, "0 c d 1")).unwrap();
    let b = &q.algebra;
    let p = pseudo_product(b).unwrap();
    let leq = |x, y| b.imp(x, y) == b.one();
    for x in b.elements() {
        for y in b.elements() {
            let candidates: Vec<_> = b.elements().filter(|&z| leq(x, b.imp(y, z))).collect();
            let least = candidates.iter().copied().find(|&m| candidates.iter().all(|&z| leq(m, z)));
            check(&mut fail, least == Some(p.prod(x, y)), || format!("product at ({}, {})", b.name(x), b.name(y)));
        }
    }
    let row = |x: &str| -> String {
        let x = b.index_of(x).unwrap();
        b.elements().map(|y| b.name(p.prod(x, y))).collect::<Vec<_>>().join(" ")
    };
    // rows as tabulated, with the c and d labels exchanged
    for (label, tabulated) in [("0", "0 0 0 0"), ("c", "0 d d c"), ("d", "0 d d d"), ("1", "0 c d 1")] {
        check(&mut fail, row(label) == tabulated, || format!("row {label} = {}", row(label)));
    }
    let fixture = std::fs::read_to_string(common::crate_dir().join("examples/ex_6_8.alg")).unwrap();
    check(&mut fail, fixture.contains("c and d row labels exchanged"), || {
        "fixture does not document the row labels".into()
    });
    report(6, "ex_6_8 Smarandache structure", verdict(fail));
}

#[test]
fn criterion_7_property_suites() {
    let mut fail = Vec::new();
    for file in CORPUS {
        let r = psbck(&["suite", file]);
        if r.code != 0 {
            let failed: Vec<&str> = r.stdout.lines().filter(|l| l.starts_with("FAIL ")).collect();
            fail.push(format!("{file}: {}", failed.join(", ")));
        }
    }
    let r = psbck(&["suite", "examples/ex_1_element.alg", "--generated", "100", "--seed", "20261016", "--max-n", "6"]);
    check(&mut fail, r.stdout.contains("generated: 100 algebras"), || "generated sample is short".into());
    if r.code != 0 {
        let failed: Vec<&str> = r.stdout.lines().filter(|l| l.starts_with("FAIL ")).collect();
        fail.push(format!("generated: {}", failed.join(", ")));
    }
    report(7, "property suites over corpus and 100 generated algebras", verdict(fail));
}

#[test]
fn criterion_8_self_test() {
    let mut fail = Vec::new();
    let mut algebras: Vec<Algebra> = CORPUS.iter().flat_map(|f| load(f)).collect();
    algebras.extend(generate::sample(20261016, 100, 6));
    for a in &algebras {
        let r = laws::derived_law_suite(a);
        check(&mut fail, r.passed() && r.checked.len() + r.skipped.len() == 13, || {
            format!("{:?} on {:?}", r.failure, a.names())
        });
    }
    report(8, "derived law self-test", verdict(fail));
}

#[test]
fn criterion_9_determinism() {
    let mut fail = Vec::new();
    for (name, args) in CORPUS_COMMANDS {
        let (first, second) = (psbck(args), psbck(args));
        check(&mut fail, first.transcript() == second.transcript(), || format!("{name} differs between runs"));
    }
    report(9, "byte-identical reruns", verdict(fail));
}
