//! Worked-example algebras used throughout the tests and the corpus.

use crate::algebra::{validate, Algebra, RawAlgebra};

/// Builds an algebra from whitespace-separated name tables; panics on invalid input.
pub fn from_tables(elements: &str, one: &str, zero: Option<&str>, arrow: &[&str], squig: &[&str]) -> Algebra {
    let names: Vec<String> = elements.split_whitespace().map(String::from).collect();
    let id = |s: &str| names.iter().position(|n| n == s).unwrap_or_else(|| panic!("unknown element {s}"));
    let table =
        |rows: &[&str]| -> Vec<Vec<usize>> { rows.iter().map(|r| r.split_whitespace().map(id).collect()).collect() };
    let raw =
        RawAlgebra { one: id(one), zero: zero.map(id), arrow: table(arrow), squig: table(squig), names: names.clone() };
    validate(&raw).unwrap_or_else(|e| panic!("fixture failed certification: {e}"))
}

/// Four-element bounded algebra on `1 a b c` with zero `a`.
pub fn bck4() -> Algebra {
    from_tables(
        "1 a b c",
        "1",
        Some("a"),
        &["1 a b c", "1 1 1 1", "1 a 1 c", "1 b 1 1"],
        &["1 a b c", "1 1 1 1", "1 c 1 c", "1 c 1 1"],
    )
}

/// Six-element involutive algebra on `1 a b c d e` with zero `e`.
pub fn involutive6() -> Algebra {
    from_tables(
        "1 a b c d e",
        "1",
        Some("e"),
        &["1 a b c d e", "1 1 d 1 1 d", "1 c 1 1 1 c", "1 a d 1 d a", "1 c b c 1 b", "1 1 1 1 1 1"],
        &["1 a b c d e", "1 1 c 1 1 c", "1 d 1 1 1 d", "1 d b 1 d b", "1 a c c 1 a", "1 1 1 1 1 1"],
    )
}

/// Six-element bounded algebra on `0 a b c d 1` containing the chain `0 < d < c < 1`.
pub fn pentagon6() -> Algebra {
    from_tables(
        "0 a b c d 1",
        "1",
        Some("0"),
        &["1 1 1 1 1 1", "0 1 1 1 c 1", "0 b 1 1 c 1", "0 b b 1 c 1", "0 b b 1 1 1", "0 a b c d 1"],
        &["1 1 1 1 1 1", "0 1 1 1 c 1", "0 c 1 1 c 1", "0 a b 1 c 1", "0 a b 1 1 1", "0 a b c d 1"],
    )
}

pub fn trivial() -> Algebra {
    from_tables("1", "1", Some("1"), &["1"], &["1"])
}

/// Two-element Boolean chain `0 < 1`.
pub fn chain2() -> Algebra {
    from_tables("0 1", "1", Some("0"), &["1 1", "0 1"], &["1 1", "0 1"])
}

/// Two-element chain `a < 1` declared without a zero.
pub fn unbounded_pair() -> Algebra {
    from_tables("a 1", "1", None, &["1 1", "a 1"], &["1 1", "a 1"])
}

/// Three-element Gödel chain `0 < h < 1`: good and Glivenko, not involutive.
pub fn godel3() -> Algebra {
    from_tables("0 h 1", "1", Some("0"), &["1 1 1", "0 1 1", "0 h 1"], &["1 1 1", "0 1 1", "0 h 1"])
}

pub fn corpus() -> Vec<Algebra> {
    vec![trivial(), chain2(), godel3(), bck4(), involutive6(), pentagon6(), unbounded_pair()]
}

/// Map given as a whitespace-separated name vector in element order.
pub fn map(alg: &Algebra, images: &str) -> crate::operators::UnaryMap {
    let image =
        images.split_whitespace().map(|s| alg.index_of(s).unwrap_or_else(|| panic!("unknown element {s}"))).collect();
    crate::operators::UnaryMap::new(alg, image).expect("fixture map")
}

/// Subset given by element names.
pub fn subset(alg: &Algebra, names: &str) -> crate::subset::Subset {
    names.split_whitespace().map(|s| alg.index_of(s).unwrap_or_else(|| panic!("unknown element {s}"))).collect()
}
