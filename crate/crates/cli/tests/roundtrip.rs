//! Serialized algebras, quotients and substructures re-parse to certified
//! algebras isomorphic to the originals.

use proptest::prelude::*;

use psbck_cli::commands::algebra_block;
use psbck_cli::document;
use psbck_core::algebra::{validate, Algebra, Limits};
use psbck_core::classes::smarandache_search;
use psbck_core::deduction::enumerate_congruences;
use psbck_core::morphisms::is_isomorphic;
use psbck_core::{fixtures, generate};

fn reparse(name: &str, alg: &Algebra) -> Algebra {
    let text = algebra_block(name, alg);
    let doc = document::parse(&text).unwrap_or_else(|e| panic!("{e:?}\n{text}"));
    validate(&doc.algebras[0].raw).unwrap_or_else(|e| panic!("{e}\n{text}"))
}

fn assert_round_trip(alg: &Algebra) {
    let limits = Limits::default();
    let back = reparse("A", alg);
    assert_eq!(back.names(), alg.names());
    assert_eq!(back.arrow_rows(), alg.arrow_rows());
    assert_eq!(back.squig_rows(), alg.squig_rows());
    for q in enumerate_congruences(alg, &limits).unwrap() {
        let back = reparse("A/H", &q.algebra);
        assert!(is_isomorphic(&q.algebra, &back).is_some());
    }
    if alg.is_bounded() {
        for s in smarandache_search(alg, &limits).unwrap() {
            let back = reparse("Q", &s.algebra);
            assert!(is_isomorphic(&s.algebra, &back).is_some());
        }
    }
}

#[test]
fn corpus_round_trips() {
    for a in fixtures::corpus() {
        assert_round_trip(&a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn generated_algebras_round_trip(seed in any::<u64>()) {
        assert_round_trip(&generate::random_algebra(seed, 6));
    }
}
