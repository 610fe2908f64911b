//! Exit statuses, diagnostics and JSON reports of the `psbck` binary.

mod common;

use std::io::Write;

use common::{psbck, psbck_env, CORPUS_COMMANDS};

fn temp_doc(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".alg").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const BAD_TABLE: &str = "\
algebra A
  elements: 1 a
  one: 1
  arrow:
    1 a
    a 1
  squig:
    1 a
    1 1
";

#[test]
fn example_certifies() {
    let r = psbck(&["validate", "examples/ex_2_5.alg"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("algebra A: certified (4 elements, zero a)\n"));
}

#[test]
fn empty_file_is_an_input_error() {
    let f = temp_doc("# nothing here\n");
    let r = psbck(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert_eq!(r.stderr, "error[E_PARSE]: 1:1: no algebra defined\n");
}

#[test]
fn undefined_map_is_positioned() {
    let text = std::fs::read_to_string(common::crate_dir().join("examples/chain2.alg")).unwrap() + "map v on C: 0 1\n";
    let f = temp_doc(&text);
    let r = psbck(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(r.code, 2);
    let line = text.lines().count();
    assert!(r.stderr.starts_with(&format!("error[E_PARSE]: {line}:10: ")), "{}", r.stderr);
    assert!(r.stderr.contains("`C`"));
}

#[test]
fn uncertified_algebra_fails_validation_with_witnesses() {
    let f = temp_doc(BAD_TABLE);
    let r = psbck(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("algebra A (line 1): not certified"));
    let r = psbck(&["enum", "vto", f.path().to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error[E_USAGE]: algebra `A` (line 1) is not certified"));
}

#[test]
fn domain_errors_exit_1_with_stable_codes() {
    let r = psbck(&["quotient", "examples/ex_2_5.alg", "--ds", "B"]);
    assert_eq!(
        (r.code, r.stderr.as_str()),
        (1, "error[E_NOT_NORMAL]: deductive system is not normal: DS3 at (c, a)\n")
    );
    let r = psbck(&["valuation", "compose", "examples/ex_2_5.alg", "--valuation", "phi", "--vto", "phi5"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.starts_with("error[E_NOT_VTO]"));
}

#[test]
fn unknown_names_are_usage_errors() {
    let r = psbck(&["lift", "examples/ex_2_5.alg", "--vto", "nope", "--ds", "one"]);
    assert_eq!((r.code, r.stderr.as_str()), (2, "error[E_USAGE]: no map named `nope`\n"));
    let r = psbck(&["enum", "dsv", "examples/ex_2_5.alg"]);
    assert_eq!((r.code, r.stderr.as_str()), (2, "error[E_USAGE]: missing required option --vto\n"));
}

#[test]
fn enumeration_cap_comes_from_the_environment() {
    let r = psbck_env(&["enum", "vto", "examples/ex_2_6.alg"], Some("4"));
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error[E_CARRIER_TOO_LARGE]"), "{}", r.stderr);
    let r = psbck_env(&["enum", "vto", "examples/ex_2_5.alg"], Some("4"));
    assert_eq!(r.code, 0);
    let r = psbck_env(&["enum", "vto", "examples/ex_2_5.alg"], Some("lots"));
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("PSBCK_MAX_N"));
}

#[test]
fn suite_on_the_one_element_algebra_passes() {
    let r = psbck(&["suite", "examples/ex_1_element.alg"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("all passed: 58 checks, 0 failed\n"));
    assert!(!r.stdout.contains("FAIL"));
}

#[test]
fn every_json_report_is_versioned() {
    for (name, args) in CORPUS_COMMANDS {
        let mut with_json = vec!["--json"];
        with_json.extend(args.iter().filter(|a| **a != "--json"));
        let r = psbck(&with_json);
        let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(v["schema"], 1, "{name}");
        assert!(r.stderr.is_empty(), "{name}");
        match v.get("error") {
            Some(e) => assert!(r.code != 0 && e["code"].as_str().unwrap().starts_with("E_"), "{name}"),
            None => assert!(v["command"].is_string(), "{name}"),
        }
    }
}

#[test]
fn text_output_re_parses() {
    for args in [
        &["enum", "svto", "examples/ex_6_8.alg", "--q", "Q"][..],
        &["quotient", "examples/godel3.alg", "--ds", "top"],
        &["factor", "examples/ex_2_6.alg", "--hom", "psi3", "--vto", "v10", "--target-vto", "v10", "--ds", "one"],
    ] {
        let out = psbck(args).stdout;
        // the factor report refers to the source algebra, which it does not repeat
        let text = if args[0] == "factor" {
            std::fs::read_to_string(common::crate_dir().join("examples/ex_2_6.alg")).unwrap() + &out
        } else {
            out
        };
        let f = temp_doc(&text);
        let r = psbck(&["validate", f.path().to_str().unwrap()]);
        assert_eq!(r.code, 0, "{args:?}: {}{}", r.stdout, r.stderr);
        assert!(!r.stdout.contains("not certified"));
    }
}
