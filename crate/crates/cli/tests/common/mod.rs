#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// Every corpus command: fixture name and arguments, run from the crate root.
pub const CORPUS_COMMANDS: &[(&str, &[&str])] = &[
    ("ex_1_element_validate", &["validate", "examples/ex_1_element.alg"]),
    ("ex_1_element_suite", &["suite", "examples/ex_1_element.alg"]),
    ("ex_2_5_validate", &["validate", "examples/ex_2_5.alg"]),
    ("ex_2_5_props", &["props", "examples/ex_2_5.alg"]),
    ("ex_2_5_enum_into", &["enum", "into", "examples/ex_2_5.alg"]),
    ("ex_2_5_enum_clo", &["enum", "clo", "examples/ex_2_5.alg"]),
    ("ex_2_5_enum_vto", &["enum", "vto", "examples/ex_2_5.alg"]),
    ("ex_2_5_enum_vto_json", &["--json", "enum", "vto", "examples/ex_2_5.alg"]),
    ("ex_2_5_enum_ds", &["enum", "ds", "examples/ex_2_5.alg"]),
    ("ex_2_5_enum_dsn", &["enum", "dsn", "examples/ex_2_5.alg"]),
    ("ex_2_5_enum_dsv_v1", &["enum", "dsv", "examples/ex_2_5.alg", "--vto", "v1"]),
    ("ex_2_5_enum_dsv_v2", &["enum", "dsv", "examples/ex_2_5.alg", "--vto", "v2"]),
    ("ex_2_5_enum_cong", &["enum", "cong", "examples/ex_2_5.alg"]),
    ("ex_2_5_quotient_b", &["quotient", "examples/ex_2_5.alg", "--ds", "B"]),
    ("ex_2_5_hedges_v2", &["hedges", "examples/ex_2_5.alg", "--vto", "v2"]),
    ("ex_2_5_valuation_check", &["valuation", "check", "examples/ex_2_5.alg", "--valuation", "phi"]),
    ("ex_2_5_valuation_compose", &["valuation", "compose", "examples/ex_2_5.alg", "--valuation", "phi", "--vto", "v2"]),
    (
        "ex_2_5_valuation_compose_json",
        &["--json", "valuation", "compose", "examples/ex_2_5.alg", "--valuation", "phi", "--vto", "v2"],
    ),
    ("ex_2_5_suite", &["suite", "examples/ex_2_5.alg"]),
    ("ex_2_6_validate", &["validate", "examples/ex_2_6.alg"]),
    ("ex_2_6_props", &["props", "examples/ex_2_6.alg"]),
    ("ex_2_6_enum_vto", &["enum", "vto", "examples/ex_2_6.alg"]),
    ("ex_2_6_enum_hom", &["enum", "hom", "examples/ex_2_6.alg"]),
    ("ex_2_6_enum_vthom_v1", &["enum", "vthom", "examples/ex_2_6.alg", "--vto", "v1"]),
    ("ex_2_6_enum_vthom_v2", &["enum", "vthom", "examples/ex_2_6.alg", "--vto", "v2"]),
    ("ex_2_6_enum_vthom_v10", &["enum", "vthom", "examples/ex_2_6.alg", "--vto", "v10"]),
    ("ex_2_6_enum_dsn", &["enum", "dsn", "examples/ex_2_6.alg"]),
    (
        "ex_2_6_factor_psi3",
        &["factor", "examples/ex_2_6.alg", "--hom", "psi3", "--vto", "v10", "--target-vto", "v10", "--ds", "one"],
    ),
    ("ex_6_8_props", &["props", "examples/ex_6_8.alg"]),
    ("ex_6_8_enum_vto", &["enum", "vto", "examples/ex_6_8.alg"]),
    ("ex_6_8_enum_smarandache", &["enum", "smarandache", "examples/ex_6_8.alg"]),
    ("ex_6_8_enum_svto", &["enum", "svto", "examples/ex_6_8.alg", "--q", "Q"]),
    ("chain2_props", &["props", "examples/chain2.alg"]),
    ("chain2_suite", &["suite", "examples/chain2.alg"]),
    ("godel3_enum_cong", &["enum", "cong", "examples/godel3.alg"]),
    ("godel3_quotient_top", &["quotient", "examples/godel3.alg", "--ds", "top"]),
    ("godel3_lift_id", &["lift", "examples/godel3.alg", "--vto", "id", "--ds", "top"]),
    ("godel3_lift_glob", &["lift", "examples/godel3.alg", "--vto", "glob", "--ds", "top"]),
    ("godel3_hedges_glob", &["hedges", "examples/godel3.alg", "--vto", "glob"]),
];

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Run {
    /// Stdout, stderr and exit status in the layout of the expected-output files.
    pub fn transcript(&self) -> String {
        let mut s = format!("exit: {}\n--- stdout\n{}", self.code, self.stdout);
        if !self.stderr.is_empty() {
            s.push_str("--- stderr\n");
            s.push_str(&self.stderr);
        }
        s
    }
}

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn expected_path(name: &str) -> PathBuf {
    crate_dir().join("examples/expected").join(format!("{name}.txt"))
}

pub fn psbck(args: &[&str]) -> Run {
    psbck_env(args, None)
}

pub fn psbck_env(args: &[&str], max_n: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_psbck"));
    cmd.args(args).current_dir(crate_dir()).env_remove("PSBCK_MAX_N");
    if let Some(m) = max_n {
        cmd.env("PSBCK_MAX_N", m);
    }
    let out = cmd.output().expect("psbck runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

/// Map lines `map NAME on ALG: ...` of a text report, as image vectors.
pub fn map_images(text: &str) -> Vec<String> {
    lines_after_colon(text, "map ")
}

pub fn subset_members(text: &str) -> Vec<String> {
    lines_after_colon(text, "subset ")
}

pub fn hom_images(text: &str) -> Vec<String> {
    lines_after_colon(text, "hom ")
}

fn lines_after_colon(text: &str, prefix: &str) -> Vec<String> {
    text.lines()
        .filter(|l| l.starts_with(prefix))
        .map(|l| {
            let body = l.split_once(':').expect("definition line").1;
            body.split('#').next().unwrap().trim().to_string()
        })
        .collect()
}
