//! Process-level checks: exit codes, determinism, file output, and
//! JSON well-formedness of the installed binary.

use std::path::Path;
use std::process::{Command, Output};

fn equipart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equipart"))
        .args(args)
        .output()
        .expect("binary must run")
}

#[test]
fn happy_paths_exit_zero() {
    for args in [
        vec!["words", "--nmax", "4"],
        vec!["circles", "--j", "3"],
        vec!["obstruction", "--d", "8", "--j", "5"],
        vec!["obstruction", "--d", "6", "--j", "4"],
        vec!["jacobian", "--word", "ABABAB"],
        vec!["dickson", "--j", "5", "--k", "2", "--d", "9"],
        vec!["bounds", "--j", "5", "--k", "2"],
        vec!["table", "--k", "2", "--jmax", "6"],
    ] {
        let out = equipart(&args);
        assert!(out.status.success(), "{args:?}: {:?}", out);
        assert!(!out.stdout.is_empty(), "{args:?} printed nothing");
    }
}

#[test]
fn invalid_arguments_exit_two() {
    for args in [
        vec!["obstruction", "--d", "9", "--j", "5"], // 2d - 3j = 3
        vec!["circles", "--j", "4"],                 // even j
        vec!["circles", "--j", "17"],                // beyond the bound
        vec!["words", "--nmax", "0"],
        vec!["jacobian", "--word", "BAAB"],          // first letter B
        vec!["jacobian", "--word", "AAAB"],          // unbalanced
        vec!["nonsense"],                            // clap rejection
    ] {
        let out = equipart(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {:?}", out);
    }
}

#[test]
fn budget_guard_exits_four() {
    let out = equipart(&["dickson", "--j", "63", "--k", "4", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(4), "{out:?}");
}

#[test]
fn exponent_range_guard_exits_two() {
    for args in [
        vec!["dickson", "--j", "70000", "--k", "2"],
        vec!["bounds", "--j", "70000", "--k", "2"],
        vec!["table", "--k", "6", "--jmax", "4000"],
    ] {
        let out = equipart(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {out:?}");
    }
    // Huge d is fine: everything survives reduction.
    let out = equipart(&["dickson", "--j", "5", "--k", "2", "--d", "100000"]);
    assert!(out.status.success(), "{out:?}");
    assert!(String::from_utf8_lossy(&out.stdout).contains("is admissible"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["obstruction", "--d", "14", "--j", "9"],
        vec!["circles", "--j", "5", "--format", "json"],
    ] {
        let a = equipart(&args);
        let b = equipart(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?} not byte-identical");
    }
}

#[test]
fn json_outputs_carry_the_schema_field() {
    for args in [
        vec!["words", "--nmax", "3"],
        vec!["circles", "--j", "3"],
        vec!["obstruction", "--d", "5", "--j", "3"],
        vec!["jacobian", "--word", "AABB"],
        vec!["dickson", "--j", "2", "--k", "2"],
        vec!["bounds", "--j", "4", "--k", "2"],
        vec!["table", "--k", "2", "--jmax", "4"],
    ] {
        let mut argv = args.clone();
        argv.extend_from_slice(&["--format", "json"]);
        let out = equipart(&argv);
        assert!(out.status.success(), "{argv:?}");
        let value: serde_json::Value =
            serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{argv:?}: {e}"));
        assert_eq!(value["schema"], "equipart/1", "{argv:?}");
    }
}

#[test]
fn out_flag_writes_a_file_instead_of_stdout() {
    let path = std::env::temp_dir().join("equipart-out-test.json");
    let _ = std::fs::remove_file(&path);
    let out = equipart(&[
        "bounds",
        "--j",
        "5",
        "--k",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "data must go to the file");
    let written = std::fs::read_to_string(&path).expect("file written");
    assert!(written.contains("\"exact\": 8"));
    let _ = std::fs::remove_file(Path::new(&path));
}

#[test]
fn header_toggle() {
    let with = equipart(&["words", "--nmax", "2"]);
    let without = equipart(&["words", "--nmax", "2", "--no-header"]);
    let with = String::from_utf8(with.stdout).unwrap();
    let without = String::from_utf8(without.stdout).unwrap();
    assert!(with.starts_with("# equipart "));
    assert!(!without.starts_with("#"));
    assert!(with.ends_with(&without));
}

#[test]
fn verify_passes_and_prints_the_ledger() {
    let out = equipart(&["verify", "--no-header"]);
    assert!(out.status.success(), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    for id in 1..=9 {
        assert!(
            text.contains(&format!("PASS  criterion {id}:")),
            "missing pass line for criterion {id}: {text}"
        );
    }
    assert!(text.contains("all criteria passed"));
}
