//! Golden runs against the built binary: exit codes, file input, the
//! SDSTAB_JOBS environment default, and the fixed CSV headers.

use std::process::Command;

fn sdstab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sdstab"))
}

#[test]
fn gamma_from_edge_list_file() {
    let dir = std::env::temp_dir().join("sdstab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c9.edges");
    std::fs::write(
        &path,
        "# C_9\n9 9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 0\n",
    )
    .unwrap();
    let out = sdstab()
        .args(["gamma", "--file", path.to_str().unwrap(), "--witness"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("= 3"), "{stdout}");
}

#[test]
fn edge_list_error_reports_line_and_exits_1() {
    let dir = std::env::temp_dir().join("sdstab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("loop.edges");
    std::fs::write(&path, "2 1\n0 0\n").unwrap();
    let out = sdstab()
        .args(["gamma", "--file", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 2") && stderr.contains("self-loop"), "{stderr}");
}

#[test]
fn jobs_env_var_is_honored() {
    let out = sdstab()
        .args(["check", "rem:octahedron", "--format", "json"])
        .env("SDSTAB_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["jobs"], 2);
}

#[test]
fn check_csv_header_is_fixed() {
    let out = sdstab()
        .args(["check", "prop:wheel-st", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(
        stdout.starts_with("claim_id,scope,status,counterexample_count,elapsed_ms\n"),
        "{stdout}"
    );
}

#[test]
fn check_all_pass_subset_exits_0() {
    let out = sdstab().args(["check", "thm:bound1", "--max-n", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn stability_cap_flag_allows_c15() {
    let out = sdstab()
        .args(["stability", "C(15)", "--cap", "16"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("st = 3"), "{stdout}");
}
