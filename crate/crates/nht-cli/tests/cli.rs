//! End-to-end tests of the `nht` binary and the stream file plumbing.

use std::fs;
use std::process::Command;

fn nht_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nht"))
}

const TWO_STAGE_SPEC: &str = "block_length=6\n\
                              stage nht family=six_ap a=2 modulus=13\n\
                              stage ntt p=31 n=6\n";

#[test]
fn verify_exit_codes_through_binary() {
    let ok = nht_bin()
        .args(["verify", "--family", "six_ap", "--a", "1"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout),
        "PASS NNt=12I mod 23\nPASS NN=-12I mod 31\n"
    );

    let fail = nht_bin()
        .args(["verify", "--family", "row", "--entries", "18,13,8", "--modulus", "23"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));

    let usage = nht_bin().args(["apply"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn apply_and_invert_round_trip_files() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.txt");
    let input = dir.path().join("in.txt");
    let applied = dir.path().join("out.txt");
    let restored = dir.path().join("back.txt");
    fs::write(&spec, TWO_STAGE_SPEC).unwrap();
    fs::write(&input, "1 0 0 0 0 0\n7 7 7 7 7 7\n").unwrap();

    let status = nht_bin()
        .args(["apply", "--spec"])
        .arg(&spec)
        .arg("--in")
        .arg(&input)
        .arg("--out")
        .arg(&applied)
        .status()
        .unwrap();
    assert!(status.success());
    let out_text = fs::read_to_string(&applied).unwrap();
    assert!(
        out_text.starts_with("12 22 22 19 9 9\n"),
        "unexpected output {out_text}"
    );

    let status = nht_bin()
        .args(["invert", "--spec"])
        .arg(&spec)
        .arg("--in")
        .arg(&applied)
        .arg("--out")
        .arg(&restored)
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(
        fs::read_to_string(&restored).unwrap(),
        "1 0 0 0 0 0\n7 7 7 7 7 7\n"
    );
}

#[test]
fn apply_pads_and_invert_restores_length() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.txt");
    let input = dir.path().join("in.txt");
    let applied = dir.path().join("out.txt");
    fs::write(&spec, "block_length=6\nstage nht family=six_ap a=2 modulus=13\n").unwrap();
    fs::write(&input, "# four values, padded up to one block\n5 6 7 8\n").unwrap();

    let status = nht_bin()
        .args(["apply", "--pad", "--spec"])
        .arg(&spec)
        .arg("--in")
        .arg(&input)
        .arg("--out")
        .arg(&applied)
        .status()
        .unwrap();
    assert!(status.success());
    let out_text = fs::read_to_string(&applied).unwrap();
    assert!(out_text.starts_with("#len=4 m=13\n"), "{out_text}");

    let back = nht_bin()
        .args(["invert", "--spec"])
        .arg(&spec)
        .arg("--in")
        .arg(&applied)
        .output()
        .unwrap();
    assert!(back.status.success());
    assert_eq!(String::from_utf8_lossy(&back.stdout), "5 6 7 8\n");
}

#[test]
fn apply_rejects_mismatched_block_length() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.txt");
    let input = dir.path().join("in.txt");
    fs::write(&spec, "block_length=6\nstage nht family=six_ap a=2 modulus=13\n").unwrap();
    fs::write(&input, "1 2 3 4\n").unwrap();

    let out = nht_bin()
        .args(["apply", "--spec"])
        .arg(&spec)
        .arg("--in")
        .arg(&input)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a multiple"));
}

#[test]
fn negative_inputs_are_reduced() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.txt");
    let input = dir.path().join("in.txt");
    fs::write(&spec, "block_length=6\nstage nht family=six_ap a=2 modulus=13\n").unwrap();
    fs::write(&input, "-12 0 0 0 0 0\n").unwrap();

    let out = nht_bin()
        .args(["apply", "--spec"])
        .arg(&spec)
        .arg("--in")
        .arg(&input)
        .output()
        .unwrap();
    assert!(out.status.success());
    // -12 = 1 mod 13, so this is the delta response
    assert_eq!(String::from_utf8_lossy(&out.stdout), "0 6 0 4 0 2\n");
}

#[test]
fn pipeline_reports_stages_and_diffusion() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.txt");
    fs::write(
        &spec,
        "block_length=6\nstage nht family=six_ap a=2 modulus=13\nbraid rounds=2 offset=3\n",
    )
    .unwrap();

    let out = nht_bin()
        .args(["pipeline", "--diffusion", "200", "--blocks", "2", "--spec"])
        .arg(&spec)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("block_length=6"));
    assert!(text.contains("stage 1: nht six_ap a=2 m=13"));
    assert!(text.contains("braid: rounds=2 offset=3"));
    assert!(text.contains("OK 1 stages"));
    assert!(text.contains("round 1: 0.2500"));
    assert!(text.contains("mean_changed_fraction:"));

    // identical invocation is byte-identical
    let again = nht_bin()
        .args(["pipeline", "--diffusion", "200", "--blocks", "2", "--spec"])
        .arg(&spec)
        .output()
        .unwrap();
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn search_bound_ten_contains_known_sets() {
    let out = nht_bin()
        .args(["search", "--bound", "10", "--require-invertible"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("a=5 b=-5 c=10 d=7 m=30 diag=19 invertible=true"));
    assert!(!text.contains("a=3 b=-3 c=9 d=5 "));
}

#[test]
fn table_output_is_byte_stable() {
    let first = nht_bin().args(["table1"]).output().unwrap();
    let second = nht_bin().args(["table1"]).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let t2 = nht_bin()
        .args(["table2", "--convention", "canonical"])
        .output()
        .unwrap();
    assert!(t2.status.success());
    assert!(String::from_utf8_lossy(&t2.stdout).contains("# note: row 7 reference"));
}
