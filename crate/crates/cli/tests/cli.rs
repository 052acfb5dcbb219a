use std::path::Path;
use std::process::{Command, Output};

use mfcat::catalog::Catalog;
use mfcat::gring::AdeType;
use mfcat::mf::{GradedMF, GradedMfJson};

fn mfcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mfcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(p).expect("golden file")
}

#[test]
fn hom_a3_one_three() {
    let o = mfcat(&[
        "hom", "--type", "A3", "--b", "1", "--from", "1", "--to", "3",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn hom_formats() {
    let o = mfcat(&[
        "hom", "--type", "E6", "--from", "5", "--to", "6", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!([{"c": 4, "dim": 1}, {"c": 10, "dim": 1}])
    );
    let o = mfcat(&[
        "hom", "--type", "D4", "--from", "2", "--to", "2", "--format", "tsv",
    ]);
    assert_eq!(
        stdout(&o),
        "type\tk\tkprime\tc\tmult\nD4\t2\t2\t0\t1\nD4\t2\t2\t2\t2\nD4\t2\t2\t4\t1\n"
    );
    let o = mfcat(&[
        "hom", "--type", "E6", "--from", "5", "--to", "6", "--n", "2",
    ]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn table3_matches_frozen_output() {
    let o = mfcat(&["table3", "--type", "E6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), golden("table3_E6.txt"));
    let o = mfcat(&["table3", "--type", "E7", "--format", "tsv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), golden("table3_E7.tsv"));
}

#[test]
fn table3_e8_needs_the_errata() {
    assert!(mfcat(&["table3", "--type", "E8"]).status.success());
    let o = mfcat(&["table3", "--type", "E8", "--printed"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert_eq!(
        text.lines().filter(|l| l.starts_with("mismatch")).count(),
        4
    );
    assert!(text.contains("mismatch (3,5)"));
}

#[test]
fn verify_d7() {
    let o = mfcat(&["verify", "--type", "D7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("all checks passed\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        mfcat(&["hom", "--type", "F4", "--from", "1", "--to", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        mfcat(&["hom", "--type", "A3", "--b", "7", "--from", "1", "--to", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        mfcat(&["stability", "--type", "E6", "--window", "1..x"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        mfcat(&["stability", "--type", "E6", "--window", "1..0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        mfcat(&["hom", "--type", "E6", "--from", "7", "--to", "1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        mfcat(&["quiver", "--type", "A3", "--orientation", "1->3,2->3"])
            .status
            .code(),
        Some(3)
    );
    let o = mfcat(&[
        "export",
        "--type",
        "A2",
        "--output",
        "/nonexistent-dir/out.json",
    ]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn export_round_trips() {
    let o = mfcat(&["export", "--type", "E6"]);
    let text = stdout(&o);
    assert_eq!(text, golden("export_E6.json"));
    assert_eq!(stdout(&mfcat(&["catalog", "export", "--type", "E6"])), text);
    let objs: Vec<GradedMfJson> = serde_json::from_str(&text).unwrap();
    let cat = Catalog::get(AdeType::E6, 1).unwrap();
    assert_eq!(objs.len(), 6);
    for (k, j) in (1..).zip(&objs) {
        let g = GradedMF::from_json(j).unwrap();
        assert_eq!(g, cat.object(k, 0).unwrap().gmf);
        assert_eq!(g.to_json("E6"), *j);
    }
}

#[test]
fn quiver_paths_grid() {
    let o = mfcat(&[
        "quiver",
        "--type",
        "D5",
        "--orientation",
        "principal",
        "--paths",
    ]);
    assert_eq!(stdout(&o), golden("quiver_D5.txt"));
    let o = mfcat(&[
        "quiver",
        "--type",
        "E6",
        "--orientation",
        "random:4",
        "--collection",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn stability_check_e8() {
    let o = mfcat(&[
        "stability",
        "--type",
        "E8",
        "--window",
        "0..1",
        "--check",
        "--samples",
        "20",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    // header, 120 objects, four axiom lines
    assert_eq!(text.lines().count(), 1 + 120 + 4);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "table3",
        "--type",
        "D6",
        "--format",
        "json",
        "--threads",
        "3",
    ];
    assert_eq!(mfcat(&args).stdout, mfcat(&args).stdout);
    let args = [
        "stability",
        "--type",
        "E7",
        "--window",
        "0..2",
        "--format",
        "tsv",
    ];
    assert_eq!(mfcat(&args).stdout, mfcat(&args).stdout);
}

#[test]
fn writes_to_file() {
    let dir = std::env::temp_dir().join(format!("mfcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("cat.tsv");
    let o = mfcat(&[
        "catalog",
        "--type",
        "A4",
        "--b",
        "2",
        "--format",
        "tsv",
        "-o",
        p.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&p).unwrap();
    assert_eq!(text.lines().count(), 5);
    std::fs::remove_dir_all(dir).unwrap();
}
