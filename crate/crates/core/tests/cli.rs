use std::process::{Command, Output};

fn qsd_dna(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsd-dna"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn census_single_cell() {
    let o = qsd_dna(&["census", "--n", "2", "--k", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,k,count\n2,1,1\n");
}

#[test]
fn census_check_passes_through_ten() {
    let o = qsd_dna(&["census", "--n", "1..10", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("MISMATCH"));
    assert!(stdout(&o).contains("10,4,9,9,ok"));
}

#[test]
fn budget_and_usage_exit_codes() {
    assert_eq!(
        qsd_dna(&["census", "--n", "14", "--k", "6", "--budget", "1ms"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        qsd_dna(&["census", "--n", "20", "--max-n", "12"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(qsd_dna(&["census", "--n", "x"]).status.code(), Some(2));
    assert_eq!(
        qsd_dna(&["qsd", "build", "--rows", "10000"]).status.code(),
        Some(2)
    );
    assert_eq!(qsd_dna(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn build_from_residue_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("res.txt");
    std::fs::write(&path, "# worked example\n11000\n00110\n").unwrap();
    let o = qsd_dna(&["qsd", "build", "--res", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("a a 0 0 0\n0 0 a a 0\n0 0 0 0 c\n"));
}

#[test]
fn gc_enumerator_text_and_json() {
    let o = qsd_dna(&["--format", "text", "wenum", "--rows", "11000,00110", "--gc"]);
    assert_eq!(stdout(&o).trim(), "8x^4y + 16x^2y^3 + 8y^5");
    let o = qsd_dna(&[
        "--format",
        "json",
        "wenum",
        "--ring",
        "F",
        "--rows",
        "11000,00110",
        "--gc",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["polynomial"], "8x^4y + 16x^2y^3 + 8y^5");
}

#[test]
fn drc_both_flags_formula_disagreement() {
    let ok = qsd_dna(&["drc", "--rows", "11000,00110", "--both"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("5,2,11000 00110,disjoint,4,2,2,"));
    let bad = qsd_dna(&["drc", "--rows", "11110000,00001111", "--both"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains(",4,4,0,"));
}

#[test]
fn formula_only_rejects_uncovered_shapes() {
    let o = qsd_dna(&["drc", "--rows", "11000000,00110000,00001100", "--formula"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tables_write_files_and_check_reports_discrepancies() {
    let dir = tempfile::tempdir().unwrap();
    let o = qsd_dna(&[
        "tables",
        "--max-n",
        "6",
        "--out",
        dir.path().to_str().unwrap(),
        "--check",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let disc = std::fs::read_to_string(dir.path().join("discrepancies.csv")).unwrap();
    assert!(disc.contains("table,6,110011 001111,4,4,2,"));
    let table = std::fs::read_to_string(dir.path().join("drc_tables.csv")).unwrap();
    assert!(table.contains("5,2,11000 00110,aa000 00aa0 0000c,0:0 2:2 4:2,2:2 4:2,ok"));
}

#[test]
fn output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_qsd-dna"))
            .env("QSD_DNA_THREADS", threads)
            .args(["--format", "json", "tables", "--max-n", "7"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn rings_listing() {
    let o = qsd_dna(&["rings"]);
    let text = stdout(&o);
    assert!(text.contains("E,2,false,c,left a"));
    assert!(text.contains("F,2,false,c,right a"));
    assert!(text.contains("K,2,true,c,none"));
}
