use qcsd::cli::{self, EXIT_BAD_INPUT, EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK};
use std::path::{Path, PathBuf};

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = cli::run(std::iter::once("qcsd").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qcsd-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_writes_manifest_and_summary() {
    let dir = scratch_dir("classify");
    let (code, out) = run(&["classify", "--q", "2", "--m", "3", "--ell", "6", "--out", s(&dir)]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("3 classes"));
    for f in ["manifest.json", "summary.csv", "class_001.rc", "class_003.rc"] {
        assert!(dir.join(f).exists(), "{f}");
    }
    assert!(!dir.join("checkpoint.json").exists());
    let summary = std::fs::read_to_string(dir.join("summary.csv")).unwrap();
    assert!(summary.starts_with("n,d,classes\n18,2,2\n18,4,1"), "{summary}");

    let (code, out) = run(&["analyze", s(&dir.join("class_001.rc")), "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 18);

    let (code, out) = run(&["equiv", s(&dir.join("class_001.rc")), s(&dir.join("class_001.rc"))]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("equivalent"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn budget_exhaustion_and_resume() {
    let dir = scratch_dir("budget");
    let (code, _) = run(&["classify", "--q", "2", "--m", "3", "--ell", "6", "--budget", "100", "--out", s(&dir)]);
    assert_eq!(code, EXIT_BUDGET);
    let checkpoint = dir.join("checkpoint.json");
    assert!(checkpoint.exists());
    let (code, out) = run(&["classify", "--q", "2", "--m", "3", "--ell", "6", "--resume", s(&checkpoint)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("3 classes"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn seed_extend_expand() {
    let dir = scratch_dir("extend");
    let (code, _) = run(&["seed", "--q", "2", "--m", "3", "--out", s(&dir)]);
    assert_eq!(code, EXIT_OK);
    let wit = dir.join("step.wit");
    std::fs::write(&wit, "# two steps\ni; c = 1; x = (Y^2 + Y + 1, Y + 1)\ni; c = 1; x = (1, 1, 1, 0)\n").unwrap();
    let grown = dir.join("grown.rc");
    let (code, out) = run(&["extend", s(&dir.join("seed_0.rc")), s(&wit), "--out", s(&grown)]);
    assert_eq!(code, EXIT_OK, "{out}");
    let ring = qcsd::format::load_ring_code(&grown).unwrap();
    assert_eq!(ring.ell(), 6);
    assert!(ring.is_self_dual());

    let (code, out) = run(&["expand", s(&grown)]);
    assert_eq!(code, EXIT_OK);
    let field = qcsd::format::parse_field_code(&out).unwrap();
    assert_eq!((field.n(), field.k()), (18, 9));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bad_input_exit_codes() {
    let dir = scratch_dir("bad");
    let empty = dir.join("empty.rc");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(run(&["analyze", s(&empty)]).0, EXIT_BAD_INPUT);
    assert_eq!(run(&["analyze", s(&dir.join("missing.rc"))]).0, EXIT_BAD_INPUT);
    assert_eq!(run(&["classify", "--q", "6", "--m", "3", "--ell", "2"]).0, EXIT_BAD_INPUT);
    assert_eq!(run(&["classify", "--q", "2", "--m", "7", "--ell", "4"]).0, EXIT_BAD_INPUT);
    assert_eq!(run(&["verify-corpus", "--name", "nonesuch"]).0, EXIT_BAD_INPUT);

    let wit = dir.join("bad.wit");
    std::fs::write(&wit, "i; c = 1; x = (1, 1)\n").unwrap();
    run(&["seed", "--q", "2", "--m", "3", "--out", s(&dir)]);
    assert_eq!(run(&["extend", s(&dir.join("seed_0.rc")), s(&wit)]).0, EXIT_BAD_INPUT);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn analyze_flags_divisibility_failures() {
    let dir = scratch_dir("divisible");
    // two weight-2 words
    let file = dir.join("plain.fc");
    std::fs::write(&file, "2 4 2\n1 1 0 0\n0 0 1 1\n").unwrap();
    let (code, out) = run(&["analyze", s(&file), "--m", "3"]);
    assert_eq!(code, EXIT_MISMATCH, "{out}");
    assert!(out.contains("FAILS"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_corpus_by_name() {
    let (code, out) = run(&["verify-corpus", "--name", "G_16"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "PASS: G_16: [48,24], d=10, A_10=768, A_12=8592, W2");
}
