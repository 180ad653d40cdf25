use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_perfect-lee"))
}

fn run(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // Usage errors exit before reading stdin.
    let _ = child.stdin.take().unwrap().write_all(stdin);
    child.wait_with_output().unwrap()
}

#[test]
fn construct_double_verify() {
    let seed = run(&["construct", "--kind", "seed-2484"], b"");
    assert!(seed.status.success());
    let doubled = run(&["double", "--kind", "lee"], &seed.stdout);
    assert!(
        doubled.status.success(),
        "{}",
        String::from_utf8_lossy(&doubled.stderr)
    );
    let cert = run(
        &["verify", "--distance", "4", "--mode", "exhaustive"],
        &doubled.stdout,
    );
    assert_eq!(cert.status.code(), Some(0));
    let text = String::from_utf8(cert.stdout).unwrap();
    assert!(text.contains(r#""code_size":16"#), "{text}");
}

#[test]
fn permuted_doubling_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("seed.json");
    let perm = dir.path().join("perm.json");
    let out = dir.path().join("doubled.json");
    let c = run(
        &[
            "construct",
            "--kind",
            "seed-2484",
            "--output",
            code.to_str().unwrap(),
        ],
        b"",
    );
    assert!(c.status.success());
    std::fs::write(&perm, r#"{"size":4,"map":[1,4,2,3]}"#).unwrap();
    let d = run(
        &[
            "double",
            "--kind",
            "lee",
            "--first",
            code.to_str().unwrap(),
            "--second",
            code.to_str().unwrap(),
            "--perm",
            perm.to_str().unwrap(),
            "--output",
            out.to_str().unwrap(),
        ],
        b"",
    );
    assert!(d.status.success(), "{}", String::from_utf8_lossy(&d.stderr));
    let text = std::fs::read(&out).unwrap();
    let v = run(&["verify", "--distance", "4", out.to_str().unwrap()], b"");
    assert_eq!(v.status.code(), Some(0));
    // Byte-stable re-emission.
    let info = run(&["info"], &text);
    assert!(info.status.success());
    let again = run(
        &[
            "double",
            "--kind",
            "lee",
            "--first",
            code.to_str().unwrap(),
            "--perm",
            perm.to_str().unwrap(),
        ],
        b"",
    );
    assert_eq!(again.stdout, text);
}

#[test]
fn phelps_pipeline_and_exit_codes() {
    let h = run(
        &["construct", "--kind", "hamming", "--q", "2", "--r", "3"],
        b"",
    );
    let d = run(&["double", "--kind", "phelps"], &h.stdout);
    assert!(d.status.success());
    assert_eq!(
        run(&["verify", "--radius", "1"], &d.stdout).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["verify", "--radius", "2"], &d.stdout).status.code(),
        Some(1)
    );
    assert_eq!(
        run(
            &[
                "verify",
                "--radius",
                "1",
                "--max-points",
                "100",
                "--mode",
                "exhaustive"
            ],
            &d.stdout
        )
        .status
        .code(),
        Some(3)
    );
    assert_eq!(run(&["verify"], &d.stdout).status.code(), Some(2));
    assert_eq!(
        run(&["construct", "--kind", "diameter4"], b"")
            .status
            .code(),
        Some(2)
    );
    // A non-diameter-perfect input is a structural rejection.
    let l = run(
        &[
            "construct",
            "--kind",
            "lee-single",
            "--n",
            "2",
            "--tau",
            "2",
        ],
        b"",
    );
    assert_eq!(
        run(&["double", "--kind", "lee"], &l.stdout).status.code(),
        Some(1)
    );
}

#[test]
fn seeded_runs_are_deterministic() {
    let code = run(&["construct", "--kind", "lee-single", "--n", "4"], b"").stdout;
    let verify = |seed: &str| {
        let out = run(
            &[
                "--seed",
                seed,
                "--jobs",
                "2",
                "verify",
                "--radius",
                "1",
                "--mode",
                "sampled",
                "--samples",
                "300",
            ],
            &code,
        );
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        (
            v["seed"].clone(),
            v["points_checked"].clone(),
            v["pass"].clone(),
        )
    };
    assert_eq!(verify("3"), verify("3"));
    let t = |args: &[&str]| run(args, b"").stdout;
    let a = t(&[
        "--seed",
        "4",
        "tile",
        "--R",
        "2",
        "--sequence",
        "generator:random",
        "--window",
        "-30,-30,30,30",
    ]);
    let b = t(&[
        "--seed",
        "4",
        "tile",
        "--R",
        "2",
        "--sequence",
        "generator:random",
        "--window",
        "-30,-30,30,30",
    ]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["report"]["exact_cover"], serde_json::json!(true));
}

#[test]
fn tile_from_sequence_file() {
    let dir = tempfile::tempdir().unwrap();
    let seq = dir.path().join("s.json");
    let pgm = dir.path().join("m.pgm");
    let values: Vec<u64> = (0..40).map(|i| (i * i) % 3).collect();
    std::fs::write(
        &seq,
        serde_json::json!({"start": -20, "values": values}).to_string(),
    )
    .unwrap();
    let out = run(
        &[
            "tile",
            "--R",
            "2",
            "--sequence",
            seq.to_str().unwrap(),
            "--window",
            "0,0,24,24",
            "--pgm",
            pgm.to_str().unwrap(),
        ],
        b"",
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(std::fs::read(&pgm).unwrap().starts_with(b"P5\n24 24\n"));
    // A window needing strips outside the file is a range error.
    let out = run(
        &[
            "tile",
            "--R",
            "2",
            "--sequence",
            seq.to_str().unwrap(),
            "--window",
            "0,0,300,300",
        ],
        b"",
    );
    assert_eq!(out.status.code(), Some(2));
}
