//! End-to-end tests of the `selfaffine` binary: output text, exit codes,
//! and written image files.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfaffine"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn classify_prints_verdict_source_and_threshold() {
    let out = run(&["classify", "--b", "-10", "--c", "24", "--m", "15"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "Connected (real-spectrum criterion, threshold 15)\n"
    );

    let out = run(&["classify", "--b", "-10", "--c", "24", "--m", "13"]);
    assert_eq!(out.status.code(), Some(0), "Disconnected is a success");
    assert_eq!(
        stdout(&out),
        "Disconnected (real-spectrum criterion, threshold 15)\n"
    );
}

#[test]
fn classify_unknown_offers_conjecture() {
    let out = run(&["classify", "--b", "-5", "--c", "5", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "Unknown (no theorem applies; see --conjecture or oracle)\n"
    );

    let out = run(&[
        "classify",
        "--b",
        "-5",
        "--c",
        "5",
        "--m",
        "3",
        "--conjecture",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Unknown"), "{text}");
    assert!(text.contains("conjectured threshold 4; unproven"), "{text}");
}

#[test]
fn classify_rejects_non_expanding() {
    let out = run(&["classify", "--b", "1", "--c", "1", "--m", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not expanding"));
}

#[test]
fn classify_gap_family() {
    let out = run(&["classify-gap", "--p", "6", "--q", "4", "--s", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "Disconnected (gap-digit criterion, threshold 0)\n"
    );

    let out = run(&["classify-gap", "--p", "2", "--q", "2", "--s", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "Connected (gap-digit criterion, threshold 1)\n"
    );
}

#[test]
fn oracle_reports_box_survivors_and_answer() {
    let out = run(&["oracle", "--b", "-4", "--c", "4", "--m", "2", "--connected"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("state box: |gamma| <= 6, |delta| <= 2"),
        "{text}"
    );
    assert!(text.contains("survivors: 9"), "{text}");
    assert!(text.contains("connected: true"), "{text}");

    let out = run(&[
        "oracle", "--b", "-4", "--c", "4", "--m", "1", "--gamma", "3", "--delta", "-1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("member (gamma=3, delta=-1): true"));

    let out = run(&["oracle", "--b", "-4", "--c", "4", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2), "needs a question to answer");
}

#[test]
fn oracle_cap_exceeded_exits_3() {
    let out = run(&[
        "oracle",
        "--b",
        "-4",
        "--c",
        "4",
        "--m",
        "4000",
        "--connected",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("exceeding the cap"));
}

#[test]
fn neighbors_lists_survivors_lexicographically() {
    let out = run(&["neighbors", "--b", "-4", "--c", "4", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-3 1\n0 0\n3 -1\n");
}

#[test]
fn neighbors_accepts_digit_lists() {
    let consecutive = run(&["neighbors", "--b", "-4", "--c", "4", "--m", "2"]);
    let explicit = run(&["neighbors", "--b", "-4", "--c", "4", "--digits", "0,1,2"]);
    assert_eq!(consecutive.status.code(), Some(0));
    assert_eq!(explicit.status.code(), Some(0));
    assert_eq!(stdout(&consecutive), stdout(&explicit));
}

#[test]
fn render_writes_pgm_and_reports_components() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.pgm");
    let out = run(&[
        "render",
        "--b",
        "-4",
        "--c",
        "4",
        "--m",
        "2",
        "--size",
        "64",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("components: 1"), "{text}");
    let bytes = std::fs::read(&path).unwrap();
    assert!(bytes.starts_with(b"P5\n64 64\n255\n"));
    assert_eq!(bytes.len(), "P5\n64 64\n255\n".len() + 64 * 64);
}

#[test]
fn render_io_failure_exits_4() {
    let out = run(&[
        "render",
        "--b",
        "-4",
        "--c",
        "4",
        "--m",
        "2",
        "--size",
        "32",
        "--out",
        "/nonexistent-dir/deep/t.pgm",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("failed writing"));
}

#[test]
fn sweep_emits_csv() {
    let out = run(&[
        "sweep", "--b-min", "-4", "--b-max", "-4", "--c-min", "4", "--c-max", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        [
            "b,c,m,theorem_verdict,oracle_verdict,threshold,agree",
            "-4,4,1,Disconnected,Disconnected,2,true",
            "-4,4,2,Connected,Connected,2,true",
            "-4,4,3,Connected,Connected,2,true",
        ]
    );

    let out = run(&[
        "sweep", "--b-min", "2", "--b-max", "1", "--c-min", "4", "--c-max", "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn figures_writes_all_panels_with_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["figures", "--outdir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 18);
    assert_eq!(lines[0], "fig1a: b=-4 c=4 m=1 Disconnected components=8");
    assert_eq!(lines[6], "fig4a: p=6 q=4 s=0 Connected components=1");
    for name in [
        "fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "fig5a", "fig5b",
        "fig6a", "fig6b", "fig7a", "fig7b", "fig8a", "fig8b", "fig9a", "fig9b",
    ] {
        let bytes = std::fs::read(dir.path().join(format!("{name}.pgm"))).unwrap();
        assert!(bytes.starts_with(b"P5\n512 512\n255\n"), "{name}");
    }
}
