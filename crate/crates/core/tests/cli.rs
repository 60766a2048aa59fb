use std::io::Write;
use std::process::{Command, Output, Stdio};

use burge_core::partition::{enumerate_restricted, partitions_of};
use burge_core::BoundaryConfig;

const WORKED_PATH: &str = r#"{"start":0,"word":"ABBAABAABBABAABABBBAAA"}"#;

fn burge(args: &[&str]) -> Output {
    burge_with(args, None, &[])
}

fn burge_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_burge"));
    cmd.args(args).env_remove("BURGE_JOBS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn enumerate_lists_counts_and_json() {
    let o = burge(&["enumerate", "--kind", "partitions", "-k", "2", "-i", "2", "-n", "8"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "(8)\n(7,1)\n(6,2)\n(5,3)\n");

    // p_l >= p_{l+3} + 2 and at most one part equal to 1
    let restricted: Vec<_> = partitions_of(15)
        .into_iter()
        .filter(|p| p.parts().windows(4).all(|w| w[0] >= w[3] + 2))
        .filter(|p| p.parts().iter().filter(|&&v| v == 1).count() <= 1)
        .collect();
    let of_length_5 = restricted.iter().filter(|p| p.len() == 5).count();
    for kind in ["partitions", "multipartitions", "paths"] {
        let o = burge(&[
            "enumerate",
            "--kind",
            kind,
            "-k",
            "4",
            "-i",
            "2",
            "-n",
            "15",
            "--count-only",
        ]);
        assert_eq!(stdout(&o).trim(), restricted.len().to_string(), "{kind}");
        let o = burge(&[
            "enumerate",
            "--kind",
            kind,
            "-k",
            "4",
            "-i",
            "2",
            "-n",
            "15",
            "--m",
            "5",
            "--count-only",
        ]);
        assert_eq!(stdout(&o).trim(), of_length_5.to_string(), "{kind}");
    }

    let o = burge(&[
        "enumerate",
        "--kind",
        "paths",
        "-k",
        "3",
        "-i",
        "2",
        "-n",
        "6",
        "--json",
    ]);
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 5);
    for l in &lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["start"], 1);
    }
}

#[test]
fn bad_configuration_exits_2() {
    for (k, i) in [("7", "0"), ("1", "1"), ("3", "4")] {
        let o = burge(&["enumerate", "--kind", "partitions", "-k", k, "-i", i, "-n", "3"]);
        assert_eq!(code(&o), 2, "k={k} i={i}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("invalid configuration"));
    }
    let o = burge(&["gf", "-k", "1", "-i", "1", "--q-order", "3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn convert_examples() {
    let o = burge_with(
        &[
            "convert",
            "--from",
            "partition",
            "--to",
            "multipartition",
            "-k",
            "5",
            "-i",
            "5",
        ],
        Some(r#"{"parts":[8,8,7,7,5,3,3,2,2,1,1]}"#),
        &[],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "{\"components\":[[7],[10],[],[24,6]]}\n");

    let o = burge_with(
        &[
            "convert",
            "--from",
            "multipartition",
            "--to",
            "partition",
            "-k",
            "5",
            "-i",
            "5",
        ],
        Some(r#"{"components":[[],[7],[],[8]]}"#),
        &[],
    );
    assert_eq!(stdout(&o), "{\"parts\":[4,3,3,2,2,1]}\n");

    let o = burge_with(
        &["convert", "--from", "path", "--to", "partition", "-k", "2", "-i", "2"],
        Some(r#"{"start":0,"word":"BA"}"#),
        &[],
    );
    assert_eq!(stdout(&o), "{\"parts\":[1]}\n");

    let o = burge_with(
        &[
            "convert",
            "--from",
            "path",
            "--to",
            "multipartition",
            "-k",
            "4",
            "-i",
            "4",
        ],
        Some(WORKED_PATH),
        &[],
    );
    assert_eq!(stdout(&o), "{\"components\":[[17,14,10],[12,7],[5]]}\n");
}

#[test]
fn convert_reads_files_and_traces_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("p.json");
    std::fs::write(&input, r#"{"parts":[4,3,3,2,2,1]}"#).unwrap();
    let o = burge(&[
        "convert",
        "--from",
        "partition",
        "--to",
        "path",
        "-k",
        "5",
        "-i",
        "5",
        "--input",
        input.to_str().unwrap(),
        "--trace",
    ]);
    assert_eq!(code(&o), 0);
    let trace = String::from_utf8_lossy(&o.stderr);
    assert!(trace.contains("group [3, 3, 2, 2] -> 10^(4)"), "{trace}");
    assert!(trace.contains("settled 12^(4) 3^(2)"), "{trace}");
    let path: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(path["start"], 0);
}

#[test]
fn invalid_input_exits_3() {
    let cases = [
        ("partition", r#"{"parts":[3,3,3]}"#),
        ("partition", r#"{"parts":[1,2]}"#),
        ("partition", "not json"),
        ("multipartition", r#"{"components":[[1],[2]]}"#),
        ("multipartition", r#"{"components":[[2,1]]}"#),
        ("path", r#"{"start":0,"word":"BBBA"}"#),
        ("path", r#"{"start":0,"word":"BAC"}"#),
    ];
    for (from, text) in cases {
        let o = burge_with(
            &["convert", "--from", from, "--to", "path", "-k", "3", "-i", "3"],
            Some(text),
            &[],
        );
        assert_eq!(code(&o), 3, "{from} {text}");
    }
    let o = burge(&[
        "convert",
        "--from",
        "path",
        "--to",
        "partition",
        "-k",
        "3",
        "-i",
        "3",
        "--input",
        "/nonexistent",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn convert_round_trip_is_byte_identical() {
    let c = BoundaryConfig::new(4, 3).unwrap();
    for n in 0..=12 {
        for p in enumerate_restricted(c, n, None) {
            let text = serde_json::to_string(&p).unwrap();
            let there = burge_with(
                &[
                    "convert",
                    "--from",
                    "partition",
                    "--to",
                    "multipartition",
                    "-k",
                    "4",
                    "-i",
                    "3",
                ],
                Some(&text),
                &[],
            );
            assert_eq!(code(&there), 0);
            let back = burge_with(
                &[
                    "convert",
                    "--from",
                    "multipartition",
                    "--to",
                    "partition",
                    "-k",
                    "4",
                    "-i",
                    "3",
                ],
                Some(&stdout(&there)),
                &[],
            );
            assert_eq!(stdout(&back), format!("{text}\n"));
        }
    }
}

#[test]
fn verify_reports_agreement() {
    let o = burge(&["verify", "--max-n", "0", "--k-range", "3..3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "k,i,n,m,F,G,P,AG\n3,1,0,0,1,1,1,1\n3,2,0,0,1,1,1,1\n3,3,0,0,1,1,1,1\nall cells agree (3 cells)\n"
    );

    let one = burge(&["verify", "--max-n", "14", "--jobs", "1"]);
    let three = burge(&["verify", "--max-n", "14", "--jobs", "3"]);
    let env = burge_with(&["verify", "--max-n", "14"], None, &[("BURGE_JOBS", "2")]);
    assert_eq!(code(&one), 0);
    // 14 configurations for k = 2..5, 15 weights, 15 charges
    assert!(stdout(&one).ends_with("all cells agree (3150 cells)\n"));
    assert_eq!(one.stdout, three.stdout);
    assert_eq!(one.stdout, env.stdout);
}

#[test]
fn verify_self_test_reports_one_mismatch() {
    let o = burge(&["verify", "--max-n", "6", "--self-test"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert_eq!(out.matches("MISMATCH").count(), 1, "{out}");
    assert!(out.contains("witness:"));
    assert!(out.ends_with("1 mismatched cell(s)\n"));
}

#[test]
fn gf_dumps_series() {
    let o = burge(&["gf", "-k", "2", "-i", "2", "--q-order", "10", "--source", "sum"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let at5: i64 = text
        .lines()
        .map(|l| l.split(',').map(|f| f.parse::<i64>().unwrap()).collect::<Vec<_>>())
        .filter(|r| r[1] == 5)
        .map(|r| r[2])
        .sum();
    assert_eq!(at5, 2);

    let o = burge(&["gf", "-k", "2", "-i", "2", "--q-order", "0"]);
    assert_eq!(stdout(&o), "0,0,1\n");

    for (k, i) in [("3", "2"), ("4", "4")] {
        let sum = burge(&["gf", "-k", k, "-i", i, "--q-order", "18", "--z-order", "9"]);
        let exact = burge(&["gf", "-k", k, "-i", i, "--q-order", "18", "--z-order", "9", "--exact"]);
        let counted = burge(&[
            "gf",
            "-k",
            k,
            "-i",
            i,
            "--q-order",
            "18",
            "--z-order",
            "9",
            "--source",
            "enumeration",
        ]);
        assert_eq!(sum.stdout, counted.stdout);
        assert_eq!(sum.stdout, exact.stdout);
    }
}

#[test]
fn render_ascii_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("path.json");
    std::fs::write(&input, WORKED_PATH).unwrap();
    let o = burge(&["render", "--input", input.to_str().unwrap(), "--format", "ascii"]);
    assert_eq!(code(&o), 0);
    let mut maxima: Vec<usize> = stdout(&o)
        .lines()
        .flat_map(|l| l.match_indices("/\\").map(|(at, _)| at + 1).collect::<Vec<_>>())
        .collect();
    maxima.sort();
    assert_eq!(maxima, [3, 6, 10, 12, 15, 19]);

    let out = dir.path().join("path.svg");
    let o = burge(&[
        "render",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "svg",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("19^(3)"));

    let o = burge(&["render", "--input", input.to_str().unwrap(), "--format", "png"]);
    assert_eq!(code(&o), 2);
}
