mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use common::*;
use polyideal::job::{run_command, CellsInput, JobOptions, JobRequest};

fn polyideal(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polyideal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn ideal_text_from_argument_and_stdin() {
    let a = polyideal(&["ideal", SIX_CELL], None);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    let out = stdout(&a);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 15);
    for b in SIX_CELL_BINOMIALS {
        assert!(lines.contains(&b), "{}", b);
    }
    let b = polyideal(&["ideal", "-"], Some(SIX_CELL));
    assert_eq!(stdout(&b), stdout(&a));
    let c = polyideal(&["ideal"], Some(SIX_CELL));
    assert_eq!(stdout(&c), stdout(&a));
}

#[test]
fn input_from_file() {
    let path = std::env::temp_dir().join(format!("polyideal-cli-{}.txt", std::process::id()));
    std::fs::write(&path, STAIRCASE).unwrap();
    let o = polyideal(&["matrix", "--file", path.to_str().unwrap()], None);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "| 0       0       x_(3,4) x_(4,4) |\n| 0       x_(2,3) x_(3,3) x_(4,3) |\n| x_(1,2) x_(2,2) x_(3,2) 0       |\n| x_(1,1) x_(2,1) 0       0       |\n"
    );
}

#[test]
fn json_output_matches_library() {
    for (cmd, opts) in [
        ("hilbert", vec![]),
        ("classify", vec![]),
        ("toric", vec!["--holes", "{{2,2}}"]),
        ("initial", vec!["--ring-choice", "2", "--field", "fp:32003"]),
        ("groebner", vec!["--term-order", "grevlex"]),
    ] {
        let mut args = vec![cmd, SIX_CELL, "--format", "json"];
        args.extend(&opts);
        let o = polyideal(&args, None);
        assert_eq!(o.status.code(), Some(0), "{} {}", cmd, stderr(&o));
        let mut options = JobOptions::default();
        for pair in opts.chunks(2) {
            match pair[0] {
                "--holes" => options.holes = polyideal::job::HolesInput::Text(pair[1].into()),
                "--ring-choice" => options.ring_choice = pair[1].parse().unwrap(),
                "--field" => options.field = pair[1].into(),
                "--term-order" => options.term_order = pair[1].into(),
                _ => unreachable!(),
            }
        }
        let lib = run_command(&JobRequest {
            cells: CellsInput::Text(SIX_CELL.into()),
            command: polyideal::job::Command::from_name(cmd),
            options,
        })
        .to_json();
        let out = stdout(&o);
        assert_eq!(
            without_timing(out.trim_end()),
            without_timing(&lib),
            "{}",
            cmd
        );
    }
}

#[test]
fn exit_codes() {
    let o = polyideal(&["ideal", "{{{1,1},{2,3}}}"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("error[not_unit_cell]"),
        "{}",
        stderr(&o)
    );
    assert!(stdout(&o).is_empty());

    let o = polyideal(&["ideal", "{{{1,1},{2,2}"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error[malformed_encoding]"));

    let o = polyideal(&["ideal", CLOSED_PATH, "--ring-choice", "2"], None);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("error[not_convex]"));

    let o = polyideal(
        &[
            "compare",
            CLOSED_PATH,
            "--timeout",
            "0.05",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(4));
    assert!(
        stdout(&o).contains(r#""class":"timeout""#),
        "{}",
        stdout(&o)
    );

    let o = polyideal(&["ideal", SIX_CELL, "--field", "fp:10"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error[invalid_option]"));

    // clap rejects the value before any work
    let o = polyideal(&["ideal", SIX_CELL, "--ring-choice", "3"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn warnings_go_to_stderr() {
    let o = polyideal(
        &["ideal", "{{{1,1},{2,2}},{{1,1},{2,2}}}", "--dedupe"],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x_(2,2)x_(1,1)-x_(2,1)x_(1,2)\n");
    assert!(stderr(&o).contains("duplicate"));
}

#[test]
fn compare_text_for_seven_cell() {
    let o = polyideal(&["compare", SEVEN_CELL], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "equal (theorem applies: simple, weakly connected)\n"
    );
}
