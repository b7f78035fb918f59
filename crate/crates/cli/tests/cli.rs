use std::path::PathBuf;
use std::process::Command;

use procco_cli::{run, ExitCode};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

struct Run {
    code: ExitCode,
    out: String,
    err: String,
}

fn procco_with_stdin(args: &[&str], stdin: &str) -> Run {
    let mut argv = vec!["procco"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn procco(args: &[&str]) -> Run {
    procco_with_stdin(args, "")
}

#[test]
fn matrix_matches_the_printed_table() {
    let r = procco(&["matrix"]);
    assert_eq!(r.code, ExitCode::Clean);
    assert_eq!(r.out, golden("matrix.tsv"));
    assert_eq!(r.out.lines().count(), 19);
}

#[test]
fn matrix_check_reports_four_widenings() {
    let r = procco(&["matrix", "--check"]);
    assert_eq!(r.code, ExitCode::Clean);
    assert_eq!(r.out.lines().filter(|l| l.starts_with("R001 warning -: ")).count(), 4);
    assert!(r.out.contains("consumes: source widening, target equal\n"));
    let c = procco(&["matrix", "--check", "--format", "canonical"]);
    assert!(c.out.starts_with("procco-matrix 1\nrow consumes "));
    assert!(c.out.contains("check involves narrowing narrowing\n"));
    assert_eq!(
        c.out
            .lines()
            .filter(|l| l.starts_with("finding R001 warning - "))
            .count(),
        4
    );
}

#[test]
fn schema_dumps_are_pinned() {
    assert_eq!(procco(&["schema"]).out, golden("schema.txt"));
    assert_eq!(
        procco(&["schema", "--format", "canonical"]).out,
        golden("schema.canonical")
    );
}

#[test]
fn clean_fixture_validates_clean() {
    for mode in [&[][..], &["--strict"][..]] {
        let mut args = vec!["validate"];
        let f = fixture("clean.pco");
        args.push(&f);
        args.extend_from_slice(mode);
        let r = procco(&args);
        assert_eq!(r.code, ExitCode::Clean, "{}", r.out);
        assert_eq!(r.out, "");
        assert_eq!(r.err, "");
    }
}

#[test]
fn a1_violation_exits_one_with_one_finding() {
    let r = procco(&["validate", &fixture("a1_violation.pco")]);
    assert_eq!(r.code, ExitCode::Findings);
    assert_eq!(r.err, "");
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with("A1 error wp1,art1: "));
}

#[test]
fn canonical_report() {
    let r = procco(&[
        "validate",
        &fixture("a1_violation.pco"),
        "--format",
        "canonical",
        "--strict",
    ]);
    assert_eq!(r.code, ExitCode::Findings);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines[0], "procco-report 1");
    assert_eq!(lines[1], "mode strict");
    assert!(lines[2].starts_with("finding A1 error wp1,art1 \"wp1 consumes art1"));
    assert_eq!(lines[3], "count A1 1");
}

#[test]
fn tool_fixture_diverges_between_modes() {
    let f = fixture("tool.pco");
    let lenient = procco(&["validate", &f]);
    assert_eq!((lenient.code, lenient.out.as_str()), (ExitCode::Clean, ""));
    let strict = procco(&["validate", &f, "--strict"]);
    assert_eq!(strict.code, ExitCode::Findings);
    assert_eq!(
        strict.out.lines().collect::<Vec<_>>(),
        ["M002 error tool1: tool1 has 0 `is required by` targets; at least 1 required (1..*)"]
    );
}

#[test]
fn lint_never_fails_on_findings() {
    let r = procco(&["lint", &fixture("a1_violation.pco")]);
    assert_eq!(r.code, ExitCode::Clean);
    assert!(r.out.starts_with("A1 error"));
}

#[test]
fn parse_failures_exit_two() {
    let r = procco_with_stdin(&["validate", "-"], "entity wp1 : Workflow {}\n");
    assert_eq!(r.code, ExitCode::ParseFailure);
    assert_eq!(r.out, "");
    assert_eq!(r.err, "<stdin>:1:14: error P002: unknown term `Workflow`\n");
    let r = procco_with_stdin(&["lint", "-"], "entity wp1 : Workflow {}\n");
    assert_eq!(r.code, ExitCode::ParseFailure);
    let r = procco(&["validate", "/nonexistent/model.pco"]);
    assert_eq!(r.code, ExitCode::ParseFailure);
    assert!(r.err.starts_with("/nonexistent/model.pco: cannot read"));
}

#[test]
fn invalid_utf8_is_p000() {
    let dir = std::env::temp_dir().join(format!("procco-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.pco");
    std::fs::write(&path, b"entity a : Task {}\n\xfe\n").unwrap();
    let r = procco(&["validate", path.to_str().unwrap()]);
    assert_eq!(r.code, ExitCode::ParseFailure);
    assert!(
        r.err.ends_with(":2:1: error P000: invalid UTF-8 at byte offset 19\n"),
        "{}",
        r.err
    );
}

#[test]
fn several_files_merge_in_argument_order() {
    let (a, b) = (fixture("a1_violation.pco"), fixture("clean.pco"));
    let r = procco(&["validate", &b, &a]);
    assert_eq!(r.code, ExitCode::Findings);
    let expected = format!("# {b}\n# {a}\n{}", procco(&["validate", &a]).out);
    assert_eq!(r.out, expected);
    let again = procco(&["validate", &b, &a]);
    assert_eq!(again.out, r.out);
}

#[test]
fn partition_overrides() {
    let dir = std::env::temp_dir().join(format!("procco-cli-part-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("p.cfg");
    std::fs::write(&cfg, "WorkEntity = none\n").unwrap();
    let model = "entity w : WorkEntity {}\n";
    let default = procco_with_stdin(&["validate", "-"], model);
    assert!(default.out.contains("P001 error w:"));
    let r = procco_with_stdin(&["validate", "-", "--partitions", cfg.to_str().unwrap()], model);
    assert!(!r.out.contains("P001"));
    std::fs::write(&cfg, "WorkEntity = sideways\n").unwrap();
    let bad = procco_with_stdin(&["validate", "-", "--partitions", cfg.to_str().unwrap()], model);
    assert_eq!(bad.code, ExitCode::Usage);
}

#[test]
fn transitive_flag_changes_axiom_reading() {
    let model = "entity a1 : Activity {}\nentity a2 : Activity {}\nentity t : Task {}\nentity r : Role {}\n\
                 comp a1 contains a2\ncomp a2 contains t\nrel involves a1 -> r\nrel involves t -> r\n";
    let direct = procco_with_stdin(&["validate", "-"], model);
    assert!(direct.out.contains("A6 error a1,r:"));
    let transitive = procco_with_stdin(&["validate", "-", "--transitive"], model);
    assert!(!transitive.out.contains("A6 error a1,r:"));
}

#[test]
fn queries() {
    let f = fixture("clean.pco");
    let r = procco(&["query", &f, "--op", "descendants", "--id", "wp1", "--transitive"]);
    assert_eq!((r.code, r.out.as_str()), (ExitCode::Clean, "a1\nt1\n"));
    let r = procco(&["query", &f, "--op", "descendants", "--id", "wp1"]);
    assert_eq!(r.out, "a1\n");
    let r = procco(&["query", &f, "--op", "closure", "--id", "wp1", "--rel", "involves"]);
    assert_eq!(r.out, "r1\n");
    let r = procco(&["query", &f, "--op", "witness", "--axiom", "A5", "--subjects", "wp1,r1"]);
    assert_eq!(r.out, "satisfied a1\n");
    let v = fixture("a1_violation.pco");
    let r = procco(&[
        "query",
        &v,
        "--op",
        "witness",
        "--axiom",
        "a1",
        "--subjects",
        "wp1,art1",
    ]);
    assert_eq!(r.out, "unsatisfied\n");

    let bad = procco(&["query", &f, "--op", "witness", "--axiom", "A1", "--subjects", ""]);
    assert_eq!(bad.code, ExitCode::Usage);
    assert!(bad.err.contains("binds 2 subjects, got 0"));
    assert_eq!(
        procco(&["query", &f, "--op", "closure", "--id", "wp1"]).code,
        ExitCode::Usage
    );
    assert_eq!(
        procco(&["query", &f, "--op", "descendants", "--id", "ghost"]).code,
        ExitCode::Usage
    );
}

#[test]
fn export_round_trips_through_dsl() {
    let f = fixture("clean.pco");
    let canonical = procco(&["export", &f]);
    assert!(canonical.out.starts_with("procco-graph 1\nentity a1 Activity\n"));
    let dsl = procco(&["export", &f, "--format", "dsl"]);
    let again = procco_with_stdin(&["export", "-"], &dsl.out);
    assert_eq!(again.out, canonical.out);
    let dsl2 = procco_with_stdin(&["export", "-", "--format", "dsl"], &dsl.out);
    assert_eq!(dsl2.out, dsl.out);
}

#[test]
fn stats() {
    let r = procco(&["stats", &fixture("clean.pco")]);
    assert_eq!(r.code, ExitCode::Clean);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(&lines[..3], ["entities 12", "relations 29", "composition 2"]);
    assert!(lines.contains(&"kind Task 1"));
    assert!(lines.contains(&"rel consumes 3"));
    assert!(lines.contains(&"comp taskPartOf 1"));
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(procco(&[]).code, ExitCode::Usage);
    assert_eq!(procco(&["frobnicate"]).code, ExitCode::Usage);
    assert_eq!(procco(&["validate"]).code, ExitCode::Usage);
    assert_eq!(procco(&["matrix", "--format", "json"]).code, ExitCode::Usage);
    let help = procco(&["--help"]);
    assert_eq!(help.code, ExitCode::Clean);
    assert!(help.out.contains("validate"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_procco");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["validate", &fixture("clean.pco")]), Some(0));
    assert_eq!(status(&["validate", &fixture("a1_violation.pco")]), Some(1));
    assert_eq!(status(&["validate", "/nonexistent.pco"]), Some(2));
    assert_eq!(status(&["--bogus"]), Some(3));
    let out = Command::new(bin).arg("matrix").output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 19);
}
