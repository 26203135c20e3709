use std::process::{Command, Output};

const TABLE1: &str = include_str!("../../core/tests/golden/table1.tsv");
const TABLE2: &str = include_str!("../../core/tests/golden/table2.tsv");

fn fibsums(args: &[&str]) -> Output {
    fibsums_env(args, None)
}

fn fibsums_env(args: &[&str], limit: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fibsums"));
    cmd.args(args).env_remove("FIBSUMS_MAX_CELLS");
    if let Some(limit) = limit {
        cmd.env("FIBSUMS_MAX_CELLS", limit);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn default_table_is_table_one() {
    let out = fibsums(&["table"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), TABLE1);

    let out = fibsums(&[
        "table", "--family", "a", "--kmax", "5", "--nmax", "12", "--format", "tsv",
    ]);
    assert_eq!(stdout(&out), TABLE1);
}

#[test]
fn schreier_table_is_table_two() {
    let out = fibsums(&["table", "--family", "s"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), TABLE2);
}

#[test]
fn single_cell_csv() {
    let out = fibsums(&["table", "--kmax", "0", "--nmax", "1", "--format", "csv"]);
    assert_eq!(stdout(&out), "k\\n,1\n0,1\n");
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = fibsums(&["verify", "theorem1", "--kmax", "5", "--nmax", "12"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS 60/60 checks\n");

    let out = fibsums(&["verify", "oracle", "--kmax", "6", "--nmax", "15"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS"));

    let out = fibsums(&["verify", "lemma_a3", "--kmax", "0"]);
    assert_eq!(stdout(&out), "PASS 1/1 checks\n");

    for identity in ["theorem2", "corollary_cs", "closed_form"] {
        let out = fibsums(&["verify", identity, "--kmax", "8", "--nmax", "30"]);
        assert!(out.status.success(), "{identity}");
        assert!(stdout(&out).starts_with("PASS"), "{identity}");
    }
}

#[test]
fn guard_rejections_exit_nonzero() {
    let out = fibsums(&["verify", "oracle", "--nmax", "26"]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("ground set too large"));

    let out = fibsums_env(&["table"], Some("71"));
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("table too large"));
    assert!(fibsums_env(&["table"], Some("72")).status.success());

    let out = fibsums_env(&["bfile", "--k", "3", "--nmax", "10"], Some("39"));
    assert!(!out.status.success());

    let out = fibsums_env(&["table"], Some("lots"));
    assert!(!out.status.success());
}

#[test]
fn bad_arguments_are_rejected() {
    assert!(!fibsums(&["table", "--family", "b"]).status.success());
    assert!(!fibsums(&["table", "--format", "json"]).status.success());
    assert!(!fibsums(&["table", "--nmax", "0"]).status.success());
    assert!(!fibsums(&["verify", "theorem3"]).status.success());
}

#[test]
fn bfile_format() {
    let out = fibsums(&["bfile", "--family", "a", "--k", "1", "--nmax", "4"]);
    assert_eq!(stdout(&out), "1 1\n2 2\n3 4\n4 7\n");

    let out = fibsums(&["bfile", "--family", "s", "--k", "5", "--nmax", "9"]);
    assert!(stdout(&out).ends_with("\n9 1\n"));

    let out = fibsums(&["bfile", "--family", "a", "--k", "0", "--nmax", "1"]);
    assert_eq!(stdout(&out), "1 1\n");

    // strict "index value" lines, contiguous from 1
    let out = fibsums(&["bfile", "--family", "a", "--k", "7", "--nmax", "300"]);
    let text = stdout(&out);
    assert!(text.ends_with('\n'));
    for (i, line) in text.lines().enumerate() {
        let (idx, value) = line.split_once(' ').unwrap();
        assert_eq!(idx, (i + 1).to_string());
        assert!(
            !value.is_empty() && value.bytes().all(|b| b.is_ascii_digit()),
            "{line:?}"
        );
    }
    assert_eq!(text.lines().count(), 300);
}

#[test]
fn markdown_table_round_trips() {
    use fibsums::render::{compute_grid, parse_grid, Family, Format};
    let out = fibsums(&[
        "table", "--family", "s", "--kmax", "7", "--nmax", "30", "--format", "md",
    ]);
    let grid = parse_grid(stdout(&out), Format::Markdown).unwrap();
    assert_eq!(grid, compute_grid(Family::S, 7, 30, 1_000).unwrap());
}
