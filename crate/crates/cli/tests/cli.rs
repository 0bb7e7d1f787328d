use std::process::{Command, Output};

fn nsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .env_remove("NSG_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_row_ten() {
    let out = nsg(&["table", "--max-genus", "10", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text.lines().find(|l| l.starts_with("10,")).unwrap();
    assert!(row.starts_with("10,110,143,175,204,280,385,"), "{row}");
    assert_eq!(
        text.lines().next().unwrap(),
        "g,two_fib,fib_simple,a_g,n_g,c_g,upper_simple,m_g,d_g"
    );
}

#[test]
fn bounds_a() {
    let out = nsg(&["bounds", "--max-genus", "6", "--which", "a"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(": 1,2,4,7,12,22\n"));
}

#[test]
fn series_and_trees_agree_on_the_command_line() {
    let out = nsg(&[
        "bounds",
        "--max-genus",
        "40",
        "--which",
        "c,d",
        "--source",
        "both",
    ]);
    let text = stdout(&out);
    let values: Vec<&str> = text
        .lines()
        .map(|l| l.split(": ").nth(1).unwrap())
        .collect();
    assert_eq!(values.len(), 4);
    assert_eq!(values[0], values[1]);
    assert_eq!(values[2], values[3]);
}

#[test]
fn formats_mark_absent_values() {
    let json = stdout(&nsg(&["table", "--max-genus", "3", "--format", "json"]));
    assert!(json.contains("\"two_fib\": null"));
    let md = stdout(&nsg(&["table", "--max-genus", "2", "--format", "markdown"]));
    assert!(md.lines().nth(2).unwrap().starts_with("| 1 |  | 1 |"));
    let capped = stdout(&nsg(&[
        "table",
        "--max-genus",
        "6",
        "--enumerate-up-to",
        "5",
    ]));
    assert!(capped
        .lines()
        .last()
        .unwrap()
        .starts_with("6,16,20,22,,24,25,,"));
}

#[test]
fn output_independent_of_workers() {
    let run = |w: &str| {
        stdout(&nsg(&[
            "--workers",
            w,
            "enumerate",
            "--max-genus",
            "18",
            "--by-multiplicity",
        ]))
    };
    assert_eq!(run("1"), run("3"));
    let env_run = Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(["infinite", "--max-genus", "16"])
        .env("NSG_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(
        stdout(&env_run),
        stdout(&nsg(&["--workers", "1", "infinite", "--max-genus", "16"]))
    );
}

#[test]
fn verify_small_scale_succeeds() {
    let out = nsg(&["verify", "--max-genus", "7", "--series-order", "64"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("0 failed\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        nsg(&["enumerate", "--max-genus", "65"]).status.code(),
        Some(2)
    );
    assert_eq!(
        nsg(&["table", "--max-genus", "5", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(nsg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(nsg(&[]).status.code(), Some(2));
}
