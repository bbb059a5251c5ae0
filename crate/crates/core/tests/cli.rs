use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partition-asymptotics"))
        .args(args)
        .env_remove("PARTITION_ASYMPTOTICS_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn partition_counts() {
    assert_eq!(stdout(&["partition", "0"]), "n  p(n)\n0     1\n");
    assert!(stdout(&["partition", "5"]).ends_with(" 7\n"));
    assert_eq!(
        stdout(&["--format", "csv", "partition", "100"]),
        "n,p(n)\n100,190569292\n"
    );
}

#[test]
fn tables_are_deterministic_in_every_format() {
    for format in ["human", "csv", "json"] {
        let a = stdout(&["--format", format, "table2"]);
        let b = stdout(&["--format", format, "table2"]);
        assert_eq!(a, b);
    }
    let json = stdout(&["--format", "json", "table1"]);
    let first: serde_json::Value = serde_json::from_str(json.lines().next().unwrap()).unwrap();
    assert_eq!(first["R"], "0.9016237417e-7");
    assert_eq!(first["n"], "200");
    let csv = stdout(&["--format", "csv", "table2"]);
    assert_eq!(csv.lines().next(), Some("n,N,C,R,lower,upper"));
    assert!(csv.contains("1000,11,866061,0.1675981042e-17,-0.2432081529e-17,0.2432076748e-17"));
}

#[test]
fn tables_reject_low_precision() {
    let out = run(&["--digits", "40", "table1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("50"));
    assert!(run(&["--digits", "50", "table1"]).status.success());
}

#[test]
fn nu_and_bounds() {
    assert_eq!(
        stdout(&["--format", "csv", "nu", "4", "3.474"]),
        "N,C,nu\n4,3.474,116\n"
    );
    let b = stdout(&["--format", "json", "bounds", "200", "4"]);
    let v: serde_json::Value = serde_json::from_str(b.trim()).unwrap();
    assert_eq!(v["upper"], "0.9713458636e-7");
    assert_eq!(v["encloses"], "true");
    let t3 = stdout(&[
        "--format",
        "json",
        "bounds",
        "500",
        "7",
        "--theorem",
        "thm3",
        "--constant",
        "24",
    ]);
    let v: serde_json::Value = serde_json::from_str(t3.trim()).unwrap();
    assert_eq!(v["lower"], "-0.3837969630e-12");
    assert_eq!(v["valid"], "true");
    assert_eq!(
        run(&["bounds", "500", "7", "--theorem", "thm3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn remainder_and_coefficients() {
    let r = stdout(&["--format", "csv", "remainder", "200", "4"]);
    assert!(r.contains("200,4,9.01623741725164"), "{r}");
    let coeff = stdout(&["--format", "csv", "coeff", "--m-max", "2"]);
    let lines: Vec<&str> = coeff.lines().collect();
    assert_eq!(lines[0], "m,c_m,bound,asymptotic");
    assert_eq!(lines.len(), 4);
    assert!(lines[2].starts_with("1,-4.43287976873582391267268873456e-1,"));
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = stdout(&["--format", "csv", "verify", "oracle", "--n-max", "300"]);
    assert_eq!(
        out,
        "suite,checked,status,counterexample\noracle,301,pass,-\n"
    );
    let lemma1 = stdout(&["--format", "csv", "verify", "lemma1", "--m-max", "100"]);
    assert!(lemma1.contains("lemma1,100,pass"));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn cache_file_from_flag_or_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.tsv");
    let p = path.to_str().unwrap();
    stdout(&["--cache", p, "partition", "50"]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("0\t1\n"));
    assert!(text.contains("50\t204226\n"));

    let env_path = dir.path().join("env.tsv");
    let out = Command::new(env!("CARGO_BIN_EXE_partition-asymptotics"))
        .args(["partition", "20"])
        .env("PARTITION_ASYMPTOTICS_CACHE", &env_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(std::fs::read_to_string(&env_path)
        .unwrap()
        .contains("20\t627\n"));
}
