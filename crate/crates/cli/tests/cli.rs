use std::process::{Command, Output};

fn charnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charnum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

#[test]
fn eval_prints_numbers_and_classes() {
    let out = charnum(&["eval", "-e", "(1+c+d+binom(10,2)*c^2)/(1+c+c^2+d) [P(2,7)]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0");
    assert_eq!(stdout(&charnum(&["eval", "-e", "c^2*d^7 [P(2,7)]"])), "1");
    assert_eq!(stdout(&charnum(&["eval", "-e", "1 [RP(2)]"])), "0");
    assert_eq!(
        stdout(&charnum(&["eval", "-e", "1/(1+alpha)^4 [RP(2)]"])),
        "0"
    );
    let out = charnum(&["eval", "-e", "e^2", "--scenario", "P(2,7);stong"]);
    assert_eq!(stdout(&out), "d + c*e + c^2");
}

#[test]
fn errors_exit_with_two() {
    for args in [
        &["eval", "-e", "c +"][..],
        &["eval", "-e", "c + q [P(2,3)]"],
        &["eval", "-e", "e [RPnu]"],
        &["eval", "-e", "1/c [P(2,3)]"],
        &["eval", "-e", "c", "--scenario", "P(2,3);rp(2,0,10)"],
        &["verify", "lemma-u0", "--i", "9..3"],
        &["verify", "prop-iii", "--u", "12"],
        &["verify", "bogus"],
        &["enumerate", "--h", "2", "--i-max", "8", "--eps", "2"],
        &["scan", "--case", "v", "--u", "2", "--v", "0"],
    ] {
        let out = charnum(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_text_and_json() {
    let out = charnum(&["verify", "lemma-u0", "--i", "1..7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 4);
    assert!(text.ends_with("suite lemma-u0: 4/4 checks passed"));

    let out = charnum(&["verify", "theorem", "--i", "1..16", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["suite"], "theorem");
    assert_eq!(json["all_pass"], true);
    let reports = json["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 16);
    for r in reports {
        for key in ["check_id", "statement", "parameters", "lhs", "rhs", "pass"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn scan_and_enumerate() {
    let out = charnum(&[
        "scan", "--case", "iii", "--u", "2..3", "--v", "0,1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(rows
        .iter()
        .filter(|r| r["applicable"] == true)
        .all(|r| r["obstruction"] == 1));

    let out = charnum(&["enumerate", "--h", "2", "--i-max", "4", "--eps", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("5 admissible tuple(s)"));
}
