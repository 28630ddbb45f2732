use std::process::{Command, Output};

use serde_json::Value;

fn qgrass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgrass")).args(args).env_remove("QGRASS_WORKERS").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn dims_table() {
    let out = qgrass(&["dims", "--family", "omega", "--m", "2", "--n", "1", "--q", "generic", "--t-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# {\"library_version\""));
    assert_eq!(&lines[1..], &["t,dim_formula,dim_enum,equal", "0,1,1,true", "1,3,3,true", "2,5,5,true", "3,7,7,true", "4,9,9,true"]);
}

#[test]
fn dims_json_restricted_full_range() {
    let out = qgrass(&["dims", "--family", "omega-restricted", "--m", "1", "--n", "1", "--d", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let dims: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["dim_formula"].as_str().unwrap()).collect();
    assert_eq!(dims, ["1", "2", "2", "1"]);
    assert_eq!(v["config"]["ell"], 3);
}

#[test]
fn taft_exhaustive() {
    let out = qgrass(&["hopf", "--family", "taft-mn", "--m", "1", "--n", "0", "--d", "3", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["dim"], 9);
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn taft_mu_and_primitivity() {
    let out = qgrass(&["hopf", "--family", "taft-mu", "--d", "6", "--mu", "q3,1;1,q2", "--ells", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["dim"], 36);
    let out = qgrass(&["hopf", "--family", "dq", "--m", "1", "--n", "1", "--d", "3", "--restricted", "--primitivity"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(!v["primitivity"].as_array().unwrap().is_empty());
}

#[test]
fn rank_one_is_vacuous() {
    let out = qgrass(&["check-uq", "--family", "omega", "--m", "0", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["pass"], true);
    let names: Vec<&str> = v["reports"][0]["relations"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap()).collect();
    assert!(names.iter().all(|n| !n.contains('E') && !n.contains('F')), "{names:?}");
}

#[test]
fn usage_errors() {
    let out = qgrass(&["dims", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    for args in [
        vec!["check-uq", "--family", "omega-restricted"],
        vec!["check-uq", "--family", "omega-restricted", "--d", "4"],
        vec!["dims", "--q", "generic", "--d", "3"],
        vec!["dims", "--q", "root"],
        vec!["dims", "--d", "5", "--ell", "3"],
        vec!["hopf", "--family", "nope"],
        vec!["act", "--word", "E1", "--input", "(0 | 2)"],
        vec!["act", "--word", "E1 q7", "--input", "(0 | 1)"],
    ] {
        assert_eq!(qgrass(&args).status.code(), Some(2), "{args:?}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_qgrass")).args(["qtest"]).env("QGRASS_WORKERS", "0").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failure_still_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("simple.json");
    let p = path.to_str().unwrap();
    let out = qgrass(&["simple", "--family", "omega", "--m", "1", "--n", "1", "--d", "3", "--t-max", "3", "--out", p]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["pass"], false);
    let last = &v["components"][3];
    assert_eq!(last["t"], 3);
    assert_eq!(last["simple"], "false");
    assert!(!last["witnesses"].as_array().unwrap().is_empty());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn witness_replays() {
    let out = qgrass(&["check-uq", "--m", "2", "--n", "1", "--t-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let info = v["reports"][0]["informational"].as_array().unwrap();
    let bad = info.iter().find(|r| r["status"] == "fail").expect("a weight variant instance fails");
    let w = &bad["witness"];
    let args: Vec<&str> = w["replay"].as_array().unwrap().iter().map(|a| a.as_str().unwrap()).collect();
    let rep = qgrass(&args);
    assert_eq!(rep.status.code(), Some(0));
    let r = json_of(&rep);
    assert_eq!(r["equal"], false);
    assert_eq!(r["rendered"].as_str().unwrap(), format!("{} = {}", w["lhs"].as_str().unwrap(), w["rhs"].as_str().unwrap()));
}

#[test]
fn act_word() {
    let out = qgrass(&["act", "--m", "2", "--n", "1", "--word", "E1", "--input", "(0,3 | 0)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["operator"], "x1 d2 s1");
    assert_eq!(v["rendered"], "(1)*(1,2 | 0)");
    let out = qgrass(&["act", "--m", "1", "--n", "0", "--word", "d1 x1", "--input", "(2 | )"]);
    assert_eq!(json_of(&out)["rendered"], "(v^2 + 1 + v^-2)*(2 | )");
}

#[test]
fn deterministic_across_worker_counts() {
    let run = |w: &str| {
        Command::new(env!("CARGO_BIN_EXE_qgrass"))
            .args(["check-leibniz", "--family", "dual", "--m", "2", "--n", "1", "--t-max", "3"])
            .env("QGRASS_WORKERS", w)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("4"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn suites_and_csv() {
    let out = qgrass(&["check-dq", "--m", "1", "--n", "1", "--t-max", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().nth(1), Some("suite,relation,status,checked,input,lhs,rhs"));
    for s in ["dq-super", "dq-hopf-alg", "twisted-leibniz"] {
        assert!(text.lines().any(|l| l.starts_with(s)), "{s}");
    }
    let out = qgrass(&["check-weyl", "--m", "2", "--n", "1", "--d", "3", "--t-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let suites: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(suites, ["weyl-generic", "weyl-odd-root"]);
}

#[test]
fn qtest_sweep() {
    let out = qgrass(&["qtest", "--d", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    assert_eq!(v["reports"][1]["relations"].as_array().unwrap().len(), 4);
}
