use std::process::{Command, Output};

use serde_json::Value;

fn qrm(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrm"))
        .args(args.split_whitespace())
        .env_remove("QRM_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &str) -> (i32, Value) {
    let out = qrm(&format!("{args} --json"));
    let v = serde_json::from_slice(&out.stdout).expect("valid json");
    (out.status.code().unwrap(), v)
}

#[test]
fn grm_parameters() {
    let (code, v) = json("grm -q 3 -m 2 --order 1");
    assert_eq!(code, 0);
    let rec = &v["records"][0];
    assert_eq!((rec["n"].as_u64(), rec["k"].as_u64()), (Some(9), Some(3)));
    assert_eq!(rec["d"]["value"], 6);
    assert_eq!(rec["d"]["exact"], true);

    let (code, v) = json("grm -q 2 -m 1 --order 0");
    assert_eq!(code, 0);
    assert_eq!(v["records"][0]["d"]["value"], 2);
}

#[test]
fn dual_check() {
    let (code, v) = json("grm -q 3 -m 2 --order 2 --dual-check");
    assert_eq!(code, 0);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"dual equals R_3(1,2)"));
}

#[test]
fn generator_dump_is_row_major() {
    let out = qrm("grm -q 2 -m 1 --order 1 --dump");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("generator:\n    1 0\n    0 1\n"), "{text}");
}

#[test]
fn quantum_examples() {
    for (args, n, k, d) in [
        ("quantum css -q 3 -m 2 --nu1 1 --nu2 2", 9, 3, 3),
        ("quantum hermitian -q 2 -m 1 --nu 0", 4, 2, 2),
        ("quantum hermitian -q 3 -m 1 --nu 1", 9, 5, 3),
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args}");
        let r = &v["records"][0];
        assert_eq!(r["n"], n);
        assert_eq!(r["k"]["value"], k);
        assert_eq!(r["d"]["value"], d);
        assert_eq!(r["pure"], true);
    }
    let (_, v) = json("quantum hermitian -q 3 -m 1 --nu 1");
    assert_eq!(v["records"][0]["mds"], true);
}

#[test]
fn puncture_examples() {
    let (code, v) = json("puncture hermitian -q 3 --nu 1 --mds-chain");
    assert_eq!(code, 0);
    let q = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["type"] == "quantum")
        .unwrap();
    assert_eq!(
        (q["n"].as_u64(), q["k"]["value"].as_u64(), q["d"]["value"].as_u64()),
        (Some(6), Some(2), Some(3))
    );
    assert_eq!(q["singleton_slack"], 0);

    let (code, v) = json("puncture css -q 3 -m 2 --nu1 1 --nu2 2 --list-weights");
    assert_eq!(code, 0);
    let wd = &v["records"][1]["weight_distribution"]["counts"];
    assert_eq!(wd[6], 24);
    assert_eq!(wd[9], 2);

    let (code, v) = json("puncture hermitian -q 2 --nu 0 --target-weight 4");
    assert_eq!(code, 0);
    let q = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["type"] == "quantum")
        .unwrap();
    assert_eq!(
        (q["n"].as_u64(), q["k"]["value"].as_u64(), q["d"]["value"].as_u64()),
        (Some(4), Some(2), Some(2))
    );
}

#[test]
fn exit_codes() {
    assert_eq!(qrm("grm -q 3 -m 2 --order 9").status.code(), Some(2));
    assert_eq!(qrm("grm -q 6 -m 1 --order 0").status.code(), Some(2));
    assert_eq!(qrm("grm -q 3").status.code(), Some(2));
    assert_eq!(qrm("grm -q 3 -m 2 --order 1 --cap 5 --strict").status.code(), Some(3));
    assert_eq!(qrm("grm -q 3 -m 2 --order 1 --cap 5").status.code(), Some(3));
    assert_eq!(
        qrm("puncture css -q 3 -m 2 --nu1 1 --nu2 2 --target-weight 2")
            .status
            .code(),
        Some(5)
    );
    let capped = Command::new(env!("CARGO_BIN_EXE_qrm"))
        .args(["grm", "-q", "3", "-m", "2", "--order", "1", "--strict"])
        .env("QRM_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn reports_are_byte_identical() {
    let a = qrm("puncture hermitian -q 3 --nu 1 --mds-chain --json").stdout;
    let b = qrm("puncture hermitian -q 3 --nu 1 --mds-chain --json").stdout;
    assert_eq!(a, b);
    let t: Value = serde_json::from_slice(&qrm("grm -q 2 -m 1 --order 0 --json --timing").stdout).unwrap();
    assert!(t["timing_ms"].is_u64());
}

#[test]
fn sweeps() {
    let out = qrm("sweep css --csv");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);

    let out = qrm("sweep css --q 2,3 -m 1,2 --csv");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    // pairs nu1 <= nu2 <= m(q-1)-1: (q,m) = (2,1),(2,2),(3,1),(3,2) give 1,3,3,10
    assert_eq!(rows.len(), 17);
    assert!(rows.iter().all(|r| r.ends_with(",pass")));

    let out = qrm("sweep mds --q 3,4 --csv");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 + 3);
    assert!(text.lines().skip(1).all(|r| r.contains(",0,true,")));
}
