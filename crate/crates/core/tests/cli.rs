use std::process::Command;

use serde_json::Value;
use swclass::cli;
use swclass::ring::{Mod2Class, RingDescriptor};

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("swclass").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out, err) = run(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn ring_of(doc: &Value) -> RingDescriptor {
    match doc["ring"].as_str().unwrap() {
        "CyclicMod4" => RingDescriptor::CyclicMod4,
        "CyclicMod2" => RingDescriptor::CyclicMod2,
        "BicyclicMod4" => RingDescriptor::BicyclicMod4,
        "BicyclicMod2" => RingDescriptor::BicyclicMod2,
        other => panic!("unknown ring {other}"),
    }
}

/// Class strings parse back to themselves and the obstruction degree is
/// the degree of its class.
fn check_document(doc: &Value) {
    let ring = ring_of(doc);
    for field in ["w1", "w2", "total"] {
        if let Some(s) = doc[field].as_str() {
            assert_eq!(Mod2Class::parse(ring, s).unwrap().render(), s, "{field}");
        }
    }
    if let Some(o) = doc["obstruction"].as_object() {
        let class = Mod2Class::parse(ring, o["class"].as_str().unwrap()).unwrap();
        assert_eq!(class.render(), o["class"].as_str().unwrap());
        let degree = o["degree"].as_u64().unwrap();
        assert!(class.monomials().all(|m| m.degree() == degree));
    }
}

#[test]
fn gl2_pi_one_sgn_at_seventeen() {
    let doc = json(&["gl2", "--q", "17", "--rep", "ps(1,sgn)"]);
    check_document(&doc);
    assert_eq!(doc["obstruction"]["degree"], 8);
    assert_eq!(doc["obstruction"]["class"], "t1^4 + t2^4");
    assert_eq!(doc["obstruction"]["k"], 2);
    assert_eq!(doc["profile"]["m11"], "4");
}

#[test]
fn gl2_regular_at_five() {
    let doc = json(&["gl2", "--q", "5", "--rep", "regular"]);
    check_document(&doc);
    assert_eq!(doc["obstruction"]["degree"], 16);
    assert_eq!(doc["obstruction"]["class"], "t1^8 + t2^8 + t1^4*t2^4");
}

#[test]
fn cyclic_single_character() {
    let (code, out, _) = run(&["cyclic", "--n", "4", "--mj", "1:1"]);
    assert_eq!(code, 0);
    assert!(out
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["total", "1", "+", "t"]));
    let doc = json(&["cyclic", "--n", "4", "--mj", "1:1"]);
    assert_eq!(doc["total"], "1 + t");
    check_document(&doc);
}

#[test]
fn documents_round_trip() {
    for args in [
        &[
            "cyclic",
            "--n",
            "12",
            "--m0",
            "2",
            "--ms",
            "3",
            "--mj",
            "1:2,3:1,5:4",
        ][..],
        &["cyclic", "--n", "6", "--ms", "1", "--mj", "1:3,2:1"],
        &[
            "bicyclic",
            "--n",
            "8",
            "--m",
            "1,0,2,0",
            "--M",
            "(1,0):2,(0,1):2,(1,1):1",
        ],
        &["bicyclic", "--n", "6", "--m", "0,1,1,1", "--M", "(1,2):1"],
        &["bicyclic", "--n", "10", "--char", "12,4,0,4"],
        &["gl2", "--q", "9", "--rep", "2*S(cusp(1)) + st*sgn"],
        &["gl2", "--q", "11", "--rep", "S(ps(0,1)) + S(st(1))"],
        &["gl2", "--q", "13", "--rep", "sgn + st"],
    ] {
        check_document(&json(args));
    }
}

#[test]
fn json_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "bicyclic",
        "--seed",
        "7",
        "--samples",
        "16",
        "--format",
        "json",
    ];
    assert_eq!(run(&args).1, run(&args).1);
    let args = ["gl2", "--q", "13", "--table", "4", "--format", "json"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn tables_report_known_discrepancies() {
    let doc = json(&["gl2", "--q", "7", "--table", "2"]);
    let kinds: Vec<&str> = doc["discrepancies"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["PiOneSgnMValue"]);
    assert!(doc["table"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["verified"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["gl2", "--q", "5"]).0, 1);
    assert_eq!(run(&["gl2", "--q", "5", "--rep", "ps(1,"]).0, 1);
    assert_eq!(run(&["cyclic", "--n", "8", "--mj", "1:x"]).0, 1);
    // invalid q, non-realizable character, non-orthogonal bare summand
    assert_eq!(run(&["gl2", "--q", "15", "--rep", "triv"]).0, 2);
    assert_eq!(run(&["bicyclic", "--n", "8", "--char", "7,0,0,0"]).0, 2);
    assert_eq!(run(&["gl2", "--q", "5", "--rep", "ps(1,2)"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "arith", "--samples", "4"]).0, 0);
}

#[test]
fn errors_name_the_offending_token() {
    let (_, _, err) = run(&["gl2", "--q", "5", "--rep", "triv + bogus"]);
    assert!(err.contains("bogus") && err.contains("position 7"), "{err}");
    let (_, _, err) = run(&["cyclic", "--n", "8", "--mj", "1:2,zz:1"]);
    assert!(err.contains("zz"), "{err}");
    let (_, _, err) = run(&["bicyclic", "--n", "8", "--m", "0,0,0"]);
    assert!(err.contains("4 comma-separated"), "{err}");
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("swclass-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&[
        "gl2", "--q", "3", "--rep", "regular", "--format", "json", "--out", p,
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(doc["obstruction"]["class"], "v1^8 + v2^8 + v1^4*v2^4");
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_swclass");
    let out = Command::new(bin)
        .args(["verify", "--suite", "all", "--seed", "42"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin)
        .args(["gl2", "--q", "4", "--rep", "triv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
