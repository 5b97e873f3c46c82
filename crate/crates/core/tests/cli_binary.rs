//! End-to-end runs of the compiled `tsimplex` binary.

use std::process::Command;

fn tsimplex(args: &[&str]) -> (Option<i32>, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_tsimplex")).args(args).output().expect("binary runs");
    (output.status.code(), String::from_utf8(output.stdout).expect("utf-8 output"))
}

#[test]
fn distance_and_fault_diameter() {
    assert_eq!(tsimplex(&["dist", "2,0,0", "0,0,2", "-n", "2", "-m", "2"]), (Some(0), "2\n".into()));
    assert_eq!(tsimplex(&["fault-diam", "-n", "3", "-m", "2", "--omega", "3"]), (Some(0), "3\n".into()));
}

#[test]
fn container_route_is_json() {
    let (code, out) = tsimplex(&["route", "1,2,0,0", "0,0,1,2", "-n", "3", "-m", "3"]);
    assert_eq!(code, Some(0));
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["u"], "1,2,0,0");
    assert_eq!(json["paths"].as_array().unwrap().len(), json["lengths"].as_array().unwrap().len());
}

#[test]
fn exit_codes() {
    assert_eq!(tsimplex(&["dist", "1,1,1", "0,0,2", "-n", "2", "-m", "2"]).0, Some(1));
    assert_eq!(tsimplex(&["wide-diam", "-n", "2", "-m", "2", "--omega", "2", "--budget", "5"]).0, Some(3));
}

#[test]
fn boundary_instances_do_not_fail_the_campaign() {
    let (code, out) = tsimplex(&["verify", "--grid", "2..3,1..1"]);
    assert_eq!(code, Some(0));
    assert!(out.contains("outside theorem hypothesis"));
}
