use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: Option<&str>) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_holocodes"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

fn ok(args: &[&str], stdin: Option<&str>) -> Value {
    let (code, v) = run(args, stdin);
    assert_eq!(code, 0, "{args:?}: {v}");
    assert_eq!(v["status"], "ok");
    v["payload"].clone()
}

#[test]
fn five_qubit() {
    assert_eq!(ok(&["crss", "five-qubit"], None), json!({"n": 5, "k": 1, "dQ": 3}));
}

#[test]
fn field_descriptors() {
    let f7 = ok(&["field", "--p", "7", "--r", "1"], None);
    assert_eq!((f7["q"].clone(), f7["generator"].clone()), (json!(7), json!(3)));
    let f9 = ok(&["field", "--q", "9"], None);
    assert_eq!(f9["modulus"], json!([1, 0, 1]));
    assert!(f9["generator"].is_array());
}

#[test]
fn exit_codes() {
    let (code, v) = run(&["field", "--q", "6"], None);
    assert_eq!((code, v["error"]["code"].clone()), (1, json!("NonPrimeP")));
    let (code, v) = run(&["no-such-command"], None);
    assert_eq!((code, v["error"]["code"].clone()), (2, json!("UnknownCommand")));
    let (code, _) = run(&["tiling", "census"], None);
    assert_eq!(code, 2);
    let (code, v) = run(&["code-distance"], Some("{not json"));
    assert_eq!((code, v["error"]["code"].clone()), (1, json!("MalformedJson")));
}

#[test]
fn census_table() {
    let t = ok(&["reproduce", "--table", "census"], None);
    let pairs: Vec<(u64, u64)> =
        t["table"].as_array().unwrap().iter().map(|r| (r["m"].as_u64().unwrap(), r["n"].as_u64().unwrap())).collect();
    assert_eq!(pairs, [(5, 5), (25, 15), (95, 55), (355, 205), (1325, 765), (4945, 2855)]);
}

#[test]
fn reproduce_reports_failures() {
    let (code, v) = run(&["reproduce"], None);
    assert_eq!(code, 1);
    assert_eq!(v["payload"]["criteria"].as_array().unwrap().len(), 14);
    assert_eq!(v["payload"]["failed"], json!([3]));
    assert_eq!(ok(&["reproduce", "--criterion", "1"], None)["failed"], json!([]));
}

#[test]
fn rs_round_trip() {
    let rs = ok(&["rs-encode", "--q", "5", "--k", "2", "--message", "1,2"], None);
    // 1 + 2x at x = 0..4
    assert_eq!(rs["codeword"], json!([1, 3, 0, 2, 4]));
    let text = rs.to_string();
    assert_eq!(ok(&["code-distance"], Some(&text))["min_distance"], 4);
    let dual = ok(&["code-dual", "euclidean"], Some(&text));
    assert_eq!(dual["k"], 3);
    assert_eq!(ok(&["code-distance"], Some(&dual.to_string()))["min_distance"], 3);
}

#[test]
fn hermitian_pipeline() {
    let (_, rs) = run(&["rs-encode", "--q", "4", "--k", "2", "--projective"], None);
    let text = rs.to_string();
    let s = ok(&["crss", "build", "--variant", "hermitian"], Some(&text));
    assert_eq!((s["n"].clone(), s["k"].clone(), s["dQ"].clone()), (json!(5), json!(1), json!(3)));
    let s_text = s.to_string();
    assert_eq!(ok(&["crss", "distance"], Some(&s_text))["dQ"], 3);
    assert_eq!(ok(&["crss", "oracle-dim"], Some(&s_text))["dimension"], 2);
    let (_, affine) = run(&["rs-encode", "--q", "4", "--k", "2"], None);
    let (code, v) = run(&["crss", "build", "--variant", "hermitian"], Some(&affine.to_string()));
    assert_eq!((code, v["error"]["code"].clone()), (1, json!("NotHermitianSelfOrthogonal")));
}

#[test]
fn nested_pair_over_f3() {
    let rep = json!({"q": 3, "n": 3, "generator": [[1, 1, 1]]});
    let sum_zero = json!({"q": 3, "n": 3, "generator": [[1, 2, 0], [0, 1, 2]]});
    let s = ok(&["crss", "build", "--variant", "nested"], Some(&json!({"c1": rep, "c2": sum_zero}).to_string()));
    assert_eq!((s["n"].clone(), s["k"].clone(), s["dQ"].clone()), (json!(3), json!(1), json!(2)));
}

#[test]
fn qutrit_is_perfect() {
    let q = ok(&["crss", "qutrit"], None);
    assert_eq!(q["perfect"], true);
    assert_eq!(q["pairs"].as_array().unwrap().len(), 6);
}

#[test]
fn tree_commands() {
    let m = ok(&["tree", "matrix", "--q", "2", "--depth", "2", "--k", "2"], None);
    assert_eq!((m["rows"].clone(), m["cols"].clone(), m["rank"].clone()), (json!(5), json!(6), json!(5)));
    let e = ok(&["tree", "encode", "--q", "2", "--depth", "2", "--k", "2", "--message", "0,0,0,0,0"], None);
    assert_eq!(e["boundary"], json!([0, 0, 0, 0, 0, 0]));
    let from_stdin = ok(&["tree", "encode", "--q", "2", "--n", "2", "--k", "2"], Some("[1,0,1,1,0]"));
    let by_flag = ok(&["tree", "encode", "--q", "2", "--depth", "2", "--k", "2", "--message", "1,0,1,1,0"], None);
    assert_eq!(from_stdin, by_flag);
}

#[test]
fn mumford_commands() {
    let g = json!({"components": 2, "edges": [[0, 0, 1, 0], [0, 1, 1, 1]]}).to_string();
    let c = ok(&["mumford", "code", "--q", "2", "--k", "2"], Some(&g));
    assert_eq!((c["betti"].clone(), c["solution_dim"].clone()), (json!(1), json!(2)));
    let e = ok(&["mumford", "extend", "--q", "2", "--k", "2", "--depth", "1"], Some(&g));
    assert_eq!((e["boundary_legs"].clone(), e["rank"].clone()), (json!(4), json!(3)));
}

#[test]
fn tiling_and_surface_round_trip() {
    let census = ok(&["tiling", "census", "--n", "2"], None);
    assert_eq!(census["total_faces"], 51);
    let region = ok(&["tiling", "region", "--n", "1"], None);
    assert_eq!(region["faces"].as_array().unwrap().len(), 11);
    let s = ok(&["surface", "code"], Some(&region.to_string()));
    assert_eq!(s["k"], 0);
    let toric = ok(&["toric", "--L", "3"], None);
    assert_eq!(
        (toric["code"]["n"].clone(), toric["code"]["k"].clone(), toric["code"]["d"].clone()),
        (json!(18), json!(2), json!(3))
    );
    // the toric payload feeds straight back into `surface code`
    assert_eq!(ok(&["surface", "code"], Some(&toric.to_string()))["k"], 2);
}

#[test]
fn building_commands() {
    let link = ok(&["building", "link", "--q", "2"], None);
    assert_eq!((link["vertex_count"].clone(), link["flags"].clone()), (json!(14), json!(21)));
    let code = ok(&["building", "code", "--q", "2", "--m", "1", "--section", "1,0,1"], None);
    assert_eq!(code["checks"], 21);
    assert_eq!((code["code"]["n"].clone(), code["code"]["k"].clone()), (json!(7), json!(3)));
    let outputs = code["outputs"].as_array().unwrap();
    let known = json!({"known": [outputs[0], outputs[1]], "target": outputs[6]["line"]});
    let p = ok(&["building", "propagate", "--q", "2", "--m", "1"], Some(&known.to_string()));
    assert_eq!(p["base"], outputs[6]);
    assert_eq!(p["output_dim"], 0);
    let (code, v) = run(&["building", "code", "--q", "2", "--m", "3"], None);
    assert_eq!((code, v["error"]["code"].clone()), (1, json!("DegreeOutOfRange")));
}
