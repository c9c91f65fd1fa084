use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use serde_json::Value;
use tempfile::TempDir;

use enhopf::chains::Cochain;
use enhopf::falg::PrimeField;
use enhopf::models::sphere_wedge;
use enhopf::simp::{minimal_sphere, verify_homology_sphere, SimplexId, SimplicialMap};
use enhopf_cli::{cocycle_file, load_set, to_text, CooperadSpec, MapFile, SimplicialSetFile};

const INSTANCE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/instances/hopf");

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn enhopf(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_enhopf")).args(args).output().unwrap();
    Run { code: out.status.code().unwrap(), stdout: String::from_utf8(out.stdout).unwrap(), stderr: String::from_utf8(out.stderr).unwrap() }
}

fn instance(name: &str) -> String {
    format!("{INSTANCE}/{name}")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn d(n: usize) -> CooperadSpec {
    CooperadSpec { kind: "Dn".into(), n: Some(n), max_arity: None }
}

fn copy_instance(dir: &Path) {
    for f in ["s3.json", "sc3.json", "s2.json"] {
        fs::copy(instance(f), dir.join(f)).unwrap();
    }
}

#[test]
fn generated_minimal_sphere_round_trips() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("s2.json");
    let r = enhopf(&["gen", "minimal-sphere", "--dim", "2", "--out", p(&path)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let x = load_set(&path).unwrap();
    for f in [PrimeField::F2, PrimeField::F3] {
        assert!(verify_homology_sphere(&x, 2, f));
    }
    assert_eq!(to_text(&SimplicialSetFile::from_set(&x)), fs::read_to_string(&path).unwrap());
}

#[test]
fn boundary_sphere_has_fourteen_simplices() {
    let r = enhopf(&["gen", "boundary-sphere", "--dim", "2"]);
    assert_eq!(r.code, 0);
    let file: SimplicialSetFile = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(file.dims, vec![4, 6, 4]);
    assert_eq!(file.simplices.len(), 14);
}

#[test]
fn suspension_of_the_two_sphere_is_the_three_sphere() {
    let dir = TempDir::new().unwrap();
    let s2 = dir.path().join("s2.json");
    assert_eq!(enhopf(&["gen", "minimal-sphere", "--dim", "2", "--out", p(&s2)]).code, 0);
    let r = enhopf(&["gen", "suspension", "--input", p(&s2)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let got: SimplicialSetFile = serde_json::from_str(&r.stdout).unwrap();
    let want = SimplicialSetFile::from_set(&minimal_sphere(3));
    assert_eq!(got.dims, want.dims);
    let rename: Vec<(&String, &String)> = got.simplices.keys().zip(want.simplices.keys()).collect();
    let translate = |name: &str| rename.iter().find(|(g, _)| g.as_str() == name).map(|(_, w)| w.as_str()).unwrap();
    assert_eq!(translate(&got.basepoint), want.basepoint);
    for ((gname, g), (wname, w)) in got.simplices.iter().zip(&want.simplices) {
        assert_eq!(translate(gname), wname);
        assert_eq!(g.dim, w.dim);
        let faces: Vec<(&str, &Vec<usize>)> = g.faces.iter().map(|f| (translate(&f.base), &f.word)).collect();
        let expected: Vec<(&str, &Vec<usize>)> = w.faces.iter().map(|f| (f.base.as_str(), &f.word)).collect();
        assert_eq!(faces, expected);
    }
}

#[test]
fn bundled_instance_is_reproducible() {
    let dir = TempDir::new().unwrap();
    assert_eq!(enhopf(&["instance", p(dir.path())]).code, 0);
    let mut names: Vec<PathBuf> = fs::read_dir(INSTANCE).unwrap().map(|e| e.unwrap().path()).collect();
    names.sort();
    assert_eq!(names.len(), 7);
    for path in names {
        let fresh = dir.path().join(path.file_name().unwrap());
        assert_eq!(fs::read(&path).unwrap(), fs::read(&fresh).unwrap(), "{}", path.display());
    }
}

#[test]
fn hopf_invariant_of_the_hopf_map_is_one() {
    let args = ["hopf", "--map", &instance("hopf.json"), "--cocycle", &instance("omega.json"), "--trials", "5", "--seed", "3"];
    let r = enhopf(&args);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    assert_eq!(v["result"]["hopf_value"]["value"], 1);
    assert_eq!(v["result"]["hopf_value"]["m"], 3);
    assert_eq!(v["result"]["pivot_independent"], true);
    assert_eq!(v["seed"], 3);
    assert_eq!(v["inputs"].as_object().unwrap().len(), 4);
    assert!(!v["result"]["certificate"]["steps"].as_array().unwrap().is_empty());
    assert_eq!(enhopf(&args).stdout, r.stdout);
}

#[test]
fn composite_to_the_minimal_sphere_has_invariant_one() {
    let r = enhopf(&["hopf", "--map", &instance("hopf-s2.json"), "--cocycle", &instance("omega-s2.json")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json()["result"]["hopf_value"]["value"], 1);
}

#[test]
fn constant_map_has_invariant_zero() {
    let dir = TempDir::new().unwrap();
    copy_instance(dir.path());
    let s3 = Arc::new(load_set(&dir.path().join("s3.json")).unwrap());
    let x = Arc::new(load_set(&dir.path().join("sc3.json")).unwrap());
    let c = SimplicialMap::constant(s3, x);
    let map = dir.path().join("const.json");
    fs::write(&map, to_text(&MapFile::from_map(&c, "s3.json", "sc3.json"))).unwrap();
    let r = enhopf(&["hopf", "--map", p(&map), "--cocycle", &instance("omega.json")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json()["result"]["hopf_value"]["value"], 0);
}

#[test]
fn large_n_is_rejected_as_not_exact() {
    let dir = TempDir::new().unwrap();
    let x = load_set(Path::new(&instance("sc3.json"))).unwrap();
    let w = Cochain::indicator(x.id("0,1,3").unwrap());
    let path = dir.path().join("w.json");
    fs::write(&path, to_text(&cocycle_file(d(3), "1", &x, &[&w]))).unwrap();
    let r = enhopf(&["hopf", "--map", &instance("hopf.json"), "--cocycle", p(&path)]);
    assert_eq!(r.code, 4, "{}", r.stderr);
    assert!(r.stderr.contains("k > n"), "{}", r.stderr);
}

#[test]
fn non_cocycle_is_rejected() {
    let dir = TempDir::new().unwrap();
    let x = load_set(Path::new(&instance("sc3.json"))).unwrap();
    let e = Cochain::indicator(x.id("0,3").unwrap());
    let path = dir.path().join("e.json");
    fs::write(&path, to_text(&cocycle_file(d(1), "1", &x, &[&e]))).unwrap();
    let r = enhopf(&["hopf", "--map", &instance("hopf.json"), "--cocycle", p(&path)]);
    assert_eq!(r.code, 3, "{}", r.stderr);
}

#[test]
fn missing_cooperad_rows_are_reported() {
    let dir = TempDir::new().unwrap();
    let data = r#"{
  "label": "partial",
  "generators": [
    { "label": "1", "arity": 1, "degree": 0, "cocomposition": [] },
    { "label": "m2", "arity": 2, "degree": 1, "cocomposition": [], "twisting": [{ "coeff": 1, "surjection": [1, 2] }] },
    { "label": "m3", "arity": 3, "degree": 2 }
  ]
}"#;
    fs::write(dir.path().join("partial.json"), data).unwrap();
    let x = load_set(Path::new(&instance("sc3.json"))).unwrap();
    let w = Cochain::indicator(x.id("0,1,3").unwrap());
    let spec = CooperadSpec { kind: "partial.json".into(), n: None, max_arity: None };
    let path = dir.path().join("w3.json");
    fs::write(&path, to_text(&cocycle_file(spec, "m3", &x, &[&w, &w, &w]))).unwrap();
    let r = enhopf(&["hopf", "--map", &instance("hopf.json"), "--cocycle", p(&path)]);
    assert_eq!(r.code, 5, "{}", r.stderr);
}

#[test]
fn bad_inputs_map_to_validation_and_io_codes() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"dims":[1,1],"simplices":{"*":{"dim":0,"faces":[]},"e":{"dim":1,"faces":[{"base":"v","word":[]},{"base":"*","word":[]}]}},"basepoint":"*"}"#).unwrap();
    let r = enhopf(&["gen", "suspension", "--input", p(&bad)]);
    assert_eq!(r.code, 2, "{}", r.stderr);
    assert!(r.stderr.contains("unknown simplex v"));
    let r = enhopf(&["gen", "suspension", "--input", p(&dir.path().join("missing.json"))]);
    assert_eq!(r.code, 6, "{}", r.stderr);
    assert_eq!(enhopf(&["hopf", "--map", &instance("hopf.json"), "--cocycle", &instance("omega.json"), "--p", "4"]).code, 2);
}

#[test]
fn verification_suites_pass() {
    for args in [
        vec!["verify", "suspension-theorem", "--n-max", "2", "--r-max", "2", "--d-max", "2", "--p", "3"],
        vec!["verify", "chain-map-axiom", "--r-max", "2", "--d-max", "2", "--p", "3"],
        vec!["verify", "bar-d-squared", "--n", "2"],
        vec!["verify", "en-triviality", "--m-max", "3", "--r-max", "2"],
    ] {
        let r = enhopf(&args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
        let v = r.json();
        assert_eq!(v["passed"], true);
        assert_eq!(v["p"], if args.contains(&"3") && args.contains(&"--p") { 3 } else { 2 });
    }
}

#[test]
fn stable_tower_of_the_hopf_map_is_constant() {
    let r = enhopf(&["stable", "--space", &instance("s2.json"), "--cocycle", &instance("omega-s2.json"), "--map", &instance("hopf-s2.json"), "--levels", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    let values: Vec<&Value> = v["result"]["pairings"].as_array().unwrap().iter().map(|h| &h["value"]).collect();
    assert_eq!(values, vec![1, 1, 1]);
    let lifts = v["result"]["lifts"].as_array().unwrap();
    assert_eq!(lifts[2][0]["word"], serde_json::json!(["s(s(sigma))", "s(s(sigma))"]));
}

#[test]
fn weight_one_cocycle_has_a_trivial_tower() {
    let dir = TempDir::new().unwrap();
    let x = minimal_sphere(2);
    let w = Cochain::indicator(SimplexId::new(2, 0));
    let path = dir.path().join("w.json");
    fs::write(&path, to_text(&cocycle_file(d(1), "1", &x, &[&w]))).unwrap();
    let r = enhopf(&["stable", "--space", &instance("s2.json"), "--cocycle", p(&path), "--levels", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let lifts = r.json()["result"]["lifts"].clone();
    assert_eq!(lifts[2], serde_json::json!([{ "coeff": 1, "gamma": "1", "word": ["s(s(sigma))"] }]));
}

#[test]
fn whitehead_product_reports_an_obstruction() {
    let dir = TempDir::new().unwrap();
    let (x, a, b) = sphere_wedge();
    let space = dir.path().join("wedge.json");
    fs::write(&space, to_text(&SimplicialSetFile::from_set(&x))).unwrap();
    let path = dir.path().join("ab.json");
    fs::write(&path, to_text(&cocycle_file(d(1), "bar_0", &x, &[&a, &b]))).unwrap();
    let r = enhopf(&["stable", "--space", p(&space), "--cocycle", p(&path), "--levels", "2"]);
    assert_eq!(r.code, 1, "{}", r.stderr);
    let v = r.json();
    assert_eq!(v["passed"], false);
    assert_eq!(v["result"]["obstruction"], 1);
}
