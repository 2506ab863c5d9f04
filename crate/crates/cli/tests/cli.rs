use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

const ALGEBRA: &str = r#"{"lie_algebra": {"basis": ["e1","e2"], "brackets": [{"left":"e1","right":"e2","value":{"e2":"1"}}]}}"#;
const RB_OPERATOR: &str = r#"{"operator": {"rows": [["0","0"],["1","0"]]}}"#;
const NOT_RB: &str = r#"{"operator": {"rows": [["1","0"],["0","1"]]}}"#;

struct Dir(PathBuf);

impl Dir {
    fn new(tag: &str) -> Dir {
        let d = std::env::temp_dir().join(format!("rota-cli-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&d);
        fs::create_dir_all(&d).unwrap();
        Dir(d)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }

    fn path(&self, name: &str) -> String {
        self.0.join(name).to_string_lossy().into_owned()
    }
}

impl Drop for Dir {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

fn rota(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rota")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_oop_on_the_rota_baxter_operator() {
    let d = Dir::new("oop");
    let (l, p) = (d.file("L.json", ALGEBRA), d.file("P.json", RB_OPERATOR));
    let o = rota(&["check-oop", "--algebra", &l, "--rep", "adjoint", "--op", &p]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o), "PASS o-operator (order 2)\n");
}

#[test]
fn failure_exits_one_with_a_witness() {
    let d = Dir::new("fail");
    let (l, p) = (d.file("L.json", ALGEBRA), d.file("P.json", NOT_RB));
    let o = rota(&["check-rbo", "--algebra", &l, "--op", &p, "--json-report"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["pass"], false);
    assert_eq!(v[0]["order"], 2);
    assert_eq!(v[0]["witness"]["args"], serde_json::json!(["e1", "e2"]));
}

#[test]
fn deform_by_zero() {
    let d = Dir::new("deform");
    let base = format!(
        r#"{{"lie_algebra": {}, "operator": {}}}"#,
        &ALGEBRA[16..ALGEBRA.len() - 1],
        &RB_OPERATOR[13..RB_OPERATOR.len() - 1]
    );
    let t = d.file("T.json", &base);
    let tp = d.file("Tp.json", r#"{"operator": {"rows": [["0","0"],["0","0"]]}}"#);
    let o = rota(&["deform", "--base", &t, "--delta", &tp]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "PASS deformation (order 2)\n");
}

#[test]
fn induced_product_is_pre_lie() {
    let d = Dir::new("prelie");
    let (l, p) = (d.file("L.json", ALGEBRA), d.file("P.json", RB_OPERATOR));
    let q = d.path("Q.json");
    let o = rota(&["induce-prelie", "--algebra", &l, "--op", &p, "--out", &q]);
    assert_eq!(o.status.code(), Some(0));
    let o = rota(&["check-prelie", "--product", &q]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PASS left-symmetry (order 3)\n");
}

#[test]
fn induce_prelie_rejects_non_operators() {
    let d = Dir::new("reject");
    let (l, p) = (d.file("L.json", ALGEBRA), d.file("P.json", NOT_RB));
    let o = rota(&["induce-prelie", "--algebra", &l, "--op", &p]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn errors_exit_two() {
    let d = Dir::new("errors");
    let bad = d.file("bad.json", "{\n  \"lie_algebra\": [\n");
    let o = rota(&["check-lie", "--algebra", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    let l = d.file("L.json", ALGEBRA);
    let o = rota(&["check-oop", "--algebra", &l, "--op", "missing"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_results_check_out() {
    let d = Dir::new("search");
    let l = d.file("L.json", ALGEBRA);
    let s = d.path("S.json");
    assert_eq!(rota(&["search-rbo", "--algebra", &l, "--grid", "-1,0,1", "--out", &s]).status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&s).unwrap()).unwrap();
    let ops: Vec<&String> = doc.as_object().unwrap().keys().filter(|k| k.starts_with("operator:")).collect();
    assert!(!ops.is_empty());
    for k in ops {
        let r = format!("{s}#{}", &k["operator:".len()..]);
        assert_eq!(rota(&["check-rbo", "--algebra", &s, "--op", &r]).status.code(), Some(0), "{k}");
    }
}

#[test]
fn homotopy_pipeline() {
    let d = Dir::new("homotopy");
    let l = d.file("L.json", ALGEBRA);
    let g = d.path("G.json");
    assert_eq!(rota(&["from-lie", "--algebra", &l, "--rep", "adjoint", "--out", &g]).status.code(), Some(0));
    let t = d.file(
        "T.json",
        r#"{"homotopy_operator": {"truncation": 1, "components": [
            {"weight": 1, "entries": [{"args": ["e1"], "value": {"e2": "1"}}]}]}}"#,
    );
    let o = rota(&["check-hoop", "--sgla", &g, "--op", &t]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "PASS homotopy-o-operator (order 4)\n");
    let m = d.path("M.json");
    assert_eq!(rota(&["induce-prelie-inf", "--sgla", &g, "--op", &t, "--out", &m]).status.code(), Some(0));
    let o = rota(&["check-prelie-inf", "--prelie-inf", &m]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = rota(&["mc-check-homotopy", "--sgla", &g, "--op", &t]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn suite_is_deterministic() {
    let a = rota(&["suite", "--samples", "6", "--seed", "7", "--json-report"]);
    let b = rota(&["suite", "--samples", "6", "--seed", "7", "--json-report"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
}
