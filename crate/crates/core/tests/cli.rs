use std::path::{Path, PathBuf};

use ncnum::cli::{run, Outcome};
use ncnum::fixtures::doc::CategoryDoc;
use ncnum::fixtures::{builtin_docs, synthetic, FixtureDoc, Payload};
use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn ncnum(args: &[&str]) -> Outcome {
    run(std::iter::once("ncnum").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

fn write(dir: &Path, doc: &FixtureDoc) -> PathBuf {
    let p = dir.join(format!("{}.json", doc.name));
    std::fs::write(&p, doc.to_json()).unwrap();
    p
}

#[test]
fn check_a2_reports_smooth_and_proper() {
    let out = ncnum(&["check", &fixture("a2"), "--pretty"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "smooth: yes, proper: yes, dim 3");
    let j = json(&ncnum(&["check", &fixture("a2")]));
    assert_eq!(j["dim"], 3);
    assert_eq!(j["smooth"], true);
}

#[test]
fn every_bundled_fixture_checks() {
    for d in builtin_docs() {
        let out = ncnum(&["check", &fixture(&d.name)]);
        assert_eq!(out.code, 0, "{}: {}{}", d.name, out.stdout, out.stderr);
    }
}

#[test]
fn cyclic_quiver_is_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("loop.json");
    std::fs::write(
        &p,
        r#"{"name":"loop","kind":"quiver","payload":{"vertices":["1","2"],
            "arrows":[{"name":"a","source":"1","target":"2"},{"name":"b","source":"2","target":"1"}]}}"#,
    )
    .unwrap();
    let out = ncnum(&["check", p.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    let j = json(&out);
    assert_eq!(j["error"], "CyclicQuiver");
    assert!(j["fixture"].as_str().unwrap().contains("loop"));
}

#[test]
fn malformed_document_is_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("junk.json");
    std::fs::write(&p, r#"{"name":"junk","kind":"quiver"}"#).unwrap();
    let out = ncnum(&["check", p.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert_eq!(json(&out)["error"], "Schema");
}

#[test]
fn non_cyclic_trace_fails_validation() {
    // L0 and D0 = L0 ⊕ L0: doubling the trace on L0 breaks tr(g∘f) = tr(f∘g)
    let mut c = CategoryDoc::from_category(&synthetic::graded_sums(0, 0));
    let l0 = c.objects.iter().position(|o| o == "L0").unwrap();
    c.traces.as_mut().unwrap()[l0] = vec!["2".into()];
    let doc = FixtureDoc {
        name: "bad-trace".into(),
        payload: Payload::Category(c),
    };
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), &doc);
    let out = ncnum(&["check", p.to_str().unwrap()]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    let j = json(&out);
    assert_eq!(j["error"], "TraceCyclicityViolation");
    assert!(j["fixture"].as_str().unwrap().contains("bad-trace"));
}

#[test]
fn trace_of_the_diagonal_on_a2() {
    let out = ncnum(&["trace", "--algebra", &fixture("a2"), "--corr", &fixture("id")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let j = json(&out);
    assert_eq!(j["trace"], "2");
    assert_eq!(j["hh_standard"], "2");
    assert_eq!(j["hh_bar"], "2");
}

#[test]
fn gram_of_a2_is_nondegenerate() {
    let out = ncnum(&["gram", "--motive", &fixture("a2-id")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let j = json(&out);
    assert_eq!(j["radical_dim"], 0);
    assert_eq!(j["rank"], 4);
    let m = j["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 4);
    assert!(m.iter().all(|r| r.as_array().unwrap().len() == 4));
}

#[test]
fn dual_numbers_become_semisimple_after_the_quotient() {
    let after = ncnum(&["semisimple", "--category", &fixture("qx2"), "--after-quotient"]);
    assert_eq!(after.code, 0);
    assert_eq!(json(&after)["semisimple"], true);
    let before = ncnum(&["semisimple", "--category", &fixture("qx2")]);
    assert_eq!(before.code, 1);
    assert_eq!(json(&before)["semisimple"], false);
}

#[test]
fn quotient_radical_karoubi_and_orbit() {
    let q = json(&ncnum(&["quotient", "--category", &fixture("qx2")]));
    assert_eq!(q["quotient_hom_dims"], serde_json::json!([[1, 0], [0, 1]]));
    let r = json(&ncnum(&["radical", "--category", &fixture("qx2")]));
    assert_eq!(r["ideal_dims"], serde_json::json!([[0, 0], [0, 1]]));
    let r = json(&ncnum(&["radical", "--nchow", &fixture("a2")]));
    assert_eq!(r["ideal_dims"], serde_json::json!([[0, 0], [0, 0]]));
    let k = json(&ncnum(&["karoubi", "--category", &fixture("split-pair"), "--idempotent", "X=1,0"]));
    assert_eq!(k["hom_dims"], serde_json::json!([[2, 1], [1, 1]]));
    let o = json(&ncnum(&["orbit", "--spec", &fixture("graded-lines-shift")]));
    assert_eq!(o["hom_dims"].as_array().unwrap().len(), 5);
    assert!(o["hom_dims"].as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap()).all(|d| d == 1));
    let bad = ncnum(&["karoubi", "--category", &fixture("split-pair"), "--idempotent", "X=1,1/2"]);
    assert_eq!(bad.code, 1);
    assert_eq!(json(&bad)["error"], "NotIdempotent");
}

#[test]
fn pair_of_projectives() {
    let out = ncnum(&["pair", "--x", &fixture("a2-p12"), "--y", &fixture("a2-p22")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(json(&out)["value"], "1");
}

#[test]
fn verify_suites_pass_and_are_deterministic() {
    let t = ncnum(&["verify", "trace-agreement", "--seed", "1"]);
    assert_eq!(t.code, 0, "{}", t.stdout);
    assert!(json(&t)["assertions"].as_u64().unwrap() >= 30);
    let p = ncnum(&["verify", "prop31", "--seed", "1"]);
    assert_eq!(p.code, 0);
    assert!(json(&p)["details"]["graded-lines-shift"]["tables_agree"].as_bool().unwrap());
    let i = ncnum(&["verify", "ideal", "--seed", "7"]);
    assert_eq!(i.code, 0);
    assert_eq!(i, ncnum(&["verify", "ideal", "--seed", "7"]));
}

#[test]
fn fixture_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    // an empty directory cannot resolve the algebra `a2` names
    let out = ncnum(&["trace", "--corr", &fixture("a2-id"), "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 2);
    let a2 = builtin_docs().into_iter().find(|d| d.name == "a2").unwrap();
    write(dir.path(), &a2);
    let out = ncnum(&["trace", "--corr", &fixture("a2-id"), "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ncnum(&["verify", "everything"]).code, 2);
    assert_eq!(ncnum(&["semisimple"]).code, 2);
    assert_eq!(ncnum(&["--help"]).code, 0);
}
