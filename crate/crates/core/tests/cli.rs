use artin_tcp::cli::{AutJson, CheckGraphJson, ExtensionJson, OrbitJson, TcpJson, ThickenJson, WpJson};
use serde::de::DeserializeOwned;
use serde::Serialize;
use std::process::Command;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(graph: &str, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_artin-tcp")).arg("--graph").arg(data(graph)).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn round_trip<T: Serialize + DeserializeOwned>(text: &str) {
    let parsed: T = serde_json::from_str(text).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", text);
}

#[test]
fn check_graph_examples() {
    let (code, out, _) = run("triangle6.json", &["check-graph"]);
    assert_eq!((code, out.lines().next().unwrap()), (0, "eligible: XXXL-route"));
    let (code, out, _) = run("edge4.json", &["check-graph"]);
    assert_eq!((code, out.lines().next().unwrap()), (3, "ineligible: even edge"));
    let (code, out, _) = run("path.json", &["check-graph"]);
    assert_eq!((code, out.lines().next().unwrap()), (3, "ineligible: cut vertex b"));
    let (_, out, _) = run("path.json", &["--json", "check-graph"]);
    round_trip::<CheckGraphJson>(&out);
}

#[test]
fn tcp_examples() {
    let (code, out, _) = run("triangle3.json", &["tcp", "--phi", "inv=1", "--u", "a", "--v", ""]);
    assert_eq!((code, out.as_str()), (3, "NO certificate=abelianization\n"));
    let (code, out, _) = run("triangle3.json", &["tcp", "--u", "a b", "--v", "b a"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("YES witness="));
    let (code, _, err) = run("edge3.json", &["tcp", "--u", "s", "--v", "t"]);
    assert_eq!(code, 1);
    assert!(err.contains("valence-1"));
    let (code, out, _) = run("edge3.json", &["--assume-out-generated", "--json", "--trace", "tcp", "--u", "s", "--v", "t"]);
    assert_eq!(code, 0);
    round_trip::<TcpJson>(&out);
    let j: TcpJson = serde_json::from_str(&out).unwrap();
    assert!(j.trace.is_some());
}

#[test]
fn unknown_exit_code() {
    // true instance, but only the empty witness may be tried
    let (code, out, _) = run("triangle3.json", &["--candidates", "1", "tcp", "--u", "c a b a^-1 c^-1", "--v", "b"]);
    assert_eq!((code, out.as_str()), (4, "UNKNOWN\n"));
    assert_eq!(run("triangle3.json", &["tcp", "--u", "c a b a^-1 c^-1", "--v", "b"]).0, 0);
}

#[test]
fn wp_examples() {
    assert_eq!(run("edge3.json", &["wp", "--u", "s t s", "--v", "t s t"]).0, 0);
    assert_eq!(run("edge3.json", &["wp", "--u", "s t", "--v", "t s"]).0, 3);
    let (_, out, _) = run("triangle3.json", &["--json", "--trace", "wp", "--u", "a b a c", "--v", "b a b c"]);
    round_trip::<WpJson>(&out);
}

#[test]
fn orbit_aut_extension() {
    let (code, out, _) = run("triangle3.json", &["--json", "orbit", "--u", "a", "--v", "c^-1"]);
    assert_eq!(code, 0);
    round_trip::<OrbitJson>(&out);
    let (code, out, _) = run("triangle3.json", &["--json", "aut"]);
    assert_eq!(code, 0);
    round_trip::<AutJson>(&out);
    let j: AutJson = serde_json::from_str(&out).unwrap();
    assert_eq!(j.classes.len(), 12);
    let (_, out, _) = run("edge3.json", &["aut"]);
    assert!(out.contains("need not exhaust"));
    let (code, out, _) = run("edge3.json", &["--json", "extension", "--phi", "inv=1", "--finite-order"]);
    assert_eq!(code, 0);
    round_trip::<ExtensionJson>(&out);
    let j: ExtensionJson = serde_json::from_str(&out).unwrap();
    assert_eq!(j.relations, vec!["s t s = t s t", "x^2 = 1", "x s x^-1 = s^-1", "x t x^-1 = t^-1"]);
}

#[test]
fn thicken_examples() {
    let (code, out, _) = run("edge3.json", &["thicken", "--radius", "3", "--check-links"]);
    assert_eq!(code, 0);
    assert!(out.contains("links: 1 checked, 0 failing"));
    let (code, out, _) =
        run("edge3.json", &["--json", "thicken", "--radius", "3", "--check-links", "--automorphism", "perm=s->t,t->s; inv=1"]);
    assert_eq!(code, 0);
    round_trip::<ThickenJson>(&out);
    let path = std::env::temp_dir().join(format!("artin-tcp-patch-{}.json", std::process::id()));
    let (code, _, _) = run("edge3.json", &["thicken", "--radius", "2", "--export", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(artin_tcp::thickening::Patch::from_json(&text).unwrap().to_json(), text);
}

#[test]
fn errors_and_usage() {
    assert_eq!(run("edge3.json", &["wp", "--u", "s q", "--v", ""]).0, 1);
    assert_eq!(run("missing.json", &["check-graph"]).0, 1);
    assert_eq!(run("edge3.json", &["frobnicate"]).0, 2);
    assert_eq!(run("edge3.json", &["--nodes", "0", "wp", "--u", "", "--v", ""]).0, 2);
    assert_eq!(run("edge3.json", &["aut", "--power", "2"]).0, 2);
}
