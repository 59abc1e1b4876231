use std::process::{Command, Output};

use smflab_cli::{CollideData, ModuleData, PteData, Report, RootSystemData, TensorData};

fn smflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smflab"))
        .args(args)
        .env_remove("SMFLAB_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn reprint<T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug>(s: &str) -> T {
    let x: T = serde_json::from_str(s).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
    assert_eq!(again, x);
    x
}

#[test]
fn info_accepts_both_spellings() {
    let a = smflab(&["info", "C3", "--json"]);
    let b = smflab(&["info", "C", "3", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let d: RootSystemData = reprint(&stdout(&a));
    assert_eq!(d.positive_root_count, 9);
    assert!(stdout(&smflab(&["info", "A", "1"])).contains("[  2]"));
    assert!(stdout(&smflab(&["info", "G2"])).contains("positive roots: 6"));
}

#[test]
fn exit_codes() {
    assert_eq!(smflab(&["info", "Q", "3"]).status.code(), Some(2));
    assert_eq!(smflab(&["info", "D", "2"]).status.code(), Some(2));
    assert_eq!(smflab(&["module", "A3", "1,0"]).status.code(), Some(2));
    assert_eq!(smflab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(smflab(&["module", "A3", "9,9,9"]).status.code(), Some(3));
    assert_eq!(smflab(&["module", "A3", "2,2,2", "--cap", "100"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_smflab"))
        .args(["module", "A3", "2,2,2"])
        .env("SMFLAB_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn module_examples() {
    let m: ModuleData = reprint(&stdout(&smflab(&["module", "E7", "0,0,0,0,0,0,1", "--json"])));
    assert_eq!((m.dim, m.height.to_string(), m.strongly_multiplicity_free), (56, "27/2".into(), false));
    let t = stdout(&smflab(&["module", "A", "3", "0,1,0"]));
    assert!(t.contains("SMF false") && t.contains("sl2 decomposition {4,0}"), "{t}");
}

#[test]
fn verify_theorem_small_ranks() {
    let o = smflab(&["verify-theorem", "--rank-max", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = reprint(&stdout(&o));
    let mut types: Vec<String> = r.entries.iter().map(|e| e.lie_type.to_string()).collect();
    types.dedup();
    assert_eq!(types, ["A1", "A2", "B2", "G2"]);
    assert_eq!(r.flagged, 1);
}

#[test]
fn other_commands_round_trip() {
    let c: CollideData = reprint(&stdout(&smflab(&["collide", "C3", "0,0,1", "--json"])));
    assert!(c.evidence.is_collision() && c.verification.unwrap().ok);
    let t: TensorData = reprint(&stdout(&smflab(&[
        "tensor", "C3", "0,0,1", "1,2,0", "--rule", "c3omega3", "--json",
    ])));
    assert!(t.conserves_dimension);
    let p: PteData = reprint(&stdout(&smflab(&["pte", "family", "-3", "--json"])));
    assert!(matches!(p, PteData::Family { s: -3, .. }));
    let s = stdout(&smflab(&["pte", "search", "--size", "3", "--bound", "6"]));
    assert!(s.contains("[6, 2, 1] / [5, 4, 0]"), "{s}");
    let x = stdout(&smflab(&["casimir", "B2", "1/2,0", "--json"]));
    assert!(x.contains("\"value\""));
    let m = smflab(&["mspectrum", "A1", "1", "2", "--seed", "3"]);
    assert_eq!(m.status.code(), Some(0));
    assert!(stdout(&m).contains("matches true; distinct true"));
    assert_eq!(smflab(&["tensor", "A2", "1,0", "1,0", "--rule", "bogus"]).status.code(), Some(2));
}

#[test]
fn fuzz_seeds_decode() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fuzz/corpus/decode_json");
    let read = |f: &str| std::fs::read_to_string(format!("{dir}/{f}")).unwrap();
    let r: Report = reprint(&read("report_rank2.json"));
    assert!(r.consistent);
    let e: smflab::collisions::Evidence = reprint(&read("c3_certificate.json"));
    let smflab::collisions::Evidence::Collision(c) = e else { panic!() };
    assert!(smflab::collisions::verify_certificate(&c).ok);
    let _: smflab::collisions::Evidence = reprint(&read("g2_distinct.json"));
    let _: PteData = reprint(&read("pte_search.json"));
    assert!(serde_json::from_str::<smflab::Weight>(&read("bad_denominator.json")).is_err());
}
