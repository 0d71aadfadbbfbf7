//! Exit-code contract and output checks for the batch front end.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn gammafuzz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammafuzz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn validate_fixtures_exit_zero() {
    for name in ["maxmin2.json", "trunc3.json", "null2.json", "trivial1.json"] {
        let out = gammafuzz(&["validate", fixture(name).to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{name}: {}", stderr(&out));
        assert!(stdout(&out).contains("valid"));
    }
}

#[test]
fn validate_exit_codes_for_bad_input() {
    let dir = tempfile::tempdir().unwrap();

    // unparseable JSON -> 2
    let garbled = dir.path().join("garbled.json");
    std::fs::write(&garbled, "{ not json").unwrap();
    let out = gammafuzz(&["validate", garbled.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    // table entry out of range -> 2 with a shape message
    let text = std::fs::read_to_string(fixture("maxmin2.json")).unwrap();
    let shape_broken = dir.path().join("shape.json");
    std::fs::write(
        &shape_broken,
        text.replace("[[0, 1], [1, 1]]", "[[0, 9], [1, 1]]"),
    )
    .unwrap();
    let out = gammafuzz(&["validate", shape_broken.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("out of range"));

    // well-shaped but lawless tables -> 1 with a violation listing
    let axiom_broken = dir.path().join("axioms.json");
    std::fs::write(
        &axiom_broken,
        std::fs::read_to_string(fixture("trunc3.json"))
            .unwrap()
            .replace(
                "[[0, 1, 2], [1, 2, 2], [2, 2, 2]]",
                "[[0, 1, 2], [1, 0, 2], [2, 2, 2]]",
            ),
    )
    .unwrap();
    let out = gammafuzz(&["validate", axiom_broken.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));
    assert!(stdout(&out).contains("violation"));

    // missing file -> 2
    let out = gammafuzz(&["validate", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn op_examples() {
    let path = fixture("maxmin2.json");
    let path = path.to_str().unwrap();

    // theta ⊕ mu = mu
    let out = gammafuzz(&["op", path, "sum", "theta", "mu"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("[1,1/2]\n"));

    let out = gammafuzz(&["op", path, "compose", "[1,1/2]", "[1,1/3]"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("[1,1/3]\n"));

    let out = gammafuzz(&["op", path, "meet", "one", "nu"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("[1,1/3]\n"));

    // wrong arity subset literal -> 2
    let out = gammafuzz(&["op", path, "prod", "[1,1/2,0]", "[1,1/3]"]);
    assert_eq!(code(&out), 2);

    // unknown name -> 2
    let out = gammafuzz(&["op", path, "sum", "theta", "missing"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown subset"));
}

#[test]
fn check_ideal_codes() {
    let path = fixture("maxmin2.json");
    let path = path.to_str().unwrap();
    assert_eq!(code(&gammafuzz(&["check-ideal", path, "mu"])), 0);
    assert_eq!(code(&gammafuzz(&["check-ideal", path, "[1/2,1]"])), 1);
    assert_eq!(code(&gammafuzz(&["check-ideal", path, "[0,0]"])), 1);
    assert_eq!(code(&gammafuzz(&["check-ideal", path, "nonsense"])), 2);
}

#[test]
fn enumerate_lists_and_budget() {
    let path = fixture("maxmin2.json");
    let path = path.to_str().unwrap();
    let out = gammafuzz(&[
        "enumerate",
        path,
        "--chain",
        "0,1/2,1",
        "--kind",
        "two-sided",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("3 fuzzy two-sided ideal(s)"));
    assert!(text.contains("[1,1/2]"));

    // budget exhaustion reports the candidate count and exits 2
    let out = gammafuzz(&["enumerate", path, "--chain", "0,1/2,1", "--budget", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("budget exceeded"));
    assert!(stderr(&out).contains('3'));

    // the env default is honored when no flag is given
    let out = Command::new(env!("CARGO_BIN_EXE_gammafuzz"))
        .args(["enumerate", path, "--chain", "0,1/2,1"])
        .env("GAMMAFUZZ_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn enumerate_without_zero_convention() {
    // lifting mu(0) = 1 admits every nonempty left ideal: over {0,1/2,1}
    // on maxmin2 that is the five pairs with mu(0) >= mu(1), not three
    let path = fixture("maxmin2.json");
    let out = gammafuzz(&[
        "enumerate",
        path.to_str().unwrap(),
        "--kind",
        "left",
        "--no-zero-convention",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("5 fuzzy left ideal(s)"));
    assert!(stdout(&out).contains("[1/2,0]"));
}

#[test]
fn enumerate_uses_default_chain() {
    let path = fixture("null2.json");
    let out = gammafuzz(&["enumerate", path.to_str().unwrap(), "--kind", "left"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("2 fuzzy left ideal(s) over {0,1}"));
}

#[test]
fn verify_exit_codes() {
    let path = fixture("maxmin2.json");
    let path = path.to_str().unwrap();
    let out = gammafuzz(&["verify", path, "--chain", "0,1/2,1", "--laws", "all"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("63 pass, 0 fail, 0 not applicable"));

    let out = gammafuzz(&["verify", path, "--laws", "prop-9.9"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown law"));
}

#[test]
fn verify_json_document_is_well_formed() {
    let path = fixture("null2.json");
    let out = gammafuzz(&["verify", path.to_str().unwrap(), "--laws", "all", "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["fixture"], "null2");
    assert_eq!(doc["chain"], serde_json::json!(["0", "1"]));

    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 63);
    let by_outcome = |o: &str| reports.iter().filter(|r| r["outcome"] == o).count() as u64;
    assert_eq!(doc["summary"]["pass"].as_u64().unwrap(), by_outcome("pass"));
    assert_eq!(doc["summary"]["fail"].as_u64().unwrap(), 0);
    assert_eq!(
        doc["summary"]["not_applicable"].as_u64().unwrap(),
        by_outcome("not-applicable")
    );

    // gated reports carry a reason, kinded reports carry their kind
    let gated = reports
        .iter()
        .find(|r| r["law_id"] == "prop-3.10.iv-left")
        .unwrap();
    assert_eq!(gated["outcome"], "not-applicable");
    assert!(gated["not_applicable_reason"]
        .as_str()
        .unwrap()
        .contains("unity"));
    assert_eq!(gated["universe"]["kind"], "left");
}

#[test]
fn regular_exit_codes() {
    let out = gammafuzz(&["regular", fixture("maxmin2.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("regular"));

    let out = gammafuzz(&["regular", fixture("null2.json").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not regular; witness element 1"));
}

#[test]
fn fixtures_round_trip_byte_identically() {
    for name in ["maxmin2.json", "trunc3.json", "null2.json", "trivial1.json"] {
        let original = std::fs::read_to_string(fixture(name)).unwrap();
        let doc = gammafuzz::doc::StructureDoc::parse(&original).unwrap();
        let emitted = doc.to_canonical_json();
        assert_eq!(original, emitted, "{name} is not in canonical form");
        let reparsed = gammafuzz::doc::StructureDoc::parse(&emitted).unwrap();
        assert_eq!(doc, reparsed);
        assert_eq!(emitted, reparsed.to_canonical_json());
    }
}

#[test]
fn fixtures_match_builtin_samples() {
    use gammafuzz::samples;
    let pairs = [
        ("maxmin2.json", samples::maxmin2()),
        ("trunc3.json", samples::trunc3()),
        ("null2.json", samples::null2()),
        ("trivial1.json", samples::trivial1()),
    ];
    for (name, sample) in pairs {
        let loaded = gammafuzz::doc::load_structure(fixture(name)).unwrap();
        assert_eq!(*loaded.structure, *sample, "{name}");
    }
}

#[test]
fn fixtures_advertised_properties_hold() {
    use gammafuzz::Side;

    // maxmin2: regular, commutative, strong unities (1, γ)
    let maxmin2 = gammafuzz::doc::load_structure(fixture("maxmin2.json")).unwrap();
    let g = &maxmin2.structure;
    assert!(g.is_multiplicatively_regular().is_regular());
    assert!(g.is_commutative());
    for side in [Side::Left, Side::Right] {
        let u = g.verified_unity(side).expect("unity verified");
        assert!(u.is_strong());
    }

    // trunc3: regular, commutative, truncated arithmetic on {0,1,2}
    let trunc3 = gammafuzz::doc::load_structure(fixture("trunc3.json")).unwrap();
    assert!(trunc3.structure.is_multiplicatively_regular().is_regular());
    assert!(trunc3.structure.is_commutative());

    // null2: not regular, no unity
    let null2 = gammafuzz::doc::load_structure(fixture("null2.json")).unwrap();
    assert!(!null2.structure.is_multiplicatively_regular().is_regular());
    assert!(null2.structure.unities().is_empty());

    // trivial1: one element
    let trivial1 = gammafuzz::doc::load_structure(fixture("trivial1.json")).unwrap();
    assert_eq!(trivial1.structure.s_size(), 1);
}
