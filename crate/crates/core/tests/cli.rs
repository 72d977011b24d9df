use std::fs;
use std::process::Command;

use nervekit::certificate::Certificate;
use nervekit::corpus;
use nervekit::doc::{self, NerveDoc};
use nervekit::grothendieck::check_gr_relnerve_iso;
use nervekit::sset::{sset_iso, standard_simplex};

fn nervekit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nervekit")).args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn certificate(args: &[&str]) -> (i32, Certificate) {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let (code, stdout, stderr) = nervekit(&all);
    (code, Certificate::from_structured(&stdout).unwrap_or_else(|e| panic!("{e}: {stderr}")))
}

#[test]
fn gr_relnerve_example() {
    let (code, cert) = certificate(&["check", "gr-relnerve", "--diagram", "bz2_over_arrow", "--nmax", "2"]);
    assert_eq!(code, 0);
    let rows = &cert.tables[0].rows;
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert_eq!(row.values, vec![2, 6, 16], "{}", row.label);
    }
    assert_eq!(cert.inputs.len(), 1);
    assert_eq!(cert.inputs[0].name, "bz2_over_arrow");
}

#[test]
fn relative_nerve_of_constant_point_is_the_interval() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rel.json");
    let (code, stdout, _) = nervekit(&["relative-nerve", "--base", "arrow", "--diagram", "constant-point", "--cap", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("(2, 3, 4, 5)"), "{stdout}");
    let nerve: NerveDoc = doc::from_json("nerve", &fs::read_to_string(&path).unwrap()).unwrap();
    let x = doc::sset_from_doc(&nerve.sset).unwrap();
    assert!(sset_iso(&x, &standard_simplex(1, 3)).is_some());
    assert_eq!(nerve.data.iter().map(Vec::len).collect::<Vec<_>>(), x.counts());
}

#[test]
fn fibers_example() {
    let (code, cert) = certificate(&["check", "fibers", "--monoidal", "bz2", "--level", "2"]);
    assert_eq!(code, 0);
    assert!(cert.passed());
}

#[test]
fn opfibration_negatives_exit_one() {
    let (code, cert) = certificate(&["check", "opfibration", "--diagram", "point_to_arrow", "--arrow", "(•,0)->(b,1)"]);
    assert_eq!(code, 1);
    assert_eq!(
        cert.counterexample.as_deref(),
        Some("0<1:a<b : (•,0) -> (b,1): z = (a,1), dimension 0: 0 cells of E(target, z) against 1 in the pullback")
    );

    let (code, cert) = certificate(&["check", "opfibration", "--diagram", "opfibration_negative"]);
    assert_eq!(code, 1);
    assert!(cert.counterexample.unwrap().starts_with("e = (•,0), φ = 0<1"));

    let (code, _) = certificate(&["check", "opfibration", "--diagram", "point_to_arrow"]);
    assert_eq!(code, 0);
    let (code, _) = certificate(&["check", "opfibration", "--monoidal", "arrow_meet"]);
    assert_eq!(code, 0);
}

#[test]
fn quasicat_verdicts() {
    assert_eq!(certificate(&["check", "quasicat", "--fixture", "egroupoid", "--cap", "3"]).0, 0);
    assert_eq!(certificate(&["check", "quasicat", "--base", "square", "--cap", "3"]).0, 0);
    let (code, cert) = certificate(&["check", "quasicat", "--fixture", "interval", "--cap", "3"]);
    assert_eq!(code, 1);
    assert!(cert.counterexample.is_some());
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(nervekit(&["check", "opposites", "--monoidal", "left_zero"]).0, 2);
    assert_eq!(nervekit(&["check", "cotimes-gr", "--monoidal", "nonassociative"]).0, 2);
    assert_eq!(nervekit(&["nerve", "--base", "no_such_category"]).0, 2);
    assert_eq!(nervekit(&["nerve", "--base", "arrow", "--bogus", "1"]).0, 2);
    assert_eq!(nervekit(&["check", "fibers", "--monoidal", "bz2", "--level", "3"]).0, 2);
    assert_eq!(nervekit(&["check", "gr-relnerve", "--diagram", "bz2_over_arrow", "--nmax", "4"]).0, 2);
    assert_eq!(nervekit(&["check", "opfibration", "--diagram", "point_to_arrow", "--arrow", "(•,0)"]).0, 2);
    assert_eq!(nervekit(&["relative-nerve", "--base", "square", "--diagram", "bz2_over_arrow"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    fs::write(&broken, "{\"cap\": 1, \"objects\": []").unwrap();
    let (code, _, stderr) = nervekit(&["coherent-nerve", "--fixture", broken.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("malformed"), "{stderr}");
    let missing = dir.path().join("missing.json");
    assert_eq!(nervekit(&["coherent-nerve", "--fixture", missing.to_str().unwrap()]).0, 2);
}

#[test]
fn documents_are_accepted_as_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let scat = dir.path().join("egroupoid.json");
    fs::write(&scat, doc::to_json(&doc::scat_to_doc(&corpus::scat("egroupoid", 2).unwrap()))).unwrap();
    let (code, from_file, _) = nervekit(&["coherent-nerve", "--fixture", scat.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, from_name, _) = nervekit(&["coherent-nerve", "--fixture", "egroupoid"]);
    assert_eq!(from_file, from_name);
    // the document fixes the cap
    assert_eq!(nervekit(&["coherent-nerve", "--fixture", scat.to_str().unwrap(), "--cap", "3"]).0, 2);

    let diagram = dir.path().join("diagram.json");
    fs::write(&diagram, doc::to_json(&doc::diagram_to_doc(&corpus::diagram("point_to_arrow", 2).unwrap()))).unwrap();
    let (code, cert) = certificate(&["check", "gr-relnerve", "--diagram", diagram.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(cert.inputs[0].sha256.len(), 64);

    let monoidal = dir.path().join("bz2.json");
    fs::write(&monoidal, doc::to_json(&doc::monoidal_to_doc(&corpus::monoidal("bz2", 2).unwrap()))).unwrap();
    assert_eq!(certificate(&["check", "fibers", "--monoidal", monoidal.to_str().unwrap(), "--level", "2"]).0, 0);
}

#[test]
fn certificates_are_deterministic_and_written_out() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let args = ["check", "cotimes-gr", "--monoidal", "bz2", "--format", "structured", "--out", path.to_str().unwrap()];
    let (code, first, _) = nervekit(&args);
    assert_eq!(code, 0);
    assert_eq!(fs::read_to_string(&path).unwrap().trim_end(), first.trim_end());
    let (_, second, _) = nervekit(&args);
    let strip = |s: &str| {
        let mut c = Certificate::from_structured(s).unwrap();
        c.wall_clock_ms = 0;
        c
    };
    assert_eq!(strip(&first), strip(&second));

    let (code, text, _) = nervekit(&["check", "cotimes-gr", "--monoidal", "bz2"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("PASS"));
    assert!(text.contains("hom cells per dimension"));
}

#[test]
fn verdicts_match_the_library() {
    for name in ["bz2_over_arrow", "point_to_two_points"] {
        let lib = check_gr_relnerve_iso(&corpus::diagram(name, 2).unwrap(), 2).unwrap();
        let (code, cert) = certificate(&["check", "gr-relnerve", "--diagram", name]);
        assert_eq!(cert.passed(), lib.passed());
        assert_eq!(code == 0, lib.passed());
        assert_eq!(cert.checks.iter().map(|c| &c.name).collect::<Vec<_>>(), lib.checks.iter().map(|c| &c.name).collect::<Vec<_>>());
    }
}

#[test]
fn construction_outputs_parse() {
    for args in [
        vec!["nerve", "--base", "square"],
        vec!["coherent-nerve", "--fixture", "bz2"],
        vec!["operadic-nerve", "--monoidal", "bz2"],
    ] {
        let (code, stdout, stderr) = nervekit(&args);
        assert_eq!(code, 0, "{stderr}");
        let nerve: NerveDoc = doc::from_json("nerve", &stdout).unwrap();
        doc::sset_from_doc(&nerve.sset).unwrap();
    }
    let (code, stdout, _) = nervekit(&["grothendieck", "--diagram", "point_to_arrow"]);
    assert_eq!(code, 0);
    let gr: doc::FibrationDoc = doc::from_json("fibration", &stdout).unwrap();
    let total = doc::scat_from_doc(&gr.total).unwrap();
    let base = doc::scat_from_doc(&gr.base).unwrap();
    doc::functor_from_doc(&gr.projection, &total, &base).unwrap();
}
