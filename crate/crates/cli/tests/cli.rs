use std::io::Write;
use std::process::Command as Process;

use qta_cli::catalog::{self, side_of, CATALOG};
use qta_cli::document::Frac;
use qta_cli::{parse, print, run, CliError, Command, Report, Settings, Verdict};
use qta_core::scalar::frac;

const MINIMAL: &str = r#"{
  "field": "rational",
  "spaces": {"A": {"dim": 1}, "Aprime": {"dim": 0}},
  "components": {"pi": [[["1/1"]]]}
}"#;

fn qta(args: &[&str], env: Option<(&str, &str)>) -> (i32, String, String) {
    let mut cmd = Process::new(env!("CARGO_BIN_EXE_qta"));
    cmd.args(args).env_remove("QTA_MAX_DEGREE");
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn temp_doc(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn with_entry(text: &str, from: &str, to: &str) -> String {
    text.replacen(from, to, 1)
}

#[test]
fn minimal_document_parses() {
    let doc = parse(MINIMAL).unwrap();
    assert_eq!(doc.components["pi"][0][0][0], Frac(frac(1, 1)));
    let q = doc.algebra().unwrap();
    assert_eq!(q.split().a, 1);
}

#[test]
fn fractions_are_normalized() {
    let doc = parse(&with_entry(MINIMAL, "\"1/1\"", "\"2/4\"")).unwrap();
    assert_eq!(doc.components["pi"][0][0][0], Frac(frac(1, 2)));
    assert!(print(&doc).contains("\"1/2\""));
}

#[test]
fn diagnostics_name_the_offending_path() {
    let err = parse("{ not json").unwrap_err();
    assert!(matches!(err, CliError::Parse(_)), "{err}");

    let err = parse(&with_entry(MINIMAL, "\"1/1\"", "\"1/0\"")).unwrap_err();
    match err {
        CliError::Value { path, .. } => assert_eq!(path, "components.pi[0][0][0]"),
        other => panic!("{other}"),
    }

    let err = parse(&with_entry(MINIMAL, "\"field\"", "\"colour\": 1, \"field\"")).unwrap_err();
    assert!(matches!(err, CliError::Schema { .. }), "{err}");

    let bad_map = with_entry(
        MINIMAL,
        "\"components\"",
        r#""maps": {"M": {"from": "A", "to": "A", "matrix": [["1/1", "0/1"], ["0/1", "1/1"]]}}, "components""#,
    );
    match parse(&bad_map).unwrap_err() {
        CliError::Schema { path, .. } => assert_eq!(path, "maps.M.matrix"),
        other => panic!("{other}"),
    }

    let err = parse(&with_entry(MINIMAL, "\"rational\"", "\"real\"")).unwrap_err();
    assert!(matches!(err, CliError::Schema { ref path, .. } if path == "field"));
    let err = parse(&with_entry(MINIMAL, "\"pi\"", "\"omega\"")).unwrap_err();
    assert!(matches!(err, CliError::Schema { ref path, .. } if path == "components.omega"));
}

#[test]
fn builder_references_are_checked() {
    let mut doc = catalog::example("reynolds-dim1").unwrap();
    doc.builder.as_mut().unwrap().cocycle = Some("product".into());
    assert!(matches!(doc.check(), Err(CliError::Schema { ref path, .. }) if path == "builder.cocycle"));

    let mut doc = catalog::example("semidirect-regular-dim1").unwrap();
    doc.builder.as_mut().unwrap().left = Some("missing".into());
    assert!(matches!(doc.check(), Err(CliError::Schema { ref path, .. }) if path == "builder.left"));

    let mut doc = catalog::example("semidirect-regular-dim1").unwrap();
    doc.builder.as_mut().unwrap().left = Some("right".into());
    assert!(matches!(doc.check(), Err(CliError::Schema { ref path, .. }) if path == "tables.right"));

    let mut doc = catalog::example("modified-lambda4-dim1").unwrap();
    doc.builder.as_mut().unwrap().lambda = None;
    assert!(matches!(doc.check(), Err(CliError::Schema { ref path, .. }) if path == "builder.lambda"));
}

#[test]
fn catalog_round_trips_and_validates() {
    for e in CATALOG {
        let doc = e.document();
        assert_eq!(parse(&print(&doc)).unwrap(), doc, "{}", e.name);
        let report = run(&Command::Validate { file: "-".into() }, &doc, &Settings::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "{}", e.name);
        assert_eq!(report.checks.len(), 18);
        for (name, m) in &doc.maps {
            let cmd = Command::Mc { map: name.clone(), side: side_of(m), file: "-".into() };
            let r = run(&cmd, &doc, &Settings::default()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{} {name}", e.name);
        }
    }
}

#[test]
fn components_documents_reproduce_builders() {
    for e in CATALOG {
        let doc = e.document();
        let q = doc.algebra().unwrap();
        let mut flat = qta_cli::Document::from_algebra(&q);
        for (name, m) in &doc.maps {
            flat.insert_map(name, &doc.map(name, side_of(m)).unwrap()).unwrap();
        }
        let back = parse(&print(&flat)).unwrap();
        assert_eq!(back.algebra().unwrap(), q.clone().forget_provenance());
        assert_eq!(back.maps, doc.maps);
    }
}

#[test]
fn documented_examples() {
    let doc = catalog::example("semidirect-regular-dim1").unwrap();
    let cmd =
        Command::Cohomology { map: "D".into(), side: qta_core::Side::Right, max_degree: Some(2), file: "-".into() };
    let report = run(&cmd, &doc, &Settings::default()).unwrap();
    let dims: Vec<usize> = report.cohomology.as_ref().unwrap().rows.iter().map(|r| r.dim).collect();
    assert_eq!(dims, vec![1, 0, 0]);
    assert!(report.to_text().contains("H0"));

    let doc = catalog::example("reynolds-dim1").unwrap();
    let cmd = Command::Classify { map: "B".into(), side: qta_core::Side::Left, file: "-".into() };
    let report = run(&cmd, &doc, &Settings::default()).unwrap();
    assert_eq!(report.outputs["classification"], qta_cli::report::Output::Text("Reynolds operator".into()));
}

#[test]
fn reports_round_trip() {
    for e in CATALOG {
        let doc = e.document();
        for (name, m) in &doc.maps {
            let side = side_of(m);
            for cmd in [
                Command::Twist { map: name.clone(), side, file: "-".into() },
                Command::Cohomology { map: name.clone(), side, max_degree: Some(1), file: "-".into() },
            ] {
                let report = run(&cmd, &doc, &Settings::default()).unwrap();
                assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
            }
        }
    }
}

#[test]
fn degree_cap_from_environment() {
    assert_eq!(Settings::from_env_value(None).unwrap().degree_cap, 3);
    assert_eq!(Settings::from_env_value(Some("5")).unwrap().degree_cap, 5);
    assert!(Settings::from_env_value(Some("6")).is_err());
    assert!(Settings::from_env_value(Some("x")).is_err());
}

#[test]
fn exit_statuses() {
    let (code, out, _) = qta(&["example", "reynolds-dim1"], None);
    assert_eq!(code, 0);
    let good = temp_doc(&out);
    let path = good.path().to_str().unwrap();
    assert_eq!(qta(&["validate", path], None).0, 0);
    assert_eq!(qta(&["classify", "--map", "B", "--side", "left", path], None).0, 0);
    assert_eq!(qta(&["jacobi", "--side", "left", "--arity", "2", "--samples", "2", path], None).0, 0);

    // B = 1 is not a Reynolds operator on e·e = e
    let off = temp_doc(&out.replacen("\"-1/1\"", "\"1/1\"", 1));
    let off_path = off.path().to_str().unwrap();
    assert_eq!(qta(&["mc", "--map", "B", "--side", "left", off_path], None).0, 1);
    assert_eq!(qta(&["cohomology", "--map", "B", "--side", "left", off_path], None).0, 1);
    let (code, text, _) = qta(&["classify", "--map", "B", "--side", "left", off_path], None);
    assert_eq!(code, 1);
    assert!(text.contains("not a deformation map"));

    // a perturbed product is caught by validate
    let broken = temp_doc(
        r#"{"field": "rational", "spaces": {"A": {"dim": 1}, "Aprime": {"dim": 1}},
            "components": {"pi": [[["1/1"]]], "beta": [[["1/1"]]], "xi": [[["1/1"]]]}}"#,
    );
    assert_eq!(qta(&["validate", broken.path().to_str().unwrap()], None).0, 1);

    assert_eq!(qta(&["mc", "--map", "Z", "--side", "left", path], None).0, 2);
    assert_eq!(qta(&["mc", "--map", "B", "--side", "right", path], None).0, 2);
    assert_eq!(qta(&["example", "no-such-example"], None).0, 2);
    assert_eq!(qta(&["validate", "/no/such/file.json"], None).0, 2);
    assert_eq!(qta(&["cohomology", "--map", "B", "--side", "left", "--max-degree", "4", path], None).0, 2);
    assert_eq!(
        qta(&["cohomology", "--map", "B", "--side", "left", "--max-degree", "4", path], Some(("QTA_MAX_DEGREE", "4")))
            .0,
        0
    );
    assert_eq!(qta(&["cohomology", "--map", "B", "--side", "left", path], Some(("QTA_MAX_DEGREE", "7"))).0, 2);
    assert_eq!(qta(&["classify", "--map", "B", "--side", "up", path], None).0, 2);
    let malformed = temp_doc("{\"field\": ");
    assert_eq!(qta(&["validate", malformed.path().to_str().unwrap()], None).0, 2);
}

#[test]
fn json_mode_prints_only_the_report() {
    let (_, out, _) = qta(&["example", "semidirect-regular-dim1"], None);
    let f = temp_doc(&out);
    let (code, json, _) = qta(
        &["--json", "cohomology", "--map", "D", "--side", "right", "--max-degree", "2", f.path().to_str().unwrap()],
        None,
    );
    assert_eq!(code, 0);
    let report = Report::from_json(&json).unwrap();
    assert_eq!(report.command, "cohomology --map D --side right --max-degree 2");
    let (_, listing, _) = qta(&["example"], None);
    assert_eq!(listing.lines().count(), CATALOG.len());
}
