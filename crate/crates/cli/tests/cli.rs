use std::io::Write;
use std::sync::Arc;

use clap::Parser;
use heart_cli::config::Cli;
use heart_cli::{main_with_args, verify_universe, Outcome, EXIT_FAILED, EXIT_INCOMPLETE, EXIT_INPUT, EXIT_OK, EXIT_RESOURCE};
use heart_core::algebra::parse_algebra;
use heart_core::universe::{Caps, IndecUniverse};

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}.quiver", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Outcome {
    main_with_args(std::iter::once("heart-simples").chain(args.iter().copied()))
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn indec_lists_the_a2_universe() {
    let out = run(&["indec", &fixture("a2")]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    for name in ["S(1)", "S(2)", "P(1)"] {
        assert!(out.stdout.contains(name), "{}", out.stdout);
    }
}

#[test]
fn heart_report_for_the_a2_example() {
    let out = run(&["heart", &fixture("a2"), "--gen", "S(1)"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let text = &out.stdout;
    assert!(text.contains("S(2) ⊕ P(1)"), "{text}");
    assert!(text.contains("P(1)^2"), "{text}");
    assert!(text.contains("S(1)[-1]"), "{text}");

    let json = run(&["heart", &fixture("a2"), "--gen", "S(1)", "--format", "json"]);
    assert_eq!(json.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["classification"]["critical"], serde_json::json!(["P(1)"]));
    assert_eq!(v["classification"]["special"], serde_json::json!(["S(2)"]));
}

#[test]
fn generators_by_index_and_dimension_vector() {
    let by_name = run(&["heart", &fixture("a2"), "--gen", "S(1)", "--format", "json"]);
    let by_dims = run(&["heart", &fixture("a2"), "--gen", "1,0", "--format", "json"]);
    assert_eq!(by_name, by_dims);
    let by_index = run(&["heart", &fixture("a2"), "--gen", "0", "--format", "json"]);
    assert_eq!(by_name, by_index);
    assert_eq!(run(&["heart", &fixture("a2"), "--gen", "Q(7)"]).code, EXIT_INPUT);
}

#[test]
fn non_cotilting_pair_exits_with_failure() {
    let out = run(&["heart", &fixture("a2"), "--gen", "S(2)"]);
    assert_eq!(out.code, EXIT_FAILED);
    assert!(format!("{}{}", out.stdout, out.stderr).contains("not cotilting"));
}

#[test]
fn incomplete_universe_is_reported() {
    let out = run(&["indec", &fixture("d4"), "--dim-bound", "1"]);
    assert_eq!(out.code, EXIT_INCOMPLETE);
    assert!(format!("{}{}", out.stdout, out.stderr).contains("outside the universe"));
    assert_eq!(run(&["tors", &fixture("d4"), "--dim-bound", "1"]).code, EXIT_INCOMPLETE);
}

#[test]
fn input_errors_exit_with_one() {
    assert_eq!(run(&["indec", "/nonexistent/file.quiver"]).code, EXIT_INPUT);
    assert_eq!(run(&["indec", &fixture("a2"), "--format", "dot"]).code, EXIT_INPUT);
    assert_eq!(run(&["indec", &fixture("a2"), "--field", "4"]).code, EXIT_INPUT);
    assert_eq!(run(&["indec", &fixture("a2"), "--dim-bound", "1,2,3"]).code, EXIT_INPUT);
    assert_eq!(run(&["frobnicate"]).code, EXIT_INPUT);
    let bad = temp_file("vertices 1 2\narrow a: 1 -> 3\n");
    let out = run(&["indec", bad.path().to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
}

#[test]
fn resource_caps_exit_with_two() {
    assert_eq!(run(&["indec", &fixture("a2"), "--dim-bound", "9"]).code, EXIT_RESOURCE);
    let out = run(&["verify", &fixture("a2"), "--oracle", "--cap-submodule-dim", "1"]);
    assert_eq!(out.code, EXIT_RESOURCE);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(run(&["--help"]).code, EXIT_OK);
    assert_eq!(run(&["--version"]).code, EXIT_OK);
}

#[test]
fn tors_outputs() {
    let out = run(&["tors", &fixture("a3"), "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["classes"].as_array().unwrap().len(), 14);

    let dot = run(&["tors", &fixture("a2"), "--format", "dot"]).stdout;
    assert!(dot.starts_with("digraph tors {"));
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(dot.matches("[label=\"{").count(), 5);
    assert_eq!(dot.matches(" -> ").count(), 5);
}

#[test]
fn single_vertex_algebra() {
    let f = temp_file("field 3\nvertices x\n");
    let out = run(&["indec", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["universe"].as_array().unwrap().len(), 1);
    assert_eq!(run(&["verify", f.path().to_str().unwrap()]).code, EXIT_OK);
}

#[test]
fn verify_passes_on_fixtures_and_is_deterministic() {
    for name in ["a1", "a2", "a3"] {
        let first = run(&["verify", &fixture(name)]);
        assert_eq!(first.code, EXIT_OK, "{name}: {}", first.stdout);
        assert_eq!(first, run(&["verify", &fixture(name)]));
    }
}

#[test]
fn corrupted_tables_are_caught() {
    let text = std::fs::read_to_string(fixture("a3")).unwrap();
    let alg = Arc::new(parse_algebra(&text).unwrap());
    let good = IndecUniverse::enumerate(&alg, &[2, 2, 2], &Caps::default()).unwrap();
    let mut hom = good.hom_table().to_vec();
    hom[0][1] += 1;
    let bad = IndecUniverse::from_parts(&alg, vec![2; 3], Caps::default(), good.modules().to_vec(), Some(hom), None)
        .unwrap();
    let opts = Cli::try_parse_from(["heart-simples", "verify", "x"]).unwrap().options;
    let out = match verify_universe(bad, &opts) {
        Ok(o) | Err(o) => o,
    };
    assert_eq!(out.code, EXIT_FAILED);
    assert!(out.stdout.contains("FAIL"), "{}", out.stdout);
    assert!(out.stdout.contains("Hom"), "{}", out.stdout);
}

#[test]
fn empty_generator_list_gives_the_module_category() {
    let out = run(&["heart", &fixture("a2"), "--format", "json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let simples: Vec<&str> = v["heartSimples"].as_array().unwrap().iter().map(|s| s["module"].as_str().unwrap()).collect();
    assert_eq!(simples, ["S(1)", "S(2)"]);
}

#[test]
fn one_vertex_lattice_is_a_chain() {
    let dot = run(&["tors", &fixture("a1"), "--format", "dot"]).stdout;
    assert_eq!(dot.matches("[label=\"{").count(), 2);
    assert_eq!(dot.matches(" -> ").count(), 1);
}
