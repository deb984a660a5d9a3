use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arindex")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn es_values_and_exit_codes() {
    let o = run(&["es", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ES(5) = 13"));
    let o = run(&["es", "7", "--budget", "300s"]);
    assert!(stdout(&o).starts_with("ES(7) = 44"));
    let o = run(&["es", "12", "--budget", "1s"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("ES(12) in ["));
}

#[test]
fn dss_subcommands() {
    let o = run(&["dss", "check", "3", "5", "6", "7"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "DSS"));
    let o = run(&["dss", "check", "1", "2", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("{1, 2} and {3}"));
    let o = run(&["dss", "enum", "--size", "5", "--cap", "13"]);
    assert!(stdout(&o).starts_with("2 sets"));
    let o = run(&["dss", "enum", "--size", "4", "--cap", "7"]);
    assert_eq!(stdout(&o).trim(), "1 sets\n{3, 5, 6, 7}");
    let o = run(&["dss", "check", "0", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_fixtures() {
    let p4 = fixture("p4.graph.json");
    let o = run(&[
        "verify",
        p4.to_str().unwrap(),
        fixture("p4.labels.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let star = fixture("star3.graph.json");
    let o = run(&[
        "verify",
        star.to_str().unwrap(),
        fixture("star3.labels.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "verify",
        star.to_str().unwrap(),
        fixture("star3_collision.labels.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violated"));
    let o = run(&[
        "verify",
        p4.to_str().unwrap(),
        fixture("p4_short.labels.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ari_reports() {
    let o = run(&["ari", "star", "4"]);
    assert!(stdout(&o).starts_with("ARI(star 4) = 7"));
    let o = run(&["ari", "complete", "5"]);
    let text = stdout(&o);
    assert!(
        text.starts_with("ARI(complete 5) = 10") && text.contains("AR-graph: yes"),
        "{text}"
    );
    let o = run(&["ari", "bistar", "3", "3"]);
    let text = stdout(&o);
    assert!(
        text.starts_with("ARI(bistar 3 3) = 8") && text.contains("almost AR"),
        "{text}"
    );
    let o = run(&["ari", "hexagon", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["ari"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ari_witness_file_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.json");
    let o = run(&["ari", "multipartite", "2,2,2", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let graph = dir.path().join("g.json");
    arindex::graph::save_graph(
        &"multipartite 2,2,2"
            .parse::<arindex::graph::Family>()
            .unwrap()
            .build()
            .unwrap(),
        &graph,
    )
    .unwrap();
    let o = run(&["verify", graph.to_str().unwrap(), out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn ari_from_graph_file_and_machine_output() {
    let o = run(&[
        "ari",
        "--graph",
        fixture("star3.graph.json").to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "exact");
    assert_eq!(v["upper"], 4);
}

#[test]
fn budget_exhaustion_exit_code() {
    let o = run(&["ari", "bipartite", "6", "6", "--budget", "1ms"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("budget exhausted"));
}

#[test]
fn constructions() {
    let o = run(&["wheel", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("W_8: maximum label 44"));
    let o = run(&["cover", "3", "5"]);
    assert_eq!(stdout(&o).trim(), "no cover");
    let dir = tempfile::tempdir().unwrap();
    let (g, l) = (dir.path().join("h.json"), dir.path().join("l.json"));
    let o = run(&[
        "embed",
        "star",
        "3",
        "--graph-output",
        g.to_str().unwrap(),
        "--output",
        l.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", g.to_str().unwrap(), l.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}
