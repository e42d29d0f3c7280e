use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use subdepth::depthmat::DepthReport;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("subdepth-cli-{}-{name}", std::process::id()))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subdepth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Connected components of the bipartite graph in a DOT file, as (white, black) counts.
fn components(dot: &str) -> Vec<(usize, usize)> {
    let graph = dot.split("digraph").next().unwrap();
    let mut nodes: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for line in graph.lines().map(str::trim) {
        if let Some((a, b)) = line.strip_suffix(';').and_then(|l| l.split_once(" -- ")) {
            edges.push((a.to_string(), b.to_string()));
        } else if let Some((n, _)) = line.split_once(" [label") {
            nodes.push(n.to_string());
        }
    }
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            p[x] = find(p, p[x]);
        }
        p[x]
    }
    let idx = |n: &str| nodes.iter().position(|x| x == n).unwrap();
    for (a, b) in &edges {
        let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
        parent[ra] = rb;
    }
    let mut comps: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
    for (i, n) in nodes.iter().enumerate() {
        let e = comps.entry(find(&mut parent, i)).or_default();
        if n.starts_with('w') {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
    let mut out: Vec<_> = comps.into_values().collect();
    out.sort();
    out
}

#[test]
fn group_pair_report() {
    let v = json_of(&run(&[
        "depth",
        "group",
        path(&data("s3.json")),
        "--format",
        "json",
    ]));
    assert_eq!(v["depth"]["d_0"], 3);
    assert_eq!(v["depth"]["d_h"], 5);
    assert_eq!(v["hecke"]["dim"], 2);
    assert_eq!(v["mackey_restriction"].as_array().unwrap().len(), 2);
}

#[test]
fn matrix_only_report() {
    let v = json_of(&run(&[
        "depth",
        "matrix",
        path(&data("d8_s4_matrix.json")),
        "--format",
        "json",
    ]));
    assert_eq!(v["d_0"], 4);
    assert_eq!(v["d_h"], 5);
    assert!(v["group"].is_null());
}

#[test]
fn bare_matrix_is_accepted() {
    let f = scratch("bare.json");
    std::fs::write(&f, "[[1, 0], [0, 1]]").unwrap();
    let dot = scratch("bare.dot");
    let out = run(&["depth", "matrix", path(&f), "--dot", path(&dot)]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(components(&text), vec![(1, 1), (1, 1)]);
}

#[test]
fn json_artifact_round_trips() {
    let f = scratch("s4.json");
    let out = run(&[
        "depth",
        "group",
        path(&data("s4.json")),
        "--subgroup",
        "D8",
        "--json",
        path(&f),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    let report: DepthReport = serde_json::from_value(v["depth"].clone()).unwrap();
    report.validate().unwrap();
    assert_eq!(report.d_h.finite(), Some(5));
}

#[test]
fn dot_shapes() {
    let s3 = scratch("s3.dot");
    assert!(
        run(&["depth", "group", path(&data("s3.json")), "--dot", path(&s3)])
            .status
            .success()
    );
    let text = std::fs::read_to_string(&s3).unwrap();
    assert_eq!(components(&text), vec![(2, 3)]);
    let graph = text.split("digraph").next().unwrap();
    assert_eq!(graph.matches(" -- ").count(), 4);
    assert_eq!(graph.matches("fillcolor=white").count(), 2);

    let d8 = scratch("d8.dot");
    assert!(run(&[
        "depth",
        "matrix",
        path(&data("d8_s4_matrix.json")),
        "--dot",
        path(&d8)
    ])
    .status
    .success());
    let text = std::fs::read_to_string(&d8).unwrap();
    assert_eq!(components(&text), vec![(2, 3), (3, 2)]);
}

#[test]
fn hopf_pair_dimensions() {
    let v = json_of(&run(&[
        "hopf",
        path(&data("eight_dim.json")),
        "--format",
        "json",
    ]));
    assert_eq!(v["subalgebra"], "R");
    assert_eq!(v["dim_q"], 2);
    assert_eq!(v["trace_ideals"][0], 3);
    assert_eq!(v["dim_t"], 7);
    assert_eq!(v["dim_end_q"], 1);
    assert_eq!(v["normal"], false);
}

#[test]
fn mackey_and_hecke() {
    let v = json_of(&run(&[
        "mackey",
        path(&data("s4.json")),
        "--subgroup",
        "D8",
        "--power",
        "3",
        "--format",
        "json",
    ]));
    assert_eq!(v["dimension"], 27);
    assert_eq!(v["character_matches"], true);
    let v = json_of(&run(&["hecke", path(&data("a5.json")), "--format", "json"]));
    assert_eq!(v["indices"], serde_json::json!([1, 4]));
}

#[test]
fn chartab_import() {
    let t = scratch("s4-table.json");
    assert!(
        run(&["chartab", path(&data("s4.json")), "--json", path(&t)])
            .status
            .success()
    );
    assert!(
        run(&["chartab", path(&data("s4.json")), "--import", path(&t)])
            .status
            .success()
    );
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&t).unwrap()).unwrap();
    v["irreducibles"][1][1] = Value::String("7".into());
    std::fs::write(&t, v.to_string()).unwrap();
    let out = run(&["chartab", path(&data("s4.json")), "--import", path(&t)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_is_deterministic() {
    let a = run(&[
        "sweep",
        "--max-order",
        "8",
        "--conjecture",
        "--format",
        "json",
    ]);
    let b = run(&[
        "sweep",
        "--max-order",
        "8",
        "--conjecture",
        "--format",
        "json",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json_of(&a);
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn sweep_with_extra_groups() {
    let f = scratch("extra.json");
    std::fs::write(
        &f,
        r#"[{"name": "A5", "degree": 5, "generators": [[2,3,1,4,5],[1,2,4,5,3]]}]"#,
    )
    .unwrap();
    let v = json_of(&run(&[
        "sweep",
        "--max-order",
        "2",
        "--extra",
        path(&f),
        "--format",
        "json",
    ]));
    let rows = v["rows"].as_array().unwrap();
    assert!(rows
        .iter()
        .any(|r| r["group"] == "A5" && r["subgroup_order"] == 12));
}

#[test]
fn exit_codes() {
    let f = scratch("bad-group.json");
    std::fs::write(&f, r#"{"degree": 3, "generators": [[1, 2]]}"#).unwrap();
    let out = run(&["depth", "group", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("generators[0]"));

    std::fs::write(&f, "{\"degree\": 3,\n \"generators\": [[1, 2, 3]\n").unwrap();
    let out = run(&["depth", "group", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let m = scratch("zero-column.json");
    std::fs::write(&m, r#"{"m": [[1, 0], [1, 0]]}"#).unwrap();
    assert_ne!(run(&["depth", "matrix", path(&m)]).status.code(), Some(0));

    let out = run(&[
        "depth",
        "group",
        path(&data("a5.json")),
        "--cap-order",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));

    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
