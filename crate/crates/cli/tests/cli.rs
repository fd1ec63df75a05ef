use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use injcolor_core::corpus::random_families;
use injcolor_core::graph::build_named;
use injcolor_core::io::graph_from_json;

fn injcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_injcolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn gen_writes_a_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c7.json");
    let res = injcolor(&["gen", "--family", "cycle", "--n", "7", "-o", path_str(&out)]);
    assert_eq!(res.status.code(), Some(0));
    let g = graph_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (7, 7));
}

#[test]
fn gen_round_trips_random_families() {
    let dir = tempfile::tempdir().unwrap();
    for (i, family) in random_families(99, 20, 12).into_iter().enumerate() {
        let injcolor_core::graph::GraphFamily::RandomGnp { n, p, seed } = family else {
            unreachable!()
        };
        let out = dir.path().join(format!("g{i}.json"));
        let res = injcolor(&[
            "gen",
            "--family",
            "random-gnp",
            "--n",
            &n.to_string(),
            "--p",
            &p.to_string(),
            "--seed",
            &seed.to_string(),
            "-o",
            path_str(&out),
        ]);
        assert_eq!(res.status.code(), Some(0));
        let parsed = graph_from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(parsed, build_named(&family).unwrap());
    }
    for seed in [0u64, 1, 17] {
        let res = injcolor(&[
            "gen",
            "--family",
            "random-tree",
            "--n",
            "9",
            "--seed",
            &seed.to_string(),
        ]);
        let tree = graph_from_json(&stdout(&res)).unwrap();
        assert_eq!(
            tree,
            build_named(&injcolor_core::graph::GraphFamily::RandomTree { n: 9, seed }).unwrap()
        );
    }
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "c4.json",
        r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#,
    );
    let good = write(dir.path(), "good.json", r#"{"colors":[1,1,2,2]}"#);
    let bad = write(dir.path(), "bad.json", r#"{"colors":[1,2,1,2]}"#);
    let res = injcolor(&[
        "verify",
        "--mode",
        "injective",
        path_str(&g),
        path_str(&good),
    ]);
    assert_eq!(res.status.code(), Some(0));
    assert_eq!(stdout(&res).trim(), "valid");
    let res = injcolor(&[
        "verify",
        "--mode",
        "injective",
        path_str(&g),
        path_str(&bad),
    ]);
    assert_eq!(res.status.code(), Some(1));
    assert!(stdout(&res).contains("vertex 0 has neighbors 1 and 3"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write(dir.path(), "dup.json", r#"{"n":3,"edges":[[0,1],[0,1]]}"#);
    let cases: Vec<Vec<&str>> = vec![
        vec![],
        vec!["frobnicate"],
        vec!["gen", "--family", "cycle"],
        vec!["gen", "--family", "cycle", "--n", "2"],
        vec!["chromatic", "--mode", "injective", "/nonexistent/g.json"],
        vec!["chromatic", "--mode", "rainbow", path_str(&dup)],
        vec!["chromatic", "--mode", "proper", path_str(&dup)],
        vec!["pattern", "--name", "E"],
        vec!["pattern", "five", "--k", "2", "--n", "8"],
        vec!["formula", "direct-cycles", "--m", "2", "--n", "5"],
    ];
    for args in cases {
        assert_eq!(injcolor(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    for i in 0..5 {
        edges.extend([(5 + i, (i + 1) % 5), (5 + i, (i + 4) % 5), (5 + i, 10)]);
    }
    let grotzsch = injcolor_core::graph::Graph::from_edges(11, &edges).unwrap();
    let g = write(
        dir.path(),
        "g.json",
        &injcolor_core::io::graph_to_json(&grotzsch, None),
    );
    let res = injcolor(&[
        "chromatic",
        "--mode",
        "proper",
        path_str(&g),
        "--budget",
        "0",
    ]);
    assert_eq!(res.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&res.stderr).contains("budget"));
    let res = injcolor(&["chromatic", "--mode", "proper", path_str(&g)]);
    assert_eq!(stdout(&res).trim(), "4");
}

#[test]
fn help_exits_0() {
    assert_eq!(injcolor(&["--help"]).status.code(), Some(0));
    assert_eq!(injcolor(&["pattern", "--help"]).status.code(), Some(0));
}

#[test]
fn formula_direct_cycles_prints_value_and_trace() {
    let res = injcolor(&["formula", "direct-cycles", "--m", "6", "--n", "5"]);
    assert_eq!(res.status.code(), Some(0));
    let text = stdout(&res);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("8"));
    assert!(lines.count() >= 3);
    let res = injcolor(&["formula", "sylvester", "--r", "4", "--s", "5", "--t", "11"]);
    assert_eq!(stdout(&res).lines().next(), Some("false"));
    let res = injcolor(&["formula", "sylvester", "--r", "4", "--s", "5", "--t", "13"]);
    assert_eq!(stdout(&res).lines().next(), Some("true"));
}

#[test]
fn product_transform_chromatic_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = dir.path().join("c6.json");
    let c5 = dir.path().join("c5.json");
    let p = dir.path().join("p.json");
    let t = dir.path().join("t.json");
    let w = dir.path().join("w.json");
    injcolor(&["gen", "--family", "cycle", "--n", "6", "-o", path_str(&c6)]);
    injcolor(&[
        "gen",
        "--family",
        "cycle",
        "--n",
        "5",
        "--format",
        "edge-list",
        "-o",
        path_str(&c5),
    ]);
    let res = injcolor(&[
        "product",
        "--kind",
        "direct",
        path_str(&c6),
        path_str(&c5),
        "-o",
        path_str(&p),
    ]);
    assert_eq!(res.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(doc["codec"]["kind"], "direct");
    assert_eq!(doc["codec"]["orders"], serde_json::json!([6, 5]));

    let res = injcolor(&[
        "chromatic",
        "--mode",
        "injective",
        path_str(&p),
        "--witness",
        path_str(&w),
    ]);
    assert_eq!(stdout(&res).trim(), "8");
    let res = injcolor(&["verify", "--mode", "injective", path_str(&p), path_str(&w)]);
    assert_eq!(res.status.code(), Some(0));

    injcolor(&[
        "transform",
        "--mode",
        "two-step",
        path_str(&p),
        "-o",
        path_str(&t),
    ]);
    let res = injcolor(&["chromatic", "--mode", "proper", path_str(&t)]);
    assert_eq!(stdout(&res).trim(), "8");
}

#[test]
fn packing_and_patterns() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(
        dir.path(),
        "c4.json",
        r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#,
    );
    let res = injcolor(&[
        "packing",
        "--mode",
        "open",
        "--op",
        "partition",
        path_str(&c4),
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&res)).unwrap();
    assert_eq!(doc["classes"], serde_json::json!([[0, 1], [2, 3]]));

    let res = injcolor(&["pattern", "--name", "A"]);
    let grid: serde_json::Value = serde_json::from_str(&stdout(&res)).unwrap();
    assert_eq!(grid["cells"][0], serde_json::json!([1, 2, 3, 4, 5]));

    let grid = dir.path().join("grid.json");
    let res = injcolor(&[
        "pattern",
        "five",
        "--k",
        "3",
        "--n",
        "9",
        "-o",
        path_str(&grid),
    ]);
    assert_eq!(res.status.code(), Some(0));
    let parsed =
        injcolor_core::io::grid_from_json(&std::fs::read_to_string(&grid).unwrap()).unwrap();
    assert!(parsed.verify().unwrap());

    let coloring = dir.path().join("coloring.json");
    let g = dir.path().join("g.json");
    let res = injcolor(&[
        "pattern",
        "direct-cycles",
        "--m",
        "10",
        "--n",
        "14",
        "--emit",
        path_str(&coloring),
        "--graph",
        path_str(&g),
    ]);
    assert_eq!(stdout(&res).trim(), "5");
    let res = injcolor(&[
        "verify",
        "--mode",
        "injective",
        path_str(&g),
        path_str(&coloring),
    ]);
    assert_eq!(res.status.code(), Some(0));

    let res = injcolor(&[
        "export-dot",
        path_str(&c4),
        "--coloring",
        path_str(&write(dir.path(), "c.json", r#"{"colors":[1,1,2,2]}"#)),
    ]);
    assert!(stdout(&res).starts_with("graph G {"));
}

#[test]
fn acceptance_fault_injection_exits_1() {
    let res = injcolor(&[
        "acceptance",
        "--level",
        "quick",
        "--only",
        "9",
        "--corrupt-pattern-a",
    ]);
    assert_eq!(res.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&res)).unwrap();
    assert_eq!(report["overall"], "fail");
    let res = injcolor(&["acceptance", "--level", "quick", "--only", "5,9"]);
    assert_eq!(res.status.code(), Some(0));
}
