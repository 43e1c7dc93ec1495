use std::path::Path;
use std::process::{Command, Output};

use convdom::convexity::{convex_hull, is_convex, is_isometric};
use convdom::generators::{cycle, make_a1, make_bn, path, star};
use convdom::graph::{is_dominating, parse_edge_list, to_edge_list};
use convdom::record::{without_timing, SCHEMA};
use convdom::{Graph, VertexSet};
use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_convdom"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn record(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "one record per run: {text}");
    let v: Value = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    v
}

fn write(dir: &Path, name: &str, g: &Graph) {
    std::fs::write(dir.join(name), to_edge_list(g, &[])).unwrap();
}

fn set_of(g: &Graph, v: &Value) -> VertexSet {
    VertexSet::from_vertices(
        g.n(),
        v.as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as usize),
    )
}

#[test]
fn solve_examples() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "p6.elist", &path(6));
    write(dir.path(), "c7.elist", &cycle(7));

    let out = run(dir.path(), &["solve", "convex", "p6.elist"]);
    assert_eq!(out.status.code(), Some(0));
    let r = record(&out)["result"].clone();
    assert_eq!(r["value"], 4);
    assert_eq!(r["seed"], serde_json::json!([1, 4]));
    assert_eq!(r["certificate"]["class"], "verified");
    let w = set_of(&path(6), &r["witness"]);
    assert!(is_dominating(&path(6), &w).unwrap() && is_convex(&path(6), &w));
    assert!(!out.stderr.is_empty());

    let out = run(dir.path(), &["solve", "isometric", "p6.elist"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(record(&out)["result"]["value"], 4);

    let out = run(dir.path(), &["solve", "convex", "c7.elist"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(record(&out)["error"]["kind"], "wrong_class");
    let out = run(dir.path(), &["solve", "isometric", "c7.elist"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(
        dir.path(),
        &["solve", "convex", "c7.elist", "--trust-class"],
    );
    // outside the class the hull of three spread vertices is all of C7, which is still a CD-set
    assert_eq!(out.status.code(), Some(0));
    let r = record(&out)["result"].clone();
    assert_eq!(
        (r["value"].clone(), r["certificate"]["class"].clone()),
        (7.into(), "assumed".into())
    );
}

#[test]
fn trust_class_marks_certificates_assumed() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "p6.elist", &path(6));
    let out = run(
        dir.path(),
        &["solve", "convex", "p6.elist", "--trust-class"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(record(&out)["result"]["certificate"]["class"], "assumed");
}

#[test]
fn recognize_examples() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a1.elist", &make_a1());
    write(dir.path(), "b1.elist", &make_bn(1).unwrap());
    write(dir.path(), "k5.elist", &convdom::generators::complete(5));

    let r = record(&run(dir.path(), &["recognize", "a1.elist"]))["result"].clone();
    assert_eq!(r["chordal"]["verdict"], "chordal");
    assert_eq!(r["chordal_dp"]["verdict"], "forbidden");
    assert_eq!(r["chordal_dp"]["witness"]["family"], "A1");

    let r = record(&run(dir.path(), &["recognize", "b1.elist"]))["result"].clone();
    assert_eq!(r["chordal_dp"]["witness"]["family"], "B1");

    let r = record(&run(dir.path(), &["recognize", "k5.elist"]))["result"].clone();
    assert_eq!(r["chordal"]["verdict"], "chordal");
    assert_eq!(r["weak_dp"], true);
    assert_eq!(r["chordal_dp"]["verdict"], "member");
    assert_eq!(
        (
            r["dominating_pair"]["x"].clone(),
            r["dominating_pair"]["y"].clone()
        ),
        (0.into(), 0.into())
    );
}

#[test]
fn oracle_and_guards() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "p4.elist", &path(4));
    let out = run(dir.path(), &["oracle", "convex", "p4.elist"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(record(&out)["result"]["value"], 2);
    assert_eq!(
        record(&run(dir.path(), &["oracle", "plain", "p4.elist"]))["result"]["value"],
        2
    );
    assert_eq!(
        record(&run(dir.path(), &["oracle", "isometric", "p4.elist"]))["result"]["value"],
        2
    );

    write(dir.path(), "a1.elist", &make_a1());
    let r = record(&run(dir.path(), &["oracle", "dp", "a1.elist"]))["result"].clone();
    assert_eq!(r["dp_graph"], false);

    let out = run(
        dir.path(),
        &["oracle", "convex", "p4.elist", "--oracle-bound", "3"],
    );
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(record(&out)["error"]["kind"], "size_guard");

    write(dir.path(), "p30.elist", &path(30));
    let out = run(
        dir.path(),
        &["solve", "isometric", "p30.elist", "--path-cap", "3"],
    );
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(record(&out)["error"]["kind"], "resource_exhausted");
}

#[test]
fn parse_errors_exit_one_with_position() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.elist"), "3 2\n0 1\n1 9\n").unwrap();
    let out = run(dir.path(), &["solve", "convex", "bad.elist"]);
    assert_eq!(out.status.code(), Some(1));
    let e = record(&out)["error"].clone();
    assert_eq!(e["kind"], "parse");
    assert_eq!(e["detail"]["line"], 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn usage_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["solve"]).status.code(), Some(4));
    assert_eq!(run(dir.path(), &["frobnicate"]).status.code(), Some(4));
    assert_eq!(run(dir.path(), &["--help"]).status.code(), Some(0));
    let out = run(dir.path(), &["recognize", "missing.elist"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(record(&out)["error"]["kind"], "io");
}

#[test]
fn gadget_command() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "k13split.elist", &star(3));
    let out = run(dir.path(), &["gadget", "k13split.elist", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = record(&out)["result"].clone();
    assert_eq!(r["report"]["holds"], true);
    assert_eq!(r["report"]["gadget_value"], 2);
    let text = std::fs::read_to_string(dir.path().join("k13split.gadget.elist")).unwrap();
    assert!(text.starts_with("# x=4 y=5 y'=6\n"));
    let g = parse_edge_list(&text).unwrap();
    assert_eq!(g.n(), 7);

    write(dir.path(), "c5.elist", &cycle(5));
    assert_eq!(
        run(dir.path(), &["gadget", "c5.elist", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn generate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["generate", "--family", "Bn", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("Bn-n2.elist")).unwrap();
    let g = parse_edge_list(&text).unwrap();
    assert_eq!(g.n(), 7);

    for family in [
        "path",
        "cycle",
        "star",
        "complete",
        "A1",
        "Bn",
        "random_chordal",
        "random_split",
        "random_interval",
        "random_connected",
    ] {
        let out = run(
            dir.path(),
            &[
                "generate",
                "--family",
                family,
                "--n",
                "7",
                "--seed",
                "42",
                "--density",
                "0.3",
                "--output",
                "f.elist",
            ],
        );
        assert_eq!(out.status.code(), Some(0), "{family}");
        let text = std::fs::read_to_string(dir.path().join("f.elist")).unwrap();
        let comments: Vec<String> = text
            .lines()
            .take_while(|l| l.starts_with('#'))
            .map(|l| l.trim_start_matches("# ").to_string())
            .collect();
        let g = parse_edge_list(&text).unwrap();
        assert_eq!(to_edge_list(&g, &comments), text, "{family}");
    }
    let out = run(dir.path(), &["generate", "--family", "Bn", "--n", "0"]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(
        dir.path(),
        &["generate", "--family", "nonsense", "--n", "3"],
    );
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn records_do_not_depend_on_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let g = convdom::generators::random_interval(11, 7, 0.25);
    write(dir.path(), "g.elist", &g);
    for args in [
        vec!["solve", "convex", "g.elist"],
        vec!["solve", "isometric", "g.elist"],
        vec!["oracle", "convex", "g.elist"],
        vec!["oracle", "isometric", "g.elist"],
        vec!["recognize", "g.elist"],
    ] {
        let base = without_timing(
            String::from_utf8(run(dir.path(), &args).stdout)
                .unwrap()
                .trim_end(),
        )
        .unwrap();
        for jobs in ["2", "4"] {
            let mut a = args.clone();
            a.extend(["--jobs", jobs]);
            let other = without_timing(
                String::from_utf8(run(dir.path(), &a).stdout)
                    .unwrap()
                    .trim_end(),
            )
            .unwrap();
            assert_eq!(base, other, "{args:?} --jobs {jobs}");
        }
    }
}

#[test]
fn record_witnesses_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let g = convdom::generators::random_interval(10, 3, 0.3);
    write(dir.path(), "g.elist", &g);
    for (kind, convex) in [("convex", true), ("isometric", false)] {
        let r = record(&run(dir.path(), &["solve", kind, "g.elist"]))["result"].clone();
        let w = set_of(&g, &r["witness"]);
        assert!(is_dominating(&g, &w).unwrap());
        assert!(if convex {
            is_convex(&g, &w)
        } else {
            is_isometric(&g, &w)
        });
        if convex {
            let seed = set_of(&g, &r["seed"]);
            assert_eq!(convex_hull(&g, &seed).unwrap().hull(), &w);
        }
    }
}
