//! Black-box checks of the binary: exit codes, stream separation, and that
//! emitted files parse back into the objects they describe.

use std::path::PathBuf;
use std::process::Command;

use oseq::constructions::{delta_t, fano, gamma_t, schubert, uniform, WeightVector};
use oseq::io;

fn exe() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_oseq"));
    c.env_remove("OSEQ_MAX_CANDIDATES");
    c
}

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let out = exe().args(args).output().expect("binary should spawn");
    (
        out.status.code(),
        String::from_utf8(out.stdout).expect("stdout should be utf-8"),
        String::from_utf8(out.stderr).expect("stderr should be utf-8"),
    )
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

/// Five parallel classes over a rank-3 simplification with eight class
/// facets; class 5 glues onto the four-class complete head.
const FIVE_CLASS: &str = "n=10\nweights 2 1 3 2 2\nfacet 1 2 3\nfacet 1 2 4\n\
facet 1 3 4\nfacet 2 3 4\nfacet 1 3 5\nfacet 1 4 5\nfacet 2 3 5\nfacet 2 4 5\n";

#[test]
fn hvector_reports_both_sides() {
    let (code, fano_text, _) = run(&["construct", "fano"]);
    assert_eq!(code, Some(0));
    let path = scratch("fano.txt", &fano_text);
    let (code, out, _) = run(&["hvector", path.to_str().unwrap(), "--cover"]);
    assert_eq!(code, Some(0));
    assert!(out.contains("f: 1 7 21 28"));
    assert!(out.contains("h: 1 4 10 13"));
    assert!(out.contains("cover-h: 1 3 6 10 8"));

    let (code, out, _) =
        run(&["hvector", path.to_str().unwrap(), "--cover", "--format", "json"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["f"], serde_json::json!([1, 7, 21, 28]));
    assert_eq!(v["h"], serde_json::json!([1, 4, 10, 13]));
    assert_eq!(v["cover_h"], serde_json::json!([1, 3, 6, 10, 8]));
}

#[test]
fn constructions_round_trip_through_their_files() {
    let cases: &[(&[&str], fn() -> oseq::matroid::Matroid)] = &[
        (&["construct", "fano"], || fano()),
        (&["construct", "uniform", "3", "6"], || uniform(3, 6).unwrap()),
        (&["construct", "schubert", "6", "2,4,6"], || schubert(6, &[2, 4, 6]).unwrap()),
        (&["construct", "delta-t", "3", "4", "2,1,3,2", "1"], || {
            delta_t(3, 4, &WeightVector::new(vec![2, 1, 3, 2]).unwrap(), 1).unwrap()
        }),
    ];
    for (i, (args, build)) in cases.iter().enumerate() {
        for format in ["text", "json"] {
            let mut full: Vec<&str> = args.to_vec();
            full.extend(["--format", format]);
            let (code, out, _) = run(&full);
            assert_eq!(code, Some(0), "{args:?} --format {format}");
            let parsed = io::parse_matroid(&out).unwrap();
            assert_eq!(parsed, build(), "case {i} --format {format}");
        }
    }

    let want = gamma_t(3, 4, &WeightVector::new(vec![2, 1, 3, 2]).unwrap(), 1).unwrap();
    for format in ["text", "json"] {
        let (code, out, _) =
            run(&["construct", "gamma-t", "3", "4", "2,1,3,2", "1", "--format", format]);
        assert_eq!(code, Some(0));
        assert_eq!(io::parse_order_ideal(&out).unwrap(), want);
    }
}

#[test]
fn enumerate_streams_results_and_diagnostics_separately() {
    let (code, out, err) = run(&["enumerate", "--vars", "2", "--socle-degree", "2", "--type", "1"]);
    assert_eq!(code, Some(0));
    assert_eq!(out, "1 1 1\n1 2 1\n");
    assert!(err.contains("socle candidates visited: 3"));
    assert!(err.contains("distinct f-vectors: 2"));
}

#[test]
fn enumerate_ranges_partition_the_space() {
    let full: Vec<String> = {
        let (code, out, _) =
            run(&["enumerate", "--vars", "3", "--socle-degree", "3", "--type", "2"]);
        assert_eq!(code, Some(0));
        out.lines().map(str::to_string).collect()
    };
    let mut merged: Vec<String> = Vec::new();
    for range in ["0..20", "20..45"] {
        let (code, out, _) = run(&[
            "enumerate",
            "--vars",
            "3",
            "--socle-degree",
            "3",
            "--type",
            "2",
            "--range",
            range,
        ]);
        assert_eq!(code, Some(0));
        merged.extend(out.lines().map(str::to_string));
    }
    merged.sort();
    merged.dedup();
    assert_eq!(merged, full);

    let (code, _, err) = run(&[
        "enumerate",
        "--vars",
        "2",
        "--socle-degree",
        "2",
        "--type",
        "1",
        "--range",
        "0..99",
    ]);
    assert_eq!(code, Some(2));
    assert!(err.contains("invalid for a space of 3 candidates"));
}

#[test]
fn check_realizes_the_five_class_example() {
    let path = scratch("five.txt", FIVE_CLASS);
    let (code, out, err) = run(&["check", path.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert!(err.contains("realized under class ordering 1,2,3,4,5"));
    let ideal = io::parse_order_ideal(&out).unwrap();
    assert_eq!(ideal.num_vars(), 3);
    assert_eq!(ideal.generators().len(), 4);
    assert!(ideal.is_pure());
    assert_eq!(ideal.socle_degree(), Some(7));
}

#[test]
fn check_reports_infeasible_orderings_without_claiming_proof() {
    let path = scratch("five-ord.txt", FIVE_CLASS);
    let (code, out, err) =
        run(&["check", path.to_str().unwrap(), "--order", "5,2,1,3,4"]);
    assert_eq!(code, Some(1));
    assert!(out.is_empty());
    assert!(err.contains("1 infeasible"));
    assert!(err.contains("does not prove impossibility"));
}

#[test]
fn check_enumerate_method_and_candidate_cap() {
    let (code, text, _) = run(&["construct", "uniform", "2", "4"]);
    assert_eq!(code, Some(0));
    let path = scratch("u24.txt", &text);
    let (code, out, _) = run(&["check", path.to_str().unwrap(), "--method", "enumerate"]);
    assert_eq!(code, Some(0));
    let ideal = io::parse_order_ideal(&out).unwrap();
    assert_eq!(ideal.f_vector().counts(), &[1, 2, 3]);

    let out = exe()
        .args(["check", path.to_str().unwrap(), "--method", "enumerate"])
        .env("OSEQ_MAX_CANDIDATES", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("inconclusive: candidate limit reached"));
}

#[test]
fn filter_screens_and_exit_codes() {
    let (code, out, _) = run(&["filter", "--h", "1,3,6,5"]);
    assert_eq!(code, Some(0));
    assert!(out.contains("result: pass"));

    let (code, out, _) =
        run(&["filter", "--h", "1,2,3,5", "--classes", "5", "--rank", "3"]);
    assert_eq!(code, Some(0));
    assert!(out.contains("type-bound (classes=5, rank=3): last entry 5 vs minimum 3: pass"));

    let (code, out, _) = run(&["filter", "--h", "1,0,1"]);
    assert_eq!(code, Some(1));
    assert!(out.contains("half-symmetry: fail"));
    assert!(out.contains("result: fail"));

    let (code, _, err) = run(&["filter", "--h", "2,1"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("must start with 1"));

    // --classes without --rank is a usage error.
    let (code, _, _) = run(&["filter", "--h", "1,2,3", "--classes", "4"]);
    assert_eq!(code, Some(2));

    let (code, out, _) = run(&["filter", "--h", "1,3,6,5", "--format", "json"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["half_symmetry"], serde_json::json!(true));
    assert!(v["brown_colbourn"].as_array().unwrap().len() == 3);
}

#[test]
fn bad_inputs_exit_two() {
    let path = scratch("bad.txt", "n=zz\n");
    let (code, _, err) = run(&["hvector", path.to_str().unwrap()]);
    assert_eq!(code, Some(2));
    assert!(err.contains("parse error at line 1"));

    let (code, _, err) = run(&["hvector", "/nonexistent/input.txt"]);
    assert_eq!(code, Some(2));
    assert!(err.starts_with("error:"));

    let (code, _, err) =
        run(&["enumerate", "--vars", "2", "--socle-degree", "2", "--type", "1", "--jobs", "0"]);
    assert_eq!(code, Some(2));
    assert!(err.contains("--jobs must be at least 1"));
}

#[test]
fn json_and_text_forms_describe_the_same_matroid() {
    // Weighted families keep their class structure in both formats.
    let (code, text, _) = run(&["construct", "delta-t", "2", "5", "1,2,1,2,1", "0"]);
    assert_eq!(code, Some(0));
    let (code, json, _) =
        run(&["construct", "delta-t", "2", "5", "1,2,1,2,1", "0", "--format", "json"]);
    assert_eq!(code, Some(0));
    assert_eq!(io::parse_matroid(&text).unwrap(), io::parse_matroid(&json).unwrap());
    assert!(text.contains("weights 1 2 1 2 1"));
}
