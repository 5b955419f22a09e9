use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use rackcoh::structures::{parse_structure, Structure};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

fn rackcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rackcoh")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn point_rack_degree_three() {
    let path = fixture("point");
    let out = rackcoh(&["cohomology", "--structure", path.to_str().unwrap(), "--degree", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["betti"], 1);
    assert_eq!(v["torsion"], serde_json::json!([]));
}

#[test]
fn cohomology_text_and_matrices() {
    let out = rackcoh(&["cohomology", "--structure", "conj-s3", "--degree", "1", "--format", "text"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "HR^1(Conj(S3) [rack]; Z) = Z^3");
    let out = rackcoh(&["cohomology", "--structure", "z2", "--degree", "2", "--coeff", "Z", "--matrices"]);
    let v = json(&out);
    // H²(Z/2, Z) = Z/2
    assert_eq!(v["torsion"], serde_json::json!([2]));
    assert_eq!(v["matrices"]["d_out"].as_array().unwrap().len(), 8);
    assert_eq!(v["matrices"]["d_in"].as_array().unwrap().len(), 4);
}

#[test]
fn bar_and_cubical_group_complexes() {
    let h1 = |complex: &str| {
        let out = rackcoh(&["cohomology", "--structure", "z3", "--degree", "1", "--coeff", "Z/3", "--complex", complex]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let v = json(&out);
        assert_eq!(v["complex"], complex);
        v["torsion"].clone()
    };
    // Hom(Z/3, Z/3) against functions constant on the three classes of Conj(Z/3)
    assert_eq!(h1("group"), serde_json::json!([3]));
    assert_eq!(h1("cubical"), serde_json::json!([3, 3, 3]));
    assert_eq!(h1("rack"), h1("cubical"));
}

#[test]
fn non_square_table_exits_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"kind":"rack","size":2,"table":[[0,1],[1]]}"#).unwrap();
    let out = rackcoh(&["cohomology", "--structure", path.to_str().unwrap(), "--degree", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("row 1"), "{}", stderr(&out));
}

#[test]
fn syntax_errors_and_axiom_violations_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\n  \"kind\": \"rack\",\n  \"size\": 2,\n  \"table\": [[0, 1], [0, 1]\n}\n").unwrap();
    let out = rackcoh(&["nerve-check", "--structure", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 5"), "{}", stderr(&out));

    let not_rack = dir.path().join("not_rack.json");
    std::fs::write(&not_rack, r#"{"kind":"rack","size":2,"table":[[1,0],[0,0]]}"#).unwrap();
    let out = rackcoh(&["nerve-check", "--structure", not_rack.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("distributiv"), "{}", stderr(&out));

    let out = rackcoh(&["cohomology", "--structure", "no-such-thing", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = rackcoh(&["cohomology", "--structure", "point", "--degree", "1", "--coeff", "Q"]);
    assert_eq!(out.status.code(), Some(2));
    let out = rackcoh(&["cohomology", "--structure", "dihedral3", "--degree", "1", "--complex", "pointed"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shipped_fixture_files_match_the_library() {
    for name in rackcoh::fixtures::FIXTURE_NAMES {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let from_file = parse_structure(&text).unwrap();
        let from_lib = rackcoh::fixtures::by_name(name).unwrap();
        match (from_file, from_lib) {
            (Structure::Rack { rack: a, .. }, Structure::Rack { rack: b, .. }) => {
                assert_eq!(a.table(), b.table());
                assert_eq!(a.unit(), b.unit());
            }
            (Structure::Group(a), Structure::Group(b)) => assert_eq!(a.table(), b.table()),
            _ => panic!("{name}: kinds differ"),
        }
    }
}

#[test]
fn shuffle_listing() {
    let out = rackcoh(&["shuffle", "--p1", "2", "--p2", "2", "--class", "top-fixed"]);
    let v = json(&out);
    assert_eq!(v["count"], 3);
    let out = rackcoh(&["shuffle", "--p1", "1", "--p2", "2", "--format", "text"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "+1 [1 2 3]\n-1 [2 1 3]\n+1 [3 1 2]\n");
}

#[test]
fn products_check_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("r{k}.json"));
        let out = rackcoh(&[
            "products-check", "--structure", "s3", "--coeff", "mat2/Z", "--max-degree", "3", "--trials", "3", "--seed", "9",
            "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        reports.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let v: Value = serde_json::from_slice(&reports[0]).unwrap();
    let identities: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["identity"].as_str().unwrap()).collect();
    assert_eq!(identities, ["dendriform", "star-associativity", "leibniz", "cup-leibniz"]);

    let out = rackcoh(&["products-check", "--structure", "dihedral3", "--coeff", "Z/5", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out)["sampling"]["mode"], "exhaustive");
}

#[test]
fn morphism_check_reports_injectivity() {
    let out = rackcoh(&["morphism-check", "--group", "s3", "--coeff", "Z/2", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    let h = &v["injectivity"][0];
    assert_eq!((h["dim_group_h1"].as_u64(), h["dim_rack_hr1"].as_u64(), h["rank"].as_u64()), (Some(1), Some(3), Some(1)));
    assert_eq!(v["chain_map"].as_array().unwrap().len(), 2);
    let out = rackcoh(&["morphism-check", "--group", "conj-s3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nerve_check_counts() {
    let out = rackcoh(&["nerve-check", "--structure", "dihedral3", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    let counts: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|d| d["trunk_maps"].as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 3, 9]);
}

#[test]
fn thread_cap_from_environment() {
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_rackcoh"))
            .args(["shuffle", "--p1", "1", "--p2", "1"])
            .env("RACKCOH_THREADS", v)
            .output()
            .unwrap()
    };
    assert_eq!(run("1").status.code(), Some(0));
    assert_eq!(run("many").status.code(), Some(2));
}
