use std::path::Path;
use std::process::{Command, Output};

fn fcc_trig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcc-trig")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(text.as_bytes()).records().map(Result::unwrap).collect()
}

fn column(path_or_text: &str, name: &str) -> Vec<f64> {
    let mut r = csv::Reader::from_reader(path_or_text.as_bytes());
    let idx = r.headers().unwrap().iter().position(|h| h == name).expect("column present");
    r.records().map(|rec| rec.unwrap()[idx].parse().unwrap()).collect()
}

#[test]
fn node_listings_have_the_documented_sizes() {
    let o = fcc_trig(&["nodes", "--set", "lambda", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(csv_rows(&stdout(&o)).len(), 10);

    let o = fcc_trig(&["nodes", "--set", "hstar", "--n", "1"]);
    assert_eq!(csv_rows(&stdout(&o)).len(), 15);

    for (set, n) in [("hstar", 3), ("lambda", 3), ("hn", 2)] {
        let o = fcc_trig(&["nodes", "--set", set, "--n", &n.to_string()]);
        let sum: f64 = column(&stdout(&o), "weight_f64").iter().sum();
        assert!((sum - 4.0 * f64::from(n).powi(3)).abs() < 1e-9, "{set}");
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "0"] {
        let path = dir.path().join(format!("interp-{threads}.json"));
        let o = Command::new(env!("CARGO_BIN_EXE_fcc-trig"))
            .env("FCC_TRIG_THREADS", threads)
            .args(["interpolate", "--n", "3", "--kind", "instar", "--f", "gauss", "--format", "json", "--out"])
            .arg(&path)
            .output()
            .unwrap();
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let parsed: serde_json::Value = serde_json::from_slice(&outputs[0]).unwrap();
    assert!(parsed.as_array().is_some_and(|a| !a.is_empty()));
}

#[test]
fn cubature_of_the_constant_exponential() {
    let o = fcc_trig(&["cubature", "--n", "2", "--f", "phi", "--k", "0,0,0,0"]);
    assert!(o.status.success());
    assert_eq!(column(&stdout(&o), "re"), vec![1.0]);

    let o = fcc_trig(&["cubature", "--n", "2", "--set", "lambda", "--f", "tc", "--k", "4,4,-4,-4"]);
    assert!(column(&stdout(&o), "re")[0].abs() < 1e-12);
}

#[test]
fn lebesgue_emits_one_row() {
    let o = fcc_trig(&["lebesgue", "--kind", "lnstar", "--n", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), "kind,n,grid,estimate,ratio_log3");
    let est = column(&text, "estimate")[0];
    let ratio = column(&text, "ratio_log3")[0];
    assert!(est >= 1.0);
    assert!((ratio - est / 4f64.ln().powi(3)).abs() < 1e-12);
}

#[test]
fn verify_passes() {
    for n in ["2", "4"] {
        let o = fcc_trig(&["verify", "--n", n]);
        assert!(o.status.success(), "{}", stdout(&o));
        assert!(csv_rows(&stdout(&o)).iter().all(|r| &r[1] == "PASS"));
    }
}

fn max_err(path: &Path) -> f64 {
    column(&std::fs::read_to_string(path).unwrap(), "abs_err").into_iter().fold(0.0, f64::max)
}

#[test]
fn interpolation_reproduces_through_files() {
    let dir = tempfile::tempdir().unwrap();

    let out = dir.path().join("one.csv");
    let o = fcc_trig(&["interpolate", "--kind", "lnstar", "--n", "3", "--f", "one", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(max_err(&out) < 1e-12);

    let out = dir.path().join("phi.csv");
    let o = fcc_trig(&[
        "interpolate", "--kind", "in", "--n", "2", "--f", "phi", "--k", "5,1,-3,-3", "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(max_err(&out) < 1e-9);

    let out = dir.path().join("tc.csv");
    let o = fcc_trig(&[
        "interpolate", "--kind", "lnstar", "--n", "3", "--f", "tc", "--k", "8,0,-4,-4", "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(max_err(&out) < 1e-9);
}

#[test]
fn sampled_values_drive_interpolation() {
    let dir = tempfile::tempdir().unwrap();
    let nodes = stdout(&fcc_trig(&["nodes", "--set", "lambda", "--n", "3"]));
    let mut samples = String::from("j1,j2,j3,j4,re,im\n");
    for r in csv_rows(&nodes) {
        let t: Vec<f64> = (4..8).map(|i| r[i].parse().unwrap()).collect();
        samples.push_str(&format!("{},{},{},{},{},{}\n", &r[0], &r[1], &r[2], &r[3], t[0] - t[3], t[1]));
    }
    let path = dir.path().join("samples.csv");
    std::fs::write(&path, &samples).unwrap();
    let o = fcc_trig(&["interpolate", "--kind", "lnstar", "--n", "3", "--samples", path.to_str().unwrap(), "--grid", "4"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    // Grid 4 on the tetrahedron holds exactly the nodes of degree 3.
    let text = stdout(&o);
    let (t1, t2, t4, re, im) =
        (column(&text, "t1"), column(&text, "t2"), column(&text, "t4"), column(&text, "re"), column(&text, "im"));
    for i in 0..t1.len() {
        assert!((re[i] - (t1[i] - t4[i])).abs() < 1e-9);
        assert!((im[i] - t2[i]).abs() < 1e-9);
    }

    let short: String = samples.lines().take(5).map(|l| format!("{l}\n")).collect();
    std::fs::write(&path, short).unwrap();
    let o = fcc_trig(&["interpolate", "--kind", "lnstar", "--n", "3", "--samples", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("node set Λ") && err.contains("expected 20"), "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(fcc_trig(&["--help"]).status.code(), Some(0));
    assert_eq!(fcc_trig(&["nodes"]).status.code(), Some(1));
    assert_eq!(fcc_trig(&["nodes", "--n", "0"]).status.code(), Some(1));
    assert_eq!(fcc_trig(&["interpolate", "--kind", "ln", "--n", "3", "--f", "one"]).status.code(), Some(1));
    let o = fcc_trig(&["nodes", "--n", "1", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(3));
    let o = fcc_trig(&["interpolate", "--n", "2", "--samples", "/nonexistent-dir/s.csv"]);
    assert_eq!(o.status.code(), Some(3));
}
