use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn hepta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hepta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hepta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn det_of_fixture() {
    let o = hepta(&["det", &fixture("A.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-2686365");
}

#[test]
fn det_of_anti_fixture_flips_sign() {
    let o = hepta(&["det", &fixture("B.json")]);
    assert_eq!(stdout(&o).trim(), "2686365");
}

#[test]
fn det_of_identity() {
    let o = hepta(&["det", &fixture("identity.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn det_from_dense_csv() {
    let a = hepta(&["det", &fixture("A.csv")]);
    assert_eq!(stdout(&a).trim(), "-2686365");
    let b = hepta(&["det", &fixture("B.csv"), "--kind", "anti"]);
    assert_eq!(stdout(&b).trim(), "2686365");
    // B is not cyclic-heptadiagonal read as-is
    assert_eq!(hepta(&["det", &fixture("B.csv")]).status.code(), Some(3));
}

#[test]
fn float_det_is_close() {
    let o = hepta(&["det", &fixture("A.json"), "--mode", "float", "--eps-rel", "1e-10"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v + 2686365.0).abs() < 1e-6);
}

#[test]
fn float_det_breaks_down_on_zero_pivot() {
    let path = scratch("zp.json");
    let g = hepta(&["gen", "--n", "12", "--seed", "7", "--zero-pivots", "1", "--kind", "cyclic", "--out", path.to_str().unwrap()]);
    assert_eq!(g.status.code(), Some(0));
    assert_eq!(hepta(&["det", path.to_str().unwrap(), "--mode", "float"]).status.code(), Some(2));
    assert_eq!(hepta(&["verify", path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn solve_prints_n_lines() {
    let rhs = scratch("rhs.txt");
    std::fs::write(&rhs, (1..=10).map(|i| format!("{i}\n")).collect::<String>()).unwrap();
    let o = hepta(&["solve", &fixture("A.json"), "--rhs", rhs.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[0], "1928/737");

    std::fs::write(&rhs, "1\n2\n").unwrap();
    assert_eq!(hepta(&["solve", &fixture("A.json"), "--rhs", rhs.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn invert_singular_exits_2() {
    let o = hepta(&["invert", &fixture("singular.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("singular"));
}

#[test]
fn anti_invert_writes_csv() {
    let out = scratch("binv.csv");
    let o = hepta(&["anti-invert", &fixture("A.json"), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("-629/19899,6559/298485,"));
    let inv = hepta(&["invert", &fixture("B.json")]);
    assert_eq!(stdout(&inv), text);
}

#[test]
fn verify_passes_on_fixtures() {
    for f in ["A.json", "B.json", "singular.json"] {
        let o = hepta(&["verify", &fixture(f)]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stdout(&o));
        assert!(stdout(&o).contains("overall: PASS"));
    }
}

#[test]
fn verify_catches_corrupted_factor() {
    let o = hepta(&["verify", &fixture("A.json"), "--corrupt-pivot", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("mismatch in determinant"));
}

#[test]
fn order_seven_is_an_input_error() {
    let path = scratch("n7.json");
    let text = std::fs::read_to_string(fixture("identity.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["n"] = 7.into();
    for k in ["d", "a", "A", "C", "b", "B", "D"] {
        v[k].as_array_mut().unwrap().pop();
    }
    std::fs::write(&path, v.to_string()).unwrap();
    let o = hepta(&["det", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn malformed_input_is_an_input_error() {
    let path = scratch("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(hepta(&["det", path.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(hepta(&["det", "/nonexistent/file.json"]).status.code(), Some(3));
    assert_eq!(hepta(&["det"]).status.code(), Some(3));
}

#[test]
fn gen_is_byte_identical() {
    let a = scratch("g1.json");
    let b = scratch("g2.json");
    for p in [&a, &b] {
        let o = hepta(&["gen", "--n", "20", "--seed", "11", "--zero-pivots", "2", "--kind", "anti", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(hepta(&["gen", "--n", "10", "--seed", "1", "--zero-pivots", "4", "--out", a.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn bench_refuses_large_exact() {
    let o = hepta(&["bench", "--sizes", "5000", "--mode", "exact", "--trials", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("capped at n <= 512"));
}

#[test]
fn bench_json_output() {
    let o = hepta(&["bench", "--sizes", "16,32", "--mode", "float", "--trials", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["records"].as_array().unwrap().len(), 6);
    assert_eq!(v["medians"].as_array().unwrap().len(), 2);
}
