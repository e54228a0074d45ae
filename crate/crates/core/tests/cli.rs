use std::io::Write;
use std::process::{Command, Output, Stdio};

use fjoin::cli::{EXIT_FAILURE, EXIT_OK, EXIT_USAGE, run_with_env};
use fjoin::{DerivedKind, Family, derive, generate, invariants};

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");

fn fjoin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fjoin"))
        .args(args)
        .env_remove("FJOIN_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn in_process(args: &[&str], env_seed: Option<&str>) -> (u8, String, String) {
    let args: Vec<String> = std::iter::once("fjoin").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_env(&args, env_seed, std::io::empty(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gen_then_index_json() {
    let path = stdout(&fjoin(&["gen", "--family", "path", "--n", "3"], ""));
    assert_eq!(path, "3 2\n0 1\n1 2\n");
    let json = stdout(&fjoin(&["index", "--json"], &path));
    assert_eq!(json, "{\"n\":3,\"m\":2,\"M1\":6,\"M2\":4,\"F\":10,\"HM\":18,\"ReZM\":12,\"M4\":18}\n");
}

#[test]
fn index_text_lists_every_invariant() {
    let text = stdout(&fjoin(&["index", "--in", &format!("{FIXTURES}/p4.txt")], ""));
    let names: Vec<&str> = text.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(names, ["n", "m", "M1", "M2", "F", "HM", "ReZM", "M4"]);
    assert!(text.lines().nth(4).unwrap().ends_with(" 18"));
}

#[test]
fn join_s_vertex_of_p3_p4() {
    let p3 = format!("{FIXTURES}/p3.txt");
    let composite = stdout(&fjoin(&["join", "--kind", "S", "--mode", "vertex", "--g1", &p3, "--g2", "-"], &generate(Family::Path, 4).unwrap().to_edge_list()));
    assert!(composite.starts_with("9 19\n"));
    let json = stdout(&fjoin(&["index", "--json"], &composite));
    assert!(json.contains("\"F\":860"), "{json}");
}

#[test]
fn join_needs_a_file_operand() {
    let (code, _, err) = in_process(&["join", "--kind", "T", "--mode", "edge"], None);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--g1"));
}

#[test]
fn gen_below_family_minimum_is_a_usage_error() {
    let out = fjoin(&["gen", "--family", "cycle", "--n", "2"], "");
    assert_eq!(out.status.code(), Some(EXIT_USAGE as i32));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let (code, _, _) = in_process(&["gen", "--family", "path"], None);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = in_process(&["derive", "--kind", "X"], None);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn parse_errors_exit_one_with_line_number() {
    let out = fjoin(&["index"], "3 2\n0 1\n1 7\n");
    assert_eq!(out.status.code(), Some(EXIT_FAILURE as i32));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let out = fjoin(&["index", "--in", &format!("{FIXTURES}/duplicate.txt")], "");
    assert_eq!(out.status.code(), Some(EXIT_FAILURE as i32));

    let out = fjoin(&["index", "--in", &format!("{FIXTURES}/missing.txt")], "");
    assert_eq!(out.status.code(), Some(EXIT_FAILURE as i32));
}

#[test]
fn derive_pipeline_matches_library() {
    for kind in DerivedKind::ALL {
        let star = stdout(&fjoin(&["gen", "--family", "star", "--n", "5"], ""));
        let derived = stdout(&fjoin(&["derive", "--kind", &kind.to_string()], &star));
        let json = stdout(&fjoin(&["index", "--json"], &derived));
        let expected = invariants(derive(kind, &generate(Family::Star, 5).unwrap()).graph()).unwrap();
        assert_eq!(json.trim_end(), expected.to_json());
    }
}

#[test]
fn derive_writes_tags_sidecar() {
    let dir = std::env::temp_dir().join(format!("fjoin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let tags = dir.join("tags.json");
    let tags_arg = tags.to_str().unwrap();
    let out = stdout(&fjoin(&["derive", "--kind", "q", "--in", &format!("{FIXTURES}/p3.txt"), "--tags", tags_arg], ""));
    assert!(out.starts_with("5 5\n"));
    let sidecar: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&tags).unwrap()).unwrap();
    let vertices = sidecar["vertices"].as_array().unwrap();
    assert_eq!(vertices.len(), 5);
    assert_eq!(vertices[0]["tag"], "OriginalG1");
    assert_eq!(vertices[3]["tag"], "Inserted");
    assert_eq!(vertices[4]["edge"], serde_json::json!([1, 2]));
    std::fs::remove_dir_all(&dir).unwrap();
}

fn small_config(tag: &str) -> String {
    let path = std::env::temp_dir().join(format!("fjoin-config-{tag}-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"paths":[2,3],"cycles":[3,3],"complete":[1,2],"stars":[2,2],"random_trials":3,"max_random_n":6,"max_random_m":8,"seed":1}"#,
    )
    .unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn seed_flag_env_and_config() {
    let config = small_config("flags");
    let (code, from_config, _) = in_process(&["verify", "--config", &config], None);
    assert_eq!(code, EXIT_OK);
    let (_, from_env, _) = in_process(&["verify", "--config", &config], Some("9"));
    let (_, from_flag, _) = in_process(&["verify", "--config", &config, "--seed", "9"], Some("1"));
    assert_ne!(from_config, from_env, "env seed should change the random graphs");
    assert_eq!(from_env, from_flag, "--seed wins over the environment");

    let (code, _, err) = in_process(&["verify", "--config", &config], Some("abc"));
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("FJOIN_SEED"));

    let report: serde_json::Value = serde_json::from_str(&from_config).unwrap();
    assert_eq!(report["summary"]["mismatches"], 0);
    assert_eq!(report["records"][0]["match"], true);
    std::fs::remove_file(config).unwrap();
}

#[test]
fn verify_binary_honours_seed_env() {
    let config = small_config("env");
    let run = |env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_fjoin"));
        cmd.args(["verify", "--config", &config]).env_remove("FJOIN_SEED");
        if let Some(seed) = env {
            cmd.env("FJOIN_SEED", seed);
        }
        cmd.output().unwrap().stdout
    };
    assert_eq!(run(Some("9")), in_process(&["verify", "--config", &config, "--seed", "9"], None).1.into_bytes());
    std::fs::remove_file(config).unwrap();
}

#[test]
fn bench_prints_csv() {
    let out = stdout(&fjoin(&["bench", "--n1", "20", "--n2", "15", "--density", "0.3", "--seed", "3"], ""));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n1,n2,m1,m2,closed_ns,construct_ns,feasible,equal");
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(&fields[..4], ["20", "15", "57", "32"]);
    assert_eq!(&fields[6..], ["true", "true"]);

    let out = fjoin(&["bench", "--n1", "5", "--n2", "5", "--density", "1.5"], "");
    assert_eq!(out.status.code(), Some(EXIT_USAGE as i32));
}

#[test]
fn audit_grid_option() {
    let (code, out, _) = in_process(&["audit", "--grid", "3..4"], None);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["cases"].as_array().unwrap().len(), 32);
    let (code, _, _) = in_process(&["audit", "--grid", "5..2"], None);
    assert_eq!(code, EXIT_USAGE);
}
