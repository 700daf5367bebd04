use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p1orbits")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cubic_places_over_f2_is_one_line() {
    let o = run(&["places", "--q", "2", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn mass_check_passes() {
    let o = run(&["verify", "--q", "3", "--n", "5", "--mode", "mass"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn oracle_check_for_divisors() {
    let o = run(&["verify", "--q", "3", "--n", "4", "--mode", "oracle", "--kind", "divisors"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn output_ignores_seed() {
    for fmt in ["text", "jsonl"] {
        let a = run(&["places", "--q", "5", "--n", "5", "--seed", "1", "--format", fmt]);
        let b = run(&["places", "--q", "5", "--n", "5", "--seed", "2", "--format", fmt]);
        assert!(a.status.success() && b.status.success());
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn jsonl_lines_parse() {
    let o = run(&["divisors", "--q", "4", "--n", "3", "--format", "jsonl"]);
    for line in stdout(&o).lines() {
        let r = p1orbits::format::from_jsonl(line).unwrap();
        assert_eq!((r.q, r.n), (4, 3));
    }
}

#[test]
fn resumed_stream_matches_full_run() {
    let dir = std::env::temp_dir().join(format!("p1orbits-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let state = dir.join("state.bin");
    let st = state.to_str().unwrap();
    let full = stdout(&run(&["places", "--q", "4", "--n", "6"]));
    let mut parts = String::new();
    loop {
        let o = run(&["places", "--q", "4", "--n", "6", "--resume", st, "--limit", "2"]);
        assert!(o.status.success());
        if o.stdout.is_empty() {
            break;
        }
        parts.push_str(&stdout(&o));
    }
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(parts, full);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["places", "--q", "2"]).status.code(), Some(1));
    assert_eq!(run(&["places", "--q", "6", "--n", "3"]).status.code(), Some(1));
    let o = run(&["places", "--q", "64", "--n", "9"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bench_writes_csv() {
    let path = std::env::temp_dir().join(format!("p1orbits-bench-{}.csv", std::process::id()));
    let o = run(&["bench", "--n", "5", "--q-list", "3,4", "--csv", path.to_str().unwrap()]);
    assert!(o.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "q,n,count,elapsed_ns,peak_state_bytes");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("3,5,2,"));
}

#[test]
fn count_reports_formulas() {
    let out = stdout(&run(&["count", "--q", "3", "--n", "4"]));
    assert!(out.contains("places 18"), "{out}");
    assert!(out.contains("divisors 121"), "{out}");
}
