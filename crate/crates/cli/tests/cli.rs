use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coalition"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no `{key}=` line in {text}"))
}

#[test]
fn number_of_paths_and_cycles() {
    let p5 = run(&["number", "P5"]);
    assert_eq!(p5.status.code(), Some(0));
    assert_eq!(field(&stdout(&p5), "C"), "4");
    let c7 = run(&["number", "C7", "--method", "enumerate"]);
    assert_eq!(field(&stdout(&c7), "C"), "5");
}

#[test]
fn number_from_edge_file() {
    let dir = std::env::temp_dir().join(format!("coalition-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bull.edges");
    std::fs::write(&file, "5 5\n0 1\n1 2\n2 0\n0 3\n1 4\n").unwrap();
    let o = run(&["number", "--file", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert_eq!(field(&stdout(&o), "C"), "4");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn witness_round_trips_through_check() {
    for spec in ["P7", "C6", "K1,3", "S(2,1)"] {
        let o = stdout(&run(&["number", spec]));
        let witness = field(&o, "witness");
        let c = run(&["check", spec, witness]);
        assert_eq!(c.status.code(), Some(0));
        assert_eq!(field(&stdout(&c), "verdict"), "Valid", "{spec} {witness}");
    }
}

#[test]
fn check_published_partitions() {
    let o = run(&["check", "P8", "1,4|2,6,8|3|5|7", "--one-indexed"]);
    let text = stdout(&o);
    assert_eq!(field(&text, "verdict"), "Valid");
    assert_eq!(field(&text, "class"), "S12");

    let o = run(&["check", "P5", "0|1|2|3|4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "verdict"), "Invalid");

    let o = run(&["check", "P2", "0|1"]);
    assert_eq!(field(&stdout(&o), "class"), "K2bar");
}

#[test]
fn check_with_graph6_and_dot() {
    let dir = std::env::temp_dir().join(format!("coalition-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dot = dir.join("cg.dot");
    // graph6 for P4 with edges 0-1, 1-2, 2-3.
    let o = run(&["check", "--graph6", "Ch", "0|1|2|3", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert_eq!(field(&stdout(&o), "class"), "C4");
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph coalition_graph"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["check", "P3", "0|0"]).status.code(), Some(2));
    assert_eq!(run(&["check", "P3", "0|1"]).status.code(), Some(2));
    assert_eq!(run(&["number", "Q9"]).status.code(), Some(2));
    assert_eq!(run(&["number"]).status.code(), Some(2));
    assert_eq!(run(&["number", "--graph6", "!!"]).status.code(), Some(2));
}

#[test]
fn limits_exit_3() {
    assert_eq!(run(&["number", "P14", "--method", "enumerate"]).status.code(), Some(3));
    let o = run(&["number", "C12", "--node-limit", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(field(&stdout(&o), "exact"), "false");
    assert_eq!(run(&["census", "14"]).status.code(), Some(3));
}

#[test]
fn census_against_published_grid() {
    let o = run(&["census", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "NC"), "10");
    assert_eq!(field(&text, "outside"), "0");
    // The published grid marks (K2, P3) realisable; no partition of P3 does it.
    let o = run(&["census", "3"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("K2 N *"));
}

#[test]
fn table_and_verify_and_props() {
    let o = run(&["grid", "2", "--lines"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2 * 18);
    assert_eq!(run(&["grid", "4"]).status.code(), Some(4));

    let o = run(&["verify", "--trees", "10", "--graphs", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(run(&["verify"]).status.code(), Some(2));

    assert_eq!(run(&["props", "--kmax", "12"]).status.code(), Some(0));
    let o = run(&["props", "--kmax", "13"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("two-k2 k=13: not a partition"));
}

#[test]
fn graph_export() {
    let o = run(&["graphs", "4"]);
    assert_eq!(stdout(&o).lines().count(), 11);
    let o = run(&["graphs", "6", "--connected"]);
    assert_eq!(stdout(&o).lines().count(), 112);
    let o = run(&["graphs", "8", "--trees"]);
    assert_eq!(stdout(&o).lines().count(), 23);
}

#[test]
fn deterministic_across_thread_counts() {
    let one = stdout(&run(&["--threads", "1", "census", "9"]));
    let four = stdout(&run(&["--threads", "4", "census", "9"]));
    assert_eq!(one, four);
    let one = stdout(&run(&["--threads", "1", "number", "C11", "--method", "enumerate"]));
    let four = stdout(&run(&["--threads", "4", "number", "C11", "--method", "enumerate"]));
    assert_eq!(one, four);
}
