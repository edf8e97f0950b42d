use reduced_words::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("redwords").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn natural_word_of_longest_s4() {
    assert_eq!(call(&["natural", "4321"]), (0, "3 2 3 1 2 3\n".into(), String::new()));
    assert_eq!(call(&["--towers", "natural", "4321"]).1, "3 | 2 3 | 1 2 3\n");
    assert_eq!(call(&["--format", "json", "natural", "4321"]).1, "[3,2,3,1,2,3]\n");
}

#[test]
fn generate_lists_every_word_once() {
    let (code, out, _) = call(&["generate", "4321"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.contains(&"3 2 3 1 2 3"));
    let (_, json, _) = call(&["--format", "json", "generate", "4321"]);
    let v: Vec<Vec<u32>> = serde_json::from_str(&json).unwrap();
    let from_json: Vec<String> =
        v.iter().map(|w| w.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
    assert_eq!(from_json, lines);
    let (_, enumerated, _) = call(&["enumerate", "--oracle", "tits", "4321"]);
    assert_eq!(enumerated, out);
}

#[test]
fn counts() {
    assert_eq!(call(&["count", "--stanley", "7"]).1, "1100742656\n");
    assert_eq!(call(&["count", "52314"]).1, "10\n");
}

#[test]
fn verify_reports_pass() {
    let (code, out, _) = call(&["verify", "52314"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn sort_prints_a_chain() {
    let (code, out, _) = call(&["sort", "121"]);
    assert_eq!(code, 0);
    assert_eq!(out, "start 1 2 | 1\n<2    2 | 1 2\n");
}

#[test]
fn poset_dot_and_json_agree() {
    let (code, dot, _) = call(&["poset", "52314"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph poset {\n") && dot.ends_with("}\n"));
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
    assert_eq!(nodes, 10);
    assert!(edges.iter().all(|l| l.ends_with("[rel=\"1\"];") || l.ends_with("[rel=\"2\"];")));
    let (_, json, _) = call(&["--format", "json", "poset", "52314"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), nodes);
    assert_eq!(v["edges"].as_array().unwrap().len(), edges.len());
    let (_, hasse, _) = call(&["--format", "json", "poset", "--hasse", "52314"]);
    let h: Value = serde_json::from_str(&hasse).unwrap();
    assert_eq!(h["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn bad_input_exits_with_an_error() {
    let (code, _, err) = call(&["natural", "1 1 2"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "));
    let (code, _, err) = call(&["sort", "1 1"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    assert_eq!(call(&["generate", "--max-words", "15", "4321"]).0, 2);
    assert_eq!(call(&["--degree", "3", "natural", "4321"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
}
