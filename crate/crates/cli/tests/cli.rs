use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use sindhi_spell::render::{report_from_json, CHECK_COLUMNS, CLASSIFY_COLUMNS};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn lexicon() -> String {
    data("lexicon.txt").display().to_string()
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sindhi-spell"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Golden file without its `#` header.
fn golden(name: &str) -> String {
    std::fs::read_to_string(data(name))
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

#[test]
fn check_valid_sentence_is_clean() {
    let o = run(&["check", "--lexicon", &lexicon()], "سنڌ ۾ پاڻي آهي۔\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn check_flags_omission() {
    let o = run(&["check", "--lexicon", &lexicon()], "پاڪتان\n");
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let fields: Vec<&str> = out.trim_end_matches('\n').split('\t').collect();
    assert_eq!(fields.len(), CHECK_COLUMNS);
    assert_eq!(fields[0], "0");
    assert_eq!(fields[2], "پاڪتان");
    assert_eq!(fields[3].split('|').next(), Some("پاڪستان"));
}

#[test]
fn check_json_records() {
    let o = run(&["check", "--lexicon", &lexicon(), "--format", "json"], "ج امشورو\n");
    assert_eq!(o.status.code(), Some(1));
    let rec: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(rec["suggestions"][0]["text"], "جامشورو");
    assert_eq!(rec["suggestions"][0]["source"], "boundary");
}

#[test]
fn check_requires_a_lexicon() {
    let o = run(&["check"], "پاڪتان\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    let o = run(&["check", "--lexicon", "/nonexistent/words.txt"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn normalize_only_shows_clusters() {
    let o = run(&["check", "--normalize-only"], "پاڪستان \u{FEFB}\n");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "0\tپاڪستان\tپاڪستان\t7");
    assert!(lines[1].ends_with("\tلا\t2"));
}

#[test]
fn suggest_subcommand() {
    let o = run(&["suggest", "--lexicon", &lexicon(), "--max-suggestions", "1"], "طاريڪ\nسنڌ\n");
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains("\tتاريڪ\t"));
}

#[test]
fn classify_records() {
    let input = "پاڪتان\tپاڪستان\nجامشورو\tجامشورو\nلعلشهباز\tلعل شهباز\n";
    let o = run(&["classify", "--lexicon", &lexicon()], input);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.len() == CLASSIFY_COLUMNS));
    assert_eq!(rows[0][3], "deletion");
    assert_eq!(rows[0][10], "typographic");
    assert!(rows[1][14].contains("identical"));
    assert_eq!(rows[2][4], "runon");
    assert_eq!(rows[2][10], "space_related");

    let o = run(&["classify", "--lexicon", &lexicon(), "--format", "json"], "طاريڪ\tتاريڪ\n");
    assert_eq!(o.status.code(), Some(0));
    let rec: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec["category"], "phonetic");
    assert_eq!(rec["kind"], "substitution");
    assert_eq!(rec["position_class"], "first_char");
}

#[test]
fn analyze_gpo_matches_golden() {
    let corpus = std::fs::read_to_string(data("gpo_corpus.tsv")).unwrap();
    let o = run(&["analyze", "--lexicon", &lexicon()], &corpus);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), golden("gpo_report.tsv"));

    let corpus = std::fs::read_to_string(data("web7_corpus.tsv")).unwrap();
    let o = run(&["analyze", "--lexicon", &lexicon()], &corpus);
    assert_eq!(stdout(&o), golden("web7_report.tsv"));
}

#[test]
fn analyze_json_and_additivity() {
    let gpo = std::fs::read_to_string(data("gpo_corpus.tsv")).unwrap();
    let web = std::fs::read_to_string(data("web7_corpus.tsv")).unwrap();
    let report = |input: &str| {
        let o = run(&["analyze", "--lexicon", &lexicon(), "--format", "json"], input);
        assert_eq!(o.status.code(), Some(0));
        report_from_json(&serde_json::from_slice(&o.stdout).unwrap()).unwrap()
    };
    let mut sum = report(&gpo);
    sum.merge(&report(&web));
    assert_eq!(report(&format!("{gpo}{web}")), sum);
    assert_eq!(sum.total_errors, 515);
}

#[test]
fn analyze_empty_corpus_fails() {
    let o = run(&["analyze", "--lexicon", &lexicon()], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("empty corpus"));
}

#[test]
fn inject_is_reproducible() {
    let args = ["inject", "--lexicon", &lexicon(), "--distribution", "gpo", "--seed", "11", "--count", "300"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert_eq!(out.lines().count(), 300);
    assert!(out.lines().all(|l| l.split('\t').count() == 3));

    // the output is a valid analyze input
    let o = run(&["analyze", "--lexicon", &lexicon()], &out);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn inject_rejects_bad_distribution() {
    let dir = std::env::temp_dir().join(format!("sindhi-spell-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dist.txt");
    std::fs::write(&path, "deletion = 0.5\ninsertion = 0.3\n").unwrap();
    let o = run(&["inject", "--lexicon", &lexicon(), "--distribution", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sum"));
    std::fs::write(&path, "deletion = 0.5\nsplit = 0.25\nrunon = 0.25\n").unwrap();
    let o = run(&["inject", "--lexicon", &lexicon(), "--distribution", path.to_str().unwrap(), "--count", "20"], "");
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn dump_is_sorted_and_reloadable() {
    let o = run(&["dump", "--lexicon", &lexicon()], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let words: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
    let mut sorted = words.clone();
    sorted.sort();
    assert_eq!(words, sorted);
    let lex = sindhi_spell::formats::load_lexicon(out.as_bytes()).unwrap();
    let original = sindhi_spell::formats::load_lexicon(std::fs::read(data("lexicon.txt")).unwrap().as_slice()).unwrap();
    assert_eq!(lex, original);
}

#[test]
fn custom_data_files() {
    let dir = std::env::temp_dir().join(format!("sindhi-spell-data-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let layout = dir.join("layout.txt");
    std::fs::write(&layout, "ا ب ت\nپ ث ج\n").unwrap();
    let config = dir.join("ranking.txt");
    std::fs::write(&config, "multiplier.keyboard = 1.5\nmax_suggestions = 2\n").unwrap();
    let o = run(
        &["check", "--lexicon", &lexicon(), "--layout", layout.to_str().unwrap(), "--config", config.to_str().unwrap()],
        "پاڪتان\n",
    );
    assert_eq!(o.status.code(), Some(1));
    std::fs::write(&config, "multiplier.keyboard = 0.5\n").unwrap();
    let o = run(&["check", "--lexicon", &lexicon(), "--config", config.to_str().unwrap()], "x\n");
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema")
}

fn read_schema(file: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(schema_dir().join(file)).unwrap()).unwrap()
}

/// Resolves `$ref`s to sibling schema files by their last path segment.
struct SchemaFiles;

impl jsonschema::Retrieve for SchemaFiles {
    fn retrieve(
        &self,
        uri: &jsonschema::Uri<String>,
    ) -> Result<Value, Box<dyn std::error::Error + Send + Sync>> {
        let file = uri.path().as_str().rsplit('/').next().unwrap_or_default().to_string();
        Ok(serde_json::from_str(&std::fs::read_to_string(schema_dir().join(file))?)?)
    }
}

fn validator(name: &str) -> jsonschema::Validator {
    jsonschema::options().with_retriever(SchemaFiles).build(&read_schema(name)).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{doc}: {errors:?}");
}

#[test]
fn json_outputs_match_documented_schemas() {
    let check = validator("check.schema.json");
    let o = run(&["check", "--lexicon", &lexicon(), "--format", "json"], "پاڪتان ج امشورو طاريڪ لعلشهباز xyz\n");
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() >= 4);
    lines.iter().for_each(|l| assert_valid(&check, l));
    let o = run(&["suggest", "--lexicon", &lexicon(), "--format", "json"], "ڪتاپ\n\u{200D}\n");
    stdout(&o).lines().for_each(|l| assert_valid(&check, &serde_json::from_str(l).unwrap()));

    let classify = validator("classify.schema.json");
    let corpus = std::fs::read_to_string(data("gpo_corpus.tsv")).unwrap();
    let input = format!("{corpus}لعلشهباز\tلعل شهباز\nسنڌ\tسنڌ\nabc\n");
    let o = run(&["classify", "--lexicon", &lexicon(), "--format", "json"], &input);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 158);
    lines.iter().for_each(|l| assert_valid(&classify, l));
    // the schema is not vacuous
    let mut bad = lines[0].clone();
    bad["kind"] = Value::from("swap");
    assert!(!classify.is_valid(&bad));

    let report = validator("report.schema.json");
    let o = run(&["analyze", "--lexicon", &lexicon(), "--format", "json"], &corpus);
    assert_valid(&report, &serde_json::from_slice(&o.stdout).unwrap());
}
