use std::io::Write;
use std::process::{Command, Output, Stdio};

use annoteng::corpus;
use annoteng::markup::parse_document;
use annoteng_cli::Counts;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FIGURE: &str = "Nob\\pln{o}dy's ques\\hno{ti}oning that Australo\\serl{}pi\\no{th}ecu\\no{s} is a genu\\no{s} o\\vo{f} h\\pln{o}minids that ar\\si{e} n\\uudp{ow}adays \\iot{e}xt\\st{i}nct.";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_annoteng"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn interpret_figure_sentence() {
    let o = run(&["interpret"], FIGURE);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 13);
    assert_eq!(lines[0], "Nobody's\tn\"oUbAdI-z");
    assert_eq!(lines[12], "extinct\tIkst\"Inkt");
}

#[test]
fn interpret_trace_has_every_step() {
    let o = run(&["interpret", "--trace"], "hou\\no{s}e");
    let out = stdout(&o);
    let steps: Vec<&str> = out.lines().filter(|l| l.starts_with('(')).collect();
    assert_eq!(steps.len(), 13);
    assert!(steps[0].starts_with("(0) "));
    assert!(out.ends_with("house\th\"aUs\n"));
}

#[test]
fn interpret_foreign_and_empty() {
    let o = run(&["interpret"], "the \\nonl{}Zeitgeist\\nonr{}");
    assert_eq!(stdout(&o), "the\tD@\nZeitgeist\tPASS\n");
    let o = run(&["interpret"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn interpret_dialects_and_unicode() {
    let o = run(&["interpret", "--dialect", "RP"], "tone");
    assert_eq!(stdout(&o), "tone\tt\"@Un\n");
    let o = run(&["interpret", "--unicode"], "\\no{th}ing");
    assert_eq!(stdout(&o), "thing\tθˈɪŋ\n");
}

#[test]
fn parse_errors_exit_one() {
    let o = run(&["interpret"], "a\nb\\pln{x");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["validate"], "\\zzz{a}").status.code(), Some(1));
    assert_eq!(run(&["stats"], "b\\pln{x").status.code(), Some(1));
}

#[test]
fn validate_reports_violations() {
    let o = run(&["validate"], "hou\\no{s}e");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "ok\n"));
    let o = run(&["validate"], "c\\pln{\\si{a}}t \\nonl{}x");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn annotate_from_starter_lexicon() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = run(&["annotate", "--report", report.to_str().unwrap()], "The house, in Qwghlm.");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "The hou\\no{s}e, in \\nonl{}Qwghlm\\nonr{}.");
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[1]["markup"], "hou\\no{s}e");
    assert_eq!(rows[1]["cost"], 44);
    assert_eq!(rows[3]["status"], "missing");
}

#[test]
fn strict_fails_on_uncodable_words() {
    let dir = tempfile::tempdir().unwrap();
    let lex = dir.path().join("lex.tsv");
    // no single annotation turns "cat" into [z"u:]
    std::fs::write(&lex, "cat\tz\"u:\n").unwrap();
    let args = ["annotate", "--max-ann", "1", "--lexicon", lex.to_str().unwrap()];
    let o = run(&args, "cat");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "\\nonl{}cat\\nonr{}"));
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(run(&strict, "cat").status.code(), Some(1));
}

#[test]
fn stats_json() {
    let o = run(&["stats"], "hou\\no{s}e and he\\si{a}d");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["words"], 3);
    assert_eq!(v["counts"]["letters"], 12);
    assert_eq!(v["counts"]["annotations"], 2);
    assert_eq!(v["annotatedWordsPerWord"].as_f64().unwrap(), 2.0 / 3.0);
}

#[test]
fn counts_add_over_paragraphs() {
    let mut paras: Vec<&str> = corpus::TEXTS
        .iter()
        .flat_map(|(_, t)| t.split("\n\n"))
        .filter(|p| !p.trim().is_empty() && parse_document(p).is_ok())
        .collect();
    assert!(paras.len() > 10);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        paras.shuffle(&mut rng);
        let k = 2 + (paras.len() % 3);
        let whole = paras[..k].join("\n\n");
        let sum = paras[..k].iter().map(|p| Counts::of(&parse_document(p).unwrap())).fold(Counts::default(), |a, b| a + b);
        assert_eq!(Counts::of(&parse_document(&whole).unwrap()), sum);
    }
}

#[test]
fn annotate_then_interpret_keeps_the_lexicon_reading() {
    let plain = "the cat sat by the house";
    let coded = stdout(&run(&["annotate"], plain));
    let once = stdout(&run(&["interpret"], &coded));
    let lex = annoteng::lexicon::starter_lexicon();
    for line in once.lines() {
        let (word, ipa) = line.split_once('\t').unwrap();
        if ipa == "PASS" {
            assert!(lex.lookup(word).is_none(), "{word}");
            continue;
        }
        let prons = lex.lookup(word).unwrap().for_dialect(annoteng::Dialect::GA);
        let t = annoteng::phonology::parse_ascii_ipa(ipa).unwrap();
        // "the" before a consonant reduces in running text
        assert!(word == "the" || prons.contains(&&t), "{word} {ipa}");
    }
    let recoded = stdout(&run(&["annotate"], plain));
    assert_eq!(coded, recoded);
}
