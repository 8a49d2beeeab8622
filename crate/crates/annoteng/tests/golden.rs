mod common;

use annoteng::interpreter::{interpret_document, render_line};
use annoteng::markup::{parse_document, parse_word};
use annoteng::phonology::render_ascii_ipa;
use annoteng::{interpret_word_in, Dialect, NextWord};

#[test]
fn golden_words_match_per_dialect() {
    let rows = common::golden();
    assert!(rows.len() >= 80, "only {} golden rows", rows.len());
    let mut wrong = Vec::new();
    for g in &rows {
        let w = parse_word(&g.markup).unwrap();
        match interpret_word_in(&w, g.dialect, NextWord::None) {
            Ok(t) if t == g.ipa => {}
            Ok(t) => wrong.push(format!("{} {}: {} != {}", g.markup, g.dialect, render_ascii_ipa(&t), render_ascii_ipa(&g.ipa))),
            Err(e) => wrong.push(format!("{} {}: {e}", g.markup, g.dialect)),
        }
    }
    assert!(wrong.is_empty(), "{}", wrong.join("\n"));
}

#[test]
fn golden_words_cover_both_dialects() {
    let rows = common::golden();
    for d in [Dialect::GA, Dialect::RP, Dialect::Neutral] {
        assert!(rows.iter().any(|g| g.dialect == d), "no {d} rows");
    }
}

#[test]
fn document_reading_is_deterministic() {
    let text: String = common::golden().iter().map(|g| g.markup.clone()).collect::<Vec<_>>().join(" ");
    let doc = parse_document(&text).unwrap();
    let a = render_line(&interpret_document(&doc, Dialect::GA), false);
    let b = render_line(&interpret_document(&parse_document(&text).unwrap(), Dialect::GA), false);
    assert_eq!(a, b);
}

#[test]
fn dialects_diverge() {
    let ipa = |s: &str, d| render_ascii_ipa(&interpret_word_in(&parse_word(s).unwrap(), d, NextWord::None).unwrap());
    assert_eq!(ipa("fl\\uudp{ow}er", Dialect::GA), "fl\"aU@r");
    assert_eq!(ipa("flour", Dialect::GA), "fl\"aUr");
    assert_eq!(ipa("fl\\uudp{ow}er", Dialect::RP), "fl\"aU@");
    assert_eq!(ipa("flour", Dialect::RP), "fl\"aU@");
    assert_eq!(ipa("tone", Dialect::GA), "t\"oUn");
    assert_eq!(ipa("tone", Dialect::RP), "t\"@Un");
}
