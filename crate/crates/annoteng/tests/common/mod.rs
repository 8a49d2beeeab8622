//! Shared helpers for integration tests: data files and random annotated words.
#![allow(dead_code)]

use annoteng::interpreter::class_value;
use annoteng::markup::{is_vowel_letter, validate, AnnotatedWord, Annotation, AnnotationKind, VOWEL_CLASSES};
use annoteng::phonology::{parse_ascii_ipa, Dialect, IpaTranscription};
use rand::seq::SliceRandom;
use rand::Rng;
use AnnotationKind::*;

pub const GOLDEN: &str = include_str!("../data/golden_words.tsv");
pub const COSTS: &str = include_str!("../data/cost_examples.tsv");

pub struct Golden {
    pub markup: String,
    pub dialect: Dialect,
    pub ipa: IpaTranscription,
}

fn rows(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).map(|l| l.split('\t').collect())
}

pub fn golden() -> Vec<Golden> {
    rows(GOLDEN)
        .map(|f| Golden {
            markup: f[0].to_string(),
            dialect: f[1].parse().expect("dialect"),
            ipa: parse_ascii_ipa(f[2]).expect("transcription"),
        })
        .collect()
}

/// Value of one cost macro as printed in the cost tables.
fn macro_value(name: &str) -> Option<i64> {
    Some(match name {
        "stcost" | "ststcost" => 30,
        "sicost" => 31,
        "rcost" => 10,
        "brdcost" | "idpcost" | "udpcost" => 34,
        "bbrdcost" | "iidpcost" | "uudpcost" => 37,
        "plncost" | "natcost" => 42,
        "pplncost" | "nnatcost" => 53,
        "restcost" => 44,
        "rrestcost" => 55,
        "secost" => 65,
        "selcost" | "sercost" => 66,
        "selrcost" | "serlcost" => 92,
        "introcost" => 200,
        _ => return None,
    })
}

/// Sums an expression such as `\restcost{}+\sicost{}`.
pub fn eval_cost(expr: &str) -> i64 {
    expr.split('+')
        .map(|t| {
            let t = t.trim().trim_start_matches('\\').trim_end_matches("{}");
            macro_value(t).or_else(|| t.parse().ok()).unwrap_or_else(|| panic!("bad cost term `{t}`"))
        })
        .sum()
}

pub fn cost_rows() -> Vec<(String, i64)> {
    rows(COSTS).map(|f| (f[0].to_string(), eval_cost(f[1]))).collect()
}

/// Letters-only spellings of the starter lexicon.
pub fn spellings() -> Vec<String> {
    annoteng::lexicon::starter_lexicon()
        .entries
        .keys()
        .filter(|s| s.chars().all(|c| c.is_ascii_lowercase()))
        .cloned()
        .collect()
}

fn vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// Vowel classes with a rule for `letter`.
fn classes_for(letter: char) -> Vec<AnnotationKind> {
    VOWEL_CLASSES.iter().copied().filter(|k| class_value(*k, letter).is_some()).collect()
}

/// Random marks over `spelling`. With `double`, one two-letter vowel class
/// is placed on a vowel pair; returns `None` if the spelling has none.
pub fn decorate<R: Rng>(spelling: &str, rng: &mut R, double: bool) -> Option<AnnotatedWord> {
    let letters: Vec<char> = spelling.chars().collect();
    let n = letters.len();
    let mut w = AnnotatedWord::plain(spelling);
    let mut used = vec![false; n];
    if double {
        let pairs: Vec<usize> = (0..n.saturating_sub(1))
            .filter(|&i| vowel(letters[i]) && is_vowel_letter(letters[i + 1]))
            .collect();
        let &i = pairs.choose(rng)?;
        let doubles: Vec<AnnotationKind> = classes_for(letters[i]).into_iter().filter(|k| k.has_double_form()).collect();
        w.add_mark(i, Annotation::new(*doubles.choose(rng)?, 2));
        if rng.gen_bool(0.3) {
            w.add_mark(i, Annotation::new(Stress, 1));
        }
        used[i] = true;
        used[i + 1] = true;
    }
    for i in 0..n {
        if used[i] || !rng.gen_bool(0.25) {
            continue;
        }
        let c = letters[i];
        if vowel(c) {
            match rng.gen_range(0..4) {
                0 => w.add_mark(i, Annotation::new(Silent, 1)),
                1 => w.add_mark(i, Annotation::new(Stress, 1)),
                _ => {
                    let Some(&class) = classes_for(c).choose(rng) else { continue };
                    let span = if i + 1 < n && !used[i + 1] && class.has_double_form() && is_vowel_letter(letters[i + 1]) && rng.gen_bool(0.5) {
                        used[i + 1] = true;
                        2
                    } else {
                        1
                    };
                    w.add_mark(i, Annotation::new(class, span));
                }
            }
        } else if c == 's' || (c == 't' && letters.get(i + 1) == Some(&'h')) {
            let span = if c == 's' { 1 } else { 2 };
            let kind = if rng.gen_bool(0.5) { Voiced } else { Voiceless };
            w.add_mark(i, Annotation::new(kind, span));
            if span == 2 {
                used[i + 1] = true;
            }
        } else if rng.gen_bool(0.3) {
            w.add_mark(i, Annotation::new(Silent, 1));
        }
        used[i] = true;
    }
    validate(&w).is_empty().then_some(w)
}

/// A random valid word from the starter spellings.
pub fn random_word<R: Rng>(pool: &[String], rng: &mut R, double: bool) -> AnnotatedWord {
    loop {
        let s = pool.choose(rng).unwrap();
        if let Some(w) = decorate(s, rng, double) {
            return w;
        }
    }
}
