use serde::{Deserialize, Serialize};

use super::{code_word, CostModel, SearchBudget};
use crate::lexicon::Lexicon;
use crate::markup::{render_word, AnnotatedWord, Document, Item, RegionToggle};
use crate::phonology::Dialect;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodingStatus {
    Ok,
    Missing,
    Ambiguous,
    NoCoding,
}

/// One record of the annotation report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordReport {
    pub surface: String,
    pub status: CodingStatus,
    pub cost: Option<i64>,
    pub markup: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DocumentCoding {
    pub document: Document,
    pub report: Vec<WordReport>,
}

fn is_word_char(c: char) -> bool {
    c.is_alphabetic() || c == '\'' || c == '-'
}

/// Splits plain text into (is_word, text) runs. Apostrophes and hyphens
/// at the edges of a run stay outside the word.
fn runs(text: &str) -> Vec<(bool, &str)> {
    let edge = |c: char| c == '\'' || c == '-';
    // byte ranges of maximal word-character runs, trimmed at the edges
    let mut words: Vec<(usize, usize)> = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        match (start, is_word_char(c) && i < text.len()) {
            (None, true) => start = Some(i),
            (Some(s), false) => {
                let run = &text[s..i];
                let lead = run.len() - run.trim_start_matches(edge).len();
                let core = run.trim_matches(edge);
                if !core.is_empty() {
                    words.push((s + lead, s + lead + core.len()));
                }
                start = None;
            }
            _ => {}
        }
    }
    let mut out = Vec::new();
    let mut at = 0;
    for (s, e) in words {
        if s > at {
            out.push((false, &text[at..s]));
        }
        out.push((true, &text[s..e]));
        at = e;
    }
    if at < text.len() {
        out.push((false, &text[at..]));
    }
    out
}

fn wrap(items: &mut Vec<Item>, surface: &str) {
    items.push(Item::Region(RegionToggle::NonL));
    items.push(Item::Word(AnnotatedWord::plain(surface)));
    items.push(Item::Region(RegionToggle::NonR));
}

/// Annotates plain text word by word from the lexicon. Words without a
/// single usable pronunciation, or with no coding, are left in a
/// non-annotated region and reported.
pub fn code_document(plain: &str, lex: &Lexicon, m: &CostModel, b: &SearchBudget, dialect: Dialect) -> DocumentCoding {
    let mut items = Vec::new();
    let mut report = Vec::new();
    for (is_word, s) in runs(plain) {
        if !is_word {
            items.push(Item::Text(s.to_string()));
            continue;
        }
        let prons = lex.lookup(s).map(|e| e.for_dialect(dialect)).unwrap_or_default();
        let foreign = !s.chars().all(|c| c.is_ascii_alphabetic() || c == '\'' || c == '-');
        let (status, cost, word) = match prons.as_slice() {
            _ if foreign => (CodingStatus::Missing, None, None),
            [] => (CodingStatus::Missing, None, None),
            [p] => match code_word(s, p, m, b, dialect) {
                Ok(r) => (CodingStatus::Ok, Some(r.total_cost), Some(r.word)),
                Err(_) => (CodingStatus::NoCoding, None, None),
            },
            _ => (CodingStatus::Ambiguous, None, None),
        };
        let markup = match word {
            Some(w) => {
                let r = render_word(&w);
                items.push(Item::Word(w));
                r
            }
            None => {
                wrap(&mut items, s);
                format!("\\nonl{{}}{s}\\nonr{{}}")
            }
        };
        report.push(WordReport { surface: s.to_string(), status, cost, markup });
    }
    DocumentCoding { document: Document { items }, report }
}
