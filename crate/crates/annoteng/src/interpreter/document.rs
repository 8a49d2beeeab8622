use super::{interpret_word_in, InterpretError, NextWord};
use crate::markup::{render_word, Document, Item, RegionToggle};
use crate::phonology::{render_ascii_ipa, render_unicode_ipa, Dialect, IpaTranscription, Phoneme};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryResult {
    Ipa(IpaTranscription),
    /// a word inside a non-annotated region
    Passthrough,
    Failed(InterpretError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocumentEntry {
    pub markup: String,
    pub spelling: String,
    /// how the following word was taken to start
    pub context: NextWord,
    pub result: EntryResult,
}

fn starts_with_vowel(e: &DocumentEntry) -> NextWord {
    match &e.result {
        EntryResult::Ipa(t) => match t.iter().find(|p| p.phoneme != Phoneme::Hyphen) {
            Some(p) => NextWord::from(p.phoneme.is_vowel()),
            None => NextWord::None,
        },
        EntryResult::Passthrough => {
            let c = e.spelling.chars().next().map(|c| c.to_ascii_lowercase());
            NextWord::from(matches!(c, Some('a' | 'e' | 'i' | 'o' | 'u')))
        }
        EntryResult::Failed(_) => NextWord::None,
    }
}

/// Interprets every word of a document. Words are processed right to left
/// so that each one knows how the following word starts.
pub fn interpret_document(doc: &Document, dialect: Dialect) -> Vec<DocumentEntry> {
    // (word, foreign, only whitespace between this word and the next)
    let mut words = Vec::new();
    let mut depth = 0usize;
    let mut glued: Vec<bool> = Vec::new();
    let mut gap_clean = true;
    for item in &doc.items {
        match item {
            Item::Region(RegionToggle::NonL) => depth += 1,
            Item::Region(RegionToggle::NonR) => depth = depth.saturating_sub(1),
            Item::Region(_) => {}
            Item::Text(t) => {
                if !t.chars().all(char::is_whitespace) {
                    gap_clean = false;
                }
            }
            Item::Word(w) => {
                if !words.is_empty() {
                    glued.push(gap_clean);
                }
                gap_clean = true;
                words.push((w, depth > 0));
            }
        }
    }
    glued.push(false);

    let mut out: Vec<DocumentEntry> = Vec::with_capacity(words.len());
    let mut next = NextWord::None;
    for (k, (w, foreign)) in words.iter().enumerate().rev() {
        let ctx = if glued[k] { next } else { NextWord::None };
        let result = if *foreign {
            EntryResult::Passthrough
        } else {
            match interpret_word_in(w, dialect, ctx) {
                Ok(t) => EntryResult::Ipa(t),
                Err(e) => EntryResult::Failed(e),
            }
        };
        let e = DocumentEntry { markup: render_word(w), spelling: w.spelling(), context: ctx, result };
        next = starts_with_vowel(&e);
        out.push(e);
    }
    out.reverse();
    out
}

/// One line of transcriptions separated by spaces. Passthrough words keep
/// their spelling; failures show as `?spelling?`.
pub fn render_line(entries: &[DocumentEntry], unicode: bool) -> String {
    entries
        .iter()
        .map(|e| match &e.result {
            EntryResult::Ipa(t) => {
                if unicode {
                    render_unicode_ipa(t)
                } else {
                    render_ascii_ipa(t)
                }
            }
            EntryResult::Passthrough => e.spelling.clone(),
            EntryResult::Failed(_) => format!("?{}?", e.spelling),
        })
        .collect::<Vec<_>>()
        .join(" ")
}
