//! Word to pronunciation data, stored as tab-separated text:
//! `surface<TAB>ascii-ipa[<TAB>dialect]`, `#` starts a comment line.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::phonology::{parse_ascii_ipa, render_ascii_ipa, Dialect, IpaTranscription};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pronunciation {
    pub ipa: IpaTranscription,
    /// `None` applies to every dialect
    pub dialect: Option<Dialect>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub surface: String,
    pub pronunciations: Vec<Pronunciation>,
}

impl LexiconEntry {
    /// Distinct pronunciations usable for `dialect`.
    pub fn for_dialect(&self, dialect: Dialect) -> Vec<&IpaTranscription> {
        let mut out: Vec<&IpaTranscription> = Vec::new();
        for p in &self.pronunciations {
            if p.dialect.map_or(true, |d| d == dialect) && !out.contains(&&p.ipa) {
                out.push(&p.ipa);
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lexicon {
    pub entries: BTreeMap<String, LexiconEntry>,
    pub source: String,
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: {reason}")]
    ParseError { line: usize, reason: String },
    #[error("lexicon has no entries")]
    EmptyLexicon,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Lexicon {
    /// Case-insensitive exact lookup.
    pub fn lookup(&self, surface: &str) -> Option<&LexiconEntry> {
        self.entries.get(&surface.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, surface: &str, p: Pronunciation) {
        let key = surface.to_lowercase();
        let e = self
            .entries
            .entry(key.clone())
            .or_insert_with(|| LexiconEntry { surface: key, pronunciations: Vec::new() });
        if !e.pronunciations.contains(&p) {
            e.pronunciations.push(p);
        }
    }

    /// Normalized text form: one line per pronunciation, sorted by surface.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in self.entries.values() {
            for p in &e.pronunciations {
                let _ = write!(out, "{}\t[{}]", e.surface, render_ascii_ipa(&p.ipa));
                if let Some(d) = p.dialect {
                    let _ = write!(out, "\t{d}");
                }
                out.push('\n');
            }
        }
        out
    }
}

pub fn parse_lexicon(text: &str, source: &str) -> Result<Lexicon, LexiconError> {
    let mut lex = Lexicon { entries: BTreeMap::new(), source: source.to_string() };
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.trim_end_matches('\r');
        if l.trim().is_empty() || l.trim_start().starts_with('#') {
            continue;
        }
        let err = |reason: String| LexiconError::ParseError { line, reason };
        let fields: Vec<&str> = l.split('\t').collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(err(format!("expected 2 or 3 tab-separated fields, got {}", fields.len())));
        }
        let surface = fields[0].trim();
        if surface.is_empty() {
            return Err(err("empty surface".into()));
        }
        let ipa = parse_ascii_ipa(fields[1].trim()).map_err(|e| err(format!("bad transcription: {e}")))?;
        if ipa.is_empty() {
            return Err(err("empty transcription".into()));
        }
        let dialect = match fields.get(2).map(|s| s.trim()) {
            None | Some("") => None,
            Some(d) => Some(d.parse::<Dialect>().map_err(|_| err(format!("unknown dialect `{d}`")))?),
        };
        lex.insert(surface, Pronunciation { ipa, dialect });
    }
    if lex.is_empty() {
        return Err(LexiconError::EmptyLexicon);
    }
    Ok(lex)
}

pub fn load_lexicon(path: impl AsRef<Path>) -> Result<Lexicon, LexiconError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_lexicon(&text, &path.display().to_string())
}

pub fn save_lexicon(lex: &Lexicon, path: impl AsRef<Path>) -> Result<(), LexiconError> {
    std::fs::write(path, lex.to_tsv())?;
    Ok(())
}

const STARTER: &str = include_str!("../data/starter_lexicon.tsv");

/// The bundled lexicon: general American pronunciations of every word in
/// the example texts plus common words.
pub fn starter_lexicon() -> Lexicon {
    parse_lexicon(STARTER, "starter").expect("bundled lexicon parses")
}
