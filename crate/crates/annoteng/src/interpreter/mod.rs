//! Interpretation: from an annotated word to a phonemic transcription.
//!
//! The work is split in twelve ordered steps. Each step is a public function
//! over [`Segment`]s so that the trace mode can print intermediate states.

mod consonants;
mod critical;
mod document;
mod postprocess;
mod segment;
mod stress;
mod trace;
mod units;
mod vowels;

use std::fmt;

use thiserror::Error;

use crate::markup::{AnnotatedWord, AnnotationKind};
use crate::phonology::{Dialect, IpaTranscription, Phone, Stress};

pub use consonants::{consonant_digraphs, evaluate_consonants};
pub use critical::critical_digraphs;
pub use document::{interpret_document, render_line, DocumentEntry, EntryResult};
pub use postprocess::{postprocess, postprocess_with, recompose, Recomposed};
pub use segment::{segment, strip_silent};
pub use stress::{assign_stress, categorize_vowels};
pub use trace::{trace_word, PipelineTrace};
pub use units::classify_and_group;
pub use vowels::{class_value, evaluate_vowels};
pub(crate) use consonants::mark_value;
pub(crate) use postprocess::dialect_vowel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpretError {
    #[error("no rule for unit `{unit}`: {detail}")]
    NoRuleForUnit { unit: String, detail: &'static str },
}

/// What starts the following word. Drives the `the` rule and RP r-linking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum NextWord {
    Vowel,
    Consonant,
    /// End of text or a punctuation break.
    #[default]
    None,
}

impl From<bool> for NextWord {
    fn from(vowel: bool) -> Self {
        if vowel {
            NextWord::Vowel
        } else {
            NextWord::Consonant
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StressClass {
    Primary,
    Secondary,
    Unstressed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TokKind {
    Undecided,
    Vowel,
    Consonant,
    /// zero-width `\sch{}`: emits a schwa, invisible to every rule
    Schwa,
}

/// Rewrites made by the critical-digraph step and the consonant-digraph step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleMark {
    /// `n` of `ng` heard as [N]
    Eng,
    /// `g` kept hard
    HardG,
    /// `g` of `nj`
    SoftG,
    /// `u` of `qu`/`gu` or the `wh` cluster, heard as [w]
    Glide,
    /// `h` between a vowel and a consonant
    SilentH,
    /// a consonant digraph formed at step 9
    Digraph,
}

/// One working unit: a letter, a letter cluster or a zero-width insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tok {
    pub text: String,
    pub kind: TokKind,
    pub vclass: Option<AnnotationKind>,
    /// the vowel class came from a two-letter mark
    pub span2: bool,
    pub cmark: Option<AnnotationKind>,
    pub mark_stress: Option<Stress>,
    pub rule: Option<RuleMark>,
    pub inserted: bool,
    /// a silent `gh` followed this letter
    pub gh_after: bool,
    pub stress: Option<Stress>,
    pub natural: Option<bool>,
    pub rhotic: bool,
    pub phones: Option<Vec<Phone>>,
}

impl Tok {
    pub fn letters(text: &str) -> Self {
        Tok {
            text: text.to_string(),
            kind: TokKind::Undecided,
            vclass: None,
            span2: false,
            cmark: None,
            mark_stress: None,
            rule: None,
            inserted: false,
            gh_after: false,
            stress: None,
            natural: None,
            rhotic: false,
            phones: None,
        }
    }

    pub fn lower(&self) -> String {
        self.text.to_lowercase()
    }

    pub fn first(&self) -> Option<char> {
        self.text.chars().next().map(|c| c.to_ascii_lowercase())
    }

    pub fn len(&self) -> usize {
        self.text.chars().count()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// No annotation and no rewrite touches this token.
    pub fn is_plain(&self) -> bool {
        self.vclass.is_none()
            && self.cmark.is_none()
            && self.mark_stress.is_none()
            && self.rule.is_none()
            && !self.inserted
            && self.kind != TokKind::Schwa
    }

    /// A single unannotated letter equal to `c`.
    pub fn is_letter(&self, c: char) -> bool {
        self.is_plain() && self.len() == 1 && self.first() == Some(c)
    }

    pub fn is_vowel(&self) -> bool {
        self.kind == TokKind::Vowel
    }

    pub fn is_consonant(&self) -> bool {
        self.kind == TokKind::Consonant
    }

    /// Letters plus marks in command notation, used by the trace.
    pub fn notation(&self) -> String {
        let mut s = self.text.clone();
        if let Some(k) = self.vclass {
            s = format!("\\{}{{{}}}", k.command(self.span2), s);
        }
        if let Some(k) = self.cmark {
            if self.inserted {
                s = format!("\\{}{{}}", k.command(false));
            } else {
                s = format!("\\{}{{{}}}", k.command(false), s);
            }
        }
        match self.rule {
            Some(RuleMark::Eng) => s = format!("\\co{{{}}}", s),
            Some(RuleMark::HardG) => s = format!("\\co{{{}}}", s),
            Some(RuleMark::SoftG) => s = "j".into(),
            Some(RuleMark::Glide) => s = "w".into(),
            Some(RuleMark::SilentH) => s = format!("\\si{{{}}}", s),
            _ => {}
        }
        if self.kind == TokKind::Schwa {
            s = "\\sch{}".into();
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Joint {
    /// separator annotation at the joint, if any
    pub sep: Option<AnnotationKind>,
    /// written hyphen or apostrophe
    pub written: Option<char>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub toks: Vec<Tok>,
    pub class: StressClass,
    /// how this segment is attached to the previous one
    pub joint: Option<Joint>,
}

impl Segment {
    /// Index of the next token after `i` that is not a zero-width schwa.
    pub fn next_real(&self, i: usize) -> Option<usize> {
        (i + 1..self.toks.len()).find(|&j| self.toks[j].kind != TokKind::Schwa)
    }

    pub fn prev_real(&self, i: usize) -> Option<usize> {
        (0..i).rev().find(|&j| self.toks[j].kind != TokKind::Schwa)
    }

    pub fn text(&self) -> String {
        self.toks.iter().map(|t| t.text.as_str()).collect()
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .toks
            .iter()
            .map(|t| {
                let mut s = String::new();
                match t.stress {
                    Some(Stress::Primary) => s.push('"'),
                    Some(Stress::Secondary) => s.push_str("\"\""),
                    None => {}
                }
                match &t.phones {
                    Some(p) if t.kind != TokKind::Schwa => {
                        let body: String = p.iter().map(|x| x.phoneme.ascii()).collect();
                        s.push('[');
                        s.push_str(&body);
                        s.push(']');
                    }
                    _ => s.push_str(&t.notation()),
                }
                s
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Runs steps 1 to 11 and returns the recomposed word before postprocessing.
pub fn run_to_recompose(
    w: &AnnotatedWord,
    next: NextWord,
) -> Result<Recomposed, InterpretError> {
    let stripped = strip_silent(w);
    let mut segs = segment(&stripped);
    critical_digraphs(&mut segs);
    classify_and_group(&mut segs);
    assign_stress(&mut segs, next);
    categorize_vowels(&mut segs);
    evaluate_vowels(&mut segs)?;
    consonant_digraphs(&mut segs);
    evaluate_consonants(&mut segs)?;
    Ok(recompose(&segs))
}

/// Full interpretation of one word. `next_vowel` tells whether the next word
/// starts with a vowel sound.
pub fn interpret_word(
    w: &AnnotatedWord,
    dialect: Dialect,
    next_vowel: bool,
) -> Result<IpaTranscription, InterpretError> {
    interpret_word_in(w, dialect, NextWord::from(next_vowel))
}

/// Like [`interpret_word`] with an explicit context for the following word.
pub fn interpret_word_in(
    w: &AnnotatedWord,
    dialect: Dialect,
    next: NextWord,
) -> Result<IpaTranscription, InterpretError> {
    let r = run_to_recompose(w, next)?;
    Ok(postprocess_with(&r, dialect, next))
}
