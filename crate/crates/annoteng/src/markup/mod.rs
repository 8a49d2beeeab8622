//! Annotated words and documents, their textual command notation, and
//! structural validation.

mod parse;
mod render;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use parse::{parse_document, parse_word};
pub use render::{render_document, render_word};
pub use validate::{validate, validate_document, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AnnotationKind {
    Silent,
    Stress,
    SecondaryStress,
    // vowel classes
    Natural,
    Plain,
    Broad,
    IDiph,
    UDiph,
    Clear,
    Central,
    Iotted,
    Rounded,
    Opaque,
    // consonant marks
    Common,
    Voiced,
    Voiceless,
    SoftVoiced,
    SoftVoiceless,
    HardVoiced,
    HardVoiceless,
    SemiW,
    SemiY,
    // separators
    Sep,
    SepL,
    SepR,
    SepLR,
    SepRL,
    Schwa,
    Group,
}

use AnnotationKind::*;

pub const VOWEL_CLASSES: [AnnotationKind; 10] =
    [Natural, Plain, Broad, IDiph, UDiph, Clear, Central, Iotted, Rounded, Opaque];

pub const CONSONANT_MARKS: [AnnotationKind; 9] =
    [Common, Voiced, Voiceless, SoftVoiced, SoftVoiceless, HardVoiced, HardVoiceless, SemiW, SemiY];

pub const SEPARATORS: [AnnotationKind; 5] = [Sep, SepL, SepR, SepLR, SepRL];

impl AnnotationKind {
    pub fn is_vowel_class(self) -> bool {
        VOWEL_CLASSES.contains(&self)
    }

    pub fn is_consonant_mark(self) -> bool {
        CONSONANT_MARKS.contains(&self)
    }

    pub fn is_separator(self) -> bool {
        SEPARATORS.contains(&self)
    }

    pub fn is_stress(self) -> bool {
        matches!(self, Stress | SecondaryStress)
    }

    /// Kinds that have a two-letter command (`\nnat`, `\bbrd`, ...).
    pub fn has_double_form(self) -> bool {
        matches!(self, Natural | Broad | IDiph | UDiph | Clear | Opaque)
    }

    /// Command name without the backslash. `double` selects the two-letter form.
    pub fn command(self, double: bool) -> &'static str {
        let (one, two) = match self {
            Silent => ("si", "si"),
            Stress => ("st", "st"),
            SecondaryStress => ("stst", "stst"),
            Natural => ("nat", "nnat"),
            Plain => ("pln", "ppln"),
            Broad => ("brd", "bbrd"),
            IDiph => ("idp", "iidp"),
            UDiph => ("udp", "uudp"),
            Clear => ("clr", "cclr"),
            Central => ("cnt", "ccnt"),
            Iotted => ("iot", "iiot"),
            Rounded => ("rnd", "rrnd"),
            Opaque => ("opq", "oopq"),
            Common => ("co", "co"),
            Voiced => ("vo", "vo"),
            Voiceless => ("no", "no"),
            SoftVoiced => ("svo", "svo"),
            SoftVoiceless => ("sno", "sno"),
            HardVoiced => ("hvo", "hvo"),
            HardVoiceless => ("hno", "hno"),
            SemiW => ("w", "w"),
            SemiY => ("y", "y"),
            Sep => ("se", "se"),
            SepL => ("sel", "sel"),
            SepR => ("ser", "ser"),
            SepLR => ("selr", "selr"),
            SepRL => ("serl", "serl"),
            Schwa => ("sch", "ssch"),
            Group => ("group", "group"),
        };
        if double {
            two
        } else {
            one
        }
    }

    /// Nesting rank used by the canonical renderer for marks of equal span:
    /// lower ranks are written outside.
    pub(crate) fn nesting_rank(self) -> u8 {
        match self {
            Stress => 0,
            SecondaryStress => 1,
            k if k.is_vowel_class() => 2,
            Silent => 3,
            k if k.is_consonant_mark() => 4,
            k if k.is_separator() => 5,
            Schwa => 6,
            _ => 7,
        }
    }
}

/// Looks up a command name. Returns the kind and whether the double form was used.
pub(crate) fn lookup_command(name: &str) -> Option<(AnnotationKind, bool)> {
    if name == "ctr" {
        return Some((Central, false));
    }
    if name == "cctr" {
        return Some((Central, true));
    }
    const ALL: [AnnotationKind; 29] = [
        Silent, Stress, SecondaryStress, Natural, Plain, Broad, IDiph, UDiph, Clear, Central,
        Iotted, Rounded, Opaque, Common, Voiced, Voiceless, SoftVoiced, SoftVoiceless,
        HardVoiced, HardVoiceless, SemiW, SemiY, Sep, SepL, SepR, SepLR, SepRL, Schwa, Group,
    ];
    for k in ALL {
        if k.command(false) == name {
            return Some((k, false));
        }
        if k.command(true) == name && k.command(true) != k.command(false) {
            return Some((k, true));
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Annotation {
    pub kind: AnnotationKind,
    pub span: usize,
}

impl Annotation {
    pub fn new(kind: AnnotationKind, span: usize) -> Self {
        Annotation { kind, span }
    }
}

/// A word: its letters plus marks anchored at letter indices and zero-width
/// insertions anchored at gaps (gap `g` sits before letter `g`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct AnnotatedWord {
    pub letters: Vec<char>,
    pub marks: BTreeMap<usize, Vec<Annotation>>,
    pub insertions: BTreeMap<usize, Vec<AnnotationKind>>,
}

impl AnnotatedWord {
    pub fn plain(spelling: &str) -> Self {
        AnnotatedWord { letters: spelling.chars().collect(), ..Default::default() }
    }

    /// Adds a mark, keeping the marks at each start in canonical order.
    pub fn add_mark(&mut self, start: usize, a: Annotation) {
        let v = self.marks.entry(start).or_default();
        v.push(a);
        v.sort_by_key(|m| (std::cmp::Reverse(m.span), m.kind.nesting_rank(), m.kind));
    }

    pub fn add_insertion(&mut self, gap: usize, kind: AnnotationKind) {
        self.insertions.entry(gap).or_default().push(kind);
    }

    pub fn remove_mark(&mut self, start: usize, a: Annotation) -> bool {
        if let Some(v) = self.marks.get_mut(&start) {
            if let Some(i) = v.iter().position(|m| *m == a) {
                v.remove(i);
                if v.is_empty() {
                    self.marks.remove(&start);
                }
                return true;
            }
        }
        false
    }

    pub fn remove_insertion(&mut self, gap: usize, kind: AnnotationKind) -> bool {
        if let Some(v) = self.insertions.get_mut(&gap) {
            if let Some(i) = v.iter().position(|k| *k == kind) {
                v.remove(i);
                if v.is_empty() {
                    self.insertions.remove(&gap);
                }
                return true;
            }
        }
        false
    }

    /// All marks as (start, annotation), in start order.
    pub fn iter_marks(&self) -> impl Iterator<Item = (usize, Annotation)> + '_ {
        self.marks.iter().flat_map(|(s, v)| v.iter().map(move |a| (*s, *a)))
    }

    pub fn iter_insertions(&self) -> impl Iterator<Item = (usize, AnnotationKind)> + '_ {
        self.insertions.iter().flat_map(|(g, v)| v.iter().map(move |k| (*g, *k)))
    }

    /// Marks whose span covers letter `i`.
    pub fn marks_covering(&self, i: usize) -> impl Iterator<Item = (usize, Annotation)> + '_ {
        self.iter_marks().filter(move |(s, a)| *s <= i && i < s + a.span)
    }

    pub fn spelling(&self) -> String {
        self.letters.iter().collect()
    }

    pub fn is_unannotated(&self) -> bool {
        self.marks.is_empty() && self.insertions.is_empty()
    }

    /// Number of annotations, not counting grouping marks.
    pub fn annotation_count(&self) -> usize {
        self.iter_marks().filter(|(_, a)| a.kind != Group).count()
            + self.iter_insertions().filter(|(_, k)| *k != Group).count()
    }
}

impl fmt::Display for AnnotatedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(self))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionToggle {
    /// `\annl{}`: opens an explicitly annotated region.
    AnnL,
    /// `\annr{}`
    AnnR,
    /// `\nonl{}`: opens a region whose words are not interpreted.
    NonL,
    /// `\nonr{}`
    NonR,
}

impl RegionToggle {
    pub fn command(self) -> &'static str {
        match self {
            RegionToggle::AnnL => "annl",
            RegionToggle::AnnR => "annr",
            RegionToggle::NonL => "nonl",
            RegionToggle::NonR => "nonr",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Item {
    Word(AnnotatedWord),
    Text(String),
    Region(RegionToggle),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub items: Vec<Item>,
}

impl Document {
    /// Words with a flag telling whether each lies inside a non-annotated region.
    pub fn words(&self) -> Vec<(&AnnotatedWord, bool)> {
        let mut depth = 0usize;
        let mut out = Vec::new();
        for item in &self.items {
            match item {
                Item::Region(RegionToggle::NonL) => depth += 1,
                Item::Region(RegionToggle::NonR) => depth = depth.saturating_sub(1),
                Item::Word(w) => out.push((w, depth > 0)),
                _ => {}
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkupError {
    #[error("unknown command `\\{name}` at offset {offset}")]
    UnknownCommand { name: String, offset: usize },
    #[error("unbalanced or misplaced braces at offset {offset}")]
    MalformedBraces { offset: usize },
    #[error("`\\{command}` is not a valid double form for its content at offset {offset}")]
    IllegalDoubleForm { command: String, offset: usize },
    #[error("`\\{command}` cannot cover {span} letter(s) at offset {offset}")]
    IllegalSpan { command: String, span: usize, offset: usize },
    #[error("letter `{ch}` at offset {offset} is only allowed inside a non-annotated region")]
    ForeignLetter { ch: char, offset: usize },
    #[error("region toggle inside a command at offset {offset}")]
    MisplacedRegion { offset: usize },
}

impl MarkupError {
    pub fn offset(&self) -> usize {
        match self {
            MarkupError::UnknownCommand { offset, .. }
            | MarkupError::MalformedBraces { offset }
            | MarkupError::IllegalDoubleForm { offset, .. }
            | MarkupError::IllegalSpan { offset, .. }
            | MarkupError::ForeignLetter { offset, .. }
            | MarkupError::MisplacedRegion { offset } => *offset,
        }
    }
}

/// Rewrites every two-letter vowel-class mark whose first letter is a vowel
/// into a one-letter mark plus a silent mark on the second letter.
pub fn normalize(w: &AnnotatedWord) -> AnnotatedWord {
    let mut out = w.clone();
    let targets: Vec<(usize, Annotation)> = w
        .iter_marks()
        .filter(|(s, a)| {
            a.kind.is_vowel_class()
                && a.span == 2
                && w.letters.get(*s).is_some_and(|c| is_vowel_letter(*c))
                && w.marks_covering(s + 1).all(|(ms, m)| ms == *s || m.kind == Group)
        })
        .collect();
    for (s, a) in targets {
        out.remove_mark(s, a);
        out.add_mark(s, Annotation::new(a.kind, 1));
        out.add_mark(s + 1, Annotation::new(Silent, 1));
    }
    out
}

pub fn is_vowel_letter(c: char) -> bool {
    matches!(c.to_ascii_lowercase(), 'a' | 'e' | 'i' | 'o' | 'u' | 'y' | 'w')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn command_lookup() {
        assert_eq!(lookup_command("nnat"), Some((Natural, true)));
        assert_eq!(lookup_command("nat"), Some((Natural, false)));
        assert_eq!(lookup_command("ctr"), Some((Central, false)));
        assert_eq!(lookup_command("ppln"), Some((Plain, true)));
        assert_eq!(lookup_command("sch"), Some((Schwa, false)));
        assert_eq!(lookup_command("ssch"), Some((Schwa, true)));
        assert_eq!(lookup_command("si"), Some((Silent, false)));
        assert_eq!(lookup_command("foo"), None);
    }

    #[test]
    fn normalize_examples() {
        let w = parse_word("bl\\cclr{oo}d").unwrap();
        assert_eq!(render_word(&normalize(&w)), "bl\\clr{o}\\si{o}d");
        let w = parse_word("\\iidp{ey}e").unwrap();
        assert_eq!(render_word(&normalize(&w)), "\\idp{e}\\si{y}e");
        let w = parse_word("Edinbur\\oopq{gh}").unwrap();
        assert_eq!(normalize(&w), w);
    }

    #[test]
    fn annotation_count_skips_groups() {
        let w = parse_word("pa\\sno{\\group{ssi}}on").unwrap();
        assert_eq!(w.annotation_count(), 1);
    }
}
