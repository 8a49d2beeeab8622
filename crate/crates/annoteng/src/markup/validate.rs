use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AnnotatedWord, AnnotationKind, Document, Item, RegionToggle};
use AnnotationKind::*;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    SpanOutOfWord { start: usize, kind: AnnotationKind },
    BadSpan { start: usize, kind: AnnotationKind, span: usize },
    TwoVowelClasses { letter: usize },
    SilentWithOthers { letter: usize },
    CrossingMarks { a: usize, b: usize },
    MarkOnApostrophe { letter: usize, kind: AnnotationKind },
    BadInsertion { gap: usize, kind: AnnotationKind },
    HeterogeneousGroup { start: usize },
    EmptyWord,
    ForeignLetter { letter: usize },
    // document level
    UnbalancedRegion { item: usize },
    MarkedInNonAnnotated { item: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

fn span_ok(kind: AnnotationKind, span: usize, letters: &[char], start: usize) -> bool {
    match kind {
        k if k.is_vowel_class() => span == 1 || (span == 2 && k.has_double_form()),
        k if k.is_separator() => span == 1 && letters.get(start) == Some(&'\''),
        Schwa => span == 2,
        _ => span >= 1,
    }
}

/// Structural checks on a single word. An empty list means the word is valid.
pub fn validate(w: &AnnotatedWord) -> Vec<Violation> {
    let mut v = Vec::new();
    let n = w.letters.len();
    if n == 0 {
        v.push(Violation::EmptyWord);
    }
    let marks: Vec<_> = w.iter_marks().collect();
    for &(s, a) in &marks {
        if s + a.span > n {
            v.push(Violation::SpanOutOfWord { start: s, kind: a.kind });
            continue;
        }
        if !span_ok(a.kind, a.span, &w.letters, s) {
            v.push(Violation::BadSpan { start: s, kind: a.kind, span: a.span });
        }
        if !a.kind.is_separator() && a.kind != Group {
            for i in s..s + a.span {
                if w.letters[i] == '\'' || w.letters[i] == '-' {
                    v.push(Violation::MarkOnApostrophe { letter: i, kind: a.kind });
                }
            }
        }
    }
    for (i, c) in w.letters.iter().enumerate() {
        if !c.is_ascii() {
            v.push(Violation::ForeignLetter { letter: i });
        }
        let cover: Vec<_> = w.marks_covering(i).filter(|(_, a)| a.kind != Group).collect();
        if cover.iter().filter(|(_, a)| a.kind.is_vowel_class()).count() > 1 {
            v.push(Violation::TwoVowelClasses { letter: i });
        }
        if cover.iter().any(|(_, a)| a.kind == Silent) && cover.len() > 1 {
            v.push(Violation::SilentWithOthers { letter: i });
        }
    }
    for (x, &(s1, a1)) in marks.iter().enumerate() {
        for &(s2, a2) in &marks[x + 1..] {
            let (e1, e2) = (s1 + a1.span, s2 + a2.span);
            let nested = (s1 <= s2 && e2 <= e1) || (s2 <= s1 && e1 <= e2);
            let disjoint = e1 <= s2 || e2 <= s1;
            if !nested && !disjoint {
                v.push(Violation::CrossingMarks { a: s1, b: s2 });
            }
        }
    }
    for &(s, a) in &marks {
        if a.kind != Group {
            continue;
        }
        let e = s + a.span;
        let mixed = marks.iter().any(|&(s2, a2)| {
            let e2 = s2 + a2.span;
            a2.kind != Group && s <= s2 && e2 <= e && (s2, e2) != (s, e)
        });
        if mixed {
            v.push(Violation::HeterogeneousGroup { start: s });
        }
    }
    for (g, k) in w.iter_insertions() {
        let ok = g <= n && (k.is_separator() || matches!(k, Schwa | SemiW | SemiY));
        if !ok {
            v.push(Violation::BadInsertion { gap: g, kind: k });
        }
    }
    v
}

/// Word checks plus region nesting and the rule that words inside a
/// non-annotated region carry no marks.
pub fn validate_document(doc: &Document) -> Vec<(usize, Violation)> {
    let mut out = Vec::new();
    let mut stack: Vec<RegionToggle> = Vec::new();
    for (idx, item) in doc.items.iter().enumerate() {
        match item {
            Item::Region(r) => match r {
                RegionToggle::AnnL | RegionToggle::NonL => stack.push(*r),
                RegionToggle::AnnR | RegionToggle::NonR => {
                    let want = if *r == RegionToggle::AnnR {
                        RegionToggle::AnnL
                    } else {
                        RegionToggle::NonL
                    };
                    if stack.pop() != Some(want) {
                        out.push((idx, Violation::UnbalancedRegion { item: idx }));
                    }
                }
            },
            Item::Word(w) => {
                let foreign = stack.contains(&RegionToggle::NonL);
                if foreign {
                    if !w.is_unannotated() {
                        out.push((idx, Violation::MarkedInNonAnnotated { item: idx }));
                    }
                } else {
                    out.extend(validate(w).into_iter().map(|x| (idx, x)));
                }
            }
            Item::Text(_) => {}
        }
    }
    if !stack.is_empty() {
        out.push((doc.items.len(), Violation::UnbalancedRegion { item: doc.items.len() }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markup::{parse_document, parse_word, Annotation};

    #[test]
    fn eye_is_valid() {
        assert!(validate(&parse_word("\\iidp{ey}e").unwrap()).is_empty());
        assert!(validate(&parse_word("mi\\sno{\\group{ssi}}on").unwrap()).is_empty());
        assert!(validate(&parse_word("l\\pln{i}q\\nnat{\\st{u}e}\\si{u}r").unwrap()).is_empty());
    }

    #[test]
    fn two_vowel_classes() {
        let mut w = AnnotatedWord::plain("cat");
        w.add_mark(1, Annotation::new(Plain, 1));
        w.add_mark(1, Annotation::new(Broad, 1));
        assert_eq!(validate(&w), vec![Violation::TwoVowelClasses { letter: 1 }]);
    }

    #[test]
    fn constructed_breaches() {
        let mut w = AnnotatedWord::plain("cat");
        w.add_mark(1, Annotation::new(Silent, 1));
        w.add_mark(1, Annotation::new(Stress, 1));
        assert!(validate(&w).contains(&Violation::SilentWithOthers { letter: 1 }));
        let mut w = AnnotatedWord::plain("cat");
        w.add_mark(2, Annotation::new(Voiceless, 2));
        assert!(matches!(validate(&w)[0], Violation::SpanOutOfWord { .. }));
        let mut w = AnnotatedWord::plain("beat");
        w.add_mark(1, Annotation::new(Central, 2));
        assert!(matches!(validate(&w)[0], Violation::BadSpan { .. }));
        let w = parse_word("\\group{a\\st{b}c}").unwrap();
        assert_eq!(validate(&w), vec![Violation::HeterogeneousGroup { start: 0 }]);
    }

    #[test]
    fn marked_in_region() {
        let d = parse_document("\\nonl{}caf\\st{e}\\nonr{} ok").unwrap();
        assert_eq!(validate_document(&d), vec![(1, Violation::MarkedInNonAnnotated { item: 1 })]);
        let d = parse_document("\\nonl{}Mrs\\nonr{} \\annl{}x\\annr{}").unwrap();
        assert!(validate_document(&d).is_empty());
        let d = parse_document("\\nonl{}x").unwrap();
        assert!(matches!(validate_document(&d)[0].1, Violation::UnbalancedRegion { .. }));
    }
}
