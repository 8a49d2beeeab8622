//! Annotation density of an annotated document.

use std::ops::Add;

use annoteng::Document;
use serde::Serialize;

/// Raw counts. Words inside non-annotated regions are left out, and only
/// alphabetic characters count as letters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counts {
    pub letters: usize,
    pub words: usize,
    pub annotations: usize,
    pub annotated_words: usize,
}

impl Add for Counts {
    type Output = Counts;

    fn add(self, o: Counts) -> Counts {
        Counts {
            letters: self.letters + o.letters,
            words: self.words + o.words,
            annotations: self.annotations + o.annotations,
            annotated_words: self.annotated_words + o.annotated_words,
        }
    }
}

impl Counts {
    pub fn of(doc: &Document) -> Counts {
        let mut c = Counts::default();
        for (w, foreign) in doc.words() {
            if foreign {
                continue;
            }
            let n = w.annotation_count();
            c.words += 1;
            c.letters += w.letters.iter().filter(|l| l.is_alphabetic()).count();
            c.annotations += n;
            c.annotated_words += usize::from(n > 0);
        }
        c
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Stats {
    pub annotations_per_letter: f64,
    pub annotations_per_word: f64,
    pub annotated_words_per_word: f64,
    pub counts: Counts,
}

fn ratio(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

impl From<Counts> for Stats {
    fn from(c: Counts) -> Stats {
        Stats {
            annotations_per_letter: ratio(c.annotations, c.letters),
            annotations_per_word: ratio(c.annotations, c.words),
            annotated_words_per_word: ratio(c.annotated_words, c.words),
            counts: c,
        }
    }
}

/// Group marks are not counted as annotations.
pub fn compute_stats(doc: &Document) -> Stats {
    Counts::of(doc).into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use annoteng::markup::parse_document;

    fn stats(s: &str) -> Stats {
        compute_stats(&parse_document(s).unwrap())
    }

    #[test]
    fn empty_and_plain() {
        assert_eq!(stats(""), Stats::from(Counts::default()));
        let s = stats("the cat sat.");
        assert_eq!(s.annotated_words_per_word, 0.0);
        assert_eq!(s.counts.words, 3);
        assert_eq!(s.counts.letters, 9);
    }

    #[test]
    fn counts_marks_not_groups() {
        let s = stats("hou\\no{s}e he\\si{a}d \\sno{\\group{ssi}}on, \\nonl{}caf\\nonr{}");
        assert_eq!(s.counts, Counts { letters: 14, words: 3, annotations: 3, annotated_words: 3 });
        assert_eq!(s.annotations_per_letter, 3.0 / 14.0);
    }
}
