use serde::{Deserialize, Serialize};

use crate::markup::{AnnotatedWord, Annotation, AnnotationKind};
use AnnotationKind::*;

/// Per-kind annotation costs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostModel {
    pub stress: i64,
    pub silent: i64,
    pub non_rhotic: i64,
    pub broad: i64,
    pub broad_double: i64,
    pub frequent: i64,
    pub frequent_double: i64,
    pub rest: i64,
    pub rest_double: i64,
    pub sep: i64,
    pub sep_simple: i64,
    pub sep_stress: i64,
    pub intro: i64,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel {
            stress: 30,
            silent: 31,
            non_rhotic: 10,
            broad: 34,
            broad_double: 37,
            frequent: 42,
            frequent_double: 53,
            rest: 44,
            rest_double: 55,
            sep: 65,
            sep_simple: 66,
            sep_stress: 92,
            intro: 200,
        }
    }
}

/// Consonant groups that a one-letter-style mark can cover at single cost.
const CONSONANT_UNITS: [&str; 6] = ["th", "ch", "sh", "ph", "gh", "wh"];

impl CostModel {
    /// Cost of a mark covering `text`.
    pub fn mark_cost(&self, a: Annotation, text: &str) -> i64 {
        let double = a.span >= 2;
        match a.kind {
            Group => 0,
            Stress | SecondaryStress => self.stress,
            Silent => self.silent * a.span.max(1) as i64,
            Broad | IDiph | UDiph => {
                if double {
                    self.broad_double
                } else {
                    self.broad
                }
            }
            Natural | Plain => {
                if double {
                    self.frequent_double
                } else {
                    self.frequent
                }
            }
            Common if text.eq_ignore_ascii_case("r") => self.non_rhotic,
            SemiW | SemiY | Schwa => self.intro,
            Sep => self.sep,
            SepL | SepR => self.sep_simple,
            SepLR | SepRL => self.sep_stress,
            _ => {
                let unit = CONSONANT_UNITS.iter().any(|u| text.eq_ignore_ascii_case(u));
                if double && !unit {
                    self.rest_double
                } else {
                    self.rest
                }
            }
        }
    }

    /// Cost of a zero-width insertion.
    pub fn insertion_cost(&self, k: AnnotationKind) -> i64 {
        self.mark_cost(Annotation::new(k, 0), "")
    }
}

/// Position contribution of a mark starting at letter `start` (0-based).
pub fn mark_position(a: Annotation, start: usize) -> i64 {
    match a.kind {
        Group => 0,
        Silent => -((start + 1) as i64),
        _ => (start + 1) as i64,
    }
}

/// An insertion at gap `g` counts as taking place after letter `g`.
pub fn insertion_position(k: AnnotationKind, gap: usize) -> i64 {
    match k {
        Group => 0,
        _ => gap as i64,
    }
}

/// Total cost and position cost of an annotated word.
pub fn annotation_cost(w: &AnnotatedWord, m: &CostModel) -> (i64, i64) {
    let mut total = 0;
    let mut position = 0;
    for (s, a) in w.iter_marks() {
        let text: String = w.letters[s..(s + a.span).min(w.letters.len())].iter().collect();
        total += m.mark_cost(a, &text);
        position += mark_position(a, s);
    }
    for (g, k) in w.iter_insertions() {
        total += m.insertion_cost(k);
        position += insertion_position(k, g);
    }
    (total, position)
}
