use std::collections::BTreeSet;

use super::cost::{insertion_position, mark_position, CostModel};
use crate::interpreter::{class_value, dialect_vowel, mark_value};
use crate::markup::{is_vowel_letter, AnnotatedWord, Annotation, AnnotationKind, SEPARATORS, VOWEL_CLASSES};
use crate::phonology::{Dialect, Phone, Phoneme, Stress};
use AnnotationKind::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Mark(usize, Annotation),
    Insert(usize, AnnotationKind),
}

/// One annotation the coder may place, with its cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub place: Place,
    pub cost: i64,
    pub position: i64,
}

impl Candidate {
    /// Two candidates that cannot appear in the same word.
    pub fn conflicts(&self, other: &Candidate) -> bool {
        match (self.place, other.place) {
            (Place::Insert(g1, _), Place::Insert(g2, _)) => g1 == g2,
            (Place::Insert(g, _), Place::Mark(s, a)) | (Place::Mark(s, a), Place::Insert(g, _)) => {
                s < g && g < s + a.span
            }
            (Place::Mark(s1, a1), Place::Mark(s2, a2)) => {
                let (e1, e2) = (s1 + a1.span, s2 + a2.span);
                if e1 <= s2 || e2 <= s1 {
                    return false;
                }
                let nested = (s1 <= s2 && e2 <= e1) || (s2 <= s1 && e1 <= e2);
                // only a stress mark may share letters, and only with a vowel class
                let pair = (a1.kind.is_stress() && a2.kind.is_vowel_class())
                    || (a2.kind.is_stress() && a1.kind.is_vowel_class());
                !(nested && pair)
            }
        }
    }

    /// Preference among candidates of equal cost and position.
    pub fn rank(&self) -> u8 {
        let kind = match self.place {
            Place::Mark(_, a) => a.kind,
            Place::Insert(_, k) => k,
        };
        tie_rank(kind)
    }

    pub fn apply(&self, w: &mut AnnotatedWord) {
        match self.place {
            Place::Mark(s, a) => w.add_mark(s, a),
            Place::Insert(g, k) => w.add_insertion(g, k),
        }
    }
}

/// Order of preference between kinds: the specific voiceless and voiced
/// marks come before the catch-all common mark.
pub fn tie_rank(k: AnnotationKind) -> u8 {
    const ORDER: [AnnotationKind; 29] = [
        Silent, Stress, SecondaryStress, Natural, Plain, Broad, IDiph, UDiph, Clear, Central, Iotted, Rounded,
        Opaque, Voiceless, Voiced, Common, SoftVoiceless, SoftVoiced, HardVoiceless, HardVoiced, Sep, SepL, SepR,
        SepLR, SepRL, Schwa, SemiW, SemiY, Group,
    ];
    ORDER.iter().position(|x| *x == k).unwrap_or(ORDER.len()) as u8
}

/// What the target can contain, for discarding marks that would emit a
/// sound the target lacks.
struct TargetSounds {
    sounds: BTreeSet<Phoneme>,
    primary: bool,
    secondary: bool,
    dialect: Dialect,
}

impl TargetSounds {
    fn new(target: &[Phone], dialect: Dialect) -> Self {
        TargetSounds {
            sounds: target.iter().map(|p| p.phoneme).collect(),
            primary: target.iter().any(|p| p.stress == Some(Stress::Primary)),
            secondary: target.iter().any(|p| p.stress == Some(Stress::Secondary)),
            dialect,
        }
    }

    /// Every sound a mark always emits must be in the target. r, the
    /// rhotic code and the yod may vanish in postprocessing and are skipped.
    fn admits(&self, emitted: &[Phoneme]) -> bool {
        emitted
            .iter()
            .filter(|p| !matches!(p, Phoneme::R | Phoneme::Rhotic | Phoneme::OptJ))
            .all(|p| self.sounds.contains(&dialect_vowel(*p, self.dialect)))
    }

    fn admits_class(&self, class: AnnotationKind, letter: char) -> bool {
        match class_value(class, letter) {
            Some((plain, rho)) => self.admits(plain) || rho.is_some_and(|r| self.admits(r)),
            None => false,
        }
    }
}

fn is_joint(c: char) -> bool {
    c == '-' || c == '\''
}

fn has_vowel(s: &[char]) -> bool {
    s.iter().any(|c| matches!(c.to_ascii_lowercase(), 'a' | 'e' | 'i' | 'o' | 'u' | 'y'))
}

/// A separator at gap `g` must leave a vowel on both sides within the part
/// between hyphens or apostrophes.
fn separator_allowed(letters: &[char], g: usize) -> bool {
    if g == 0 || g >= letters.len() || is_joint(letters[g - 1]) || is_joint(letters[g]) {
        return false;
    }
    let start = letters[..g].iter().rposition(|c| is_joint(*c)).map_or(0, |i| i + 1);
    let end = letters[g..].iter().position(|c| is_joint(*c)).map_or(letters.len(), |i| g + i);
    has_vowel(&letters[start..g]) && has_vowel(&letters[g..end])
}

/// The annotation universe for a spelling and target, sorted by cost.
pub fn candidates(spelling: &str, target: &[Phone], dialect: Dialect, m: &CostModel) -> Vec<Candidate> {
    let letters: Vec<char> = spelling.chars().collect();
    let lower: Vec<char> = letters.iter().map(|c| c.to_ascii_lowercase()).collect();
    let n = letters.len();
    let t = TargetSounds::new(target, dialect);
    let mut out = Vec::new();
    let mut mark = |s: usize, kind: AnnotationKind, span: usize| {
        let a = Annotation::new(kind, span);
        let text: String = lower[s..s + span].iter().collect();
        out.push(Candidate { place: Place::Mark(s, a), cost: m.mark_cost(a, &text), position: mark_position(a, s) });
    };
    for i in 0..n {
        let c = lower[i];
        if is_joint(c) {
            continue;
        }
        let pair_ok = i + 1 < n && !is_joint(lower[i + 1]);
        mark(i, Silent, 1);
        if is_vowel_letter(c) {
            if t.primary {
                mark(i, Stress, 1);
            }
            if t.secondary {
                mark(i, SecondaryStress, 1);
            }
            for class in VOWEL_CLASSES {
                if t.admits_class(class, c) {
                    mark(i, class, 1);
                    if pair_ok && class.has_double_form() {
                        mark(i, class, 2);
                    }
                }
            }
            if c != 'w' && c != 'y' {
                if t.sounds.contains(&Phoneme::W) {
                    mark(i, SemiW, 1);
                }
                if t.sounds.contains(&Phoneme::J) {
                    mark(i, SemiY, 1);
                }
            }
        }
        if c == 'g' && pair_ok && lower[i + 1] == 'h' && t.sounds.contains(&Phoneme::Schwa) {
            mark(i, Opaque, 2);
        }
        if !matches!(c, 'a' | 'e' | 'i' | 'o') {
            for kind in [Common, Voiced, Voiceless] {
                for span in 1..=2 {
                    if i + span > n || lower[i..i + span].iter().any(|c| is_joint(*c)) {
                        continue;
                    }
                    let text: String = lower[i..i + span].iter().collect();
                    if let Some(v) = mark_value(kind, &text) {
                        if t.admits(&v) {
                            mark(i, kind, span);
                        }
                    }
                }
            }
        }
        if !is_vowel_letter(c) || c == 'w' || c == 'y' {
            for kind in [SoftVoiceless, SoftVoiced, HardVoiceless, HardVoiced] {
                for span in 1..=3 {
                    if i + span > n || lower[i..i + span].iter().any(|c| is_joint(*c)) {
                        continue;
                    }
                    let text: String = lower[i..i + span].iter().collect();
                    if mark_value(kind, &text).is_some_and(|v| t.admits(&v)) {
                        mark(i, kind, span);
                    }
                }
            }
        }
    }
    let mut insert = |g: usize, k: AnnotationKind| {
        out.push(Candidate { place: Place::Insert(g, k), cost: m.insertion_cost(k), position: insertion_position(k, g) });
    };
    for g in 0..=n {
        let inside = g > 0 && g < n && !is_joint(lower[g - 1]) && !is_joint(lower[g]);
        for k in SEPARATORS {
            if separator_allowed(&letters, g) {
                insert(g, k);
            }
        }
        if inside && t.sounds.contains(&Phoneme::Schwa) {
            insert(g, Schwa);
        }
        if g < n && !is_joint(lower[g]) {
            if t.sounds.contains(&Phoneme::W) {
                insert(g, SemiW);
            }
            if t.sounds.contains(&Phoneme::J) {
                insert(g, SemiY);
            }
        }
    }
    out.sort_by(|a, b| (a.cost, a.position, a.place).cmp(&(b.cost, b.position, b.place)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phonology::parse_ascii_ipa;

    fn places(spelling: &str, target: &str) -> Vec<String> {
        let t = parse_ascii_ipa(target).unwrap();
        candidates(spelling, &t, Dialect::Neutral, &CostModel::default())
            .iter()
            .map(|c| {
                let mut w = AnnotatedWord::plain(spelling);
                c.apply(&mut w);
                w.to_string()
            })
            .collect()
    }

    #[test]
    fn filtered_by_target() {
        let p = places("head", "h\"Ed");
        assert!(p.contains(&"he\\si{a}d".to_string()));
        assert!(p.contains(&"h\\pln{e}ad".to_string()));
        assert!(!p.contains(&"h\\cnt{e}ad".to_string()));
        // no [eI] in the target, so no broad e
        assert!(!p.contains(&"h\\brd{e}ad".to_string()));
        assert!(!p.iter().any(|s| s.contains("\\stst")));
    }

    #[test]
    fn separators_need_vowels_on_both_sides() {
        let p = places("Ireland", "\"aIrl@nd");
        assert!(p.contains(&"Ire\\se{}land".to_string()));
        assert!(!p.contains(&"\\se{}Ireland".to_string()));
        assert!(!p.contains(&"Irelan\\se{}d".to_string()));
        let p = places("bind", "b\"aInd");
        assert!(!p.contains(&"bi\\se{}nd".to_string()));
    }

    #[test]
    fn conflicts() {
        let c = |place| Candidate { place, cost: 1, position: 0 };
        let st = c(Place::Mark(1, Annotation::new(Stress, 1)));
        let nat = c(Place::Mark(1, Annotation::new(Natural, 1)));
        let si = c(Place::Mark(1, Annotation::new(Silent, 1)));
        let dbl = c(Place::Mark(0, Annotation::new(Broad, 2)));
        let gap = c(Place::Insert(1, Sep));
        assert!(!st.conflicts(&nat));
        assert!(st.conflicts(&si));
        assert!(nat.conflicts(&si));
        assert!(dbl.conflicts(&nat));
        assert!(dbl.conflicts(&gap));
        assert!(!nat.conflicts(&gap));
    }
}
