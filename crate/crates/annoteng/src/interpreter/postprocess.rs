use super::{NextWord, Segment, TokKind};
use crate::phonology::{Dialect, IpaTranscription, Phone, Phoneme};
use Phoneme::*;

/// Step 11 output: phones per segment, and whether a written hyphen or
/// apostrophe precedes each segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recomposed {
    pub parts: Vec<Vec<Phone>>,
    pub hyphen_before: Vec<bool>,
}

impl Recomposed {
    /// The raw transcription, hyphens included.
    pub fn flatten(&self) -> IpaTranscription {
        let mut out = Vec::new();
        for (k, p) in self.parts.iter().enumerate() {
            if self.hyphen_before[k] {
                out.push(Phone::plain(Hyphen));
            }
            out.extend(p.iter().copied());
        }
        out
    }
}

/// Step 11: concatenate token values in spelling order.
pub fn recompose(segs: &[Segment]) -> Recomposed {
    let mut parts = Vec::with_capacity(segs.len());
    let mut hyphen_before = Vec::with_capacity(segs.len());
    for s in segs {
        let mut p = Vec::new();
        for t in &s.toks {
            if t.kind == TokKind::Schwa {
                p.push(Phone::plain(Schwa));
            } else if let Some(v) = &t.phones {
                p.extend(v.iter().copied());
            }
        }
        parts.push(p);
        hyphen_before.push(s.joint.as_ref().is_some_and(|j| j.written.is_some()));
    }
    Recomposed { parts, hyphen_before }
}

fn collapse(p: &mut Vec<Phone>) {
    let mut out: Vec<Phone> = Vec::with_capacity(p.len());
    for &x in p.iter() {
        if let Some(last) = out.last_mut() {
            let a = last.phoneme;
            let b = x.phoneme;
            if a == b && a.is_consonant() {
                continue;
            }
            if (a == T && b == TEsh) || (a == D && b == DEzh) {
                *last = x;
                continue;
            }
        }
        out.push(x);
    }
    *p = out;
}

/// A schwa goes before a final r that follows a consonant, also when an
/// s or z closes the segment.
fn schwa_before_final_r(p: &mut Vec<Phone>) {
    let n = p.len();
    let tail = if n >= 1 && matches!(p[n - 1].phoneme, S | Z) { 1 } else { 0 };
    if n < 2 + tail {
        return;
    }
    let r = n - 1 - tail;
    if p[r].phoneme == R && p[r - 1].phoneme.is_consonant() {
        p.insert(r, Phone::plain(Schwa));
    }
}

fn next_sound(p: &[Phone], i: usize) -> Option<Phoneme> {
    p[i + 1..]
        .iter()
        .map(|x| x.phoneme)
        .find(|x| !matches!(x, Hyphen | OptJ))
}

/// How a vowel surfaces in a dialect.
pub(crate) fn dialect_vowel(p: Phoneme, dialect: Dialect) -> Phoneme {
    match (dialect, p) {
        (Dialect::GA, ErLong) => Er,
        (Dialect::GA, TurnedA | ALong) => AShort,
        (Dialect::GA, ILong) => IShort,
        (Dialect::GA, OpenOLong) => OpenO,
        (Dialect::GA, ULong) => UShort,
        (Dialect::RP, OU) => SchwaU,
        (_, other) => other,
    }
}

fn dialect_convert(p: &[Phone], dialect: Dialect, next: NextWord) -> Vec<Phone> {
    // K r -> K everywhere
    let mut q: Vec<Phone> = Vec::with_capacity(p.len());
    for &x in p {
        if x.phoneme == R && q.last().is_some_and(|l| l.phoneme == Rhotic) {
            continue;
        }
        q.push(x);
    }
    let vowel_follows = |i: usize, q: &[Phone]| match next_sound(q, i) {
        Some(x) => x.is_vowel(),
        None => next == NextWord::Vowel,
    };
    let mut out = Vec::with_capacity(q.len());
    for (i, &x) in q.iter().enumerate() {
        let mut y = x;
        match dialect {
            Dialect::Neutral => out.push(y),
            Dialect::GA => {
                y.phoneme = match x.phoneme {
                    Rhotic => R,
                    other => dialect_vowel(other, dialect),
                };
                out.push(y);
            }
            Dialect::RP => match x.phoneme {
                Rhotic => {
                    out.push(Phone::plain(Schwa));
                    if vowel_follows(i, &q) {
                        out.push(Phone::plain(R));
                    }
                }
                R => {
                    if vowel_follows(i, &q) {
                        out.push(y);
                    }
                }
                OU => {
                    y.phoneme = dialect_vowel(OU, dialect);
                    out.push(y);
                }
                _ => out.push(y),
            },
        }
    }
    out
}

fn yod(p: Vec<Phone>, dialect: Dialect) -> Vec<Phone> {
    let mut out: Vec<Phone> = Vec::with_capacity(p.len());
    for mut x in p {
        if x.phoneme == OptJ {
            let prev = out.last().map(|l| l.phoneme);
            let rp_drop = matches!(prev, Some(R | L | Esh | TEsh | Ezh | DEzh));
            let drop = match dialect {
                Dialect::RP => rp_drop,
                Dialect::GA => rp_drop || matches!(prev, Some(T | D | N)),
                Dialect::Neutral => false,
            };
            if drop {
                continue;
            }
            x.phoneme = J;
        }
        out.push(x);
    }
    out
}

fn finish(parts: Vec<Vec<Phone>>, hyphen_before: &[bool], dialect: Dialect, next: NextWord) -> IpaTranscription {
    let mut flat = Vec::new();
    for (k, mut p) in parts.into_iter().enumerate() {
        collapse(&mut p);
        schwa_before_final_r(&mut p);
        if hyphen_before[k] {
            flat.push(Phone::plain(Hyphen));
        }
        flat.extend(p);
    }
    collapse(&mut flat);
    let mut out = yod(dialect_convert(&flat, dialect, next), dialect);
    collapse(&mut out);
    out
}

/// Step 12 on a recomposed word.
pub fn postprocess_with(r: &Recomposed, dialect: Dialect, next: NextWord) -> IpaTranscription {
    finish(r.parts.clone(), &r.hyphen_before, dialect, next)
}

/// Step 12 on a flat transcription; hyphens mark segment boundaries.
pub fn postprocess(t: &[Phone], dialect: Dialect, next: NextWord) -> IpaTranscription {
    let mut parts = vec![Vec::new()];
    let mut hyphen_before = vec![false];
    for &x in t {
        if x.phoneme == Hyphen {
            parts.push(Vec::new());
            hyphen_before.push(true);
        } else {
            parts.last_mut().unwrap().push(x);
        }
    }
    finish(parts, &hyphen_before, dialect, next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phonology::{parse_ascii_ipa, render_ascii_ipa};

    fn pp(s: &str, d: Dialect) -> String {
        render_ascii_ipa(&postprocess(&parse_ascii_ipa(s).unwrap(), d, NextWord::None))
    }

    #[test]
    fn collapse_and_schwa() {
        assert_eq!(pp("k\"\\ae{}tts", Dialect::Neutral), "k\"\\ae{}ts");
        assert_eq!(pp("m\"i:tr", Dialect::Neutral), "m\"i:t@r");
        assert_eq!(pp("\"Akrz", Dialect::Neutral), "\"Ak@rz");
        assert_eq!(pp("k\"\\ae{}t-tS", Dialect::Neutral), "k\"\\ae{}t-tS");
        assert_eq!(pp("w\"ItttS", Dialect::Neutral), "w\"ItS");
    }

    #[test]
    fn dialects() {
        assert_eq!(pp("fl\"aUKr", Dialect::GA), "fl\"aUr");
        assert_eq!(pp("fl\"aUKr", Dialect::RP), "fl\"aU@");
        assert_eq!(pp("t\"oUn", Dialect::RP), "t\"@Un");
        assert_eq!(pp("f\"Ar", Dialect::RP), "f\"A");
        assert_eq!(pp("f\"A:D@r", Dialect::GA), "f\"AD@r");
        assert_eq!(pp("n(j)\"u:", Dialect::GA), "n\"u");
        assert_eq!(pp("n(j)\"u:", Dialect::RP), "nj\"u:");
        assert_eq!(pp("r(j)\"u:l", Dialect::RP), "r\"u:l");
        assert_eq!(pp("f(j)\"u:", Dialect::Neutral), "fj\"u:");
    }

    #[test]
    fn rp_linking() {
        let t = parse_ascii_ipa("f\"Ar").unwrap();
        let out = postprocess(&t, Dialect::RP, NextWord::Vowel);
        assert_eq!(render_ascii_ipa(&out), "f\"Ar");
    }
}
