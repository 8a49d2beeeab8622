//! Phoneme inventory, the ASCII (TIPA-like) and Unicode codecs, and dialects.
//!
//! A transcription is a flat list of [`Phone`]s. Stress is carried by the
//! first vowel of a stressed unit, never by a consonant.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Phoneme {
    // consonants
    P,
    B,
    T,
    D,
    G,
    K,
    M,
    N,
    Eng,
    R,
    F,
    V,
    Theta,
    Eth,
    S,
    Z,
    Esh,
    Ezh,
    TEsh,
    DEzh,
    H,
    X,
    J,
    L,
    W,
    /// voiceless w, `\*w`
    Wh,
    /// alveolar flap
    Flap,
    // vowels
    ILong,
    INear,
    IShort,
    ULong,
    UShort,
    UNear,
    EI,
    Schwa,
    OU,
    SchwaU,
    Epsilon,
    Ae,
    Wedge,
    OpenOLong,
    OpenO,
    TurnedA,
    ALong,
    AShort,
    AI,
    OI,
    AU,
    ErLong,
    Er,
    /// reduced rounded central vowel, `8`
    BarO,
    /// reduced `0`
    BarU,
    /// reduced `1`
    BarI,
    /// the `K` code: [r] in rhotic accents, schwa(r) in non-rhotic ones
    Rhotic,
    /// the `(j)` yod, resolved per dialect
    OptJ,
    /// segment joint written in the transcription as `-`
    Hyphen,
}

use Phoneme::*;

/// (phoneme, ascii code, unicode rendering)
const CODES: &[(Phoneme, &str, &str)] = &[
    (P, "p", "p"),
    (B, "b", "b"),
    (T, "t", "t"),
    (D, "d", "d"),
    (G, "g", "ɡ"),
    (K, "k", "k"),
    (M, "m", "m"),
    (N, "n", "n"),
    (Eng, "N", "ŋ"),
    (R, "r", "r"),
    (F, "f", "f"),
    (V, "v", "v"),
    (Theta, "T", "θ"),
    (Eth, "D", "ð"),
    (S, "s", "s"),
    (Z, "z", "z"),
    (Esh, "S", "ʃ"),
    (Ezh, "Z", "ʒ"),
    (TEsh, "tS", "tʃ"),
    (DEzh, "dZ", "dʒ"),
    (H, "h", "h"),
    (X, "x", "x"),
    (J, "j", "j"),
    (L, "l", "l"),
    (W, "w", "w"),
    (Wh, "\\*w", "ʍ"),
    (Flap, "R", "ɾ"),
    (ILong, "i:", "iː"),
    (INear, "I", "ɪ"),
    (IShort, "i", "i"),
    (ULong, "u:", "uː"),
    (UShort, "u", "u"),
    (UNear, "U", "ʊ"),
    (EI, "eI", "eɪ"),
    (Schwa, "@", "ə"),
    (OU, "oU", "oʊ"),
    (SchwaU, "@U", "əʊ"),
    (Epsilon, "E", "ɛ"),
    (Ae, "\\ae{}", "æ"),
    (Wedge, "2", "ʌ"),
    (OpenOLong, "O:", "ɔː"),
    (OpenO, "O", "ɔ"),
    (TurnedA, "6", "ɒ"),
    (ALong, "A:", "ɑː"),
    (AShort, "A", "ɑ"),
    (AI, "aI", "aɪ"),
    (OI, "OI", "ɔɪ"),
    (AU, "aU", "aʊ"),
    (ErLong, "3:", "ɜː"),
    (Er, "3", "ɜ"),
    (BarO, "8", "ɵ"),
    (BarU, "0", "ʉ"),
    (BarI, "1", "ɨ"),
    (Rhotic, "K", "(ə)r"),
    (OptJ, "(j)", "(j)"),
    (Hyphen, "-", "-"),
];

/// Alternative spellings accepted by the parser, longest first.
const ALIASES: &[(&str, Phoneme)] = &[("\\ae{}", Ae), ("\\*r", R), ("\\*w", Wh), ("\\ae", Ae)];

impl Phoneme {
    pub fn ascii(self) -> &'static str {
        CODES.iter().find(|c| c.0 == self).map(|c| c.1).unwrap_or("?")
    }

    pub fn unicode(self) -> &'static str {
        CODES.iter().find(|c| c.0 == self).map(|c| c.2).unwrap_or("?")
    }

    pub fn is_vowel(self) -> bool {
        matches!(
            self,
            ILong
                | INear
                | IShort
                | ULong
                | UShort
                | UNear
                | EI
                | Schwa
                | OU
                | SchwaU
                | Epsilon
                | Ae
                | Wedge
                | OpenOLong
                | OpenO
                | TurnedA
                | ALong
                | AShort
                | AI
                | OI
                | AU
                | ErLong
                | Er
                | BarO
                | BarU
                | BarI
        )
    }

    pub fn is_consonant(self) -> bool {
        !self.is_vowel() && !matches!(self, Rhotic | OptJ | Hyphen)
    }

    pub fn is_voiceless(self) -> bool {
        matches!(self, P | T | K | F | Theta | S | Esh | TEsh | H | X | Wh)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stress {
    Primary,
    Secondary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Phone {
    pub phoneme: Phoneme,
    pub stress: Option<Stress>,
}

impl Phone {
    pub fn plain(phoneme: Phoneme) -> Self {
        Phone { phoneme, stress: None }
    }
}

impl From<Phoneme> for Phone {
    fn from(p: Phoneme) -> Self {
        Phone::plain(p)
    }
}

pub type IpaTranscription = Vec<Phone>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub enum Dialect {
    /// General American.
    #[default]
    GA,
    /// Received Pronunciation.
    RP,
    /// No accent conversion: `K`, long vowels and the yod are left as produced
    /// by the rules. This is the notation used for worked examples.
    Neutral,
}

impl FromStr for Dialect {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "GA" => Ok(Dialect::GA),
            "RP" => Ok(Dialect::RP),
            "NEUTRAL" | "GENERIC" | "NONE" => Ok(Dialect::Neutral),
            _ => Err(format!("unknown dialect `{s}`")),
        }
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dialect::GA => "GA",
            Dialect::RP => "RP",
            Dialect::Neutral => "NEUTRAL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IpaError {
    #[error("unknown phoneme code at offset {0}")]
    UnknownCode(usize),
    #[error("stress mark at offset {0} is not followed by a vowel")]
    DanglingStress(usize),
}

/// Parses an ASCII transcription such as `[n"oUb6dI-z]`.
///
/// Brackets are optional. `\ae` and `\ae{}` are both accepted, as is `\*r`
/// for `r`. Whitespace is ignored.
pub fn parse_ascii_ipa(s: &str) -> Result<IpaTranscription, IpaError> {
    let trimmed = s.trim();
    let (body, base) = match trimmed.strip_prefix('[') {
        Some(rest) => (rest.strip_suffix(']').unwrap_or(rest), s.len() - s.trim_start().len() + 1),
        None => (trimmed, s.len() - s.trim_start().len()),
    };
    let bytes = body.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let mut pending: Option<(Stress, usize)> = None;
    while i < bytes.len() {
        let rest = &body[i..];
        if rest.starts_with(char::is_whitespace) {
            i += rest.chars().next().map(char::len_utf8).unwrap_or(1);
            continue;
        }
        if rest.starts_with('"') {
            if pending.is_some() {
                return Err(IpaError::DanglingStress(base + i));
            }
            if rest.starts_with("\"\"") {
                pending = Some((Stress::Secondary, base + i));
                i += 2;
            } else {
                pending = Some((Stress::Primary, base + i));
                i += 1;
            }
            continue;
        }
        let (ph, len) = match_code(rest).ok_or(IpaError::UnknownCode(base + i))?;
        let mut phone = Phone::plain(ph);
        if let Some((st, at)) = pending.take() {
            if !ph.is_vowel() {
                return Err(IpaError::DanglingStress(at));
            }
            phone.stress = Some(st);
        }
        out.push(phone);
        i += len;
    }
    if let Some((_, at)) = pending {
        return Err(IpaError::DanglingStress(at));
    }
    Ok(out)
}

fn match_code(rest: &str) -> Option<(Phoneme, usize)> {
    for (code, ph) in ALIASES {
        if rest.starts_with(code) {
            return Some((*ph, code.len()));
        }
    }
    let mut best: Option<(Phoneme, usize)> = None;
    for (ph, code, _) in CODES {
        if rest.starts_with(code) && best.is_none_or(|b| code.len() > b.1) {
            best = Some((*ph, code.len()));
        }
    }
    best
}

/// Renders the ASCII form without brackets, e.g. `D"\ae{}t`.
pub fn render_ascii_ipa(t: &[Phone]) -> String {
    let mut s = String::new();
    for p in t {
        match p.stress {
            Some(Stress::Primary) => s.push('"'),
            Some(Stress::Secondary) => s.push_str("\"\""),
            None => {}
        }
        s.push_str(p.phoneme.ascii());
    }
    s
}

/// Renders IPA in Unicode with `ˈ`/`ˌ` placed immediately before the stressed vowel.
pub fn render_unicode_ipa(t: &[Phone]) -> String {
    let mut s = String::new();
    for p in t {
        match p.stress {
            Some(Stress::Primary) => s.push('ˈ'),
            Some(Stress::Secondary) => s.push('ˌ'),
            None => {}
        }
        s.push_str(p.phoneme.unicode());
    }
    s
}

/// Drops stress information.
pub fn strip_stress(t: &[Phone]) -> IpaTranscription {
    t.iter().map(|p| Phone::plain(p.phoneme)).collect()
}

/// Equality that treats the reduced vowels `8` and `0` as `@`, and `1` as `i`.
pub fn reduced_equivalent(a: &[Phone], b: &[Phone]) -> bool {
    fn fold(p: &Phone) -> Phone {
        let phoneme = match p.phoneme {
            BarO | BarU => Schwa,
            BarI => IShort,
            other => other,
        };
        Phone { phoneme, stress: p.stress }
    }
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| fold(x) == fold(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ph(s: &str) -> IpaTranscription {
        parse_ascii_ipa(s).unwrap()
    }

    #[test]
    fn parses_figure_word() {
        let t = ph("[n\"oUb6dI-z]");
        let codes: Vec<Phoneme> = t.iter().map(|p| p.phoneme).collect();
        assert_eq!(codes, vec![N, OU, B, TurnedA, D, INear, Hyphen, Z]);
        assert_eq!(t[1].stress, Some(Stress::Primary));
    }

    #[test]
    fn affricates_are_single() {
        let t = ph("kw\"EstS@nIN");
        assert_eq!(t.len(), 9);
        assert_eq!(t[4].phoneme, TEsh);
        assert_eq!(ph("dZ\"i:n@s")[0].phoneme, DEzh);
    }

    #[test]
    fn ae_aliases() {
        assert_eq!(ph("D\"\\aet"), ph("D\"\\ae{}t"));
        assert_eq!(render_ascii_ipa(&ph("D\"\\aet")), "D\"\\ae{}t");
        assert_eq!(ph("\\*r")[0].phoneme, R);
    }

    #[test]
    fn secondary_stress() {
        let t = ph("\"\"O:str@loUp\"IT@k@s");
        assert_eq!(t[0].stress, Some(Stress::Secondary));
        assert_eq!(render_ascii_ipa(&t), "\"\"O:str@loUp\"IT@k@s");
    }

    #[test]
    fn composite_rows_split() {
        let codes: Vec<Phoneme> = ph("jUK").iter().map(|p| p.phoneme).collect();
        assert_eq!(codes, vec![J, UNear, Rhotic]);
        let codes: Vec<Phoneme> = ph("wA:r").iter().map(|p| p.phoneme).collect();
        assert_eq!(codes, vec![W, ALong, R]);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_ascii_ipa("kq"), Err(IpaError::UnknownCode(1)));
        assert_eq!(parse_ascii_ipa("\"t"), Err(IpaError::DanglingStress(0)));
        assert_eq!(parse_ascii_ipa("ta\""), Err(IpaError::UnknownCode(1)));
        assert_eq!(parse_ascii_ipa("t@\""), Err(IpaError::DanglingStress(2)));
    }

    #[test]
    fn unicode() {
        assert_eq!(render_unicode_ipa(&ph("h\"aUs")), "hˈaʊs");
        assert_eq!(render_unicode_ipa(&ph("\"\\ae{}N")), "ˈæŋ");
    }

    #[test]
    fn reduced_symbols_fold() {
        assert!(reduced_equivalent(&ph("8t"), &ph("@t")));
        assert!(!reduced_equivalent(&ph("8t"), &ph("It")));
    }

    #[test]
    fn dialect_names() {
        assert_eq!("ga".parse::<Dialect>().unwrap(), Dialect::GA);
        assert_eq!("RP".parse::<Dialect>().unwrap(), Dialect::RP);
        assert!("xx".parse::<Dialect>().is_err());
    }
}
