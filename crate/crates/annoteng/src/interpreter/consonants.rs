use super::{InterpretError, RuleMark, Segment, Tok, TokKind};
use crate::markup::AnnotationKind::{self, *};
use crate::phonology::{Phone, Phoneme};
use Phoneme::*;

/// (pair, only at segment start), in priority order.
const CONSONANT_DIGRAPHS: [(&[&str], bool); 10] = [
    (&["kn", "pn", "gn", "cn"], true),
    (&["ph"], false),
    (&["ch"], false),
    (&["sh"], false),
    (&["ps"], true),
    (&["rh"], true),
    (&["pt"], true),
    (&["th"], false),
    (&["gg"], false),
    (&["ss"], false),
];

fn bare_consonant(t: &Tok) -> bool {
    t.is_consonant() && t.is_plain() && t.len() == 1
}

/// Step 9: merge consonant digraphs made of two unannotated letters.
pub fn consonant_digraphs(segs: &mut [Segment]) {
    for s in segs.iter_mut() {
        for (pairs, at_start) in CONSONANT_DIGRAPHS {
            let mut i = 0;
            while i + 1 < s.toks.len() {
                if at_start && i > 0 {
                    break;
                }
                let (a, b) = (&s.toks[i], &s.toks[i + 1]);
                if bare_consonant(a) && bare_consonant(b) {
                    let pair = format!("{}{}", a.lower(), b.lower());
                    if pairs.contains(&pair.as_str()) {
                        let b = s.toks.remove(i + 1);
                        s.toks[i].text.push_str(&b.text);
                        s.toks[i].rule = Some(RuleMark::Digraph);
                    }
                }
                i += 1;
            }
        }
    }
}

fn no_rule(t: &Tok, detail: &'static str) -> InterpretError {
    InterpretError::NoRuleForUnit { unit: t.notation(), detail }
}

/// Value of a consonant mark over `text` (lowercase), if the table has one.
pub(crate) fn mark_value(kind: AnnotationKind, text: &str) -> Option<Vec<Phoneme>> {
    let v = match kind {
        SoftVoiceless if text == "x" => vec![K, Esh],
        SoftVoiceless => vec![Esh],
        SoftVoiced => vec![Ezh],
        HardVoiceless => vec![TEsh],
        HardVoiced => vec![DEzh],
        SemiY => vec![J],
        SemiW => vec![W],
        Voiceless => match text {
            "c" | "s" | "ss" | "z" => vec![S],
            "d" => vec![T],
            "g" => vec![K],
            "gh" => vec![P],
            "th" => vec![Theta],
            "u" | "v" => vec![F],
            "x" => vec![K, S],
            "l" => vec![R],
            "n" => vec![N],
            "h" => vec![H],
            _ => return None,
        },
        Voiced => match text {
            "f" | "ph" => vec![V],
            "s" | "ss" => vec![Z],
            "th" => vec![Eth],
            "w" => vec![V],
            "x" => vec![G, Z],
            _ => return None,
        },
        Common => match text {
            "c" => vec![K],
            "ch" | "h" => vec![X],
            "g" => vec![G],
            "gh" | "ph" => vec![F],
            "j" => vec![H],
            "l" | "r" => vec![R],
            "n" => vec![Eng],
            "s" => vec![S],
            "t" => vec![Flap],
            "th" => vec![T, Theta],
            "w" => vec![W],
            "wh" => vec![Wh],
            "x" => vec![Z],
            "z" => vec![T, S],
            _ => return None,
        },
        _ => return None,
    };
    Some(v)
}

fn mark_detail(k: AnnotationKind) -> &'static str {
    match k {
        Voiceless => "voiceless mark does not apply",
        Voiced => "voiced mark does not apply",
        Common => "common mark does not apply",
        _ => "not a consonant mark",
    }
}

/// Value of a consonant token, leaving plain `s` for the voicing pass.
fn consonant_value(s: &Segment, i: usize) -> Result<Option<Vec<Phoneme>>, InterpretError> {
    let t = &s.toks[i];
    let next = s.next_real(i).map(|j| &s.toks[j]);
    let next_letter = next.and_then(|n| if n.inserted { None } else { n.first() });
    let front = matches!(next_letter, Some('e' | 'i' | 'y'));
    let text = t.lower();
    let v: Vec<Phoneme> = match t.rule {
        Some(RuleMark::Eng) => vec![Eng],
        Some(RuleMark::HardG) => vec![G],
        Some(RuleMark::SoftG) => vec![DEzh],
        Some(RuleMark::Glide) => vec![W],
        Some(RuleMark::SilentH) => vec![],
        Some(RuleMark::Digraph) => match text.as_str() {
            "kn" | "pn" | "gn" | "cn" => vec![N],
            "ph" => vec![F],
            "ch" => vec![TEsh],
            "sh" => vec![Esh],
            "ps" => vec![S],
            "rh" => vec![R],
            "pt" => vec![T],
            "th" => {
                if next.is_some_and(|n| n.is_vowel()) {
                    vec![Eth]
                } else {
                    vec![Theta]
                }
            }
            "gg" => vec![G],
            "ss" => vec![S],
            _ => return Err(no_rule(t, "unknown consonant digraph")),
        },
        None => match t.cmark {
            Some(k) => mark_value(k, &text).ok_or_else(|| no_rule(t, mark_detail(k)))?,
            None => match text.as_str() {
                "b" => vec![B],
                "c" => {
                    if front {
                        vec![S]
                    } else {
                        vec![K]
                    }
                }
                "d" => vec![D],
                "f" => vec![F],
                "g" => {
                    if front {
                        vec![DEzh]
                    } else {
                        vec![G]
                    }
                }
                "h" => {
                    if next.is_none() {
                        vec![]
                    } else {
                        vec![H]
                    }
                }
                "j" => vec![DEzh],
                "k" => vec![K],
                "l" => vec![L],
                "m" => vec![M],
                "n" => {
                    let velar = match next {
                        Some(n) if n.is_letter('k') => true,
                        Some(n) if n.len() == 1 && n.first() == Some('c') && n.cmark == Some(Common) => true,
                        Some(n) if n.is_letter('c') => s
                            .next_real(s.next_real(i).unwrap())
                            .is_some_and(|k| matches!(s.toks[k].first(), Some('a' | 'o' | 'u' | 'w'))),
                        _ => false,
                    };
                    if velar {
                        vec![Eng]
                    } else {
                        vec![N]
                    }
                }
                "p" => vec![P],
                "q" => vec![K],
                "r" => vec![R],
                "s" => return Ok(None),
                "t" => vec![T],
                "v" => vec![V],
                "w" => vec![W],
                "x" => {
                    if next.is_some_and(|n| n.is_vowel() && n.stress.is_some()) {
                        vec![G, Z]
                    } else {
                        vec![K, S]
                    }
                }
                "y" => vec![J],
                "z" => vec![Z],
                _ => return Err(no_rule(t, "no consonant value")),
            },
        },
    };
    Ok(Some(v))
}

/// Nearest token before/after `i` that is heard: skips silent vowels and
/// silent consonants but stops at an inserted schwa.
fn heard(s: &Segment, i: usize, forward: bool) -> Option<&Tok> {
    let mut k = i;
    loop {
        k = if forward {
            if k + 1 >= s.toks.len() {
                return None;
            }
            k + 1
        } else {
            k.checked_sub(1)?
        };
        let t = &s.toks[k];
        match &t.phones {
            Some(p) if p.is_empty() => continue,
            _ => return Some(t),
        }
    }
}

fn voiceless_neighbour(t: Option<&Tok>, forward: bool) -> bool {
    let Some(t) = t else { return false };
    if t.kind != TokKind::Consonant {
        return false;
    }
    let p = match &t.phones {
        Some(p) => p,
        None => return false,
    };
    let edge = if forward { p.first() } else { p.last() };
    edge.is_some_and(|x| x.phoneme.is_voiceless())
}

fn s_value(s: &Segment, i: usize) -> Phoneme {
    if i == 0 || s.prev_real(i).is_none() {
        return S;
    }
    if voiceless_neighbour(heard(s, i, false), false) || voiceless_neighbour(heard(s, i, true), true) {
        return S;
    }
    let prev = s.prev_real(i).map(|j| &s.toks[j]);
    let next = s.next_real(i).map(|j| &s.toks[j]);
    if prev.is_some_and(|p| p.is_consonant()) && next.is_some_and(|n| n.is_vowel()) {
        return S;
    }
    Z
}

/// Step 10: evaluate consonant tokens.
pub fn evaluate_consonants(segs: &mut [Segment]) -> Result<(), InterpretError> {
    for si in 0..segs.len() {
        let mut pending = Vec::new();
        {
            let s = &mut segs[si];
            for i in 0..s.toks.len() {
                if s.toks[i].kind != TokKind::Consonant {
                    continue;
                }
                match consonant_value(s, i)? {
                    Some(v) => s.toks[i].phones = Some(v.into_iter().map(Phone::plain).collect()),
                    None => pending.push(i),
                }
            }
        }
        // a lone `s` after an apostrophe or hyphen follows the sound before it
        let lone = segs[si].toks.len() == 1 && pending == [0];
        if lone && si > 0 {
            let prev_last = segs[si - 1]
                .toks
                .iter()
                .rev()
                .filter_map(|t| t.phones.as_ref())
                .flat_map(|p| p.iter().rev())
                .next()
                .map(|p| p.phoneme);
            let v = if prev_last.is_some_and(|p| p.is_voiceless()) { S } else { Z };
            segs[si].toks[0].phones = Some(vec![Phone::plain(v)]);
            continue;
        }
        let s = &mut segs[si];
        for i in pending {
            let v = s_value(s, i);
            s.toks[i].phones = Some(vec![Phone::plain(v)]);
        }
    }
    Ok(())
}
