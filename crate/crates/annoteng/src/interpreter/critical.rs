use super::{RuleMark, Segment, Tok, TokKind};
use crate::markup::AnnotationKind;

fn is_vowel_letter(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

/// Looks like a vowel before classification: a vowel class, or one of
/// a, e, i, o, u, y, w without a consonant mark.
fn vowelish(t: &Tok) -> bool {
    if t.kind == TokKind::Schwa {
        return false;
    }
    if t.vclass.is_some() {
        return true;
    }
    if t.cmark.is_some() || t.rule.is_some() || t.inserted {
        return false;
    }
    matches!(t.first(), Some('a' | 'e' | 'i' | 'o' | 'u' | 'y' | 'w'))
}

/// Consonant letter for the rules of this step: w and y count as consonants.
fn consonantish(t: &Tok) -> bool {
    if t.kind == TokKind::Schwa {
        return false;
    }
    if t.vclass.is_some() {
        return false;
    }
    if t.cmark.is_some() || t.rule.is_some() || t.inserted {
        return true;
    }
    match t.first() {
        Some(c) if is_vowel_letter(c) => false,
        Some('y' | 'w') => t.mark_stress.is_none(),
        Some(_) => true,
        None => false,
    }
}

/// Plain single letter, or one that only carries a rewrite from this step.
fn bare(t: &Tok, c: char) -> bool {
    t.vclass.is_none()
        && t.cmark.is_none()
        && t.mark_stress.is_none()
        && !t.inserted
        && t.len() == 1
        && t.first() == Some(c)
}

fn ng(toks: &mut Vec<Tok>) {
    let mut i = 0;
    while i + 1 < toks.len() {
        if !(toks[i].is_letter('n') && toks[i + 1].len() == 1 && toks[i + 1].first() == Some('g')) {
            i += 1;
            continue;
        }
        let g = &toks[i + 1];
        if g.cmark == Some(AnnotationKind::Common) && g.vclass.is_none() {
            toks[i].rule = Some(RuleMark::Eng);
            i += 2;
            continue;
        }
        if !g.is_plain() {
            i += 1;
            continue;
        }
        match toks.get(i + 2) {
            None => {
                toks[i].rule = Some(RuleMark::Eng);
                toks.remove(i + 1);
            }
            Some(t) if matches!(t.first(), Some('e' | 'i' | 'y')) && t.cmark.is_none() && !t.inserted => {
                toks[i + 1].rule = Some(RuleMark::SoftG);
            }
            Some(t) if consonantish(t) && !t.is_letter('l') && !t.is_letter('r') => {
                toks[i].rule = Some(RuleMark::Eng);
                toks.remove(i + 1);
            }
            Some(_) => {
                toks[i].rule = Some(RuleMark::Eng);
                toks[i + 1].rule = Some(RuleMark::HardG);
            }
        }
        i += 2;
    }
}

fn gh(toks: &mut Vec<Tok>) {
    let mut i = 0;
    while i + 1 < toks.len() {
        if toks[i].is_letter('g') && toks[i + 1].is_letter('h') {
            toks.drain(i..i + 2);
            if i > 0 {
                toks[i - 1].gh_after = true;
            }
        } else {
            i += 1;
        }
    }
}

fn wh(toks: &mut Vec<Tok>) {
    let mut i = 0;
    while i + 1 < toks.len() {
        if toks[i].is_letter('w') && toks[i + 1].is_letter('h') && (i == 0 || consonantish(&toks[i - 1]))
        {
            let h = toks.remove(i + 1);
            toks[i].text.push_str(&h.text);
            toks[i].rule = Some(RuleMark::Glide);
        }
        i += 1;
    }
}

fn wr(toks: &mut Vec<Tok>) {
    let mut i = 0;
    while i + 1 < toks.len() {
        let after_vowel = i > 0 && toks[i - 1].first().is_some_and(is_vowel_letter) && vowelish(&toks[i - 1]);
        if toks[i].is_letter('w') && toks[i + 1].is_letter('r') && !after_vowel {
            toks.remove(i);
        } else {
            i += 1;
        }
    }
}

fn qu(toks: &mut [Tok]) {
    for i in 0..toks.len().saturating_sub(2) {
        let q = &toks[i];
        let is_q = q.len() == 1 && q.first() == Some('q') && q.cmark.is_none() && q.vclass.is_none();
        if is_q
            && toks[i + 1].is_letter('u')
            && matches!(toks[i + 2].first(), Some('a' | 'e' | 'i' | 'o' | 'u' | 'y'))
            && !toks[i + 2].inserted
        {
            toks[i + 1].rule = Some(RuleMark::Glide);
        }
    }
}

fn gu(toks: &mut Vec<Tok>) {
    let mut i = 0;
    while i + 2 < toks.len() {
        let g = &toks[i];
        let g_ok = bare(g, 'g') && matches!(g.rule, None | Some(RuleMark::HardG));
        if g_ok && toks[i + 1].is_letter('u') && !toks[i + 2].inserted {
            match toks[i + 2].first() {
                Some('a' | 'o' | 'u') => {
                    toks[i].rule = Some(RuleMark::HardG);
                    toks[i + 1].rule = Some(RuleMark::Glide);
                }
                Some('e' | 'i' | 'y') => {
                    toks[i].rule = Some(RuleMark::HardG);
                    toks.remove(i + 1);
                }
                _ => {}
            }
        }
        i += 1;
    }
}

fn vh(toks: &mut [Tok]) {
    for i in 1..toks.len().saturating_sub(1) {
        if toks[i].is_letter('h') && vowelish(&toks[i - 1]) && consonantish(&toks[i + 1]) {
            toks[i].rule = Some(RuleMark::SilentH);
        }
    }
}

/// Step 3: the letter clusters that must be settled before vowels and
/// consonants are told apart.
pub fn critical_digraphs(segs: &mut [Segment]) {
    for s in segs.iter_mut() {
        ng(&mut s.toks);
        gh(&mut s.toks);
        wh(&mut s.toks);
        wr(&mut s.toks);
        qu(&mut s.toks);
        gu(&mut s.toks);
        vh(&mut s.toks);
    }
}
