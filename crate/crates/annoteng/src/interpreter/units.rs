use super::{Segment, Tok, TokKind};

/// The vowel digraphs that form one unit when neither letter is annotated.
pub const VOWEL_DIGRAPHS: [&str; 18] = [
    "aa", "ae", "ai", "ay", "au", "aw", "ea", "ee", "ei", "ey", "eu", "ew", "oa", "oi", "oy", "oo",
    "ou", "ow",
];

fn fixed_kind(t: &Tok) -> Option<TokKind> {
    if t.kind != TokKind::Undecided {
        return Some(t.kind);
    }
    if t.rule.is_some() || t.cmark.is_some() || t.inserted {
        return Some(TokKind::Consonant);
    }
    if t.vclass.is_some() {
        return Some(TokKind::Vowel);
    }
    match t.first() {
        Some('a' | 'e' | 'i' | 'o' | 'u') => Some(TokKind::Vowel),
        Some('w' | 'y') if t.mark_stress.is_some() => Some(TokKind::Vowel),
        Some('w' | 'y') => None,
        _ => Some(TokKind::Consonant),
    }
}

fn wy_kind(toks: &[Tok], i: usize, kinds: &[TokKind]) -> TokKind {
    let real = |j: usize| toks[j].kind != TokKind::Schwa;
    let prev = (0..i).rev().find(|&j| real(j));
    let next = (i + 1..toks.len()).find(|&j| real(j));
    if let Some(p) = prev {
        let pt = &toks[p];
        if pt.is_plain() && pt.len() == 1 && matches!(pt.first(), Some('a' | 'e' | 'o')) {
            return TokKind::Vowel;
        }
    }
    let Some(n) = next else {
        return TokKind::Vowel;
    };
    let next_kind = match fixed_kind(&toks[n]) {
        Some(k) => k,
        None => wy_kind(toks, n, kinds),
    };
    if next_kind == TokKind::Consonant {
        return TokKind::Vowel;
    }
    if toks[i].first() == Some('y') {
        if let Some(p) = prev {
            if kinds[p] == TokKind::Consonant {
                return TokKind::Vowel;
            }
        }
    }
    TokKind::Consonant
}

/// Steps 4 and 5: tell vowels from consonants, then merge vowel digraphs
/// into single units.
pub fn classify_and_group(segs: &mut [Segment]) {
    for s in segs.iter_mut() {
        let mut kinds: Vec<TokKind> = Vec::with_capacity(s.toks.len());
        for i in 0..s.toks.len() {
            let k = match fixed_kind(&s.toks[i]) {
                Some(k) => k,
                None => wy_kind(&s.toks, i, &kinds),
            };
            kinds.push(k);
        }
        for (t, k) in s.toks.iter_mut().zip(kinds) {
            t.kind = k;
        }
        group(&mut s.toks);
    }
}

fn group(toks: &mut Vec<Tok>) {
    let mut i = 0;
    while i + 1 < toks.len() {
        let (a, b) = (&toks[i], &toks[i + 1]);
        let ok = a.is_vowel()
            && b.is_vowel()
            && a.len() == 1
            && b.len() == 1
            && a.vclass.is_none()
            && b.vclass.is_none()
            && a.rule.is_none()
            && b.rule.is_none()
            && b.mark_stress.is_none()
            && VOWEL_DIGRAPHS.contains(&format!("{}{}", a.lower(), b.lower()).as_str());
        if ok {
            let b = toks.remove(i + 1);
            let a = &mut toks[i];
            a.text.push_str(&b.text);
            a.gh_after |= b.gh_after;
        }
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interpreter::{critical_digraphs, segment, strip_silent};
    use crate::markup::parse_word;

    fn run(src: &str) -> Vec<(String, TokKind)> {
        let mut segs = segment(&strip_silent(&parse_word(src).unwrap()));
        critical_digraphs(&mut segs);
        classify_and_group(&mut segs);
        segs[0].toks.iter().map(|t| (t.text.clone(), t.kind)).collect()
    }

    fn shape(src: &str) -> String {
        run(src)
            .into_iter()
            .map(|(t, k)| match k {
                TokKind::Vowel => format!("V{t}"),
                TokKind::Consonant => format!("C{t}"),
                _ => format!("?{t}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    #[test]
    fn semivowels() {
        assert_eq!(shape("yes"), "Cy Ve Cs");
        assert_eq!(shape("day"), "Cd Vay");
        assert_eq!(shape("gym"), "Cg Vy Cm");
        assert_eq!(shape("happy"), "Ch Va Cp Cp Vy");
        assert_eq!(shape("lawyer"), "Cl Vaw Cy Ve Cr");
        assert_eq!(shape("beyond"), "Cb Vey Vo Cn Cd");
        assert_eq!(shape("bowl"), "Cb Vow Cl");
    }

    #[test]
    fn digraph_units() {
        assert_eq!(shape("book"), "Cb Voo Ck");
        assert_eq!(shape("b\\st{e}ing"), "Cb Vei Cn");
        assert_eq!(shape("be\\sel{}ing"), "Cb Ve");
        assert_eq!(shape("\\st{e}ek"), "Vee Ck");
        assert_eq!(shape("cr\\pln{e}ate"), "Cc Cr Ve Va Ct Ve");
    }
}
