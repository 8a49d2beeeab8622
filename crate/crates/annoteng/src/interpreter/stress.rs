use super::{NextWord, Segment, StressClass, Tok, TokKind};
use crate::markup::AnnotationKind::{self, *};
use crate::phonology::Stress;

fn attracts(k: Option<AnnotationKind>) -> bool {
    matches!(k, Some(SoftVoiceless | SoftVoiced | HardVoiceless | HardVoiced))
}

/// Step 6: place primary and secondary stress.
pub fn assign_stress(segs: &mut [Segment], next: NextWord) {
    // "the" before a consonant is unstressed
    if segs.len() == 1
        && segs[0].text().eq_ignore_ascii_case("the")
        && segs[0].toks.iter().all(|t| t.vclass.is_none() && t.cmark.is_none() && t.mark_stress.is_none())
        && next == NextWord::Consonant
    {
        segs[0].class = StressClass::Unstressed;
    }

    // domains: maximal runs joined by a plain separator
    let mut start = 0;
    while start < segs.len() {
        let mut end = start + 1;
        while end < segs.len()
            && segs[end].joint.as_ref().is_some_and(|j| j.sep == Some(Sep))
        {
            end += 1;
        }
        stress_domain(&mut segs[start..end]);
        start = end;
    }
}

fn stress_domain(dom: &mut [Segment]) {
    let class = dom[0].class;
    // (segment, token) positions in reading order
    let mut order: Vec<(usize, usize)> = Vec::new();
    for (si, s) in dom.iter().enumerate() {
        for ti in 0..s.toks.len() {
            order.push((si, ti));
        }
    }
    let tok = |k: usize| -> &Tok {
        let (si, ti) = order[k];
        &dom[si].toks[ti]
    };
    let units: Vec<usize> = (0..order.len()).filter(|&k| tok(k).is_vowel()).collect();
    if units.is_empty() {
        return;
    }
    let mut stress: Vec<Option<Stress>> = units.iter().map(|&k| tok(k).mark_stress).collect();
    let has_primary = stress.contains(&Some(Stress::Primary));
    let has_secondary = stress.contains(&Some(Stress::Secondary));

    match class {
        StressClass::Primary => {
            if !has_primary {
                let attract = (0..order.len())
                    .rev()
                    .find(|&k| attracts(tok(k).cmark))
                    .and_then(|k| units.iter().rposition(|&u| u < k));
                let p = attract.unwrap_or(0);
                if stress[p].is_none() {
                    stress[p] = Some(Stress::Primary);
                }
            }
            if !has_secondary {
                if let Some(p) = stress.iter().position(|s| *s == Some(Stress::Primary)) {
                    if p >= 2 && stress[p - 2].is_none() {
                        stress[p - 2] = Some(Stress::Secondary);
                    }
                }
            }
        }
        StressClass::Secondary => {
            if !has_primary && !has_secondary {
                stress[0] = Some(Stress::Secondary);
            }
        }
        StressClass::Unstressed => {}
    }
    for (u, st) in units.iter().zip(stress) {
        let (si, ti) = order[*u];
        dom[si].toks[ti].stress = st;
    }
}

/// Consonant letters in a consonant token, for the single/complex test.
fn consonant_weight(t: &Tok) -> usize {
    if t.inserted || t.len() <= 1 {
        return 1;
    }
    let n = t
        .text
        .chars()
        .filter(|c| !matches!(c.to_ascii_lowercase(), 'a' | 'e' | 'i' | 'o' | 'u' | 'y' | 'w'))
        .count();
    n.max(1)
}

fn is_x(t: &Tok) -> bool {
    t.len() == 1 && t.first() == Some('x')
}

/// One consonant letter, or a consonant followed by l or r.
fn single_group(g: &[&Tok]) -> bool {
    let complex_tok = |t: &Tok| is_x(t) || (t.cmark == Some(Common) && t.first() == Some('r'));
    match g {
        [a] => consonant_weight(a) == 1 && !complex_tok(a),
        [a, b] => {
            consonant_weight(a) == 1
                && !complex_tok(a)
                && !matches!(a.first(), Some('l' | 'r'))
                && (b.is_letter('l') || b.is_letter('r'))
        }
        _ => false,
    }
}

/// Step 7: decide natural or plain for stressed single vowels, and rhoticity.
pub fn categorize_vowels(segs: &mut [Segment]) {
    for s in segs.iter_mut() {
        for i in 0..s.toks.len() {
            if !s.toks[i].is_vowel() {
                continue;
            }
            let natural = natural_position(s, i);
            let rhotic = rhotic_position(s, i);
            let t = &mut s.toks[i];
            t.natural = natural;
            t.rhotic = rhotic;
        }
    }
}

fn natural_position(s: &Segment, i: usize) -> Option<bool> {
    let t = &s.toks[i];
    if t.stress.is_none() || t.vclass.is_some() || t.len() != 1 {
        return None;
    }
    if t.gh_after {
        return Some(true);
    }
    let Some(j) = s.next_real(i) else {
        return Some(true);
    };
    if s.toks[j].is_vowel() {
        return Some(true);
    }
    let mut group: Vec<&Tok> = Vec::new();
    let mut k = Some(j);
    while let Some(x) = k {
        let tx = &s.toks[x];
        if tx.is_vowel() {
            return Some(single_group(&group));
        }
        group.push(tx);
        k = s.next_real(x);
    }
    Some(false)
}

fn rhotic_position(s: &Segment, i: usize) -> bool {
    let t = &s.toks[i];
    let single = t.len() == 1 || t.span2;
    if t.stress.is_none() && single {
        return false;
    }
    let Some(j) = s.next_real(i) else {
        return false;
    };
    if !s.toks[j].is_letter('r') {
        return false;
    }
    match s.next_real(j) {
        Some(k) if s.toks[k].is_letter('r') => match s.next_real(k) {
            Some(m) => s.toks[m].kind != TokKind::Vowel,
            None => true,
        },
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interpreter::{classify_and_group, critical_digraphs, segment, strip_silent};
    use crate::markup::parse_word;

    fn run(src: &str, next: NextWord) -> Vec<Segment> {
        let mut segs = segment(&strip_silent(&parse_word(src).unwrap()));
        critical_digraphs(&mut segs);
        classify_and_group(&mut segs);
        assign_stress(&mut segs, next);
        categorize_vowels(&mut segs);
        segs
    }

    fn marks(src: &str) -> String {
        let segs = run(src, NextWord::None);
        let mut out = String::new();
        for s in &segs {
            for t in &s.toks {
                if !t.is_vowel() {
                    continue;
                }
                out.push_str(match t.stress {
                    Some(Stress::Primary) => "P",
                    Some(Stress::Secondary) => "S",
                    None => "u",
                });
                out.push_str(match t.natural {
                    Some(true) => "n",
                    Some(false) => "p",
                    None => "",
                });
                if t.rhotic {
                    out.push('r');
                }
                out.push(' ');
            }
        }
        out.trim_end().to_string()
    }

    #[test]
    fn default_and_inferred() {
        assert_eq!(marks("cat"), "Pp");
        assert_eq!(marks("table"), "Pn u");
        assert_eq!(marks("incons\\st{i}stent"), "Sp u Pp u");
        assert_eq!(marks("ag\\st{o}"), "u Pn");
        assert_eq!(marks("\\stst{u}nd\\st{\\rnd{o}}"), "Sp P");
        assert_eq!(marks("locomo\\sno{ti}on"), "Sn u Pn u");
    }

    #[test]
    fn natural_positions() {
        assert_eq!(marks("metre"), "Pn u");
        assert_eq!(marks("hello"), "Pp u");
        assert_eq!(marks("high"), "Pn");
        assert_eq!(marks("taxi"), "Pp u");
        assert_eq!(marks("squat"), "Pp");
    }

    #[test]
    fn rhotic() {
        assert_eq!(marks("car"), "Ppr");
        assert_eq!(marks("carry"), "Pp u");
        assert_eq!(marks("starry"), "Pp u");
        assert_eq!(marks("stars"), "Ppr");
        assert_eq!(marks("fairy"), "Pr u");
        assert_eq!(marks("ve\\co{r}y"), "Pp u");
        assert_eq!(marks("sugar"), "Pn u");
    }

    #[test]
    fn the_before_consonant() {
        let segs = run("the", NextWord::Consonant);
        assert_eq!(segs[0].toks[2].stress, None);
        let segs = run("the", NextWord::Vowel);
        assert_eq!(segs[0].toks[2].stress, Some(Stress::Primary));
    }
}
