use std::collections::BTreeMap;

use super::{Joint, Segment, StressClass, Tok, TokKind};
use crate::markup::{AnnotatedWord, Annotation, AnnotationKind};
use crate::phonology::Stress;
use AnnotationKind::*;

/// Step 1: drop every letter under a silent mark.
pub fn strip_silent(w: &AnnotatedWord) -> AnnotatedWord {
    let n = w.letters.len();
    let mut silent = vec![false; n];
    for (s, a) in w.iter_marks() {
        if a.kind == Silent {
            for x in silent.iter_mut().skip(s).take(a.span) {
                *x = true;
            }
        }
    }
    if !silent.contains(&true) {
        return w.clone();
    }
    // new index of each old gap
    let mut gap = vec![0usize; n + 1];
    let mut k = 0;
    for i in 0..n {
        gap[i] = k;
        if !silent[i] {
            k += 1;
        }
    }
    gap[n] = k;
    let mut out = AnnotatedWord {
        letters: w.letters.iter().zip(&silent).filter(|(_, s)| !**s).map(|(c, _)| *c).collect(),
        marks: BTreeMap::new(),
        insertions: BTreeMap::new(),
    };
    for (s, a) in w.iter_marks() {
        if a.kind == Silent {
            continue;
        }
        let kept = (s..(s + a.span).min(n)).filter(|&i| !silent[i]).count();
        if kept == 0 {
            continue;
        }
        out.add_mark(gap[s], Annotation::new(a.kind, kept));
    }
    for (g, kind) in w.iter_insertions() {
        out.add_insertion(gap[g.min(n)], kind);
    }
    out
}

fn push_segment(segs: &mut Vec<Segment>, toks: &mut Vec<Tok>, joint: &mut Option<Joint>) {
    segs.push(Segment {
        toks: std::mem::take(toks),
        class: StressClass::Primary,
        joint: joint.take(),
    });
}

/// Step 2: tokenise and split into segments at hyphens, apostrophes and
/// separators; then give each stress domain its class.
pub fn segment(w: &AnnotatedWord) -> Vec<Segment> {
    let n = w.letters.len();
    // a two-letter schwa mark behaves as an insertion between its letters
    let mut inserts: BTreeMap<usize, Vec<AnnotationKind>> = w.insertions.clone();
    for (s, a) in w.iter_marks() {
        if a.kind == Schwa && a.span == 2 {
            inserts.entry(s + 1).or_default().push(Schwa);
        }
    }

    let mut segs = Vec::new();
    let mut toks: Vec<Tok> = Vec::new();
    let mut joint: Option<Joint> = None;
    let mut i = 0;
    let mut pending_stress: Vec<(usize, usize, Stress)> = Vec::new();

    let flush_inserts = |g: usize,
                         toks: &mut Vec<Tok>,
                         segs: &mut Vec<Segment>,
                         joint: &mut Option<Joint>| {
        if let Some(v) = inserts.get(&g) {
            for &k in v {
                if k.is_separator() {
                    push_segment(segs, toks, joint);
                    *joint = Some(Joint { sep: Some(k), written: None });
                } else if k == Schwa {
                    let mut t = Tok::letters("");
                    t.kind = TokKind::Schwa;
                    t.inserted = true;
                    toks.push(t);
                } else {
                    let mut t = Tok::letters("");
                    t.kind = TokKind::Consonant;
                    t.cmark = Some(k);
                    t.inserted = true;
                    toks.push(t);
                }
            }
        }
    };

    while i < n {
        let c = w.letters[i];
        let marks: Vec<Annotation> = w.marks.get(&i).cloned().unwrap_or_default();
        if c == '-' || c == '\'' {
            flush_inserts(i, &mut toks, &mut segs, &mut joint);
            let sep = marks.iter().find(|a| a.kind.is_separator()).map(|a| a.kind);
            let r_follows = w.letters.get(i + 1).is_some_and(|x| x.eq_ignore_ascii_case(&'r'));
            if c == '\'' && sep.is_none() && r_follows && !toks.is_empty() {
                i += 1;
                continue;
            }
            push_segment(&mut segs, &mut toks, &mut joint);
            joint = Some(Joint { sep, written: Some(c) });
            i += 1;
            continue;
        }
        flush_inserts(i, &mut toks, &mut segs, &mut joint);
        for a in &marks {
            if a.kind.is_stress() {
                let st = if a.kind == AnnotationKind::Stress { Stress::Primary } else { Stress::Secondary };
                pending_stress.push((i, i + a.span, st));
            }
        }
        let vspan2 = marks.iter().find(|a| a.kind.is_vowel_class() && a.span == 2);
        let cmulti = marks.iter().find(|a| a.kind.is_consonant_mark() && a.span >= 2);
        let take = if let Some(a) = vspan2 {
            let mut t = Tok::letters(&w.letters[i..i + 2].iter().collect::<String>());
            t.vclass = Some(a.kind);
            t.span2 = true;
            toks.push(t);
            2
        } else if let Some(a) = cmulti {
            let end = (i + a.span).min(n);
            let mut t = Tok::letters(&w.letters[i..end].iter().collect::<String>());
            t.cmark = Some(a.kind);
            toks.push(t);
            end - i
        } else {
            let mut t = Tok::letters(&c.to_string());
            for a in &marks {
                if a.kind.is_vowel_class() {
                    t.vclass = Some(a.kind);
                } else if a.kind.is_consonant_mark() && a.span == 1 {
                    t.cmark = Some(a.kind);
                }
            }
            toks.push(t);
            1
        };
        // a stress mark opening on any letter of the token, or covering it
        // from an enclosing mark, lands on this token
        let last = toks.last_mut().unwrap();
        if let Some(p) = pending_stress.iter().position(|&(s, e, _)| s < i + take && i < e) {
            last.mark_stress = Some(pending_stress.remove(p).2);
        }
        if take == 2 {
            // stress marks that open on the second letter of a two-letter unit
            if let Some(ms) = w.marks.get(&(i + 1)) {
                for a in ms {
                    if a.kind.is_stress() && last.mark_stress.is_none() {
                        last.mark_stress =
                            Some(if a.kind == AnnotationKind::Stress { Stress::Primary } else { Stress::Secondary });
                    }
                }
            }
        }
        i += take;
    }
    flush_inserts(n, &mut toks, &mut segs, &mut joint);
    push_segment(&mut segs, &mut toks, &mut joint);

    // leading or trailing joints leave empty segments behind
    let mut cleaned: Vec<Segment> = Vec::new();
    for s in segs {
        if s.toks.is_empty() {
            continue;
        }
        cleaned.push(s);
    }
    if cleaned.is_empty() {
        return cleaned;
    }
    if cleaned[0].joint.is_some() {
        cleaned[0].joint = None;
    }
    assign_classes(&mut cleaned);
    cleaned
}

/// Parts split by unmarked hyphens and apostrophes: first primary, others
/// unstressed. Separators then set the domains on either side, left to right.
fn assign_classes(segs: &mut [Segment]) {
    // domain id per segment: a new domain starts at each joint other than \se
    let mut dom = Vec::with_capacity(segs.len());
    let mut d = 0usize;
    for (k, s) in segs.iter().enumerate() {
        if k > 0 {
            let joins = s.joint.as_ref().is_some_and(|j| j.sep == Some(Sep));
            if !joins {
                d += 1;
            }
        }
        dom.push(d);
    }
    let ndom = d + 1;
    let mut class = vec![StressClass::Unstressed; ndom];
    class[0] = StressClass::Primary;
    for (k, s) in segs.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let j = s.joint.as_ref().unwrap();
        let (l, r) = (dom[k - 1], dom[k]);
        use StressClass::*;
        match j.sep {
            Some(SepL) => {
                class[l] = Primary;
                class[r] = Unstressed;
            }
            Some(SepR) => {
                class[l] = Unstressed;
                class[r] = Primary;
            }
            Some(SepLR) => {
                class[l] = Primary;
                class[r] = Secondary;
            }
            Some(SepRL) => {
                class[l] = Secondary;
                class[r] = Primary;
            }
            _ => {}
        }
    }
    for (k, s) in segs.iter_mut().enumerate() {
        s.class = class[dom[k]];
    }
}
