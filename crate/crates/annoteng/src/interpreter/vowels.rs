use super::{InterpretError, Segment, Tok, TokKind};
use crate::markup::AnnotationKind::{self, Broad, Central, Clear, IDiph, Iotted, Natural, Opaque, Plain, Rounded, UDiph};
use crate::phonology::{Phone, Phoneme};
use Phoneme::*;

type Cell = Option<(&'static [Phoneme], Option<&'static [Phoneme]>)>;

/// Value of a vowel class for a letter: (non-rhotic, rhotic). A missing
/// rhotic value falls back to the non-rhotic one; `None` is an unused cell.
pub fn class_value(class: AnnotationKind, letter: char) -> Cell {
    let l = match letter {
        'y' => 'i',
        'w' => 'u',
        c => c,
    };
    let v: Cell = match (class, l) {
        (Natural, 'a') => Some((&[EI], Some(&[Epsilon, Rhotic]))),
        (Natural, 'e') => Some((&[ILong], Some(&[INear, Rhotic]))),
        (Natural, 'i') => Some((&[AI], Some(&[AI, Rhotic]))),
        (Natural, 'o') => Some((&[OU], Some(&[OpenO, R]))),
        (Natural, 'u') => Some((&[OptJ, ULong], Some(&[OptJ, UNear, Rhotic]))),

        (Plain, 'a') => Some((&[Ae], Some(&[AShort, R]))),
        (Plain, 'e') => Some((&[Epsilon], Some(&[Er, R]))),
        (Plain, 'i') => Some((&[INear], Some(&[Er, R]))),
        (Plain, 'o') => Some((&[TurnedA], Some(&[OpenO, R]))),
        (Plain, 'u') => Some((&[Wedge], Some(&[Er, R]))),

        (Broad, 'a') => Some((&[ALong], Some(&[AShort, R]))),
        (Broad, 'e') => Some((&[EI], Some(&[Er, Rhotic]))),
        (Broad, 'i') => Some((&[ILong], Some(&[INear, Rhotic]))),
        (Broad, 'o') => Some((&[OpenOLong], Some(&[OpenO, R]))),
        (Broad, 'u') => Some((&[ULong], Some(&[UNear, Rhotic]))),

        (IDiph, 'a') | (IDiph, 'e') => Some((&[AI], Some(&[AI, Rhotic]))),
        (IDiph, 'o') => Some((&[W, ALong], Some(&[W, ALong, R]))),
        (IDiph, 'u') => Some((&[J, Schwa], Some(&[J, Schwa, R]))),

        (UDiph, 'a') | (UDiph, 'o') => Some((&[AU], Some(&[AU, Rhotic]))),
        (UDiph, 'e') => Some((&[OI], Some(&[OI, Rhotic]))),
        (UDiph, 'u') => Some((&[J, UNear], Some(&[J, UNear, R]))),

        (Clear, 'a') | (Clear, 'o') => Some((&[Wedge], None)),
        (Clear, 'e') => Some((&[Ae], Some(&[AShort, R]))),
        (Clear, 'i') => Some((&[Ae], None)),

        (Central, 'a') | (Central, 'u') => Some((&[Epsilon], None)),
        (Central, 'e') => Some((&[Schwa], None)),
        (Central, 'i') => Some((&[Schwa], Some(&[Schwa, R]))),
        (Central, 'o') => Some((&[Er], Some(&[Er, R]))),

        (Iotted, _) => Some((&[INear], None)),

        (Rounded, 'a') => Some((&[OpenOLong], Some(&[OpenO, R]))),
        (Rounded, 'e') => Some((&[OU], None)),
        (Rounded, 'o') => Some((&[ULong], None)),
        (Rounded, 'u') => Some((&[OU], Some(&[OpenO, R]))),

        (Opaque, 'a') | (Opaque, 'e') | (Opaque, 'i') => Some((&[OpenO], None)),
        (Opaque, 'o') => Some((&[UNear], Some(&[UNear, Rhotic]))),
        (Opaque, 'u') => Some((&[UNear], None)),
        _ => None,
    };
    v
}

/// Value of an unannotated vowel digraph.
pub fn digraph_value(pair: &str, stressed: bool, rhotic: bool) -> Option<&'static [Phoneme]> {
    let (plain, rho): (&'static [Phoneme], &'static [Phoneme]) = match (pair, stressed) {
        ("aa", _) => (&[ALong], &[AShort, R]),
        ("ae" | "ee", _) => (&[ILong], &[INear, Rhotic]),
        ("ea", true) => (&[ILong], &[INear, Rhotic]),
        ("ea", false) => (&[INear, Schwa], &[INear, Schwa, R]),
        ("ai" | "ay", _) => (&[EI], &[Epsilon, Rhotic]),
        ("ei" | "ey", true) => (&[EI], &[Epsilon, Rhotic]),
        ("ei" | "ey", false) => (&[INear], &[Epsilon, Rhotic]),
        ("au" | "aw", _) => (&[OpenOLong], &[OpenO, R]),
        ("eu" | "ew", _) => (&[OptJ, ULong], &[OptJ, UNear, Rhotic]),
        ("oa" | "ow", _) => (&[OU], &[OpenO, R]),
        ("ou", true) => (&[AU], &[AU, Rhotic]),
        ("ou", false) => (&[Schwa], &[Schwa, R]),
        ("oi" | "oy", _) => (&[OI], &[OI, Rhotic]),
        ("oo", _) => (&[ULong], &[UNear, Rhotic]),
        _ => return None,
    };
    Some(if rhotic { rho } else { plain })
}

fn no_rule(t: &Tok, detail: &'static str) -> InterpretError {
    InterpretError::NoRuleForUnit { unit: t.notation(), detail }
}

/// Unstressed, unannotated single vowel.
fn reduced(s: &Segment, i: usize) -> Vec<Phoneme> {
    let t = &s.toks[i];
    let next = s.next_real(i);
    let final_tok = next.is_none();
    // the only thing after this vowel is the letter `c`, at segment end
    let before_final = |c: char| -> bool {
        match next {
            Some(j) => {
                let tj = &s.toks[j];
                tj.is_consonant()
                    && tj.len() == 1
                    && tj.first() == Some(c)
                    && !tj.inserted
                    && s.next_real(j).is_none()
            }
            None => false,
        }
    };
    match t.first() {
        Some('a') => vec![Schwa],
        Some('e') => {
            // the silent rows need another vowel unit to carry the segment (`the`)
            let alone = !s.toks.iter().enumerate().any(|(j, x)| j != i && x.kind == TokKind::Vowel);
            if !alone && (final_tok || before_final('d') || before_final('s')) {
                vec![]
            } else {
                vec![Schwa]
            }
        }
        Some('i' | 'y') => vec![INear],
        Some('o') => {
            let es = next.is_some_and(|j| {
                s.toks[j].is_letter('e')
                    && s.toks[j].is_vowel()
                    && s.next_real(j).is_some_and(|k| {
                        s.toks[k].len() == 1 && s.toks[k].first() == Some('s') && s.next_real(k).is_none()
                    })
            });
            if final_tok || before_final('s') || es {
                vec![OU]
            } else {
                vec![Schwa]
            }
        }
        _ => vec![Schwa],
    }
}

fn unit_value(s: &Segment, i: usize) -> Result<Vec<Phoneme>, InterpretError> {
    let t = &s.toks[i];
    if t.kind == TokKind::Schwa {
        return Ok(vec![Schwa]);
    }
    let stressed = t.stress.is_some();
    let letter = t.first().unwrap_or('?');
    if let Some(class) = t.vclass {
        if t.span2 && letter == 'g' && class == Opaque {
            // \oopq{gh}
            return Ok(vec![Schwa]);
        }
        let (plain, rho) = class_value(class, letter).ok_or_else(|| no_rule(t, "vowel class not used for this letter"))?;
        return Ok(if t.rhotic { rho.unwrap_or(plain).to_vec() } else { plain.to_vec() });
    }
    if t.len() == 2 {
        return digraph_value(&t.lower(), stressed, t.rhotic)
            .map(|p| p.to_vec())
            .ok_or_else(|| no_rule(t, "not a vowel digraph"));
    }
    if !stressed {
        return Ok(reduced(s, i));
    }
    let class = if t.natural == Some(true) { Natural } else { Plain };
    let (plain, rho) = class_value(class, letter).ok_or_else(|| no_rule(t, "no vowel value"))?;
    Ok(if t.rhotic { rho.unwrap_or(plain).to_vec() } else { plain.to_vec() })
}

/// Step 8: evaluate every vowel unit. Stress goes on the first vowel phoneme.
pub fn evaluate_vowels(segs: &mut [Segment]) -> Result<(), InterpretError> {
    for s in segs.iter_mut() {
        for i in 0..s.toks.len() {
            let kind = s.toks[i].kind;
            if kind != TokKind::Vowel && kind != TokKind::Schwa {
                continue;
            }
            let ph = unit_value(s, i)?;
            let stress = s.toks[i].stress;
            let mut placed = false;
            let phones = ph
                .into_iter()
                .map(|p| {
                    let mut x = Phone::plain(p);
                    if !placed && p.is_vowel() {
                        x.stress = stress;
                        placed = true;
                    }
                    x
                })
                .collect();
            s.toks[i].phones = Some(phones);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_cells() {
        assert_eq!(class_value(Natural, 'y').unwrap().0, &[AI]);
        assert_eq!(class_value(Rounded, 'i'), None);
        assert_eq!(class_value(Clear, 'u'), None);
        assert_eq!(class_value(IDiph, 'i'), None);
        assert_eq!(class_value(Central, 'w').unwrap().0, &[Epsilon]);
        assert_eq!(class_value(Opaque, 'o').unwrap().1, Some(&[UNear, Rhotic][..]));
    }

    #[test]
    fn digraphs() {
        assert_eq!(digraph_value("ou", false, false), Some(&[Schwa][..]));
        assert_eq!(digraph_value("ou", true, true), Some(&[AU, Rhotic][..]));
        assert_eq!(digraph_value("ie", true, false), None);
    }
}
