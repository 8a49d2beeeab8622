use super::{AnnotatedWord, AnnotationKind, Document, Item};

fn command_for(kind: AnnotationKind, span: usize) -> &'static str {
    let double = span == 2 && (kind.is_vowel_class() || kind == AnnotationKind::Schwa);
    kind.command(double)
}

/// Canonical encoding of a word.
///
/// Insertions at a gap come before marks opening at the following letter;
/// marks sharing a start open widest first, then by nesting rank.
pub fn render_word(w: &AnnotatedWord) -> String {
    let mut out = String::new();
    let mut open: Vec<usize> = Vec::new();
    for (i, &c) in w.letters.iter().enumerate() {
        if let Some(ins) = w.insertions.get(&i) {
            for k in ins {
                out.push('\\');
                out.push_str(k.command(false));
                out.push_str("{}");
            }
        }
        if let Some(ms) = w.marks.get(&i) {
            for m in ms {
                out.push('\\');
                out.push_str(command_for(m.kind, m.span));
                out.push('{');
                open.push(i + m.span);
            }
        }
        out.push(c);
        while open.last() == Some(&(i + 1)) {
            open.pop();
            out.push('}');
        }
    }
    // malformed spans past the end still close
    for _ in open.drain(..) {
        out.push('}');
    }
    if let Some(ins) = w.insertions.get(&w.letters.len()) {
        for k in ins {
            out.push('\\');
            out.push_str(k.command(false));
            out.push_str("{}");
        }
    }
    out
}

pub fn render_document(doc: &Document) -> String {
    let mut out = String::new();
    for item in &doc.items {
        match item {
            Item::Word(w) => out.push_str(&render_word(w)),
            Item::Text(t) => out.push_str(t),
            Item::Region(r) => {
                out.push('\\');
                out.push_str(r.command());
                out.push_str("{}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markup::{parse_document, parse_word, Annotation, AnnotationKind::*};

    #[test]
    fn house() {
        let mut w = AnnotatedWord::plain("house");
        w.add_mark(3, Annotation::new(Voiceless, 1));
        assert_eq!(render_word(&w), "hou\\no{s}e");
    }

    #[test]
    fn insertion_gap() {
        let mut w = AnnotatedWord::plain("going");
        w.add_insertion(2, SepL);
        assert_eq!(render_word(&w), "go\\sel{}ing");
        assert_eq!(render_document(&Document::default()), "");
    }

    #[test]
    fn byte_identity() {
        for s in [
            "\\st{\\brd{i}}",
            "tort\\st{\\brd{i}}\\y{\\group{ll}}a",
            "l\\pln{i}q\\nnat{\\st{u}e}\\si{u}r",
            "Nob\\pln{o}dy's ques\\hno{ti}oning, of the \\st{a}bility.",
            "\\nonl{}Mrs\\nonr{} Bardell's fail\\y{}ure \\w{}\\clr{o}ne",
            "me\\ssch{tr}e o\\ser{'}clock",
        ] {
            let d = parse_document(s).unwrap();
            assert_eq!(render_document(&d), s);
        }
        let w = parse_word("\\st{\\brd{\\i}}").unwrap();
        assert_eq!(render_word(&w), "\\st{\\brd{i}}");
    }
}
