use super::{
    lookup_command, Annotation, AnnotatedWord, AnnotationKind, Document, Item, MarkupError,
    RegionToggle,
};
use AnnotationKind::*;

/// Parses a whole document in command notation.
///
/// Words are maximal runs of letters and commands; an apostrophe or hyphen
/// belongs to a word only when it sits between two word characters.
pub fn parse_document(src: &str) -> Result<Document, MarkupError> {
    let mut p = Parser { src, pos: 0, foreign_depth: 0 };
    p.document()
}

/// Parses a single word. Anything outside the word is an error.
pub fn parse_word(src: &str) -> Result<AnnotatedWord, MarkupError> {
    let doc = parse_document(src)?;
    let mut words = doc.items.into_iter().filter_map(|i| match i {
        Item::Word(w) => Some(w),
        _ => None,
    });
    match (words.next(), words.next()) {
        (Some(w), None) => Ok(w),
        _ => Err(MarkupError::MalformedBraces { offset: 0 }),
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    foreign_depth: usize,
}

enum Cmd {
    Region(RegionToggle),
    LetterI,
    Mark(AnnotationKind, bool, String),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_at(&self, byte: usize) -> Option<char> {
        self.src.get(byte..).and_then(|s| s.chars().next())
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    /// Reads `\name` starting at the backslash without consuming it.
    fn command_at(&self, at: usize) -> Result<(String, usize), MarkupError> {
        let rest = &self.src[at + 1..];
        let name: String = rest.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
        if name.is_empty() {
            let shown: String = rest.chars().take(1).collect();
            return Err(MarkupError::UnknownCommand { name: shown, offset: at });
        }
        let end = at + 1 + name.len();
        Ok((name, end))
    }

    fn classify(&self, name: &str, at: usize) -> Result<Cmd, MarkupError> {
        Ok(match name {
            "annl" => Cmd::Region(RegionToggle::AnnL),
            "annr" => Cmd::Region(RegionToggle::AnnR),
            "nonl" => Cmd::Region(RegionToggle::NonL),
            "nonr" => Cmd::Region(RegionToggle::NonR),
            "i" => Cmd::LetterI,
            _ => match lookup_command(name) {
                Some((k, d)) => Cmd::Mark(k, d, name.to_string()),
                None => {
                    return Err(MarkupError::UnknownCommand { name: name.to_string(), offset: at })
                }
            },
        })
    }

    fn is_letter(&self, c: char) -> bool {
        c.is_alphabetic()
    }

    /// True when the input at `at` starts a word element (a letter or a
    /// letter-bearing command).
    fn starts_element(&self, at: usize) -> bool {
        match self.peek_at(at) {
            Some('\\') => match self.command_at(at) {
                Ok((name, _)) => !matches!(name.as_str(), "annl" | "annr" | "nonl" | "nonr"),
                Err(_) => false,
            },
            Some(c) => self.is_letter(c),
            None => false,
        }
    }

    fn document(&mut self) -> Result<Document, MarkupError> {
        let mut items = Vec::new();
        let mut text = String::new();
        let mut word: Option<AnnotatedWord> = None;
        while let Some(c) = self.peek() {
            let at = self.pos;
            if c == '\\' {
                let (name, end) = self.command_at(at)?;
                if let Cmd::Region(r) = self.classify(&name, at)? {
                    flush(&mut items, &mut text, &mut word);
                    self.pos = end;
                    self.expect_empty_braces(at)?;
                    match r {
                        RegionToggle::NonL => self.foreign_depth += 1,
                        RegionToggle::NonR => self.foreign_depth = self.foreign_depth.saturating_sub(1),
                        _ => {}
                    }
                    items.push(Item::Region(r));
                    continue;
                }
                if !text.is_empty() {
                    items.push(Item::Text(std::mem::take(&mut text)));
                }
                let w = word.get_or_insert_with(AnnotatedWord::default);
                self.element(w)?;
                continue;
            }
            if self.is_letter(c) {
                if !text.is_empty() {
                    items.push(Item::Text(std::mem::take(&mut text)));
                }
                let w = word.get_or_insert_with(AnnotatedWord::default);
                self.element(w)?;
                continue;
            }
            if (c == '\'' || c == '-') && word.is_some() && self.starts_element(at + 1) {
                self.bump();
                word.as_mut().unwrap().letters.push(c);
                continue;
            }
            if c == '{' || c == '}' {
                return Err(MarkupError::MalformedBraces { offset: at });
            }
            if let Some(w) = word.take() {
                items.push(Item::Word(w));
            }
            text.push(c);
            self.bump();
        }
        flush(&mut items, &mut text, &mut word);
        Ok(Document { items })
    }

    fn expect_empty_braces(&mut self, at: usize) -> Result<(), MarkupError> {
        if self.src[self.pos..].starts_with("{}") {
            self.pos += 2;
            Ok(())
        } else {
            Err(MarkupError::MalformedBraces { offset: at })
        }
    }

    fn push_letter(&mut self, w: &mut AnnotatedWord, c: char, at: usize) -> Result<(), MarkupError> {
        if !c.is_ascii() && self.foreign_depth == 0 {
            return Err(MarkupError::ForeignLetter { ch: c, offset: at });
        }
        w.letters.push(c);
        Ok(())
    }

    /// One letter or one command with its argument.
    fn element(&mut self, w: &mut AnnotatedWord) -> Result<(), MarkupError> {
        let at = self.pos;
        let c = self.peek().expect("element at end of input");
        if c != '\\' {
            self.bump();
            return self.push_letter(w, c, at);
        }
        let (name, end) = self.command_at(at)?;
        match self.classify(&name, at)? {
            Cmd::Region(_) => Err(MarkupError::MisplacedRegion { offset: at }),
            Cmd::LetterI => {
                self.pos = end;
                if self.src[self.pos..].starts_with("{}") {
                    self.pos += 2;
                }
                w.letters.push('i');
                Ok(())
            }
            Cmd::Mark(kind, double, cmd) => {
                self.pos = end;
                if self.peek() != Some('{') {
                    return Err(MarkupError::MalformedBraces { offset: at });
                }
                self.bump();
                let start = w.letters.len();
                loop {
                    match self.peek() {
                        None => return Err(MarkupError::MalformedBraces { offset: at }),
                        Some('}') => {
                            self.bump();
                            break;
                        }
                        Some('{') => return Err(MarkupError::MalformedBraces { offset: self.pos }),
                        Some('\'') | Some('-') => {
                            let c = self.bump().unwrap();
                            w.letters.push(c);
                        }
                        Some(c) if c == '\\' || self.is_letter(c) => self.element(w)?,
                        Some(_) => return Err(MarkupError::MalformedBraces { offset: self.pos }),
                    }
                }
                let span = w.letters.len() - start;
                attach(w, kind, double, &cmd, start, span, at)
            }
        }
    }
}

fn flush(items: &mut Vec<Item>, text: &mut String, word: &mut Option<AnnotatedWord>) {
    if let Some(w) = word.take() {
        items.push(Item::Word(w));
    }
    if !text.is_empty() {
        items.push(Item::Text(std::mem::take(text)));
    }
}

fn attach(
    w: &mut AnnotatedWord,
    kind: AnnotationKind,
    double: bool,
    cmd: &str,
    start: usize,
    span: usize,
    at: usize,
) -> Result<(), MarkupError> {
    let bad_span = || MarkupError::IllegalSpan { command: cmd.to_string(), span, offset: at };
    if kind.is_vowel_class() {
        if double {
            if !kind.has_double_form() || span != 2 {
                return Err(MarkupError::IllegalDoubleForm { command: cmd.to_string(), offset: at });
            }
        } else if span != 1 {
            return Err(bad_span());
        }
        w.add_mark(start, Annotation::new(kind, span));
        return Ok(());
    }
    match kind {
        Sep | SepL | SepR | SepLR | SepRL => match span {
            0 => w.add_insertion(start, kind),
            1 if w.letters[start] == '\'' => w.add_mark(start, Annotation::new(kind, 1)),
            _ => return Err(bad_span()),
        },
        Schwa => match (double, span) {
            (false, 0) => w.add_insertion(start, kind),
            (true, 2) => w.add_mark(start, Annotation::new(kind, 2)),
            (true, _) => {
                return Err(MarkupError::IllegalDoubleForm { command: cmd.to_string(), offset: at })
            }
            _ => return Err(bad_span()),
        },
        SemiW | SemiY => {
            if span == 0 {
                w.add_insertion(start, kind)
            } else {
                w.add_mark(start, Annotation::new(kind, span))
            }
        }
        _ => {
            if span == 0 {
                return Err(bad_span());
            }
            w.add_mark(start, Annotation::new(kind, span));
        }
    }
    Ok(())
}
