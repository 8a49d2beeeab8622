//! The four subcommands. Each reads its whole input, writes to `out` and
//! returns the process exit code.

use std::io::Write;
use std::path::PathBuf;

use annoteng::coder::{code_document, CodingStatus, CostModel, SearchBudget};
use annoteng::interpreter::{interpret_document, trace_word, EntryResult};
use annoteng::lexicon::starter_lexicon;
use annoteng::markup::{parse_document, render_document, validate_document, Document};
use annoteng::phonology::{render_ascii_ipa, render_unicode_ipa};
use annoteng::{load_lexicon, Dialect};
use anyhow::{Context, Result};

use crate::stats::compute_stats;

#[derive(Clone, Debug)]
pub struct Options {
    pub dialect: Dialect,
    pub unicode: bool,
    pub trace: bool,
    pub lexicon: Option<PathBuf>,
    pub report: Option<PathBuf>,
    pub strict: bool,
    pub max_annotations: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            dialect: Dialect::GA,
            unicode: false,
            trace: false,
            lexicon: None,
            report: None,
            strict: false,
            max_annotations: SearchBudget::default().max_annotations,
        }
    }
}

fn parse(input: &str) -> Result<Document, String> {
    parse_document(input).map_err(|e| {
        let line = input[..e.offset().min(input.len())].matches('\n').count() + 1;
        format!("parse error on line {line}: {e}")
    })
}

/// `surface<TAB>ipa` per word; words in non-annotated regions print `PASS`.
/// Exit 1 on a parse error, 2 if any word has no reading.
pub fn interpret(input: &str, opts: &Options, out: &mut dyn Write) -> Result<i32> {
    let doc = match parse(input) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{e}");
            return Ok(1);
        }
    };
    let entries = interpret_document(&doc, opts.dialect);
    if opts.trace {
        let words = doc.words();
        let traces: Vec<Vec<String>> = words
            .iter()
            .zip(&entries)
            .map(|((w, foreign), e)| {
                if *foreign {
                    vec![e.spelling.clone(); 13]
                } else {
                    trace_word(w, opts.dialect, e.context).lines
                }
            })
            .collect();
        for step in 0..13 {
            let row: Vec<&str> = traces.iter().map(|t| t.get(step).map_or("?", |s| s.as_str())).collect();
            writeln!(out, "({step}) {}", row.join(" "))?;
        }
    }
    let mut code = 0;
    for e in &entries {
        match &e.result {
            EntryResult::Ipa(t) => {
                let ipa = if opts.unicode { render_unicode_ipa(t) } else { render_ascii_ipa(t) };
                writeln!(out, "{}\t{}", e.spelling, ipa)?;
            }
            EntryResult::Passthrough => writeln!(out, "{}\tPASS", e.spelling)?,
            EntryResult::Failed(err) => {
                eprintln!("{}: {err}", e.markup);
                writeln!(out, "{}\tERROR", e.spelling)?;
                code = 2;
            }
        }
    }
    Ok(code)
}

/// Codes plain text from a lexicon. The JSON report goes to `opts.report`.
pub fn annotate(input: &str, opts: &Options, out: &mut dyn Write) -> Result<i32> {
    let lex = match &opts.lexicon {
        Some(p) => load_lexicon(p).with_context(|| format!("loading {}", p.display()))?,
        None => starter_lexicon(),
    };
    let budget = SearchBudget { max_annotations: opts.max_annotations, ..SearchBudget::default() };
    let coded = code_document(input, &lex, &CostModel::default(), &budget, opts.dialect);
    write!(out, "{}", render_document(&coded.document))?;
    if let Some(path) = &opts.report {
        let json = serde_json::to_string_pretty(&coded.report)?;
        std::fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    let failed = coded.report.iter().any(|r| r.status == CodingStatus::NoCoding);
    Ok(if opts.strict && failed { 1 } else { 0 })
}

/// Structural checks. Exit 1 on a parse error, 2 on any violation.
pub fn validate(input: &str, out: &mut dyn Write) -> Result<i32> {
    let doc = match parse(input) {
        Ok(d) => d,
        Err(e) => {
            writeln!(out, "{e}")?;
            return Ok(1);
        }
    };
    let found = validate_document(&doc);
    for (item, v) in &found {
        writeln!(out, "item {item}: {v}")?;
    }
    if found.is_empty() {
        writeln!(out, "ok")?;
        Ok(0)
    } else {
        Ok(2)
    }
}

/// Annotation density as JSON.
pub fn stats_report(input: &str, out: &mut dyn Write) -> Result<i32> {
    let doc = match parse(input) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{e}");
            return Ok(1);
        }
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&compute_stats(&doc))?)?;
    Ok(0)
}
