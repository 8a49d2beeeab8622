use serde::Serialize;

use super::*;
use crate::markup::render_word;
use crate::phonology::render_ascii_ipa;

/// Intermediate states of one interpretation, one line per step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineTrace {
    /// line 0 is the input, lines 1 to 12 the state after each step
    pub lines: Vec<String>,
    pub error: Option<String>,
    pub result: Option<String>,
}

impl PipelineTrace {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, l) in self.lines.iter().enumerate() {
            out.push_str(&format!("({i:>2}) {l}\n"));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        out
    }
}

fn show(segs: &[Segment]) -> String {
    let mut out = String::new();
    for s in segs {
        if let Some(j) = &s.joint {
            match (j.written, j.sep) {
                (Some(c), None) => out.push(c),
                (Some(c), Some(k)) => out.push_str(&format!("\\{}{{{}}}", k.command(false), c)),
                (None, Some(k)) => out.push_str(&format!("\\{}{{}}", k.command(false))),
                (None, None) => {}
            }
        }
        out.push_str(&s.to_string());
    }
    out
}

/// Runs the pipeline and keeps every intermediate state.
pub fn trace_word(w: &AnnotatedWord, dialect: Dialect, next: NextWord) -> PipelineTrace {
    let mut lines = vec![render_word(w)];
    let stripped = strip_silent(w);
    lines.push(render_word(&stripped));
    let mut segs = segment(&stripped);
    lines.push(show(&segs));
    critical_digraphs(&mut segs);
    lines.push(show(&segs));
    classify_and_group(&mut segs);
    // step 4 and step 5 share one pass; both lines show its result
    lines.push(show(&segs));
    lines.push(show(&segs));
    assign_stress(&mut segs, next);
    lines.push(show(&segs));
    categorize_vowels(&mut segs);
    lines.push(show(&segs));
    let fail = |lines: Vec<String>, e: InterpretError| PipelineTrace {
        lines,
        error: Some(e.to_string()),
        result: None,
    };
    if let Err(e) = evaluate_vowels(&mut segs) {
        return fail(lines, e);
    }
    lines.push(show(&segs));
    consonant_digraphs(&mut segs);
    lines.push(show(&segs));
    if let Err(e) = evaluate_consonants(&mut segs) {
        return fail(lines, e);
    }
    lines.push(show(&segs));
    let r = recompose(&segs);
    lines.push(render_ascii_ipa(&r.flatten()));
    let out = render_ascii_ipa(&postprocess_with(&r, dialect, next));
    lines.push(out.clone());
    PipelineTrace { lines, error: None, result: Some(out) }
}
