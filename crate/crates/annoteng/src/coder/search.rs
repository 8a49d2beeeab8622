use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{candidates, Candidate, CoderError, CodingResult, CostModel, SearchBudget};
use crate::interpreter::{interpret_word_in, NextWord};
use crate::markup::{render_word, AnnotatedWord};
use crate::phonology::{reduced_equivalent, Dialect, Phone, Phoneme};

/// Longest spelling [`enumerate_codings`] accepts.
pub const ORACLE_BOUND: usize = 8;

struct Matcher<'a> {
    target: &'a [Phone],
    dialect: Dialect,
    next: NextWord,
    reduced: bool,
}

impl Matcher<'_> {
    fn matches(&self, w: &AnnotatedWord) -> bool {
        match interpret_word_in(w, self.dialect, self.next) {
            Ok(t) if self.reduced => reduced_equivalent(&t, self.target),
            Ok(t) => t == self.target,
            Err(_) => false,
        }
    }
}

fn check_input(spelling: &str, target: &[Phone], reduced: bool) -> Result<(), CoderError> {
    let fail = |reason: &str| CoderError::NoCodingFound { spelling: spelling.to_string(), reason: reason.to_string() };
    if spelling.is_empty() {
        return Err(fail("empty spelling"));
    }
    if !spelling.chars().all(|c| c.is_ascii_alphabetic() || c == '\'' || c == '-') {
        return Err(fail("spelling has characters other than letters, apostrophes and hyphens"));
    }
    if target.is_empty() {
        return Err(fail("empty target"));
    }
    if !reduced {
        if let Some(p) = target.iter().find(|p| matches!(p.phoneme, Phoneme::BarO | Phoneme::BarU | Phoneme::BarI)) {
            return Err(CoderError::AmbiguousTarget { symbol: p.phoneme.ascii().to_string() });
        }
    }
    Ok(())
}

fn build(spelling: &str, cands: &[Candidate], set: &[u16]) -> AnnotatedWord {
    let mut w = AnnotatedWord::plain(spelling);
    for &i in set {
        cands[i as usize].apply(&mut w);
    }
    w
}

fn position(cands: &[Candidate], set: &[u16]) -> i64 {
    set.iter().map(|&i| cands[i as usize].position).sum()
}

/// Kind preferences of a set in letter order, for tie-breaking.
fn ranks(cands: &[Candidate], set: &[u16]) -> Vec<(usize, u8)> {
    let mut r: Vec<(usize, u8)> = set
        .iter()
        .map(|&i| {
            let c = &cands[i as usize];
            let at = match c.place {
                super::Place::Mark(s, _) => s,
                super::Place::Insert(g, _) => g,
            };
            (at, c.rank())
        })
        .collect();
    r.sort();
    r
}

fn last_fits(cands: &[Candidate], set: &[u16]) -> bool {
    match set.split_last() {
        Some((&last, rest)) => rest.iter().all(|&i| !cands[i as usize].conflicts(&cands[last as usize])),
        None => true,
    }
}

/// Codes a word read in isolation. See [`code_word_in`].
pub fn code_word(
    spelling: &str,
    target: &[Phone],
    m: &CostModel,
    b: &SearchBudget,
    dialect: Dialect,
) -> Result<CodingResult, CoderError> {
    code_word_in(spelling, target, m, b, dialect, NextWord::None)
}

/// Cheapest annotation of `spelling` that interprets to `target`.
///
/// Sets of candidate annotations are visited in nondecreasing total cost,
/// so the first match is optimal; every set of that cost is still checked.
/// Ties go to the lower position cost, then to the preferred kinds in
/// letter order (see [`super::tie_rank`]), then to the smaller rendering.
pub fn code_word_in(
    spelling: &str,
    target: &[Phone],
    m: &CostModel,
    b: &SearchBudget,
    dialect: Dialect,
    next: NextWord,
) -> Result<CodingResult, CoderError> {
    check_input(spelling, target, b.reduced_equivalence)?;
    let matcher = Matcher { target, dialect, next, reduced: b.reduced_equivalence };
    let cands = candidates(spelling, target, dialect, m);
    let n = cands.len();

    // Each set is reached once: from set S ending at j, "extend" adds j+1
    // and "shift" replaces j by j+1. With candidates sorted by cost, both
    // moves never lower the total.
    let mut heap: BinaryHeap<Reverse<(i64, Vec<u16>)>> = BinaryHeap::new();
    heap.push(Reverse((0, Vec::new())));
    let mut tried = 0usize;
    let mut best: Option<(i64, i64, Vec<(usize, u8)>, String, AnnotatedWord)> = None;
    while let Some(Reverse((cost, set))) = heap.pop() {
        if best.as_ref().is_some_and(|b| cost > b.0) {
            break;
        }
        let fits = last_fits(&cands, &set);
        if fits {
            tried += 1;
            if tried > b.node_limit {
                break;
            }
            let w = build(spelling, &cands, &set);
            if matcher.matches(&w) {
                let key = (cost, position(&cands, &set), ranks(&cands, &set), render_word(&w));
                if best.as_ref().map_or(true, |b| (key.0, key.1, &key.2, &key.3) < (b.0, b.1, &b.2, &b.3)) {
                    best = Some((key.0, key.1, key.2, key.3, w));
                }
            }
        }
        let next_idx = set.last().map_or(0, |&j| j as usize + 1);
        if next_idx >= n {
            continue;
        }
        let bound = best.as_ref().map_or(i64::MAX, |b| b.0);
        if fits && set.len() < b.max_annotations {
            let c = cost + cands[next_idx].cost;
            if c <= bound {
                let mut s = set.clone();
                s.push(next_idx as u16);
                heap.push(Reverse((c, s)));
            }
        }
        if let Some(&j) = set.last() {
            let c = cost - cands[j as usize].cost + cands[next_idx].cost;
            if c <= bound {
                let mut s = set;
                *s.last_mut().unwrap() = next_idx as u16;
                heap.push(Reverse((c, s)));
            }
        }
    }
    match best {
        Some((total_cost, position_cost, _, _, word)) => Ok(CodingResult { word, total_cost, position_cost }),
        None => Err(CoderError::NoCodingFound {
            spelling: spelling.to_string(),
            reason: if tried > b.node_limit {
                format!("node limit of {} reached", b.node_limit)
            } else {
                format!("unreachable with at most {} annotations", b.max_annotations)
            },
        }),
    }
}

/// Every coding with at most `max_annotations` marks, by brute force over
/// the same annotation universe. Sorted by cost, position cost, rendering.
pub fn enumerate_codings(
    spelling: &str,
    target: &[Phone],
    max_annotations: usize,
    dialect: Dialect,
) -> Result<Vec<CodingResult>, CoderError> {
    let len = spelling.chars().count();
    if len > ORACLE_BOUND {
        return Err(CoderError::OracleBoundExceeded { spelling: spelling.to_string(), bound: ORACLE_BOUND });
    }
    check_input(spelling, target, false)?;
    let matcher = Matcher { target, dialect, next: NextWord::None, reduced: false };
    let m = CostModel::default();
    let cands = candidates(spelling, target, dialect, &m);
    let mut out = Vec::new();
    let mut set: Vec<u16> = Vec::new();
    walk(spelling, &cands, &matcher, max_annotations, 0, &mut set, &mut out);
    out.sort_by(|a: &CodingResult, b| {
        (a.total_cost, a.position_cost, a.markup()).cmp(&(b.total_cost, b.position_cost, b.markup()))
    });
    Ok(out)
}

fn walk(
    spelling: &str,
    cands: &[Candidate],
    matcher: &Matcher,
    left: usize,
    from: usize,
    set: &mut Vec<u16>,
    out: &mut Vec<CodingResult>,
) {
    let w = build(spelling, cands, set);
    if matcher.matches(&w) {
        let total_cost = set.iter().map(|&i| cands[i as usize].cost).sum();
        out.push(CodingResult { word: w, total_cost, position_cost: position(cands, set) });
    }
    if left == 0 {
        return;
    }
    for j in from..cands.len() {
        if set.iter().any(|&i| cands[i as usize].conflicts(&cands[j])) {
            continue;
        }
        set.push(j as u16);
        walk(spelling, cands, matcher, left - 1, j + 1, set, out);
        set.pop();
    }
}
