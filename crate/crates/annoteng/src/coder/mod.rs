//! Standard coding: the cheapest annotation of a plain spelling whose
//! interpretation is a given pronunciation.

mod candidates;
mod cost;
mod document;
mod search;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::markup::{render_word, AnnotatedWord};

pub use candidates::{candidates, tie_rank, Candidate, Place};
pub use cost::{annotation_cost, insertion_position, mark_position, CostModel};
pub use document::{code_document, CodingStatus, DocumentCoding, WordReport};
pub use search::{code_word, code_word_in, enumerate_codings, ORACLE_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_annotations: usize,
    /// interpretations tried before giving up
    pub node_limit: usize,
    /// accept targets with the reduced vowels `8`, `0`, `1` by folding them
    pub reduced_equivalence: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_annotations: 6, node_limit: 300_000, reduced_equivalence: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodingResult {
    pub word: AnnotatedWord,
    pub total_cost: i64,
    pub position_cost: i64,
}

impl CodingResult {
    pub fn markup(&self) -> String {
        render_word(&self.word)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CoderError {
    #[error("no coding found for `{spelling}`: {reason}")]
    NoCodingFound { spelling: String, reason: String },
    #[error("target uses the reduced symbol `{symbol}`")]
    AmbiguousTarget { symbol: String },
    #[error("`{spelling}` is longer than the oracle bound of {bound} letters")]
    OracleBoundExceeded { spelling: String, bound: usize },
}
