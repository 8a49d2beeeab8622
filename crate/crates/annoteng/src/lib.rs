//! Annotated English: a diacritic markup over ordinary English spelling,
//! an interpreter from annotated words to IPA and a coder that finds the
//! cheapest annotation for a target pronunciation.

pub mod coder;
pub mod corpus;
pub mod interpreter;
pub mod lexicon;
pub mod markup;
pub mod phonology;

pub use interpreter::{interpret_document, interpret_word, interpret_word_in, InterpretError, NextWord};
pub use markup::{AnnotatedWord, Annotation, AnnotationKind, Document, Item, MarkupError};
pub use phonology::{Dialect, IpaTranscription, Phone, Phoneme, Stress};
pub use coder::{code_document, code_word, enumerate_codings, CoderError, CodingResult, CostModel, SearchBudget};
pub use lexicon::{load_lexicon, save_lexicon, Lexicon, LexiconEntry, LexiconError};
