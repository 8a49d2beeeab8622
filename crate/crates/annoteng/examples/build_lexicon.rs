//! Regenerates `data/starter_lexicon.tsv`: every word of the bundled texts
//! with its general American interpretation, read in isolation (no next
//! word). Words the coder cannot recover under the default budget are kept
//! and listed on stderr.

use annoteng::coder::{code_word, CostModel, SearchBudget};
use annoteng::lexicon::{Lexicon, Pronunciation};
use annoteng::markup::parse_document;
use annoteng::{corpus, interpret_word_in, Dialect, NextWord};

fn main() {
    let mut lex = Lexicon::default();
    let (m, b) = (CostModel::default(), SearchBudget::default());
    for (name, text) in corpus::TEXTS {
        let doc = parse_document(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        for (w, foreign) in doc.words() {
            if foreign {
                continue;
            }
            let spelling = w.spelling();
            let ipa = interpret_word_in(w, Dialect::GA, NextWord::None).unwrap_or_else(|e| panic!("{name}: {w}: {e}"));
            if lex.lookup(&spelling).is_some_and(|e| e.pronunciations.iter().any(|p| p.ipa == ipa)) {
                continue;
            }
            if let Err(e) = code_word(&spelling, &ipa, &m, &b, Dialect::GA) {
                eprintln!("uncodable: {e}");
            }
            lex.insert(&spelling, Pronunciation { ipa, dialect: Some(Dialect::GA) });
        }
    }
    print!("# surface<TAB>transcription<TAB>dialect\n# General American, generated from the bundled example texts.\n");
    print!("{}", lex.to_tsv());
}
