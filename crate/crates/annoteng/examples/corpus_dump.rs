//! Prints every word of the bundled texts with its interpretation.
//! Usage: corpus_dump [GA|RP|NEUTRAL]

use annoteng::interpreter::{render_line, EntryResult};
use annoteng::markup::parse_document;
use annoteng::{corpus, interpret_document, Dialect};

fn main() {
    let dialect: Dialect = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or_default();
    for (name, text) in corpus::TEXTS {
        let doc = parse_document(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        for e in interpret_document(&doc, dialect) {
            let shown = match &e.result {
                EntryResult::Failed(err) => format!("ERROR {err}"),
                _ => render_line(std::slice::from_ref(&e), false),
            };
            println!("{name}\t{}\t{}\t{shown}", e.spelling, e.markup);
        }
    }
}
