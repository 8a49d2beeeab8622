//! The annotated example texts bundled with the crate.

pub const COMMON_WORDS: &str = include_str!("../data/corpus/common_words.txt");
pub const DICKENS: &str = include_str!("../data/corpus/dickens.txt");
pub const SONGS: &str = include_str!("../data/corpus/songs.txt");
pub const HUMAN_RIGHTS: &str = include_str!("../data/corpus/human_rights.txt");
pub const SCIENCE: &str = include_str!("../data/corpus/science.txt");

/// (name, text) for every bundled text.
pub const TEXTS: [(&str, &str); 5] = [
    ("common_words", COMMON_WORDS),
    ("dickens", DICKENS),
    ("songs", SONGS),
    ("human_rights", HUMAN_RIGHTS),
    ("science", SCIENCE),
];
