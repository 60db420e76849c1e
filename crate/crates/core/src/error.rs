use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("line {line}: `{surface}` already listed as {existing}, not {requested}")]
    ConflictingEntry {
        line: usize,
        surface: String,
        existing: String,
        requested: String,
    },

    #[error("token streams diverge at system line {system_line} / gold line {gold_line}: `{system}` vs `{gold}`")]
    Misaligned {
        system_line: usize,
        gold_line: usize,
        system: String,
        gold: String,
    },

    #[error("token streams differ in length: system has {system} tokens, gold has {gold}")]
    LengthMismatch { system: usize, gold: usize },

    #[error("duplicate document id `{0}`")]
    DuplicateDocument(String),

    #[error("gold annotation contains no proper-name tokens")]
    NoGoldNames,
}

pub type Result<T> = std::result::Result<T, Error>;
