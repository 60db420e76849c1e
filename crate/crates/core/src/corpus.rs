//! Tokens, sentences and documents.
//!
//! Text is split on whitespace and on a fixed set of punctuation marks,
//! segmented into sentences, and sentence-initial words are rewritten to
//! lowercase when the same word also occurs lowercase inside a sentence.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::exec::{map_ordered, Execution};
use crate::index::{build_lowercase_index, LowercaseIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Punctuation,
    Number,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    /// Case-disambiguated form used by every later pass.
    pub normalized: String,
    pub kind: TokenKind,
    pub sentence_initial: bool,
}

impl Token {
    pub fn new(surface: impl Into<String>) -> Self {
        let surface = surface.into();
        Token {
            kind: classify(&surface),
            normalized: surface.clone(),
            surface,
            sentence_initial: false,
        }
    }

    pub fn is_punct(&self, mark: &str) -> bool {
        self.kind == TokenKind::Punctuation && self.surface == mark
    }

    pub fn is_quote(&self) -> bool {
        self.kind == TokenKind::Punctuation
            && self.surface.chars().count() == 1
            && self.surface.chars().all(is_quote_char)
    }
}

/// Characters split off as tokens of their own.
pub fn is_split_char(c: char) -> bool {
    matches!(
        c,
        '.' | ',' | ';' | ':' | '!' | '?' | '(' | ')' | '[' | ']' | '—' | '…'
    ) || is_quote_char(c)
}

pub fn is_quote_char(c: char) -> bool {
    matches!(
        c,
        '"' | '\'' | '„' | '“' | '”' | '‚' | '‘' | '’' | '»' | '«'
    )
}

fn classify(surface: &str) -> TokenKind {
    match surface.chars().next() {
        Some(c) if c.is_alphabetic() => TokenKind::Word,
        _ if surface.chars().all(|c| !c.is_alphanumeric()) => TokenKind::Punctuation,
        _ => TokenKind::Number,
    }
}

/// Collapses runs of hyphens to a single hyphen (`Baden--Baden`).
fn collapse_hyphens(chunk: &str) -> String {
    let mut out = String::with_capacity(chunk.len());
    let mut prev_hyphen = false;
    for c in chunk.chars() {
        if c == '-' {
            if !prev_hyphen {
                out.push(c);
            }
            prev_hyphen = true;
        } else {
            out.push(c);
            prev_hyphen = false;
        }
    }
    out
}

/// Splits `raw` into tokens.
///
/// A period stays attached when the word plus the period is listed in
/// `abbreviations`, and between two digits (`1.300`). Commas between digits
/// are kept as well (`4,5`).
pub fn tokenize(raw: &str, abbreviations: &HashSet<String>) -> Vec<Token> {
    let mut tokens = Vec::new();
    for chunk in raw.split_whitespace() {
        let chunk = collapse_hyphens(chunk);
        let chars: Vec<char> = chunk.chars().collect();
        let mut buf = String::new();
        for (i, &c) in chars.iter().enumerate() {
            if !is_split_char(c) {
                buf.push(c);
                continue;
            }
            let between_digits = matches!(c, '.' | ',')
                && buf.chars().last().is_some_and(|p| p.is_ascii_digit())
                && chars.get(i + 1).is_some_and(|n| n.is_ascii_digit());
            if between_digits {
                buf.push(c);
                continue;
            }
            if c == '.' && !buf.is_empty() {
                let mut candidate = buf.clone();
                candidate.push('.');
                if abbreviations.contains(&candidate) {
                    tokens.push(Token::new(candidate));
                    buf.clear();
                    continue;
                }
            }
            if !buf.is_empty() {
                tokens.push(Token::new(std::mem::take(&mut buf)));
            }
            tokens.push(Token::new(c.to_string()));
        }
        if !buf.is_empty() {
            tokens.push(Token::new(buf));
        }
    }
    tokens
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub tokens: Vec<Token>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SegmentConfig {
    /// Treat `:` as a sentence boundary.
    pub colon_is_boundary: bool,
}

fn is_boundary(token: &Token, config: SegmentConfig) -> bool {
    token.kind == TokenKind::Punctuation
        && match token.surface.as_str() {
            "." | "!" | "?" => true,
            ":" => config.colon_is_boundary,
            _ => false,
        }
}

/// Groups tokens into sentences and marks the first word of each.
pub fn segment_sentences(tokens: Vec<Token>, config: SegmentConfig) -> Vec<Sentence> {
    let mut sentences = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    for token in tokens {
        let boundary = is_boundary(&token, config);
        current.push(token);
        if boundary {
            sentences.push(Sentence {
                tokens: std::mem::take(&mut current),
            });
        }
    }
    if !current.is_empty() {
        sentences.push(Sentence { tokens: current });
    }
    for sentence in &mut sentences {
        if let Some(first) = sentence
            .tokens
            .iter_mut()
            .find(|t| t.kind != TokenKind::Punctuation)
        {
            if first.kind == TokenKind::Word {
                first.sentence_initial = true;
            }
        }
    }
    sentences
}

fn lowercase_first(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(first) => first.to_lowercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Lowercases a sentence-initial word iff its lowercase rendering occurs
/// sentence-internally somewhere in the corpus.
pub fn normalize_initial(word: &str, lowercase_index: &LowercaseIndex) -> String {
    let lowered = lowercase_first(word);
    if lowered != word && lowercase_index.contains(&lowered) {
        lowered
    } else {
        word.to_string()
    }
}

pub fn is_capitalized(token: &Token) -> bool {
    token.kind == TokenKind::Word && starts_upper(&token.normalized)
}

/// Uppercase initial letter and at least two characters.
pub fn starts_upper(word: &str) -> bool {
    let mut chars = word.chars();
    matches!(chars.next(), Some(c) if c.is_uppercase()) && chars.next().is_some()
}

pub fn starts_lower(word: &str) -> bool {
    matches!(word.chars().next(), Some(c) if c.is_lowercase())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub sentences: Vec<Sentence>,
}

impl Document {
    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flat_map(|s| s.tokens.iter())
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(|s| s.tokens.len()).sum()
    }
}

#[derive(Debug, Clone, Default)]
pub struct CorpusOptions {
    pub abbreviations: HashSet<String>,
    pub segment: SegmentConfig,
    pub execution: Execution,
}

/// A tokenized, segmented and case-normalized document collection.
#[derive(Debug, Clone)]
pub struct Corpus {
    documents: Vec<Document>,
    lowercase: LowercaseIndex,
    vocab: HashSet<String>,
}

impl Corpus {
    /// Builds a corpus from `(doc_id, text)` pairs in the given order.
    pub fn build<I, S, T>(docs: I, options: &CorpusOptions) -> Result<Corpus>
    where
        I: IntoIterator<Item = (S, T)>,
        S: Into<String>,
        T: AsRef<str>,
    {
        let mut seen = HashSet::new();
        let mut raw = Vec::new();
        for (id, text) in docs {
            let id = id.into();
            if !seen.insert(id.clone()) {
                return Err(Error::DuplicateDocument(id));
            }
            raw.push((id, text.as_ref().to_string()));
        }
        let documents = map_ordered(options.execution, &raw, |(id, text)| Document {
            id: id.clone(),
            sentences: segment_sentences(tokenize(text, &options.abbreviations), options.segment),
        });
        Ok(Corpus::from_documents(documents))
    }

    /// Normalizes already segmented documents.
    pub fn from_documents(mut documents: Vec<Document>) -> Corpus {
        let lowercase = build_lowercase_index(&documents);
        for doc in &mut documents {
            for token in doc.sentences.iter_mut().flat_map(|s| s.tokens.iter_mut()) {
                if token.sentence_initial && token.kind == TokenKind::Word {
                    token.normalized = normalize_initial(&token.surface, &lowercase);
                }
            }
        }
        let vocab = documents
            .iter()
            .flat_map(|d| d.tokens())
            .filter(|t| t.kind != TokenKind::Punctuation)
            .map(|t| t.normalized.clone())
            .collect();
        Corpus {
            documents,
            lowercase,
            vocab,
        }
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn lowercase_index(&self) -> &LowercaseIndex {
        &self.lowercase
    }

    /// Every normalized non-punctuation surface in the corpus.
    pub fn vocab(&self) -> &HashSet<String> {
        &self.vocab
    }

    pub fn token_count(&self) -> usize {
        self.documents.iter().map(Document::token_count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.token_count() == 0
    }

    /// Sorted vocabulary, handy for diagnostics.
    pub fn sorted_vocab(&self) -> BTreeSet<&str> {
        self.vocab.iter().map(String::as_str).collect()
    }
}
