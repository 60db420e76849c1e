//! Ordered corpus indexes: the lowercase-word set used for sentence-initial
//! disambiguation, and the per-capitalized-word context table.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::corpus::{is_capitalized, starts_lower, Corpus, Document, Token, TokenKind};
use crate::exec::{map_ordered, Execution};

/// Words seen with a lowercase initial at a sentence-internal position.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LowercaseIndex {
    words: BTreeSet<String>,
}

impl LowercaseIndex {
    /// Inserts `word` if it starts with a lowercase letter.
    pub fn insert(&mut self, word: &str) -> bool {
        starts_lower(word) && self.words.insert(word.to_string())
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }
}

pub fn build_lowercase_index(documents: &[Document]) -> LowercaseIndex {
    let mut index = LowercaseIndex::default();
    for token in documents.iter().flat_map(Document::tokens) {
        if token.kind == TokenKind::Word && !token.sentence_initial {
            index.insert(&token.surface);
        }
    }
    index
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CapWordEntry {
    pub word: String,
    /// Occurrences immediately preceded by an article.
    pub article_count: usize,
    pub occurrences: usize,
    /// Immediately preceding words that are capitalized or prepositions,
    /// duplicates kept, in corpus order.
    pub preceding: Vec<String>,
}

impl CapWordEntry {
    pub fn distinct_contexts(&self) -> usize {
        self.preceding.iter().collect::<HashSet<_>>().len()
    }
}

/// Context table keyed by capitalized word.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CapIndex {
    entries: BTreeMap<String, CapWordEntry>,
}

impl CapIndex {
    pub fn get(&self, word: &str) -> Option<&CapWordEntry> {
        self.entries.get(word)
    }

    pub fn article_count(&self, word: &str) -> usize {
        self.get(word).map_or(0, |e| e.article_count)
    }

    pub fn preceding_contexts(&self, word: &str) -> &[String] {
        self.get(word).map_or(&[], |e| e.preceding.as_slice())
    }

    pub fn distinct_contexts(&self, word: &str) -> usize {
        self.get(word).map_or(0, CapWordEntry::distinct_contexts)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CapWordEntry> {
        self.entries.values()
    }

    fn merge(&mut self, other: CapIndex) {
        for (word, entry) in other.entries {
            let slot = self.entries.entry(word).or_insert_with(|| CapWordEntry {
                word: entry.word.clone(),
                ..CapWordEntry::default()
            });
            slot.article_count += entry.article_count;
            slot.occurrences += entry.occurrences;
            slot.preceding.extend(entry.preceding);
        }
    }

    /// Tab-separated dump: word, article count, `;`-joined preceding list.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for entry in self.entries.values() {
            out.push_str(&entry.word);
            out.push('\t');
            out.push_str(&entry.article_count.to_string());
            out.push('\t');
            out.push_str(&entry.preceding.join(";"));
            out.push('\n');
        }
        out
    }
}

fn index_document(
    doc: &Document,
    prepositions: &HashSet<String>,
    articles: &HashSet<String>,
) -> CapIndex {
    let mut index = CapIndex::default();
    let mut prev: Option<&Token> = None;
    for token in doc.tokens() {
        if is_capitalized(token) {
            let entry = index
                .entries
                .entry(token.normalized.clone())
                .or_insert_with(|| CapWordEntry {
                    word: token.normalized.clone(),
                    ..CapWordEntry::default()
                });
            entry.occurrences += 1;
            if let Some(p) = prev {
                if articles.contains(&p.normalized) {
                    entry.article_count += 1;
                }
                if is_capitalized(p) || prepositions.contains(&p.normalized) {
                    entry.preceding.push(p.normalized.clone());
                }
            }
        }
        prev = Some(token);
    }
    index
}

/// Builds the context table. Documents are indexed independently and merged
/// in document order, so context never crosses a document boundary.
pub fn build_cap_index(
    corpus: &Corpus,
    prepositions: &HashSet<String>,
    articles: &HashSet<String>,
    mode: Execution,
) -> CapIndex {
    let partials = map_ordered(mode, corpus.documents(), |doc| {
        index_document(doc, prepositions, articles)
    });
    let mut index = CapIndex::default();
    for partial in partials {
        index.merge(partial);
    }
    index
}
