use std::fmt;

use crate::corpus::{Corpus, TokenKind};
use crate::lexicon::PnLexicon;
use crate::morphology::strip_genitive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Ne,
    O,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Ne => "NE",
            Tag::O => "O",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedToken {
    pub surface: String,
    pub tag: Tag,
}

/// Tags every token whose normalized form, or its genitive base, is a known
/// name. Returns one token list per sentence, in corpus order.
pub fn tag_corpus(corpus: &Corpus, pn: &PnLexicon) -> Vec<Vec<TaggedToken>> {
    corpus
        .documents()
        .iter()
        .flat_map(|d| d.sentences.iter())
        .map(|s| {
            s.tokens
                .iter()
                .map(|t| {
                    let word = t.normalized.as_str();
                    let is_name = t.kind == TokenKind::Word
                        && (pn.contains(word)
                            || strip_genitive(word).is_some_and(|b| pn.contains(b)));
                    TaggedToken {
                        surface: t.surface.clone(),
                        tag: if is_name { Tag::Ne } else { Tag::O },
                    }
                })
                .collect()
        })
        .collect()
}

/// `surface<TAB>tag` per line, each sentence followed by a blank line.
pub fn render_tagged(sentences: &[Vec<TaggedToken>]) -> String {
    let mut out = String::new();
    for sentence in sentences {
        for token in sentence {
            out.push_str(&token.surface);
            out.push('\t');
            out.push_str(&token.tag.to_string());
            out.push('\n');
        }
        out.push('\n');
    }
    out
}
