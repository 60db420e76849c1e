//! Lexicons of minimal contexts, potential minimal contexts and proper
//! names, plus the auxiliary closed-class word lists.
//!
//! File format, one entry per line:
//!
//! ```text
//! # comment
//! surface<TAB>category[<TAB>frame_second]
//! ```

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;

use crate::error::{Error, Result};

/// Category column of a lexicon file.
pub trait Category: Copy + Eq + fmt::Debug + fmt::Display + FromStr {
    /// Whether entries of this category carry a second frame slot.
    fn has_frame(self) -> bool {
        false
    }
}

/// Kinds of minimal context. Also used for harvested potential contexts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum McCategory {
    Title,
    AddressForm,
    AppositionNoun,
    SpeechVerb,
    Preposition,
    PrepositionFrame,
}

impl McCategory {
    /// Contexts that introduce a person name immediately to their right.
    pub fn introduces_person(self) -> bool {
        matches!(
            self,
            McCategory::Title | McCategory::AddressForm | McCategory::AppositionNoun
        )
    }
}

impl fmt::Display for McCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            McCategory::Title => "title",
            McCategory::AddressForm => "address_form",
            McCategory::AppositionNoun => "apposition_noun",
            McCategory::SpeechVerb => "speech_verb",
            McCategory::Preposition => "preposition",
            McCategory::PrepositionFrame => "preposition_frame",
        })
    }
}

impl FromStr for McCategory {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "title" => McCategory::Title,
            "address_form" => McCategory::AddressForm,
            "apposition_noun" => McCategory::AppositionNoun,
            "speech_verb" => McCategory::SpeechVerb,
            "preposition" => McCategory::Preposition,
            "preposition_frame" => McCategory::PrepositionFrame,
            other => return Err(format!("unknown category `{other}`")),
        })
    }
}

impl Category for McCategory {
    fn has_frame(self) -> bool {
        self == McCategory::PrepositionFrame
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PnKind {
    Person,
    Place,
    Unknown,
}

impl fmt::Display for PnKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PnKind::Person => "person",
            PnKind::Place => "place",
            PnKind::Unknown => "unknown",
        })
    }
}

impl FromStr for PnKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "person" => PnKind::Person,
            "place" => PnKind::Place,
            "unknown" => PnKind::Unknown,
            other => return Err(format!("unknown name kind `{other}`")),
        })
    }
}

impl Category for PnKind {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Seed,
    Harvested,
}

/// Which rule produced an entry, and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub rule: String,
    pub doc_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry<C> {
    pub surface: String,
    pub category: C,
    /// Second slot of a preposition frame (`Raum` in `im Raum`).
    pub frame_second: Option<String>,
    pub origin: Origin,
    pub first_seen_doc: Option<String>,
    pub evidence: Vec<Evidence>,
}

impl<C: Category> Entry<C> {
    pub fn seed(surface: impl Into<String>, category: C) -> Self {
        Entry {
            surface: surface.into(),
            category,
            frame_second: None,
            origin: Origin::Seed,
            first_seen_doc: None,
            evidence: Vec::new(),
        }
    }

    pub fn harvested(surface: impl Into<String>, category: C, rule: &str, doc_id: &str) -> Self {
        Entry {
            surface: surface.into(),
            category,
            frame_second: None,
            origin: Origin::Harvested,
            first_seen_doc: Some(doc_id.to_string()),
            evidence: vec![Evidence {
                rule: rule.to_string(),
                doc_id: doc_id.to_string(),
            }],
        }
    }

    fn key(&self) -> String {
        match &self.frame_second {
            Some(second) => format!("{} {}", self.surface, second),
            None => self.surface.clone(),
        }
    }
}

/// An insertion-ordered, grow-only surface store.
///
/// Frame entries are keyed by both slots, so one preposition may open
/// several frames.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon<C> {
    entries: IndexMap<String, Entry<C>>,
}

impl<C> Default for Lexicon<C> {
    fn default() -> Self {
        Lexicon {
            entries: IndexMap::new(),
        }
    }
}

pub type McLexicon = Lexicon<McCategory>;
pub type PnLexicon = Lexicon<PnKind>;

impl<C: Category> Lexicon<C> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `entry` unless its surface is already present. Returns whether
    /// the lexicon grew.
    pub fn add_entry(&mut self, entry: Entry<C>) -> bool {
        debug_assert!(!entry.surface.is_empty() && !entry.surface.contains(char::is_whitespace));
        let key = entry.key();
        if self.entries.contains_key(&key) {
            return false;
        }
        self.entries.insert(key, entry);
        true
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.entries.contains_key(surface)
    }

    pub fn get(&self, surface: &str) -> Option<&Entry<C>> {
        self.entries.get(surface)
    }

    pub fn category(&self, surface: &str) -> Option<C> {
        self.get(surface).map(|e| e.category)
    }

    /// Second slots of every frame opened by `first`.
    pub fn frames_for<'a>(&'a self, first: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.entries
            .values()
            .filter(move |e| e.surface == first)
            .filter_map(|e| e.frame_second.as_deref())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = &Entry<C>> {
        self.entries.values()
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.entries.values().map(|e| e.surface.as_str())
    }

    /// Parses the line format. Re-listing a surface with the same category
    /// is ignored; a different category is an error.
    pub fn load(source: &str) -> Result<Self> {
        let mut lexicon: Lexicon<C> = Lexicon::new();
        for (idx, raw) in source.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let malformed = |message: String| Error::Malformed {
                line: line_no,
                message,
            };
            if !(2..=3).contains(&fields.len()) {
                return Err(malformed(format!(
                    "expected `surface<TAB>category[<TAB>frame]`, got {} field(s)",
                    fields.len()
                )));
            }
            let surface = fields[0].trim();
            if surface.is_empty() || surface.contains(char::is_whitespace) {
                return Err(malformed(format!("invalid surface `{surface}`")));
            }
            let category: C = fields[1]
                .trim()
                .parse()
                .map_err(|_| malformed(format!("unknown category `{}`", fields[1].trim())))?;
            let frame = fields.get(2).map(|f| f.trim()).filter(|f| !f.is_empty());
            match (category.has_frame(), frame) {
                (true, None) => {
                    return Err(malformed(format!("frame `{surface}` lacks a second slot")))
                }
                (false, Some(_)) => {
                    return Err(malformed(format!(
                        "category {category} takes no second slot"
                    )))
                }
                _ => {}
            }
            let mut entry = Entry::seed(surface, category);
            entry.frame_second = frame.map(str::to_string);
            if let Some(existing) = lexicon.entries.get(&entry.key()) {
                if existing.category != category {
                    return Err(Error::ConflictingEntry {
                        line: line_no,
                        surface: surface.to_string(),
                        existing: existing.category.to_string(),
                        requested: category.to_string(),
                    });
                }
                continue;
            }
            lexicon.add_entry(entry);
        }
        Ok(lexicon)
    }

    /// Renders the lexicon sorted by surface.
    pub fn save(&self) -> String {
        let mut entries: Vec<&Entry<C>> = self.entries.values().collect();
        entries.sort_by(|a, b| {
            (a.surface.as_str(), a.frame_second.as_deref())
                .cmp(&(b.surface.as_str(), b.frame_second.as_deref()))
        });
        let mut out = String::new();
        for entry in entries {
            out.push_str(&entry.surface);
            out.push('\t');
            out.push_str(&entry.category.to_string());
            if let Some(second) = &entry.frame_second {
                out.push('\t');
                out.push_str(second);
            }
            out.push('\n');
        }
        out
    }
}

impl McLexicon {
    /// Surfaces ending in a period, used as tokenizer abbreviations.
    pub fn abbreviations(&self) -> HashSet<String> {
        self.surfaces()
            .filter(|s| s.ends_with('.') && s.len() > 1)
            .map(str::to_string)
            .collect()
    }

    /// The bundled seed lexicon.
    pub fn seed() -> Self {
        Self::load(include_str!("../data/mc_seed.tsv"))
            .expect("bundled seed lexicon is well-formed")
    }
}

/// Words that are never accepted as proper names (months, quantity terms).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopList {
    words: HashSet<String>,
}

impl StopList {
    /// One word per line; `#` starts a comment line.
    pub fn load(source: &str) -> Self {
        let words = source
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect();
        StopList { words }
    }

    pub fn bundled() -> Self {
        Self::load(include_str!("../data/stoplist.txt"))
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
}

fn set(words: &[&str]) -> HashSet<String> {
    words.iter().map(|w| w.to_string()).collect()
}

/// Closed-class word lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordLists {
    pub prepositions: HashSet<String>,
    pub articles: HashSet<String>,
    /// Articles that unambiguously mark a following genitive.
    pub genitive_articles: HashSet<String>,
}

impl Default for WordLists {
    fn default() -> Self {
        WordLists {
            prepositions: set(&[
                "ab",
                "an",
                "auf",
                "aus",
                "außer",
                "bei",
                "bis",
                "durch",
                "für",
                "gegen",
                "gegenüber",
                "hinter",
                "in",
                "mit",
                "nach",
                "neben",
                "ohne",
                "seit",
                "trotz",
                "über",
                "um",
                "unter",
                "von",
                "vor",
                "wegen",
                "während",
                "zu",
                "zwischen",
            ]),
            articles: set(&[
                "der", "die", "das", "des", "dem", "den", "ein", "eine", "einer", "eines", "einem",
                "einen",
            ]),
            genitive_articles: set(&["des", "eines"]),
        }
    }
}
