//! Word-form heuristics over German capitalized words.
//!
//! All functions are pure; corpus-dependent checks take the corpus
//! vocabulary explicitly.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::lexicon::McLexicon;

/// Minimum length of a stem left after removing an ending.
const MIN_STEM: usize = 3;
/// Minimum length of a potential context matched as a compound head.
const MIN_HEAD: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffixConfig {
    pub onomastic_suffixes: Vec<String>,
    pub place_prefixes: Vec<String>,
    /// Tried in the given order; keep longer endings first.
    pub adjectival_endings: Vec<String>,
    pub impossible_pn_endings: Vec<String>,
    pub participle_prefixes: Vec<String>,
}

impl Default for AffixConfig {
    fn default() -> Self {
        Self::load(include_str!("../data/affixes.ini"))
            .expect("bundled affix config is well-formed")
    }
}

impl AffixConfig {
    /// Parses an INI-style file with one section per list.
    ///
    /// Sections absent from the file keep an empty list, except that
    /// `adjectival_endings` always contains `aner` and `er`.
    pub fn load(source: &str) -> Result<Self> {
        let mut config = AffixConfig {
            onomastic_suffixes: Vec::new(),
            place_prefixes: Vec::new(),
            adjectival_endings: Vec::new(),
            impossible_pn_endings: Vec::new(),
            participle_prefixes: Vec::new(),
        };
        let mut section: Option<&mut Vec<String>> = None;
        for (idx, raw) in source.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                section = Some(match name.trim() {
                    "onomastic_suffixes" => &mut config.onomastic_suffixes,
                    "place_prefixes" => &mut config.place_prefixes,
                    "adjectival_endings" => &mut config.adjectival_endings,
                    "impossible_pn_endings" => &mut config.impossible_pn_endings,
                    "participle_prefixes" => &mut config.participle_prefixes,
                    other => {
                        return Err(Error::Malformed {
                            line: idx + 1,
                            message: format!("unknown section `{other}`"),
                        })
                    }
                });
                continue;
            }
            let Some(list) = section.as_deref_mut() else {
                return Err(Error::Malformed {
                    line: idx + 1,
                    message: "affix outside of a section".into(),
                });
            };
            let affix = line.trim_matches('-').to_lowercase();
            if affix.is_empty() {
                return Err(Error::Malformed {
                    line: idx + 1,
                    message: "empty affix".into(),
                });
            }
            if !list.contains(&affix) {
                list.push(affix);
            }
        }
        for required in ["aner", "er"] {
            if !config.adjectival_endings.iter().any(|e| e == required) {
                config.adjectival_endings.push(required.to_string());
            }
        }
        config
            .adjectival_endings
            .sort_by_key(|e| std::cmp::Reverse(e.chars().count()));
        Ok(config)
    }
}

/// Strips the stem off `word` if `word` ends in `ending` and the stem is
/// long enough.
fn stem<'a>(word: &'a str, ending: &str) -> Option<&'a str> {
    let rest = word.strip_suffix(ending)?;
    (rest.chars().count() >= MIN_STEM).then_some(rest)
}

/// `Frankreichs` → `Frankreich`. The caller decides whether the base is
/// attested.
pub fn strip_genitive(word: &str) -> Option<&str> {
    stem(word, "s")
}

/// True when removing an ending impossible for proper names leaves a form
/// attested in the corpus (`Erwägungen` with `Erwägung` in the vocabulary).
pub fn impossible_pn_inflection(word: &str, vocab: &HashSet<String>, config: &AffixConfig) -> bool {
    config
        .impossible_pn_endings
        .iter()
        .filter_map(|e| stem(word, e))
        .any(|rest| vocab.contains(rest))
}

pub fn has_onomastic_affix(word: &str, config: &AffixConfig) -> bool {
    let lower = word.to_lowercase();
    let len = lower.chars().count();
    config
        .onomastic_suffixes
        .iter()
        .any(|s| lower.ends_with(s.as_str()) && len > s.chars().count())
        || config
            .place_prefixes
            .iter()
            .any(|p| lower.starts_with(p.as_str()) && len >= p.chars().count() + MIN_STEM)
}

/// `Mainzer` → `Mainz`, `Münsteraner` → `Münster`, when the base occurs in
/// the corpus.
pub fn adjectival_base(
    word: &str,
    vocab: &HashSet<String>,
    config: &AffixConfig,
) -> Option<String> {
    config
        .adjectival_endings
        .iter()
        .find_map(|e| stem(word, e).filter(|rest| vocab.contains(*rest)))
        .map(str::to_string)
}

/// A `ge`-participle: ends in `t` or `en` and has `ge` at the start or
/// right after one of the configured prefixes.
pub fn is_past_participle(word: &str, config: &AffixConfig) -> bool {
    let lower = word.to_lowercase();
    if !(lower.ends_with('t') || lower.ends_with("en")) {
        return false;
    }
    lower.starts_with("ge")
        || config.participle_prefixes.iter().any(|p| {
            lower
                .strip_prefix(p.as_str())
                .is_some_and(|rest| rest.starts_with("ge"))
        })
}

/// Lookup structure for exact and compound-head matches against the
/// potential-context lexicon.
#[derive(Debug, Clone, Default)]
pub struct McPotMatcher {
    exact: HashSet<String>,
    heads: HashMap<String, String>,
}

impl McPotMatcher {
    pub fn new(mcpot: &McLexicon) -> Self {
        let mut matcher = McPotMatcher::default();
        for surface in mcpot.surfaces() {
            matcher.insert(surface);
        }
        matcher
    }

    pub fn insert(&mut self, surface: &str) {
        self.exact.insert(surface.to_string());
        if surface.chars().count() >= MIN_HEAD {
            self.heads
                .entry(surface.to_lowercase())
                .or_insert_with(|| surface.to_string());
        }
    }

    /// The matched entry: `word` itself, or the longest entry that `word`
    /// ends with as a compound head (`Senatspräsident` → `Präsident`).
    pub fn matches(&self, word: &str) -> Option<String> {
        if self.exact.contains(word) {
            return Some(word.to_string());
        }
        let lower = word.to_lowercase();
        lower
            .char_indices()
            .skip(1)
            .find_map(|(i, _)| self.heads.get(&lower[i..]))
            .cloned()
    }
}

pub fn matches_mcpot_derived(word: &str, mcpot: &McLexicon) -> Option<String> {
    McPotMatcher::new(mcpot).matches(word)
}
