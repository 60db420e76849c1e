//! Lexicon-driven passes: definite names from minimal contexts, harvesting
//! of potential contexts, place names and loose appositions.

use crate::corpus::{is_capitalized, Corpus, Document, Token, TokenKind};
use crate::exec::map_ordered;
use crate::lexicon::{McCategory, PnKind};
use crate::morphology::{adjectival_base, has_onomastic_affix, is_past_participle, strip_genitive};

use super::{Analysis, Batch, Lexicons, PipelineConfig, Proposal, Resources, Scan};

fn scan_corpus<F>(corpus: &Corpus, scan: &Scan<'_>, per_doc: F) -> Batch
where
    F: Fn(&Document, &Scan<'_>) -> Batch + Sync + Send,
{
    let partials = map_ordered(scan.config.execution, corpus.documents(), |doc| {
        per_doc(doc, scan)
    });
    let mut batch = Batch::default();
    for partial in partials {
        batch.append(partial);
    }
    batch
}

fn norm(tokens: &[Token], i: usize) -> Option<&str> {
    tokens.get(i).map(|t| t.normalized.as_str())
}

fn prev(tokens: &[Token], i: usize, back: usize) -> Option<&Token> {
    i.checked_sub(back).map(|j| &tokens[j])
}

/// True when the word right of a place preposition looks like part of a
/// fixed phrase rather than a place (`aus Anlaß des`, `in Kauf genommen`,
/// `in Lafontaines Worten`).
fn blocked_after_preposition(tokens: &[Token], i: usize, scan: &Scan<'_>) -> bool {
    let Some(next) = tokens.get(i + 1) else {
        return false;
    };
    let words = &scan.resources.words;
    words.genitive_articles.contains(&next.normalized)
        || (next.kind == TokenKind::Word
            && !is_capitalized(next)
            && !scan.is_preposition(&next.normalized)
            && is_past_participle(&next.normalized, &scan.resources.affixes))
        || (is_capitalized(next) && strip_genitive(&tokens[i].normalized).is_some())
}

fn definite_in_document(doc: &Document, scan: &Scan<'_>) -> Batch {
    let mc = &scan.lexicons.mc;
    let mut batch = Batch::default();
    for sentence in &doc.sentences {
        let tokens = &sentence.tokens;
        for (i, token) in tokens.iter().enumerate() {
            let word = token.normalized.as_str();
            if !is_capitalized(token) || scan.is_stopped(word) || mc.contains(word) {
                continue;
            }
            let before = prev(tokens, i, 1).map(|t| t.normalized.as_str());
            let before2 = prev(tokens, i, 2).map(|t| t.normalized.as_str());
            let before_cat = before.and_then(|w| mc.category(w));
            let is_speech =
                |w: Option<&str>| w.and_then(|w| mc.category(w)) == Some(McCategory::SpeechVerb);

            let person_rule = if before_cat.is_some_and(McCategory::introduces_person) {
                Some("mc_apposition")
            } else if is_speech(norm(tokens, i + 1)) {
                Some("mc_speech_verb")
            } else if before2 == Some("so") && is_speech(before) {
                Some("mc_so_speech_verb")
            } else {
                None
            };
            if let Some(rule) = person_rule {
                batch
                    .names
                    .push(Proposal::new(word, PnKind::Person, rule, &doc.id));
                continue;
            }

            if before_cat == Some(McCategory::Preposition)
                && !blocked_after_preposition(tokens, i, scan)
            {
                batch.names.push(Proposal::new(
                    word,
                    PnKind::Place,
                    "mc_place_preposition",
                    &doc.id,
                ));
            } else if let (Some(first), Some(second)) = (before2, before) {
                if mc.frames_for(first).any(|s| s == second) {
                    batch
                        .names
                        .push(Proposal::new(word, PnKind::Place, "mc_frame", &doc.id));
                }
            }
        }
    }
    batch
}

/// Names in definite minimal contexts: after titles, forms of address and
/// apposition nouns, before speech verbs (or after `so` + speech verb),
/// after place prepositions and in preposition frames.
pub fn scan_definite(corpus: &Corpus, scan: &Scan<'_>) -> Batch {
    scan_corpus(corpus, scan, definite_in_document)
}

pub fn definite_pn_pass(
    corpus: &Corpus,
    lexicons: &mut Lexicons,
    analysis: &Analysis<'_>,
    resources: &Resources,
    config: &PipelineConfig,
) -> usize {
    let batch = scan_definite(corpus, &Scan::new(analysis, lexicons, resources, config));
    batch.apply(lexicons, &resources.stoplist).0
}

/// Words of the definite context lexicon, including frame second slots.
fn is_definite_context(word: &str, scan: &Scan<'_>) -> bool {
    scan.lexicons
        .mc
        .iter()
        .any(|e| e.surface == word || e.frame_second.as_deref() == Some(word))
}

fn mcpot_in_document(doc: &Document, scan: &Scan<'_>) -> Batch {
    let pn = &scan.lexicons.pn;
    let mut batch = Batch::default();
    for sentence in &doc.sentences {
        let tokens = &sentence.tokens;
        for (i, token) in tokens.iter().enumerate() {
            let word = token.normalized.as_str();
            if !is_capitalized(token) || !pn.contains(word) {
                continue;
            }
            if strip_genitive(word).is_some_and(|base| pn.contains(base)) {
                continue;
            }
            for back in 1..=scan.config.mcpot_window {
                let Some(ctx) = prev(tokens, i, back) else {
                    break;
                };
                if !is_capitalized(ctx) || pn.contains(&ctx.normalized) {
                    break;
                }
                if is_definite_context(&ctx.normalized, scan) {
                    continue;
                }
                batch.contexts.push(Proposal::new(
                    ctx.normalized.as_str(),
                    McCategory::AppositionNoun,
                    "preceding_known_name",
                    &doc.id,
                ));
            }
        }
    }
    batch
}

/// Capitalized words immediately preceding known names.
pub fn scan_mcpot(corpus: &Corpus, scan: &Scan<'_>) -> Batch {
    scan_corpus(corpus, scan, mcpot_in_document)
}

pub fn collect_mcpot(
    corpus: &Corpus,
    lexicons: &mut Lexicons,
    analysis: &Analysis<'_>,
    resources: &Resources,
    config: &PipelineConfig,
) -> usize {
    let batch = scan_mcpot(corpus, &Scan::new(analysis, lexicons, resources, config));
    batch.apply(lexicons, &resources.stoplist).1
}

fn places_in_document(doc: &Document, scan: &Scan<'_>) -> Batch {
    let affixes = &scan.resources.affixes;
    let mut batch = Batch::default();
    for sentence in &doc.sentences {
        let tokens = &sentence.tokens;
        for (i, token) in tokens.iter().enumerate() {
            if !is_capitalized(token) {
                continue;
            }
            let word = token.normalized.as_str();
            if tokens.get(i + 1).is_some_and(is_capitalized) {
                if let Some(base) = adjectival_base(word, scan.vocab, affixes) {
                    batch.names.push(Proposal::new(
                        base,
                        PnKind::Place,
                        "adjectival_place",
                        &doc.id,
                    ));
                }
            }
            let after_preposition =
                prev(tokens, i, 1).is_some_and(|p| scan.is_preposition(&p.normalized));
            if after_preposition && has_onomastic_affix(word, affixes) {
                batch.names.push(Proposal::new(
                    word,
                    PnKind::Place,
                    "onomastic_affix",
                    &doc.id,
                ));
            }
        }
    }
    batch
}

/// Place names from adjectival derivations (`Mainzer Landtag`) and
/// onomastic affixes after prepositions (`aus Söllingen`).
pub fn scan_place_names(corpus: &Corpus, scan: &Scan<'_>) -> Batch {
    scan_corpus(corpus, scan, places_in_document)
}

pub fn place_name_pass(
    corpus: &Corpus,
    lexicons: &mut Lexicons,
    analysis: &Analysis<'_>,
    resources: &Resources,
    config: &PipelineConfig,
) -> usize {
    let batch = scan_place_names(corpus, &Scan::new(analysis, lexicons, resources, config));
    batch.apply(lexicons, &resources.stoplist).0
}

/// Longest words in the comma slot of a loose apposition.
const APPOSITION_SLOT: usize = 3;

/// Matches `article Head [gen-article [modifier] Noun] , Cap+ ,` starting at
/// `start`, returning the comma-slot word range.
fn match_apposition(tokens: &[Token], start: usize, scan: &Scan<'_>) -> Option<(usize, usize)> {
    let words = &scan.resources.words;
    if !words.articles.contains(&tokens[start].normalized)
        || !is_capitalized(tokens.get(start + 1)?)
    {
        return None;
    }
    let mut j = start + 2;
    if words.genitive_articles.contains(norm(tokens, j)?) {
        let first = tokens.get(j + 1)?;
        let second = tokens.get(j + 2);
        if first.kind == TokenKind::Word && second.is_some_and(is_capitalized) {
            j += 3;
        } else if is_capitalized(first) {
            j += 2;
        } else {
            return None;
        }
    }
    if !tokens.get(j)?.is_punct(",") {
        return None;
    }
    let slot_start = j + 1;
    let mut k = slot_start;
    while k < tokens.len() && is_capitalized(&tokens[k]) && k - slot_start < APPOSITION_SLOT {
        k += 1;
    }
    let close = tokens.get(k)?;
    (k > slot_start && (close.is_punct(",") || close.is_punct("("))).then_some((slot_start, k))
}

fn appositions_in_document(doc: &Document, scan: &Scan<'_>) -> Batch {
    let mut batch = Batch::default();
    for sentence in &doc.sentences {
        let tokens = &sentence.tokens;
        for start in 0..tokens.len() {
            let Some((from, to)) = match_apposition(tokens, start, scan) else {
                continue;
            };
            let name = &tokens[to - 1].normalized;
            batch.names.push(Proposal::new(
                name.as_str(),
                PnKind::Person,
                "apposition",
                &doc.id,
            ));
            for t in &tokens[from..to - 1] {
                if scan.matcher.matches(&t.normalized).is_some() {
                    batch.contexts.push(Proposal::new(
                        t.normalized.as_str(),
                        McCategory::AppositionNoun,
                        "apposition",
                        &doc.id,
                    ));
                }
            }
        }
    }
    batch
}

/// Loose appositions: `der Staatssekretär des Landesinnenministeriums,
/// Basten, ...`.
pub fn scan_apposition(corpus: &Corpus, scan: &Scan<'_>) -> Batch {
    scan_corpus(corpus, scan, appositions_in_document)
}

pub fn apposition_pass(
    corpus: &Corpus,
    lexicons: &mut Lexicons,
    analysis: &Analysis<'_>,
    resources: &Resources,
    config: &PipelineConfig,
) -> usize {
    let batch = scan_apposition(corpus, &Scan::new(analysis, lexicons, resources, config));
    batch.apply(lexicons, &resources.stoplist).0
}
