//! Hypotheses over adjacent word pairs and the rules that resolve them.

use indexmap::IndexMap;

use crate::corpus::{is_capitalized, Corpus, TokenKind};
use crate::exec::map_ordered;
use crate::lexicon::{McCategory, PnKind, PnLexicon};
use crate::morphology::{impossible_pn_inflection, is_past_participle, strip_genitive};

use super::{Batch, Proposal, Scan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HypothesisKind {
    /// Two adjacent capitalized words.
    CapPair,
    /// A preposition followed by a capitalized word.
    PrepCap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pending,
    Accepted,
    Rejected,
    Unresolved,
}

/// Resolution rules, checked in the order listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    LeftIsName,
    ImpossibleInflection,
    StopListed,
    McPotContext,
    GenitiveBase,
    RightIsMcPot,
    GenitiveArticleFollows,
    ParticipleFollows,
    PrenominalGenitive,
    Distributional,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::LeftIsName => "a",
            Rule::ImpossibleInflection => "b",
            Rule::StopListed => "c",
            Rule::McPotContext => "d",
            Rule::GenitiveBase => "e",
            Rule::RightIsMcPot => "f",
            Rule::GenitiveArticleFollows => "g",
            Rule::ParticipleFollows => "h",
            Rule::PrenominalGenitive => "i",
            Rule::Distributional => "j",
        }
    }

    /// Evidence label recorded on lexicon entries.
    pub fn evidence(self) -> &'static str {
        match self {
            Rule::LeftIsName => "left_is_name",
            Rule::ImpossibleInflection => "impossible_inflection",
            Rule::StopListed => "stop_listed",
            Rule::McPotContext => "mcpot_context",
            Rule::GenitiveBase => "genitive_base",
            Rule::RightIsMcPot => "right_is_mcpot",
            Rule::GenitiveArticleFollows => "genitive_article_follows",
            Rule::ParticipleFollows => "participle_follows",
            Rule::PrenominalGenitive => "prenominal_genitive",
            Rule::Distributional => "distributional",
        }
    }
}

/// One place a hypothesis was observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub doc_index: usize,
    pub doc_id: String,
    pub sentence_no: usize,
    /// Position of the right word within its sentence.
    pub position: usize,
    /// Normalized token after the right word, if any.
    pub next: Option<String>,
    pub next_kind: Option<TokenKind>,
    pub next_capitalized: bool,
    pub in_quotes: bool,
}

/// A distinct (kind, left, right) pair and all its occurrences. `doc_id`
/// and `sentence_no` point at the first occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub kind: HypothesisKind,
    pub left: String,
    pub right: String,
    pub doc_id: String,
    pub sentence_no: usize,
    pub status: Status,
    pub rule_fired: Option<Rule>,
    pub in_quotes: bool,
    pub occurrences: Vec<Occurrence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    AcceptPn,
    Reject,
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub outcome: Outcome,
    pub rule: Option<Rule>,
    pub new_pn: Option<String>,
    pub new_mcpots: Vec<String>,
    pub reason: String,
}

impl Decision {
    fn reject(rule: Rule, reason: String) -> Self {
        Decision {
            outcome: Outcome::Reject,
            rule: Some(rule),
            new_pn: None,
            new_mcpots: Vec::new(),
            reason,
        }
    }

    fn accept(rule: Rule, name: &str, reason: String) -> Self {
        Decision {
            outcome: Outcome::AcceptPn,
            rule: Some(rule),
            new_pn: Some(name.to_string()),
            new_mcpots: Vec::new(),
            reason,
        }
    }

    fn unresolved() -> Self {
        Decision {
            outcome: Outcome::Unresolved,
            rule: None,
            new_pn: None,
            new_mcpots: Vec::new(),
            reason: "no rule applies".into(),
        }
    }

    pub fn status(&self) -> Status {
        match self.outcome {
            Outcome::AcceptPn => Status::Accepted,
            Outcome::Reject => Status::Rejected,
            Outcome::Unresolved => Status::Unresolved,
        }
    }
}

type Key = (HypothesisKind, String, String);

fn hypotheses_in_document(
    doc_index: usize,
    corpus: &Corpus,
    scan: &Scan<'_>,
) -> Vec<(Key, Occurrence)> {
    let doc = &corpus.documents()[doc_index];
    let mut found = Vec::new();
    for (sentence_no, sentence) in doc.sentences.iter().enumerate() {
        let tokens = &sentence.tokens;
        let mut quotes_open = false;
        for (i, token) in tokens.iter().enumerate() {
            if token.is_quote() {
                quotes_open = !quotes_open;
                continue;
            }
            if i == 0 || !is_capitalized(token) {
                continue;
            }
            let left = &tokens[i - 1];
            let kind = if is_capitalized(left) {
                HypothesisKind::CapPair
            } else if left.kind == TokenKind::Word && scan.is_preposition(&left.normalized) {
                HypothesisKind::PrepCap
            } else {
                continue;
            };
            let next = tokens.get(i + 1);
            found.push((
                (kind, left.normalized.clone(), token.normalized.clone()),
                Occurrence {
                    doc_index,
                    doc_id: doc.id.clone(),
                    sentence_no,
                    position: i,
                    next: next.map(|t| t.normalized.clone()),
                    next_kind: next.map(|t| t.kind),
                    next_capitalized: next.is_some_and(is_capitalized),
                    in_quotes: quotes_open,
                },
            ));
        }
    }
    found
}

/// One hypothesis per distinct adjacent pair, in first-occurrence order.
/// Capitalized pairs whose left word is already a known name come out
/// rejected.
pub fn generate_hypotheses(corpus: &Corpus, scan: &Scan<'_>) -> Vec<Hypothesis> {
    let indices: Vec<usize> = (0..corpus.documents().len()).collect();
    let per_doc = map_ordered(scan.config.execution, &indices, |&i| {
        hypotheses_in_document(i, corpus, scan)
    });
    let mut merged: IndexMap<Key, Hypothesis> = IndexMap::new();
    for (key, occ) in per_doc.into_iter().flatten() {
        let hyp = merged.entry(key.clone()).or_insert_with(|| Hypothesis {
            kind: key.0,
            left: key.1.clone(),
            right: key.2.clone(),
            doc_id: occ.doc_id.clone(),
            sentence_no: occ.sentence_no,
            status: Status::Pending,
            rule_fired: None,
            in_quotes: false,
            occurrences: Vec::new(),
        });
        hyp.in_quotes |= occ.in_quotes;
        hyp.occurrences.push(occ);
    }
    let mut hypotheses: Vec<Hypothesis> = merged.into_values().collect();
    for h in &mut hypotheses {
        if h.kind == HypothesisKind::CapPair && scan.lexicons.pn.contains(&h.left) {
            h.status = Status::Rejected;
            h.rule_fired = Some(Rule::LeftIsName);
        }
    }
    hypotheses
}

fn evaluate_cap_pair(h: &Hypothesis, scan: &Scan<'_>) -> Decision {
    let pn: &PnLexicon = &scan.lexicons.pn;
    let affixes = &scan.resources.affixes;
    if pn.contains(&h.left) {
        return Decision::reject(Rule::LeftIsName, format!("`{}` is a known name", h.left));
    }
    if impossible_pn_inflection(&h.right, scan.vocab, affixes) {
        return Decision::reject(
            Rule::ImpossibleInflection,
            format!("`{}` carries an inflection impossible for names", h.right),
        );
    }
    if scan.is_stopped(&h.right) || scan.is_stopped(&h.left) {
        return Decision::reject(Rule::StopListed, "stop-listed word".into());
    }
    if let Some(head) = scan.matcher.matches(&h.left) {
        let mut d = Decision::accept(
            Rule::McPotContext,
            &h.right,
            format!("`{}` derives from potential context `{head}`", h.left),
        );
        if !scan.lexicons.mcpot.contains(&h.left) {
            d.new_mcpots.push(h.left.clone());
        }
        return d;
    }
    if let Some(base) = strip_genitive(&h.right).filter(|b| scan.vocab.contains(*b)) {
        return Decision::accept(
            Rule::GenitiveBase,
            base,
            format!("article-less genitive of attested `{base}`"),
        );
    }
    Decision::unresolved()
}

fn evaluate_prep_cap(h: &Hypothesis, scan: &Scan<'_>) -> Decision {
    let words = &scan.resources.words;
    let affixes = &scan.resources.affixes;
    if scan.is_stopped(&h.right) {
        return Decision::reject(Rule::StopListed, "stop-listed word".into());
    }
    if scan.lexicons.mcpot.contains(&h.right) {
        return Decision::reject(
            Rule::RightIsMcPot,
            format!("`{}` is a potential context", h.right),
        );
    }
    let nexts = || {
        h.occurrences
            .iter()
            .filter_map(|o| o.next.as_deref().map(|n| (n, o)))
    };
    if let Some((article, _)) = nexts().find(|(n, _)| words.genitive_articles.contains(*n)) {
        return Decision::reject(
            Rule::GenitiveArticleFollows,
            format!("followed by genitive article `{article}`"),
        );
    }
    let participle = nexts().find(|(n, o)| {
        o.next_kind == Some(TokenKind::Word)
            && !o.next_capitalized
            && !scan.is_preposition(n)
            && is_past_participle(n, affixes)
    });
    if let Some((p, _)) = participle {
        return Decision::reject(
            Rule::ParticipleFollows,
            format!("followed by participle `{p}`"),
        );
    }
    if let Some(base) = strip_genitive(&h.right) {
        if h.occurrences.iter().any(|o| o.next_capitalized) {
            return Decision::accept(
                Rule::PrenominalGenitive,
                base,
                format!("prenominal genitive `{}` before a noun", h.right),
            );
        }
    }
    let articles = scan.cap_index.article_count(&h.right);
    let contexts = scan.cap_index.distinct_contexts(&h.right);
    if articles == 0 && contexts >= scan.config.min_evidence {
        return Decision::accept(
            Rule::Distributional,
            &h.right,
            format!("never with an article, {contexts} distinct contexts"),
        );
    }
    Decision::unresolved()
}

/// Applies the resolution rules; the first matching rule decides.
pub fn evaluate_hypothesis(h: &Hypothesis, scan: &Scan<'_>) -> Decision {
    match h.kind {
        HypothesisKind::CapPair => evaluate_cap_pair(h, scan),
        HypothesisKind::PrepCap => evaluate_prep_cap(h, scan),
    }
}

/// Turns a decision into lexicon proposals, attributed to the first
/// occurrence.
pub(super) fn decision_batch(h: &Hypothesis, d: &Decision) -> Batch {
    let mut batch = Batch::default();
    let rule = d.rule.map_or("unresolved", Rule::evidence);
    if let Some(name) = &d.new_pn {
        batch.names.push(Proposal::new(
            name.as_str(),
            PnKind::Unknown,
            rule,
            &h.doc_id,
        ));
    }
    for ctx in &d.new_mcpots {
        batch.contexts.push(Proposal::new(
            ctx.as_str(),
            McCategory::AppositionNoun,
            rule,
            &h.doc_id,
        ));
    }
    batch
}
