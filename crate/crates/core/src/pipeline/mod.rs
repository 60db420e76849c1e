//! The recognition passes and the fixpoint loop that drives them.
//!
//! Every pass scans the corpus against a frozen view of the lexicons and
//! returns proposals; proposals are applied as one batch afterwards. The
//! `*_pass` wrappers scan and apply in one step.

mod fixpoint;
mod hypothesis;
mod passes;
mod tagging;

use std::collections::HashSet;

use crate::corpus::Corpus;
use crate::exec::Execution;
use crate::index::{build_cap_index, CapIndex};
use crate::lexicon::{Entry, McCategory, McLexicon, PnKind, PnLexicon, StopList, WordLists};
use crate::morphology::{AffixConfig, McPotMatcher};

pub use fixpoint::{run_fixpoint, FixpointStats, IterationStats};
pub use hypothesis::{
    evaluate_hypothesis, generate_hypotheses, Decision, Hypothesis, HypothesisKind, Occurrence,
    Outcome, Rule, Status,
};
pub use passes::{
    apposition_pass, collect_mcpot, definite_pn_pass, place_name_pass, scan_apposition,
    scan_definite, scan_mcpot, scan_place_names,
};
pub use tagging::{render_tagged, tag_corpus, Tag, TaggedToken};

/// The three lexicons the pipeline reads and grows.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicons {
    /// Definite minimal contexts (seed, never grown).
    pub mc: McLexicon,
    /// Potential minimal contexts harvested from known names.
    pub mcpot: McLexicon,
    pub pn: PnLexicon,
}

impl Lexicons {
    pub fn with_mc(mc: McLexicon) -> Self {
        Lexicons {
            mc,
            ..Lexicons::default()
        }
    }
}

/// Static word lists and affix configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resources {
    pub stoplist: StopList,
    pub affixes: AffixConfig,
    pub words: WordLists,
}

impl Default for Resources {
    fn default() -> Self {
        Resources {
            stoplist: StopList::bundled(),
            affixes: AffixConfig::default(),
            words: WordLists::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineConfig {
    pub max_iterations: usize,
    /// Distinct preceding contexts required by the distributional rule.
    pub min_evidence: usize,
    /// How many contiguous capitalized words before a name are harvested.
    pub mcpot_window: usize,
    pub execution: Execution,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            max_iterations: 50,
            min_evidence: 2,
            mcpot_window: 2,
            execution: Execution::default(),
        }
    }
}

/// A candidate lexicon addition produced by a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proposal<C> {
    pub surface: String,
    pub category: C,
    pub rule: &'static str,
    pub doc_id: String,
}

impl<C> Proposal<C> {
    pub fn new(surface: impl Into<String>, category: C, rule: &'static str, doc_id: &str) -> Self {
        Proposal {
            surface: surface.into(),
            category,
            rule,
            doc_id: doc_id.to_string(),
        }
    }
}

/// Proposals collected during one scan phase, in first-occurrence order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Batch {
    pub names: Vec<Proposal<PnKind>>,
    pub contexts: Vec<Proposal<McCategory>>,
}

impl Batch {
    pub fn append(&mut self, mut other: Batch) {
        self.names.append(&mut other.names);
        self.contexts.append(&mut other.contexts);
    }

    /// Applies every proposal; stop-listed names are dropped. Returns the
    /// number of new names and new potential contexts.
    pub fn apply(self, lexicons: &mut Lexicons, stoplist: &StopList) -> (usize, usize) {
        let mut new_names = 0;
        for p in self.names {
            if stoplist.contains(&p.surface) {
                continue;
            }
            if lexicons
                .pn
                .add_entry(Entry::harvested(p.surface, p.category, p.rule, &p.doc_id))
            {
                new_names += 1;
            }
        }
        let mut new_contexts = 0;
        for p in self.contexts {
            if stoplist.contains(&p.surface) {
                continue;
            }
            if lexicons
                .mcpot
                .add_entry(Entry::harvested(p.surface, p.category, p.rule, &p.doc_id))
            {
                new_contexts += 1;
            }
        }
        (new_names, new_contexts)
    }
}

/// Frozen, read-only view shared by all scans of one phase.
pub struct Scan<'a> {
    pub lexicons: &'a Lexicons,
    pub resources: &'a Resources,
    pub config: &'a PipelineConfig,
    pub vocab: &'a HashSet<String>,
    pub cap_index: &'a CapIndex,
    pub prepositions: &'a HashSet<String>,
    pub matcher: McPotMatcher,
}

impl<'a> Scan<'a> {
    pub fn new(
        analysis: &'a Analysis,
        lexicons: &'a Lexicons,
        resources: &'a Resources,
        config: &'a PipelineConfig,
    ) -> Self {
        Scan {
            lexicons,
            resources,
            config,
            vocab: analysis.vocab,
            cap_index: &analysis.cap_index,
            prepositions: &analysis.prepositions,
            matcher: McPotMatcher::new(&lexicons.mcpot),
        }
    }

    pub fn is_preposition(&self, word: &str) -> bool {
        self.prepositions.contains(word)
    }

    pub fn is_stopped(&self, word: &str) -> bool {
        self.resources.stoplist.contains(word)
    }
}

/// Corpus-derived data that stays fixed across iterations.
#[derive(Debug, Clone)]
pub struct Analysis<'c> {
    pub vocab: &'c HashSet<String>,
    pub cap_index: CapIndex,
    /// General prepositions plus the place prepositions of the MC lexicon.
    pub prepositions: HashSet<String>,
}

impl<'c> Analysis<'c> {
    pub fn new(corpus: &'c Corpus, mc: &McLexicon, resources: &Resources, mode: Execution) -> Self {
        let mut prepositions = resources.words.prepositions.clone();
        prepositions.extend(
            mc.iter()
                .filter(|e| e.category == McCategory::Preposition)
                .map(|e| e.surface.clone()),
        );
        let cap_index = build_cap_index(corpus, &prepositions, &resources.words.articles, mode);
        Analysis {
            vocab: corpus.vocab(),
            cap_index,
            prepositions,
        }
    }
}

/// Everything a full run produces.
#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub lexicons: Lexicons,
    pub definite_new: usize,
    pub stats: FixpointStats,
    pub hypotheses: Vec<Hypothesis>,
    pub cap_index: CapIndex,
}

/// Preprocessing (indexes, definite-name pass) followed by the fixpoint.
pub fn run_pipeline(
    corpus: &Corpus,
    mut lexicons: Lexicons,
    resources: &Resources,
    config: &PipelineConfig,
) -> PipelineRun {
    let analysis = Analysis::new(corpus, &lexicons.mc, resources, config.execution);
    let definite_new = definite_pn_pass(corpus, &mut lexicons, &analysis, resources, config);
    let (stats, hypotheses) = run_fixpoint(corpus, &mut lexicons, &analysis, resources, config);
    PipelineRun {
        lexicons,
        definite_new,
        stats,
        hypotheses,
        cap_index: analysis.cap_index,
    }
}
