//! Incremental proper-name tagging for German newspaper text.
//!
//! A small seed lexicon of definite minimal contexts (titles, forms of
//! address, speech verbs, place prepositions) identifies the first names.
//! Known names supply new potential contexts, contexts supply new names,
//! and the loop runs until no new name is found. Adjacent-word hypotheses
//! are resolved by morphological and distributional rules.
//!
//! ```
//! use pntag::{Corpus, CorpusOptions, Lexicons, McLexicon, PipelineConfig, Resources};
//!
//! let mc = McLexicon::seed();
//! let options = CorpusOptions { abbreviations: mc.abbreviations(), ..Default::default() };
//! let corpus = Corpus::build([("1", "Der Zug hielt bei Frankfurt. Heinlein fügte hinzu, er sei spät.")], &options)?;
//! let run = pntag::run_pipeline(&corpus, Lexicons::with_mc(mc), &Resources::default(), &PipelineConfig::default());
//! assert!(run.lexicons.pn.contains("Frankfurt"));
//! assert!(run.lexicons.pn.contains("Heinlein"));
//! # Ok::<(), pntag::Error>(())
//! ```

pub mod corpus;
pub mod error;
pub mod eval;
pub mod exec;
pub mod index;
pub mod lexicon;
pub mod morphology;
pub mod pipeline;

pub use corpus::{Corpus, CorpusOptions, SegmentConfig, Token, TokenKind};
pub use error::{Error, Result};
pub use eval::{
    compare_gold, parse_tagged, precision, recognition_rate, report_unresolved, EvalCounts,
};
pub use exec::Execution;
pub use index::{CapIndex, CapWordEntry, LowercaseIndex};
pub use lexicon::{McCategory, McLexicon, PnKind, PnLexicon, StopList, WordLists};
pub use morphology::AffixConfig;
pub use pipeline::{
    render_tagged, run_pipeline, tag_corpus, FixpointStats, Lexicons, PipelineConfig, PipelineRun,
    Resources,
};
