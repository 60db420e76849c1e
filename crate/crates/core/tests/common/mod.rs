#![allow(dead_code)]

pub mod synth;

use std::fs;
use std::path::{Path, PathBuf};

use pntag::corpus::{Corpus, CorpusOptions};
use pntag::exec::Execution;
use pntag::lexicon::{McLexicon, PnKind};
use pntag::pipeline::{
    definite_pn_pass, evaluate_hypothesis, generate_hypotheses, scan_apposition, scan_mcpot,
    scan_place_names, Analysis, Batch, Lexicons, PipelineConfig, Proposal, Resources, Scan, Status,
};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn sample_mc() -> McLexicon {
    McLexicon::load(&fs::read_to_string(fixture_dir().join("sample_mc.tsv")).unwrap()).unwrap()
}

pub fn sample_docs() -> Vec<(String, String)> {
    let mut files: Vec<PathBuf> = fs::read_dir(fixture_dir().join("sample"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
        .iter()
        .map(|p| {
            (
                p.file_stem().unwrap().to_string_lossy().into_owned(),
                fs::read_to_string(p).unwrap(),
            )
        })
        .collect()
}

pub fn build(docs: &[(String, String)], mc: &McLexicon) -> Corpus {
    let options = CorpusOptions {
        abbreviations: mc.abbreviations(),
        ..CorpusOptions::default()
    };
    Corpus::build(docs.iter().map(|(a, b)| (a.clone(), b.clone())), &options).unwrap()
}

pub fn sequential() -> PipelineConfig {
    PipelineConfig {
        execution: Execution::Sequential,
        ..PipelineConfig::default()
    }
}

const CAPS: &[&str] = &[
    "Wörner",
    "Biehle",
    "Kohl",
    "Meier",
    "Frankfurt",
    "Söllingen",
    "Mainz",
    "Mainzer",
    "Münster",
    "Münsteraner",
    "Landtag",
    "Strategie",
    "Frankreichs",
    "Frankreich",
    "Lafontaines",
    "Worten",
    "Anlaß",
    "Kauf",
    "Rücksicht",
    "Präsident",
    "Senatspräsident",
    "Minister",
    "Partei",
    "Dutzend",
    "April",
    "Raum",
    "Erwägung",
    "Erwägungen",
    "Herr",
    "Frau",
    "Prof.",
    "Chef",
    "Bundesrat",
    "Ministeriums",
    "Ostfriesland",
    "Tübingen",
];
const LOWER: &[&str] = &[
    "der", "die", "des", "eines", "ein", "sagte", "fragte", "so", "bei", "aus", "in", "nach",
    "ohne", "gegen", "genommen", "kam", "und", "im", "eine", "hat", "zu",
];
const PUNCT: &[&str] = &[",", ".", "(", "\"", "!"];

/// A random text of `len` tokens drawn from name-heavy German vocabulary.
pub fn random_text<R: Rng>(rng: &mut R, len: usize) -> String {
    (0..len)
        .map(|_| {
            let pool = match rng.gen_range(0..10) {
                0..=3 => CAPS,
                4..=8 => LOWER,
                _ => PUNCT,
            };
            *pool.choose(rng).unwrap()
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Splits a random corpus of at most `max_tokens` tokens over 1 to 3
/// documents.
pub fn random_docs<R: Rng>(rng: &mut R, max_tokens: usize) -> Vec<(String, String)> {
    let docs = rng.gen_range(1..=3);
    let total = rng.gen_range(0..=max_tokens);
    let mut out = Vec::new();
    let mut left = total;
    for d in 0..docs {
        let n = if d + 1 == docs {
            left
        } else {
            rng.gen_range(0..=left)
        };
        left -= n;
        out.push((format!("d{d}"), random_text(rng, n)));
    }
    out
}

/// Re-runs every pass from scratch each iteration: fresh indexes, fresh
/// hypotheses, every hypothesis evaluated. No state besides the lexicons
/// survives an iteration.
pub fn brute_force(
    corpus: &Corpus,
    mc: McLexicon,
    resources: &Resources,
    config: &PipelineConfig,
) -> Lexicons {
    let mut lex = Lexicons::with_mc(mc);
    {
        let analysis = Analysis::new(corpus, &lex.mc, resources, Execution::Sequential);
        definite_pn_pass(corpus, &mut lex, &analysis, resources, config);
    }
    for _ in 0..config.max_iterations.max(1) {
        let batch = {
            let analysis = Analysis::new(corpus, &lex.mc, resources, Execution::Sequential);
            let scan = Scan::new(&analysis, &lex, resources, config);
            let mut batch = Batch::default();
            batch.append(scan_mcpot(corpus, &scan));
            batch.append(scan_place_names(corpus, &scan));
            batch.append(scan_apposition(corpus, &scan));
            for h in generate_hypotheses(corpus, &scan) {
                if h.status != Status::Pending {
                    continue;
                }
                let d = evaluate_hypothesis(&h, &scan);
                if let Some(name) = d.new_pn {
                    batch
                        .names
                        .push(Proposal::new(name, PnKind::Unknown, "oracle", &h.doc_id));
                }
                for ctx in d.new_mcpots {
                    batch.contexts.push(Proposal::new(
                        ctx,
                        pntag::lexicon::McCategory::AppositionNoun,
                        "oracle",
                        &h.doc_id,
                    ));
                }
            }
            batch
        };
        let (pn_new, _) = batch.apply(&mut lex, &resources.stoplist);
        if pn_new == 0 {
            break;
        }
    }
    lex
}
