//! Token-level comparison against gold annotation and the unresolved
//! hypothesis report.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::pipeline::{Hypothesis, Status, Tag};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedLine {
    pub surface: String,
    pub tag: Tag,
    /// 1-based line number in the source file.
    pub line: usize,
}

/// Parses the `surface<TAB>NE|O` format; blank lines separate sentences
/// and are skipped.
pub fn parse_tagged(source: &str) -> Result<Vec<TaggedLine>> {
    let mut out = Vec::new();
    for (idx, raw) in source.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let (surface, tag) = line.split_once('\t').ok_or_else(|| Error::Malformed {
            line: idx + 1,
            message: "expected `surface<TAB>tag`".into(),
        })?;
        let tag = match tag.trim() {
            "NE" => Tag::Ne,
            "O" => Tag::O,
            other => {
                return Err(Error::Malformed {
                    line: idx + 1,
                    message: format!("unknown tag `{other}`"),
                })
            }
        };
        out.push(TaggedLine {
            surface: surface.to_string(),
            tag,
            line: idx + 1,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalCounts {
    pub gold_pn_tokens: usize,
    /// Gold names the system tagged `O`.
    pub missed: usize,
    /// System names that are `O` in gold.
    pub wrong: usize,
    pub system_pn_tokens: usize,
}

impl EvalCounts {
    pub fn new(gold_pn_tokens: usize, missed: usize, wrong: usize) -> Self {
        EvalCounts {
            gold_pn_tokens,
            missed,
            wrong,
            system_pn_tokens: gold_pn_tokens - missed + wrong,
        }
    }
}

pub fn compare_gold(system: &[TaggedLine], gold: &[TaggedLine]) -> Result<EvalCounts> {
    let mut counts = EvalCounts::default();
    for (s, g) in system.iter().zip(gold) {
        if s.surface != g.surface {
            return Err(Error::Misaligned {
                system_line: s.line,
                gold_line: g.line,
                system: s.surface.clone(),
                gold: g.surface.clone(),
            });
        }
        match (s.tag, g.tag) {
            (Tag::O, Tag::Ne) => counts.missed += 1,
            (Tag::Ne, Tag::O) => counts.wrong += 1,
            _ => {}
        }
        counts.gold_pn_tokens += usize::from(g.tag == Tag::Ne);
        counts.system_pn_tokens += usize::from(s.tag == Tag::Ne);
    }
    if system.len() != gold.len() {
        return Err(Error::LengthMismatch {
            system: system.len(),
            gold: gold.len(),
        });
    }
    Ok(counts)
}

/// Token recall: the share of gold name tokens the system recognized.
pub fn recognition_rate(counts: &EvalCounts) -> Result<f64> {
    if counts.gold_pn_tokens == 0 {
        return Err(Error::NoGoldNames);
    }
    Ok((counts.gold_pn_tokens - counts.missed) as f64 / counts.gold_pn_tokens as f64)
}

/// Share of system name tokens that are correct; `None` when the system
/// tagged nothing.
pub fn precision(counts: &EvalCounts) -> Option<f64> {
    (counts.system_pn_tokens > 0)
        .then(|| (counts.system_pn_tokens - counts.wrong) as f64 / counts.system_pn_tokens as f64)
}

/// One line per distinct unresolved (document, left, right), in document
/// order then first occurrence: `doc_id<TAB>left right<TAB>count`.
pub fn report_unresolved(hypotheses: &[Hypothesis]) -> String {
    struct Row<'a> {
        doc_index: usize,
        doc_id: &'a str,
        first: (usize, usize),
        pair: String,
        count: usize,
    }
    let mut rows: Vec<Row<'_>> = Vec::new();
    let mut slot: HashMap<(usize, String), usize> = HashMap::new();
    for h in hypotheses.iter().filter(|h| h.status == Status::Unresolved) {
        let pair = format!("{} {}", h.left, h.right);
        for occ in &h.occurrences {
            let key = (occ.doc_index, pair.clone());
            match slot.get(&key) {
                Some(&i) => rows[i].count += 1,
                None => {
                    slot.insert(key, rows.len());
                    rows.push(Row {
                        doc_index: occ.doc_index,
                        doc_id: &occ.doc_id,
                        first: (occ.sentence_no, occ.position),
                        pair: pair.clone(),
                        count: 1,
                    });
                }
            }
        }
    }
    rows.sort_by_key(|r| (r.doc_index, r.first));
    rows.iter()
        .map(|r| format!("{}\t{}\t{}\n", r.doc_id, r.pair, r.count))
        .collect()
}
