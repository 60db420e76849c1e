use crate::corpus::Corpus;
use crate::exec::map_ordered;

use super::hypothesis::decision_batch;
use super::{
    evaluate_hypothesis, generate_hypotheses, scan_apposition, scan_mcpot, scan_place_names,
    Analysis, Hypothesis, Lexicons, PipelineConfig, Resources, Rule, Scan, Status,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationStats {
    pub pn_new: usize,
    pub mcpot_new: usize,
    pub hypotheses_evaluated: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FixpointStats {
    pub iterations: Vec<IterationStats>,
    /// The loop stopped at `max_iterations` with names still being found.
    pub cap_hit: bool,
}

impl FixpointStats {
    pub fn final_pn_new(&self) -> Option<usize> {
        self.iterations.last().map(|i| i.pn_new)
    }

    /// `iteration<TAB>pn_new<TAB>mcpot_new<TAB>hypotheses`, one row per
    /// iteration starting at 1.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (n, it) in self.iterations.iter().enumerate() {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                n + 1,
                it.pn_new,
                it.mcpot_new,
                it.hypotheses_evaluated
            ));
        }
        if self.cap_hit {
            out.push_str("# warning: iteration cap reached before pn_new = 0\n");
        }
        out
    }
}

/// Rejections never flip as the lexicons grow, and neither do most
/// acceptances. A genitive-base acceptance can: once the left word becomes a
/// potential context, the earlier context rule accepts the inflected form
/// instead.
fn is_open(h: &Hypothesis) -> bool {
    match h.status {
        Status::Pending | Status::Unresolved => true,
        Status::Accepted => h.rule_fired == Some(Rule::GenitiveBase),
        Status::Rejected => false,
    }
}

/// Repeats harvesting and hypothesis evaluation until an iteration adds no
/// new name or the iteration cap is reached.
///
/// Each iteration scans against the lexicons as they stood at its start and
/// applies all additions afterwards. Hypotheses are generated once; later
/// iterations only revisit the ones whose outcome can still change.
pub fn run_fixpoint(
    corpus: &Corpus,
    lexicons: &mut Lexicons,
    analysis: &Analysis<'_>,
    resources: &Resources,
    config: &PipelineConfig,
) -> (FixpointStats, Vec<Hypothesis>) {
    let max_iterations = config.max_iterations.max(1);
    let mut stats = FixpointStats::default();
    let mut hypotheses: Option<Vec<Hypothesis>> = None;

    for iteration in 1..=max_iterations {
        let (batch, evaluated) = {
            let scan = Scan::new(analysis, lexicons, resources, config);
            let hyps = hypotheses.get_or_insert_with(|| generate_hypotheses(corpus, &scan));

            let mut batch = scan_mcpot(corpus, &scan);
            batch.append(scan_place_names(corpus, &scan));
            batch.append(scan_apposition(corpus, &scan));

            let open: Vec<usize> = (0..hyps.len()).filter(|&i| is_open(&hyps[i])).collect();
            let decisions = {
                let hyps: &[Hypothesis] = hyps;
                map_ordered(config.execution, &open, |&i| {
                    evaluate_hypothesis(&hyps[i], &scan)
                })
            };
            for (&i, decision) in open.iter().zip(&decisions) {
                let h = &mut hyps[i];
                h.status = decision.status();
                h.rule_fired = decision.rule;
                batch.append(decision_batch(h, decision));
            }
            (batch, open.len())
        };

        let (pn_new, mcpot_new) = batch.apply(lexicons, &resources.stoplist);
        stats.iterations.push(IterationStats {
            pn_new,
            mcpot_new,
            hypotheses_evaluated: evaluated,
        });
        if pn_new == 0 {
            break;
        }
        if iteration == max_iterations {
            stats.cap_hit = true;
        }
    }
    (stats, hypotheses.unwrap_or_default())
}
