//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::fs;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use pntag::corpus::tokenize;
use pntag::eval::{recognition_rate, report_unresolved, EvalCounts};
use pntag::exec::Execution;
use pntag::lexicon::McLexicon;
use pntag::pipeline::{
    render_tagged, run_pipeline, tag_corpus, Lexicons, PipelineConfig, PipelineRun, Resources,
    Rule, Status,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(docs: &[(String, String)], mc: McLexicon, config: &PipelineConfig) -> PipelineRun {
    let corpus = build(docs, &mc);
    run_pipeline(
        &corpus,
        Lexicons::with_mc(mc),
        &Resources::default(),
        config,
    )
}

fn one_doc(id: &str, text: &str) -> Vec<(String, String)> {
    vec![(id.to_string(), text.to_string())]
}

fn sample_fixture() -> Check {
    let golden = fs::read_to_string(fixture_dir().join("sample_pn_golden.tsv")).unwrap();
    let start = Instant::now();
    let r = run(&sample_docs(), sample_mc(), &PipelineConfig::default());
    let elapsed = start.elapsed();
    let got = r.lexicons.pn.save();
    ensure(got == golden, || {
        format!("lexicon differs from golden file:\n{got}")
    })?;
    for absent in ["Anlaß", "Kauf", "Erwägungen"] {
        ensure(!r.lexicons.pn.contains(absent), || {
            format!("{absent} accepted")
        })?;
    }
    ensure(r.stats.final_pn_new() == Some(0), || {
        "fixpoint not reached".into()
    })?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{} names, {elapsed:?}", r.lexicons.pn.len()))
}

fn distributional_false_positive() -> Check {
    let docs = one_doc(
        "1",
        "Er handelte ohne Rücksicht. Sie kam aus Rücksicht zurück.",
    );
    let rule_for = |min_evidence| {
        let config = PipelineConfig {
            min_evidence,
            ..sequential()
        };
        let r = run(&docs, McLexicon::seed(), &config);
        let h = r
            .hypotheses
            .iter()
            .find(|h| h.left == "ohne" && h.right == "Rücksicht")
            .cloned();
        (
            r.lexicons.pn.contains("Rücksicht"),
            h.map(|h| (h.status, h.rule_fired)),
        )
    };
    let (accepted, h) = rule_for(2);
    ensure(
        accepted && h == Some((Status::Accepted, Some(Rule::Distributional))),
        || format!("min_evidence 2: accepted={accepted}, hypothesis={h:?}"),
    )?;
    let (accepted, h) = rule_for(3);
    ensure(!accepted, || format!("min_evidence 3 still accepts: {h:?}"))?;
    Ok("accepted by rule j at 2, suppressed at 3".into())
}

fn recognition_rate_value() -> Check {
    let rate = recognition_rate(&EvalCounts::new(1300, 461, 30)).map_err(|e| e.to_string())?;
    ensure((rate - 0.6454).abs() <= 0.0005, || format!("rate {rate}"))?;
    Ok(format!("{rate:.4}"))
}

fn context_table() -> Check {
    let text = "Die Meldung kam bei ADN an. Die Nachrichtenagentur ADN schwieg. \
                Er kam nach Angaben der Polizei. Er machte am Donnerstag Angaben dazu. \
                Er prüfte die Angaben. Er kam aus Belgien. Er lebt in Belgien. \
                Der FDP-Politker Baum widersprach. Der FDP-Abgeordnete Baum schwieg.";
    let r = run(&one_doc("1", text), McLexicon::seed(), &sequential());
    let expected: [(&str, &[&str], usize); 4] = [
        ("ADN", &["bei", "Nachrichtenagentur"], 0),
        ("Angaben", &["nach", "Donnerstag"], 1),
        ("Belgien", &["aus", "in"], 0),
        ("Baum", &["FDP-Politker", "FDP-Abgeordnete"], 0),
    ];
    for (word, preceding, articles) in expected {
        let got = (
            r.cap_index.preceding_contexts(word),
            r.cap_index.article_count(word),
        );
        ensure(got.0 == preceding && got.1 == articles, || {
            format!("{word}: got {got:?}, want ({preceding:?}, {articles})")
        })?;
    }
    Ok("4 rows match".into())
}

fn unresolved_report() -> Check {
    let docs = one_doc(
        "22",
        "Die Kunstflugstaffel Frecce Tricolori zeigte ihr Programm.",
    );
    let r = run(&docs, McLexicon::seed(), &sequential());
    let h = r
        .hypotheses
        .iter()
        .find(|h| h.left == "Frecce" && h.right == "Tricolori")
        .ok_or("no hypothesis for Frecce Tricolori")?;
    ensure(h.status == Status::Unresolved, || {
        format!("status {:?}", h.status)
    })?;
    ensure(
        !r.lexicons.pn.contains("Frecce") && !r.lexicons.pn.contains("Tricolori"),
        || "accepted as name".into(),
    )?;
    let report = report_unresolved(&r.hypotheses);
    ensure(
        report
            .lines()
            .any(|l| l.starts_with("22\tFrecce Tricolori")),
        || format!("report lacks row:\n{report}"),
    )?;
    Ok("row for Frecce Tricolori listed".into())
}

fn names(r: &PipelineRun) -> BTreeSet<String> {
    r.lexicons.pn.surfaces().map(str::to_string).collect()
}

fn outputs(docs: &[(String, String)], config: &PipelineConfig) -> String {
    let mc = McLexicon::seed();
    let corpus = build(docs, &mc);
    let r = run_pipeline(
        &corpus,
        Lexicons::with_mc(mc),
        &Resources::default(),
        config,
    );
    let tagged = render_tagged(&tag_corpus(&corpus, &r.lexicons.pn));
    [
        tagged,
        r.lexicons.pn.save(),
        r.lexicons.mcpot.save(),
        r.stats.to_tsv(),
        report_unresolved(&r.hypotheses),
    ]
    .join("\u{0}")
}

fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let resources = Resources::default();
    let config = sequential();
    let mut max_iterations = 0;
    for n in 0..1000 {
        let docs = random_docs(&mut rng, 100);
        let mc = McLexicon::seed();
        let corpus = build(&docs, &mc);
        let full = run_pipeline(&corpus, Lexicons::with_mc(mc.clone()), &resources, &config);
        // (a) termination
        ensure(
            full.stats.final_pn_new() == Some(0) && !full.stats.cap_hit,
            || format!("corpus {n}: no fixpoint within {}", config.max_iterations),
        )?;
        max_iterations = max_iterations.max(full.stats.iterations.len());
        // (b) monotone growth, checked by re-running with every smaller cap
        let mut previous = BTreeSet::new();
        for k in 1..=full.stats.iterations.len() {
            let capped = PipelineConfig {
                max_iterations: k,
                ..sequential()
            };
            let r = run_pipeline(&corpus, Lexicons::with_mc(mc.clone()), &resources, &capped);
            let current = names(&r);
            ensure(previous.is_subset(&current), || {
                format!("corpus {n}: names lost at iteration {k}")
            })?;
            previous = current;
        }
        // (c) byte-identical reruns, sequential and parallel
        let first = outputs(&docs, &config);
        ensure(first == outputs(&docs, &config), || {
            format!("corpus {n}: rerun differs")
        })?;
        ensure(first == outputs(&docs, &PipelineConfig::default()), || {
            format!("corpus {n}: parallel run differs")
        })?;
        // (d) oracle
        let oracle = brute_force(&corpus, mc, &resources, &config);
        ensure(oracle.pn.save() == full.lexicons.pn.save(), || {
            format!("corpus {n}: oracle PN differs")
        })?;
        ensure(oracle.mcpot.save() == full.lexicons.mcpot.save(), || {
            format!("corpus {n}: oracle MCpot differs")
        })?;
    }
    for n in 0..200 {
        let docs = random_docs(&mut rng, 200);
        let mc = McLexicon::seed();
        let corpus = build(&docs, &mc);
        let full = run_pipeline(&corpus, Lexicons::with_mc(mc.clone()), &resources, &config);
        let oracle = brute_force(&corpus, mc, &resources, &config);
        ensure(oracle.pn.save() == full.lexicons.pn.save(), || {
            format!("large corpus {n}: oracle differs")
        })?;
    }
    // (e) tokenizer round trip
    let abbreviations = McLexicon::seed().abbreviations();
    let pieces = [
        "Prof.",
        "Dr.",
        "Wörner",
        "sagte",
        "3.5",
        "1,5",
        "F-18",
        "SPD--Abgeordnete",
        "--",
        "-",
        ".",
        ",",
        "(",
        ")",
        "\"",
        "„",
        "“",
        ":",
        ";",
        "?",
        "!",
        "'",
        "z.",
        "300",
        "Baden-Baden",
        "x",
        "Mainzer.",
        "ab,",
        "  ",
        "\t",
        "\n",
    ];
    for n in 0..1000 {
        let len = rng.gen_range(0..30);
        let raw: String = (0..len)
            .map(|_| {
                let p = *pieces.choose(&mut rng).unwrap();
                if rng.gen_bool(0.7) {
                    format!("{p} ")
                } else {
                    p.to_string()
                }
            })
            .collect();
        let once: Vec<String> = tokenize(&raw, &abbreviations)
            .into_iter()
            .map(|t| t.surface)
            .collect();
        let twice: Vec<String> = tokenize(&once.join(" "), &abbreviations)
            .into_iter()
            .map(|t| t.surface)
            .collect();
        ensure(once == twice, || {
            format!("input {n} {raw:?}: {once:?} vs {twice:?}")
        })?;
    }
    Ok(format!(
        "1000+200 corpora, longest run {max_iterations} iterations"
    ))
}

fn performance() -> Check {
    let docs = synth::corpus(&mut ChaCha8Rng::seed_from_u64(50_000), 50_000);
    let words: usize = docs.iter().map(|(_, t)| t.split_whitespace().count()).sum();
    let start = Instant::now();
    let mc = McLexicon::seed();
    let config = PipelineConfig {
        execution: Execution::Sequential,
        ..PipelineConfig::default()
    };
    let corpus = build(&docs, &mc);
    let r = run_pipeline(
        &corpus,
        Lexicons::with_mc(mc),
        &Resources::default(),
        &config,
    );
    let tagged = render_tagged(&tag_corpus(&corpus, &r.lexicons.pn));
    let elapsed = start.elapsed();
    ensure(!tagged.is_empty() && words >= 50_000, || {
        "nothing tagged".into()
    })?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("{words} words took {elapsed:?}")
    })?;
    Ok(format!(
        "{words} words, {} names, {elapsed:?}",
        r.lexicons.pn.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "example-sentence fixture equals golden lexicon",
            sample_fixture,
        ),
        (
            "Rücksicht false positive and min_evidence",
            distributional_false_positive,
        ),
        ("recognition rate 1300/461/30", recognition_rate_value),
        ("capitalized-word context table", context_table),
        ("unresolved report row for doc 22", unresolved_report),
        ("fixpoint property suite", properties),
        ("50,000-word corpus tagged in under 10 s", performance),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {}. {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
