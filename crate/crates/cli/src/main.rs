use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use pntag::corpus::{Corpus, CorpusOptions};
use pntag::eval::{compare_gold, parse_tagged, precision, recognition_rate, report_unresolved};
use pntag::exec::Execution;
use pntag::lexicon::{McLexicon, PnLexicon, StopList, WordLists};
use pntag::morphology::AffixConfig;
use pntag::pipeline::{
    render_tagged, run_pipeline, tag_corpus, Lexicons, PipelineConfig, Resources,
};

#[derive(Parser)]
#[command(
    name = "pntag",
    version,
    about = "Proper-name tagging for German newspaper text"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tag documents and write lexicons, statistics and unresolved pairs.
    Tag(TagArgs),
    /// Compare a tagged file against gold annotation.
    Eval(EvalArgs),
    /// Print the capitalized-word context table of the given documents.
    DumpIndex(DumpIndexArgs),
}

#[derive(Args)]
struct ResourceArgs {
    /// Minimal-context lexicon (TSV). Defaults to the bundled seed.
    #[arg(long)]
    mc_lexicon: Option<PathBuf>,
    /// Affix configuration (INI). Defaults to the bundled lists.
    #[arg(long)]
    affixes: Option<PathBuf>,
    /// Words never accepted as names, one per line. Defaults to the bundled list.
    #[arg(long)]
    stoplist: Option<PathBuf>,
}

#[derive(Args)]
struct TagArgs {
    #[command(flatten)]
    resources: ResourceArgs,
    /// Names known in advance, e.g. a `pn_lexicon.tsv` from an earlier run.
    #[arg(long)]
    pn_lexicon: Option<PathBuf>,
    /// Output directory, created if missing.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
    max_iter: u32,
    /// Distinct preceding contexts required by the distributional rule.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    min_evidence: u32,
    /// Also write the context table to `index.tsv`.
    #[arg(long)]
    dump_index: bool,
    /// Plain-text documents; each file stem becomes the document id.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    gold: PathBuf,
    #[arg(long)]
    system: PathBuf,
}

#[derive(Args)]
struct DumpIndexArgs {
    #[command(flatten)]
    resources: ResourceArgs,
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_or<T>(
    path: Option<&Path>,
    default: impl FnOnce() -> T,
    parse: impl FnOnce(&str) -> pntag::Result<T>,
) -> Result<T> {
    match path {
        None => Ok(default()),
        Some(p) => parse(&read(p)?).with_context(|| format!("malformed {}", p.display())),
    }
}

impl ResourceArgs {
    fn load(&self) -> Result<(McLexicon, Resources)> {
        let mc = load_or(self.mc_lexicon.as_deref(), McLexicon::seed, McLexicon::load)?;
        let affixes = load_or(
            self.affixes.as_deref(),
            AffixConfig::default,
            AffixConfig::load,
        )?;
        let stoplist = load_or(self.stoplist.as_deref(), StopList::bundled, |s| {
            Ok(StopList::load(s))
        })?;
        let resources = Resources {
            stoplist,
            affixes,
            words: WordLists::default(),
        };
        Ok((mc, resources))
    }
}

fn load_corpus(inputs: &[PathBuf], mc: &McLexicon) -> Result<Corpus> {
    let mut docs = Vec::with_capacity(inputs.len());
    for path in inputs {
        let id = path
            .file_stem()
            .with_context(|| format!("{} has no file name", path.display()))?
            .to_string_lossy()
            .into_owned();
        docs.push((id, read(path)?));
    }
    let options = CorpusOptions {
        abbreviations: mc.abbreviations(),
        ..CorpusOptions::default()
    };
    Ok(Corpus::build(docs, &options)?)
}

/// Writes every file through a temporary in the same directory, so a
/// failure never leaves a half-written output behind.
fn write_outputs(dir: &Path, files: &[(&str, String)]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let mut staged = Vec::with_capacity(files.len());
    for (name, contents) in files {
        let mut tmp = tempfile::NamedTempFile::new_in(dir)
            .with_context(|| format!("cannot write to {}", dir.display()))?;
        tmp.write_all(contents.as_bytes())?;
        staged.push((tmp, dir.join(name)));
    }
    for (tmp, target) in staged {
        tmp.persist(&target)
            .with_context(|| format!("cannot write {}", target.display()))?;
    }
    Ok(())
}

fn tag(args: &TagArgs) -> Result<()> {
    let (mc, resources) = args.resources.load()?;
    let mut lexicons = Lexicons::with_mc(mc);
    if let Some(path) = &args.pn_lexicon {
        lexicons.pn = PnLexicon::load(&read(path)?)
            .with_context(|| format!("malformed {}", path.display()))?;
    }
    let corpus = load_corpus(&args.inputs, &lexicons.mc)?;
    let config = PipelineConfig {
        max_iterations: args.max_iter as usize,
        min_evidence: args.min_evidence as usize,
        ..PipelineConfig::default()
    };
    let run = run_pipeline(&corpus, lexicons, &resources, &config);
    if run.stats.cap_hit {
        eprintln!(
            "warning: iteration cap {} reached before the lexicons stabilized",
            args.max_iter
        );
    }

    let mut files = vec![
        (
            "tagged.tsv",
            render_tagged(&tag_corpus(&corpus, &run.lexicons.pn)),
        ),
        ("pn_lexicon.tsv", run.lexicons.pn.save()),
        ("mcpot_lexicon.tsv", run.lexicons.mcpot.save()),
        ("stats.tsv", run.stats.to_tsv()),
        ("unresolved.tsv", report_unresolved(&run.hypotheses)),
    ];
    if args.dump_index {
        files.push(("index.tsv", run.cap_index.to_tsv()));
    }
    write_outputs(&args.out, &files)?;
    eprintln!(
        "{} tokens, {} names, {} iterations",
        corpus.token_count(),
        run.lexicons.pn.len(),
        run.stats.iterations.len()
    );
    Ok(())
}

fn eval(args: &EvalArgs) -> Result<()> {
    let gold = parse_tagged(&read(&args.gold)?)
        .with_context(|| format!("malformed {}", args.gold.display()))?;
    let system = parse_tagged(&read(&args.system)?)
        .with_context(|| format!("malformed {}", args.system.display()))?;
    let counts = compare_gold(&system, &gold).with_context(|| {
        format!(
            "{} does not align with {}",
            args.system.display(),
            args.gold.display()
        )
    })?;
    println!("gold_names\t{}", counts.gold_pn_tokens);
    println!("system_names\t{}", counts.system_pn_tokens);
    println!("missed\t{}", counts.missed);
    println!("wrong\t{}", counts.wrong);
    println!("recall\t{:.4}", recognition_rate(&counts)?);
    match precision(&counts) {
        Some(p) => println!("precision\t{p:.4}"),
        None => println!("precision\tn/a"),
    }
    Ok(())
}

fn dump_index(args: &DumpIndexArgs) -> Result<()> {
    let (mc, resources) = args.resources.load()?;
    let corpus = load_corpus(&args.inputs, &mc)?;
    let analysis = pntag::pipeline::Analysis::new(&corpus, &mc, &resources, Execution::default());
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(analysis.cap_index.to_tsv().as_bytes())?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Tag(args) => tag(args),
        Command::Eval(args) => eval(args),
        Command::DumpIndex(args) => dump_index(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err:#}");
        if matches!(
            err.downcast_ref::<pntag::Error>(),
            Some(pntag::Error::DuplicateDocument(_))
        ) {
            eprintln!("hint: document ids come from file stems and must be unique");
        }
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
