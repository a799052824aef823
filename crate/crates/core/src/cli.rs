//! Command-line surface of the `vcpc` binary.
//!
//! Every command reads and writes JSONL. Exit codes: 0 success, 2 bad
//! input, 3 incomplete result (poset with unknown pairs under
//! `--strict-poset`, or an aborted `subtree` search), 4 empty query result.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::canonical::full_ld_array;
use crate::corpus::{
    most_representative, partition_by_isomorphism, partition_by_key, subtree_poset_with, CorpusPoset,
    CorpusQueryError, IsoClass, OraclePairTest, PosetOptions, PosetStats, VcpcPairTest,
};
use crate::format::{write_tree, ColorTable, CorpusError, CorpusReader, CorpusTree};
use crate::matcher::{match_subarborescence, undirected_subtree, MatchError, MatchOptions, DEFAULT_CANDIDATE_CAP};
use crate::oracle::{brute_canonical, random_corpus, GenParams, DEFAULT_SEARCH_BUDGET, GENERATOR_ID};
use crate::tree::Color;
use crate::vcpc::{decode, decode_strict, encode_tree, CodecError, Vcpc};

#[derive(Debug, Parser)]
#[command(name = "vcpc", version, about = "Canonical codes and subtree queries for vertex-colored trees")]
pub struct Cli {
    /// JSON object mapping color names to integers, for corpora with named colors.
    #[arg(long, global = true)]
    pub color_table: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file; stdin when omitted or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PosetArgs {
    /// Maximum candidate index sets examined per pair.
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    /// Worker threads for pair tests.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Largest tree order.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
    /// Number of trees.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Number of colors.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub c: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl GenArgs {
    fn params(&self) -> Result<GenParams, CliError> {
        GenParams::new(self.m as usize, self.n as usize, self.c, self.seed).map_err(|e| CliError::Input(e.to_string()))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full LD_A descriptor of every tree.
    Canon(Input),
    /// Canonical code of every tree.
    Encode(Input),
    /// Trees (canonically labeled) from a stream of codes.
    Decode {
        #[command(flatten)]
        input: Input,
        /// Reject codes that are not the canonical code of their tree.
        #[arg(long)]
        strict: bool,
    },
    /// Isomorphism classes of a corpus.
    IsoClasses(Input),
    /// Containment order between isomorphism classes.
    Poset {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        poset: PosetArgs,
        /// Exit with status 3 if any pair was aborted.
        #[arg(long)]
        strict_poset: bool,
    },
    /// Class contained in the most corpus trees.
    MostCommon {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,
        #[command(flatten)]
        poset: PosetArgs,
    },
    /// Seeded random corpus.
    Gen(GenArgs),
    /// Times the code-based pipeline against the backtracking references.
    Bench {
        #[command(flatten)]
        gen: GenArgs,
        #[command(flatten)]
        poset: PosetArgs,
    },
    /// Is the first tree of A a sub-arborescence of the first tree of B?
    Subtree {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CANDIDATE_CAP, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
    },
    /// Same question for the underlying undirected trees.
    SubtreeUndirected { a: PathBuf, b: PathBuf },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("line {line}: {source}")]
    Code {
        line: usize,
        #[source]
        source: CodecError,
    },
    #[error("{count} pairs could not be decided within the candidate cap")]
    IncompletePoset { count: usize },
    #[error(transparent)]
    Search(#[from] MatchError),
    #[error(transparent)]
    Query(#[from] CorpusQueryError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::IncompletePoset { .. } | CliError::Search(_) => 3,
            CliError::Query(CorpusQueryError::NoEligibleClass { .. }) => 4,
            _ => 2,
        }
    }
}

/// One line of `encode` output and `decode` input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub id: String,
    pub parents: Vec<Option<usize>>,
    pub colors: Vec<Color>,
    pub n: usize,
}

impl CodeRecord {
    pub fn new(id: String, code: &Vcpc) -> Self {
        CodeRecord {
            id,
            parents: code.parents().to_vec(),
            colors: code.colors().to_vec(),
            n: code.len(),
        }
    }

    pub fn code(&self) -> Result<Vcpc, CodecError> {
        if self.n != self.parents.len() {
            return Err(CodecError::DeclaredLength {
                declared: self.n,
                actual: self.parents.len(),
            });
        }
        Vcpc::new(self.parents.clone(), self.colors.clone())
    }
}

fn open<'s>(path: Option<&Path>, stdin: &'s mut dyn BufRead) -> io::Result<Box<dyn BufRead + 's>> {
    match path {
        Some(p) if p != Path::new("-") => Ok(Box::new(BufReader::new(File::open(p)?))),
        _ => Ok(Box::new(stdin)),
    }
}

fn load_table(path: Option<&Path>) -> Result<Option<ColorTable>, CliError> {
    path.map(|p| {
        let file = File::open(p)?;
        ColorTable::from_reader(file).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))
    })
    .transpose()
}

fn read_corpus(reader: impl BufRead, table: Option<&ColorTable>) -> Result<Vec<CorpusTree>, CliError> {
    Ok(CorpusReader::with_color_table(reader, table).collect::<Result<Vec<_>, _>>()?)
}

fn first_tree(path: &Path, table: Option<&ColorTable>) -> Result<CorpusTree, CliError> {
    let reader = BufReader::new(File::open(path)?);
    CorpusReader::with_color_table(reader, table)
        .next()
        .ok_or_else(|| CliError::Input(format!("{}: no tree", path.display())))?
        .map_err(CliError::from)
}

fn line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn classes_of(corpus: &[CorpusTree]) -> Vec<IsoClass> {
    partition_by_isomorphism(corpus.iter().map(|t| (t.id.clone(), &t.tree)))
}

fn poset_of(corpus: &[CorpusTree], args: &PosetArgs) -> Result<CorpusPoset, CliError> {
    let classes = classes_of(corpus);
    let test = VcpcPairTest::new(&classes, MatchOptions { cap: args.cap });
    let options = PosetOptions {
        workers: args.workers as usize,
        infer: true,
    };
    Ok(subtree_poset_with(classes, &test, options)?)
}

/// Runs one parsed command against the given streams.
pub fn run(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), CliError> {
    let table = load_table(cli.color_table.as_deref())?;
    let table = table.as_ref();
    match &cli.command {
        Command::Canon(input) => {
            for tree in CorpusReader::with_color_table(open(input.input.as_deref(), stdin)?, table) {
                let tree = tree?;
                line(out, &json!({"id": tree.id, "full_ld_array": full_ld_array(&tree.tree)}))?;
            }
        }
        Command::Encode(input) => {
            for tree in CorpusReader::with_color_table(open(input.input.as_deref(), stdin)?, table) {
                let tree = tree?;
                line(out, &CodeRecord::new(tree.id, &encode_tree(&tree.tree)))?;
            }
        }
        Command::Decode { input, strict } => {
            let reader = open(input.input.as_deref(), stdin)?;
            for (index, text) in reader.lines().enumerate() {
                let text = text?;
                if text.trim().is_empty() {
                    continue;
                }
                let lineno = index + 1;
                let record: CodeRecord = serde_json::from_str(&text).map_err(|e| CorpusError::Parse {
                    line: lineno,
                    message: e.to_string(),
                })?;
                let at = |source| CliError::Code { line: lineno, source };
                let code = record.code().map_err(at)?;
                let tree = if *strict { decode_strict(&code) } else { decode(&code) }.map_err(at)?;
                write_tree(&mut *out, &record.id, &tree)?;
            }
        }
        Command::IsoClasses(input) => {
            let corpus = read_corpus(open(input.input.as_deref(), stdin)?, table)?;
            for class in classes_of(&corpus) {
                line(
                    out,
                    &json!({
                        "class_id": class.class_id,
                        "code": class.representative,
                        "members": class.member_ids,
                        "size": class.size,
                    }),
                )?;
            }
        }
        Command::Poset {
            input,
            poset,
            strict_poset,
        } => {
            let corpus = read_corpus(open(input.input.as_deref(), stdin)?, table)?;
            let poset = poset_of(&corpus, poset)?;
            for (&(a, b), edge) in &poset.relation {
                line(
                    out,
                    &json!({"below": a, "above": b, "witness": edge.witness, "inferred": edge.inferred}),
                )?;
            }
            line(out, &json!({"unknown_pairs": poset.unknown, "stats": poset.stats}))?;
            if *strict_poset && !poset.unknown.is_empty() {
                return Err(CliError::IncompletePoset {
                    count: poset.unknown.len(),
                });
            }
        }
        Command::MostCommon {
            input,
            max_order,
            poset,
        } => {
            let corpus = read_corpus(open(input.input.as_deref(), stdin)?, table)?;
            let poset = poset_of(&corpus, poset)?;
            let (class, count) = most_representative(&poset, *max_order as usize)?;
            let class = &poset.classes[class];
            line(
                out,
                &json!({
                    "class_id": class.class_id,
                    "code": class.representative,
                    "order": class.order(),
                    "count": count,
                    "corpus_size": corpus.len(),
                    "unknown_pairs": poset.unknown.len(),
                }),
            )?;
        }
        Command::Gen(gen) => {
            let params = gen.params()?;
            for (i, tree) in random_corpus(&params).iter().enumerate() {
                write_tree(&mut *out, &params.tree_id(i), tree)?;
            }
        }
        Command::Bench { gen, poset } => {
            let report = bench(&gen.params()?, poset.cap, poset.workers as usize)?;
            serde_json::to_writer_pretty(&mut *out, &report).map_err(io::Error::from)?;
            out.write_all(b"\n")?;
        }
        Command::Subtree { a, b, cap } => {
            let (a, b) = (first_tree(a, table)?, first_tree(b, table)?);
            let outcome = match_subarborescence(&encode_tree(&a.tree), &encode_tree(&b.tree), &MatchOptions { cap: *cap })?;
            line(
                out,
                &json!({
                    "is_subtree": outcome.witness.is_some(),
                    "witness": outcome.witness,
                    "candidates_examined": outcome.candidates_examined,
                }),
            )?;
        }
        Command::SubtreeUndirected { a, b } => {
            let (a, b) = (first_tree(a, table)?, first_tree(b, table)?);
            line(out, &json!({"is_subtree": undirected_subtree(&a.tree, &b.tree)}))?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Timings and counts of one pipeline in a [`BenchReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathReport {
    pub partition_ms: f64,
    pub poset_ms: f64,
    pub total_ms: f64,
    pub classes: usize,
    pub stats: PosetStats,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub generator: String,
    pub m: usize,
    pub n: usize,
    pub c: u32,
    pub seed: u64,
    pub workers: usize,
    pub vcpc: PathReport,
    pub oracle: PathReport,
    pub partitions_equal: bool,
    pub verdicts_equal: bool,
    /// Oracle total over code-based total; informational.
    pub time_ratio: f64,
    /// Class-level verdicts of the code-based path, `true` where a ≤ b.
    #[serde(skip)]
    pub vcpc_matrix: Vec<Vec<Option<bool>>>,
    #[serde(skip)]
    pub oracle_matrix: Vec<Vec<Option<bool>>>,
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Runs both pipelines on one seeded corpus. The code-based path partitions
/// by canonical code and builds the poset with inference; the reference path
/// partitions by brute-force keys and tests every candidate pair with the
/// ordered backtracking search.
pub fn bench(params: &GenParams, cap: u64, workers: usize) -> Result<BenchReport, CliError> {
    let corpus = random_corpus(params);
    let items = || corpus.iter().enumerate().map(|(i, t)| (params.tree_id(i), t));

    let start = Instant::now();
    let classes = partition_by_isomorphism(items());
    let partition_ms = ms(start);
    let start = Instant::now();
    let test = VcpcPairTest::new(&classes, MatchOptions { cap });
    let fast = subtree_poset_with(classes, &test, PosetOptions { workers, infer: true })?;
    let vcpc = PathReport {
        partition_ms,
        poset_ms: ms(start),
        total_ms: partition_ms + ms(start),
        classes: fast.classes.len(),
        stats: fast.stats.clone(),
    };

    let start = Instant::now();
    let reference_classes = partition_by_key(items(), brute_canonical);
    let partition_ms = ms(start);
    let start = Instant::now();
    let trees = reference_classes.iter().map(|c| corpus[c.members[0]].clone()).collect();
    let test = OraclePairTest::new(trees, true, DEFAULT_SEARCH_BUDGET);
    let slow = subtree_poset_with(reference_classes, &test, PosetOptions { workers, infer: false })?;
    let oracle = PathReport {
        partition_ms,
        poset_ms: ms(start),
        total_ms: partition_ms + ms(start),
        classes: slow.classes.len(),
        stats: slow.stats.clone(),
    };

    let members = |p: &CorpusPoset| p.classes.iter().map(|c| c.members.clone()).collect::<Vec<_>>();
    let partitions_equal = members(&fast) == members(&slow);
    let (vcpc_matrix, oracle_matrix) = (fast.verdict_matrix(), slow.verdict_matrix());
    Ok(BenchReport {
        generator: GENERATOR_ID.to_string(),
        m: params.m,
        n: params.n,
        c: params.c,
        seed: params.seed,
        workers,
        time_ratio: oracle.total_ms / vcpc.total_ms.max(f64::MIN_POSITIVE),
        vcpc,
        oracle,
        partitions_equal,
        verdicts_equal: partitions_equal && vcpc_matrix == oracle_matrix,
        vcpc_matrix,
        oracle_matrix,
    })
}

/// Parses `args`, runs the command on the process streams and returns the
/// exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let stdout = io::stdout();
    let mut stdout = io::BufWriter::new(stdout.lock());
    match run(&cli, &mut stdin, &mut stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = stdout.flush();
            eprintln!("vcpc: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (Result<(), CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("vcpc").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let result = run(&cli, &mut input.as_bytes(), &mut out);
        (result, String::from_utf8(out).unwrap())
    }

    #[test]
    fn canon_single_vertex() {
        let (r, out) = run_str(&["canon"], "{\"id\":\"s\",\"edges\":[],\"colors\":{\"0\":3}}\n");
        r.unwrap();
        assert_eq!(out, "{\"full_ld_array\":[[3],[]],\"id\":\"s\"}\n");
    }

    #[test]
    fn empty_input_is_fine() {
        let (r, out) = run_str(&["encode"], "");
        r.unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn encode_decode_encode() {
        let (r, gen) = run_str(&["gen", "--m", "6", "--n", "20", "--c", "3", "--seed", "4"], "");
        r.unwrap();
        let (r, codes) = run_str(&["encode"], &gen);
        r.unwrap();
        let (r, trees) = run_str(&["decode", "--strict"], &codes);
        r.unwrap();
        let (r, again) = run_str(&["encode"], &trees);
        r.unwrap();
        assert_eq!(codes, again);
    }

    #[test]
    fn misplaced_sentinel_is_an_input_error() {
        let (r, _) = run_str(&["decode"], "{\"id\":\"x\",\"parents\":[null,0],\"colors\":[1,1],\"n\":2}\n");
        assert_eq!(r.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn exit_codes() {
        let corpus = "{\"id\":\"a\",\"edges\":[[0,1]],\"colors\":{\"0\":0,\"1\":0}}\n";
        let (r, _) = run_str(&["most-common", "--max-order", "1"], corpus);
        assert_eq!(r.unwrap_err().exit_code(), 4);
        let (r, _) = run_str(&["canon"], "{\"id\":\"a\"}\n");
        assert_eq!(r.unwrap_err().exit_code(), 2);
        assert_eq!(CliError::IncompletePoset { count: 1 }.exit_code(), 3);
    }

    #[test]
    fn zero_flags_are_rejected() {
        for args in [
            vec!["vcpc", "gen", "--m", "0", "--n", "1", "--c", "1"],
            vec!["vcpc", "poset", "--cap", "0"],
            vec!["vcpc", "poset", "--workers", "0"],
        ] {
            assert!(Cli::try_parse_from(args).is_err());
        }
    }
}
