//! Command-line front end: equality checking, normal forms, conversions,
//! g-base multiplication, SVG rendering, oracle campaigns and benchmarks.

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use gbase::bench::{bench_codec, bench_multiply, bench_wordproblem, BenchConfig};
use gbase::braid::{
    multiply, process_word_geometric_with, process_word_syntactic_with, words_equal_with,
    BraidWord, Pipeline, ProcessOptions,
};
use gbase::free_words::FGWord;
use gbase::oracle::artin_oracle;
use gbase::path_codec::{path_to_syntactic, syntactic_to_path, GBase, PathList};
use gbase::svg::{render_gbase_svg, render_path_svg};
use gbase::workload::{random_campaign_word, rng_from_seed};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gbase",
    version,
    about = "Braid word problem engine over loop coordinates in a punctured disk"
)]
struct Cli {
    /// Strand count n (punctures of the disk).
    #[arg(long, global = true)]
    strands: Option<usize>,

    /// Seed for randomized campaigns and benchmark workloads.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Presentation carrying the computation.
    #[arg(long, global = true, value_enum, default_value_t = PipelineArg::Syn)]
    pipeline: PipelineArg,

    /// Cancel adjacent generator/inverse pairs of braid words up front.
    #[arg(long, global = true, value_enum, default_value_t = Toggle::On)]
    pre_cancel: Toggle,

    /// Output format; each subcommand supports one (text, svg for render,
    /// csv for bench) and anything else is a usage error.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PipelineArg {
    Syn,
    Geo,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Svg,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// Link sequence in, free-group word out.
    PathToWord,
    /// Free-group word in, link sequence out.
    WordToPath,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two braid words are the same braid.
    /// Exits 0 on equal, 1 on not-equal, 2 on usage errors.
    Eq { word1: String, word2: String },

    /// Print the normal form of a braid word: the n reduced g-base
    /// element words, one line each.
    Normal { word: String },

    /// Convert between the path and word presentations of one g-base
    /// element.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        payload: String,
    },

    /// Multiply two serialized g-bases.
    Multiply { left: String, right: String },

    /// Render a path or a serialized g-base as SVG.
    Render {
        payload: String,
        /// Output file; stdout when omitted.
        #[arg(short = 'o', long)]
        output: Option<std::path::PathBuf>,
    },

    /// Differential campaign: the braid-move pipeline against the
    /// substitution oracle on seeded random words.
    OracleCheck {
        /// Words to check.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Maximum braid word length.
        #[arg(long, default_value_t = 40)]
        max_len: usize,
    },

    /// Measure an operation family and emit CSV.
    Bench {
        #[command(subcommand)]
        target: BenchTarget,
    },
}

#[derive(Subcommand)]
enum BenchTarget {
    /// Both codec directions across word lengths.
    Codec {
        #[arg(long, value_delimiter = ',', default_values_t = vec![625, 1250, 2500, 5000, 10000])]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: u32,
    },
    /// Multiplication across square grids of g-base sizes.
    Multiply {
        #[arg(long, value_delimiter = ',', default_values_t = vec![125, 250, 500, 1000, 2000])]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: u32,
    },
    /// Geometric against syntactic processing of the same random words.
    WordProblem {
        #[arg(long, value_delimiter = ',', default_values_t = vec![0, 5, 10, 20, 40])]
        lengths: Vec<usize>,
        /// Words per length.
        #[arg(long, default_value_t = 8)]
        words: usize,
        #[arg(long, default_value_t = 5)]
        reps: u32,
        /// Run the correctness columns on several threads.
        #[arg(long)]
        parallel: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let opts = ProcessOptions { pre_cancel: cli.pre_cancel == Toggle::On };
    let pipeline = match cli.pipeline {
        PipelineArg::Syn => Pipeline::Syntactic,
        PipelineArg::Geo => Pipeline::Geometric,
    };
    match &cli.command {
        Command::Eq { word1, word2 } => {
            expect_format(&cli, FormatArg::Text)?;
            let n = need_strands(&cli)?;
            let w1 = BraidWord::parse(n, word1)?;
            let w2 = BraidWord::parse(n, word2)?;
            if words_equal_with(&w1, &w2, opts, pipeline)? {
                println!("equal");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not-equal");
                Ok(ExitCode::from(1))
            }
        }
        Command::Normal { word } => {
            expect_format(&cli, FormatArg::Text)?;
            let n = need_strands(&cli)?;
            let w = BraidWord::parse(n, word)?;
            for line in normal_form_lines(&w, opts, pipeline)? {
                println!("{line}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { direction, payload } => {
            expect_format(&cli, FormatArg::Text)?;
            let n = need_strands(&cli)?;
            match direction {
                Direction::PathToWord => {
                    let path = PathList::parse(n, payload)?;
                    println!("{}", path_to_syntactic(&path)?);
                }
                Direction::WordToPath => {
                    let word = FGWord::parse(n, payload)?;
                    println!("{}", syntactic_to_path(&word)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Multiply { left, right } => {
            expect_format(&cli, FormatArg::Text)?;
            let n = need_strands(&cli)?;
            let l = GBase::parse(n, left)?;
            let r = GBase::parse(n, right)?;
            println!("{}", multiply(&l, &r)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { payload, output } => {
            expect_format(&cli, FormatArg::Svg)?;
            let n = need_strands(&cli)?;
            if payload.trim().is_empty() {
                bail!("empty render payload");
            }
            // A serialized g-base ends with the closing base link; anything
            // else is treated as a single path.
            let svg = match GBase::parse(n, payload) {
                Ok(gbase) => render_gbase_svg(&gbase),
                Err(_) => render_path_svg(&PathList::parse(n, payload)?)?,
            };
            match output {
                Some(file) => std::fs::write(file, svg)
                    .with_context(|| format!("writing {}", file.display()))?,
                None => print!("{svg}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleCheck { count, max_len } => {
            expect_format(&cli, FormatArg::Text)?;
            let max_n = cli.strands.unwrap_or(6).max(2);
            run_oracle_check(*count, max_n, *max_len, cli.seed)
        }
        Command::Bench { target } => {
            expect_format(&cli, FormatArg::Csv)?;
            let report = match target {
                BenchTarget::Codec { lengths, reps } => {
                    let cfg = BenchConfig { seed: cli.seed, reps: *reps, parallel_checks: false };
                    bench_codec(cli.strands.unwrap_or(8), lengths, &cfg)
                }
                BenchTarget::Multiply { lengths, reps } => {
                    let cfg = BenchConfig { seed: cli.seed, reps: *reps, parallel_checks: false };
                    let pairs: Vec<(usize, usize)> = lengths.iter().map(|&l| (l, l)).collect();
                    bench_multiply(cli.strands.unwrap_or(4), &pairs, &cfg)
                }
                BenchTarget::WordProblem { lengths, words, reps, parallel } => {
                    let cfg =
                        BenchConfig { seed: cli.seed, reps: *reps, parallel_checks: *parallel };
                    bench_wordproblem(cli.strands.unwrap_or(4), lengths, *words, &cfg)
                }
            };
            print!("{}", report.to_csv());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn need_strands(cli: &Cli) -> anyhow::Result<usize> {
    let n = cli.strands.context("--strands is required for this command")?;
    if n == 0 {
        bail!("--strands must be at least 1");
    }
    Ok(n)
}

fn expect_format(cli: &Cli, supported: FormatArg) -> anyhow::Result<()> {
    if let Some(requested) = cli.format {
        if requested != supported {
            bail!(
                "this subcommand only produces {} output",
                match supported {
                    FormatArg::Text => "text",
                    FormatArg::Svg => "svg",
                    FormatArg::Csv => "csv",
                }
            );
        }
    }
    Ok(())
}

fn normal_form_lines(
    word: &BraidWord,
    opts: ProcessOptions,
    pipeline: Pipeline,
) -> anyhow::Result<Vec<String>> {
    Ok(match pipeline {
        Pipeline::Syntactic => process_word_syntactic_with(word, opts)
            .elements()
            .iter()
            .map(|w| w.to_string())
            .collect(),
        Pipeline::Geometric => {
            let gbase = process_word_geometric_with(word, opts);
            let mut lines = Vec::with_capacity(gbase.n());
            for path in gbase.paths() {
                lines.push(path_to_syntactic(path)?.to_string());
            }
            lines
        }
    })
}

fn run_oracle_check(
    count: usize,
    max_n: usize,
    max_len: usize,
    seed: u64,
) -> anyhow::Result<ExitCode> {
    let mut rng = rng_from_seed(seed);
    println!("oracle-check: {count} words, strands 2..={max_n}, length <= {max_len}, seed {seed}");
    for i in 0..count {
        let word = random_campaign_word(&mut rng, max_n, max_len);
        let via_moves = process_word_syntactic_with(&word, ProcessOptions { pre_cancel: false });
        let via_oracle = artin_oracle(&word);
        if via_moves.elements() != via_oracle {
            println!("FAIL at word {i} of the campaign");
            println!("counterexample ({} strands): \"{word}\"", word.n());
            println!("braid moves gave:\n{via_moves}");
            println!(
                "oracle gave:\n{}",
                via_oracle.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("\n")
            );
            return Ok(ExitCode::from(1));
        }
    }
    println!("PASS: all {count} words agree");
    Ok(ExitCode::SUCCESS)
}
