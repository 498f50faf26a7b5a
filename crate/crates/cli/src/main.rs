mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Word-representability of graphs, with split-graph structure.
///
/// Graphs are read and written in graph6, one per line. Orientations are
/// written as `<graph6> <bitstring>`, bit `i` being 0 when the `i`-th edge
/// in lexicographic order points from its lower to its higher label.
#[derive(Parser, Debug)]
#[command(name = "wordrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide word-representability for each input graph.
    Classify(ClassifyArgs),
    /// Enumerate all graphs on n vertices and list the non-representable ones.
    Census(CensusArgs),
    /// Print a named graph or a member of a family.
    Generate(GenerateArgs),
    /// Find, list or count semi-transitive orientations, or check a given one.
    Orient(OrientArgs),
    /// Words and the graphs they represent.
    #[command(subcommand)]
    Word(WordCommand),
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Input files; standard input when none are given.
    files: Vec<PathBuf>,
    /// Cross-check every verdict against the orientation search.
    #[arg(long)]
    verify: bool,
    /// Attach a semi-transitive orientation to representable verdicts.
    #[arg(long)]
    witness: bool,
    /// One JSON object per line.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    All,
    Split,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    n: usize,
    #[arg(long, value_enum, default_value_t = Filter::All)]
    filter: Filter,
    /// Only count connected graphs.
    #[arg(long)]
    connected: bool,
    /// Exit with status 2 unless exactly this many graphs are non-representable.
    #[arg(long)]
    expected: Option<usize>,
    /// Cross-check every verdict against the orientation search.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// Family tag, e.g. `T1`, `K_TRIANGLE`, or `K_L_K(5,3)`.
    tag: String,
    /// Numeric family parameters.
    params: Vec<usize>,
    /// Print `<graph6> <bitstring>` for a semi-transitive orientation.
    #[arg(long)]
    orientation: bool,
    /// Print the orientation in DOT instead.
    #[arg(long)]
    dot: bool,
}

#[derive(Args, Debug)]
pub struct OrientArgs {
    /// Input files; standard input when none are given.
    files: Vec<PathBuf>,
    /// Every semi-transitive orientation instead of the first.
    #[arg(long, conflicts_with = "count")]
    all: bool,
    /// Only the number of semi-transitive orientations.
    #[arg(long)]
    count: bool,
    /// Fix the arc `u>v`; may be repeated.
    #[arg(long = "fix", value_name = "U>V")]
    fix: Vec<String>,
    /// Orient the split clique from lower to higher labels.
    #[arg(long)]
    fix_clique: bool,
    /// Report the A/B/C type of every independent vertex (split inputs).
    #[arg(long)]
    classify_types: bool,
    /// DOT output for orientations.
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand, Debug)]
enum WordCommand {
    /// Check whether a word represents a graph.
    Check {
        word: String,
        graph6: String,
        /// Letters start at 1.
        #[arg(long)]
        one_based: bool,
    },
    /// Print the graph represented by a word, on letters 0..=max.
    Graph {
        word: String,
        /// Letters start at 1.
        #[arg(long)]
        one_based: bool,
    },
    /// Search for a uniform representant with at most `max_k` copies per letter.
    Find {
        graph6: String,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
}

/// Exit status of a run.
#[derive(Debug)]
pub enum Failure {
    /// Bad usage or unparseable input.
    Input(String),
    /// A requested expectation did not hold.
    Mismatch(String),
    /// A fast path disagreed with the orientation search.
    Disagreement(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Mismatch(_) => 2,
            Failure::Disagreement(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Classify(a) => commands::classify(&a),
        Command::Census(a) => commands::census(&a),
        Command::Generate(a) => commands::generate(&a),
        Command::Orient(a) => commands::orient(&a),
        Command::Word(WordCommand::Check { word, graph6, one_based }) => {
            commands::word_check(&word, &graph6, one_based)
        }
        Command::Word(WordCommand::Graph { word, one_based }) => commands::word_graph(&word, one_based),
        Command::Word(WordCommand::Find { graph6, max_k }) => commands::word_find(&graph6, max_k),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Input(m) | Failure::Mismatch(m) | Failure::Disagreement(m)) = &f;
            eprintln!("wordrep: {m}");
            ExitCode::from(f.code())
        }
    }
}
