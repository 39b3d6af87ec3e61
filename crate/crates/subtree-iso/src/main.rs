//! Command-line interface: count subtree isomorphism classes, search for
//! extremal values, print the extremal table, build the lower-bound
//! construction, run the verification drivers, and export trees as DOT.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or input errors, 3 when a resource limit is hit.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use subtree_iso::canon::canonical_root;
use subtree_iso::construction::build_construction;
use subtree_iso::error::{CountError, RangeError, SearchError, TreeError};
use subtree_iso::extremal::{compute_r, compute_s, table};
use subtree_iso::subtrees::{configure_set_cap, count_subtrees_total, nr, ns};
use subtree_iso::tree::{parse_tree, serialize_tree, TreeFormat};
use subtree_iso::verify::{
    verify_576_cases, verify_aux_inequality, verify_case2_subcases, verify_centroid_bound,
    verify_construction, verify_exceptional, verify_lemma, VerificationReport,
    DEFAULT_AUX_MAX, DEFAULT_CENTROID_MAX, DEFAULT_CONSTRUCTION_MAX, DEFAULT_LEMMA_MAX,
};

#[derive(Parser)]
#[command(
    name = "subtree-iso",
    version,
    about = "Count nonisomorphic subtrees of trees, search for extremal values, \
             and verify the supporting bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Copy, Clone, ValueEnum)]
enum InputFormat {
    /// Edge list: optional first line with the order, then one "u v" per line
    Edgelist,
    /// Level sequence of a rooted tree, e.g. "1 2 3 2"
    Levelseq,
}

#[derive(Copy, Clone, ValueEnum)]
enum ConstructFormat {
    Edgelist,
    Levelseq,
    Dot,
}

#[derive(Copy, Clone, ValueEnum)]
enum SearchKind {
    /// Free count ns: maximize over all trees of order n
    S,
    /// Rooted count nr: maximize over all rooted trees of order n
    R,
}

#[derive(Copy, Clone, ValueEnum)]
enum CheckName {
    /// Product inequalities for rooted counts (merges and root branches)
    Lemma,
    /// Strict 5^(n/4) - 1 bound with the catalogued exceptions
    Aux,
    /// All 576 joins of bounded branch multisets over the catalog
    #[value(name = "cases576")]
    Cases576,
    /// Named merge families built from catalog trees
    #[value(name = "case2")]
    Case2,
    /// Centroid splitting bound over all free trees
    Centroid,
    /// Lower-bound construction: shape, diameter, and ns value
    Construction,
    /// Shape of the re-derived exceptional catalog
    Exceptional,
    /// Every check above, each at its default range
    All,
}

#[derive(Subcommand)]
enum Commands {
    /// Count subtree isomorphism classes of one tree
    Count {
        /// Input file, or "-" for stdin
        #[arg(default_value = "-")]
        file: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
        /// Count classes of root-containing subtrees (nr) instead of ns
        #[arg(long)]
        rooted: bool,
        /// Root vertex used with --rooted
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Also print the total number of subtrees (connected subgraphs)
        #[arg(long)]
        total: bool,
    },
    /// Find the extremal value S_n or R_n with all witness trees
    Search {
        /// Which maximum to compute: s (free) or r (rooted)
        #[arg(long, value_enum)]
        kind: SearchKind,
        /// Tree order
        #[arg(long)]
        n: usize,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Number of worker threads (default: all cores)
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Print the table of S_n and R_n with the surrounding bounds
    Table {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Build the tree of order n with ns close to 5^(n/4)
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: ConstructFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification check and report every violation
    Verify {
        #[arg(value_enum)]
        check: CheckName,
        /// Override the order ceiling for ranged checks
        #[arg(long)]
        max_n: Option<usize>,
        /// Cap on intermediate class-set sizes during rooted counting
        #[arg(long)]
        set_cap: Option<usize>,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Read a tree and write it out as Graphviz DOT
    Export {
        /// Input file, or "-" for stdin
        #[arg(default_value = "-")]
        file: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
        /// Mark a root vertex in the output
        #[arg(long)]
        rooted: bool,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Range(#[from] RangeError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Tree(_) | CliError::Range(_) | CliError::Io(_) => 2,
        CliError::Count(_) => 3,
        CliError::Search(SearchError::Range(_)) => 2,
        CliError::Search(SearchError::Count(_)) => 3,
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code(&err));
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn input_format(format: InputFormat) -> TreeFormat {
    match format {
        InputFormat::Edgelist => TreeFormat::EdgeList,
        InputFormat::Levelseq => TreeFormat::LevelSeq,
    }
}

fn init_parallel(parallel: Option<usize>) {
    if let Some(threads) = parallel {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Commands::Count {
            file,
            format,
            rooted,
            root,
            total,
        } => {
            let tree = parse_tree(&read_input(&file)?, input_format(format))?;
            let mut lines = String::new();
            if rooted {
                let rooted_tree = tree.clone().with_root(root)?;
                let _ = writeln!(lines, "nr={}", nr(&rooted_tree)?);
            } else {
                let _ = writeln!(lines, "ns={}", ns(&tree)?);
            }
            if total {
                let _ = writeln!(lines, "total={}", count_subtrees_total(&tree)?);
            }
            print!("{lines}");
            Ok(0)
        }
        Commands::Search {
            kind,
            n,
            csv,
            out,
            parallel,
        } => {
            init_parallel(parallel);
            let record = match kind {
                SearchKind::S => compute_s(n)?,
                SearchKind::R => compute_r(n)?,
            };
            let content = if csv {
                format!("{}\n{}\n", record.csv_header(), record.csv_row())
            } else {
                let mut text = String::new();
                let _ = writeln!(text, "{}_{} = {}", record.kind, record.n, record.value);
                let _ = writeln!(text, "witnesses: {}", record.witnesses.len());
                let _ = writeln!(
                    text,
                    "first witness levelseq: {}",
                    record.first_witness_levelseq()
                );
                text
            };
            write_output(out.as_ref(), &content)?;
            Ok(0)
        }
        Commands::Table {
            max_n,
            csv,
            out,
            parallel,
        } => {
            init_parallel(parallel);
            let report = table(max_n)?;
            let content = if csv { report.to_csv() } else { report.to_text() };
            write_output(out.as_ref(), &content)?;
            Ok(0)
        }
        Commands::Construct { n, format, out } => {
            let construction = build_construction(n)?;
            let content = match format {
                ConstructFormat::Edgelist => {
                    serialize_tree(&construction.tree, TreeFormat::EdgeList)?
                }
                ConstructFormat::Levelseq => {
                    let root = canonical_root(&construction.tree);
                    let rooted = construction.tree.clone().with_root(root)?;
                    let mut seq = serialize_tree(&rooted, TreeFormat::LevelSeq)?;
                    seq.push('\n');
                    seq
                }
                ConstructFormat::Dot => serialize_tree(&construction.tree, TreeFormat::Dot)?,
            };
            write_output(out.as_ref(), &content)?;
            Ok(0)
        }
        Commands::Verify {
            check,
            max_n,
            set_cap,
            csv,
            out,
            parallel,
        } => {
            init_parallel(parallel);
            if let Some(cap) = set_cap {
                configure_set_cap(cap);
            }
            let reports = run_checks(check, max_n)?;
            let all_passed = reports.iter().all(VerificationReport::passed);
            let content = if csv {
                let mut text = format!("{}\n", VerificationReport::csv_header());
                for report in &reports {
                    text.push_str(&report.csv_row());
                    text.push('\n');
                }
                text
            } else {
                let mut text = String::new();
                for report in &reports {
                    text.push_str(&report.to_text());
                    text.push('\n');
                }
                let _ = writeln!(
                    text,
                    "overall: {}",
                    if all_passed { "PASS" } else { "FAIL" }
                );
                text
            };
            write_output(out.as_ref(), &content)?;
            Ok(if all_passed { 0 } else { 1 })
        }
        Commands::Export {
            file,
            format,
            rooted,
            root,
            out,
        } => {
            let tree = parse_tree(&read_input(&file)?, input_format(format))?;
            let tree = if rooted { tree.with_root(root)? } else { tree };
            let content = serialize_tree(&tree, TreeFormat::Dot)?;
            write_output(out.as_ref(), &content)?;
            Ok(0)
        }
    }
}

fn run_checks(
    check: CheckName,
    max_n: Option<usize>,
) -> Result<Vec<VerificationReport>, CliError> {
    let reports = match check {
        CheckName::Lemma => vec![verify_lemma(max_n.unwrap_or(DEFAULT_LEMMA_MAX))?],
        CheckName::Aux => vec![verify_aux_inequality(max_n.unwrap_or(DEFAULT_AUX_MAX))?],
        CheckName::Cases576 => vec![verify_576_cases()],
        CheckName::Case2 => vec![verify_case2_subcases()],
        CheckName::Centroid => {
            vec![verify_centroid_bound(max_n.unwrap_or(DEFAULT_CENTROID_MAX))?]
        }
        CheckName::Construction => {
            vec![verify_construction(max_n.unwrap_or(DEFAULT_CONSTRUCTION_MAX))?]
        }
        CheckName::Exceptional => vec![verify_exceptional()],
        // "all" runs every check at its default range; --max-n is ignored
        // because the checks have different ceilings.
        CheckName::All => vec![
            verify_lemma(DEFAULT_LEMMA_MAX)?,
            verify_aux_inequality(DEFAULT_AUX_MAX)?,
            verify_576_cases(),
            verify_case2_subcases(),
            verify_centroid_bound(DEFAULT_CENTROID_MAX)?,
            verify_construction(DEFAULT_CONSTRUCTION_MAX)?,
            verify_exceptional(),
        ],
    };
    Ok(reports)
}
