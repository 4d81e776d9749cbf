//! Command-line interface. Exit codes: 0 success, 1 failed checks, 2 parse
//! errors, 3 internal errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::export;
use crate::group::DEFAULT_CAP;
use crate::groupdef::{parse_group_definition, GroupSpec};
use crate::harness::{
    analyze_spec, probe_open_problem, run_corpus, run_theorem_suite, CheckStatus, CorpusConfig,
    CorpusOutcome,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE_ERROR: i32 = 2;
pub const EXIT_INTERNAL_ERROR: i32 = 3;

#[derive(Parser)]
#[command(
    name = "pigraph",
    about = "Subgroup lattices, prime index graphs, and theorem verification for finite groups"
)]
struct Cli {
    /// Maximum group order accepted by the engine.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the prime index graph of one group definition file.
    Build {
        file: PathBuf,
        /// Write a DOT rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write a JSON export here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enumerate the subgroup lattice and export it as JSON.
    Lattice {
        file: PathBuf,
        #[arg(long)]
        json: PathBuf,
    },
    /// Print the graph invariants of one group.
    Invariants { file: PathBuf },
    /// Run the theorem suite on one group; exits 0 only if all checks pass.
    Verify { file: PathBuf },
    /// Run the theorem suite over a corpus directory or the default corpus.
    Corpus {
        /// Directory of .grp definition files.
        dir: Option<PathBuf>,
        /// Use the built-in default corpus.
        #[arg(long, conflicts_with = "dir")]
        default: bool,
        /// Run corpus entries on worker threads.
        #[arg(long)]
        parallel: bool,
        /// Directory for per-group JSON reports and the summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search a corpus for connectivity-converse counterexample candidates.
    Probe {
        dir: Option<PathBuf>,
        #[arg(long, conflicts_with = "dir")]
        default: bool,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_PARSE_ERROR
            } else {
                EXIT_OK
            };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn parse(message: String) -> Self {
        Self {
            code: EXIT_PARSE_ERROR,
            message,
        }
    }

    fn internal(message: String) -> Self {
        Self {
            code: EXIT_INTERNAL_ERROR,
            message,
        }
    }
}

fn load_spec(path: &Path) -> Result<GroupSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::internal(format!("{}: {e}", path.display())))?;
    parse_group_definition(&text)
        .map_err(|e| CliError::parse(format!("{}:{e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::internal(format!("{}: {e}", path.display())))
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Build { file, dot, json } => {
            let spec = load_spec(&file)?;
            let analysis =
                analyze_spec(&spec, cli.cap).map_err(|e| CliError::internal(e.to_string()))?;
            println!(
                "{}: order {}, {} subgroups, {} prime index edges",
                spec,
                analysis.group.order(),
                analysis.lattice.len(),
                analysis.pi.edges.len()
            );
            if let Some(path) = dot {
                write_file(&path, &export::graph_dot(&analysis.lattice, &analysis.pi))?;
            }
            if let Some(path) = json {
                write_file(
                    &path,
                    &export::graph_json(
                        &spec.to_string(),
                        &analysis.lattice,
                        &analysis.pi,
                        &analysis.invariants,
                    ),
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Lattice { file, json } => {
            let spec = load_spec(&file)?;
            let analysis =
                analyze_spec(&spec, cli.cap).map_err(|e| CliError::internal(e.to_string()))?;
            write_file(&json, &export::lattice_json(&analysis.lattice))?;
            println!("{}: {} subgroups", spec, analysis.lattice.len());
            Ok(EXIT_OK)
        }
        Command::Invariants { file } => {
            let spec = load_spec(&file)?;
            let analysis =
                analyze_spec(&spec, cli.cap).map_err(|e| CliError::internal(e.to_string()))?;
            let inv = &analysis.invariants;
            println!("group:              {spec}");
            println!("order:              {}", analysis.group.order());
            println!("subgroups:          {}", analysis.lattice.len());
            println!("edges:              {}", analysis.pi.edges.len());
            println!("bipartite:          {}", inv.bipartite);
            println!(
                "girth:              {}",
                inv.girth.map_or("inf".to_string(), |g| g.to_string())
            );
            println!("components:         {}", inv.component_count);
            println!("forest:             {}", inv.is_forest);
            println!("complete bipartite: {}", inv.is_complete_bipartite);
            println!(
                "regular:            {}",
                inv.regular_k
                    .map_or("no".to_string(), |k| format!("{k}-regular"))
            );
            println!("degree sequence:    {:?}", inv.degree_sequence);
            if inv.isolated_vertices.is_empty() {
                println!("isolated vertices:  none");
            } else {
                for &v in &inv.isolated_vertices {
                    println!(
                        "isolated vertex:    id {v} (order {})",
                        analysis.lattice.subgroup(v).order
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file } => {
            let spec = load_spec(&file)?;
            let outcome = run_theorem_suite(&spec, cli.cap)
                .map_err(|e| CliError::internal(e.to_string()))?;
            let report = &outcome.report;
            println!(
                "{}: order {}, {} subgroups, {} edges, girth {}, {} components",
                report.group,
                report.order,
                report.subgroup_count,
                report.edge_count,
                report.girth.map_or("inf".to_string(), |g| g.to_string()),
                report.component_count
            );
            for check in &report.checks {
                let status = match check.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::NotApplicable => "n/a ",
                };
                match &check.witness {
                    Some(w) => println!("  [{status}] {:32} {w}", check.id),
                    None => println!("  [{status}] {}", check.id),
                }
            }
            for (phase, secs) in &report.timings {
                println!("  time {phase}: {secs:.3}s");
            }
            Ok(if report.all_pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Corpus {
            dir,
            default,
            parallel,
            out,
        } => {
            let config = CorpusConfig {
                entries: corpus_entries(dir.as_deref(), default, cli.cap)?,
                cap: cli.cap,
                parallel,
                out_dir: out,
            };
            let outcome = run_corpus(&config).map_err(|e| CliError::internal(e.to_string()))?;
            print_corpus_table(&outcome);
            Ok(if outcome.all_pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Probe { dir, default } => {
            let config = CorpusConfig {
                entries: corpus_entries(dir.as_deref(), default, cli.cap)?,
                cap: cli.cap,
                parallel: false,
                out_dir: None,
            };
            let candidates =
                probe_open_problem(&config).map_err(|e| CliError::internal(e.to_string()))?;
            if candidates.is_empty() {
                println!("no counterexample candidates found ({} groups probed)", config.entries.len());
            } else {
                for c in &candidates {
                    println!(
                        "candidate: group {} with normal subgroup id {} (order {})",
                        c.group, c.normal_id, c.normal_order
                    );
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn corpus_entries(
    dir: Option<&Path>,
    use_default: bool,
    cap: usize,
) -> Result<Vec<GroupSpec>, CliError> {
    match (dir, use_default) {
        (None, true) => Ok(CorpusConfig::with_default_entries(cap).entries),
        (Some(dir), false) => {
            let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
                .map_err(|e| CliError::internal(format!("{}: {e}", dir.display())))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|ext| ext == "grp"))
                .collect();
            paths.sort();
            paths.iter().map(|p| load_spec(p)).collect()
        }
        _ => Err(CliError::parse(
            "pass a corpus directory or --default".into(),
        )),
    }
}

fn print_corpus_table(outcome: &CorpusOutcome) {
    println!(
        "{:<40} {:>6} {:>10} {:>7} {:>6} {:>11} {:>9}",
        "group", "order", "subgroups", "edges", "girth", "components", "all-pass"
    );
    for row in &outcome.summary.entries {
        match &row.error {
            Some(e) => println!("{:<40} error: {e}", row.group),
            None => println!(
                "{:<40} {:>6} {:>10} {:>7} {:>6} {:>11} {:>9}",
                row.group,
                row.order.unwrap(),
                row.subgroups.unwrap(),
                row.edges.unwrap(),
                row.girth.map_or("inf".to_string(), |g| g.to_string()),
                row.components.unwrap(),
                row.all_pass
            ),
        }
    }
    println!(
        "{} groups, all-pass: {}",
        outcome.summary.entries.len(),
        outcome.all_pass
    );
}
