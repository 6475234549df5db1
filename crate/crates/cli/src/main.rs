//! `clusterbench`: command-line front end for the cluster-seed workbench.
//!
//! Exit status: 0 on success, 1 on domain errors, 2 on usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use clusterbench::algebra::{parse_expression, AlgebraError};
use clusterbench::coxeter::{CoxeterError, DynkinDiagram, ReducedWord, WeylGroup};
use clusterbench::minors::verify_exchange_identities;
use clusterbench::quiver::{
    apply_reduction, find_reddening_parallel, gls_quiver, IceQuiver, QuiverError, ReductionScriptFile,
};
use clusterbench::seed::{
    closure, localization_certificate, specialize_frozen, starfish_membership, AlgebraFlavor,
    SeedError,
};
use clusterbench::{MinorError, Seed};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Failed(String),
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "clusterbench", version, about = "Cluster seeds of reduced words and open Richardson varieties")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for searches and trials.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Write the primary output (a quiver or seed file) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArgs {
    /// Dynkin type, e.g. A4, D5, E6.
    #[arg(long = "type")]
    kind: String,
    /// Comma-separated letters; "" is the empty word.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Args)]
struct FlavorArgs {
    /// Frozen variables are not inverted (membership in U+ instead of U).
    #[arg(long)]
    non_invertible: bool,
}

impl FlavorArgs {
    fn flavor(&self) -> AlgebraFlavor {
        if self.non_invertible {
            AlgebraFlavor::NonInvertibleCoefficients
        } else {
            AlgebraFlavor::InvertibleCoefficients
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Quiver of a reduced word.
    Gls(WordArgs),
    /// Mutate a quiver file at the given vertices, in order.
    Mutate {
        quiver: PathBuf,
        /// 1-based vertex; repeat for a sequence.
        #[arg(long = "at")]
        at: Vec<usize>,
        /// Also write the mutated seed (quiver plus cluster variables) here.
        #[arg(long)]
        seed_out: Option<PathBuf>,
    },
    /// Apply a reduction script (mutate, freeze, delete) to a quiver file.
    Reduce {
        quiver: PathBuf,
        #[arg(long)]
        script: PathBuf,
    },
    /// Rank of the exchange matrix.
    Rank { quiver: PathBuf },
    /// Search for a reddening sequence.
    Reddening {
        quiver: PathBuf,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Exhaustive mutation closure (finite type).
    Closure {
        quiver: PathBuf,
        #[arg(long, default_value_t = 1000)]
        max_seeds: usize,
    },
    /// Upper cluster algebra membership via the starfish lemma.
    Starfish {
        quiver: PathBuf,
        /// Expression in x1..xn.
        #[arg(long = "f", allow_hyphen_values = true)]
        function: String,
        #[command(flatten)]
        flavor: FlavorArgs,
    },
    /// Smallest power of x_k that brings f into the upper cluster algebra.
    Localize {
        quiver: PathBuf,
        /// 1-based mutable vertex.
        #[arg(long)]
        k: usize,
        #[arg(long = "f", allow_hyphen_values = true)]
        function: String,
        #[arg(long, default_value_t = 8)]
        d_max: u32,
        #[command(flatten)]
        flavor: FlavorArgs,
    },
    /// Set a frozen variable to 1 and delete its vertex (after mutating at --at).
    Specialize {
        quiver: PathBuf,
        /// 1-based frozen vertex.
        #[arg(long)]
        frozen: usize,
        #[arg(long = "at")]
        at: Vec<usize>,
    },
    /// Check the initial exchange relations of the flag-minor realization (type A).
    VerifyMinors {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Dimension l(w) - l(v) of the open Richardson variety.
    RichardsonDim {
        #[arg(long = "type")]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Run the HTTP API.
    Serve {
        #[arg(long, default_value_t = clusterbench_service::DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value_t = clusterbench_service::DEFAULT_TERM_BUDGET)]
        term_budget: usize,
    },
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn read_quiver(path: &Path) -> CliResult<IceQuiver> {
    IceQuiver::from_json(&read_text(path)?)
        .map_err(|e| CliError::Parse { path: path.to_path_buf(), message: e.to_string() })
}

fn write_text(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Files end with a newline; the JSON itself is the canonical compact form.
fn emit_file(out: Option<&Path>, contents: &str) -> CliResult {
    let text = format!("{contents}\n");
    match out {
        Some(path) => write_text(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn zero_based(vertices: &[usize], n: usize) -> CliResult<Vec<usize>> {
    vertices
        .iter()
        .map(|&v| {
            if v == 0 || v > n {
                Err(QuiverError::VertexOutOfRange { vertex: v, n }.into())
            } else {
                Ok(v - 1)
            }
        })
        .collect()
}

fn one_based(vertices: &[usize]) -> Vec<usize> {
    vertices.iter().map(|v| v + 1).collect()
}

fn join(vertices: &[usize]) -> String {
    vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn diagram_and_word(args: &WordArgs) -> CliResult<(DynkinDiagram, ReducedWord)> {
    Ok((args.kind.parse()?, args.word.parse()?))
}

fn run(cli: Cli) -> CliResult {
    let out = cli.out.as_deref();
    match cli.command {
        Command::Gls(args) => {
            let (d, w) = diagram_and_word(&args)?;
            let q = gls_quiver(&d, &w)?;
            emit_file(out, &q.to_json())
        }
        Command::Mutate { quiver, at, seed_out } => {
            let q = read_quiver(&quiver)?;
            let seq = zero_based(&at, q.len())?;
            let seed = Seed::initial(&q).mutate_sequence(&seq)?;
            if let Some(path) = seed_out {
                write_text(&path, &format!("{}\n", seed.to_json()))?;
            }
            emit_file(out, &seed.quiver().to_json())
        }
        Command::Reduce { quiver, script } => {
            let q = read_quiver(&quiver)?;
            let file: ReductionScriptFile = serde_json::from_str(&read_text(&script)?)
                .map_err(|e| CliError::Parse { path: script.clone(), message: e.to_string() })?;
            let reduced = apply_reduction(&q, &file.to_script()?)?;
            emit_file(out, &reduced.to_json())
        }
        Command::Rank { quiver } => {
            let q = read_quiver(&quiver)?;
            let (rank, mutable) = (q.exchange_rank(), q.mutable_vertices().len());
            if cli.json {
                print_json(&json!({ "rank": rank, "mutable": mutable, "full_rank": rank == mutable }));
            } else {
                let verdict = if rank == mutable { "full rank" } else { "rank deficient" };
                println!("rank {rank} of {mutable} ({verdict})");
            }
            Ok(())
        }
        Command::Reddening { quiver, depth } => {
            let q = read_quiver(&quiver)?;
            let found = find_reddening_parallel(&q, depth, cli.jobs.max(1));
            if cli.json {
                print_json(&json!({ "depth": depth, "sequence": found.as_deref().map(one_based) }));
            } else {
                match found {
                    Some(seq) => println!("{}", join(&one_based(&seq))),
                    None => println!("none within depth {depth}"),
                }
            }
            Ok(())
        }
        Command::Closure { quiver, max_seeds } => {
            let q = read_quiver(&quiver)?;
            let report = closure(&Seed::initial(&q), max_seeds)?;
            if cli.json {
                print_json(&report.to_json());
            } else {
                println!("{} seeds, {} cluster variables", report.seeds.len(), report.variables.len());
                for x in &report.variables {
                    println!("  {x}");
                }
            }
            Ok(())
        }
        Command::Starfish { quiver, function, flavor } => {
            let q = read_quiver(&quiver)?;
            let f = parse_expression(&function, q.len())?;
            let verdict = starfish_membership(&q, &f, flavor.flavor())?;
            if cli.json {
                print_json(&serde_json::to_value(&verdict).expect("serializable"));
            } else {
                println!("{verdict}");
                for c in &verdict.checks {
                    let mark = if c.laurent { "laurent" } else { "NOT laurent" };
                    println!("  {:<12} {mark:<12} {}", c.ring, c.expression);
                }
            }
            Ok(())
        }
        Command::Localize { quiver, k, function, d_max, flavor } => {
            let q = read_quiver(&quiver)?;
            let k0 = zero_based(&[k], q.len())?[0];
            let f = parse_expression(&function, q.len())?;
            let d = localization_certificate(&q, k0, &f, d_max, flavor.flavor())?;
            if cli.json {
                print_json(&json!({ "k": k, "d": d, "d_max": d_max }));
            } else {
                match d {
                    Some(d) => println!("d = {d}"),
                    None => println!("no certificate with d <= {d_max}"),
                }
            }
            Ok(())
        }
        Command::Specialize { quiver, frozen, at } => {
            let q = read_quiver(&quiver)?;
            let seq = zero_based(&at, q.len())?;
            let f = zero_based(&[frozen], q.len())?[0];
            let seed = Seed::initial(&q).mutate_sequence(&seq)?;
            let special = specialize_frozen(&seed, f)?;
            emit_file(out, &special.to_json())
        }
        Command::VerifyMinors { word, trials } => {
            let (d, w) = diagram_and_word(&word)?;
            let report = verify_exchange_identities(&d, &w, trials, cli.seed, cli.jobs.max(1))?;
            if cli.json {
                print_json(&serde_json::to_value(&report).expect("serializable"));
            } else {
                println!("{} word {} ({} convention), {} trials, seed {}", report.diagram, report.word, report.convention, report.trials, report.seed);
                for v in &report.vertices {
                    let kind = if v.frozen { "frozen" } else { "mutable" };
                    println!("  x{:<3} {kind:<8} {:<16} {}", v.vertex, v.minor.to_string(), v.expression);
                }
                for r in &report.relations {
                    let status = serde_json::to_value(r.status).expect("serializable");
                    println!(
                        "  vertex {:<3} {:<20} {}/{} trials  x' = {}",
                        r.vertex,
                        status.as_str().unwrap_or("?"),
                        r.trials_passed,
                        report.trials,
                        r.exchanged.as_deref().unwrap_or("-"),
                    );
                }
            }
            if report.passed {
                Ok(())
            } else {
                Err(CliError::Failed("exchange identities failed".into()))
            }
        }
        Command::RichardsonDim { kind, v, w } => {
            let g = WeylGroup::new(kind.parse()?);
            let v = g.element(&v.parse()?)?;
            let w = g.element(&w.parse()?)?;
            let dim = g.richardson_dim(&v, &w)?;
            if cli.json {
                print_json(&json!({ "dim": dim }));
            } else {
                println!("{dim}");
            }
            Ok(())
        }
        Command::Serve { port, term_budget } => {
            let rt = tokio::runtime::Builder::new_multi_thread()
                .enable_all()
                .build()
                .map_err(|e| CliError::Failed(e.to_string()))?;
            eprintln!("listening on http://127.0.0.1:{port}");
            rt.block_on(clusterbench_service::serve(port, term_budget))
                .map_err(|e| CliError::Failed(format!("server: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
