use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chorded_spectra::commands::{self, Claim, CliError, CommandResult, VerifyParams};
use chorded_spectra::{input, output};
use chorded_spectra_core::enumerate::{EnumerationMode, GraphClass};
use chorded_spectra_core::Graph;
use clap::{Args, Parser, Subcommand, ValueEnum};

const FAMILY_HELP: &str = "\
Family specs (`name:params`):
  star:L                    K_{1,L}
  complete:N                K_N
  complete_bipartite:A,B    K_{A,B}
  complete_multipartite:P,Q,...
  path:N, cycle:N
  book_star:T,I             K_1 join (T K_2 + I K_1)
  clique_join:K,T           K_K join T K_1
  clique_join_size:K,M      K_K join (M/K - (K-1)/2) K_1
  gnks:N,K,S                (K_{K-2S} + (N-K+S) K_1) join K_S
  chord_free_extremal:M     K_1 join (tK_2 + (M-3t)K_1), t = floor(M/3)
  sk4                       K_4 with one edge subdivided
  k1_join_p4                K_1 join P_4
  fixture:NAME              H1 H2 H3 F1 F2 F3

Edge-list files: one `u v` pair per line, `#` comments; a line holding a
single integer N forces at least N vertices.

Classes: all, chorded-cycle-free, doubly-chorded-cycle-free,
k-chorded-cycle-free:K, path-free:T, circumference-at-most:K,
non-hamiltonian, connected.

Exit codes: 0 ok/pass (detect: found), 1 verification failed (detect:
nothing found), 2 usage or parse error, 3 resource limit or non-convergence.
CHORDED_SPECTRA_CAP overrides the enumeration caps (`14` or `edges=14,order=11`).";

#[derive(Parser)]
#[command(name = "chorded-spectra", version, about = "Spectral conditions for chorded cycles: radii, detectors, exhaustive checks", after_help = FAMILY_HELP)]
struct Cli {
    /// Print JSON (default).
    #[arg(long, global = true)]
    json: bool,
    /// Print sorted `key<TAB>value` lines instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    tsv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Named family, e.g. `star:9` or `fixture:F2`.
    #[arg(long)]
    family: Option<String>,
    /// graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    edges: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, CliError> {
        match (&self.family, &self.g6, &self.edges) {
            (Some(f), _, _) => input::graph_from_family(f),
            (_, Some(g), _) => input::graph_from_graph6(g),
            (_, _, Some(p)) => input::graph_from_edge_file(p),
            _ => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    ThmChorded,
    EgPath,
    CycleBound,
    OreBound,
    PropDoubly,
    KChordedExtremal,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius, Perron vector and thresholds.
    Rho {
        #[command(flatten)]
        input: GraphInput,
        /// Also report the k-chorded threshold for this k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Find a cycle with at least --s chords (of length --k if given).
    Detect {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Cycle length.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check a claim exhaustively (or by certificate) and print the verdict.
    Verify {
        #[arg(value_enum)]
        claim: ClaimArg,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Seed for the random samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random graphs drawn for k-chorded-extremal.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Maximum spectral radius over a class of isolate-free m-edge graphs.
    Extremal {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "chorded-cycle-free", value_parser = parse_class)]
        class: GraphClass,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
    },
    /// List one canonical graph6 per isomorphism class.
    Enumerate {
        /// Isolate-free graphs with this many edges.
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        m: Option<usize>,
        /// All graphs on this many vertices.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "all", value_parser = parse_class)]
        class: GraphClass,
    },
    /// Print a graph: graph6, canonical form and edges.
    Show {
        #[command(flatten)]
        input: GraphInput,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_class(text: &str) -> Result<GraphClass, String> {
    GraphClass::parse(text).ok_or_else(|| format!("unknown class {text:?}"))
}

fn run(cli: &Cli) -> Result<CommandResult, CliError> {
    let limits = input::limits_from_env()?;
    match &cli.command {
        Command::Rho { input, k } => commands::cmd_rho(&input.load()?, *k),
        Command::Detect { input, s, k } => commands::cmd_detect(&input.load()?, *s, *k),
        Command::Verify {
            claim,
            m,
            n,
            k,
            jobs,
            seed,
            samples,
        } => {
            let claim = match claim {
                ClaimArg::ThmChorded => Claim::ThmChorded,
                ClaimArg::EgPath => Claim::EgPath,
                ClaimArg::CycleBound => Claim::CycleBound,
                ClaimArg::OreBound => Claim::OreBound,
                ClaimArg::PropDoubly => Claim::PropDoubly,
                ClaimArg::KChordedExtremal => Claim::KChordedExtremal,
            };
            let params = VerifyParams {
                m: *m,
                n: *n,
                k: *k,
                jobs: (*jobs).max(1),
                seed: *seed,
                samples: *samples,
                limits,
            };
            commands::cmd_verify(claim, &params)
        }
        Command::Extremal { m, class, jobs } => {
            commands::cmd_extremal(*m, *class, limits, (*jobs).max(1))
        }
        Command::Enumerate { m, n, class } => {
            let mode = match (m, n) {
                (Some(m), _) => EnumerationMode::IsolateFreeSize(*m),
                (_, Some(n)) => EnumerationMode::Order(*n),
                _ => unreachable!("clap requires --m or --n"),
            };
            commands::cmd_enumerate(mode, *class, limits)
        }
        Command::Show { input } => commands::cmd_show(&input.load()?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(result) => {
            let text = if cli.tsv {
                output::to_tsv(&result.payload)
            } else {
                serde_json::to_string_pretty(&result.payload).expect("JSON values serialize") + "\n"
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            eprintln!(
                "{} in {:.3}s",
                result.status.as_str(),
                result.elapsed.as_secs_f64()
            );
            ExitCode::from(result.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
