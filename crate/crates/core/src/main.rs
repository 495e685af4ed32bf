use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use freiman::fiber::{DEFAULT_CAP, DEFAULT_MAX_POWER};
use freiman::io::{parse_graph, parse_ideal};
use freiman::report::{self, Input, Timing, VerifyReport};
use freiman::verify::{self, Mode, VerifyConfig};
use freiman::Error;

#[derive(Parser)]
#[command(
    name = "freiman",
    version,
    about = "Freiman ideals, edge ideals and cycle matroids, computed exactly"
)]
struct Cli {
    /// Omit timing fields so reruns are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Resource guard: largest sumset, forest or cycle count allowed.
    #[arg(long, global = true, env = "FREIMAN_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Monomial ideals.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Edge ideals of graphs.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Cycle matroids of graphs.
    #[command(subcommand)]
    Matroid(MatroidCmd),
    /// Cross-check classifiers against brute force on a graph corpus.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Spread, growth series, h-vector and the Freiman test.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_POWER)]
        max_power: usize,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Decide whether the edge ideal is Freiman.
    Classify { file: PathBuf },
}

#[derive(Subcommand)]
enum MatroidCmd {
    /// Decide whether the matroidal ideal of the cycle matroid is Freiman.
    Classify {
        file: PathBuf,
        /// Also compute the base-ring h-vector and regularity.
        #[arg(long)]
        hvector: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct VerifyArgs {
    /// Vertex bound (default 6 exhaustive, 10 random).
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Edge bound for the matroid corpus.
    #[arg(long, default_value_t = 6)]
    max_edges: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Random samples per corpus.
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Keep one graph per isomorphism class (exhaustive mode).
    #[arg(long)]
    up_to_iso: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_POWER)]
    max_power: usize,
    /// Write each counterexample as a graph file into this directory.
    #[arg(long)]
    dump_dir: Option<PathBuf>,
    /// Exit with status 5 if any check fails.
    #[arg(long)]
    strict: bool,
}

enum Failure {
    Io(PathBuf, std::io::Error),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn input(path: &Path, kind: &'static str) -> Input {
    Input {
        path: path.display().to_string(),
        kind,
    }
}

fn run(cli: &Cli) -> Result<(String, ExitCode), Failure> {
    let start = Instant::now();
    let timing = || (!cli.no_timing).then(|| Timing::from(start.elapsed()));
    let table = matches!(cli.format, Format::Table);
    let out = match &cli.command {
        Command::Ideal(IdealCmd::Analyze { file, max_power }) => {
            let ideal = parse_ideal(&read(file)?)?;
            let mut r = report::ideal_report(input(file, "ideal"), &ideal, *max_power, cli.cap)?;
            r.timing = timing();
            if table {
                r.to_table()
            } else {
                report::to_json(&r)
            }
        }
        Command::Graph(GraphCmd::Classify { file }) => {
            let g = parse_graph(&read(file)?)?;
            let mut r = report::graph_report(input(file, "graph"), &g, cli.cap)?;
            r.timing = timing();
            if table {
                r.to_table()
            } else {
                report::to_json(&r)
            }
        }
        Command::Matroid(MatroidCmd::Classify { file, hvector }) => {
            let g = parse_graph(&read(file)?)?;
            let mut r = report::matroid_report(input(file, "graph"), &g, *hvector, cli.cap)?;
            r.timing = timing();
            if table {
                r.to_table()
            } else {
                report::to_json(&r)
            }
        }
        Command::Verify(a) => {
            let mode = match a.mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Random => Mode::Random,
            };
            let default_vertices = if mode == Mode::Random { 10 } else { 6 };
            let cfg = VerifyConfig {
                mode,
                max_vertices: a.max_vertices.unwrap_or(default_vertices),
                max_edges: a.max_edges,
                count: a.count,
                seed: a.seed,
                up_to_iso: a.up_to_iso,
                max_power: a.max_power,
                cap: cli.cap,
                ..VerifyConfig::default()
            };
            if cfg.max_vertices < 2 || cfg.max_vertices > 11 {
                return Err(Failure::Domain(Error::InvalidGraph(
                    "--max-vertices must lie in 2..=11".into(),
                )));
            }
            let summary = verify::run(&cfg);
            if let Some(dir) = &a.dump_dir {
                for p in summary
                    .dump_counterexamples(dir)
                    .map_err(|e| Failure::Io(dir.clone(), e))?
                {
                    eprintln!("wrote {}", p.display());
                }
            }
            let failed = !summary.all_passed;
            let r = VerifyReport {
                summary,
                timing: timing(),
            };
            let text = if table {
                r.to_table()
            } else {
                report::to_json(&r)
            };
            let code = if failed && a.strict {
                ExitCode::from(5)
            } else {
                ExitCode::SUCCESS
            };
            return Ok((text, code));
        }
    };
    Ok((out, ExitCode::SUCCESS))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            // A closed pipe (e.g. `| head`) is not an error worth a panic.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            code
        }
        Err(Failure::Io(path, e)) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
