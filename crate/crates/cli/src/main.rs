use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use matroid_biopt::generate::{random_graphic, random_uniform, rng_from_seed, DEFAULT_C_MAX};
use matroid_biopt_cli::commands::{self, DEFAULT_MAX_ENUMERATION};
use matroid_biopt_cli::experiment::{self, ExperimentKind, ExperimentSpec};
use matroid_biopt_cli::{parse, write, Algorithm, CliError, InstanceFile, SolveOptions};

#[derive(Parser)]
#[command(name = "matroid-biopt", version, about = "Biobjective matroid optimization with one binary objective")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Graphic,
    Uniform,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the non-dominated set of an instance file.
    Solve {
        /// Instance file, `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value = "esa")]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Refuse complete enumeration above this many bases.
        #[arg(long, default_value_t = DEFAULT_MAX_ENUMERATION)]
        max_enumeration: u64,
        /// With `dp`: report the cheapest bases of every second-cost level
        /// that is not strictly dominated.
        #[arg(long)]
        level_optimal: bool,
        /// Leave out wall-clock timings so output is reproducible.
        #[arg(long)]
        omit_timing: bool,
    },
    /// Write a random instance file.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Vertices (graphic) or items (uniform).
        #[arg(long)]
        n: usize,
        /// Edges, graphic only.
        #[arg(long)]
        m: Option<usize>,
        /// Basis size, uniform only (default n/2).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        beta: u32,
        #[arg(long, default_value_t = DEFAULT_C_MAX)]
        c_max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the number of bases (spanning trees or k-subsets).
    Count { file: PathBuf },
    /// Check whether the efficient set is connected under single exchanges.
    Connected {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_ENUMERATION)]
        max_enumeration: u64,
    },
    /// Run a seeded batch experiment and write CSV.
    Experiment {
        #[arg(value_enum)]
        kind: ExperimentKind,
        /// Comma-separated `n:m` (graphic) or `n:k` / `n` (uniform) sizes.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<String>,
        #[arg(long, default_value_t = 10)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        beta: Vec<u32>,
        /// Worker threads; MATROID_BIOPT_THREADS takes precedence.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_ENUMERATION)]
        max_enumeration: u64,
        #[arg(long)]
        omit_timing: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_instance(path: &Path) -> Result<InstanceFile> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?
    };
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

fn parse_size(raw: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("invalid size `{raw}`"));
    match raw.split_once(':') {
        Some((a, b)) => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
        None => Ok((raw.parse().map_err(|_| bad())?, 0)),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve {
            file,
            algorithm,
            format,
            output,
            max_enumeration,
            level_optimal,
            omit_timing,
        } => {
            let inst = read_instance(&file)?;
            let opts = SolveOptions {
                algorithm,
                max_enumeration,
                level_optimal,
                timing: !omit_timing,
            };
            let report = commands::solve(&inst, &opts)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            emit(output.as_deref(), &text)
        }
        Command::Gen {
            kind,
            n,
            m,
            k,
            beta,
            c_max,
            seed,
            output,
        } => {
            let mut rng = rng_from_seed(seed);
            let file = match kind {
                GenKind::Graphic => {
                    let m = m.ok_or_else(|| CliError::Usage("graphic instances need --m".into()))?;
                    InstanceFile::Graphic(
                        random_graphic(n, m, c_max, &mut rng).map_err(|e| CliError::Usage(e.to_string()))?,
                    )
                }
                GenKind::Uniform => {
                    let k = k.unwrap_or((n / 2).max(1));
                    InstanceFile::Uniform(
                        random_uniform(n, k, beta, &mut rng).map_err(|e| CliError::Usage(e.to_string()))?,
                    )
                }
            };
            emit(output.as_deref(), &write(&file))
        }
        Command::Count { file } => {
            let inst = read_instance(&file)?;
            emit(None, &(commands::count(&inst) + "\n"))
        }
        Command::Connected {
            file,
            format,
            max_enumeration,
        } => {
            let inst = read_instance(&file)?;
            let r = commands::connected(&inst, max_enumeration)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&r)? + "\n",
                Format::Csv => format!(
                    "connected,components,efficient,nondominated\n{},{},{},{}\n",
                    r.connected, r.components, r.efficient, r.nondominated
                ),
            };
            emit(None, &text)
        }
        Command::Experiment {
            kind,
            sizes,
            instances,
            seed,
            beta,
            jobs,
            max_enumeration,
            omit_timing,
            output,
        } => {
            let sizes = sizes.iter().map(|s| parse_size(s)).collect::<Result<Vec<_>, _>>()?;
            if kind == ExperimentKind::GraphicBench && sizes.is_empty() {
                return Err(CliError::Usage("graphic-bench needs --sizes n:m,...".into()).into());
            }
            let spec = ExperimentSpec {
                kind,
                sizes: if sizes.is_empty() { vec![(20, 0)] } else { sizes },
                instances,
                seed,
                betas: beta,
                jobs: experiment::resolve_jobs(jobs)?,
                max_enumeration,
                timing: !omit_timing,
            };
            emit(output.as_deref(), &experiment::run(&spec)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(4) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = err.chain().find_map(|e| e.downcast_ref::<CliError>()).map_or(1, CliError::exit_code);
            ExitCode::from(code as u8)
        }
    }
}
