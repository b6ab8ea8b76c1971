//! Seeded experiment harness.
//!
//! Every instance gets its own generator, seeded from a master ChaCha8
//! stream, so results do not depend on the number of worker threads.

use std::fmt::Write as _;
use std::time::Instant;

use matroid_biopt::generate::{random_graphic, random_uniform, rng_from_seed, DEFAULT_C_MAX};
use matroid_biopt::oracles::{adjacency_connected, complete_enumeration, count_bases, dp_uniform, DpOptions};
use matroid_biopt::{run_esa, BicriteriaInstance, UniformMatroid};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExperimentKind {
    /// Random connected graphs: ESA, and CE where the budget allows.
    GraphicBench,
    /// Random knapsack-style uniform instances: ESA against DP.
    UniformBench,
    /// Count instances whose efficient set is not connected, per beta.
    BetaSearch,
}

#[derive(Clone, Debug)]
pub struct ExperimentSpec {
    pub kind: ExperimentKind,
    /// `(n, m)` for graphs; `(n, k)` for uniform instances with `k = 0`
    /// meaning every `k` in `1..=n/2`.
    pub sizes: Vec<(usize, usize)>,
    pub instances: usize,
    pub seed: u64,
    pub betas: Vec<u32>,
    pub jobs: usize,
    pub max_enumeration: u64,
    pub timing: bool,
}

/// Worker count: `MATROID_BIOPT_THREADS` wins over `flag`, which wins over
/// the number of available cores.
pub fn resolve_jobs(flag: Option<usize>) -> CliResult<usize> {
    if let Ok(raw) = std::env::var("MATROID_BIOPT_THREADS") {
        return raw
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Usage(format!("MATROID_BIOPT_THREADS must be a positive integer, got `{raw}`")));
    }
    match flag {
        Some(0) => Err(CliError::Usage("--jobs must be positive".into())),
        Some(n) => Ok(n),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn instance_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut master = rng_from_seed(seed);
    (0..count).map(|_| master.gen()).collect()
}

fn run_pool<T, F>(jobs: usize, items: usize, work: F) -> CliResult<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> CliResult<T> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| (0..items).into_par_iter().map(&work).collect())
}

fn ms(start: Instant) -> String {
    format!("{:.3}", start.elapsed().as_secs_f64() * 1e3)
}

/// Runs the experiment and returns CSV.
pub fn run(spec: &ExperimentSpec) -> CliResult<String> {
    if spec.instances == 0 {
        return Err(CliError::Usage("--instances must be positive".into()));
    }
    match spec.kind {
        ExperimentKind::GraphicBench => graphic_bench(spec),
        ExperimentKind::UniformBench => uniform_bench(spec),
        ExperimentKind::BetaSearch => beta_search(spec),
    }
}

/// Largest graph whose spanning trees graphic-bench counts; the exact
/// determinant gets slow beyond this.
pub const MAX_COUNT_VERTICES: usize = 100;

fn graphic_bench(spec: &ExperimentSpec) -> CliResult<String> {
    let mut tasks = Vec::new();
    for &(n, m) in &spec.sizes {
        for (i, s) in instance_seeds(spec.seed ^ (n as u64) << 32 ^ m as u64, spec.instances)
            .into_iter()
            .enumerate()
        {
            tasks.push((n, m, i, s));
        }
    }
    let rows = run_pool(spec.jobs, tasks.len(), |t| {
        let (n, m, i, s) = tasks[t];
        let inst = random_graphic(n, m, DEFAULT_C_MAX, &mut rng_from_seed(s))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let red = inst.costs().iter().filter(|cp| cp.b == 1).count();
        let bases = (n <= MAX_COUNT_VERTICES).then(|| count_bases(inst.matroid()));
        let start = Instant::now();
        let esa = run_esa(&inst)?;
        let esa_ms = ms(start);
        let front = esa.front.outcomes();
        let shown = bases.as_ref().map_or_else(|| "-".to_string(), |b| b.to_string());
        let mut row = format!("{n},{m},{i},{red},{shown},{}", front.len());
        let within = bases
            .as_ref()
            .is_some_and(|b| u64::try_from(b).is_ok_and(|b| b <= spec.max_enumeration));
        if within {
            let start = Instant::now();
            let ce = complete_enumeration(&inst);
            let ce_ms = ms(start);
            let _ = write!(row, ",{},{}", ce.efficient.len(), ce.front() == front);
            if spec.timing {
                let _ = write!(row, ",{esa_ms},{ce_ms}");
            }
        } else {
            row.push_str(",-,-");
            if spec.timing {
                let _ = write!(row, ",{esa_ms},-");
            }
        }
        Ok(row)
    })?;
    let mut out = String::from("n,m,instance,red,bases,nondominated,efficient,ce_agrees");
    if spec.timing {
        out.push_str(",esa_ms,ce_ms");
    }
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    Ok(out)
}

fn ks(n: usize, k: usize) -> Vec<usize> {
    if k == 0 {
        (1..=(n / 2).max(1)).collect()
    } else {
        vec![k]
    }
}

fn with_k(inst: &BicriteriaInstance<UniformMatroid>, k: usize) -> CliResult<BicriteriaInstance<UniformMatroid>> {
    let n = inst.len();
    let u = UniformMatroid::new(n, k).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(BicriteriaInstance::with_beta(u, inst.original_costs().to_vec(), inst.sense(), inst.beta())?)
}

fn uniform_bench(spec: &ExperimentSpec) -> CliResult<String> {
    let mut tasks = Vec::new();
    for &(n, k) in &spec.sizes {
        for (i, s) in instance_seeds(spec.seed ^ (n as u64) << 32, spec.instances).into_iter().enumerate() {
            for k in ks(n, k) {
                tasks.push((n, k, i, s));
            }
        }
    }
    let rows = run_pool(spec.jobs, tasks.len(), |t| {
        let (n, k, i, s) = tasks[t];
        let inst = random_uniform(n, 1, 1, &mut rng_from_seed(s)).map_err(|e| CliError::Usage(e.to_string()))?;
        let inst = with_k(&inst, k)?;
        let start = Instant::now();
        let esa = run_esa(&inst)?;
        let esa_ms = ms(start);
        let start = Instant::now();
        let dp = dp_uniform(&inst, DpOptions::default())?;
        let dp_ms = ms(start);
        let agrees = dp.distinct_outcomes() == esa.front.outcomes();
        let mut row = format!("{n},{k},{i},{},{},{agrees}", esa.front.len(), dp.len());
        if spec.timing {
            let _ = write!(row, ",{esa_ms},{dp_ms}");
        }
        Ok(row)
    })?;
    let mut out = String::from("n,k,instance,nondominated,efficient,dp_agrees");
    if spec.timing {
        out.push_str(",esa_ms,dp_ms");
    }
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    Ok(out)
}

/// Non-connected `(instance, k)` pairs and instances with at least one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NcCount {
    pub pairs: usize,
    pub instances: usize,
}

/// Draws `instances` random instances over `n` items with `b` in
/// `0..=beta` and checks every `k` in `1..=n/2`.
pub fn nc_search(n: usize, beta: u32, instances: usize, seed: u64, jobs: usize) -> CliResult<NcCount> {
    let seeds = instance_seeds(seed ^ u64::from(beta) << 32, instances);
    let per_instance = run_pool(jobs, instances, |i| {
        let base = random_uniform(n, 1, beta, &mut rng_from_seed(seeds[i]))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let mut nc = 0;
        for k in ks(n, 0) {
            let inst = with_k(&base, k)?;
            let eff = dp_uniform(&inst, DpOptions::default())?;
            if !adjacency_connected(&eff, k)?.connected {
                nc += 1;
            }
        }
        Ok(nc)
    })?;
    Ok(NcCount {
        pairs: per_instance.iter().sum(),
        instances: per_instance.iter().filter(|&&p| p > 0).count(),
    })
}

fn beta_search(spec: &ExperimentSpec) -> CliResult<String> {
    let n = match spec.sizes.as_slice() {
        [] => 20,
        [(n, _)] => *n,
        _ => return Err(CliError::Usage("beta-search takes a single size".into())),
    };
    let mut out = String::from("n,beta,instances,nc_pairs,nc_instances");
    if spec.timing {
        out.push_str(",ms");
    }
    out.push('\n');
    for &beta in &spec.betas {
        let start = Instant::now();
        let nc = nc_search(n, beta, spec.instances, spec.seed, spec.jobs)?;
        let _ = write!(out, "{n},{beta},{},{},{}", spec.instances, nc.pairs, nc.instances);
        if spec.timing {
            let _ = write!(out, ",{}", ms(start));
        }
        out.push('\n');
    }
    Ok(out)
}
