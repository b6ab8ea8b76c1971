use std::time::Instant;

use matroid_biopt::oracles::{
    adjacency_connected, complete_enumeration, count_bases_of, dp_uniform, naive_minimal_swap_solver,
    pareto_filter, Connectivity, Dominance, DpOptions, DpSelection, EfficientSet,
};
use matroid_biopt::{run_esa, Basis, BicriteriaInstance, Matroid, OutcomeVector, Swap};

use crate::error::{CliError, CliResult};
use crate::format::InstanceFile;
use crate::report::{Counts, PointRecord, Report, SwapRecord};

/// Bases complete enumeration may visit unless raised on the command line.
pub const DEFAULT_MAX_ENUMERATION: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    /// Efficient swap algorithm.
    Esa,
    /// Complete enumeration of all bases.
    Ce,
    /// Dynamic programming (uniform matroids only).
    Dp,
    /// Repeated minimal swaps found by scanning every exchange.
    Naive,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Esa => "esa",
            Algorithm::Ce => "ce",
            Algorithm::Dp => "dp",
            Algorithm::Naive => "naive",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    pub max_enumeration: u64,
    /// For `dp`: report the `c`-optimal bases of every `b`-level whose
    /// optimum is not strictly dominated, instead of the efficient set.
    pub level_optimal: bool,
    pub timing: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            algorithm: Algorithm::Esa,
            max_enumeration: DEFAULT_MAX_ENUMERATION,
            level_optimal: false,
            timing: true,
        }
    }
}

pub fn solve(file: &InstanceFile, opts: &SolveOptions) -> CliResult<Report> {
    match file {
        InstanceFile::Graphic(inst) => solve_instance(inst, opts),
        InstanceFile::Uniform(inst) => solve_instance(inst, opts),
    }
}

fn point<M: Matroid>(inst: &BicriteriaInstance<M>, working: OutcomeVector, basis: &Basis) -> PointRecord {
    let o = inst.to_original(working);
    PointRecord {
        c: o.c,
        b: o.b,
        basis: basis.elements().iter().map(|e| e.index()).collect(),
    }
}

fn swap_record<M: Matroid>(inst: &BicriteriaInstance<M>, s: &Swap) -> SwapRecord {
    let costs = inst.original_costs();
    SwapRecord {
        out: s.leaving.index(),
        inc: s.entering.index(),
        cost: costs[s.entering.index()].c as i64 - costs[s.leaving.index()].c as i64,
    }
}

fn require_binary<M: Matroid>(inst: &BicriteriaInstance<M>, alg: Algorithm) -> CliResult<()> {
    if inst.is_binary() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--algorithm {} needs binary b (beta = 1), this instance has beta = {}",
            alg.name(),
            inst.beta()
        )))
    }
}

/// Refuses complete enumeration when the instance has too many bases.
pub fn check_budget<M: Matroid>(inst: &BicriteriaInstance<M>, max: u64) -> CliResult<u64> {
    let count = count_bases_of(inst.matroid())
        .ok_or_else(|| CliError::Usage("cannot bound the number of bases".into()))?;
    match u64::try_from(&count) {
        Ok(n) if n <= max => Ok(n),
        _ => Err(CliError::Usage(format!(
            "the instance has {count} bases, more than --max-enumeration {max}"
        ))),
    }
}

fn efficient_records<M: Matroid>(inst: &BicriteriaInstance<M>, eff: &EfficientSet) -> (Vec<PointRecord>, Vec<PointRecord>) {
    let all: Vec<PointRecord> = eff.iter().map(|(&o, b)| point(inst, o, b)).collect();
    // the first basis of every non-dominated outcome represents it
    let entries = eff.iter().map(|(&o, b)| (o, b)).collect();
    let mut front: Vec<PointRecord> = Vec::new();
    let mut last = None;
    for (o, b) in pareto_filter(entries, Dominance::Pareto) {
        if last != Some(o) {
            front.push(point(inst, o, b));
            last = Some(o);
        }
    }
    (front, all)
}

fn solve_instance<M: Matroid>(inst: &BicriteriaInstance<M>, opts: &SolveOptions) -> CliResult<Report> {
    let mut counts = Counts {
        elements: inst.len(),
        rank: inst.rank(),
        ..Counts::default()
    };
    let start = Instant::now();
    let (front, swaps, efficient) = match opts.algorithm {
        Algorithm::Esa => {
            require_binary(inst, opts.algorithm)?;
            let res = run_esa(inst)?;
            let front = res.front.points().iter().map(|p| point(inst, p.outcome, &p.basis)).collect();
            let swaps = res.applied_swaps().iter().map(|s| swap_record(inst, s)).collect();
            (front, swaps, None)
        }
        Algorithm::Naive => {
            require_binary(inst, opts.algorithm)?;
            let run = naive_minimal_swap_solver(inst)?;
            let skip = run.swaps.iter().take_while(|s| s.cost <= 0).count();
            let front = run.bases[skip..]
                .iter()
                .zip(&run.outcomes[skip..])
                .map(|(b, &o)| point(inst, o, b))
                .collect();
            let swaps = run.swaps[skip..].iter().map(|s| swap_record(inst, s)).collect();
            (front, swaps, None)
        }
        Algorithm::Ce => {
            check_budget(inst, opts.max_enumeration)?;
            let ce = complete_enumeration(inst);
            counts.bases = Some(ce.total);
            let (front, all) = efficient_records(inst, &ce.efficient);
            (front, Vec::new(), Some(all))
        }
        Algorithm::Dp => {
            let options = DpOptions {
                selection: if opts.level_optimal {
                    DpSelection::LevelOptimal
                } else {
                    DpSelection::Efficient
                },
                all_representatives: true,
            };
            let eff = dp_uniform(inst, options).map_err(|e| CliError::Usage(e.to_string()))?;
            let (front, all) = efficient_records(inst, &eff);
            (front, Vec::new(), Some(all))
        }
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    counts.nondominated = front.len();
    counts.efficient = efficient.as_ref().map(Vec::len);
    Ok(Report {
        algorithm: opts.algorithm.name(),
        sense: inst.sense().to_string(),
        front,
        swaps,
        efficient,
        timing_ms: opts.timing.then_some(elapsed),
        counts,
    })
}

/// Number of bases as a decimal string.
pub fn count(file: &InstanceFile) -> String {
    let n = match file {
        InstanceFile::Graphic(inst) => count_bases_of(inst.matroid()),
        InstanceFile::Uniform(inst) => count_bases_of(inst.matroid()),
    };
    n.expect("graphic and uniform matroids have closed-form counts").to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub components: usize,
    pub efficient: usize,
    pub nondominated: usize,
}

/// Connectivity of the complete efficient set under single exchanges.
pub fn connected(file: &InstanceFile, max_enumeration: u64) -> CliResult<ConnectivityReport> {
    let (eff, rank) = match file {
        InstanceFile::Uniform(inst) => (dp_uniform(inst, DpOptions::default())?, inst.rank()),
        InstanceFile::Graphic(inst) => {
            check_budget(inst, max_enumeration)?;
            (complete_enumeration(inst).efficient, inst.rank())
        }
    };
    let Connectivity { connected, components } = adjacency_connected(&eff, rank)?;
    Ok(ConnectivityReport {
        connected,
        components,
        efficient: eff.len(),
        nondominated: eff.distinct_outcomes().len(),
    })
}
