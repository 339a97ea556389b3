use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::evolutionary::{
    gsemo, one_plus_one_ea, ratio_threshold, Init, Milestones, RatioTarget, RunOptions, RunRecord,
    Termination, Tracker,
};
use crate::fitness::fitness_vector;
use crate::graph::{is_feasible, LabeledGraph};
use crate::heuristics::{
    era, local_search_2switch, modified_mvca, mvca_with_contraction, SpanningTree,
};
use crate::instances::{load_bundle, FamilyParams};
use crate::oracle::brute_force_opt;
use crate::rng::RngSeed;
use crate::subset::LabelSubset;

use super::plan::{Algorithm, ExperimentPlan, InitKind, InstanceSource, TargetSpec};
use super::stats::TrialStats;

/// An instance ready to run, with whatever is known about it.
#[derive(Clone, Debug)]
pub struct ResolvedInstance {
    pub name: String,
    pub graph: LabeledGraph,
    pub known_opt: Option<usize>,
    pub local_opt: Option<LabelSubset>,
}

fn family_name(p: &FamilyParams) -> String {
    match *p {
        FamilyParams::GPrime { a, k } => format!("g-prime-a{a}-k{k}"),
        FamilyParams::G1 { k } => format!("g1-k{k}"),
        FamilyParams::G2 { k } => format!("g2-k{k}"),
        FamilyParams::G3 { b } => format!("g3-b{b}"),
        FamilyParams::RandomB { n, m, k, b, seed } => {
            format!("random-n{n}-m{m}-k{k}-b{b}-s{seed}")
        }
    }
}

impl ResolvedInstance {
    pub fn resolve(source: &InstanceSource) -> Result<Self> {
        match source {
            InstanceSource::Generated(params) => {
                let b = params.generate()?;
                Ok(ResolvedInstance {
                    name: family_name(params),
                    graph: b.graph,
                    known_opt: b.known_opt.map(|o| o.value),
                    local_opt: b.known_local_opts.into_iter().next().map(|l| l.solution),
                })
            }
            InstanceSource::File { path } => {
                let (graph, meta) = load_bundle(path)?;
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                let (known_opt, local_opt) = match meta {
                    Some(m) => (
                        m.known_opt.map(|o| o.value),
                        m.known_local_opts.into_iter().next().map(|l| l.solution),
                    ),
                    None => (None, None),
                };
                Ok(ResolvedInstance {
                    name,
                    graph,
                    known_opt,
                    local_opt,
                })
            }
        }
    }
}

/// One CSV row. Field names are the CSV header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRow {
    pub trial: u64,
    pub seed: u64,
    pub instance: String,
    pub algorithm: String,
    pub budget: u64,
    pub iterations_to_feasible: Option<u64>,
    pub iterations_to_ratio: Option<u64>,
    pub iterations_to_opt: Option<u64>,
    pub best_cardinality: Option<usize>,
    pub terminated_by: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentResult {
    pub plan: ExperimentPlan,
    pub instance: String,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub budget: u64,
    pub opt: Option<usize>,
    pub stats: TrialStats,
    pub rows: Vec<TrialRow>,
    pub records: Vec<RunRecord>,
}

/// `|solution| <= ceil(r * opt)` for a feasible solution.
pub fn check_ratio(g: &LabeledGraph, solution: &LabelSubset, opt: usize, r: f64) -> Result<bool> {
    if !is_feasible(g, solution)? {
        return Err(Error::InfeasibleSolution);
    }
    Ok(solution.len() <= ratio_threshold(r, opt))
}

struct Setup<'a> {
    plan: &'a ExperimentPlan,
    inst: &'a ResolvedInstance,
    budget: u64,
    milestones: Milestones,
    stop: Option<usize>,
}

/// Runs every trial of `plan`, on `jobs` worker threads (all cores when
/// `None`). Trial `i` uses the seed derived from `(master_seed, i)`, so the
/// rows do not depend on `jobs`.
pub fn run_experiment(plan: &ExperimentPlan, jobs: Option<usize>) -> Result<ExperimentResult> {
    plan.validate()?;
    let started = Instant::now();
    let inst = ResolvedInstance::resolve(&plan.instance)?;
    let g = &inst.graph;
    let (n, k) = (g.node_count(), g.label_count());
    let budget = plan.budget.evaluate(n, k);
    if plan.algorithm.is_evolutionary() && budget == 0 {
        return Err(Error::InvalidPlan(
            "budget evaluates to 0 iterations".into(),
        ));
    }

    let needs_opt = plan
        .targets
        .iter()
        .any(|t| !matches!(t, TargetSpec::Feasible));
    let opt = match (needs_opt, inst.known_opt) {
        (false, known) => known,
        (true, Some(o)) => Some(o),
        (true, None) => Some(brute_force_opt(g, None)?.opt_value),
    };

    let mut milestones = Milestones::default();
    let mut targets = Vec::new();
    for &t in &plan.targets {
        let (max_labels, label) = match t {
            TargetSpec::Feasible => (k, "feasible".to_string()),
            TargetSpec::Optimum => {
                let o = opt.expect("computed above");
                milestones.optimum = Some(o);
                (o, "optimum".to_string())
            }
            TargetSpec::Ratio(_) | TargetSpec::RatioLnN(_) => {
                let r = t.ratio_value(n).expect("ratio target");
                let rt = RatioTarget::new(r, opt.expect("computed above"));
                milestones.ratio = Some(rt);
                let label = match t {
                    TargetSpec::RatioLnN(c) => format!("ratio {c} ln n"),
                    _ => format!("ratio {r}"),
                };
                (rt.max_labels, label)
            }
        };
        targets.push((t, Some(max_labels), label));
    }
    let stop = if plan.stop_at_target {
        targets.iter().filter_map(|t| t.1).min()
    } else {
        None
    };

    let setup = Setup {
        plan,
        inst: &inst,
        budget,
        milestones,
        stop,
    };
    let run_all = || -> Result<Vec<(RunRecord, TrialRow)>> {
        (0..plan.trials)
            .into_par_iter()
            .map(|i| run_trial(&setup, i))
            .collect()
    };
    let pairs = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidPlan(format!("cannot start {j} workers: {e}")))?
            .install(run_all)?,
        None => run_all()?,
    };
    let (records, rows): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    let stats = TrialStats::compute(&rows, &targets, started.elapsed().as_secs_f64());
    Ok(ExperimentResult {
        plan: plan.clone(),
        instance: inst.name.clone(),
        n,
        k,
        m: g.edge_count(),
        budget,
        opt,
        stats,
        rows,
        records,
    })
}

fn run_trial(s: &Setup, trial: u64) -> Result<(RunRecord, TrialRow)> {
    let g = &s.inst.graph;
    let k = g.label_count();
    let seed = RngSeed(s.plan.master_seed).derive(trial);
    let init = match s.plan.init {
        InitKind::Random => Init::Random,
        InitKind::AllZeros => Init::Given(LabelSubset::empty(k)),
        InitKind::AllOnes => Init::Given(LabelSubset::full(k)),
        InitKind::KnownLocalOpt => Init::Given(s.inst.local_opt.clone().ok_or_else(|| {
            Error::InvalidPlan(format!(
                "instance {} has no known local optimum",
                s.inst.name
            ))
        })?),
    };
    let opts = RunOptions {
        budget: s.budget,
        seed,
        init,
        target: s.stop,
        milestones: s.milestones.clone(),
        accept_equal: false,
    };
    let record = match s.plan.algorithm {
        Algorithm::OnePlusOneEa => one_plus_one_ea(g, &opts)?,
        Algorithm::Gsemo => gsemo(g, &opts)?.record,
        alg => {
            let tie = s.plan.tie;
            let start = || opts.init.materialize(g, &mut seed.rng());
            let solution = match alg {
                Algorithm::Mvca => modified_mvca(g, tie),
                Algorithm::MvcaContract => mvca_with_contraction(g, tie),
                Algorithm::Ls2Switch => local_search_2switch(g, &start()?, tie)?,
                Algorithm::Era => era(g, &SpanningTree::from_labels(g, &start()?)?, tie)?,
                Algorithm::OnePlusOneEa | Algorithm::Gsemo => unreachable!(),
            };
            heuristic_record(g, alg, &opts, solution)?
        }
    };

    // Re-evaluate the reported best before counting anything it claims.
    if fitness_vector(g, &record.best_solution)? != record.best_fitness {
        return Err(Error::PreconditionViolated(format!(
            "trial {trial}: recorded fitness does not match re-evaluation"
        )));
    }
    let best = record.best_cardinality();
    let within = |max: Option<usize>| best.is_some_and(|b| max.is_none_or(|m| b <= m));
    let row = TrialRow {
        trial,
        seed: seed.0,
        instance: s.inst.name.clone(),
        algorithm: s.plan.algorithm.name().into(),
        budget: s.budget,
        iterations_to_feasible: record.iterations_to_feasible().filter(|_| within(None)),
        iterations_to_ratio: record
            .iterations_to_ratio()
            .filter(|_| within(s.milestones.ratio.map(|r| r.max_labels))),
        iterations_to_opt: record
            .iterations_to_optimum()
            .filter(|_| within(s.milestones.optimum)),
        best_cardinality: best,
        terminated_by: record.terminated_by.as_str().into(),
    };
    Ok((record, row))
}

fn heuristic_record(
    g: &LabeledGraph,
    alg: Algorithm,
    opts: &RunOptions,
    solution: LabelSubset,
) -> Result<RunRecord> {
    let fitness = fitness_vector(g, &solution)?;
    let mut tracker = Tracker::new(opts.milestones.clone());
    tracker.observe(0, fitness);
    Ok(RunRecord {
        algorithm: alg.name().into(),
        seed: opts.seed,
        budget: opts.budget,
        iterations_used: 0,
        best_scalar: fitness.scalar(g.label_count()),
        best_fitness: fitness,
        best_solution: solution,
        events: tracker.into_events(),
        terminated_by: Termination::Converged,
    })
}
