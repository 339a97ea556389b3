//! The `mlst` command line. Each subcommand parses flags and calls the
//! library; exit codes are 0 on success, 1 on a domain error or failed check,
//! 2 on a usage error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::evolutionary::{gsemo, gsemo_with_observer, one_plus_one_ea, RunOptions, RunRecord};
use crate::fitness::fitness_vector;
use crate::graph::{is_feasible, LabeledGraph};
use crate::harness::{export, run_experiment, summary_text, ExperimentPlan, ExportFormat};
use crate::heuristics::{
    era, is_h_switch_local_optimum, local_search_2switch, modified_mvca, mvca_with_contraction,
    SpanningTree, TieBreakPolicy,
};
use crate::instances::{
    format_instance, gen_g1, gen_g2, gen_g3, gen_g_prime, gen_random_mlst_b, load_bundle,
    save_bundle, InstanceMetadata,
};
use crate::oracle::{brute_force_opt, verify_component_halving, verify_corollary_1};
use crate::subset::LabelSubset;

#[derive(Debug, Parser)]
#[command(
    name = "mlst",
    version,
    about = "Minimum label spanning tree solvers and experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated instance and its metadata sidecar.
    Generate(GenerateArgs),
    /// Run one algorithm on an instance file.
    Solve(SolveArgs),
    /// Compute the optimum by exhaustive enumeration.
    Oracle(OracleArgs),
    /// Run an exhaustive structural check.
    Verify(VerifyArgs),
    /// Run an experiment plan and write CSV, JSON and a summary.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    GPrime,
    G1,
    G2,
    G3,
    RandomB,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    pub family: FamilyArg,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Instance file to write; the text goes to stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Ea,
    Gsemo,
    Mvca,
    MvcaContract,
    Ls2,
    Era,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InitArg {
    Random,
    /// The known local optimum from the metadata sidecar.
    Local,
    Zeros,
    Ones,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TieArg {
    Lowest,
    Highest,
    /// Random priority order drawn from `--seed`.
    Random,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub algorithm: AlgorithmArg,
    pub instance: PathBuf,
    /// Iterations for `ea` and `gsemo`.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Defaults to `random` for `ea`/`gsemo` and `ones` for `ls2`/`era`.
    #[arg(long, value_enum)]
    pub init: Option<InitArg>,
    #[arg(long, value_enum, default_value = "lowest")]
    pub tie: TieArg,
    /// Stop once a feasible solution with at most this many labels is found.
    #[arg(long)]
    pub target: Option<usize>,
    /// Write the run record as JSON.
    #[arg(long)]
    pub record: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub instance: PathBuf,
    #[arg(long, default_value_t = crate::oracle::DEFAULT_K_LIMIT)]
    pub k_limit: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Corollary1,
    Halving,
    G2LocalOpt,
    Archive,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub check: CheckArg,
    pub instance: PathBuf,
    /// `halving`: starting subset as a 0/1 string (default: no labels).
    #[arg(long)]
    pub subset: Option<String>,
    /// `archive`: GSEMO iterations.
    #[arg(long, default_value_t = 100_000)]
    pub budget: u64,
    /// `archive`: GSEMO seed.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    pub plan: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    /// Master seed, required; replaces `master_seed` from the plan file.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub jobs: Option<usize>,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPlan(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Solve(a) => solve(a),
        Command::Oracle(a) => oracle(a),
        Command::Verify(a) => verify(a),
        Command::Experiment(a) => experiment(a),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{family} needs --{flag}")))
}

fn generate(a: GenerateArgs) -> CliResult {
    let bundle = match a.family {
        FamilyArg::GPrime => gen_g_prime(need(a.a, "a", "g-prime")?, need(a.k, "k", "g-prime")?)?,
        FamilyArg::G1 => gen_g1(need(a.k, "k", "g1")?)?,
        FamilyArg::G2 => gen_g2(need(a.k, "k", "g2")?)?,
        FamilyArg::G3 => gen_g3(need(a.b, "b", "g3")?)?,
        FamilyArg::RandomB => gen_random_mlst_b(
            need(a.n, "n", "random-b")?,
            need(a.m, "m", "random-b")?,
            need(a.k, "k", "random-b")?,
            need(a.b, "b", "random-b")?,
            need(a.seed, "seed", "random-b")?,
        )?,
    };
    let g = &bundle.graph;
    match &a.output {
        Some(path) => {
            save_bundle(&bundle, path)?;
            println!(
                "n={} k={} m={}",
                g.node_count(),
                g.label_count(),
                g.edge_count()
            );
            match &bundle.known_opt {
                Some(o) => println!("opt={} witness={}", o.value, o.witness),
                None => println!("opt=unknown"),
            }
        }
        None => print!("{}", format_instance(g)),
    }
    Ok(())
}

fn load(path: &Path) -> std::result::Result<(LabeledGraph, Option<InstanceMetadata>), Failure> {
    Ok(load_bundle(path)?)
}

fn tie_policy(tie: TieArg, seed: Option<u64>) -> std::result::Result<TieBreakPolicy, Failure> {
    Ok(match tie {
        TieArg::Lowest => TieBreakPolicy::LowestIndex,
        TieArg::Highest => TieBreakPolicy::HighestIndex,
        TieArg::Random => TieBreakPolicy::SeededRandom(
            seed.ok_or_else(|| Failure::Usage("--tie random needs --seed".into()))?,
        ),
    })
}

fn solve(a: SolveArgs) -> CliResult {
    let (g, meta) = load(&a.instance)?;
    let k = g.label_count();
    let evolutionary = matches!(a.algorithm, AlgorithmArg::Ea | AlgorithmArg::Gsemo);
    let init = a.init.unwrap_or(if evolutionary {
        InitArg::Random
    } else {
        InitArg::Ones
    });
    let uses_randomness = evolutionary || init == InitArg::Random || a.tie == TieArg::Random;
    if uses_randomness && a.seed.is_none() {
        return Err(Failure::Usage(format!(
            "{} with these options is randomized and needs --seed",
            a.algorithm
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
        )));
    }
    let seed = a.seed.unwrap_or(0);
    let tie = tie_policy(a.tie, a.seed)?;
    let start = match init {
        InitArg::Random => None,
        InitArg::Zeros => Some(LabelSubset::empty(k)),
        InitArg::Ones => Some(LabelSubset::full(k)),
        InitArg::Local => Some(
            meta.and_then(|m| m.known_local_opts.into_iter().next())
                .map(|l| l.solution)
                .ok_or_else(|| {
                    Failure::Domain(format!(
                        "{} has no metadata sidecar with a known local optimum",
                        a.instance.display()
                    ))
                })?,
        ),
    };
    let heuristic_start = || -> Result<LabelSubset> {
        match &start {
            Some(x) => Ok(x.clone()),
            None => Ok(LabelSubset::random(k, &mut crate::rng::RngSeed(seed).rng())),
        }
    };

    let (solution, record): (LabelSubset, Option<RunRecord>) = match a.algorithm {
        AlgorithmArg::Ea | AlgorithmArg::Gsemo => {
            let budget = a
                .budget
                .ok_or_else(|| Failure::Usage("ea and gsemo need --budget".into()))?;
            let mut opts = RunOptions::new(budget, seed);
            if let Some(x) = start {
                opts = opts.with_init(x);
            }
            if let Some(t) = a.target {
                opts = opts.with_target(t);
            }
            let rec = if a.algorithm == AlgorithmArg::Ea {
                one_plus_one_ea(&g, &opts)?
            } else {
                gsemo(&g, &opts)?.record
            };
            (rec.best_solution.clone(), Some(rec))
        }
        AlgorithmArg::Mvca => (modified_mvca(&g, tie), None),
        AlgorithmArg::MvcaContract => (mvca_with_contraction(&g, tie), None),
        AlgorithmArg::Ls2 => (local_search_2switch(&g, &heuristic_start()?, tie)?, None),
        AlgorithmArg::Era => {
            let tree = SpanningTree::from_labels(&g, &heuristic_start()?)?;
            (era(&g, &tree, tie)?, None)
        }
    };

    let fv = fitness_vector(&g, &solution)?;
    println!("solution {solution}");
    println!("labels {}", join(&solution.label_ids()));
    println!("cardinality {}", solution.len());
    println!("components {}", fv.components);
    println!("feasible {}", fv.is_feasible());
    if let Some(rec) = &record {
        println!("iterations {}", rec.iterations_used);
        if let Some(t) = rec.iterations_to_feasible() {
            println!("first_feasible {t}");
        }
        println!("terminated_by {}", rec.terminated_by.as_str());
        if let Some(path) = &a.record {
            write_json(path, rec)?;
        }
    } else if a.record.is_some() {
        return Err(Failure::Usage("--record applies to ea and gsemo".into()));
    }
    Ok(())
}

fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut json = serde_json::to_string_pretty(value)?;
    json.push('\n');
    fs::write(path, json)?;
    Ok(())
}

fn oracle(a: OracleArgs) -> CliResult {
    let (g, _) = load(&a.instance)?;
    let r = brute_force_opt(&g, Some(a.k_limit))?;
    println!("opt {}", r.opt_value);
    println!("witness {}", r.witness);
    println!("labels {}", join(&r.witness.label_ids()));
    println!("subsets_examined {}", r.subsets_examined);
    Ok(())
}

fn verdict(pass: bool) -> CliResult {
    if pass {
        println!("PASS");
        Ok(())
    } else {
        println!("FAIL");
        Err(Failure::Domain("check failed".into()))
    }
}

fn verify(a: VerifyArgs) -> CliResult {
    let (g, meta) = load(&a.instance)?;
    let k = g.label_count();
    match a.check {
        CheckArg::Corollary1 => {
            let rep = verify_corollary_1(&g)?;
            println!(
                "opt {} b {} checked {}",
                rep.opt_value, rep.max_label_frequency, rep.checked
            );
            if let Some(x) = &rep.counterexample {
                println!("counterexample {x}");
            }
            verdict(rep.holds())
        }
        CheckArg::Halving => {
            let x = match &a.subset {
                Some(s) => s
                    .parse::<LabelSubset>()
                    .map_err(|e| Failure::Usage(format!("--subset: {e}")))?,
                None => LabelSubset::empty(k),
            };
            let rep = verify_component_halving(&g, &x, None)?;
            println!(
                "components {} opt {} bound {}",
                rep.components_before, rep.opt_value, rep.bound
            );
            if let Some(l) = rep.witness {
                println!(
                    "witness_label {} components_after {}",
                    l + 1,
                    rep.components_after
                );
            }
            verdict(rep.holds())
        }
        CheckArg::G2LocalOpt => {
            let local = meta
                .and_then(|m| m.known_local_opts.into_iter().next())
                .map(|l| l.solution)
                .unwrap_or_else(|| LabelSubset::from_indices(k, 0..k.saturating_sub(2)));
            let opt = brute_force_opt(&g, None)?;
            let feasible = is_feasible(&g, &local)?;
            let locally_optimal = feasible && is_h_switch_local_optimum(&g, &local, 2)?;
            println!("local {local} cardinality {}", local.len());
            println!("opt {} witness {}", opt.opt_value, opt.witness);
            println!("feasible {feasible} two_switch_local_optimum {locally_optimal}");
            verdict(opt.opt_value == 2 && locally_optimal)
        }
        CheckArg::Archive => {
            let seed = a
                .seed
                .ok_or_else(|| Failure::Usage("verify archive needs --seed".into()))?;
            let mut violation = None;
            let mut max_len = 0;
            gsemo_with_observer(&g, &RunOptions::new(a.budget, seed), |t, archive| {
                max_len = max_len.max(archive.len());
                if violation.is_none() {
                    if let Err(e) = archive.check_invariants(k) {
                        violation = Some(format!("iteration {t}: {e}"));
                    }
                }
            })?;
            println!("iterations {} max_archive_size {max_len}", a.budget);
            if let Some(v) = &violation {
                println!("violation {v}");
            }
            verdict(violation.is_none())
        }
    }
}

fn experiment(a: ExperimentArgs) -> CliResult {
    let mut plan = ExperimentPlan::load(&a.plan)?;
    plan.master_seed = a
        .seed
        .ok_or_else(|| Failure::Usage("experiment needs --seed".into()))?;
    let result = run_experiment(&plan, a.jobs)?;
    fs::create_dir_all(&a.output).map_err(Error::from)?;
    export(&result, a.output.join("results.csv"), ExportFormat::Csv)?;
    export(&result, a.output.join("results.json"), ExportFormat::Json)?;
    let summary = summary_text(&result);
    fs::write(a.output.join("summary.txt"), &summary).map_err(Error::from)?;
    print!("{summary}");
    Ok(())
}
