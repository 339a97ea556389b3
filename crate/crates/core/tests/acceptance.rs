//! Acceptance suite. Runs every criterion in sequence and prints one
//! PASS/FAIL line each; exits non-zero if any fails.
//!
//! `cargo test -p mlst-core --test acceptance [-- 3 5 7]` runs all criteria
//! or only the listed ones.

use std::collections::VecDeque;
use std::io::Write;
use std::time::Instant;

use mlst_core::evolutionary::{gsemo_with_observer, RunOptions};
use mlst_core::harness::{
    run_experiment, write_csv, Algorithm, BudgetFormula, BudgetSpec, ExperimentPlan,
    ExperimentResult, InitKind, InstanceSource, TargetSpec,
};
use mlst_core::heuristics::{
    era, local_search_2switch, modified_mvca, SpanningTree, TieBreakPolicy,
};
use mlst_core::instances::{gen_g1, gen_g2, gen_g3, gen_g_prime, gen_random_mlst_b, FamilyParams};
use mlst_core::oracle::verify_corollary_1;
use mlst_core::{component_count, scalar_fitness, LabelSubset, LabeledGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn plan(
    algorithm: Algorithm,
    instance: FamilyParams,
    trials: u64,
    budget: BudgetSpec,
    init: InitKind,
    targets: Vec<TargetSpec>,
    master_seed: u64,
) -> ExperimentPlan {
    ExperimentPlan {
        name: None,
        algorithm,
        instance: InstanceSource::Generated(instance),
        trials,
        budget,
        init,
        master_seed,
        targets,
        tie: TieBreakPolicy::LowestIndex,
        stop_at_target: true,
    }
}

fn formula(f: BudgetFormula) -> BudgetSpec {
    BudgetSpec::Formula {
        formula: f,
        c: None,
        cap: None,
    }
}

fn run(p: &ExperimentPlan) -> ExperimentResult {
    run_experiment(p, None).expect("experiment runs")
}

/// Trials whose best feasible solution has at most `max` labels.
fn hits(r: &ExperimentResult, max: usize) -> usize {
    r.rows
        .iter()
        .filter(|row| row.best_cardinality.is_some_and(|c| c <= max))
        .count()
}

fn ceil_ratio(r: f64, opt: usize) -> usize {
    (r * opt as f64 - 1e-9).ceil() as usize
}

/// Random parameters accepted by the MLST_b generator.
fn random_params(
    rng: &mut ChaCha8Rng,
    n_max: usize,
    k_max: usize,
    bs: &[usize],
) -> (usize, usize, usize, usize) {
    loop {
        let n = rng.gen_range(2..=n_max);
        let b = bs[rng.gen_range(0..bs.len())];
        let k = rng.gen_range(1..=k_max);
        let lo = (n - 1).max(k);
        let hi = (k * b).min(n * (n - 1) / 2);
        if lo <= hi {
            return (n, rng.gen_range(lo..=hi), k, b);
        }
    }
}

fn bfs_components(g: &LabeledGraph, x: &LabelSubset) -> usize {
    let n = g.node_count();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        if x.contains(e.label) {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    count
}

fn criterion_1() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut mismatches = 0;
    for _ in 0..1000 {
        let (n, m, k, b) = random_params(&mut rng, 20, 40, &[1, 2, 3, 4]);
        let g = gen_random_mlst_b(n, m, k, b, rng.gen()).unwrap().graph;
        let x = LabelSubset::random(k, &mut rng);
        if component_count(&g, &x).unwrap() != bfs_components(&g, &x) {
            mismatches += 1;
        }
    }
    let secs = started.elapsed().as_secs_f64();
    outcome(
        mismatches == 0 && secs < 5.0,
        format!("1000 pairs, {mismatches} mismatches, {secs:.2}s"),
    )
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut violations = 0;
    let mut ordered_pairs = 0;
    let instances = 10;
    for _ in 0..instances {
        let (n, m, k, b) = random_params(&mut rng, 20, 30, &[2, 3, 4]);
        let g = gen_random_mlst_b(n, m, k, b, rng.gen()).unwrap().graph;
        for _ in 0..10_000 {
            let x = LabelSubset::random(k, &mut rng);
            let y = LabelSubset::random(k, &mut rng);
            let (cx, cy) = (
                component_count(&g, &x).unwrap(),
                component_count(&g, &y).unwrap(),
            );
            if cx < cy {
                ordered_pairs += 1;
                if scalar_fitness(&g, &x).unwrap() >= scalar_fitness(&g, &y).unwrap() {
                    violations += 1;
                }
            }
        }
    }
    outcome(
        violations == 0,
        format!("{instances} instances x 10^4 pairs, {ordered_pairs} with c(x) < c(y), {violations} violations"),
    )
}

fn criterion_3() -> Outcome {
    let started = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for k in [8, 16, 32] {
        let r = run(&plan(
            Algorithm::OnePlusOneEa,
            FamilyParams::G1 { k },
            50,
            formula(BudgetFormula::KLnK),
            InitKind::Random,
            vec![TargetSpec::Optimum],
            303,
        ));
        let h = hits(&r, 2);
        pass &= h >= 48;
        parts.push(format!("k={k}: {h}/50"));
    }
    let secs = started.elapsed().as_secs_f64();
    pass &= secs < 60.0;
    outcome(pass, format!("{}, {secs:.2}s", parts.join(", ")))
}

fn criterion_4() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for k in [5, 10, 20] {
        let b = gen_g1(k).unwrap();
        let star = LabelSubset::from_indices(k, 0..k - 1);
        let tree = SpanningTree::from_labels(&b.graph, &star).unwrap();
        let a = era(&b.graph, &tree, TieBreakPolicy::LowestIndex).unwrap();
        let again = era(&b.graph, &tree, TieBreakPolicy::LowestIndex).unwrap();
        pass &= a.len() == k - 1 && a == again;
        parts.push(format!("k={k}: {} labels", a.len()));
    }
    outcome(pass, parts.join(", "))
}

fn criterion_5() -> Outcome {
    let k = 10;
    let b = gen_g2(k).unwrap();
    let trap = LabelSubset::from_indices(k, 0..k - 2);
    let ls = local_search_2switch(&b.graph, &trap, TieBreakPolicy::LowestIndex).unwrap();
    let ea = run(&plan(
        Algorithm::OnePlusOneEa,
        FamilyParams::G2 { k },
        50,
        formula(BudgetFormula::KSquared),
        InitKind::Random,
        vec![TargetSpec::Optimum],
        505,
    ));
    let gs = run(&plan(
        Algorithm::Gsemo,
        FamilyParams::G2 { k },
        50,
        formula(BudgetFormula::KSquaredLnK),
        InitKind::Random,
        vec![TargetSpec::Optimum],
        506,
    ));
    let (he, hg) = (hits(&ea, 2), hits(&gs, 2));
    outcome(
        ls.len() == k - 2 && ea.opt == Some(2) && he >= 48 && hg >= 48,
        format!(
            "2-switch {} labels, EA {he}/50 (budget {}), GSEMO {hg}/50 (budget {})",
            ls.len(),
            ea.budget,
            gs.budget
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (b, expected) in [(2, 3), (3, 11)] {
        let g = gen_g3(b).unwrap().graph;
        let x = modified_mvca(&g, TieBreakPolicy::LowestIndex);
        let again = modified_mvca(&g, TieBreakPolicy::LowestIndex);
        pass &= x.len() == expected && x.len() == g.label_count() && x == again;
        parts.push(format!("b={b}: {} labels", x.len()));
    }
    outcome(pass, parts.join(", "))
}

fn criterion_7() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for b in [2, 3] {
        for (alg, f, seed) in [
            (Algorithm::OnePlusOneEa, BudgetFormula::NK, 700 + b as u64),
            (Algorithm::Gsemo, BudgetFormula::KCubed, 710 + b as u64),
        ] {
            let r = run(&plan(
                alg,
                FamilyParams::G3 { b },
                50,
                formula(f),
                InitKind::Random,
                vec![TargetSpec::Optimum],
                seed,
            ));
            let opt = r.opt.unwrap();
            let h = hits(&r, opt);
            pass &= opt == (1..=b).product::<usize>() && h >= 48;
            parts.push(format!("b={b} {}: {h}/50", alg.name()));
        }
    }
    outcome(pass, parts.join(", "))
}

fn criterion_8() -> Outcome {
    let r = run(&plan(
        Algorithm::OnePlusOneEa,
        FamilyParams::GPrime { a: 6, k: 24 },
        100,
        BudgetSpec::Fixed(1_000_000),
        InitKind::KnownLocalOpt,
        Vec::new(),
        808,
    ));
    let stuck = r
        .records
        .iter()
        .filter(|rec| rec.improvements() == 0)
        .count();
    outcome(
        stuck >= 99,
        format!(
            "{stuck}/100 trials without improvement, {:.1}s",
            r.stats.wall_clock_seconds
        ),
    )
}

fn criterion_9() -> Outcome {
    let r = run(&plan(
        Algorithm::Gsemo,
        FamilyParams::GPrime { a: 4, k: 12 },
        50,
        formula(BudgetFormula::KSquaredLnK),
        InitKind::KnownLocalOpt,
        vec![TargetSpec::Optimum],
        909,
    ));
    let h = hits(&r, 4);
    outcome(
        r.opt == Some(4) && h >= 48,
        format!("{h}/50 (budget {})", r.budget),
    )
}

fn criterion_10() -> Outcome {
    let started = Instant::now();
    let mut graphs: Vec<(String, LabeledGraph)> = vec![
        ("G3(b=2)".into(), gen_g3(2).unwrap().graph),
        ("G3(b=3)".into(), gen_g3(3).unwrap().graph),
    ];
    for (i, p) in random_instances(10, 20, 14, 12, &[2, 3], 4)
        .iter()
        .enumerate()
    {
        graphs.push((format!("random #{i}"), p.generate().unwrap().graph));
    }
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for (name, g) in &graphs {
        match verify_corollary_1(g) {
            Ok(rep) => {
                checked += rep.checked;
                if !rep.holds() {
                    failures.push(format!("{name}: {:?}", rep.counterexample));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let secs = started.elapsed().as_secs_f64();
    outcome(
        failures.is_empty() && secs < 300.0,
        format!(
            "{} instances, {checked} solutions checked, {} failures {:?}, {secs:.2}s",
            graphs.len(),
            failures.len(),
            failures
        ),
    )
}

fn random_instances(
    seed: u64,
    count: usize,
    n_max: usize,
    k_max: usize,
    bs: &[usize],
    n_min: usize,
) -> Vec<FamilyParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let (n, m, k, b) = random_params(&mut rng, n_max, k_max, bs);
        if n < n_min {
            continue;
        }
        let p = FamilyParams::RandomB {
            n,
            m,
            k,
            b,
            seed: rng.gen(),
        };
        if p.generate().unwrap().graph.max_label_frequency() == b {
            out.push(p);
        }
    }
    out
}

fn criterion_11() -> Outcome {
    let mut worst = 0.0f64;
    let mut failures = 0;
    let instances = random_instances(11, 20, 12, 14, &[2], 6);
    for (i, p) in instances.iter().enumerate() {
        for (alg, budget) in [
            (
                Algorithm::OnePlusOneEa,
                formula(BudgetFormula::NPlusKCubedTimesK),
            ),
            (
                Algorithm::Gsemo,
                BudgetSpec::Formula {
                    formula: BudgetFormula::NKSquaredPlusKFifth,
                    c: None,
                    cap: Some(10_000_000),
                },
            ),
        ] {
            let r = run(&plan(
                alg,
                p.clone(),
                10,
                budget,
                InitKind::Random,
                vec![TargetSpec::Ratio(1.5)],
                1100 + i as u64,
            ));
            let opt = r.opt.unwrap();
            let max = ceil_ratio(1.5, opt);
            failures += 10 - hits(&r, max);
            for row in &r.rows {
                if let Some(c) = row.best_cardinality {
                    worst = worst.max(c as f64 / opt as f64);
                }
            }
        }
    }
    outcome(
        failures == 0,
        format!("20 instances x 2 algorithms x 10 trials, {failures} over ceil(1.5 OPT), worst ratio {worst:.3}"),
    )
}

fn criterion_12() -> Outcome {
    let mut failures = 0;
    let mut worst = 0.0f64;
    let instances = random_instances(12, 20, 30, 16, &[2, 3, 4], 10);
    for (i, p) in instances.iter().enumerate() {
        let r = run(&plan(
            Algorithm::Gsemo,
            p.clone(),
            10,
            formula(BudgetFormula::KCubedLnNPlusKSquaredLnK),
            InitKind::Random,
            vec![TargetSpec::RatioLnN(2.0)],
            1200 + i as u64,
        ));
        let opt = r.opt.unwrap();
        let max = ceil_ratio(2.0 * (r.n as f64).ln(), opt);
        failures += 10 - hits(&r, max);
        for row in &r.rows {
            if let Some(c) = row.best_cardinality {
                worst = worst.max(c as f64 / opt as f64);
            }
        }
    }
    outcome(
        failures == 0,
        format!(
            "20 instances x 10 trials, {failures} over ceil(2 ln(n) OPT), worst ratio {worst:.3}"
        ),
    )
}

fn criterion_13() -> Outcome {
    let graphs = [
        gen_g1(12).unwrap().graph,
        gen_g2(10).unwrap().graph,
        gen_g3(3).unwrap().graph,
        gen_g_prime(4, 12).unwrap().graph,
        gen_random_mlst_b(20, 40, 16, 3, 13).unwrap().graph,
    ];
    let per_run = 1_000_000 / graphs.len() as u64;
    let mut iterations = 0u64;
    let mut violations = Vec::new();
    let mut largest = 0;
    for (i, g) in graphs.iter().enumerate() {
        let opts = RunOptions::new(per_run, 1300 + i as u64);
        let k = g.label_count();
        gsemo_with_observer(g, &opts, |t, archive| {
            iterations += 1;
            largest = largest.max(archive.len());
            if let Err(e) = archive.check_invariants(k) {
                violations.push(format!("graph {i} iteration {t}: {e}"));
            }
        })
        .unwrap();
    }
    outcome(
        violations.is_empty() && iterations >= 1_000_000 && cfg!(debug_assertions),
        format!(
            "{iterations} iterations, largest archive {largest}, {} violations, debug assertions {}",
            violations.len(),
            if cfg!(debug_assertions) { "on" } else { "off" }
        ),
    )
}

fn criterion_14() -> Outcome {
    let plans = [
        plan(
            Algorithm::OnePlusOneEa,
            FamilyParams::G1 { k: 16 },
            20,
            formula(BudgetFormula::KLnK),
            InitKind::Random,
            vec![TargetSpec::Feasible, TargetSpec::Optimum],
            1400,
        ),
        plan(
            Algorithm::Gsemo,
            FamilyParams::RandomB {
                n: 15,
                m: 30,
                k: 12,
                b: 3,
                seed: 14,
            },
            20,
            formula(BudgetFormula::KCubed),
            InitKind::Random,
            vec![TargetSpec::Ratio(1.5)],
            1401,
        ),
    ];
    let csv = |p: &ExperimentPlan, jobs| {
        let mut buf = Vec::new();
        write_csv(&run_experiment(p, jobs).unwrap().rows, &mut buf).unwrap();
        buf
    };
    let mut pass = true;
    for p in &plans {
        let first = csv(p, None);
        pass &= first == csv(p, None) && first == csv(p, Some(1)) && first == csv(p, Some(3));
    }
    outcome(
        pass,
        format!(
            "{} plans rerun 3 times each (default, 1 and 3 workers)",
            plans.len()
        ),
    )
}

type Criterion = (u32, &'static str, fn() -> Outcome);

const CRITERIA: &[Criterion] = &[
    (1, "union-find matches BFS", criterion_1),
    (2, "fewer components, lower fitness", criterion_2),
    (3, "(1+1) EA solves G1", criterion_3),
    (4, "ERA trapped on G1", criterion_4),
    (5, "G2 trap and escape", criterion_5),
    (6, "MVCA worst case on G3", criterion_6),
    (7, "EA and GSEMO solve G3", criterion_7),
    (8, "(1+1) EA stuck on G'", criterion_8),
    (9, "GSEMO solves G'", criterion_9),
    (10, "2-switch improvement structure", criterion_10),
    (11, "(b+1)/2 ratio on MLST_2", criterion_11),
    (12, "GSEMO 2 ln n ratio", criterion_12),
    (13, "archive invariants", criterion_13),
    (14, "byte-identical reruns", criterion_14),
];

fn main() {
    // libtest flags such as --nocapture may be forwarded; keep only numbers.
    let selected: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut out = std::io::stdout();
    let mut failed = 0;
    let mut ran = 0;
    for &(id, name, f) in CRITERIA {
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        ran += 1;
        let started = Instant::now();
        let o = f();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        writeln!(
            out,
            "{verdict} criterion {id:2} {name}: {} [{:.1}s]",
            o.detail,
            started.elapsed().as_secs_f64()
        )
        .unwrap();
        out.flush().unwrap();
    }
    writeln!(out, "acceptance: {} of {ran} criteria passed", ran - failed).unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
