use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;

use super::run::{ExperimentResult, TrialRow};

pub const CSV_HEADER: &str = "trial,seed,instance,algorithm,budget,iterations_to_feasible,iterations_to_ratio,iterations_to_opt,best_cardinality,terminated_by";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExportFormat {
    Csv,
    /// Statistics plus every run record, as JSON.
    Json,
}

/// Header plus one row per trial, LF line endings, empty cells for
/// unreached targets.
pub fn write_csv<W: Write>(rows: &[TrialRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    if rows.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    w.flush()?;
    Ok(())
}

pub fn export(
    result: &ExperimentResult,
    path: impl AsRef<Path>,
    format: ExportFormat,
) -> Result<()> {
    let path = path.as_ref();
    match format {
        ExportFormat::Csv => {
            let mut buf = Vec::new();
            write_csv(&result.rows, &mut buf)?;
            fs::write(path, buf)?;
        }
        ExportFormat::Json => {
            let mut json = serde_json::to_string_pretty(result)?;
            json.push('\n');
            fs::write(path, json)?;
        }
    }
    Ok(())
}

/// Aligned plain-text summary of an experiment.
pub fn summary_text(r: &ExperimentResult) -> String {
    let mut s = String::new();
    let opt = r.opt.map_or("unknown".to_string(), |o| o.to_string());
    let lines = [
        ("plan", r.plan.name.clone().unwrap_or_else(|| "-".into())),
        ("algorithm", r.plan.algorithm.name().to_string()),
        ("instance", r.instance.clone()),
        ("n k m", format!("{} {} {}", r.n, r.k, r.m)),
        ("opt", opt),
        ("budget", r.budget.to_string()),
        ("trials", r.stats.trials.to_string()),
        ("master seed", r.plan.master_seed.to_string()),
    ];
    for (key, value) in lines {
        writeln!(s, "{key:<14}{value}").unwrap();
    }
    writeln!(s).unwrap();
    writeln!(
        s,
        "{:<16}{:>8}{:>12}{:>12}{:>12}{:>12}{:>12}",
        "target", "labels", "successes", "min", "median", "p95", "max"
    )
    .unwrap();
    for t in &r.stats.targets {
        let labels = t.max_labels.map_or("-".into(), |m| format!("<={m}"));
        let succ = format!("{}/{}", t.successes, r.stats.trials);
        let q = |f: fn(&super::Quantiles) -> u64| {
            t.iterations
                .as_ref()
                .map_or("-".into(), |q| f(q).to_string())
        };
        writeln!(
            s,
            "{:<16}{:>8}{:>12}{:>12}{:>12}{:>12}{:>12}",
            t.target,
            labels,
            succ,
            q(|q| q.min),
            q(|q| q.median),
            q(|q| q.p95),
            q(|q| q.max)
        )
        .unwrap();
    }
    writeln!(s).unwrap();
    let cards: Vec<String> = r
        .stats
        .best_cardinality
        .iter()
        .map(|(c, n)| format!("{c}:{n}"))
        .collect();
    writeln!(
        s,
        "{:<14}{}",
        "best |X|",
        if cards.is_empty() {
            "-".into()
        } else {
            cards.join(" ")
        }
    )
    .unwrap();
    writeln!(s, "{:<14}{}", "infeasible", r.stats.infeasible_trials).unwrap();
    writeln!(s, "{:<14}{:.3}", "wall clock s", r.stats.wall_clock_seconds).unwrap();
    s
}
