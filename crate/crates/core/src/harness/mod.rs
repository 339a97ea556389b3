//! Seeded multi-trial experiments, their statistics and exports.

mod export;
mod plan;
mod run;
mod scaling;
mod stats;

pub use export::{export, summary_text, write_csv, ExportFormat, CSV_HEADER};
pub use plan::{
    Algorithm, BudgetFormula, BudgetSpec, ExperimentPlan, InitKind, InstanceSource, TargetSpec,
    DEFAULT_BUDGET_CONSTANT,
};
pub use run::{check_ratio, run_experiment, ExperimentResult, ResolvedInstance, TrialRow};
pub use scaling::{fit_scaling, ScalingModel, ScalingPoint, ScalingReport};
pub use stats::{Quantiles, TargetStats, TrialStats};
