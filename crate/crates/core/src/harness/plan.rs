use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heuristics::TieBreakPolicy;
use crate::instances::FamilyParams;

pub const DEFAULT_BUDGET_CONSTANT: f64 = 200.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "one-plus-one-ea")]
    OnePlusOneEa,
    #[serde(rename = "gsemo")]
    Gsemo,
    #[serde(rename = "mvca")]
    Mvca,
    #[serde(rename = "mvca-contract")]
    MvcaContract,
    #[serde(rename = "ls-2switch")]
    Ls2Switch,
    #[serde(rename = "era")]
    Era,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::OnePlusOneEa => "one-plus-one-ea",
            Algorithm::Gsemo => "gsemo",
            Algorithm::Mvca => "mvca",
            Algorithm::MvcaContract => "mvca-contract",
            Algorithm::Ls2Switch => "ls-2switch",
            Algorithm::Era => "era",
        }
    }

    pub fn is_evolutionary(self) -> bool {
        matches!(self, Algorithm::OnePlusOneEa | Algorithm::Gsemo)
    }
}

/// Either a generator call or an instance file (with optional sidecar).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceSource {
    File { path: PathBuf },
    Generated(FamilyParams),
}

/// Budget predictors. `n` is the node count, `k` the label count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BudgetFormula {
    /// `k ln k`
    KLnK,
    /// `k^2`
    KSquared,
    /// `n k`
    NK,
    /// `k^2 ln k`
    KSquaredLnK,
    /// `k^3`
    KCubed,
    /// `(n + k^3) k`
    NPlusKCubedTimesK,
    /// `n k^2 + k^5`
    NKSquaredPlusKFifth,
    /// `k^3 ln n + k^2 ln k`
    KCubedLnNPlusKSquaredLnK,
}

impl BudgetFormula {
    pub fn eval(self, n: usize, k: usize) -> f64 {
        let (n, k) = (n as f64, k as f64);
        match self {
            BudgetFormula::KLnK => k * k.ln(),
            BudgetFormula::KSquared => k * k,
            BudgetFormula::NK => n * k,
            BudgetFormula::KSquaredLnK => k * k * k.ln(),
            BudgetFormula::KCubed => k.powi(3),
            BudgetFormula::NPlusKCubedTimesK => (n + k.powi(3)) * k,
            BudgetFormula::NKSquaredPlusKFifth => n * k * k + k.powi(5),
            BudgetFormula::KCubedLnNPlusKSquaredLnK => k.powi(3) * n.ln() + k * k * k.ln(),
        }
    }
}

/// `budget = 5000`, or `budget = { formula = "k-ln-k", c = 200, cap = 10000000 }`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BudgetSpec {
    Fixed(u64),
    Formula {
        formula: BudgetFormula,
        #[serde(default)]
        c: Option<f64>,
        #[serde(default)]
        cap: Option<u64>,
    },
}

impl BudgetSpec {
    /// `ceil(c * formula(n, k))`, at most `cap`.
    pub fn evaluate(&self, n: usize, k: usize) -> u64 {
        match *self {
            BudgetSpec::Fixed(b) => b,
            BudgetSpec::Formula { formula, c, cap } => {
                let raw = (c.unwrap_or(DEFAULT_BUDGET_CONSTANT) * formula.eval(n, k)).ceil();
                let b = if raw.is_finite() && raw > 0.0 {
                    raw as u64
                } else {
                    0
                };
                cap.map_or(b, |cap| b.min(cap))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InitKind {
    #[default]
    Random,
    KnownLocalOpt,
    AllZeros,
    AllOnes,
}

/// `targets = ["feasible", "optimum", { ratio = 1.5 }, { ratio-ln-n = 2.0 }]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetSpec {
    Feasible,
    Optimum,
    /// At most `ceil(r * OPT)` labels.
    Ratio(f64),
    /// At most `ceil(c * ln(n) * OPT)` labels.
    RatioLnN(f64),
}

impl TargetSpec {
    pub fn ratio_value(self, n: usize) -> Option<f64> {
        match self {
            TargetSpec::Ratio(r) => Some(r),
            TargetSpec::RatioLnN(c) => Some(c * (n as f64).ln()),
            _ => None,
        }
    }
}

fn default_true() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentPlan {
    #[serde(default)]
    pub name: Option<String>,
    pub algorithm: Algorithm,
    pub instance: InstanceSource,
    pub trials: u64,
    pub budget: BudgetSpec,
    #[serde(default)]
    pub init: InitKind,
    pub master_seed: u64,
    #[serde(default)]
    pub targets: Vec<TargetSpec>,
    /// Tie-break policy for the deterministic heuristics.
    #[serde(default)]
    pub tie: TieBreakPolicy,
    /// End an evolutionary run once every target is reached.
    #[serde(default = "default_true")]
    pub stop_at_target: bool,
}

impl ExperimentPlan {
    pub fn from_toml(text: &str) -> Result<Self> {
        let plan: ExperimentPlan =
            toml::from_str(text).map_err(|e| Error::InvalidPlan(e.to_string()))?;
        plan.validate()?;
        Ok(plan)
    }

    /// Reads a plan file; a relative instance path is taken relative to the
    /// plan's directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let mut plan = Self::from_toml(&std::fs::read_to_string(path)?)?;
        if let InstanceSource::File { path: p } = &mut plan.instance {
            if p.is_relative() {
                if let Some(dir) = path.parent() {
                    *p = dir.join(&*p);
                }
            }
        }
        Ok(plan)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plans always serialize")
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidPlan("trials must be at least 1".into()));
        }
        let ratios = self
            .targets
            .iter()
            .filter(|t| t.ratio_value(2).is_some())
            .count();
        if ratios > 1 {
            return Err(Error::InvalidPlan(
                "at most one ratio target is supported".into(),
            ));
        }
        for t in &self.targets {
            if let Some(r) = t.ratio_value(3) {
                if !(r.is_finite() && r > 0.0) {
                    return Err(Error::InvalidPlan(format!(
                        "ratio must be positive, got {r}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_plan() {
        let plan = ExperimentPlan::from_toml(
            r#"
            algorithm = "one-plus-one-ea"
            trials = 50
            master_seed = 1
            budget = { formula = "k-ln-k" }
            targets = ["feasible", "optimum", { ratio = 1.5 }]
            [instance]
            family = "g1"
            k = 8
            "#,
        )
        .unwrap();
        assert_eq!(
            plan.instance,
            InstanceSource::Generated(FamilyParams::G1 { k: 8 })
        );
        assert_eq!(plan.budget.evaluate(8, 8), 3328);
        assert_eq!(plan.targets[2], TargetSpec::Ratio(1.5));
        assert!(plan.stop_at_target);
        assert_eq!(ExperimentPlan::from_toml(&plan.to_toml()).unwrap(), plan);
    }

    #[test]
    fn file_instances_and_fixed_budgets() {
        let plan = ExperimentPlan::from_toml(
            r#"
            algorithm = "mvca"
            trials = 1
            master_seed = 0
            budget = 10
            tie = "highest-index"
            instance = { path = "g3.mlst" }
            "#,
        )
        .unwrap();
        assert_eq!(plan.budget, BudgetSpec::Fixed(10));
        assert_eq!(plan.tie, TieBreakPolicy::HighestIndex);
        assert!(matches!(plan.instance, InstanceSource::File { .. }));
    }

    #[test]
    fn rejects_bad_plans() {
        let base = |extra: &str| {
            format!("algorithm = \"gsemo\"\nmaster_seed = 0\nbudget = 5\n{extra}\n[instance]\nfamily = \"g1\"\nk = 5\n")
        };
        assert!(matches!(
            ExperimentPlan::from_toml(&base("trials = 0")),
            Err(Error::InvalidPlan(_))
        ));
        assert!(ExperimentPlan::from_toml(&base("trials = 1\nbogus = 3")).is_err());
        assert!(ExperimentPlan::from_toml(&base(
            "trials = 1\ntargets = [{ ratio = 1.5 }, { ratio-ln-n = 2.0 }]"
        ))
        .is_err());
    }

    #[test]
    fn budget_formulas() {
        let f = |formula, n, k| {
            BudgetSpec::Formula {
                formula,
                c: None,
                cap: None,
            }
            .evaluate(n, k)
        };
        assert_eq!(f(BudgetFormula::KSquared, 15, 10), 20_000);
        assert_eq!(f(BudgetFormula::NK, 5, 3), 3_000);
        assert_eq!(f(BudgetFormula::KCubed, 19, 11), 266_200);
        assert_eq!(f(BudgetFormula::KSquaredLnK, 15, 10), 46_052);
        let capped = BudgetSpec::Formula {
            formula: BudgetFormula::NKSquaredPlusKFifth,
            c: None,
            cap: Some(10_000_000),
        };
        assert_eq!(capped.evaluate(12, 14), 10_000_000);
        assert_eq!(f(BudgetFormula::KLnK, 2, 1), 0);
    }
}
