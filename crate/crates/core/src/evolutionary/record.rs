use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fitness::{Fitness, FitnessVector};
use crate::graph::LabeledGraph;
use crate::rng::RngSeed;
use crate::subset::LabelSubset;

/// Largest label count accepted as an `r`-approximation when the optimum has
/// `opt` labels: `ceil(r * opt)`.
///
/// A tolerance of 1e-9 absorbs the rounding in products such as
/// `(1 + 1/2 + 1/3) * 6`, which must give 11 and not 12.
pub fn ratio_threshold(ratio: f64, opt: usize) -> usize {
    let bound = ratio * opt as f64 - 1e-9;
    if bound <= 0.0 {
        0
    } else {
        bound.ceil() as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioTarget {
    pub ratio: f64,
    pub max_labels: usize,
}

impl RatioTarget {
    pub fn new(ratio: f64, opt: usize) -> Self {
        RatioTarget {
            ratio,
            max_labels: ratio_threshold(ratio, opt),
        }
    }
}

/// Quality levels worth logging when a run first attains them.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Milestones {
    pub optimum: Option<usize>,
    pub ratio: Option<RatioTarget>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EventKind {
    FirstFeasible,
    Improved,
    RatioReached { ratio: f64, max_labels: usize },
    OptimumReached,
}

/// Something that happened to the best-so-far solution at `iteration`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Event {
    pub iteration: u64,
    #[serde(flatten)]
    pub kind: EventKind,
    pub fitness: FitnessVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    Budget,
    TargetHit,
    /// A deterministic heuristic finished on its own.
    Converged,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::Budget => "budget",
            Termination::TargetHit => "target-hit",
            Termination::Converged => "converged",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Init {
    /// Uniform over all `2^k` bitstrings.
    Random,
    Given(LabelSubset),
}

impl Init {
    pub(crate) fn materialize<R: Rng + ?Sized>(
        &self,
        g: &LabeledGraph,
        rng: &mut R,
    ) -> Result<LabelSubset> {
        match self {
            Init::Random => Ok(LabelSubset::random(g.label_count(), rng)),
            Init::Given(x) => {
                g.check_width(x)?;
                Ok(x.clone())
            }
        }
    }
}

/// Knobs shared by both evolutionary algorithms.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    /// Maximum number of offspring evaluations.
    pub budget: u64,
    pub seed: RngSeed,
    pub init: Init,
    /// Stop once the best solution is feasible with at most this many labels.
    pub target: Option<usize>,
    pub milestones: Milestones,
    /// (1+1) EA only: also accept offspring of equal fitness. Off by default.
    pub accept_equal: bool,
}

impl RunOptions {
    pub fn new(budget: u64, seed: impl Into<RngSeed>) -> Self {
        RunOptions {
            budget,
            seed: seed.into(),
            init: Init::Random,
            target: None,
            milestones: Milestones::default(),
            accept_equal: false,
        }
    }

    pub fn with_init(mut self, init: LabelSubset) -> Self {
        self.init = Init::Given(init);
        self
    }

    pub fn with_target(mut self, max_labels: usize) -> Self {
        self.target = Some(max_labels);
        self
    }

    pub fn with_milestones(mut self, milestones: Milestones) -> Self {
        self.milestones = milestones;
        self
    }

    pub(crate) fn target_reached(&self, best: FitnessVector) -> bool {
        self.target
            .is_some_and(|t| best.is_feasible() && best.labels_used <= t)
    }
}

/// Trace of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: String,
    pub seed: RngSeed,
    pub budget: u64,
    pub iterations_used: u64,
    pub best_solution: LabelSubset,
    pub best_fitness: FitnessVector,
    pub best_scalar: Fitness,
    pub events: Vec<Event>,
    pub terminated_by: Termination,
}

impl RunRecord {
    fn first(&self, pred: impl Fn(&EventKind) -> bool) -> Option<u64> {
        self.events
            .iter()
            .find(|e| pred(&e.kind))
            .map(|e| e.iteration)
    }

    pub fn iterations_to_feasible(&self) -> Option<u64> {
        self.first(|k| matches!(k, EventKind::FirstFeasible))
    }

    pub fn iterations_to_ratio(&self) -> Option<u64> {
        self.first(|k| matches!(k, EventKind::RatioReached { .. }))
    }

    pub fn iterations_to_optimum(&self) -> Option<u64> {
        self.first(|k| matches!(k, EventKind::OptimumReached))
    }

    /// Number of strict improvements of the best solution after initialization.
    pub fn improvements(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e.kind, EventKind::Improved))
            .count()
    }

    /// Label count of the best solution if it is feasible.
    pub fn best_cardinality(&self) -> Option<usize> {
        self.best_fitness
            .is_feasible()
            .then_some(self.best_fitness.labels_used)
    }
}

/// Turns a sequence of best-so-far vectors into the event log.
///
/// The first observation is the starting point; later ones log `Improved`
/// when strictly better. Milestones are logged once, when first met.
pub struct Tracker {
    milestones: Milestones,
    best: Option<FitnessVector>,
    feasible_seen: bool,
    ratio_seen: bool,
    optimum_seen: bool,
    events: Vec<Event>,
}

impl Tracker {
    pub fn new(milestones: Milestones) -> Self {
        Tracker {
            milestones,
            best: None,
            feasible_seen: false,
            ratio_seen: false,
            optimum_seen: false,
            events: Vec::new(),
        }
    }

    pub fn observe(&mut self, iteration: u64, best: FitnessVector) {
        match self.best {
            Some(prev) if best.lex_cmp(&prev).is_ge() => return,
            Some(_) => self.push(iteration, EventKind::Improved, best),
            None => {}
        }
        self.best = Some(best);
        if !best.is_feasible() {
            return;
        }
        if !self.feasible_seen {
            self.feasible_seen = true;
            self.push(iteration, EventKind::FirstFeasible, best);
        }
        if let Some(r) = self.milestones.ratio {
            if !self.ratio_seen && best.labels_used <= r.max_labels {
                self.ratio_seen = true;
                self.push(
                    iteration,
                    EventKind::RatioReached {
                        ratio: r.ratio,
                        max_labels: r.max_labels,
                    },
                    best,
                );
            }
        }
        if let Some(opt) = self.milestones.optimum {
            if !self.optimum_seen && best.labels_used <= opt {
                self.optimum_seen = true;
                self.push(iteration, EventKind::OptimumReached, best);
            }
        }
    }

    fn push(&mut self, iteration: u64, kind: EventKind, fitness: FitnessVector) {
        self.events.push(Event {
            iteration,
            kind,
            fitness,
        });
    }

    pub fn into_events(self) -> Vec<Event> {
        self.events
    }
}
