use serde::{Deserialize, Serialize};

use crate::fitness::{dominates, FitnessVector};
use crate::subset::LabelSubset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArchiveEntry {
    pub solution: LabelSubset,
    pub fitness: FitnessVector,
}

/// GSEMO's population: mutually non-dominated solutions, one per vector.
///
/// Entries keep insertion order so that uniform selection by index is
/// reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParetoArchive {
    entries: Vec<ArchiveEntry>,
}

impl ParetoArchive {
    pub fn new(solution: LabelSubset, fitness: FitnessVector) -> Self {
        ParetoArchive {
            entries: vec![ArchiveEntry { solution, fitness }],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[ArchiveEntry] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> &ArchiveEntry {
        &self.entries[index]
    }

    /// Inserts the offspring unless some member dominates it or already has
    /// the same vector; on insertion, drops every member it dominates.
    /// Returns whether the offspring was inserted.
    pub fn offer(&mut self, solution: LabelSubset, fitness: FitnessVector) -> bool {
        if self
            .entries
            .iter()
            .any(|e| e.fitness == fitness || dominates(e.fitness, fitness))
        {
            return false;
        }
        self.entries.retain(|e| !dominates(fitness, e.fitness));
        self.entries.push(ArchiveEntry { solution, fitness });
        true
    }

    /// Lexicographically smallest `(components, labels)` member; when any
    /// member is feasible this is the feasible one with fewest labels.
    pub fn best(&self) -> &ArchiveEntry {
        self.entries
            .iter()
            .min_by(|a, b| a.fitness.lex_cmp(&b.fitness))
            .expect("archive is never empty")
    }

    pub fn best_feasible(&self) -> Option<&ArchiveEntry> {
        self.entries
            .iter()
            .filter(|e| e.fitness.is_feasible())
            .min_by_key(|e| e.fitness.labels_used)
    }

    pub fn contains_vector(&self, fitness: FitnessVector) -> bool {
        self.entries.iter().any(|e| e.fitness == fitness)
    }

    /// Checks pairwise non-domination, vector uniqueness and `len <= k + 1`.
    pub fn check_invariants(&self, label_count: usize) -> Result<(), String> {
        if self.entries.is_empty() {
            return Err("archive is empty".into());
        }
        if self.entries.len() > label_count + 1 {
            return Err(format!(
                "archive holds {} entries, more than k + 1 = {}",
                self.entries.len(),
                label_count + 1
            ));
        }
        for (i, a) in self.entries.iter().enumerate() {
            if a.solution.len() != a.fitness.labels_used {
                return Err(format!("entry {i} records a stale label count"));
            }
            for (j, b) in self.entries.iter().enumerate().skip(i + 1) {
                if a.fitness == b.fitness {
                    return Err(format!("entries {i} and {j} share vector {:?}", a.fitness));
                }
                if dominates(a.fitness, b.fitness) || dominates(b.fitness, a.fitness) {
                    return Err(format!("entries {i} and {j} are comparable"));
                }
            }
        }
        Ok(())
    }
}
