use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::rng::RngSeed;

/// How heuristics order equally good choices.
///
/// A policy induces a priority order over items (labels or edges); among
/// tied candidates the one earliest in that order wins.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreakPolicy {
    #[default]
    LowestIndex,
    HighestIndex,
    /// A fixed random permutation drawn from the seed.
    SeededRandom(u64),
}

impl TieBreakPolicy {
    /// Items `0..len` from highest to lowest priority.
    pub fn order(&self, len: usize) -> Vec<usize> {
        let mut items: Vec<usize> = (0..len).collect();
        match *self {
            TieBreakPolicy::LowestIndex => {}
            TieBreakPolicy::HighestIndex => items.reverse(),
            TieBreakPolicy::SeededRandom(seed) => items.shuffle(&mut RngSeed(seed).rng()),
        }
        items
    }

    /// `rank[item]` = position of `item` in [`Self::order`].
    pub fn ranks(&self, len: usize) -> Vec<usize> {
        let mut rank = vec![0; len];
        for (pos, item) in self.order(len).into_iter().enumerate() {
            rank[item] = pos;
        }
        rank
    }
}
