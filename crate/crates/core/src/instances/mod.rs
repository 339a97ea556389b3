//! Instance generators with known optima and traps, plus the text format.

mod families;
mod io;
mod random;

use serde::{Deserialize, Serialize};

use crate::graph::LabeledGraph;
use crate::subset::LabelSubset;

pub use families::{gen_g1, gen_g2, gen_g3, gen_g_prime};
pub use io::{
    format_instance, load_bundle, load_instance, load_metadata, parse_instance, save_bundle,
    save_instance, sidecar_path,
};
pub use random::gen_random_mlst_b;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    GPrime,
    G1,
    G2,
    G3,
    RandomB,
}

/// Generator parameters, tagged by family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    GPrime {
        a: usize,
        k: usize,
    },
    G1 {
        k: usize,
    },
    G2 {
        k: usize,
    },
    G3 {
        b: usize,
    },
    RandomB {
        n: usize,
        m: usize,
        k: usize,
        b: usize,
        seed: u64,
    },
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::GPrime { .. } => Family::GPrime,
            FamilyParams::G1 { .. } => Family::G1,
            FamilyParams::G2 { .. } => Family::G2,
            FamilyParams::G3 { .. } => Family::G3,
            FamilyParams::RandomB { .. } => Family::RandomB,
        }
    }

    /// Regenerates the instance these parameters describe.
    pub fn generate(&self) -> crate::Result<InstanceBundle> {
        match *self {
            FamilyParams::GPrime { a, k } => gen_g_prime(a, k),
            FamilyParams::G1 { k } => gen_g1(k),
            FamilyParams::G2 { k } => gen_g2(k),
            FamilyParams::G3 { b } => gen_g3(b),
            FamilyParams::RandomB { n, m, k, b, seed } => gen_random_mlst_b(n, m, k, b, seed),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownOptimum {
    pub value: usize,
    pub witness: LabelSubset,
}

/// Algorithms a known local optimum is meant to trap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trap {
    OnePlusOneEa,
    TwoSwitch,
    Era,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownLocalOpt {
    pub solution: LabelSubset,
    pub traps: Vec<Trap>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InstanceBundle {
    pub graph: LabeledGraph,
    pub params: FamilyParams,
    pub known_opt: Option<KnownOptimum>,
    pub known_local_opts: Vec<KnownLocalOpt>,
}

impl InstanceBundle {
    pub fn family(&self) -> Family {
        self.params.family()
    }

    pub fn metadata(&self) -> InstanceMetadata {
        InstanceMetadata {
            params: self.params.clone(),
            n: self.graph.node_count(),
            k: self.graph.label_count(),
            m: self.graph.edge_count(),
            known_opt: self.known_opt.clone(),
            known_local_opts: self.known_local_opts.clone(),
            notes: match self.params {
                FamilyParams::GPrime { .. } => {
                    Some("v1 of each subgraph is its first polygon node".into())
                }
                _ => None,
            },
        }
    }
}

/// Contents of the `.meta.json` sidecar written next to an instance file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceMetadata {
    pub params: FamilyParams,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub known_opt: Option<KnownOptimum>,
    #[serde(default)]
    pub known_local_opts: Vec<KnownLocalOpt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}
