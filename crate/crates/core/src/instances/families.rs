use crate::error::{Error, Result};
use crate::graph::{is_feasible, LabeledGraph};
use crate::heuristics::is_h_switch_local_optimum;
use crate::oracle::brute_force_opt;
use crate::subset::LabelSubset;

use super::{FamilyParams, InstanceBundle, KnownLocalOpt, KnownOptimum, Trap};

fn out_of_range(msg: String) -> Error {
    Error::ParamOutOfRange(msg)
}

/// `G'(a, k)`: `k - a` wheel-like subgraphs chained in a ring.
///
/// Subgraph `i` (1-based) has `a - 1` polygon nodes joined in a cycle by
/// label `a + i`, and an inner node joined to polygon node `j` by label `j`.
/// Consecutive subgraphs are linked inner-to-v1 and v1-to-v1 with label
/// `a + i` and inner-to-inner with label `a`, where v1 is the first polygon
/// node. One more edge labeled `k` joins the last inner node to v1 of the
/// first subgraph. The optimum is labels `1..=a`; labels `a+1..=k` form a
/// feasible local optimum.
pub fn gen_g_prime(a: usize, k: usize) -> Result<InstanceBundle> {
    if a < 4 {
        return Err(out_of_range(format!("a = {a}: the polygon needs a >= 4")));
    }
    if 2 * a >= k {
        return Err(out_of_range(format!("a = {a}, k = {k}: need 2a < k")));
    }
    let s = k - a;
    let polygon = |i: usize, j: usize| (i - 1) * a + j;
    let inner = |i: usize| i * a;
    let mut edges = Vec::new();
    for i in 1..=s {
        for j in 1..a {
            let next = if j + 1 < a { j + 1 } else { 1 };
            edges.push((polygon(i, j), polygon(i, next), a + i));
        }
        for j in 1..a {
            edges.push((inner(i), polygon(i, j), j));
        }
        if i < s {
            edges.push((inner(i), polygon(i + 1, 1), a + i));
            edges.push((polygon(i, 1), polygon(i + 1, 1), a + i));
            edges.push((inner(i), inner(i + 1), a));
        }
    }
    edges.push((inner(s), polygon(1, 1), k));
    let graph = LabeledGraph::new(a * s, k, &edges)?;
    Ok(InstanceBundle {
        graph,
        params: FamilyParams::GPrime { a, k },
        known_opt: Some(KnownOptimum {
            value: a,
            witness: LabelSubset::from_indices(k, 0..a),
        }),
        known_local_opts: vec![KnownLocalOpt {
            solution: LabelSubset::from_indices(k, a..k),
            traps: vec![Trap::OnePlusOneEa, Trap::TwoSwitch],
        }],
    })
}

/// `G1(k)`: a star from node 1 with distinct labels `1..k-1`, and label `k`
/// on every other pair of the `k` nodes.
pub fn gen_g1(k: usize) -> Result<InstanceBundle> {
    if k < 3 {
        return Err(out_of_range(format!("k = {k}: need k >= 3")));
    }
    let mut edges: Vec<_> = (1..k).map(|j| (1, j + 1, j)).collect();
    for u in 2..=k {
        for v in u + 1..=k {
            edges.push((u, v, k));
        }
    }
    let graph = LabeledGraph::new(k, k, &edges)?;
    Ok(InstanceBundle {
        graph,
        params: FamilyParams::G1 { k },
        known_opt: Some(KnownOptimum {
            value: 2,
            witness: LabelSubset::from_indices(k, [0, k - 1]),
        }),
        known_local_opts: vec![KnownLocalOpt {
            solution: LabelSubset::from_indices(k, 0..k - 1),
            traps: vec![Trap::Era],
        }],
    })
}

/// `G2(k)` on `2k - 5` nodes and `4k - 12` edges.
///
/// With `t = k - 3`, nodes are `v0`, `x_0..x_{t-1}` and `y_0..y_{t-1}`.
/// Label `k - 1` joins `v0` to every `x_i` and label `k` joins each `x_i` to
/// `y_i`, so `{k-1, k}` is the optimum. Label `i + 1` covers both `x_i x_{i+1}`
/// and `y_i x_{i+1}`; `y_{t-1} x_{t-2}` has label `k - 2` and `v0 y_0` has
/// label `k - 3`.
///
/// The generator checks before returning that the optimum is exactly
/// `{k-1, k}`, that `{1..k-2}` is feasible, and that it is 2-switch locally
/// optimal.
pub fn gen_g2(k: usize) -> Result<InstanceBundle> {
    if k < 7 {
        return Err(out_of_range(format!("k = {k}: need k >= 7")));
    }
    let t = k - 3;
    let v0 = 1;
    let x = |i: usize| 2 + i;
    let y = |i: usize| 2 + t + i;
    let mut edges = Vec::with_capacity(4 * k - 12);
    for i in 0..t {
        edges.push((v0, x(i), k - 1));
        edges.push((x(i), y(i), k));
    }
    for i in 0..t - 1 {
        edges.push((x(i), x(i + 1), i + 1));
        edges.push((y(i), x(i + 1), i + 1));
    }
    edges.push((y(t - 1), x(t - 2), k - 2));
    edges.push((v0, y(0), k - 3));
    let graph = LabeledGraph::new(2 * k - 5, k, &edges)?;

    let witness = LabelSubset::from_indices(k, [k - 2, k - 1]);
    let local = LabelSubset::from_indices(k, 0..k - 2);
    let fail = |what: &str| {
        Err(Error::ConstructionVerificationFailed(format!(
            "k = {k}: {what}"
        )))
    };
    let opt = brute_force_opt(&graph, Some(usize::MAX))?;
    if opt.opt_value != 2 || opt.witness != witness {
        return fail("optimum is not exactly {k-1, k}");
    }
    if !is_feasible(&graph, &local)? {
        return fail("{1..k-2} is infeasible");
    }
    if !is_h_switch_local_optimum(&graph, &local, 2)? {
        return fail("{1..k-2} is not 2-switch locally optimal");
    }
    Ok(InstanceBundle {
        graph,
        params: FamilyParams::G2 { k },
        known_opt: Some(KnownOptimum { value: 2, witness }),
        known_local_opts: vec![KnownLocalOpt {
            solution: local,
            traps: vec![Trap::TwoSwitch],
        }],
    })
}

/// Largest `b` accepted by [`gen_g3`]; `b = 8` already has 322 561 nodes.
pub const G3_MAX_B: usize = 8;

/// `G3(b)` on `b * b! + 1` nodes, the greedy worst case.
///
/// Groups `V_j = {(j-1)b+1, ..., jb+1}` for `j = 1..=b!` overlap in their
/// end nodes. Each group's path gets its own label (these `b!` labels are
/// the optimum and come last). For `h = b` down to 2, the chords
/// `((j-1)b+1, (j-1)b+1+h)` are labeled in consecutive blocks of `h`, which
/// gives `b!/h` labels per `h`, numbered first.
pub fn gen_g3(b: usize) -> Result<InstanceBundle> {
    if !(2..=G3_MAX_B).contains(&b) {
        return Err(out_of_range(format!("b = {b}: need 2 <= b <= {G3_MAX_B}")));
    }
    let groups: usize = (1..=b).product();
    let n = b * groups + 1;
    let start = |j: usize| (j - 1) * b + 1;
    let mut edges = Vec::new();
    let mut label = 0;
    for h in (2..=b).rev() {
        for j in 1..=groups {
            if (j - 1) % h == 0 {
                label += 1;
            }
            edges.push((start(j), start(j) + h, label));
        }
    }
    let chord_labels = label;
    for j in 1..=groups {
        for step in 0..b {
            edges.push((start(j) + step, start(j) + step + 1, chord_labels + j));
        }
    }
    let k = chord_labels + groups;
    let graph = LabeledGraph::new(n, k, &edges)?;
    Ok(InstanceBundle {
        graph,
        params: FamilyParams::G3 { b },
        known_opt: Some(KnownOptimum {
            value: groups,
            witness: LabelSubset::from_indices(k, chord_labels..k),
        }),
        known_local_opts: Vec::new(),
    })
}
