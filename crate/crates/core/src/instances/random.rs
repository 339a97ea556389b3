use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::rng::RngSeed;

use super::{FamilyParams, InstanceBundle};

/// A random connected instance with `n` nodes, `m` edges and `k` labels,
/// each label on between 1 and `b` edges.
///
/// The spanning tree is uniform (random Prüfer sequence); the extra edges
/// are a uniform sample of the remaining node pairs. Labels are a random
/// multiset containing every label once, topped up from labels with spare
/// capacity, shuffled onto the edges.
pub fn gen_random_mlst_b(
    n: usize,
    m: usize,
    k: usize,
    b: usize,
    seed: u64,
) -> Result<InstanceBundle> {
    let infeasible = |msg: String| Err(Error::InfeasibleParams(msg));
    if n < 2 {
        return infeasible(format!("n = {n}: need at least 2 nodes"));
    }
    let max_edges = n * (n - 1) / 2;
    if m < n - 1 || m > max_edges {
        return infeasible(format!("m = {m}: need {} <= m <= {max_edges}", n - 1));
    }
    if k == 0 || k > m {
        return infeasible(format!("k = {k}: need 1 <= k <= m = {m}"));
    }
    if k.saturating_mul(b) < m {
        return infeasible(format!("k * b = {} < m = {m}", k * b));
    }

    let mut rng = RngSeed(seed).rng();
    let mut pairs = prufer_tree(n, &mut rng);
    if m > pairs.len() {
        let mut present = vec![false; n * n];
        for &(u, v) in &pairs {
            present[u * n + v] = true;
        }
        let mut rest: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !present[u * n + v])
            .collect();
        rest.shuffle(&mut rng);
        pairs.extend(rest.into_iter().take(m - (n - 1)));
    }
    pairs.shuffle(&mut rng);

    let mut labels: Vec<usize> = (0..k).collect();
    let mut spare: Vec<usize> = (0..k).flat_map(|l| std::iter::repeat_n(l, b - 1)).collect();
    spare.shuffle(&mut rng);
    labels.extend(spare.into_iter().take(m - k));
    labels.shuffle(&mut rng);

    let triples: Vec<_> = pairs
        .iter()
        .zip(&labels)
        .map(|(&(u, v), &l)| (u + 1, v + 1, l + 1))
        .collect();
    Ok(InstanceBundle {
        graph: LabeledGraph::new(n, k, &triples)?,
        params: FamilyParams::RandomB { n, m, k, b, seed },
        known_opt: None,
        known_local_opts: Vec::new(),
    })
}

/// Edges `(u, v)` with `u < v` of a uniform random labeled tree on `n >= 2`
/// nodes.
fn prufer_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&i| degree[i] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let u = leaves.pop_first().unwrap();
    let v = leaves.pop_first().unwrap();
    edges.push((u, v));
    edges
}
