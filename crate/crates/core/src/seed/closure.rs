use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use super::{Seed, SeedError};
use crate::algebra::RationalFunction;

/// Result of exhaustive mutation from a seed.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    /// Distinct seeds up to permutation of mutable vertices, in BFS order.
    pub seeds: Vec<Seed>,
    /// Distinct non-frozen cluster variables, in order of discovery.
    pub variables: Vec<RationalFunction>,
    /// Exchange graph edges `(a, b, k)`: seed `b` is seed `a` mutated at `k`, `a < b`.
    pub edges: Vec<(usize, usize, usize)>,
}

#[derive(Serialize)]
struct ClosureJson<'a> {
    seeds: usize,
    variables: usize,
    edges: usize,
    cluster_variables: Vec<String>,
    exchange_graph: &'a [(usize, usize, usize)],
}

impl ClosureReport {
    /// JSON report with counts and the edge list (seed indices 0-based, vertices 1-based).
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<(usize, usize, usize)> =
            self.edges.iter().map(|&(a, b, k)| (a, b, k + 1)).collect();
        serde_json::to_value(ClosureJson {
            seeds: self.seeds.len(),
            variables: self.variables.len(),
            edges: self.edges.len(),
            cluster_variables: self.variables.iter().map(|v| v.to_string()).collect(),
            exchange_graph: &edges,
        })
        .expect("serializable")
    }
}

type SeedKey = (Vec<String>, Vec<Vec<i64>>);

/// Canonical form: mutable positions reordered by their variable's canonical
/// string, frozen positions fixed.
fn canonical_key(seed: &Seed) -> SeedKey {
    let q = seed.quiver();
    let strings: Vec<String> = seed.cluster().iter().map(|f| f.to_string()).collect();
    let mutable = q.mutable_vertices();
    let mut sorted = mutable.clone();
    sorted.sort_by(|&a, &b| strings[a].cmp(&strings[b]));
    // order[slot] = vertex placed at slot
    let mut order: Vec<usize> = (0..q.len()).collect();
    for (slot, v) in mutable.iter().zip(&sorted) {
        order[*slot] = *v;
    }
    let names = order.iter().map(|&v| strings[v].clone()).collect();
    let matrix = order.iter().map(|&i| order.iter().map(|&j| q.entry(i, j)).collect()).collect();
    (names, matrix)
}

/// Breadth-first closure under mutation, lowest vertex first. Fails once more
/// than `max_seeds` distinct seeds appear.
pub fn closure(start: &Seed, max_seeds: usize) -> Result<ClosureReport, SeedError> {
    let mut index: HashMap<SeedKey, usize> = HashMap::new();
    let mut seeds = vec![start.clone()];
    index.insert(canonical_key(start), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut edges = BTreeSet::new();
    let mut variables = Vec::new();
    let mut seen_vars = BTreeSet::new();
    let mutable = start.quiver().mutable_vertices();
    for &v in &mutable {
        if seen_vars.insert(start.variable(v).to_string()) {
            variables.push(start.variable(v).clone());
        }
    }
    while let Some(a) = queue.pop_front() {
        for &k in &mutable {
            let next = seeds[a].mutate(k)?;
            let key = canonical_key(&next);
            let b = match index.get(&key) {
                Some(&b) => b,
                None => {
                    if seeds.len() >= max_seeds {
                        return Err(SeedError::ClosureBound { max: max_seeds });
                    }
                    let b = seeds.len();
                    index.insert(key, b);
                    let var = next.variable(k);
                    if seen_vars.insert(var.to_string()) {
                        variables.push(var.clone());
                    }
                    seeds.push(next);
                    queue.push_back(b);
                    b
                }
            };
            if a != b {
                edges.insert((a.min(b), a.max(b), k));
            }
        }
    }
    // An edge may be recorded from both ends under different vertex labels; keep one per pair.
    let mut seen_pairs = BTreeSet::new();
    let edges = edges.into_iter().filter(|&(a, b, _)| seen_pairs.insert((a, b))).collect();
    Ok(ClosureReport { seeds, variables, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::IceQuiver;

    #[test]
    fn a2_pentagon() {
        let q = IceQuiver::from_arrows(vec![false, false], &[(0, 1, 1)]);
        let r = closure(&Seed::initial(&q), 100).unwrap();
        assert_eq!(r.seeds.len(), 5);
        assert_eq!(r.variables.len(), 5);
        assert_eq!(r.edges.len(), 5);
    }

    #[test]
    fn frozen_only_single_seed() {
        let q = IceQuiver::with_vertices(vec![true]);
        let r = closure(&Seed::initial(&q), 10).unwrap();
        assert_eq!(r.seeds.len(), 1);
        assert!(r.edges.is_empty());
    }

    #[test]
    fn bound_is_enforced() {
        // Kronecker quiver: infinitely many seeds
        let q = IceQuiver::from_arrows(vec![false, false], &[(0, 1, 2)]);
        assert_eq!(
            closure(&Seed::initial(&q), 20).unwrap_err(),
            SeedError::ClosureBound { max: 20 }
        );
    }
}
