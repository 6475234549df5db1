//! Framed quivers, c-vectors and reddening sequences.
//!
//! The framed quiver adds one frozen copy `k'` per non-frozen vertex `k` with a
//! single arrow `k -> k'`. The c-vector of `k` is the row of the extended
//! matrix restricted to the copies. A sequence is reddening when afterwards
//! every c-vector is non-positive.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{IceQuiver, QuiverError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexStatus {
    Green,
    Red,
    Frozen,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedState {
    base_len: usize,
    mutable: Vec<usize>,
    extended: IceQuiver,
    history: Vec<usize>,
}

impl FramedState {
    pub fn new(q: &IceQuiver) -> Self {
        let n = q.len();
        let mutable = q.mutable_vertices();
        let m = mutable.len();
        let mut frozen = q.frozen_flags().to_vec();
        frozen.extend(std::iter::repeat_n(true, m));
        let mut b = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                b[i][j] = q.entry(i, j);
            }
        }
        for (t, &k) in mutable.iter().enumerate() {
            b[k][n + t] = 1;
            b[n + t][k] = -1;
        }
        let extended = IceQuiver::from_matrix(b, frozen).expect("skew-symmetric by construction");
        FramedState { base_len: n, mutable, extended, history: Vec::new() }
    }

    /// The current (mutated) quiver without its framing.
    pub fn base(&self) -> IceQuiver {
        self.extended.induced(&(0..self.base_len).collect::<Vec<_>>())
    }

    pub fn extended(&self) -> &IceQuiver {
        &self.extended
    }

    pub fn history(&self) -> &[usize] {
        &self.history
    }

    pub fn mutable_vertices(&self) -> &[usize] {
        &self.mutable
    }

    /// c-vector of base vertex `k`, indexed by the mutable vertices of the original quiver.
    pub fn c_vector(&self, k: usize) -> Vec<i64> {
        (0..self.mutable.len()).map(|t| self.extended.entry(k, self.base_len + t)).collect()
    }

    /// c-vectors of all mutable vertices, in vertex order.
    pub fn c_matrix(&self) -> Vec<Vec<i64>> {
        self.mutable.iter().map(|&k| self.c_vector(k)).collect()
    }

    pub fn status(&self, v: usize) -> VertexStatus {
        if self.extended.is_frozen(v) {
            return VertexStatus::Frozen;
        }
        let c = self.c_vector(v);
        if c.iter().all(|&x| x >= 0) {
            VertexStatus::Green
        } else {
            VertexStatus::Red
        }
    }

    pub fn statuses(&self) -> Vec<VertexStatus> {
        (0..self.base_len).map(|v| self.status(v)).collect()
    }

    pub fn is_green(&self, v: usize) -> bool {
        self.status(v) == VertexStatus::Green
    }

    /// True when every c-vector is non-positive (vacuously true with no mutable vertices).
    pub fn is_all_red(&self) -> bool {
        self.mutable.iter().all(|&k| self.c_vector(k).iter().all(|&x| x <= 0))
    }

    /// Mutates the framed quiver at `k`.
    ///
    /// Panics if a c-vector loses sign coherence, which would indicate a bug.
    pub fn mutate(&self, k: usize) -> Result<FramedState, QuiverError> {
        if k >= self.base_len {
            return Err(QuiverError::VertexOutOfRange { vertex: k + 1, n: self.base_len });
        }
        let extended = self.extended.mutate(k)?;
        let mut history = self.history.clone();
        history.push(k);
        let next = FramedState { base_len: self.base_len, mutable: self.mutable.clone(), extended, history };
        for &v in &next.mutable {
            let c = next.c_vector(v);
            let pos = c.iter().any(|&x| x > 0);
            let neg = c.iter().any(|&x| x < 0);
            assert!(!(pos && neg), "sign coherence violated at vertex {}: {c:?}", v + 1);
        }
        Ok(next)
    }

    pub fn mutate_sequence(&self, seq: &[usize]) -> Result<FramedState, QuiverError> {
        seq.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }
}

/// Replays `seq` on the framed quiver of `q` and reports whether everything ends red.
pub fn is_reddening_sequence(q: &IceQuiver, seq: &[usize]) -> Result<bool, QuiverError> {
    Ok(FramedState::new(q).mutate_sequence(seq)?.is_all_red())
}

/// Bounded search for a reddening sequence of length at most `max_depth`.
///
/// Iterative deepening, first over green mutations only (maximal green
/// sequences), then over all mutations with green vertices tried first. Ties
/// go to the lower vertex index. Each first move is explored with its own
/// visited set, keyed by the exact extended matrix. `None` only means nothing
/// was found within the bound.
pub fn find_reddening(q: &IceQuiver, max_depth: usize) -> Option<Vec<usize>> {
    find_reddening_parallel(q, max_depth, 1)
}

/// [`find_reddening`] with the first moves of each round explored on `jobs`
/// threads. The result does not depend on `jobs`.
pub fn find_reddening_parallel(q: &IceQuiver, max_depth: usize, jobs: usize) -> Option<Vec<usize>> {
    let start = FramedState::new(q);
    if start.is_all_red() {
        return Some(Vec::new());
    }
    let pool = if jobs > 1 {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build().ok()
    } else {
        None
    };
    for green_only in [true, false] {
        for depth in 1..=max_depth {
            let branches = ordered_moves(&start, green_only);
            let found = match &pool {
                Some(pool) => pool.install(|| {
                    branches
                        .par_iter()
                        .map(|&k| search_branch(&start, k, depth, green_only))
                        .collect::<Vec<_>>()
                        .into_iter()
                        .flatten()
                        .next()
                }),
                None => branches.iter().find_map(|&k| search_branch(&start, k, depth, green_only)),
            };
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

fn search_branch(start: &FramedState, k: usize, depth: usize, green_only: bool) -> Option<Vec<usize>> {
    let next = start.mutate(k).expect("mutable vertex");
    let mut path = vec![k];
    let mut visited = HashMap::new();
    visited.insert(start.extended.matrix().to_vec(), depth);
    dfs(&next, depth - 1, green_only, &mut visited, &mut path).then_some(path)
}

fn ordered_moves(state: &FramedState, green_only: bool) -> Vec<usize> {
    let green: Vec<usize> = state.mutable.iter().copied().filter(|&k| state.is_green(k)).collect();
    if green_only {
        return green;
    }
    let red = state.mutable.iter().copied().filter(|&k| !state.is_green(k));
    green.iter().copied().chain(red).collect()
}

fn dfs(
    state: &FramedState,
    budget: usize,
    green_only: bool,
    visited: &mut HashMap<Vec<Vec<i64>>, usize>,
    path: &mut Vec<usize>,
) -> bool {
    if state.is_all_red() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let key = state.extended.matrix().to_vec();
    match visited.get(&key) {
        Some(&seen) if seen >= budget => return false,
        _ => {
            visited.insert(key, budget);
        }
    }
    for k in ordered_moves(state, green_only) {
        // undoing the previous step never helps
        if path.last() == Some(&k) {
            continue;
        }
        let next = state.mutate(k).expect("mutable vertex");
        path.push(k);
        if dfs(&next, budget - 1, green_only, visited, path) {
            return true;
        }
        path.pop();
    }
    false
}
