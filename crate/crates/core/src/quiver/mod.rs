//! Ice quivers and matrix mutation.
//!
//! Vertices are 0-based indices inside the library; files, command lines and
//! error messages use 1-based labels. Entry `b[i][j] > 0` means `b[i][j]`
//! arrows `i -> j`.

mod framed;
mod gls;
mod io;
mod iso;
mod preprojective;
mod reduction;

pub use framed::{
    find_reddening, find_reddening_parallel, is_reddening_sequence, FramedState, VertexStatus,
};
pub use gls::gls_quiver;
pub use io::{QuiverFile, ReductionScriptFile, StepEntry, VertexEntry, QUIVER_FILE_TYPE};
pub use iso::{quiver_isomorphic, MAX_ISOMORPHISM_VERTICES};
pub use preprojective::{preprojective_presentation, DoubleArrow, PreprojectivePresentation, Relation};
pub use reduction::{apply_reduction, ReductionScript, ReductionStep};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::coxeter::CoxeterError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("mutation at frozen vertex {0}")]
    MutationAtFrozen(usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is already frozen")]
    AlreadyFrozen(usize),
    #[error("cannot delete non-frozen vertex {0}")]
    DeleteNonFrozen(usize),
    #[error("reduction phases out of order: {0}")]
    PhaseOrder(String),
    #[error("exchange matrix is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),
    #[error("malformed quiver file: {0}")]
    Malformed(String),
    #[error("isomorphism search limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// Quiver with frozen vertices, stored as a skew-symmetric integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IceQuiver {
    b: Vec<Vec<i64>>,
    frozen: Vec<bool>,
}

impl IceQuiver {
    pub fn empty() -> Self {
        IceQuiver { b: Vec::new(), frozen: Vec::new() }
    }

    pub fn with_vertices(frozen: Vec<bool>) -> Self {
        let n = frozen.len();
        IceQuiver { b: vec![vec![0; n]; n], frozen }
    }

    /// Builds from a matrix and frozen flags, checking skew-symmetry.
    pub fn from_matrix(b: Vec<Vec<i64>>, frozen: Vec<bool>) -> Result<Self, QuiverError> {
        let n = frozen.len();
        if b.len() != n || b.iter().any(|row| row.len() != n) {
            return Err(QuiverError::Malformed(format!("matrix is not {n}x{n}")));
        }
        for i in 0..n {
            for j in 0..n {
                if b[i][j] != -b[j][i] {
                    return Err(QuiverError::NotSkewSymmetric(i + 1, j + 1));
                }
            }
        }
        Ok(IceQuiver { b, frozen })
    }

    /// Builds from 0-based arrows `(source, target, multiplicity)`; opposite arrows cancel.
    pub fn from_arrows(frozen: Vec<bool>, arrows: &[(usize, usize, i64)]) -> Self {
        let mut q = Self::with_vertices(frozen);
        for &(s, t, m) in arrows {
            q.add_arrows(s, t, m);
        }
        q
    }

    pub fn add_arrows(&mut self, s: usize, t: usize, m: i64) {
        assert_ne!(s, t, "loops are not allowed");
        self.b[s][t] += m;
        self.b[t][s] -= m;
    }

    pub fn len(&self) -> usize {
        self.frozen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frozen.is_empty()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        self.frozen[v]
    }

    pub fn frozen_flags(&self) -> &[bool] {
        &self.frozen
    }

    pub fn frozen_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.frozen[v]).collect()
    }

    pub fn mutable_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| !self.frozen[v]).collect()
    }

    /// Arrows `(source, target, multiplicity)`, 0-based, lexicographically sorted.
    pub fn arrows(&self) -> Vec<(usize, usize, i64)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.b[i][j] > 0 {
                    out.push((i, j, self.b[i][j]));
                }
            }
        }
        out
    }

    pub fn arrow_count(&self) -> i64 {
        self.arrows().iter().map(|a| a.2).sum()
    }

    fn check_vertex(&self, v: usize) -> Result<(), QuiverError> {
        if v < self.len() {
            Ok(())
        } else {
            Err(QuiverError::VertexOutOfRange { vertex: v + 1, n: self.len() })
        }
    }

    /// Matrix mutation at the non-frozen vertex `k`. Arrows between two frozen
    /// vertices are left untouched.
    pub fn mutate(&self, k: usize) -> Result<IceQuiver, QuiverError> {
        self.check_vertex(k)?;
        if self.frozen[k] {
            return Err(QuiverError::MutationAtFrozen(k + 1));
        }
        let n = self.len();
        let mut b = self.b.clone();
        for i in 0..n {
            for j in 0..n {
                if i == k || j == k {
                    b[i][j] = -self.b[i][j];
                } else if !(self.frozen[i] && self.frozen[j]) {
                    let bik = self.b[i][k];
                    let bkj = self.b[k][j];
                    b[i][j] = self.b[i][j] + bik.max(0) * bkj.max(0) - (-bik).max(0) * (-bkj).max(0);
                }
            }
        }
        Ok(IceQuiver { b, frozen: self.frozen.clone() })
    }

    pub fn mutate_sequence(&self, seq: &[usize]) -> Result<IceQuiver, QuiverError> {
        seq.iter().try_fold(self.clone(), |q, &k| q.mutate(k))
    }

    /// Moves `k` into the frozen set; arrows unchanged.
    pub fn freeze(&self, k: usize) -> Result<IceQuiver, QuiverError> {
        self.check_vertex(k)?;
        if self.frozen[k] {
            return Err(QuiverError::AlreadyFrozen(k + 1));
        }
        let mut q = self.clone();
        q.frozen[k] = true;
        Ok(q)
    }

    /// Removes the frozen vertex `f` and its arrows; later vertices shift down by one.
    pub fn delete_frozen(&self, f: usize) -> Result<IceQuiver, QuiverError> {
        self.delete_frozen_set(&[f])
    }

    /// Removes several frozen vertices at once (labels refer to `self`).
    pub fn delete_frozen_set(&self, vertices: &[usize]) -> Result<IceQuiver, QuiverError> {
        for &f in vertices {
            self.check_vertex(f)?;
            if !self.frozen[f] {
                return Err(QuiverError::DeleteNonFrozen(f + 1));
            }
        }
        let keep: Vec<usize> = (0..self.len()).filter(|v| !vertices.contains(v)).collect();
        Ok(self.induced(&keep))
    }

    /// Full subquiver on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> IceQuiver {
        let b = keep.iter().map(|&i| keep.iter().map(|&j| self.b[i][j]).collect()).collect();
        let frozen = keep.iter().map(|&i| self.frozen[i]).collect();
        IceQuiver { b, frozen }
    }

    /// Relabels: vertex `i` of `self` becomes vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> IceQuiver {
        let n = self.len();
        let mut b = vec![vec![0; n]; n];
        let mut frozen = vec![false; n];
        for i in 0..n {
            frozen[perm[i]] = self.frozen[i];
            for j in 0..n {
                b[perm[i]][perm[j]] = self.b[i][j];
            }
        }
        IceQuiver { b, frozen }
    }

    /// The `n x m` exchange matrix: all rows, columns of non-frozen vertices.
    pub fn exchange_matrix(&self) -> Vec<Vec<i64>> {
        let cols = self.mutable_vertices();
        self.b.iter().map(|row| cols.iter().map(|&j| row[j]).collect()).collect()
    }

    /// Rank over the rationals of the exchange matrix.
    pub fn exchange_rank(&self) -> usize {
        integer_matrix_rank(&self.exchange_matrix())
    }

    pub fn has_full_rank(&self) -> bool {
        self.exchange_rank() == self.mutable_vertices().len()
    }
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn integer_matrix_rank(m: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> =
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let a = rows[rank][col].clone();
            let c = rows[r][col].clone();
            for k in col..ncols {
                let v = &rows[r][k] * &a - &rows[rank][k] * &c;
                rows[r][k] = v;
            }
            // keep entries small
            let g = rows[r].iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            if !g.is_zero() && g.abs() != BigInt::from(1) {
                for x in rows[r].iter_mut() {
                    *x /= &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Random ice quiver: `n` vertices, the last `n_frozen` frozen, entries in
/// `[-max_mult, max_mult]` (frozen-frozen entries included).
pub fn random_quiver<R: Rng>(rng: &mut R, n: usize, n_frozen: usize, max_mult: i64) -> IceQuiver {
    let frozen = (0..n).map(|v| v + n_frozen >= n).collect();
    let mut q = IceQuiver::with_vertices(frozen);
    for i in 0..n {
        for j in i + 1..n {
            let m = rng.gen_range(-max_mult..=max_mult);
            if m != 0 {
                q.add_arrows(i, j, m);
            }
        }
    }
    q
}
