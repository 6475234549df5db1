//! Type-A flag minors on the unipotent group of upper unitriangular matrices.
//!
//! Index sets are 1-based subsets of `1..=n`, where `n` is the matrix size
//! (`rank + 1` for a diagram of type `A_rank`).

mod realization;
mod symbolic;

pub use realization::{
    cn_seed_realization, verify_exchange_identities, Counterexample, IdentityReport, RelationCheck,
    RelationStatus, SeedRealization, VertexMinor,
};
pub use symbolic::SymbolicUnipotent;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::coxeter::{CoxeterError, WeylGroup, WeylGroupElement};
use crate::quiver::QuiverError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("row set has {rows} elements but column set has {cols}")]
    SizeMismatch { rows: usize, cols: usize },
    #[error("index {index} out of range for a {n}x{n} matrix")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("minor index sets must be nonempty")]
    Empty,
    #[error("repeated index {0} in a minor index set")]
    RepeatedIndex(usize),
    #[error("fundamental index {i} out of range for rank {rank}")]
    FundamentalIndex { i: usize, rank: usize },
    #[error(
        "convention mismatch: exchange relations fail both for rows {{1..i}} / cols w({{1..i}}) \
         and for the transposed assignment ({0})"
    )]
    ConventionMismatch(String),
}

/// Square matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: Vec<Vec<BigRational>>,
}

impl ExactMatrix {
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect();
        ExactMatrix { rows }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ExactMatrix { rows }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.rows[i][j] = value;
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn is_unitriangular(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            (0..n).all(|j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => self.rows[i][j].is_one(),
                std::cmp::Ordering::Greater => self.rows[i][j].is_zero(),
                std::cmp::Ordering::Less => true,
            })
        })
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diagonal(&self, other: &ExactMatrix) -> ExactMatrix {
        let (a, b) = (self.size(), other.size());
        let mut out = vec![vec![BigRational::zero(); a + b]; a + b];
        for i in 0..a {
            out[i][..a].clone_from_slice(&self.rows[i]);
        }
        for i in 0..b {
            out[a + i][a..].clone_from_slice(&other.rows[i]);
        }
        ExactMatrix { rows: out }
    }

    pub fn determinant(&self) -> BigRational {
        let idx: Vec<usize> = (0..self.size()).collect();
        determinant_of(&self.rows, &idx, &idx)
    }

    /// Entries as strings, for reports.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Gaussian elimination on the submatrix with the given 0-based rows and columns.
fn determinant_of(m: &[Vec<BigRational>], rows: &[usize], cols: &[usize]) -> BigRational {
    let k = rows.len();
    let mut a: Vec<Vec<BigRational>> =
        rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for r in c + 1..k {
            if a[r][c].is_zero() {
                continue;
            }
            let factor = &a[r][c] / &pivot;
            for j in c..k {
                let delta = &factor * &a[c][j];
                a[r][j] -= delta;
            }
        }
    }
    det
}

/// Row and column sets of a minor, 1-based and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self, MinorError> {
        if rows.len() != cols.len() {
            return Err(MinorError::SizeMismatch { rows: rows.len(), cols: cols.len() });
        }
        if rows.is_empty() {
            return Err(MinorError::Empty);
        }
        for set in [&mut rows, &mut cols] {
            set.sort_unstable();
            if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
                return Err(MinorError::RepeatedIndex(w[0]));
            }
            if set[0] == 0 {
                return Err(MinorError::IndexOutOfRange { index: 0, n: 0 });
            }
        }
        Ok(MinorSpec { rows, cols })
    }

    /// The flag minor with rows `{1..cols.len()}`.
    pub fn flag(cols: Vec<usize>) -> Result<Self, MinorError> {
        Self::new((1..=cols.len()).collect(), cols)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn transposed(&self) -> MinorSpec {
        MinorSpec { rows: self.cols.clone(), cols: self.rows.clone() }
    }

    fn check_size(&self, n: usize) -> Result<(), MinorError> {
        match self.rows.iter().chain(&self.cols).find(|&&i| i > n) {
            Some(&index) => Err(MinorError::IndexOutOfRange { index, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |s: &[usize]| s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "D[{{{}}},{{{}}}]", set(&self.rows), set(&self.cols))
    }
}

/// Seeded upper unitriangular `n x n` matrix. Entries above the diagonal are
/// `p/q` with `p` uniform in `-9..=9` and `q` uniform in `1..=9`.
pub fn random_unitriangular(n: usize, seed: u64) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = ExactMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            let p: i64 = rng.gen_range(-9..=9);
            let q: i64 = rng.gen_range(1..=9);
            g.set(i, j, BigRational::new(p.into(), q.into()));
        }
    }
    g
}

/// Exact determinant of the submatrix of `g` selected by `spec`.
pub fn flag_minor(g: &ExactMatrix, spec: &MinorSpec) -> Result<BigRational, MinorError> {
    spec.check_size(g.size())?;
    let rows: Vec<usize> = spec.rows.iter().map(|i| i - 1).collect();
    let cols: Vec<usize> = spec.cols.iter().map(|i| i - 1).collect();
    Ok(determinant_of(&g.rows, &rows, &cols))
}

/// Index sets of the generalized minor `Δ_{u(ϖ_i), v(ϖ_i)}`: rows `u({1..i})`,
/// columns `v({1..i})`. Type A only.
pub fn generalized_minor_sets(
    group: &WeylGroup,
    u: &WeylGroupElement,
    v: &WeylGroupElement,
    i: usize,
) -> Result<MinorSpec, MinorError> {
    if i == 0 || i > group.rank() {
        return Err(MinorError::FundamentalIndex { i, rank: group.rank() });
    }
    let initial: Vec<usize> = (1..=i).collect();
    let rows = group.apply_to_set(u, &initial)?;
    let cols = group.apply_to_set(v, &initial)?;
    MinorSpec::new(rows, cols)
}

/// `D_{v,w}(g) = prod_i Δ_{v⁻¹(ϖ_i), w⁻¹(ϖ_i)}(g)`. Type A only.
pub fn richardson_denominator(
    group: &WeylGroup,
    v: &WeylGroupElement,
    w: &WeylGroupElement,
    g: &ExactMatrix,
) -> Result<BigRational, MinorError> {
    let (vi, wi) = (group.inverse(v), group.inverse(w));
    let mut acc = BigRational::one();
    for i in 1..=group.rank() {
        acc *= flag_minor(g, &generalized_minor_sets(group, &vi, &wi, i)?)?;
    }
    Ok(acc)
}
