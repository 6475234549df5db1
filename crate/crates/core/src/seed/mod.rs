//! Seeds of cluster algebras and upper cluster algebras.
//!
//! Cluster variables are stored as exact rational functions in the initial
//! cluster `x1, ..., xn`, one variable per vertex (frozen vertices included).

mod closure;
mod specialize;
mod starfish;

pub use closure::{closure, ClosureReport};
pub use specialize::specialize_frozen;
pub use starfish::{
    localization_certificate, starfish_membership, AlgebraFlavor, RingCheck, StarfishVerdict,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{parse_expression, AlgebraError, RationalFunction};
use crate::quiver::{IceQuiver, QuiverError, QuiverFile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("vertex {0} is not frozen")]
    NotFrozen(usize),
    #[error("vertex {0} is frozen")]
    Frozen(usize),
    #[error("closure exceeded {max} seeds (infinite type suspected)")]
    ClosureBound { max: usize },
    #[error("starfish hypothesis violated: exchange matrix has rank {rank} < {mutable}")]
    StarfishHypothesis { rank: usize, mutable: usize },
    #[error("function lives in {found} variables, quiver has {expected} vertices")]
    WrongRing { expected: usize, found: usize },
    #[error("precondition failed: not in the upper cluster algebra of the frozen quiver (fails in {0})")]
    NotInFrozenUpper(String),
    #[error("malformed seed file: {0}")]
    Malformed(String),
}

/// Ice quiver with one cluster variable per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Seed {
    quiver: IceQuiver,
    cluster: Vec<RationalFunction>,
    provenance: Vec<usize>,
}

impl Seed {
    /// The initial seed: cluster `(x1, ..., xn)`, empty mutation path.
    pub fn initial(q: &IceQuiver) -> Seed {
        let n = q.len();
        Seed {
            quiver: q.clone(),
            cluster: (0..n).map(|i| RationalFunction::var(n, i)).collect(),
            provenance: Vec::new(),
        }
    }

    pub fn from_parts(
        quiver: IceQuiver,
        cluster: Vec<RationalFunction>,
        provenance: Vec<usize>,
    ) -> Result<Seed, SeedError> {
        if cluster.len() != quiver.len() {
            return Err(SeedError::Malformed(format!(
                "{} variables for {} vertices",
                cluster.len(),
                quiver.len()
            )));
        }
        Ok(Seed { quiver, cluster, provenance })
    }

    pub fn quiver(&self) -> &IceQuiver {
        &self.quiver
    }

    pub fn cluster(&self) -> &[RationalFunction] {
        &self.cluster
    }

    pub fn variable(&self, v: usize) -> &RationalFunction {
        &self.cluster[v]
    }

    /// Mutation path from the initial seed.
    pub fn provenance(&self) -> &[usize] {
        &self.provenance
    }

    /// The two monomials of the exchange relation at `k`:
    /// `prod x_i^[b_ik]+` and `prod x_i^[-b_ik]+`.
    pub fn exchange_monomials(&self, k: usize) -> (RationalFunction, RationalFunction) {
        exchange_monomials(&self.quiver, &self.cluster, k)
    }

    /// Seed mutation at the non-frozen vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<Seed, SeedError> {
        if k >= self.quiver.len() {
            return Err(QuiverError::VertexOutOfRange { vertex: k + 1, n: self.quiver.len() }.into());
        }
        if self.quiver.is_frozen(k) {
            return Err(QuiverError::MutationAtFrozen(k + 1).into());
        }
        let (m1, m2) = self.exchange_monomials(k);
        let new_var = m1.add(&m2).div(&self.cluster[k])?;
        let mut cluster = self.cluster.clone();
        cluster[k] = new_var;
        let mut provenance = self.provenance.clone();
        provenance.push(k);
        Ok(Seed { quiver: self.quiver.mutate(k)?, cluster, provenance })
    }

    pub fn mutate_sequence(&self, seq: &[usize]) -> Result<Seed, SeedError> {
        seq.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Freezes vertex `k` of the quiver; the cluster is unchanged.
    pub fn freeze(&self, k: usize) -> Result<Seed, SeedError> {
        Ok(Seed { quiver: self.quiver.freeze(k)?, ..self.clone() })
    }

    /// Cluster variables as expression strings.
    pub fn variable_strings(&self) -> Vec<String> {
        self.cluster.iter().map(|f| f.to_string()).collect()
    }

    pub fn to_file(&self) -> SeedFile {
        SeedFile {
            kind: SEED_FILE_TYPE.to_string(),
            quiver: QuiverFile::from_quiver(&self.quiver),
            variables: self.variable_strings(),
            provenance: self.provenance.iter().map(|k| k + 1).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Seed, SeedError> {
        let file: SeedFile =
            serde_json::from_str(text).map_err(|e| SeedError::Malformed(e.to_string()))?;
        file.to_seed()
    }
}

pub const SEED_FILE_TYPE: &str = "seed";

/// Seed on disk: the quiver file plus one expression string per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedFile {
    #[serde(rename = "type")]
    pub kind: String,
    pub quiver: QuiverFile,
    pub variables: Vec<String>,
    #[serde(default)]
    pub provenance: Vec<usize>,
}

impl SeedFile {
    pub fn to_seed(&self) -> Result<Seed, SeedError> {
        if self.kind != SEED_FILE_TYPE {
            return Err(SeedError::Malformed(format!("type must be \"{SEED_FILE_TYPE}\"")));
        }
        let quiver = self.quiver.to_quiver()?;
        let n = quiver.len();
        let cluster = self
            .variables
            .iter()
            .map(|s| parse_expression(s, n))
            .collect::<Result<Vec<_>, _>>()?;
        let provenance = self
            .provenance
            .iter()
            .map(|&k| k.checked_sub(1).ok_or_else(|| SeedError::Malformed("labels start at 1".into())))
            .collect::<Result<Vec<_>, _>>()?;
        Seed::from_parts(quiver, cluster, provenance)
    }
}

pub(crate) fn exchange_monomials(
    q: &IceQuiver,
    cluster: &[RationalFunction],
    k: usize,
) -> (RationalFunction, RationalFunction) {
    let nvars = cluster.first().map_or(0, RationalFunction::nvars);
    let mut m1 = RationalFunction::one(nvars);
    let mut m2 = RationalFunction::one(nvars);
    for (i, x) in cluster.iter().enumerate() {
        let b = q.entry(i, k);
        if b > 0 {
            m1 = m1.mul(&x.pow(b).expect("non-negative power"));
        } else if b < 0 {
            m2 = m2.mul(&x.pow(-b).expect("non-negative power"));
        }
    }
    (m1, m2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expression;

    fn a2() -> IceQuiver {
        IceQuiver::from_arrows(vec![false, false], &[(0, 1, 1)])
    }

    #[test]
    fn initial_clusters() {
        let s = Seed::initial(&a2());
        assert_eq!(s.variable_strings(), vec!["x1", "x2"]);
        assert!(s.provenance().is_empty());
        assert!(Seed::initial(&IceQuiver::empty()).cluster().is_empty());
    }

    #[test]
    fn exchange_relation_a2() {
        let s = Seed::initial(&a2()).mutate(0).unwrap();
        assert_eq!(s.variable(0), &parse_expression("(1 + x2)/x1", 2).unwrap());
        assert_eq!(s.variable(1), &parse_expression("x2", 2).unwrap());
        assert_eq!(s.provenance(), &[0]);
    }

    #[test]
    fn involution_restores_seed() {
        let s = Seed::initial(&a2());
        let back = s.mutate(1).unwrap().mutate(1).unwrap();
        assert_eq!(back.cluster(), s.cluster());
        assert_eq!(back.quiver(), s.quiver());
    }

    #[test]
    fn frozen_mutation_rejected() {
        let q = IceQuiver::from_arrows(vec![false, true], &[(0, 1, 1)]);
        assert!(matches!(
            Seed::initial(&q).mutate(1),
            Err(SeedError::Quiver(QuiverError::MutationAtFrozen(2)))
        ));
    }

    #[test]
    fn frozen_variables_never_change() {
        let q = IceQuiver::from_arrows(vec![false, false, true], &[(0, 1, 1), (2, 0, 1), (1, 2, 1)]);
        let s = Seed::initial(&q).mutate_sequence(&[0, 1, 0, 1, 0]).unwrap();
        assert_eq!(s.variable(2), &RationalFunction::var(3, 2));
    }

    #[test]
    fn seed_file_round_trip() {
        let s = Seed::initial(&a2()).mutate_sequence(&[0, 1]).unwrap();
        let back = Seed::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
    }
}
