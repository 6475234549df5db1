//! Upper cluster algebra membership through the initial seed and its
//! neighbours: under full rank, `U = L(t0) ∩ ⋂_{k mutable} L(mu_k(t0))`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{exchange_monomials, SeedError};
use crate::algebra::{LaurentPolynomial, RationalFunction};
use crate::quiver::{IceQuiver, QuiverError};

/// Whether frozen variables are invertible (`U`) or not (`U+`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AlgebraFlavor {
    NonInvertibleCoefficients,
    InvertibleCoefficients,
}

impl AlgebraFlavor {
    pub fn invertible(self) -> bool {
        self == AlgebraFlavor::InvertibleCoefficients
    }
}

/// Outcome of re-expressing `f` in one cluster.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingCheck {
    /// `L(t0)` or `L(mu_k(t0))` with `k` 1-based.
    pub ring: String,
    /// Mutated vertex (0-based), `None` for the initial seed.
    #[serde(skip)]
    pub vertex: Option<usize>,
    pub laurent: bool,
    /// Expression in that cluster (the mutated slot holds the new variable).
    pub expression: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarfishVerdict {
    pub member: bool,
    pub checks: Vec<RingCheck>,
}

impl StarfishVerdict {
    /// Names of the Laurent rings in which the function is not Laurent.
    pub fn failing_rings(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.laurent).map(|c| c.ring.as_str()).collect()
    }
}

impl fmt::Display for StarfishVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.member {
            write!(f, "member")
        } else {
            write!(f, "not a member (fails in {})", self.failing_rings().join(", "))
        }
    }
}

fn ring_name(vertex: Option<usize>) -> String {
    match vertex {
        None => "L(t0)".to_string(),
        Some(k) => format!("L(mu_{}(t0))", k + 1),
    }
}

fn admissible(l: &LaurentPolynomial, q: &IceQuiver, flavor: AlgebraFlavor) -> bool {
    flavor.invertible() || q.frozen_vertices().iter().all(|&v| l.min_exponent(v) >= 0)
}

/// Starfish test of `f` against the upper cluster algebra of `q`.
///
/// Requires the exchange matrix to have full rank. Every ring is checked so
/// that all failing clusters are reported.
pub fn starfish_membership(
    q: &IceQuiver,
    f: &RationalFunction,
    flavor: AlgebraFlavor,
) -> Result<StarfishVerdict, SeedError> {
    let n = q.len();
    if f.nvars() != n {
        return Err(SeedError::WrongRing { expected: n, found: f.nvars() });
    }
    let mutable = q.mutable_vertices();
    let rank = q.exchange_rank();
    if rank < mutable.len() {
        return Err(SeedError::StarfishHypothesis { rank, mutable: mutable.len() });
    }
    let initial: Vec<RationalFunction> = (0..n).map(|i| RationalFunction::var(n, i)).collect();
    let mut checks = Vec::with_capacity(mutable.len() + 1);
    let check = |expr: RationalFunction, vertex: Option<usize>| {
        let laurent = expr.to_laurent().is_some_and(|l| admissible(&l, q, flavor));
        RingCheck { ring: ring_name(vertex), vertex, laurent, expression: expr.to_string() }
    };
    checks.push(check(f.clone(), None));
    for &k in &mutable {
        // In mu_k(t0) the old x_k equals (M1 + M2) / x_k', with x_k' stored in slot k.
        let (m1, m2) = exchange_monomials(q, &initial, k);
        let old = m1.add(&m2).div(&initial[k])?;
        let mut assignment: BTreeMap<usize, RationalFunction> =
            (0..n).map(|i| (i, initial[i].clone())).collect();
        assignment.insert(k, old);
        checks.push(check(f.substitute(&assignment)?, Some(k)));
    }
    let member = checks.iter().all(|c| c.laurent);
    Ok(StarfishVerdict { member, checks })
}

/// Smallest `d <= d_max` with `f * x_k^d` in the upper cluster algebra of `q`,
/// given that `f` lies in the upper cluster algebra of `q` with `k` frozen.
pub fn localization_certificate(
    q: &IceQuiver,
    k: usize,
    f: &RationalFunction,
    d_max: u32,
    flavor: AlgebraFlavor,
) -> Result<Option<u32>, SeedError> {
    if k >= q.len() {
        return Err(QuiverError::VertexOutOfRange { vertex: k + 1, n: q.len() }.into());
    }
    if q.is_frozen(k) {
        return Err(SeedError::Frozen(k + 1));
    }
    let frozen_q = q.freeze(k)?;
    let pre = starfish_membership(&frozen_q, f, flavor)?;
    if !pre.member {
        return Err(SeedError::NotInFrozenUpper(pre.failing_rings().join(", ")));
    }
    let xk = RationalFunction::var(q.len(), k);
    let mut g = f.clone();
    for d in 0..=d_max {
        if starfish_membership(q, &g, flavor)?.member {
            return Ok(Some(d));
        }
        g = g.mul(&xk);
    }
    Ok(None)
}
