//! Cluster reduction: mutate, then freeze, then delete frozen vertices.

use super::{IceQuiver, QuiverError};

/// A reduction script. All labels are 0-based and refer to the quiver the
/// script is applied to (mutation and freezing never relabel; deletions are
/// carried out simultaneously).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionScript {
    pub mutations: Vec<usize>,
    pub freezes: Vec<usize>,
    pub deletions: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    Mutate(usize),
    Freeze(usize),
    Delete(usize),
}

impl ReductionStep {
    fn phase(self) -> u8 {
        match self {
            ReductionStep::Mutate(_) => 0,
            ReductionStep::Freeze(_) => 1,
            ReductionStep::Delete(_) => 2,
        }
    }
}

impl ReductionScript {
    pub fn is_empty(&self) -> bool {
        self.mutations.is_empty() && self.freezes.is_empty() && self.deletions.is_empty()
    }

    /// Groups an ordered list of steps into phases, rejecting any step that
    /// comes after a later phase has started.
    pub fn from_steps(steps: &[ReductionStep]) -> Result<Self, QuiverError> {
        let mut script = ReductionScript::default();
        let mut phase = 0;
        for (idx, &step) in steps.iter().enumerate() {
            if step.phase() < phase {
                return Err(QuiverError::PhaseOrder(format!(
                    "step {} ({step:?}) follows a later phase",
                    idx + 1
                )));
            }
            phase = step.phase();
            match step {
                ReductionStep::Mutate(v) => script.mutations.push(v),
                ReductionStep::Freeze(v) => script.freezes.push(v),
                ReductionStep::Delete(v) => script.deletions.push(v),
            }
        }
        Ok(script)
    }

    pub fn steps(&self) -> Vec<ReductionStep> {
        self.mutations
            .iter()
            .map(|&v| ReductionStep::Mutate(v))
            .chain(self.freezes.iter().map(|&v| ReductionStep::Freeze(v)))
            .chain(self.deletions.iter().map(|&v| ReductionStep::Delete(v)))
            .collect()
    }

    /// The script performing `self` and then `next` (whose labels refer to the
    /// quiver produced by `self`). Fails when the concatenation is not phase ordered.
    pub fn then(&self, next: &ReductionScript) -> Result<ReductionScript, QuiverError> {
        if (!self.freezes.is_empty() || !self.deletions.is_empty()) && !next.mutations.is_empty() {
            return Err(QuiverError::PhaseOrder("mutation after freeze or delete".into()));
        }
        if !self.deletions.is_empty() && !next.freezes.is_empty() {
            return Err(QuiverError::PhaseOrder("freeze after delete".into()));
        }
        // Deletions of `next` are labelled after `self`'s deletions; map them back.
        let mut deleted = self.deletions.clone();
        deleted.sort_unstable();
        let lift = |mut v: usize| {
            for &d in &deleted {
                if d <= v {
                    v += 1;
                }
            }
            v
        };
        let mut out = self.clone();
        out.mutations.extend(&next.mutations);
        out.freezes.extend(&next.freezes);
        out.deletions.extend(next.deletions.iter().map(|&v| lift(v)));
        Ok(out)
    }
}

/// Applies the three phases of `script` in order.
pub fn apply_reduction(q: &IceQuiver, script: &ReductionScript) -> Result<IceQuiver, QuiverError> {
    let mut cur = q.mutate_sequence(&script.mutations)?;
    for &f in &script.freezes {
        cur = cur.freeze(f)?;
    }
    let mut dels = script.deletions.clone();
    dels.sort_unstable();
    if dels.windows(2).any(|w| w[0] == w[1]) {
        return Err(QuiverError::Malformed("vertex deleted twice".into()));
    }
    cur.delete_frozen_set(&dels)
}
