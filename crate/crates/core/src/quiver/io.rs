//! Canonical JSON quiver files and 1-based wire forms.
//!
//! `{"type":"ice_quiver","vertices":[{"id":1,"frozen":false},...],"arrows":[[src,tgt,mult],...]}`
//! with vertices sorted by id, arrows sorted lexicographically and `mult >= 1`.

use serde::{Deserialize, Serialize};

use super::reduction::{ReductionScript, ReductionStep};
use super::{IceQuiver, QuiverError};

pub const QUIVER_FILE_TYPE: &str = "ice_quiver";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    #[serde(rename = "type")]
    pub kind: String,
    pub vertices: Vec<VertexEntry>,
    pub arrows: Vec<(usize, usize, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: usize,
    pub frozen: bool,
}

impl QuiverFile {
    pub fn from_quiver(q: &IceQuiver) -> Self {
        QuiverFile {
            kind: QUIVER_FILE_TYPE.to_string(),
            vertices: (0..q.len())
                .map(|v| VertexEntry { id: v + 1, frozen: q.is_frozen(v) })
                .collect(),
            arrows: q.arrows().into_iter().map(|(s, t, m)| (s + 1, t + 1, m)).collect(),
        }
    }

    pub fn to_quiver(&self) -> Result<IceQuiver, QuiverError> {
        if self.kind != QUIVER_FILE_TYPE {
            return Err(QuiverError::Malformed(format!("type must be \"{QUIVER_FILE_TYPE}\"")));
        }
        for (idx, v) in self.vertices.iter().enumerate() {
            if v.id != idx + 1 {
                return Err(QuiverError::Malformed(format!(
                    "vertex ids must be 1..n in order, found {} at position {}",
                    v.id,
                    idx + 1
                )));
            }
        }
        let n = self.vertices.len();
        let mut q = IceQuiver::with_vertices(self.vertices.iter().map(|v| v.frozen).collect());
        for &(s, t, m) in &self.arrows {
            if s == 0 || t == 0 || s > n || t > n {
                return Err(QuiverError::Malformed(format!("arrow [{s},{t},{m}] out of range")));
            }
            if s == t {
                return Err(QuiverError::Malformed(format!("loop at vertex {s}")));
            }
            if m < 1 {
                return Err(QuiverError::Malformed(format!("arrow [{s},{t},{m}] needs mult >= 1")));
            }
            if q.entry(t - 1, s - 1) > 0 {
                return Err(QuiverError::Malformed(format!("2-cycle between {s} and {t}")));
            }
            q.add_arrows(s - 1, t - 1, m);
        }
        Ok(q)
    }
}

impl IceQuiver {
    /// Canonical compact JSON (no trailing newline).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&QuiverFile::from_quiver(self)).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(QuiverFile::from_quiver(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<IceQuiver, QuiverError> {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| QuiverError::Malformed(e.to_string()))?;
        file.to_quiver()
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<IceQuiver, QuiverError> {
        let file: QuiverFile = serde_json::from_value(value.clone())
            .map_err(|e| QuiverError::Malformed(e.to_string()))?;
        file.to_quiver()
    }
}

/// Reduction script on the wire, with 1-based labels. Either the three phase
/// lists or an ordered `steps` list may be given, not both.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReductionScriptFile {
    #[serde(default)]
    pub mutations: Vec<usize>,
    #[serde(default)]
    pub freezes: Vec<usize>,
    #[serde(default)]
    pub deletions: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<StepEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepEntry {
    pub op: String,
    pub vertex: usize,
}

impl ReductionScriptFile {
    pub fn from_script(s: &ReductionScript) -> Self {
        let one = |v: &Vec<usize>| v.iter().map(|x| x + 1).collect();
        ReductionScriptFile {
            mutations: one(&s.mutations),
            freezes: one(&s.freezes),
            deletions: one(&s.deletions),
            steps: None,
        }
    }

    pub fn to_script(&self) -> Result<ReductionScript, QuiverError> {
        let zero = |v: usize| {
            v.checked_sub(1).ok_or_else(|| QuiverError::Malformed("vertex labels start at 1".into()))
        };
        match &self.steps {
            Some(steps) => {
                if !(self.mutations.is_empty() && self.freezes.is_empty() && self.deletions.is_empty()) {
                    return Err(QuiverError::Malformed(
                        "give either steps or phase lists, not both".into(),
                    ));
                }
                let parsed = steps
                    .iter()
                    .map(|s| {
                        let v = zero(s.vertex)?;
                        match s.op.as_str() {
                            "mutate" => Ok(ReductionStep::Mutate(v)),
                            "freeze" => Ok(ReductionStep::Freeze(v)),
                            "delete" => Ok(ReductionStep::Delete(v)),
                            other => Err(QuiverError::Malformed(format!("unknown step '{other}'"))),
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                ReductionScript::from_steps(&parsed)
            }
            None => Ok(ReductionScript {
                mutations: self.mutations.iter().map(|&v| zero(v)).collect::<Result<_, _>>()?,
                freezes: self.freezes.iter().map(|&v| zero(v)).collect::<Result<_, _>>()?,
                deletions: self.deletions.iter().map(|&v| zero(v)).collect::<Result<_, _>>()?,
            }),
        }
    }
}
