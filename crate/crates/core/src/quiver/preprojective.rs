//! Presentation of the preprojective algebra of a Dynkin diagram.

use std::fmt;

use serde::Serialize;

use crate::coxeter::DynkinDiagram;

const GREEK: [&str; 12] = ["α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ"];

/// One edge of the diagram, doubled into `name: source -> target` and its
/// reverse `name*`. Edges are oriented from the smaller to the larger label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleArrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl DoubleArrow {
    pub fn star_name(&self) -> String {
        format!("{}*", self.name)
    }
}

/// Relation at a vertex: a signed sum of 2-cycles, each written as a
/// composition `ab` meaning "first b, then a".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub vertex: usize,
    pub terms: Vec<(i8, [String; 2])>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 = 0");
        }
        for (idx, (sign, [a, b])) in self.terms.iter().enumerate() {
            match (idx, *sign < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{a}{b}")?;
        }
        write!(f, " = 0")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreprojectivePresentation {
    pub vertices: Vec<usize>,
    pub arrows: Vec<DoubleArrow>,
    pub relations: Vec<Relation>,
}

impl PreprojectivePresentation {
    /// All arrows of the double quiver as `(name, source, target)`.
    pub fn double_quiver(&self) -> Vec<(String, usize, usize)> {
        self.arrows
            .iter()
            .flat_map(|a| {
                [(a.name.clone(), a.source, a.target), (a.star_name(), a.target, a.source)]
            })
            .collect()
    }
}

/// Double quiver with one relation per vertex:
/// `sum_{a: u -> v} a a* - sum_{a: v -> w} a* a = 0`.
pub fn preprojective_presentation(diagram: &DynkinDiagram) -> PreprojectivePresentation {
    let arrows: Vec<DoubleArrow> = diagram
        .edges()
        .into_iter()
        .enumerate()
        .map(|(idx, (s, t))| DoubleArrow {
            name: GREEK.get(idx).map_or_else(|| format!("a{}", idx + 1), |g| g.to_string()),
            source: s,
            target: t,
        })
        .collect();
    let vertices: Vec<usize> = (1..=diagram.rank()).collect();
    let relations = vertices
        .iter()
        .map(|&v| {
            let mut terms = Vec::new();
            for a in arrows.iter().filter(|a| a.target == v) {
                terms.push((1, [a.name.clone(), a.star_name()]));
            }
            for a in arrows.iter().filter(|a| a.source == v) {
                terms.push((-1, [a.star_name(), a.name.clone()]));
            }
            Relation { vertex: v, terms }
        })
        .collect();
    PreprojectivePresentation { vertices, arrows, relations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rendered(label: &str) -> Vec<String> {
        let d: DynkinDiagram = label.parse().unwrap();
        preprojective_presentation(&d).relations.iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn a4_relations() {
        assert_eq!(
            rendered("A4"),
            vec!["-α*α = 0", "αα* - β*β = 0", "ββ* - γ*γ = 0", "γγ* = 0"]
        );
    }

    #[test]
    fn a1_has_zero_relation() {
        let p = preprojective_presentation(&"A1".parse().unwrap());
        assert_eq!(p.vertices, vec![1]);
        assert!(p.arrows.is_empty());
        assert_eq!(p.relations.len(), 1);
        assert!(p.relations[0].terms.is_empty());
    }

    #[test]
    fn a2_relations() {
        let p = preprojective_presentation(&"A2".parse().unwrap());
        assert_eq!(p.double_quiver().len(), 2);
        assert_eq!(rendered("A2"), vec!["-α*α = 0", "αα* = 0"]);
    }

    #[test]
    fn d4_branch_vertex() {
        // vertex 2 meets edges 1-2, 2-3, 2-4
        let r = rendered("D4");
        assert_eq!(r[1], "αα* - β*β - γ*γ = 0");
    }
}
