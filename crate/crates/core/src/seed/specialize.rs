use super::{Seed, SeedError};

/// Sets the frozen variable at `f` to 1 in every cluster entry and deletes `f`
/// from the quiver. Vertices above `f` shift down by one, as do the variables.
pub fn specialize_frozen(seed: &Seed, f: usize) -> Result<Seed, SeedError> {
    let q = seed.quiver();
    if f >= q.len() {
        return Err(crate::quiver::QuiverError::VertexOutOfRange { vertex: f + 1, n: q.len() }.into());
    }
    if !q.is_frozen(f) {
        return Err(SeedError::NotFrozen(f + 1));
    }
    let quiver = q.delete_frozen(f)?;
    let cluster = seed
        .cluster()
        .iter()
        .enumerate()
        .filter(|&(v, _)| v != f)
        .map(|(_, x)| x.specialize_to_one_and_drop(f))
        .collect::<Result<Vec<_>, _>>()?;
    let provenance = seed.provenance().iter().map(|&k| if k > f { k - 1 } else { k }).collect();
    Seed::from_parts(quiver, cluster, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expression;
    use crate::quiver::IceQuiver;

    fn q() -> IceQuiver {
        IceQuiver::from_arrows(vec![false, true], &[(0, 1, 1)])
    }

    #[test]
    fn commutes_with_mutation_by_hand() {
        let a = specialize_frozen(&Seed::initial(&q()).mutate(0).unwrap(), 1).unwrap();
        let b = Seed::initial(&specialize_frozen(&Seed::initial(&q()), 1).unwrap().quiver().clone())
            .mutate(0)
            .unwrap();
        assert_eq!(a.variable(0), &parse_expression("2/x1", 1).unwrap());
        assert_eq!(a.cluster(), b.cluster());
    }

    #[test]
    fn isolated_frozen_vertex() {
        let q = IceQuiver::from_arrows(vec![false, false, true], &[(0, 1, 1)]);
        let s = Seed::initial(&q).mutate(0).unwrap();
        let t = specialize_frozen(&s, 2).unwrap();
        assert_eq!(t.variable_strings(), vec!["(x2 + 1)/x1", "x2"]);
    }

    #[test]
    fn initial_goes_to_initial() {
        let s = specialize_frozen(&Seed::initial(&q()), 1).unwrap();
        assert_eq!(s, Seed::initial(&IceQuiver::with_vertices(vec![false])));
    }

    #[test]
    fn mutable_vertex_rejected() {
        assert_eq!(specialize_frozen(&Seed::initial(&q()), 0), Err(SeedError::NotFrozen(1)));
    }
}
