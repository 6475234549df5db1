use super::{IceQuiver, QuiverError};
use crate::coxeter::{CoxeterError, DynkinDiagram, ReducedWord, WeylGroup};

/// Ice quiver attached to a reduced word.
///
/// Vertices are the positions of the word. Position `k` is frozen when no later
/// position carries the same letter. Horizontal arrows run `k -> k+`, where `k+`
/// is the next position with the same letter. For adjacent letters `i_s`, `i_t`
/// there is an arrow `s -> t` when `t` is the last position before `s` carrying
/// `i_t`, unless `s` is mutable and `s+` comes before `t+` (the interlacing
/// condition `t < s < t+ < s+`, with a missing `t+` counted as infinite).
///
/// Without the interlacing condition the quiver picks up spurious arrows for
/// words such as `1,2,3,2,1,2`, and the exchange relations of the minor
/// realization fail.
pub fn gls_quiver(diagram: &DynkinDiagram, word: &ReducedWord) -> Result<IceQuiver, QuiverError> {
    let group = WeylGroup::new(diagram.clone());
    for &l in word.letters() {
        if l == 0 || l > diagram.rank() {
            return Err(CoxeterError::LetterOutOfRange { letter: l, rank: diagram.rank() }.into());
        }
    }
    if !group.is_reduced(word) {
        return Err(CoxeterError::NotReduced(word.to_string()).into());
    }
    let letters = word.letters();
    let len = letters.len();
    let next_same = |k: usize| (k + 1..len).find(|&t| letters[t] == letters[k]);
    let frozen = (0..len).map(|k| next_same(k).is_none()).collect();
    let mut q = IceQuiver::with_vertices(frozen);
    for s in 0..len {
        if let Some(t) = next_same(s) {
            q.add_arrows(s, t, 1);
        }
        for j in diagram.neighbors(letters[s]) {
            if let Some(t) = (0..s).rev().find(|&t| letters[t] == j) {
                let interlaced = match (next_same(s), next_same(t)) {
                    (None, _) => true,
                    (Some(_), None) => false,
                    (Some(sp), Some(tp)) => tp < sp,
                };
                if interlaced {
                    q.add_arrows(s, t, 1);
                }
            }
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_letter() {
        let q = gls_quiver(&DynkinDiagram::type_a(1), &"1".parse().unwrap()).unwrap();
        assert_eq!(q.len(), 1);
        assert!(q.is_frozen(0));
        assert!(q.arrows().is_empty());
    }

    #[test]
    fn a2_longest_word() {
        let q = gls_quiver(&DynkinDiagram::type_a(2), &"1,2,1".parse().unwrap()).unwrap();
        assert_eq!(q.frozen_vertices(), vec![1, 2]);
        assert_eq!(q.arrows(), vec![(0, 2, 1), (1, 0, 1), (2, 1, 1)]);
    }

    #[test]
    fn nested_positions_are_not_joined() {
        // positions 2 and 4 (letter 2) both lie between 1 and 5 (letter 1)
        let q = gls_quiver(&DynkinDiagram::type_a(3), &"1,2,3,2,1,2".parse().unwrap()).unwrap();
        assert_eq!(q.entry(1, 0), 0);
        assert_eq!(q.entry(3, 0), 1);
    }

    #[test]
    fn non_reduced_rejected() {
        let err = gls_quiver(&DynkinDiagram::type_a(2), &"1,1".parse().unwrap()).unwrap_err();
        assert!(matches!(err, QuiverError::Coxeter(CoxeterError::NotReduced(_))));
        let err = gls_quiver(&DynkinDiagram::type_a(2), &"3".parse().unwrap()).unwrap_err();
        assert!(matches!(err, QuiverError::Coxeter(CoxeterError::LetterOutOfRange { .. })));
    }
}
