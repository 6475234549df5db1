use super::{IceQuiver, QuiverError};

pub const MAX_ISOMORPHISM_VERTICES: usize = 12;

/// Frozen-preserving isomorphism `q1 -> q2`, as `map[v1] = v2`.
///
/// Backtracking over vertices with pruning by frozen flag and by the sorted
/// multiset of matrix entries in each row.
pub fn quiver_isomorphic(q1: &IceQuiver, q2: &IceQuiver) -> Result<Option<Vec<usize>>, QuiverError> {
    let n = q1.len();
    if n > MAX_ISOMORPHISM_VERTICES || q2.len() > MAX_ISOMORPHISM_VERTICES {
        return Err(QuiverError::TooLarge { n: n.max(q2.len()), max: MAX_ISOMORPHISM_VERTICES });
    }
    if n != q2.len() {
        return Ok(None);
    }
    let signature = |q: &IceQuiver, v: usize| {
        let mut row: Vec<i64> = q.matrix()[v].clone();
        row.sort_unstable();
        (q.is_frozen(v), row)
    };
    let sig1: Vec<_> = (0..n).map(|v| signature(q1, v)).collect();
    let sig2: Vec<_> = (0..n).map(|v| signature(q2, v)).collect();
    let mut s1 = sig1.clone();
    let mut s2 = sig2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(None);
    }
    // Identity first: most comparisons are against an already aligned fixture.
    let identity: Vec<usize> = (0..n).collect();
    if q1 == q2 {
        return Ok(Some(identity));
    }
    let candidates: Vec<Vec<usize>> =
        (0..n).map(|v| (0..n).filter(|&u| sig1[v] == sig2[u]).collect()).collect();
    // Most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| candidates[v].len());
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(q1, q2, &order, 0, &candidates, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn backtrack(
    q1: &IceQuiver,
    q2: &IceQuiver,
    order: &[usize],
    depth: usize,
    candidates: &[Vec<usize>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for &u in &candidates[v] {
        if used[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| q1.entry(v, w) == q2.entry(u, map[w]));
        if !consistent {
            continue;
        }
        map[v] = u;
        used[u] = true;
        if backtrack(q1, q2, order, depth + 1, candidates, map, used) {
            return true;
        }
        used[u] = false;
        map[v] = usize::MAX;
    }
    false
}
