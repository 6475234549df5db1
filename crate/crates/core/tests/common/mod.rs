//! Fixtures and independent oracles shared by the integration tests and the
//! acceptance runner. Nothing here calls the code it is used to check, except
//! for building inputs.

#![allow(dead_code)]

use std::collections::BTreeSet;

use clusterbench::quiver::IceQuiver;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// A quiver transcribed from a drawing on a grid: cells are `(row, col)`,
/// squares are frozen, and arrows are given as the drawing's directions
/// (`"rd"`, `"ru"`, `"ll"`).
pub struct GridFigure {
    pub squares: &'static [(i32, i32)],
    pub bullets: &'static [(i32, i32)],
    pub arrows: &'static [((i32, i32), &'static str)],
}

impl GridFigure {
    pub fn quiver(&self) -> IceQuiver {
        let cells: Vec<(i32, i32)> = self.squares.iter().chain(self.bullets).copied().collect();
        let frozen = (0..cells.len()).map(|i| i < self.squares.len()).collect();
        let index = |c: (i32, i32)| cells.iter().position(|&d| d == c).expect("cell in figure");
        let mut q = IceQuiver::with_vertices(frozen);
        for &(from, dir) in self.arrows {
            let to = match dir {
                "rd" => (from.0 + 1, from.1 + 1),
                "ru" => (from.0 - 1, from.1 + 1),
                "ll" => (from.0, from.1 - 2),
                other => panic!("unknown direction {other}"),
            };
            q.add_arrows(index(from), index(to), 1);
        }
        q
    }
}

/// Figure for the reduced word 1,2,3,1,2,4,3 in A4 (4 squares, 3 bullets).
pub const FIGURE_RICHARDSON: GridFigure = GridFigure {
    squares: &[(1, 2), (2, 1), (3, 2), (4, 3)],
    bullets: &[(2, 3), (3, 4), (4, 5)],
    arrows: &[
        ((1, 2), "rd"),
        ((2, 1), "rd"),
        ((2, 1), "ru"),
        ((2, 3), "rd"),
        ((2, 3), "ll"),
        ((3, 2), "ru"),
        ((3, 2), "rd"),
        ((3, 4), "rd"),
        ((3, 4), "ll"),
        ((4, 3), "ru"),
        ((4, 5), "ll"),
    ],
};

/// Figure for the reduced word 1,2,3,4,1,2,3,1,2,1 of w0 in A4.
pub const FIGURE_W0: GridFigure = GridFigure {
    squares: &[(1, 4), (2, 3), (3, 2), (4, 1)],
    bullets: &[(2, 5), (3, 4), (3, 6), (4, 3), (4, 5), (4, 7)],
    arrows: &[
        ((1, 4), "rd"),
        ((2, 3), "ru"),
        ((2, 3), "rd"),
        ((2, 5), "ll"),
        ((2, 5), "rd"),
        ((3, 2), "ru"),
        ((3, 2), "rd"),
        ((3, 4), "ru"),
        ((3, 4), "ll"),
        ((3, 4), "rd"),
        ((3, 6), "ll"),
        ((3, 6), "rd"),
        ((4, 1), "ru"),
        ((4, 3), "ll"),
        ((4, 3), "ru"),
        ((4, 5), "ll"),
        ((4, 5), "ru"),
        ((4, 7), "ll"),
    ],
};

pub const WORD_RICHARDSON: &str = "1,2,3,1,2,4,3";
pub const WORD_W0_A4: &str = "1,2,3,4,1,2,3,1,2,1";

// ---------------------------------------------------------------------------
// Permutation model of type A Weyl groups.

/// One-line notation of `s_{i1} ∘ ... ∘ s_{il}` on `1..=n`.
pub fn perm_of_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    // p = p ∘ s_i swaps positions i and i+1
    for &i in word {
        p.swap(i - 1, i);
    }
    p
}

pub fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

/// Tableau criterion: `v ≤ w` iff for every `i` the sorted prefixes of the
/// one-line notations compare entrywise.
pub fn bruhat_by_tableau(v: &[usize], w: &[usize]) -> bool {
    (1..v.len()).all(|i| {
        let mut a = v[..i].to_vec();
        let mut b = w[..i].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

/// Subword property: every element obtained from a subword of a reduced word
/// of `w` (as a set of permutations).
pub fn bruhat_interval_by_subwords(n: usize, reduced_word_of_w: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut reach: BTreeSet<Vec<usize>> = BTreeSet::from([(1..=n).collect()]);
    for &i in reduced_word_of_w {
        let extended: Vec<Vec<usize>> = reach
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.swap(i - 1, i);
                q
            })
            .collect();
        reach.extend(extended);
    }
    reach
}

/// Number of reduced words of the permutation `target`, by extending words
/// letter by letter while the inversion count grows.
pub fn count_reduced_words(n: usize, target: &[usize]) -> usize {
    fn rec(p: &mut Vec<usize>, len: usize, target: &[usize], goal: usize) -> usize {
        if len == goal {
            return usize::from(p.as_slice() == target);
        }
        let mut total = 0;
        for i in 1..p.len() {
            if p[i - 1] < p[i] {
                p.swap(i - 1, i);
                total += rec(p, len + 1, target, goal);
                p.swap(i - 1, i);
            }
        }
        total
    }
    let mut p: Vec<usize> = (1..=n).collect();
    rec(&mut p, 0, target, inversions(target))
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 1..=n {
            if !cur.contains(&x) {
                cur.push(x);
                rec(cur, n, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Numeric seed enumerator: cluster variables represented by their values at
// fixed rational points, mutated with a separately written exchange rule.

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

#[derive(Clone)]
struct NumericSeed {
    b: Vec<Vec<i64>>,
    // values[point][vertex]
    values: Vec<Vec<BigRational>>,
}

fn numeric_mutate(s: &NumericSeed, k: usize) -> NumericSeed {
    let n = s.b.len();
    let mut values = s.values.clone();
    for (pt, vals) in s.values.iter().enumerate() {
        let mut p = BigRational::one();
        let mut m = BigRational::one();
        for i in 0..n {
            let e = s.b[i][k];
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    p *= &vals[i];
                } else {
                    m *= &vals[i];
                }
            }
        }
        values[pt][k] = (p + m) / &vals[k];
    }
    let mut b = s.b.clone();
    for i in 0..n {
        for j in 0..n {
            b[i][j] = if i == k || j == k {
                -s.b[i][j]
            } else {
                let (x, y) = (s.b[i][k], s.b[k][j]);
                s.b[i][j] + (x.abs() * y + x * y.abs()) / 2
            };
        }
    }
    NumericSeed { b, values }
}

/// Explores all mutation sequences (no immediate repetition) up to
/// `max_len` on a quiver without frozen vertices and returns the number of
/// distinct clusters (as unordered sets of values) and distinct variables.
pub fn brute_force_cluster_counts(b: &[Vec<i64>], max_len: usize) -> (usize, usize) {
    let n = b.len();
    let points = [vec![q(2, 1), q(3, 1), q(5, 1), q(7, 1)], vec![q(3, 2), q(-5, 7), q(11, 3), q(4, 9)]];
    let start = NumericSeed {
        b: b.to_vec(),
        values: points.iter().map(|p| p[..n].to_vec()).collect(),
    };
    let key = |s: &NumericSeed, v: usize| -> Vec<BigRational> {
        s.values.iter().map(|vals| vals[v].clone()).collect()
    };
    let mut clusters: BTreeSet<BTreeSet<Vec<BigRational>>> = BTreeSet::new();
    let mut variables: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    let mut frontier = vec![(start, None::<usize>)];
    for depth in 0..=max_len {
        let mut next = Vec::new();
        for (s, last) in &frontier {
            let cluster: BTreeSet<_> = (0..n).map(|v| key(s, v)).collect();
            variables.extend(cluster.iter().cloned());
            clusters.insert(cluster);
            if depth < max_len {
                for k in 0..n {
                    if Some(k) != *last {
                        next.push((numeric_mutate(s, k), Some(k)));
                    }
                }
            }
        }
        frontier = next;
    }
    (clusters.len(), variables.len())
}

/// Entry `(i, j)` of a matrix given as a map, for building small quivers by hand.
pub fn matrix_from_arrows(n: usize, arrows: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut b = vec![vec![0; n]; n];
    for &(s, t) in arrows {
        b[s][t] += 1;
        b[t][s] -= 1;
    }
    b
}

/// Rank over Q by fraction Gaussian elimination.
pub fn rank_oracle(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != q(0, 1)) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && a[r][c] != q(0, 1) {
                let f = &a[r][c] / &a[rank][c];
                for j in 0..cols {
                    let d = &f * &a[rank][j];
                    a[r][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Values of the cluster after mutating along `seq`, starting from the
/// cluster `point`, with the oracle's own exchange rule.
pub fn numeric_cluster_after(b: &[Vec<i64>], seq: &[usize], point: &[BigRational]) -> Vec<BigRational> {
    let mut s = NumericSeed { b: b.to_vec(), values: vec![point.to_vec()] };
    for &k in seq {
        s = numeric_mutate(&s, k);
    }
    s.values.pop().expect("one point")
}

/// Random ice quiver with at most `max_mutable` mutable vertices whose
/// mutable part is a randomly oriented and labelled tame graph (a path, the
/// D4 star, or a 3- or 4-cycle) and with up to `max_frozen` frozen vertices
/// joined by single arrows to random mutable vertices. Frozen vertices come last.
pub fn random_tame_quiver<R: rand::Rng>(rng: &mut R, max_mutable: usize, max_frozen: usize) -> IceQuiver {
    use rand::seq::SliceRandom;
    let m = rng.gen_range(1..=max_mutable);
    let mut edges: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
    match (m, rng.gen_range(0..3)) {
        (4, 0) => edges = vec![(0, 1), (0, 2), (0, 3)],
        (3..=4, 1) => edges.push((m - 1, 0)),
        _ => {}
    }
    let mut labels: Vec<usize> = (0..m).collect();
    labels.shuffle(rng);
    let nf = rng.gen_range(0..=max_frozen);
    let mut q = IceQuiver::with_vertices((0..m + nf).map(|v| v >= m).collect());
    for (s, t) in edges {
        let (s, t) = (labels[s], labels[t]);
        if rng.gen_bool(0.5) {
            q.add_arrows(s, t, 1);
        } else {
            q.add_arrows(t, s, 1);
        }
    }
    for f in m..m + nf {
        for v in 0..m {
            match rng.gen_range(0..3) {
                0 => q.add_arrows(f, v, 1),
                1 => q.add_arrows(v, f, 1),
                _ => {}
            }
        }
    }
    q
}
