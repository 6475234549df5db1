//! Simply-laced Weyl groups acting on the root lattice.
//!
//! An element is stored as the images of the simple roots, so equality of
//! elements is equality of integer matrices. Words compose left to right as
//! functions: the word `(i1, ..., il)` evaluates to `s_i1 ∘ ... ∘ s_il`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("unknown or unsupported Dynkin type '{0}'")]
    UnknownType(String),
    #[error("letter {letter} outside 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("cannot parse word '{0}'")]
    BadWord(String),
    #[error("length {length} exceeds the enumeration guard {max}")]
    TooLong { length: usize, max: usize },
    #[error("empty Richardson variety: v is not below w in Bruhat order")]
    EmptyRichardson,
    #[error("operation requires a type A diagram, got {0}")]
    NotTypeA(String),
    #[error("word {0} is not reduced")]
    NotReduced(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    D,
    E,
}

/// Connected simply-laced Dynkin diagram on vertices `1..=rank` (Bourbaki labels).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    kind: DynkinType,
    rank: usize,
    adjacency: Vec<Vec<bool>>,
}

impl DynkinDiagram {
    pub fn new(kind: DynkinType, rank: usize) -> Result<Self, CoxeterError> {
        let label = format!("{kind:?}{rank}");
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match kind {
            DynkinType::A if rank >= 1 => edges.extend((1..rank).map(|i| (i, i + 1))),
            DynkinType::D if rank >= 4 => {
                edges.extend((1..rank - 1).map(|i| (i, i + 1)));
                edges.push((rank - 2, rank));
            }
            DynkinType::E if (6..=8).contains(&rank) => {
                edges.extend([(1, 3), (3, 4), (4, 5), (2, 4)]);
                edges.extend((5..rank).map(|i| (i, i + 1)));
            }
            _ => return Err(CoxeterError::UnknownType(label)),
        }
        let mut adjacency = vec![vec![false; rank]; rank];
        for (a, b) in edges {
            adjacency[a - 1][b - 1] = true;
            adjacency[b - 1][a - 1] = true;
        }
        Ok(DynkinDiagram { kind, rank, adjacency })
    }

    pub fn type_a(rank: usize) -> Self {
        Self::new(DynkinType::A, rank).expect("A_n exists for n >= 1")
    }

    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adjacency of 1-based vertices.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i - 1][j - 1]
    }

    /// Edges `(i, j)` with `i < j`, 1-based, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.rank {
            for j in i + 1..=self.rank {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank).filter(move |&j| self.adjacent(i, j))
    }

    fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if self.adjacency[i][j] {
            -1
        } else {
            0
        }
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for DynkinDiagram {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || CoxeterError::UnknownType(s.to_string());
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => DynkinType::A,
            Some('D') => DynkinType::D,
            Some('E') => DynkinType::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        DynkinDiagram::new(kind, rank)
    }
}

/// Sequence of simple-reflection letters (1-based).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> ReducedWord {
        ReducedWord(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for ReducedWord {
    type Err = CoxeterError;

    /// Comma-separated letters; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ReducedWord(Vec::new()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| CoxeterError::BadWord(s.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(ReducedWord)
    }
}

/// Weyl group element given by the images of the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylGroupElement {
    /// `images[j]` = coordinates of `w(alpha_{j+1})` in the simple-root basis.
    images: Vec<Vec<i64>>,
    length: usize,
}

impl WeylGroupElement {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn root_images(&self) -> &[Vec<i64>] {
        &self.images
    }
}

/// A Weyl group together with its positive roots.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    diagram: DynkinDiagram,
    positive_roots: Vec<Vec<i64>>,
}

/// Largest length for which reduced words are enumerated.
pub const MAX_ENUMERATION_LENGTH: usize = 12;

fn is_positive(root: &[i64]) -> bool {
    root.iter().all(|&c| c >= 0)
}

impl WeylGroup {
    pub fn new(diagram: DynkinDiagram) -> Self {
        let r = diagram.rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        let mut roots = Vec::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..r {
                let c: i64 = (0..r).map(|j| beta[j] * diagram.cartan(j, i)).sum();
                let mut next = beta.clone();
                next[i] -= c;
                if is_positive(&next) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            roots.push(beta);
        }
        roots.sort();
        WeylGroup { diagram, positive_roots: roots }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    fn from_images(&self, images: Vec<Vec<i64>>) -> WeylGroupElement {
        let length = self
            .positive_roots
            .iter()
            .filter(|beta| !is_positive(&Self::apply_images(&images, beta)))
            .count();
        WeylGroupElement { images, length }
    }

    fn apply_images(images: &[Vec<i64>], root: &[i64]) -> Vec<i64> {
        let r = images.len();
        let mut out = vec![0; r];
        for (j, &c) in root.iter().enumerate() {
            if c != 0 {
                for k in 0..r {
                    out[k] += c * images[j][k];
                }
            }
        }
        out
    }

    pub fn identity(&self) -> WeylGroupElement {
        let r = self.rank();
        let images = (0..r)
            .map(|j| {
                let mut e = vec![0; r];
                e[j] = 1;
                e
            })
            .collect();
        WeylGroupElement { images, length: 0 }
    }

    /// `s_i` for a 1-based letter.
    pub fn simple_reflection(&self, letter: usize) -> Result<WeylGroupElement, CoxeterError> {
        self.check_letter(letter)?;
        let i = letter - 1;
        let r = self.rank();
        let images = (0..r)
            .map(|j| {
                let mut e = vec![0; r];
                e[j] = 1;
                e[i] -= self.diagram.cartan(i, j);
                e
            })
            .collect();
        Ok(WeylGroupElement { images, length: 1 })
    }

    fn check_letter(&self, letter: usize) -> Result<(), CoxeterError> {
        if letter == 0 || letter > self.rank() {
            Err(CoxeterError::LetterOutOfRange { letter, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    /// `w(root)` in simple-root coordinates.
    pub fn apply(&self, w: &WeylGroupElement, root: &[i64]) -> Vec<i64> {
        Self::apply_images(&w.images, root)
    }

    /// The composite `a ∘ b`.
    pub fn multiply(&self, a: &WeylGroupElement, b: &WeylGroupElement) -> WeylGroupElement {
        let images = b.images.iter().map(|col| Self::apply_images(&a.images, col)).collect();
        self.from_images(images)
    }

    /// Evaluates a word as a product of simple reflections.
    pub fn element(&self, word: &ReducedWord) -> Result<WeylGroupElement, CoxeterError> {
        let mut w = self.identity();
        for &l in word.letters() {
            w = self.multiply(&w, &self.simple_reflection(l)?);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, word: &ReducedWord) -> bool {
        match self.element(word) {
            Ok(w) => w.length == word.len(),
            Err(_) => false,
        }
    }

    /// Letters `i` with `l(w s_i) < l(w)`, i.e. `w(alpha_i)` negative.
    pub fn right_descents(&self, w: &WeylGroupElement) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !is_positive(&w.images[i])).map(|i| i + 1).collect()
    }

    pub fn has_right_descent(&self, w: &WeylGroupElement, letter: usize) -> bool {
        !is_positive(&w.images[letter - 1])
    }

    /// A reduced word for `w`, peeling the smallest right descent each time.
    pub fn reduced_word(&self, w: &WeylGroupElement) -> ReducedWord {
        let mut letters = Vec::with_capacity(w.length);
        let mut cur = w.clone();
        while let Some(&d) = self.right_descents(&cur).first() {
            letters.push(d);
            cur = self.multiply(&cur, &self.simple_reflection(d).expect("descent in range"));
        }
        letters.reverse();
        ReducedWord(letters)
    }

    pub fn inverse(&self, w: &WeylGroupElement) -> WeylGroupElement {
        self.element(&self.reduced_word(w).reversed()).expect("letters in range")
    }

    /// The unique element of maximal length.
    pub fn longest_element(&self) -> WeylGroupElement {
        let mut w = self.identity();
        loop {
            let ascent = (1..=self.rank()).find(|&l| !self.has_right_descent(&w, l));
            match ascent {
                Some(l) => {
                    w = self.multiply(&w, &self.simple_reflection(l).expect("in range"));
                }
                None => return w,
            }
        }
    }

    /// Bruhat order, by the lifting property along right descents of `w`:
    /// for `ws < w`, `v <= w` iff `min(v, vs) <= ws`.
    pub fn bruhat_leq(&self, v: &WeylGroupElement, w: &WeylGroupElement) -> bool {
        let mut v = v.clone();
        let mut w = w.clone();
        loop {
            if v.length > w.length {
                return false;
            }
            if v == w {
                return true;
            }
            if w.length == 0 {
                return v.length == 0;
            }
            let s = self.right_descents(&w)[0];
            let sr = self.simple_reflection(s).expect("in range");
            if self.has_right_descent(&v, s) {
                v = self.multiply(&v, &sr);
            }
            w = self.multiply(&w, &sr);
        }
    }

    /// Weak right order: `l(v) + l(v^-1 w) = l(w)`.
    pub fn weak_right_leq(&self, v: &WeylGroupElement, w: &WeylGroupElement) -> bool {
        let x = self.multiply(&self.inverse(v), w);
        v.length + x.length == w.length
    }

    /// Dimension `l(w) - l(v)` of the open Richardson variety, nonempty iff `v <= w`.
    pub fn richardson_dim(
        &self,
        v: &WeylGroupElement,
        w: &WeylGroupElement,
    ) -> Result<usize, CoxeterError> {
        if !self.bruhat_leq(v, w) {
            return Err(CoxeterError::EmptyRichardson);
        }
        Ok(w.length - v.length)
    }

    /// All reduced words of `w`, by descent recursion.
    pub fn enumerate_reduced_words(
        &self,
        w: &WeylGroupElement,
    ) -> Result<BTreeSet<ReducedWord>, CoxeterError> {
        if w.length > MAX_ENUMERATION_LENGTH {
            return Err(CoxeterError::TooLong { length: w.length, max: MAX_ENUMERATION_LENGTH });
        }
        let mut memo: HashMap<Vec<Vec<i64>>, Vec<Vec<usize>>> = HashMap::new();
        let words = self.words_rec(w, &mut memo);
        Ok(words.into_iter().map(ReducedWord).collect())
    }

    fn words_rec(
        &self,
        w: &WeylGroupElement,
        memo: &mut HashMap<Vec<Vec<i64>>, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if w.length == 0 {
            return vec![Vec::new()];
        }
        if let Some(found) = memo.get(&w.images) {
            return found.clone();
        }
        let mut out = Vec::new();
        for d in self.right_descents(w) {
            let shorter = self.multiply(w, &self.simple_reflection(d).expect("in range"));
            for mut prefix in self.words_rec(&shorter, memo) {
                prefix.push(d);
                out.push(prefix);
            }
        }
        memo.insert(w.images.clone(), out.clone());
        out
    }

    /// Every element of the group, breadth-first from the identity. Meant for small ranks.
    pub fn elements(&self) -> Vec<WeylGroupElement> {
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
        let mut out = vec![self.identity()];
        seen.insert(out[0].images.clone());
        let mut idx = 0;
        while idx < out.len() {
            let cur = out[idx].clone();
            for l in 1..=self.rank() {
                let next = self.multiply(&cur, &self.simple_reflection(l).expect("in range"));
                if seen.insert(next.images.clone()) {
                    out.push(next);
                }
            }
            idx += 1;
        }
        out
    }

    fn require_type_a(&self) -> Result<(), CoxeterError> {
        if self.diagram.kind == DynkinType::A {
            Ok(())
        } else {
            Err(CoxeterError::NotTypeA(self.diagram.to_string()))
        }
    }

    /// Type A: `w` as a permutation of `1..=rank+1`; entry `k-1` is `w(k)`.
    pub fn permutation(&self, w: &WeylGroupElement) -> Result<Vec<usize>, CoxeterError> {
        self.require_type_a()?;
        let word = self.reduced_word(w);
        Ok(permutation_of_word(self.rank() + 1, &word))
    }

    /// Type A: image `w(S)` of a subset of `1..=rank+1`, sorted.
    pub fn apply_to_set(
        &self,
        w: &WeylGroupElement,
        set: &[usize],
    ) -> Result<Vec<usize>, CoxeterError> {
        let p = self.permutation(w)?;
        let mut out: Vec<usize> = set.iter().map(|&k| p[k - 1]).collect();
        out.sort_unstable();
        Ok(out)
    }
}

/// Type A: permutation of `1..=n` given by `s_i1 ∘ ... ∘ s_il` with `s_i = (i, i+1)`.
pub fn permutation_of_word(n: usize, word: &ReducedWord) -> Vec<usize> {
    (1..=n)
        .map(|x| {
            word.letters().iter().rev().fold(x, |y, &i| {
                if y == i {
                    i + 1
                } else if y == i + 1 {
                    i
                } else {
                    y
                }
            })
        })
        .collect()
}
