use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{ExactMatrix, MinorError, MinorSpec};
use crate::algebra::Polynomial;

/// The generic upper unitriangular matrix: one polynomial variable `g_ij` per
/// entry above the diagonal, numbered row by row.
#[derive(Clone, Debug)]
pub struct SymbolicUnipotent {
    size: usize,
    index: Vec<Vec<Option<usize>>>,
    nvars: usize,
}

impl SymbolicUnipotent {
    pub fn new(size: usize) -> Self {
        let mut index = vec![vec![None; size]; size];
        let mut nvars = 0;
        for (i, row) in index.iter_mut().enumerate() {
            for slot in row.iter_mut().skip(i + 1) {
                *slot = Some(nvars);
                nvars += 1;
            }
        }
        SymbolicUnipotent { size, index, nvars }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        match (i.cmp(&j), self.index[i][j]) {
            (std::cmp::Ordering::Equal, _) => Polynomial::one(self.nvars),
            (_, Some(v)) => Polynomial::var(self.nvars, v),
            _ => Polynomial::zero(self.nvars),
        }
    }

    /// The minor as a polynomial in the entries, by Laplace expansion along
    /// rows with memoisation over the remaining column sets.
    pub fn minor(&self, spec: &MinorSpec) -> Result<Polynomial, MinorError> {
        spec.check_size(self.size)?;
        let rows: Vec<usize> = spec.rows().iter().map(|i| i - 1).collect();
        let cols: Vec<usize> = spec.cols().iter().map(|i| i - 1).collect();
        let mut memo = HashMap::new();
        Ok(self.expand(&rows, &cols, 0, (1u64 << cols.len()) - 1, &mut memo))
    }

    fn expand(
        &self,
        rows: &[usize],
        cols: &[usize],
        depth: usize,
        mask: u64,
        memo: &mut HashMap<u64, Polynomial>,
    ) -> Polynomial {
        if depth == rows.len() {
            return Polynomial::one(self.nvars);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign_positive = true;
        for (c, &col) in cols.iter().enumerate() {
            if mask & (1 << c) == 0 {
                continue;
            }
            let e = self.entry(rows[depth], col);
            if !e.is_zero() {
                let sub = self.expand(rows, cols, depth + 1, mask & !(1 << c), memo);
                let t = e.mul(&sub);
                acc = if sign_positive { acc.add(&t) } else { acc.sub(&t) };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Evaluation point of the polynomial variables for a unitriangular `g`.
    pub fn point(&self, g: &ExactMatrix) -> Vec<BigRational> {
        let mut out = vec![BigRational::one(); self.nvars];
        for i in 0..self.size {
            for j in i + 1..self.size {
                out[self.index[i][j].expect("above diagonal")] = g.get(i, j).clone();
            }
        }
        out
    }

    fn name(&self, v: usize) -> String {
        for i in 0..self.size {
            for j in i + 1..self.size {
                if self.index[i][j] == Some(v) {
                    return if self.size < 10 {
                        format!("g{}{}", i + 1, j + 1)
                    } else {
                        format!("g{}_{}", i + 1, j + 1)
                    };
                }
            }
        }
        unreachable!("variable {v} out of range")
    }

    /// Formats `p` with the entry names `g12`, `g13`, ...
    pub fn render(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in p.terms().rev().enumerate() {
            let abs: BigInt = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { self.name(v) } else { format!("{}^{e}", self.name(v)) })
                .collect();
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&format!("{abs}*"));
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Looks for a flag minor (rows `{1..i}`) equal to `p`, smallest order first.
    pub fn identify_flag_minor(&self, p: &Polynomial) -> Option<MinorSpec> {
        for order in 1..=self.size {
            for cols in subsets(self.size, order) {
                let spec = MinorSpec::flag(cols).expect("valid subset");
                if &self.minor(&spec).expect("in range") == p {
                    return Some(spec);
                }
            }
        }
        None
    }
}

/// Sorted `k`-subsets of `1..=n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}
