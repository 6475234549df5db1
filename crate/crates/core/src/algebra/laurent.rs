use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, Polynomial};
use super::rational::RationalFunction;

/// Integer Laurent polynomial: exponent vectors may contain negative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            let slot = out.terms.entry(e).or_insert_with(BigInt::zero);
            *slot += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
    pub fn min_exponent(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var]).min().unwrap_or(0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_rational(&self) -> RationalFunction {
        let n = self.nvars;
        let shift: Vec<u32> = (0..n).map(|v| (-self.min_exponent(v)).max(0) as u32).collect();
        let num = Polynomial::from_terms(
            n,
            self.terms.iter().map(|(e, c)| {
                let ex = e.iter().zip(&shift).map(|(&a, &s)| (a + s as i64) as u32).collect();
                (ex, c.clone())
            }),
        );
        let den = Polynomial::term(n, Monomial::from_exponents(shift), BigInt::one());
        RationalFunction::new(num, den).expect("monomial denominator is nonzero")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Same ordering as polynomials: total degree, then lexicographic, descending.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: i64 = a.0.iter().sum();
            let db: i64 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let abs = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let constant = e.iter().all(|&x| x == 0);
            if constant {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let mut first = true;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if x == 1 {
                    write!(f, "x{}", i + 1)?;
                } else {
                    write!(f, "x{}^{}", i + 1, x)?;
                }
            }
        }
        Ok(())
    }
}
