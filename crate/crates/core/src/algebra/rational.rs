//! Canonical fractions of integer polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd_with_content;
use super::laurent::LaurentPolynomial;
use super::poly::{Monomial, Polynomial};
use super::AlgebraError;

/// Element of `Q(x1, ..., xn)` stored as `numerator / denominator` with
/// integer polynomials that share no common factor (integer content included)
/// and a denominator whose graded-lex leading coefficient is positive.
/// Equal values have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn zero(nvars: usize) -> Self {
        RationalFunction { num: Polynomial::zero(nvars), den: Polynomial::one(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_polynomial(Polynomial::one(nvars))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::from_polynomial(Polynomial::var(nvars, index))
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::from_polynomial(Polynomial::constant(nvars, c))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let n = p.nvars();
        RationalFunction { num: p, den: Polynomial::one(n) }
    }

    /// Builds and normalizes `num / den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        num.check_nvars(&den)?;
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    /// `x^e` for a single variable, `e` possibly negative.
    pub fn var_pow(nvars: usize, index: usize, e: i64) -> Self {
        let mut exps = vec![0u32; nvars];
        exps[index] = e.unsigned_abs() as u32;
        let m = Polynomial::term(nvars, Monomial::from_exponents(exps), BigInt::one());
        if e >= 0 {
            Self::from_polynomial(m)
        } else {
            RationalFunction { num: Polynomial::one(nvars), den: m }
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Total number of stored terms (numerator plus denominator).
    pub fn num_terms(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    fn normalize(num: Polynomial, den: Polynomial) -> Self {
        let n = num.nvars();
        if num.is_zero() {
            return Self::zero(n);
        }
        // Common monomial factors.
        let mc = num.monomial_content().gcd(&den.monomial_content());
        let (mut num, mut den) = if mc.is_one() {
            (num, den)
        } else {
            (num.div_monomial_exact(&mc), den.div_monomial_exact(&mc))
        };
        if !den.is_monomial() {
            // Split the denominator into monomial and monomial-free parts and try exact
            // division by the latter before falling back to a full gcd.
            let dm = den.monomial_content();
            let rest = den.div_monomial_exact(&dm);
            if let Some(q) = num.exact_div(&rest) {
                num = q;
                den = Polynomial::term(n, dm, BigInt::one());
            } else {
                let g = gcd_with_content(&num, &den);
                if !g.is_one() {
                    num = num.exact_div(&g).expect("gcd divides numerator");
                    den = den.exact_div(&g).expect("gcd divides denominator");
                }
            }
        }
        // Integer content shared by both sides.
        let c = num.integer_content().gcd(&den.integer_content());
        if !c.is_one() {
            num = num.div_integer_exact(&c);
            den = den.div_integer_exact(&c);
        }
        if den.leading_coefficient().is_some_and(|c| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den }
    }

    pub fn check_nvars(&self, other: &RationalFunction) -> Result<(), AlgebraError> {
        self.num.check_nvars(&other.num)
    }

    pub fn arith(&self, other: &RationalFunction, op: ArithOp) -> Result<Self, AlgebraError> {
        self.check_nvars(other)?;
        match op {
            ArithOp::Add => Ok(self.add(other)),
            ArithOp::Sub => Ok(self.sub(other)),
            ArithOp::Mul => Ok(self.mul(other)),
            ArithOp::Div => self.div(other),
        }
    }

    pub fn add(&self, other: &RationalFunction) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        if let (Some((ma, ca)), Some((mb, cb))) = (self.den.as_monomial(), other.den.as_monomial()) {
            // Monomial denominators: use the lcm instead of the product.
            let l = ma.lcm(mb);
            let cl = ca.lcm(cb);
            let fa = l.div(ma).expect("lcm");
            let fb = l.div(mb).expect("lcm");
            let num = self
                .num
                .mul_term(&fa, &(&cl / ca))
                .add(&other.num.mul_term(&fb, &(&cl / cb)));
            let den = Polynomial::term(self.nvars(), l, cl);
            return Self::normalize(num, den);
        }
        // Both operands are reduced, so any common factor of the sum with the
        // denominator must divide gcd(d1, d2).
        let g = gcd_with_content(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::finish(num, self.den.mul(&other.den));
        }
        let d1 = self.den.exact_div(&g).expect("gcd divides denominator");
        let d2 = other.den.exact_div(&g).expect("gcd divides denominator");
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        if num.is_zero() {
            return Self::zero(self.nvars());
        }
        let h = gcd_with_content(&num, &g);
        if h.is_one() {
            return Self::finish(num, d1.mul(&other.den));
        }
        let num = num.exact_div(&h).expect("gcd divides numerator");
        let g_rest = g.exact_div(&h).expect("gcd divides gcd");
        Self::finish(num, d1.mul(&d2).mul(&g_rest))
    }

    /// Fix integer content and sign of an already coprime pair.
    fn finish(mut num: Polynomial, mut den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero(num.nvars());
        }
        let c = num.integer_content().gcd(&den.integer_content());
        if !c.is_one() {
            num = num.div_integer_exact(&c);
            den = den.div_integer_exact(&c);
        }
        if den.leading_coefficient().is_some_and(|c| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den }
    }

    /// Cancel `gcd(a, b)` from both, returning the cofactors.
    fn cancel(a: &Polynomial, b: &Polynomial) -> (Polynomial, Polynomial) {
        let g = gcd_with_content(a, b);
        if g.is_one() {
            (a.clone(), b.clone())
        } else {
            (a.exact_div(&g).expect("gcd divides"), b.exact_div(&g).expect("gcd divides"))
        }
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RationalFunction) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunction) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars());
        }
        let (n1, d2) = Self::cancel(&self.num, &other.den);
        let (n2, d1) = Self::cancel(&other.num, &self.den);
        Self::finish(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::finish(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RationalFunction) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RationalFunction { num: base.num.pow(k), den: base.den.pow(k) }.renormalized_sign())
    }

    fn renormalized_sign(self) -> Self {
        if self.den.leading_coefficient().is_some_and(|c| c.is_negative()) {
            RationalFunction { num: self.num.neg(), den: self.den.neg() }
        } else {
            self
        }
    }

    /// Substitutes `assignment[i]` for variable `i`. Every variable present must be
    /// assigned; the result lives in the ring of the assigned values.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<usize, RationalFunction>,
    ) -> Result<Self, AlgebraError> {
        let n = self.nvars();
        let target_nvars = match assignment.values().next() {
            Some(v) => v.nvars(),
            None => n,
        };
        for v in assignment.values() {
            if v.nvars() != target_nvars {
                return Err(AlgebraError::NvarsMismatch { left: target_nvars, right: v.nvars() });
            }
        }
        for var in 0..n {
            if (self.num.involves(var) || self.den.involves(var)) && !assignment.contains_key(&var)
            {
                return Err(AlgebraError::UnassignedVariable(var + 1));
            }
        }
        for (&var, value) in assignment {
            if var >= n {
                return Err(AlgebraError::VariableOutOfRange { index: var + 1, nvars: n });
            }
            if value.is_zero() && (self.num.involves(var) || self.den.involves(var)) {
                return Err(AlgebraError::ZeroSubstitution(var + 1));
            }
        }
        // Bring both polynomials over the common denominator prod_j den_j^{E_j},
        // where E_j is the largest degree of variable j in numerator or denominator.
        let max_deg: Vec<u32> = (0..n)
            .map(|v| self.num.degree_in(v).max(self.den.degree_in(v)))
            .collect();
        let eval = |p: &Polynomial| -> Polynomial {
            let mut acc = Polynomial::zero(target_nvars);
            for (m, c) in p.terms() {
                let mut t = Polynomial::constant(target_nvars, c.clone());
                for (var, value) in assignment {
                    let e = m.exponents()[*var];
                    let top = max_deg[*var];
                    if top == 0 {
                        continue;
                    }
                    if e > 0 {
                        t = t.mul(&value.num.pow(e));
                    }
                    if top > e {
                        t = t.mul(&value.den.pow(top - e));
                    }
                }
                acc = acc.add(&t);
            }
            acc
        };
        let num = eval(&self.num);
        let den = eval(&self.den);
        if den.is_zero() {
            return Err(AlgebraError::DenominatorVanishes);
        }
        Ok(Self::normalize(num, den))
    }

    /// The Laurent form when the canonical denominator is a monic monomial.
    pub fn to_laurent(&self) -> Option<LaurentPolynomial> {
        let (m, c) = self.den.as_monomial()?;
        if !c.is_one() {
            return None;
        }
        let n = self.nvars();
        let terms = self.num.terms().map(|(mm, cc)| {
            let e: Vec<i64> = mm
                .exponents()
                .iter()
                .zip(m.exponents())
                .map(|(&a, &b)| a as i64 - b as i64)
                .collect();
            (e, cc.clone())
        });
        Some(LaurentPolynomial::from_terms(n, terms))
    }

    /// Exponent of variable `var` in the denominator (zero when the numerator
    /// is not divisible and denominator free of `var`).
    pub fn denominator_degree(&self, var: usize) -> u32 {
        self.den.degree_in(var)
    }

    pub fn evaluate(
        &self,
        point: &[num_rational::BigRational],
    ) -> Result<num_rational::BigRational, AlgebraError> {
        let d = self.den.evaluate(point);
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.num.evaluate(point) / d)
    }

    /// Re-embeds into `new_nvars` variables with variable `i` sent to `map[i]`.
    pub fn remap_vars(&self, new_nvars: usize, map: &[usize]) -> Self {
        Self::normalize(self.num.remap_vars(new_nvars, map), self.den.remap_vars(new_nvars, map))
    }

    /// Sets variable `var` to 1 and removes it from the ring.
    pub fn specialize_to_one_and_drop(&self, var: usize) -> Result<Self, AlgebraError> {
        let den = self.den.specialize_to_one_and_drop(var);
        if den.is_zero() {
            return Err(AlgebraError::DenominatorVanishes);
        }
        Ok(Self::normalize(self.num.specialize_to_one_and_drop(var), den))
    }
}

fn needs_parens_num(p: &Polynomial) -> bool {
    p.num_terms() > 1
}

fn needs_parens_den(p: &Polynomial) -> bool {
    match p.as_monomial() {
        None => true,
        Some((m, c)) => {
            let vars = m.exponents().iter().filter(|&&e| e > 0).count();
            // a bare integer or a single power can follow '/' directly
            !((vars == 0) || (vars == 1 && c.is_one()))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens_num(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens_den(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}
