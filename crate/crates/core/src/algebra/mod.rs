//! Exact arithmetic for sparse multivariate polynomials, Laurent polynomials
//! and rational functions over arbitrary-precision integers.
//!
//! Monomials are ordered graded-lexicographically with `x1 > x2 > ...`; the
//! sign of a fraction is normalized so that the leading denominator
//! coefficient is positive. Canonical forms make structural equality equal to
//! mathematical equality.

mod gcd;
mod laurent;
mod parse;
mod poly;
mod rational;

pub use gcd::{gcd_with_content, poly_gcd};
pub use laurent::LaurentPolynomial;
pub use parse::{max_variable_index, parse_expression};
pub use poly::{Monomial, Polynomial};
pub use rational::{ArithOp, RationalFunction};

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },
    #[error("variable x{0} is not assigned")]
    UnassignedVariable(usize),
    #[error("variable x{0} assigned the zero function")]
    ZeroSubstitution(usize),
    #[error("substitution makes the denominator identically zero")]
    DenominatorVanishes,
    #[error("variable x{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("parse error at token {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Exact `f op g` in canonical form.
pub fn arith(
    f: &RationalFunction,
    g: &RationalFunction,
    op: ArithOp,
) -> Result<RationalFunction, AlgebraError> {
    f.arith(g, op)
}

/// Substitutes rational functions for variables (see [`RationalFunction::substitute`]).
pub fn substitute(
    f: &RationalFunction,
    assignment: &BTreeMap<usize, RationalFunction>,
) -> Result<RationalFunction, AlgebraError> {
    f.substitute(assignment)
}

/// The Laurent form of `f`, if its canonical denominator is a monic monomial.
pub fn is_laurent(f: &RationalFunction) -> Option<LaurentPolynomial> {
    f.to_laurent()
}
