//! Workbench for cluster seeds attached to reduced words and open Richardson
//! varieties.
//!
//! * [`algebra`]: exact sparse polynomials, Laurent polynomials and canonical
//!   rational functions.
//! * [`coxeter`]: simply-laced Dynkin diagrams, Weyl group elements, Bruhat and
//!   weak right orders.
//! * [`quiver`]: ice quivers, mutation, quivers of reduced words, cluster
//!   reduction, framed quivers and reddening-sequence search.
//! * [`seed`]: seeds, exchange relations, finite-type closure, starfish
//!   membership, localization certificates and frozen specialization.
//! * [`minors`]: type-A flag minors and the exchange-identity check of the
//!   minor realization of a reduced-word seed.

pub mod algebra;
pub mod coxeter;
pub mod minors;
pub mod quiver;
pub mod seed;

pub use algebra::{AlgebraError, LaurentPolynomial, Polynomial, RationalFunction};
pub use coxeter::{CoxeterError, DynkinDiagram, ReducedWord, WeylGroup, WeylGroupElement};
pub use minors::{ExactMatrix, MinorError, MinorSpec};
pub use quiver::{IceQuiver, QuiverError};
pub use seed::{Seed, SeedError};
