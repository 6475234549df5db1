//! Minor realization of the seed of a reduced word on `N(w)` and its
//! verification through the initial exchange relations.
//!
//! Position `k` carrying letter `i` receives the flag minor with rows `{1..i}`
//! and columns `w_{<=k}({1..i})`, where `w_{<=k} = s_{i_1} ... s_{i_k}`. The
//! assignment is only accepted after every initial exchange relation has been
//! checked symbolically; if it fails, the transposed assignment is tried.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{flag_minor, random_unitriangular, ExactMatrix, MinorError, MinorSpec, SymbolicUnipotent};
use crate::algebra::Polynomial;
use crate::coxeter::{CoxeterError, DynkinDiagram, DynkinType, ReducedWord, WeylGroup};
use crate::quiver::{gls_quiver, IceQuiver};

/// The quiver of a reduced word together with one minor per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedRealization {
    pub diagram: DynkinDiagram,
    pub word: ReducedWord,
    pub quiver: IceQuiver,
    pub minors: Vec<MinorSpec>,
    /// True when the transposed assignment (rows `w_{<=k}({1..i})`, columns
    /// `{1..i}`) had to be used.
    pub transposed: bool,
}

impl SeedRealization {
    /// Matrix size `rank + 1`.
    pub fn size(&self) -> usize {
        self.diagram.rank() + 1
    }

    /// Values of all vertex minors at `g`.
    pub fn evaluate(&self, g: &ExactMatrix) -> Result<Vec<BigRational>, MinorError> {
        self.minors.iter().map(|m| flag_minor(g, m)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexMinor {
    /// 1-based vertex label.
    pub vertex: usize,
    pub letter: usize,
    pub frozen: bool,
    pub minor: MinorSpec,
    pub expression: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationStatus {
    Holds,
    /// The vertex minor vanishes identically on N.
    VanishingVariable,
    /// `M1 + M2` is not divisible by the vertex minor in the coordinate ring of N.
    NotDivisible,
    /// Some sampled matrix gave a nonzero residual.
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub matrix: Vec<Vec<String>>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    /// 1-based mutable vertex.
    pub vertex: usize,
    pub variable: String,
    pub m1: String,
    pub m2: String,
    /// `x_k' = (M1 + M2) / x_k` when it is a polynomial.
    pub exchanged: Option<String>,
    /// A flag minor equal to `x_k'`, when one exists.
    pub identified_as: Option<MinorSpec>,
    pub status: RelationStatus,
    pub trials_passed: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub diagram: String,
    pub word: String,
    pub convention: String,
    pub trials: usize,
    pub seed: u64,
    pub vertices: Vec<VertexMinor>,
    pub relations: Vec<RelationCheck>,
    pub passed: bool,
}

struct SymbolicRelation {
    k: usize,
    x: Polynomial,
    m1: Polynomial,
    m2: Polynomial,
    quotient: Option<Polynomial>,
}

impl SymbolicRelation {
    fn status(&self) -> RelationStatus {
        if self.x.is_zero() {
            RelationStatus::VanishingVariable
        } else if self.quotient.is_none() {
            RelationStatus::NotDivisible
        } else {
            RelationStatus::Holds
        }
    }
}

fn exchange_products<T: Clone>(
    q: &IceQuiver,
    values: &[T],
    k: usize,
    one: T,
    mul: impl Fn(&T, &T) -> T,
) -> (T, T) {
    let (mut m1, mut m2) = (one.clone(), one);
    for (i, x) in values.iter().enumerate() {
        let b = q.entry(i, k);
        let target = if b > 0 { &mut m1 } else { &mut m2 };
        for _ in 0..b.unsigned_abs() {
            *target = mul(target, x);
        }
    }
    (m1, m2)
}

fn symbolic_relations(
    q: &IceQuiver,
    minors: &[MinorSpec],
    sym: &SymbolicUnipotent,
) -> Result<Vec<SymbolicRelation>, MinorError> {
    let polys = minors.iter().map(|m| sym.minor(m)).collect::<Result<Vec<_>, _>>()?;
    Ok(q.mutable_vertices()
        .into_iter()
        .map(|k| {
            let (m1, m2) =
                exchange_products(q, &polys, k, Polynomial::one(sym.nvars()), |a, b| a.mul(b));
            let x = polys[k].clone();
            let quotient = if x.is_zero() { None } else { m1.add(&m2).exact_div(&x) };
            SymbolicRelation { k, x, m1, m2, quotient }
        })
        .collect())
}

fn standard_minors(
    group: &WeylGroup,
    word: &ReducedWord,
) -> Result<Vec<MinorSpec>, MinorError> {
    let letters = word.letters();
    (0..letters.len())
        .map(|k| {
            let prefix = group.element(&ReducedWord::new(letters[..=k].to_vec()))?;
            let i = letters[k];
            let cols = group.apply_to_set(&prefix, &(1..=i).collect::<Vec<_>>())?;
            MinorSpec::flag(cols)
        })
        .collect()
}

/// Assigns a minor to every vertex of `gls_quiver(word)` and checks the
/// assignment against all initial exchange relations.
pub fn cn_seed_realization(
    diagram: &DynkinDiagram,
    word: &ReducedWord,
) -> Result<SeedRealization, MinorError> {
    if diagram.kind() != DynkinType::A {
        return Err(CoxeterError::NotTypeA(diagram.to_string()).into());
    }
    let quiver = gls_quiver(diagram, word)?;
    let group = WeylGroup::new(diagram.clone());
    let sym = SymbolicUnipotent::new(diagram.rank() + 1);
    let standard = standard_minors(&group, word)?;
    let first_failure = |minors: &[MinorSpec]| -> Result<Option<String>, MinorError> {
        Ok(symbolic_relations(&quiver, minors, &sym)?
            .iter()
            .find(|r| r.status() != RelationStatus::Holds)
            .map(|r| format!("vertex {}: {:?}", r.k + 1, r.status())))
    };
    let Some(failure) = first_failure(&standard)? else {
        return Ok(SeedRealization {
            diagram: diagram.clone(),
            word: word.clone(),
            quiver,
            minors: standard,
            transposed: false,
        });
    };
    let transposed: Vec<MinorSpec> = standard.iter().map(MinorSpec::transposed).collect();
    if first_failure(&transposed)?.is_none() {
        return Ok(SeedRealization {
            diagram: diagram.clone(),
            word: word.clone(),
            quiver,
            minors: transposed,
            transposed: true,
        });
    }
    Err(MinorError::ConventionMismatch(failure))
}

/// Checks `x_k * x_k' - (M1 + M2) = 0` for every mutable vertex `k` at
/// `trials` seeded random unitriangular matrices (seeds `seed, seed + 1, ...`).
///
/// `x_k` and the monomials come from numeric determinants; `x_k'` is the
/// polynomial quotient obtained symbolically. Trials run on `jobs` threads;
/// the report does not depend on `jobs`.
pub fn verify_exchange_identities(
    diagram: &DynkinDiagram,
    word: &ReducedWord,
    trials: usize,
    seed: u64,
    jobs: usize,
) -> Result<IdentityReport, MinorError> {
    let real = cn_seed_realization(diagram, word)?;
    let sym = SymbolicUnipotent::new(real.size());
    let relations = symbolic_relations(&real.quiver, &real.minors, &sym)?;

    let run_trial = |t: usize| -> Result<(ExactMatrix, Vec<BigRational>), MinorError> {
        let g = random_unitriangular(real.size(), seed.wrapping_add(t as u64));
        let values = real.evaluate(&g)?;
        let point = sym.point(&g);
        let residuals = relations
            .iter()
            .map(|r| {
                let Some(quot) = &r.quotient else {
                    return BigRational::zero();
                };
                let (m1, m2) =
                    exchange_products(&real.quiver, &values, r.k, BigRational::one(), |a, b| a * b);
                &values[r.k] * quot.evaluate(&point) - (m1 + m2)
            })
            .collect();
        Ok((g, residuals))
    };
    let outcomes: Vec<(ExactMatrix, Vec<BigRational>)> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| (0..trials).into_par_iter().map(run_trial).collect::<Result<_, _>>())?
    } else {
        (0..trials).map(run_trial).collect::<Result<_, _>>()?
    };

    let checks: Vec<RelationCheck> = relations
        .iter()
        .enumerate()
        .map(|(idx, r)| {
            let mut status = r.status();
            let mut trials_passed = 0;
            let mut counterexample = None;
            if status == RelationStatus::Holds {
                for (t, (g, residuals)) in outcomes.iter().enumerate() {
                    if residuals[idx].is_zero() {
                        trials_passed += 1;
                    } else if counterexample.is_none() {
                        status = RelationStatus::Counterexample;
                        counterexample = Some(Counterexample {
                            trial: t,
                            matrix: g.to_strings(),
                            residual: residuals[idx].to_string(),
                        });
                    }
                }
            }
            RelationCheck {
                vertex: r.k + 1,
                variable: sym.render(&r.x),
                m1: sym.render(&r.m1),
                m2: sym.render(&r.m2),
                exchanged: r.quotient.as_ref().map(|p| sym.render(p)),
                identified_as: r.quotient.as_ref().and_then(|p| sym.identify_flag_minor(p)),
                status,
                trials_passed,
                counterexample,
            }
        })
        .collect();

    let vertices = real
        .minors
        .iter()
        .enumerate()
        .map(|(v, m)| {
            Ok(VertexMinor {
                vertex: v + 1,
                letter: word.letters()[v],
                frozen: real.quiver.is_frozen(v),
                minor: m.clone(),
                expression: sym.render(&sym.minor(m)?),
            })
        })
        .collect::<Result<Vec<_>, MinorError>>()?;
    let passed = checks.iter().all(|c| c.status == RelationStatus::Holds);
    let convention = if real.transposed {
        "rows w_{<=k}({1..i}), cols {1..i}"
    } else {
        "rows {1..i}, cols w_{<=k}({1..i})"
    };
    Ok(IdentityReport {
        diagram: diagram.to_string(),
        word: word.to_string(),
        convention: convention.into(),
        trials,
        seed,
        vertices,
        relations: checks,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> DynkinDiagram {
        DynkinDiagram::type_a(n)
    }

    fn w(s: &str) -> ReducedWord {
        s.parse().unwrap()
    }

    #[test]
    fn a2_realization_by_hand() {
        let r = cn_seed_realization(&a(2), &w("1,2,1")).unwrap();
        assert!(!r.transposed);
        let shown: Vec<String> = r.minors.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, vec!["D[{1},{2}]", "D[{1,2},{2,3}]", "D[{1},{3}]"]);
    }

    #[test]
    fn a2_identity_report() {
        let rep = verify_exchange_identities(&a(2), &w("1,2,1"), 10, 0, 1).unwrap();
        assert!(rep.passed);
        let rel = &rep.relations[0];
        assert_eq!(rel.variable, "g12");
        assert_eq!(rel.m1, "g12*g23 - g13");
        assert_eq!(rel.m2, "g13");
        assert_eq!(rel.exchanged.as_deref(), Some("g23"));
        assert_eq!(rel.trials_passed, 10);
    }

    #[test]
    fn reduced_words_have_no_principal_minors() {
        // w_{<=k} has a right descent at i_k, so it never fixes {1..i_k}
        let group = WeylGroup::new(a(3));
        for word in group.enumerate_reduced_words(&group.longest_element()).unwrap() {
            let r = cn_seed_realization(&a(3), &word).unwrap();
            for m in &r.minors {
                assert_ne!(m.cols(), m.rows(), "{word}");
            }
        }
    }

    #[test]
    fn identity_matrix_values() {
        let r = cn_seed_realization(&a(4), &w("1,2,3,4,1,2,3,1,2,1")).unwrap();
        for v in r.evaluate(&ExactMatrix::identity(5)).unwrap() {
            assert!(v.is_zero() || v.is_one());
        }
    }

    #[test]
    fn jobs_do_not_change_the_report() {
        let one = verify_exchange_identities(&a(3), &w("1,2,1,3,2,1"), 8, 3, 1).unwrap();
        let four = verify_exchange_identities(&a(3), &w("1,2,1,3,2,1"), 8, 3, 4).unwrap();
        assert_eq!(one, four);
        assert!(one.passed);
    }

    #[test]
    fn non_type_a_rejected() {
        let d4: DynkinDiagram = "D4".parse().unwrap();
        assert!(matches!(
            cn_seed_realization(&d4, &w("1,2")),
            Err(MinorError::Coxeter(CoxeterError::NotTypeA(_)))
        ));
    }
}
