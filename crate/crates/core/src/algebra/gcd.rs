//! Multivariate polynomial gcd over the integers.
//!
//! Recursive content / primitive-part scheme: pick a variable present in both
//! operands, split off the contents with respect to it (a gcd in fewer
//! variables), and run a primitive pseudo-remainder sequence on the primitive
//! parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Monomial, Polynomial};

/// Gcd over `Q[x]`: primitive (integer content 1) with positive leading coefficient.
/// `poly_gcd(0, q)` is the normalized `q`; `poly_gcd(0, 0)` is zero.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    assert_eq!(p.nvars(), q.nvars(), "nvars mismatch");
    gcd_z(p, q).primitive_normalized()
}

/// Gcd over `Z[x]`, including the integer content, with positive leading coefficient.
pub fn gcd_with_content(p: &Polynomial, q: &Polynomial) -> Polynomial {
    gcd_z(p, q).sign_normalized()
}

fn gcd_z(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let n = p.nvars();
    if p.is_zero() {
        return q.sign_normalized();
    }
    if q.is_zero() {
        return p.sign_normalized();
    }
    if p.is_constant() || q.is_constant() {
        let g = p.integer_content().gcd(&q.integer_content());
        return Polynomial::constant(n, g);
    }
    if let Some((m, c)) = p.as_monomial() {
        return monomial_gcd(m, c, q);
    }
    if let Some((m, c)) = q.as_monomial() {
        return monomial_gcd(m, c, p);
    }
    // Pull out common monomial factors first; they are cheap and common here.
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    if !mp.is_one() || !mq.is_one() {
        let mg = mp.gcd(&mq);
        let inner = gcd_z(&p.div_monomial_exact(&mp), &q.div_monomial_exact(&mq));
        return inner.mul_term(&mg, &BigInt::one());
    }
    if p == q {
        return p.sign_normalized();
    }
    // Trial division catches the frequent "one divides the other" case.
    if p.num_terms() >= q.num_terms() {
        if p.exact_div(q).is_some() {
            return q.sign_normalized();
        }
    } else if q.exact_div(p).is_some() {
        return p.sign_normalized();
    }

    let shared = (0..n).find(|&v| p.involves(v) && q.involves(v));
    let Some(var) = shared else {
        // No common variable: the gcd lies in the content with respect to any
        // variable that only one side involves.
        let v = (0..n).find(|&v| p.involves(v)).expect("non-constant");
        let cp = content_in(p, v);
        return gcd_z(&cp, q);
    };
    // A variable present on one side only forces the gcd into that side's content.
    if let Some(v) = (0..n).find(|&v| p.involves(v) != q.involves(v)) {
        return if p.involves(v) {
            gcd_z(&content_in(p, v), q)
        } else {
            gcd_z(p, &content_in(q, v))
        };
    }

    let cp = content_in(p, var);
    let cq = content_in(q, var);
    if image_is_coprime(p, q, var) {
        return gcd_z(&cp, &cq);
    }
    let pp = p.exact_div(&cp).expect("content divides");
    let pq = q.exact_div(&cq).expect("content divides");
    let c = gcd_z(&cp, &cq);
    let g = primitive_prs(pp, pq, var);
    c.mul(&g).sign_normalized()
}

/// Specializes every variable except `var` at a fixed point and runs Euclid over Q.
/// If neither leading coefficient vanishes there, the degree in `var` of the image
/// gcd bounds that of the true gcd from above, so degree 0 proves that the gcd
/// lies in the contents.
fn image_is_coprime(p: &Polynomial, q: &Polynomial, var: usize) -> bool {
    const POINT: [i64; 8] = [3, -5, 7, 11, -2, 13, 17, -19];
    let n = p.nvars();
    let point: Vec<BigRational> = (0..n)
        .map(|i| BigRational::from_integer(BigInt::from(POINT[i % POINT.len()] + (i / POINT.len()) as i64)))
        .collect();
    let image = |f: &Polynomial| -> Vec<BigRational> {
        f.coefficients_in(var).iter().map(|c| c.evaluate(&point)).collect()
    };
    let mut a = image(p);
    let mut b = image(q);
    if a.last().is_none_or(|c| c.is_zero()) || b.last().is_none_or(|c| c.is_zero()) {
        return false;
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    // Euclid on dense coefficient vectors (index = power of var).
    while b.len() > 1 {
        let lb = b.last().expect("nonempty").clone();
        while a.len() >= b.len() {
            let f = a.last().expect("nonempty") / &lb;
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[i + shift] -= &f * c;
            }
            a.pop();
            while a.last().is_some_and(|c| c.is_zero()) {
                a.pop();
            }
        }
        if a.is_empty() {
            return false;
        }
        std::mem::swap(&mut a, &mut b);
    }
    true
}

fn monomial_gcd(m: &Monomial, c: &BigInt, other: &Polynomial) -> Polynomial {
    let n = other.nvars();
    let g = c.gcd(&other.integer_content());
    let mg = m.gcd(&other.monomial_content());
    Polynomial::term(n, mg, g)
}

/// Content with respect to `var`: the gcd (over Z) of the coefficients of the powers of `var`.
pub(crate) fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let mut coeffs: Vec<Polynomial> =
        p.coefficients_in(var).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(Polynomial::num_terms);
    let mut acc = Polynomial::zero(p.nvars());
    for c in coeffs {
        acc = gcd_z(&acc, &c);
        if acc.as_constant().is_some_and(|k| k.is_one()) {
            break;
        }
    }
    acc.sign_normalized()
}

fn primitive_part_in(p: &Polynomial, var: usize) -> Polynomial {
    let c = content_in(p, var);
    p.exact_div(&c).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` in `var`: `lc(b)^k * a - s * b` with `deg_var < deg_var(b)`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let n = a.nvars();
    let db = b.degree_in(var);
    let lcb = b.leading_coefficient_in(var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lcr = r.leading_coefficient_in(var);
        let mut shift = vec![0u32; n];
        shift[var] = dr - db;
        let sub = b.mul(&lcr).mul_term(&Monomial::from_exponents(shift), &BigInt::one());
        r = r.mul(&lcb).sub(&sub);
    }
    r
}

fn primitive_prs(a: Polynomial, b: Polynomial, var: usize) -> Polynomial {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) { (a, b) } else { (b, a) };
    loop {
        if b.degree_in(var) == 0 {
            // b is primitive in var and free of it, hence a unit up to content handled by caller.
            return Polynomial::one(a.nvars());
        }
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            return primitive_part_in(&b, var).primitive_normalized();
        }
        if r.degree_in(var) == 0 {
            return Polynomial::one(a.nvars());
        }
        a = b;
        b = primitive_part_in(&r, var).primitive_normalized();
    }
}
