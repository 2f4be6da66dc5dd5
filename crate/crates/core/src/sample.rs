//! Seeded random generation of complete intersections, forms, and invertible matrices.
//!
//! All randomness comes from a splitmix64 stream, so a seed fixes the output
//! on every platform.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::ci::is_complete_intersection;
use crate::error::{Error, Result};
use crate::linalg::MatrixQ;
use crate::poly::{monomial_basis, FormTuple, Polynomial};

pub const DEFAULT_COEFF_BOUND: i64 = 5;
pub const DEFAULT_MAX_ATTEMPTS: usize = 100;

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

fn coefficient(rng: &mut SplitMix64, bound: i64) -> BigRational {
    BigRational::from_integer(rng.gen_range(-bound..=bound).into())
}

/// Form of degree `j` with integer coefficients uniform in `[-bound, bound]`.
pub fn random_form(rng: &mut SplitMix64, n: usize, j: usize, bound: i64) -> Polynomial {
    let coeffs: Vec<BigRational> = (0..monomial_basis(n, j).len())
        .map(|_| coefficient(rng, bound))
        .collect();
    Polynomial::from_coefficients(n, j, &coeffs).expect("length matches basis")
}

/// Integer matrix with entries in `[-bound, bound]` and nonzero determinant.
pub fn random_invertible(rng: &mut SplitMix64, n: usize, bound: i64) -> MatrixQ {
    loop {
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|_| (0..n).map(|_| coefficient(rng, bound)).collect())
            .collect();
        let m = MatrixQ::from_rows(rows).expect("square");
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// Rejection-sample tuples until one is a complete intersection.
pub fn random_ci_tuple_with_cap(
    n: usize,
    d: usize,
    seed: u64,
    coeff_bound: i64,
    max_attempts: usize,
) -> Result<FormTuple> {
    if coeff_bound < 0 {
        return Err(Error::Precondition("coeff_bound must be nonnegative".into()));
    }
    let mut rng = rng(seed);
    for _ in 0..max_attempts {
        let forms = (0..n).map(|_| random_form(&mut rng, n, d, coeff_bound)).collect();
        let f = FormTuple::new(d, forms)?;
        if is_complete_intersection(&f) {
            return Ok(f);
        }
    }
    Err(Error::AttemptCapExceeded {
        attempts: max_attempts,
        coeff_bound,
    })
}

/// [`random_ci_tuple_with_cap`] with the default attempt cap.
pub fn random_ci_tuple(n: usize, d: usize, seed: u64, coeff_bound: i64) -> Result<FormTuple> {
    random_ci_tuple_with_cap(n, d, seed, coeff_bound, DEFAULT_MAX_ATTEMPTS)
}
