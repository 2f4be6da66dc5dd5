//! Exact linear algebra over the rationals.
//!
//! Every rank, kernel, and span computation goes through [`Echelon`]. A
//! Bareiss implementation is kept as a second route for cross-checks, and
//! [`modular`] supplies rank certificates from residues modulo word-sized primes.

mod bareiss;
mod echelon;
mod matrix;
pub mod modular;
mod solve;
mod subspace;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use bareiss::rank_bareiss;
pub use echelon::{make_primitive, Echelon};
pub use matrix::MatrixQ;
pub use solve::{block_solve, solve};
pub use subspace::SubspaceBasis;

use crate::error::Result;

/// Least common multiple of the denominators.
pub fn common_denominator(v: &[BigRational]) -> BigInt {
    v.iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Positive integer multiple of `v` with no common denominator.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = common_denominator(v);
    v.iter()
        .map(|x| {
            if x.is_zero() {
                BigInt::zero()
            } else {
                x.numer() * (&l / x.denom())
            }
        })
        .collect()
}

pub fn rank(m: &MatrixQ) -> usize {
    Echelon::from_integer_rows(m.cols(), m.integer_rows())
        .expect("rows have matrix width")
        .rank()
}

/// Kernel `{v : M v = 0}` with the canonical basis described on
/// [`Echelon::kernel_basis`].
pub fn kernel_basis(m: &MatrixQ) -> SubspaceBasis {
    let e = Echelon::from_integer_rows(m.cols(), m.integer_rows()).expect("rows have matrix width");
    SubspaceBasis::from_independent(m.cols(), e.kernel_basis())
}

/// Dimension of the span of equal-length vectors.
pub fn span_dim(ambient: usize, vectors: &[Vec<BigRational>]) -> Result<usize> {
    Ok(Echelon::from_rational_rows(ambient, vectors.iter().map(Vec::as_slice))?.rank())
}
