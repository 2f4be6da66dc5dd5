//! Textbook Bareiss fraction-free elimination.
//!
//! Kept as an independent route to ranks and determinants; the default rank
//! path goes through [`super::Echelon`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::MatrixQ;

struct Reduced {
    rank: usize,
    /// Last pivot, which equals the determinant up to sign for a nonsingular square matrix.
    last_pivot: BigInt,
    swaps: usize,
}

fn eliminate(rows: &mut [Vec<BigInt>], ncols: usize) -> Reduced {
    let nrows = rows.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            swaps += 1;
        }
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let a = row[c].clone();
            for j in c..ncols {
                // exact division by the previous pivot
                row[j] = (&pivot * &row[j] - &a * &pivot_row[j]) / &prev;
            }
            // columns left of c are already zero below the pivot rows
        }
        prev = pivot;
        r += 1;
    }
    Reduced {
        rank: r,
        last_pivot: prev,
        swaps,
    }
}

/// Rank over the rationals by Bareiss elimination on the denominator-cleared rows.
pub fn rank_bareiss(m: &MatrixQ) -> usize {
    let mut rows = m.integer_rows();
    eliminate(&mut rows, m.cols()).rank
}

/// Determinant of a square matrix.
pub(crate) fn determinant(m: &MatrixQ) -> BigRational {
    let n = m.rows();
    if n == 0 {
        return BigRational::one();
    }
    // Clear each row's denominator and remember the scale.
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(n);
    for row in m.row_vectors() {
        let l = super::common_denominator(row);
        rows.push(row.iter().map(|v| (v * &BigRational::from_integer(l.clone())).to_integer()).collect::<Vec<_>>());
        scale *= l;
    }
    let red = eliminate(&mut rows, n);
    if red.rank < n {
        return BigRational::zero();
    }
    let mut det = red.last_pivot;
    if red.swaps % 2 == 1 {
        det = -det;
    }
    BigRational::new(det, scale)
}
