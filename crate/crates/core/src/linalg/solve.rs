use num_rational::BigRational;
use num_traits::{One, Zero};

use super::MatrixQ;
use crate::error::{Error, Result};

/// Solve `A X = B` for square nonsingular `A` by Gauss-Jordan elimination.
pub fn solve(a: &MatrixQ, b: &MatrixQ) -> Result<MatrixQ> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: n,
            cols: a.cols(),
        });
    }
    if b.rows() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: b.rows(),
        });
    }
    let m = b.cols();
    let mut lhs: Vec<Vec<BigRational>> = a.row_vectors().map(<[_]>::to_vec).collect();
    let mut rhs: Vec<Vec<BigRational>> = b.row_vectors().map(<[_]>::to_vec).collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !lhs[i][c].is_zero())
            .ok_or(Error::SingularMatrix)?;
        lhs.swap(p, c);
        rhs.swap(p, c);
        let inv = BigRational::one() / &lhs[c][c];
        for v in lhs[c].iter_mut().chain(rhs[c].iter_mut()) {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        for i in 0..n {
            if i == c || lhs[i][c].is_zero() {
                continue;
            }
            let f = lhs[i][c].clone();
            for j in c..n {
                if !lhs[c][j].is_zero() {
                    let t = &f * &lhs[c][j];
                    lhs[i][j] -= t;
                }
            }
            for j in 0..m {
                if !rhs[c][j].is_zero() {
                    let t = &f * &rhs[c][j];
                    rhs[i][j] -= t;
                }
            }
        }
    }
    MatrixQ::from_rows(rhs).map(|x| if n == 0 { MatrixQ::zeros(0, m) } else { x })
}

/// `-A^{-1} B`, the graph coordinates of a subspace in a chart where `A` is the
/// pivot block and `B` the remaining columns.
pub fn block_solve(a: &MatrixQ, b: &MatrixQ) -> Result<MatrixQ> {
    Ok(solve(a, b)?.neg())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_solve_satisfies_defining_equation() {
        let a = MatrixQ::from_i64_rows(&[&[0, 2], &[3, 1]]).unwrap();
        let b = MatrixQ::from_i64_rows(&[&[1, 4, 0], &[5, -1, 2]]).unwrap();
        let x = block_solve(&a, &b).unwrap();
        assert_eq!(a.mul(&x).unwrap(), b.neg());
    }

    #[test]
    fn rejects_bad_shapes() {
        let a = MatrixQ::zeros(2, 3);
        assert!(matches!(solve(&a, &MatrixQ::zeros(2, 1)), Err(Error::NotSquare { .. })));
        let sq = MatrixQ::identity(2);
        assert!(matches!(solve(&sq, &MatrixQ::zeros(3, 1)), Err(Error::LengthMismatch { .. })));
        assert_eq!(solve(&MatrixQ::zeros(2, 2), &sq), Err(Error::SingularMatrix));
    }
}
