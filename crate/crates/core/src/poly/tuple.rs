use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::linalg::MatrixQ;

/// `n` forms of common degree `d` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTuple {
    n: usize,
    d: usize,
    forms: Vec<Polynomial>,
}

impl FormTuple {
    /// Validates `n >= 2`, `d >= 2`, `n` forms in `n` variables, all of degree `d`.
    pub fn new(d: usize, forms: Vec<Polynomial>) -> Result<Self> {
        let n = forms.len();
        if n < 2 || d < 2 {
            return Err(Error::Precondition(format!(
                "form tuples need n >= 2 and d >= 2 (got n = {n}, d = {d})"
            )));
        }
        for f in &forms {
            if f.nvars() != n {
                return Err(Error::VarCountMismatch {
                    left: n,
                    right: f.nvars(),
                });
            }
            if !f.is_homogeneous_of(d) {
                return Err(match f.degree() {
                    Some(found) => Error::DegreeMismatch { expected: d, found },
                    None => Error::NotHomogeneous,
                });
            }
        }
        Ok(FormTuple { n, d, forms })
    }

    /// `(x1^d, ..., xn^d)`.
    pub fn fermat(n: usize, d: usize) -> Result<Self> {
        let forms = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = d as u32;
                Polynomial::monomial(&e)
            })
            .collect();
        Self::new(d, forms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    /// Socle degree `n(d-1)` of the quotient algebra.
    pub fn socle_degree(&self) -> usize {
        self.n * (self.d - 1)
    }

    /// Determinant of the Jacobian matrix `(d f_i / d x_j)`.
    pub fn jacobian_det(&self) -> Polynomial {
        let n = self.n;
        let jac: Vec<Vec<Polynomial>> = self
            .forms
            .iter()
            .map(|f| (0..n).map(|j| f.derivative(j)).collect())
            .collect();
        // minors[S] = determinant of rows 0..|S| on the column set S
        let size = 1usize << n;
        let mut minors: Vec<Option<Polynomial>> = vec![None; size];
        minors[0] = Some(Polynomial::constant(n, BigRational::one()));
        for s in 0..size {
            let Some(base) = minors[s].take() else {
                continue;
            };
            let row = s.count_ones() as usize;
            if row == n {
                return base;
            }
            if base.is_zero() {
                minors[s] = Some(base);
                continue;
            }
            for j in 0..n {
                if s & (1 << j) != 0 || jac[row][j].is_zero() {
                    continue;
                }
                let above = (s >> (j + 1)).count_ones();
                let mut t = jac[row][j].multiply(&base).expect("same variables");
                if above % 2 == 1 {
                    t = -&t;
                }
                let slot = &mut minors[s | (1 << j)];
                *slot = Some(match slot.take() {
                    Some(acc) => &acc + &t,
                    None => t,
                });
            }
            minors[s] = Some(base);
        }
        minors[size - 1].take().unwrap_or_else(|| Polynomial::zero(n))
    }

    /// `((g1, g2) f)(x) = f(x g1^{-t}) g2^{-1}`, with `f` read as a row vector.
    pub fn act(&self, g1: &MatrixQ, g2: &MatrixQ) -> Result<FormTuple> {
        let sub = g1.inverse()?.transpose();
        let g2_inv = g2.inverse()?;
        if g2_inv.rows() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: g2_inv.rows(),
            });
        }
        let moved: Vec<Polynomial> = self
            .forms
            .iter()
            .map(|f| f.substitute_linear(&sub))
            .collect::<Result<_>>()?;
        let forms = (0..self.n)
            .map(|j| {
                let mut acc = Polynomial::zero(self.n);
                for (i, h) in moved.iter().enumerate() {
                    let c = g2_inv.get(i, j);
                    if !c.is_zero() {
                        acc = &acc + &h.scale(c);
                    }
                }
                acc
            })
            .collect();
        FormTuple::new(self.d, forms)
    }
}

/// `(g F)(y) = F(y g^{-t})`.
pub fn act_on_form(g: &MatrixQ, f: &Polynomial) -> Result<Polynomial> {
    f.substitute_linear(&g.inverse()?.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    /// Cofactor expansion along the first row, used as an independent oracle.
    fn det_oracle(m: &[Vec<Polynomial>]) -> Polynomial {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Polynomial::zero(m[0][0].nvars());
        for j in 0..n {
            let minor: Vec<Vec<Polynomial>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, p)| p.clone()).collect())
                .collect();
            let t = m[0][j].multiply(&det_oracle(&minor)).unwrap();
            acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    #[test]
    fn jacobian_of_squares() {
        let f = FormTuple::fermat(2, 2).unwrap();
        assert_eq!(f.jacobian_det(), Polynomial::from_i64_terms(2, &[(&[1, 1], 4)]).unwrap());
    }

    #[test]
    fn jacobian_of_fermat_tuples() {
        for n in 2..5 {
            for d in 2..5 {
                let f = FormTuple::fermat(n, d).unwrap();
                let expected = Polynomial::term(
                    super::super::Monomial::new(vec![(d - 1) as u32; n]),
                    BigRational::from_integer(BigInt::from(d).pow(n as u32)),
                );
                assert_eq!(f.jacobian_det(), expected);
            }
        }
    }

    #[test]
    fn jacobian_matches_cofactor_expansion() {
        let f = FormTuple::new(
            2,
            vec![
                Polynomial::parse("x1^2 + 2*x2*x3 - x3^2", 3).unwrap(),
                Polynomial::parse("3*x1*x2 + x2^2", 3).unwrap(),
                Polynomial::parse("x1*x3 - 5*x2^2 + x3^2", 3).unwrap(),
            ],
        )
        .unwrap();
        let jac: Vec<Vec<Polynomial>> = f.forms().iter().map(|p| (0..3).map(|j| p.derivative(j)).collect()).collect();
        let det = f.jacobian_det();
        assert_eq!(det, det_oracle(&jac));
        assert!(det.is_homogeneous_of(3));
    }

    #[test]
    fn repeated_form_has_zero_jacobian() {
        let p = Polynomial::parse("x1^2 + x1*x2", 2).unwrap();
        assert!(FormTuple::new(2, vec![p.clone(), p]).unwrap().jacobian_det().is_zero());
    }

    #[test]
    fn rejects_invalid_tuples() {
        let p = Polynomial::parse("x1^2", 2).unwrap();
        assert!(FormTuple::new(2, vec![p.clone()]).is_err());
        assert!(FormTuple::new(3, vec![p.clone(), p.clone()]).is_err());
        let mixed = Polynomial::parse("x1^2 + x2", 2).unwrap();
        assert_eq!(FormTuple::new(2, vec![p, mixed]), Err(Error::NotHomogeneous));
    }

    #[test]
    fn actions() {
        let f = FormTuple::fermat(2, 2).unwrap();
        let id = MatrixQ::identity(2);
        assert_eq!(f.act(&id, &id).unwrap(), f);
        let swap = MatrixQ::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let swapped = f.act(&swap, &id).unwrap();
        assert_eq!(swapped.forms()[0], Polynomial::parse("x2^2", 2).unwrap());
        assert_eq!(swapped.forms()[1], Polynomial::parse("x1^2", 2).unwrap());

        let g = MatrixQ::diagonal(&[q(2), q(1)]);
        let y1sq = Polynomial::parse("y1^2", 2).unwrap();
        assert_eq!(act_on_form(&g, &y1sq).unwrap(), Polynomial::parse("1/4*y1^2", 2).unwrap());
        assert_eq!(act_on_form(&MatrixQ::zeros(2, 2), &y1sq), Err(Error::SingularMatrix));
    }
}
