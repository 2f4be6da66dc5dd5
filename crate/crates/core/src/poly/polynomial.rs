use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::{monomial_basis, Monomial};
use crate::binomial::falling_factorial;
use crate::error::{Error, Result};
use crate::linalg::MatrixQ;

/// Sparse polynomial with exact rational coefficients in `n` variables.
///
/// Whether the variables are read as `x` or `y` is up to the caller; the
/// printer takes the letter as an argument.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Monomial with coefficient one.
    pub fn monomial(exps: &[u32]) -> Self {
        Self::term(Monomial::new(exps.to_vec()), BigRational::one())
    }

    /// The variable with index `i` (zero based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), BigRational::one())
    }

    /// Sum of terms; repeated monomials are combined and zeros dropped.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Integer-coefficient shorthand: `from_i64_terms(2, &[(&[1, 1], 3)])` is `3*x1*x2`.
    pub fn from_i64_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Result<Self> {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.to_vec()), BigRational::from_integer((*c).into()))),
        )
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Common degree of all terms, or `None` for zero or non-homogeneous input.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Whether every term has degree `j`; the zero polynomial qualifies for all `j`.
    pub fn is_homogeneous_of(&self, j: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == j)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Self::constant(self.nvars, BigRational::one());
        for _ in 0..k {
            acc = acc.multiply(self).expect("same variables");
        }
        acc
    }

    /// `d/dx_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::new(exps), c * BigRational::from_integer(e.into()));
        }
        out
    }

    /// The polar action `self ∘ f`: `self` evaluated at the partial derivatives
    /// `d/dy_1, ..., d/dy_n` and applied to `f`.
    ///
    /// A term `x^a` sends `y^b` to `prod(b_i! / (b_i - a_i)!) y^(b-a)` when `a <= b`
    /// and to zero otherwise.
    pub fn apply_polar(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_vars(f)?;
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &f.terms {
                if !a.divides(b) {
                    continue;
                }
                let mut scalar = BigInt::one();
                for (&ai, &bi) in a.exps().iter().zip(b.exps()) {
                    scalar *= falling_factorial(bi, ai);
                }
                out.add_term(a.quotient_of(b), ca * cb * BigRational::from_integer(scalar));
            }
        }
        Ok(out)
    }

    /// Coefficients in the degree-`j` monomial basis.
    pub fn coefficients_in_degree(&self, j: usize) -> Result<Vec<BigRational>> {
        let basis = monomial_basis(self.nvars, j);
        let mut v = vec![BigRational::zero(); basis.len()];
        for (m, c) in &self.terms {
            let k = basis.index_of(m).ok_or(Error::DegreeMismatch {
                expected: j,
                found: m.degree(),
            })?;
            v[k] = c.clone();
        }
        Ok(v)
    }

    /// Inverse of [`Polynomial::coefficients_in_degree`].
    pub fn from_coefficients(nvars: usize, j: usize, coeffs: &[BigRational]) -> Result<Polynomial> {
        let basis = monomial_basis(nvars, j);
        if coeffs.len() != basis.len() {
            return Err(Error::LengthMismatch {
                expected: basis.len(),
                found: coeffs.len(),
            });
        }
        let mut p = Self::zero(nvars);
        for (m, c) in basis.monomials().iter().zip(coeffs) {
            if !c.is_zero() {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        Ok(p)
    }

    /// `p(v · M)`, where `v` is the row vector of variables: the variable
    /// `v_i` is replaced by `sum_k M[k][i] v_k`.
    pub fn substitute_linear(&self, m: &MatrixQ) -> Result<Polynomial> {
        let n = self.nvars;
        if m.rows() != n || m.cols() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: if m.rows() != n { m.rows() } else { m.cols() },
            });
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                Self::from_terms(n, (0..n).map(|k| (Monomial::var(n, k), m.get(k, i).clone())))
                    .expect("same variables")
            })
            .collect();
        // powers[i][e] = images[i]^e, built on demand
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|_| vec![Self::constant(n, BigRational::one())]).collect();
        let mut out = Self::zero(n);
        for (mono, c) in &self.terms {
            let mut t = Self::constant(n, c.clone());
            for (i, &e) in mono.exps().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().multiply(&images[i])?;
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.multiply(&powers[i][e as usize])?;
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics if the variable counts differ.
    fn add(self, other: &Polynomial) -> Polynomial {
        self.check_vars(other).expect("adding polynomials in different rings");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    /// Panics if the variable counts differ.
    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn p2(terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_i64_terms(2, terms).unwrap()
    }

    #[test]
    fn products() {
        let a = p2(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = p2(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(a.multiply(&b).unwrap(), p2(&[(&[2, 0], 1), (&[0, 2], -1)]));
        assert!(a.multiply(&Polynomial::zero(2)).unwrap().is_zero());
        let m = p2(&[(&[1, 1], 1)]);
        assert_eq!(m.multiply(&m).unwrap(), p2(&[(&[2, 2], 1)]));
        assert!(a.multiply(&Polynomial::zero(3)).is_err());
    }

    #[test]
    fn polar_action() {
        let h = p2(&[(&[1, 1], 1)]);
        let f = p2(&[(&[2, 1], 1)]);
        assert_eq!(h.apply_polar(&f).unwrap(), p2(&[(&[1, 0], 2)]));
        for a in 0..7u32 {
            let x = p2(&[(&[a, 0], 1)]);
            let fact: i64 = (1..=a as i64).product();
            assert_eq!(x.apply_polar(&x).unwrap(), Polynomial::constant(2, q(fact)));
        }
        let sq = p2(&[(&[2, 0], 1)]);
        assert!(sq.apply_polar(&h).unwrap().is_zero());
        // degree of h above degree of F
        assert!(p2(&[(&[3, 0], 1)]).apply_polar(&sq).unwrap().is_zero());
    }

    #[test]
    fn degrees_and_coefficients() {
        let f = p2(&[(&[2, 0], 3), (&[0, 2], -1)]);
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.coefficients_in_degree(2).unwrap(), vec![q(3), q(0), q(-1)]);
        assert!(f.coefficients_in_degree(3).is_err());
        assert_eq!(Polynomial::from_coefficients(2, 2, &[q(3), q(0), q(-1)]).unwrap(), f);
        assert_eq!(p2(&[(&[2, 0], 1), (&[1, 0], 1)]).degree(), None);
        assert_eq!(Polynomial::zero(2).degree(), None);
        assert!(Polynomial::zero(2).is_homogeneous_of(5));
    }

    #[test]
    fn substitution() {
        // (y1 + y2)^2 under y1 -> y1/2, y2 -> y2
        let f = p2(&[(&[1, 0], 1), (&[0, 1], 1)]).pow(2);
        let g = MatrixQ::diagonal(&[BigRational::new(1.into(), 2.into()), q(1)]);
        let expected = Polynomial::from_terms(
            2,
            vec![
                (Monomial::new(vec![2, 0]), BigRational::new(1.into(), 4.into())),
                (Monomial::new(vec![1, 1]), q(1)),
                (Monomial::new(vec![0, 2]), q(1)),
            ],
        )
        .unwrap();
        assert_eq!(f.substitute_linear(&g).unwrap(), expected);
        // swap
        let s = MatrixQ::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(p2(&[(&[2, 1], 5)]).substitute_linear(&s).unwrap(), p2(&[(&[1, 2], 5)]));
    }

    #[test]
    fn derivative() {
        let f = p2(&[(&[3, 1], 2), (&[0, 2], 1)]);
        assert_eq!(f.derivative(0), p2(&[(&[2, 1], 6)]));
        assert_eq!(f.derivative(1), p2(&[(&[3, 0], 2), (&[0, 1], 2)]));
    }
}
