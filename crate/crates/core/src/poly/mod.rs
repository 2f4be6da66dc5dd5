//! Sparse exact polynomials, graded monomial bases, the polar action, and the
//! two general linear group actions.

mod monomial;
mod polynomial;
mod text;
mod tuple;

pub use monomial::{monomial_basis, Monomial, MonomialBasis};
pub use polynomial::Polynomial;
pub use tuple::{act_on_form, FormTuple};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::MatrixQ;

/// Terms of `g` scaled by the least common multiple of its denominators.
pub(crate) fn integer_terms(g: &Polynomial) -> Vec<(Monomial, BigInt)> {
    let (monos, coeffs): (Vec<Monomial>, Vec<BigRational>) = g.terms().map(|(m, c)| (m.clone(), c.clone())).unzip();
    monos.into_iter().zip(crate::linalg::clear_denominators(&coeffs)).collect()
}

/// Integer coefficient rows of `m * g` in the degree `deg g + k` basis, for
/// every generator `g` (outer loop) and degree-`k` monomial `m` (inner loop).
///
/// Each generator is first cleared of denominators, which leaves the span
/// unchanged. Generators must be homogeneous of degree `gen_degree`.
pub fn multiples_rows(gens: &[Polynomial], gen_degree: usize, k: usize) -> Vec<Vec<BigInt>> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let n = first.nvars();
    let target = monomial_basis(n, gen_degree + k);
    let shifts = monomial_basis(n, k);
    let mut rows = Vec::with_capacity(gens.len() * shifts.len());
    for g in gens {
        debug_assert!(g.is_homogeneous_of(gen_degree));
        let terms = integer_terms(g);
        for s in shifts.monomials() {
            let mut row = vec![BigInt::zero(); target.len()];
            for (m, c) in &terms {
                let idx = target.index_of(&m.mul(s)).expect("degree matches");
                row[idx] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Relations among the rows of [`multiples_rows`] coming from `g_b g_a = g_a g_b`.
///
/// For each pair `a < b` and each monomial `μ` of degree `k - gen_degree`, the
/// vector holding the coefficients of `μ g_b` in the block of `g_a` and those
/// of `-μ g_a` in the block of `g_b`. Empty when `k < gen_degree`.
pub fn koszul_row_relations(gens: &[Polynomial], gen_degree: usize, k: usize) -> Vec<Vec<BigInt>> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    if k < gen_degree {
        return Vec::new();
    }
    let n = first.nvars();
    let block = monomial_basis(n, k);
    let terms: Vec<_> = gens.iter().map(integer_terms).collect();
    let mut out = Vec::new();
    for mu in monomial_basis(n, k - gen_degree).monomials() {
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let mut y = vec![BigInt::zero(); gens.len() * block.len()];
                for (m, c) in &terms[b] {
                    y[a * block.len() + block.index_of(&m.mul(mu)).expect("degree matches")] += c;
                }
                for (m, c) in &terms[a] {
                    y[b * block.len() + block.index_of(&m.mul(mu)).expect("degree matches")] -= c;
                }
                out.push(y);
            }
        }
    }
    out
}

/// Matrix `[m_i ∘ M_l]` of the polar pairing between degree-`j` monomials in
/// `x` (rows) and in `y` (columns).
pub fn pairing_matrix(n: usize, j: usize) -> MatrixQ {
    let basis = monomial_basis(n, j);
    let rows: Vec<Vec<BigRational>> = basis
        .monomials()
        .iter()
        .map(|a| {
            let h = Polynomial::term(a.clone(), num_traits::One::one());
            basis
                .monomials()
                .iter()
                .map(|b| {
                    let f = Polynomial::term(b.clone(), num_traits::One::one());
                    h.apply_polar(&f)
                        .expect("same variables")
                        .coefficient(&Monomial::one(n))
                })
                .collect()
        })
        .collect();
    MatrixQ::from_rows(rows).expect("square")
}
