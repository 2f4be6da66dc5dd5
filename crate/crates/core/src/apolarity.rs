//! Catalecticant matrices, annihilators, and the stratification of forms of
//! degree `n(d-1)` in `y`.
//!
//! Every function takes the generator degree `d` explicitly; the number of
//! variables is read off the form.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::binomial::binomial_usize;
use crate::ci::{ci_hilbert_series, is_complete_intersection};
use crate::error::{Error, Result};
use crate::linalg::{block_solve, rank, Echelon, MatrixQ, SubspaceBasis};
use crate::poly::{monomial_basis, FormTuple, Polynomial};

fn socle_degree(f: &Polynomial, d: usize) -> Result<usize> {
    let n = f.nvars();
    if n < 2 || d < 2 {
        return Err(Error::Precondition(format!("need n >= 2 and d >= 2 (got n = {n}, d = {d})")));
    }
    let top = n * (d - 1);
    if !f.is_homogeneous_of(top) {
        return Err(match f.degree() {
            Some(found) => Error::DegreeMismatch { expected: top, found },
            None => Error::NotHomogeneous,
        });
    }
    Ok(top)
}

/// Matrix of `h ↦ h ∘ F` from `k[x]_i` to `k[y]_{deg F - i}` in monomial bases.
#[derive(Clone, Debug, Serialize)]
pub struct CatalecticantMatrix {
    pub degree_i: usize,
    pub matrix: MatrixQ,
}

/// Column `k` expands `m_k ∘ F` in the degree-`(n(d-1) - i)` basis.
pub fn catalecticant(f: &Polynomial, d: usize, i: usize) -> Result<CatalecticantMatrix> {
    let top = socle_degree(f, d)?;
    if i > top {
        return Err(Error::Precondition(format!("contraction degree {i} exceeds {top}")));
    }
    let n = f.nvars();
    let columns = monomial_basis(n, i)
        .monomials()
        .iter()
        .map(|m| {
            Polynomial::term(m.clone(), BigRational::one())
                .apply_polar(f)?
                .coefficients_in_degree(top - i)
        })
        .collect::<Result<Vec<_>>>()?;
    let nrows = monomial_basis(n, top - i).len();
    Ok(CatalecticantMatrix {
        degree_i: i,
        matrix: MatrixQ::from_columns(nrows, &columns)?,
    })
}

/// `I_j = F^⊥ ∩ k[x]_j` as coefficient vectors in the degree-`j` basis.
///
/// Above the socle degree this is the whole space.
pub fn annihilator_piece(f: &Polynomial, d: usize, j: usize) -> Result<SubspaceBasis> {
    let top = socle_degree(f, d)?;
    let dim = monomial_basis(f.nvars(), j).len();
    if j > top {
        let unit = (0..dim)
            .map(|k| {
                let mut v = vec![BigRational::default(); dim];
                v[k] = BigRational::one();
                v
            })
            .collect();
        return SubspaceBasis::from_spanning(dim, unit);
    }
    Ok(crate::linalg::kernel_basis(&catalecticant(f, d, j)?.matrix))
}

/// Basis vectors of an annihilator piece as polynomials.
pub fn annihilator_forms(f: &Polynomial, d: usize, j: usize) -> Result<Vec<Polynomial>> {
    annihilator_piece(f, d, j)?
        .vectors()
        .iter()
        .map(|v| Polynomial::from_coefficients(f.nvars(), j, v))
        .collect()
}

fn catalecticant_ranks(f: &Polynomial, d: usize) -> Result<Vec<usize>> {
    let top = socle_degree(f, d)?;
    (0..=top).map(|j| Ok(rank(&catalecticant(f, d, j)?.matrix))).collect()
}

/// Hilbert function `t_j = dim k[x]_j - dim I_j` of `k[x]/F^⊥`, `j = 0..=n(d-1)`.
///
/// Each value is computed independently; the result is asserted symmetric.
pub fn apolar_hilbert(f: &Polynomial, d: usize) -> Result<Vec<usize>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let t = catalecticant_ranks(f, d)?;
    assert!(
        t.iter().eq(t.iter().rev()),
        "apolar Hilbert function is not symmetric: {t:?}"
    );
    Ok(t)
}

/// The Hilbert function `T` of a complete intersection of `n` forms of degree
/// `d`: the coefficients of `(1 + u + ... + u^{d-1})^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinSequence {
    values: Vec<usize>,
}

impl GorensteinSequence {
    pub fn new(n: usize, d: usize) -> Self {
        GorensteinSequence {
            values: ci_hilbert_series(n, d)
                .iter()
                .map(|c| c.to_usize().expect("Hilbert function value fits in usize"))
                .collect(),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Membership of one form in `V`, `U`, `Gor(T)`, `Z`, and `U_Res`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    #[serde(rename = "in_V")]
    pub in_v: bool,
    #[serde(rename = "in_U")]
    pub in_u: bool,
    #[serde(rename = "in_GorT")]
    pub in_gor_t: bool,
    #[serde(rename = "in_Z")]
    pub in_z: bool,
    #[serde(rename = "in_URes")]
    pub in_u_res: bool,
    pub hilbert: Vec<usize>,
    pub rank_d: usize,
}

impl StratumReport {
    /// `U_Res ⊂ Gor(T) ⊂ U ⊂ V` and `U_Res = U ∖ Z = Gor(T) ∖ Z`.
    pub fn is_coherent(&self) -> bool {
        let implies = |a: bool, b: bool| !a || b;
        implies(self.in_u_res, self.in_gor_t)
            && implies(self.in_gor_t, self.in_u)
            && implies(self.in_u, self.in_v)
            && self.in_u_res == (self.in_u && !self.in_z)
            && self.in_u_res == (self.in_gor_t && !self.in_z)
    }
}

/// Classify `F` of degree `n(d-1)`.
///
/// `V` and `U` come from the rank of `D(F)`, `Gor(T)` from the apolar Hilbert
/// function, `U_Res` from whether the degree-`d` annihilator is spanned by a
/// complete intersection, and `Z = U ∖ U_Res`.
pub fn stratify(f: &Polynomial, d: usize) -> Result<StratumReport> {
    socle_degree(f, d)?;
    let n = f.nvars();
    let k = binomial_usize(d + n - 1, n - 1);
    let hilbert = catalecticant_ranks(f, d)?;
    let rank_d = hilbert[d];
    let in_v = rank_d <= k - n;
    let in_u = rank_d == k - n;
    let in_gor_t = hilbert == GorensteinSequence::new(n, d).values();
    let in_u_res = in_u && {
        let tuple = FormTuple::new(d, annihilator_forms(f, d, d)?)?;
        is_complete_intersection(&tuple)
    };
    Ok(StratumReport {
        in_v,
        in_u,
        in_gor_t,
        in_z: in_u && !in_u_res,
        in_u_res,
        hilbert,
        rank_d,
    })
}

/// A choice of `K - n` rows and columns of `D(F)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chart {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// First chart in lexicographic order, columns compared first, whose minor is nonzero.
///
/// The first independent column set is found greedily, then the first
/// independent row set of those columns, again greedily. Requires `F ∈ U`.
pub fn default_chart(f: &Polynomial, d: usize) -> Result<Chart> {
    let n = f.nvars();
    let dmat = catalecticant(f, d, d)?.matrix;
    let k = dmat.cols();
    let by_cols = Echelon::from_rational_rows(dmat.rows(), dmat.transpose().row_vectors())?;
    if by_cols.rank() != k - n {
        return Err(Error::NotInU {
            rank: by_cols.rank(),
            expected: k - n,
        });
    }
    let cols = by_cols.accepted().to_vec();
    let all_rows: Vec<usize> = (0..dmat.rows()).collect();
    let sub = dmat.select(&all_rows, &cols);
    let rows = Echelon::from_rational_rows(cols.len(), sub.row_vectors())?
        .accepted()
        .to_vec();
    Ok(Chart { rows, cols })
}

/// The basis `γ_1, ..., γ_n` of `I_d` attached to a chart: with `A` the chart
/// minor and `B` the remaining columns on the chart rows, `γ_j` has `e_j` on the
/// non-chart columns and `-A^{-1} B e_j` on the chart columns.
pub fn canonical_kernel_basis(f: &Polynomial, d: usize, chart: &Chart) -> Result<Vec<Polynomial>> {
    let n = f.nvars();
    let dmat = catalecticant(f, d, d)?.matrix;
    let k = dmat.cols();
    let r = rank(&dmat);
    if r != k - n {
        return Err(Error::NotInU { rank: r, expected: k - n });
    }
    if chart.rows.len() != k - n || chart.cols.len() != k - n {
        return Err(Error::Precondition(format!("a chart needs {} rows and columns", k - n)));
    }
    let rest: Vec<usize> = (0..k).filter(|c| !chart.cols.contains(c)).collect();
    let a = dmat.select(&chart.rows, &chart.cols);
    let b = dmat.select(&chart.rows, &rest);
    let x = block_solve(&a, &b).map_err(|e| match e {
        Error::SingularMatrix => Error::SingularChart,
        other => other,
    })?;
    (0..n)
        .map(|j| {
            let mut gamma = vec![BigRational::default(); k];
            for (p, &c) in chart.cols.iter().enumerate() {
                gamma[c] = x.get(p, j).clone();
            }
            gamma[rest[j]] = BigRational::one();
            Polynomial::from_coefficients(n, d, &gamma)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::act_on_form;
    use num_traits::Zero;

    fn y(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&a| BigRational::from_integer(a.into())).collect()
    }

    #[test]
    fn catalecticant_examples() {
        let f = y("y1^2 + y2^2", 2);
        let c = catalecticant(&f, 2, 2).unwrap();
        assert_eq!(c.matrix.row(0), ints(&[2, 0, 2]).as_slice());
        let c = catalecticant(&y("y1^2", 2), 2, 2).unwrap();
        assert_eq!(c.matrix.row(0), ints(&[2, 0, 0]).as_slice());
        let c0 = catalecticant(&f, 2, 0).unwrap();
        assert_eq!(c0.matrix.column(0), f.coefficients_in_degree(2).unwrap());
        assert!(matches!(catalecticant(&y("y1^3", 2), 2, 1), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn annihilator_examples() {
        let f = y("y1^2 + y2^2", 2);
        let got = annihilator_piece(&f, 2, 2).unwrap();
        let expected = SubspaceBasis::from_spanning(3, vec![ints(&[1, 0, -1]), ints(&[0, 1, 0])]).unwrap();
        assert!(got.same_span(&expected).unwrap());
        let got = annihilator_piece(&y("y1^2", 2), 2, 2).unwrap();
        let expected = SubspaceBasis::from_spanning(3, vec![ints(&[0, 1, 0]), ints(&[0, 0, 1])]).unwrap();
        assert!(got.same_span(&expected).unwrap());
        let full = annihilator_piece(&f, 2, 3).unwrap();
        assert_eq!(full.dim(), 4);
        // codimension one in the socle degree
        let g = y("y1^3*y2 - 2*y1*y2^3 + y2^4", 2);
        assert_eq!(annihilator_piece(&g, 3, 4).unwrap().dim(), 4);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(apolar_hilbert(&y("y1*y2", 2), 2).unwrap(), vec![1, 2, 1]);
        assert_eq!(apolar_hilbert(&y("y1^2", 2), 2).unwrap(), vec![1, 1, 1]);
        let quartic = y("y1^4 + 3*y1^3*y2 - y1^2*y2^2 + 2*y1*y2^3 + 5*y2^4", 2);
        // (1 + u + u^2)^2 = 1 + 2u + 3u^2 + 2u^3 + u^4
        assert_eq!(apolar_hilbert(&quartic, 3).unwrap(), vec![1, 2, 3, 2, 1]);
        assert_eq!(apolar_hilbert(&Polynomial::zero(2), 2), Err(Error::ZeroPolynomial));
        assert_eq!(GorensteinSequence::new(2, 3).values(), &[1, 2, 3, 2, 1]);
        assert_eq!(GorensteinSequence::new(3, 3).values(), &[1, 3, 6, 7, 6, 3, 1]);
    }

    #[test]
    fn stratify_examples() {
        let r = stratify(&y("y1^2 + y2^2", 2), 2).unwrap();
        assert!(r.in_u_res && r.in_gor_t && r.in_u && r.in_v && !r.in_z);
        let r = stratify(&y("y1^2", 2), 2).unwrap();
        assert!(r.in_u && r.in_z && !r.in_u_res && !r.in_gor_t);
        assert!(r.is_coherent());
        for f in ["y1^4", "y1^2*y2^2", "y1^3*y2 + y2^4", "0"] {
            let r = stratify(&y(f, 2), 3).unwrap();
            assert!(r.in_v, "{f}");
            assert!(r.is_coherent(), "{f}");
        }
        let json = serde_json::to_value(stratify(&y("y1^2", 2), 2).unwrap()).unwrap();
        for key in ["in_V", "in_U", "in_GorT", "in_Z", "in_URes", "hilbert", "rank_d"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    #[test]
    fn canonical_basis_example() {
        let f = y("y1^2 + y2^2", 2);
        let chart = default_chart(&f, 2).unwrap();
        assert_eq!(chart, Chart { rows: vec![0], cols: vec![0] });
        let basis = canonical_kernel_basis(&f, 2, &chart).unwrap();
        assert_eq!(basis[0], Polynomial::parse("x1*x2", 2).unwrap());
        assert_eq!(basis[1], Polynomial::parse("-x1^2 + x2^2", 2).unwrap());
        for h in &basis {
            assert!(h.apply_polar(&f).unwrap().is_zero());
        }
        // column 1 of [2, 0, 2] is zero
        let bad = Chart { rows: vec![0], cols: vec![1] };
        assert_eq!(canonical_kernel_basis(&f, 2, &bad), Err(Error::SingularChart));
    }

    #[test]
    fn catalecticant_rank_is_invariant_under_linear_change() {
        let f = y("y1^3*y2^3 + 2*y1*y2^2*y3^3 - y3^6 + y1^2*y3^4 + y2^6", 3);
        let g = MatrixQ::from_i64_rows(&[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1]]).unwrap();
        let moved = act_on_form(&g, &f).unwrap();
        assert_eq!(stratify(&f, 3).unwrap(), stratify(&moved, 3).unwrap());
    }

    #[test]
    fn chart_errors_outside_u() {
        // rank of D(F) is 0 for F = 0, so F is not in U
        assert!(matches!(default_chart(&Polynomial::zero(2), 2), Err(Error::NotInU { .. })));
        assert!(BigRational::zero().is_zero());
    }
}
