//! Tangent-space dimension counts at points of `U_Res`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::apolarity::{annihilator_forms, stratify};
use crate::binomial::{binomial, binomial_usize};
use crate::ci::is_complete_intersection;
use crate::error::{Error, Result};
use crate::identities::dimt2_sum;
use crate::linalg::{modular, Echelon, SubspaceBasis};
use crate::poly::{integer_terms, monomial_basis, multiples_rows, FormTuple, Polynomial};

fn common_degree(polys: &[Polynomial]) -> Result<Option<usize>> {
    let mut deg = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let d = p.degree().ok_or(Error::NotHomogeneous)?;
        match deg {
            Some(e) if e != d => return Err(Error::DegreeMismatch { expected: e, found: d }),
            _ => deg = Some(d),
        }
    }
    Ok(deg)
}

/// Integer rows of all products `g h`, `g` from `u`, `h` from `v`.
fn product_rows(u: &[Polynomial], v: &[Polynomial]) -> Result<Option<(usize, Vec<Vec<BigInt>>)>> {
    let (Some(i), Some(j)) = (common_degree(u)?, common_degree(v)?) else {
        return Ok(None);
    };
    let mut products = Vec::with_capacity(u.len() * v.len());
    for g in u {
        for h in v {
            products.push(g.multiply(h)?);
        }
    }
    Ok(Some((i + j, multiples_rows(&products, i + j, 0))))
}

/// `dim UV`, the span of all products of a homogeneous spanning set of `U`
/// with one of `V`.
pub fn product_space_dim(u: &[Polynomial], v: &[Polynomial]) -> Result<usize> {
    let Some((deg, rows)) = product_rows(u, v)? else {
        return Ok(0);
    };
    let n = u[0].nvars();
    Ok(Echelon::from_integer_rows(monomial_basis(n, deg).len(), rows)?.rank())
}

/// `N = K n - n^2 + 1` with `K = C(d+n-1, n-1)`.
///
/// Also evaluates the alternating sum that the smoothness argument reduces to
/// and panics if the two disagree.
pub fn expected_n(n: usize, d: usize) -> BigInt {
    let k = binomial((d + n - 1) as i64, (n - 1) as i64);
    let n_big = BigInt::from(n);
    let value = k * &n_big - &n_big * &n_big + 1;
    assert_eq!(value, dimt2_sum(n, d), "N disagrees with the alternating sum at (n, d) = ({n}, {d})");
    value
}

/// `sum_{m=3}^{floor(n(d-1)/d)} (-1)^{m-1} (m-1) C(n+1, m) C(n(d-1)-md+n-1, n-1)`.
///
/// Defined for `n >= 3`, with `d >= 3` when `n = 3`.
pub fn relation_space_dim_formula(n: usize, d: usize) -> Result<BigInt> {
    if n < 3 || d < 2 || (n == 3 && d < 3) {
        return Err(Error::Precondition(format!(
            "the relation formula needs n >= 3, and d >= 3 when n = 3 (got n = {n}, d = {d})"
        )));
    }
    Ok(relation_sum(n, d))
}

pub(crate) fn relation_sum(n: usize, d: usize) -> BigInt {
    let top = n * (d - 1);
    let mut acc = BigInt::from(0);
    for m in 3..=top / d {
        let term = BigInt::from(m - 1)
            * binomial((n + 1) as i64, m as i64)
            * binomial((top - m * d + n - 1) as i64, (n - 1) as i64);
        if m % 2 == 0 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

fn check_band(f: &FormTuple) -> Result<usize> {
    let top = f.socle_degree();
    if top < 2 * f.d() {
        return Err(Error::Precondition(format!(
            "need n(d-1) >= 2d (got n = {}, d = {})",
            f.n(),
            f.d()
        )));
    }
    if !is_complete_intersection(f) {
        return Err(Error::NotCompleteIntersection);
    }
    Ok(top - 2 * f.d())
}

/// Forms scaled to integer coefficients.
fn integer_forms(f: &FormTuple) -> Vec<Polynomial> {
    f.forms()
        .iter()
        .map(|g| {
            let terms = integer_terms(g).into_iter().map(|(m, c)| (m, BigRational::from_integer(c)));
            Polynomial::from_terms(f.n(), terms).expect("same variables")
        })
        .collect()
}

/// Index of `f_i f_j` among the products with `i <= j`, taken in row-major order.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    i * n - i * (i + 1) / 2 + j
}

fn pair_products(g: &[Polynomial]) -> Vec<Polynomial> {
    let n = g.len();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            out.push(g[i].multiply(&g[j]).expect("same variables"));
        }
    }
    out
}

/// Relations `μ f_k (f_i f_j) - μ f_i (f_k f_j) = 0` among the rows `e f_i f_j`,
/// `μ` of degree `k - d`.
fn triple_relations(g: &[Polynomial], d: usize, k: usize) -> Vec<Vec<BigInt>> {
    if k < d {
        return Vec::new();
    }
    let n = g.len();
    let nvars = g[0].nvars();
    let block = monomial_basis(nvars, k);
    let width = n * (n + 1) / 2 * block.len();
    let terms: Vec<_> = g.iter().map(integer_terms).collect();
    let mut out = Vec::new();
    for mu in monomial_basis(nvars, k - d).monomials() {
        for i in 0..n {
            for j in 0..n {
                for l in i + 1..n {
                    let mut y = vec![BigInt::zero(); width];
                    let (left, right) = (pair_index(n, i, j), pair_index(n, l, j));
                    for (m, c) in &terms[l] {
                        y[left * block.len() + block.index_of(&m.mul(mu)).expect("degree matches")] += c;
                    }
                    for (m, c) in &terms[i] {
                        y[right * block.len() + block.index_of(&m.mul(mu)).expect("degree matches")] -= c;
                    }
                    out.push(y);
                }
            }
        }
    }
    out
}

/// `dim R`: the number of products `e_l f_i f_j` (`i <= j`, `e_l` running over
/// the degree-`(n(d-1)-2d)` monomials) minus the dimension of their span.
///
/// The span dimension is certified from modular ranks and the relations
/// `f_k (f_i f_j) = f_i (f_k f_j)`, and computed by exact elimination when
/// that certificate does not close.
pub fn relation_space_dim_bruteforce(f: &FormTuple) -> Result<usize> {
    let k = check_band(f)?;
    let g = integer_forms(f);
    let rows = multiples_rows(&pair_products(&g), 2 * f.d(), k);
    let count = rows.len();
    let ncols = monomial_basis(f.n(), f.socle_degree()).len();
    let rank = match modular::certified_rank(&rows, ncols, &triple_relations(&g, f.d(), k)) {
        Some(r) => r,
        None => Echelon::from_integer_rows(ncols, rows)?.rank(),
    };
    Ok(count - rank)
}

/// [`relation_space_dim_bruteforce`] by exact elimination only.
pub fn relation_space_dim_exact(f: &FormTuple) -> Result<usize> {
    let k = check_band(f)?;
    let rows = multiples_rows(&pair_products(f.forms()), 2 * f.d(), k);
    let count = rows.len();
    let ncols = monomial_basis(f.n(), f.socle_degree()).len();
    Ok(count - Echelon::from_integer_rows(ncols, rows)?.rank())
}

/// Kernel of `(h_1, ..., h_n) ↦ sum h_i f_i` on `k[x]_ρ^n`, compared with the span
/// of the Koszul syzygies `m (f_j e_i - f_i e_j)`, `m` of degree `ρ - d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulCheck {
    pub rho: usize,
    pub kernel_dim: usize,
    pub koszul_dim: usize,
}

impl KoszulCheck {
    /// Koszul syzygies always lie in the kernel, so equal dimensions mean equal spaces.
    pub fn holds(&self) -> bool {
        self.kernel_dim == self.koszul_dim
    }
}

pub fn koszul_kernel_check(f: &FormTuple, rho: usize) -> Result<KoszulCheck> {
    let (n, d) = (f.n(), f.d());
    if rho < d || rho + d > f.socle_degree() {
        return Err(Error::Precondition(format!(
            "need d <= rho <= n(d-1) - d (got rho = {rho}, n = {n}, d = {d})"
        )));
    }
    if !is_complete_intersection(f) {
        return Err(Error::NotCompleteIntersection);
    }
    let image_cols = monomial_basis(n, rho + d).len();
    let map_rows = multiples_rows(f.forms(), d, rho);
    let kernel_dim = map_rows.len() - Echelon::from_integer_rows(image_cols, map_rows)?.rank();

    // Koszul vectors live in k[x]_ρ^n, blocks ordered by i.
    let block = monomial_basis(n, rho).len();
    let mut koszul = Echelon::new(n * block);
    for m in monomial_basis(n, rho - d).monomials() {
        let shifted: Vec<Vec<BigRational>> = f
            .forms()
            .iter()
            .map(|g| {
                Polynomial::term(m.clone(), BigRational::one())
                    .multiply(g)?
                    .coefficients_in_degree(rho)
            })
            .collect::<Result<_>>()?;
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![BigRational::zero(); n * block];
                v[i * block..(i + 1) * block].clone_from_slice(&shifted[j]);
                for (slot, c) in v[j * block..(j + 1) * block].iter_mut().zip(&shifted[i]) {
                    *slot = -c;
                }
                koszul.insert(&v)?;
            }
        }
    }
    Ok(KoszulCheck {
        rho,
        kernel_dim,
        koszul_dim: koszul.rank(),
    })
}

/// Result of [`tangent_dim`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    pub n: usize,
    pub d: usize,
    pub dim_ambient: usize,
    pub dim_product: usize,
    pub tangent_dim: usize,
    #[serde(rename = "expected_N")]
    pub expected_n: usize,
    #[serde(rename = "dim_R_bruteforce")]
    pub dim_r_bruteforce: Option<usize>,
    #[serde(rename = "dim_R_formula")]
    pub dim_r_formula: Option<usize>,
}

impl TangentReport {
    pub fn matches_expected(&self) -> bool {
        self.tangent_dim == self.expected_n
    }

    /// Whether both relation counts are present and agree (vacuously true when absent).
    pub fn relations_agree(&self) -> bool {
        self.dim_r_bruteforce == self.dim_r_formula
    }
}

/// `dim k[y]_{n(d-1)} - dim I_d I_{n(d-1)-d}` for `F` in `U_Res`, with `I = F^⊥`.
///
/// The relation counts are filled in when `F`'s degree-`d` annihilator is in
/// the range where they are defined.
pub fn tangent_dim(f: &Polynomial, d: usize) -> Result<TangentReport> {
    let report = stratify(f, d)?;
    if !report.in_u_res {
        return Err(Error::NotInURes);
    }
    let n = f.nvars();
    let top = n * (d - 1);
    let i_d = annihilator_forms(f, d, d)?;
    let i_rest = annihilator_forms(f, d, top - d)?;
    let dim_product = product_space_dim(&i_d, &i_rest)?;
    let dim_ambient = binomial_usize(top + n - 1, n - 1);
    let (dim_r_bruteforce, dim_r_formula) = if top >= 2 * d {
        let tuple = FormTuple::new(d, i_d)?;
        let brute = relation_space_dim_bruteforce(&tuple)?;
        let formula = relation_space_dim_formula(n, d)
            .ok()
            .map(|v| v.to_usize().expect("relation count fits in usize"));
        (Some(brute), formula)
    } else {
        (None, None)
    };
    Ok(TangentReport {
        n,
        d,
        dim_ambient,
        dim_product,
        tangent_dim: dim_ambient - dim_product,
        expected_n: expected_n(n, d).to_usize().expect("N fits in usize"),
        dim_r_bruteforce,
        dim_r_formula,
    })
}

/// Whether `I_{n(d-1)-d} = k[x]_{n(d-1)-2d} I_d`, checked by double inclusion.
pub fn annihilator_generated_in_degree_d(f: &Polynomial, d: usize) -> Result<bool> {
    let n = f.nvars();
    let top = n * (d - 1);
    if top < 2 * d {
        return Err(Error::Precondition("need n(d-1) >= 2d".into()));
    }
    let i_d = annihilator_forms(f, d, d)?;
    let target = crate::apolarity::annihilator_piece(f, d, top - d)?;
    let ambient = monomial_basis(n, top - d).len();
    let generated = SubspaceBasis::from_spanning(
        ambient,
        multiples_rows(&i_d, d, top - 2 * d)
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect(),
    )?;
    Ok(generated.is_subspace_of(&target)? && target.is_subspace_of(&generated)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ci::associated_form;
    use crate::identities::dimt2_tail;
    use crate::sample::random_ci_tuple;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn product_dims() {
        let u = [p("x1", 2), p("x2", 2)];
        assert_eq!(product_space_dim(&u, &u).unwrap(), 3);
        assert_eq!(product_space_dim(&[p("x1", 2)], &[p("x1", 2)]).unwrap(), 1);
        assert_eq!(product_space_dim(&[], &u).unwrap(), 0);
        assert!(product_space_dim(&[p("x1", 2), p("x1^2", 2)], &u).is_err());
    }

    #[test]
    fn expected_values() {
        assert_eq!(expected_n(3, 3), BigInt::from(22));
        assert_eq!(expected_n(4, 2), BigInt::from(25));
        assert_eq!(expected_n(3, 4), BigInt::from(37));
    }

    #[test]
    fn formula_values() {
        assert_eq!(relation_space_dim_formula(3, 3).unwrap(), BigInt::from(0));
        assert_eq!(relation_space_dim_formula(4, 4).unwrap(), BigInt::from(20));
        assert_eq!(relation_space_dim_formula(6, 2).unwrap(), BigInt::from(70));
        assert!(relation_space_dim_formula(3, 2).is_err());
        assert!(relation_space_dim_formula(2, 5).is_err());
        // (4, 4): only m = 3 contributes, 2 C(5, 3) C(3, 3).
        assert_eq!(relation_space_dim_formula(4, 4).unwrap(), BigInt::from(2 * 10));
    }

    #[test]
    fn formula_is_the_tail_of_the_alternating_sum() {
        for n in 3..12 {
            for d in 2..12 {
                if n * (d - 1) / d >= 3 {
                    assert_eq!(relation_space_dim_formula(n, d).unwrap(), dimt2_tail(n, d));
                }
            }
        }
    }

    #[test]
    fn certified_and_exact_relation_counts_agree() {
        for (n, d, seed) in [(3, 3, 1), (4, 2, 2), (5, 2, 3), (3, 4, 4)] {
            let f = random_ci_tuple(n, d, seed, 5).unwrap();
            let brute = relation_space_dim_bruteforce(&f).unwrap();
            assert_eq!(brute, relation_space_dim_exact(&f).unwrap());
            assert_eq!(BigInt::from(brute), relation_space_dim_formula(n, d).unwrap());
        }
    }

    #[test]
    fn relation_preconditions() {
        let f = FormTuple::fermat(2, 3).unwrap();
        assert!(matches!(relation_space_dim_bruteforce(&f), Err(Error::Precondition(_))));
        let g = FormTuple::new(2, vec![p("x1^2", 3), p("x1*x2", 3), p("x3^2", 3)]).unwrap();
        assert!(matches!(relation_space_dim_bruteforce(&g), Err(Error::Precondition(_))));
    }

    #[test]
    fn koszul_binary_quadrics() {
        let f = FormTuple::new(2, vec![p("x1^2", 2), p("x2^2", 2)]).unwrap();
        // n(d-1) - d = 0 < d, so no admissible ρ.
        assert!(koszul_kernel_check(&f, 2).is_err());
        let g = FormTuple::fermat(3, 2).unwrap();
        assert!(koszul_kernel_check(&g, 2).is_err());
        let h = FormTuple::fermat(4, 2).unwrap();
        let check = koszul_kernel_check(&h, 2).unwrap();
        // Kernel on k[x]_2^4 mapping to degree 4: spanned by f_j e_i - f_i e_j.
        assert_eq!(check.kernel_dim, 6);
        assert!(check.holds());
    }

    #[test]
    fn koszul_random() {
        for (n, d) in [(3, 3), (4, 2)] {
            let f = random_ci_tuple(n, d, 9, 5).unwrap();
            for rho in d..=n * (d - 1) - d {
                assert!(koszul_kernel_check(&f, rho).unwrap().holds());
            }
        }
    }

    #[test]
    fn tangent_dimension_small() {
        for (n, d) in [(3, 3), (4, 2)] {
            let f = random_ci_tuple(n, d, 21, 5).unwrap();
            let a = associated_form(&f).unwrap();
            let report = tangent_dim(&a, d).unwrap();
            assert!(report.matches_expected(), "{report:?}");
            assert!(report.relations_agree());
            assert!(annihilator_generated_in_degree_d(&a, d).unwrap());
        }
    }

    #[test]
    fn tangent_requires_u_res() {
        assert!(matches!(tangent_dim(&p("y1^2", 2), 2), Err(Error::NotInURes)));
    }
}
