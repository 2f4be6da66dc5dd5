//! The quotient `M(f) = k[x] / (f_1, ..., f_n)` of a form tuple, its socle,
//! and the associated form `A(f)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::apolarity::{apolar_hilbert, GorensteinSequence};
use crate::binomial::{binomial_usize, multinomial};
use crate::error::{Error, Result};
use crate::linalg::{clear_denominators, modular, Echelon, SubspaceBasis};
use crate::poly::{koszul_row_relations, monomial_basis, multiples_rows, FormTuple, Monomial, Polynomial};

/// Coefficients of `(1 + u + ... + u^{d-1})^n`, indices `0..=n(d-1)`.
pub fn ci_hilbert_series(n: usize, d: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); coeffs.len() + d - 1];
        for (i, c) in coeffs.iter().enumerate() {
            for slot in &mut next[i..i + d] {
                *slot += c;
            }
        }
        coeffs = next;
    }
    coeffs
}

fn ideal_rows(f: &FormTuple, j: usize) -> Vec<Vec<BigInt>> {
    if j < f.d() {
        return Vec::new();
    }
    multiples_rows(f.forms(), f.d(), j - f.d())
}

fn ideal_echelon(f: &FormTuple, j: usize) -> Echelon {
    let ncols = monomial_basis(f.n(), j).len();
    Echelon::from_integer_rows(ncols, ideal_rows(f, j)).expect("rows have basis length")
}

fn ideal_rank(f: &FormTuple, j: usize) -> usize {
    let rows = ideal_rows(f, j);
    let ncols = monomial_basis(f.n(), j).len();
    if j >= f.d() {
        let relations = koszul_row_relations(f.forms(), f.d(), j - f.d());
        if let Some(r) = modular::certified_rank(&rows, ncols, &relations) {
            return r;
        }
    }
    Echelon::from_integer_rows(ncols, rows).expect("rows have basis length").rank()
}

/// Basis of `(f)_j = k[x]_{j-d} · span(f)` inside `k[x]_j`; empty below degree `d`.
pub fn ideal_piece(f: &FormTuple, j: usize) -> SubspaceBasis {
    let ncols = monomial_basis(f.n(), j).len();
    let rows: Vec<Vec<BigRational>> = ideal_rows(f, j)
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    SubspaceBasis::from_spanning(ncols, rows).expect("rows have basis length")
}

/// Whether `f` has no common zero besides the origin.
///
/// Decided by `M(f)_{n(d-1)+1} = 0`: the quotient is finite-dimensional
/// exactly when it vanishes in that degree. Full rank of `(f)_{n(d-1)+1}` is
/// first attempted modulo word-sized primes, which certifies it over the
/// rationals; if that fails the rank is computed exactly.
pub fn is_complete_intersection(f: &FormTuple) -> bool {
    let j = f.socle_degree() + 1;
    let ncols = monomial_basis(f.n(), j).len();
    let rows = ideal_rows(f, j);
    if modular::certify_full_rank(&rows, ncols) && rows.len() >= ncols {
        return true;
    }
    Echelon::from_integer_rows(ncols, rows)
        .expect("rows have basis length")
        .is_full_column_rank()
}

/// One graded piece of `M(f)`.
#[derive(Clone, Debug)]
pub struct QuotientPiece {
    pub degree: usize,
    pub ideal: SubspaceBasis,
    /// Monomials at the non-pivot columns of the ideal piece, a basis of `M(f)_j`.
    pub complement: Vec<Monomial>,
}

impl QuotientPiece {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }
}

/// `M(f)` with graded pieces computed on demand by exact elimination.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    f: FormTuple,
}

impl GradedQuotient {
    pub fn new(f: FormTuple) -> Self {
        GradedQuotient { f }
    }

    pub fn tuple(&self) -> &FormTuple {
        &self.f
    }

    pub fn piece(&self, j: usize) -> QuotientPiece {
        let e = ideal_echelon(&self.f, j);
        let basis = monomial_basis(self.f.n(), j);
        let complement = e
            .free_columns()
            .into_iter()
            .map(|c| basis.get(c).clone())
            .collect();
        QuotientPiece {
            degree: j,
            ideal: ideal_piece(&self.f, j),
            complement,
        }
    }

    /// `dim M(f)_j` for `j = 0..=n(d-1)+1`.
    ///
    /// Each rank of `(f)_j` is certified by modular ranks together with the
    /// Koszul relations among the generating rows, and computed by exact
    /// elimination whenever that certificate does not close.
    pub fn hilbert_function(&self) -> Vec<usize> {
        let n = self.f.n();
        (0..=self.f.socle_degree() + 1)
            .map(|j| binomial_usize(j + n - 1, n - 1) - ideal_rank(&self.f, j))
            .collect()
    }

    /// [`Self::hilbert_function`] by exact elimination only.
    pub fn hilbert_function_exact(&self) -> Vec<usize> {
        let n = self.f.n();
        (0..=self.f.socle_degree() + 1)
            .map(|j| binomial_usize(j + n - 1, n - 1) - ideal_echelon(&self.f, j).rank())
            .collect()
    }
}

/// The linear functional on `k[x]_{n(d-1)}` that vanishes on `(f)_{n(d-1)}`,
/// normalized so that it takes the value 1 on the Jacobian determinant.
#[derive(Clone, Debug)]
pub struct SocleFunctional {
    n: usize,
    degree: usize,
    /// Integer functional, unnormalized.
    phi: Vec<BigInt>,
    /// `phi(jac f)`.
    phi_jac: BigRational,
}

impl SocleFunctional {
    /// Fails with [`Error::NotCompleteIntersection`] when `f` has a nontrivial common zero.
    pub fn new(f: &FormTuple) -> Result<Self> {
        if !is_complete_intersection(f) {
            return Err(Error::NotCompleteIntersection);
        }
        let degree = f.socle_degree();
        let e = ideal_echelon(f, degree);
        let kernel = e.kernel_basis();
        if kernel.len() != 1 {
            return Err(Error::Precondition(format!(
                "socle degree piece has dimension {}, expected 1",
                kernel.len()
            )));
        }
        let phi = clear_denominators(&kernel[0]);
        let jac = f.jacobian_det().coefficients_in_degree(degree)?;
        let phi_jac: BigRational = phi
            .iter()
            .zip(&jac)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| b * BigRational::from_integer(a.clone()))
            .sum();
        if phi_jac.is_zero() {
            return Err(Error::Precondition("Jacobian determinant lies in the ideal".into()));
        }
        Ok(SocleFunctional {
            n: f.n(),
            degree,
            phi,
            phi_jac,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The unique `λ` with `[p] = λ [jac f]` in `M(f)_{n(d-1)}`.
    pub fn coordinate(&self, p: &Polynomial) -> Result<BigRational> {
        if p.nvars() != self.n {
            return Err(Error::VarCountMismatch {
                left: self.n,
                right: p.nvars(),
            });
        }
        let basis = monomial_basis(self.n, self.degree);
        let mut acc = BigRational::zero();
        for (m, c) in p.terms() {
            let k = basis.index_of(m).ok_or(Error::DegreeMismatch {
                expected: self.degree,
                found: m.degree(),
            })?;
            if !self.phi[k].is_zero() {
                acc += c * BigRational::from_integer(self.phi[k].clone());
            }
        }
        Ok(acc / &self.phi_jac)
    }

    /// Coordinate of the basis monomial with index `k`.
    fn monomial_coordinate(&self, k: usize) -> BigRational {
        BigRational::from_integer(self.phi[k].clone()) / &self.phi_jac
    }
}

/// `λ` with `[p] = λ [jac f]`; requires `f` to be a complete intersection.
pub fn socle_coordinate(f: &FormTuple, p: &Polynomial) -> Result<BigRational> {
    SocleFunctional::new(f)?.coordinate(p)
}

/// The associated form `A(f) = sum_a C(n(d-1); a) λ(x^a) y^a`, where `λ` is the
/// socle coordinate: the form for which `(y_1 x_1 + ... + y_n x_n)^{n(d-1)}`
/// equals `A(f)(y) [jac f]` in `M(f)`.
pub fn associated_form(f: &FormTuple) -> Result<Polynomial> {
    let s = SocleFunctional::new(f)?;
    let basis = monomial_basis(f.n(), s.degree);
    let terms = basis.monomials().iter().enumerate().map(|(k, m)| {
        let c = s.monomial_coordinate(k) * BigRational::from_integer(multinomial(m.exps()));
        (m.clone(), c)
    });
    Polynomial::from_terms(f.n(), terms)
}

/// `f_i ∘ F = 0` for every `i`, and the apolar Hilbert function of `F` is `T`.
pub fn verify_inverse_system(f: &FormTuple, form: &Polynomial) -> Result<bool> {
    for g in f.forms() {
        if !g.apply_polar(form)?.is_zero() {
            return Ok(false);
        }
    }
    if form.is_zero() {
        return Ok(false);
    }
    let t = GorensteinSequence::new(f.n(), f.d());
    Ok(apolar_hilbert(form, f.d())? == t.values())
}

/// Whether the degree-`d` annihilator of `A(f)` is exactly `span(f)`.
pub fn roundtrip_span(f: &FormTuple) -> Result<bool> {
    let form = associated_form(f)?;
    let recovered = crate::apolarity::annihilator_piece(&form, f.d(), f.d())?;
    let original = SubspaceBasis::from_spanning(
        monomial_basis(f.n(), f.d()).len(),
        f.forms()
            .iter()
            .map(|g| g.coefficients_in_degree(f.d()))
            .collect::<Result<_>>()?,
    )?;
    Ok(recovered.dim() == f.n() && recovered.same_span(&original)?)
}

/// Dimension of the span of all degree-`l` monomials in `f_1, ..., f_n`.
pub fn products_span_dim(f: &FormTuple, l: usize) -> usize {
    let n = f.n();
    let products: Vec<Polynomial> = monomial_basis(n, l)
        .monomials()
        .iter()
        .map(|m| {
            let mut p = Polynomial::constant(n, BigRational::one());
            for (i, &e) in m.exps().iter().enumerate() {
                p = p.multiply(&f.forms()[i].pow(e)).expect("same variables");
            }
            p
        })
        .collect();
    let rows = multiples_rows(&products, l * f.d(), 0);
    let ncols = monomial_basis(n, l * f.d()).len();
    Echelon::from_integer_rows(ncols, rows).expect("rows have basis length").rank()
}
