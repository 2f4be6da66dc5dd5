//! Exact computations around associated forms of complete intersections.
//!
//! Forms are sparse polynomials with rational coefficients ([`poly`]) and
//! every rank, kernel, and span is computed exactly ([`linalg`]). On top of
//! these sit the apolar pairing and the stratification of forms by their
//! catalecticants ([`apolarity`]), the graded quotient of a complete
//! intersection and its associated form ([`ci`]), tangent-space and relation
//! counts ([`tangent`]), and the binomial identities these counts reduce to
//! ([`identities`]). [`sample`] draws seeded random inputs and [`cli`] drives
//! the batch suites.
//!
//! Runnable examples, one per capability:
//!
//! | example | shows |
//! |---|---|
//! | `polar_pairing` | text syntax, polar action, group actions |
//! | `exact_linalg` | echelon, Bareiss, and modular ranks |
//! | `stratify_forms` | catalecticants, apolar Hilbert functions, strata, charts |
//! | `associated_form` | quotient, socle, `A(f)`, its properties |
//! | `tangent_dimension` | tangent dimension against `N` |
//! | `relation_space` | relation count by elimination and by formula |
//! | `koszul_syzygies` | Koszul kernels |
//! | `identities` | identity checks and the two composition-sum readings |

pub mod apolarity;
pub mod binomial;
pub mod ci;
pub mod cli;
pub mod error;
pub mod identities;
pub mod linalg;
pub mod poly;
pub mod sample;
pub mod tangent;
