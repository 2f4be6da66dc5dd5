use num_rational::BigRational;

use super::Echelon;
use crate::error::{Error, Result};

/// A subspace of `Q^ambient` given by an ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<BigRational>>,
}

impl SubspaceBasis {
    /// Keep the vectors that are independent of their predecessors, in order.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<BigRational>>) -> Result<Self> {
        let mut e = Echelon::new(ambient);
        let mut keep = Vec::new();
        for v in vectors {
            if e.insert(&v)? {
                keep.push(v);
            }
        }
        Ok(SubspaceBasis {
            ambient,
            vectors: keep,
        })
    }

    /// Wrap vectors already known to be independent.
    pub(crate) fn from_independent(ambient: usize, vectors: Vec<Vec<BigRational>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        SubspaceBasis { ambient, vectors }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<Vec<BigRational>> {
        self.vectors
    }

    pub fn echelon(&self) -> Echelon {
        Echelon::from_rational_rows(self.ambient, self.vectors.iter().map(Vec::as_slice))
            .expect("basis vectors have ambient length")
    }

    pub fn contains(&self, v: &[BigRational]) -> Result<bool> {
        self.echelon().contains(v)
    }

    /// Whether `self` is contained in `other`.
    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::LengthMismatch {
                expected: other.ambient,
                found: self.ambient,
            });
        }
        let e = other.echelon();
        for v in &self.vectors {
            if !e.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_span(&self, other: &SubspaceBasis) -> Result<bool> {
        Ok(self.dim() == other.dim() && self.is_subspace_of(other)?)
    }
}
