//! Incremental fraction-free row echelon form over the integers.
//!
//! Rows are inserted one at a time and reduced against the stored rows in
//! ascending pivot order. Each elimination step is the cross-multiplication
//! `row <- (b/g) row - (a/g) stored` followed by removal of the row content, so
//! every stored row is a primitive integer vector whose leading entry is
//! positive. The pivot of a row is its first nonzero column after reduction.
//!
//! Compared with Bareiss elimination this keeps entries far smaller on the
//! structured matrices that arise from products of annihilator pieces, where
//! row contents are large.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    by_pivot: BTreeMap<usize, usize>,
    accepted: Vec<usize>,
    inserted: usize,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            by_pivot: BTreeMap::new(),
            accepted: Vec::new(),
            inserted: 0,
        }
    }

    pub fn from_integer_rows<I>(ncols: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut e = Self::new(ncols);
        for row in rows {
            e.insert_integer(row)?;
        }
        Ok(e)
    }

    pub fn from_rational_rows<'a, I>(ncols: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [BigRational]>,
    {
        let mut e = Self::new(ncols);
        for row in rows {
            e.insert(row)?;
        }
        Ok(e)
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_column_rank(&self) -> bool {
        self.rank() == self.ncols
    }

    /// Positions (in insertion order, counting from zero) of the inserted rows
    /// that were independent of everything inserted before them.
    pub fn accepted(&self) -> &[usize] {
        &self.accepted
    }

    /// Pivot columns in ascending order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.by_pivot.keys().copied().collect()
    }

    /// Non-pivot columns in ascending order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.by_pivot.contains_key(c))
            .collect()
    }

    /// The stored row with the given pivot column.
    pub fn row_with_pivot(&self, col: usize) -> Option<&[BigInt]> {
        self.by_pivot.get(&col).map(|&i| self.rows[i].as_slice())
    }

    pub fn insert(&mut self, row: &[BigRational]) -> Result<bool> {
        self.insert_integer(super::clear_denominators(row))
    }

    /// Reduce `row` and store it if it is independent of the stored rows.
    pub fn insert_integer(&mut self, mut row: Vec<BigInt>) -> Result<bool> {
        if row.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                found: row.len(),
            });
        }
        let index = self.inserted;
        self.inserted += 1;
        self.reduce_in_place(&mut row);
        let Some(pivot) = row.iter().position(|v| !v.is_zero()) else {
            return Ok(false);
        };
        make_primitive(&mut row);
        if row[pivot].is_negative() {
            row.iter_mut().for_each(|v| *v = -&*v);
        }
        self.by_pivot.insert(pivot, self.rows.len());
        self.rows.push(row);
        self.accepted.push(index);
        Ok(true)
    }

    /// Remainder of `row` after reduction, up to a nonzero scalar.
    pub fn reduce(&self, row: &[BigRational]) -> Result<Vec<BigInt>> {
        if row.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                found: row.len(),
            });
        }
        let mut r = super::clear_denominators(row);
        self.reduce_in_place(&mut r);
        Ok(r)
    }

    /// Whether `row` lies in the span of the stored rows.
    pub fn contains(&self, row: &[BigRational]) -> Result<bool> {
        Ok(self.reduce(row)?.iter().all(Zero::is_zero))
    }

    fn reduce_in_place(&self, row: &mut [BigInt]) {
        for (&p, &ri) in &self.by_pivot {
            if row[p].is_zero() {
                continue;
            }
            let stored = &self.rows[ri];
            let a = row[p].clone();
            let b = &stored[p];
            let g = a.gcd(b);
            let row_mult = b / &g;
            let stored_mult = &a / &g;
            let unit = row_mult.is_one();
            for (j, v) in row.iter_mut().enumerate() {
                let s = &stored[j];
                if s.is_zero() {
                    if !unit && !v.is_zero() {
                        *v *= &row_mult;
                    }
                    continue;
                }
                if unit {
                    *v -= &stored_mult * s;
                } else {
                    *v = &*v * &row_mult - &stored_mult * s;
                }
            }
            debug_assert!(row[p].is_zero());
            make_primitive(row);
        }
    }

    /// Kernel of the matrix whose rows were inserted: one vector per free
    /// column, in ascending free-column order, with a 1 in its own free
    /// position and 0 in every other free position.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let free = self.free_columns();
        let pivots_desc: Vec<usize> = self.by_pivot.keys().rev().copied().collect();
        free.iter()
            .map(|&fc| {
                // x = numer / denom, kept as an integer vector with a shared denominator.
                let mut numer = vec![BigInt::zero(); self.ncols];
                let mut denom = BigInt::one();
                numer[fc] = BigInt::one();
                for &p in &pivots_desc {
                    let row = &self.rows[self.by_pivot[&p]];
                    let mut s = BigInt::zero();
                    for j in p + 1..self.ncols {
                        if !row[j].is_zero() && !numer[j].is_zero() {
                            s += &row[j] * &numer[j];
                        }
                    }
                    if s.is_zero() {
                        continue;
                    }
                    let lead = &row[p];
                    let g = s.gcd(lead);
                    let mult = lead / &g;
                    if !mult.is_one() {
                        numer.iter_mut().for_each(|v| {
                            if !v.is_zero() {
                                *v *= &mult
                            }
                        });
                        denom *= &mult;
                    }
                    numer[p] = -(&s / &g);
                }
                numer
                    .into_iter()
                    .map(|v| BigRational::new(v, denom.clone()))
                    .collect()
            })
            .collect()
    }
}

/// Divide a vector by the gcd of its entries.
pub fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if v.is_zero() {
            continue;
        }
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        if v.sign() != Sign::NoSign {
            *v /= &g;
        }
    }
}
