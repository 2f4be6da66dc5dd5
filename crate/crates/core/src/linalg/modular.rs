//! Rank modulo word-sized primes.
//!
//! The rank of an integer matrix modulo a prime is at most its rank over the
//! rationals, so reaching the maximal possible rank modulo some prime proves
//! full rank exactly. A smaller modular rank proves nothing and callers fall
//! back to exact elimination.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Primes just below 2^31, so products of residues fit in a `u64`.
pub const PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

fn residue(v: &BigInt, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    let r = ((v % &p_big) + &p_big) % &p_big;
    r.to_u64().expect("residue fits in u64")
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank of the integer matrix reduced modulo the prime `p < 2^32`.
pub fn rank_mod_p(rows: &[Vec<BigInt>], ncols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|v| residue(v, p)).collect())
        .collect();
    let nrows = m.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(piv, r);
        let inv = pow_mod(m[r][c], p - 2, p);
        for v in m[r][c..].iter_mut() {
            *v = *v * inv % p;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..ncols {
                row[j] = (row[j] + (p - f) * pivot_row[j]) % p;
            }
        }
        r += 1;
    }
    r
}

/// True only when some prime certifies that the rank is `min(rows, cols)`.
pub fn certify_full_rank(rows: &[Vec<BigInt>], ncols: usize) -> bool {
    let target = rows.len().min(ncols);
    PRIMES.iter().any(|&p| rank_mod_p(rows, ncols, p) == target)
}

/// Largest rank over [`PRIMES`]; a lower bound for the rank over the rationals.
pub fn rank_lower_bound(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    let target = rows.len().min(ncols);
    let mut best = 0;
    for &p in &PRIMES {
        best = best.max(rank_mod_p(rows, ncols, p));
        if best == target {
            break;
        }
    }
    best
}

/// Exact rank of `rows`, certified by modular ranks and a set of candidate
/// row relations.
///
/// Each relation `y` is checked exactly to satisfy `y^T A = 0`. The modular
/// rank of `A` bounds its rank from below and the modular rank of the verified
/// relations bounds the left kernel from below; when the two bounds add up to
/// the number of rows both are exact. Returns `None` when they do not.
pub fn certified_rank(rows: &[Vec<BigInt>], ncols: usize, relations: &[Vec<BigInt>]) -> Option<usize> {
    let lower = rank_lower_bound(rows, ncols);
    if lower == rows.len().min(ncols) {
        return Some(lower);
    }
    for y in relations {
        assert_eq!(y.len(), rows.len(), "relation length must match the row count");
        let mut acc = vec![BigInt::zero(); ncols];
        for (c, row) in y.iter().zip(rows).filter(|(c, _)| !c.is_zero()) {
            for (a, v) in acc.iter_mut().zip(row).filter(|(_, v)| !v.is_zero()) {
                *a += c * v;
            }
        }
        if acc.iter().any(|a| !a.is_zero()) {
            return None;
        }
    }
    let kernel = rank_lower_bound(relations, rows.len());
    (lower + kernel == rows.len()).then_some(lower)
}
