//! Big-integer binomial and multinomial coefficients.
//!
//! `C(a, b)` is zero whenever `b < 0` or `b > a`; the sums in this crate rely
//! on that convention. Negative `a` is never evaluated.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)` as a big integer, zero outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// `C(a, b)` for small arguments, panicking on overflow.
pub fn binomial_usize(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflows usize")
}

fn factorial_table() -> &'static Mutex<Vec<BigInt>> {
    static TABLE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// `k!`, memoized.
pub fn factorial(k: usize) -> BigInt {
    let mut table = factorial_table().lock().unwrap();
    while table.len() <= k {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[k].clone()
}

/// Multinomial coefficient `(sum a)! / prod(a_i!)`, memoized per exponent vector.
pub fn multinomial(parts: &[u32]) -> BigInt {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u32>, BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(parts) {
        return v.clone();
    }
    let total: usize = parts.iter().map(|&p| p as usize).sum();
    let mut value = factorial(total);
    for &p in parts {
        value /= factorial(p as usize);
    }
    cache.lock().unwrap().insert(parts.to_vec(), value.clone());
    value
}

/// Falling factorial `b (b-1) ... (b-a+1)`, the scalar produced by `d^a/dy^a y^b`.
pub fn falling_factorial(b: u32, a: u32) -> BigInt {
    debug_assert!(a <= b);
    let mut acc = BigInt::one();
    for i in 0..a {
        acc *= b - i;
    }
    acc
}
