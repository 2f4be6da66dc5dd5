//! Dimension of the space of relations `sum α_ij f_i f_j = 0`, by elimination
//! and by the closed alternating sum.
//!
//! Run with `cargo run --release --example relation_space -- [n] [d]`.

use catalecticant::identities::dimt2_tail;
use catalecticant::sample::random_ci_tuple;
use catalecticant::tangent::{relation_space_dim_bruteforce, relation_space_dim_formula};

fn arg(i: usize, default: usize) -> usize {
    std::env::args().nth(i).and_then(|s| s.parse().ok()).unwrap_or(default)
}

fn main() -> catalecticant::error::Result<()> {
    let (n, d) = (arg(1, 4), arg(2, 4));
    let formula = relation_space_dim_formula(n, d)?;
    println!("formula: dim R = {formula} (tail of the alternating sum: {})", dimt2_tail(n, d));
    for seed in 0..3 {
        let f = random_ci_tuple(n, d, seed, 5)?;
        println!("seed {seed}: elimination gives dim R = {}", relation_space_dim_bruteforce(&f)?);
    }
    Ok(())
}
