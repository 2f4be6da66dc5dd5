//! Exact rank and kernel computations, with the Bareiss and modular routes
//! alongside.
//!
//! Run with `cargo run --example exact_linalg`.

use catalecticant::linalg::{block_solve, kernel_basis, modular, rank, rank_bareiss, MatrixQ};

fn main() -> catalecticant::error::Result<()> {
    let m = MatrixQ::from_i64_rows(&[&[2, 4, 1, 3], &[1, 2, 0, 1], &[3, 6, 1, 4]])?;
    println!("{m:?}");
    println!("rank (echelon) = {}", rank(&m));
    println!("rank (Bareiss) = {}", rank_bareiss(&m));
    for v in kernel_basis(&m).vectors() {
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("kernel vector: [{}]", shown.join(", "));
    }

    let rows = m.integer_rows();
    for p in modular::PRIMES {
        println!("rank mod {p} = {}", modular::rank_mod_p(&rows, m.cols(), p));
    }
    // The third row is the sum of the first two.
    let relation = vec![vec![1.into(), 1.into(), (-1).into()]];
    println!("certified rank = {:?}", modular::certified_rank(&rows, m.cols(), &relation));

    let a = MatrixQ::from_i64_rows(&[&[2, 1], &[1, 1]])?;
    let b = MatrixQ::from_i64_rows(&[&[1], &[0]])?;
    println!("-A^-1 B = {:?}", block_solve(&a, &b)?);
    Ok(())
}
