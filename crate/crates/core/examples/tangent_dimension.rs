//! Tangent-space dimension at the associated form of a random complete
//! intersection, compared with `N = K n - n^2 + 1`.
//!
//! Run with `cargo run --release --example tangent_dimension -- [n] [d] [trials]`.

use catalecticant::ci::associated_form;
use catalecticant::sample::random_ci_tuple;
use catalecticant::tangent::tangent_dim;

fn arg(i: usize, default: usize) -> usize {
    std::env::args().nth(i).and_then(|s| s.parse().ok()).unwrap_or(default)
}

fn main() -> catalecticant::error::Result<()> {
    let (n, d, trials) = (arg(1, 3), arg(2, 3), arg(3, 3));
    for seed in 0..trials as u64 {
        let a = associated_form(&random_ci_tuple(n, d, seed, 5)?)?;
        let r = tangent_dim(&a, d)?;
        println!(
            "seed {seed}: dim k[y]_{} = {}, dim I_d I_(D-d) = {}, tangent {} vs N = {} ({})",
            n * (d - 1),
            r.dim_ambient,
            r.dim_product,
            r.tangent_dim,
            r.expected_n,
            if r.matches_expected() { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
