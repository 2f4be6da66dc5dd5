//! Kernel of `(h_1, ..., h_n) ↦ sum h_i f_i` against the span of Koszul
//! syzygies, for every admissible degree.
//!
//! Run with `cargo run --example koszul_syzygies -- [n] [d]`.

use catalecticant::sample::random_ci_tuple;
use catalecticant::tangent::koszul_kernel_check;

fn arg(i: usize, default: usize) -> usize {
    std::env::args().nth(i).and_then(|s| s.parse().ok()).unwrap_or(default)
}

fn main() -> catalecticant::error::Result<()> {
    let (n, d) = (arg(1, 3), arg(2, 3));
    let f = random_ci_tuple(n, d, 0, 5)?;
    for rho in d..=n * (d - 1) - d {
        let c = koszul_kernel_check(&f, rho)?;
        println!("ρ = {rho}: kernel {} Koszul {} equal {}", c.kernel_dim, c.koszul_dim, c.holds());
    }
    Ok(())
}
