//! Sample a complete intersection, compute its quotient, socle functional,
//! and associated form, and check the defining properties.
//!
//! Run with `cargo run --example associated_form -- [n] [d] [seed]`.

use catalecticant::ci::{associated_form, ci_hilbert_series, roundtrip_span, socle_coordinate, verify_inverse_system, GradedQuotient};
use catalecticant::poly::act_on_form;
use catalecticant::sample::{random_ci_tuple, random_invertible, rng};

fn arg(i: usize, default: u64) -> u64 {
    std::env::args().nth(i).and_then(|s| s.parse().ok()).unwrap_or(default)
}

fn main() -> catalecticant::error::Result<()> {
    let (n, d, seed) = (arg(1, 2) as usize, arg(2, 3) as usize, arg(3, 1));
    let f = random_ci_tuple(n, d, seed, 5)?;
    for (i, g) in f.forms().iter().enumerate() {
        println!("f_{} = {g}", i + 1);
    }
    let q = GradedQuotient::new(f.clone());
    println!("Hilbert function of M(f): {:?}", q.hilbert_function());
    println!("(1 + ... + u^(d-1))^n:    {:?}", ci_hilbert_series(n, d));

    let jac = f.jacobian_det();
    println!("jac(f) has socle coordinate {}", socle_coordinate(&f, &jac)?);

    let a = associated_form(&f)?;
    println!("A(f) = {}", a.to_text('y'));
    println!("inverse system: {}", verify_inverse_system(&f, &a)?);
    println!("annihilator recovers span(f): {}", roundtrip_span(&f)?);

    let mut r = rng(seed);
    let g1 = random_invertible(&mut r, n, 2);
    let g2 = random_invertible(&mut r, n, 2);
    let lhs = associated_form(&f.act(&g1, &g2)?)?;
    let det = g1.determinant()? * g2.determinant()?;
    let rhs = act_on_form(&g1.inverse()?.transpose(), &a)?.scale(&det);
    println!("equivariance holds: {}", lhs == rhs);
    Ok(())
}
