//! Exact evaluation of the binomial identities, including both readings of
//! the nested composition sum.
//!
//! Run with `cargo run --example identities`.

use catalecticant::identities::{
    a3_lhs, a3_rhs, check_a1, check_a2, check_aux, check_delta_consistency, check_dimt2_equals_n,
    compare_a3_readings, delta, A3Reading,
};

fn main() -> catalecticant::error::Result<()> {
    println!("A1(3, 2): {:?}", check_a1(3, 2)?);
    println!("A2(2, 2): {:?}", check_a2(2, 2)?);
    println!("δ_1 for n = 5: {}", delta(1, 5));
    println!(
        "A3 at (n, m) = (10, 11): lhs {} rhs {} (all parts >= 1: {})",
        a3_lhs(10, 11, A3Reading::LastAtLeastTwo),
        a3_rhs(10, 11),
        a3_lhs(10, 11, A3Reading::AllPositive)
    );
    println!("{:?}", compare_a3_readings(30));
    let (a, b) = check_aux(5, 1)?;
    println!("aux at m = 1: {} and {} (expected exception: {})", a.lhs, b.lhs, a.expected_exception);
    println!("dimt2 (3, 3): {:?}", check_dimt2_equals_n(3, 3)?);
    for s in 1..=3 {
        let r = check_delta_consistency(s, 4)?;
        println!("δ_{s} for n = 4: elimination {} formula {}", r.lhs, r.rhs);
    }
    Ok(())
}
