//! Catalecticant ranks, apolar Hilbert functions, and stratum membership.
//!
//! Run with `cargo run --example stratify_forms`.

use catalecticant::apolarity::{canonical_kernel_basis, catalecticant, default_chart, stratify, GorensteinSequence};
use catalecticant::ci::associated_form;
use catalecticant::poly::Polynomial;
use catalecticant::sample::random_ci_tuple;

fn show(label: &str, f: &Polynomial, d: usize) -> catalecticant::error::Result<()> {
    let r = stratify(f, d)?;
    println!(
        "{label}: hilbert {:?}, rank D(F) = {}, V {} U {} Gor(T) {} Z {} U_Res {}",
        r.hilbert, r.rank_d, r.in_v, r.in_u, r.in_gor_t, r.in_z, r.in_u_res
    );
    Ok(())
}

fn main() -> catalecticant::error::Result<()> {
    println!("T for (n, d) = (3, 3): {:?}", GorensteinSequence::new(3, 3).values());

    show("y1^2", &Polynomial::parse("y1^2", 2)?, 2)?;
    show("y1*y2", &Polynomial::parse("y1*y2", 2)?, 2)?;
    show("y1^6 + y2^6 + y3^6", &Polynomial::parse("y1^6 + y2^6 + y3^6", 3)?, 3)?;

    let a = associated_form(&random_ci_tuple(3, 3, 4, 5)?)?;
    show("A(f), random f", &a, 3)?;

    let d_f = catalecticant(&a, 3, 3)?;
    println!("D(F) is {}x{}", d_f.matrix.rows(), d_f.matrix.cols());
    let chart = default_chart(&a, 3)?;
    println!("default chart rows {:?} cols {:?}", chart.rows, chart.cols);
    for g in canonical_kernel_basis(&a, 3, &chart)? {
        println!("  kernel form: {g}");
    }
    Ok(())
}
