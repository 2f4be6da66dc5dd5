//! Polynomials in text form, the polar action, and the two group actions.
//!
//! Run with `cargo run --example polar_pairing`.

use catalecticant::linalg::{rank, MatrixQ};
use catalecticant::poly::{act_on_form, pairing_matrix, FormTuple, Polynomial};

fn main() -> catalecticant::error::Result<()> {
    let g = Polynomial::parse("x1^2 - 3*x1*x2", 2)?;
    let f = Polynomial::parse("y1^3*y2 + 2*y2^4", 2)?;
    println!("g = {g}");
    println!("F = {}", f.to_text('y'));
    println!("g ∘ F = {}", g.apply_polar(&f)?.to_text('y'));

    for j in 0..4 {
        let m = pairing_matrix(2, j);
        println!("degree {j} pairing: {}x{} of rank {}", m.rows(), m.cols(), rank(&m));
    }

    let t = MatrixQ::from_i64_rows(&[&[1, 1], &[0, 2]])?;
    println!("F(y T) = {}", act_on_form(&t, &f)?.to_text('y'));

    let tuple = FormTuple::fermat(2, 2)?;
    let moved = tuple.act(&t, &MatrixQ::identity(2))?;
    for (i, h) in moved.forms().iter().enumerate() {
        println!("(T, 1) f_{} = {h}", i + 1);
    }
    println!("jacobian of the moved tuple: {}", moved.jacobian_det());
    Ok(())
}
