//! Prints the weight enumerator and Gram determinant of every family row
//! as functions of t.
//!
//! cargo run --example symbolic_tables -- 5

use lcdlab::families::{family_affine_vector, family_rows, symbolic_gram_det, symbolic_weight_enumerator};

fn main() -> lcdlab::Result<()> {
    let k = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for row in family_rows(k) {
        let av = family_affine_vector(k, row.s)?;
        let we = symbolic_weight_enumerator(k, &av)?;
        let det = symbolic_gram_det(k, &av)?;
        println!("s={:>2}  W = {we}", row.s);
        println!("      det = {det}  (odd: {})", det.is_one_mod2());
    }
    Ok(())
}
