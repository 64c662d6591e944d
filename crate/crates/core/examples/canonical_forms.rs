//! Equivalence testing: codes that differ by a coordinate permutation and a
//! change of basis share a canonical key.

use lcdlab::{canonical_form, column_types, equivalent, BitMatrix, LinearCode};

fn main() -> lcdlab::Result<()> {
    let g = BitMatrix::from_bit_strings(&["1000111", "0100110", "0010101", "0001011"])?;
    let hamming = LinearCode::new(&g)?;

    // Reverse the coordinates and replace row 0 by the sum of rows 0 and 3.
    let rows: Vec<String> = hamming
        .generator()
        .to_bit_strings()
        .iter()
        .map(|r| r.chars().rev().collect())
        .collect();
    let mut mixed = BitMatrix::from_bit_strings(&rows)?;
    for j in 0..7 {
        let v = mixed.get(0, j) ^ mixed.get(3, j);
        mixed.set(0, j, v);
    }
    let other = LinearCode::new(&mixed)?;

    let a = canonical_form(&hamming)?;
    let b = canonical_form(&other)?;
    println!("column types {:?}", column_types(&hamming)?.counts());
    println!("key A {}", a.to_hex());
    println!("key B {}", b.to_hex());
    println!("equivalent: {}", equivalent(&hamming, &other)?);

    // A [7,4,2] code has the same length and dimension but a different class.
    let even = LinearCode::new(&BitMatrix::from_bit_strings(&[
        "1100000", "0110000", "0011000", "0001100",
    ])?)?;
    println!("Hamming vs a [7,4,2] code: {}", equivalent(&hamming, &even)?);
    Ok(())
}
