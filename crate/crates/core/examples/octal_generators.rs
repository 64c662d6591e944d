//! Decodes the octal generator matrices of the non-LCD extremal codes and
//! confirms each one's parameters.

use lcdlab::paperio::{decode_octal, decode_octal_generator, encode_octal};
use lcdlab::tables::{DIM4_GENERATORS, DIM5_GENERATORS};
use lcdlab::LinearCode;

fn main() -> lcdlab::Result<()> {
    for e in DIM4_GENERATORS.iter().chain(&DIM5_GENERATORS) {
        let code = LinearCode::new(&decode_octal_generator(e.octal, e.n, e.k)?)?;
        let d = code.min_weight()?;
        let back = encode_octal(&decode_octal(e.octal, e.n, e.k)?);
        println!(
            "{:<8} [{},{},{}]  d={d}  lcd={}  hull={}  round-trip {}",
            e.name,
            e.n,
            e.k,
            e.d,
            code.is_lcd(),
            code.hull_dim(),
            if back == e.octal { "ok" } else { "MISMATCH" }
        );
    }

    // The first entry in full.
    let e = &DIM4_GENERATORS[0];
    println!("\n{} = [I | M]:", e.name);
    for row in decode_octal_generator(e.octal, e.n, e.k)?.to_bit_strings() {
        println!("  {row}");
    }
    Ok(())
}
