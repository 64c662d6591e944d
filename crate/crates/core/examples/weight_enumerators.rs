//! Weight enumerators and hulls of the binary-listed LCD witnesses, and a
//! family member's enumerator compared with its closed form.

use lcdlab::families::{family_affine_vector, family_code, symbolic_weight_enumerator};
use lcdlab::paperio::binary_rows_generator;
use lcdlab::tables::LCD_WITNESSES;
use lcdlab::LinearCode;

fn main() -> lcdlab::Result<()> {
    for e in &LCD_WITNESSES {
        let code = LinearCode::new(&binary_rows_generator(&e.rows, e.k)?)?;
        let status = code.lcd_status();
        println!("{} [{},{},{}]", e.name, code.len(), code.dim(), code.min_weight()?);
        println!("  W = {}", code.weight_enumerator()?);
        println!("  hull dimension {}, LCD {}", status.hull_dim, status.is_lcd);
    }

    let (k, s, t) = (5, 12, 2);
    let (code, _) = family_code(k, s, t)?;
    let symbolic = symbolic_weight_enumerator(k, &family_affine_vector(k, s)?)?;
    let direct = code.weight_enumerator()?;
    println!("\nD_(31t+{s}) at t={t}:");
    println!("  closed form  {symbolic}");
    println!("  at t={t}       {}", symbolic.instantiate(t)?);
    println!("  enumerated   {direct}");
    assert_eq!(&symbolic.instantiate(t)?, direct);
    Ok(())
}
