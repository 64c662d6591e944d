//! Griesmer bound, the k = 4, 5 case formulas, and what is known about the
//! largest LCD distance.

use lcdlab::bounds::{closed_form_bound, griesmer_dmax, known_lcd_d};

fn main() -> lcdlab::Result<()> {
    println!("  n | k=4 griesmer formula lcd        | k=5 griesmer formula lcd");
    for n in 17..=40 {
        let mut line = format!("{n:>3}");
        for k in [4, 5] {
            let e = known_lcd_d(n, k)?;
            let lcd = match e.value() {
                Some(d) => d.to_string(),
                None => format!("{:?}", e.candidates),
            };
            line += &format!(
                " | {:>12} {:>7} {:<10}",
                griesmer_dmax(n, k)?,
                closed_form_bound(n, k)?,
                lcd
            );
        }
        println!("{line}");
    }

    println!("\nlengths below 500 where the k=5 formula and the bound differ:");
    let diff: Vec<usize> = (5..500)
        .filter(|&n| closed_form_bound(n, 5).ok() != griesmer_dmax(n, 5).ok())
        .collect();
    println!("{diff:?}");
    Ok(())
}
