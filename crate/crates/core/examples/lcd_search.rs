//! Hill-climbing search for LCD codes, with a fixed seed.
//!
//! cargo run --release --example lcd_search -- 21 5 9

use lcdlab::search::{search_lcd, SearchBudget};

fn main() -> lcdlab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let targets = match args[..] {
        [n, k, d] => vec![(n, k, d)],
        _ => vec![(17, 4, 8), (18, 4, 8), (19, 5, 8), (20, 5, 9), (22, 4, 11)],
    };
    let budget = SearchBudget::new(1_000_000, 1, 8)?;
    for (n, k, d) in targets {
        match search_lcd(n, k, d, &budget)? {
            Some(f) => {
                println!(
                    "LCD [{n},{k},{}]  restart {}, {} moves",
                    f.code.min_weight()?,
                    f.restart,
                    f.iterations
                );
                for row in f.code.generator().to_bit_strings() {
                    println!("  {row}");
                }
            }
            None => println!("[{n},{k},{d}]  nothing found"),
        }
    }
    Ok(())
}
