//! Classifies the [22,4,11] codes from the [21,3,>=11] codes, stores every
//! level in a database directory and counts the LCD classes.
//!
//! cargo run --release --example classify_22_4_11 -- /tmp/lcddb

use std::path::PathBuf;
use std::time::Instant;

use lcdlab::{lcd_census, Classifier, ClassifyOptions};

fn main() -> lcdlab::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("lcdlab-example-db"));
    let mut c = Classifier::new(ClassifyOptions {
        db_dir: Some(dir.clone()),
        jobs: 1,
    })?;

    let start = Instant::now();
    for (n, k, d) in [(20, 2, 11), (21, 3, 11), (21, 3, 12), (22, 4, 11)] {
        let db = c.classify(n, k, d)?;
        let census = lcd_census(&db)?;
        println!(
            "[{n},{k},{d}]  {:>3} classes  {:>3} LCD  ({})",
            census.count, census.lcd_count, db.method
        );
    }
    println!("done in {:.2?}; databases in {}", start.elapsed(), dir.display());

    let db = c.classify(22, 4, 11)?;
    for (key, g) in &db.records {
        println!("\nkey {}", key.to_hex());
        for row in g.to_bit_strings() {
            println!("  {row}");
        }
    }
    Ok(())
}
