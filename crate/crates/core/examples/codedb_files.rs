//! Writes a classification to the on-disk database format and reads it
//! back.

use lcdlab::classify::classify;
use lcdlab::paperio::{emit_codedb, parse_codedb};

fn main() -> lcdlab::Result<()> {
    let db = classify(21, 3, 11)?;
    let text = emit_codedb(&db);
    print!("{text}");
    let back = parse_codedb(&text)?;
    assert_eq!(back, db);
    assert_eq!(emit_codedb(&back), text);
    println!("{} records, round trip exact", back.len());
    Ok(())
}
