//! Builds members of the dimension-4 and dimension-5 LCD families and
//! checks their length, minimum weight and LCD status.
//!
//! cargo run --example family_members -- 4 2 3

use lcdlab::families::{family_code, family_rows, family_t_min};

fn main() -> lcdlab::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if let [k, s, t] = args[..] {
        let (code, v) = family_code(k as usize, s as usize, t)?;
        println!("a = {:?}", v.a);
        for row in code.generator().to_bit_strings() {
            println!("{row}");
        }
        println!(
            "[{}, {k}, {}] hull dimension {}, matches: {}",
            v.n, v.d, v.hull_dim, v.matches
        );
        return Ok(());
    }

    for k in [4, 5] {
        let mut built = 0;
        for row in family_rows(k) {
            let t0 = family_t_min(k, row.s)?;
            for t in t0..t0 + 2 {
                let (_, v) = family_code(k, row.s, t)?;
                assert!(v.matches, "k={k} s={} t={t}", row.s);
                built += 1;
            }
            let (_, v) = family_code(k, row.s, t0)?;
            println!("k={k} s={:>2}  t >= {t0}  first: LCD [{}, {k}, {}]", row.s, v.n, v.d);
        }
        println!("k={k}: {built} codes built, all LCD with the stated distance\n");
    }
    Ok(())
}
