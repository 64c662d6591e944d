//! Re-derives every tabulated result and reports a pass/fail matrix.

use serde::Serialize;

use crate::bounds::{closed_form_bound, griesmer_dmax, known_lcd_d, LCD_TABLE_LENGTHS};
use crate::classify::{lcd_census, Classifier};
use crate::code::LinearCode;
use crate::error::Result;
use crate::families::{
    family_code, family_rows, family_t_min, symbolic_gram_det, symbolic_weight_enumerator, AffineVec, SymbolicWE,
};
use crate::paperio::{binary_rows_generator, decode_octal, decode_octal_generator, encode_octal};
use crate::poly::IntPoly;
use crate::tables::{self, OctalEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Dim4,
    Dim5,
    Bounds,
    All,
}

/// One row of the pass/fail matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub table: &'static str,
    pub item: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(table: &'static str, item: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            table,
            item: item.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Largest `t` checked per dimension.
pub fn t_max(k: usize) -> i64 {
    if k == 4 {
        4
    } else {
        3
    }
}

pub fn family_checks(k: usize) -> Result<Vec<Check>> {
    let table = if k == 4 { "dim4-families" } else { "dim5-families" };
    let mut out = Vec::new();
    for row in family_rows(k) {
        for t in family_t_min(k, row.s)?..=t_max(k) {
            let (_, v) = family_code(k, row.s, t)?;
            out.push(Check::new(
                table,
                format!("s={} t={t}", row.s),
                v.matches,
                format!(
                    "claimed [{},{k},{}] LCD, got [{},{k},{}] hull {}",
                    v.claimed_n, v.claimed_d, v.n, v.d, v.hull_dim
                ),
            ));
        }
    }
    Ok(out)
}

pub fn symbolic_checks(k: usize) -> Result<Vec<Check>> {
    let (we_table, det_table) = if k == 4 {
        ("dim4-weight-enumerators", "dim4-gram-determinants")
    } else {
        ("dim5-weight-enumerators", "dim5-gram-determinants")
    };
    let mut out = Vec::new();
    for row in family_rows(k) {
        let av = AffineVec::parse(row.a)?;
        let we = symbolic_weight_enumerator(k, &av)?;
        let want = SymbolicWE::parse(row.weight_enumerator)?;
        out.push(Check::new(we_table, format!("s={}", row.s), we == want, we.to_string()));
        let det = symbolic_gram_det(k, &av)?;
        let want = IntPoly::parse(row.gram_det)?;
        let pass = det == want && det.is_one_mod2();
        out.push(Check::new(det_table, format!("s={}", row.s), pass, det.to_string()));
    }
    Ok(out)
}

fn octal_check(table: &'static str, e: &OctalEntry) -> Result<Check> {
    let item = format!("{} [{},{},{}]", e.name, e.n, e.k, e.d);
    let round_trip = encode_octal(&decode_octal(e.octal, e.n, e.k)?) == e.octal;
    let code = LinearCode::new(&decode_octal_generator(e.octal, e.n, e.k)?)?;
    let d = code.min_weight()?;
    let lcd = code.is_lcd();
    let pass = round_trip && code.len() == e.n && d == e.d && !lcd;
    Ok(Check::new(
        table,
        item,
        pass,
        format!("d={d} lcd={lcd} round_trip={round_trip}"),
    ))
}

pub fn octal_checks(k: usize) -> Result<Vec<Check>> {
    let (table, entries) = if k == 4 {
        ("dim4-generators", &tables::DIM4_GENERATORS[..])
    } else {
        ("dim5-generators", &tables::DIM5_GENERATORS[..])
    };
    entries.iter().map(|e| octal_check(table, e)).collect()
}

pub fn witness_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for e in &tables::LCD_WITNESSES {
        let code = LinearCode::new(&binary_rows_generator(&e.rows, e.k)?)?;
        let d = code.min_weight()?;
        let lcd = code.is_lcd();
        let pass = code.len() == e.n && d == e.d && lcd;
        out.push(Check::new(
            "dim5-lcd-witnesses",
            format!("{} [{},{},{}]", e.name, e.n, e.k, e.d),
            pass,
            format!("d={d} lcd={lcd}"),
        ));
    }
    Ok(out)
}

/// Counts of the small-dimension rows, the top-dimension rows and an LCD
/// census of every top-dimension class.
pub fn count_checks(k: usize, classifier: &mut Classifier) -> Result<Vec<Check>> {
    let table = if k == 4 { "dim4-counts" } else { "dim5-counts" };
    let mut out = Vec::new();
    for cell in tables::small_dimension_count_cells() {
        if cell.table_k != k {
            continue;
        }
        let want = cell.count.unwrap_or(0);
        let got = classifier.classify(cell.n, cell.k, cell.d)?.len();
        out.push(Check::new(
            table,
            format!("N[{},{},{}]", cell.n, cell.k, cell.d),
            got == want,
            format!("want {want}, got {got}"),
        ));
    }
    let mut tops: Vec<(usize, usize, usize, usize)> = Vec::new();
    if k == 4 {
        for (&(n, d), &want) in tables::DIM4_COUNT_COLUMNS.iter().zip(&tables::DIM4_TOP) {
            tops.push((n, 4, d, want));
        }
    } else {
        for ((&(n, d), &want), &k4) in tables::DIM5_COUNT_COLUMNS
            .iter()
            .zip(&tables::DIM5_TOP)
            .zip(&tables::DIM5_K4)
        {
            tops.push((n - 1, 4, d, k4));
            tops.push((n, 5, d, want));
        }
    }
    for (n, kk, d, want) in tops {
        let db = classifier.classify(n, kk, d)?;
        let census = lcd_census(&db)?;
        out.push(Check::new(
            table,
            format!("N[{n},{kk},{d}]"),
            census.count == want,
            format!("want {want}, got {}", census.count),
        ));
        if kk == k {
            out.push(Check::new(
                table,
                format!("LCD[{n},{kk},{d}]"),
                census.lcd_count == 0,
                format!("{} LCD classes", census.lcd_count),
            ));
        }
    }
    Ok(out)
}

/// Lengths in one full residue cycle where the case formula and the
/// Griesmer bound disagree.
pub fn closed_form_mismatches(k: usize, start: usize) -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for n in start..start + 465 {
        let (c, g) = (closed_form_bound(n, k)?, griesmer_dmax(n, k)?);
        if c != g {
            out.push((n, c, g));
        }
    }
    Ok(out)
}

pub fn bounds_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    let mut cells = 0;
    for n in LCD_TABLE_LENGTHS {
        for k in 4..=n - 5 {
            cells += 1;
            let want = crate::bounds::lcd_table_value(n, k);
            let got = known_lcd_d(n, k)?.value();
            if got != want {
                bad.push(format!("d({n},{k})"));
            }
        }
    }
    out.push(Check::new(
        "lcd-distance-table",
        format!("{cells} cells"),
        bad.is_empty(),
        if bad.is_empty() {
            "all equal".into()
        } else {
            bad.join(" ")
        },
    ));
    for k in [4, 5] {
        let m = closed_form_mismatches(k, k)?;
        let detail = match m.first() {
            None => "equal on a full cycle".to_string(),
            Some((n, c, g)) => format!("{} mismatches, first n={n}: formula {c}, Griesmer {g}", m.len()),
        };
        out.push(Check::new(
            "griesmer-case-formulas",
            format!("k={k}"),
            m.is_empty(),
            detail,
        ));
    }
    Ok(out)
}

pub fn run_suite(suite: Suite, classifier: &mut Classifier) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Dim4 | Suite::All) {
        out.extend(family_checks(4)?);
        out.extend(symbolic_checks(4)?);
        out.extend(octal_checks(4)?);
        out.extend(count_checks(4, classifier)?);
    }
    if matches!(suite, Suite::Dim5 | Suite::All) {
        out.extend(family_checks(5)?);
        out.extend(symbolic_checks(5)?);
        out.extend(octal_checks(5)?);
        out.extend(witness_checks()?);
        out.extend(count_checks(5, classifier)?);
    }
    if matches!(suite, Suite::Bounds | Suite::All) {
        out.extend(bounds_checks()?);
    }
    Ok(out)
}

/// `(table, passed, total)` per table, in first-seen order.
pub fn summarize(checks: &[Check]) -> Vec<(&'static str, usize, usize)> {
    let mut rows: Vec<(&'static str, usize, usize)> = Vec::new();
    for c in checks {
        match rows.iter_mut().find(|r| r.0 == c.table) {
            Some(r) => {
                r.1 += usize::from(c.pass);
                r.2 += 1;
            }
            None => rows.push((c.table, usize::from(c.pass), 1)),
        }
    }
    rows
}
