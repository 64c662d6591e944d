//! Text codecs: octal-packed generator matrices, plain binary row lists,
//! the code database file format, and JSON reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{self, DTableEntry};
use crate::canon::CanonicalKey;
use crate::classify::{Census, CodeDB};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::families::{FamilyVerdict, SymbolicWE};
use crate::gf2::BitMatrix;
use crate::poly::IntPoly;

/// Decodes the `k × (n-k)` block `M` of a generator `[I_k | M]`.
///
/// Each digit expands to three bits, most significant first, `a`/`b` to a
/// single 0/1; the bit stream is the rows of `M` concatenated.
pub fn decode_octal(s: &str, n: usize, k: usize) -> Result<BitMatrix> {
    let bits = octal_bits(s)?;
    rows_from_stream(&bits, n, k)
}

/// `[I_k | decode_octal(s)]`.
pub fn decode_octal_generator(s: &str, n: usize, k: usize) -> Result<BitMatrix> {
    BitMatrix::identity(k).hstack(&decode_octal(s, n, k)?)
}

fn octal_bits(s: &str) -> Result<Vec<u8>> {
    let mut bits = Vec::with_capacity(3 * s.len());
    let mut letters = false;
    for (i, c) in s.chars().enumerate() {
        match c {
            '0'..='7' if !letters => {
                let v = c as u8 - b'0';
                bits.extend([v >> 2 & 1, v >> 1 & 1, v & 1]);
            }
            'a' | 'b' => {
                letters = true;
                bits.push(u8::from(c == 'b'));
            }
            _ => return Err(Error::Parse(format!("bad octal symbol {c:?} at position {i} of {s:?}"))),
        }
    }
    Ok(bits)
}

fn rows_from_stream(bits: &[u8], n: usize, k: usize) -> Result<BitMatrix> {
    if k > n {
        return Err(Error::InvalidParameters(format!("k={k} exceeds n={n}")));
    }
    let width = n - k;
    if bits.len() != k * width {
        return Err(Error::DimensionMismatch(format!(
            "{} bits encoded, expected k(n-k) = {}",
            bits.len(),
            k * width
        )));
    }
    let rows: Vec<&[u8]> = if width == 0 {
        vec![&[][..]; k]
    } else {
        bits.chunks(width).collect()
    };
    BitMatrix::from_bits(&rows, width)
}

/// Inverse of [`decode_octal`]: full digits first, then 0–2 trailing letters.
pub fn encode_octal(m: &BitMatrix) -> String {
    let mut bits = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        bits.extend((0..m.cols()).map(|j| u8::from(m.get(i, j))));
    }
    let full = bits.len() / 3 * 3;
    let mut out: String = bits[..full]
        .chunks(3)
        .map(|c| char::from(b'0' + (c[0] << 2 | c[1] << 1 | c[2])))
        .collect();
    out.extend(bits[full..].iter().map(|&b| if b == 1 { 'b' } else { 'a' }));
    out
}

/// Parses rows of `M` written as 0/1 strings.
pub fn parse_binary_rows<S: AsRef<str>>(rows: &[S], k: usize) -> Result<BitMatrix> {
    if rows.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "{} rows given, expected {k}",
            rows.len()
        )));
    }
    let width = rows.first().map_or(0, |r| r.as_ref().len());
    let bits = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let r = r.as_ref();
            if r.len() != width {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {width}",
                    r.len()
                )));
            }
            r.bytes()
                .map(|b| match b {
                    b'0' => Ok(0),
                    b'1' => Ok(1),
                    _ => Err(Error::Parse(format!("row {i} has non-binary symbol {:?}", b as char))),
                })
                .collect::<Result<Vec<u8>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    BitMatrix::from_bits(&bits, width)
}

/// `[I_k | M]` from binary rows of `M`.
pub fn binary_rows_generator<S: AsRef<str>>(rows: &[S], k: usize) -> Result<BitMatrix> {
    BitMatrix::identity(k).hstack(&parse_binary_rows(rows, k)?)
}

/// Hex of one row, bytes in column order, bit `j % 8` of byte `j / 8` = column `j`.
pub fn row_hex(m: &BitMatrix, i: usize) -> String {
    let nbytes = m.cols().div_ceil(8);
    let bytes: Vec<u8> = m.row(i).iter().flat_map(|w| w.to_le_bytes()).take(nbytes).collect();
    hex::encode(bytes)
}

fn parse_row_hex(s: &str, cols: usize) -> Result<Vec<u64>> {
    let bytes = hex::decode(s).map_err(|e| Error::Parse(format!("bad row hex {s:?}: {e}")))?;
    if bytes.len() != cols.div_ceil(8) {
        return Err(Error::Parse(format!("row hex {s:?} does not have {cols} columns")));
    }
    let words = cols.div_ceil(64);
    let mut out = vec![0u64; words];
    for (b, &byte) in bytes.iter().enumerate() {
        out[b / 8] |= u64::from(byte) << (8 * (b % 8));
    }
    if !cols.is_multiple_of(64) && words > 0 && out[words - 1] >> (cols % 64) != 0 {
        return Err(Error::Parse(format!("row hex {s:?} has bits past column {cols}")));
    }
    Ok(out)
}

/// `n k d count method`, then `key: row row …` per record in key order.
pub fn emit_codedb(db: &CodeDB) -> String {
    let mut out = format!("{} {} {} {} {}\n", db.n, db.k, db.d, db.len(), db.method);
    for (key, g) in &db.records {
        out.push_str(&key.to_hex());
        out.push(':');
        for i in 0..g.rows() {
            out.push(' ');
            out.push_str(&row_hex(g, i));
        }
        out.push('\n');
    }
    out
}

pub fn parse_codedb(text: &str) -> Result<CodeDB> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty database file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 {
        return Err(Error::Parse(format!("bad database header {header:?}")));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad number {s:?} in header")))
    };
    let (n, k, d, count) = (num(fields[0])?, num(fields[1])?, num(fields[2])?, num(fields[3])?);
    let mut records = BTreeMap::new();
    let mut last: Option<CanonicalKey> = None;
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let (key, rows) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("record without ':' {line:?}")))?;
        let key = CanonicalKey::from_hex(key.trim())?;
        if last.as_ref().is_some_and(|l| *l >= key) {
            return Err(Error::Parse("database records are not strictly increasing".into()));
        }
        let rows = rows
            .split_whitespace()
            .map(|r| parse_row_hex(r, n))
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != k {
            return Err(Error::Parse(format!("record has {} rows, expected {k}", rows.len())));
        }
        last = Some(key.clone());
        records.insert(key, BitMatrix::from_word_rows(&rows, n)?);
    }
    if records.len() != count {
        return Err(Error::Parse(format!(
            "header announces {count} records, file has {}",
            records.len()
        )));
    }
    Ok(CodeDB {
        n,
        k,
        d,
        method: fields[4].to_string(),
        records,
    })
}

/// Claimed parameters to compare a measured code against.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub is_lcd: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Measured {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub hull_dim: usize,
    pub is_lcd: bool,
    pub weight_enumerator: String,
}

impl Measured {
    pub fn of(code: &LinearCode) -> Result<Self> {
        let status = code.lcd_status();
        Ok(Self {
            n: code.len(),
            k: code.dim(),
            d: code.min_weight()?,
            hull_dim: status.hull_dim,
            is_lcd: status.is_lcd,
            weight_enumerator: code.weight_enumerator()?.to_string(),
        })
    }

    pub fn satisfies(&self, c: &Claim) -> bool {
        c.n.is_none_or(|n| n == self.n)
            && c.k.is_none_or(|k| k == self.k)
            && c.d.is_none_or(|d| d == self.d)
            && c.is_lcd.is_none_or(|l| l == self.is_lcd)
    }
}

/// What `lcdlab bounds` reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    pub griesmer: usize,
    pub closed_form: Option<usize>,
    pub lcd_known: Option<usize>,
    pub lcd_entry: DTableEntry,
}

impl BoundsReport {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let lcd_entry = bounds::known_lcd_d(n, k)?;
        Ok(Self {
            n,
            k,
            griesmer: bounds::griesmer_dmax(n, k)?,
            closed_form: bounds::closed_form_bound(n, k).ok(),
            lcd_known: lcd_entry.value(),
            lcd_entry,
        })
    }
}

pub enum Subject<'a> {
    Code {
        label: &'a str,
        code: &'a LinearCode,
        claimed: Claim,
    },
    Family {
        code: &'a LinearCode,
        verdict: &'a FamilyVerdict,
        weight_enumerator: &'a SymbolicWE,
        gram_det: &'a IntPoly,
    },
    Census(&'a Census),
    Bounds(&'a BoundsReport),
}

/// Report as a JSON value with top-level keys `subject`, `params`,
/// `measured`, `claimed` and `match`.
pub fn report_value(subject: &Subject<'_>) -> Result<Value> {
    let v = match subject {
        Subject::Code { label, code, claimed } => {
            let measured = Measured::of(code)?;
            json!({
                "subject": "code",
                "params": { "label": label, "n": code.len(), "k": code.dim() },
                "generator": code.generator().to_bit_strings(),
                "measured": measured,
                "claimed": claimed,
                "match": measured.satisfies(claimed),
            })
        }
        Subject::Family {
            code,
            verdict,
            weight_enumerator,
            gram_det,
        } => {
            let measured = Measured::of(code)?;
            json!({
                "subject": "family",
                "params": {
                    "k": verdict.k, "s": verdict.s, "t": verdict.t, "a": verdict.a,
                    "symbolic_weight_enumerator": weight_enumerator,
                    "gram_det": gram_det,
                    "gram_det_at_t": gram_det.eval(i128::from(verdict.t)).to_string(),
                },
                "generator": code.generator().to_bit_strings(),
                "measured": measured,
                "claimed": Claim {
                    n: Some(verdict.claimed_n),
                    k: Some(verdict.k),
                    d: Some(verdict.claimed_d),
                    is_lcd: Some(true),
                },
                "match": verdict.matches,
            })
        }
        Subject::Census(c) => json!({
            "subject": "census",
            "params": { "n": c.n, "k": c.k, "d": c.d },
            "measured": { "count": c.count, "lcd_count": c.lcd_count, "lcd_keys": c.lcd_keys },
            "claimed": Value::Null,
            "match": Value::Null,
        }),
        Subject::Bounds(b) => json!({
            "subject": "bounds",
            "params": { "n": b.n, "k": b.k },
            "measured": b,
            "claimed": Value::Null,
            "match": Value::Null,
        }),
    };
    Ok(v)
}

pub fn emit_report(subject: &Subject<'_>) -> Result<String> {
    serde_json::to_string_pretty(&report_value(subject)?)
        .map_err(|e| Error::Verification(format!("report serialization failed: {e}")))
}

/// Alternative readings of the octal encoding, for investigating a table
/// entry that fails its stated parameters. Never used by the verifiers.
pub mod diagnostic {
    use super::*;

    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    pub enum OctalReading {
        /// Digits most significant first, rows concatenated (the default).
        MsbRowMajor,
        /// Digits least significant first, rows concatenated.
        LsbRowMajor,
        /// Digits most significant first, columns concatenated.
        MsbColumnMajor,
    }

    pub const READINGS: [OctalReading; 3] = [
        OctalReading::MsbRowMajor,
        OctalReading::LsbRowMajor,
        OctalReading::MsbColumnMajor,
    ];

    pub fn decode_with(s: &str, n: usize, k: usize, reading: OctalReading) -> Result<BitMatrix> {
        let mut bits = octal_bits(s)?;
        match reading {
            OctalReading::MsbRowMajor => rows_from_stream(&bits, n, k),
            OctalReading::LsbRowMajor => {
                let digits = s.chars().take_while(char::is_ascii_digit).count();
                for c in bits[..3 * digits].chunks_mut(3) {
                    c.reverse();
                }
                rows_from_stream(&bits, n, k)
            }
            OctalReading::MsbColumnMajor => {
                let width = n
                    .checked_sub(k)
                    .ok_or_else(|| Error::InvalidParameters("k > n".into()))?;
                if bits.len() != k * width {
                    return Err(Error::DimensionMismatch("bit count".into()));
                }
                let mut m = BitMatrix::zeros(k, width);
                for (idx, &b) in bits.iter().enumerate() {
                    m.set(idx % k, idx / k, b == 1);
                }
                Ok(m)
            }
        }
    }

    /// Minimum weight of `[I_k | M]` under every reading.
    pub fn survey(s: &str, n: usize, k: usize) -> Vec<(OctalReading, Result<usize>)> {
        READINGS
            .iter()
            .map(|&r| {
                let d = decode_with(s, n, k, r)
                    .and_then(|m| BitMatrix::identity(k).hstack(&m))
                    .and_then(|g| LinearCode::new(&g))
                    .and_then(|c| c.min_weight());
                (r, d)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{DIM4_GENERATORS, DIM5_GENERATORS, LCD_WITNESSES};
    use proptest::prelude::*;

    #[test]
    fn octal_examples() {
        let m = decode_octal("7066743767400003777533415b", 23, 4).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 19));
        assert_eq!(m.to_bit_strings()[0], "1110001101101111000");
        let g = decode_octal_generator("263663176303615761714000037776375746aa", 27, 5).unwrap();
        assert_eq!((g.rows(), g.cols()), (5, 27));
        assert!(decode_octal("78", 4, 2).is_err());
        assert!(decode_octal("7a1", 4, 2).is_err());
        assert!(decode_octal("77", 4, 2).is_err());
    }

    #[test]
    fn table_strings_round_trip() {
        for e in DIM4_GENERATORS.iter().chain(&DIM5_GENERATORS) {
            let m = decode_octal(e.octal, e.n, e.k).unwrap();
            assert_eq!(encode_octal(&m), e.octal, "{}", e.name);
        }
    }

    #[test]
    fn binary_rows() {
        let w = &LCD_WITNESSES[0];
        let g = binary_rows_generator(&w.rows, 5).unwrap();
        assert_eq!((g.rows(), g.cols()), (5, 19));
        let g = binary_rows_generator(&["000", "000"], 2).unwrap();
        let c = LinearCode::new(&g).unwrap();
        assert_eq!(c.min_weight().unwrap(), 1);
        assert!(parse_binary_rows(&["01", "0"], 2).is_err());
        assert!(parse_binary_rows(&["01", "02"], 2).is_err());
        assert!(parse_binary_rows(&["01"], 2).is_err());
    }

    #[test]
    fn row_hex_is_lsb_first() {
        let m = BitMatrix::from_bits(&[[1u8, 0, 0, 0, 0, 0, 0, 0, 0, 1]], 10).unwrap();
        assert_eq!(row_hex(&m, 0), "0102");
        assert_eq!(parse_row_hex("0102", 10).unwrap(), vec![0x201]);
        assert!(parse_row_hex("0106", 10).is_err());
    }

    #[test]
    fn full_space_report() {
        let code = LinearCode::full_space(3);
        let text = emit_report(&Subject::Code {
            label: "I_3",
            code: &code,
            claimed: Claim::default(),
        })
        .unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["measured"]["d"], 1);
        assert_eq!(v["measured"]["is_lcd"], true);
        assert_eq!(v["match"], true);
    }

    #[test]
    fn diagnostic_default_matches_decoder() {
        let e = &DIM4_GENERATORS[0];
        let a = diagnostic::decode_with(e.octal, e.n, e.k, diagnostic::OctalReading::MsbRowMajor).unwrap();
        assert_eq!(a, decode_octal(e.octal, e.n, e.k).unwrap());
        assert_eq!(diagnostic::survey(e.octal, e.n, e.k).len(), 3);
    }

    proptest! {
        #[test]
        fn octal_round_trip(k in 1usize..6, w in 0usize..30, seed in any::<u64>()) {
            let mut m = BitMatrix::zeros(k, w);
            let mut x = seed | 1;
            for i in 0..k {
                for j in 0..w {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    m.set(i, j, x & 1 == 1);
                }
            }
            let s = encode_octal(&m);
            prop_assert_eq!(decode_octal(&s, k + w, k).unwrap(), m);
        }
    }
}
