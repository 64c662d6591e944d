//! Affine forms and integer polynomials in a single variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `c0 + c1·t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AffineForm {
    pub c0: i64,
    pub c1: i64,
}

impl AffineForm {
    pub const fn new(c0: i64, c1: i64) -> Self {
        Self { c0, c1 }
    }

    pub const fn constant(c0: i64) -> Self {
        Self { c0, c1: 0 }
    }

    pub fn eval(self, t: i64) -> i64 {
        self.c0 + self.c1 * t
    }

    pub fn to_poly(self) -> IntPoly {
        IntPoly::new(vec![i128::from(self.c0), i128::from(self.c1)])
    }

    /// Parses `t`, `t-1`, `t+2`, `t_-`, `t_+`, `3`, `8t+1`, `2t-3` ...
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .collect();
        match s.as_str() {
            "t_-" => return Ok(Self::new(-1, 1)),
            "t_+" => return Ok(Self::new(1, 1)),
            _ => {}
        }
        let bad = || Error::Parse(format!("cannot parse affine form {s:?}"));
        match s.find('t') {
            None => s.parse::<i64>().map(Self::constant).map_err(|_| bad()),
            Some(pos) => {
                let coef = match &s[..pos] {
                    "" | "+" => 1,
                    "-" => -1,
                    c => c.parse::<i64>().map_err(|_| bad())?,
                };
                let rest = &s[pos + 1..];
                let c0 = if rest.is_empty() {
                    0
                } else {
                    rest.strip_prefix('+')
                        .unwrap_or(rest)
                        .parse::<i64>()
                        .map_err(|_| bad())?
                };
                Ok(Self::new(c0, coef))
            }
        }
    }
}

impl Add for AffineForm {
    type Output = AffineForm;
    fn add(self, o: AffineForm) -> AffineForm {
        AffineForm::new(self.c0 + o.c0, self.c1 + o.c1)
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c1, self.c0) {
            (0, c) => write!(f, "{c}"),
            (a, c) => {
                match a {
                    1 => write!(f, "t")?,
                    -1 => write!(f, "-t")?,
                    a => write!(f, "{a}t")?,
                }
                match c {
                    0 => Ok(()),
                    c if c > 0 => write!(f, "+{c}"),
                    c => write!(f, "{c}"),
                }
            }
        }
    }
}

impl Serialize for AffineForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: i128) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn eval(&self, t: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    /// Whether the polynomial is congruent to the constant 1 modulo 2.
    pub fn is_one_mod2(&self) -> bool {
        self.coeff(0).rem_euclid(2) == 1 && self.coeffs.iter().skip(1).all(|c| c.rem_euclid(2) == 0)
    }

    /// Exact quotient; errors if `divisor` does not divide `self` over ℤ.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::InvalidParameters("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = divisor.degree();
        let lead = divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Err(Error::Verification("inexact polynomial division".into()));
        }
        let mut quot = vec![0i128; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd];
            if top % lead != 0 {
                return Err(Error::Verification("inexact polynomial division".into()));
            }
            let q = top / lead;
            quot[i] = q;
            for (j, &c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= q * c;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::Verification("inexact polynomial division".into()));
        }
        Ok(IntPoly::new(quot))
    }

    /// Parses `1280t^4+512t^3-96t^2-32t+1` style text.
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .collect();
        let bad = |m: &str| Error::Parse(format!("cannot parse polynomial {s:?}: {m}"));
        let mut coeffs: Vec<i128> = Vec::new();
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            terms.push(cur);
        }
        if terms.is_empty() {
            return Err(bad("empty"));
        }
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1i128, b),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (coef, power) = match body.find('t') {
                None => (body.parse::<i128>().map_err(|_| bad(body))?, 0usize),
                Some(pos) => {
                    let coef = if pos == 0 {
                        1
                    } else {
                        body[..pos].parse::<i128>().map_err(|_| bad(body))?
                    };
                    let power = match body[pos + 1..].strip_prefix('^') {
                        None if pos + 1 == body.len() => 1,
                        None => return Err(bad(body)),
                        Some(p) => p.parse::<usize>().map_err(|_| bad(body))?,
                    };
                    (coef, power)
                }
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0);
            }
            coeffs[power] += sign * coef;
        }
        Ok(IntPoly::new(coeffs))
    }

    /// The unique polynomial of degree `< values.len()` through
    /// `(0, values[0]), (1, values[1]), …`, via Newton forward differences.
    pub fn interpolate(values: &[i128]) -> Result<IntPoly> {
        let m = values.len();
        if m == 0 {
            return Ok(IntPoly::zero());
        }
        let mut diffs = values.to_vec();
        let mut leading = Vec::with_capacity(m);
        for _ in 0..m {
            leading.push(diffs[0]);
            diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        }
        // f(t) = Σ Δ^j f(0) · t(t-1)…(t-j+1) / j!, scaled by (m-1)! to stay integral.
        let scale: i128 = (1..m as i128).product::<i128>().max(1);
        let mut acc = IntPoly::zero();
        let mut falling = IntPoly::constant(1);
        let mut j_fact: i128 = 1;
        for (j, &lead) in leading.iter().enumerate() {
            if j > 0 {
                j_fact *= j as i128;
                falling = &falling * &IntPoly::new(vec![-(j as i128 - 1), 1]);
            }
            let factor = lead * (scale / j_fact);
            acc = &acc + &(&falling * &IntPoly::constant(factor));
        }
        let coeffs: Vec<i128> = acc
            .coeffs
            .iter()
            .map(|&c| {
                if c % scale == 0 {
                    Ok(c / scale)
                } else {
                    Err(Error::Verification("interpolant is not integral".into()))
                }
            })
            .collect::<Result<_>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (p, a) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, a) => write!(f, "{a}t")?,
                (p, 1) => write!(f, "t^{p}")?,
                (p, a) => write!(f, "{a}t^{p}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Determinant of a square matrix over ℤ[t] by fraction-free elimination.
pub fn det_bareiss(matrix: &[Vec<IntPoly>]) -> Result<IntPoly> {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: matrix.first().map_or(0, Vec::len),
        });
    }
    if n == 0 {
        return Ok(IntPoly::constant(1));
    }
    let mut a: Vec<Vec<IntPoly>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = IntPoly::constant(1);
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            match (p + 1..n).find(|&i| !a[i][p].is_zero()) {
                Some(i) => {
                    a.swap(p, i);
                    negate = !negate;
                }
                None => return Ok(IntPoly::zero()),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let num = &(&a[i][j] * &a[p][p]) - &(&a[i][p] * &a[p][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
            a[i][p] = IntPoly::zero();
        }
        prev = a[p][p].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn affine_parsing() {
        assert_eq!(AffineForm::parse("t").unwrap(), AffineForm::new(0, 1));
        assert_eq!(AffineForm::parse("t-1").unwrap(), AffineForm::new(-1, 1));
        assert_eq!(AffineForm::parse("t_{-}").unwrap(), AffineForm::new(-1, 1));
        assert_eq!(AffineForm::parse("t_+").unwrap(), AffineForm::new(1, 1));
        assert_eq!(AffineForm::parse("t+2").unwrap(), AffineForm::new(2, 1));
        assert_eq!(AffineForm::parse("16t+15").unwrap(), AffineForm::new(15, 16));
        assert_eq!(AffineForm::parse("8t-2").unwrap(), AffineForm::new(-2, 8));
        assert_eq!(AffineForm::parse("0").unwrap(), AffineForm::constant(0));
        assert!(AffineForm::parse("x").is_err());
        assert_eq!(AffineForm::new(-2, 8).to_string(), "8t-2");
    }

    #[test]
    fn polynomial_text_roundtrip() {
        for s in [
            "1280t^4+512t^3-96t^2-32t+1",
            "1280t^4-80t^2+1",
            "196608t^5+8192t^4-9216t^3+64t^2+64t-1",
            "1",
            "t",
            "-t^2+3",
        ] {
            assert_eq!(IntPoly::parse(s).unwrap().to_string(), s);
        }
        assert!(IntPoly::parse("12x").is_err());
    }

    #[test]
    fn mod2_check() {
        assert!(IntPoly::parse("1280t^4+512t^3-96t^2-32t+1").unwrap().is_one_mod2());
        assert!(IntPoly::parse("1280t^4+640t^3+64t^2-8t-1").unwrap().is_one_mod2());
        assert!(!IntPoly::parse("2t+2").unwrap().is_one_mod2());
        assert!(!IntPoly::parse("t+1").unwrap().is_one_mod2());
    }

    #[test]
    fn bareiss_matches_hand_expansion() {
        // [[t+1, t], [t, t+1]] has determinant 2t+1.
        let m = vec![
            vec![IntPoly::new(vec![1, 1]), IntPoly::new(vec![0, 1])],
            vec![IntPoly::new(vec![0, 1]), IntPoly::new(vec![1, 1])],
        ];
        assert_eq!(det_bareiss(&m).unwrap(), IntPoly::new(vec![1, 2]));
        let swap = vec![
            vec![IntPoly::zero(), IntPoly::constant(1)],
            vec![IntPoly::constant(1), IntPoly::zero()],
        ];
        assert_eq!(det_bareiss(&swap).unwrap(), IntPoly::constant(-1));
    }

    proptest! {
        #[test]
        fn interpolation_recovers_polynomial(coeffs in proptest::collection::vec(-1000i128..1000, 1..7)) {
            let p = IntPoly::new(coeffs.clone());
            let values: Vec<i128> = (0..coeffs.len() as i128).map(|t| p.eval(t)).collect();
            prop_assert_eq!(IntPoly::interpolate(&values).unwrap(), p);
        }

        #[test]
        fn division_inverts_multiplication(
            a in proptest::collection::vec(-50i128..50, 1..5),
            b in proptest::collection::vec(-50i128..50, 1..5),
        ) {
            let a = IntPoly::new(a);
            let b = IntPoly::new(b);
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }
    }
}
