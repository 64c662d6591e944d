//! Parametric codes `G(a) = [I_k | M(a)]` for `k = 4, 5`, with weight
//! enumerators and Gram determinants as exact functions of `t`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::canon::TypeMultiplicity;
use crate::code::{LinearCode, WeightEnumerator};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, IntMatrix};
use crate::poly::{det_bareiss, AffineForm, IntPoly};
use crate::tables::{self, FamilyRow};

/// The nonzero column types of `M(a)` in block order, encoded with bit `i`
/// set when row `i` of the column is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnOrder {
    k: usize,
    types: Vec<usize>,
}

impl ColumnOrder {
    pub fn new(k: usize) -> Result<Self> {
        let src: &[&str] = match k {
            4 => &tables::DIM4_COLUMN_ORDER,
            5 => &tables::DIM5_COLUMN_ORDER,
            _ => return Err(Error::InvalidParameters(format!("no column order for k={k}"))),
        };
        let types = src
            .iter()
            .map(|col| {
                col.bytes()
                    .enumerate()
                    .fold(0usize, |acc, (i, b)| acc | (usize::from(b == b'1') << i))
            })
            .collect();
        Ok(Self { k, types })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }
}

/// A multiplicity vector whose entries are affine in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineVec(pub Vec<AffineForm>);

impl AffineVec {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        s.split(',').map(AffineForm::parse).collect::<Result<_>>().map(Self)
    }

    pub fn constant(len: usize, c: i64) -> Self {
        Self(vec![AffineForm::constant(c); len])
    }

    pub fn entries(&self) -> &[AffineForm] {
        &self.0
    }

    pub fn eval(&self, t: i64) -> Vec<i64> {
        self.0.iter().map(|f| f.eval(t)).collect()
    }

    pub fn sum(&self) -> AffineForm {
        self.0.iter().fold(AffineForm::default(), |acc, &f| acc + f)
    }

    /// Least `t >= 0` at which every entry is nonnegative.
    pub fn least_admissible_t(&self) -> i64 {
        self.0
            .iter()
            .map(|f| match (f.c1, f.c0) {
                (_, c0) if c0 >= 0 => 0,
                (c1, c0) if c1 > 0 => (-c0 + c1 - 1) / c1,
                _ => i64::MAX,
            })
            .max()
            .unwrap_or(0)
    }
}

pub fn period(k: usize) -> usize {
    (1 << k) - 1
}

pub fn family_rows(k: usize) -> &'static [FamilyRow] {
    match k {
        4 => &tables::DIM4_FAMILIES,
        5 => &tables::DIM5_FAMILIES,
        _ => &[],
    }
}

pub fn family_row(k: usize, s: usize) -> Result<&'static FamilyRow> {
    family_rows(k)
        .iter()
        .find(|r| r.s == s)
        .ok_or(Error::UnknownFamilyRow { k, s })
}

pub fn family_affine_vector(k: usize, s: usize) -> Result<AffineVec> {
    AffineVec::parse(family_row(k, s)?.a)
}

/// Smallest admissible `t` for a row: the least `t` with nonnegative
/// entries, but never below the range the claim is stated for.
pub fn family_t_min(k: usize, s: usize) -> Result<i64> {
    let row = family_row(k, s)?;
    let mechanical = AffineVec::parse(row.a)?.least_admissible_t();
    Ok(mechanical.max(row.t_from))
}

pub fn family_a_vector(k: usize, s: usize, t: i64) -> Result<Vec<u64>> {
    let av = family_affine_vector(k, s)?;
    let t_min = family_t_min(k, s)?;
    if t < t_min {
        let values = av.eval(t);
        // Report the first negative entry, or the first entry if t is only
        // outside the stated range.
        let (index, value) = values
            .iter()
            .enumerate()
            .find(|(_, &v)| v < 0)
            .map_or((1, values[0]), |(i, &v)| (i + 1, v));
        return Err(Error::BelowTMin { t, t_min, index, value });
    }
    Ok(av.eval(t).into_iter().map(|v| v as u64).collect())
}

/// `[I_k | M(a)]` with block `i` holding `a_i` copies of the `i`-th column type.
pub fn build_generator(k: usize, a: &[i64]) -> Result<BitMatrix> {
    let order = ColumnOrder::new(k)?;
    if a.len() != order.len() {
        return Err(Error::DimensionMismatch(format!(
            "a has {} entries, expected {}",
            a.len(),
            order.len()
        )));
    }
    if let Some(i) = a.iter().position(|&x| x < 0) {
        return Err(Error::InvalidParameters(format!("a_{} = {} is negative", i + 1, a[i])));
    }
    let n = k + a.iter().sum::<i64>() as usize;
    let mut g = BitMatrix::zeros(k, n);
    for i in 0..k {
        g.set(i, i, true);
    }
    let mut col = k;
    for (&v, &m) in order.types().iter().zip(a) {
        for _ in 0..m {
            for i in (0..k).filter(|i| v >> i & 1 == 1) {
                g.set(i, col, true);
            }
            col += 1;
        }
    }
    Ok(g)
}

/// Recovers `a` from a code whose generator is `[I_k | M(a)]` up to column
/// order: each column type is counted, minus one for each unit vector.
pub fn split_multiplicities(tm: &TypeMultiplicity) -> Result<Vec<u64>> {
    let order = ColumnOrder::new(tm.dim())?;
    if tm.zero_count() != 0 {
        return Err(Error::InvalidParameters("code has zero columns".into()));
    }
    order
        .types()
        .iter()
        .map(|&v| {
            let unit = u32::from(v.is_power_of_two());
            tm.get(v)
                .checked_sub(unit)
                .map(u64::from)
                .ok_or_else(|| Error::InvalidParameters(format!("unit column {v:b} missing")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyVerdict {
    pub k: usize,
    pub s: usize,
    pub t: i64,
    pub a: Vec<u64>,
    pub claimed_n: usize,
    pub claimed_d: usize,
    pub n: usize,
    pub d: usize,
    pub hull_dim: usize,
    pub is_lcd: bool,
    pub matches: bool,
}

/// Builds the row `(k, s)` code at `t` and compares it with its claimed
/// `[period·t + s, k, d(t)]` LCD parameters.
pub fn family_code(k: usize, s: usize, t: i64) -> Result<(LinearCode, FamilyVerdict)> {
    let row = family_row(k, s)?;
    let a = family_a_vector(k, s, t)?;
    let signed: Vec<i64> = a.iter().map(|&x| x as i64).collect();
    let code = LinearCode::new(&build_generator(k, &signed)?)?;
    let claimed_n = period(k) * t as usize + s;
    let claimed_d = AffineForm::parse(row.min_weight)?.eval(t);
    let claimed_d = usize::try_from(claimed_d)
        .map_err(|_| Error::InvalidParameters(format!("claimed d = {claimed_d} at t={t}")))?;
    let d = code.min_weight()?;
    let status = code.lcd_status();
    let verdict = FamilyVerdict {
        k,
        s,
        t,
        a,
        claimed_n,
        claimed_d,
        n: code.len(),
        d,
        hull_dim: status.hull_dim,
        is_lcd: status.is_lcd,
        matches: code.len() == claimed_n && d == claimed_d && status.is_lcd,
    };
    Ok((code, verdict))
}

/// A weight enumerator whose exponents are affine in `t`; the constant
/// term 1 is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicWE {
    terms: Vec<(u64, AffineForm)>,
}

impl SymbolicWE {
    pub fn from_terms(terms: impl IntoIterator<Item = (u64, AffineForm)>) -> Self {
        let mut merged: BTreeMap<AffineForm, u64> = BTreeMap::new();
        for (m, e) in terms {
            *merged.entry(e).or_default() += m;
        }
        Self {
            terms: merged
                .into_iter()
                .filter(|&(_, m)| m > 0)
                .map(|(e, m)| (m, e))
                .collect(),
        }
    }

    /// Parses `1+8y^{8t}+6y^{8t+2}+y^{8t+4}`.
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace() && *c != '$').collect();
        let bad = |why: &str| Error::Parse(format!("weight enumerator {s:?}: {why}"));
        let body = s.strip_prefix("1+").ok_or_else(|| bad("missing constant term"))?;
        let mut terms = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let ypos = rest.find('y').ok_or_else(|| bad("expected y"))?;
            let mult = match &rest[..ypos] {
                "" => 1,
                m => m.parse::<u64>().map_err(|_| bad("bad multiplicity"))?,
            };
            rest = &rest[ypos + 1..];
            let exp = if let Some(r) = rest.strip_prefix("^{") {
                let end = r.find('}').ok_or_else(|| bad("unclosed exponent"))?;
                let e = AffineForm::parse(&r[..end])?;
                rest = &r[end + 1..];
                e
            } else if let Some(r) = rest.strip_prefix('^') {
                let end = r.find('+').unwrap_or(r.len());
                let e = AffineForm::parse(&r[..end])?;
                rest = &r[end..];
                e
            } else {
                AffineForm::constant(1)
            };
            terms.push((mult, exp));
            rest = match rest.strip_prefix('+') {
                Some(r) if !r.is_empty() => r,
                Some(_) => return Err(bad("trailing +")),
                None if rest.is_empty() => rest,
                None => return Err(bad("expected +")),
            };
        }
        Ok(Self::from_terms(terms))
    }

    pub fn terms(&self) -> &[(u64, AffineForm)] {
        &self.terms
    }

    /// Number of nonzero codewords.
    pub fn mass(&self) -> u64 {
        self.terms.iter().map(|&(m, _)| m).sum()
    }

    /// The lowest exponent, i.e. the minimum weight where `t` is large.
    pub fn min_exponent(&self) -> Option<AffineForm> {
        self.terms.first().map(|&(_, e)| e)
    }

    pub fn instantiate(&self, t: i64) -> Result<WeightEnumerator> {
        let mut pairs = vec![(0usize, 1u64)];
        for &(m, e) in &self.terms {
            let w = e.eval(t);
            let w =
                usize::try_from(w).map_err(|_| Error::InvalidParameters(format!("exponent {e} is {w} at t={t}")))?;
            pairs.push((w, m));
        }
        Ok(WeightEnumerator::from_pairs(pairs))
    }
}

impl fmt::Display for SymbolicWE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        for &(m, e) in &self.terms {
            write!(f, "+")?;
            if m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "y^{{{e}}}")?;
        }
        Ok(())
    }
}

impl Serialize for SymbolicWE {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn check_len(order: &ColumnOrder, av: &AffineVec) -> Result<()> {
    if av.0.len() == order.len() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "affine vector has {} entries, expected {}",
            av.0.len(),
            order.len()
        )))
    }
}

/// Exponent of message `m` is `wt(m) + Σ av_i [m·v_i = 1]`.
pub fn symbolic_weight_enumerator(k: usize, av: &AffineVec) -> Result<SymbolicWE> {
    let order = ColumnOrder::new(k)?;
    check_len(&order, av)?;
    let terms = (1usize..1 << k).map(|m| {
        let base = AffineForm::constant(i64::from(m.count_ones()));
        let e = order
            .types()
            .iter()
            .zip(&av.0)
            .filter(|(&v, _)| (v & m).count_ones() % 2 == 1)
            .fold(base, |acc, (_, &f)| acc + f);
        (1, e)
    });
    Ok(SymbolicWE::from_terms(terms))
}

/// Entries `b_ij(t) = δ_ij + Σ_l av_l [v_l(i) = v_l(j) = 1]`.
pub fn symbolic_gram(k: usize, av: &AffineVec) -> Result<Vec<Vec<AffineForm>>> {
    let order = ColumnOrder::new(k)?;
    check_len(&order, av)?;
    let mut b = vec![vec![AffineForm::default(); k]; k];
    for (i, row) in b.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mask = (1 << i) | (1 << j);
            *entry = order
                .types()
                .iter()
                .zip(&av.0)
                .filter(|(&v, _)| v & mask == mask)
                .fold(AffineForm::constant(i64::from(i == j)), |acc, (_, &f)| acc + f);
        }
    }
    Ok(b)
}

/// `det(G(a) G(a)^T)` over ℤ as a polynomial in `t`, computed by
/// fraction-free elimination and checked against interpolation at
/// `t = 0..=k`.
pub fn symbolic_gram_det(k: usize, av: &AffineVec) -> Result<IntPoly> {
    let b = symbolic_gram(k, av)?;
    let poly_matrix: Vec<Vec<IntPoly>> = b.iter().map(|row| row.iter().map(|f| f.to_poly()).collect()).collect();
    let direct = det_bareiss(&poly_matrix)?;
    let samples = (0..=k as i64)
        .map(|t| {
            let rows: Vec<Vec<i64>> = b.iter().map(|r| r.iter().map(|f| f.eval(t)).collect()).collect();
            IntMatrix::from_rows(&rows)?.det()
        })
        .collect::<Result<Vec<i128>>>()?;
    let interpolated = IntPoly::interpolate(&samples)?;
    if direct != interpolated {
        return Err(Error::Verification(format!(
            "Gram determinant disagrees: elimination gives {direct}, interpolation gives {interpolated}"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn column_orders_are_exhaustive() {
        for k in [4, 5] {
            let order = ColumnOrder::new(k).unwrap();
            let mut seen = order.types().to_vec();
            seen.sort_unstable();
            assert_eq!(seen, (1..1 << k).collect::<Vec<_>>());
        }
        assert_eq!(ColumnOrder::new(4).unwrap().types()[0], 0b1111);
        assert_eq!(ColumnOrder::new(4).unwrap().types()[14], 0b1000);
        // Rows are bits 0..k from the top, so (0,0,0,0,1) is bit 4.
        assert_eq!(ColumnOrder::new(5).unwrap().types()[30], 0b10000);
        assert_eq!(ColumnOrder::new(5).unwrap().types()[15], 0b00001);
        assert!(ColumnOrder::new(3).is_err());
    }

    #[test]
    fn every_row_parses_with_the_right_total() {
        for k in [4, 5] {
            assert_eq!(family_rows(k).len(), period(k));
            for row in family_rows(k) {
                let av = AffineVec::parse(row.a).unwrap();
                assert_eq!(av.0.len(), period(k), "row s={}", row.s);
                let total = av.sum();
                assert_eq!(total.c1, period(k) as i64, "row s={}", row.s);
                assert_eq!(total.c0, row.s as i64 - k as i64, "row s={}", row.s);
            }
        }
    }

    #[test]
    fn mechanical_t_min_agrees_with_stated_ranges() {
        for k in [4, 5] {
            for row in family_rows(k) {
                let av = AffineVec::parse(row.a).unwrap();
                assert_eq!(av.least_admissible_t(), row.t_from, "k={k} s={}", row.s);
            }
        }
    }

    #[test]
    fn a_vector_examples() {
        assert_eq!(
            family_a_vector(4, 3, 1).unwrap(),
            vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1]
        );
        match family_a_vector(4, 2, 0) {
            Err(Error::BelowTMin { index, value, .. }) => assert_eq!((index, value), (8, -1)),
            other => panic!("{other:?}"),
        }
        let a = family_a_vector(5, 4, 1).unwrap();
        assert!(a.iter().enumerate().all(|(i, &x)| x == u64::from(i != 28)));
        assert!(matches!(family_a_vector(4, 15, 1), Err(Error::UnknownFamilyRow { .. })));
    }

    #[test]
    fn generator_shapes() {
        let g = build_generator(4, &[0; 15]).unwrap();
        assert_eq!(g, BitMatrix::identity(4));
        assert_eq!(build_generator(4, &[1; 15]).unwrap().cols(), 19);
        assert_eq!(build_generator(5, &[1; 31]).unwrap().cols(), 36);
        assert!(build_generator(4, &[-1; 15]).is_err());
        assert!(build_generator(4, &[1; 14]).is_err());
    }

    #[test]
    fn family_code_examples() {
        let (_, v) = family_code(4, 2, 1).unwrap();
        assert_eq!((v.n, v.d, v.is_lcd, v.matches), (17, 8, true, true));
        let (_, v) = family_code(4, 0, 1).unwrap();
        assert_eq!((v.n, v.d, v.is_lcd, v.matches), (15, 6, true, true));
        let (_, v) = family_code(5, 20, 1).unwrap();
        assert_eq!((v.n, v.d, v.is_lcd, v.matches), (51, 25, true, true));
    }

    #[test]
    fn symbolic_examples() {
        let av = family_affine_vector(4, 2).unwrap();
        assert_eq!(
            symbolic_weight_enumerator(4, &av).unwrap().to_string(),
            "1+8y^{8t}+6y^{8t+2}+y^{8t+4}"
        );
        let av = family_affine_vector(5, 20).unwrap();
        assert_eq!(
            symbolic_weight_enumerator(5, &av).unwrap(),
            SymbolicWE::parse("1+10y^{16t+9}+10y^{16t+10}+5y^{16t+11}+5y^{16t+12}+y^{16t+15}").unwrap()
        );
        let zero = AffineVec::constant(15, 0);
        assert_eq!(
            symbolic_weight_enumerator(4, &zero)
                .unwrap()
                .instantiate(0)
                .unwrap()
                .to_string(),
            "1+4y^1+6y^2+4y^3+y^4"
        );
        assert_eq!(
            symbolic_gram_det(4, &family_affine_vector(4, 2).unwrap()).unwrap(),
            IntPoly::parse("1280t^4+512t^3-96t^2-32t+1").unwrap()
        );
        assert_eq!(
            symbolic_gram_det(5, &family_affine_vector(5, 3).unwrap()).unwrap(),
            IntPoly::parse("196608t^5+61440t^4-1024t^3-1280t^2-48t+1").unwrap()
        );
        assert_eq!(symbolic_gram_det(4, &zero).unwrap(), IntPoly::constant(1));
    }

    #[test]
    fn we_parsing() {
        let we = SymbolicWE::parse("1+3y^{8t-1}+5y^{8t}+4y^{8t+1}+2y^{8t+2}+y^{8t+3}").unwrap();
        assert_eq!(we.mass(), 15);
        assert_eq!(we.min_exponent(), Some(AffineForm::new(-1, 8)));
        assert_eq!(we.to_string(), "1+3y^{8t-1}+5y^{8t}+4y^{8t+1}+2y^{8t+2}+y^{8t+3}");
        assert_eq!(SymbolicWE::parse("1+4y+6y^2+4y^3+y^4").unwrap().mass(), 15);
        assert!(SymbolicWE::parse("4y").is_err());
        assert!(SymbolicWE::parse("1+4y+").is_err());
    }

    // Closed forms for the k = 4 Gram entries, as 1-based index sets of `a`
    // plus the diagonal constant.
    const B_CLOSED: [(usize, usize, i64, &[usize]); 10] = [
        (1, 1, 1, &[1, 2, 3, 4, 6, 7, 8, 12]),
        (1, 2, 0, &[1, 2, 3, 6]),
        (1, 3, 0, &[1, 2, 4, 7]),
        (1, 4, 0, &[1, 3, 4, 8]),
        (2, 2, 1, &[1, 2, 3, 5, 6, 9, 10, 13]),
        (2, 3, 0, &[1, 2, 5, 9]),
        (2, 4, 0, &[1, 3, 5, 10]),
        (3, 3, 1, &[1, 2, 4, 5, 7, 9, 11, 14]),
        (3, 4, 0, &[1, 4, 5, 11]),
        (4, 4, 1, &[1, 3, 4, 5, 8, 10, 11, 15]),
    ];

    // The displayed exponents of the k = 4 weight enumerator.
    const WE_CLOSED: [(i64, [usize; 8]); 15] = [
        (1, [1, 2, 3, 4, 6, 7, 8, 12]),
        (1, [1, 2, 3, 5, 6, 9, 10, 13]),
        (1, [1, 2, 4, 5, 7, 9, 11, 14]),
        (1, [1, 3, 4, 5, 8, 10, 11, 15]),
        (2, [4, 5, 7, 8, 9, 10, 12, 13]),
        (2, [3, 5, 6, 8, 9, 11, 12, 14]),
        (2, [2, 5, 6, 7, 10, 11, 12, 15]),
        (2, [3, 4, 6, 7, 10, 11, 13, 14]),
        (2, [2, 4, 6, 8, 9, 11, 13, 15]),
        (2, [2, 3, 7, 8, 9, 10, 14, 15]),
        (3, [1, 2, 8, 10, 11, 12, 13, 14]),
        (3, [1, 3, 7, 9, 11, 12, 13, 15]),
        (3, [1, 4, 6, 9, 10, 12, 14, 15]),
        (3, [1, 5, 6, 7, 8, 13, 14, 15]),
        (4, [2, 3, 4, 5, 12, 13, 14, 15]),
    ];

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn gram_closed_forms(a in proptest::collection::vec(0i64..=5, 15)) {
            let g = build_generator(4, &a).unwrap();
            let gram = g.gram_int();
            for &(i, j, c, idx) in &B_CLOSED {
                let expect = c + idx.iter().map(|&l| a[l - 1]).sum::<i64>();
                prop_assert_eq!(gram.get(i - 1, j - 1), expect);
                prop_assert_eq!(gram.get(j - 1, i - 1), expect);
            }
        }

        #[test]
        fn weight_exponent_closed_forms(a in proptest::collection::vec(0i64..=5, 15)) {
            let av = AffineVec(a.iter().map(|&x| AffineForm::constant(x)).collect());
            let generic = symbolic_weight_enumerator(4, &av).unwrap().instantiate(0).unwrap();
            let closed = WeightEnumerator::from_pairs(
                std::iter::once((0usize, 1u64)).chain(WE_CLOSED.iter().map(|(c, idx)| {
                    ((c + idx.iter().map(|&l| a[l - 1]).sum::<i64>()) as usize, 1)
                })),
            );
            prop_assert_eq!(&generic, &closed);
            let code = LinearCode::new(&build_generator(4, &a).unwrap()).unwrap();
            prop_assert_eq!(code.weight_enumerator().unwrap(), &closed);
        }

        #[test]
        fn split_inverts_build(k in 4usize..=5, seed in proptest::collection::vec(0i64..=3, 31)) {
            let a = &seed[..period(k)];
            let code = LinearCode::new(&build_generator(k, a).unwrap()).unwrap();
            let tm = crate::canon::column_types(&code).unwrap();
            let back = split_multiplicities(&tm).unwrap();
            prop_assert_eq!(back, a.iter().map(|&x| x as u64).collect::<Vec<_>>());
        }

        #[test]
        fn symbolic_det_matches_instances(k in 4usize..=5, seed in proptest::collection::vec((0i64..=2, 0i64..=1), 31), t in 0i64..=4) {
            let av = AffineVec(seed[..period(k)].iter().map(|&(c0, c1)| AffineForm::new(c0, c1)).collect());
            let det = symbolic_gram_det(k, &av).unwrap();
            let a = av.eval(t);
            let gram = build_generator(k, &a).unwrap().gram_int();
            prop_assert_eq!(det.eval(i128::from(t)), gram.det().unwrap());
        }
    }
}
