//! Ranked-value spectrum and the verification suites.
//!
//! For each residue class of the complexity mod 3 there is a sequence of
//! exact rationals `h_r`, a starting level `K_r` and a leader: for any level
//! `k ≥ K_r` in that residue class, the r'th largest number of complexity at
//! most `k` is exactly `h_r` times the largest, and its complexity is
//! exactly `k`.  [`spectrum_row`] serves the finite prefixes and the three
//! closed-form infinite families on demand.
//!
//! The `verify_*` functions are the machine-checkable suites: each sweeps a
//! range, compares exact quantities, and returns a [`Report`] whose
//! violations are empty exactly when the sweep passed.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::defect::{
    defect_of, integer_defect, max_with_complexity, ratio_of, Defect, Rational, Threshold,
};
use crate::error::{Error, Result};
use crate::table::ComplexityTable;

/// One spectrum row: rank, residue, exact ratio, first valid level, leader.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRow {
    pub r: u64,
    pub residue: u8,
    pub h: Rational,
    pub k_min: u32,
    pub leader: BigUint,
}

/// Finite prefixes: (h numerator, h denominator, first level, leader).
const ROWS_MOD0: &[(u64, u64, u32, u64)] = &[
    (1, 1, 3, 3),
    (8, 9, 6, 8),
    (64, 81, 12, 64),
    (7, 9, 12, 7),
    (20, 27, 12, 20),
    (19, 27, 12, 19),
    (512, 729, 18, 512),
];

const ROWS_MOD1: &[(u64, u64, u32, u64)] = &[
    (1, 1, 4, 4),
    (8, 9, 10, 32),
    (5, 6, 10, 10),
    (64, 81, 16, 256),
];

const ROWS_MOD2: &[(u64, u64, u32, u64)] = &[
    (1, 1, 2, 2),
    (8, 9, 8, 16),
    (5, 6, 8, 5),
    (64, 81, 14, 128),
    (7, 9, 14, 14),
    (20, 27, 14, 40),
    (13, 18, 14, 13),
    (19, 27, 14, 38),
    (512, 729, 20, 1024),
];

fn rat(num: u64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn big3(e: u64) -> BigUint {
    BigUint::from(3u8).pow(e as u32)
}

/// The spectrum row for a residue class, for any rank.
pub fn spectrum_row(residue: u8, r: u64) -> SpectrumRow {
    assert!(residue < 3, "residue must be 0, 1 or 2");
    let finite = match residue {
        0 => ROWS_MOD0,
        1 => ROWS_MOD1,
        _ => ROWS_MOD2,
    };
    if let Some(&(num, den, k_min, leader)) = finite.get(r as usize) {
        return SpectrumRow {
            r,
            residue,
            h: rat(num, den),
            k_min,
            leader: BigUint::from(leader),
        };
    }
    let (h, k_min, leader) = match residue {
        0 => {
            // rows 2n-1 and 2n for n ≥ 4
            let n = r.div_ceil(2);
            let k_min = 3 * n.max(6) as u32;
            if r % 2 == 1 {
                let h = rat(2, 3) + Rational::new(2.into(), BigInt::from(big3(n)));
                (h, k_min, (big3(n - 1) + 1u8) * 2u8)
            } else {
                let h = rat(2, 3) + Rational::new(1.into(), BigInt::from(big3(n)));
                (h, k_min, big3(n - 1) * 2u8 + 1u8)
            }
        }
        1 => {
            // row n+2 for n ≥ 2
            let n = r - 2;
            let k_min = (3 * n.max(4) + 4) as u32;
            let h = rat(3, 4) + Rational::new(1.into(), BigInt::from(big3(n) * 4u8));
            (h, k_min, big3(n + 1) + 1u8)
        }
        _ => {
            // rows 3n-3, 3n-2, 3n-1 for n ≥ 4
            let n = if r.is_multiple_of(3) {
                r / 3 + 1
            } else {
                r.div_ceil(3)
            };
            let k_min = (3 * n.max(6) + 2) as u32;
            match r % 3 {
                0 => {
                    let h = rat(2, 3) + Rational::new(2.into(), BigInt::from(big3(n)));
                    (h, k_min, (big3(n - 1) + 1u8) * 4u8)
                }
                1 => {
                    let h = rat(2, 3) + Rational::new(1.into(), BigInt::from(big3(n - 1) * 2u8));
                    (h, k_min, big3(n - 2) * 4u8 + 1u8)
                }
                _ => {
                    let h = rat(2, 3) + Rational::new(1.into(), BigInt::from(big3(n)));
                    (h, k_min, (big3(n - 1) * 2u8 + 1u8) * 2u8)
                }
            }
        }
    };
    SpectrumRow {
        r,
        residue,
        h,
        k_min,
        leader,
    }
}

/// The first `count` rows for a residue class.
pub fn spectrum_rows(residue: u8, count: u64) -> Vec<SpectrumRow> {
    (0..count).map(|r| spectrum_row(residue, r)).collect()
}

/// The r'th largest number (0-indexed) with complexity at most `k`, by
/// descending scan from the largest.
pub fn nth_largest(k: u32, r: u64, table: &ComplexityTable) -> Result<u64> {
    let e = max_with_complexity(k)?;
    let e64 = match e.to_u64() {
        Some(v) if v <= table.limit() => v,
        _ => {
            return Err(Error::InsufficientTable {
                needed: e.to_u64().unwrap_or(u64::MAX),
                limit: table.limit(),
            })
        }
    };
    let bytes = table.entry_bytes();
    let mut remaining = r;
    for n in (1..=e64).rev() {
        if bytes[(n - 1) as usize] as u32 <= k {
            if remaining == 0 {
                return Ok(n);
            }
            remaining -= 1;
        }
    }
    Err(Error::RankExhausted {
        k,
        rank_needed: r + 1,
    })
}

/// h · (largest value of complexity k), when that product is a whole number.
pub fn scaled_max(h: &Rational, k: u32) -> Result<Option<BigUint>> {
    let e = BigInt::from(max_with_complexity(k)?);
    let prod = h * e;
    if !prod.is_integer() {
        return Ok(None);
    }
    let n = prod.to_integer();
    if n.is_negative() || n.is_zero() {
        return Ok(None);
    }
    Ok(Some(n.to_biguint().expect("checked nonnegative")))
}

/// Machine-readable outcome of one verification sweep.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub parameters: BTreeMap<String, u64>,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub k: Option<u64>,
    pub r: Option<u64>,
    pub expected: String,
    pub actual: String,
}

impl Report {
    fn new(suite: &str, parameters: &[(&str, u64)], violations: Vec<Violation>) -> Report {
        Report {
            suite: suite.to_string(),
            parameters: parameters
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
            passed: violations.is_empty(),
            violations,
        }
    }
}

fn violation(k: Option<u64>, r: Option<u64>, expected: String, actual: String) -> Violation {
    Violation {
        k,
        r,
        expected,
        actual,
    }
}

/// Classified shapes of the numbers whose integer defect is at most one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassifiedForm {
    /// The number 1.
    One,
    /// 2^a · 3^k with a ≤ 10, (a, k) ≠ (0, 0); complexity 2a + 3k.
    PowTwoThree { a: u32, k: u32 },
    /// 2^a · (2^b·3^l + 1) · 3^k with a + b ≤ 2, (b, l) ≠ (0, 0);
    /// complexity 2(a+b) + 3(l+k) + 1.
    StepForm { a: u32, b: u32, l: u32, k: u32 },
}

impl ClassifiedForm {
    pub fn value(&self) -> Option<u64> {
        match *self {
            ClassifiedForm::One => Some(1),
            ClassifiedForm::PowTwoThree { a, k } => {
                2u64.checked_pow(a)?.checked_mul(3u64.checked_pow(k)?)
            }
            ClassifiedForm::StepForm { a, b, l, k } => {
                let core = 2u64.checked_pow(b)?.checked_mul(3u64.checked_pow(l)?)?;
                2u64.checked_pow(a)?
                    .checked_mul(core.checked_add(1)?)?
                    .checked_mul(3u64.checked_pow(k)?)
            }
        }
    }

    pub fn claimed_complexity(&self) -> u32 {
        match *self {
            ClassifiedForm::One => 1,
            ClassifiedForm::PowTwoThree { a, k } => 2 * a + 3 * k,
            ClassifiedForm::StepForm { a, b, l, k } => 2 * (a + b) + 3 * (l + k) + 1,
        }
    }
}

/// All values ≤ limit matching a classified form, with claimed complexity.
/// Overlapping forms must agree on the complexity or the whole
/// classification is rejected.
pub fn classified_numbers(limit: u64) -> Result<BTreeMap<u64, u32>> {
    let mut out: BTreeMap<u64, u32> = BTreeMap::new();
    let mut add = |form: ClassifiedForm| -> Result<()> {
        let Some(n) = form.value().filter(|&n| n <= limit) else {
            return Ok(());
        };
        let claim = form.claimed_complexity();
        match out.get(&n) {
            None => {
                out.insert(n, claim);
            }
            Some(&prev) if prev == claim => {}
            Some(&prev) => {
                return Err(Error::ClassificationConflict {
                    n,
                    first: prev,
                    second: claim,
                })
            }
        }
        Ok(())
    };

    if limit >= 1 {
        add(ClassifiedForm::One)?;
    }
    for a in 0..=10u32 {
        let pa = 1u64 << a;
        if pa > limit {
            break;
        }
        let mut k = 0;
        while let Some(n) = 3u64.checked_pow(k).and_then(|p| p.checked_mul(pa)) {
            if n > limit {
                break;
            }
            if (a, k) != (0, 0) {
                add(ClassifiedForm::PowTwoThree { a, k })?;
            }
            k += 1;
        }
    }
    for a in 0..=2u32 {
        for b in 0..=(2 - a) {
            let mut l = 0u32;
            while let Some(base) = 2u64
                .checked_pow(b)
                .and_then(|p| p.checked_mul(3u64.pow(l)))
                .and_then(|p| p.checked_add(1))
                .and_then(|core| core.checked_mul(1 << a))
                .filter(|&base| base <= limit)
            {
                if (b, l) != (0, 0) {
                    let mut k = 0u32;
                    while let Some(n) = 3u64.checked_pow(k).and_then(|p| p.checked_mul(base)) {
                        if n > limit {
                            break;
                        }
                        add(ClassifiedForm::StepForm { a, b, l, k })?;
                        k += 1;
                    }
                }
                l += 1;
            }
        }
    }
    Ok(out)
}

/// For every level up to `k_max` and every row valid at that level: the
/// ranked scan must land exactly on h·max, that value must have complexity
/// exactly k, and it must exceed the previous level's maximum.
pub fn verify_tables(k_max: u32, table: &ComplexityTable) -> Result<Report> {
    let mut violations = Vec::new();
    for k in 1..=k_max {
        let a = (k % 3) as u8;
        let rows: Vec<SpectrumRow> = {
            let mut rows = Vec::new();
            let mut r = 0;
            loop {
                let row = spectrum_row(a, r);
                if row.k_min > k {
                    break;
                }
                rows.push(row);
                r += 1;
            }
            rows
        };
        if rows.is_empty() {
            continue;
        }
        let e_prev = max_with_complexity(k - 1)?;
        for row in rows {
            let expected = match scaled_max(&row.h, k)? {
                Some(v) => v,
                None => {
                    violations.push(violation(
                        Some(k as u64),
                        Some(row.r),
                        "integral h·max".into(),
                        format!("{} · max({}) is not integral", row.h, k),
                    ));
                    continue;
                }
            };
            let actual = nth_largest(k, row.r, table)?;
            if BigUint::from(actual) != expected {
                violations.push(violation(
                    Some(k as u64),
                    Some(row.r),
                    expected.to_string(),
                    actual.to_string(),
                ));
                continue;
            }
            let cpx = table.cpx(actual)?;
            if cpx != k {
                violations.push(violation(
                    Some(k as u64),
                    Some(row.r),
                    format!("complexity {k}"),
                    format!("complexity {cpx}"),
                ));
            }
            if expected <= e_prev {
                violations.push(violation(
                    Some(k as u64),
                    Some(row.r),
                    format!("> {e_prev}"),
                    expected.to_string(),
                ));
            }
        }
    }
    Ok(Report::new("tables", &[("kmax", k_max as u64)], violations))
}

/// Set equality between {n ≤ limit : integer defect ≤ 1} and the classified
/// forms, with complexities matching entrywise.
pub fn verify_classification(limit: u64, table: &ComplexityTable) -> Result<Report> {
    if limit > table.limit() {
        return Err(Error::InsufficientTable {
            needed: limit,
            limit: table.limit(),
        });
    }
    let classified = classified_numbers(limit)?;
    let mut violations = Vec::new();
    for n in 1..=limit {
        let low = integer_defect(n, table)? <= 1;
        match (low, classified.get(&n)) {
            (true, None) => violations.push(violation(
                Some(n),
                None,
                "a classified form".into(),
                "not classified".into(),
            )),
            (false, Some(_)) => violations.push(violation(
                Some(n),
                None,
                "integer defect ≤ 1".into(),
                format!("integer defect {}", integer_defect(n, table)?),
            )),
            (true, Some(&claim)) => {
                let cpx = table.cpx(n)?;
                if cpx != claim {
                    violations.push(violation(
                        Some(n),
                        None,
                        format!("complexity {claim}"),
                        format!("complexity {cpx}"),
                    ));
                }
            }
            (false, None) => {}
        }
    }
    Ok(Report::new("classify", &[("limit", limit)], violations))
}

/// Whenever h·max(k) is a whole number for a spectrum ratio h of the
/// matching residue, that number has complexity exactly k and exceeds the
/// previous level's maximum.  Checked for 2 ≤ k ≤ k_max.
pub fn verify_integral_ratios(k_max: u32, table: &ComplexityTable) -> Result<Report> {
    let mut violations = Vec::new();
    for k in 2..=k_max {
        violations.extend(integral_ratio_check(k, table)?);
    }
    Ok(Report::new("v3lem", &[("kmax", k_max as u64)], violations))
}

/// Single-level version of [`verify_integral_ratios`].
pub fn integral_ratio_check(k: u32, table: &ComplexityTable) -> Result<Vec<Violation>> {
    assert!(k >= 2);
    let a = (k % 3) as u8;
    let e_prev = max_with_complexity(k - 1)?;
    // ranks beyond this cannot divide the 3-part of max(k)
    let exp3 = match k % 3 {
        0 => k / 3,
        1 => (k - 4) / 3,
        _ => (k - 2) / 3,
    } as u64;
    let r_cap = 3 * exp3 + 12;
    let mut violations = Vec::new();
    for r in 0..=r_cap {
        let row = spectrum_row(a, r);
        let Some(v) = scaled_max(&row.h, k)? else {
            continue;
        };
        let n = v.to_u64().ok_or(Error::InsufficientTable {
            needed: u64::MAX,
            limit: table.limit(),
        })?;
        let cpx = table.cpx(n)?;
        if cpx != k {
            violations.push(violation(
                Some(k as u64),
                Some(r),
                format!("complexity {k} for {n}"),
                format!("complexity {cpx}"),
            ));
        }
        if v <= e_prev {
            violations.push(violation(
                Some(k as u64),
                Some(r),
                format!("{n} > {e_prev}"),
                "not above previous maximum".into(),
            ));
        }
    }
    Ok(violations)
}

/// The integer defect computed by subtraction agrees with the one recovered
/// from the symbolic defect through exact threshold comparisons.
pub fn verify_threshold_equivalence(limit: u64, table: &ComplexityTable) -> Result<Report> {
    if limit > table.limit() {
        return Err(Error::InsufficientTable {
            needed: limit,
            limit: table.limit(),
        });
    }
    let mut violations = Vec::new();
    for n in 2..=limit {
        let direct = integer_defect(n, table)?;
        let via_defect = defect_of(n, table)?.integer_defect()?;
        if direct != via_defect {
            violations.push(violation(
                Some(n),
                None,
                format!("integer defect {direct}"),
                format!("threshold search gave {via_defect}"),
            ));
        }
    }
    Ok(Report::new("dtod", &[("limit", limit)], violations))
}

/// Every defect at most twice the defect of 2 belongs to a number of shape
/// 3^k, 2·3^k or 4·3^k, and exactly three distinct defect values occur.
pub fn verify_smallest_defects(limit: u64, table: &ComplexityTable) -> Result<Report> {
    if limit > table.limit() {
        return Err(Error::InsufficientTable {
            needed: limit,
            limit: table.limit(),
        });
    }
    let bound = Threshold::from_parts(0, 2);
    let mut violations = Vec::new();
    let mut small: Vec<Defect> = Vec::new();
    for n in 1..=limit {
        let d = defect_of(n, table)?;
        if !d.le_threshold(&bound) {
            continue;
        }
        let mut rem = n;
        let mut stripped = 0;
        while rem % 3 == 0 {
            rem /= 3;
            stripped += 1;
        }
        let good_shape = rem == 2 || rem == 4 || (rem == 1 && stripped >= 1);
        if !good_shape {
            violations.push(violation(
                Some(n),
                None,
                "3^k, 2·3^k or 4·3^k".into(),
                format!("{n} has a small defect but the wrong shape"),
            ));
        }
        small.push(d);
    }
    small.sort();
    small.dedup();
    let expected = [
        Defect::new(3, 3u8),
        Defect::new(2, 2u8),
        Defect::new(4, 4u8),
    ];
    if limit >= 4 && small != expected {
        violations.push(violation(
            None,
            None,
            "exactly the defects of 3, 2 and 4".into(),
            format!("{} distinct small defects", small.len()),
        ));
    }
    Ok(Report::new("small3", &[("limit", limit)], violations))
}

/// Coincidence between low-integer-defect numbers and spectrum products:
/// every n ≤ limit with integer defect ≤ 1 equals h·max(k) up to a power of
/// three for a spectrum row of its residue, and conversely every in-range
/// product has integer defect ≤ 1.
pub fn verify_product_coincidence(limit: u64, table: &ComplexityTable) -> Result<Report> {
    if limit > table.limit() {
        return Err(Error::InsufficientTable {
            needed: limit,
            limit: table.limit(),
        });
    }
    let mut violations = Vec::new();

    // 1 is the one unstable low-defect number; its representation shifts to
    // the residue-0 rows: 3·1 is the largest value of complexity 3.
    if limit >= 1 {
        let row = spectrum_row(0, 0);
        let prod = scaled_max(&row.h, 3)?;
        if prod != Some(BigUint::from(3u8)) {
            violations.push(violation(
                Some(1),
                Some(0),
                "3 = h·max(3)".into(),
                format!("{prod:?}"),
            ));
        }
    }

    for n in 2..=limit {
        if integer_defect(n, table)? > 1 {
            continue;
        }
        let cpx = table.cpx(n)?;
        let a = (cpx % 3) as u8;
        let h = ratio_of(n, table)?;
        let mut found = None;
        let mut r = 0;
        loop {
            let row = spectrum_row(a, r);
            if row.h == h {
                found = Some(row);
                break;
            }
            if row.h < h {
                break;
            }
            r += 1;
        }
        let Some(row) = found else {
            violations.push(violation(
                Some(n),
                None,
                "a spectrum ratio".into(),
                format!("ratio {h} not in the residue-{a} spectrum"),
            ));
            continue;
        };
        // smallest valid level at or above the complexity, same residue
        let k = row.k_min.max(cpx);
        debug_assert_eq!(k % 3, cpx % 3);
        let l = (k - cpx) / 3;
        let lhs = BigUint::from(n) * BigUint::from(3u8).pow(l);
        match scaled_max(&row.h, k)? {
            Some(rhs) if rhs == lhs => {}
            other => violations.push(violation(
                Some(n),
                Some(row.r),
                format!("3^{l}·{n} = h·max({k})"),
                format!("{other:?}"),
            )),
        }
    }

    // converse: in-range spectrum products have integer defect ≤ 1
    let mut k = 1u32;
    loop {
        let e = max_with_complexity(k)?;
        if e > BigUint::from(limit) * 3u8 {
            break;
        }
        let a = (k % 3) as u8;
        let mut r = 0;
        loop {
            let row = spectrum_row(a, r);
            if row.k_min > k {
                break;
            }
            if let Some(v) = scaled_max(&row.h, k)? {
                if let Some(v64) = v.to_u64().filter(|&v| v <= limit) {
                    let d = integer_defect(v64, table)?;
                    if d > 1 {
                        violations.push(violation(
                            Some(k as u64),
                            Some(row.r),
                            format!("integer defect ≤ 1 for {v64}"),
                            format!("integer defect {d}"),
                        ));
                    }
                }
            }
            r += 1;
        }
        k += 1;
    }

    Ok(Report::new("coinci", &[("limit", limit)], violations))
}

/// Distinct defect values of numbers in 2..=limit with complexity in
/// residue class `a`, strictly below `bound`, sorted ascending.  Among equal
/// values the smallest base is kept.
pub fn initial_segment(
    a: u8,
    bound: &Threshold,
    limit: u64,
    table: &ComplexityTable,
) -> Result<Vec<Defect>> {
    assert!(a < 3);
    if limit > table.limit() {
        return Err(Error::InsufficientTable {
            needed: limit,
            limit: table.limit(),
        });
    }
    let mut found = Vec::new();
    for n in 2..=limit {
        let c = table.cpx(n)?;
        if (c % 3) as u8 != a {
            continue;
        }
        let d = Defect::new(c, n);
        if d.cmp_threshold(bound) == std::cmp::Ordering::Less {
            found.push(d);
        }
    }
    found.sort_by(|x, y| x.cmp(y).then_with(|| x.base().cmp(y.base())));
    found.dedup_by(|a, b| a == b);
    Ok(found)
}

/// Defects of the spectrum leaders for residue `a`, in row order, cut at the
/// first leader beyond `limit`.  A finite table is guaranteed to discover a
/// defect value iff its leader fits, so this is the comparable prefix.
pub fn leader_defect_prefix(a: u8, limit: u64, table: &ComplexityTable) -> Result<Vec<Defect>> {
    let mut out = Vec::new();
    let mut r = 0;
    loop {
        let row = spectrum_row(a, r);
        let Some(leader) = row.leader.to_u64().filter(|&l| l <= limit) else {
            break;
        };
        out.push(defect_of(leader, table)?);
        r += 1;
    }
    Ok(out)
}

/// The initial-segment suite: below the level-1 threshold the enumerated
/// defects of each residue class must coincide with the leader defects, and
/// the distinct ratios of classified numbers must walk the spectrum's h
/// sequence without gaps.
pub fn verify_initial_segments(limit: u64, table: &ComplexityTable) -> Result<Report> {
    let mut violations = Vec::new();
    for a in 0..3u8 {
        let seg = initial_segment(a, &Threshold::new(a, 1), limit, table)?;
        let expected = leader_defect_prefix(a, limit, table)?;
        if seg.len() < expected.len() {
            violations.push(violation(
                Some(a as u64),
                None,
                format!("at least {} defects", expected.len()),
                format!("{}", seg.len()),
            ));
        }
        for (i, exp) in expected.iter().enumerate() {
            let got = match seg.get(i) {
                Some(d) => d,
                None => break,
            };
            if got != exp || got.base() != exp.base() {
                violations.push(violation(
                    Some(a as u64),
                    Some(i as u64),
                    format!("defect of {}", exp.base()),
                    format!("defect of {}", got.base()),
                ));
            }
        }
    }

    // reverse enumeration by exact ratio
    let classified = classified_numbers(limit)?;
    let mut by_residue: [Vec<Rational>; 3] = [vec![], vec![], vec![]];
    for (&n, &claim) in &classified {
        if n == 1 {
            continue;
        }
        by_residue[(claim % 3) as usize].push(ratio_of(n, table)?);
    }
    for (a, ratios) in by_residue.iter_mut().enumerate() {
        ratios.sort();
        ratios.dedup();
        ratios.reverse();
        let expected = leader_defect_prefix(a as u8, limit, table)?;
        for i in 0..expected.len() {
            let row = spectrum_row(a as u8, i as u64);
            if ratios.get(i) != Some(&row.h) {
                violations.push(violation(
                    Some(a as u64),
                    Some(i as u64),
                    format!("ratio {}", row.h),
                    format!("{:?}", ratios.get(i).map(|r| r.to_string())),
                ));
            }
        }
    }

    Ok(Report::new(
        "initial-segments",
        &[("limit", limit)],
        violations,
    ))
}
