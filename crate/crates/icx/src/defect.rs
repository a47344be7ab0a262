//! Exact defect calculus.
//!
//! Every ordering decision in this module is made in unbounded integers by
//! clearing logarithms through powering and cross-multiplication.  Floating
//! point appears only in [`Defect::approx`], which is display-only.
//!
//! The central quantities, for a number `n` of complexity `c`:
//!
//! * the symbolic defect `c - 3·log₃ n`, represented by [`Defect`];
//! * the largest value writable with `k` ones, [`max_with_complexity`];
//! * the integer lower bound [`complexity_lower_bound`] (largest `k` whose
//!   maximal value still fits under `n`);
//! * the integer defect [`integer_defect`], the gap between the complexity
//!   and that lower bound;
//! * changeover thresholds `k + m·(2 - 3·log₃ 2)` represented by
//!   [`Threshold`].

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::table::ComplexityTable;

/// Exact rational, always kept in lowest terms.
pub type Rational = Ratio<BigInt>;

/// Powers of three that fit in a `u128` (3^0 ..= 3^80).
pub(crate) const POW3_128: [u128; 81] = {
    let mut t = [0u128; 81];
    let mut i = 0;
    let mut v: u128 = 1;
    while i < 81 {
        t[i] = v;
        if i < 80 {
            v *= 3;
        }
        i += 1;
    }
    t
};

pub(crate) fn pow3_u128(e: u32) -> Option<u128> {
    POW3_128.get(e as usize).copied()
}

pub(crate) fn pow3(e: u32) -> BigUint {
    BigUint::from(3u8).pow(e)
}

/// 3^c · base³ in a `u128`, if it fits.
fn weight_u128(c: u32, base: &BigUint) -> Option<u128> {
    let b = base.to_u128()?;
    let cube = b.checked_mul(b)?.checked_mul(b)?;
    pow3_u128(c)?.checked_mul(cube)
}

fn weight_big(c: u32, base: &BigUint) -> BigUint {
    pow3(c) * base * base * base
}

/// The largest number writable with `k` ones (strictly increasing in `k`).
///
/// Closed form: 1 for k=1, and otherwise 3^(k/3), 4·3^((k-4)/3) or
/// 2·3^((k-2)/3) according to k mod 3.
pub fn max_with_complexity(k: u32) -> Result<BigUint> {
    match k {
        0 => Err(Error::UndefinedCount),
        1 => Ok(BigUint::from(1u8)),
        _ => Ok(match k % 3 {
            0 => pow3(k / 3),
            1 => BigUint::from(4u8) * pow3((k - 4) / 3),
            _ => BigUint::from(2u8) * pow3((k - 2) / 3),
        }),
    }
}

/// [`max_with_complexity`] when the result fits in a `u64`.
pub fn max_with_complexity_u64(k: u32) -> Result<Option<u64>> {
    Ok(max_with_complexity(k)?.to_u64())
}

fn max_with_complexity_u128(k: u32) -> Option<u128> {
    match k {
        0 => None,
        1 => Some(1),
        _ => match k % 3 {
            0 => pow3_u128(k / 3),
            1 => pow3_u128((k - 4) / 3)?.checked_mul(4),
            _ => pow3_u128((k - 2) / 3)?.checked_mul(2),
        },
    }
}

/// Largest j ≥ 0 with mult·3^j ≤ n, or None when mult > n.
fn floor_log3_scaled(mult: u64, n: u64) -> Option<u32> {
    if mult > n {
        return None;
    }
    let mut j = 0;
    let mut cur = mult;
    while let Some(next) = cur.checked_mul(3) {
        if next > n {
            break;
        }
        cur = next;
        j += 1;
    }
    Some(j)
}

/// The largest `k` whose maximal value is still ≤ `n`; an integer lower
/// bound for the complexity of `n`.
///
/// Computed as max{3⌊log₃n⌋, 3⌊log₃(n/2)⌋+2, 3⌊log₃(n/4)⌋+4, 1} with all
/// floors taken by exact integer powering; non-positive branches drop out.
pub fn complexity_lower_bound(n: u64) -> u32 {
    assert!(n >= 1, "complexity_lower_bound needs n >= 1");
    let mut best = 1u32;
    if let Some(j) = floor_log3_scaled(1, n) {
        if j >= 1 {
            best = best.max(3 * j);
        }
    }
    if let Some(j) = floor_log3_scaled(2, n) {
        best = best.max(3 * j + 2);
    }
    if let Some(j) = floor_log3_scaled(4, n) {
        best = best.max(3 * j + 4);
    }
    best
}

/// Integer defect: complexity minus [`complexity_lower_bound`].
pub fn integer_defect(n: u64, table: &ComplexityTable) -> Result<u32> {
    let c = table.cpx(n)?;
    let lower = complexity_lower_bound(n);
    assert!(
        c >= lower,
        "table entry {c} for {n} is below the exact lower bound {lower}"
    );
    Ok(c - lower)
}

/// The symbolic defect of `n` per the given table.
pub fn defect_of(n: u64, table: &ComplexityTable) -> Result<Defect> {
    Ok(Defect::new(table.cpx(n)?, n))
}

/// The exact ratio n / max_with_complexity(cpx(n)), in lowest terms.
/// Lies in (1/3, 1] for n > 1.
pub fn ratio_of(n: u64, table: &ComplexityTable) -> Result<Rational> {
    let c = table.cpx(n)?;
    let e = max_with_complexity(c)?;
    Ok(Rational::new(BigInt::from(n), BigInt::from(e)))
}

/// Integer defect computed by its counting interpretation: the number of
/// maximal values strictly between `n` and the maximal value at `cpx(n)`.
pub fn integer_defect_by_counting(n: u64, table: &ComplexityTable) -> Result<u32> {
    let c = table.cpx(n)?;
    let mut count = 0;
    for k in 1..=c {
        let above = match max_with_complexity_u128(k) {
            Some(e) => e > n as u128,
            None => max_with_complexity(k)? > BigUint::from(n),
        };
        if above {
            count += 1;
        }
    }
    Ok(count)
}

/// True when the counting interpretation agrees with the subtraction form.
pub fn counting_interpretation_holds(n: u64, table: &ComplexityTable) -> Result<bool> {
    Ok(integer_defect_by_counting(n, table)? == integer_defect(n, table)?)
}

/// A symbolic defect `complexity - 3·log₃ base`, ordered exactly.
///
/// Equality and ordering are by value: `Defect::new(3, 3)` equals
/// `Defect::new(6, 9)`.  The comparison of two defects reduces to comparing
/// `3^c1 · n2³` against `3^c2 · n1³` in unbounded integers; a `u128` fast
/// path is taken when everything fits.
#[derive(Debug, Clone)]
pub struct Defect {
    complexity: u32,
    base: BigUint,
}

impl Defect {
    pub fn new(complexity: u32, base: impl Into<BigUint>) -> Defect {
        let base = base.into();
        assert!(base >= BigUint::from(1u8), "defect base must be >= 1");
        Defect { complexity, base }
    }

    pub fn complexity(&self) -> u32 {
        self.complexity
    }

    pub fn base(&self) -> &BigUint {
        &self.base
    }

    /// Residue of the complexity mod 3; indexes the threshold family.
    pub fn residue(&self) -> u8 {
        (self.complexity % 3) as u8
    }

    /// f64 approximation of the value. Never used for ordering decisions.
    pub fn approx(&self) -> f64 {
        let b = self.base.to_f64().unwrap_or(f64::INFINITY);
        self.complexity as f64 - 3.0 * b.ln() / 3f64.ln()
    }

    /// Compare this defect against a threshold, exactly:
    /// value ≤ threshold iff 3^c · 2^(3m) ≤ base³ · 3^(k+2m).
    pub fn cmp_threshold(&self, t: &Threshold) -> Ordering {
        let m = t.m as u32;
        let fast = || -> Option<Ordering> {
            let b = self.base.to_u128()?;
            let cube = b.checked_mul(b)?.checked_mul(b)?;
            let lhs = pow3_u128(self.complexity)?.checked_mul(1u128 << (3 * m))?;
            let rhs = pow3_u128(t.k + 2 * m)?.checked_mul(cube)?;
            Some(lhs.cmp(&rhs))
        };
        if let Some(ord) = fast() {
            return ord;
        }
        let lhs = pow3(self.complexity) << (3 * m) as usize;
        let rhs = pow3(t.k + 2 * m) * &self.base * &self.base * &self.base;
        lhs.cmp(&rhs)
    }

    /// Whether the defect is at most the threshold.
    pub fn le_threshold(&self, t: &Threshold) -> bool {
        self.cmp_threshold(t) != Ordering::Greater
    }

    /// The integer defect recovered from the symbolic defect alone: the
    /// smallest `k` with value ≤ threshold(residue, k).  Undefined for
    /// base 1, which sits outside the residue-partitioned defect sets.
    pub fn integer_defect(&self) -> Result<u32> {
        if self.base == BigUint::from(1u8) {
            return Err(Error::ExcludedBase);
        }
        let a = self.residue();
        for k in 0..=self.complexity {
            if self.le_threshold(&Threshold::new(a, k)) {
                return Ok(k);
            }
        }
        // value < complexity ≤ threshold(a, complexity) for base > 1
        unreachable!("threshold search ran past its cap");
    }

    /// If the two defect values differ by an integer (bases related by a
    /// power of three), returns that integer difference `self - other`.
    pub fn integer_difference(&self, other: &Defect) -> Option<i64> {
        let (small, big, sign) = if self.base <= other.base {
            (&self.base, &other.base, -1i64)
        } else {
            (&other.base, &self.base, 1i64)
        };
        let mut cur = small.clone();
        let three = BigUint::from(3u8);
        let mut t = 0i64;
        while cur < *big {
            cur *= &three;
            t += 1;
        }
        if cur != *big {
            return None;
        }
        Some(self.complexity as i64 - other.complexity as i64 - 3 * t * sign)
    }
}

impl PartialEq for Defect {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Defect {}

impl PartialOrd for Defect {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Defect {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Some(l), Some(r)) = (
            weight_u128(self.complexity, &other.base),
            weight_u128(other.complexity, &self.base),
        ) {
            return l.cmp(&r);
        }
        weight_big(self.complexity, &other.base).cmp(&weight_big(other.complexity, &self.base))
    }
}

/// An exact changeover threshold `k + m·(2 - 3·log₃ 2)` with m in {0,1,2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    k: u32,
    m: u8,
}

impl Threshold {
    /// The threshold for residue class `a` at level `k`: the multiplier `m`
    /// is 0, 1 or 2 according to k ≡ a, a+1 or a+2 (mod 3).
    pub fn new(a: u8, k: u32) -> Threshold {
        assert!(a < 3, "residue must be 0, 1 or 2");
        let m = ((k % 3 + 3) - a as u32) % 3;
        Threshold { k, m: m as u8 }
    }

    /// Build directly from level and multiplier.
    pub fn from_parts(k: u32, m: u8) -> Threshold {
        assert!(m <= 2, "multiplier must be 0, 1 or 2");
        Threshold { k, m }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    /// f64 approximation, display-only.
    pub fn approx(&self) -> f64 {
        self.k as f64 + self.m as f64 * (2.0 - 3.0 * 2f64.ln() / 3f64.ln())
    }
}
