//! Stability probes along the 3-power orbit.
//!
//! Multiplying by three costs at most three extra ones, but sometimes less;
//! a number is stable once every further factor of three costs exactly
//! three.  The probe watches `cpx(3^k·n) - 3k` up to a horizon and reports
//! the minimum.  The estimate is marked `certified` (exact) when the
//! minimizing point has integer defect at most two — such numbers are
//! stable, so no later power can improve on them.  Otherwise the report is
//! horizon-limited: a true minimum may lie beyond the table.

use serde::Serialize;

use crate::defect::{integer_defect, Defect};
use crate::error::{Error, Result};
use crate::table::ComplexityTable;

#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    pub n: u64,
    pub horizon: u32,
    /// cpx(3^k · n) for k = 0..=horizon.
    pub complexities: Vec<u32>,
    /// min over k of cpx(3^k · n) - 3k.
    pub stable_cpx_estimate: u32,
    /// Smallest k attaining the minimum.
    pub first_stable_k: u32,
    /// True when the estimate is provably exact.
    pub certified: bool,
}

/// A value plus a flag telling whether it is exact or horizon-limited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certified<T> {
    pub value: T,
    pub certified: bool,
}

/// Largest K with 3^K · n within the table.
pub fn max_horizon(n: u64, table: &ComplexityTable) -> u32 {
    assert!(n >= 1);
    let limit = table.limit();
    let mut k = 0;
    let mut cur = n;
    while cur <= limit / 3 {
        cur *= 3;
        k += 1;
    }
    if n > limit {
        0
    } else {
        k
    }
}

pub fn probe(n: u64, horizon: u32, table: &ComplexityTable) -> Result<StabilityReport> {
    assert!(n >= 1);
    let mut top = n;
    for _ in 0..horizon {
        top = top.checked_mul(3).ok_or(Error::InsufficientTable {
            needed: u64::MAX,
            limit: table.limit(),
        })?;
    }
    if top > table.limit() {
        return Err(Error::InsufficientTable {
            needed: top,
            limit: table.limit(),
        });
    }

    let mut complexities = Vec::with_capacity(horizon as usize + 1);
    let mut cur = n;
    for _ in 0..=horizon {
        complexities.push(table.cpx(cur)?);
        cur *= 3;
    }

    let (mut best, mut best_k) = (complexities[0], 0u32);
    for (k, &c) in complexities.iter().enumerate().skip(1) {
        let adjusted = c - 3 * k as u32;
        if adjusted < best {
            best = adjusted;
            best_k = k as u32;
        }
    }

    let min_point = n * 3u64.pow(best_k);
    let certified = min_point > 1 && integer_defect(min_point, table)? <= 2;

    Ok(StabilityReport {
        n,
        horizon,
        complexities,
        stable_cpx_estimate: best,
        first_stable_k: best_k,
        certified,
    })
}

/// min over k ≤ horizon of the integer defect of 3^k · n.
pub fn stable_integer_defect(
    n: u64,
    horizon: u32,
    table: &ComplexityTable,
) -> Result<Certified<u32>> {
    let report = probe(n, horizon, table)?;
    let mut best = u32::MAX;
    let mut cur = n;
    for _ in 0..=horizon {
        best = best.min(integer_defect(cur, table)?);
        cur *= 3;
    }
    Ok(Certified {
        value: best,
        certified: report.certified,
    })
}

/// The stable-defect estimate as a symbolic defect on the original base.
pub fn stable_defect(n: u64, horizon: u32, table: &ComplexityTable) -> Result<Certified<Defect>> {
    let report = probe(n, horizon, table)?;
    Ok(Certified {
        value: Defect::new(report.stable_cpx_estimate, n),
        certified: report.certified,
    })
}
