//! Dense table of exact integer complexities.
//!
//! Both builders share a block-structured driver: blocks `[lo, 2·lo)` are
//! finalized in order, and within a block every product decomposition
//! `n = a·b` is enumerated sieve-style (both factors land strictly below the
//! block, so their entries are already final).  The builders differ only in
//! the sum scan:
//!
//! * [`ComplexityTable::build_oracle`] scans every split `n = a + (n-a)`
//!   with `a ≤ n/2` — the defining recurrence, no shortcuts;
//! * [`ComplexityTable::build_fast`] walks candidate addends grouped by
//!   complexity class and aborts once `class + ⌈3·log₃⌈n/2⌉⌉` can no longer
//!   beat the best split found, the larger addend being at least `⌈n/2⌉`.
//!   The abort bound is computed by exact integer powering, never floats.
//!
//! One byte per entry: complexities stay below 128 for any limit this
//! toolkit can hold in memory, so candidate sums cannot wrap a `u8`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::defect::max_with_complexity;
use crate::error::{Error, Result};

/// Upper limit accepted by the builders; keeps every entry below 128.
const MAX_LIMIT: u64 = 1 << 42;

/// Exact complexities for every n in `1..=limit`, one byte per entry.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexityTable {
    /// Index 0 is an unused sentinel so that `values[n]` is the entry for n.
    values: Vec<u8>,
}

impl ComplexityTable {
    /// Exhaustive reference builder.
    pub fn build_oracle(limit: u64) -> Result<ComplexityTable> {
        build(limit, Mode::Oracle)
    }

    /// Pruned builder; produces a table identical to [`Self::build_oracle`].
    pub fn build_fast(limit: u64) -> Result<ComplexityTable> {
        build(limit, Mode::Fast)
    }

    pub(crate) fn from_values(values: Vec<u8>) -> ComplexityTable {
        debug_assert!(values.len() >= 2 && values[0] == 0 && values[1] == 1);
        ComplexityTable { values }
    }

    /// Largest n covered by the table.
    pub fn limit(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// Complexity of n, or an insufficient-table error past the limit.
    pub fn cpx(&self, n: u64) -> Result<u32> {
        match self.get(n) {
            Some(v) => Ok(v as u32),
            None => Err(Error::InsufficientTable {
                needed: n,
                limit: self.limit(),
            }),
        }
    }

    pub fn get(&self, n: u64) -> Option<u8> {
        if n == 0 {
            return None;
        }
        self.values.get(n as usize).copied()
    }

    /// Table entries for n = 1..=limit, in order; the on-disk cache payload.
    pub fn entry_bytes(&self) -> &[u8] {
        &self.values[1..]
    }

    /// All n with complexity exactly `k`, ascending.  Requires the table to
    /// reach the largest value of complexity k so the answer is complete.
    pub fn numbers_with_complexity(&self, k: u32) -> Result<Vec<u64>> {
        let e = max_with_complexity(k)?;
        let e64 = match e.to_u64() {
            Some(v) if v <= self.limit() => v,
            _ => {
                return Err(Error::InsufficientTable {
                    needed: e.to_u64().unwrap_or(u64::MAX),
                    limit: self.limit(),
                })
            }
        };
        Ok((1..=e64)
            .filter(|&n| self.values[n as usize] as u32 == k)
            .collect())
    }
}

impl std::fmt::Debug for ComplexityTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ComplexityTable")
            .field("limit", &self.limit())
            .finish()
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Oracle,
    Fast,
}

fn build(limit: u64, mode: Mode) -> Result<ComplexityTable> {
    if limit == 0 {
        return Err(Error::EmptyRange);
    }
    assert!(limit <= MAX_LIMIT, "limit too large for one-byte entries");
    let n_entries = (limit + 1) as usize;
    let mut values = vec![0u8; n_entries];
    values[1] = 1;

    // numbers grouped by complexity class, each list ascending (fast mode)
    let mut by_class: Vec<Vec<u32>> = Vec::new();
    if mode == Mode::Fast {
        by_class.resize(2, Vec::new());
        by_class[1].push(1);
    }

    // running value of ⌈3·log₃⌈n/2⌉⌉, advanced by exact powering
    let mut lb_half: u32 = 0;
    let mut pow3: u128 = 1;

    let mut lo = 2usize;
    while lo < n_entries {
        let hi = n_entries.min(2 * lo);

        // product pass: every n = a·b in [lo, hi) with 2 ≤ a ≤ b; both
        // factors are < lo, hence final
        let mut prod = vec![u8::MAX; hi - lo];
        let mut a = 2usize;
        while a * a < hi {
            let ca = values[a];
            let bstart = a.max(lo.div_ceil(a));
            let bend = (hi - 1) / a;
            let mut m = a * bstart;
            for &cb in &values[bstart..=bend] {
                let cand = ca + cb;
                let slot = &mut prod[m - lo];
                if cand < *slot {
                    *slot = cand;
                }
                m += a;
            }
            a += 1;
        }

        for n in lo..hi {
            let half = n / 2;
            let ceil_half = (n - half) as u128;
            let cube = ceil_half * ceil_half * ceil_half;
            while pow3 < cube {
                pow3 *= 3;
                lb_half += 1;
            }

            let mut best = prod[n - lo];
            match mode {
                Mode::Oracle => {
                    let fwd = &values[1..=half];
                    let bwd = &values[n - half..n];
                    for (&x, &y) in fwd.iter().zip(bwd.iter().rev()) {
                        let cand = x + y;
                        if cand < best {
                            best = cand;
                        }
                    }
                }
                Mode::Fast => {
                    for (c, class) in by_class.iter().enumerate().skip(1) {
                        if c as u32 + lb_half >= best as u32 {
                            break;
                        }
                        for &a in class {
                            let a = a as usize;
                            if a > half {
                                break;
                            }
                            let cand = c as u8 + values[n - a];
                            if cand < best {
                                best = cand;
                            }
                        }
                    }
                }
            }

            values[n] = best;
            if mode == Mode::Fast {
                let c = best as usize;
                if by_class.len() <= c {
                    by_class.resize(c + 1, Vec::new());
                }
                by_class[c].push(n as u32);
            }
        }
        lo = hi;
    }

    Ok(ComplexityTable { values })
}

/// Smallest c with 3^c ≥ n³: the exact ceiling of 3·log₃ n.
pub fn exact_ceil_3log3(n: u64) -> u32 {
    let cube = BigUint::from(n).pow(3);
    let mut c = 0;
    let mut p = BigUint::from(1u8);
    let three = BigUint::from(3u8);
    while p < cube {
        p *= &three;
        c += 1;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_range() {
        assert!(matches!(
            ComplexityTable::build_oracle(0),
            Err(Error::EmptyRange)
        ));
        assert!(matches!(
            ComplexityTable::build_fast(0),
            Err(Error::EmptyRange)
        ));
    }

    #[test]
    fn first_entries() {
        let t = ComplexityTable::build_oracle(16).unwrap();
        let expect = [1u8, 2, 3, 4, 5, 5, 6, 6, 6, 7, 8, 7, 8, 8, 8, 8];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(t.get(i as u64 + 1), Some(e), "n={}", i + 1);
        }
        assert_eq!(t.get(0), None);
        assert_eq!(t.get(17), None);
    }

    #[test]
    fn oracle_examples() {
        let t = ComplexityTable::build_oracle(729).unwrap();
        assert_eq!(t.cpx(11).unwrap(), 8);
        assert_eq!(t.cpx(729).unwrap(), 18);
        let t1 = ComplexityTable::build_oracle(1).unwrap();
        assert_eq!(t1.cpx(1).unwrap(), 1);
    }

    #[test]
    fn fast_examples() {
        let t = ComplexityTable::build_fast(2049).unwrap();
        assert_eq!(t.cpx(107).unwrap(), 16);
        assert_eq!(t.cpx(321).unwrap(), 18);
        assert_eq!(t.cpx(683).unwrap(), 22);
        assert_eq!(t.cpx(2049).unwrap(), 23);
    }

    #[test]
    fn fast_agrees_with_oracle_to_20k() {
        let a = ComplexityTable::build_oracle(20_000).unwrap();
        let b = ComplexityTable::build_fast(20_000).unwrap();
        assert_eq!(a.entry_bytes(), b.entry_bytes());
    }

    #[test]
    fn lower_bound_is_exact() {
        let t = ComplexityTable::build_fast(10_000).unwrap();
        for n in 1..=10_000u64 {
            let c = t.cpx(n).unwrap();
            assert!(c >= exact_ceil_3log3(n), "n={n}");
            // upper bound from binary expansion: ⌈3·log₂ n⌉ + 1, with the
            // ceiling of log₂(n³) taken exactly as the bit length of n³-1
            if n > 1 {
                let ceil_3log2 = 64 - (n * n * n - 1).leading_zeros();
                assert!(c <= ceil_3log2 + 1, "n={n}");
            }
        }
    }

    #[test]
    fn triple_costs_at_most_three_more() {
        let t = ComplexityTable::build_fast(30_000).unwrap();
        for n in 2..=10_000u64 {
            assert!(t.cpx(3 * n).unwrap() <= t.cpx(n).unwrap() + 3, "n={n}");
        }
    }

    #[test]
    fn sum_and_product_subadditivity_sampled() {
        use rand::prelude::*;
        let t = ComplexityTable::build_fast(100_000).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(0xa005245);
        for _ in 0..100_000 {
            let a = rng.random_range(1..=99_999u64);
            let b = rng.random_range(1..=(100_000 - a));
            assert!(t.cpx(a + b).unwrap() <= t.cpx(a).unwrap() + t.cpx(b).unwrap());
            if a >= 1 && b >= 1 && a * b <= 100_000 {
                assert!(t.cpx(a * b).unwrap() <= t.cpx(a).unwrap() + t.cpx(b).unwrap());
            }
        }
    }

    #[test]
    fn every_entry_has_a_witness_decomposition() {
        let t = ComplexityTable::build_fast(4000).unwrap();
        for n in 2..=4000u64 {
            let c = t.cpx(n).unwrap();
            let mut found = false;
            for a in 1..=n / 2 {
                if t.cpx(a).unwrap() + t.cpx(n - a).unwrap() == c {
                    found = true;
                    break;
                }
            }
            if !found {
                let mut a = 2;
                while a * a <= n {
                    if n % a == 0 && t.cpx(a).unwrap() + t.cpx(n / a).unwrap() == c {
                        found = true;
                        break;
                    }
                    a += 1;
                }
            }
            assert!(found, "no witness for n={n}");
        }
    }

    #[test]
    fn numbers_with_complexity_examples() {
        let t = ComplexityTable::build_fast(18).unwrap();
        assert_eq!(t.numbers_with_complexity(3).unwrap(), vec![3]);
        assert_eq!(t.numbers_with_complexity(1).unwrap(), vec![1]);
        let six = t.numbers_with_complexity(6).unwrap();
        assert_eq!(six, vec![7, 8, 9]);
        let t9 = ComplexityTable::build_fast(9).unwrap();
        assert!(matches!(
            t9.numbers_with_complexity(7),
            Err(Error::InsufficientTable { .. })
        ));
    }

    #[test]
    fn exact_ceiling_near_powers_of_three() {
        assert_eq!(exact_ceil_3log3(1), 0);
        assert_eq!(exact_ceil_3log3(3), 3);
        assert_eq!(exact_ceil_3log3(4), 4);
        assert_eq!(exact_ceil_3log3(27), 9);
        assert_eq!(exact_ceil_3log3(28), 10);
        assert_eq!(exact_ceil_3log3(3u64.pow(20)), 60);
        assert_eq!(exact_ceil_3log3(3u64.pow(20) + 1), 61);
    }
}
