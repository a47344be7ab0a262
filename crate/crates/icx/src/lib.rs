//! Exact integer complexity.
//!
//! The complexity of a natural number is the least number of 1s needed to
//! build it from addition and multiplication.  This crate computes it
//! exactly over dense ranges and layers an exact calculus on top:
//!
//! * [`table`] — dynamic-programming sieves, an exhaustive oracle and a
//!   pruned fast builder that must agree with it;
//! * [`defect`] — the symbolic defect `cpx(n) - 3·log₃ n` with total
//!   ordering by big-integer cross-multiplication, the integer defect, and
//!   the changeover thresholds connecting the two;
//! * [`stability`] — probes of `cpx(3^k·n) - 3k` with certified-exact or
//!   horizon-limited stable-complexity estimates;
//! * [`poly`] — the low-defect polynomial constructors, evaluation at
//!   powers of three, and defect functionals;
//! * [`spectrum`] — the ranked-value tables (exact rationals per residue
//!   class), the classification of integer defect ≤ 1, and the
//!   verification suites behind the `verify` CLI subcommand;
//! * [`cache`] — the `ICX1` sieve cache file format.
//!
//! No ordering or equality decision anywhere goes through floating point;
//! approximations exist only for display.

pub mod cache;
pub mod defect;
pub mod error;
pub mod poly;
pub mod spectrum;
pub mod stability;
pub mod table;

pub use defect::{
    complexity_lower_bound, defect_of, integer_defect, max_with_complexity, ratio_of, Defect,
    Rational, Threshold,
};
pub use error::{Error, Result};
pub use poly::{threshold_witness, LowDefectPoly};
pub use spectrum::{spectrum_row, spectrum_rows, Report, SpectrumRow, Violation};
pub use stability::{probe, stable_defect, stable_integer_defect, Certified, StabilityReport};
pub use table::ComplexityTable;
