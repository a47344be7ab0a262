//! Low-defect polynomials.
//!
//! Multilinear polynomials built from exactly three constructors — a
//! constant, a product of two polynomials on disjoint variables, and
//! "multiply by a fresh variable, then add a constant" — with a base
//! complexity accumulated along the construction.  Evaluating one at powers
//! of three produces numbers whose complexity is bounded by the base
//! complexity plus three per unit of exponent.
//!
//! Polynomials are stored as their construction trees; coefficients are
//! derived on demand.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::defect::{pow3, Defect};
use crate::error::{Error, Result};
use crate::table::ComplexityTable;

#[derive(Debug, Clone)]
enum Node {
    Constant(u64),
    Tensor(Box<Node>, Box<Node>),
    /// f · x_new + c
    Step(Box<Node>, u64),
}

#[derive(Debug, Clone)]
pub struct LowDefectPoly {
    node: Node,
    degree: u32,
    base_complexity: u32,
    leading: BigUint,
    constant: BigUint,
}

impl LowDefectPoly {
    /// The constant polynomial `c`, with base complexity cpx(c).
    pub fn constant(c: u64, table: &ComplexityTable) -> Result<LowDefectPoly> {
        if c == 0 {
            return Err(Error::ZeroConstant);
        }
        let base_complexity = table.cpx(c)?;
        Ok(LowDefectPoly {
            node: Node::Constant(c),
            degree: 0,
            base_complexity,
            leading: BigUint::from(c),
            constant: BigUint::from(c),
        })
    }

    /// Product on disjoint variables; degrees and base complexities add.
    pub fn tensor(&self, other: &LowDefectPoly) -> LowDefectPoly {
        LowDefectPoly {
            node: Node::Tensor(Box::new(self.node.clone()), Box::new(other.node.clone())),
            degree: self.degree + other.degree,
            base_complexity: self.base_complexity + other.base_complexity,
            leading: &self.leading * &other.leading,
            constant: &self.constant * &other.constant,
        }
    }

    /// `self · x + c` for a fresh variable x; adds cpx(c) to the base
    /// complexity and leaves the leading coefficient unchanged.
    pub fn affine_step(&self, c: u64, table: &ComplexityTable) -> Result<LowDefectPoly> {
        if c == 0 {
            return Err(Error::ZeroConstant);
        }
        let step_cost = table.cpx(c)?;
        Ok(LowDefectPoly {
            node: Node::Step(Box::new(self.node.clone()), c),
            degree: self.degree + 1,
            base_complexity: self.base_complexity + step_cost,
            leading: self.leading.clone(),
            constant: BigUint::from(c),
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn base_complexity(&self) -> u32 {
        self.base_complexity
    }

    pub fn leading_coefficient(&self) -> &BigUint {
        &self.leading
    }

    pub fn constant_term(&self) -> &BigUint {
        &self.constant
    }

    /// Value at x_i = 3^exponents[i].
    pub fn evaluate(&self, exponents: &[u32]) -> Result<BigUint> {
        if exponents.len() != self.degree as usize {
            return Err(Error::ArityMismatch {
                expected: self.degree as usize,
                got: exponents.len(),
            });
        }
        let (value, used) = eval_node(&self.node, exponents);
        debug_assert_eq!(used, exponents.len());
        Ok(value)
    }

    /// Value of the augmented polynomial `self · x_(d+1)`: one extra
    /// exponent scales the result by a power of three.
    pub fn evaluate_augmented(&self, exponents: &[u32]) -> Result<BigUint> {
        if exponents.len() != self.degree as usize + 1 {
            return Err(Error::ArityMismatch {
                expected: self.degree as usize + 1,
                got: exponents.len(),
            });
        }
        let value = self.evaluate(&exponents[..self.degree as usize])?;
        Ok(value * pow3(exponents[self.degree as usize]))
    }

    /// The polynomial's defect ceiling: base complexity against the leading
    /// coefficient.  Bounds the defect of anything the polynomial evaluates
    /// to at powers of three.
    pub fn defect_ceiling(&self) -> Defect {
        Defect::new(self.base_complexity, self.leading.clone())
    }

    /// The exact defect functional at one exponent tuple.
    pub fn defect_at(&self, exponents: &[u32]) -> Result<Defect> {
        let value = self.evaluate(exponents)?;
        let total: u32 = exponents.iter().sum();
        Ok(Defect::new(self.base_complexity + 3 * total, value))
    }

    /// Whether the evaluation at this tuple attains the complexity bound
    /// with equality.
    pub fn efficiently_represents(
        &self,
        exponents: &[u32],
        table: &ComplexityTable,
    ) -> Result<bool> {
        let value = self.evaluate(exponents)?;
        let n = biguint_to_u64(&value, table.limit())?;
        let total: u32 = exponents.iter().sum();
        Ok(table.cpx(n)? == self.base_complexity + 3 * total)
    }

    /// Same, for the augmented polynomial.
    pub fn augmented_efficiently_represents(
        &self,
        exponents: &[u32],
        table: &ComplexityTable,
    ) -> Result<bool> {
        let value = self.evaluate_augmented(exponents)?;
        let n = biguint_to_u64(&value, table.limit())?;
        let total: u32 = exponents.iter().sum();
        Ok(table.cpx(n)? == self.base_complexity + 3 * total)
    }

    /// Coefficient map keyed by variable bitmask (bit i set means x_(i+1)
    /// divides the monomial).  Degree must stay below 64.
    pub fn coefficients(&self) -> BTreeMap<u64, BigUint> {
        assert!(self.degree < 64, "coefficient masks need degree < 64");
        coeffs_node(&self.node).0
    }
}

fn biguint_to_u64(value: &BigUint, limit: u64) -> Result<u64> {
    use num_traits::ToPrimitive;
    value.to_u64().ok_or(Error::InsufficientTable {
        needed: u64::MAX,
        limit,
    })
}

fn eval_node(node: &Node, exponents: &[u32]) -> (BigUint, usize) {
    match node {
        Node::Constant(c) => (BigUint::from(*c), 0),
        Node::Tensor(l, r) => {
            let (lv, lu) = eval_node(l, exponents);
            let (rv, ru) = eval_node(r, &exponents[lu..]);
            (lv * rv, lu + ru)
        }
        Node::Step(f, c) => {
            let (fv, fu) = eval_node(f, exponents);
            (fv * pow3(exponents[fu]) + BigUint::from(*c), fu + 1)
        }
    }
}

fn coeffs_node(node: &Node) -> (BTreeMap<u64, BigUint>, u32) {
    match node {
        Node::Constant(c) => {
            let mut m = BTreeMap::new();
            m.insert(0u64, BigUint::from(*c));
            (m, 0)
        }
        Node::Tensor(l, r) => {
            let (lm, ld) = coeffs_node(l);
            let (rm, rd) = coeffs_node(r);
            let mut m = BTreeMap::new();
            for (lk, lv) in &lm {
                for (rk, rv) in &rm {
                    let mask = lk | (rk << ld);
                    let entry = m.entry(mask).or_insert_with(|| BigUint::from(0u8));
                    *entry += lv * rv;
                }
            }
            (m, ld + rd)
        }
        Node::Step(f, c) => {
            let (fm, fd) = coeffs_node(f);
            let mut m = BTreeMap::new();
            for (k, v) in fm {
                m.insert(k | (1 << fd), v);
            }
            let entry = m.entry(0).or_insert_with(|| BigUint::from(0u8));
            *entry += BigUint::from(*c);
            (m, fd + 1)
        }
    }
}

/// The nested family `(((m·x₁+1)·x₂+1)⋯)·x_k + 1` whose defect ceiling is
/// exactly the changeover threshold for residue `a` at level `k`.  The seed
/// is 3, 2 or 4 according to k - a ≡ 0, 1 or 2 (mod 3).
pub fn threshold_witness(a: u8, k: u32, table: &ComplexityTable) -> Result<LowDefectPoly> {
    assert!(a < 3, "residue must be 0, 1 or 2");
    if k == 0 {
        return Err(Error::DegenerateWitness);
    }
    let m = match ((k % 3 + 3) - a as u32) % 3 {
        0 => 3,
        1 => 2,
        _ => 4,
    };
    let mut poly = LowDefectPoly::constant(m, table)?;
    for _ in 0..k {
        poly = poly.affine_step(1, table)?;
    }
    Ok(poly)
}
