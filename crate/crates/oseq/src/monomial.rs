//! Monomials in a fixed number of variables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A monomial y₁^{e₁}⋯y_d^{e_d}, stored as its exponent vector.
///
/// The variable count is fixed per context; operations on monomials from
/// different contexts fail rather than coerce. Variable indices in the public
/// API are 1-based, matching the y₁…y_d notation used throughout.
///
/// Ordering is lexicographic on the exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// Largest supported degree. Instances of interest stay far below; the
    /// cap bounds intermediate arithmetic without big integers.
    pub const MAX_DEGREE: u32 = 1 << 16;

    pub fn new(exps: Vec<u32>) -> Result<Self> {
        let degree: u64 = exps.iter().map(|&e| e as u64).sum();
        if degree > Self::MAX_DEGREE as u64 {
            return Err(Error::DegreeOverflow);
        }
        Ok(Monomial { exps })
    }

    /// The monomial 1 (all exponents zero).
    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: vec![0; num_vars] }
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// True iff every exponent of `self` is ≤ the corresponding exponent of
    /// `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::VarCountMismatch(self.num_vars(), other.num_vars()));
        }
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// The exponent of variable `r` (1-based): max{m : y_r^m divides self}.
    pub fn max_power(&self, r: usize) -> Result<u32> {
        if r == 0 || r > self.num_vars() {
            return Err(Error::VarIndexOutOfRange { index: r, num_vars: self.num_vars() });
        }
        Ok(self.exps[r - 1])
    }

    /// The product self · y_r^k.
    pub fn times_var_power(&self, r: usize, k: u32) -> Result<Monomial> {
        if r == 0 || r > self.num_vars() {
            return Err(Error::VarIndexOutOfRange { index: r, num_vars: self.num_vars() });
        }
        let mut exps = self.exps.clone();
        exps[r - 1] += k;
        Monomial::new(exps)
    }

    /// The quotient self / y_r^{exponent of r}, i.e. self with variable `r`
    /// struck out.
    pub fn without_var(&self, r: usize) -> Result<Monomial> {
        if r == 0 || r > self.num_vars() {
            return Err(Error::VarIndexOutOfRange { index: r, num_vars: self.num_vars() });
        }
        let mut exps = self.exps.clone();
        exps[r - 1] = 0;
        Ok(Monomial { exps })
    }

    /// Concatenates exponent vectors: the product in the disjoint union of
    /// the two variable sets.
    pub fn concat(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        exps.extend_from_slice(&other.exps);
        Monomial::new(exps)
    }
}

impl fmt::Display for Monomial {
    /// Pretty form for logs: `y1^e1*y2^e2`, zero exponents omitted; the
    /// monomial 1 prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "y{}", i + 1)?;
            } else {
                write!(f, "y{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}
