use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::Rat;

/// Integer polynomial `c_0 + c_1 x + ... + c_n x^n`, used for the generating
/// polynomial of an f-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_counts(counts: &[i64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree of the highest nonzero term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + Rat::from_integer(c.clone()))
    }

    pub fn derivative(&self) -> CharPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn add(&self, other: &CharPoly) -> CharPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_default();
        Self::new((0..n).map(|i| get(&self.coeffs, i) + get(&other.coeffs, i)).collect())
    }

    pub fn sub(&self, other: &CharPoly) -> CharPoly {
        let neg = Self { coeffs: other.coeffs.iter().map(|c| -c).collect() };
        self.add(&neg)
    }

    pub fn one() -> CharPoly {
        Self::new(vec![BigInt::one()])
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}x"),
                _ => format!("{c}x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
