use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::{format_rat, parse_rat, Rat};

/// A point or direction in `Q^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QVec(pub Vec<Rat>);

impl QVec {
    pub fn zeros(n: usize) -> Self {
        QVec(vec![Rat::zero(); n])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        QVec(xs.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rat::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &QVec) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, s: &Rat) -> QVec {
        QVec(self.0.iter().map(|x| x * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Positive multiple with coprime integer entries (zero stays zero).
    pub fn primitive(&self) -> QVec {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        QVec(ints.into_iter().map(|x| Rat::from_integer(x / &gcd)).collect())
    }

    /// Integer entries of the primitive positive multiple.
    pub fn primitive_ints(&self) -> Vec<BigInt> {
        self.primitive().0.into_iter().map(|x| x.to_integer()).collect()
    }

    pub fn select(&self, idx: &[usize]) -> QVec {
        QVec(idx.iter().map(|&i| self.0[i].clone()).collect())
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(Signed::is_negative)
    }
}

impl Deref for QVec {
    type Target = [Rat];
    fn deref(&self) -> &[Rat] {
        &self.0
    }
}

impl Add for &QVec {
    type Output = QVec;
    fn add(self, rhs: &QVec) -> QVec {
        debug_assert_eq!(self.dim(), rhs.dim());
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVec {
    type Output = QVec;
    fn sub(self, rhs: &QVec) -> QVec {
        debug_assert_eq!(self.dim(), rhs.dim());
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVec {
    type Output = QVec;
    fn neg(self) -> QVec {
        QVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rat(x))?;
        }
        write!(f, ")")
    }
}

impl Serialize for QVec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(format_rat))
    }
}

impl<'de> Deserialize<'de> for QVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect::<Result<_, _>>()
            .map(QVec)
    }
}
