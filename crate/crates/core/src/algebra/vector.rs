//! Dense integer vectors with exact arithmetic.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// A vector in `Z^n` with arbitrary-precision entries.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector {
    entries: Vec<BigInt>,
}

impl IntVector {
    pub fn zeros(n: usize) -> IntVector {
        IntVector {
            entries: vec![BigInt::zero(); n],
        }
    }

    pub fn from_bigints(entries: Vec<BigInt>) -> IntVector {
        IntVector { entries }
    }

    pub fn from_i64(entries: &[i64]) -> IntVector {
        IntVector {
            entries: entries.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.entries[i]
    }
}

impl IndexMut<usize> for IntVector {
    fn index_mut(&mut self, i: usize) -> &mut BigInt {
        &mut self.entries[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;

    fn add(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.len(), rhs.len(), "vector lengths differ");
        IntVector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntVector {
    type Output = IntVector;

    fn sub(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.len(), rhs.len(), "vector lengths differ");
        IntVector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &IntVector {
    type Output = IntVector;

    fn neg(self) -> IntVector {
        IntVector {
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
