//! Quotients `Z^{2g} / L` and canonical coordinates of their elements.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{smith_normal_form, AlgebraError, IntMatrix, IntVector, SnfDecomposition};

/// `Z^{2g}` modulo the lattice spanned by a list of relation vectors.
///
/// The Smith decomposition computed at construction is stored and reused by
/// every `reduce` call, so canonical forms from one group value are mutually
/// comparable: `reduce(v) == reduce(w)` iff `v - w` lies in the lattice.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    ambient_rank: usize,
    relations: IntMatrix,
    snf: SnfDecomposition,
    /// Diagonal of `D`, padded with zeros to the ambient rank.
    diag: Vec<BigInt>,
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

/// Builds `Z^{2g} / L` where `L` is spanned by `vectors`.
///
/// An empty list is legal and yields `Z^{2g}` itself.
pub fn build_quotient(vectors: &[IntVector], genus: usize) -> Result<QuotientGroup, AlgebraError> {
    let n = 2 * genus;
    for w in vectors {
        if w.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                got: w.len(),
            });
        }
    }
    let relations = IntMatrix::from_columns(n, vectors);
    let snf = smith_normal_form(&relations);
    let mut diag = vec![BigInt::zero(); n];
    for (t, entry) in diag.iter_mut().enumerate().take(relations.cols()) {
        *entry = snf.d[(t, t)].clone();
    }
    let invariant_factors: Vec<BigInt> = diag.iter().filter(|d| **d > BigInt::one()).cloned().collect();
    let free_rank = diag.iter().filter(|d| d.is_zero()).count();
    Ok(QuotientGroup {
        ambient_rank: n,
        relations,
        snf,
        diag,
        invariant_factors,
        free_rank,
    })
}

impl QuotientGroup {
    /// `2g`, the rank of the ambient free group.
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// The relation matrix; its columns span the lattice.
    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn snf(&self) -> &SnfDecomposition {
        &self.snf
    }

    /// Diagonal entries greater than one, in divisibility order.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Number of elements, when finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut n = BigInt::one();
        for d in &self.invariant_factors {
            n *= d;
        }
        Some(n)
    }

    /// Canonical coordinate of the class `v + L`.
    ///
    /// Applies the fixed `U`, keeps entries at zero diagonal positions as the
    /// free part, reduces entries at positions with invariant factor `d > 1`
    /// into `[0, d)`, and drops positions with `d = 1`.
    pub fn reduce(&self, v: &IntVector) -> Result<ClassCoordinate, AlgebraError> {
        if v.len() != self.ambient_rank {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.ambient_rank,
                got: v.len(),
            });
        }
        let w = self.snf.u.mul_vector(v);
        let mut free = Vec::with_capacity(self.free_rank);
        let mut torsion = Vec::with_capacity(self.invariant_factors.len());
        for (i, d) in self.diag.iter().enumerate() {
            if d.is_zero() {
                free.push(w[i].clone());
            } else if !d.is_one() {
                torsion.push(TorsionResidue {
                    residue: w[i].mod_floor(d),
                    modulus: d.clone(),
                });
            }
        }
        Ok(ClassCoordinate { free, torsion })
    }
}

impl fmt::Display for QuotientGroup {
    /// `0`, `Z`, `Z^2`, `Z/3`, `Z + Z/2 + Z/4`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str(" + ")
            }
        };
        if self.free_rank == 1 {
            sep(f)?;
            f.write_str("Z")?;
        } else if self.free_rank > 1 {
            sep(f)?;
            write!(f, "Z^{}", self.free_rank)?;
        }
        for d in &self.invariant_factors {
            sep(f)?;
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

/// A residue in one torsion factor `Z/modulus`, normalized to `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionResidue {
    pub residue: BigInt,
    pub modulus: BigInt,
}

/// Canonical coordinate of a class in a quotient group: the free part in
/// `Z^rank` followed by one residue per invariant factor.
///
/// Coordinates produced by the same `QuotientGroup` compare componentwise;
/// equality means the underlying vectors differ by a lattice element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassCoordinate {
    free: Vec<BigInt>,
    torsion: Vec<TorsionResidue>,
}

impl ClassCoordinate {
    pub fn free(&self) -> &[BigInt] {
        &self.free
    }

    pub fn torsion(&self) -> &[TorsionResidue] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(|t| t.residue.is_zero())
    }
}

impl fmt::Display for ClassCoordinate {
    /// Free part as a tuple, torsion residues as `r mod d` terms joined by
    /// ` + `; the zero coordinate prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        if !self.free.is_empty() {
            f.write_str("(")?;
            for (i, e) in self.free.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")?;
            first = false;
        }
        for t in &self.torsion {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{} mod {}", t.residue, t.modulus)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(entries: &[&[i64]]) -> Vec<IntVector> {
        entries.iter().map(|e| IntVector::from_i64(e)).collect()
    }

    fn factors_of(q: &QuotientGroup) -> Vec<i64> {
        q.invariant_factors()
            .iter()
            .map(|d| d.to_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn standard_basis_kills_everything() {
        let q = build_quotient(&vecs(&[&[1, 0], &[0, 1]]), 1).unwrap();
        assert!(q.is_trivial());
        assert_eq!(q.to_string(), "0");
    }

    #[test]
    fn index_three_sublattice() {
        // brute-force coset enumeration of Z^2 modulo {(1,0),(1,3)} on a
        // bounded box finds exactly the classes of (0,0), (0,1), (0,2)
        let q = build_quotient(&vecs(&[&[1, 0], &[1, 3]]), 1).unwrap();
        assert_eq!(q.free_rank(), 0);
        assert_eq!(factors_of(&q), vec![3]);
        assert_eq!(q.order(), Some(BigInt::from(3)));
        assert_eq!(q.to_string(), "Z/3");
    }

    #[test]
    fn single_relation_leaves_free_rank() {
        let q = build_quotient(&vecs(&[&[1, 0]]), 1).unwrap();
        assert_eq!(q.free_rank(), 1);
        assert!(q.invariant_factors().is_empty());
        assert_eq!(q.order(), None);
        assert_eq!(q.to_string(), "Z");
    }

    #[test]
    fn empty_relation_list_gives_free_group() {
        let q = build_quotient(&[], 2).unwrap();
        assert_eq!(q.free_rank(), 4);
        assert_eq!(q.to_string(), "Z^4");
        // with no relations U is the identity, so reduce is literal
        let v = IntVector::from_i64(&[5, -7, 0, 2]);
        assert_eq!(q.reduce(&v).unwrap().free(), v.entries());
    }

    #[test]
    fn rejects_wrong_vector_length() {
        assert_eq!(
            build_quotient(&vecs(&[&[1, 0, 0]]), 1).unwrap_err(),
            AlgebraError::DimensionMismatch { expected: 2, got: 3 }
        );
    }

    #[test]
    fn reduce_sends_lattice_elements_to_zero() {
        let q = build_quotient(&vecs(&[&[1, 0], &[1, 3]]), 1).unwrap();
        for member in [&[0, 0], &[1, 0], &[1, 3], &[2, 3], &[0, 3], &[-1, -3]] {
            let c = q.reduce(&IntVector::from_i64(member)).unwrap();
            assert!(c.is_zero(), "{member:?} should reduce to zero");
            assert_eq!(c.to_string(), "0");
        }
    }

    #[test]
    fn reduce_canonical_residue() {
        let q = build_quotient(&vecs(&[&[1, 0], &[1, 3]]), 1).unwrap();
        let c = q.reduce(&IntVector::from_i64(&[0, 2])).unwrap();
        assert!(c.free().is_empty());
        assert_eq!(c.torsion().len(), 1);
        assert_eq!(c.torsion()[0].residue, BigInt::from(2));
        assert_eq!(c.torsion()[0].modulus, BigInt::from(3));
        assert_eq!(c.to_string(), "2 mod 3");
    }

    #[test]
    fn reduce_trivial_lattice_is_injective() {
        let q = build_quotient(&[], 1).unwrap();
        let c = q.reduce(&IntVector::from_i64(&[5, -7])).unwrap();
        assert_eq!(c.free(), IntVector::from_i64(&[5, -7]).entries());
        assert_eq!(c.to_string(), "(5, -7)");
        let c2 = q.reduce(&IntVector::from_i64(&[5, -6])).unwrap();
        assert_ne!(c, c2);
    }

    #[test]
    fn reduce_rejects_wrong_length() {
        let q = build_quotient(&[], 1).unwrap();
        assert_eq!(
            q.reduce(&IntVector::from_i64(&[1, 2, 3])),
            Err(AlgebraError::DimensionMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn reduce_is_invariant_under_lattice_translation() {
        let q = build_quotient(&vecs(&[&[2, 1], &[0, 4]]), 1).unwrap();
        let v = IntVector::from_i64(&[3, -2]);
        let base = q.reduce(&v).unwrap();
        for j in 0..q.relations().cols() {
            let shifted = &v + &q.relations().column(j);
            assert_eq!(q.reduce(&shifted).unwrap(), base);
        }
    }

    #[test]
    fn mixed_group_display_and_coordinate_format() {
        // relations 2e1, 4e2, e3, e4 in Z^6: Z^2 + Z/2 + Z/4
        let q = build_quotient(
            &vecs(&[
                &[2, 0, 0, 0, 0, 0],
                &[0, 4, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0],
            ]),
            3,
        )
        .unwrap();
        assert_eq!(q.free_rank(), 2);
        assert_eq!(factors_of(&q), vec![2, 4]);
        assert_eq!(q.to_string(), "Z^2 + Z/2 + Z/4");
        let c = q.reduce(&IntVector::from_i64(&[1, 2, 0, 0, 5, -7])).unwrap();
        assert_eq!(c.to_string(), "(5, -7) + 1 mod 2 + 2 mod 4");
    }
}
