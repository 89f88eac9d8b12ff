//! Generators of the intersection `T_α ∩ T_β`, their coordinates in
//! `H₁(M)`, Whitney-disk connectivity, signs, and Maslov parity.
//!
//! A generator picks one intersection point on each pair `(α_i, β_{σ(i)})`
//! for some permutation `σ`. Its coordinate is the class of
//! `Σᵢ prefix(α_i, kᵢ) + suffix(β_{σ(i)}, l_{σ(i)})` in `H₁(M)`; two
//! generators are connected by a Whitney disk exactly when their
//! coordinates agree, which partitions the generators into classes.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{
    abelianize, build_quotient, prefix_vector, suffix_vector, ClassCoordinate, IntVector,
    QuotientGroup, Sign,
};
use crate::diagram::{HeegaardDiagram, IntersectionPoint};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FloerError {
    /// The generator's points do not all appear in the queried diagram.
    #[error("generator `{id}` does not belong to this diagram")]
    ForeignGenerator { id: String },
    /// Parity was requested for generators in different classes. Parity is
    /// defined only along a disk, and none connects them.
    #[error("no Whitney disk connects `{x}` and `{y}`")]
    NoWhitneyDisk { x: String, y: String },
}

/// One generator of `T_α ∩ T_β`: a choice of one intersection point on
/// each `(α_i, β_{σ(i)})`, all beta indices distinct.
///
/// `points()[i]` lies on alpha curve `i + 1`; the permutation σ is
/// recoverable as the beta indices in that order. The id is the sorted,
/// comma-joined point labels wrapped in braces, so ids are stable under
/// relabeling of curve indices and unique within a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    points: Vec<IntersectionPoint>,
    id: String,
}

impl Generator {
    fn new(points: Vec<IntersectionPoint>) -> Generator {
        debug_assert!(points.iter().enumerate().all(|(i, p)| p.alpha == i + 1));
        let mut labels: Vec<&str> = points.iter().map(|p| p.label.as_str()).collect();
        labels.sort_unstable();
        let id = format!("{{{}}}", labels.join(","));
        Generator { points, id }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// Points in alpha order: entry `i` lies on alpha curve `i + 1`.
    pub fn points(&self) -> &[IntersectionPoint] {
        &self.points
    }

    /// The permutation as 1-based beta indices: entry `i` is the beta
    /// curve matched with alpha curve `i + 1`.
    pub fn sigma(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.beta).collect()
    }
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.id)
    }
}

/// One generator's id, coordinate, and sign, as reported by
/// [`partition_classes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSummary {
    pub id: String,
    pub coordinate: ClassCoordinate,
    pub sign: Sign,
}

/// The full class partition of a diagram's generators.
///
/// Classes are disjoint, cover every generator, and two generators share
/// a class exactly when their coordinates are equal.
#[derive(Debug, Clone)]
pub struct ClassReport {
    quotient: QuotientGroup,
    generators: Vec<GeneratorSummary>,
    classes: Vec<(ClassCoordinate, Vec<String>)>,
}

impl ClassReport {
    pub fn quotient(&self) -> &QuotientGroup {
        &self.quotient
    }

    /// All generators sorted by id.
    pub fn generators(&self) -> &[GeneratorSummary] {
        &self.generators
    }

    /// Classes sorted by coordinate; members sorted by id.
    pub fn classes(&self) -> &[(ClassCoordinate, Vec<String>)] {
        &self.classes
    }
}

/// The first homology of the manifold a diagram describes: `ℤ^{2g}`
/// modulo the abelianized attaching words of all alpha and beta curves.
pub fn manifold_h1(d: &HeegaardDiagram) -> QuotientGroup {
    let genus = d.genus();
    let mut relations = Vec::with_capacity(2 * genus);
    for w in d.alpha().iter().chain(d.beta().iter()) {
        let v = abelianize(w, genus).expect("diagram letters are within genus range");
        relations.push(v);
    }
    build_quotient(&relations, genus).expect("relation vectors have ambient rank 2g")
}

/// Enumerates every generator: for each permutation σ of the beta curves
/// and each choice of one point from every nonempty `α_i ∩ β_{σ(i)}`, one
/// generator. Branches die as soon as a required pair has no points, so
/// sparse diagrams never pay the `g!` worst case. Sorted by id.
pub fn enumerate_generators(d: &HeegaardDiagram) -> Vec<Generator> {
    let genus = d.genus();
    let mut buckets: BTreeMap<(usize, usize), Vec<&IntersectionPoint>> = BTreeMap::new();
    for p in d.points() {
        buckets.entry((p.alpha, p.beta)).or_default().push(p);
    }
    let mut out = Vec::new();
    let mut used = vec![false; genus + 1];
    let mut chosen: Vec<&IntersectionPoint> = Vec::with_capacity(genus);
    assign(genus, &buckets, 1, &mut used, &mut chosen, &mut out);
    out.sort_unstable_by(|a, b| a.id.cmp(&b.id));
    out
}

fn assign<'d>(
    genus: usize,
    buckets: &BTreeMap<(usize, usize), Vec<&'d IntersectionPoint>>,
    alpha: usize,
    used: &mut Vec<bool>,
    chosen: &mut Vec<&'d IntersectionPoint>,
    out: &mut Vec<Generator>,
) {
    if alpha > genus {
        out.push(Generator::new(chosen.iter().map(|p| (*p).clone()).collect()));
        return;
    }
    for beta in 1..=genus {
        if used[beta] {
            continue;
        }
        let Some(points) = buckets.get(&(alpha, beta)) else {
            continue;
        };
        used[beta] = true;
        for p in points {
            chosen.push(p);
            assign(genus, buckets, alpha + 1, used, chosen, out);
            chosen.pop();
        }
        used[beta] = false;
    }
}

/// True when every point of `x` is literally a point of `d`, in alpha
/// order, with distinct beta indices.
fn belongs_to(d: &HeegaardDiagram, x: &Generator) -> bool {
    let genus = d.genus();
    if x.points.len() != genus {
        return false;
    }
    let mut seen_beta = vec![false; genus + 1];
    for (i, p) in x.points.iter().enumerate() {
        if p.alpha != i + 1 || p.beta == 0 || p.beta > genus || seen_beta[p.beta] {
            return false;
        }
        seen_beta[p.beta] = true;
        if d.find_point(&p.label) != Some(p) {
            return false;
        }
    }
    true
}

fn require_membership(d: &HeegaardDiagram, x: &Generator) -> Result<(), FloerError> {
    if belongs_to(d, x) {
        Ok(())
    } else {
        Err(FloerError::ForeignGenerator { id: x.id.clone() })
    }
}

/// The unreduced coordinate sum `Σᵢ prefix(α_i, kᵢ) + suffix(β_{σ(i)},
/// l_{σ(i)})` in `ℤ^{2g}`.
fn raw_coordinate(d: &HeegaardDiagram, x: &Generator) -> IntVector {
    let genus = d.genus();
    let mut total = IntVector::zeros(2 * genus);
    for p in &x.points {
        let pre = prefix_vector(d.alpha_word(p.alpha), p.k, genus)
            .expect("point positions are within word length");
        let suf = suffix_vector(d.beta_word(p.beta), p.l, genus)
            .expect("point positions are within word length");
        total = &(&total + &pre) + &suf;
    }
    total
}

/// The generator's coordinate in `H₁(M)`, reduced through `q`.
///
/// `q` must be `manifold_h1(d)`; passing a quotient of a different rank
/// panics. Reusing one quotient across calls keeps the canonical forms
/// comparable, since they depend on the transform fixed at `q`'s
/// construction.
pub fn generator_coordinate(
    d: &HeegaardDiagram,
    x: &Generator,
    q: &QuotientGroup,
) -> Result<ClassCoordinate, FloerError> {
    require_membership(d, x)?;
    Ok(q
        .reduce(&raw_coordinate(d, x))
        .expect("quotient ambient rank matches the diagram"))
}

/// Whether some Whitney disk connects `x` and `y`: true exactly when
/// their coordinates in `H₁(M)` agree.
pub fn whitney_exists(
    d: &HeegaardDiagram,
    x: &Generator,
    y: &Generator,
) -> Result<bool, FloerError> {
    let q = manifold_h1(d);
    Ok(generator_coordinate(d, x, &q)? == generator_coordinate(d, y, &q)?)
}

/// The intersection sign `sgn(σ) · Π sign(xᵢ)`.
pub fn generator_sign(x: &Generator) -> Sign {
    let betas: Vec<usize> = x.sigma();
    let mut inversions = 0usize;
    for i in 0..betas.len() {
        for j in i + 1..betas.len() {
            if betas[i] > betas[j] {
                inversions += 1;
            }
        }
    }
    let mut sign = if inversions % 2 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    for p in &x.points {
        sign = sign * p.sign;
    }
    sign
}

/// Maslov parity of the disks connecting `x` and `y`: `0` when the
/// generators' signs agree, `1` otherwise.
///
/// Defined only within a class; generators in different classes have no
/// connecting disk and produce [`FloerError::NoWhitneyDisk`].
pub fn maslov_parity(
    d: &HeegaardDiagram,
    x: &Generator,
    y: &Generator,
) -> Result<u8, FloerError> {
    if !whitney_exists(d, x, y)? {
        return Err(FloerError::NoWhitneyDisk {
            x: x.id.clone(),
            y: y.id.clone(),
        });
    }
    Ok(if generator_sign(x) == generator_sign(y) {
        0
    } else {
        1
    })
}

/// Groups all generators by coordinate. Deterministic: classes sorted by
/// coordinate, members and the generator list sorted by id.
pub fn partition_classes(d: &HeegaardDiagram) -> ClassReport {
    let quotient = manifold_h1(d);
    let generators = enumerate_generators(d);
    let mut summaries = Vec::with_capacity(generators.len());
    let mut by_coordinate: BTreeMap<ClassCoordinate, Vec<String>> = BTreeMap::new();
    for g in &generators {
        let coordinate = generator_coordinate(d, g, &quotient)
            .expect("enumerated generators belong to the diagram");
        by_coordinate
            .entry(coordinate.clone())
            .or_default()
            .push(g.id().to_string());
        summaries.push(GeneratorSummary {
            id: g.id().to_string(),
            coordinate,
            sign: generator_sign(g),
        });
    }
    ClassReport {
        quotient,
        generators: summaries,
        classes: by_coordinate.into_iter().collect(),
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use crate::diagram::{fixture, parse_diagram};

    use super::*;

    fn ids(gens: &[Generator]) -> Vec<&str> {
        gens.iter().map(|g| g.id()).collect()
    }

    #[test]
    fn h1_of_catalog_fixtures() {
        assert!(manifold_h1(&fixture("s3").unwrap()).is_trivial());
        let lens = manifold_h1(&fixture("lens-3-1").unwrap());
        assert_eq!(lens.invariant_factors(), &[BigInt::from(3)]);
        assert_eq!(lens.free_rank(), 0);
        let s1xs2 = manifold_h1(&fixture("s1xs2").unwrap());
        assert_eq!(s1xs2.free_rank(), 1);
        assert!(s1xs2.invariant_factors().is_empty());
        assert!(manifold_h1(&fixture("s3-genus2-stab").unwrap()).is_trivial());
    }

    #[test]
    fn lens_3_1_has_three_generators_sorted_by_id() {
        let gens = enumerate_generators(&fixture("lens-3-1").unwrap());
        assert_eq!(ids(&gens), vec!["{x0}", "{x1}", "{x2}"]);
    }

    #[test]
    fn no_points_means_no_generators() {
        assert!(enumerate_generators(&fixture("s1xs2").unwrap()).is_empty());
    }

    #[test]
    fn empty_required_pair_forces_the_permutation() {
        let gens = enumerate_generators(&fixture("s3-genus2-stab").unwrap());
        assert_eq!(ids(&gens), vec!["{x0,y0}", "{x1,y0}", "{x2,y0}"]);
        for g in &gens {
            assert_eq!(g.sigma(), vec![1, 2]);
        }
    }

    #[test]
    fn cross_pairs_force_the_transposition() {
        let d = parse_diagram(
            "genus 2\nalpha 1: c1\nalpha 2: c3\nbeta 1: c4\nbeta 2: c2\n\
             x p: a1 b2 k=0 l=0 sign=+\nx q: a2 b1 k=0 l=0 sign=+\n",
        )
        .unwrap();
        let gens = enumerate_generators(&d);
        assert_eq!(ids(&gens), vec!["{p,q}"]);
        assert_eq!(gens[0].sigma(), vec![2, 1]);
        assert_eq!(generator_sign(&gens[0]), Sign::Minus);
    }

    #[test]
    fn sign_multiplies_permutation_parity_and_point_signs() {
        let d = parse_diagram(
            "genus 2\nalpha 1: c1\nalpha 2: c3\nbeta 1: c4\nbeta 2: c2\n\
             x p: a1 b2 k=0 l=0 sign=+\nx q: a2 b1 k=0 l=0 sign=-\n",
        )
        .unwrap();
        let gens = enumerate_generators(&d);
        assert_eq!(generator_sign(&gens[0]), Sign::Plus);
        let stab = fixture("s3-genus2-stab").unwrap();
        let signs: Vec<Sign> = enumerate_generators(&stab)
            .iter()
            .map(generator_sign)
            .collect();
        assert_eq!(signs, vec![Sign::Plus, Sign::Minus, Sign::Plus]);
    }

    #[test]
    fn trivial_group_sends_every_generator_to_zero() {
        let d = fixture("s3").unwrap();
        let q = manifold_h1(&d);
        let gens = enumerate_generators(&d);
        assert_eq!(gens.len(), 1);
        let c = generator_coordinate(&d, &gens[0], &q).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn lens_3_1_coordinates_are_pairwise_distinct() {
        let d = fixture("lens-3-1").unwrap();
        let q = manifold_h1(&d);
        let gens = enumerate_generators(&d);
        let coords: Vec<ClassCoordinate> = gens
            .iter()
            .map(|g| generator_coordinate(&d, g, &q).unwrap())
            .collect();
        for i in 0..coords.len() {
            for j in i + 1..coords.len() {
                assert_ne!(coords[i], coords[j], "{} vs {}", gens[i], gens[j]);
            }
        }
    }

    #[test]
    fn full_traversal_does_not_move_the_coordinate() {
        // k=0 and k=m differ by one full alpha traversal, which lies in
        // the relation lattice.
        let d = parse_diagram(
            "genus 1\nalpha 1: c1\nbeta 1: c1\n\
             x a: a1 b1 k=0 l=0 sign=+\nx b: a1 b1 k=1 l=0 sign=+\n",
        )
        .unwrap();
        let q = manifold_h1(&d);
        let gens = enumerate_generators(&d);
        assert_eq!(gens.len(), 2);
        let ca = generator_coordinate(&d, &gens[0], &q).unwrap();
        let cb = generator_coordinate(&d, &gens[1], &q).unwrap();
        assert_eq!(ca, cb);
    }

    #[test]
    fn whitney_separates_lens_generators_and_joins_trivial_h1() {
        let lens = fixture("lens-3-1").unwrap();
        let gens = enumerate_generators(&lens);
        assert!(whitney_exists(&lens, &gens[0], &gens[0]).unwrap());
        assert!(!whitney_exists(&lens, &gens[0], &gens[1]).unwrap());
        let stab = fixture("s3-genus2-stab").unwrap();
        let sgens = enumerate_generators(&stab);
        for x in &sgens {
            for y in &sgens {
                assert!(whitney_exists(&stab, x, y).unwrap());
            }
        }
    }

    #[test]
    fn foreign_generators_are_rejected() {
        let lens = fixture("lens-3-1").unwrap();
        let s3 = fixture("s3").unwrap();
        // lens-3-1 {x0} happens to carry identical point data to s3 {x0},
        // so it genuinely belongs to s3; {x1} does not exist there.
        let foreign = enumerate_generators(&lens).remove(1);
        let q = manifold_h1(&s3);
        assert_eq!(
            generator_coordinate(&s3, &foreign, &q),
            Err(FloerError::ForeignGenerator {
                id: "{x1}".to_string()
            })
        );
        // Same label, tampered sign: still foreign.
        let mut tampered = enumerate_generators(&s3).remove(0);
        tampered.points[0].sign = Sign::Minus;
        let native = enumerate_generators(&s3).remove(0);
        assert!(whitney_exists(&s3, &native, &tampered).is_err());
    }

    #[test]
    fn parity_splits_mixed_sign_classes() {
        let stab = fixture("s3-genus2-stab").unwrap();
        let gens = enumerate_generators(&stab);
        assert_eq!(maslov_parity(&stab, &gens[0], &gens[0]).unwrap(), 0);
        assert_eq!(maslov_parity(&stab, &gens[0], &gens[1]).unwrap(), 1);
        assert_eq!(maslov_parity(&stab, &gens[0], &gens[2]).unwrap(), 0);
        let lens = fixture("lens-3-1").unwrap();
        let lgens = enumerate_generators(&lens);
        assert_eq!(
            maslov_parity(&lens, &lgens[0], &lgens[1]),
            Err(FloerError::NoWhitneyDisk {
                x: "{x0}".to_string(),
                y: "{x1}".to_string()
            })
        );
    }

    #[test]
    fn partition_matches_pairwise_whitney() {
        for name in ["s3", "s1xs2", "lens-3-1", "lens-5-2", "s3-genus2-stab"] {
            let d = fixture(name).unwrap();
            let report = partition_classes(&d);
            let gens = enumerate_generators(&d);
            let mut covered = 0;
            for (coord, members) in report.classes() {
                covered += members.len();
                for id in members {
                    let s = report
                        .generators()
                        .iter()
                        .find(|s| &s.id == id)
                        .expect("member listed in generators");
                    assert_eq!(&s.coordinate, coord, "{name}");
                }
            }
            assert_eq!(covered, gens.len(), "{name}");
        }
    }

    #[test]
    fn class_counts_of_catalog_fixtures() {
        let lens = partition_classes(&fixture("lens-3-1").unwrap());
        assert_eq!(lens.classes().len(), 3);
        assert!(lens.classes().iter().all(|(_, m)| m.len() == 1));
        let s3 = partition_classes(&fixture("s3").unwrap());
        assert_eq!(s3.classes().len(), 1);
        assert_eq!(s3.classes()[0].1, vec!["{x0}"]);
        let stab = partition_classes(&fixture("s3-genus2-stab").unwrap());
        assert_eq!(stab.classes().len(), 1);
        assert_eq!(stab.classes()[0].1.len(), 3);
        let empty = partition_classes(&fixture("s1xs2").unwrap());
        assert!(empty.classes().is_empty());
        assert_eq!(empty.quotient().free_rank(), 1);
    }
}
