#![allow(dead_code)] // each test target uses its own subset

//! Independent oracles and seeded random data.
//!
//! Everything here recomputes answers by a route the library does not use:
//! determinants by cofactor expansion, invariant factors by minor gcds,
//! membership by exhaustive coefficient search or by residue closure in a
//! finite quotient. Library results are checked against these.

use std::collections::BTreeSet;

use heegaard_core::{HeegaardDiagram, IntMatrix, IntVector, IntersectionPoint, Sign, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, span: i64) -> IntMatrix {
    let data: Vec<i64> = (0..rows * cols)
        .map(|_| rng.gen_range(-span..=span))
        .collect();
    IntMatrix::from_i64(rows, cols, &data)
}

pub fn random_vector(rng: &mut ChaCha8Rng, len: usize, span: i64) -> IntVector {
    IntVector::from_i64(&(0..len).map(|_| rng.gen_range(-span..=span)).collect::<Vec<_>>())
}

/// Determinant by cofactor expansion along the first row. Exponential and
/// only for small matrices, but it shares nothing with the library's
/// elimination code.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entry * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `g_k` = gcd of all `k x k` minors, zero once the rank is exceeded.
/// The product `g_k = d_1 ... d_k` of the Smith diagonal is a classical
/// invariant, so this recomputes the diagonal without row operations.
pub fn determinantal_divisors(m: &IntMatrix) -> Vec<BigInt> {
    let bound = m.rows().min(m.cols());
    let mut out = Vec::with_capacity(bound);
    for k in 1..=bound {
        let mut g = BigInt::zero();
        for rows in combinations(m.rows(), k) {
            for cols in combinations(m.cols(), k) {
                let sub: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m[(i, j)].clone()).collect())
                    .collect();
                g = g.gcd(&cofactor_det(&sub));
            }
        }
        out.push(g);
    }
    out
}

/// The Smith diagonal predicted by the divisor chain: `d_k = g_k / g_{k-1}`
/// while `g_k` is nonzero, then zeros.
pub fn diagonal_from_divisors(divisors: &[BigInt]) -> Vec<BigInt> {
    let mut prev = BigInt::one();
    let mut out = Vec::with_capacity(divisors.len());
    for g in divisors {
        if g.is_zero() {
            out.push(BigInt::zero());
        } else {
            out.push(g / &prev);
            prev = g.clone();
        }
    }
    out
}

pub fn scaled(v: &IntVector, c: i64) -> IntVector {
    let big = BigInt::from(c);
    IntVector::from_bigints(v.entries().iter().map(|e| e * &big).collect())
}

pub fn vector_sum(dim: usize, terms: &[IntVector]) -> IntVector {
    let mut acc = IntVector::zeros(dim);
    for t in terms {
        acc = &acc + t;
    }
    acc
}

/// Exhaustive membership: does any coefficient tuple in `[-bound, bound]`
/// combine `gens` into `target`? Sound but incomplete; a `true` is proof.
pub fn search_membership(gens: &[IntVector], target: &IntVector, bound: i64) -> bool {
    fn rec(gens: &[IntVector], idx: usize, acc: &IntVector, target: &IntVector, bound: i64) -> bool {
        if idx == gens.len() {
            return acc == target;
        }
        for c in -bound..=bound {
            let next = acc + &scaled(&gens[idx], c);
            if rec(gens, idx + 1, &next, target, bound) {
                return true;
            }
        }
        false
    }
    rec(gens, 0, &IntVector::zeros(target.len()), target, bound)
}

fn content(v: &IntVector) -> BigInt {
    v.entries()
        .iter()
        .fold(BigInt::zero(), |acc, e| acc.gcd(e))
}

/// Exact membership oracle for lattices in Z^2, split by rank.
///
/// Rank 0 and 1 reduce to divisibility along a primitive direction. At
/// rank 2 the index divides `g_2` (gcd of the 2x2 minors), so
/// `g_2 * Z^2` lies inside the lattice and membership is decided in the
/// finite group `(Z / g_2)^2` by closing the generators under addition.
pub fn member_2d(gens: &[IntVector], v: &IntVector) -> bool {
    assert_eq!(v.len(), 2);
    let nonzero: Vec<&IntVector> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return v.is_zero();
    }
    let mut g2 = BigInt::zero();
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let det = &nonzero[i][0] * &nonzero[j][1] - &nonzero[i][1] * &nonzero[j][0];
            g2 = g2.gcd(&det);
        }
    }
    if g2.is_zero() {
        return member_rank1(&nonzero, v);
    }
    let m = g2;
    let reduce = |x: &BigInt| x.mod_floor(&m);
    let start = (reduce(&v[0]), reduce(&v[1]));
    let mut closure: BTreeSet<(BigInt, BigInt)> = BTreeSet::new();
    closure.insert((BigInt::zero(), BigInt::zero()));
    let mut frontier: Vec<(BigInt, BigInt)> = closure.iter().cloned().collect();
    while let Some(e) = frontier.pop() {
        for g in &nonzero {
            let next = (reduce(&(&e.0 + &g[0])), reduce(&(&e.1 + &g[1])));
            if closure.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    closure.contains(&start)
}

fn member_rank1(gens: &[&IntVector], v: &IntVector) -> bool {
    let first = gens[0];
    let c = content(first);
    let unit = IntVector::from_bigints(first.entries().iter().map(|e| e / &c).collect());
    let ratio = |w: &IntVector| -> Option<BigInt> {
        let i = if unit[0].is_zero() { 1 } else { 0 };
        let (q, r) = w[i].div_rem(&unit[i]);
        if r.is_zero() && w.entries().iter().zip(unit.entries()).all(|(we, ue)| we == &(&q * ue)) {
            Some(q)
        } else {
            None
        }
    };
    let mut d = BigInt::zero();
    for g in gens {
        match ratio(g) {
            Some(t) => d = d.gcd(&t),
            // not actually rank 1; caller guarantees all pair minors vanish
            None => unreachable!("rank-1 oracle fed independent generators"),
        }
    }
    if v.is_zero() {
        return true;
    }
    match ratio(v) {
        Some(t) => t.is_multiple_of(&d),
        None => false,
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, genus: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    let tokens: Vec<String> = (0..len)
        .map(|_| {
            let idx = rng.gen_range(1..=2 * genus);
            if rng.gen_bool(0.5) {
                format!("c{idx}")
            } else {
                format!("-c{idx}")
            }
        })
        .collect();
    tokens.join(" ").parse().expect("generated tokens are well formed")
}

/// A structurally valid random diagram: genus up to `max_genus`, words up
/// to `max_len` letters, at most `max_points` points on each curve pair.
pub fn random_diagram(
    rng: &mut ChaCha8Rng,
    max_genus: usize,
    max_len: usize,
    max_points: usize,
) -> HeegaardDiagram {
    let genus = rng.gen_range(1..=max_genus);
    let alpha: Vec<Word> = (0..genus).map(|_| random_word(rng, genus, max_len)).collect();
    let beta: Vec<Word> = (0..genus).map(|_| random_word(rng, genus, max_len)).collect();
    let mut points = Vec::new();
    let mut serial = 0;
    for i in 1..=genus {
        for j in 1..=genus {
            let count = rng.gen_range(0..=max_points);
            for _ in 0..count {
                let k = rng.gen_range(0..=alpha[i - 1].len());
                let l = rng.gen_range(0..=beta[j - 1].len());
                let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
                points.push(IntersectionPoint {
                    label: format!("p{serial}"),
                    alpha: i,
                    beta: j,
                    k,
                    l,
                    sign,
                });
                serial += 1;
            }
        }
    }
    HeegaardDiagram::new(genus, alpha, beta, points).expect("generated diagram is valid")
}
