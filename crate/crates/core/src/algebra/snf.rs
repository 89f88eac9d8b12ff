//! Smith normal form over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// A factorization `U * R * V = D` with `U`, `V` unimodular and `D` diagonal,
/// nonnegative, each diagonal entry dividing the next, zeros trailing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

/// Computes the Smith normal form of `r`.
///
/// Deterministic: the pivot is always the nonzero entry of least absolute
/// value in the active submatrix, ties broken by lowest row index, then
/// lowest column index.
pub fn smith_normal_form(r: &IntMatrix) -> SnfDecomposition {
    let (m, n) = (r.rows(), r.cols());
    let mut d = r.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        'pivot: loop {
            let Some((pi, pj)) = pivot(&d, t) else {
                // active submatrix is zero; every later step sees the same
                break 'pivot;
            };
            if pi != t {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if pj != t {
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                if !q.is_zero() {
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
                if !d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                if !q.is_zero() {
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
                if !d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // the pivot must divide everything that remains, or the chain
            // breaks; fold an offending row into row t and retry
            let p = d[(t, t)].clone();
            let offender = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            if let Some(i) = offender {
                d.add_row_multiple(t, i, &BigInt::one());
                u.add_row_multiple(t, i, &BigInt::one());
                continue 'pivot;
            }
            break 'pivot;
        }
    }
    for t in 0..m.min(n) {
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfDecomposition { u, d, v }
}

/// Least-absolute-value nonzero entry of the submatrix at `(t.., t..)`,
/// scanning row-major so ties resolve to the lowest row, then column.
fn pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            if d[(i, j)].is_zero() {
                continue;
            }
            let a = d[(i, j)].abs();
            match &best {
                Some((_, _, b)) if *b <= a => {}
                _ => best = Some((i, j, a)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
