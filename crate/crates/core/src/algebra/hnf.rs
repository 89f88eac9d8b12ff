//! Column-style Hermite normal form and lattice membership.
//!
//! This is the second route to lattice questions. `lattice_member` decides
//! membership by back-substitution against the Hermite form and shares no
//! code with the Smith normal form reduction, so the two can be tested
//! against each other.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{AlgebraError, IntMatrix, IntVector};

/// Column Hermite normal form of the lattice spanned by the columns of `r`.
///
/// Only unimodular column operations are applied, so the column span is
/// unchanged. In the result, pivot rows strictly increase column by column,
/// pivots are positive, entries left of a pivot in its row lie in
/// `[0, pivot)`, and zero columns are dropped; the columns form the
/// canonical basis of the lattice.
pub fn hermite_normal_form(r: &IntMatrix) -> IntMatrix {
    let (m, n) = (r.rows(), r.cols());
    let mut h = r.clone();
    let mut c = 0;
    for row in 0..m {
        if c == n {
            break;
        }
        // gcd-reduce columns c.. until at most one keeps a nonzero here
        loop {
            let mut best: Option<usize> = None;
            for j in c..n {
                if h[(row, j)].is_zero() {
                    continue;
                }
                best = match best {
                    Some(b) if h[(row, j)].abs() >= h[(row, b)].abs() => Some(b),
                    _ => Some(j),
                };
            }
            let Some(b) = best else { break };
            if b != c {
                h.swap_cols(c, b);
            }
            let mut done = true;
            for j in c + 1..n {
                if h[(row, j)].is_zero() {
                    continue;
                }
                let q = -(&h[(row, j)] / &h[(row, c)]);
                if !q.is_zero() {
                    h.add_col_multiple(j, c, &q);
                }
                if !h[(row, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(row, c)].is_zero() {
            continue; // no pivot in this row
        }
        if h[(row, c)].is_negative() {
            h.negate_col(c);
        }
        for j in 0..c {
            let q = h[(row, j)].div_floor(&h[(row, c)]);
            if !q.is_zero() {
                h.add_col_multiple(j, c, &(-q));
            }
        }
        c += 1;
    }
    h.leading_columns(c)
}

/// Whether `v` lies in the integer span of `vectors`.
///
/// Errors when any vector length differs from `v`.
pub fn lattice_member(vectors: &[IntVector], v: &IntVector) -> Result<bool, AlgebraError> {
    let m = v.len();
    for w in vectors {
        if w.len() != m {
            return Err(AlgebraError::DimensionMismatch {
                expected: m,
                got: w.len(),
            });
        }
    }
    let h = hermite_normal_form(&IntMatrix::from_columns(m, vectors));
    let mut rem = v.clone();
    for j in 0..h.cols() {
        let pr = (0..m)
            .find(|&i| !h[(i, j)].is_zero())
            .expect("Hermite form has no zero columns");
        let (q, r) = rem[pr].div_rem(&h[(pr, j)]);
        if !r.is_zero() {
            return Ok(false);
        }
        if !q.is_zero() {
            for i in pr..m {
                let t = &q * &h[(i, j)];
                rem[i] -= t;
            }
        }
    }
    Ok(rem.is_zero())
}
