//! Exact linear algebra over the scalar field Q(s).
//!
//! * Gaussian elimination with exact arithmetic; no numerics anywhere.
//! * [`elements_matrix`] lays out algebra elements as coefficient rows on
//!   the union of their monomial supports, so independence questions are
//!   rank questions.

use crate::algebra::{AlgElt, Monomial};
use crate::scalars::Scalar;
use std::collections::BTreeSet;

/// Rank of a matrix given as rows. Rows may be empty; all rows must have
/// equal width.
///
/// Panics if the rows have inconsistent widths.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    assert!(
        rows.iter().all(|r| r.len() == width),
        "ragged matrix passed to rank"
    );
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].clone().inv();
        for i in (r + 1)..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] * &inv;
            for j in col..width {
                let delta = &rows[r][j] * &factor;
                let val = &rows[i][j] - &delta;
                rows[i][j] = val;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Coefficient matrix of a family of elements: one row per element,
/// columns indexed by the union of all monomial supports in canonical
/// order.
pub fn elements_matrix(elts: &[AlgElt]) -> Vec<Vec<Scalar>> {
    let support: BTreeSet<Monomial> = elts
        .iter()
        .flat_map(|e| e.terms().map(|(m, _)| *m))
        .collect();
    let cols: Vec<Monomial> = support.into_iter().collect();
    elts.iter()
        .map(|e| cols.iter().map(|m| e.coeff(m)).collect())
        .collect()
}

/// True if the elements are linearly independent over the scalar field.
/// The zero element alone (or any family containing zero) is dependent.
pub fn linearly_independent(elts: &[AlgElt]) -> bool {
    if elts.iter().any(|e| e.is_zero()) {
        return false;
    }
    rank(elements_matrix(elts)) == elts.len()
}

// ---- tests ----
