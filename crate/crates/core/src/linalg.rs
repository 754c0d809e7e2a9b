//! Dense Gaussian elimination over a finite field.

use crate::ff::{Field, FieldElement};

/// Solution set of a linear system: `particular + span(kernel)`.
#[derive(Debug, Clone)]
pub(crate) struct Solution {
    pub particular: Vec<FieldElement>,
    pub kernel: Vec<Vec<FieldElement>>,
}

/// Solves `sum_j x_j * columns[j] = rhs`. Returns `None` when inconsistent.
///
/// Pivots are chosen as the first nonzero entry in each column, so the
/// result is deterministic.
pub(crate) fn solve(field: &Field, columns: &[Vec<FieldElement>], rhs: &[FieldElement]) -> Option<Solution> {
    let rows = rhs.len();
    let cols = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == rows));

    let mut m: Vec<Vec<FieldElement>> = (0..rows)
        .map(|r| {
            let mut row: Vec<FieldElement> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(found) = (next..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next, found);
        let inv = m[next][col].inv().expect("pivot is nonzero");
        for v in m[next].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = m[next].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = &*x - &(&factor * y);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows {
            break;
        }
    }

    if m[next..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }

    let mut particular = vec![field.zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][cols].clone();
    }

    let kernel = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&m[r][free];
            }
            v
        })
        .collect();

    Some(Solution { particular, kernel })
}
