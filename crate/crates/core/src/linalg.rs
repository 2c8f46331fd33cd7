//! Fraction-free exact linear algebra over the rationals.
//!
//! The rank kernel scales rows to primitive integer vectors (rank is
//! invariant under row scaling) and runs Bareiss elimination so that all
//! intermediate values are integers of controlled size. Everything else
//! (reduced echelon form, kernels, coordinate solves) works directly over
//! `Rat` since those matrices stay small.

use crate::error::{ArrError, Result};
use crate::rational::{primitive_integer_vector, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Rank of the row span over the rationals, computed exactly.
pub fn exact_rank(rows: &[Vec<Rat>]) -> Result<usize> {
    if rows.is_empty() {
        return Ok(0);
    }
    let ncols = rows[0].len();
    for (i, r) in rows.iter().enumerate() {
        if r.len() != ncols {
            return Err(ArrError::DimensionMismatch(format!(
                "row 0 has {ncols} entries but row {i} has {}",
                r.len()
            )));
        }
    }
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| primitive_integer_vector(r)).collect();
    Ok(integer_rank(ints))
}

/// Bareiss fraction-free elimination; consumes the matrix.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        // pivot: smallest nonzero magnitude keeps entries small
        let mut pivot = None;
        for r in row..nrows {
            if !m[r][col].is_zero() {
                match pivot {
                    None => pivot = Some(r),
                    Some(p) => {
                        if m[r][col].magnitude() < m[p][col].magnitude() {
                            pivot = Some(r);
                        }
                    }
                }
            }
        }
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        for r in row + 1..nrows {
            for c in col + 1..ncols {
                let v = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over the rationals.
/// Returns (rref rows with zero rows dropped, pivot column indices).
pub fn rref(rows: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for c in col..ncols {
            let v = &m[row][c] / &inv;
            m[row][c] = v;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let v = &m[r][c] - &f * &m[row][c];
                    m[r][c] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

/// Basis of the right kernel {x : M x = 0}.
pub fn kernel_basis(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(rows);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    for &f in &free {
        let mut v = vec![Rat::zero(); ncols];
        v[f] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[i][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Expresses `target` as a combination of `basis` rows; `None` if outside the span.
pub fn express_in_basis(basis: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    // Solve cᵀ B = target by RREF of [Bᵀ | targetᵀ].
    let k = basis.len();
    let n = target.len();
    let aug: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&k) {
        return None; // inconsistent
    }
    let mut coeffs = vec![Rat::zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        coeffs[p] = r[i][k].clone();
    }
    Some(coeffs)
}

/// Row-space membership test.
pub fn in_row_span(rows: &[Vec<Rat>], target: &[Rat]) -> bool {
    let base = exact_rank(rows).expect("consistent dimensions");
    let mut all = rows.to_vec();
    all.push(target.to_vec());
    exact_rank(&all).expect("consistent dimensions") == base
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_from_i64 as q, rat_from_pair};

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rat>> {
        data.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn empty_span_has_rank_zero() {
        assert_eq!(exact_rank(&[]).unwrap(), 0);
    }

    #[test]
    fn identity_rank() {
        let m = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(exact_rank(&m).unwrap(), 3);
    }

    #[test]
    fn dependent_row_drops_rank() {
        // third row is the sum of the first two; a 2x2 minor, e.g. on
        // columns {0,1} of rows {0,1}, is 1 while every 3x3 minor vanishes
        let m = rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 2, 1]]);
        assert_eq!(exact_rank(&m).unwrap(), 2);
    }

    #[test]
    fn ragged_input_is_an_error() {
        let m = vec![vec![q(1), q(0)], vec![q(1)]];
        assert!(matches!(exact_rank(&m), Err(ArrError::DimensionMismatch(_))));
    }

    #[test]
    fn rank_invariant_under_scaling_and_permutation() {
        let m = rows(&[&[2, 4, 6], &[1, 1, 1], &[0, 1, 2]]);
        let mut scaled = m.clone();
        for row in &mut scaled {
            for v in row.iter_mut() {
                *v *= rat_from_pair(-3, 7);
            }
        }
        scaled.reverse();
        assert_eq!(exact_rank(&m).unwrap(), exact_rank(&scaled).unwrap());
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let ker = kernel_basis(&m, 3);
        assert_eq!(ker.len(), 1);
        // kernel vector must annihilate both rows
        for row in &m {
            let dot: Rat = row.iter().zip(&ker[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn express_in_basis_solves_exactly() {
        let basis = rows(&[&[1, 0, 1], &[0, 1, -1]]);
        let target: Vec<Rat> = vec![q(2), q(3), q(-1)];
        let c = express_in_basis(&basis, &target).unwrap();
        assert_eq!(c, vec![q(2), q(3)]);
        assert!(express_in_basis(&basis, &[q(0), q(0), q(1)]).is_none());
    }
}
