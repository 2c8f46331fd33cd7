//! Central essential hyperplane arrangements as exact rational matrices.
//!
//! Row i of the matrix is the linear functional f_i cutting out hyperplane
//! H_i. Hyperplane indices are 0-based internally; display and JSON use
//! 1-based labels. Subsets of the ground set are bitmasks (`u32`), which
//! bounds the supported size to 16 hyperplanes — enough for every
//! exhaustive sweep this crate performs.

use crate::error::{ArrError, Result};
use crate::lattice::FlatLattice;
use crate::linalg::{exact_rank, integer_rank, kernel_basis, rref};
use crate::rational::{primitive_integer_vector, Rat};
use crate::unipoly::UniPoly;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub const MAX_HYPERPLANES: usize = 16;

/// A minimal dependent set together with its normalized dependency:
/// sum of coeffs[k] * f_{support[k]} = 0, coefficient 1 at min(support).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub support: Vec<usize>,
    pub coeffs: Vec<Rat>,
}

impl Circuit {
    pub fn mask(&self) -> u32 {
        mask_of(&self.support)
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Coefficient attached to ground element `i`, zero off the support.
    pub fn coeff_at(&self, i: usize) -> Rat {
        match self.support.iter().position(|&s| s == i) {
            Some(k) => self.coeffs[k].clone(),
            None => Rat::zero(),
        }
    }
}

pub fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().fold(0u32, |m, &i| m | (1 << i))
}

pub fn indices_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

#[derive(Debug)]
pub struct Arrangement {
    name: Option<String>,
    matrix: Vec<Vec<Rat>>,
    int_rows: Vec<Vec<BigInt>>,
    dim: usize,
    rank_cache: Mutex<HashMap<u32, usize>>,
    closure_cache: Mutex<HashMap<u32, u32>>,
    circuits_cache: OnceLock<Vec<Circuit>>,
    lattice_cache: OnceLock<FlatLattice>,
}

impl Clone for Arrangement {
    fn clone(&self) -> Self {
        Arrangement {
            name: self.name.clone(),
            matrix: self.matrix.clone(),
            int_rows: self.int_rows.clone(),
            dim: self.dim,
            rank_cache: Mutex::new(HashMap::new()),
            closure_cache: Mutex::new(HashMap::new()),
            circuits_cache: OnceLock::new(),
            lattice_cache: OnceLock::new(),
        }
    }
}

impl Arrangement {
    /// Validates and builds: rows nonzero, pairwise non-proportional,
    /// jointly of full column rank (central essential, simple matroid).
    pub fn new(matrix: Vec<Vec<Rat>>, name: Option<String>) -> Result<Self> {
        if matrix.is_empty() {
            return Err(ArrError::Precondition("empty arrangement".into()));
        }
        if matrix.len() > MAX_HYPERPLANES {
            return Err(ArrError::Precondition(format!(
                "at most {MAX_HYPERPLANES} hyperplanes supported, got {}",
                matrix.len()
            )));
        }
        let dim = matrix[0].len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != dim {
                return Err(ArrError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            if row.iter().all(|c| c.is_zero()) {
                return Err(ArrError::ZeroRow(i));
            }
        }
        let int_rows: Vec<Vec<BigInt>> =
            matrix.iter().map(|r| primitive_integer_vector(r)).collect();
        for i in 0..matrix.len() {
            for j in i + 1..matrix.len() {
                if int_rows[i] == int_rows[j] {
                    return Err(ArrError::ProportionalRows(i, j));
                }
            }
        }
        let rank = exact_rank(&matrix)?;
        if rank != dim {
            return Err(ArrError::NotEssential { rank, dim });
        }
        Ok(Arrangement {
            name,
            matrix,
            int_rows,
            dim,
            rank_cache: Mutex::new(HashMap::new()),
            closure_cache: Mutex::new(HashMap::new()),
            circuits_cache: OnceLock::new(),
            lattice_cache: OnceLock::new(),
        })
    }

    pub fn from_i64(matrix: &[&[i64]], name: Option<String>) -> Result<Self> {
        let rows = matrix
            .iter()
            .map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect())
            .collect();
        Arrangement::new(rows, name)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    /// Number of hyperplanes.
    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    /// Rank = ambient dimension (the arrangement is essential).
    pub fn rank(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.matrix[i]
    }

    pub fn full_mask(&self) -> u32 {
        if self.n() == 32 {
            u32::MAX
        } else {
            (1u32 << self.n()) - 1
        }
    }

    /// Rank of the subarrangement indexed by `mask`, memoized.
    pub fn rank_of(&self, mask: u32) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&r) = self.rank_cache.lock().unwrap().get(&mask) {
            return r;
        }
        let rows: Vec<Vec<BigInt>> = indices_of(mask)
            .into_iter()
            .map(|i| self.int_rows[i].clone())
            .collect();
        let r = integer_rank(rows);
        self.rank_cache.lock().unwrap().insert(mask, r);
        r
    }

    pub fn is_dependent(&self, mask: u32) -> bool {
        self.rank_of(mask) < mask.count_ones() as usize
    }

    /// Matroid closure of an index set: all i with f_i in the row span.
    pub fn closure(&self, mask: u32) -> u32 {
        if let Some(&c) = self.closure_cache.lock().unwrap().get(&mask) {
            return c;
        }
        let rows: Vec<Vec<Rat>> = indices_of(mask).into_iter().map(|i| self.matrix[i].clone()).collect();
        let (basis, _) = rref(&rows);
        let mut out = mask;
        for i in 0..self.n() {
            if out >> i & 1 == 0 && crate::linalg::express_in_basis(&basis, &self.matrix[i]).is_some() {
                out |= 1 << i;
            }
        }
        self.closure_cache.lock().unwrap().insert(mask, out);
        out
    }

    /// All circuits, ordered lexicographically on supports.
    pub fn circuits(&self) -> &[Circuit] {
        self.circuits_cache
            .get_or_init(|| circuits_of_rows(&self.matrix, &self.int_rows))
    }

    /// The intersection lattice, built on first use.
    pub fn lattice(&self) -> &FlatLattice {
        self.lattice_cache.get_or_init(|| FlatLattice::build(self))
    }

    /// Poincaré polynomial of the arrangement.
    pub fn poincare(&self) -> UniPoly {
        self.lattice().poincare()
    }

    /// Poincaré polynomial of the projectivized arrangement, pi/(1+t).
    /// Exact division always succeeds for a central arrangement.
    pub fn poincare_projective(&self) -> Result<UniPoly> {
        self.poincare()
            .div_exact(&UniPoly::from_i64(&[1, 1]))
            .ok_or_else(|| {
                ArrError::InvariantViolation(
                    "Poincaré polynomial of a central arrangement must be divisible by 1+t".into(),
                )
            })
    }

    /// Subarrangement on a flat, realized in the span of its functionals
    /// (a rank-rho(X) arrangement of n_X hyperplanes).
    pub fn restrict(&self, flat_mask: u32) -> Result<Arrangement> {
        if flat_mask == 0 {
            return Err(ArrError::EmptyRestriction);
        }
        let idx = indices_of(flat_mask);
        let rows: Vec<Vec<Rat>> = idx.iter().map(|&i| self.matrix[i].clone()).collect();
        let reduced = essentialize_rows(&rows);
        let name = self
            .name
            .as_ref()
            .map(|n| format!("{n}|{{{}}}", idx.iter().map(|i| i + 1).join(",")));
        Arrangement::new(reduced, name)
    }
}

/// Rewrites rows in a basis of their common span, dropping the common
/// kernel. The result has full column rank.
pub fn essentialize_rows(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let (basis, _) = rref(rows);
    rows.iter()
        .map(|r| {
            crate::linalg::express_in_basis(&basis, r)
                .expect("row lies in the span of the row space basis")
        })
        .collect()
}

/// Circuits of an arbitrary list of nonzero vectors (parallel vectors give
/// two-element circuits; used for fibre arrangements, which may degenerate).
pub fn circuits_of_rows(rows: &[Vec<Rat>], int_rows: &[Vec<BigInt>]) -> Vec<Circuit> {
    let n = rows.len();
    let total_rank = integer_rank(int_rows.to_vec());
    let mut circuits: Vec<Circuit> = Vec::new();
    let mut circuit_masks: Vec<u32> = Vec::new();
    for size in 2..=total_rank + 1 {
        if size > n {
            break;
        }
        'subset: for combo in (0..n).combinations(size) {
            let mask = mask_of(&combo);
            for &cm in &circuit_masks {
                if cm & mask == cm {
                    continue 'subset;
                }
            }
            let sub: Vec<Vec<BigInt>> = combo.iter().map(|&i| int_rows[i].clone()).collect();
            let r = integer_rank(sub);
            if r < size {
                debug_assert_eq!(r, size - 1, "proper subsets are independent");
                let coeffs = dependency_coefficients(rows, &combo);
                circuit_masks.push(mask);
                circuits.push(Circuit { support: combo, coeffs });
            }
        }
    }
    circuits.sort_by(|a, b| a.support.cmp(&b.support));
    circuits
}

/// The (unique up to scale) vector c with sum c_k f_{support[k]} = 0,
/// normalized so the coefficient at the least support element is 1.
fn dependency_coefficients(rows: &[Vec<Rat>], support: &[usize]) -> Vec<Rat> {
    let dim = rows[support[0]].len();
    // kernel of the dim x |support| matrix whose columns are the rows
    let transpose: Vec<Vec<Rat>> = (0..dim)
        .map(|j| support.iter().map(|&i| rows[i][j].clone()).collect())
        .collect();
    let kernel = kernel_basis(&transpose, support.len());
    assert_eq!(kernel.len(), 1, "a circuit has a one-dimensional dependency space");
    let mut coeffs = kernel.into_iter().next().unwrap();
    let lead = coeffs[0].clone();
    assert!(!lead.is_zero(), "circuit minimality forces full support");
    for c in &mut coeffs {
        *c = &*c / &lead;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_from_i64 as q;

    pub(crate) fn boolean(n: usize) -> Arrangement {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
            .collect();
        Arrangement::new(rows, Some(format!("boolean:{n}"))).unwrap()
    }

    fn three_concurrent_lines() -> Arrangement {
        Arrangement::from_i64(&[&[1, 0], &[0, 1], &[1, 1]], None).unwrap()
    }

    #[test]
    fn validation_rejects_bad_input() {
        assert!(matches!(
            Arrangement::from_i64(&[&[1, 0], &[0, 0]], None),
            Err(ArrError::ZeroRow(1))
        ));
        assert!(matches!(
            Arrangement::from_i64(&[&[1, 0], &[2, 0]], None),
            Err(ArrError::ProportionalRows(0, 1))
        ));
        assert!(matches!(
            Arrangement::from_i64(&[&[1, 0, 0], &[0, 1, 0]], None),
            Err(ArrError::NotEssential { rank: 2, dim: 3 })
        ));
    }

    #[test]
    fn boolean_has_no_circuits() {
        assert!(boolean(4).circuits().is_empty());
    }

    #[test]
    fn concurrent_lines_have_one_circuit() {
        let a = three_concurrent_lines();
        let c = a.circuits();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].support, vec![0, 1, 2]);
        assert_eq!(c[0].coeffs, vec![q(1), q(1), q(-1)]);
    }

    #[test]
    fn closure_of_two_concurrent_lines_is_all_three() {
        let a = three_concurrent_lines();
        assert_eq!(a.closure(0b011), 0b111);
        assert_eq!(a.closure(0b000), 0);
    }

    #[test]
    fn restriction_to_single_hyperplane() {
        let a = three_concurrent_lines();
        let r = a.restrict(0b001).unwrap();
        assert_eq!(r.n(), 1);
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn essentialize_drops_common_kernel() {
        // graphic rows of a path on 3 vertices, rank 2 in ambient dim 3
        let rows = vec![
            vec![q(1), q(-1), q(0)],
            vec![q(0), q(1), q(-1)],
        ];
        let e = essentialize_rows(&rows);
        assert_eq!(e[0].len(), 2);
        assert_eq!(exact_rank(&e).unwrap(), 2);
    }
}
