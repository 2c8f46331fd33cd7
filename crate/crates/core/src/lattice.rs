//! Lattices of flats, Möbius functions, modularity, supersolvability.
//!
//! A generic closure-driven builder serves both realized arrangements
//! (linear-algebra closure) and abstract matroids given by circuits
//! (combinatorial closure).

use crate::arrangement::{indices_of, Arrangement};
use crate::error::{ArrError, Result};
use crate::linalg::{exact_rank, kernel_basis};
use crate::rational::Rat;
use crate::unipoly::UniPoly;
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::Mutex;

/// A single flat: its index set (as a bitmask), matroid rank, and, for
/// realized arrangements, a basis of the subspace X (dim = ambient - rank).
#[derive(Debug, Clone)]
pub struct Flat {
    pub mask: u32,
    pub rank: usize,
}

/// Closure-agnostic lattice of flats with Möbius values.
#[derive(Debug, Clone)]
pub struct LatticeData {
    pub flats: Vec<Flat>,
    pub mobius: Vec<i64>,
    index: HashMap<u32, usize>,
    by_rank: Vec<Vec<usize>>,
    top_rank: usize,
}

impl LatticeData {
    /// Builds all flats by saturating the closure operator upward from
    /// cl(empty), then computes Möbius values by downward recursion.
    pub fn build(n: usize, closure: impl Fn(u32) -> u32) -> LatticeData {
        let bottom = closure(0);
        let mut flats = vec![Flat { mask: bottom, rank: 0 }];
        let mut index = HashMap::from([(bottom, 0usize)]);
        let mut frontier = vec![0usize];
        let mut rank = 0usize;
        while !frontier.is_empty() {
            rank += 1;
            let mut next = Vec::new();
            for &fi in &frontier {
                let mask = flats[fi].mask;
                for i in 0..n {
                    if mask >> i & 1 == 1 {
                        continue;
                    }
                    let cl = closure(mask | (1 << i));
                    if !index.contains_key(&cl) {
                        index.insert(cl, flats.len());
                        next.push(flats.len());
                        flats.push(Flat { mask: cl, rank });
                    }
                }
            }
            frontier = next;
        }
        let top_rank = flats.last().map_or(0, |f| f.rank);
        // sort flats by (rank, mask) for determinism everywhere downstream
        let mut order: Vec<usize> = (0..flats.len()).collect();
        order.sort_by_key(|&i| (flats[i].rank, flats[i].mask));
        let flats: Vec<Flat> = order.iter().map(|&i| flats[i].clone()).collect();
        let index: HashMap<u32, usize> = flats.iter().enumerate().map(|(i, f)| (f.mask, i)).collect();
        let mut by_rank = vec![Vec::new(); top_rank + 1];
        for (i, f) in flats.iter().enumerate() {
            by_rank[f.rank].push(i);
        }
        let mut mobius = vec![0i64; flats.len()];
        for i in 0..flats.len() {
            if flats[i].rank == 0 {
                mobius[i] = 1;
                continue;
            }
            let mut acc = 0i64;
            for j in 0..flats.len() {
                if j != i && flats[j].mask & flats[i].mask == flats[j].mask {
                    acc += mobius[j];
                }
            }
            mobius[i] = -acc;
        }
        LatticeData { flats, mobius, index, by_rank, top_rank }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn top_rank(&self) -> usize {
        self.top_rank
    }

    pub fn flat_index(&self, mask: u32) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    pub fn of_rank(&self, rank: usize) -> &[usize] {
        self.by_rank.get(rank).map_or(&[], |v| v)
    }

    pub fn rank_of_flat(&self, i: usize) -> usize {
        self.flats[i].rank
    }

    /// Meet: intersection of index sets (always a flat).
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.flat_index(self.flats[a].mask & self.flats[b].mask)
            .expect("intersection of flats is a flat")
    }

    /// Poincaré polynomial sum_X |mu(X)| t^rank(X); Möbius signs alternate
    /// with rank in a geometric lattice, so coefficients are nonnegative.
    pub fn poincare(&self) -> UniPoly {
        let mut coeffs = vec![Rat::from_integer(BigInt::from(0)); self.top_rank + 1];
        for (i, f) in self.flats.iter().enumerate() {
            let signed = if f.rank % 2 == 0 { self.mobius[i] } else { -self.mobius[i] };
            coeffs[f.rank] += Rat::from_integer(BigInt::from(signed));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

/// Intersection lattice of a realized arrangement, with subspace bases and
/// memoized modularity verdicts.
#[derive(Debug)]
pub struct FlatLattice {
    pub data: LatticeData,
    subspace_bases: Vec<Vec<Vec<Rat>>>,
    modular_cache: Mutex<HashMap<usize, bool>>,
}

impl Clone for FlatLattice {
    fn clone(&self) -> Self {
        FlatLattice {
            data: self.data.clone(),
            subspace_bases: self.subspace_bases.clone(),
            modular_cache: Mutex::new(HashMap::new()),
        }
    }
}

/// Outcome of the three independent modularity criteria for one flat.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularityCertificates {
    /// X + Y is a member of the lattice for every flat Y.
    pub subspace_sum: bool,
    /// rank(X) + rank(Y) = rank(X v Y) + rank(X ^ Y) for every flat Y.
    pub rank_identity: bool,
    /// Brylawski's short-circuit axiom over all circuits.
    pub short_circuit: bool,
}

impl FlatLattice {
    pub fn build(arr: &Arrangement) -> FlatLattice {
        let data = LatticeData::build(arr.n(), |m| arr.closure(m));
        let subspace_bases = data
            .flats
            .iter()
            .map(|f| {
                let rows: Vec<Vec<Rat>> = indices_of(f.mask)
                    .into_iter()
                    .map(|i| arr.row(i).to_vec())
                    .collect();
                kernel_basis(&rows, arr.rank())
            })
            .collect();
        FlatLattice { data, subspace_bases, modular_cache: Mutex::new(HashMap::new()) }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.data.flats
    }

    pub fn mobius(&self, i: usize) -> i64 {
        self.data.mobius[i]
    }

    pub fn poincare(&self) -> UniPoly {
        self.data.poincare()
    }

    /// Basis of the subspace X (vectors in the ambient space).
    pub fn subspace_basis(&self, i: usize) -> &[Vec<Rat>] {
        &self.subspace_bases[i]
    }

    /// Proper flats: rank strictly between 0 and the top rank.
    pub fn proper_flats(&self) -> Vec<usize> {
        (0..self.data.len())
            .filter(|&i| {
                let r = self.data.flats[i].rank;
                r >= 1 && r < self.data.top_rank()
            })
            .collect()
    }

    /// Evaluates all three modularity criteria; errors if they disagree
    /// (that would be an implementation bug, not a property of the input).
    pub fn modularity_certificates(
        &self,
        arr: &Arrangement,
        flat: usize,
    ) -> Result<(bool, ModularityCertificates)> {
        let certs = ModularityCertificates {
            subspace_sum: self.criterion_subspace_sum(arr, flat)?,
            rank_identity: self.criterion_rank_identity(flat),
            short_circuit: self.criterion_short_circuit(arr, flat),
        };
        if certs.subspace_sum != certs.rank_identity || certs.rank_identity != certs.short_circuit {
            return Err(ArrError::InvariantViolation(format!(
                "modularity criteria disagree on flat {:?}: {certs:?}",
                indices_of(self.data.flats[flat].mask)
            )));
        }
        Ok((certs.subspace_sum, certs))
    }

    /// Memoized modularity verdict.
    pub fn is_modular(&self, arr: &Arrangement, flat: usize) -> Result<bool> {
        if let Some(&v) = self.modular_cache.lock().unwrap().get(&flat) {
            return Ok(v);
        }
        let (v, _) = self.modularity_certificates(arr, flat)?;
        self.modular_cache.lock().unwrap().insert(flat, v);
        Ok(v)
    }

    /// (i) For every flat Y, the subspace X + Y lies in the lattice: its
    /// dimension must match the subspace of the meet flat X ^ Y.
    fn criterion_subspace_sum(&self, arr: &Arrangement, x: usize) -> Result<bool> {
        let l = arr.rank();
        for y in 0..self.data.len() {
            let mut stacked: Vec<Vec<Rat>> = self.subspace_bases[x].clone();
            stacked.extend(self.subspace_bases[y].iter().cloned());
            let dim_sum = exact_rank(&stacked)?;
            let meet = self.data.meet(x, y);
            if dim_sum != l - self.data.flats[meet].rank {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// (ii) The modular rank identity against every flat.
    fn criterion_rank_identity(&self, x: usize) -> bool {
        let fx = &self.data.flats[x];
        for y in 0..self.data.len() {
            let fy = &self.data.flats[y];
            let meet = self.data.flats[self.data.meet(x, y)].rank;
            let join_mask = fx.mask | fy.mask;
            // the join is the closure of the union; ranks are stored, so
            // find the smallest flat containing the union
            let join = self
                .data
                .flats
                .iter()
                .filter(|f| f.mask & join_mask == join_mask)
                .map(|f| f.rank)
                .min()
                .expect("top flat contains every union");
            if fx.rank + fy.rank != join + meet {
                return false;
            }
        }
        true
    }

    /// (iii) Brylawski's short-circuit axiom: every circuit meeting both
    /// [X] and its complement can be shortened into [X].
    fn criterion_short_circuit(&self, arr: &Arrangement, x: usize) -> bool {
        let xmask = self.data.flats[x].mask;
        for c in arr.circuits() {
            let cmask = c.mask();
            let outside = cmask & !xmask;
            if outside == 0 || outside == cmask {
                continue;
            }
            let out_size = outside.count_ones() as usize;
            let found = indices_of(xmask).into_iter().any(|q| {
                let m = outside | (1 << q);
                arr.rank_of(m) < out_size + 1
            });
            if !found {
                return false;
            }
        }
        true
    }

    /// Searches depth-first for a maximal chain of modular flats
    /// X_1 < ... < X_l with rank(X_i) = i. Returns the chain (as flat
    /// indices) and the exponents e_i = n_{X_i} - n_{X_{i-1}}.
    pub fn supersolvable_chain(&self, arr: &Arrangement) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        let l = self.data.top_rank();
        let bottom = self.data.of_rank(0)[0];
        let mut chain = Vec::new();
        if self.chain_dfs(arr, bottom, l, &mut chain)? {
            let mut exponents = Vec::with_capacity(l);
            let mut prev = 0usize;
            for &fi in &chain {
                let count = self.data.flats[fi].mask.count_ones() as usize;
                exponents.push(count - prev);
                prev = count;
            }
            // Poincaré factorization is forced: pi = prod (1 + e_i t)
            let mut expected = UniPoly::one();
            for &e in &exponents {
                expected = expected.mul(&UniPoly::one_plus_ct(e as i64));
            }
            if expected != self.poincare() {
                return Err(ArrError::InvariantViolation(
                    "modular chain exponents do not factor the Poincaré polynomial".into(),
                ));
            }
            Ok(Some((chain, exponents)))
        } else {
            Ok(None)
        }
    }

    fn chain_dfs(
        &self,
        arr: &Arrangement,
        current: usize,
        l: usize,
        chain: &mut Vec<usize>,
    ) -> Result<bool> {
        let cur_rank = self.data.flats[current].rank;
        if cur_rank == l {
            return Ok(true);
        }
        let cur_mask = self.data.flats[current].mask;
        for &cand in self.data.of_rank(cur_rank + 1) {
            let cmask = self.data.flats[cand].mask;
            if cur_mask & cmask != cur_mask {
                continue;
            }
            if !self.is_modular(arr, cand)? {
                continue;
            }
            chain.push(cand);
            if self.chain_dfs(arr, cand, l, chain)? {
                return Ok(true);
            }
            chain.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn boolean_rank2_lattice() {
        let a = catalog::catalog("boolean:2").unwrap();
        let lat = a.lattice();
        assert_eq!(lat.flats().len(), 4);
        let top = lat.data.of_rank(2)[0];
        assert_eq!(lat.mobius(top), 1);
    }

    #[test]
    fn braid_a3_lattice_counts() {
        let a = catalog::catalog("A3").unwrap();
        let lat = a.lattice();
        let rank2: Vec<_> = lat.data.of_rank(2).to_vec();
        assert_eq!(rank2.len(), 7);
        let sizes: Vec<usize> = rank2
            .iter()
            .map(|&i| lat.flats()[i].mask.count_ones() as usize)
            .collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 4);
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 3);
    }

    #[test]
    fn braid_a3_poincare_factors() {
        let a = catalog::catalog("A3").unwrap();
        let expected = UniPoly::one_plus_ct(1)
            .mul(&UniPoly::one_plus_ct(2))
            .mul(&UniPoly::one_plus_ct(3));
        assert_eq!(a.poincare(), expected);
        assert_eq!(
            a.poincare_projective().unwrap(),
            UniPoly::one_plus_ct(2).mul(&UniPoly::one_plus_ct(3))
        );
    }

    #[test]
    fn boolean_poincare() {
        let a = catalog::catalog("boolean:3").unwrap();
        assert_eq!(a.poincare(), UniPoly::one_plus_ct(1).pow(3));
    }

    #[test]
    fn x3_center_flat_indices() {
        // in X3 the flat x = y = 0 collects exactly the hyperplanes
        // x, y, x+y (positions 1, 2, 4 in the defining order)
        let a = catalog::catalog("X3").unwrap();
        let lat = a.lattice();
        let mask = a.closure(crate::arrangement::mask_of(&[0, 1]));
        assert_eq!(indices_of(mask), vec![0, 1, 3]);
        assert!(lat.data.flat_index(mask).is_some());
    }

    #[test]
    fn atoms_are_modular() {
        for name in ["A3", "X3", "X2", "nonFano"] {
            let a = catalog::catalog(name).unwrap();
            let lat = a.lattice();
            for &i in lat.data.of_rank(1) {
                assert!(lat.is_modular(&a, i).unwrap(), "atom of {name}");
            }
        }
    }

    #[test]
    fn modularity_of_the_x_equals_y_equals_zero_flat() {
        // modular in the braid arrangement, non-modular in X3
        let a3 = catalog::catalog("A3").unwrap();
        let xm = a3.closure(crate::arrangement::mask_of(&[0, 1]));
        let fi = a3.lattice().data.flat_index(xm).unwrap();
        assert!(a3.lattice().is_modular(&a3, fi).unwrap());

        let x3 = catalog::catalog("X3").unwrap();
        let xm = x3.closure(crate::arrangement::mask_of(&[0, 1]));
        let fi = x3.lattice().data.flat_index(xm).unwrap();
        assert!(!x3.lattice().is_modular(&x3, fi).unwrap());
    }

    #[test]
    fn supersolvable_chains() {
        let boolean = catalog::catalog("boolean:3").unwrap();
        let (_, exps) = boolean.lattice().supersolvable_chain(&boolean).unwrap().unwrap();
        assert_eq!(exps, vec![1, 1, 1]);

        let a3 = catalog::catalog("A3").unwrap();
        let (chain, exps) = a3.lattice().supersolvable_chain(&a3).unwrap().unwrap();
        assert_eq!(exps, vec![1, 2, 3]);
        assert_eq!(chain.len(), 3);

        let x2 = catalog::catalog("X2").unwrap();
        assert!(x2.lattice().supersolvable_chain(&x2).unwrap().is_none());
    }
}
