//! Matroids presented by their circuit supports.
//!
//! Fibre arrangements and complete principal truncations live on ground
//! sets with relabeled elements and may fail to be simple, so this module
//! works purely combinatorially: positions into an ordered ground set of
//! labels, subsets as bitmasks over positions.

use crate::lattice::LatticeData;
use crate::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitMatroid {
    /// Ground labels, ascending (labels are arbitrary identifiers).
    pub ground: Vec<usize>,
    /// Circuits as sorted label sets, in lexicographic order.
    pub circuits: Vec<Vec<usize>>,
    circuit_masks: Vec<u32>,
}

impl CircuitMatroid {
    pub fn new(ground: Vec<usize>, mut circuits: Vec<Vec<usize>>) -> Self {
        circuits.sort();
        let circuit_masks = circuits
            .iter()
            .map(|c| {
                c.iter()
                    .map(|l| {
                        ground
                            .iter()
                            .position(|g| g == l)
                            .expect("circuit label in ground set")
                    })
                    .fold(0u32, |m, p| m | (1 << p))
            })
            .collect();
        CircuitMatroid { ground, circuits, circuit_masks }
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.ground.len()) - 1
    }

    pub fn is_dependent(&self, mask: u32) -> bool {
        self.circuit_masks.iter().any(|&c| c & mask == c)
    }

    /// Greedy rank (valid by the matroid exchange property).
    pub fn rank_of(&self, mask: u32) -> usize {
        let mut acc = 0u32;
        let mut rank = 0;
        for p in 0..self.ground.len() {
            if mask >> p & 1 == 0 {
                continue;
            }
            let cand = acc | (1 << p);
            if !self.is_dependent(cand) {
                acc = cand;
                rank += 1;
            }
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.full_mask())
    }

    pub fn closure(&self, mask: u32) -> u32 {
        let r = self.rank_of(mask);
        let mut out = mask;
        for p in 0..self.ground.len() {
            if out >> p & 1 == 0 && self.rank_of(mask | (1 << p)) == r {
                out |= 1 << p;
            }
        }
        out
    }

    pub fn lattice(&self) -> LatticeData {
        LatticeData::build(self.ground.len(), |m| self.closure(m))
    }

    pub fn poincare(&self) -> UniPoly {
        self.lattice().poincare()
    }

    /// Count of dependent subsets of the ground set; degenerations of a
    /// matroid strictly increase this.
    pub fn dependent_set_count(&self) -> u64 {
        let n = self.ground.len();
        let mut count = 0u64;
        for mask in 0..(1u32 << n) {
            if self.is_dependent(mask) {
                count += 1;
            }
        }
        count
    }

    /// True when every dependent set of `self` is dependent in `other`
    /// (i.e. `other` is a weak-map degeneration of `self`).
    pub fn degenerates_to(&self, other: &CircuitMatroid) -> bool {
        debug_assert_eq!(self.ground, other.ground);
        self.circuit_masks.iter().all(|&c| other.is_dependent(c))
    }

    pub fn labels_of_mask(&self, mask: u32) -> Vec<usize> {
        (0..self.ground.len())
            .filter(|p| mask >> p & 1 == 1)
            .map(|p| self.ground[p])
            .collect()
    }

    pub fn mask_of_labels(&self, labels: &[usize]) -> Option<u32> {
        let mut mask = 0u32;
        for l in labels {
            mask |= 1 << self.ground.iter().position(|g| g == l)?;
        }
        Some(mask)
    }
}
