//! `Φ₊` and `Φ₋` on sets of simples, and derived equivalence for the torsion
//! pairs `(filt 𝒮, 𝒮^⊥)` (hereditary) and `(^⊥𝒮, filt 𝒮)` (cohereditary).
//!
//! For a set `S` of vertices the hereditary pair induces a derived
//! equivalence iff `Φ₊(Sᶜ) ⊆ Sᶜ`, and the cohereditary pair iff
//! `Φ₋(Sᶜ) ⊆ Sᶜ`. In path language: every nonzero path starting (resp.
//! ending) outside `S` prolongs on the right (resp. left) to a nonzero path
//! ending (resp. starting) outside `S`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use thiserror::Error;

use crate::algebra::AlgebraPresentation;
use crate::quiver::{Path, Vertex};
pub use crate::sets::SimpleSet;

/// Largest vertex count for exhaustive subset enumeration by default.
pub const DEFAULT_SUBSET_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PhiError {
    #[error("{n} vertices exceed the subset enumeration cap of {cap}")]
    SubsetCapExceeded { n: usize, cap: usize },
    #[error("the Nakayama permutation is not defined for this algebra")]
    PermutationUndefined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    /// `(filt 𝒮, 𝒮^⊥)`.
    Hereditary,
    /// `(^⊥𝒮, filt 𝒮)`.
    Cohereditary,
}

impl PairKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PairKind::Hereditary => "hereditary",
            PairKind::Cohereditary => "cohereditary",
        }
    }
}

/// Per-vertex images of `Φ₊` and `Φ₋` as bit masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTable {
    n: usize,
    plus: Vec<u64>,
    minus: Vec<u64>,
}

impl PhiTable {
    pub fn new(alg: &AlgebraPresentation) -> Self {
        let n = alg.vertex_count();
        let mut plus = vec![0u64; n];
        let mut minus = vec![0u64; n];
        for (i, p) in alg.nonzero_paths().iter().enumerate() {
            if alg.is_tail_maximal(i) {
                plus[p.source()] |= 1 << p.target();
            }
            if alg.is_head_maximal(i) {
                minus[p.target()] |= 1 << p.source();
            }
        }
        PhiTable { n, plus, minus }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn plus(&self, s: SimpleSet) -> SimpleSet {
        SimpleSet::from_bits(self.n, union_of(&self.plus, s.bits()))
    }

    pub fn minus(&self, s: SimpleSet) -> SimpleSet {
        SimpleSet::from_bits(self.n, union_of(&self.minus, s.bits()))
    }

    fn table(&self, kind: PairKind) -> &[u64] {
        match kind {
            PairKind::Hereditary => &self.plus,
            PairKind::Cohereditary => &self.minus,
        }
    }

    /// The verdict without a witness.
    pub fn induces_de(&self, kind: PairKind, s: SimpleSet) -> bool {
        let c = s.complement().bits();
        union_of(self.table(kind), c) & !c == 0
    }
}

fn union_of(table: &[u64], bits: u64) -> u64 {
    let mut acc = 0;
    let mut b = bits;
    while b != 0 {
        acc |= table[b.trailing_zeros() as usize];
        b &= b - 1;
    }
    acc
}

pub fn phi_plus(alg: &AlgebraPresentation, s: SimpleSet) -> SimpleSet {
    PhiTable::new(alg).plus(s)
}

pub fn phi_minus(alg: &AlgebraPresentation, s: SimpleSet) -> SimpleSet {
    PhiTable::new(alg).minus(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HereditaryPairVerdict {
    pub kind: PairKind,
    pub set: SimpleSet,
    pub induces_de: bool,
    /// The least nonzero path, by (length, arrow ids), starting (ending) in
    /// `Sᶜ` with no nonzero prolongation ending (starting) in `Sᶜ`.
    pub witness: Option<Path>,
}

pub fn hereditary_induces_de(alg: &AlgebraPresentation, s: SimpleSet) -> HereditaryPairVerdict {
    verdict(alg, PairKind::Hereditary, s)
}

pub fn cohereditary_induces_de(alg: &AlgebraPresentation, s: SimpleSet) -> HereditaryPairVerdict {
    verdict(alg, PairKind::Cohereditary, s)
}

pub fn verdict(alg: &AlgebraPresentation, kind: PairKind, s: SimpleSet) -> HereditaryPairVerdict {
    let induces_de = PhiTable::new(alg).induces_de(kind, s);
    let witness = if induces_de { None } else { least_unprolongable(alg, kind, s) };
    debug_assert_eq!(witness.is_none(), induces_de);
    HereditaryPairVerdict { kind, set: s, induces_de, witness }
}

/// The path-prolongation form of the criterion, decided directly over all
/// nonzero paths.
pub fn prolongation_criterion(alg: &AlgebraPresentation, kind: PairKind, s: SimpleSet) -> bool {
    least_unprolongable(alg, kind, s).is_none()
}

fn least_unprolongable(alg: &AlgebraPresentation, kind: PairKind, s: SimpleSet) -> Option<Path> {
    let paths = alg.nonzero_paths();
    let outside = |v: Vertex| !s.contains(v);
    // good[i]: path i prolongs (possibly trivially) to a nonzero path whose
    // free end lies outside S. Extensions are longer, so sweep from the end.
    let mut good = vec![false; paths.len()];
    for i in (0..paths.len()).rev() {
        let (free_end, ext) = match kind {
            PairKind::Hereditary => (paths[i].target(), alg.tail_extensions(i)),
            PairKind::Cohereditary => (paths[i].source(), alg.head_extensions(i)),
        };
        good[i] = outside(free_end) || ext.iter().any(|&j| good[j]);
    }
    paths
        .iter()
        .enumerate()
        .find(|(i, p)| {
            let anchored = match kind {
                PairKind::Hereditary => p.source(),
                PairKind::Cohereditary => p.target(),
            };
            outside(anchored) && !good[*i]
        })
        .map(|(_, p)| p.clone())
}

fn check_cap(n: usize, cap: usize) -> Result<(), PhiError> {
    if n > cap || n > 63 {
        return Err(PhiError::SubsetCapExceeded { n, cap: cap.min(63) });
    }
    Ok(())
}

/// Number of sets `S` whose pair of the given kind induces a derived
/// equivalence, over all `2^n` subsets.
pub fn count_de(alg: &AlgebraPresentation, kind: PairKind, cap: usize) -> Result<u64, PhiError> {
    let n = alg.vertex_count();
    check_cap(n, cap)?;
    Ok(count_de_in(&PhiTable::new(alg), kind, 0..1u64 << n))
}

/// Count over the subsets whose bit patterns lie in `range`.
pub fn count_de_in(table: &PhiTable, kind: PairKind, range: Range<u64>) -> u64 {
    let n = table.vertex_count();
    range.filter(|&b| table.induces_de(kind, SimpleSet::from_bits(n, b))).count() as u64
}

/// The sets inducing derived equivalence, in increasing bit order.
pub fn de_sets(alg: &AlgebraPresentation, kind: PairKind, cap: usize) -> Result<Vec<SimpleSet>, PhiError> {
    let n = alg.vertex_count();
    check_cap(n, cap)?;
    Ok(de_sets_in(&PhiTable::new(alg), kind, 0..1u64 << n))
}

pub fn de_sets_in(table: &PhiTable, kind: PairKind, range: Range<u64>) -> Vec<SimpleSet> {
    let n = table.vertex_count();
    range.map(|b| SimpleSet::from_bits(n, b)).filter(|&s| table.induces_de(kind, s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NakayamaPermutationReport {
    pub defined: bool,
    /// `ν(v)`, the vertex of `soc P_v`, when defined.
    pub permutation: Option<Vec<Vertex>>,
    pub weakly_symmetric: bool,
}

/// The candidate Nakayama permutation read off from socles of projectives.
/// This does not certify self-injectivity.
pub fn nakayama_permutation(alg: &AlgebraPresentation) -> NakayamaPermutationReport {
    let n = alg.vertex_count();
    let mut perm: Vec<Vertex> = Vec::with_capacity(n);
    for v in 0..n {
        let tails = alg.tail_maximal_paths(v);
        if tails.len() != 1 {
            return NakayamaPermutationReport { defined: false, permutation: None, weakly_symmetric: false };
        }
        perm.push(tails[0].target());
    }
    let mut seen = 0u64;
    for &w in &perm {
        seen |= 1 << w;
    }
    if seen.count_ones() as usize != n {
        return NakayamaPermutationReport { defined: false, permutation: None, weakly_symmetric: false };
    }
    let weakly_symmetric = perm.iter().enumerate().all(|(v, &w)| v == w);
    NakayamaPermutationReport { defined: true, permutation: Some(perm), weakly_symmetric }
}

/// Whether `ν(S) = S`.
pub fn self_injective_closed_under_nu(alg: &AlgebraPresentation, s: SimpleSet) -> Result<bool, PhiError> {
    let perm = nakayama_permutation(alg).permutation.ok_or(PhiError::PermutationUndefined)?;
    Ok(s.iter().all(|v| s.contains(perm[v])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{cyclic_radn, kronecker, linear_an, star};

    fn set(n: usize, labels: &[usize]) -> SimpleSet {
        SimpleSet::from_vertices(n, labels.iter().map(|l| l - 1)).unwrap()
    }

    #[test]
    fn phi_on_a3() {
        let a3 = linear_an(3, None).unwrap();
        assert_eq!(phi_plus(&a3, set(3, &[1])), set(3, &[3]));
        assert_eq!(phi_minus(&a3, set(3, &[3])), set(3, &[1]));
        assert!(phi_plus(&a3, SimpleSet::empty(3)).is_empty());
        assert!(phi_minus(&a3, SimpleSet::empty(3)).is_empty());
    }

    #[test]
    fn phi_on_self_injective() {
        let l3 = cyclic_radn(2, 3).unwrap();
        for b in 0..4 {
            let s = SimpleSet::from_bits(2, b);
            assert_eq!(phi_plus(&l3, s), s);
            assert_eq!(phi_minus(&l3, s), s);
        }
        let l2 = cyclic_radn(2, 2).unwrap();
        assert_eq!(phi_minus(&l2, set(2, &[1])), set(2, &[2]));
    }

    #[test]
    fn a4_sink_witness_is_least_failing_path() {
        let a4 = linear_an(4, None).unwrap();
        let v = hereditary_induces_de(&a4, set(4, &[4]));
        assert!(!v.induces_de);
        let w = v.witness.unwrap();
        // the arrow 3 → 4 fails and no shorter path does
        assert_eq!((w.source(), w.target(), w.len()), (2, 3, 1));
        // 1 ⇝ 4 fails too: it is the only tail-maximal path from 1
        let long = a4.tail_maximal_paths(0);
        assert_eq!(long.len(), 1);
        assert_eq!((long[0].len(), long[0].target()), (3, 3));
        assert!(hereditary_induces_de(&a4, SimpleSet::empty(4)).induces_de);
    }

    #[test]
    fn kronecker_endpoints() {
        let k = kronecker(2).unwrap();
        assert!(!hereditary_induces_de(&k, set(2, &[2])).induces_de);
        assert!(!cohereditary_induces_de(&k, set(2, &[1])).induces_de);
        let full = cohereditary_induces_de(&k, SimpleSet::full(2));
        assert!(full.induces_de && full.witness.is_none());
    }

    #[test]
    fn rad2_hereditary_needs_predecessor_closure() {
        let r = linear_an(4, Some(2)).unwrap();
        // {2} is not closed under predecessors along arrows: 1 → 2
        let v = hereditary_induces_de(&r, set(4, &[2]));
        assert!(!v.induces_de);
        let w = v.witness.unwrap();
        assert_eq!((w.source(), w.target(), w.len()), (0, 1, 1));
        assert!(hereditary_induces_de(&r, set(4, &[1, 2])).induces_de);
        assert!(!cohereditary_induces_de(&r, set(4, &[1, 2])).induces_de);
        assert!(cohereditary_induces_de(&r, set(4, &[3, 4])).induces_de);
    }

    #[test]
    fn counts() {
        assert_eq!(count_de(&star(4, 2).unwrap(), PairKind::Hereditary, 24).unwrap(), 7);
        assert_eq!(count_de(&linear_an(3, None).unwrap(), PairKind::Hereditary, 24).unwrap(), 5);
        assert_eq!(count_de(&linear_an(5, Some(2)).unwrap(), PairKind::Hereditary, 24).unwrap(), 6);
        assert_eq!(
            count_de(&linear_an(5, None).unwrap(), PairKind::Hereditary, 4),
            Err(PhiError::SubsetCapExceeded { n: 5, cap: 4 })
        );
    }

    #[test]
    fn nakayama_permutations() {
        let l3 = nakayama_permutation(&cyclic_radn(2, 3).unwrap());
        assert!(l3.defined && l3.weakly_symmetric);
        assert_eq!(l3.permutation, Some(vec![0, 1]));
        let l2 = nakayama_permutation(&cyclic_radn(2, 2).unwrap());
        assert!(l2.defined && !l2.weakly_symmetric);
        assert_eq!(l2.permutation, Some(vec![1, 0]));
        let a3 = nakayama_permutation(&linear_an(3, None).unwrap());
        assert!(!a3.defined && a3.permutation.is_none());
    }

    #[test]
    fn closure_under_nu() {
        let l2 = cyclic_radn(2, 2).unwrap();
        assert_eq!(self_injective_closed_under_nu(&l2, set(2, &[1])), Ok(false));
        assert_eq!(self_injective_closed_under_nu(&l2, SimpleSet::empty(2)), Ok(true));
        let l3 = cyclic_radn(2, 3).unwrap();
        assert_eq!(self_injective_closed_under_nu(&l3, set(2, &[2])), Ok(true));
        let a3 = linear_an(3, None).unwrap();
        assert_eq!(self_injective_closed_under_nu(&a3, SimpleSet::empty(3)), Err(PhiError::PermutationUndefined));
    }
}
