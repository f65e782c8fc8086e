//! The lattice of torsion pairs of a serial algebra.
//!
//! A torsion class is stored as the set of indecomposables it contains. A
//! set `C` is a torsion class iff for every indecomposable `M` the trace
//! `t` of `C` in `M` lies in `C` and `M/t` receives no nonzero map from `C`;
//! this is the torsion sequence `0 → t → M → M/t → 0` read pointwise.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use thiserror::Error;

use crate::serial::{IntervalModule, ModuleSum, SerialAlgebra};
use crate::sets::ModuleSet;

/// Default bound on the number of indecomposables for exhaustive
/// enumeration.
pub const DEFAULT_INDECOMPOSABLE_CAP: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TorsError {
    #[error("{m} indecomposables exceed the enumeration cap of {cap}")]
    CapExceeded { m: usize, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionPair {
    pub torsion: ModuleSet,
    pub free: ModuleSet,
}

/// Whether `c` is closed under quotients. Every torsion class is; the check
/// is a cheap filter in front of [`is_torsion_class`].
pub fn is_quotient_closed(alg: &SerialAlgebra, c: ModuleSet) -> bool {
    c.iter().all(|i| alg.quotients(i).is_subset(c))
}

pub fn is_torsion_class(alg: &SerialAlgebra, c: ModuleSet) -> bool {
    if !is_quotient_closed(alg, c) {
        return false;
    }
    let perp = alg.right_perp(c);
    alg.indecomposables().iter().all(|&m| {
        let t = alg.trace_len(c, m);
        t == m.len || perp.contains(alg.id(IntervalModule::new(m.top, m.len - t)))
    })
}

/// Torsion classes among the subsets whose bit patterns lie in `range`, in
/// increasing order.
pub fn torsion_classes_in(alg: &SerialAlgebra, range: Range<u64>) -> Vec<ModuleSet> {
    range.map(ModuleSet).filter(|&c| is_torsion_class(alg, c)).collect()
}

pub fn check_cap(alg: &SerialAlgebra, cap: usize) -> Result<(), TorsError> {
    let m = alg.module_count();
    if m > cap || m > 40 {
        return Err(TorsError::CapExceeded { m, cap: cap.min(40) });
    }
    Ok(())
}

/// A set of lattice elements sharing the torsion sequence of a fixed module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonClass {
    /// Trace length of each distinct summand of the module, in canonical
    /// summand order.
    pub profile: Vec<usize>,
    /// Lattice indices, increasing.
    pub members: Vec<usize>,
    /// The pair generated by the torsion part.
    pub min: usize,
    /// The pair cogenerated by the torsion-free part.
    pub max: usize,
}

impl EpsilonClass {
    /// Whether the members are exactly the order interval `[min, max]`.
    pub fn is_interval(&self, lattice: &TorsLattice) -> bool {
        let interval: Vec<usize> =
            (0..lattice.len()).filter(|&i| lattice.leq(self.min, i) && lattice.leq(i, self.max)).collect();
        interval == self.members
    }
}

/// All torsion pairs of a serial algebra, ordered by the bit value of the
/// torsion class. Index `0` is `𝟎 = (0, mod Λ)` and the last index is
/// `𝟏 = (mod Λ, 0)`.
#[derive(Clone, Debug)]
pub struct TorsLattice {
    alg: SerialAlgebra,
    pairs: Vec<TorsionPair>,
    index: BTreeMap<ModuleSet, usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl TorsLattice {
    pub fn enumerate(alg: &SerialAlgebra, cap: usize) -> Result<Self, TorsError> {
        check_cap(alg, cap)?;
        let classes = torsion_classes_in(alg, 0..1u64 << alg.module_count());
        Ok(Self::from_torsion_classes(alg, classes))
    }

    /// Builds the lattice from a complete list of torsion classes, e.g. one
    /// assembled from parallel [`torsion_classes_in`] calls.
    pub fn from_torsion_classes(alg: &SerialAlgebra, mut classes: Vec<ModuleSet>) -> Self {
        classes.sort();
        classes.dedup();
        let pairs: Vec<TorsionPair> =
            classes.iter().map(|&t| TorsionPair { torsion: t, free: alg.right_perp(t) }).collect();
        let index = classes.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let n = pairs.len();
        let mut covers = Vec::new();
        // i < j in the order forces i < j as bit values, so only look upward
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (pairs[i].torsion, pairs[j].torsion);
                if a == b || !a.is_subset(b) {
                    continue;
                }
                let between = (i + 1..j).any(|k| {
                    let c = pairs[k].torsion;
                    a.is_subset(c) && c.is_subset(b)
                });
                if !between {
                    covers.push((i, j));
                }
            }
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(i, j) in &covers {
            up[i].push(j);
            down[j].push(i);
        }
        TorsLattice { alg: alg.clone(), pairs, index, covers, up, down }
    }

    pub fn algebra(&self) -> &SerialAlgebra {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[TorsionPair] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> TorsionPair {
        self.pairs[i]
    }

    pub fn index_of(&self, torsion: ModuleSet) -> Option<usize> {
        self.index.get(&torsion).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.pairs.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.pairs[i].torsion.is_subset(self.pairs[j].torsion)
    }

    /// Hasse edges `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// `(T₁ ∩ T₂, (T₁ ∩ T₂)^⊥)`.
    ///
    /// # Panics
    ///
    /// If the intersection is not a torsion class of this lattice, which
    /// would mean the lattice is incomplete.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let t = self.pairs[i].torsion.intersection(self.pairs[j].torsion);
        self.index_of(t).expect("intersection of torsion classes is a torsion class")
    }

    /// `(^⊥(F₁ ∩ F₂), F₁ ∩ F₂)`.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let f = self.pairs[i].free.intersection(self.pairs[j].free);
        self.index_of(self.alg.left_perp(f)).expect("left perpendicular of a torsion-free class is a torsion class")
    }

    pub fn meet_all(&self, items: &[usize]) -> usize {
        items.iter().fold(self.top(), |acc, &i| self.meet(acc, i))
    }

    pub fn join_all(&self, items: &[usize]) -> usize {
        items.iter().fold(self.bottom(), |acc, &i| self.join(acc, i))
    }

    /// The smallest pair whose torsion class contains `x`: torsion class
    /// `^⊥(x^⊥)`.
    pub fn generated_by(&self, x: ModuleSet) -> usize {
        let t = self.alg.left_perp(self.alg.right_perp(x));
        self.index_of(t).expect("double perpendicular is a torsion class")
    }

    /// The largest pair whose torsion-free class contains `y`: torsion
    /// class `^⊥y`.
    pub fn cogenerated_by(&self, y: ModuleSet) -> usize {
        self.index_of(self.alg.left_perp(y)).expect("left perpendicular is a torsion class")
    }

    /// `(t, M/t)` componentwise.
    pub fn torsion_sequence(&self, i: usize, m: &ModuleSum) -> (ModuleSum, ModuleSum) {
        let c = self.pairs[i].torsion;
        let mut t = Vec::new();
        let mut f = Vec::new();
        for &x in m.summands() {
            let len = self.alg.trace_len(c, x);
            if len > 0 {
                t.push(self.alg.submodule_of_length(x, len).expect("trace fits").expect("nonzero"));
            }
            if len < x.len {
                f.push(IntervalModule::new(x.top, x.len - len));
            }
        }
        (ModuleSum::new(t), ModuleSum::new(f))
    }

    /// Whether the torsion sequence of every summand of `m` splits, i.e. each
    /// summand is torsion or torsion-free.
    pub fn splits_on(&self, i: usize, m: ModuleSet) -> bool {
        let p = self.pairs[i];
        m.is_subset(p.torsion.union(p.free))
    }

    /// Trace length of the torsion class of pair `i` on each distinct
    /// summand of `m`.
    pub fn profile(&self, i: usize, m: &ModuleSum) -> Vec<usize> {
        let c = self.pairs[i].torsion;
        m.distinct().iter().map(|&x| self.alg.trace_len(c, x)).collect()
    }

    /// Groups the lattice by torsion sequence of `m`. Classes are listed by
    /// their least member.
    pub fn partition_by(&self, m: &ModuleSum) -> Vec<EpsilonClass> {
        let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for i in 0..self.len() {
            groups.entry(self.profile(i, m)).or_default().push(i);
        }
        let distinct = m.distinct();
        let mut classes: Vec<EpsilonClass> = groups
            .into_iter()
            .map(|(profile, members)| {
                let mut t = ModuleSet::EMPTY;
                let mut f = ModuleSet::EMPTY;
                for (&x, &len) in distinct.iter().zip(&profile) {
                    if len > 0 {
                        t.insert(self.alg.id(self.alg.submodule_of_length(x, len).unwrap().unwrap()));
                    }
                    if len < x.len {
                        f.insert(self.alg.id(IntervalModule::new(x.top, x.len - len)));
                    }
                }
                EpsilonClass { profile, members, min: self.generated_by(t), max: self.cogenerated_by(f) }
            })
            .collect();
        classes.sort_by_key(|c| c.members[0]);
        classes
    }

    /// Whether every member of `subset` lies on a maximal chain
    /// `𝟎 ⋖ … ⋖ 𝟏` all of whose elements are in `subset`.
    pub fn is_union_of_maximal_chains(&self, subset: &[bool]) -> bool {
        assert_eq!(subset.len(), self.len());
        if !subset.iter().any(|&b| b) {
            return true;
        }
        let from_bottom = self.reach(subset, self.bottom(), &self.up);
        let from_top = self.reach(subset, self.top(), &self.down);
        (0..self.len()).all(|i| !subset[i] || (from_bottom[i] && from_top[i]))
    }

    fn reach(&self, subset: &[bool], start: usize, edges: &[Vec<usize>]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        if !subset[start] {
            return seen;
        }
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for &j in &edges[i] {
                if subset[j] && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{cyclic_radn, linear_an};

    fn lattice(alg: crate::AlgebraPresentation) -> TorsLattice {
        TorsLattice::enumerate(&SerialAlgebra::new(alg).unwrap(), DEFAULT_INDECOMPOSABLE_CAP).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(lattice(linear_an(2, None).unwrap()).len(), 5);
        assert_eq!(lattice(linear_an(3, None).unwrap()).len(), 14);
        for n in 2..7 {
            assert_eq!(lattice(cyclic_radn(2, n).unwrap()).len(), 6);
        }
        assert_eq!(lattice(linear_an(4, None).unwrap()).len(), 42);
    }

    #[test]
    fn extremes() {
        let l = lattice(linear_an(3, None).unwrap());
        assert!(l.pair(l.bottom()).torsion.is_empty());
        assert_eq!(l.pair(l.top()).torsion, ModuleSet::full(6));
        assert!(l.pair(l.top()).free.is_empty());
        for i in 0..l.len() {
            assert_eq!(l.meet(i, l.top()), i);
            assert_eq!(l.join(i, l.bottom()), i);
        }
    }

    #[test]
    fn atoms_join_to_top_on_a2() {
        let l = lattice(linear_an(2, None).unwrap());
        let atoms = l.upper_covers(l.bottom()).to_vec();
        assert_eq!(atoms.len(), 2);
        assert_eq!(l.join_all(&atoms), l.top());
    }

    #[test]
    fn torsion_sequence_on_a2() {
        let l = lattice(linear_an(2, None).unwrap());
        let a = l.algebra();
        let s1 = IntervalModule::new(0, 1);
        let p1 = IntervalModule::new(0, 2);
        let s2 = IntervalModule::new(1, 1);
        let t: ModuleSet = [a.id(s1), a.id(p1)].into_iter().collect();
        let i = l.index_of(t).unwrap();
        let m = ModuleSum::new(vec![p1, s2]);
        assert_eq!(l.torsion_sequence(i, &m), (ModuleSum::new(vec![p1]), ModuleSum::new(vec![s2])));
        assert_eq!(l.torsion_sequence(l.top(), &m), (m.clone(), ModuleSum::zero()));
        assert_eq!(l.torsion_sequence(l.bottom(), &m), (ModuleSum::zero(), m.clone()));
    }

    #[test]
    fn zero_module_gives_one_class() {
        let l = lattice(linear_an(3, None).unwrap());
        let classes = l.partition_by(&ModuleSum::zero());
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.len(), l.len());
        assert!(classes[0].is_interval(&l));
    }

    #[test]
    fn chains() {
        let l = lattice(linear_an(2, None).unwrap());
        assert!(l.is_union_of_maximal_chains(&vec![true; l.len()]));
        let mut ends = vec![false; l.len()];
        ends[l.bottom()] = true;
        ends[l.top()] = true;
        assert!(!l.is_union_of_maximal_chains(&ends));
    }
}
