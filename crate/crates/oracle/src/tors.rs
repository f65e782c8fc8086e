//! Torsion classes and derived-equivalence verdicts from closure properties,
//! for serial algebras.

use std::collections::{BTreeMap, BTreeSet};

use torslab_core::AlgebraPresentation;

use crate::rep::{decompose_serial, extension_middles, has_map, hom_dim, serial_indecomposables, Rep};
use crate::Interval;

/// Everything the closure tests need, computed once per algebra.
pub struct ClosureOracle {
    pub modules: Vec<Interval>,
    index: BTreeMap<Interval, usize>,
    /// `quotient[y][x]`: some map `Y → X` is onto.
    quotient: Vec<Vec<bool>>,
    /// `embeds[x][y]`: some map `X → Y` is injective.
    embeds: Vec<Vec<bool>>,
    hom: Vec<Vec<usize>>,
    /// Indecomposable summands of every middle term of an extension of
    /// `modules[z]` by `modules[x]`, keyed `(x, z)`.
    middles: BTreeMap<(usize, usize), BTreeSet<usize>>,
}

impl ClosureOracle {
    pub fn new(alg: &AlgebraPresentation) -> Self {
        let modules = serial_indecomposables(alg);
        let index: BTreeMap<Interval, usize> = modules.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let reps: Vec<Rep> = modules.iter().map(|&m| Rep::interval(alg, m)).collect();
        let n = modules.len();
        let mut quotient = vec![vec![false; n]; n];
        let mut embeds = vec![vec![false; n]; n];
        let mut hom = vec![vec![0; n]; n];
        let mut middles = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                hom[i][j] = hom_dim(alg, &reps[i], &reps[j]);
                quotient[i][j] = has_map(alg, &reps[i], &reps[j], true);
                embeds[i][j] = has_map(alg, &reps[i], &reps[j], false);
                let summands: BTreeSet<usize> = extension_middles(alg, &reps[i], &reps[j])
                    .iter()
                    .flat_map(|y| decompose_serial(alg, y))
                    .map(|m| index[&m])
                    .collect();
                middles.insert((i, j), summands);
            }
        }
        ClosureOracle { modules, index, quotient, embeds, hom, middles }
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn id(&self, m: Interval) -> usize {
        self.index[&m]
    }

    pub fn hom(&self, u: usize, v: usize) -> usize {
        self.hom[u][v]
    }

    /// Closed under quotients and under extensions of two members.
    pub fn is_torsion_class(&self, members: &[bool]) -> bool {
        let n = self.len();
        let quotient_closed = (0..n).all(|y| !members[y] || (0..n).all(|x| !self.quotient[y][x] || members[x]));
        quotient_closed
            && (0..n).all(|x| {
                !members[x] || (0..n).all(|z| !members[z] || self.middles[&(x, z)].iter().all(|&s| members[s]))
            })
    }

    /// All torsion classes, as member masks, in increasing bit order.
    pub fn torsion_classes(&self) -> Vec<u64> {
        let n = self.len();
        assert!(n <= 24, "exhaustive closure search over {n} modules");
        (0u64..1 << n)
            .filter(|&b| {
                let members: Vec<bool> = (0..n).map(|i| b >> i & 1 == 1).collect();
                self.is_torsion_class(&members)
            })
            .collect()
    }

    /// `T^⊥` by Hom dimensions.
    pub fn right_perp(&self, members: &[bool]) -> Vec<bool> {
        (0..self.len()).map(|m| (0..self.len()).all(|u| !members[u] || self.hom[u][m] == 0)).collect()
    }

    /// Derived equivalence for a pair of an algebra of global dimension at
    /// most two: every indecomposable `a` has a submodule in `gen ℱ` with
    /// quotient in `cogen 𝒯`. For uniserial `a` both sides are single
    /// indecomposables, so it suffices to try every submodule.
    pub fn gldim2_de(&self, torsion: &[bool]) -> bool {
        let free = self.right_perp(torsion);
        let n = self.len();
        let in_gen = |x: usize| (0..n).any(|y| free[y] && self.quotient[y][x]);
        let in_cogen = |x: usize| (0..n).any(|y| torsion[y] && self.embeds[x][y]);
        self.modules.iter().all(|&(top, len)| {
            let m = self.id((top, len));
            (0..=len).any(|s| {
                // a uniserial module has one submodule of each length, and
                // anything of length s embedding into it is that submodule
                let sub_ok =
                    s == 0 || (0..n).find(|&x| self.modules[x].1 == s && self.embeds[x][m]).is_some_and(in_gen);
                let quot_ok = s == len || in_cogen(self.id((top, len - s)));
                sub_ok && quot_ok
            })
        })
    }
}
