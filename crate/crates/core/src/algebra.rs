//! Bound quiver algebras `kQ/I` with a monomial admissible ideal `I`.
//!
//! Everything is combinatorial: the algebra has the nonzero paths as a basis,
//! and a path is zero exactly when it contains a generator of `I` as a
//! contiguous factor (or is at least as long as the radical power, when one
//! is given).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use thiserror::Error;

use crate::quiver::{ArrowId, Path, Quiver, QuiverError, Vertex};
use crate::sets::MAX_BITS;

/// Default bound on the number of nonzero paths. Exceeding it is reported as
/// a non-admissible ideal.
pub const DEFAULT_PATH_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("relation {index} has length {len}; relations must have length at least 2")]
    ShortGenerator { index: usize, len: usize },
    #[error("radical power {0} is below 2")]
    RadicalTooSmall(usize),
    #[error("more than {cap} nonzero paths; the ideal is not admissible at this scale")]
    PathCapExceeded { cap: usize },
    #[error("{0} vertices exceed the supported maximum of 64")]
    TooManyVertices(usize),
}

/// A monomial ideal, given by path generators and optionally "all paths of
/// length `N`".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<Vec<ArrowId>>,
    radical_power: Option<usize>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(generators: Vec<Vec<ArrowId>>, radical_power: Option<usize>) -> Self {
        MonomialIdeal { generators, radical_power }
    }

    /// `rad^n`.
    pub fn radical(n: usize) -> Self {
        MonomialIdeal { generators: Vec::new(), radical_power: Some(n) }
    }

    pub fn with_generator(mut self, generator: Vec<ArrowId>) -> Self {
        self.generators.push(generator);
        self
    }

    pub fn generators(&self) -> &[Vec<ArrowId>] {
        &self.generators
    }

    pub fn radical_power(&self) -> Option<usize> {
        self.radical_power
    }

    fn validate(&self, quiver: &Quiver) -> Result<(), AlgebraError> {
        if let Some(n) = self.radical_power {
            if n < 2 {
                return Err(AlgebraError::RadicalTooSmall(n));
            }
        }
        for (index, g) in self.generators.iter().enumerate() {
            if g.len() < 2 {
                return Err(AlgebraError::ShortGenerator { index, len: g.len() });
            }
            Path::from_arrows(quiver, g)?;
        }
        Ok(())
    }

    fn reversed(&self) -> Self {
        MonomialIdeal {
            generators: self.generators.iter().map(|g| g.iter().rev().copied().collect()).collect(),
            radical_power: self.radical_power,
        }
    }
}

type PathKey = (Vertex, Vec<ArrowId>);

fn key(p: &Path) -> PathKey {
    (p.source(), p.arrows().to_vec())
}

/// `Λ = kQ/I` with its nonzero paths enumerated.
///
/// Immutable after construction.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    quiver: Quiver,
    ideal: MonomialIdeal,
    cap: usize,
    paths: Vec<Path>,
    lookup: BTreeMap<PathKey, usize>,
    // one-arrow extensions p·a and a·p that stay nonzero
    tail_ext: Vec<Vec<usize>>,
    head_ext: Vec<Vec<usize>>,
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, ideal: MonomialIdeal) -> Result<Self, AlgebraError> {
        Self::with_path_cap(quiver, ideal, DEFAULT_PATH_CAP)
    }

    pub fn with_path_cap(quiver: Quiver, ideal: MonomialIdeal, cap: usize) -> Result<Self, AlgebraError> {
        if quiver.vertex_count() > MAX_BITS {
            return Err(AlgebraError::TooManyVertices(quiver.vertex_count()));
        }
        ideal.validate(&quiver)?;

        let mut paths: Vec<Path> = quiver.vertices().map(Path::trivial).collect();
        let mut frontier: Vec<Path> = paths.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for a in quiver.out_arrows(p.target()) {
                    let q = p.then(&quiver, a)?;
                    if ends_nonzero(&ideal, &q) {
                        next.push(q);
                    }
                }
            }
            paths.extend(next.iter().cloned());
            if paths.len() > cap {
                return Err(AlgebraError::PathCapExceeded { cap });
            }
            frontier = next;
        }
        paths.sort();

        let lookup: BTreeMap<PathKey, usize> = paths.iter().enumerate().map(|(i, p)| (key(p), i)).collect();
        let mut tail_ext = Vec::with_capacity(paths.len());
        let mut head_ext = Vec::with_capacity(paths.len());
        for p in &paths {
            let tails = quiver
                .out_arrows(p.target())
                .filter_map(|a| lookup.get(&key(&p.then(&quiver, a).ok()?)).copied())
                .collect();
            let heads = quiver
                .in_arrows(p.source())
                .filter_map(|a| lookup.get(&key(&p.after(&quiver, a).ok()?)).copied())
                .collect();
            tail_ext.push(tails);
            head_ext.push(heads);
        }

        Ok(AlgebraPresentation { quiver, ideal, cap, paths, lookup, tail_ext, head_ext })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn path_cap(&self) -> usize {
        self.cap
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// All nonzero paths, trivial ones included, sorted by (length, arrows).
    /// Their number is the dimension of the algebra.
    pub fn nonzero_paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path_index(&self, p: &Path) -> Option<usize> {
        self.lookup.get(&key(p)).copied()
    }

    /// Indices of the nonzero paths `p·a`, for the path at index `i`.
    pub fn tail_extensions(&self, i: usize) -> &[usize] {
        &self.tail_ext[i]
    }

    /// Indices of the nonzero paths `a·p`, for the path at index `i`.
    pub fn head_extensions(&self, i: usize) -> &[usize] {
        &self.head_ext[i]
    }

    /// Membership test straight from the ideal: no generator occurs as a
    /// factor and the length is below the radical power.
    pub fn is_nonzero(&self, p: &Path) -> bool {
        if let Some(n) = self.ideal.radical_power {
            if p.len() >= n {
                return false;
            }
        }
        !self.ideal.generators.iter().any(|g| p.contains_factor(g))
    }

    pub fn is_tail_maximal(&self, i: usize) -> bool {
        self.tail_ext[i].is_empty()
    }

    pub fn is_head_maximal(&self, i: usize) -> bool {
        self.head_ext[i].is_empty()
    }

    /// Nonzero paths starting at `v` that become zero under every one-arrow
    /// extension on the right. They span the socle of `P_v = e_vΛ`.
    pub fn tail_maximal_paths(&self, v: Vertex) -> Vec<Path> {
        self.paths
            .iter()
            .enumerate()
            .filter(|(i, p)| p.source() == v && self.is_tail_maximal(*i))
            .map(|(_, p)| p.clone())
            .collect()
    }

    /// Nonzero paths ending at `v` admitting no nonzero one-arrow extension on
    /// the left.
    pub fn head_maximal_paths(&self, v: Vertex) -> Vec<Path> {
        self.paths
            .iter()
            .enumerate()
            .filter(|(i, p)| p.target() == v && self.is_head_maximal(*i))
            .map(|(_, p)| p.clone())
            .collect()
    }

    /// True iff there is no cycle of nonzero noninvertible maps between
    /// indecomposable projectives, i.e. the graph with an edge for every
    /// nonzero nontrivial path has no directed cycle (loops included).
    pub fn is_acyclic_algebra(&self) -> bool {
        let n = self.vertex_count();
        let mut reach = alloc::vec![0u64; n];
        for p in self.paths.iter().filter(|p| !p.is_trivial()) {
            reach[p.source()] |= 1 << p.target();
        }
        // transitive closure, Warshall style on bit rows
        for k in 0..n {
            for v in 0..n {
                if reach[v] >> k & 1 == 1 {
                    reach[v] |= reach[k];
                }
            }
        }
        (0..n).all(|v| reach[v] >> v & 1 == 0)
    }

    /// The presentation of `Λ^op`: arrows and relations reversed. Right
    /// modules over it are left modules over `Λ`.
    pub fn opposite(&self) -> AlgebraPresentation {
        AlgebraPresentation::with_path_cap(
            self.quiver.opposite(),
            self.ideal.reversed(),
            self.cap.max(self.paths.len()),
        )
        .expect("opposite of a valid presentation is valid")
    }
}

/// Whether `p` is nonzero given that `p` minus its last arrow is.
fn ends_nonzero(ideal: &MonomialIdeal, p: &Path) -> bool {
    if let Some(n) = ideal.radical_power {
        if p.len() >= n {
            return false;
        }
    }
    !ideal.generators.iter().any(|g| p.arrows().ends_with(g))
}
