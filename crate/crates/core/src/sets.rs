//! Fixed-width bit sets over vertices and over indecomposable modules.

use core::fmt;

/// Largest universe a [`SimpleSet`] or [`ModuleSet`] can index.
pub const MAX_BITS: usize = 64;

fn mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// A set of vertices of a quiver, i.e. of isoclasses of simple modules.
///
/// Bits at positions `>= universe` are always clear, so complements stay
/// inside the vertex set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSet {
    bits: u64,
    universe: usize,
}

impl SimpleSet {
    /// The empty set over `universe` vertices.
    ///
    /// # Panics
    ///
    /// If `universe > 64`.
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_BITS, "SimpleSet universe {universe} exceeds {MAX_BITS}");
        SimpleSet { bits: 0, universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.bits = mask(universe);
        s
    }

    /// Builds a set from raw bits; bits outside the universe are dropped.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        let mut s = Self::empty(universe);
        s.bits = bits & mask(universe);
        s
    }

    /// Returns `None` if some vertex is out of range.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Option<Self> {
        let mut s = Self::empty(universe);
        for v in vertices {
            if v >= universe {
                return None;
            }
            s.bits |= 1 << v;
        }
        Some(s)
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn universe(self) -> usize {
        self.universe
    }

    pub fn contains(self, v: usize) -> bool {
        v < self.universe && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.bits |= 1 << v;
    }

    pub fn complement(self) -> Self {
        SimpleSet { bits: !self.bits & mask(self.universe), universe: self.universe }
    }

    pub fn union(self, other: Self) -> Self {
        SimpleSet { bits: self.bits | other.bits, universe: self.universe.max(other.universe) }
    }

    pub fn intersection(self, other: Self) -> Self {
        SimpleSet { bits: self.bits & other.bits, universe: self.universe.max(other.universe) }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn iter(self) -> Bits {
        Bits(self.bits)
    }
}

impl fmt::Debug for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A set of indecomposable modules, indexed by their position in the
/// canonical list of a [`crate::SerialAlgebra`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleSet(pub u64);

impl ModuleSet {
    pub const EMPTY: ModuleSet = ModuleSet(0);

    pub fn full(m: usize) -> Self {
        ModuleSet(mask(m))
    }

    pub fn singleton(i: usize) -> Self {
        ModuleSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn with(self, i: usize) -> Self {
        ModuleSet(self.0 | 1 << i)
    }

    pub fn union(self, other: Self) -> Self {
        ModuleSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ModuleSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ModuleSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl FromIterator<usize> for ModuleSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ModuleSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for ModuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
