//! The module category of a Nakayama (serial) algebra.
//!
//! When every vertex has at most one outgoing and one incoming arrow, the
//! indecomposable modules are the uniserial interval modules `(top, len)`
//! with `1 <= len <= c_top`, where `c` is the Kupisch series. Their
//! submodules form a chain, so traces, rejects and torsion parts are again
//! single intervals and everything reduces to arithmetic on `(top, len)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::algebra::AlgebraPresentation;
use crate::quiver::Vertex;
use crate::sets::{ModuleSet, MAX_BITS};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SerialError {
    #[error("vertex {label} has {count} {dir} arrows; serial algebras allow at most one")]
    NotSerial { label: u32, count: usize, dir: &'static str },
    #[error("{0} indecomposable modules exceed the supported maximum of 64")]
    TooManyIndecomposables(usize),
    #[error("length {s} is out of range for a module of length {len}")]
    LengthOutOfRange { s: usize, len: usize },
}

/// A uniserial module given by its top vertex and length.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalModule {
    pub top: Vertex,
    pub len: usize,
}

impl IntervalModule {
    pub fn new(top: Vertex, len: usize) -> Self {
        IntervalModule { top, len }
    }
}

impl fmt::Debug for IntervalModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.top, self.len)
    }
}

/// A finite direct sum of interval modules, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleSum {
    summands: Vec<IntervalModule>,
}

impl ModuleSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(mut summands: Vec<IntervalModule>) -> Self {
        summands.retain(|m| m.len > 0);
        summands.sort();
        ModuleSum { summands }
    }

    pub fn summands(&self) -> &[IntervalModule] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Distinct summands, in canonical order.
    pub fn distinct(&self) -> Vec<IntervalModule> {
        let mut v = self.summands.clone();
        v.dedup();
        v
    }

    pub fn direct_sum(&self, other: &ModuleSum) -> ModuleSum {
        let mut v = self.summands.clone();
        v.extend_from_slice(&other.summands);
        ModuleSum::new(v)
    }
}

impl FromIterator<IntervalModule> for ModuleSum {
    fn from_iter<I: IntoIterator<Item = IntervalModule>>(iter: I) -> Self {
        ModuleSum::new(iter.into_iter().collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalDimension {
    Finite(usize),
    Infinite,
}

impl GlobalDimension {
    pub fn at_most(self, d: usize) -> bool {
        matches!(self, GlobalDimension::Finite(g) if g <= d)
    }
}

impl fmt::Display for GlobalDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobalDimension::Finite(d) => write!(f, "{d}"),
            GlobalDimension::Infinite => f.write_str("inf"),
        }
    }
}

/// A serial algebra with its indecomposables listed in `(top, len)` order
/// and the Hom-vanishing pattern precomputed.
#[derive(Clone, Debug)]
pub struct SerialAlgebra {
    base: AlgebraPresentation,
    next: Vec<Option<Vertex>>,
    prev: Vec<Option<Vertex>>,
    kupisch: Vec<usize>,
    offset: Vec<usize>,
    modules: Vec<IntervalModule>,
    // hom_out[u]: modules V with Hom(U, V) != 0; hom_in[v]: modules U with Hom(U, V) != 0
    hom_out: Vec<ModuleSet>,
    hom_in: Vec<ModuleSet>,
    subs: Vec<ModuleSet>,
    quots: Vec<ModuleSet>,
    support: Vec<u64>,
}

impl SerialAlgebra {
    pub fn new(base: AlgebraPresentation) -> Result<Self, SerialError> {
        let q = base.quiver();
        let n = q.vertex_count();
        let mut next = vec![None; n];
        let mut prev = vec![None; n];
        for v in q.vertices() {
            let outs: Vec<_> = q.out_arrows(v).collect();
            let ins: Vec<_> = q.in_arrows(v).collect();
            if outs.len() > 1 {
                return Err(SerialError::NotSerial { label: q.label(v), count: outs.len(), dir: "outgoing" });
            }
            if ins.len() > 1 {
                return Err(SerialError::NotSerial { label: q.label(v), count: ins.len(), dir: "incoming" });
            }
            next[v] = outs.first().map(|&a| q.arrow(a).target);
            prev[v] = ins.first().map(|&a| q.arrow(a).source);
        }
        let mut kupisch = vec![1usize; n];
        for p in base.nonzero_paths() {
            kupisch[p.source()] = kupisch[p.source()].max(p.len() + 1);
        }
        let total: usize = kupisch.iter().sum();
        if total > MAX_BITS {
            return Err(SerialError::TooManyIndecomposables(total));
        }
        let mut offset = Vec::with_capacity(n);
        let mut modules = Vec::with_capacity(total);
        for (v, &c) in kupisch.iter().enumerate() {
            offset.push(modules.len());
            modules.extend((1..=c).map(|l| IntervalModule::new(v, l)));
        }
        let m = modules.len();
        let mut alg = SerialAlgebra {
            base,
            next,
            prev,
            kupisch,
            offset,
            modules,
            hom_out: vec![ModuleSet::EMPTY; m],
            hom_in: vec![ModuleSet::EMPTY; m],
            subs: vec![ModuleSet::EMPTY; m],
            quots: vec![ModuleSet::EMPTY; m],
            support: vec![0; m],
        };
        for i in 0..m {
            let mi = alg.modules[i];
            for s in 1..=mi.len {
                let sub = alg.id(alg.sub_raw(mi, s));
                let quot = alg.id(IntervalModule::new(mi.top, s));
                let factor = alg.step(mi.top, s - 1);
                alg.subs[i].insert(sub);
                alg.quots[i].insert(quot);
                alg.support[i] |= 1 << factor;
            }
            for j in 0..m {
                if alg.hom_dim(mi, alg.modules[j]) > 0 {
                    alg.hom_out[i].insert(j);
                    alg.hom_in[j].insert(i);
                }
            }
        }
        Ok(alg)
    }

    pub fn base(&self) -> &AlgebraPresentation {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.kupisch.len()
    }

    /// `c_v`, the length of `P_v`.
    pub fn kupisch(&self) -> &[usize] {
        &self.kupisch
    }

    pub fn next(&self, v: Vertex) -> Option<Vertex> {
        self.next[v]
    }

    pub fn prev(&self, v: Vertex) -> Option<Vertex> {
        self.prev[v]
    }

    /// `step^k(v)`.
    ///
    /// # Panics
    ///
    /// If the walk leaves the quiver, i.e. `k` exceeds the longest path from
    /// `v`.
    pub fn step(&self, v: Vertex, k: usize) -> Vertex {
        let mut u = v;
        for _ in 0..k {
            u = self.next[u].expect("step walked off the end of a line");
        }
        u
    }

    /// All indecomposables, ordered by `(top, len)`.
    pub fn indecomposables(&self) -> &[IntervalModule] {
        &self.modules
    }

    pub fn module_count(&self) -> usize {
        self.modules.len()
    }

    /// Position of `m` in [`Self::indecomposables`].
    ///
    /// # Panics
    ///
    /// If `m` is not an indecomposable of this algebra.
    pub fn id(&self, m: IntervalModule) -> usize {
        assert!(self.is_valid(m), "{m:?} is not a module of this algebra");
        self.offset[m.top] + m.len - 1
    }

    pub fn module(&self, id: usize) -> IntervalModule {
        self.modules[id]
    }

    pub fn is_valid(&self, m: IntervalModule) -> bool {
        m.top < self.vertex_count() && m.len >= 1 && m.len <= self.kupisch[m.top]
    }

    pub fn socle(&self, m: IntervalModule) -> Vertex {
        self.step(m.top, m.len - 1)
    }

    /// Composition factors as a vertex bit mask.
    pub fn support(&self, id: usize) -> u64 {
        self.support[id]
    }

    fn sub_raw(&self, m: IntervalModule, s: usize) -> IntervalModule {
        IntervalModule::new(self.step(m.top, m.len - s), s)
    }

    /// The submodule of length `s`; `None` for `s = 0`.
    pub fn submodule_of_length(&self, m: IntervalModule, s: usize) -> Result<Option<IntervalModule>, SerialError> {
        if s > m.len {
            return Err(SerialError::LengthOutOfRange { s, len: m.len });
        }
        Ok((s > 0).then(|| self.sub_raw(m, s)))
    }

    /// The quotient of length `s`; `None` for `s = 0`.
    pub fn quotient_of_length(&self, m: IntervalModule, s: usize) -> Result<Option<IntervalModule>, SerialError> {
        if s > m.len {
            return Err(SerialError::LengthOutOfRange { s, len: m.len });
        }
        Ok((s > 0).then(|| IntervalModule::new(m.top, s)))
    }

    /// `dim Hom(U, V)`: one dimension for every length `s` at which the
    /// submodule of `V` has the same top as `U`.
    pub fn hom_dim(&self, u: IntervalModule, v: IntervalModule) -> usize {
        (1..=u.len.min(v.len)).filter(|&s| self.step(v.top, v.len - s) == u.top).count()
    }

    pub fn hom_nonzero(&self, u: usize, v: usize) -> bool {
        self.hom_out[u].contains(v)
    }

    /// Nonzero indecomposable submodules of module `id`, itself included.
    pub fn submodules(&self, id: usize) -> ModuleSet {
        self.subs[id]
    }

    /// Nonzero indecomposable quotients of module `id`, itself included.
    pub fn quotients(&self, id: usize) -> ModuleSet {
        self.quots[id]
    }

    /// Quotients of members of `c`; for uniserials this is `gen C ∩ ind`.
    pub fn gen_closure(&self, c: ModuleSet) -> ModuleSet {
        c.iter().fold(ModuleSet::EMPTY, |acc, i| acc.union(self.quots[i]))
    }

    /// Submodules of members of `c`; for uniserials this is `cogen C ∩ ind`.
    pub fn cogen_closure(&self, c: ModuleSet) -> ModuleSet {
        c.iter().fold(ModuleSet::EMPTY, |acc, i| acc.union(self.subs[i]))
    }

    /// `C^⊥`: indecomposables receiving no nonzero map from `C`.
    pub fn right_perp(&self, c: ModuleSet) -> ModuleSet {
        let hit = c.iter().fold(ModuleSet::EMPTY, |acc, i| acc.union(self.hom_out[i]));
        ModuleSet::full(self.module_count()).difference(hit)
    }

    /// `^⊥C`: indecomposables with no nonzero map into `C`.
    pub fn left_perp(&self, c: ModuleSet) -> ModuleSet {
        let hit = c.iter().fold(ModuleSet::EMPTY, |acc, i| acc.union(self.hom_in[i]));
        ModuleSet::full(self.module_count()).difference(hit)
    }

    /// Length of the trace of `C` in `m`: the longest submodule that is a
    /// quotient of a member of `C`.
    pub fn trace_len(&self, c: ModuleSet, m: IntervalModule) -> usize {
        let gen = self.gen_closure(c);
        (1..=m.len).rev().find(|&s| gen.contains(self.id(self.sub_raw(m, s)))).unwrap_or(0)
    }

    /// Length of the reject of `C` in `m`: the shortest submodule `X` with
    /// `m/X` embedding into a member of `C`.
    pub fn reject_len(&self, c: ModuleSet, m: IntervalModule) -> usize {
        let cogen = self.cogen_closure(c);
        let keep = (1..=m.len).rev().find(|&r| cogen.contains(self.id(IntervalModule::new(m.top, r)))).unwrap_or(0);
        m.len - keep
    }

    pub fn trace(&self, c: ModuleSet, m: &ModuleSum) -> ModuleSum {
        m.summands()
            .iter()
            .filter_map(|&x| {
                let t = self.trace_len(c, x);
                (t > 0).then(|| self.sub_raw(x, t))
            })
            .collect()
    }

    pub fn reject(&self, c: ModuleSet, m: &ModuleSum) -> ModuleSum {
        m.summands()
            .iter()
            .filter_map(|&x| {
                let r = self.reject_len(c, x);
                (r > 0).then(|| self.sub_raw(x, r))
            })
            .collect()
    }

    /// `P_v = (v, c_v)`.
    pub fn projective_cover(&self, v: Vertex) -> IntervalModule {
        IntervalModule::new(v, self.kupisch[v])
    }

    /// `E(S_w)`: the longest interval with socle `w`.
    pub fn injective_envelope(&self, w: Vertex) -> IntervalModule {
        let mut top = w;
        let mut len = 1;
        while let Some(p) = self.prev[top] {
            if self.kupisch[p] < len + 1 {
                break;
            }
            top = p;
            len += 1;
        }
        IntervalModule::new(top, len)
    }

    pub fn projectives(&self) -> ModuleSet {
        (0..self.vertex_count()).map(|v| self.id(self.projective_cover(v))).collect()
    }

    pub fn injectives(&self) -> ModuleSet {
        (0..self.vertex_count()).map(|v| self.id(self.injective_envelope(v))).collect()
    }

    /// `Λ = ⊕ P_v`.
    pub fn regular_module(&self) -> ModuleSum {
        (0..self.vertex_count()).map(|v| self.projective_cover(v)).collect()
    }

    /// `DΛ = ⊕ E(S_v)`.
    pub fn dual_regular_module(&self) -> ModuleSum {
        (0..self.vertex_count()).map(|v| self.injective_envelope(v)).collect()
    }

    /// `Ω(v, ℓ) = (step^ℓ v, c_v − ℓ)`, or `None` when the module is
    /// projective.
    pub fn syzygy(&self, m: IntervalModule) -> Option<IntervalModule> {
        let c = self.kupisch[m.top];
        (m.len < c).then(|| IntervalModule::new(self.step(m.top, m.len), c - m.len))
    }

    pub fn projective_dimension(&self, m: IntervalModule) -> GlobalDimension {
        let mut seen = BTreeSet::new();
        let mut cur = m;
        let mut d = 0;
        while let Some(next) = self.syzygy(cur) {
            if !seen.insert(cur) {
                return GlobalDimension::Infinite;
            }
            cur = next;
            d += 1;
        }
        GlobalDimension::Finite(d)
    }

    /// Maximum projective dimension of a simple module.
    pub fn global_dimension(&self) -> GlobalDimension {
        let mut g = 0;
        for v in 0..self.vertex_count() {
            match self.projective_dimension(IntervalModule::new(v, 1)) {
                GlobalDimension::Infinite => return GlobalDimension::Infinite,
                GlobalDimension::Finite(d) => g = g.max(d),
            }
        }
        GlobalDimension::Finite(g)
    }

    pub fn self_injective(&self) -> bool {
        self.projectives() == self.injectives()
    }

    /// The serial algebra `Λ^op`. Its right modules are the `k`-duals of the
    /// right `Λ`-modules; see [`Self::dual_module`].
    pub fn opposite(&self) -> SerialAlgebra {
        SerialAlgebra::new(self.base.opposite()).expect("opposite of a serial algebra is serial")
    }

    /// `D(v, ℓ)`: the dual of an interval module, as a module over
    /// [`Self::opposite`]. Its top is the socle of the original.
    pub fn dual_module(&self, m: IntervalModule) -> IntervalModule {
        IntervalModule::new(self.socle(m), m.len)
    }
}
