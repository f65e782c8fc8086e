//! Finite quivers and paths.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

/// Dense vertex index `0..n`.
pub type Vertex = usize;
/// Index into [`Quiver::arrows`].
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(u32),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{name}` has endpoint {vertex} which is not a vertex")]
    DanglingArrow { name: String, vertex: usize },
    #[error("unknown arrow id {0}")]
    UnknownArrow(ArrowId),
    #[error("a path given by arrows must contain at least one arrow")]
    EmptyPath,
    #[error("arrows {first} and {second} do not compose")]
    NotComposable { first: ArrowId, second: ArrowId },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

/// A finite quiver. Parallel arrows and loops are allowed.
///
/// Vertices carry external integer labels (the ids used in input files and
/// reports); internally they are the dense indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    labels: Vec<u32>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(labels: Vec<u32>) -> Result<Self, QuiverError> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(QuiverError::DuplicateVertex(*l));
            }
        }
        Ok(Quiver { labels, arrows: Vec::new() })
    }

    /// `n` vertices labelled `1..=n`.
    pub fn with_vertices(n: usize) -> Self {
        Quiver { labels: (1..=n as u32).collect(), arrows: Vec::new() }
    }

    pub fn add_arrow(
        &mut self,
        name: impl Into<String>,
        source: Vertex,
        target: Vertex,
    ) -> Result<ArrowId, QuiverError> {
        let name = name.into();
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(QuiverError::DuplicateArrow(name));
        }
        for v in [source, target] {
            if v >= self.labels.len() {
                return Err(QuiverError::DanglingArrow { name, vertex: v });
            }
        }
        self.arrows.push(Arrow { name, source, target });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.labels.len()
    }

    pub fn label(&self, v: Vertex) -> u32 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: u32) -> Option<Vertex> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id]
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn out_arrows(&self, v: Vertex) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(i, _)| i)
    }

    pub fn in_arrows(&self, v: Vertex) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v).map(|(i, _)| i)
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.out_arrows(v).next().is_none()
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.in_arrows(v).next().is_none()
    }

    /// Same vertices and arrow ids, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            labels: self.labels.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A path `p: source ⇝ target`. Arrows are listed in composition order, so
/// appending an arrow `a` to `p` gives `pa`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: Vertex,
    target: Vertex,
    arrows: Vec<ArrowId>,
}

impl Path {
    /// The trivial path `e_v`.
    pub fn trivial(v: Vertex) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn from_arrows(quiver: &Quiver, arrows: &[ArrowId]) -> Result<Self, QuiverError> {
        let (&first, _) = arrows.split_first().ok_or(QuiverError::EmptyPath)?;
        let mut path = Path::trivial(quiver.arrows.get(first).ok_or(QuiverError::UnknownArrow(first))?.source);
        for &a in arrows {
            path = path.then(quiver, a)?;
        }
        Ok(path)
    }

    /// `self · a`.
    pub fn then(&self, quiver: &Quiver, a: ArrowId) -> Result<Path, QuiverError> {
        let arrow = quiver.arrows.get(a).ok_or(QuiverError::UnknownArrow(a))?;
        if arrow.source != self.target {
            return Err(QuiverError::NotComposable { first: self.arrows.last().copied().unwrap_or(a), second: a });
        }
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Ok(Path { source: self.source, target: arrow.target, arrows })
    }

    /// `a · self`.
    pub fn after(&self, quiver: &Quiver, a: ArrowId) -> Result<Path, QuiverError> {
        let arrow = quiver.arrows.get(a).ok_or(QuiverError::UnknownArrow(a))?;
        if arrow.target != self.source {
            return Err(QuiverError::NotComposable { first: a, second: self.arrows.first().copied().unwrap_or(a) });
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + 1);
        arrows.push(a);
        arrows.extend_from_slice(&self.arrows);
        Ok(Path { source: arrow.source, target: self.target, arrows })
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// Number of arrows; zero exactly for trivial paths, see [`Path::is_trivial`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The same path read in the opposite quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }

    /// Whether `factor` occurs as a contiguous block of arrows.
    pub fn contains_factor(&self, factor: &[ArrowId]) -> bool {
        !factor.is_empty() && self.arrows.windows(factor.len()).any(|w| w == factor)
    }
}

/// Paths are ordered by length, then arrow ids, then source vertex (which
/// only matters for trivial paths).
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
