//! Torsion pairs over monomial path algebras and serial (Nakayama) algebras.
//!
//! The crate is split along the objects it computes with:
//!
//! * [`quiver`] and [`algebra`]: quivers, monomial ideals and the finite set of
//!   nonzero paths of a bound quiver algebra `kQ/I`, together with tail- and
//!   head-maximal paths and acyclicity.
//! * [`phi`]: the set functions `Φ₊`/`Φ₋` on sets of simples and the exact
//!   derived-equivalence test for the hereditary pairs `(filt 𝒮, 𝒮^⊥)` and the
//!   cohereditary pairs `(^⊥𝒮, filt 𝒮)`.
//! * [`serial`]: the finite module category of a Nakayama algebra, where every
//!   indecomposable is an interval module `(top, length)`.
//! * [`tors`]: the lattice of torsion pairs of a Nakayama algebra and its
//!   partition by torsion sequences of a fixed module.
//! * [`classify`]: per-pair derived-equivalence verdicts with evidence.
//!
//! Right modules are used throughout: `P_i = e_iΛ`, paths compose left to
//! right, and the socle of `P_i` is spanned by the tail-maximal paths starting
//! at `i`. Working with left modules amounts to passing the opposite quiver.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod classify;
pub mod phi;
pub mod presets;
pub mod quiver;
pub mod serial;
pub mod sets;
pub mod tors;

pub use algebra::{AlgebraError, AlgebraPresentation, MonomialIdeal, DEFAULT_PATH_CAP};
pub use classify::{Reason, Status, Verdict, Witness};
pub use phi::{PairKind, SimpleSet};
pub use quiver::{Arrow, ArrowId, Path, Quiver, QuiverError, Vertex};
pub use serial::{GlobalDimension, IntervalModule, ModuleSum, SerialAlgebra, SerialError};
pub use sets::ModuleSet;
pub use tors::{EpsilonClass, TorsLattice, TorsionPair};
