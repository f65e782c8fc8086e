//! Slow, independent reference implementations used to cross-check
//! `torslab-core` in tests.
//!
//! Nothing here reuses the core's derived data (nonzero-path tables, Kupisch
//! series, trace formulas). Inputs are quivers and monomial ideals; answers
//! come from brute-force path search or explicit linear algebra over GF(2).

pub mod fleet;
pub mod gf2;
pub mod paths;
pub mod rep;
pub mod tors;

/// `(top vertex, length)` of a uniserial module.
pub type Interval = (usize, usize);
