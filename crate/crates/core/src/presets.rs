//! Named algebras used throughout the examples and tests.
//!
//! Vertex labels are `1..=n`; vertex `i` has index `i - 1`.

use alloc::format;
use alloc::vec::Vec;

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraPresentation, MonomialIdeal};
use crate::quiver::Quiver;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PresetError {
    #[error("invalid preset parameter: {0}")]
    InvalidParameter(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Linearly oriented `A_n`, arrows `i → i+1`, optionally modulo `rad^N`.
pub fn linear_an(n: usize, radical: Option<usize>) -> Result<AlgebraPresentation, PresetError> {
    if n == 0 {
        return Err(PresetError::InvalidParameter("linear_an needs n >= 1"));
    }
    if matches!(radical, Some(r) if r < 2) {
        return Err(PresetError::InvalidParameter("radical power must be at least 2"));
    }
    let mut q = Quiver::with_vertices(n);
    for i in 0..n - 1 {
        q.add_arrow(format!("a{}", i + 1), i, i + 1).expect("fresh arrow");
    }
    let ideal = radical.map_or_else(MonomialIdeal::zero, MonomialIdeal::radical);
    Ok(AlgebraPresentation::new(q, ideal)?)
}

/// An oriented `A_n` quiver: arrow `i` joins vertices `i` and `i+1` and
/// points right when bit `i` of `leftward` is clear.
pub fn a_orientation(n: usize, leftward: u64) -> Result<AlgebraPresentation, PresetError> {
    if n == 0 {
        return Err(PresetError::InvalidParameter("a_orientation needs n >= 1"));
    }
    let mut q = Quiver::with_vertices(n);
    for i in 0..n - 1 {
        let (s, t) = if leftward >> i & 1 == 1 { (i + 1, i) } else { (i, i + 1) };
        q.add_arrow(format!("a{}", i + 1), s, t).expect("fresh arrow");
    }
    Ok(AlgebraPresentation::new(q, MonomialIdeal::zero())?)
}

/// An oriented cycle on `vertices` vertices (a single loop when
/// `vertices == 1`), modulo `rad^N`.
pub fn cyclic_radn(vertices: usize, n: usize) -> Result<AlgebraPresentation, PresetError> {
    if vertices == 0 {
        return Err(PresetError::InvalidParameter("cyclic_radn needs at least one vertex"));
    }
    if n < 2 {
        return Err(PresetError::InvalidParameter("radical power must be at least 2"));
    }
    let mut q = Quiver::with_vertices(vertices);
    for i in 0..vertices {
        q.add_arrow(format!("a{}", i + 1), i, (i + 1) % vertices).expect("fresh arrow");
    }
    Ok(AlgebraPresentation::new(q, MonomialIdeal::radical(n))?)
}

/// A star with `n` vertices: centre `1`, sinks `2..=k+1` reached by arrows
/// out of the centre, and `n - 1 - k` sources with arrows into the centre.
pub fn star(n: usize, k: usize) -> Result<AlgebraPresentation, PresetError> {
    if n < 2 {
        return Err(PresetError::InvalidParameter("star needs n >= 2"));
    }
    if k == 0 || k > n - 1 {
        return Err(PresetError::InvalidParameter("star needs 1 <= k <= n-1"));
    }
    let mut q = Quiver::with_vertices(n);
    for leaf in 1..n {
        let (s, t) = if leaf <= k { (0, leaf) } else { (leaf, 0) };
        q.add_arrow(format!("a{leaf}"), s, t).expect("fresh arrow");
    }
    Ok(AlgebraPresentation::new(q, MonomialIdeal::zero())?)
}

/// The generalised Kronecker quiver: `m` parallel arrows `1 → 2`.
pub fn kronecker(m: usize) -> Result<AlgebraPresentation, PresetError> {
    if m == 0 {
        return Err(PresetError::InvalidParameter("kronecker needs at least one arrow"));
    }
    let mut q = Quiver::with_vertices(2);
    for i in 0..m {
        q.add_arrow(format!("a{}", i + 1), 0, 1).expect("fresh arrow");
    }
    Ok(AlgebraPresentation::new(q, MonomialIdeal::zero())?)
}

/// A Nakayama algebra from its Kupisch series `c` (lengths of the
/// indecomposable projectives). With `cyclic` the quiver is an oriented
/// cycle, otherwise the line `1 → 2 → … → n`.
pub fn nakayama(cyclic: bool, kupisch: &[usize]) -> Result<AlgebraPresentation, PresetError> {
    let n = kupisch.len();
    if n == 0 {
        return Err(PresetError::InvalidParameter("empty Kupisch series"));
    }
    let next = |v: usize| {
        if cyclic {
            Some((v + 1) % n)
        } else if v + 1 < n {
            Some(v + 1)
        } else {
            None
        }
    };
    for v in 0..n {
        match next(v) {
            Some(w) => {
                if kupisch[v] < 2 {
                    return Err(PresetError::InvalidParameter("Kupisch entries with an outgoing arrow must be >= 2"));
                }
                if kupisch[v] > kupisch[w] + 1 {
                    return Err(PresetError::InvalidParameter("Kupisch series must satisfy c_v <= c_(v+1) + 1"));
                }
            }
            None => {
                if kupisch[v] != 1 {
                    return Err(PresetError::InvalidParameter("the last vertex of a line has Kupisch entry 1"));
                }
            }
        }
    }
    let mut q = Quiver::with_vertices(n);
    for v in 0..n {
        if let Some(w) = next(v) {
            q.add_arrow(format!("a{}", v + 1), v, w).expect("fresh arrow");
        }
    }
    // arrow v is the one leaving v
    let mut ideal = MonomialIdeal::zero();
    for (v, &c) in kupisch.iter().enumerate() {
        let mut gen = Vec::with_capacity(c);
        let mut u = Some(v);
        for _ in 0..c {
            match u {
                Some(x) if next(x).is_some() => {
                    gen.push(x);
                    u = next(x);
                }
                _ => {
                    u = None;
                    break;
                }
            }
        }
        if u.is_some() && gen.len() == c {
            ideal = ideal.with_generator(gen);
        }
    }
    Ok(AlgebraPresentation::new(q, ideal)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_shape() {
        let s = star(4, 2).unwrap();
        let q = s.quiver();
        assert_eq!(q.arrows().len(), 3);
        assert_eq!((1..4).filter(|&v| q.is_sink(v)).count(), 2);
        assert_eq!((1..4).filter(|&v| q.is_source(v)).count(), 1);
        assert!(star(4, 0).is_err());
        assert!(star(4, 4).is_err());
        assert!(star(1, 1).is_err());
    }

    #[test]
    fn nakayama_matches_named_presets() {
        let a = nakayama(false, &[3, 2, 1]).unwrap();
        assert_eq!(a.nonzero_paths(), linear_an(3, None).unwrap().nonzero_paths());
        let r = nakayama(false, &[2, 2, 1]).unwrap();
        assert_eq!(r.nonzero_paths(), linear_an(3, Some(2)).unwrap().nonzero_paths());
        let l = nakayama(true, &[3, 3]).unwrap();
        assert_eq!(l.nonzero_paths(), cyclic_radn(2, 3).unwrap().nonzero_paths());
        assert!(nakayama(false, &[3, 1, 1]).is_err());
        assert!(nakayama(false, &[2, 2]).is_err());
    }

    #[test]
    fn parameter_errors() {
        assert!(cyclic_radn(2, 1).is_err());
        assert!(linear_an(0, None).is_err());
        assert!(kronecker(0).is_err());
        assert_eq!(kronecker(3).unwrap().quiver().arrows().len(), 3);
    }
}
