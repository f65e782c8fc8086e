//! Path questions answered by direct search against the ideal generators.

use torslab_core::{AlgebraPresentation, PairKind, SimpleSet};

/// A path as `(source, arrows)`; the target follows from the last arrow.
pub type RawPath = (usize, Vec<usize>);

fn is_zero(alg: &AlgebraPresentation, arrows: &[usize]) -> bool {
    let ideal = alg.ideal();
    if let Some(n) = ideal.radical_power() {
        if arrows.len() >= n {
            return true;
        }
    }
    ideal.generators().iter().any(|g| g.len() <= arrows.len() && arrows.windows(g.len()).any(|w| w == g.as_slice()))
}

fn target(alg: &AlgebraPresentation, p: &RawPath) -> usize {
    p.1.last().map_or(p.0, |&a| alg.quiver().arrow(a).target)
}

/// All nonzero paths, found by depth-first search that stops at the first
/// zero path (every extension of a zero path is zero).
pub fn nonzero_paths(alg: &AlgebraPresentation) -> Vec<RawPath> {
    let q = alg.quiver();
    let mut out = Vec::new();
    let mut stack: Vec<RawPath> = q.vertices().map(|v| (v, Vec::new())).collect();
    while let Some(p) = stack.pop() {
        let t = target(alg, &p);
        for (a, arrow) in q.arrows().iter().enumerate() {
            if arrow.source == t {
                let mut arrows = p.1.clone();
                arrows.push(a);
                if !is_zero(alg, &arrows) {
                    stack.push((p.0, arrows));
                }
            }
        }
        out.push(p);
    }
    out.sort_by(|a, b| (a.1.len(), &a.1, a.0).cmp(&(b.1.len(), &b.1, b.0)));
    out
}

/// Nonzero paths from `v` that no arrow extends on the right.
pub fn tail_maximal(alg: &AlgebraPresentation, v: usize) -> Vec<RawPath> {
    let q = alg.quiver();
    nonzero_paths(alg)
        .into_iter()
        .filter(|p| p.0 == v)
        .filter(|p| {
            let t = target(alg, p);
            q.arrows().iter().enumerate().filter(|(_, a)| a.source == t).all(|(a, _)| {
                let mut ext = p.1.clone();
                ext.push(a);
                is_zero(alg, &ext)
            })
        })
        .collect()
}

/// Nonzero paths into `v` that no arrow extends on the left.
pub fn head_maximal(alg: &AlgebraPresentation, v: usize) -> Vec<RawPath> {
    let q = alg.quiver();
    nonzero_paths(alg)
        .into_iter()
        .filter(|p| target(alg, p) == v)
        .filter(|p| {
            q.arrows().iter().enumerate().filter(|(_, a)| a.target == p.0).all(|(a, _)| {
                let mut ext = vec![a];
                ext.extend_from_slice(&p.1);
                is_zero(alg, &ext)
            })
        })
        .collect()
}

/// The prolongation criterion, quantifying over every pair of nonzero paths:
/// hereditary asks that each nonzero `p` from outside `S` has a nonzero `pq`
/// (with `q` possibly trivial) ending outside `S`; cohereditary is the
/// mirror statement for `qp`.
pub fn prolongation(alg: &AlgebraPresentation, kind: PairKind, s: SimpleSet) -> bool {
    let paths = nonzero_paths(alg);
    let out = |v: usize| !s.contains(v);
    paths.iter().all(|p| match kind {
        PairKind::Hereditary => {
            !out(p.0) || paths.iter().any(|r| r.0 == p.0 && r.1.starts_with(&p.1) && out(target(alg, r)))
        }
        PairKind::Cohereditary => {
            let t = target(alg, p);
            !out(t) || paths.iter().any(|r| target(alg, r) == t && r.1.ends_with(&p.1) && out(r.0))
        }
    })
}
