//! Quiver representations over GF(2): Hom spaces by solving the commutation
//! system, and extension middle terms by enumerating `Ext¹` classes.
//!
//! A representation assigns a matrix to each arrow `a: x → y` acting on
//! column vectors, `M_a : M_x → M_y`. Right modules over `kQ/I` are the
//! representations killed by every relation.

use torslab_core::AlgebraPresentation;

use crate::gf2::{complement, nullspace, span, Mat};
use crate::Interval;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

/// The zero relations of the ideal as arrow sequences: the generators plus,
/// for `rad^N`, every path of length `N`.
pub fn relations(alg: &AlgebraPresentation) -> Vec<Vec<usize>> {
    let q = alg.quiver();
    let ideal = alg.ideal();
    let mut rels: Vec<Vec<usize>> = ideal.generators().to_vec();
    if let Some(n) = ideal.radical_power() {
        let mut layer: Vec<Vec<usize>> = (0..q.arrows().len()).map(|a| vec![a]).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for p in &layer {
                let t = q.arrow(*p.last().unwrap()).target;
                for (a, arrow) in q.arrows().iter().enumerate() {
                    if arrow.source == t {
                        let mut e = p.clone();
                        e.push(a);
                        next.push(e);
                    }
                }
            }
            layer = next;
        }
        rels.extend(layer);
    }
    rels
}

impl Rep {
    /// The uniserial module with the given top and length over a quiver in
    /// which every vertex has at most one outgoing arrow: basis `e_0..e_{len-1}`
    /// with `e_j` at the `j`-th vertex of the walk and arrows shifting `e_j` to
    /// `e_{j+1}`.
    pub fn interval(alg: &AlgebraPresentation, (top, len): Interval) -> Rep {
        let q = alg.quiver();
        let n = q.vertex_count();
        let mut walk = vec![(top, 0usize)];
        let mut dims = vec![0usize; n];
        dims[top] = 1;
        let mut via = Vec::new();
        for _ in 1..len {
            let (w, _) = *walk.last().unwrap();
            let a = q.out_arrows(w).next().expect("interval walks off the quiver");
            let t = q.arrow(a).target;
            walk.push((t, dims[t]));
            dims[t] += 1;
            via.push(a);
        }
        let mut maps: Vec<Mat> = q.arrows().iter().map(|arr| Mat::zero(dims[arr.target], dims[arr.source])).collect();
        for (j, &a) in via.iter().enumerate() {
            let (_, from) = walk[j];
            let (_, to) = walk[j + 1];
            maps[a].set(to, from, true);
        }
        Rep { dims, maps }
    }

    /// `M_p` for a path given by arrows, applied first arrow first.
    pub fn path_map(&self, alg: &AlgebraPresentation, arrows: &[usize]) -> Mat {
        let q = alg.quiver();
        let start = q.arrow(arrows[0]).source;
        let mut m = Mat::identity(self.dims[start]);
        for &a in arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    pub fn satisfies(&self, alg: &AlgebraPresentation) -> bool {
        relations(alg).iter().all(|r| self.path_map(alg, r).is_zero())
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Offsets of the blocks `f_x` inside the flattened unknown vector.
fn block_offsets(rows: &[usize], cols: &[usize]) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(rows.len());
    let mut total = 0;
    for (r, c) in rows.iter().zip(cols) {
        off.push(total);
        total += r * c;
    }
    (off, total)
}

/// A basis of `Hom(U, V)`, each element flattened as blocks `f_x` of shape
/// `dim V_x × dim U_x`.
pub fn hom_basis(alg: &AlgebraPresentation, u: &Rep, v: &Rep) -> Vec<Vec<bool>> {
    let (off, total) = block_offsets(&v.dims, &u.dims);
    let mut eqs = Vec::new();
    for (a, arrow) in alg.quiver().arrows().iter().enumerate() {
        let (x, y) = (arrow.source, arrow.target);
        // (V_a f_x + f_y U_a)[r][c] = 0 for r < dim V_y, c < dim U_x
        for r in 0..v.dims[y] {
            for c in 0..u.dims[x] {
                let mut row = vec![false; total];
                for k in 0..v.dims[x] {
                    if v.maps[a].get(r, k) {
                        row[off[x] + k * u.dims[x] + c] ^= true;
                    }
                }
                for k in 0..u.dims[y] {
                    if u.maps[a].get(k, c) {
                        row[off[y] + r * u.dims[y] + k] ^= true;
                    }
                }
                eqs.push(row);
            }
        }
    }
    nullspace(eqs, total)
}

pub fn hom_dim(alg: &AlgebraPresentation, u: &Rep, v: &Rep) -> usize {
    hom_basis(alg, u, v).len()
}

fn blocks(flat: &[bool], rows: &[usize], cols: &[usize]) -> Vec<Mat> {
    let (off, _) = block_offsets(rows, cols);
    rows.iter().zip(cols).zip(off).map(|((&r, &c), o)| Mat::from_flat(r, c, &flat[o..o + r * c])).collect()
}

/// Whether some homomorphism `U → V` is surjective (resp. injective).
pub fn has_map(alg: &AlgebraPresentation, u: &Rep, v: &Rep, surjective: bool) -> bool {
    let basis = hom_basis(alg, u, v);
    let (_, total) = block_offsets(&v.dims, &u.dims);
    span(&basis, total).iter().any(|f| {
        let parts = blocks(f, &v.dims, &u.dims);
        parts.iter().zip(u.dims.iter().zip(&v.dims)).all(|(m, (&du, &dv))| {
            let rank = m.rank();
            if surjective {
                rank == dv
            } else {
                rank == du
            }
        })
    })
}

/// Middle terms of all extensions `0 → X → Y → Z → 0`, one `Y` per class of
/// `Ext¹(Z, X)`, each given as a representation.
pub fn extension_middles(alg: &AlgebraPresentation, x: &Rep, z: &Rep) -> Vec<Rep> {
    let q = alg.quiver();
    let arrows = q.arrows();
    // unknown H_a : Z_source -> X_target
    let h_rows: Vec<usize> = arrows.iter().map(|a| x.dims[a.target]).collect();
    let h_cols: Vec<usize> = arrows.iter().map(|a| z.dims[a.source]).collect();
    let (_, h_total) = block_offsets(&h_rows, &h_cols);
    let rels = relations(alg);

    // upper-right block of Y_p for a relation p, linear in H
    let corner = |h: &[Mat], p: &[usize]| -> Mat {
        let src = arrows[p[0]].source;
        let dst = arrows[*p.last().unwrap()].target;
        let mut acc = Mat::zero(x.dims[dst], z.dims[src]);
        for i in 0..p.len() {
            let mut before = Mat::identity(z.dims[src]);
            for &a in &p[..i] {
                before = z.maps[a].mul(&before);
            }
            let mut m = h[p[i]].mul(&before);
            for &a in &p[i + 1..] {
                m = x.maps[a].mul(&m);
            }
            acc = acc.add(&m);
        }
        acc
    };

    // constraint matrix, built column by column
    let mut columns: Vec<Vec<bool>> = Vec::with_capacity(h_total);
    for k in 0..h_total {
        let mut unit = vec![false; h_total];
        unit[k] = true;
        let h = blocks(&unit, &h_rows, &h_cols);
        columns.push(rels.iter().flat_map(|r| corner(&h, r).flatten()).collect());
    }
    let n_eq = columns.first().map_or(0, Vec::len);
    let eqs: Vec<Vec<bool>> = (0..n_eq).map(|e| columns.iter().map(|c| c[e]).collect()).collect();
    let cocycles = nullspace(eqs, h_total);

    // coboundaries H_a = X_a S_v + S_w Z_a for S_v : Z_v -> X_v
    let s_rows: Vec<usize> = x.dims.clone();
    let s_cols: Vec<usize> = z.dims.clone();
    let (_, s_total) = block_offsets(&s_rows, &s_cols);
    let coboundaries: Vec<Vec<bool>> = (0..s_total)
        .map(|k| {
            let mut unit = vec![false; s_total];
            unit[k] = true;
            let s = blocks(&unit, &s_rows, &s_cols);
            arrows
                .iter()
                .enumerate()
                .flat_map(|(a, arr)| x.maps[a].mul(&s[arr.source]).add(&s[arr.target].mul(&z.maps[a])).flatten())
                .collect()
        })
        .collect();

    let classes = complement(&coboundaries, &cocycles, h_total);
    span(&classes, h_total)
        .into_iter()
        .map(|flat| {
            let h = blocks(&flat, &h_rows, &h_cols);
            let dims: Vec<usize> = x.dims.iter().zip(&z.dims).map(|(a, b)| a + b).collect();
            let maps = arrows
                .iter()
                .enumerate()
                .map(|(a, arr)| {
                    let (v, w) = (arr.source, arr.target);
                    let mut m = Mat::zero(dims[w], dims[v]);
                    for r in 0..x.dims[w] {
                        for c in 0..x.dims[v] {
                            m.set(r, c, x.maps[a].get(r, c));
                        }
                        for c in 0..z.dims[v] {
                            m.set(r, x.dims[v] + c, h[a].get(r, c));
                        }
                    }
                    for r in 0..z.dims[w] {
                        for c in 0..z.dims[v] {
                            m.set(x.dims[w] + r, x.dims[v] + c, z.maps[a].get(r, c));
                        }
                    }
                    m
                })
                .collect();
            Rep { dims, maps }
        })
        .collect()
}

/// Decomposes a representation of a quiver with in- and out-degrees at
/// most one into intervals, from ranks of path actions: the number of
/// summands with top `v` and length `> k` is `R(v, k) − R(prev v, k + 1)`,
/// where `R(v, k)` is the rank of the length-`k` path from `v`.
pub fn decompose_serial(alg: &AlgebraPresentation, m: &Rep) -> Vec<Interval> {
    let q = alg.quiver();
    let total = m.dim();
    let walk = |v: usize, k: usize| -> Option<Vec<usize>> {
        let mut arrows = Vec::with_capacity(k);
        let mut u = v;
        for _ in 0..k {
            let a = q.out_arrows(u).next()?;
            arrows.push(a);
            u = q.arrow(a).target;
        }
        Some(arrows)
    };
    let rank = |v: Option<usize>, k: usize| -> usize {
        let Some(v) = v else { return 0 };
        match walk(v, k) {
            None => 0,
            Some(p) if p.is_empty() => m.dims[v],
            Some(p) => m.path_map(alg, &p).rank(),
        }
    };
    let mut summands = Vec::new();
    for v in q.vertices() {
        let prev = q.in_arrows(v).next().map(|a| q.arrow(a).source);
        let longer = |k: usize| rank(Some(v), k) - rank(prev, k + 1);
        for len in 1..=total {
            let count = longer(len - 1) - longer(len);
            summands.extend(std::iter::repeat_n((v, len), count));
        }
    }
    summands.sort();
    summands
}

/// Uniserial indecomposables `(v, ℓ)`: the walk of length `ℓ − 1` from `v`
/// exists and the path it traces is nonzero.
pub fn serial_indecomposables(alg: &AlgebraPresentation) -> Vec<Interval> {
    let nonzero = crate::paths::nonzero_paths(alg);
    let mut out: Vec<Interval> = nonzero.iter().map(|(v, arrows)| (*v, arrows.len() + 1)).collect();
    out.sort();
    out.dedup();
    out
}
