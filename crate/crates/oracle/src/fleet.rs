//! Test fleets: every small Nakayama algebra, and random monomial quivers
//! drawn from an arbitrary source of small integers.

use torslab_core::presets::nakayama;
use torslab_core::{AlgebraPresentation, MonomialIdeal, Quiver};

/// All admissible Kupisch series with `n` vertices and entries at most
/// `max_c`, for the line (`false`) and the oriented cycle (`true`).
pub fn kupisch_series(n: usize, max_c: usize) -> Vec<(bool, Vec<usize>)> {
    let mut out = Vec::new();
    let mut c = vec![1; n];
    loop {
        for cyclic in [false, true] {
            if nakayama(cyclic, &c).is_ok() {
                out.push((cyclic, c.clone()));
            }
        }
        // odometer over 1..=max_c
        let mut i = 0;
        while i < n && c[i] == max_c {
            c[i] = 1;
            i += 1;
        }
        if i == n {
            return out;
        }
        c[i] += 1;
    }
}

/// Every connected Nakayama algebra with at most `max_n` vertices and
/// Kupisch entries at most `max_c`.
pub fn nakayama_fleet(max_n: usize, max_c: usize) -> Vec<AlgebraPresentation> {
    (1..=max_n)
        .flat_map(|n| kupisch_series(n, max_c))
        .map(|(cyclic, c)| nakayama(cyclic, &c).expect("series was validated"))
        .collect()
}

/// A random monomial bound quiver with at most `max_vertices` vertices,
/// eight arrows and four extra generators. `draw(k)` must return a value in
/// `0..k`. Quivers with an oriented cycle always get a radical power so
/// that the algebra is finite dimensional.
pub fn fuzz_quiver(max_vertices: usize, draw: &mut impl FnMut(usize) -> usize) -> AlgebraPresentation {
    let n = 1 + draw(max_vertices);
    let mut q = Quiver::with_vertices(n);
    for a in 0..draw(9) {
        let (s, t) = (draw(n), draw(n));
        q.add_arrow(format!("x{a}"), s, t).expect("endpoints are vertices");
    }
    let radical = if has_cycle(&q) || draw(2) == 0 { Some(2 + draw(3)) } else { None };
    let mut ideal = MonomialIdeal::new(Vec::new(), radical);
    for _ in 0..draw(5) {
        if q.arrows().is_empty() {
            break;
        }
        let len = 2 + draw(2);
        let mut walk = vec![draw(q.arrows().len())];
        while walk.len() < len {
            let t = q.arrow(*walk.last().unwrap()).target;
            let outs: Vec<usize> = q.out_arrows(t).collect();
            if outs.is_empty() {
                break;
            }
            walk.push(outs[draw(outs.len())]);
        }
        if walk.len() >= 2 {
            ideal = ideal.with_generator(walk);
        }
    }
    AlgebraPresentation::new(q, ideal).expect("fuzzed presentation is admissible")
}

fn has_cycle(q: &Quiver) -> bool {
    let n = q.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    for a in q.arrows() {
        reach[a.source][a.target] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    (0..n).any(|v| reach[v][v])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kupisch_counts() {
        // lines of length 2: (2,1); cycles of length 2 with entries <= 2: (2,2)
        assert_eq!(kupisch_series(2, 2), vec![(false, vec![2, 1]), (true, vec![2, 2])]);
        assert!(nakayama_fleet(4, 4).len() > 30);
    }

    #[test]
    fn fuzz_is_deterministic() {
        let mut state = 7usize;
        let mut draw = |k: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % k
        };
        for _ in 0..50 {
            let a = fuzz_quiver(6, &mut draw);
            assert!(a.vertex_count() <= 6);
            assert!(a.quiver().arrows().len() <= 8);
            assert!(a.ideal().generators().len() <= 4);
        }
    }
}
