//! Path combinatorics and the Φ-criteria against brute-force path search.

use proptest::prelude::*;
use torslab_core::phi::{self, PhiTable};
use torslab_core::presets::{a_orientation, cyclic_radn, kronecker, linear_an, nakayama, star};
use torslab_core::{AlgebraPresentation, PairKind, Path, SimpleSet};
use torslab_oracle::fleet::fuzz_quiver;
use torslab_oracle::paths as oracle;

fn presets() -> Vec<AlgebraPresentation> {
    let mut out = vec![
        linear_an(1, None).unwrap(),
        linear_an(3, None).unwrap(),
        linear_an(4, Some(2)).unwrap(),
        linear_an(6, Some(3)).unwrap(),
        cyclic_radn(2, 2).unwrap(),
        cyclic_radn(2, 3).unwrap(),
        cyclic_radn(3, 4).unwrap(),
        kronecker(2).unwrap(),
        kronecker(3).unwrap(),
        nakayama(false, &[3, 3, 2, 1]).unwrap(),
        nakayama(true, &[2, 3, 3]).unwrap(),
    ];
    out.extend((0..8).map(|m| a_orientation(4, m).unwrap()));
    out.extend((1..5).map(|k| star(5, k).unwrap()));
    out
}

fn fuzzed() -> impl Strategy<Value = AlgebraPresentation> {
    prop::collection::vec(any::<u32>(), 64).prop_map(|seed| {
        let mut it = seed.into_iter().cycle();
        fuzz_quiver(6, &mut |k| it.next().unwrap() as usize % k)
    })
}

fn all_sets(n: usize) -> impl Iterator<Item = SimpleSet> {
    (0u64..1 << n).map(move |b| SimpleSet::from_bits(n, b))
}

fn raw(p: &Path) -> oracle::RawPath {
    (p.source(), p.arrows().to_vec())
}

fn sorted(mut v: Vec<oracle::RawPath>) -> Vec<oracle::RawPath> {
    v.sort();
    v
}

fn check_paths(alg: &AlgebraPresentation) {
    let core: Vec<_> = alg.nonzero_paths().iter().map(raw).collect();
    assert_eq!(sorted(core), sorted(oracle::nonzero_paths(alg)));
    // every contiguous factor of a nonzero path is nonzero
    let q = alg.quiver();
    for p in alg.nonzero_paths() {
        let a = p.arrows();
        for i in 0..a.len() {
            for j in i + 1..=a.len() {
                assert!(alg.is_nonzero(&Path::from_arrows(q, &a[i..j]).unwrap()));
            }
        }
    }
    if let Some(n) = alg.ideal().radical_power() {
        assert!(alg.nonzero_paths().iter().all(|p| p.len() < n));
    }
}

fn check_maximal(alg: &AlgebraPresentation) {
    let op = alg.opposite();
    for v in alg.quiver().vertices() {
        let tail: Vec<_> = alg.tail_maximal_paths(v).iter().map(raw).collect();
        let head: Vec<_> = alg.head_maximal_paths(v).iter().map(raw).collect();
        assert_eq!(sorted(tail.clone()), sorted(oracle::tail_maximal(alg, v)));
        assert_eq!(sorted(head), sorted(oracle::head_maximal(alg, v)));
        let mirrored: Vec<_> = op.head_maximal_paths(v).iter().map(|p| raw(&p.reversed())).collect();
        assert_eq!(sorted(tail), sorted(mirrored));
    }
}

fn check_acyclicity(alg: &AlgebraPresentation) {
    let q = alg.quiver();
    let nonzero_cycle = alg.nonzero_paths().iter().any(|p| !p.is_trivial() && p.source() == p.target());
    if nonzero_cycle {
        assert!(!alg.is_acyclic_algebra());
    }
    // a quiver without oriented cycles gives an acyclic algebra for any ideal
    let n = q.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    for a in q.arrows() {
        reach[a.source][a.target] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                reach[i][j] |= reach[i][k] && reach[k][j];
            }
        }
    }
    if (0..n).all(|v| !reach[v][v]) {
        assert!(alg.is_acyclic_algebra());
    }
}

fn check_phi(alg: &AlgebraPresentation) {
    let n = alg.vertex_count();
    let table = PhiTable::new(alg);
    let sets: Vec<_> = all_sets(n.min(6)).map(|s| SimpleSet::from_bits(n, s.bits())).collect();
    for &s in &sets {
        for &t in sets.iter().step_by(3) {
            assert_eq!(table.plus(s.union(t)), table.plus(s).union(table.plus(t)));
            assert_eq!(table.minus(s.union(t)), table.minus(s).union(table.minus(t)));
        }
        for kind in [PairKind::Hereditary, PairKind::Cohereditary] {
            let v = phi::verdict(alg, kind, s);
            assert_eq!(v.induces_de, oracle::prolongation(alg, kind, s), "{kind:?} {s:?}");
            assert_eq!(v.induces_de, phi::prolongation_criterion(alg, kind, s));
            assert_eq!(v.witness.is_none(), v.induces_de);
            if let Some(w) = v.witness {
                let end = match kind {
                    PairKind::Hereditary => w.source(),
                    PairKind::Cohereditary => w.target(),
                };
                assert!(!s.contains(end));
            }
        }
    }
}

/// The verdict only depends on `Sᶜ`, and survives removing from `Sᶜ` any
/// vertex outside `Φ₊(Sᶜ)`.
fn check_shrinking(alg: &AlgebraPresentation) {
    let n = alg.vertex_count().min(6);
    let total = alg.vertex_count();
    let table = PhiTable::new(alg);
    for s in all_sets(n) {
        let s = SimpleSet::from_bits(total, s.bits());
        let comp = s.complement();
        if !table.induces_de(PairKind::Hereditary, s) {
            continue;
        }
        let image = table.plus(comp);
        for v in comp.iter().filter(|&v| !image.contains(v)) {
            let mut bigger = s;
            bigger.insert(v);
            assert!(table.induces_de(PairKind::Hereditary, bigger));
        }
    }
}

#[test]
fn presets_agree_with_search() {
    for alg in presets() {
        check_paths(&alg);
        check_maximal(&alg);
        check_acyclicity(&alg);
        check_phi(&alg);
        check_shrinking(&alg);
    }
}

#[test]
fn twelve_vertex_line_agrees_with_prolongation() {
    for radical in [None, Some(2), Some(4)] {
        let alg = linear_an(12, radical).unwrap();
        let table = PhiTable::new(&alg);
        for b in (0u64..1 << 12).step_by(7) {
            let s = SimpleSet::from_bits(12, b);
            for kind in [PairKind::Hereditary, PairKind::Cohereditary] {
                assert_eq!(table.induces_de(kind, s), oracle::prolongation(&alg, kind, s));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fuzzed_paths(alg in fuzzed()) {
        check_paths(&alg);
        check_maximal(&alg);
        check_acyclicity(&alg);
    }

    #[test]
    fn fuzzed_phi(alg in fuzzed()) {
        check_phi(&alg);
        check_shrinking(&alg);
    }

    #[test]
    fn phi_is_monotone(alg in fuzzed(), a in any::<u64>(), b in any::<u64>()) {
        let n = alg.vertex_count();
        let mask = (1u64 << n) - 1;
        let s = SimpleSet::from_bits(n, a & mask);
        let t = s.union(SimpleSet::from_bits(n, b & mask));
        prop_assert!(phi::phi_plus(&alg, s).is_subset(phi::phi_plus(&alg, t)));
        prop_assert!(phi::phi_minus(&alg, s).is_subset(phi::phi_minus(&alg, t)));
    }
}

#[test]
fn small_images() {
    let a3 = linear_an(3, None).unwrap();
    let set = |vs: &[usize]| SimpleSet::from_vertices(3, vs.iter().map(|v| v - 1)).unwrap();
    assert_eq!(phi::phi_plus(&a3, set(&[1])), set(&[3]));
    assert_eq!(phi::phi_minus(&a3, set(&[3])), set(&[1]));
    let l3 = cyclic_radn(2, 3).unwrap();
    for b in 0..4 {
        let s = SimpleSet::from_bits(2, b);
        assert_eq!(phi::phi_plus(&l3, s), s);
        assert_eq!(phi::phi_minus(&l3, s), s);
    }
    let l2 = cyclic_radn(2, 2).unwrap();
    assert_eq!(phi::phi_minus(&l2, SimpleSet::from_bits(2, 1)), SimpleSet::from_bits(2, 2));
}
