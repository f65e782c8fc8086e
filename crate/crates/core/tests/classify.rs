//! Classifier verdicts against the path criteria and the gldim-two oracle.

use std::sync::OnceLock;

use torslab_core::classify::{
    chain_extension_check, classify_all, coherence, upper_lower_set_check, Outcomes, PreconditionError,
};
use torslab_core::phi::{self, nakayama_permutation, self_injective_closed_under_nu};
use torslab_core::presets::{cyclic_radn, linear_an};
use torslab_core::tors::DEFAULT_INDECOMPOSABLE_CAP;
use torslab_core::{GlobalDimension, ModuleSet, PairKind, SerialAlgebra, SimpleSet, Status, TorsLattice};
use torslab_oracle::fleet::nakayama_fleet;
use torslab_oracle::tors::ClosureOracle;

fn lattices() -> &'static [TorsLattice] {
    static FLEET: OnceLock<Vec<TorsLattice>> = OnceLock::new();
    FLEET.get_or_init(|| {
        nakayama_fleet(4, 4)
            .into_iter()
            .map(|a| SerialAlgebra::new(a).unwrap())
            .filter(|s| s.module_count() <= 13)
            .map(|s| TorsLattice::enumerate(&s, DEFAULT_INDECOMPOSABLE_CAP).unwrap())
            .collect()
    })
}

fn simples_in(alg: &SerialAlgebra, c: ModuleSet) -> SimpleSet {
    let n = alg.vertex_count();
    SimpleSet::from_vertices(n, (0..n).filter(|&v| c.contains(alg.id(torslab_core::IntervalModule::new(v, 1)))))
        .unwrap()
}

#[test]
fn coherent_on_fleet() {
    for l in lattices() {
        coherence(l).unwrap();
    }
}

#[test]
fn simple_set_pairs_match_phi() {
    for l in lattices() {
        let alg = l.algebra();
        let verdicts = classify_all(l);
        for (i, p) in l.pairs().iter().enumerate() {
            let yes = verdicts.verdicts[i].status == Status::Yes;
            if p.torsion.iter().all(|x| alg.submodules(x).is_subset(p.torsion)) {
                let s = simples_in(alg, p.torsion);
                assert_eq!(yes, phi::hereditary_induces_de(alg.base(), s).induces_de, "{:?} {s:?}", alg.kupisch());
            }
            if p.free.iter().all(|x| alg.quotients(x).is_subset(p.free)) {
                let s = simples_in(alg, p.free);
                assert_eq!(yes, phi::cohereditary_induces_de(alg.base(), s).induces_de, "{:?} {s:?}", alg.kupisch());
            }
        }
    }
}

#[test]
fn gldim2_matches_filtration_oracle() {
    let mut checked = 0;
    for l in lattices() {
        let alg = l.algebra();
        if !alg.global_dimension().at_most(2) {
            continue;
        }
        let oracle = ClosureOracle::new(alg.base());
        let to_oracle: Vec<usize> = alg.indecomposables().iter().map(|m| oracle.id((m.top, m.len))).collect();
        let verdicts = classify_all(l);
        for (i, p) in l.pairs().iter().enumerate() {
            let mut members = vec![false; oracle.len()];
            for x in p.torsion.iter() {
                members[to_oracle[x]] = true;
            }
            let expected = oracle.gldim2_de(&members);
            assert_eq!(verdicts.verdicts[i].status == Status::Yes, expected, "{:?} pair {i}", alg.kupisch());
            let o = Outcomes::evaluate(l, i);
            let (g, c) = o.gldim2.unwrap();
            assert_eq!((g, c), (expected, expected));
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn decided_where_a_rule_is_exact() {
    for l in lattices() {
        let alg = l.algebra();
        let verdicts = classify_all(l);
        let all_ttf = (0..l.len()).all(|i| {
            let o = Outcomes::evaluate(l, i);
            o.hereditary.is_some() || o.cohereditary.is_some() || o.split
        });
        if alg.global_dimension().at_most(2) || all_ttf {
            assert!(verdicts.is_decided(), "{:?}", alg.kupisch());
        }
        assert_eq!(verdicts.verdicts[l.bottom()].status, Status::Yes);
        assert_eq!(verdicts.verdicts[l.top()].status, Status::Yes);
    }
}

/// Verdicts are constant on each class of the partition by `Λ ⊕ DΛ`, and
/// the upper/lower set property holds, whenever the global dimension is at
/// most two.
#[test]
fn gldim2_partition_structure() {
    for l in lattices() {
        let alg = l.algebra();
        if !alg.global_dimension().at_most(2) {
            continue;
        }
        let verdicts = classify_all(l);
        let yes = verdicts.derived();
        let m = alg.regular_module().direct_sum(&alg.dual_regular_module());
        for class in l.partition_by(&m) {
            assert!(class.members.iter().all(|&i| yes[i] == yes[class.min]));
        }
        assert_eq!(upper_lower_set_check(l, &verdicts), Ok(true));
    }
}

#[test]
fn acyclic_chain_structure() {
    let mut checked = 0;
    for l in lattices() {
        let alg = l.algebra();
        let verdicts = classify_all(l);
        match chain_extension_check(l, &verdicts) {
            Ok(ok) => {
                assert!(alg.base().is_acyclic_algebra());
                assert!(ok, "{:?}", alg.kupisch());
                checked += 1;
            }
            Err(PreconditionError::NotAcyclic) => assert!(!alg.base().is_acyclic_algebra()),
            Err(PreconditionError::Undecided(n)) => assert!(n > 0 && !alg.global_dimension().at_most(2)),
            Err(e) => panic!("{e}"),
        }
    }
    assert!(checked > 5);
}

#[test]
fn self_injective_verdicts() {
    for l in lattices() {
        let alg = l.algebra();
        if !alg.self_injective() {
            continue;
        }
        let report = nakayama_permutation(alg.base());
        assert!(report.defined);
        let n = alg.vertex_count();
        for b in 0u64..1 << n {
            let s = SimpleSet::from_bits(n, b);
            let closed = self_injective_closed_under_nu(alg.base(), s).unwrap();
            for kind in [PairKind::Hereditary, PairKind::Cohereditary] {
                assert_eq!(phi::verdict(alg.base(), kind, s).induces_de, closed);
                assert_eq!(phi::verdict(alg.base(), kind, s.complement()).induces_de, closed);
            }
        }
    }
}

#[test]
fn small_counts() {
    let count = |alg| {
        let l = TorsLattice::enumerate(&SerialAlgebra::new(alg).unwrap(), DEFAULT_INDECOMPOSABLE_CAP).unwrap();
        let c = classify_all(&l);
        (l.len(), c.count(Status::Yes), c.count(Status::No), c.count(Status::Unknown))
    };
    assert_eq!(count(linear_an(2, None).unwrap()), (5, 4, 1, 0));
    // three hereditary pairs contain the sink without its predecessors and
    // one cohereditary pair contains the source without its successors
    assert_eq!(count(linear_an(3, None).unwrap()), (14, 10, 4, 0));
    assert_eq!(count(cyclic_radn(2, 2).unwrap()), (6, 2, 4, 0));
    assert_eq!(count(cyclic_radn(2, 3).unwrap()), (6, 6, 0, 0));
    let rad2 = SerialAlgebra::new(linear_an(3, Some(2)).unwrap()).unwrap();
    assert_eq!(rad2.global_dimension(), GlobalDimension::Finite(2));
}
