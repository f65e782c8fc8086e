//! Exhaustive enumerations split over disjoint ranges of the subset space.
//! Results are merged in range order, so output does not depend on the
//! number of workers.

use std::ops::Range;
use std::thread;

use torslab_core::classify::{classify, Classification};
use torslab_core::phi::{count_de_in, de_sets_in, PhiError, PhiTable};
use torslab_core::tors::{check_cap, torsion_classes_in, TorsError};
use torslab_core::{AlgebraPresentation, PairKind, SerialAlgebra, SimpleSet, TorsLattice};

/// Splits `0..total` into at most `jobs` contiguous ranges.
fn chunks(total: u64, jobs: usize) -> Vec<Range<u64>> {
    let jobs = (jobs.max(1) as u64).min(total.max(1));
    let step = total.div_ceil(jobs);
    (0..jobs).map(|j| j * step..((j + 1) * step).min(total)).filter(|r| !r.is_empty()).collect()
}

fn map_ranges<T: Send>(total: u64, jobs: usize, f: impl Fn(Range<u64>) -> T + Sync) -> Vec<T> {
    let ranges = chunks(total, jobs);
    if ranges.len() <= 1 {
        return ranges.into_iter().map(&f).collect();
    }
    thread::scope(|s| {
        let handles: Vec<_> = ranges.into_iter().map(|r| s.spawn(|| f(r))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn subset_space(alg: &AlgebraPresentation, cap: usize) -> Result<u64, PhiError> {
    let n = alg.vertex_count();
    if n > cap || n > 63 {
        return Err(PhiError::SubsetCapExceeded { n, cap: cap.min(63) });
    }
    Ok(1u64 << n)
}

pub fn count_de(alg: &AlgebraPresentation, kind: PairKind, cap: usize, jobs: usize) -> Result<u64, PhiError> {
    let total = subset_space(alg, cap)?;
    let table = PhiTable::new(alg);
    Ok(map_ranges(total, jobs, |r| count_de_in(&table, kind, r)).into_iter().sum())
}

pub fn de_sets(alg: &AlgebraPresentation, kind: PairKind, cap: usize, jobs: usize) -> Result<Vec<SimpleSet>, PhiError> {
    let total = subset_space(alg, cap)?;
    let table = PhiTable::new(alg);
    Ok(map_ranges(total, jobs, |r| de_sets_in(&table, kind, r)).into_iter().flatten().collect())
}

pub fn enumerate_lattice(alg: &SerialAlgebra, cap: usize, jobs: usize) -> Result<TorsLattice, TorsError> {
    check_cap(alg, cap)?;
    let total = 1u64 << alg.module_count();
    let classes = map_ranges(total, jobs, |r| torsion_classes_in(alg, r)).into_iter().flatten().collect();
    Ok(TorsLattice::from_torsion_classes(alg, classes))
}

pub fn classify_all(lattice: &TorsLattice, jobs: usize) -> Classification {
    let verdicts =
        map_ranges(lattice.len() as u64, jobs, |r| r.map(|i| classify(lattice, i as usize)).collect::<Vec<_>>());
    Classification { verdicts: verdicts.into_iter().flatten().collect() }
}
