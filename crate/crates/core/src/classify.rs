//! Derived-equivalence verdicts for the torsion pairs of a serial algebra.
//!
//! Rules are tried in a fixed order and the first one that applies decides:
//!
//! 1. every indecomposable has a split torsion sequence: yes;
//! 2. every indecomposable injective does (stable pair): yes;
//! 3. every indecomposable projective does: yes;
//! 4. the torsion class is closed under submodules: yes iff
//!    `^⊥𝒯 ∩ Proj ⊆ ℱ`;
//! 5. the torsion-free class is closed under quotients: yes iff
//!    `ℱ^⊥ ∩ Inj ⊆ 𝒯`;
//! 6. global dimension at most 2: yes iff `P/tr_ℱ P ∈ cogen 𝒯` for every
//!    indecomposable projective `P` (checked against the dual test
//!    `rej_𝒯 E ∈ gen ℱ` on injectives);
//! 7. otherwise the necessary condition `ℱ^⊥ ∩ Inj ⊆ 𝒯` and
//!    `^⊥𝒯 ∩ Proj ⊆ ℱ` either fails (no) or the verdict is unknown.
//!
//! [`Outcomes`] evaluates every rule independently so that overlapping rules
//! can be checked for agreement.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::serial::{IntervalModule, SerialAlgebra};
use crate::sets::ModuleSet;
use crate::tors::TorsLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reason {
    Split,
    Stable,
    CoStable,
    TtfHereditary,
    TtfCohereditary,
    GlDim2Exact,
    NecessaryFailed,
    Exhausted,
}

impl Reason {
    pub const ALL: [Reason; 8] = [
        Reason::Split,
        Reason::Stable,
        Reason::CoStable,
        Reason::TtfHereditary,
        Reason::TtfCohereditary,
        Reason::GlDim2Exact,
        Reason::NecessaryFailed,
        Reason::Exhausted,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Split => "split",
            Reason::Stable => "stable",
            Reason::CoStable => "co-stable",
            Reason::TtfHereditary => "ttf-hereditary",
            Reason::TtfCohereditary => "ttf-cohereditary",
            Reason::GlDim2Exact => "gldim2-exact",
            Reason::NecessaryFailed => "necessary-failed",
            Reason::Exhausted => "exhausted",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One row of the global-dimension-two test: the projective `P_v`, the
/// residue `P_v / tr_ℱ P_v`, and a torsion indecomposable it embeds into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gldim2Row {
    pub vertex: usize,
    pub projective: usize,
    pub residue: Option<usize>,
    pub host: Option<usize>,
}

impl Gldim2Row {
    pub fn passes(&self) -> bool {
        self.residue.is_none() || self.host.is_some()
    }
}

/// Evidence attached to a verdict. Module references are indices into the
/// algebra's list of indecomposables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    /// Modules whose torsion sequences were checked and split.
    Split(Vec<usize>),
    /// Modules checked to lie on the required side of the pair.
    Contained(Vec<usize>),
    /// A projective in `^⊥𝒯 ∖ ℱ` or an injective in `ℱ^⊥ ∖ 𝒯`.
    Module(usize),
    Gldim2(Vec<Gldim2Row>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub reason: Reason,
    pub witness: Witness,
}

impl Verdict {
    fn new(status: Status, reason: Reason, witness: Witness) -> Self {
        Verdict { status, reason, witness }
    }
}

/// Every rule evaluated on one pair; `None` where a rule does not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcomes {
    pub split: bool,
    pub stable: bool,
    pub costable: bool,
    pub hereditary: Option<bool>,
    pub cohereditary: Option<bool>,
    /// Generator-side and cogenerator-side answers.
    pub gldim2: Option<(bool, bool)>,
    pub necessary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CoherenceViolation {
    #[error("pair {pair}: exact rules disagree")]
    ExactRulesDisagree { pair: usize },
    #[error("pair {pair}: generator and cogenerator tests disagree")]
    Gldim2SidesDisagree { pair: usize },
    #[error("pair {pair}: a sufficient rule says yes but the necessary condition fails")]
    NecessaryViolated { pair: usize },
}

impl Outcomes {
    pub fn evaluate(lattice: &TorsLattice, i: usize) -> Self {
        let alg = lattice.algebra();
        let p = lattice.pair(i);
        let all = ModuleSet::full(alg.module_count());
        let (t, f) = (p.torsion, p.free);
        let proj = alg.projectives();
        let inj = alg.injectives();
        let hereditary = t.iter().all(|x| alg.submodules(x).is_subset(t));
        let cohereditary = f.iter().all(|x| alg.quotients(x).is_subset(f));
        let proj_ok = failing_projective(alg, t, f).is_none();
        let inj_ok = failing_injective(alg, t, f).is_none();
        let gldim2 = alg
            .global_dimension()
            .at_most(2)
            .then(|| (generator_rows(alg, t, f).iter().all(Gldim2Row::passes), cogenerator_side(alg, t, f).is_none()));
        Outcomes {
            split: lattice.splits_on(i, all),
            stable: lattice.splits_on(i, inj),
            costable: lattice.splits_on(i, proj),
            hereditary: hereditary.then_some(proj_ok),
            cohereditary: cohereditary.then_some(inj_ok),
            gldim2,
            necessary: proj_ok && inj_ok,
        }
    }

    /// Exact rules agree, the two gldim-2 sides agree, and any rule saying
    /// yes is compatible with the necessary condition.
    pub fn check(&self, pair: usize) -> Result<(), CoherenceViolation> {
        if let Some((g, c)) = self.gldim2 {
            if g != c {
                return Err(CoherenceViolation::Gldim2SidesDisagree { pair });
            }
        }
        let exact: Vec<bool> =
            [self.hereditary, self.cohereditary, self.gldim2.map(|g| g.0)].into_iter().flatten().collect();
        if exact.windows(2).any(|w| w[0] != w[1]) {
            return Err(CoherenceViolation::ExactRulesDisagree { pair });
        }
        let any_yes = self.split || self.stable || self.costable || exact.iter().any(|&b| b);
        if any_yes && !self.necessary {
            return Err(CoherenceViolation::NecessaryViolated { pair });
        }
        Ok(())
    }
}

fn failing_projective(alg: &SerialAlgebra, t: ModuleSet, f: ModuleSet) -> Option<usize> {
    alg.left_perp(t).intersection(alg.projectives()).difference(f).iter().next()
}

fn failing_injective(alg: &SerialAlgebra, t: ModuleSet, f: ModuleSet) -> Option<usize> {
    alg.right_perp(f).intersection(alg.injectives()).difference(t).iter().next()
}

fn generator_rows(alg: &SerialAlgebra, t: ModuleSet, f: ModuleSet) -> Vec<Gldim2Row> {
    (0..alg.vertex_count())
        .map(|v| {
            let pv = alg.projective_cover(v);
            let keep = pv.len - alg.trace_len(f, pv);
            let residue = (keep > 0).then(|| alg.id(IntervalModule::new(v, keep)));
            let host = residue.and_then(|r| t.iter().find(|&x| alg.submodules(x).contains(r)));
            Gldim2Row { vertex: v, projective: alg.id(pv), residue, host }
        })
        .collect()
}

/// The first injective whose reject in `𝒯` is not generated by `ℱ`.
fn cogenerator_side(alg: &SerialAlgebra, t: ModuleSet, f: ModuleSet) -> Option<usize> {
    let gen_f = alg.gen_closure(f);
    (0..alg.vertex_count()).map(|v| alg.injective_envelope(v)).find_map(|e| {
        let r = alg.reject_len(t, e);
        let sub = alg.submodule_of_length(e, r).expect("reject fits");
        match sub {
            Some(x) if !gen_f.contains(alg.id(x)) => Some(alg.id(e)),
            _ => None,
        }
    })
}

/// Classifies pair `i` of the lattice by the first applicable rule.
pub fn classify(lattice: &TorsLattice, i: usize) -> Verdict {
    let alg = lattice.algebra();
    let p = lattice.pair(i);
    let (t, f) = (p.torsion, p.free);
    let all = ModuleSet::full(alg.module_count());
    let proj = alg.projectives();
    let inj = alg.injectives();

    if lattice.splits_on(i, all) {
        return Verdict::new(Status::Yes, Reason::Split, Witness::Split(all.iter().collect()));
    }
    if lattice.splits_on(i, inj) {
        return Verdict::new(Status::Yes, Reason::Stable, Witness::Split(inj.iter().collect()));
    }
    if lattice.splits_on(i, proj) {
        return Verdict::new(Status::Yes, Reason::CoStable, Witness::Split(proj.iter().collect()));
    }
    if t.iter().all(|x| alg.submodules(x).is_subset(t)) {
        return match failing_projective(alg, t, f) {
            Some(x) => Verdict::new(Status::No, Reason::TtfHereditary, Witness::Module(x)),
            None => Verdict::new(
                Status::Yes,
                Reason::TtfHereditary,
                Witness::Contained(alg.left_perp(t).intersection(proj).iter().collect()),
            ),
        };
    }
    if f.iter().all(|x| alg.quotients(x).is_subset(f)) {
        return match failing_injective(alg, t, f) {
            Some(x) => Verdict::new(Status::No, Reason::TtfCohereditary, Witness::Module(x)),
            None => Verdict::new(
                Status::Yes,
                Reason::TtfCohereditary,
                Witness::Contained(alg.right_perp(f).intersection(inj).iter().collect()),
            ),
        };
    }
    if alg.global_dimension().at_most(2) {
        let rows = generator_rows(alg, t, f);
        let yes = rows.iter().all(Gldim2Row::passes);
        debug_assert_eq!(yes, cogenerator_side(alg, t, f).is_none());
        let status = if yes { Status::Yes } else { Status::No };
        return Verdict::new(status, Reason::GlDim2Exact, Witness::Gldim2(rows));
    }
    if let Some(x) = failing_injective(alg, t, f).or_else(|| failing_projective(alg, t, f)) {
        return Verdict::new(Status::No, Reason::NecessaryFailed, Witness::Module(x));
    }
    Verdict::new(Status::Unknown, Reason::Exhausted, Witness::None)
}

/// Verdicts for a whole lattice, indexed like the lattice.
#[derive(Clone, Debug)]
pub struct Classification {
    pub verdicts: Vec<Verdict>,
}

impl Classification {
    pub fn count(&self, status: Status) -> usize {
        self.verdicts.iter().filter(|v| v.status == status).count()
    }

    pub fn count_reason(&self, status: Status, reason: Reason) -> usize {
        self.verdicts.iter().filter(|v| v.status == status && v.reason == reason).count()
    }

    /// Membership mask of `tors^d`.
    pub fn derived(&self) -> Vec<bool> {
        self.verdicts.iter().map(|v| v.status == Status::Yes).collect()
    }

    pub fn is_decided(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Unknown)
    }
}

pub fn classify_all(lattice: &TorsLattice) -> Classification {
    Classification { verdicts: (0..lattice.len()).map(|i| classify(lattice, i)).collect() }
}

/// Runs [`Outcomes::check`] on every pair.
pub fn coherence(lattice: &TorsLattice) -> Result<(), CoherenceViolation> {
    (0..lattice.len()).try_for_each(|i| Outcomes::evaluate(lattice, i).check(i))
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("the algebra has global dimension {0}, above 2")]
    GlobalDimension(crate::serial::GlobalDimension),
    #[error("the algebra is not acyclic")]
    NotAcyclic,
    #[error("{0} pairs have an unknown verdict")]
    Undecided(usize),
}

/// Within each class of the partition by the torsion sequence of `Λ`, the
/// yes-verdicts form an upper set; for `DΛ`, a lower set.
pub fn upper_lower_set_check(lattice: &TorsLattice, verdicts: &Classification) -> Result<bool, PreconditionError> {
    let alg = lattice.algebra();
    let g = alg.global_dimension();
    if !g.at_most(2) {
        return Err(PreconditionError::GlobalDimension(g));
    }
    let yes = verdicts.derived();
    let closed = |m: &crate::serial::ModuleSum, upward: bool| {
        lattice.partition_by(m).iter().all(|class| {
            class.members.iter().all(|&a| {
                !yes[a]
                    || class.members.iter().all(|&b| {
                        let related = if upward { lattice.leq(a, b) } else { lattice.leq(b, a) };
                        !related || yes[b]
                    })
            })
        })
    };
    Ok(closed(&alg.regular_module(), true) && closed(&alg.dual_regular_module(), false))
}

/// For acyclic algebras with every verdict decided: every nonzero member of
/// `tors^d` lies above a hereditary atom `(filt S, S^⊥)` in `tors^d`, every
/// member other than `𝟏` lies below a cohereditary coatom `(^⊥S, filt S)` in
/// `tors^d`, and `tors^d` is a union of maximal chains.
pub fn chain_extension_check(lattice: &TorsLattice, verdicts: &Classification) -> Result<bool, PreconditionError> {
    let alg = lattice.algebra();
    if !alg.base().is_acyclic_algebra() {
        return Err(PreconditionError::NotAcyclic);
    }
    let unknown = verdicts.count(Status::Unknown);
    if unknown > 0 {
        return Err(PreconditionError::Undecided(unknown));
    }
    let yes = verdicts.derived();
    let m = alg.module_count();
    let simples: Vec<usize> = (0..alg.vertex_count()).map(|v| alg.id(IntervalModule::new(v, 1))).collect();
    let filt = |v: usize| -> ModuleSet { (0..m).filter(|&x| alg.support(x) == 1 << v).collect() };
    let atom = |v: usize| lattice.index_of(filt(v)).expect("filt of a simple is a torsion class");
    let coatom = |v: usize| lattice.cogenerated_by(ModuleSet::singleton(simples[v]));

    for i in 0..lattice.len() {
        if !yes[i] {
            continue;
        }
        let p = lattice.pair(i);
        if i != lattice.bottom() && !(0..alg.vertex_count()).any(|v| p.torsion.contains(simples[v]) && yes[atom(v)]) {
            return Ok(false);
        }
        if i != lattice.top() && !(0..alg.vertex_count()).any(|v| p.free.contains(simples[v]) && yes[coatom(v)]) {
            return Ok(false);
        }
    }
    Ok(lattice.is_union_of_maximal_chains(&yes))
}
