//! Report data and its text, JSON and DOT renderings.
//!
//! Vertices appear under their labels from the input; modules are written
//! `M(top,length)` with the top's label and referenced by their index in the
//! `modules` list.

use std::fmt::Write as _;

use serde::Serialize;
use torslab_core::classify::{Classification, Gldim2Row, Witness};
use torslab_core::phi::{HereditaryPairVerdict, NakayamaPermutationReport};
use torslab_core::tors::EpsilonClass;
use torslab_core::{
    AlgebraPresentation, GlobalDimension, IntervalModule, Path, Reason, SerialAlgebra, SimpleSet, Status, TorsLattice,
};

pub const SCHEMA: u32 = 1;

pub fn labels(alg: &AlgebraPresentation, s: SimpleSet) -> Vec<u32> {
    s.iter().map(|v| alg.quiver().label(v)).collect()
}

fn set_text(v: &[u32]) -> String {
    let inner: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn module_name(alg: &SerialAlgebra, m: IntervalModule) -> String {
    format!("M({},{})", alg.base().quiver().label(m.top), m.len)
}

#[derive(Serialize)]
pub struct PathReport {
    pub source: u32,
    pub target: u32,
    pub arrows: Vec<String>,
}

impl PathReport {
    pub fn new(alg: &AlgebraPresentation, p: &Path) -> Self {
        let q = alg.quiver();
        PathReport {
            source: q.label(p.source()),
            target: q.label(p.target()),
            arrows: p.arrows().iter().map(|&a| q.arrow(a).name.clone()).collect(),
        }
    }

    fn text(&self) -> String {
        if self.arrows.is_empty() {
            format!("e{}", self.source)
        } else {
            format!("{} ({} ~> {})", self.arrows.join(" "), self.source, self.target)
        }
    }
}

#[derive(Serialize)]
pub struct NakayamaReport {
    pub defined: bool,
    pub permutation: Option<Vec<(u32, u32)>>,
    pub weakly_symmetric: bool,
}

impl NakayamaReport {
    pub fn new(alg: &AlgebraPresentation, r: &NakayamaPermutationReport) -> Self {
        let q = alg.quiver();
        NakayamaReport {
            defined: r.defined,
            permutation: r
                .permutation
                .as_ref()
                .map(|p| p.iter().enumerate().map(|(v, &w)| (q.label(v), q.label(w))).collect()),
            weakly_symmetric: r.weakly_symmetric,
        }
    }
}

#[derive(Serialize)]
pub struct PhiReport {
    pub schema: u32,
    pub command: &'static str,
    pub set: Vec<u32>,
    pub phi_plus: Vec<u32>,
    pub phi_minus: Vec<u32>,
    pub acyclic: bool,
    pub nakayama_permutation: NakayamaReport,
    /// Present for serial algebras only.
    pub self_injective: Option<bool>,
}

impl PhiReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "S       = {}", set_text(&self.set)).unwrap();
        writeln!(s, "Phi+(S) = {}", set_text(&self.phi_plus)).unwrap();
        writeln!(s, "Phi-(S) = {}", set_text(&self.phi_minus)).unwrap();
        writeln!(s, "acyclic: {}", yes_no(self.acyclic)).unwrap();
        let nu = &self.nakayama_permutation;
        match &nu.permutation {
            Some(p) => {
                let maps: Vec<String> = p.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                let tag = if nu.weakly_symmetric { " (weakly symmetric)" } else { "" };
                writeln!(s, "nakayama permutation: {}{tag}", maps.join(" ")).unwrap();
            }
            None => writeln!(s, "nakayama permutation: undefined").unwrap(),
        }
        if let Some(si) = self.self_injective {
            writeln!(s, "self-injective: {}", yes_no(si)).unwrap();
        }
        s
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub command: &'static str,
    pub kind: &'static str,
    pub set: Vec<u32>,
    pub induces_de: bool,
    pub witness: Option<PathReport>,
}

impl CheckReport {
    pub fn new(alg: &AlgebraPresentation, v: &HereditaryPairVerdict) -> Self {
        CheckReport {
            schema: SCHEMA,
            command: "check",
            kind: v.kind.as_str(),
            set: labels(alg, v.set),
            induces_de: v.induces_de,
            witness: v.witness.as_ref().map(|p| PathReport::new(alg, p)),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "{} pair for S = {}: {}\n",
            self.kind,
            set_text(&self.set),
            if self.induces_de { "YES, induces derived equivalence" } else { "NO" }
        );
        if let Some(w) = &self.witness {
            writeln!(s, "witness: {} cannot be prolonged to a nonzero path with both ends outside S", w.text())
                .unwrap();
        }
        s
    }
}

#[derive(Serialize)]
pub struct CountReport {
    pub schema: u32,
    pub command: &'static str,
    pub kind: &'static str,
    pub vertices: usize,
    pub total: u64,
    pub count: u64,
    pub sets: Option<Vec<Vec<u32>>>,
}

impl CountReport {
    pub fn text(&self) -> String {
        let mut s = format!("{} of {} {} pairs induce derived equivalence\n", self.count, self.total, self.kind);
        for set in self.sets.iter().flatten() {
            writeln!(s, "  {}", set_text(set)).unwrap();
        }
        s
    }
}

#[derive(Serialize)]
pub struct ModuleReport {
    pub id: usize,
    pub name: String,
    pub top: u32,
    pub length: usize,
}

#[derive(Serialize)]
pub struct AlgebraReport {
    pub vertices: Vec<u32>,
    pub kupisch: Vec<usize>,
    pub global_dimension: Option<usize>,
    pub acyclic: bool,
    pub self_injective: bool,
}

impl AlgebraReport {
    pub fn new(alg: &SerialAlgebra) -> Self {
        AlgebraReport {
            vertices: alg.base().quiver().labels().to_vec(),
            kupisch: alg.kupisch().to_vec(),
            global_dimension: match alg.global_dimension() {
                GlobalDimension::Finite(d) => Some(d),
                GlobalDimension::Infinite => None,
            },
            acyclic: alg.base().is_acyclic_algebra(),
            self_injective: alg.self_injective(),
        }
    }
}

#[derive(Serialize)]
pub struct Gldim2RowReport {
    pub vertex: u32,
    pub projective: usize,
    pub residue: Option<usize>,
    pub host: Option<usize>,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessReport {
    None,
    Split { modules: Vec<usize> },
    Contained { modules: Vec<usize> },
    Module { module: usize },
    Gldim2 { rows: Vec<Gldim2RowReport> },
}

impl WitnessReport {
    fn new(alg: &SerialAlgebra, w: &Witness) -> Self {
        match w {
            Witness::None => WitnessReport::None,
            Witness::Split(m) => WitnessReport::Split { modules: m.clone() },
            Witness::Contained(m) => WitnessReport::Contained { modules: m.clone() },
            Witness::Module(m) => WitnessReport::Module { module: *m },
            Witness::Gldim2(rows) => WitnessReport::Gldim2 {
                rows: rows
                    .iter()
                    .map(|r: &Gldim2Row| Gldim2RowReport {
                        vertex: alg.base().quiver().label(r.vertex),
                        projective: r.projective,
                        residue: r.residue,
                        host: r.host,
                    })
                    .collect(),
            },
        }
    }
}

#[derive(Serialize)]
pub struct PairReport {
    pub id: usize,
    pub torsion: Vec<usize>,
    pub free: Vec<usize>,
    pub status: &'static str,
    pub reason: &'static str,
    pub witness: WitnessReport,
}

#[derive(Serialize)]
pub struct EpsilonReport {
    pub profile: Vec<usize>,
    pub members: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub interval: bool,
    /// `yes`, `no` or `mixed` over the members' verdicts.
    pub verdicts: &'static str,
}

#[derive(Serialize)]
pub struct PartitionReport {
    pub module: String,
    pub summands: Vec<usize>,
    pub classes: Vec<EpsilonReport>,
}

#[derive(Serialize)]
pub struct Summary {
    pub pairs: usize,
    pub yes: usize,
    pub no: usize,
    pub unknown: usize,
    pub by_reason: Vec<ReasonCount>,
    pub union_of_maximal_chains: bool,
}

#[derive(Serialize)]
pub struct ReasonCount {
    pub status: &'static str,
    pub reason: &'static str,
    pub count: usize,
}

#[derive(Serialize)]
pub struct LatticeReport {
    pub schema: u32,
    pub command: &'static str,
    pub algebra: AlgebraReport,
    pub modules: Vec<ModuleReport>,
    pub pairs: Vec<PairReport>,
    pub covers: Vec<(usize, usize)>,
    pub summary: Summary,
    pub partition: Option<PartitionReport>,
}

/// The module whose torsion sequences define the epsilon partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionModule {
    None,
    /// `Λ`
    Regular,
    /// `DΛ`
    Dual,
    /// `Λ ⊕ DΛ`
    Both,
    /// The indecomposable injectives that are not projective.
    InjectiveNonProjective,
}

impl PartitionModule {
    pub fn module(self, alg: &SerialAlgebra) -> Option<(String, torslab_core::ModuleSum)> {
        let name = |s: &str| s.to_string();
        match self {
            PartitionModule::None => None,
            PartitionModule::Regular => Some((name("regular"), alg.regular_module())),
            PartitionModule::Dual => Some((name("dual"), alg.dual_regular_module())),
            PartitionModule::Both => {
                Some((name("regular+dual"), alg.regular_module().direct_sum(&alg.dual_regular_module())))
            }
            PartitionModule::InjectiveNonProjective => {
                let m = alg.injectives().difference(alg.projectives()).iter().map(|i| alg.module(i)).collect();
                Some((name("injective-nonprojective"), m))
            }
        }
    }
}

pub fn pair_report(lattice: &TorsLattice, verdicts: &Classification, i: usize) -> PairReport {
    let p = lattice.pair(i);
    let v = &verdicts.verdicts[i];
    PairReport {
        id: i,
        torsion: p.torsion.iter().collect(),
        free: p.free.iter().collect(),
        status: v.status.as_str(),
        reason: v.reason.as_str(),
        witness: WitnessReport::new(lattice.algebra(), &v.witness),
    }
}

fn class_verdicts(class: &EpsilonClass, verdicts: &Classification) -> &'static str {
    let yes = class.members.iter().filter(|&&i| verdicts.verdicts[i].status == Status::Yes).count();
    if yes == class.members.len() {
        "yes"
    } else if yes == 0 && class.members.iter().all(|&i| verdicts.verdicts[i].status == Status::No) {
        "no"
    } else {
        "mixed"
    }
}

pub fn lattice_report(lattice: &TorsLattice, verdicts: &Classification, partition: PartitionModule) -> LatticeReport {
    let alg = lattice.algebra();
    let mut by_reason = Vec::new();
    for status in [Status::Yes, Status::No, Status::Unknown] {
        for reason in Reason::ALL {
            let count = verdicts.count_reason(status, reason);
            if count > 0 {
                by_reason.push(ReasonCount { status: status.as_str(), reason: reason.as_str(), count });
            }
        }
    }
    let partition = partition.module(alg).map(|(name, m)| PartitionReport {
        module: name,
        summands: m.summands().iter().map(|&x| alg.id(x)).collect(),
        classes: lattice
            .partition_by(&m)
            .iter()
            .map(|c| EpsilonReport {
                profile: c.profile.clone(),
                members: c.members.clone(),
                min: c.min,
                max: c.max,
                interval: c.is_interval(lattice),
                verdicts: class_verdicts(c, verdicts),
            })
            .collect(),
    });
    LatticeReport {
        schema: SCHEMA,
        command: "lattice",
        algebra: AlgebraReport::new(alg),
        modules: alg
            .indecomposables()
            .iter()
            .enumerate()
            .map(|(id, &m)| ModuleReport {
                id,
                name: module_name(alg, m),
                top: alg.base().quiver().label(m.top),
                length: m.len,
            })
            .collect(),
        pairs: (0..lattice.len()).map(|i| pair_report(lattice, verdicts, i)).collect(),
        covers: lattice.covers().to_vec(),
        summary: Summary {
            pairs: lattice.len(),
            yes: verdicts.count(Status::Yes),
            no: verdicts.count(Status::No),
            unknown: verdicts.count(Status::Unknown),
            by_reason,
            union_of_maximal_chains: lattice.is_union_of_maximal_chains(&verdicts.derived()),
        },
        partition,
    }
}

impl LatticeReport {
    fn names(&self, ids: &[usize]) -> String {
        let v: Vec<&str> = ids.iter().map(|&i| self.modules[i].name.as_str()).collect();
        format!("[{}]", v.join(" "))
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let a = &self.algebra;
        let gd = a.global_dimension.map_or("infinite".to_string(), |d| d.to_string());
        writeln!(s, "kupisch series {:?}, global dimension {gd}", a.kupisch).unwrap();
        writeln!(s, "acyclic: {}, self-injective: {}", yes_no(a.acyclic), yes_no(a.self_injective)).unwrap();
        let sm = &self.summary;
        writeln!(s, "{} torsion pairs: {} yes, {} no, {} unknown", sm.pairs, sm.yes, sm.no, sm.unknown).unwrap();
        for r in &sm.by_reason {
            writeln!(s, "  {:<7} {:<17} {}", r.status, r.reason, r.count).unwrap();
        }
        writeln!(s, "derived pairs form a union of maximal chains: {}", yes_no(sm.union_of_maximal_chains)).unwrap();
        writeln!(s).unwrap();
        for p in &self.pairs {
            writeln!(
                s,
                "#{:<3} {:<7} {:<17} T={} F={}",
                p.id,
                p.status,
                p.reason,
                self.names(&p.torsion),
                self.names(&p.free)
            )
            .unwrap();
        }
        writeln!(s).unwrap();
        let covers: Vec<String> = self.covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
        writeln!(s, "covers: {}", covers.join(" ")).unwrap();
        if let Some(part) = &self.partition {
            writeln!(s, "\npartition by torsion sequences of {} = {}:", part.module, self.names(&part.summands))
                .unwrap();
            for c in &part.classes {
                writeln!(
                    s,
                    "  profile {:?}: {:?} interval [{}, {}]{} verdicts {}",
                    c.profile,
                    c.members,
                    c.min,
                    c.max,
                    if c.interval { "" } else { " (NOT an interval)" },
                    c.verdicts
                )
                .unwrap();
            }
        }
        s
    }

    /// Hasse diagram: undirected cover edges with the bottom drawn lowest,
    /// fill by verdict, dashed clusters for the partition classes.
    pub fn dot(&self) -> String {
        let mut s = String::new();
        writeln!(s, "graph tors {{").unwrap();
        writeln!(s, "  rankdir=BT;").unwrap();
        writeln!(s, "  node [shape=circle, style=filled, label=\"\", width=0.3, color=black];").unwrap();
        let fill = |status: &str| match status {
            "yes" => "black",
            "no" => "white",
            _ => "gray",
        };
        let node = |s: &mut String, indent: &str, p: &PairReport| {
            writeln!(s, "{indent}p{} [fillcolor={}, tooltip=\"T={}\"];", p.id, fill(p.status), self.names(&p.torsion))
                .unwrap();
        };
        match &self.partition {
            Some(part) => {
                for (k, c) in part.classes.iter().enumerate() {
                    writeln!(s, "  subgraph cluster_{k} {{").unwrap();
                    writeln!(s, "    style=dashed;").unwrap();
                    for &i in &c.members {
                        node(&mut s, "    ", &self.pairs[i]);
                    }
                    writeln!(s, "  }}").unwrap();
                }
            }
            None => {
                for p in &self.pairs {
                    node(&mut s, "  ", p);
                }
            }
        }
        for (a, b) in &self.covers {
            writeln!(s, "  p{a} -- p{b};").unwrap();
        }
        writeln!(s, "}}").unwrap();
        s
    }
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub schema: u32,
    pub command: &'static str,
    pub modules: Vec<ModuleReport>,
    pub pairs: Vec<PairReport>,
}

impl ClassifyReport {
    pub fn new(lattice: &TorsLattice, verdicts: &Classification, ids: &[usize]) -> Self {
        let alg = lattice.algebra();
        ClassifyReport {
            schema: SCHEMA,
            command: "classify",
            modules: alg
                .indecomposables()
                .iter()
                .enumerate()
                .map(|(id, &m)| ModuleReport {
                    id,
                    name: module_name(alg, m),
                    top: alg.base().quiver().label(m.top),
                    length: m.len,
                })
                .collect(),
            pairs: ids.iter().map(|&i| pair_report(lattice, verdicts, i)).collect(),
        }
    }

    fn name(&self, i: usize) -> &str {
        &self.modules[i].name
    }

    fn witness_text(&self, w: &WitnessReport) -> String {
        let list = |ids: &[usize]| ids.iter().map(|&i| self.name(i)).collect::<Vec<_>>().join(" ");
        match w {
            WitnessReport::None => "none".to_string(),
            WitnessReport::Split { modules } => format!("split torsion sequences of {}", list(modules)),
            WitnessReport::Contained { modules } => format!("required modules on the correct side: {}", list(modules)),
            WitnessReport::Module { module } => format!("module {} violates the condition", self.name(*module)),
            WitnessReport::Gldim2 { rows } => {
                let parts: Vec<String> = rows
                    .iter()
                    .map(|r| match (r.residue, r.host) {
                        (None, _) => format!("P{}: residue 0", r.vertex),
                        (Some(x), Some(h)) => format!("P{}: {} embeds in {}", r.vertex, self.name(x), self.name(h)),
                        (Some(x), None) => format!("P{}: {} not cogenerated", r.vertex, self.name(x)),
                    })
                    .collect();
                parts.join("; ")
            }
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        for p in &self.pairs {
            let names: Vec<&str> = p.torsion.iter().map(|&i| self.name(i)).collect();
            writeln!(s, "#{} T=[{}]: {} ({})", p.id, names.join(" "), p.status.to_uppercase(), p.reason).unwrap();
            writeln!(s, "    {}", self.witness_text(&p.witness)).unwrap();
        }
        s
    }
}
