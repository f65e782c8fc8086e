//! Command-line interface.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use torslab_core::phi::{self, nakayama_permutation, PhiError, DEFAULT_SUBSET_CAP};
use torslab_core::tors::{TorsError, DEFAULT_INDECOMPOSABLE_CAP};
use torslab_core::{
    AlgebraPresentation, PairKind, SerialAlgebra, SerialError, SimpleSet, TorsLattice, DEFAULT_PATH_CAP,
};

use crate::input::{self, InputError, PRESETS};
use crate::parallel;
use crate::report::{self, CheckReport, ClassifyReport, CountReport, NakayamaReport, PartitionModule, PhiReport};

const AFTER_HELP: &str = "\
Modules are right modules: P_i = e_i A and paths compose left to right, so the
socle of P_i is spanned by the tail-maximal paths starting at i. To work with
left modules, reverse every arrow of the input.

Exit codes: 0 success, 2 parse or validation error, 3 cap exceeded,
4 precondition unmet (e.g. a lattice command on a non-serial algebra).";

#[derive(Parser, Debug)]
#[command(name = "torslab", version, about = "Torsion pairs and derived equivalences of monomial path algebras", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print Phi+(S) and Phi-(S) together with the Nakayama permutation.
    Phi(SetArgs),
    /// Decide whether the (co)hereditary pair of a set of simples induces
    /// derived equivalence.
    Check(KindArgs),
    /// Count the sets of simples whose (co)hereditary pair induces derived
    /// equivalence.
    Count(CountArgs),
    /// Enumerate and classify the lattice of torsion pairs of a serial
    /// algebra.
    Lattice(LatticeArgs),
    /// Classify all torsion pairs of a serial algebra, or selected ones.
    Classify(ClassifyArgs),
    /// List the built-in presets.
    Presets,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Built-in algebra, e.g. `linear_an:3` or `star:4:2`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub preset: Option<String>,
    /// Quiver-spec file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Maximum number of nonzero paths before the ideal is rejected as not
    /// admissible.
    #[arg(long, default_value_t = DEFAULT_PATH_CAP, value_parser = positive)]
    pub cap_paths: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long)]
    pub json: bool,
    /// Worker threads for exhaustive enumeration.
    #[arg(long, value_parser = positive)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SetArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Comma-separated vertex ids; empty for the empty set.
    #[arg(long, default_value = "")]
    pub set: String,
}

#[derive(Args, Debug)]
pub struct KindArgs {
    #[command(flatten)]
    pub set: SetArgs,
    #[arg(long, value_enum, default_value_t = Kind::Hereditary)]
    pub kind: Kind,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = Kind::Hereditary)]
    pub kind: Kind,
    /// Also list the sets.
    #[arg(long)]
    pub list: bool,
    /// Largest vertex count for exhaustive subset enumeration.
    #[arg(long, default_value_t = DEFAULT_SUBSET_CAP, value_parser = positive)]
    pub cap_subsets: usize,
}

#[derive(Args, Debug)]
pub struct LatticeCaps {
    /// Largest number of indecomposables for exhaustive enumeration.
    #[arg(long, default_value_t = DEFAULT_INDECOMPOSABLE_CAP, value_parser = positive)]
    pub cap_indecomposables: usize,
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub caps: LatticeCaps,
    /// Module whose torsion sequences define the partition.
    #[arg(long, value_enum, default_value_t = Partition::Both)]
    pub partition: Partition,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub caps: LatticeCaps,
    /// Lattice index of a pair, as printed by `lattice`; repeatable.
    #[arg(long)]
    pub pair: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Hereditary,
    Cohereditary,
}

impl From<Kind> for PairKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Hereditary => PairKind::Hereditary,
            Kind::Cohereditary => PairKind::Cohereditary,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Partition {
    None,
    Regular,
    Dual,
    Both,
    InjectiveNonprojective,
}

impl From<Partition> for PartitionModule {
    fn from(p: Partition) -> Self {
        match p {
            Partition::None => PartitionModule::None,
            Partition::Regular => PartitionModule::Regular,
            Partition::Dual => PartitionModule::Dual,
            Partition::Both => PartitionModule::Both,
            Partition::InjectiveNonprojective => PartitionModule::InjectiveNonProjective,
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Precondition(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Io { .. } => 2,
            CliError::Cap(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Output(_) => 1,
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        if e.is_cap() {
            CliError::Cap(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

impl From<PhiError> for CliError {
    fn from(e: PhiError) -> Self {
        match e {
            PhiError::SubsetCapExceeded { .. } => CliError::Cap(e.to_string()),
            PhiError::PermutationUndefined => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<TorsError> for CliError {
    fn from(e: TorsError) -> Self {
        CliError::Cap(e.to_string())
    }
}

impl InputArgs {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }

    fn jobs(&self) -> usize {
        self.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }

    fn algebra(&self) -> Result<AlgebraPresentation, CliError> {
        match (&self.preset, &self.file) {
            (Some(p), _) => Ok(input::preset(p, self.cap_paths)?),
            (None, Some(path)) => {
                let text =
                    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
                Ok(input::parse_quiver_spec(&text, self.cap_paths)?)
            }
            (None, None) => Err(CliError::Validation("one of --preset or --file is required".into())),
        }
    }

    fn serial(&self, alg: AlgebraPresentation) -> Result<SerialAlgebra, CliError> {
        SerialAlgebra::new(alg).map_err(|e| match e {
            SerialError::TooManyIndecomposables(_) => CliError::Cap(e.to_string()),
            _ => CliError::Precondition(format!("lattice commands need a serial algebra: {e}")),
        })
    }
}

fn parse_set(alg: &AlgebraPresentation, text: &str) -> Result<SimpleSet, CliError> {
    let mut s = SimpleSet::empty(alg.vertex_count());
    for item in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let label: u32 = item.parse().map_err(|_| CliError::Validation(format!("`{item}` is not a vertex id")))?;
        let v = alg
            .quiver()
            .vertex_by_label(label)
            .ok_or_else(|| CliError::Validation(format!("vertex {label} does not exist")))?;
        s.insert(v);
    }
    Ok(s)
}

fn emit<T: serde::Serialize>(
    out: &mut dyn Write,
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
) -> Result<(), CliError> {
    match format {
        Format::Text => out.write_all(text().as_bytes())?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Dot => return Err(CliError::Validation("DOT output is only available for `lattice`".into())),
    }
    Ok(())
}

fn lattice(input: &InputArgs, caps: &LatticeCaps) -> Result<TorsLattice, CliError> {
    let alg = input.serial(input.algebra()?)?;
    Ok(parallel::enumerate_lattice(&alg, caps.cap_indecomposables, input.jobs())?)
}

/// Runs one command, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Presets => {
            for (name, about) in PRESETS {
                writeln!(out, "{name:<32} {about}")?;
            }
            Ok(())
        }
        Command::Phi(args) => {
            let alg = args.input.algebra()?;
            let s = parse_set(&alg, &args.set)?;
            let nu = nakayama_permutation(&alg);
            let self_injective = SerialAlgebra::new(alg.clone()).ok().map(|a| a.self_injective());
            let report = PhiReport {
                schema: report::SCHEMA,
                command: "phi",
                set: report::labels(&alg, s),
                phi_plus: report::labels(&alg, phi::phi_plus(&alg, s)),
                phi_minus: report::labels(&alg, phi::phi_minus(&alg, s)),
                acyclic: alg.is_acyclic_algebra(),
                nakayama_permutation: NakayamaReport::new(&alg, &nu),
                self_injective,
            };
            emit(out, args.input.format(), &report, || report.text())
        }
        Command::Check(args) => {
            let alg = args.set.input.algebra()?;
            let s = parse_set(&alg, &args.set.set)?;
            let report = CheckReport::new(&alg, &phi::verdict(&alg, args.kind.into(), s));
            emit(out, args.set.input.format(), &report, || report.text())
        }
        Command::Count(args) => {
            let alg = args.input.algebra()?;
            let kind: PairKind = args.kind.into();
            let jobs = args.input.jobs();
            let (count, sets) = if args.list {
                let sets = parallel::de_sets(&alg, kind, args.cap_subsets, jobs)?;
                (sets.len() as u64, Some(sets.iter().map(|&s| report::labels(&alg, s)).collect()))
            } else {
                (parallel::count_de(&alg, kind, args.cap_subsets, jobs)?, None)
            };
            let report = CountReport {
                schema: report::SCHEMA,
                command: "count",
                kind: kind.as_str(),
                vertices: alg.vertex_count(),
                total: 1u64 << alg.vertex_count(),
                count,
                sets,
            };
            emit(out, args.input.format(), &report, || report.text())
        }
        Command::Lattice(args) => {
            let l = lattice(&args.input, &args.caps)?;
            let verdicts = parallel::classify_all(&l, args.input.jobs());
            let report = report::lattice_report(&l, &verdicts, args.partition.into());
            match args.input.format() {
                Format::Dot => out.write_all(report.dot().as_bytes())?,
                f => emit(out, f, &report, || report.text())?,
            }
            Ok(())
        }
        Command::Classify(args) => {
            let l = lattice(&args.input, &args.caps)?;
            if let Some(&bad) = args.pair.iter().find(|&&i| i >= l.len()) {
                return Err(CliError::Validation(format!(
                    "pair {bad} out of range; the lattice has {} pairs",
                    l.len()
                )));
            }
            let verdicts = parallel::classify_all(&l, args.input.jobs());
            let ids: Vec<usize> = if args.pair.is_empty() { (0..l.len()).collect() } else { args.pair.clone() };
            let report = ClassifyReport::new(&l, &verdicts, &ids);
            emit(out, args.input.format(), &report, || report.text())
        }
    }
}
