use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use qta_core::cohomology::MAX_DEGREE;
use qta_core::deformation::{
    classify_operator, conjugation_twist, left_residual, right_residual, twist_left, twist_right,
};
use qta_core::linfty::{block_signature, derived_bracket, jacobi_residual, mc_residual};
use qta_core::quasi_twilled::{structure_residuals, validate};
use qta_core::scalar::int;
use qta_core::{CochainComplex, Component, CurvedLInftyStructure, Error, MultilinearMap, QuasiTwilledAlgebra, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::document::{self, map_to_table, matrix_values, Document};
use crate::error::{CliError, CliResult};
use crate::report::{Check, CohomologyRow, CohomologyTable, Output, Report};

/// Default cohomology degree cap when `QTA_MAX_DEGREE` is unset.
pub const DEFAULT_DEGREE_CAP: usize = 3;
/// Largest accepted `--arity` for `jacobi`.
pub const MAX_JACOBI_ARITY: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "qta", version, about = "Quasi-twilled associative algebras, deformation maps and their cohomology")]
pub struct Cli {
    /// Print the machine-readable report only.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check associativity of the total product and the sixteen structure equations.
    Validate {
        /// JSON document, or - for stdin
        file: PathBuf,
    },
    /// Name the operator class of a deformation map.
    Classify {
        /// Name of a map in the document's `maps`
        #[arg(long)]
        map: String,
        /// `right` for D: A -> A', `left` for B: A' -> A
        #[arg(long)]
        side: Side,
        /// JSON document, or - for stdin
        file: PathBuf,
    },
    /// Twist the algebra by a map and print the twisted components.
    Twist {
        /// Name of a map in the document's `maps`
        #[arg(long)]
        map: String,
        /// `right` for D: A -> A', `left` for B: A' -> A
        #[arg(long)]
        side: Side,
        /// JSON document, or - for stdin
        file: PathBuf,
    },
    /// Compare the Maurer-Cartan residual with the deformation-map residual.
    Mc {
        /// Name of a map in the document's `maps`
        #[arg(long)]
        map: String,
        /// `right` for D: A -> A', `left` for B: A' -> A
        #[arg(long)]
        side: Side,
        /// JSON document, or - for stdin
        file: PathBuf,
    },
    /// Cohomology dimensions of a deformation map.
    Cohomology {
        /// Name of a map in the document's `maps`
        #[arg(long)]
        map: String,
        /// `right` for D: A -> A', `left` for B: A' -> A
        #[arg(long)]
        side: Side,
        /// Top degree n: reports H^0 .. H^n. Defaults to QTA_MAX_DEGREE, else 3
        #[arg(long)]
        max_degree: Option<usize>,
        /// JSON document, or - for stdin
        file: PathBuf,
    },
    /// Generalized Jacobi identities on random arguments.
    Jacobi {
        /// `right` for D: A -> A', `left` for B: A' -> A
        #[arg(long)]
        side: Side,
        /// Number of bracket arguments, at most 6
        #[arg(long, default_value_t = 3)]
        arity: usize,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON document, or - for stdin
        file: PathBuf,
    },
    /// Print a catalog document, or list the catalog when no name is given.
    Example { name: Option<String> },
}

impl Command {
    /// The command line that produced this command, minus the file.
    pub fn echo(&self) -> String {
        match self {
            Command::Validate { .. } => "validate".into(),
            Command::Classify { map, side, .. } => format!("classify --map {map} --side {side}"),
            Command::Twist { map, side, .. } => format!("twist --map {map} --side {side}"),
            Command::Mc { map, side, .. } => format!("mc --map {map} --side {side}"),
            Command::Cohomology { map, side, max_degree, .. } => match max_degree {
                Some(n) => format!("cohomology --map {map} --side {side} --max-degree {n}"),
                None => format!("cohomology --map {map} --side {side}"),
            },
            Command::Jacobi { side, arity, samples, seed, .. } => {
                format!("jacobi --side {side} --arity {arity} --samples {samples} --seed {seed}")
            }
            Command::Example { name } => format!("example {}", name.as_deref().unwrap_or("")).trim_end().into(),
        }
    }

    fn file(&self) -> Option<&PathBuf> {
        match self {
            Command::Validate { file }
            | Command::Classify { file, .. }
            | Command::Twist { file, .. }
            | Command::Mc { file, .. }
            | Command::Cohomology { file, .. }
            | Command::Jacobi { file, .. } => Some(file),
            Command::Example { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub degree_cap: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { degree_cap: DEFAULT_DEGREE_CAP }
    }
}

impl Settings {
    /// Reads the cap from the value of `QTA_MAX_DEGREE`.
    pub fn from_env_value(value: Option<&str>) -> CliResult<Self> {
        let Some(v) = value else { return Ok(Settings::default()) };
        let cap: usize = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("QTA_MAX_DEGREE must be a non-negative integer, got {v:?}")))?;
        if cap > MAX_DEGREE {
            return Err(CliError::Usage(format!("QTA_MAX_DEGREE={cap} exceeds the hard maximum {MAX_DEGREE}")));
        }
        Ok(Settings { degree_cap: cap })
    }

    pub fn from_env() -> CliResult<Self> {
        Self::from_env_value(std::env::var("QTA_MAX_DEGREE").ok().as_deref())
    }
}

pub enum Outcome {
    Report(Report),
    /// Text printed verbatim with exit status 0.
    Text(String),
}

/// Runs a command, reading its input file if it has one.
pub fn execute(command: &Command, settings: &Settings) -> CliResult<Outcome> {
    if let Command::Example { name } = command {
        return Ok(Outcome::Text(match name {
            Some(n) => document::print(&catalog::example(n)?),
            None => catalog::CATALOG.iter().map(|e| format!("{:<36}{}\n", e.name, e.summary)).collect(),
        }));
    }
    let path = command.file().expect("file commands");
    let text =
        if path.as_os_str() == "-" { std::io::read_to_string(std::io::stdin()) } else { std::fs::read_to_string(path) }
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = document::parse(&text)?;
    run(command, &doc, settings).map(Outcome::Report)
}

/// Runs a file command on an already parsed document.
pub fn run(command: &Command, doc: &Document, settings: &Settings) -> CliResult<Report> {
    let start = Instant::now();
    let mut report = Report::new(command.echo());
    match command {
        Command::Validate { .. } => run_validate(doc, &mut report)?,
        Command::Classify { map, side, .. } => {
            let q = doc.algebra()?;
            let f = doc.map(map, *side)?;
            report.push(Check::zero(format!("{side} deformation residual"), &residual(&q, &f, *side)?));
            let name = classify_operator(&q, &f, *side).map_err(|e| match e {
                Error::UnknownKind => CliError::Usage("classify needs a builder document".into()),
                other => other.into(),
            })?;
            report.output("classification", Output::Text(name.into()));
        }
        Command::Twist { map, side, .. } => {
            let q = doc.algebra()?;
            let f = doc.map(map, *side)?;
            let t = match side {
                Side::Right => twist_right(&q, &f)?,
                Side::Left => twist_left(&q, &f)?,
            };
            let (sup, curvature) = match side {
                Side::Right => ("D", "theta^D"),
                Side::Left => ("B", "gamma^B"),
            };
            report.push(Check::flag(
                "closed formulas agree with conjugation",
                t.total() == conjugation_twist(&q, &f, *side)?,
            ));
            report.push(Check::zero(format!("{curvature} = 0"), t.residual()));
            for c in Component::ALL {
                report.output(format!("{}^{sup}", c.name()), Output::Table(map_to_table(t.component(c))));
            }
            if *side == Side::Left {
                report.output(curvature, Output::Table(map_to_table(t.residual())));
            }
        }
        Command::Mc { map, side, .. } => {
            let q = doc.algebra()?;
            let f = doc.map(map, *side)?;
            let r = residual(&q, &f, *side)?;
            match structure(&q, *side, &mut report)? {
                Some(s) => {
                    let mc = mc_residual(&s, &f)?;
                    report.push(Check::zero("Maurer-Cartan residual = 0", &mc));
                    report.push(Check::zero(format!("{side} deformation residual = 0"), &r));
                    report.push(Check::flag("residuals coincide", mc == r));
                }
                None => report.push(Check::zero(format!("{side} deformation residual = 0"), &r)),
            }
        }
        Command::Cohomology { map, side, max_degree, .. } => {
            let n = max_degree.unwrap_or(settings.degree_cap);
            if n > settings.degree_cap {
                return Err(CliError::Usage(format!(
                    "--max-degree {n} exceeds the cap {} (QTA_MAX_DEGREE, at most {MAX_DEGREE})",
                    settings.degree_cap
                )));
            }
            let q = doc.algebra()?;
            let f = doc.map(map, *side)?;
            let r = residual(&q, &f, *side)?;
            report.push(Check::zero(format!("{side} deformation residual = 0"), &r));
            if r.is_zero() {
                match CochainComplex::new(&q, &f, *side, n) {
                    Ok(c) => {
                        report.push(Check::flag("d o d = 0", true));
                        report.cohomology = Some(table(&c));
                    }
                    Err(Error::Inconsistent(msg)) => report.push(Check::flag("d o d = 0", false).with_note(msg)),
                    Err(e) => return Err(e.into()),
                }
            }
        }
        Command::Jacobi { side, arity, samples, seed, .. } => {
            if *arity > MAX_JACOBI_ARITY {
                return Err(CliError::Usage(format!("--arity {arity} exceeds {MAX_JACOBI_ARITY}")));
            }
            let q = doc.algebra()?;
            if let Some(s) = structure(&q, *side, &mut report)? {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                for k in 0..*samples {
                    let args: Vec<MultilinearMap> = (0..*arity)
                        .map(|_| {
                            let sig = block_signature(*side, rng.gen_range(1..=2));
                            MultilinearMap::from_fn(q.split(), &sig, |_, _| int(rng.gen_range(-2..=2)))
                        })
                        .collect();
                    report.push(Check::zero(format!("sample {k}: Jacobi residual = 0"), &jacobi_residual(&s, &args)?));
                    if *arity > s.top_bracket() {
                        report.push(Check::zero(
                            format!("sample {k}: l_{arity} = 0"),
                            &derived_bracket(s.vdata(), &args)?,
                        ));
                    }
                }
            }
        }
        Command::Example { .. } => return Err(CliError::Usage("example takes no input file".into())),
    }
    report.elapsed_us = start.elapsed().as_micros() as u64;
    Ok(report)
}

fn run_validate(doc: &Document, report: &mut Report) -> CliResult<()> {
    let q = match doc.algebra() {
        Ok(q) => q,
        Err(CliError::Core(Error::Ingredient(msg))) => {
            report.push(Check::flag("builder ingredients", false).with_note(msg));
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    if let Some(kind) = q.kind() {
        report.output("kind", Output::Text(kind.name().into()));
    }
    let v = validate(&q);
    report.push(Check::zero("1/2[Omega,Omega]_G = 0", &v));
    let rows = structure_residuals(&q);
    let rows_zero = rows.iter().all(|r| r.map.is_zero());
    for r in rows {
        report.push(Check::zero(r.label, &r.map));
    }
    report.push(Check::flag("both detectors agree", v.is_zero() == rows_zero));
    Ok(())
}

/// The curved L∞ structure, or a failing check when Ω is not associative.
fn structure(q: &QuasiTwilledAlgebra, side: Side, report: &mut Report) -> CliResult<Option<CurvedLInftyStructure>> {
    match CurvedLInftyStructure::from_algebra(q, side) {
        Ok(s) => Ok(Some(s)),
        Err(Error::InvalidQta(msg)) => {
            report.push(Check::flag("quasi-twilled algebra is valid", false).with_note(msg));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn residual(q: &QuasiTwilledAlgebra, f: &MultilinearMap, side: Side) -> CliResult<MultilinearMap> {
    Ok(match side {
        Side::Right => right_residual(q, f)?,
        Side::Left => left_residual(q, f)?,
    })
}

fn table(c: &CochainComplex) -> CohomologyTable {
    let ranks: Vec<usize> = c.differentials.iter().map(|d| d.rank()).collect();
    let dims = c.cohomology_dims();
    let rows = (0..c.differentials.len())
        .map(|n| CohomologyRow {
            degree: n,
            cochains: c.dims[n],
            cycles: c.dims[n] - ranks[n],
            boundaries: if n == 0 { 0 } else { ranks[n - 1] },
            dim: dims[n],
        })
        .collect();
    CohomologyTable { rows, differentials: c.differentials.iter().map(matrix_values).collect() }
}
