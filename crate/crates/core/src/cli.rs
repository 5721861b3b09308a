//! The `abid` command line: enumeration, Hasse diagrams, automorphism groups,
//! root data, the Young-lattice action and the verification suites.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::abelian::{IdealCatalog, IdealJson};
use crate::dynkin::{aut_pi, aut_pihat, center, center_permutation};
use crate::error::Error;
use crate::perm::NodePermutation;
use crate::poset::{build_hasse, graph_automorphisms, poset_automorphisms};
use crate::report::Report;
use crate::rootsys::{CartanType, Family, RootSystem};
use crate::suite::{self, Suite, DEFAULT_MAX_RANK, MAX_RANK_ENV};
use crate::young::{sigma_orbit, verify_dihedral, Partition};
use crate::SCHEMA;

#[derive(Debug, Parser)]
#[command(name = "abid", version, about = "Abelian ideals of Borel subalgebras and the symmetries of their poset")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct TypeArgs {
    /// Cartan family letter, A to G.
    #[arg(long, short)]
    pub family: Family,
    #[arg(long, short)]
    pub rank: usize,
}

impl TypeArgs {
    pub fn cartan_type(self) -> Result<CartanType, CliError> {
        CartanType::new(self.family, self.rank).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AutObject {
    /// Order-preserving bijections of the ideal poset.
    Poset,
    /// Automorphisms of the undirected Hasse graph.
    Graph,
    /// Automorphisms of the Dynkin diagram.
    Dynkin,
    /// Automorphisms of the extended Dynkin diagram.
    Extended,
    /// The centre acting on ideals.
    Center,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the abelian ideals.
    Enumerate {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the labelled Hasse diagram.
    Hasse {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print an automorphism group.
    Aut {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum)]
        object: AutObject,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites over all types up to a rank.
    Verify {
        /// encodings, theorem-t, hasse, words, edges, center, young or all.
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, env = MAX_RANK_ENV, default_value_t = DEFAULT_MAX_RANK,
              value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..=8))]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Staircase Young diagrams in type A_{n-1}.
    #[command(group = clap::ArgGroup::new("mode").required(true).args(["orbit", "verify"]))]
    Young {
        #[arg(long)]
        n: usize,
        /// Print the σ_n-orbit of a partition given as comma-separated parts.
        #[arg(long)]
        orbit: Option<Partition>,
        /// Check the dihedral symmetry.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the root system.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Internal(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Internal(e) => write!(f, "error: {e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) | CliError::Io(_) => 3,
        }
    }
}

/// Result of a successful run: verification commands may report failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::VerificationFailed => 1,
        }
    }
}

#[derive(Serialize)]
struct EnumerateJson<'a> {
    schema: &'static str,
    #[serde(rename = "type")]
    ty: String,
    ideals: &'a [IdealJson],
}

#[derive(Serialize)]
struct AutJson<'a> {
    schema: &'static str,
    #[serde(rename = "type")]
    ty: String,
    object: &'a str,
    order: usize,
    elements: &'a [Value],
}

#[derive(Serialize)]
struct CenterElementJson {
    node: Option<usize>,
    ideals: NodePermutation,
}

#[derive(Serialize)]
struct OrbitJson<'a> {
    schema: &'static str,
    n: usize,
    orbit: &'a [Partition],
}

fn compact<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable")
}

fn write_json<T: Serialize>(out: &mut dyn Write, x: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, x)?;
    writeln!(out)
}

fn reject_dot(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage(format!("--format dot is only available for hasse, not {command}")));
    }
    Ok(())
}

fn emit_report(out: &mut dyn Write, report: &Report, format: Format) -> Result<Outcome, CliError> {
    match format {
        Format::Json => write_json(out, report)?,
        _ => write!(out, "{report}")?,
    }
    Ok(if report.passed() { Outcome::Ok } else { Outcome::VerificationFailed })
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Enumerate { ty, format } => {
            reject_dot(*format, "enumerate")?;
            let cat = IdealCatalog::new(RootSystem::new(ty.cartan_type()?));
            enumerate(out, &cat, *format)?;
        }
        Command::Hasse { ty, format } => {
            let cat = IdealCatalog::new(RootSystem::new(ty.cartan_type()?));
            let h = build_hasse(&cat);
            match format {
                Format::Dot => out.write_all(h.to_dot().as_bytes())?,
                Format::Json => write_json(out, &h.to_json())?,
                Format::Text => {
                    writeln!(out, "{}: {} nodes, {} edges", h.name(), h.len(), h.edges().len())?;
                    for v in 0..h.len() {
                        writeln!(out, "node {v}\tgrade={}\tword={}", h.grade(v), compact(&h.word(v)))?;
                    }
                    for e in h.edges() {
                        writeln!(out, "edge {} -> {}\tlabel={}", e.lo, e.hi, e.label)?;
                    }
                }
            }
        }
        Command::Aut { ty, object, format } => {
            reject_dot(*format, "aut")?;
            automorphisms(out, ty.cartan_type()?, *object, *format)?;
        }
        Command::Verify { suite: s, max_rank, format } => {
            reject_dot(*format, "verify")?;
            return emit_report(out, &suite::run(*s, *max_rank), *format);
        }
        Command::Young { n, orbit, verify, format } => {
            reject_dot(*format, "young")?;
            if *n < 2 || *n > 9 {
                return Err(CliError::Usage(format!("--n must lie in 2..=9, got {n}")));
            }
            if *verify {
                if *n < 3 {
                    return Err(CliError::Usage("the dihedral check needs --n at least 3".into()));
                }
                let mut report = Report::new(format!("young n={n}"));
                report.extend(verify_dihedral(*n));
                return emit_report(out, &report, *format);
            }
            let start = orbit.as_ref().expect("clap requires --orbit or --verify");
            let orbit = sigma_orbit(*n, start).map_err(|e| CliError::Usage(e.to_string()))?;
            match format {
                Format::Json => write_json(out, &OrbitJson { schema: SCHEMA, n: *n, orbit: &orbit })?,
                _ => {
                    for p in &orbit {
                        writeln!(out, "{p}")?;
                    }
                }
            }
        }
        Command::Roots { ty, format } => {
            reject_dot(*format, "roots")?;
            let rs = RootSystem::new(ty.cartan_type()?);
            match format {
                Format::Json => write_json(out, &rs.to_json())?,
                _ => {
                    let j = rs.to_json();
                    writeln!(out, "{}: {} positive roots, h∨ = {}", rs.cartan_type(), rs.num_positive(), j.h_dual)?;
                    writeln!(out, "theta\t{}", compact(&j.theta))?;
                    writeln!(out, "marks\t{}", compact(&j.marks))?;
                    writeln!(out, "comarks\t{}", compact(&j.comarks))?;
                    for (k, r) in j.roots.iter().enumerate() {
                        writeln!(out, "root {k}\t{}", compact(r))?;
                    }
                }
            }
        }
    }
    Ok(Outcome::Ok)
}

fn enumerate(out: &mut dyn Write, cat: &IdealCatalog, format: Format) -> Result<(), CliError> {
    let rs = cat.root_system();
    let ideals = cat.ideals().iter().map(|i| i.to_json(rs)).collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Json => {
            write_json(out, &EnumerateJson { schema: SCHEMA, ty: rs.cartan_type().to_string(), ideals: &ideals })?
        }
        _ => {
            writeln!(out, "{}: {} abelian ideals", rs.cartan_type(), ideals.len())?;
            for (k, i) in ideals.iter().enumerate() {
                writeln!(
                    out,
                    "{k}\tgrade={}\tword={}\tweight={}\tantichain={}",
                    i.phi.len(),
                    compact(&i.word),
                    compact(&i.weight_fw),
                    compact(&i.antichain)
                )?;
            }
        }
    }
    Ok(())
}

fn automorphisms(out: &mut dyn Write, ty: CartanType, object: AutObject, format: Format) -> Result<(), CliError> {
    let rs = RootSystem::new(ty);
    let elements: Vec<Value> = match object {
        AutObject::Dynkin => aut_pi(&rs).iter().map(|f| json!(f)).collect(),
        AutObject::Extended => aut_pihat(&rs).iter().map(|f| json!(f)).collect(),
        AutObject::Poset | AutObject::Graph | AutObject::Center => {
            let cat = IdealCatalog::new(rs.clone());
            match object {
                AutObject::Center => center(&rs)
                    .into_iter()
                    .map(|z| {
                        let ideals = center_permutation(&cat, z)?;
                        Ok(json!(CenterElementJson { node: z.index, ideals }))
                    })
                    .collect::<Result<Vec<_>, Error>>()?,
                _ => {
                    let h = build_hasse(&cat);
                    let g = if object == AutObject::Poset { poset_automorphisms(&h) } else { graph_automorphisms(&h) };
                    g.elements().iter().map(|p| json!(p)).collect()
                }
            }
        }
    };
    let object_name = object.to_possible_value().expect("not skipped").get_name().to_string();
    match format {
        Format::Json => write_json(
            out,
            &AutJson {
                schema: SCHEMA,
                ty: ty.to_string(),
                object: &object_name,
                order: elements.len(),
                elements: &elements,
            },
        )?,
        _ => {
            writeln!(out, "{ty} {object_name}: order {}", elements.len())?;
            for e in &elements {
                writeln!(out, "{}", compact(e))?;
            }
        }
    }
    Ok(())
}
