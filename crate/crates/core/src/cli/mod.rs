//! Command-line frontend. [`run`] does all the work and returns the text to
//! print, so the binary is a thin wrapper and tests can drive it in-process.

mod input;
mod render;

use std::fmt;

use clap::{Parser, Subcommand, ValueEnum};

use crate::acx::{self, AlmostComplexStructure};
use crate::catalog;
use crate::morphism::{LieMorphism, MorphismError, Structures, Theory};
use crate::symplectic::SymplecticStructure;

pub use input::{load, parse_document, parse_map, InputDocument};

pub const MAX_DIM_VAR: &str = "SYMPCOH_MAX_DIM";
pub const DEFAULT_MAX_DIM: usize = 16;

/// An error with its process exit code: 1 semantic, 2 syntax, 3 hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn semantic(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }

    pub fn syntax(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn hypothesis(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(
    name = "sympcoh",
    version,
    about = "Exact symplectic and almost-complex cohomology of Lie algebras"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti, d^Lambda, Bott-Chern and Aeppli dimensions with HLC verdicts.
    Report {
        /// Catalog name or input file.
        input: String,
        /// Symplectic form overriding the one in the input.
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
    },
    /// Dimensions of H_J^{(p,q),(q,p)} and the C-infinity pure/full verdicts.
    Jdecomp {
        input: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Print closed pure-type forms representing a basis.
        #[arg(long)]
        with_representatives: bool,
    },
    /// Rank of the map induced on cohomology by a Lie algebra morphism.
    Pullback {
        /// Algebra the map starts from (the covering side).
        #[arg(long)]
        source: String,
        /// Algebra the map lands in.
        #[arg(long)]
        target: String,
        /// Map file with the matrix of the morphism.
        #[arg(long)]
        map: String,
        /// deRham, dLambda, BottChern, Aeppli or J(p,q).
        #[arg(long)]
        theory: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    /// Check structure equations, omega and J.
    Validate { input: String },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
}

fn max_dim() -> Result<usize, CliError> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::syntax(format!("{MAX_DIM_VAR} must be an integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn load_checked(spec: &str) -> Result<InputDocument, CliError> {
    let doc = load(spec)?;
    let limit = max_dim()?;
    if doc.algebra.dim() > limit {
        return Err(CliError::semantic(format!(
            "{}: dimension {} exceeds {MAX_DIM_VAR} = {limit}",
            doc.name,
            doc.algebra.dim()
        )));
    }
    doc.algebra
        .validate()
        .map_err(|e| CliError::semantic(format!("{}: {e}", doc.name)))?;
    Ok(doc)
}

fn symplectic(doc: &InputDocument) -> Result<SymplecticStructure, CliError> {
    let omega = doc
        .omega
        .clone()
        .ok_or_else(|| CliError::semantic(format!("{}: no symplectic form given", doc.name)))?;
    SymplecticStructure::new(doc.algebra.clone(), omega)
        .map_err(|e| CliError::semantic(format!("{}: {e}", doc.name)))
}

fn almost_complex(doc: &InputDocument) -> Result<AlmostComplexStructure, CliError> {
    let j = doc.j.clone().ok_or_else(|| {
        CliError::semantic(format!("{}: no almost-complex structure given", doc.name))
    })?;
    AlmostComplexStructure::new(doc.algebra.clone(), j)
        .map_err(|e| CliError::semantic(format!("{}: {e}", doc.name)))
}

pub fn parse_theory(text: &str) -> Result<Theory, CliError> {
    let t = text.trim();
    let theory = match t.to_ascii_lowercase().as_str() {
        "derham" | "dr" => Theory::DeRham,
        "dlambda" => Theory::DLambda,
        "bottchern" | "bc" => Theory::BottChern,
        "aeppli" | "a" => Theory::Aeppli,
        lower => {
            let inner = lower
                .strip_prefix("j(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| CliError::syntax(format!("unknown theory `{t}`")))?;
            let (p, q) = inner
                .split_once(',')
                .ok_or_else(|| CliError::syntax(format!("theory `{t}`: expected J(p,q)")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::syntax(format!("theory `{t}`: bad bidegree")))
            };
            Theory::PureType {
                p: parse(p)?,
                q: parse(q)?,
            }
        }
    };
    Ok(theory)
}

/// Executes a parsed command line and returns its standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Report { input, omega } => {
            let mut doc = load_checked(input)?;
            if let Some(text) = omega {
                let n = doc.algebra.dim();
                doc.omega = Some(
                    crate::parser::parse_form_of_degree(text, n, 2)
                        .map_err(|e| CliError::syntax(format!("--omega: {e}")))?,
                );
            }
            let s = symplectic(&doc)?;
            let report = s.report().map_err(|e| CliError::semantic(e.to_string()))?;
            Ok(render::report(&report, cli.format))
        }
        Command::Jdecomp {
            input,
            p,
            q,
            with_representatives,
        } => {
            let doc = load_checked(input)?;
            let a = almost_complex(&doc)?;
            let bidegrees = match (p, q) {
                (Some(p), Some(q)) => vec![(*p, *q)],
                (None, None) => vec![(1, 1), (2, 0)],
                _ => return Err(CliError::syntax("--p and --q must be given together")),
            };
            let groups = bidegrees
                .into_iter()
                .map(|(p, q)| a.h_j_with(p, q, *with_representatives))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::semantic(e.to_string()))?;
            let verdict = a
                .pure_full_check()
                .map_err(|e| CliError::semantic(e.to_string()))?;
            let b2 = doc.algebra.betti().get(2);
            Ok(render::jdecomp(&groups, b2, verdict, cli.format))
        }
        Command::Pullback {
            source,
            target,
            map,
            theory,
            degree,
        } => {
            let theory = parse_theory(theory)?;
            let src = load_checked(source)?;
            let tgt = load_checked(target)?;
            let text = std::fs::read_to_string(map)
                .map_err(|e| CliError::semantic(format!("{map}: {e}")))?;
            let matrix = parse_map(&text)?;
            let f = LieMorphism::new(src.algebra.clone(), tgt.algebra.clone(), matrix)
                .map_err(|e| CliError::semantic(e.to_string()))?;
            let (mut so, mut to, mut sj, mut tj) = (None, None, None, None);
            if theory.needs_symplectic() {
                so = Some(symplectic(&src)?);
                to = Some(symplectic(&tgt)?);
            }
            if let Theory::PureType { .. } = theory {
                sj = Some(almost_complex(&src)?);
                tj = Some(almost_complex(&tgt)?);
            }
            let structures = Structures {
                target_omega: to.as_ref(),
                source_omega: so.as_ref(),
                target_j: tj.as_ref(),
                source_j: sj.as_ref(),
            };
            let report = f
                .induced_report(theory, *degree, &structures)
                .map_err(|e| match e {
                    MorphismError::Hypothesis(_) => CliError::hypothesis(e.to_string()),
                    other => CliError::semantic(other.to_string()),
                })?;
            Ok(render::injectivity(&report, cli.format))
        }
        Command::Validate { input } => validate(input),
        Command::Catalog {
            action: CatalogAction::List,
        } => Ok(render::catalog(&catalog::entries(), cli.format)),
    }
}

fn validate(spec: &str) -> Result<String, CliError> {
    let doc = load(spec)?;
    let limit = max_dim()?;
    let mut out = String::new();
    let mut failures = Vec::new();
    let g = &doc.algebra;
    if g.dim() > limit {
        failures.push(format!(
            "dimension {} exceeds {MAX_DIM_VAR} = {limit}",
            g.dim()
        ));
    }
    match g.validate() {
        Ok(()) => out.push_str(&format!(
            "algebra: ok (dim {}, {}, {})\n",
            g.dim(),
            if g.is_nilpotent() {
                "nilpotent"
            } else {
                "not nilpotent"
            },
            if g.is_unimodular() {
                "unimodular"
            } else {
                "not unimodular"
            }
        )),
        Err(e) => failures.push(format!("algebra: {e}")),
    }
    match &doc.omega {
        None => out.push_str("omega: absent\n"),
        Some(w) => match SymplecticStructure::new(g.clone(), w.clone()) {
            Ok(_) => out.push_str("omega: ok\n"),
            Err(e) => failures.push(format!("omega: {e}")),
        },
    }
    match &doc.j {
        None => out.push_str("J: absent\n"),
        Some(j) => match acx::validate_acs(g.dim(), j) {
            Ok(()) => {
                out.push_str("J: ok\n");
                if let Some(w) = &doc.omega {
                    let c = acx::form_compatibility(w, j)
                        .map_err(|e| CliError::semantic(e.to_string()))?;
                    out.push_str(&format!("omega and J: {}\n", c.as_str()));
                }
            }
            Err(e) => failures.push(format!("J: {e}")),
        },
    }
    if failures.is_empty() {
        out.push_str("valid\n");
        Ok(out)
    } else {
        Err(CliError::semantic(format!("{out}{}", failures.join("\n"))))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliError {
            code: 0,
            message: e.to_string(),
        },
        _ => CliError::syntax(e.to_string()),
    })?;
    run(&cli)
}
