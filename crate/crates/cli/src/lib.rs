//! Batch front end for the rackcoh workbench.
//!
//! [`run`] executes one [`RunConfig`] and returns an [`Outcome`] holding a
//! JSON report, a plain-text rendering and the pass flag. The binary maps
//! the outcome to exit codes: 0 when every check passes, 1 when an identity
//! fails, 2 when the input is malformed.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rackcoh::fixtures;
use rackcoh::structures::{conj_rack, parse_structure, Structure};
use rackcoh::{CoefficientSpec, ComplexTag, FiniteGroup, FiniteRack};

pub mod commands;
pub mod suite;

/// Version of every JSON document read or written by the tool.
pub const SCHEMA: u32 = 1;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20240;

#[derive(Parser, Clone, Debug)]
#[command(name = "rackcoh", version, about = "Exact rack and group cohomology workbench")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Rack or group: a JSON file or a fixture name such as `conj-s3`.
    #[arg(long, global = true)]
    pub structure: Option<String>,

    /// Group for `morphism-check`: a JSON file or a fixture name.
    #[arg(long, global = true)]
    pub group: Option<String>,

    /// Coefficients: Z, Z/m, mat2/Z or mat2/Zm.
    #[arg(long, global = true, default_value = "Z")]
    pub coeff: String,

    #[arg(long, global = true)]
    pub degree: Option<usize>,

    #[arg(long, global = true)]
    pub max_degree: Option<usize>,

    /// Random trials per degree combination; omit for exhaustive basis checks.
    #[arg(long, global = true)]
    pub trials: Option<usize>,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Cohomology groups of a rack, pointed-rack, group or cubical complex.
    Cohomology {
        /// rack, pointed, group or cubical; defaults to the structure's own complex.
        #[arg(long)]
        complex: Option<String>,
        /// Include the two differential matrices in the report.
        #[arg(long)]
        matrices: bool,
    },
    /// Dendriform, ⋆-associativity and Leibniz identities on a rack.
    ProductsCheck,
    /// Chain-map, algebra-morphism and degree-1 checks for S on a group.
    MorphismCheck,
    /// Compare brute-force trunk-map enumeration with the tuple description.
    NerveCheck,
    /// List a class of shuffles with signs.
    Shuffle {
        #[arg(long)]
        p1: usize,
        #[arg(long)]
        p2: usize,
        /// all, top-fixed or left-max.
        #[arg(long, default_value = "all")]
        class: String,
    },
    /// Run the full acceptance suite on the shipped fixtures.
    VerifyPaper,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Result of a run: a JSON document, its text rendering and the verdict.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub pass: bool,
    pub report: Value,
    pub text: String,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

/// Malformed input; maps to exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

impl From<rackcoh::Error> for InputError {
    fn from(e: rackcoh::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type Result<T, E = InputError> = std::result::Result<T, E>;

pub fn bad(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

/// Load a structure from a JSON file, or by fixture name.
pub fn load_structure(spec: &str) -> Result<Structure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{spec}: {e}")))?;
        return parse_structure(&text).map_err(|e| bad(format!("{spec}: {e}")));
    }
    fixtures::by_name(spec).ok_or_else(|| {
        bad(format!("{spec}: no such file or fixture (fixtures: {})", fixtures::FIXTURE_NAMES.join(", ")))
    })
}

pub fn load_rack(spec: &str) -> Result<FiniteRack> {
    match load_structure(spec)? {
        Structure::Rack { rack, .. } => Ok(rack),
        Structure::Group(g) => Ok(conj_rack(&g)),
    }
}

pub fn load_group(spec: &str) -> Result<FiniteGroup> {
    match load_structure(spec)? {
        Structure::Group(g) => Ok(g),
        Structure::Rack { rack, .. } => Err(bad(format!("{} is a rack, a group is required", rack.name()))),
    }
}

pub fn parse_coeff(s: &str) -> Result<CoefficientSpec> {
    Ok(s.parse::<CoefficientSpec>()?)
}

pub fn parse_complex(s: &str) -> Result<ComplexTag> {
    Ok(s.parse::<ComplexTag>()?)
}

fn require<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str> {
    value.as_deref().ok_or_else(|| bad(format!("--{flag} is required")))
}

/// Size the global rayon pool from `RACKCOH_THREADS`, if set.
pub fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("RACKCOH_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| bad(format!("RACKCOH_THREADS={v} is not a number")))?;
        // a second initialisation in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

pub fn run(config: &RunConfig) -> Result<Outcome> {
    let coeff = parse_coeff(&config.coeff)?;
    match &config.command {
        Command::Cohomology { complex, matrices } => {
            let structure = load_structure(require(&config.structure, "structure")?)?;
            let degree = config.degree.ok_or_else(|| bad("--degree is required"))?;
            let tag = complex.as_deref().map(parse_complex).transpose()?;
            commands::cohomology(&structure, tag, degree, &coeff, *matrices)
        }
        Command::ProductsCheck => {
            let structure = load_structure(require(&config.structure, "structure")?)?;
            commands::products_check(&structure, &coeff, config.max_degree.unwrap_or(3), sampling(config))
        }
        Command::MorphismCheck => {
            let spec = config.group.as_ref().or(config.structure.as_ref()).ok_or_else(|| bad("--group is required"))?;
            let g = load_group(spec)?;
            commands::morphism_check(&g, &coeff, config.max_degree.unwrap_or(3), sampling(config))
        }
        Command::NerveCheck => {
            let rack = load_rack(require(&config.structure, "structure")?)?;
            commands::nerve_check(&rack, config.max_degree.unwrap_or(3))
        }
        Command::Shuffle { p1, p2, class } => commands::shuffle(*p1, *p2, class),
        Command::VerifyPaper => Ok(suite::verify_paper(config.seed)),
    }
}

fn sampling(config: &RunConfig) -> rackcoh::products::Sampling {
    match config.trials {
        Some(trials) => rackcoh::products::Sampling::Random { trials, seed: config.seed },
        None => rackcoh::products::Sampling::Exhaustive,
    }
}

/// Wrap a report body with the schema version.
pub fn versioned(kind: &str, mut body: Value) -> Value {
    let mut out = json!({ "schema": SCHEMA, "report": kind });
    if let (Some(o), Some(b)) = (out.as_object_mut(), body.as_object_mut()) {
        o.append(b);
    }
    out
}
