//! Command-line front end for `flagk`.
//!
//! Every invocation is normalized into a [`JobSpec`]; its canonical
//! JSON doubles as the cache key, so a cache hit reproduces the cold output
//! byte for byte.

pub mod cache;
pub mod commands;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

/// Environment variable that takes precedence over `--cache-dir`.
pub const CACHE_ENV: &str = "FLAGK_CACHE";

/// Seed used by randomized suites when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input: exit status 2.
    #[error("{0}")]
    Usage(String),
    /// A computation failed or an I/O error occurred: exit status 1.
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<flagk::Error> for CliError {
    fn from(e: flagk::Error) -> Self {
        use flagk::Error as E;
        match e {
            E::InvalidCartanType(..)
            | E::IndexOutOfRange { .. }
            | E::RankMismatch { .. }
            | E::NotDominant(_)
            | E::NotReduced(_)
            | E::Precondition(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "flagk", version, about = "Exact Pieri-Chevalley computations in K(G/B)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Directory for cached results (overridden by FLAGK_CACHE).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct TypeArgs {
    /// Cartan type, e.g. `G2`, or a bare family letter together with --rank.
    #[arg(long = "type")]
    pub cartan_type: String,

    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, positive roots and ρ.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Weyl group summary, or data about one element given by --word.
    Weyl {
        #[command(flatten)]
        ty: TypeArgs,
        /// Comma-separated simple indices (1-based).
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
    },
    /// LS paths of shape λ, optionally restricted to those with ι(π) ≤ w.
    Paths {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
        /// Emit the crystal graph in Graphviz format instead.
        #[arg(long)]
        dot: bool,
    },
    /// Character of V_λ from LS paths, with its dimension.
    Character {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
    },
    /// Expansion of e^λ·[O_{X_w}] in Schubert classes.
    Expand {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        /// Reduced word for w; omit for w = 1.
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<usize>>,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        /// One of: demazure, operator-identity, character, chevalley,
        /// g2golden, strings, point-classes.
        #[arg(long)]
        suite: String,
        /// Restrict the suite to one type (default: A2, B2, G2, A3).
        #[arg(long = "type")]
        cartan_type: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// A fully normalized request. Its JSON form is the cache key.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: String,
    pub cartan_type: Option<String>,
    pub rank: Option<usize>,
    pub lambda: Vec<i64>,
    pub word: Option<Vec<usize>>,
    pub format: Format,
    pub suite: Option<String>,
    pub seed: Option<u64>,
    pub dot: bool,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
}

impl JobSpec {
    pub fn from_cli(cli: Cli) -> Result<JobSpec, CliError> {
        let mut spec = JobSpec {
            command: String::new(),
            cartan_type: None,
            rank: None,
            lambda: Vec::new(),
            word: None,
            format: cli.format,
            suite: None,
            seed: None,
            dot: false,
            cache_dir: cli.cache_dir,
        };
        let set_type = |spec: &mut JobSpec, ty: Option<String>, rank: Option<usize>| -> Result<(), CliError> {
            if let Some(name) = ty {
                let ct = flagk::CartanType::parse(&name, rank)?;
                spec.cartan_type = Some(ct.to_string());
                spec.rank = Some(ct.rank);
            } else if rank.is_some() {
                return Err(CliError::Usage("--rank requires --type".into()));
            }
            Ok(())
        };
        match cli.command {
            Command::Roots { ty } => {
                spec.command = "roots".into();
                set_type(&mut spec, Some(ty.cartan_type), ty.rank)?;
            }
            Command::Weyl { ty, word } => {
                spec.command = "weyl".into();
                set_type(&mut spec, Some(ty.cartan_type), ty.rank)?;
                spec.word = word;
            }
            Command::Paths { ty, lambda, word, dot } => {
                spec.command = "paths".into();
                set_type(&mut spec, Some(ty.cartan_type), ty.rank)?;
                spec.lambda = lambda;
                spec.word = word;
                spec.dot = dot;
            }
            Command::Character { ty, lambda } => {
                spec.command = "character".into();
                set_type(&mut spec, Some(ty.cartan_type), ty.rank)?;
                spec.lambda = lambda;
            }
            Command::Expand { ty, lambda, word } => {
                spec.command = "expand".into();
                set_type(&mut spec, Some(ty.cartan_type), ty.rank)?;
                spec.lambda = lambda;
                spec.word = Some(word.unwrap_or_default());
            }
            Command::Verify { suite, cartan_type, rank, seed } => {
                spec.command = "verify".into();
                set_type(&mut spec, cartan_type, rank)?;
                spec.suite = Some(suite);
                spec.seed = Some(seed);
            }
        }
        if let Ok(dir) = std::env::var(CACHE_ENV) {
            if !dir.is_empty() {
                spec.cache_dir = Some(PathBuf::from(dir));
            }
        }
        spec.validate()?;
        Ok(spec)
    }

    /// Checks λ and the word against the rank before any computation.
    pub fn validate(&self) -> Result<(), CliError> {
        let Some(rank) = self.rank else { return Ok(()) };
        let needs_lambda = matches!(self.command.as_str(), "paths" | "character" | "expand");
        if needs_lambda {
            if self.lambda.len() != rank {
                return Err(CliError::Usage(format!("--lambda needs {rank} coordinates, got {}", self.lambda.len())));
            }
            if self.lambda.iter().any(|&x| x < 0) {
                return Err(CliError::Usage(format!("λ = {:?} is not dominant", self.lambda)));
            }
        }
        if let Some(word) = &self.word {
            if let Some(&j) = word.iter().find(|&&j| j == 0 || j > rank) {
                return Err(CliError::Usage(format!("simple index {j} out of range 1..={rank}")));
            }
        }
        Ok(())
    }

    /// Canonical JSON used for hashing.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("job specs always serialize")
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

/// Runs a job, consulting and filling the cache when one is configured.
pub fn execute(spec: &JobSpec) -> Result<Outcome, CliError> {
    if let Some(dir) = &spec.cache_dir {
        let store = cache::Cache::new(dir);
        if let Some(hit) = store.get(spec)? {
            return Ok(hit);
        }
        let outcome = commands::dispatch(spec)?;
        store.put(spec, &outcome)?;
        return Ok(outcome);
    }
    commands::dispatch(spec)
}

/// Parses arguments, runs the job and returns `(exit code, stdout, stderr)`.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (code, String::new(), text) };
        }
    };
    let result = JobSpec::from_cli(cli).and_then(|spec| execute(&spec));
    match result {
        Ok(out) => (out.exit_code, out.stdout, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
