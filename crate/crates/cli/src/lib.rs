//! Command-line front end: each subcommand runs one pipeline from the core
//! library and renders the result as JSON, CSV or text.

pub mod args;
mod commands;
mod render;

use primorial::special::NormKind;
use primorial::{Error, ErrorClass};

pub use commands::run;

/// Process exit statuses.
pub mod exit {
    /// The run completed and the expected property held.
    pub const OK: i32 = 0;
    /// Violations beyond the expected threshold were found.
    pub const VIOLATION: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const RESOURCE: i32 = 3;
}

/// Environment variable naming a directory for cached prime tables.
pub const CACHE_DIR_ENV: &str = "PRIMORIAL_SIEVE_CACHE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Verify {
        poly: String,
        bound: u64,
        n_min: usize,
        exponent: u32,
    },
    Beta {
        polys: Vec<String>,
        bound: u64,
        n_min: usize,
        norm: NormKind,
    },
    Bonse {
        n_max: usize,
        exponent: u32,
    },
    Counterexample {
        terms: usize,
        max_search: u64,
    },
    Theta {
        bound: u64,
        class: Option<(u64, i64)>,
    },
    Zmstar {
        poly: String,
        m: u64,
    },
    CoprimeSubset {
        n_max: u64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub threads: usize,
    pub seed: Option<u64>,
    pub timings: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            format: OutputFormat::Json,
            threads: 1,
            seed: None,
            timings: false,
        }
    }

    /// Argument checks that need no computation.
    pub fn validate(&self) -> Result<(), String> {
        if self.threads == 0 {
            return Err("--threads must be at least 1".into());
        }
        match &self.command {
            Command::Verify {
                bound,
                n_min,
                exponent,
                ..
            } => {
                check_bound(*bound)?;
                check_n_min(*n_min)?;
                check_exponent(*exponent)
            }
            Command::Beta {
                polys,
                bound,
                n_min,
                ..
            } => {
                if polys.is_empty() {
                    return Err("beta needs at least one --poly".into());
                }
                check_bound(*bound)?;
                check_n_min(*n_min)
            }
            Command::Bonse { n_max, exponent } => {
                if *n_max < 1 {
                    return Err("--n-max must be at least 1".into());
                }
                check_exponent(*exponent)
            }
            Command::Counterexample { terms, max_search } => {
                if *terms < 2 {
                    return Err("--terms must be at least 2".into());
                }
                if *max_search < 1 {
                    return Err("--max-search must be at least 1".into());
                }
                Ok(())
            }
            Command::Theta { bound, class } => {
                check_bound(*bound)?;
                if let Some((modulus, _)) = class {
                    if *modulus < 1 {
                        return Err("--modulus must be at least 1".into());
                    }
                }
                Ok(())
            }
            Command::Zmstar { m, .. } => {
                if *m < 1 {
                    return Err("--m must be at least 1".into());
                }
                Ok(())
            }
            Command::CoprimeSubset { n_max } => {
                if !(2..=primorial::special::MAX_SUBSET_N).contains(n_max) {
                    return Err(format!(
                        "--n-max must be between 2 and {}",
                        primorial::special::MAX_SUBSET_N
                    ));
                }
                Ok(())
            }
        }
    }
}

fn check_bound(bound: u64) -> Result<(), String> {
    if bound < 2 {
        return Err("--bound must be at least 2".into());
    }
    Ok(())
}

fn check_n_min(n_min: usize) -> Result<(), String> {
    if n_min < 1 {
        return Err("--n-min must be at least 1".into());
    }
    Ok(())
}

fn check_exponent(exponent: u32) -> Result<(), String> {
    if exponent < 1 {
        return Err("--exponent must be at least 1".into());
    }
    Ok(())
}

/// Exit status and standard output of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
}

/// A failed run: diagnostic for standard error plus its exit status.
#[derive(Debug)]
pub struct Failure {
    pub status: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.class() {
            ErrorClass::Usage => exit::USAGE,
            ErrorClass::Resource => exit::RESOURCE,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}
