use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::{Command, OutputFormat, RunConfig};

/// Decimal digits only: no sign, no exponent, no underscores.
fn decimal_u64(s: &str) -> Result<u64, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a decimal integer"));
    }
    s.parse().map_err(|e| format!("`{s}`: {e}"))
}

fn decimal_i64(s: &str) -> Result<i64, String> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let v = decimal_u64(digits)? as i64;
    Ok(if neg { -v } else { v })
}

fn decimal_usize(s: &str) -> Result<usize, String> {
    decimal_u64(s).map(|v| v as usize)
}

fn decimal_u32(s: &str) -> Result<u32, String> {
    decimal_u64(s)?
        .try_into()
        .map_err(|_| format!("`{s}` is too large"))
}

#[derive(Debug, Parser)]
#[command(
    name = "primorial",
    version,
    about = "Verify primorial-type inequalities over prime values of polynomials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,

    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,

    /// Worker threads for sieving and enumeration.
    #[arg(long, global = true, default_value = "1", value_parser = decimal_usize)]
    pub threads: usize,

    /// Seed for sampled exact re-checks of log-domain decisions.
    #[arg(long, global = true, value_parser = decimal_u64)]
    pub seed: Option<u64>,

    /// Leave timing fields out of the output.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum NormArg {
    SumOfSquares,
    Max,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Enumerate the prime values of a polynomial and check the product inequality.
    Verify {
        #[arg(long, value_parser = parse_poly_arg)]
        poly: String,
        #[arg(long, value_parser = decimal_u64)]
        bound: u64,
        #[arg(long, default_value = "1", value_parser = decimal_usize)]
        n_min: usize,
        #[arg(long, default_value = "1", value_parser = decimal_u32)]
        exponent: u32,
    },
    /// Build the greedy coprime product sequence of a polynomial system.
    Beta {
        /// Repeat once per member of the system.
        #[arg(long, required = true, value_parser = parse_poly_arg)]
        poly: Vec<String>,
        #[arg(long, value_parser = decimal_u64)]
        bound: u64,
        #[arg(long, default_value = "1", value_parser = decimal_usize)]
        n_min: usize,
        #[arg(long, value_enum, default_value_t = NormArg::SumOfSquares)]
        norm: NormArg,
    },
    /// Compare the primorial with powers of the next prime.
    Bonse {
        #[arg(long, value_parser = decimal_usize)]
        n_max: usize,
        #[arg(long, default_value = "2", value_parser = decimal_u32)]
        exponent: u32,
    },
    /// Build the sequence on which the inequality reverses.
    Counterexample {
        #[arg(long, value_parser = decimal_usize)]
        terms: usize,
        /// Multipliers tried per term.
        #[arg(long, default_value = "10000000", value_parser = decimal_u64)]
        max_search: u64,
    },
    /// Chebyshev theta, optionally restricted to a residue class.
    Theta {
        #[arg(long, value_parser = decimal_u64)]
        bound: u64,
        #[arg(long, value_parser = decimal_u64, requires = "residue")]
        modulus: Option<u64>,
        #[arg(long, value_parser = decimal_i64, allow_hyphen_values = true, requires = "modulus")]
        residue: Option<i64>,
    },
    /// Least prime value of a polynomial coprime to m and at most m.
    Zmstar {
        #[arg(long, value_parser = parse_poly_arg)]
        poly: String,
        #[arg(long, value_parser = decimal_u64)]
        m: u64,
    },
    /// Largest pairwise-coprime subset of {2..n} against pi(n).
    CoprimeSubset {
        #[arg(long, default_value = "60", value_parser = decimal_u64)]
        n_max: u64,
    },
}

fn parse_poly_arg(s: &str) -> Result<String, String> {
    primorial::parse_poly(s)
        .map(|_| s.to_string())
        .map_err(|e| e.to_string())
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let command = match cli.command {
            Sub::Verify {
                poly,
                bound,
                n_min,
                exponent,
            } => Command::Verify {
                poly,
                bound,
                n_min,
                exponent,
            },
            Sub::Beta {
                poly,
                bound,
                n_min,
                norm,
            } => Command::Beta {
                polys: poly,
                bound,
                n_min,
                norm: match norm {
                    NormArg::SumOfSquares => primorial::special::NormKind::SumOfSquares,
                    NormArg::Max => primorial::special::NormKind::Max,
                },
            },
            Sub::Bonse { n_max, exponent } => Command::Bonse { n_max, exponent },
            Sub::Counterexample { terms, max_search } => {
                Command::Counterexample { terms, max_search }
            }
            Sub::Theta {
                bound,
                modulus,
                residue,
            } => Command::Theta {
                bound,
                class: modulus.zip(residue),
            },
            Sub::Zmstar { poly, m } => Command::Zmstar { poly, m },
            Sub::CoprimeSubset { n_max } => Command::CoprimeSubset { n_max },
        };
        RunConfig {
            command,
            format: match cli.global.format {
                FormatArg::Json => OutputFormat::Json,
                FormatArg::Csv => OutputFormat::Csv,
                FormatArg::Text => OutputFormat::Text,
            },
            threads: cli.global.threads,
            seed: cli.global.seed,
            timings: !cli.global.no_timings,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_only() {
        assert_eq!(decimal_u64("100000"), Ok(100000));
        assert!(decimal_u64("+5").is_err());
        assert!(decimal_u64("1e5").is_err());
        assert!(decimal_u64("0x10").is_err());
        assert!(decimal_u64("").is_err());
        assert_eq!(decimal_i64("-7"), Ok(-7));
        assert!(decimal_i64("--7").is_err());
    }
}
