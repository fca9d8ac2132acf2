use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigUint;
use primorial::inequality::{
    inequality_rows, report_from_rows, Comparator, InequalityRow, RowOrdering,
};
use primorial::poly::{
    check_hypotheses, enumerate_prime_values, parse_poly, EnumerationConfig, HypothesisReport,
};
use primorial::primes::{euler_phi, PrimeTable, SieveConfig, ThetaValue};
use primorial::report::{Relation, ReportContext, Timings, VerificationReport};
use primorial::special::{
    build_beta, build_h_sequence, build_literal_h_sequence, check_zm_star,
    enumerate_simultaneous_points, max_coprime_subset, verify_reverse_inequality, BetaSequence,
    ModulusReading, ZmStarOutcome,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::render;
use crate::{exit, Command, Failure, Outcome, RunConfig, CACHE_DIR_ENV};

/// Number of rows re-decided exactly when `--seed` is given.
const CROSSCHECK_SAMPLES: usize = 32;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Crosscheck {
    pub seed: u64,
    pub samples: Vec<u64>,
    pub agreed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyOutput {
    #[serde(flatten)]
    pub report: VerificationReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<HypothesisReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_crosscheck: Option<Crosscheck>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BetaOutput {
    #[serde(flatten)]
    pub report: VerificationReport,
    pub beta: BetaSequence,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_crosscheck: Option<Crosscheck>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BonseOutput {
    #[serde(flatten)]
    pub report: VerificationReport,
    /// First `n` at which the product exceeds the power.
    pub first_greater: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReadingCheck {
    pub reading: ModulusReading,
    #[serde(with = "primorial::bigmath::decimal::vec")]
    pub terms: Vec<BigUint>,
    pub violations: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleOutput {
    #[serde(flatten)]
    pub report: VerificationReport,
    pub reading: ModulusReading,
    #[serde(with = "primorial::bigmath::decimal::vec")]
    pub terms: Vec<BigUint>,
    pub multipliers: Vec<u64>,
    /// The same construction with the ordinary primorial as modulus.
    pub alternative_reading: ReadingCheck,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaOutput {
    pub theta: ThetaValue,
    pub phi: u64,
    /// `theta / (x / phi(modulus))`.
    pub ratio: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZmstarOutput {
    pub poly: String,
    pub m: u64,
    #[serde(flatten)]
    pub outcome: ZmStarOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoprimeSubsetRow {
    pub n: u64,
    pub pi: usize,
    pub max_subset: usize,
    pub witness: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoprimeSubsetOutput {
    pub rows: Vec<CoprimeSubsetRow>,
    pub all_agree: bool,
}

fn progress(msg: impl AsRef<str>) {
    eprintln!("{}", msg.as_ref());
}

fn table(limit: u64, threads: usize) -> Result<PrimeTable, Failure> {
    let limit = limit.max(2);
    let cfg = SieveConfig {
        threads,
        ..Default::default()
    };
    let cache = std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from);
    if let Some(dir) = &cache {
        if let Some(t) = PrimeTable::load_cache(dir, limit)? {
            progress(format!("loaded primes up to {limit} from cache"));
            return Ok(t);
        }
    }
    progress(format!("sieving primes up to {limit}"));
    let t = PrimeTable::with_config(limit, &cfg)?;
    if let Some(dir) = &cache {
        t.save_cache(dir)?;
    }
    Ok(t)
}

fn crosscheck(
    seq: &[BigUint],
    rows: &[InequalityRow],
    k: u32,
    seed: Option<u64>,
) -> Option<Crosscheck> {
    let seed = seed?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks: Vec<usize> = (0..CROSSCHECK_SAMPLES.min(rows.len()))
        .map(|_| rng.gen_range(0..rows.len()))
        .collect();
    picks.sort_unstable();
    picks.dedup();
    let exact = Comparator::exact();
    let agreed = picks.iter().all(|&i| {
        let row = &rows[i];
        exact
            .compare(seq, row.n as usize, k)
            .map(|o| RowOrdering::from(o) == row.ordering)
            .unwrap_or(false)
    });
    Some(Crosscheck {
        seed,
        samples: picks.iter().map(|&i| rows[i].n).collect(),
        agreed,
    })
}

fn timings(config: &RunConfig, start: Instant) -> Option<Timings> {
    config.timings.then(|| start.elapsed().into())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs always serialize");
    s.push('\n');
    s
}

/// Runs one configured pipeline.
pub fn run(config: &RunConfig) -> Result<Outcome, Failure> {
    config.validate().map_err(|message| Failure {
        status: exit::USAGE,
        message,
    })?;
    let start = Instant::now();
    let enum_cfg = EnumerationConfig {
        threads: config.threads,
        ..Default::default()
    };
    match &config.command {
        Command::Verify {
            poly,
            bound,
            n_min,
            exponent,
        } => {
            let f = parse_poly(poly)?;
            let table = table(*bound, config.threads)?;
            progress(format!("enumerating prime values of {f} up to {bound}"));
            let seq = enumerate_prime_values(&f, *bound, &table, &enum_cfg)?;
            let terms = seq.terms_big();
            if terms.len() < n_min + 2 {
                return Err(primorial::Error::SequenceTooShort {
                    len: terms.len(),
                    needed: n_min + 2,
                }
                .into());
            }
            let ctx = ReportContext {
                family: f.to_string(),
                bound: Some(*bound),
                exhaustive: seq.exhaustive,
                probabilistic_primality: false,
            };
            let rows = inequality_rows(&terms, *n_min, *exponent, &Comparator::default())?;
            let mut report =
                report_from_rows(&terms, &rows, *exponent, Relation::ProductGreater, &ctx);
            let check = crosscheck(&terms, &rows, *exponent, config.seed);
            report.timings = timings(config, start);
            let status = if report.holds() && check.as_ref().is_none_or(|c| c.agreed) {
                exit::OK
            } else {
                exit::VIOLATION
            };
            let out = VerifyOutput {
                report,
                hypotheses: (f.arity() == 1).then(|| check_hypotheses(&f)).transpose()?,
                exact_crosscheck: check,
            };
            let stdout = match config.format {
                crate::OutputFormat::Json => json(&out),
                crate::OutputFormat::Csv => render::rows_csv(&rows),
                crate::OutputFormat::Text => render::report_text(&out.report),
            };
            Ok(Outcome { status, stdout })
        }
        Command::Beta {
            polys,
            bound,
            n_min,
            norm,
        } => {
            let system = polys
                .iter()
                .map(|p| parse_poly(p))
                .collect::<Result<Vec<_>, _>>()?;
            let table = table(*bound, config.threads)?;
            progress(format!("scanning simultaneous prime points up to {bound}"));
            let scan = enumerate_simultaneous_points(&system, *bound, &table, *norm, &enum_cfg)?;
            let beta = build_beta(&scan);
            if beta.betas.len() < n_min + 2 {
                return Err(primorial::Error::SequenceTooShort {
                    len: beta.betas.len(),
                    needed: n_min + 2,
                }
                .into());
            }
            let ctx = ReportContext {
                family: beta.family(),
                bound: Some(*bound),
                exhaustive: beta.exhaustive,
                probabilistic_primality: false,
            };
            let rows = inequality_rows(&beta.betas, *n_min, 1, &Comparator::default())?;
            let mut report =
                report_from_rows(&beta.betas, &rows, 1, Relation::ProductGreater, &ctx);
            let check = crosscheck(&beta.betas, &rows, 1, config.seed);
            report.timings = timings(config, start);
            let status = if report.holds() && check.as_ref().is_none_or(|c| c.agreed) {
                exit::OK
            } else {
                exit::VIOLATION
            };
            let stdout = match config.format {
                crate::OutputFormat::Json => json(&BetaOutput {
                    report,
                    beta,
                    exact_crosscheck: check,
                }),
                crate::OutputFormat::Csv => render::rows_csv(&rows),
                crate::OutputFormat::Text => render::report_text(&report),
            };
            Ok(Outcome { status, stdout })
        }
        Command::Bonse { n_max, exponent } => {
            let cfg = SieveConfig {
                threads: config.threads,
                ..Default::default()
            };
            let table = match std::env::var_os(CACHE_DIR_ENV) {
                Some(_) => table(
                    primorial::primes::nth_prime_upper_bound(*n_max as u64 + 1),
                    config.threads,
                )?,
                None => PrimeTable::with_prime_count(n_max + 1, &cfg)?,
            };
            let primes: Vec<BigUint> = table.primes()[..=*n_max]
                .iter()
                .map(|&p| p.into())
                .collect();
            let rows = inequality_rows(&primes, 1, *exponent, &Comparator::default())?;
            let ctx = ReportContext {
                family: "primes".to_string(),
                bound: Some(table.nth_prime(n_max + 1)?),
                exhaustive: true,
                probabilistic_primality: false,
            };
            let mut report =
                report_from_rows(&primes, &rows, *exponent, Relation::ProductGreater, &ctx);
            report.timings = timings(config, start);
            let first_greater = rows
                .iter()
                .find(|r| r.ordering == RowOrdering::Greater)
                .map(|r| r.n);
            let status = if report.relapses() {
                exit::VIOLATION
            } else {
                exit::OK
            };
            let stdout = match config.format {
                crate::OutputFormat::Json => json(&BonseOutput {
                    report,
                    first_greater,
                }),
                crate::OutputFormat::Csv => render::rows_csv(&rows),
                crate::OutputFormat::Text => {
                    let mut s = render::report_text(&report);
                    s.push_str(&format!(
                        "first n with product > next^{exponent}: {}\n",
                        first_greater.map_or("none".to_string(), |n| n.to_string())
                    ));
                    s
                }
            };
            Ok(Outcome { status, stdout })
        }
        Command::Counterexample { terms, max_search } => {
            let h = build_h_sequence(*terms, *max_search)?;
            let mut report = verify_reverse_inequality(&h)?;
            let literal = build_literal_h_sequence(*terms, *max_search)?;
            let literal_report = verify_reverse_inequality(&literal)?;
            report.timings = timings(config, start);
            let status = if report.holds() {
                exit::OK
            } else {
                exit::VIOLATION
            };
            let rows = inequality_rows(&h.terms, 1, 1, &Comparator::exact())?;
            let out = CounterexampleOutput {
                report,
                reading: h.reading,
                terms: h.terms.clone(),
                multipliers: h.multipliers.clone(),
                alternative_reading: ReadingCheck {
                    reading: literal.reading,
                    terms: literal.terms,
                    violations: literal_report.violations,
                },
            };
            let stdout = match config.format {
                crate::OutputFormat::Json => json(&out),
                crate::OutputFormat::Csv => render::rows_csv(&rows),
                crate::OutputFormat::Text => {
                    let mut s = render::report_text(&out.report);
                    s.push_str(&format!(
                        "terms: {}\nwith the ordinary primorial as modulus the reverse inequality fails at n = {:?}\n",
                        out.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", "),
                        out.alternative_reading.violations
                    ));
                    s
                }
            };
            Ok(Outcome { status, stdout })
        }
        Command::Theta { bound, class } => {
            let table = table(*bound, config.threads)?;
            let (theta, phi) = match class {
                Some((modulus, residue)) => (
                    table.theta_ap(*bound, *modulus, *residue)?,
                    euler_phi(*modulus),
                ),
                None => (table.theta(*bound)?, 1),
            };
            let ratio =
                primorial::primes::round_significant(theta.value / (*bound as f64 / phi as f64));
            let out = ThetaOutput {
                theta,
                phi,
                ratio,
                timings: timings(config, start),
            };
            let stdout = match config.format {
                crate::OutputFormat::Json => json(&out),
                crate::OutputFormat::Csv => format!(
                    "x,modulus,residue,value,phi,ratio\n{},{},{},{:.11e},{},{}\n",
                    theta.x, theta.modulus, theta.residue, theta.value, phi, ratio
                ),
                crate::OutputFormat::Text => format!(
                    "theta({}; {}, {}) = {:.11e}\nratio to x/phi({}) = {}\n",
                    theta.x, theta.modulus, theta.residue, theta.value, theta.modulus, ratio
                ),
            };
            Ok(Outcome {
                status: exit::OK,
                stdout,
            })
        }
        Command::Zmstar { poly, m } => {
            let f = parse_poly(poly)?;
            let table = table(*m, config.threads)?;
            let outcome = check_zm_star(&f, *m, &table, &enum_cfg)?;
            let out = ZmstarOutput {
                poly: f.to_string(),
                m: *m,
                outcome,
            };
            let stdout = match config.format {
                crate::OutputFormat::Json => json(&out),
                crate::OutputFormat::Csv => match &out.outcome {
                    ZmStarOutcome::Found { point, value } => format!(
                        "m,outcome,value,point\n{},found,{},{}\n",
                        m,
                        value,
                        point
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                    ZmStarOutcome::NotFound => format!("m,outcome,value,point\n{m},not_found,,\n"),
                },
                crate::OutputFormat::Text => match &out.outcome {
                    ZmStarOutcome::Found { point, value } => {
                        format!("{} = {value} at {point:?} is coprime to {m}\n", out.poly)
                    }
                    ZmStarOutcome::NotFound => {
                        format!(
                            "no prime value of {} up to {m} is coprime to {m}\n",
                            out.poly
                        )
                    }
                },
            };
            Ok(Outcome {
                status: exit::OK,
                stdout,
            })
        }
        Command::CoprimeSubset { n_max } => {
            let table = table(*n_max, 1)?;
            let mut rows = Vec::new();
            for n in 2..=*n_max {
                let witness = max_coprime_subset(n)?;
                rows.push(CoprimeSubsetRow {
                    n,
                    pi: table.pi(n)?,
                    max_subset: witness.len(),
                    witness,
                });
            }
            let all_agree = rows.iter().all(|r| r.pi == r.max_subset);
            let status = if all_agree { exit::OK } else { exit::VIOLATION };
            let out = CoprimeSubsetOutput { rows, all_agree };
            let stdout = match config.format {
                crate::OutputFormat::Json => json(&out),
                crate::OutputFormat::Csv => {
                    let mut s = String::from("n,pi,max_subset,agree\n");
                    for r in &out.rows {
                        s.push_str(&format!("{},{},{},{}\n", r.n, r.pi, r.max_subset, r.pi == r.max_subset));
                    }
                    s
                }
                crate::OutputFormat::Text => format!(
                    "largest pairwise-coprime subset of {{2..n}} equals pi(n) for 2 <= n <= {n_max}: {}\n",
                    out.all_agree
                ),
            };
            Ok(Outcome { status, stdout })
        }
    }
}
