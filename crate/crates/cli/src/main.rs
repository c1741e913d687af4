//! `facetor`: bigraded Tor of face rings from the command line.

mod input;
mod report;

use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use facetor::moment_angle::maz_by_omega;
use facetor::oracle::verify_against;
use facetor::random::{random_complement, seeded};
use facetor::{tor_bigraded, Coefficients, Complement, Error, PairSpec, VertexSet};
use serde::Serialize;

use crate::input::{parse_input, parse_omega, parse_pairs, ParseError};
use crate::report::*;

#[derive(Parser)]
#[command(name = "facetor", version, about = "Bigraded Tor algebras of face rings and moment-angle cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Input document: {"m": .., "complement": [[..]]} or {"m": .., "facets": [[..]]}
    input: PathBuf,
    /// Emit machine-readable JSON
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    S2s1,
    D2s1,
}

#[derive(Subcommand)]
enum Command {
    /// Table of the bigraded Tor module
    Tor {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "q")]
        coeff: Coefficients,
    },
    /// Poincaré polynomial of H*(Z_K)
    Zk {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "q")]
        coeff: Coefficients,
    },
    /// Basis of Tor and its nonzero products
    Ring {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "q")]
        coeff: Coefficients,
    },
    /// Star of a face, with its Tor table
    Star {
        #[command(flatten)]
        common: Common,
        /// Comma-separated vertices, e.g. 1,3
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long, default_value = "q")]
        coeff: Coefficients,
    },
    /// Link of a face, with its Tor table
    Link {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long, default_value = "q")]
        coeff: Coefficients,
    },
    /// Graded ranks of H*(Z_K(X, A))
    Maz {
        #[command(flatten)]
        common: Common,
        /// Pairs document: [{"X": [[d, r]], "A": [[d, r]]}, ...], one entry per vertex
        #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
        pairs: Option<PathBuf>,
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        #[arg(long, default_value = "q")]
        coeff: Coefficients,
        /// Also list the summand of every face ω
        #[arg(long)]
        by_omega: bool,
    },
    /// Compare every Tor block with the cohomology of the full subcomplex
    Verify {
        /// Input document (omit with --random)
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Emit machine-readable JSON
        #[arg(long)]
        json: bool,
        /// Coefficient rings to check; defaults to q, f:2 and z
        #[arg(long, value_delimiter = ',')]
        coeff: Vec<Coefficients>,
        /// Check random complements instead of an input file
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long, default_value_t = 4)]
        max_s: usize,
    },
    /// Print the ω-compressed complement document
    Compress {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        /// Accepted for uniformity; the output is always JSON
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Parse(ParseError),
    Core(Error),
    Verify,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn core_exit_code(e: &Error) -> u8 {
    match e {
        Error::VertexOutOfRange { .. }
        | Error::AmbientTooLarge { .. }
        | Error::AmbientMismatch { .. }
        | Error::NotPrime(_) => 2,
        Error::TooManyMembers { .. }
        | Error::TorsionUnsupported
        | Error::NotAField(_)
        | Error::VoidComplex => 3,
        _ => 1,
    }
}

fn print_line(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}").and_then(|_| out.flush()) {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

fn emit<T: Serialize + std::fmt::Display>(value: &T, json: bool) {
    if json {
        print_line(&serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        print_line(&value.to_string());
    }
}

fn configure_threads() -> Result<(), ParseError> {
    let Ok(text) = std::env::var("FACE_TOR_THREADS") else {
        return Ok(());
    };
    let n: usize = text.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| ParseError {
        path: "FACE_TOR_THREADS".into(),
        field: None,
        message: format!("expected a positive integer, found {text:?}"),
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .expect("thread pool configured once");
    Ok(())
}

fn ring_report(p: &Complement, coeff: Coefficients) -> Result<RingReport, Failure> {
    let tor = tor_bigraded(p, coeff)?;
    let basis = tor.basis();
    let labels = tor.basis_labels();
    let entries = basis
        .iter()
        .zip(&labels)
        .enumerate()
        .map(|(index, (c, label))| BasisEntry {
            index,
            label: label.clone(),
            q: c.q,
            sigma: c.sigma.to_vec(),
            degree: c.zk_degree(),
        })
        .collect();
    let positive = |i: usize| basis[i].q > 0 || !basis[i].sigma.is_empty();
    let mut products = Vec::new();
    for i in (0..basis.len()).filter(|&i| positive(i)) {
        for j in (i..basis.len()).filter(|&j| positive(j)) {
            let c = tor.product(&basis[i], &basis[j])?;
            if c.is_zero() {
                continue;
            }
            products.push(ProductEntry {
                left: i,
                right: j,
                q: c.q,
                sigma: c.sigma.to_vec(),
                coordinates: c.coordinates.iter().map(|x| x.to_string()).collect(),
                result: tor.format_class(&c),
            });
        }
    }
    Ok(RingReport { m: p.m(), coefficients: coeff.to_string(), basis: entries, products })
}

fn verify_one(p: &Complement, rings: &[Coefficients]) -> Result<VerifyReport, Failure> {
    let mut runs = Vec::new();
    for &coeff in rings {
        let report = verify_against(&tor_bigraded(p, coeff)?)?;
        let blocks: Vec<CheckRow> = report
            .checks
            .iter()
            .map(|c| CheckRow {
                q: c.q,
                sigma: c.sigma.to_vec(),
                oracle_degree: c.oracle_degree(),
                taylor: c.taylor.to_string(),
                oracle: c.oracle.to_string(),
                pass: c.passed(),
            })
            .collect();
        let passed = blocks.iter().all(|b| b.pass);
        runs.push(RingCheck { coefficients: coeff.to_string(), blocks, passed });
    }
    let passed = runs.iter().all(|r| r.passed);
    Ok(VerifyReport { m: p.m(), complement: p.to_lists(), runs, passed })
}

fn verify_random(
    rings: &[Coefficients],
    trials: usize,
    seed: u64,
    max_m: usize,
    max_s: usize,
) -> Result<RandomVerifyReport, Failure> {
    if max_m == 0 || max_m > facetor::vertex_set::MAX_VERTICES {
        return Err(Failure::Parse(ParseError {
            path: "--max-m".into(),
            field: None,
            message: format!("expected 1..={}", facetor::vertex_set::MAX_VERTICES),
        }));
    }
    let mut rng = seeded(seed);
    let mut results = Vec::with_capacity(trials);
    let mut total = 0;
    for trial in 1..=trials {
        let p = random_complement(&mut rng, max_m, max_s);
        let mut blocks = 0;
        let mut failures = Vec::new();
        for &coeff in rings {
            let report = verify_against(&tor_bigraded(&p, coeff)?)?;
            blocks += report.checks.len();
            for c in report.failures() {
                failures.push(format!(
                    "{coeff} q={} sigma={} taylor={} oracle={}",
                    c.q, c.sigma, c.taylor, c.oracle
                ));
            }
        }
        total += blocks;
        results.push(Trial {
            trial,
            m: p.m(),
            complement: p.to_lists(),
            blocks,
            passed: failures.is_empty(),
            failures,
        });
    }
    let passed = results.iter().all(|t| t.passed);
    Ok(RandomVerifyReport {
        seed,
        trials,
        max_m,
        max_s,
        coefficients: rings.iter().map(|c| c.to_string()).collect(),
        results,
        blocks: total,
        passed,
    })
}

fn complex_report(
    common: &Common,
    omega: &str,
    coeff: Coefficients,
    link: bool,
) -> Result<ComplexReport, Failure> {
    let doc = parse_input(&common.input)?;
    let omega = parse_omega(omega, doc.m)?;
    let k = doc.complex();
    let result = if link { k.link(omega) } else { k.star(omega) };
    let complement = result
        .to_complement()
        .unwrap_or_else(|_| Complement::new(doc.m, vec![VertexSet::EMPTY]).expect("valid m"));
    let tor = tor_bigraded(&complement, coeff)?;
    Ok(ComplexReport {
        operation: if link { "link" } else { "star" },
        omega: omega.to_vec(),
        facets: result.to_lists(),
        complement: complement.to_lists(),
        tor: TorReport::new(&tor),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    match cli.command {
        Command::Tor { common, coeff } => {
            let p = parse_input(&common.input)?.complement();
            emit(&TorReport::new(&tor_bigraded(&p, coeff)?), common.json);
        }
        Command::Zk { common, coeff } => {
            let p = parse_input(&common.input)?.complement();
            let series = facetor::zk_poincare(&p, coeff)?;
            let report = ZkReport {
                m: p.m(),
                coefficients: coeff.to_string(),
                poincare: SeriesJson::from(&series),
            };
            emit(&report, common.json);
        }
        Command::Ring { common, coeff } => {
            let p = parse_input(&common.input)?.complement();
            emit(&ring_report(&p, coeff)?, common.json);
        }
        Command::Star { common, omega, coeff } => {
            emit(&complex_report(&common, &omega, coeff, false)?, common.json);
        }
        Command::Link { common, omega, coeff } => {
            emit(&complex_report(&common, &omega, coeff, true)?, common.json);
        }
        Command::Maz { common, pairs, preset, coeff, by_omega } => {
            let doc = parse_input(&common.input)?;
            let p = doc.complement();
            let (spec, source) = match (pairs, preset) {
                (Some(path), _) => (parse_pairs(&path, doc.m)?, path.display().to_string()),
                (None, Some(Preset::S2s1)) => (PairSpec::s2s1(doc.m), "preset s2s1".to_string()),
                (None, Some(Preset::D2s1)) => (PairSpec::d2s1(doc.m), "preset d2s1".to_string()),
                (None, None) => unreachable!("clap requires --pairs or --preset"),
            };
            let parts = maz_by_omega(&p, &spec, coeff)?;
            let total: facetor::GradedDims = parts.iter().map(|(_, g)| g.clone()).sum();
            let report = MazReport {
                m: doc.m,
                coefficients: coeff.to_string(),
                pairs: source,
                poincare: SeriesJson::from(&total),
                by_omega: by_omega.then(|| {
                    parts
                        .iter()
                        .map(|(w, g)| OmegaPart { omega: w.to_vec(), poincare: SeriesJson::from(g) })
                        .collect()
                }),
            };
            emit(&report, common.json);
        }
        Command::Verify { input, json, coeff, random, trials, seed, max_m, max_s } => {
            let rings = if coeff.is_empty() {
                vec![Coefficients::Rationals, Coefficients::PrimeField(2), Coefficients::Integers]
            } else {
                coeff
            };
            let passed = if random {
                let report = verify_random(&rings, trials, seed, max_m, max_s)?;
                emit(&report, json);
                report.passed
            } else {
                let path = input.expect("clap requires an input without --random");
                let p = parse_input(&path)?.complement();
                let report = verify_one(&p, &rings)?;
                emit(&report, json);
                report.passed
            };
            if !passed {
                return Err(Failure::Verify);
            }
        }
        Command::Compress { input, omega, .. } => {
            let doc = parse_input(&input)?;
            let omega = parse_omega(&omega, doc.m)?;
            let p = doc.complement().compress(omega);
            let out = ComplementDocument { m: p.m(), complement: p.to_lists() };
            print_line(&serde_json::to_string(&out).expect("serializable"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(core_exit_code(&e))
        }
        Err(Failure::Verify) => {
            eprintln!("error: verification failed");
            ExitCode::from(4)
        }
    }
}
