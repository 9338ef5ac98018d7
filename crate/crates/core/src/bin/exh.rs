//! Command-line front end: evaluate, convert, verify, reduce and generate
//! families stored as JSON.
//!
//! Exit codes: 0 success (verify: equivalent), 1 verification failure,
//! 2 input error, 3 conversion cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use exhausters::{
    check_equivalence, convert_with, dedup_sets, demyanov_convert, prune_sampled, random_family,
    read_family, write_family, ConvertOptions, DirectionSampler, Error, Family, FamilyKind, Result,
    DEFAULT_CAP,
};

#[derive(Parser)]
#[command(
    name = "exh",
    version,
    about = "Evaluate, convert and check exhauster/coexhauster families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a family at a direction
    Eval {
        file: PathBuf,
        /// Comma-separated coordinates, e.g. "1,0,0,0"
        #[arg(short, long, allow_hyphen_values = true)]
        direction: String,
    },
    /// Convert between the upper and lower representations
    Convert {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Merge identical output sets
        #[arg(long)]
        dedup: bool,
        /// Largest admissible number of output sets
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Check that two families represent the same function
    Verify {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Number of sampled unit directions (canonical probes are always added)
        #[arg(long, default_value_t = 1000)]
        dirs: usize,
        #[arg(long, env = "EXH_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, env = "EXH_TOL", default_value_t = 1e-9)]
        tol: f64,
    },
    /// Merge duplicate sets, then prune sampled-redundant ones
    Reduce {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 1000)]
        dirs: usize,
        #[arg(long, env = "EXH_SEED", default_value_t = 42)]
        seed: u64,
        /// Stop after merging duplicates
        #[arg(long)]
        dedup_only: bool,
    },
    /// Classical conversion sampled over directions
    Demyanov {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 1000)]
        dirs: usize,
        #[arg(long, env = "EXH_SEED", default_value_t = 42)]
        seed: u64,
    },
    /// Write a seeded random family
    Gen {
        /// Dimension of the argument space
        #[arg(long)]
        n: usize,
        /// Number of sets
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_vertices: usize,
        /// upper_exhauster | lower_exhauster | upper_coexhauster | lower_coexhauster
        #[arg(long)]
        kind: String,
        #[arg(long, env = "EXH_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Eval { file, direction } => {
            let family = read_family(&file)?;
            let delta = parse_direction(&direction)?;
            let value = family.eval(&delta)?;
            println!("{}", format_sig(value, 12));
            Ok(0)
        }
        Command::Convert {
            input,
            output,
            dedup,
            cap,
        } => {
            let family = read_family(&input)?;
            let product: u128 = family.sets().iter().fold(1u128, |acc, s| {
                acc.saturating_mul(s.vertices().len() as u128)
            });
            let converted = convert_with(&family, ConvertOptions { dedup, cap })?;
            println!("p = {product}");
            println!("sets_written = {}", converted.sets().len());
            write_family(&output, &converted)?;
            Ok(0)
        }
        Command::Verify {
            file_a,
            file_b,
            dirs,
            seed,
            tol,
        } => {
            let a = read_family(&file_a)?;
            let b = read_family(&file_b)?;
            let sampler = DirectionSampler::full_sphere(a.space_dim(), dirs, seed)?;
            let report = check_equivalence(&a, &b, &sampler, tol)?;
            println!(
                "max_abs_deviation = {}",
                format_sig(report.max_abs_deviation, 12)
            );
            println!("worst_direction = {}", join(&report.worst_direction));
            println!("directions_tested = {}", report.directions_tested);
            println!("tolerance = {}", format_sig(report.tolerance, 12));
            println!("passed = {}", report.passed);
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Reduce {
            input,
            output,
            dirs,
            seed,
            dedup_only,
        } => {
            let family = read_family(&input)?;
            let deduped = dedup_sets(&family);
            let reduced = if dedup_only {
                deduped
            } else {
                let sampler = DirectionSampler::full_sphere(family.space_dim(), dirs, seed)?;
                prune_sampled(&deduped, &sampler)?
            };
            println!("sets_in = {}", family.sets().len());
            println!("sets_out = {}", reduced.sets().len());
            write_family(&output, &reduced)?;
            Ok(0)
        }
        Command::Demyanov {
            input,
            output,
            dirs,
            seed,
        } => {
            let family = read_family(&input)?;
            let sampler = demyanov_sampler(&family, dirs, seed)?;
            let converted = demyanov_convert(&family, &sampler)?;
            println!("sets_written = {}", converted.sets().len());
            write_family(&output, &converted)?;
            Ok(0)
        }
        Command::Gen {
            n,
            k,
            max_vertices,
            kind,
            seed,
            output,
        } => {
            let kind: FamilyKind = kind.parse()?;
            if n == 0 || k == 0 || max_vertices == 0 {
                return Err(Error::Parse(
                    "--n, --k and --max-vertices must be at least 1".to_string(),
                ));
            }
            let family = random_family(n, k, max_vertices, kind, seed);
            println!("sets_written = {}", family.sets().len());
            write_family(&output, &family)?;
            Ok(0)
        }
    }
}

/// Coexhausters scan the half sphere one dimension up; 2-dimensional
/// exhausters get exact uniform angles, higher dimensions a seeded sphere.
fn demyanov_sampler(family: &Family, dirs: usize, seed: u64) -> Result<DirectionSampler> {
    if family.kind().is_coexhauster() {
        DirectionSampler::half_sphere(family.space_dim() + 1, dirs, seed)
    } else if family.space_dim() == 2 {
        Ok(DirectionSampler::uniform_angles_2d(dirs))
    } else {
        DirectionSampler::full_sphere(family.space_dim(), dirs, seed)
    }
}

fn parse_direction(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|part| {
            let coord: f64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coordinate {:?}", part.trim())))?;
            if !coord.is_finite() {
                return Err(Error::Parse(format!("non-finite coordinate {coord}")));
            }
            Ok(coord)
        })
        .collect()
}

fn join(coords: &[f64]) -> String {
    coords
        .iter()
        .map(f64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Shortest decimal form of `x` rounded to `digits` significant digits.
fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("exponential form always parses");
    format!("{rounded}")
}
