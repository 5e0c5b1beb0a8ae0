//! `hall` - scriptable verification commands for Hall tensor invariants.
//!
//! Exit codes: 0 = verified/pass, 1 = verification failed, 2 = usage or
//! parse error. All randomness is seed-controlled, so every command is
//! deterministic given its flags.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hall_invariants::{
    check_separation, hall_field, hall_invariants, parse_tensor_exact, parse_tensor_f64,
    random_integer_hall, random_orthogonal, rotate_hall, run_all_witnesses, verify_minimality,
    DetSign, Invariant, PointSource, RankReport, SeparationReport, TenInvariants,
    DEFAULT_COINCIDENCE_TOL, DEFAULT_SEPARATION_FLOOR,
};

const DEFAULT_ISOTROPY_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(
    name = "hall",
    version,
    about = "Hall tensor invariants: evaluation and basis verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the ten basis invariants of a tensor file as JSON.
    Invariants {
        /// Tensor file: {"k": [k121, ..., k233]}.
        file: PathBuf,
        /// Evaluate in exact rational arithmetic and print fractions.
        #[arg(long)]
        exact: bool,
    },
    /// Certify that the basis admits no linear monomial relation at degrees
    /// 2, 4, 6 (exact ranks 3, 9, 23).
    VerifyIntegrity {
        #[arg(long, value_enum, default_value_t = Source::Paper)]
        source: Source,
        /// Seed for random sample points (random source only).
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Points per degree as a multiple of the monomial count (random
        /// source only).
        #[arg(long, default_value_t = 2)]
        rows_multiplier: u32,
    },
    /// Replay the ten witness pairs certifying functional irreducibility.
    VerifyFunctionBasis {
        /// Check a single case (1..=10) instead of all ten.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=10))]
        case: Option<u64>,
        /// Emit a machine-readable JSON report.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_COINCIDENCE_TOL)]
        coincidence_tol: f64,
        #[arg(long, default_value_t = DEFAULT_SEPARATION_FLOOR)]
        separation_floor: f64,
    },
    /// Apply seeded random orthogonal transformations to seeded random
    /// integer tensors and confirm the ten invariants are stable.
    IsotropyFuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        /// Maximum allowed relative deviation.
        #[arg(long, default_value_t = DEFAULT_ISOTROPY_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the constitutive law E_i = k_ijk J_j H_k.
    Field {
        /// Tensor file: {"k": [k121, ..., k233]}.
        file: PathBuf,
        /// Current density J as "x,y,z".
        #[arg(long, value_parser = parse_triple)]
        current: Triple,
        /// Magnetic field H as "x,y,z".
        #[arg(long, value_parser = parse_triple)]
        magnetic: Triple,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Paper,
    Random,
}

#[derive(Clone, Copy, Debug)]
struct Triple([f64; 3]);

fn parse_triple(text: &str) -> Result<Triple, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!(
            "expected three comma-separated numbers, got {text:?}"
        ));
    }
    let mut out = [0.0f64; 3];
    for (i, part) in parts.iter().enumerate() {
        let v: f64 = part
            .trim()
            .parse()
            .map_err(|_| format!("component {} of {text:?} is not a number", i + 1))?;
        if !v.is_finite() {
            return Err(format!("component {} of {text:?} is not finite", i + 1));
        }
        out[i] = v;
    }
    Ok(Triple(out))
}

// Field names double as JSON keys; serde keeps declaration order, which is
// the canonical invariant order.
#[derive(Serialize)]
#[allow(non_snake_case)]
struct InvariantsJson<T: Serialize> {
    I2: T,
    J2: T,
    K2: T,
    I4: T,
    J4: T,
    K4: T,
    I6: T,
    J6: T,
    K6: T,
    L6: T,
}

impl<T: Serialize> InvariantsJson<T> {
    fn new<S>(values: &TenInvariants<S>, convert: impl Fn(&S) -> T) -> Self {
        Self {
            I2: convert(&values.i2),
            J2: convert(&values.j2),
            K2: convert(&values.k2),
            I4: convert(&values.i4),
            J4: convert(&values.j4),
            K4: convert(&values.k4),
            I6: convert(&values.i6),
            J6: convert(&values.j6),
            K6: convert(&values.k6),
            L6: convert(&values.l6),
        }
    }
}

#[derive(Serialize)]
struct IntegrityJson {
    source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rows_multiplier: Option<u32>,
    degrees: Vec<RankReport>,
    pass: bool,
}

#[derive(Serialize)]
struct FunctionBasisJson {
    coincidence_tol: f64,
    separation_floor: f64,
    cases: Vec<SeparationReport>,
    pass: bool,
}

#[derive(Serialize)]
struct FuzzJson {
    seed: u64,
    trials: u32,
    tolerance: f64,
    max_relative_deviation: f64,
    worst_invariant: Invariant,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Invariants { file, exact } => cmd_invariants(&file, exact),
        Command::VerifyIntegrity {
            source,
            seed,
            rows_multiplier,
        } => Ok(cmd_verify_integrity(source, seed, rows_multiplier)),
        Command::VerifyFunctionBasis {
            case,
            json,
            coincidence_tol,
            separation_floor,
        } => cmd_verify_function_basis(case, json, coincidence_tol, separation_floor),
        Command::IsotropyFuzz {
            seed,
            trials,
            tol,
            json,
        } => cmd_isotropy_fuzz(seed, trials, tol, json),
        Command::Field {
            file,
            current,
            magnetic,
        } => cmd_field(&file, current.0, magnetic.0),
    }
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

fn cmd_invariants(file: &PathBuf, exact: bool) -> Result<ExitCode, String> {
    let text = read_file(file)?;
    if exact {
        let tensor = parse_tensor_exact(&text).map_err(|e| e.to_string())?;
        let values = hall_invariants(&tensor);
        println!(
            "{}",
            to_json(&InvariantsJson::new(&values, |r| r.to_string()))
        );
    } else {
        let tensor = parse_tensor_f64(&text).map_err(|e| e.to_string())?;
        let values = hall_invariants(&tensor);
        println!("{}", to_json(&InvariantsJson::new(&values, |v| *v)));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_integrity(source: Source, seed: u64, rows_multiplier: u32) -> ExitCode {
    let (point_source, label, seed_out, mult_out) = match source {
        Source::Paper => (PointSource::Paper, "paper", None, None),
        Source::Random => (
            PointSource::Random {
                seed,
                rows_multiplier,
            },
            "random",
            Some(seed),
            Some(rows_multiplier),
        ),
    };
    let degrees = verify_minimality(&point_source);
    let pass = degrees.iter().all(|r| r.pass);
    let report = IntegrityJson {
        source: label,
        seed: seed_out,
        rows_multiplier: mult_out,
        degrees,
        pass,
    };
    println!("{}", to_json(&report));
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify_function_basis(
    case: Option<u64>,
    json: bool,
    coincidence_tol: f64,
    separation_floor: f64,
) -> Result<ExitCode, String> {
    let cases = match case {
        Some(id) => vec![
            check_separation(id as usize, coincidence_tol, separation_floor)
                .map_err(|e| e.to_string())?,
        ],
        None => run_all_witnesses(coincidence_tol, separation_floor).map_err(|e| e.to_string())?,
    };
    let pass = cases.iter().all(|r| r.pass);
    if json {
        let report = FunctionBasisJson {
            coincidence_tol,
            separation_floor,
            cases,
            pass,
        };
        println!("{}", to_json(&report));
    } else {
        let mut out = String::new();
        for r in &cases {
            writeln!(
                out,
                "case {:2}  target {:2}  delta {:.6e}  mismatch {:.3e}  {}",
                r.id,
                r.target,
                r.target_delta,
                r.max_mismatch,
                if r.pass { "pass" } else { "FAIL" }
            )
            .expect("writing to string");
        }
        let passed = cases.iter().filter(|r| r.pass).count();
        write!(
            out,
            "function basis: {} ({passed}/{})",
            if pass { "PASS" } else { "FAIL" },
            cases.len()
        )
        .expect("writing to string");
        println!("{out}");
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_isotropy_fuzz(seed: u64, trials: u32, tol: f64, json: bool) -> Result<ExitCode, String> {
    use rand::SeedableRng;
    if tol.is_nan() || tol < 0.0 {
        return Err(format!("tolerance must be nonnegative, got {tol}"));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut worst_invariant = Invariant::I2;
    for trial in 0..u64::from(trials) {
        let tensor = random_integer_hall(&mut rng, -5, 5);
        let sign = if trial % 2 == 0 {
            DetSign::Proper
        } else {
            DetSign::Improper
        };
        let q = random_orthogonal(seed.wrapping_add(trial).wrapping_mul(0x9e37), sign);
        let before = hall_invariants(&tensor);
        let after = hall_invariants(&rotate_hall(&q, &tensor));
        for inv in Invariant::ALL {
            let b = *before.get(inv);
            let a = *after.get(inv);
            let deviation = (a - b).abs() / b.abs().max(1.0);
            if deviation > worst {
                worst = deviation;
                worst_invariant = inv;
            }
        }
    }
    let pass = worst <= tol;
    let report = FuzzJson {
        seed,
        trials,
        tolerance: tol,
        max_relative_deviation: worst,
        worst_invariant,
        pass,
    };
    if json {
        println!("{}", to_json(&report));
    } else {
        println!(
            "isotropy fuzz: {} - {trials} trials, max relative deviation {worst:.3e} ({}) vs tolerance {tol:.1e}",
            if pass { "PASS" } else { "FAIL" },
            worst_invariant
        );
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_field(file: &PathBuf, current: [f64; 3], magnetic: [f64; 3]) -> Result<ExitCode, String> {
    let text = read_file(file)?;
    let tensor = parse_tensor_f64(&text).map_err(|e| e.to_string())?;
    let field = hall_field(&tensor, current, magnetic);
    println!(
        "{}",
        serde_json::to_string(&field).expect("vector serialization")
    );
    Ok(ExitCode::SUCCESS)
}
