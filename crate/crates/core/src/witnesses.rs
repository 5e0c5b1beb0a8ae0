//! Functional-irreducibility witnesses for the ten-invariant basis.
//!
//! For each basis invariant there is a built-in pair of Hall tensors
//! `(V, V')` on which that invariant takes two different values while the
//! other nine coincide. No single-valued function of the other nine can
//! therefore reproduce it, which is exactly what functional irreducibility
//! means. Case ids 1 through 10 target the invariants in canonical order
//! `I2, J2, K2, I4, J4, K4, I6, J6, K6, L6`.
//!
//! The radical-valued components are evaluated from their closed forms at
//! runtime, so their precision is limited only by machine epsilon.

use serde::Serialize;
use thiserror::Error;

use crate::invariants::{hall_invariants, Invariant};
use crate::tensor::HallTensor;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum WitnessError {
    #[error("witness case {0} out of range (valid: 1..=10)")]
    CaseOutOfRange(usize),
    #[error(
        "tolerances must be nonnegative (got coincidence {coincidence}, separation {separation})"
    )]
    BadTolerance { coincidence: f64, separation: f64 },
}

/// Reference value listed for one invariant on both members of a pair.
/// The listed signs of the trace-of-`W^2` family are not internally
/// consistent across cases, so comparisons use absolute values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceValue {
    pub invariant: Invariant,
    pub v: f64,
    pub v_prime: f64,
}

/// One witness pair with its target invariant and reference values.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessCase {
    pub id: usize,
    pub target: Invariant,
    pub v: HallTensor<f64>,
    pub v_prime: HallTensor<f64>,
    /// Reference values for all ten invariants on `V` and `V'`.
    pub reference: Vec<ReferenceValue>,
    /// Whether the target satisfies `f(V) = -f(V')`.
    pub target_negated: bool,
}

/// Outcome of checking one witness pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparationReport {
    pub id: usize,
    pub target: Invariant,
    /// `|f_target(V) - f_target(V')|`.
    pub target_delta: f64,
    /// Largest scale-normalized disagreement over the nine non-target
    /// invariants.
    pub max_mismatch: f64,
    pub pass: bool,
}

fn refs(entries: &[(Invariant, f64, f64)]) -> Vec<ReferenceValue> {
    Invariant::ALL
        .iter()
        .map(|&invariant| {
            let listed = entries.iter().find(|(inv, _, _)| *inv == invariant);
            let (v, v_prime) = listed.map_or((0.0, 0.0), |&(_, a, b)| (a, b));
            ReferenceValue {
                invariant,
                v,
                v_prime,
            }
        })
        .collect()
}

fn tensor(c: [f64; 9]) -> HallTensor<f64> {
    HallTensor::new(c).expect("witness components are finite")
}

/// Returns witness case `id` (1..=10) with components in storage order
/// `(k121, k122, k123, k131, k132, k133, k231, k232, k233)`.
pub fn witness_pair(id: usize) -> Result<WitnessCase, WitnessError> {
    use Invariant::*;
    let case = match id {
        1 => WitnessCase {
            id,
            target: I2,
            v: tensor([0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 1.0, 0.0]),
            v_prime: tensor([0.0, 0.0, 0.0, -2.0, 0.0, 0.0, 0.0, 2.0, 0.0]),
            reference: refs(&[(I2, 2.0, 8.0)]),
            target_negated: false,
        },
        2 => WitnessCase {
            id,
            target: J2,
            v: tensor([0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0]),
            v_prime: tensor([0.0; 9]),
            reference: refs(&[(J2, 2.0, 0.0)]),
            target_negated: false,
        },
        3 => {
            let c = ((2.0 + 4.0f64.cbrt()) / 2.0).sqrt();
            let cbrt2 = 2.0f64.cbrt();
            WitnessCase {
                id,
                target: K2,
                v: tensor([0.0, 0.0, -c, 0.0, 0.0, 0.0, c, 0.0, 0.0]),
                v_prime: tensor([0.0, 0.0, 1.0, 0.0, cbrt2, 0.0, 1.0, 0.0, 0.0]),
                reference: refs(&[
                    (K2, 0.0, (2.0 - cbrt2) * (2.0 - cbrt2)),
                    (I2, 2.0 + 4.0f64.cbrt(), 2.0 + 4.0f64.cbrt()),
                ]),
                target_negated: false,
            }
        }
        4 => WitnessCase {
            id,
            target: I4,
            v: tensor([-2.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 2.0]),
            v_prime: tensor([
                -3.0f64.sqrt(),
                -2.0f64.sqrt(),
                1.0,
                0.0,
                1.0,
                -2.0f64.sqrt(),
                0.0,
                0.0,
                3.0f64.sqrt(),
            ]),
            reference: refs(&[
                (I4, 5.0, 7.0),
                (I2, 2.0, 2.0),
                (J2, 10.0, 10.0),
                (K6, 9.0, 9.0),
            ]),
            target_negated: false,
        },
        5 => {
            // With s = 4 + sqrt(14) and t = 4 - sqrt(14), the sum
            // x = cbrt(2t) + cbrt(2s) satisfies x^3 = 16 + 6x. Both
            // associated tensors come out diagonal with I3 = (3/4)x on each
            // side but I1 = x/2 - 2 on V and I1 = 2 - x/2 on V', so J4 flips
            // sign while I2, K2 = I1^2 and J6 = I3^2 coincide.
            let s = 4.0 + 14.0f64.sqrt();
            let t = 4.0 - 14.0f64.sqrt();
            let ct = (2.0 * t).cbrt();
            let cs = (2.0 * s).cbrt();
            let x = ct + cs;
            let radicand = 2.0 * 4.0f64.cbrt()
                + 8.0 * t.cbrt()
                + (2.0 * t * t).cbrt()
                + 8.0 * s.cbrt()
                + (2.0 * s * s).cbrt();
            let z = 2.0f64.powf(1.0 / 6.0) * radicand.sqrt();
            let k231 = ct / 2.0 + (s / 4.0).cbrt();
            let k123_prime = 1.0 - ct / 4.0 - cs / 4.0 - z / 4.0;
            let k132_prime = -1.0 + ct / 4.0 + cs / 4.0 - z / 4.0;
            let j4 = 3.0 / 8.0 * (-4.0 + x) * x;
            WitnessCase {
                id,
                target: J4,
                v: tensor([0.0, 0.0, -1.0, 0.0, 1.0, 0.0, k231, 0.0, 0.0]),
                v_prime: tensor([0.0, 0.0, k123_prime, 0.0, k132_prime, 0.0, 0.0, 0.0, 0.0]),
                reference: refs(&[
                    (J4, j4, -j4),
                    (I2, 2.0 + x * x / 4.0, 2.0 + x * x / 4.0),
                    (
                        K2,
                        (-4.0 + x) * (-4.0 + x) / 4.0,
                        (-4.0 + x) * (-4.0 + x) / 4.0,
                    ),
                    (J6, 9.0 / 16.0 * x * x, 9.0 / 16.0 * x * x),
                ]),
                target_negated: true,
            }
        }
        6 => {
            let a3 = 3.0f64.cbrt();
            let a9 = 9.0f64.cbrt();
            let den = 16.0 - 3.0 * a3 - 3.0 * a9;
            let g = ((-12.0 + 6.0 * a9) / den).sqrt();
            let w = 3.0f64.powf(1.0 / 6.0) * ((9.0 + 5.0 * a3 - 6.0 * a9) / den).sqrt();
            let h = ((22.0 - 12.0 * a3 - 2.0 * a9) / den).sqrt();
            let k4 = (6.0 + 21.0 * a3 - 17.0 * a9) / (-256.0 + 48.0 * a3 + 48.0 * a9);
            WitnessCase {
                id,
                target: K4,
                v: tensor([-g / 2.0, 0.5, -1.0, 0.0, -a9 / 2.0, 0.5, -0.5, 0.0, g / 2.0]),
                v_prime: tensor([
                    0.0,
                    -w / 2.0,
                    1.0,
                    -h / 2.0,
                    a9 / 2.0,
                    -w / 2.0,
                    0.5,
                    -h / 2.0,
                    0.0,
                ]),
                reference: refs(&[
                    (K4, k4, -k4),
                    (I2, (5.0 + 3.0 * a3) / 4.0, (5.0 + 3.0 * a3) / 4.0),
                    (
                        J2,
                        (4.0 - 3.0 * a3 + 3.0 * a9) / (-32.0 + 6.0 * a3 + 6.0 * a9),
                        (4.0 - 3.0 * a3 + 3.0 * a9) / (-32.0 + 6.0 * a3 + 6.0 * a9),
                    ),
                    (
                        K2,
                        (-3.0 + a9) * (-3.0 + a9) / 4.0,
                        (-3.0 + a9) * (-3.0 + a9) / 4.0,
                    ),
                    (
                        I4,
                        (-23.0 + 36.0 * a3 + 9.0 * a9) / (-256.0 + 48.0 * a3 + 48.0 * a9),
                        (-23.0 + 36.0 * a3 + 9.0 * a9) / (-256.0 + 48.0 * a3 + 48.0 * a9),
                    ),
                    (
                        K6,
                        (-47.0 + 78.0 * a3 - 31.0 * a9)
                            / (64.0 * (-16.0 + 3.0 * a3 + 3.0 * a9).powi(2)),
                        (-47.0 + 78.0 * a3 - 31.0 * a9)
                            / (64.0 * (-16.0 + 3.0 * a3 + 3.0 * a9).powi(2)),
                    ),
                ]),
                target_negated: true,
            }
        }
        7 => WitnessCase {
            id,
            target: I6,
            v: tensor([-1.0, -1.0, 1.0, 1.0, 1.0, -1.0, 0.0, 1.0, 1.0]),
            v_prime: tensor([-1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 0.0, -1.0, 1.0]),
            reference: refs(&[
                (I6, 2.0, 2.0),
                (I2, 2.0, 2.0),
                (J2, 6.0, 6.0),
                (I4, 4.0, 4.0),
            ]),
            target_negated: true,
        },
        8 => {
            let c = 3.0f64.sqrt() * 2.0f64.cbrt();
            let cbrt2 = 2.0f64.cbrt();
            WitnessCase {
                id,
                target: J6,
                v: tensor([0.0, 0.0, -c, 0.0, 0.0, 0.0, c, 0.0, 0.0]),
                v_prime: tensor([0.0, 0.0, cbrt2, 0.0, 2.0 * cbrt2, 0.0, cbrt2, 0.0, 0.0]),
                reference: refs(&[
                    (J6, 0.0, 144.0),
                    (I2, 6.0 * 4.0f64.cbrt(), 6.0 * 4.0f64.cbrt()),
                ]),
                target_negated: false,
            }
        }
        9 => WitnessCase {
            id,
            target: K6,
            v: tensor([0.5, 1.0, 0.0, 1.5, 0.0, 1.0, 0.0, 1.5, 0.5]),
            v_prime: tensor([
                -0.5,
                0.5,
                0.0,
                3.0f64.sqrt(),
                0.0,
                0.5,
                0.0,
                3.0f64.sqrt(),
                -0.5,
            ]),
            reference: refs(&[
                (K6, 2.25, 0.75),
                (I2, 0.5, 0.5),
                (J2, -6.5, -6.5),
                (I4, -13.0 / 16.0, -13.0 / 16.0),
            ]),
            target_negated: false,
        },
        10 => {
            let r = 0.5 * (5.0f64 / 2.0).sqrt();
            WitnessCase {
                id,
                target: L6,
                v: tensor([-1.0, 0.5, -1.0, 0.0, 2.0, 0.5, 3.0, 0.0, 1.0]),
                v_prime: tensor([0.0, -r, 1.0, -r, -2.0, -r, -3.0, -r, 0.0]),
                reference: refs(&[
                    (L6, -22.5, 22.5),
                    (I2, 14.0, 14.0),
                    (J2, -2.5, -2.5),
                    (I4, -11.25, -11.25),
                    (J6, 324.0, 324.0),
                    (K6, 25.0 / 16.0, 25.0 / 16.0),
                ]),
                target_negated: true,
            }
        }
        _ => return Err(WitnessError::CaseOutOfRange(id)),
    };
    Ok(case)
}

fn relative_mismatch(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// Evaluates both members of a witness pair and reports whether the target
/// invariant separates (`delta > separation_floor`) while the other nine
/// coincide (scale-normalized mismatch `<= coincidence_tol`).
pub fn check_separation(
    id: usize,
    coincidence_tol: f64,
    separation_floor: f64,
) -> Result<SeparationReport, WitnessError> {
    if coincidence_tol < 0.0 || separation_floor < 0.0 {
        return Err(WitnessError::BadTolerance {
            coincidence: coincidence_tol,
            separation: separation_floor,
        });
    }
    let case = witness_pair(id)?;
    let left = hall_invariants(&case.v);
    let right = hall_invariants(&case.v_prime);
    let target_delta = (left.get(case.target) - right.get(case.target)).abs();
    let max_mismatch = Invariant::ALL
        .iter()
        .filter(|&&inv| inv != case.target)
        .map(|&inv| relative_mismatch(*left.get(inv), *right.get(inv)))
        .fold(0.0, f64::max);
    Ok(SeparationReport {
        id,
        target: case.target,
        target_delta,
        max_mismatch,
        pass: target_delta > separation_floor && max_mismatch <= coincidence_tol,
    })
}

/// Runs all ten witness checks. The basis is functionally irreducible when
/// every report passes.
pub fn run_all_witnesses(
    coincidence_tol: f64,
    separation_floor: f64,
) -> Result<Vec<SeparationReport>, WitnessError> {
    (1..=10)
        .map(|id| check_separation(id, coincidence_tol, separation_floor))
        .collect()
}

pub const DEFAULT_COINCIDENCE_TOL: f64 = 1e-9;
pub const DEFAULT_SEPARATION_FLOOR: f64 = 1e-6;
