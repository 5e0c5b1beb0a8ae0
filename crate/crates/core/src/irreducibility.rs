//! Polynomial-irreducibility certification for the ten-invariant basis.
//!
//! A linear relation among same-degree invariant monomials would have to
//! vanish at every Hall tensor, so evaluating the candidate monomials at
//! enough sample points and certifying full column rank of the resulting
//! matrix proves that no such relation exists. Everything here runs in exact
//! rational arithmetic; see [`exact_rank`].
//!
//! Candidate monomial families by degree:
//!
//! * degree 2: `I2, J2, K2` (3 columns);
//! * degree 4: `I2^2, J2^2, K2^2, I2*J2, I2*K2, J2*K2, I4, J4, K4` (9);
//! * degree 6: the ten triple products of `{I2, J2, K2}` in lexicographic
//!   order, then the nine degree-2 x degree-4 products in row-major order
//!   (`I2*I4, I2*J4, I2*K4, J2*I4, ..., K2*K4`), then `I6, J6, K6, L6`
//!   (23 columns total).

use serde::Serialize;
use thiserror::Error;

use crate::exact::{exact_rank, Rational, RationalMatrix};
use crate::invariants::{hall_invariants, Invariant, TenInvariants};
use crate::scalar::Scalar;
use crate::tensor::HallTensor;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum IrreducibilityError {
    #[error("unsupported degree {0} (must be 2, 4, or 6)")]
    UnsupportedDegree(u32),
}

/// Product of basis invariants, stored as exponents in canonical invariant
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    exponents: [u8; 10],
}

impl Monomial {
    pub fn from_powers(powers: &[(Invariant, u8)]) -> Self {
        let mut exponents = [0u8; 10];
        for &(inv, e) in powers {
            let idx = Invariant::ALL.iter().position(|&i| i == inv).unwrap();
            exponents[idx] += e;
        }
        Self { exponents }
    }

    pub fn exponent(&self, inv: Invariant) -> u8 {
        let idx = Invariant::ALL.iter().position(|&i| i == inv).unwrap();
        self.exponents[idx]
    }

    /// Total degree in the Hall tensor components.
    pub fn degree(&self) -> u32 {
        Invariant::ALL
            .iter()
            .enumerate()
            .map(|(i, inv)| u32::from(self.exponents[i]) * inv.degree())
            .sum()
    }

    /// Evaluates the monomial on a set of already-computed invariant values.
    pub fn evaluate<S: Scalar>(&self, values: &TenInvariants<S>) -> S {
        let mut acc = S::one();
        for (i, inv) in Invariant::ALL.iter().enumerate() {
            for _ in 0..self.exponents[i] {
                acc = acc * values.get(*inv).clone();
            }
        }
        acc
    }

    /// Human-readable form such as `I2^2*J4`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        for (i, inv) in Invariant::ALL.iter().enumerate() {
            match self.exponents[i] {
                0 => {}
                1 => parts.push(inv.name().to_owned()),
                e => parts.push(format!("{}^{}", inv.name(), e)),
            }
        }
        if parts.is_empty() {
            "1".to_owned()
        } else {
            parts.join("*")
        }
    }
}

/// The fixed, ordered monomial family for one degree. Counts are 3, 9 and 23.
pub fn monomial_basis(degree: u32) -> Result<Vec<Monomial>, IrreducibilityError> {
    use Invariant::*;
    let single = |a: Invariant| Monomial::from_powers(&[(a, 1)]);
    let square = |a: Invariant| Monomial::from_powers(&[(a, 2)]);
    let pair = |a: Invariant, b: Invariant| Monomial::from_powers(&[(a, 1), (b, 1)]);
    match degree {
        2 => Ok(vec![single(I2), single(J2), single(K2)]),
        4 => Ok(vec![
            square(I2),
            square(J2),
            square(K2),
            pair(I2, J2),
            pair(I2, K2),
            pair(J2, K2),
            single(I4),
            single(J4),
            single(K4),
        ]),
        6 => {
            let deg2 = [I2, J2, K2];
            let deg4 = [I4, J4, K4];
            let mut out = Vec::with_capacity(23);
            // Multisets of size three from {I2, J2, K2}, lexicographic.
            for a in 0..3 {
                for b in a..3 {
                    for c in b..3 {
                        out.push(Monomial::from_powers(&[
                            (deg2[a], 1),
                            (deg2[b], 1),
                            (deg2[c], 1),
                        ]));
                    }
                }
            }
            for d2 in deg2 {
                for d4 in deg4 {
                    out.push(pair(d2, d4));
                }
            }
            out.extend([single(I6), single(J6), single(K6), single(L6)]);
            Ok(out)
        }
        other => Err(IrreducibilityError::UnsupportedDegree(other)),
    }
}

/// Integer sample point in component space, identified with a Hall tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SamplePoint(pub [i64; 9]);

impl SamplePoint {
    pub fn to_hall(self) -> HallTensor<Rational> {
        HallTensor::from_ints(self.0)
    }

    pub fn negated(self) -> Self {
        Self(self.0.map(|v| -v))
    }
}

/// The built-in sample points used for the reference rank certification:
/// 3 points at degree 2, 9 at degree 4, 23 at degree 6.
pub fn paper_points(degree: u32) -> Result<Vec<SamplePoint>, IrreducibilityError> {
    let raw: &[[i64; 9]] = match degree {
        2 => &[
            [-2, 3, 5, 0, -5, -4, -5, 2, -2],
            [-3, 0, 1, 1, 2, -4, 3, 0, 3],
            [-2, 0, -1, 2, 1, -3, 5, 2, 3],
        ],
        4 => &[
            [4, 1, -3, 1, -4, -2, -1, 0, -5],
            [1, 5, 4, 0, -1, -5, -3, 5, -2],
            [-4, 4, -4, 1, -5, -2, 2, 3, 4],
            [-4, -5, 5, 5, -2, 3, 5, -1, 2],
            [0, 4, 3, 3, 1, -2, 3, 5, -4],
            [5, -3, 3, 3, -4, -2, 3, 5, -5],
            [-3, -2, 2, 4, -4, 1, 4, 2, 0],
            [-5, -3, 4, -1, 1, -2, -2, -3, 0],
            [0, -2, -2, 1, 5, 3, 4, 0, 0],
        ],
        6 => &[
            [3, -5, 1, 4, 2, 3, 3, 1, -3],
            [-5, -1, 2, -5, -2, 3, 3, 4, -1],
            [-4, 2, 1, -3, -2, -2, 1, 4, -1],
            [-2, 0, 3, 2, -2, -2, -5, 5, 2],
            [-2, -5, -5, -4, 3, -5, -3, 2, -3],
            [5, -4, 1, 3, -4, 1, -1, 4, 0],
            [-3, 3, 5, -3, -3, 1, 2, -2, -3],
            [2, 2, -5, 4, 4, -1, -5, 4, -5],
            [-2, -1, 2, 3, -2, -1, -2, -2, 5],
            [-4, -3, -4, -2, -5, -5, 5, -2, -3],
            [3, 2, -2, -5, 5, -3, 0, -2, -5],
            [4, -4, -1, 4, -4, 0, 1, 3, -1],
            [3, 0, -5, 0, 2, -5, -5, 4, 1],
            [-4, 5, -5, 2, -1, -4, -5, -2, -5],
            [2, -5, -5, 5, 0, 2, 2, 3, 4],
            [1, 4, 4, -1, -5, -3, 4, -5, 1],
            [-2, 5, -5, 1, -2, 1, 0, -5, 4],
            [0, -4, -5, 0, -5, -2, -2, -2, 2],
            [1, 2, 1, -1, 3, -4, -5, 4, 5],
            [3, -3, 1, -3, -5, 3, 5, 1, 1],
            [0, -1, 3, 0, -3, 5, 3, 0, 3],
            [1, -5, -4, -1, 0, -1, -5, -5, 2],
            [-4, -2, 3, 4, 5, -3, 4, 3, 3],
        ],
        other => return Err(IrreducibilityError::UnsupportedDegree(other)),
    };
    Ok(raw.iter().copied().map(SamplePoint).collect())
}

/// Exact value of one monomial at one sample point.
pub fn evaluate_monomial(monomial: &Monomial, point: SamplePoint) -> Rational {
    monomial.evaluate(&hall_invariants(&point.to_hall()))
}

/// Evaluation matrix: row `i`, column `j` holds the `j`-th monomial of the
/// degree's family evaluated at point `i`.
pub fn build_matrix(
    degree: u32,
    points: &[SamplePoint],
) -> Result<RationalMatrix, IrreducibilityError> {
    let monomials = monomial_basis(degree)?;
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|&p| {
            let values = hall_invariants(&p.to_hall());
            monomials.iter().map(|m| m.evaluate(&values)).collect()
        })
        .collect();
    Ok(RationalMatrix::from_rows(rows).expect("rows are uniform by construction"))
}

/// Where the sample points for a rank certification come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointSource {
    /// The built-in reference points (3 / 9 / 23 per degree).
    Paper,
    /// Fresh uniform integer points in `[-5, 5]^9`, `rows_multiplier` times
    /// the monomial count per degree.
    Random { seed: u64, rows_multiplier: u32 },
}

/// Outcome of one degree's rank certification.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankReport {
    pub degree: u32,
    pub monomial_count: usize,
    pub point_count: usize,
    pub rank: usize,
    pub pass: bool,
    pub points: Vec<SamplePoint>,
}

/// Builds the evaluation matrix for one degree and certifies its rank.
/// `pass` means the rank equals the monomial count, i.e. the family admits no
/// linear relation.
pub fn rank_report(
    degree: u32,
    points: Vec<SamplePoint>,
) -> Result<RankReport, IrreducibilityError> {
    let monomial_count = monomial_basis(degree)?.len();
    let matrix = build_matrix(degree, &points)?;
    let rank = exact_rank(&matrix);
    Ok(RankReport {
        degree,
        monomial_count,
        point_count: points.len(),
        rank,
        pass: rank == monomial_count,
        points,
    })
}

/// Uniform random integer points in `[-5, 5]^9`.
pub fn random_points(rng: &mut impl rand::Rng, count: usize) -> Vec<SamplePoint> {
    (0..count)
        .map(|_| SamplePoint(std::array::from_fn(|_| rng.gen_range(-5..=5))))
        .collect()
}

/// Runs the rank certification at degrees 2, 4 and 6. The basis is minimal
/// exactly when the ranks come out (3, 9, 23); a deficit is reported, not an
/// error.
pub fn verify_minimality(source: &PointSource) -> Vec<RankReport> {
    use rand::SeedableRng;
    let mut rng = match source {
        PointSource::Paper => None,
        PointSource::Random { seed, .. } => Some(rand_chacha::ChaCha8Rng::seed_from_u64(*seed)),
    };
    [2u32, 4, 6]
        .into_iter()
        .map(|degree| {
            let points = match source {
                PointSource::Paper => paper_points(degree).expect("supported degree"),
                PointSource::Random {
                    rows_multiplier, ..
                } => {
                    let count = monomial_basis(degree).expect("supported degree").len()
                        * (*rows_multiplier).max(1) as usize;
                    random_points(rng.as_mut().expect("random source has an rng"), count)
                }
            };
            rank_report(degree, points).expect("supported degree")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use num::{One, Signed};

    #[test]
    fn monomial_counts_and_degrees() {
        for (degree, count) in [(2u32, 3usize), (4, 9), (6, 23)] {
            let basis = monomial_basis(degree).unwrap();
            assert_eq!(basis.len(), count);
            assert!(basis.iter().all(|m| m.degree() == degree));
        }
        assert!(matches!(
            monomial_basis(3),
            Err(IrreducibilityError::UnsupportedDegree(3))
        ));
    }

    #[test]
    fn monomial_ordering_is_fixed() {
        let labels: Vec<String> = monomial_basis(4)
            .unwrap()
            .iter()
            .map(Monomial::label)
            .collect();
        assert_eq!(
            labels,
            vec!["I2^2", "J2^2", "K2^2", "I2*J2", "I2*K2", "J2*K2", "I4", "J4", "K4"]
        );

        let labels6: Vec<String> = monomial_basis(6)
            .unwrap()
            .iter()
            .map(Monomial::label)
            .collect();
        assert_eq!(
            labels6,
            vec![
                "I2^3", "I2^2*J2", "I2^2*K2", "I2*J2^2", "I2*J2*K2", "I2*K2^2", "J2^3", "J2^2*K2",
                "J2*K2^2", "K2^3", "I2*I4", "I2*J4", "I2*K4", "J2*I4", "J2*J4", "J2*K4", "K2*I4",
                "K2*J4", "K2*K4", "I6", "J6", "K6", "L6"
            ]
        );
    }

    #[test]
    fn paper_point_lists() {
        assert_eq!(paper_points(2).unwrap().len(), 3);
        assert_eq!(paper_points(4).unwrap().len(), 9);
        assert_eq!(paper_points(6).unwrap().len(), 23);

        assert_eq!(
            paper_points(2).unwrap()[1],
            SamplePoint([-3, 0, 1, 1, 2, -4, 3, 0, 3])
        );
        assert_eq!(
            paper_points(4).unwrap()[0],
            SamplePoint([4, 1, -3, 1, -4, -2, -1, 0, -5])
        );
        assert_eq!(
            paper_points(6).unwrap()[22],
            SamplePoint([-4, -2, 3, 4, 5, -3, 4, 3, 3])
        );
        assert!(paper_points(5).is_err());
    }

    #[test]
    fn monomial_evaluation_at_first_degree2_point() {
        // I2 at y1: frozen from an independent trace computation on
        // A = [[-5, 2, -2], [0, 5, 4], [-2, 3, 5]].
        let y1 = paper_points(2).unwrap()[0];
        let i2 = Monomial::from_powers(&[(Invariant::I2, 1)]);
        assert_eq!(evaluate_monomial(&i2, y1), rational(219, 2).unwrap());

        let k2 = Monomial::from_powers(&[(Invariant::K2, 1)]);
        assert_eq!(
            evaluate_monomial(&k2, SamplePoint([0; 9])),
            Rational::from_int(0)
        );
    }

    #[test]
    fn even_degree_means_sign_blind() {
        let y = SamplePoint([3, -1, 4, 1, -5, 2, -2, 0, 1]);
        for degree in [2u32, 4, 6] {
            for m in monomial_basis(degree).unwrap() {
                assert_eq!(evaluate_monomial(&m, y), evaluate_monomial(&m, y.negated()));
            }
        }
    }

    #[test]
    fn matrix_shapes() {
        for (degree, n) in [(2u32, 3usize), (4, 9), (6, 23)] {
            let m = build_matrix(degree, &paper_points(degree).unwrap()).unwrap();
            assert_eq!((m.rows(), m.cols()), (n, n));
        }
    }

    #[test]
    fn entries_are_dyadic_for_integer_points() {
        let m = build_matrix(6, &paper_points(6).unwrap()).unwrap();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let denom = m.at(r, c).denom().abs();
                // A power of two has a single set bit.
                let bits = denom.to_biguint().unwrap();
                assert!(
                    bits.count_ones() == 1 || denom.is_one(),
                    "denominator {denom} at ({r},{c}) is not a power of two"
                );
            }
        }
    }

    #[test]
    fn reference_points_reach_full_rank() {
        let reports = verify_minimality(&PointSource::Paper);
        let ranks: Vec<usize> = reports.iter().map(|r| r.rank).collect();
        assert_eq!(ranks, vec![3, 9, 23]);
        assert!(reports.iter().all(|r| r.pass));
    }

    #[test]
    fn random_points_reach_full_rank() {
        let reports = verify_minimality(&PointSource::Random {
            seed: 1,
            rows_multiplier: 2,
        });
        for r in &reports {
            assert_eq!(r.point_count, 2 * r.monomial_count);
            assert!(
                r.pass,
                "degree {} rank {} of {}",
                r.degree, r.rank, r.monomial_count
            );
        }
    }

    #[test]
    fn repeated_points_are_rank_deficient() {
        let y1 = paper_points(2).unwrap()[0];
        let report = rank_report(2, vec![y1, y1, y1]).unwrap();
        assert_eq!(report.rank, 1);
        assert!(!report.pass);
    }

    #[test]
    fn rank_is_monotone_in_points() {
        let points = paper_points(4).unwrap();
        let mut previous = 0;
        for n in 1..=points.len() {
            let report = rank_report(4, points[..n].to_vec()).unwrap();
            assert!(report.rank >= previous);
            assert!(report.rank <= n.min(report.monomial_count));
            previous = report.rank;
        }
        assert_eq!(previous, 9);
    }
}
