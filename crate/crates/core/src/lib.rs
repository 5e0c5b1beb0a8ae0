//! Isotropic polynomial invariants of the Hall tensor.
//!
//! The Hall tensor couples an electric field to the product of current
//! density and magnetic field, `E_i = k_ijk J_j H_k`, and is skew-symmetric
//! in its first two indices. This crate evaluates its ten-invariant basis
//! `{I2, J2, K2, I4, J4, K4, I6, J6, K6, L6}` in both floating-point and
//! exact rational arithmetic, certifies by exact matrix rank that the basis
//! admits no polynomial relation at degrees 2, 4 and 6 (minimality as an
//! integrity basis), and replays ten built-in witness pairs showing that no
//! member is a single-valued function of the other nine (irreducibility as a
//! function basis).
//!
//! Entry points:
//!
//! * [`tensor`] - Hall/second-order tensor values, orthogonal
//!   transformations, the constitutive law;
//! * [`invariants`] - the seven base invariants and the ten-invariant basis;
//! * [`exact`] - exact rationals and exact matrix rank;
//! * [`irreducibility`] - monomial families, sample points, rank reports;
//! * [`witnesses`] - the ten separation witness pairs;
//! * [`formats`] - the on-disk tensor format.

// Index-notation loops mirror the tensor contractions they implement.
#![allow(clippy::needless_range_loop)]

pub mod exact;
pub mod formats;
pub mod invariants;
pub mod irreducibility;
pub mod scalar;
pub mod tensor;
pub mod witnesses;

pub use exact::{exact_rank, ExactError, Rational, RationalMatrix};
pub use formats::{parse_tensor_exact, parse_tensor_f64, FormatError};
pub use invariants::{
    base_invariants, hall_invariants, BaseInvariant, Invariant, SevenInvariants, TenInvariants,
};
pub use irreducibility::{
    build_matrix, evaluate_monomial, monomial_basis, paper_points, random_points, rank_report,
    verify_minimality, IrreducibilityError, Monomial, PointSource, RankReport, SamplePoint,
};
pub use scalar::Scalar;
pub use tensor::{
    hall_field, random_integer_hall, random_orthogonal, rotate_hall, rotate_tensor2,
    transform_identity_check, DetSign, HallTensor, Mat3, OrthogonalTensor, TensorError, Vec3,
    COMPONENT_NAMES, ORTHO_TOL,
};
pub use witnesses::{
    check_separation, run_all_witnesses, witness_pair, SeparationReport, WitnessCase, WitnessError,
    DEFAULT_COINCIDENCE_TOL, DEFAULT_SEPARATION_FLOOR,
};
