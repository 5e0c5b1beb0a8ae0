//! Hall tensors, second-order tensors, orthogonal transformations, and the
//! Hall constitutive law.
//!
//! A Hall tensor is a third-order, three-dimensional tensor `K` whose
//! components are skew-symmetric in the first two indices
//! (`k_ijk = -k_jik`). That leaves nine independent components, stored here
//! in the fixed order
//!
//! ```text
//! (k121, k122, k123, k131, k132, k133, k231, k232, k233)
//! ```
//!
//! in a fixed right-handed orthonormal frame with the permutation tensor
//! normalized as `eps_123 = +1`. The same degrees of freedom can be carried by
//! a second-order tensor `A = (1/2) eps K`, with inverse `K = eps A`; rows of
//! `A` work out to `(k231, k232, k233)`, `(-k131, -k132, -k133)`,
//! `(k121, k122, k123)`.

use thiserror::Error;

use crate::scalar::Scalar;

/// Entrywise tolerance for accepting a matrix as orthogonal, roughly 100x the
/// double-precision round-off of a 3x3 product chain.
pub const ORTHO_TOL: f64 = 1e-12;

/// Names of the nine stored components, in storage order.
pub const COMPONENT_NAMES: [&str; 9] = [
    "k121", "k122", "k123", "k131", "k132", "k133", "k231", "k232", "k233",
];

#[derive(Debug, Clone, Error, PartialEq)]
pub enum TensorError {
    #[error("component {name} (index {index}) is not finite")]
    NonFinite { index: usize, name: &'static str },
    #[error("matrix entry ({row},{col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("matrix is not orthogonal: max |Q^T Q - I| entry is {deviation:e} (tolerance {ORTHO_TOL:e})")]
    NotOrthogonal { deviation: f64 },
    #[error("determinant {det} is not within {ORTHO_TOL:e} of +1 or -1")]
    BadDeterminant { det: f64 },
}

/// 3x3 second-order tensor, row index first.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat3<S = f64> {
    e: [[S; 3]; 3],
}

impl<S: Scalar> Mat3<S> {
    pub fn from_rows(e: [[S; 3]; 3]) -> Self {
        Self { e }
    }

    pub fn zero() -> Self {
        Self {
            e: std::array::from_fn(|_| std::array::from_fn(|_| S::zero())),
        }
    }

    pub fn identity() -> Self {
        Self {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| if i == j { S::one() } else { S::zero() })
            }),
        }
    }

    pub fn at(&self, row: usize, col: usize) -> &S {
        &self.e[row][col]
    }

    pub fn transpose(&self) -> Self {
        Self {
            e: std::array::from_fn(|i| std::array::from_fn(|j| self.e[j][i].clone())),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.e[i][j].clone() + other.e[i][j].clone())
            }),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.e[i][j].clone() - other.e[i][j].clone())
            }),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    let mut acc = S::zero();
                    for k in 0..3 {
                        acc = acc + self.e[i][k].clone() * other.e[k][j].clone();
                    }
                    acc
                })
            }),
        }
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.e[i][j].clone() * factor.clone())
            }),
        }
    }

    pub fn trace(&self) -> S {
        self.e[0][0].clone() + self.e[1][1].clone() + self.e[2][2].clone()
    }

    /// Splits into the symmetric part `T = (A + A^T)/2` and the skew part
    /// `W = (A - A^T)/2`; `T + W == A` exactly.
    pub fn sym_skew_split(&self) -> (Self, Self) {
        let t = Self {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| (self.e[i][j].clone() + self.e[j][i].clone()).half())
            }),
        };
        let w = Self {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| (self.e[i][j].clone() - self.e[j][i].clone()).half())
            }),
        };
        (t, w)
    }
}

impl Mat3<f64> {
    pub fn det(&self) -> f64 {
        let e = &self.e;
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.e[i][j] - other.e[i][j]).abs());
            }
        }
        worst
    }
}

/// Hall tensor given by its nine independent components.
#[derive(Debug, Clone, PartialEq)]
pub struct HallTensor<S = f64> {
    c: [S; 9],
}

// Storage slot for an index pair (i, j) with i != j: (base offset, negate).
fn slot(i: usize, j: usize) -> Option<(usize, bool)> {
    match (i, j) {
        (0, 1) => Some((0, false)),
        (1, 0) => Some((0, true)),
        (0, 2) => Some((3, false)),
        (2, 0) => Some((3, true)),
        (1, 2) => Some((6, false)),
        (2, 1) => Some((6, true)),
        _ => None,
    }
}

impl<S: Scalar> HallTensor<S> {
    /// Builds a Hall tensor from the nine components in storage order,
    /// rejecting non-finite entries.
    pub fn new(components: [S; 9]) -> Result<Self, TensorError> {
        for (index, value) in components.iter().enumerate() {
            if !value.is_finite_value() {
                return Err(TensorError::NonFinite {
                    index,
                    name: COMPONENT_NAMES[index],
                });
            }
        }
        Ok(Self { c: components })
    }

    pub fn zero() -> Self {
        Self {
            c: std::array::from_fn(|_| S::zero()),
        }
    }

    pub fn from_ints(components: [i64; 9]) -> Self {
        Self {
            c: std::array::from_fn(|i| S::from_int(components[i])),
        }
    }

    pub fn components(&self) -> &[S; 9] {
        &self.c
    }

    /// Component `k_ijk` of the full 27-entry expansion (zero-based indices).
    /// Diagonal pairs `i == j` vanish and swapped pairs pick up a sign.
    pub fn component(&self, i: usize, j: usize, k: usize) -> S {
        assert!(i < 3 && j < 3 && k < 3, "index out of range");
        match slot(i, j) {
            None => S::zero(),
            Some((base, negate)) => {
                let v = self.c[base + k].clone();
                if negate {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// The associated second-order tensor `A = (1/2) eps K`, i.e.
    /// `a_ij = (1/2) eps_kli k_klj`.
    pub fn associated_tensor(&self) -> Mat3<S> {
        let c = &self.c;
        Mat3::from_rows([
            [c[6].clone(), c[7].clone(), c[8].clone()],
            [-c[3].clone(), -c[4].clone(), -c[5].clone()],
            [c[0].clone(), c[1].clone(), c[2].clone()],
        ])
    }

    /// Inverse of [`associated_tensor`](Self::associated_tensor):
    /// `K = eps A`, i.e. `k_ijk = eps_ijl a_lk`. The round trip is the
    /// identity.
    pub fn from_associated(a: &Mat3<S>) -> Self {
        Self {
            c: [
                a.at(2, 0).clone(),
                a.at(2, 1).clone(),
                a.at(2, 2).clone(),
                -a.at(1, 0).clone(),
                -a.at(1, 1).clone(),
                -a.at(1, 2).clone(),
                a.at(0, 0).clone(),
                a.at(0, 1).clone(),
                a.at(0, 2).clone(),
            ],
        }
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i].clone() * factor.clone()),
        }
    }
}

impl HallTensor<f64> {
    /// Largest absolute component difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.c
            .iter()
            .zip(other.c.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Requested determinant sign for a random orthogonal tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetSign {
    Proper,
    Improper,
}

impl DetSign {
    pub fn sign(self) -> f64 {
        match self {
            DetSign::Proper => 1.0,
            DetSign::Improper => -1.0,
        }
    }
}

/// Orthogonal tensor, validated at construction: `Q^T Q = I` and
/// `|det Q| = 1`, both within [`ORTHO_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalTensor {
    q: Mat3<f64>,
    det_sign: i8,
}

impl OrthogonalTensor {
    pub fn new(q: Mat3<f64>) -> Result<Self, TensorError> {
        for i in 0..3 {
            for j in 0..3 {
                if !q.at(i, j).is_finite() {
                    return Err(TensorError::NonFiniteEntry { row: i, col: j });
                }
            }
        }
        let gram = q.transpose().mul(&q);
        let deviation = gram.max_abs_diff(&Mat3::identity());
        if deviation > ORTHO_TOL {
            return Err(TensorError::NotOrthogonal { deviation });
        }
        let det = q.det();
        if (det.abs() - 1.0).abs() > ORTHO_TOL {
            return Err(TensorError::BadDeterminant { det });
        }
        let det_sign = if det > 0.0 { 1 } else { -1 };
        Ok(Self { q, det_sign })
    }

    pub fn identity() -> Self {
        Self {
            q: Mat3::identity(),
            det_sign: 1,
        }
    }

    /// The central inversion `-I`.
    pub fn central_inversion() -> Self {
        Self {
            q: Mat3::identity().scale(&-1.0),
            det_sign: -1,
        }
    }

    pub fn matrix(&self) -> &Mat3<f64> {
        &self.q
    }

    pub fn det_sign(&self) -> i8 {
        self.det_sign
    }
}

/// Deterministic pseudo-random orthogonal tensor with the requested
/// determinant sign, approximately Haar-distributed: a Gaussian 3x3 sample is
/// orthonormalized by modified Gram-Schmidt on rows, the determinant is fixed
/// to +1 by negating the last row if needed, and an improper tensor is then
/// produced by negating the last row again.
pub fn random_orthogonal(seed: u64, det_sign: DetSign) -> OrthogonalTensor {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    let mut attempt = seed;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt);
        let mut rows = [[0.0f64; 3]; 3];
        for row in rows.iter_mut() {
            for entry in row.iter_mut() {
                *entry = rng.sample(StandardNormal);
            }
        }
        if let Some(mut q) = gram_schmidt_rows(rows) {
            let det = Mat3::from_rows(q).det();
            if det < 0.0 {
                for entry in q[2].iter_mut() {
                    *entry = -*entry;
                }
            }
            if det_sign == DetSign::Improper {
                for entry in q[2].iter_mut() {
                    *entry = -*entry;
                }
            }
            if let Ok(ortho) = OrthogonalTensor::new(Mat3::from_rows(q)) {
                return ortho;
            }
        }
        // Degenerate draw: retry with a perturbed seed.
        attempt = attempt.wrapping_add(0x9e37_79b9_7f4a_7c15);
    }
}

fn gram_schmidt_rows(mut rows: [[f64; 3]; 3]) -> Option<[[f64; 3]; 3]> {
    const DEGENERATE: f64 = 1e-6;
    for i in 0..3 {
        for j in 0..i {
            let dot = dot3(&rows[i], &rows[j]);
            for k in 0..3 {
                rows[i][k] -= dot * rows[j][k];
            }
        }
        // Second orthogonalization pass tightens Q^T Q = I to round-off.
        for j in 0..i {
            let dot = dot3(&rows[i], &rows[j]);
            for k in 0..3 {
                rows[i][k] -= dot * rows[j][k];
            }
        }
        let norm = dot3(&rows[i], &rows[i]).sqrt();
        if norm < DEGENERATE {
            return None;
        }
        for k in 0..3 {
            rows[i][k] /= norm;
        }
    }
    Some(rows)
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Orthogonal transformation of a Hall tensor over the full 27-component
/// expansion: `(<Q>K)_ijk = q_ia q_jb q_kc k_abc`.
pub fn rotate_hall(q: &OrthogonalTensor, k: &HallTensor<f64>) -> HallTensor<f64> {
    let mut full = [[[0.0f64; 3]; 3]; 3];
    for (i, plane) in full.iter_mut().enumerate() {
        for (j, line) in plane.iter_mut().enumerate() {
            for (kk, v) in line.iter_mut().enumerate() {
                *v = k.component(i, j, kk);
            }
        }
    }
    let m = q.matrix();
    let rotated = |i: usize, j: usize, kk: usize| -> f64 {
        let mut acc = 0.0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    acc += m.at(i, a) * m.at(j, b) * m.at(kk, c) * full[a][b][c];
                }
            }
        }
        acc
    };
    let mut out = [0.0f64; 9];
    for kk in 0..3 {
        out[kk] = rotated(0, 1, kk);
        out[3 + kk] = rotated(0, 2, kk);
        out[6 + kk] = rotated(1, 2, kk);
    }
    HallTensor { c: out }
}

/// Orthogonal transformation of a second-order tensor: `Q A Q^T`.
pub fn rotate_tensor2(q: &OrthogonalTensor, a: &Mat3<f64>) -> Mat3<f64> {
    q.matrix().mul(a).mul(&q.matrix().transpose())
}

/// Residual of the conjugation identity
/// `A(<Q>K) = det(Q) * <Q> A(K)`
/// as the max-abs entrywise difference of the two sides. Expected to be at
/// round-off level (<= 1e-10) for any well-conditioned orthogonal `Q`.
pub fn transform_identity_check(q: &OrthogonalTensor, k: &HallTensor<f64>) -> f64 {
    let lhs = rotate_hall(q, k).associated_tensor();
    let rhs = rotate_tensor2(q, &k.associated_tensor()).scale(&f64::from(q.det_sign()));
    lhs.max_abs_diff(&rhs)
}

/// Real 3-vector (current density, magnetic field, electric field).
pub type Vec3 = [f64; 3];

/// The Hall constitutive law `E_i = k_ijk J_j H_k`, evaluated over the full
/// 27-component expansion.
pub fn hall_field(k: &HallTensor<f64>, current: Vec3, magnetic: Vec3) -> Vec3 {
    let mut e = [0.0f64; 3];
    for (i, out) in e.iter_mut().enumerate() {
        for j in 0..3 {
            for kk in 0..3 {
                *out += k.component(i, j, kk) * current[j] * magnetic[kk];
            }
        }
    }
    e
}

/// Hall tensor with uniformly random integer components in `lo..=hi`.
pub fn random_integer_hall<R: rand::Rng>(rng: &mut R, lo: i64, hi: i64) -> HallTensor<f64> {
    HallTensor::from_ints(std::array::from_fn(|_| rng.gen_range(lo..=hi)))
}
