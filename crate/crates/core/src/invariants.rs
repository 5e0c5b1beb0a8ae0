//! The seven trace invariants of a second-order tensor and the ten-invariant
//! basis of the Hall tensor.
//!
//! With `A = T + W` split into symmetric and skew parts, the seven base
//! invariants are
//!
//! ```text
//! I1 = tr T        I2 = tr T^2      J2 = tr W^2      I3 = tr T^3
//! J3 = tr T W^2    I4 = tr T^2 W^2  I6 = tr T^2 W^2 T W
//! ```
//!
//! evaluated on the associated tensor `A(K)`. The ten basis invariants of the
//! Hall tensor itself are the even-degree combinations
//!
//! ```text
//! I2, J2, K2 = I1^2, I4, J4 = I1*I3, K4 = I1*J3,
//! I6, J6 = I3^2, K6 = J3^2, L6 = I3*J3
//! ```
//!
//! reported in exactly that order everywhere in this crate.

use serde::Serialize;

use crate::scalar::Scalar;
use crate::tensor::{HallTensor, Mat3};

/// The seven invariants of a second-order tensor, with their degrees in `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct SevenInvariants<S = f64> {
    pub i1: S,
    pub i2: S,
    pub j2: S,
    pub i3: S,
    pub j3: S,
    pub i4: S,
    pub i6: S,
}

/// The ten basis invariants of a Hall tensor, in canonical report order.
#[derive(Debug, Clone, PartialEq)]
pub struct TenInvariants<S = f64> {
    pub i2: S,
    pub j2: S,
    pub k2: S,
    pub i4: S,
    pub j4: S,
    pub k4: S,
    pub i6: S,
    pub j6: S,
    pub k6: S,
    pub l6: S,
}

/// Name of one of the ten basis invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Invariant {
    I2,
    J2,
    K2,
    I4,
    J4,
    K4,
    I6,
    J6,
    K6,
    L6,
}

impl Invariant {
    /// Canonical order used by every report and matrix column layout.
    pub const ALL: [Invariant; 10] = [
        Invariant::I2,
        Invariant::J2,
        Invariant::K2,
        Invariant::I4,
        Invariant::J4,
        Invariant::K4,
        Invariant::I6,
        Invariant::J6,
        Invariant::K6,
        Invariant::L6,
    ];

    /// Polynomial degree in the components of the Hall tensor.
    pub fn degree(self) -> u32 {
        match self {
            Invariant::I2 | Invariant::J2 | Invariant::K2 => 2,
            Invariant::I4 | Invariant::J4 | Invariant::K4 => 4,
            Invariant::I6 | Invariant::J6 | Invariant::K6 | Invariant::L6 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Invariant::I2 => "I2",
            Invariant::J2 => "J2",
            Invariant::K2 => "K2",
            Invariant::I4 => "I4",
            Invariant::J4 => "J4",
            Invariant::K4 => "K4",
            Invariant::I6 => "I6",
            Invariant::J6 => "J6",
            Invariant::K6 => "K6",
            Invariant::L6 => "L6",
        }
    }
}

impl std::fmt::Display for Invariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Name of one of the seven base invariants of the associated tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseInvariant {
    I1,
    I2,
    J2,
    I3,
    J3,
    I4,
    I6,
}

impl BaseInvariant {
    pub const ALL: [BaseInvariant; 7] = [
        BaseInvariant::I1,
        BaseInvariant::I2,
        BaseInvariant::J2,
        BaseInvariant::I3,
        BaseInvariant::J3,
        BaseInvariant::I4,
        BaseInvariant::I6,
    ];

    /// Polynomial degree in the entries of the second-order tensor (equal to
    /// the degree in the Hall tensor components, since the associated tensor
    /// is linear in them).
    pub fn degree(self) -> u32 {
        match self {
            BaseInvariant::I1 => 1,
            BaseInvariant::I2 | BaseInvariant::J2 => 2,
            BaseInvariant::I3 | BaseInvariant::J3 => 3,
            BaseInvariant::I4 => 4,
            BaseInvariant::I6 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseInvariant::I1 => "I1",
            BaseInvariant::I2 => "I2",
            BaseInvariant::J2 => "J2",
            BaseInvariant::I3 => "I3",
            BaseInvariant::J3 => "J3",
            BaseInvariant::I4 => "I4",
            BaseInvariant::I6 => "I6",
        }
    }
}

impl<S: Scalar> SevenInvariants<S> {
    pub fn get(&self, which: BaseInvariant) -> &S {
        match which {
            BaseInvariant::I1 => &self.i1,
            BaseInvariant::I2 => &self.i2,
            BaseInvariant::J2 => &self.j2,
            BaseInvariant::I3 => &self.i3,
            BaseInvariant::J3 => &self.j3,
            BaseInvariant::I4 => &self.i4,
            BaseInvariant::I6 => &self.i6,
        }
    }
}

impl<S: Scalar> TenInvariants<S> {
    pub fn get(&self, which: Invariant) -> &S {
        match which {
            Invariant::I2 => &self.i2,
            Invariant::J2 => &self.j2,
            Invariant::K2 => &self.k2,
            Invariant::I4 => &self.i4,
            Invariant::J4 => &self.j4,
            Invariant::K4 => &self.k4,
            Invariant::I6 => &self.i6,
            Invariant::J6 => &self.j6,
            Invariant::K6 => &self.k6,
            Invariant::L6 => &self.l6,
        }
    }

    /// The ten values in canonical order.
    pub fn values(&self) -> [S; 10] {
        std::array::from_fn(|i| self.get(Invariant::ALL[i]).clone())
    }
}

/// Evaluates the seven trace invariants of a second-order tensor.
pub fn base_invariants<S: Scalar>(a: &Mat3<S>) -> SevenInvariants<S> {
    let (t, w) = a.sym_skew_split();
    let t2 = t.mul(&t);
    let w2 = w.mul(&w);
    let t2w2 = t2.mul(&w2);
    SevenInvariants {
        i1: t.trace(),
        i2: t2.trace(),
        j2: w2.trace(),
        i3: t2.mul(&t).trace(),
        j3: t.mul(&w2).trace(),
        i4: t2w2.trace(),
        i6: t2w2.mul(&t).mul(&w).trace(),
    }
}

/// Evaluates the ten basis invariants of a Hall tensor via its associated
/// second-order tensor.
pub fn hall_invariants<S: Scalar>(k: &HallTensor<S>) -> TenInvariants<S> {
    let b = base_invariants(&k.associated_tensor());
    TenInvariants {
        i2: b.i2,
        j2: b.j2,
        k2: b.i1.clone() * b.i1.clone(),
        i4: b.i4,
        j4: b.i1.clone() * b.i3.clone(),
        k4: b.i1 * b.j3.clone(),
        i6: b.i6,
        j6: b.i3.clone() * b.i3.clone(),
        k6: b.j3.clone() * b.j3.clone(),
        l6: b.i3 * b.j3,
    }
}
