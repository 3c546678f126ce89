//! Scalar abstraction shared by every module.
//!
//! All algebra is written against [`Real`], which is implemented for `f32`
//! and `f64`. Tolerances live on the trait so that single precision gets
//! thresholds it can actually meet.

use std::fmt::{Debug, Display};

use nalgebra::DMatrix;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point scalar usable throughout the crate.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + nalgebra::Scalar
{
    /// Threshold for exact algebraic identities (unitarity, Pauli relations).
    const IDENTITY_TOL: f64;
    /// Threshold for results that pass through a decomposition or a solve.
    const ROUNDTRIP_TOL: f64;
    /// Below this `|cos Λ|` or `|cos θ_ν|` a recovered angle is not determined.
    const DEGENERACY_TOL: f64;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Eigen-decomposition of a real symmetric matrix.
    ///
    /// Eigenvalues are returned unsorted, eigenvectors (if requested) as the
    /// columns of the returned matrix in the same order.
    fn symmetric_eigen(matrix: DMatrix<Self>, vectors: bool) -> (Vec<Self>, Option<DMatrix<Self>>);
}

macro_rules! impl_real {
    ($t:ty, $ident:expr, $round:expr, $degen:expr) => {
        impl Real for $t {
            const IDENTITY_TOL: f64 = $ident;
            const ROUNDTRIP_TOL: f64 = $round;
            const DEGENERACY_TOL: f64 = $degen;

            fn symmetric_eigen(matrix: DMatrix<Self>, vectors: bool) -> (Vec<Self>, Option<DMatrix<Self>>) {
                if vectors {
                    let eig = nalgebra::SymmetricEigen::new(matrix);
                    (
                        eig.eigenvalues.iter().copied().collect(),
                        Some(eig.eigenvectors),
                    )
                } else {
                    let values = matrix.symmetric_eigenvalues();
                    (values.iter().copied().collect(), None)
                }
            }
        }
    };
}

impl_real!(f64, 1e-12, 1e-10, 1e-9);
impl_real!(f32, 1e-5, 1e-4, 1e-3);

/// Reduces an angle into `[0, 2π)`.
pub fn wrap_angle<T: Real>(angle: T) -> T {
    let two_pi = T::TAU();
    let r = angle % two_pi;
    let r = if r < T::zero() { r + two_pi } else { r };
    // `x % 2π` can round up to exactly 2π for tiny negative inputs.
    if r >= two_pi {
        T::zero()
    } else {
        r
    }
}

/// Distance between two angles on the circle, in `[0, π]`.
pub fn angle_distance<T: Real>(a: T, b: T) -> T {
    let d = wrap_angle(a - b);
    d.min(T::TAU() - d)
}
