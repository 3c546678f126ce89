use crate::scalar::{wrap_angle, Real};

/// Boundary parameters `Γ = (Λ, Θ, θ_ν, φ_ν)`.
///
/// Values are always held in the canonical ranges `Λ, Θ, φ_ν ∈ [0, 2π)` and
/// `θ_ν ∈ [−π/2, π/2]`. Reducing `θ_ν` may shift `φ_ν` by π; the vector `ν⃗`
/// and hence the boundary matrix are unchanged.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryParams<T> {
    lambda: T,
    theta: T,
    theta_nu: T,
    phi_nu: T,
}

impl<T: Real> BoundaryParams<T> {
    pub fn new(lambda: T, theta: T, theta_nu: T, phi_nu: T) -> Self {
        let pi = T::PI();
        let half_pi = T::FRAC_PI_2();
        // θ_ν into [−π, π) first.
        let mut th = wrap_angle(theta_nu + pi) - pi;
        let mut phi = phi_nu;
        if th > half_pi {
            th = pi - th;
            phi = phi + pi;
        } else if th < -half_pi {
            th = -pi - th;
            phi = phi + pi;
        }
        Self {
            lambda: wrap_angle(lambda),
            theta: wrap_angle(theta),
            theta_nu: th,
            phi_nu: wrap_angle(phi),
        }
    }

    /// Zigzag edge with A sites outside: `M_Γ = −σ₃ ⊗ σ₃`.
    pub fn zigzag() -> Self {
        Self::new(T::zero(), T::zero(), -T::FRAC_PI_2(), T::zero())
    }

    /// Armchair (infinite-mass pair) parameters with valley-mixing phase `φ_ν`.
    pub fn armchair(phi_nu: T) -> Self {
        Self::new(T::zero(), T::FRAC_PI_2(), T::zero(), phi_nu)
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn theta_nu(&self) -> T {
        self.theta_nu
    }

    pub fn phi_nu(&self) -> T {
        self.phi_nu
    }

    /// `ν⃗ = (cos φ_ν cos θ_ν, sin φ_ν cos θ_ν, sin θ_ν)`.
    pub fn nu(&self) -> [T; 3] {
        let (sp, cp) = self.phi_nu.sin_cos();
        let (st, ct) = self.theta_nu.sin_cos();
        [cp * ct, sp * ct, st]
    }

    /// The representative of the four parameter sets sharing this `M_Γ` with
    /// `Θ ∈ [0, π)` and `cos Λ ≥ 0`, the one returned by parameter recovery.
    pub fn fundamental(&self) -> Self {
        let pi = T::PI();
        let (mut lambda, mut theta, mut theta_nu, mut phi_nu) =
            (self.lambda, self.theta, self.theta_nu, self.phi_nu);
        if theta >= pi {
            lambda = lambda + pi;
            theta = theta - pi;
        }
        if lambda.cos() < T::zero() {
            lambda = pi - lambda;
            theta_nu = -theta_nu;
            phi_nu = phi_nu + pi;
        }
        Self::new(lambda, theta, theta_nu, phi_nu)
    }

    /// Largest circular distance between corresponding angles.
    pub fn max_angle_distance(&self, other: &Self) -> T {
        use crate::scalar::angle_distance;
        angle_distance(self.lambda, other.lambda)
            .max(angle_distance(self.theta, other.theta))
            .max((self.theta_nu - other.theta_nu).abs())
            .max(angle_distance(self.phi_nu, other.phi_nu))
    }
}

/// The pair `(η₊, η₋)`, each in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EtaPair<T> {
    pub plus: T,
    pub minus: T,
}
