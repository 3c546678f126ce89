use num_complex::Complex;
use serde::Serialize;

use super::frame::{dot3, BoundaryFrame, UnitVector3};
use super::matrix::{
    direct_sum, kron, pauli_basis, sigma_dot, sigma_dot_planar, ComplexMatrix2, ComplexMatrix4,
};
use super::params::{BoundaryParams, EtaPair};
use crate::error::{Error, Result};
use crate::scalar::{wrap_angle, Real};

/// Two-component boundary matrix `cos η (σ·t) + sin η σ₃`.
pub fn m_eta<T: Real>(eta: T, frame: &BoundaryFrame<T>) -> ComplexMatrix2<T> {
    let (s, c) = eta.sin_cos();
    let sigma3 = sigma_dot([T::zero(), T::zero(), T::one()]);
    sigma_dot_planar(frame.tangent()).scale_real(c) + sigma3.scale_real(s)
}

/// The vectors `(ν⃗, n⃗₁, n⃗₂)` entering `M_Γ`.
pub fn frame_vectors<T: Real>(
    params: &BoundaryParams<T>,
    frame: &BoundaryFrame<T>,
) -> (UnitVector3<T>, UnitVector3<T>, UnitVector3<T>) {
    let [t1, t2] = frame.tangent();
    let (s, c) = params.theta().sin_cos();
    (
        UnitVector3::new_unchecked(params.nu()),
        UnitVector3::new_unchecked([t1 * c, t2 * c, -s]),
        UnitVector3::new_unchecked([t1 * s, t2 * s, c]),
    )
}

/// `M_Γ = sin Λ (σ₀ ⊗ σ⃗·n⃗₁) + cos Λ (σ⃗·ν⃗ ⊗ σ⃗·n⃗₂)`.
pub fn boundary_matrix<T: Real>(params: &BoundaryParams<T>, frame: &BoundaryFrame<T>) -> ComplexMatrix4<T> {
    let (nu, n1, n2) = frame_vectors(params, frame);
    let (s, c) = params.lambda().sin_cos();
    let id = ComplexMatrix2::identity();
    kron(&id, &sigma_dot(n1.as_array())).scale_real(s)
        + kron(&sigma_dot(nu.as_array()), &sigma_dot(n2.as_array())).scale_real(c)
}

/// One admissibility condition: whether it holds and how far off it is.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Check<T> {
    pub holds: bool,
    pub residual: T,
}

impl<T: Real> Check<T> {
    fn new(residual: T, tol: T) -> Self {
        Self {
            holds: residual < tol,
            residual,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AdmissibilityReport<T> {
    pub hermitian: Check<T>,
    pub involutive: Check<T>,
    pub traceless: Check<T>,
    pub anticommutes: Check<T>,
}

impl<T: Real> AdmissibilityReport<T> {
    pub fn all(&self) -> bool {
        self.hermitian.holds && self.involutive.holds && self.traceless.holds && self.anticommutes.holds
    }

    pub fn max_residual(&self) -> T {
        self.hermitian
            .residual
            .max(self.involutive.residual)
            .max(self.traceless.residual)
            .max(self.anticommutes.residual)
    }
}

/// Checks `M = M*`, `M² = I`, `tr M = 0` and `{M, σ₀ ⊗ σ·n} = 0`.
pub fn admissibility<T: Real>(
    m: &ComplexMatrix4<T>,
    frame: &BoundaryFrame<T>,
    tol: T,
) -> AdmissibilityReport<T> {
    let current = kron(&ComplexMatrix2::identity(), &sigma_dot_planar(frame.normal()));
    AdmissibilityReport {
        hermitian: Check::new(m.hermiticity_residual(), tol),
        involutive: Check::new((*m * *m).distance(&ComplexMatrix4::identity()), tol),
        traceless: Check::new(m.trace().norm(), tol),
        anticommutes: Check::new(m.anticommutator(&current).frobenius_norm(), tol),
    }
}

/// Coefficients of a 4×4 matrix in the basis `σᵢ ⊗ σⱼ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PauliCoeffs<T> {
    pub c: [[T; 4]; 4],
}

impl<T: Real> PauliCoeffs<T> {
    pub fn get(&self, i: usize, j: usize) -> T {
        self.c[i][j]
    }

    /// `c⃗ᵢ = (c_{i1}, c_{i2}, c_{i3})`.
    pub fn row_vector(&self, i: usize) -> [T; 3] {
        [self.c[i][1], self.c[i][2], self.c[i][3]]
    }

    pub fn reconstruct(&self) -> ComplexMatrix4<T> {
        let basis = pauli_basis::<T>();
        let mut out = ComplexMatrix4::zeros();
        for (i, si) in basis.iter().enumerate() {
            for (j, sj) in basis.iter().enumerate() {
                if self.c[i][j] != T::zero() {
                    out = out + kron(si, sj).scale_real(self.c[i][j]);
                }
            }
        }
        out
    }
}

/// `c_ij = Re tr[(σᵢ ⊗ σⱼ) M] / 4`.
pub fn pauli_decompose<T: Real>(m: &ComplexMatrix4<T>) -> Result<PauliCoeffs<T>> {
    let herm = m.hermiticity_residual();
    if !(herm <= T::lit(T::ROUNDTRIP_TOL)) {
        return Err(Error::NotHermitian(herm.to_f64_lossy()));
    }
    let basis = pauli_basis::<T>();
    let quarter = T::lit(0.25);
    let mut c = [[T::zero(); 4]; 4];
    for (i, si) in basis.iter().enumerate() {
        for (j, sj) in basis.iter().enumerate() {
            c[i][j] = (kron(si, sj) * *m).trace().re * quarter;
        }
    }
    Ok(PauliCoeffs { c })
}

/// Which recovered angles were not determined by the matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Degeneracy {
    /// `cos Λ = 0`: `ν⃗` drops out of `M_Γ`; `θ_ν = φ_ν = 0` returned.
    NuUndetermined,
    /// `cos θ_ν = 0`: `φ_ν` drops out; `φ_ν = 0` returned.
    AzimuthUndetermined,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RecoveredParams<T> {
    pub params: BoundaryParams<T>,
    pub degeneracy: Option<Degeneracy>,
}

/// Inverts [`boundary_matrix`].
///
/// The map `Γ ↦ M_Γ` is four-to-one: `(Λ, Θ, ν⃗)`, `(π−Λ, Θ, −ν⃗)`,
/// `(Λ+π, Θ+π, ν⃗)` and `(−Λ, Θ+π, −ν⃗)` give the same matrix. The
/// representative with `Θ ∈ [0, π)` and `cos Λ ≥ 0` is returned; see
/// [`BoundaryParams::fundamental`].
pub fn recover_params<T: Real>(
    m: &ComplexMatrix4<T>,
    frame: &BoundaryFrame<T>,
) -> Result<RecoveredParams<T>> {
    let report = admissibility(m, frame, T::lit(T::ROUNDTRIP_TOL));
    if !report.all() {
        return Err(Error::NotAdmissible(report.max_residual().to_f64_lossy()));
    }
    let coeffs = pauli_decompose(m)?;
    let tol = T::lit(T::DEGENERACY_TOL);
    let [t1, t2] = frame.tangent();
    let t3 = [t1, t2, T::zero()];
    let c0 = coeffs.row_vector(0);
    let rows = [coeffs.row_vector(1), coeffs.row_vector(2), coeffs.row_vector(3)];
    let row_norms = rows.map(|r| dot3(&r, &r).sqrt());
    let (best, &largest) = row_norms
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(std::cmp::Ordering::Equal))
        .expect("three rows");

    if largest <= tol {
        // cos Λ = 0: M = sin Λ σ₀ ⊗ σ⃗·n⃗₁ with n⃗₁ = (t cos Θ, −sin Θ).
        let flip = c0[2] > tol || (c0[2].abs() <= tol && dot3(&c0, &t3) < T::zero());
        let u = if flip { c0.map(|x| -x) } else { c0 };
        let theta = (-u[2]).atan2(dot3(&u, &t3));
        let lambda = if flip {
            T::lit(1.5) * T::PI()
        } else {
            T::FRAC_PI_2()
        };
        return Ok(RecoveredParams {
            params: BoundaryParams::new(lambda, theta, T::zero(), T::zero()),
            degeneracy: Some(Degeneracy::NuUndetermined),
        });
    }

    // Every row of the 3×3 block is ν_i cos Λ n⃗₂.
    let r = rows[best];
    let mut u = r.map(|x| x / largest);
    let along_t = dot3(&u, &t3);
    if along_t < -tol || (along_t.abs() <= tol && u[2] < T::zero()) {
        u = u.map(|x| -x);
    }
    let theta = dot3(&u, &t3).atan2(u[2]);
    let (s, c) = theta.sin_cos();
    let n1 = [t1 * c, t2 * c, -s];
    let n2 = [t1 * s, t2 * s, c];
    let cos_nu = rows.map(|row| dot3(&row, &n2));
    let cos_lambda = dot3(&cos_nu, &cos_nu).sqrt();
    let nu = cos_nu.map(|x| x / cos_lambda);
    let sin_lambda = dot3(&c0, &n1);
    let lambda = sin_lambda.atan2(cos_lambda);
    let theta_nu = nu[2].max(-T::one()).min(T::one()).asin();
    let (phi_nu, degeneracy) = if (nu[0] * nu[0] + nu[1] * nu[1]).sqrt() <= tol {
        (T::zero(), Some(Degeneracy::AzimuthUndetermined))
    } else {
        (nu[1].atan2(nu[0]), None)
    };
    Ok(RecoveredParams {
        params: BoundaryParams::new(lambda, theta, theta_nu, phi_nu),
        degeneracy,
    })
}

/// `η± = −Θ ± (π/2 − Λ)`, reduced into `[0, 2π)`.
pub fn eta_pm<T: Real>(params: &BoundaryParams<T>) -> EtaPair<T> {
    let shift = T::FRAC_PI_2() - params.lambda();
    EtaPair {
        plus: wrap_angle(-params.theta() + shift),
        minus: wrap_angle(-params.theta() - shift),
    }
}

/// `exp(i(θ/2)σ₂) exp(i(φ/2)σ₃) ⊗ σ₀`.
pub fn unitary_u<T: Real>(theta: T, phi: T) -> ComplexMatrix4<T> {
    let half = T::lit(0.5);
    let (s, c) = (theta * half).sin_cos();
    let rot = ComplexMatrix2::from_real_rows([[c, s], [-s, c]]);
    let (ps, pc) = (phi * half).sin_cos();
    let zero = Complex::new(T::zero(), T::zero());
    let phase = ComplexMatrix2::from_rows([[Complex::new(pc, ps), zero], [zero, Complex::new(pc, -ps)]]);
    kron(&(rot * phase), &ComplexMatrix2::identity())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockDiagonalization<T> {
    pub unitary: ComplexMatrix4<T>,
    pub transformed: ComplexMatrix4<T>,
    pub etas: EtaPair<T>,
    /// `‖U M_Γ U* − (m_{η+} ⊕ m_{η−})‖_F`.
    pub residual: T,
}

/// Conjugates `M_Γ` into `m_{η+} ⊕ m_{η−}`.
///
/// The rotation is taken about the polar angle `π/2 − θ_ν` of `ν⃗`, which
/// carries `ν⃗` onto `ẑ`.
pub fn block_diagonalize<T: Real>(
    params: &BoundaryParams<T>,
    frame: &BoundaryFrame<T>,
) -> BlockDiagonalization<T> {
    let unitary = unitary_u(T::FRAC_PI_2() - params.theta_nu(), params.phi_nu());
    let transformed = boundary_matrix(params, frame).conjugate_by(&unitary);
    let etas = eta_pm(params);
    let target = direct_sum(&m_eta(etas.plus, frame), &m_eta(etas.minus, frame));
    BlockDiagonalization {
        unitary,
        transformed,
        etas,
        residual: transformed.distance(&target),
    }
}
