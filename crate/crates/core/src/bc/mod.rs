//! Boundary matrices of the two- and four-component Dirac operators.

mod boundary;
mod frame;
mod gap;
pub mod matrix;
mod params;

pub use boundary::{
    admissibility, block_diagonalize, boundary_matrix, eta_pm, frame_vectors, m_eta, pauli_decompose,
    recover_params, unitary_u, AdmissibilityReport, BlockDiagonalization, Check, Degeneracy, PauliCoeffs,
    RecoveredParams,
};
pub use frame::{cross3, dot3, BoundaryFrame, UnitVector3};
pub use gap::{b_function, gap_lower_bound, regularity_class, RegularityClass};
pub use matrix::{
    direct_sum, kron, pauli, pauli_basis, sigma_dot, sigma_dot_planar, ComplexMatrix, ComplexMatrix2,
    ComplexMatrix4,
};
pub use params::{BoundaryParams, EtaPair};
