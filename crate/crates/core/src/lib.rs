//! Boundary conditions for four-component Dirac operators on graphene
//! quantum dots, and a honeycomb tight-binding solver to check them against.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases below fix
//! the scalar to `f64`, with `F32` variants for single precision.

// `!(x > 0)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod armchair;
pub mod bc;
pub mod dot;
pub mod error;
pub mod io;
pub mod lattice;
pub mod scalar;
pub mod tb;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Params = bc::BoundaryParams<f64>;
pub type Frame = bc::BoundaryFrame<f64>;
pub type Matrix2 = bc::ComplexMatrix2<f64>;
pub type Matrix4 = bc::ComplexMatrix4<f64>;
pub type Conventions = lattice::LatticeConventions<f64>;
pub type Geometry = dot::GeometrySpec<f64>;
pub type Dot = dot::HoneycombDot<f64>;
pub type Spectrum = tb::Spectrum<f64>;

pub type ParamsF32 = bc::BoundaryParams<f32>;
pub type FrameF32 = bc::BoundaryFrame<f32>;
pub type Matrix2F32 = bc::ComplexMatrix2<f32>;
pub type Matrix4F32 = bc::ComplexMatrix4<f32>;
pub type ConventionsF32 = lattice::LatticeConventions<f32>;
pub type GeometryF32 = dot::GeometrySpec<f32>;
pub type DotF32 = dot::HoneycombDot<f32>;
pub type SpectrumF32 = tb::Spectrum<f32>;
