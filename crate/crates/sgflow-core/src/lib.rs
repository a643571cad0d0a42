//! Simulation kernel for singular, possibly multi-valued gradient flows
//! `dX + A(X) dt ∋ dN` on rectangular grids.
//!
//! The crate discretizes a Gelfand triple `S ⊂ H ⊂ S*` spectrally
//! ([`spectral::SpectralSpace`]), carries a catalogue of monotone scalar
//! graphs ([`graphs`]), realizes the drift `A` either in divergence form
//! `-div Φ(∇u)` or diffusion form `-Δ Φ(u)` with a Newton-based global
//! resolvent ([`drift`]), generates reproducible noise paths ([`noise`]),
//! and integrates in time by the unconditionally stable splitting
//! "add increment, then drift resolvent" ([`evolve`]). Monte Carlo
//! diagnostics for occupation averages, equicontinuity, extinction,
//! decay laws and variational inequalities live in [`ergodics`].
//!
//! The crate is `no_std` + `alloc` compatible (disable the default `std`
//! feature); float math falls back to `libm` in that configuration. All
//! IO, file formats and the CLI live in the companion `sgflow` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod fp;
pub mod grid;
pub mod spectral;
pub mod graphs;
pub mod linalg;
pub mod drift;
pub mod noise;
pub mod evolve;
pub mod ergodics;

pub use drift::{DriftForm, DriftOperator, NewtonParams};
pub use evolve::{SolverConfig, Trajectory};
pub use graphs::{GraphKind, ScalarGraph, VectorGraph};
pub use grid::{BoundaryCondition, GridDomain};
pub use noise::{DiffusionCoefficient, NoiseKind, NoisePath};
pub use spectral::{SpectralSpace, TripleMode};
