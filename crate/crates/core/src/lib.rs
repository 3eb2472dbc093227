//! Numerical laboratory for self-field solitons and pilot-wave dynamics.
//!
//! The crate is organized around five computational modules and a CLI layer:
//!
//! - [`numerics`]: shared kernels: adaptive Runge-Kutta integration with
//!   dense output, bracketing and quasi-Newton root finding, radial
//!   quadrature, physical constants, and a small deterministic PRNG.
//! - [`dirac`]: the self-field Dirac-Poisson boundary-value problem solved
//!   by inward shooting, its integral observables, similarity transforms,
//!   and the Klein-Gordon companion system that shows the soliton
//!   obstruction.
//! - [`photon`]: nonlinear Klein-Gordon field profiles (transverse and
//!   longitudinal), small-radius series, self-similar scaling, soliton
//!   energies, the Uehling-potential ODE family, and dispersion variants.
//! - [`pilot`]: closed-form complex wavefunctions, quantum potentials,
//!   guidance-law velocities (Schrödinger, Klein-Gordon, photon phase,
//!   Poynting), trajectory integration for single particles and entangled
//!   pairs, and ensemble equivariance checks.
//! - [`bloch`]: rotating-frame optical Bloch equations with the
//!   quantum-force decomposition and classical dipole-decay constants.
//! - [`cli`]: scenario configs, CSV/SVG emission, and dispatch used by the
//!   `solq` binary.

pub mod bloch;
pub mod cli;
pub mod dirac;
pub mod numerics;
pub mod photon;
pub mod pilot;
