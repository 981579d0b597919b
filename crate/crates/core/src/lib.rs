//! Top-down construction of lattice Boltzmann methods for the scalar linear
//! advection–diffusion equation.
//!
//! The crate builds the (2d+1)×(2d+1) relaxation-system algebra for a given
//! d-dimensional advection–diffusion problem, links it to the DdQ(2d+1)
//! velocity stencils (D1Q3, D2Q5, D3Q7), evolves the resulting second-order
//! SRT lattice Boltzmann scheme on periodic grids, and provides the analytic
//! benchmark solutions, error metrics and convergence tooling needed to
//! reproduce smooth/non-smooth order-of-convergence studies at desk scale.
//!
//! Module map:
//! - [`algebra`]: relaxation-system matrices, diagonalization, generalized
//!   Maxwellian, moment conditions and the sub-characteristic stability gate.
//! - [`stencil`]: DdQ(2d+1) velocity sets, equilibrium populations, and
//!   physical↔lattice unit conversion under diffusive scaling.
//! - [`solver`]: collide–stream population solver on periodic grids.
//! - [`trs`]: direct d=1 integrator of the transformed relaxation system,
//!   used to demonstrate the relaxation limit ε↘0.
//! - [`bench`]: analytic reference solutions, error norms, EOC estimation
//!   and the (N, Pe) sweep driver.
//! - [`verify`]: seeded randomized self-checks of the algebra.

pub mod algebra;
pub mod bench;
pub mod error;
pub mod matrix;
pub mod par;
pub mod report;
pub mod rng;
pub mod solver;
pub mod stencil;
pub mod trs;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::SquareMatrix;
