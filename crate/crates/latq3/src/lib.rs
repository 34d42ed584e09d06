//! Quantization constants, Voronoi geometry, and isoduality for
//! three-dimensional lattices.
//!
//! The crate computes the normalized second moment `G` of a lattice's
//! Voronoi cell by three independent routes — a closed-form expression
//! in Selling conorms, exact integration over the polytope, and Monte
//! Carlo quantization — together with packing and covering radii,
//! kissing numbers, duality tests, and optimizers over two parametric
//! families of determinant-one lattices.
//!
//! Entry points:
//! - [`gram::GramMatrix`] and [`selling::selling_reduce`] for lattice
//!   representation and reduction,
//! - [`report::lattice_report`] for a full geometric summary,
//! - [`closed_form`] / [`voronoi`] / [`mc`] for the three `G` routes,
//! - [`optimize`] for critical-point searches over the families,
//! - [`verification::run_verification`] for the one-shot suite behind
//!   the `verify-paper` command.

pub mod cli;
pub mod closed_form;
pub mod closest;
pub mod error;
pub mod family;
pub mod gram;
pub mod io;
pub mod mc;
pub mod moment;
pub mod optimize;
pub mod report;
pub mod roots;
pub mod selling;
pub mod tol;
pub mod verification;
pub mod voronoi;

pub use error::{Error, Result};
