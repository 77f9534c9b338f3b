//! Flat-core pinned p-elasticae in R^d.
//!
//! For an exponent p > 2 this crate constructs the closed-form building
//! blocks of flat-core curves (straight segments and borderline loops driven
//! by p-hyperbolic functions), evaluates p-bending energy and discrete
//! Sobolev distances, classifies arrangements by their stability, realizes
//! the segment-insertion / tail-rotation / cyclic-shift perturbation
//! families, and probes local minimality with a constrained polyline
//! relaxation.

pub mod curves;
pub mod energy;
pub mod error;
pub mod flatcore;
pub mod io;
pub mod optimize;
pub mod perturb;
pub mod special;

pub use error::{Error, Result};
pub use special::PContext;
