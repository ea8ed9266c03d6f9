//! Exact arithmetic for the skew Laurent series ring `F((t, sigma))` over
//! `F = Q(x0, x1, ...)` with the shift `x_i -> x_{i+1}`, generalized quaternion
//! algebras over the rationals, and the linear-algebra engines that decide
//! left and right algebraicity over division subrings.

pub mod algebraicity;
pub mod error;
pub mod linalg;
pub mod ring;
pub mod scalars;
pub mod ore;
pub mod quaternion;
pub mod rng;
pub mod sampling;
pub mod series;
pub mod structure;

pub use error::{Error, Result};
