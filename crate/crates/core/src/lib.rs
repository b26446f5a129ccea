//! Exact computation of torus GIT cones and walls, Weyl-genericity and
//! degeneracy for representations of reductive groups `H × D`, where `H`
//! is semisimple and `D` is a torus.
//!
//! All arithmetic is over exact rationals; no floating point is used in any
//! decision.

pub mod cone;
pub mod construct;
pub mod covering;
pub mod degen;
pub mod error;
pub mod git;
pub mod linalg;
pub mod lp;
pub mod rat;
pub mod rep;
pub mod roots;

pub use error::{Error, Result};
pub use linalg::{RatMat, RatVec};
pub use rat::Rat;
