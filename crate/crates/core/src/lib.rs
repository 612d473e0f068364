//! Lie-Yamaguti algebras over the rationals and their universal coacting
//! bialgebras: presentations, Gröbner certificates, modules, automorphisms
//! and gradings.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod rep;
pub mod scalar;
pub mod symmetry;
pub mod universal;

pub use algebra::{CommAlgebra, LinearMap, LyAlgebra};
pub use scalar::Scalar;
