//! Exact-arithmetic kernel for the multiset partition algebra MP_λ(ξ), the
//! classical partition algebra P_k(ξ), their embedding, the Schur–Weyl
//! duality with S_n acting on Sym^λ(Fⁿ), multiplicity generating functions,
//! and the multiset RSK correspondence.
//!
//! Everything is computed over ℚ (or ℚ[ξ]); every nontrivial result is
//! checkable against an independent brute-force oracle at small parameters.
//! See the `examples/` directory for one runnable example per capability and
//! the `verify` module for the full acceptance battery.

pub mod arith;
pub mod combinatorics;
pub mod config;
pub mod error;
pub mod mpalgebra;
pub mod partition_algebra;
pub mod rsk;
pub mod schur_weyl;
pub mod symfunc;
pub mod verify;

pub use arith::{falling_factorial, interpolate, PolyXi, Rat};
pub use error::MpaError;
