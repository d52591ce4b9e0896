//! Exact computations in categories of diagrams of finite-dimensional
//! representations.
//!
//! The base abelian category is always `Fun(Δ, Vect_k)` for a finite
//! category `Δ` and an exact field `k`; diagrams over a finite category `Σ`
//! in it are stored flat as representations of `Σ × Δ`. On top of that the
//! crate computes colimits and limits, Hom and Ext¹ spaces, the one-point
//! extension `Σ*` with the pushout object `Z_η`, the comparison maps
//! `Ψ`/`Φ`/`Ξ`/`Θ` as exact matrices, and certificate-carrying decision
//! procedures for exactness of `colim_Σ` and `lim_Σ`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod construct;
pub mod diagrams;
pub mod error;
pub mod exact;
pub mod fincat;
pub mod homext;
pub mod limits;
pub mod rep;
pub mod verify;

pub use diagrams::Diagrams;
pub use error::Error;
pub use exact::{Field, Mat, Scalar};
pub use fincat::FinCat;
pub use rep::{NatMap, Rep, Ses};
