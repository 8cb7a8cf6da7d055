//! Exact invariants of the half-liberated orthogonal quantum group O_n^*.
//!
//! Everything here is desk-scale and exact: Brauer diagram classes and their
//! bounded generation closures ([`diagrams`]), integer Hom-space ranks of
//! diagram spans ([`tensor_maps`]), the diagonal group sitting inside
//! Z^n ⋊ Z_2 together with dominant weights and weight multisets
//! ([`weight_lattice`]), twisted fusion rules ([`fusion`]), and Cayley graphs
//! with ball-volume growth ([`cayley`]). No floating point enters any
//! computation; the only floats in the crate are the growth-exponent fits.

pub mod cayley;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod fusion;
pub mod tensor_maps;
pub mod weight_lattice;

pub use error::{Error, Result};
