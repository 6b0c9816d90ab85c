//! Squeezed simplicial complexes built from shifted monomial order ideals.
//!
//! The crate is organised bottom-up:
//!
//! - [`monomial`]: monomials, finite order ideals, monomial ideals and the
//!   complement correspondence `U <-> I(U)`.
//! - [`complex`]: pure simplicial complexes given by facets, with f/h-vectors,
//!   links, deletions, ridge degrees, vertex decomposability and the
//!   singularity index.
//! - [`squeeze`]: the facet map `F_t(u)` and the complexes `Δ_t(U)`.
//! - [`algebra`]: stable operators, Stanley-Reisner ideals, Eliahou-Kervaire
//!   Betti tables and Hilbert functions.
//! - [`lefschetz`]: weak and strong Lefschetz verdicts read off the order ideal.
//! - [`homology`]: exact rational homology and the Hochster Betti oracle.
//! - [`verify`]: sweep batteries over enumerated shifted order ideals.
//!
//! Sweeps and per-subset homology run through [`par`], which uses rayon when
//! the `parallel` feature is enabled and plain iterators otherwise.

pub mod algebra;
pub mod complex;
pub mod homology;
pub mod io;
pub mod lefschetz;
pub mod monomial;
pub mod par;
pub mod rational;
pub mod report;
pub mod squeeze;
pub mod verify;

mod error;

pub use error::Error;
pub use monomial::{Monomial, MonomialIdeal, OrderIdeal};
pub use complex::SimplicialComplex;
pub use rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;
