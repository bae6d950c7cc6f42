//! Exact combinatorics of pure order ideals of monomials.
//!
//! An *order ideal* is a finite, divisor-closed set of monomials; it is
//! *pure* when its maximal monomials all have the same degree. This crate
//! decides and enumerates the degree-count sequences (h-vectors) such ideals
//! can have, and ships the surrounding toolkit those questions need:
//!
//! - [`sequences`]: growth bounds via iterated binomial expansions,
//!   differentiability, shape analysis (unimodality, local maxima,
//!   flawlessness), and structural screens.
//! - [`monomials`]: monomial parsing/printing, divisor closures,
//!   stratified h-vectors, and canonical forms under variable permutation.
//! - [`purity`]: budgeted, deterministic decision and enumeration of pure
//!   h-vectors by canonical-augmentation search, plus interval-gap scans.
//! - [`constructions`]: complete intersections, truncations, disjoint sums,
//!   tensor blocks, and recipes for sequences with many local maxima.
//! - [`designs`]: Steiner systems, their face-count sequences, finite
//!   projective planes, and the classical existence screens.
//! - [`complexes`]: simplicial complexes, f- and h-vectors, matroid
//!   recognition, and the purity check for matroid h-vectors.
//! - [`lefschetz`]: multiplication-by-linear-form matrices on monomial
//!   quotients, exact ranks, and weak/strong Lefschetz property verdicts.
//!
//! Parallel search is enabled through the default `parallel` feature and is
//! organized so results are byte-identical to the sequential fallback.

pub mod binom;
pub mod complexes;
pub mod constructions;
pub mod designs;
pub mod error;
pub mod lefschetz;
pub mod monomials;
pub mod purity;
pub mod sequences;

pub use error::{Error, Result};
pub use monomials::{divisor_closure, Monomial, OrderIdeal};
pub use purity::{decide_pure, enumerate_pure, PurityStatus, PurityVerdict, SearchBudget};
pub use sequences::IntSeq;
