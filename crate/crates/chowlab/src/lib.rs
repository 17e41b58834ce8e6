//! Exact-arithmetic toolkit for Chow polynomials of finite bounded weakly
//! ranked posets.
//!
//! The crate computes the Chow polynomial of a poset by two independent
//! routes (the chain sum and a count of Feichtner–Yuzvinsky monomials),
//! builds explicit symmetric chain decompositions of products of chains and
//! of the FY monomial poset, extracts the SFY monomial order ideal, and
//! decides sequence properties in exact integer arithmetic: palindromicity,
//! unimodality, log-concavity, Macaulay O-sequences, pure O-sequences and
//! SI-sequences.

pub mod checks;
pub mod chow;
pub mod cli;
pub mod family;
pub mod io;
pub mod monomial;
pub mod poly;
pub mod poset;
pub mod roots;
pub mod scd;
pub mod seq;

/// Default guard on the number of poset elements a generator will produce.
pub const DEFAULT_SIZE_CAP: usize = 200_000;

/// Element-count guard used by the generators. Overridable through the
/// `CHOWLAB_SIZE_CAP` environment variable.
pub fn size_cap() -> usize {
    std::env::var("CHOWLAB_SIZE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}
