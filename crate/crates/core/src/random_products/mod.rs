//! Ranks of products `x₁ ⋯ x_k` of independent uniform elements of IS_n.
//!
//! `P_{k,n}^{(i)}` is the probability that the product equals one fixed
//! element of rank `i`; it depends on that element only through its rank.

pub mod distribution;
pub mod matrix;
pub mod montecarlo;
pub mod spectral;

pub use distribution::{
    brute_force_distribution, cross_checks, nilpotent_multiplicities, prob_of_subset,
    rank_distribution, rank_distributions, CrossChecks, RankDistribution,
};
pub use matrix::{basis_change, build_matrix, RationalMatrix};
pub use montecarlo::{monte_carlo, SampleReport, BLOCK};
pub use spectral::{
    eigenbasis, verify_spectral_identities, Eigenpair, SpectralCheck, SpectralReport,
};
