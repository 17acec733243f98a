//! Exact computation with thick tensor ideals of right bounded derived
//! categories over a small catalog of commutative noetherian rings.
//!
//! The library works with bounded complexes of finite free modules over
//! `Z`, `Z/n`, `GF(p)`, `GF(p)[t]`, `GF(p)[t]/(f)`, plus formal
//! (zero-differential) complexes over an abstract DVR. On top of the
//! homological core it computes supports, annihilators of complexes and
//! chain maps, Koszul complexes, derived tensor products, null-homotopy
//! witnesses, smash-nilpotence indices, the lattice of compact thick tensor
//! ideals, the `S`/`s` maps between `Spec R` and the Balmer spectrum, the
//! DVR classes `L_1 ⊊ L_2 ⊊ ⋯`, and reports demonstrating that the
//! comparison map on the Balmer spectrum of a DVR is not locally injective.
//!
//! Everything is exact arithmetic; there are no tolerances anywhere.
//!
//! # Layout
//!
//! - [`rings`] — the ring catalog: parsing, arithmetic, factorization,
//!   prime ideals, finite spectra, residue fields.
//! - [`matrix`] — exact matrices and Smith normal form with transforms.
//! - [`modules`] — finitely generated modules in invariant-factor normal
//!   form: tensor, Tor, localization, (Loewy) length.
//! - [`complexes`] — bounded free complexes and chain maps: homology,
//!   Koszul complexes, cones, tensor products, null-homotopy solving,
//!   annihilators, supports, residue-field base change, file format.
//! - [`spectra`] — specialization-closed subsets with exact set algebra and
//!   the order-reversing maps between `Spec R` and the tame spectrum.
//! - [`formal`] — formal DVR complexes with symbolic tails, the `L_c`
//!   classes, windowed tensor products, and the identity checks they
//!   satisfy.
//! - [`ideals`] — thick tensor-ideal descriptors with membership oracles,
//!   closure operators, the compact-ideal lattice, artinian classification,
//!   and the DVR fiber report.
//! - [`nilpotence`] — the generalized smash-nilpotence search.
//! - [`corpus`] — seeded random generators for complexes, modules and maps,
//!   used by the property suites and the examples.
//! - [`verify`] — named identity/property suites shared by the CLI and CI.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p ttg --example ring_catalog
//! cargo run -p ttg --example smith_normal_form
//! cargo run -p ttg --example koszul_annihilators
//! cargo run -p ttg --example homology_and_tensor
//! cargo run -p ttg --example nullhomotopy_witness
//! cargo run -p ttg --example spectrum_maps
//! cargo run -p ttg --example artinian_classification
//! cargo run -p ttg --example nilpotence_search
//! cargo run -p ttg --example dvr_chain
//! cargo run -p ttg --example fiber_report
//! cargo run -p ttg --example identity_suite
//! ```
//!
//! The thin `ttg` binary exposes the same operations as subcommands; see
//! the README.

pub mod complexes;
pub mod corpus;
pub mod error;
pub mod formal;
pub mod ideals;
pub mod matrix;
pub mod modules;
pub mod nilpotence;
pub mod rings;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};

/// Default cap on the total rank of a tensor product; exceeding it is an
/// error, never a silent truncation. Override per call, or through
/// `TT_SIZE_BUDGET` in the CLI.
pub const DEFAULT_SIZE_BUDGET: usize = 10_000;
