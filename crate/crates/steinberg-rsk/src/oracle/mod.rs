//! Exact linear algebra over a prime field realizing the geometric
//! definitions: Jordan types, flag-restricted chains, orbit identification,
//! conormal sampling, and the explicit quiver-module matrices.

pub mod flags;
pub mod geometry;
pub mod matrix;
pub mod modules;

pub use flags::{quotient_chain, schubert_position, tab_chain, Flag};
pub use geometry::{
    bordered_source_flag, bordered_target_flag, conormal_basis, diagram_of_pair, dual_orbit_check,
    embedding_matrix, generic_conormal_sample, orbit_of_matrix, sample_orbit_point, OrbitSample,
    DEFAULT_TRIALS, RETRY_ROUNDS,
};
pub use matrix::{is_prime, resolve_prime, FieldMatrix, DEFAULT_PRIME};
pub use modules::{diagram_of_summands, direct_sum, indecomposable, ModulePoint};
