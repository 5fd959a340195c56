//! Exact computations with association schemes, generalized Hamming schemes
//! `H(n, A)`, and MacWilliams transforms of weight enumerators.

pub mod arith;
pub mod error;

pub use arith::{induced_matrix, Composition, CompositionIndex, ExactMatrix, GaussRat, MPoly};
pub use error::{Error, Result};
pub mod scheme;

pub use scheme::AssociationScheme;
pub mod builders;
pub use builders::{cycle_scheme, group_scheme, hamming, one_class};
pub mod generalized_hamming;
pub use generalized_hamming::GHScheme;
pub mod coding;
pub use coding::{Code, WeightEnumerator};
pub mod modular;
pub use modular::{induced_modular_check, search_t, verify_modular, ModularWitness};
pub mod io;
