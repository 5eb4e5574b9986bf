//! A Robinson-Schensted type correspondence between partial permutations and
//! triples (admissible signed Young diagram, two standard Young tableaux),
//! together with an exact linear-algebra oracle over a prime field that
//! realizes the geometric definitions and certifies the combinatorics.

pub mod correspondence;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod rsk;
pub mod signed;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{is_column_strip, Composition, Partition};
