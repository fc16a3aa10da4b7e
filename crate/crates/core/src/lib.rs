//! Quantale-valued preorders on fuzzy sets.
//!
//! A finite unital quantale supplies the truth values; fuzzy sets carry a
//! membership degree per element; fuzzy relations between them are matrices
//! whose entries are constrained to diagonal sets. On top of that relational
//! calculus the crate builds preordered fuzzy sets, presheaf powersets,
//! suprema/infima/tensors, and fuzzy Galois connections (polarities and
//! axialities, MacNeille completions, fuzzy concept lattices), together with
//! an executable law-verification harness over the builtin quantales.

pub mod caps;
pub mod completion;
pub mod dot;
pub mod files;
pub mod galois;
pub mod presheaf;
pub mod qord;
pub mod qrel;
pub mod quantale;
pub mod sampling;
pub mod verify;

pub use caps::Caps;
pub use quantale::{Elem, FiniteQuantale};
pub use qrel::{QRelation, QSubset};
pub use qord::{QOrderMap, QOrderedSet};
