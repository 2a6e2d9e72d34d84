//! A pivotal monoidal category of DNA diagrams.
//!
//! Objects are DNA words ([`Word`]), morphisms are typed noncrossing partial
//! matchings ([`Diagram`]), and states `ε → w` are secondary structures
//! ([`SecondaryStructure`]). Composition glues diagrams along their shared
//! boundary and erases interior components; the same composite can be
//! computed on bent states by zip-and-transfer. The [`pregroup`] module maps
//! grammatical reductions to Watson–Crick pairing.

pub mod diagram;
pub mod dotbracket;
pub mod fold;
pub mod pregroup;
pub mod render;
pub mod structure;
pub mod word;

pub use diagram::{bend, compose, unbend, zip_and_transfer, Diagram, DiagramError, LoopReport};
pub use fold::FoldConfig;
pub use structure::SecondaryStructure;
pub use word::{Base, Word};
