pub mod alphabet;
pub mod builtin;
pub mod cayley;
pub mod canonical;
pub mod config;
pub mod error;
pub mod graph;
pub mod io;
pub mod language;
pub mod lattice;
pub mod metric;
pub mod navigate;
pub mod pattern;
pub mod random;
pub mod sft;
pub mod source;
pub mod symmetry;
pub mod verify;
pub mod word;

pub use alphabet::{Alphabets, Label, LabelAlphabet, Port, PortAlphabet};
pub use canonical::{canonicalize, CanonicalGraph, VertexId};
pub use error::{Error, Result};
pub use graph::{BasedGraph, ConcreteGraph};
pub use language::PrefixLanguage;
pub use source::GraphSource;
pub use word::{Letter, PathWord};
