//! Instance generators for the hardness reductions.

mod biclique;
mod clique;
mod property;
mod source;

use thiserror::Error;

use crate::solve::SolveError;

pub use biclique::{edges_respect_levels, hamiltonian_levels, mcb_to_hamiltonian};
pub use clique::{matching_cycles, mcc_to_cfactor, mcc_to_matching};
pub use property::{
    biclique_to_piml, build_property_gadget, gadget_sizes, pad_layers, GadgetOutput,
};
pub use source::{
    gen_colored_source, has_biclique, has_multicolored_biclique, has_multicolored_clique,
    ColoredGraph, Side, SourceMode,
};

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error("no gadget for property `{0}`")]
    Unsupported(String),
    #[error("{0}")]
    Precondition(String),
    #[error("source graph: {0}")]
    Source(String),
    #[error("edge {{{0}, {1}}} joins vertices of the same colour")]
    ImproperColoring(usize, usize),
    #[error(transparent)]
    Instance(#[from] SolveError),
}
