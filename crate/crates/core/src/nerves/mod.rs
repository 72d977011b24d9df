//! Nerves: the ordinary nerve of a finite category, the homotopy-coherent
//! nerve of an enriched category (presented by bead data), and the nerve
//! of a base category relative to a diagram of simplicial sets.

mod bead;
mod coherent;
mod ordinary;
mod relative;

pub use bead::{enumerate_bead_shapes, Bead, BeadCatalog, BeadShape};
pub use coherent::{
    bead_boundary, check_boundary, coherent_nerve, coherent_nerve_map, coherent_simplices, evaluate, opcommute_map,
    reindex_coherent, CoherentNerve, CoherentSimplex,
};
pub use ordinary::{chains, ordinary_nerve, Chain, OrdinaryNerve};
pub use relative::{relative_nerve, relative_simplices, reindex_relative, DiagramSSet, RelNerveSimplex, RelativeNerve};

#[cfg(test)]
mod tests;
