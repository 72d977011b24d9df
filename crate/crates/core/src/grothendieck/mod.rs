//! The Grothendieck construction of a diagram of enriched categories, its
//! fibration properties, and its comparison with the relative nerve.

mod construction;
mod diagram;
mod fibration;
mod theorem;

pub use construction::{cocartesian_lift, fiberwise_op_split, grothendieck, GrArrow, GrCat, HomComponent};
pub use diagram::{DiagramNerve, DiagramSCat};
pub use fibration::{check_opfibration, cocartesian_edge_fillers, is_opfibration, is_pcocartesian, is_pcocartesian_arrow, Fibration};
pub use theorem::{
    check_gr_relnerve_iso, compare_gr_relnerve, gr_simplex_chain, gr_simplex_to_relnerve, relnerve_simplex_to_gr,
    GrRelNerveComparison,
};

#[cfg(test)]
mod tests;
