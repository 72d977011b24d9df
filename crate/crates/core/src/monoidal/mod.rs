//! Strict monoidal enriched categories, the simplicial object `C^•`, the
//! category of operators `C^⊗`, the operadic nerve and monoidal opposites.

mod bullet;
mod delta;
mod nerve;
mod operators;
mod structure;

pub use bullet::{
    c_simplicial_object, cf_functor, check_generator_decomposition, check_simplicial_identities, degeneracy_functor,
    face_functor, generator_word, word_map, Generator,
};
pub use delta::DeltaOp;
pub use nerve::{check_monoidal_fibers, check_op_theorems, check_operadic_relnerve, operadic_nerve, OperadicNerve};
pub use operators::{
    c_otimes, check_cotimes_gr_iso, check_split_cleavage, cotimes_to_gr, gr_of_bullet, verify_cotimes_gr, OperArrow,
    OperComponent, OperatorCat,
};
pub use structure::{apply_cf, apply_cf_cells, opposite_monoidal, validate_monoidal, MonSCat, SeqObject};
