//! Finite categories and finite simplicially enriched categories.

mod enriched;
mod fincat;
mod functor;

pub use enriched::{
    discrete_scat, is_locally_kan, opposite_scat, scat_power, scat_product, scat_product_many, sub_scat,
    terminal_scat, validate_scat, SCat,
};
pub use fincat::{Arrow, ArrowId, FinCat, ObjId};
pub use functor::{enumerate_sfunctors, validate_sfunctor, SFunctor};
