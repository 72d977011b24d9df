//! Computations with finite, dimension-truncated simplicial sets and
//! simplicially enriched categories: nerves, Grothendieck constructions,
//! categories of operators and opposites.

pub mod certificate;
pub mod cli;
pub mod corpus;
pub mod doc;
pub mod error;
pub mod grothendieck;
pub mod monoidal;
pub mod nerves;
pub mod report;
pub mod simplex;
pub mod scat;
pub mod sset;

pub use error::{Error, Result};
