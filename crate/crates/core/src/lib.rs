//! Finite bitopological spaces viewed as B-valued topological spaces, where
//! B is the four-element Boolean algebra `{0, ff, tt, 1}`.

pub mod bset;
pub mod bval;
pub mod catalog;
pub mod dframe;
pub mod error;
pub mod format;
pub mod hm;
pub mod oracle;
pub mod order;
pub mod pointset;
pub mod search;
pub mod separation;
pub mod sobriety;
pub mod space;
pub mod topology;

pub use bset::{BSet, Carrier};
pub use bval::BVal;
pub use error::{Error, Result};
pub use order::BOrder;
pub use pointset::PointSet;
pub use separation::{Axiom, AxiomReport};
pub use space::{BSpace, Side};
pub use topology::{FinTopology, Preorder, TopSpace};
