//! Exact algebra for modules over the integral group ring of the infinite cyclic group,
//! their truncated completions, and HZ-length bounds for the metabelian groups `M ⋊ C`.

pub mod centralext;
pub mod classifier;
pub mod completion;
pub mod error;
pub mod exactalg;
pub mod gallery;
pub mod grouphom;
pub mod klein;
pub mod report;
pub mod verify;
pub mod zcmod;

pub use error::{Error, Result};
