//! E_n-Hopf invariants of simplicial maps over prime fields.
//!
//! The crate builds finite simplicial sets, the interval-cut action of the
//! surjection operad on their normalized cochains, bar constructions over
//! explicit cooperad data, and the weight-reduction algorithm that turns a
//! bar cocycle pulled back to a sphere into a number.

pub mod bar;
pub mod chains;
pub mod falg;
pub mod hopf;
pub mod koszul;
pub mod models;
pub mod operads;
pub mod simp;
pub mod susp;
