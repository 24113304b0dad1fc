//! Exact computation of leveled-embedding invariants of graphs: the level
//! number and hamiltonian level number with verifiable certificates, plus
//! independent book-thickness and graph-thickness kernels and the inequality
//! validators connecting them.

pub mod cli;
pub mod color;
pub mod crossings;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod leveling;
pub mod planarity;
pub mod spine;

pub use error::{Error, Result};
