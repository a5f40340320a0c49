//! Exact computation of the Rédei–Berge symmetric function of a digraph,
//! Chow's path-cycle symmetric function, and Hamiltonian path and cycle
//! counts, each by several independent routes.

pub mod combinatorics;
pub mod digraph;
pub mod error;
pub mod guard;
pub mod hamilton;
pub mod matrix;
pub mod redei;
pub mod symfun;
pub mod verify;
pub mod walks;

pub use combinatorics::{Partition, Permutation};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use symfun::{Basis, Rational, SymFun, TwoAlphabetSymFun};
