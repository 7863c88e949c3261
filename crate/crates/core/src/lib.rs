//! Black-and-white coloring of permutation graphs.
//!
//! Given a permutation-graph instance (the bottom-rail order of its
//! permutation diagram) and integers `b`, `w`, decide whether `b` vertices
//! can be colored black and `w` white with no black–white edge, compute the
//! full feasibility frontier over all `(b, w)` pairs, and reconstruct
//! witness colorings together with their separating scanline chains.

pub mod cli;
pub mod frontier;
pub mod instance;
pub mod oracle;
pub mod perm;
pub mod render;
pub mod solver;

pub use frontier::Frontier;
pub use perm::{Color, Coloring, Permutation, Piece, Scanline, ScanlineChain, Side};
pub use solver::{chain_frontier, decide, witness, PieceSolver, Witness};
