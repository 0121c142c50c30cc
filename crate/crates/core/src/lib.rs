//! Lazy burning analysis for Latin squares.
//!
//! A Latin square of order `n` induces two dual hypergraphs: the `n`-uniform
//! hypergraph `H_L` (entries as vertices, lines as hyperedges) and the
//! 3-uniform hypergraph `H^L` (lines as vertices, entries as hyperedges).
//! In lazy burning, a seed set of vertices is burned at round zero and a
//! vertex catches fire whenever it is the only unburned vertex of some
//! non-singleton hyperedge; the lazy burning number `b_L` is the smallest
//! seed that eventually burns everything.
//!
//! Both burning numbers reduce to structural quantities of the square
//! itself: the maximum cover-sequence length `mcs(L)` and the shortest
//! connected chain of subsquares `scc(L)`, via
//!
//! ```text
//! b_L(H_L)  = n^2 - mcs(L) = n^2 - 3n + 1 + scc(L)
//! b_L(H^L)  = scc(L) + 1
//! mcs(L)    = 3n - 1 - scc(L)
//! ```
//!
//! This crate implements the squares, the hypergraphs, the burning engine,
//! exhaustive minimum-seed oracles, the chain/cover-sequence algebra, and
//! the finite-group connection (`scc(L(G)) = alpha + 1` where `alpha` is the
//! minimum number of generators of `G`). The [`verify`] module packages the
//! cross-checks between all of these routes into runnable suites.

pub mod burning;
pub mod chains;
pub mod groups;
pub mod latin;
pub mod verify;

pub use latin::{Entry, LatinError, LatinSquare, LineKind, LineRef, Subsquare};
