//! Maximum (weighted) clique on disk graphs, attacked from the complement side.
//!
//! A clique in `G` is an independent set in the complement `H`. When `G` is a
//! disk graph, `H` cannot contain two vertex-disjoint odd cycles with no edge
//! between them, and that single structural fact powers everything here:
//!
//! * [`graph`] — the abstract graph layer: complements, bipartite machinery,
//!   shortest odd cycles, odd cycle covers, 2-subdivisions, and a
//!   Bron–Kerbosch oracle for desk-scale ground truth.
//! * [`geom`] — exact-rational planar geometry: disk intersection graphs,
//!   representation normalizers, the parity audit that refutes two disjoint
//!   odd cycles, and a verified builder for complements of cycle unions.
//! * [`solver`] — the win-win solver: branch on high complement degree, then
//!   finish with the cheaper of cover enumeration or closed-neighborhood
//!   enumeration; also a quasi-polynomial approximation mode.
//! * [`hardness`] — filled-triangle gadgets realizing co-2-subdivisions,
//!   the hardness side of the picture.
//! * [`fmt`] — text instance formats, report serialization, SVG emission.
//!
//! Everything combinatorial or geometric that decides an answer is computed
//! in exact rational arithmetic; floating point appears only inside the disk
//! builder's search for candidate coordinates, which are then frozen to
//! rationals and re-verified exactly.

pub mod bits;
pub mod fmt;
pub mod geom;
pub mod graph;
pub mod hardness;
pub mod rat;
pub mod solver;

pub use graph::Graph;
pub use rat::Rational;
