//! Toric algebra of uniform hypergraphs.
//!
//! The edges of a hypergraph `H` parametrize a monomial map `t_e ↦ x^e`; its
//! kernel is the toric ideal of the edge subring. This crate computes with
//! that ideal through integer kernel vectors of the incidence matrix:
//!
//! * [`hypergraph`]: the data model, incidence matrix, dual, and core removal;
//! * [`walks`]: balanced bicolorings, binomials, and monomial-walk decomposition;
//! * [`graver`]: primitivity and Graver bases (completion plus a bounded oracle);
//! * [`bouquet`]: matching pairs and matched-petal sunflower bouquets;
//! * [`discrepancy`]: exact discrepancy and the dual monomiality test;
//! * [`fiber`]: fiber enumeration and seeded Markov-move walks;
//! * [`io`]: JSON and text formats.

pub mod bouquet;
pub mod discrepancy;
pub mod error;
pub mod families;
pub mod fiber;
pub mod graver;
pub mod hypergraph;
pub mod io;
pub mod lattice;
pub mod walks;

pub use error::{Error, Result};
pub use graver::{graver_basis, is_primitive, GraverBasis, GraverConfig, Method};
pub use hypergraph::{dual, is_connected, remove_core, Hypergraph, Multihypergraph};
pub use walks::{
    decompose, in_ideal, is_balanced, to_walk_vector, Bicoloring, Binomial, Color, WalkSequence, WalkVector,
};
