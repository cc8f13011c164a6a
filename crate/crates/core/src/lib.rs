//! Cycle-extendability of planar matching covered graphs.
//!
//! A matching covered graph is *cycle-extendable* when every even cycle is
//! conformal, i.e. deleting its vertices leaves a graph with a perfect
//! matching. This crate decides that property two ways:
//!
//! * [`matching::brute_force_cycle_extendable`] checks every even cycle
//!   directly.
//! * [`recognizer::decide`] reduces the graph to irreducible form with series
//!   and parallel reductions and tests membership in `{K2}` plus four infinite
//!   families of planar graphs built from half biwheels
//!   (see [`families`]).
//!
//! Around the two deciders sit the supporting pieces: perfect matching
//! enumeration, ear decompositions, tight cut decomposition into bricks and
//! braces, cycle-space ranks over GF(2), bisubdivision and bicycle pattern
//! searches, and planarity with combinatorial embeddings.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is sized for desk
//! scale inputs: most exhaustive routines refuse graphs with more vertices
//! than [`limits::desk_cap`].

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod cycles;
pub mod decomposition;
mod dense;
pub mod ear;
mod error;
pub mod families;
pub mod generate;
pub mod gf2;
pub mod graph;
pub mod iso;
pub mod limits;
pub mod matching;
pub mod patterns;
pub mod planar;
pub mod recognizer;
pub mod reduction;

pub use cycles::CycleWitness;
pub use error::{Error, Result};
pub use graph::{Cut, EdgeId, Graph, VertexId};
