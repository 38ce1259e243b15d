//! latticework — a workbench for finite lattice computations.
//!
//! The crate revolves around one chain of structure theory:
//!
//! * a multiplicity-free modular lattice is distributive ([`factors`],
//!   [`lattice`]);
//! * a finite distributive lattice is the down-set lattice of its poset of
//!   join irreducibles ([`birkhoff`]);
//! * the directed Ext graph on factor classes reconstructs that poset
//!   whenever its underlying graph is acyclic ([`extgraph`]).
//!
//! Two applications are built in: submodule lattices of thin quiver
//! representations ([`quiver`]) and Dedekind lattices of monotone Boolean
//! functions ([`dedekind`]). File formats, DOT rendering and the fixture
//! corpus live in [`io`], [`dot`] and [`fixtures`]; [`exhaustive`] provides
//! the exhaustive small-structure generators the test suites sweep over.

pub mod bits;
pub mod birkhoff;
pub mod dedekind;
pub mod dot;
pub mod error;
pub mod exhaustive;
pub mod extgraph;
pub mod factors;
pub mod fixtures;
pub mod io;
pub mod lattice;
pub mod limits;
pub mod quiver;

mod union_find;

pub use error::{Error, Result};
pub use lattice::Lattice;
