//! Simple graphs, their automorphism groups, and graphs realizing a given
//! finite group.

mod aut;
pub mod builtin;
mod frucht;
mod graph;
mod group;

pub use aut::{automorphisms, refine_colours, AutomorphismGroup};
pub use frucht::{frucht_graph, realize_group, Realization};
pub use graph::{Permutation, SimpleGraph};
pub use group::{next_permutation, FiniteGroup, GroupSpec};
