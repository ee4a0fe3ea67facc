//! Order sequences of finite groups.
//!
//! Groups are enumerated concretely (permutations, matrices over finite
//! fields, cyclic groups and products of these) and each element gets an
//! index. From the element orders the crate builds the order sequence, then
//! compares sequences, takes products and computes ψ. It also classifies
//! groups as nilpotent, supersolvable or solvable, and builds domination
//! posets over sets of sequences.

pub mod action;
pub mod arith;
pub mod cache;
pub mod catalog;
pub mod classify;
pub mod constructors;
pub mod error;
pub mod expr;
pub mod finite_field;
pub mod fixtures;
pub mod group;
pub mod order_sequence;
pub mod par;
pub mod poset;
pub mod subgroup;
pub mod verify;

pub use error::{Error, Result};
pub use group::{ElementIndex, Group};
pub use order_sequence::{DominationVerdict, OrderSequence};
