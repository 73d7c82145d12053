//! Example algebras with constructive separating homomorphisms.
//!
//! * [`vecspace`]: vector spaces over prime fields.
//! * [`gset`]: free actions of finite groups.
//! * [`action`]: reachability, roots and bounded transition checks for
//!   actions of a free monoid on a finite set.

pub mod action;
pub mod gset;
pub mod vecspace;

pub use action::{action_preorder, apply_word, roots_of_action, unique_transitions_check, ActionStructure, TransitionWitness};
pub use gset::{
    check_free_gset, gset_orbit_decomposition, gset_separating_hom, make_free_gset, GroupTable, GsetStrategy, GsetViolation,
    OrbitDecomposition,
};
pub use vecspace::{make_vector_space, recognize_vector_space, vecspace_separating_hom, PrimeField, VecspaceStrategy};
