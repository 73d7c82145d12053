//! Finite universal algebra on table-encoded operations.
//!
//! Every operation on a carrier `{0, .., k-1}` is stored as a total lookup
//! table indexed by [`encode_tuple`]. On top of that representation the crate
//! computes Kronecker products and commutation, clone slices generated by a
//! set of operations, homomorphisms between finite algebras, and centralizers
//! and double centralizers, including a witness-based verification path for
//! vector spaces over prime fields and free group actions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod algebra;
mod error;
mod guard;
mod op;
mod opset;
mod tuple;

pub mod centralizer;
pub mod clone;
pub mod homsearch;
pub mod kronecker;
pub mod zoo;

pub use algebra::{Algebra, Signature};
pub use error::{Error, Result};
pub use guard::{checked_pow, set_table_limit, table_limit, DEFAULT_TABLE_LIMIT};
pub use op::{compose, projection, pushforward, Operation};
pub use opset::OpSet;
pub use tuple::{decode_tuple, encode_tuple, Tuples};

/// A carrier element, always an index below the carrier size.
pub type Elem = u32;
