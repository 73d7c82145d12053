use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::{Elem, OpSet};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A tuple component is not below the base.
    ComponentOutOfRange { position: usize, value: u64, base: usize },
    /// A tuple index is not below `base^len`.
    IndexOutOfRange { index: u64, base: usize, len: usize },
    ProjectionOutOfRange { index: usize, arity: usize },
    EmptyCarrier,
    CarrierMismatch { expected: usize, found: usize },
    ArityMismatch { expected: usize, found: usize },
    TableLength { name: Option<String>, expected: usize, found: usize },
    EntryOutOfRange { name: Option<String>, index: usize, value: u64, carrier: usize },
    /// Reindexing map sends a position outside the target arity.
    MapOutOfRange { position: usize, value: usize, bound: usize },
    /// A table (or enumeration) would exceed the configured size guard.
    TableTooLarge { limit: usize },
    /// Clone closure produced more members than allowed; carries what was found.
    CloneLimit { limit: usize, partial: Box<OpSet> },
    DuplicateSymbol(String),
    UnknownSymbol(String),
    SignatureMismatch,
    /// Hom enumeration hit its cap, so any set filtered by it is only an upper bound.
    Incomplete { cap: usize },
    NotAPower,
    NotPrime(u64),
    InvalidGroup(&'static str),
    /// `gamma * a == a` with `gamma` not the identity.
    NotFree { symbol: usize, point: Elem },
    /// The operation lies in the derived clone, so no separating homomorphism exists.
    DerivedOperation,
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ComponentOutOfRange { position, value, base } => {
                write!(f, "tuple component {position} has value {value}, not below base {base}")
            }
            Error::IndexOutOfRange { index, base, len } => {
                write!(f, "index {index} is out of range for {len}-tuples over base {base}")
            }
            Error::ProjectionOutOfRange { index, arity } => {
                write!(f, "projection index {index} is out of range for arity {arity}")
            }
            Error::EmptyCarrier => write!(f, "carrier must have at least one element"),
            Error::CarrierMismatch { expected, found } => {
                write!(f, "carrier size mismatch: expected {expected}, found {found}")
            }
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            Error::TableLength { name, expected, found } => match name {
                Some(name) => write!(f, "operation {name:?}: table has {found} entries, expected {expected}"),
                None => write!(f, "table has {found} entries, expected {expected}"),
            },
            Error::EntryOutOfRange { name, index, value, carrier } => match name {
                Some(name) => write!(
                    f,
                    "operation {name:?}: table entry {index} is {value}, not below carrier size {carrier}"
                ),
                None => write!(f, "table entry {index} is {value}, not below carrier size {carrier}"),
            },
            Error::MapOutOfRange { position, value, bound } => {
                write!(f, "map sends {position} to {value}, not below {bound}")
            }
            Error::TableTooLarge { limit } => {
                write!(f, "request exceeds the table limit of {limit} entries")
            }
            Error::CloneLimit { limit, partial } => write!(
                f,
                "clone slice exceeds the member limit of {limit} ({} members found before stopping)",
                partial.len()
            ),
            Error::DuplicateSymbol(s) => write!(f, "duplicate operation symbol {s:?}"),
            Error::UnknownSymbol(s) => write!(f, "unknown operation symbol {s:?}"),
            Error::SignatureMismatch => write!(f, "algebras do not share a signature"),
            Error::Incomplete { cap } => write!(
                f,
                "homomorphism enumeration truncated at {cap} results; result would only be an upper bound"
            ),
            Error::NotAPower => write!(f, "source algebra is not the expected power of the target"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::InvalidGroup(why) => write!(f, "invalid group table: {why}"),
            Error::NotFree { symbol, point } => {
                write!(f, "action is not free: non-identity symbol {symbol} fixes {point}")
            }
            Error::DerivedOperation => write!(f, "operation belongs to the derived clone"),
            Error::Precondition(why) => write!(f, "precondition violated: {why}"),
        }
    }
}

impl core::error::Error for Error {}
