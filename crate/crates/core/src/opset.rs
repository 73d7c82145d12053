use alloc::vec::Vec;

use crate::{Error, Operation, Result};

/// Canonically sorted, duplicate-free set of operations of one arity on one carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpSet {
    carrier: usize,
    arity: usize,
    members: Vec<Operation>,
}

impl OpSet {
    pub fn empty(carrier: usize, arity: usize) -> Self {
        OpSet { carrier, arity, members: Vec::new() }
    }

    pub fn new(carrier: usize, arity: usize, members: impl IntoIterator<Item = Operation>) -> Result<Self> {
        let mut members: Vec<Operation> = members.into_iter().collect();
        for op in &members {
            if op.carrier() != carrier {
                return Err(Error::CarrierMismatch { expected: carrier, found: op.carrier() });
            }
            if op.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: op.arity() });
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(OpSet { carrier, arity, members })
    }

    pub(crate) fn from_sorted_unchecked(carrier: usize, arity: usize, members: Vec<Operation>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        OpSet { carrier, arity, members }
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Operation] {
        &self.members
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Operation> {
        self.members.iter()
    }

    pub fn contains(&self, op: &Operation) -> bool {
        self.members.binary_search(op).is_ok()
    }

    pub fn is_subset(&self, other: &OpSet) -> bool {
        self.members.iter().all(|op| other.contains(op))
    }

    pub fn into_vec(self) -> Vec<Operation> {
        self.members
    }
}

impl<'a> IntoIterator for &'a OpSet {
    type Item = &'a Operation;
    type IntoIter = core::slice::Iter<'a, Operation>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
