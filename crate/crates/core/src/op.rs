use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::guard::table_len;
use crate::tuple::{decode_into, step};
use crate::{Elem, Error, Result};

/// A total operation `A^n -> A` on the carrier `{0, .., carrier-1}`.
///
/// `table[encode_tuple(t)] == f(t)`. The derived ordering compares arity
/// first, then the table lexicographically, which is the canonical order used
/// by [`OpSet`](crate::OpSet).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Operation {
    arity: usize,
    table: Box<[Elem]>,
    carrier: usize,
}

impl Operation {
    pub fn new(carrier: usize, arity: usize, table: impl Into<Box<[Elem]>>) -> Result<Self> {
        let table = table.into();
        if carrier == 0 {
            return Err(Error::EmptyCarrier);
        }
        let expected = table_len(carrier, arity)?;
        if table.len() != expected {
            return Err(Error::TableLength { name: None, expected, found: table.len() });
        }
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v as usize >= carrier) {
            return Err(Error::EntryOutOfRange { name: None, index, value: value as u64, carrier });
        }
        Ok(Operation { arity, table, carrier })
    }

    pub(crate) fn from_parts(carrier: usize, arity: usize, table: Box<[Elem]>) -> Self {
        debug_assert_eq!(Some(table.len()), crate::checked_pow(carrier, arity));
        Operation { arity, table, carrier }
    }

    /// Builds the table by evaluating `f` on every tuple in encoding order.
    pub fn from_fn(carrier: usize, arity: usize, mut f: impl FnMut(&[Elem]) -> Elem) -> Result<Self> {
        if carrier == 0 {
            return Err(Error::EmptyCarrier);
        }
        let len = table_len(carrier, arity)?;
        let mut table = Vec::with_capacity(len);
        let mut digits = vec![0; arity];
        loop {
            table.push(f(&digits));
            if !step(&mut digits, carrier) {
                break;
            }
        }
        Operation::new(carrier, arity, table)
    }

    pub fn constant(carrier: usize, arity: usize, value: Elem) -> Result<Self> {
        let len = table_len(carrier, arity)?;
        Operation::new(carrier, arity, vec![value; len])
    }

    /// The operation whose table, read as a base-`carrier` number, is `code`.
    ///
    /// This is the indexing of `A^(A^n)` used whenever an operation is
    /// treated as an element of a power algebra.
    pub fn from_code(carrier: usize, arity: usize, code: usize) -> Result<Self> {
        let len = table_len(carrier, arity)?;
        let mut table = vec![0; len];
        decode_into(code, carrier, &mut table)?;
        Ok(Operation { arity, table: table.into(), carrier })
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// Index of this operation as an element of `A^(A^n)`.
    pub fn code(&self) -> Result<usize> {
        crate::encode_tuple(&self.table, self.carrier)
    }

    pub fn eval(&self, args: &[Elem]) -> Result<Elem> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: args.len() });
        }
        Ok(self.table[crate::encode_tuple(args, self.carrier)?])
    }

    /// Unchecked evaluation for arguments known to be in range.
    #[inline]
    pub(crate) fn at(&self, args: impl DoubleEndedIterator<Item = Elem>) -> Elem {
        self.table[crate::tuple::encode_unchecked(args, self.carrier)]
    }

    pub fn is_projection(&self) -> Option<usize> {
        (0..self.arity).find(|&j| projection(self.carrier, self.arity, j).is_ok_and(|p| &p == self))
    }

    pub(crate) fn same_carrier(&self, other: &Operation) -> Result<()> {
        if self.carrier == other.carrier {
            Ok(())
        } else {
            Err(Error::CarrierMismatch { expected: self.carrier, found: other.carrier })
        }
    }
}

impl fmt::Debug for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operation({}^{} -> {}: {:?})", self.carrier, self.arity, self.carrier, &self.table[..])
    }
}

/// The projection `pi_j : A^n -> A`.
pub fn projection(carrier: usize, arity: usize, j: usize) -> Result<Operation> {
    if j >= arity {
        return Err(Error::ProjectionOutOfRange { index: j, arity });
    }
    if carrier == 0 {
        return Err(Error::EmptyCarrier);
    }
    let len = table_len(carrier, arity)?;
    // Digit j of the index, read off without decoding the whole tuple.
    let period = carrier.pow(j as u32);
    let table: Box<[Elem]> = (0..len).map(|i| ((i / period) % carrier) as Elem).collect();
    Ok(Operation::from_parts(carrier, arity, table))
}

/// `t -> f(g_0(t), .., g_{m-1}(t))`, an operation of the common arity of the `gs`.
///
/// `arity` is only consulted when `gs` is empty (composing a constant).
pub fn compose(f: &Operation, gs: &[Operation], arity: usize) -> Result<Operation> {
    if gs.len() != f.arity {
        return Err(Error::ArityMismatch { expected: f.arity, found: gs.len() });
    }
    let n = gs.first().map_or(arity, Operation::arity);
    for g in gs {
        f.same_carrier(g)?;
        if g.arity != n {
            return Err(Error::ArityMismatch { expected: n, found: g.arity });
        }
    }
    let len = table_len(f.carrier, n)?;
    let table: Box<[Elem]> = (0..len).map(|i| f.at(gs.iter().map(|g| g.table[i]))).collect();
    Ok(Operation::from_parts(f.carrier, n, table))
}

/// The reindexing `xi_*(f)(a) = f(a . xi)` of `f` along `xi : arity(f) -> target_arity`.
pub fn pushforward(f: &Operation, xi: &[usize], target_arity: usize) -> Result<Operation> {
    if xi.len() != f.arity {
        return Err(Error::ArityMismatch { expected: f.arity, found: xi.len() });
    }
    if let Some((position, &value)) = xi.iter().enumerate().find(|(_, &v)| v >= target_arity) {
        return Err(Error::MapOutOfRange { position, value, bound: target_arity });
    }
    let len = table_len(f.carrier, target_arity)?;
    let mut digits = vec![0; target_arity];
    let mut table = Vec::with_capacity(len);
    loop {
        table.push(f.at(xi.iter().map(|&x| digits[x])));
        if !step(&mut digits, f.carrier) {
            break;
        }
    }
    Ok(Operation::from_parts(f.carrier, target_arity, table.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(carrier: usize, arity: usize, table: &[Elem]) -> Operation {
        Operation::new(carrier, arity, table.to_vec()).unwrap()
    }

    #[test]
    fn projection_tables() {
        assert_eq!(projection(2, 1, 0).unwrap().table(), [0, 1]);
        assert_eq!(projection(2, 2, 1).unwrap().table(), [0, 0, 1, 1]);
        assert_eq!(projection(3, 2, 0).unwrap().table(), [0, 1, 2, 0, 1, 2, 0, 1, 2]);
        assert!(matches!(projection(2, 2, 2), Err(Error::ProjectionOutOfRange { .. })));
    }

    #[test]
    fn projection_matches_enumeration() {
        for (carrier, arity) in [(2, 3), (3, 2), (4, 2)] {
            for j in 0..arity {
                let by_fn = Operation::from_fn(carrier, arity, |t| t[j]).unwrap();
                assert_eq!(projection(carrier, arity, j).unwrap(), by_fn);
            }
        }
    }

    #[test]
    fn compose_examples() {
        let not = op(2, 1, &[1, 0]);
        let and = op(2, 2, &[0, 0, 0, 1]);
        assert_eq!(compose(&not, std::slice::from_ref(&not), 1).unwrap().table(), [0, 1]);
        let diag = compose(&and, &[projection(2, 1, 0).unwrap(), projection(2, 1, 0).unwrap()], 1).unwrap();
        assert_eq!(diag.table(), [0, 1]);
        let ps: Vec<_> = (0..2).map(|j| projection(2, 2, j).unwrap()).collect();
        assert_eq!(compose(&and, &ps, 2).unwrap(), and);
    }

    #[test]
    fn compose_constant_uses_given_arity() {
        let c = op(3, 0, &[2]);
        let lifted = compose(&c, &[], 2).unwrap();
        assert_eq!(lifted.table(), [2; 9]);
    }

    #[test]
    fn compose_errors() {
        let and = op(2, 2, &[0, 0, 0, 1]);
        let id = op(2, 1, &[0, 1]);
        assert!(matches!(compose(&and, std::slice::from_ref(&id), 1), Err(Error::ArityMismatch { .. })));
        let id3 = op(3, 1, &[0, 1, 2]);
        assert!(matches!(compose(&and, &[id, id3], 1), Err(Error::CarrierMismatch { .. })));
    }

    #[test]
    fn pushforward_examples() {
        let id = op(2, 1, &[0, 1]);
        assert_eq!(pushforward(&id, &[1], 2).unwrap(), projection(2, 2, 1).unwrap());
        let and = op(2, 2, &[0, 0, 0, 1]);
        assert_eq!(pushforward(&and, &[0, 0], 1).unwrap().table(), [0, 1]);
        let xor = op(2, 2, &[0, 1, 1, 0]);
        assert_eq!(pushforward(&xor, &[0, 1], 2).unwrap(), xor);
        assert!(matches!(pushforward(&xor, &[0, 2], 2), Err(Error::MapOutOfRange { .. })));
    }

    #[test]
    fn table_validation() {
        assert!(matches!(Operation::new(2, 2, vec![0, 1, 1]), Err(Error::TableLength { .. })));
        assert!(matches!(
            Operation::new(2, 1, vec![0, 2]),
            Err(Error::EntryOutOfRange { index: 1, value: 2, .. })
        ));
        assert!(matches!(Operation::new(0, 0, vec![0]), Err(Error::EmptyCarrier)));
    }

    #[test]
    fn nullary_is_a_constant() {
        let c = Operation::constant(4, 0, 3).unwrap();
        assert_eq!(c.table(), [3]);
        assert_eq!(c.eval(&[]).unwrap(), 3);
    }

    #[test]
    fn code_roundtrip() {
        let xor = op(2, 2, &[0, 1, 1, 0]);
        let code = xor.code().unwrap();
        assert_eq!(code, 6);
        assert_eq!(Operation::from_code(2, 2, code).unwrap(), xor);
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let a = op(2, 1, &[0, 1]);
        let b = op(2, 1, &[1, 0]);
        assert!(a < b);
        // Encoding order would put [1, 0] (code 1) before [0, 1] (code 2).
        assert!(b.code().unwrap() < a.code().unwrap());
    }
}
