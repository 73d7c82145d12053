use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::guard::table_len;
use crate::tuple::{encode_unchecked, step};
use crate::{Elem, Error, Operation, Result};

/// Operation symbols with their arities, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    symbols: Vec<(String, usize)>,
}

impl Signature {
    pub fn new(symbols: Vec<(String, usize)>) -> Result<Self> {
        for (i, (name, _)) in symbols.iter().enumerate() {
            if symbols[..i].iter().any(|(other, _)| other == name) {
                return Err(Error::DuplicateSymbol(name.clone()));
            }
        }
        Ok(Signature { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.symbols.iter().map(|(n, a)| (n.as_str(), *a))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.symbols[i].0
    }

    pub fn arity(&self, i: usize) -> usize {
        self.symbols[i].1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|(n, _)| n == name)
    }
}

/// A finite algebra: a carrier `{0, .., carrier-1}` with one table per symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    carrier: usize,
    signature: Signature,
    ops: Vec<Operation>,
}

impl Algebra {
    pub fn new(carrier: usize, ops: Vec<(String, Operation)>) -> Result<Self> {
        let signature = Signature::new(ops.iter().map(|(n, op)| (n.clone(), op.arity())).collect())?;
        Algebra::with_signature(carrier, signature, ops.into_iter().map(|(_, op)| op).collect())
    }

    pub fn with_signature(carrier: usize, signature: Signature, ops: Vec<Operation>) -> Result<Self> {
        if carrier == 0 {
            return Err(Error::EmptyCarrier);
        }
        if ops.len() != signature.len() {
            return Err(Error::SignatureMismatch);
        }
        for (op, (_, arity)) in ops.iter().zip(signature.iter()) {
            if op.carrier() != carrier {
                return Err(Error::CarrierMismatch { expected: carrier, found: op.carrier() });
            }
            if op.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: op.arity() });
            }
        }
        Ok(Algebra { carrier, signature, ops })
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn ops(&self) -> &[Operation] {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Option<&Operation> {
        self.signature.index_of(name).map(|i| &self.ops[i])
    }

    pub fn named_ops(&self) -> impl Iterator<Item = (&str, &Operation)> {
        self.signature.iter().map(|(n, _)| n).zip(&self.ops)
    }

    /// The power `A^X` with pointwise operations, `|X| = exponent`.
    ///
    /// Elements are indexed by `encode_tuple` over base `|A|` with length
    /// `exponent`, so an operation of arity `n` sits at index `op.code()` in
    /// the power with exponent `|A|^n`.
    pub fn power(&self, exponent: usize) -> Result<Algebra> {
        let base = self.carrier;
        let size = table_len(base, exponent)?;
        // digits[x * exponent + i] = i-th coordinate of element x
        let mut digits = vec![0 as Elem; size * exponent];
        let mut current = vec![0 as Elem; exponent];
        for x in 0..size {
            digits[x * exponent..(x + 1) * exponent].copy_from_slice(&current);
            step(&mut current, base);
        }
        let mut ops = Vec::with_capacity(self.ops.len());
        for op in &self.ops {
            let m = op.arity();
            let len = table_len(size, m)?;
            let mut table = Vec::with_capacity(len);
            let mut args = vec![0 as Elem; m];
            loop {
                let value = (0..exponent).rev().fold(0usize, |acc, i| {
                    let v = op.at(args.iter().map(|&x| digits[x as usize * exponent + i]));
                    acc * base + v as usize
                });
                table.push(value as Elem);
                if !step(&mut args, size) {
                    break;
                }
            }
            ops.push(Operation::from_parts(size, m, table.into()));
        }
        Ok(Algebra { carrier: size, signature: self.signature.clone(), ops })
    }

    /// Whether `self` has the same signature (names and arities) as `other`.
    pub fn same_signature(&self, other: &Algebra) -> Result<()> {
        if self.signature == other.signature {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    /// The subuniverse generated by `gens`, sorted ascending.
    pub fn subuniverse(&self, gens: &[Elem]) -> Result<Vec<Elem>> {
        let mut member = vec![false; self.carrier];
        let mut order = Vec::new();
        for &g in gens {
            if g as usize >= self.carrier {
                return Err(Error::EntryOutOfRange {
                    name: None,
                    index: 0,
                    value: g as u64,
                    carrier: self.carrier,
                });
            }
        }
        self.close_from(&mut member, &mut order, gens);
        order.sort_unstable();
        Ok(order)
    }

    /// Semi-naive closure: each element is combined with everything found before it.
    pub(crate) fn close_from(&self, member: &mut [bool], order: &mut Vec<Elem>, seeds: &[Elem]) {
        let push = |x: Elem, member: &mut [bool], order: &mut Vec<Elem>| {
            if !member[x as usize] {
                member[x as usize] = true;
                order.push(x);
            }
        };
        let start = order.len();
        if start == 0 {
            for op in self.ops.iter().filter(|op| op.arity() == 0) {
                push(op.table()[0], member, order);
            }
        }
        for &s in seeds {
            push(s, member, order);
        }
        let mut q = if start == 0 { 0 } else { start };
        let mut args = Vec::new();
        while q < order.len() {
            for op in self.ops.iter().filter(|op| op.arity() > 0) {
                args.clear();
                args.resize(op.arity(), 0);
                crate::clone::for_each_tuple_with_new(op.arity(), q, q + 1, &mut args, |idx| {
                    let x = op.at(idx.iter().map(|&i| order[i as usize]));
                    push(x, member, order);
                    true
                });
            }
            q += 1;
        }
    }

    /// The subalgebra on a subuniverse, relabelled `0..len`, with its embedding.
    pub fn restrict(&self, subuniverse: &[Elem]) -> Result<(Algebra, Vec<Elem>)> {
        let mut index = vec![Elem::MAX; self.carrier];
        for (i, &x) in subuniverse.iter().enumerate() {
            index[x as usize] = i as Elem;
        }
        let k = subuniverse.len();
        let mut ops = Vec::with_capacity(self.ops.len());
        for op in &self.ops {
            let len = table_len(k, op.arity())?;
            let mut table = Vec::with_capacity(len);
            let mut args = vec![0 as Elem; op.arity()];
            loop {
                let v = index[op.at(args.iter().map(|&i| subuniverse[i as usize])) as usize];
                if v == Elem::MAX {
                    return Err(Error::Precondition("subset is not closed under the operations"));
                }
                table.push(v);
                if !step(&mut args, k) {
                    break;
                }
            }
            ops.push(Operation::new(k, op.arity(), table)?);
        }
        let sub = Algebra { carrier: k, signature: self.signature.clone(), ops };
        Ok((sub, subuniverse.to_vec()))
    }

    /// Evaluates symbol `i` on a tuple without range checks beyond debug builds.
    #[inline]
    pub(crate) fn apply(&self, i: usize, args: &[Elem]) -> Elem {
        self.ops[i].table()[encode_unchecked(args.iter().copied(), self.carrier)]
    }
}
