//! Clone slices `<F>(n)`: the subalgebra of `O_A(n)` generated by the
//! projections under pointwise application of the generators in `F`.
//!
//! The closure runs in passes. Each pass fixes the member count `k` at its
//! start and applies every generator, in order, to every tuple over base `k`
//! in encoding order that has not been tried in an earlier pass. Discoveries
//! are appended in that order, which makes both the member list and the
//! derivation certificates deterministic and shortest-first.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::Range;
use core::hash::BuildHasher;

use hashbrown::HashTable;

use crate::guard::table_len;
use crate::{compose, projection, Algebra, Elem, Error, OpSet, Operation, Result};

/// Default cap on the number of members of a clone slice.
pub const DEFAULT_MEMBER_LIMIT: usize = 1 << 20;

/// Calls `f` on every `m`-tuple over `0..total` in encoding order that has at
/// least one component `>= old`; when `old == 0` every tuple qualifies,
/// including the empty one. Stops early when `f` returns false.
pub(crate) fn for_each_tuple_with_new(
    m: usize,
    old: usize,
    total: usize,
    buf: &mut [Elem],
    mut f: impl FnMut(&[Elem]) -> bool,
) -> bool {
    debug_assert_eq!(buf.len(), m);
    if m == 0 {
        return old != 0 || f(buf);
    }
    rec(m - 1, old == 0, old, total, buf, &mut f)
}

fn rec(pos: usize, has_new: bool, old: usize, total: usize, buf: &mut [Elem], f: &mut impl FnMut(&[Elem]) -> bool) -> bool {
    if pos == 0 {
        let start = if has_new { 0 } else { old };
        for v in start..total {
            buf[0] = v as Elem;
            if !f(buf) {
                return false;
            }
        }
        return true;
    }
    for v in 0..total {
        buf[pos] = v as Elem;
        if !rec(pos - 1, has_new || v >= old, old, total, buf, f) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Provenance {
    Projection(usize),
    Apply { generator: usize, args: Box<[Elem]> },
}

/// A term over projections and generators that evaluates to a clone member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationCertificate {
    Projection(usize),
    /// A generator applied pointwise; nullary generators have no arguments.
    Apply { generator: usize, args: Vec<DerivationCertificate> },
}

impl DerivationCertificate {
    /// Evaluates the term at arity `n`, independently of the closure that produced it.
    pub fn replay(&self, generators: &[Operation], carrier: usize, n: usize) -> Result<Operation> {
        match self {
            DerivationCertificate::Projection(j) => projection(carrier, n, *j),
            DerivationCertificate::Apply { generator, args } => {
                let g = generators
                    .get(*generator)
                    .ok_or(Error::Precondition("certificate names a missing generator"))?;
                let args = args.iter().map(|a| a.replay(generators, carrier, n)).collect::<Result<Vec<_>>>()?;
                let out = compose(g, &args, n)?;
                if out.carrier() != carrier {
                    return Err(Error::CarrierMismatch { expected: carrier, found: out.carrier() });
                }
                Ok(out)
            }
        }
    }

    /// Prefix notation, e.g. `XOR(p0, p0)`; nullary generators print bare.
    pub fn render(&self, names: &[&str]) -> String {
        let mut out = String::new();
        self.render_into(names, &mut out);
        out
    }

    fn render_into(&self, names: &[&str], out: &mut String) {
        match self {
            DerivationCertificate::Projection(j) => {
                let _ = write!(out, "p{j}");
            }
            DerivationCertificate::Apply { generator, args } => {
                match names.get(*generator) {
                    Some(name) => out.push_str(name),
                    None => {
                        let _ = write!(out, "g{generator}");
                    }
                }
                if !args.is_empty() {
                    out.push('(');
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            out.push_str(", ");
                        }
                        a.render_into(names, out);
                    }
                    out.push(')');
                }
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            DerivationCertificate::Projection(_) => 1,
            DerivationCertificate::Apply { args, .. } => 1 + args.iter().map(Self::size).sum::<usize>(),
        }
    }
}

/// A computed clone slice together with how each member was first reached.
#[derive(Debug, Clone)]
pub struct CloneSlice {
    generators: Vec<Operation>,
    ops: OpSet,
    provenance: Vec<Provenance>,
    // discovery index of each member of `ops`, by sorted position
    discovery: Vec<Elem>,
}

impl CloneSlice {
    pub fn ops(&self) -> &OpSet {
        &self.ops
    }

    pub fn into_ops(self) -> OpSet {
        self.ops
    }

    pub fn generators(&self) -> &[Operation] {
        &self.generators
    }

    pub fn contains(&self, op: &Operation) -> bool {
        self.ops.contains(op)
    }

    pub fn certificate(&self, op: &Operation) -> Option<DerivationCertificate> {
        let pos = self.ops.members().binary_search(op).ok()?;
        Some(self.build(self.discovery[pos] as usize))
    }

    fn build(&self, index: usize) -> DerivationCertificate {
        match &self.provenance[index] {
            Provenance::Projection(j) => DerivationCertificate::Projection(*j),
            Provenance::Apply { generator, args } => DerivationCertificate::Apply {
                generator: *generator,
                args: args.iter().map(|&a| self.build(a as usize)).collect(),
            },
        }
    }
}

/// Member storage for the closure driver.
trait Store {
    fn len(&self) -> usize;
    /// Applies generator `g` to the members at `args`; true if the result was new.
    fn apply(&mut self, g: usize, args: &[Elem]) -> bool;
    /// Applies binary generator `g` to `(t0, outer)` for every `t0` in `inner`,
    /// calling `visit(tuple, len, full)` for each tuple that produced a new member.
    fn apply_row(&mut self, g: usize, outer: Elem, inner: Range<Elem>, visit: &mut impl FnMut(&[Elem], usize, bool) -> bool) -> bool {
        for t0 in inner {
            let args = [t0, outer];
            if self.apply(g, &args) && !visit(&args, self.len(), self.is_full()) {
                return false;
            }
        }
        true
    }
    /// Whether every operation of the arity is already a member.
    fn is_full(&self) -> bool;
    fn into_tables(self) -> Vec<Box<[Elem]>>;
}

/// Tables stored flat, deduplicated through a hash table of member indices.
struct TableStore<'a> {
    len: usize,
    gens: &'a [Operation],
    tables: Vec<Elem>,
    count: usize,
    space: Option<usize>,
    index: HashTable<Elem>,
    hasher: hashbrown::DefaultHashBuilder,
    scratch: Vec<Elem>,
}

impl<'a> TableStore<'a> {
    fn new(carrier: usize, len: usize, gens: &'a [Operation]) -> Self {
        TableStore {
            len,
            gens,
            tables: Vec::new(),
            count: 0,
            space: crate::checked_pow(carrier, len),
            index: HashTable::new(),
            hasher: Default::default(),
            scratch: vec![0; len],
        }
    }

    fn member(&self, i: usize) -> &[Elem] {
        &self.tables[i * self.len..(i + 1) * self.len]
    }

    fn insert_scratch(&mut self) -> bool {
        let hash = self.hasher.hash_one(&self.scratch[..]);
        let (tables, len, scratch) = (&self.tables, self.len, &self.scratch);
        if self.index.find(hash, |&i| tables[i as usize * len..(i as usize + 1) * len] == scratch[..]).is_some() {
            return false;
        }
        let i = self.count as Elem;
        self.tables.extend_from_slice(&self.scratch);
        self.count += 1;
        let (tables, hasher) = (&self.tables, &self.hasher);
        self.index
            .insert_unique(hash, i, |&j| hasher.hash_one(&tables[j as usize * len..(j as usize + 1) * len]));
        true
    }

    fn push(&mut self, table: &[Elem]) -> bool {
        self.scratch.copy_from_slice(table);
        self.insert_scratch()
    }
}

impl Store for TableStore<'_> {
    #[allow(clippy::misnamed_getters)]
    fn len(&self) -> usize {
        self.count
    }

    fn apply(&mut self, g: usize, args: &[Elem]) -> bool {
        let op = &self.gens[g];
        for i in 0..self.len {
            let v = op.at(args.iter().map(|&a| self.tables[a as usize * self.len + i]));
            self.scratch[i] = v;
        }
        self.insert_scratch()
    }

    fn is_full(&self) -> bool {
        self.space == Some(self.count)
    }

    fn into_tables(self) -> Vec<Box<[Elem]>> {
        (0..self.count).map(|i| self.member(i).into()).collect()
    }
}

/// Boolean carrier with at most 64 table positions: tables packed into bits.
struct BitStore {
    len: usize,
    full: u64,
    members: Vec<u64>,
    // satisfying input patterns of each generator, one bit per argument
    minterms: Vec<Vec<u32>>,
    arities: Vec<usize>,
    seen: Seen,
}

enum Seen {
    Dense(Vec<u64>),
    Sparse(hashbrown::HashSet<u64>),
}

impl Seen {
    fn insert(&mut self, mask: u64) -> bool {
        match self {
            Seen::Dense(bits) => {
                let (w, b) = ((mask >> 6) as usize, mask & 63);
                let fresh = bits[w] & (1 << b) == 0;
                bits[w] |= 1 << b;
                fresh
            }
            Seen::Sparse(set) => set.insert(mask),
        }
    }
}

const DENSE_BITS: usize = 24;

impl BitStore {
    fn new(len: usize, gens: &[Operation]) -> Self {
        let full = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        let seen = if len <= DENSE_BITS {
            Seen::Dense(vec![0; (1usize << len).div_ceil(64)])
        } else {
            Seen::Sparse(hashbrown::HashSet::new())
        };
        let minterms = gens
            .iter()
            .map(|g| (0..g.table().len() as u32).filter(|&t| g.table()[t as usize] == 1).collect())
            .collect();
        BitStore {
            len,
            full,
            members: Vec::new(),
            minterms,
            arities: gens.iter().map(Operation::arity).collect(),
            seen,
        }
    }

    fn push(&mut self, mask: u64) -> bool {
        let fresh = self.seen.insert(mask);
        if fresh {
            self.members.push(mask);
        }
        fresh
    }

    fn pack(table: &[Elem]) -> u64 {
        table.iter().enumerate().fold(0, |acc, (i, &v)| acc | ((v as u64) << i))
    }
}

impl Store for BitStore {
    fn len(&self) -> usize {
        self.members.len()
    }

    fn apply(&mut self, g: usize, args: &[Elem]) -> bool {
        let arity = self.arities[g];
        let mut out = 0u64;
        for &t in &self.minterms[g] {
            let mut term = self.full;
            for (j, &a) in args.iter().enumerate().take(arity) {
                let x = self.members[a as usize];
                term &= if t >> j & 1 == 1 { x } else { !x };
            }
            out |= term;
        }
        self.push(out & self.full)
    }

    fn apply_row(&mut self, g: usize, outer: Elem, inner: Range<Elem>, visit: &mut impl FnMut(&[Elem], usize, bool) -> bool) -> bool {
        debug_assert_eq!(self.arities[g], 2);
        // With the second argument fixed to x, g(y, x) = (y & hi) | (!y & lo).
        let x = self.members[outer as usize];
        let (mut hi, mut lo) = (0u64, 0u64);
        for &t in &self.minterms[g] {
            let lit = if t >> 1 == 1 { x } else { !x };
            if t & 1 == 1 {
                hi |= lit;
            } else {
                lo |= lit;
            }
        }
        let (hi, lo, full) = (hi & self.full, lo & self.full, self.full);
        let (start, end) = (inner.start as usize, inner.end as usize);
        if let Seen::Dense(bits) = &mut self.seen {
            // Fused hot loop for the common small-table case.
            for t0 in start..end {
                let r = (lo ^ ((hi ^ lo) & self.members[t0])) & full;
                let (w, b) = ((r >> 6) as usize, r & 63);
                if bits[w] >> b & 1 == 0 {
                    bits[w] |= 1 << b;
                    self.members.push(r);
                    let (len, is_full) = (self.members.len(), self.len < 64 && self.members.len() as u64 == 1 << self.len);
                    if !visit(&[t0 as Elem, outer], len, is_full) {
                        return false;
                    }
                }
            }
            return true;
        }
        for t0 in start..end {
            let r = (lo ^ ((hi ^ lo) & self.members[t0])) & full;
            if self.push(r) && !visit(&[t0 as Elem, outer], self.members.len(), self.is_full()) {
                return false;
            }
        }
        true
    }

    fn is_full(&self) -> bool {
        self.len < 64 && self.members.len() as u64 == 1u64 << self.len
    }

    fn into_tables(self) -> Vec<Box<[Elem]>> {
        self.members
            .iter()
            .map(|&m| (0..self.len).map(|i| ((m >> i) & 1) as Elem).collect())
            .collect()
    }
}

fn check_generators(gens: &[Operation], carrier: usize) -> Result<()> {
    if carrier == 0 {
        return Err(Error::EmptyCarrier);
    }
    for g in gens {
        if g.carrier() != carrier {
            return Err(Error::CarrierMismatch { expected: carrier, found: g.carrier() });
        }
    }
    Ok(())
}

/// Runs the pass structure over any store; returns false if `limit` was exceeded.
fn drive<S: Store>(store: &mut S, gens: &[Operation], limit: usize, provenance: &mut Vec<Provenance>) -> bool {
    let mut old = 0;
    let max_arity = gens.iter().map(Operation::arity).max().unwrap_or(0);
    let mut buf = vec![0 as Elem; max_arity];
    let symmetric: Vec<bool> = gens.iter().map(is_symmetric_binary).collect();
    loop {
        let total = store.len();
        let mut within = true;
        for (gi, g) in gens.iter().enumerate() {
            let mut visit = |args: &[Elem], len: usize, full: bool| {
                provenance.push(Provenance::Apply { generator: gi, args: args.into() });
                if len > limit {
                    within = false;
                    return false;
                }
                !full
            };
            let completed = if g.arity() == 2 {
                // One row per value of the second argument, the slower-moving digit.
                (0..total).all(|t1| {
                    let mut start = if old == 0 || t1 >= old { 0 } else { old };
                    if symmetric[gi] {
                        // (t0, t1) and (t1, t0) give the same member and the one
                        // with t0 >= t1 comes first in encoding order.
                        start = start.max(t1);
                    }
                    start >= total || store.apply_row(gi, t1 as Elem, start as Elem..total as Elem, &mut visit)
                })
            } else {
                let m = g.arity();
                for_each_tuple_with_new(m, old, total, &mut buf[..m], |args| {
                    !store.apply(gi, args) || visit(args, store.len(), store.is_full())
                })
            };
            if !completed {
                break;
            }
        }
        if !within {
            return false;
        }
        if store.len() == total || store.is_full() {
            return true;
        }
        old = total;
    }
}

fn is_symmetric_binary(g: &Operation) -> bool {
    let k = g.carrier();
    g.arity() == 2 && (0..k).all(|a| (0..k).all(|b| g.table()[a + k * b] == g.table()[b + k * a]))
}

fn finish(
    carrier: usize,
    n: usize,
    gens: &[Operation],
    tables: Vec<Box<[Elem]>>,
    provenance: Vec<Provenance>,
) -> CloneSlice {
    let mut indexed: Vec<(Operation, Elem)> = tables
        .into_iter()
        .enumerate()
        .map(|(i, t)| (Operation::from_parts(carrier, n, t), i as Elem))
        .collect();
    indexed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let (members, discovery): (Vec<_>, Vec<_>) = indexed.into_iter().unzip();
    CloneSlice {
        generators: gens.to_vec(),
        ops: OpSet::from_sorted_unchecked(carrier, n, members),
        provenance,
        discovery,
    }
}

fn limit_error(limit: usize, slice: CloneSlice) -> Error {
    Error::CloneLimit { limit, partial: Box::new(slice.into_ops()) }
}

/// `<F>(n)` as a [`CloneSlice`], with certificates available for every member.
pub fn clone_slice(gens: &[Operation], carrier: usize, n: usize, limit: usize) -> Result<CloneSlice> {
    check_generators(gens, carrier)?;
    let len = table_len(carrier, n)?;
    let bit_packed = carrier == 2 && len <= 64 && gens.iter().all(|g| g.arity() <= 16);
    if bit_packed {
        closure_bits(gens, n, len, limit)
    } else {
        closure_tables(gens, carrier, n, len, limit)
    }
}

fn seed_projections(carrier: usize, n: usize, provenance: &mut Vec<Provenance>) -> Result<Vec<Operation>> {
    let ps = (0..n).map(|j| projection(carrier, n, j)).collect::<Result<Vec<_>>>()?;
    provenance.extend((0..n).map(Provenance::Projection));
    Ok(ps)
}

fn closure_tables(gens: &[Operation], carrier: usize, n: usize, len: usize, limit: usize) -> Result<CloneSlice> {
    let mut provenance = Vec::new();
    let mut store = TableStore::new(carrier, len, gens);
    for p in seed_projections(carrier, n, &mut provenance)? {
        store.push(p.table());
    }
    let within = store.len() <= limit && drive(&mut store, gens, limit, &mut provenance);
    let slice = finish(carrier, n, gens, store.into_tables(), provenance);
    if within {
        Ok(slice)
    } else {
        Err(limit_error(limit, slice))
    }
}

fn closure_bits(gens: &[Operation], n: usize, len: usize, limit: usize) -> Result<CloneSlice> {
    let mut provenance = Vec::new();
    let mut store = BitStore::new(len, gens);
    for p in seed_projections(2, n, &mut provenance)? {
        store.push(BitStore::pack(p.table()));
    }
    let within = store.len() <= limit && drive(&mut store, gens, limit, &mut provenance);
    let slice = finish(2, n, gens, store.into_tables(), provenance);
    if within {
        Ok(slice)
    } else {
        Err(limit_error(limit, slice))
    }
}

/// `<F>(n)`, canonically sorted. `carrier` is needed when `gens` is empty.
pub fn generate_clone_slice(gens: &[Operation], carrier: usize, n: usize, limit: usize) -> Result<OpSet> {
    clone_slice(gens, carrier, n, limit).map(CloneSlice::into_ops)
}

/// Whether `f` lies in the clone generated by `gens`, with a certificate if so.
pub fn clone_membership(f: &Operation, gens: &[Operation]) -> Result<Option<DerivationCertificate>> {
    let slice = clone_slice(gens, f.carrier(), f.arity(), DEFAULT_MEMBER_LIMIT)?;
    Ok(slice.certificate(f))
}

/// The derived operations `<Σ^A>(n)` of an algebra.
pub fn derived_clone(algebra: &Algebra, n: usize) -> Result<OpSet> {
    derived_clone_slice(algebra, n, DEFAULT_MEMBER_LIMIT).map(CloneSlice::into_ops)
}

pub fn derived_clone_slice(algebra: &Algebra, n: usize, limit: usize) -> Result<CloneSlice> {
    clone_slice(algebra.ops(), algebra.carrier(), n, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn op(carrier: usize, arity: usize, table: &[Elem]) -> Operation {
        Operation::new(carrier, arity, table.to_vec()).unwrap()
    }

    fn xor() -> Operation {
        op(2, 2, &[0, 1, 1, 0])
    }

    fn tables(s: &OpSet) -> Vec<Vec<Elem>> {
        s.iter().map(|o| o.table().to_vec()).collect()
    }

    #[test]
    fn tuples_with_new_component() {
        let mut seen = Vec::new();
        let mut buf = [0; 2];
        for_each_tuple_with_new(2, 2, 3, &mut buf, |t| {
            seen.push(t.to_vec());
            true
        });
        assert_eq!(seen, [vec![2, 0], vec![2, 1], vec![0, 2], vec![1, 2], vec![2, 2]]);
        let mut count = 0;
        for_each_tuple_with_new(0, 0, 0, &mut [], |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
        for_each_tuple_with_new(0, 1, 1, &mut [], |_| panic!("empty tuple is not new after the first pass"));
    }

    #[test]
    fn xor_unary_slice() {
        let s = generate_clone_slice(&[xor()], 2, 1, DEFAULT_MEMBER_LIMIT).unwrap();
        assert_eq!(tables(&s), [vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn empty_generators_give_projections() {
        let s = generate_clone_slice(&[], 2, 2, DEFAULT_MEMBER_LIMIT).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains(&projection(2, 2, 0).unwrap()));
        assert!(s.contains(&projection(2, 2, 1).unwrap()));
        assert!(generate_clone_slice(&[], 3, 0, DEFAULT_MEMBER_LIMIT).unwrap().is_empty());
    }

    #[test]
    fn gf2_binary_slice_is_linear() {
        let gens = [xor(), op(2, 0, &[0]), op(2, 1, &[0, 1]), op(2, 1, &[0, 0])];
        let s = generate_clone_slice(&gens, 2, 2, DEFAULT_MEMBER_LIMIT).unwrap();
        assert_eq!(tables(&s), [vec![0, 0, 0, 0], vec![0, 0, 1, 1], vec![0, 1, 0, 1], vec![0, 1, 1, 0]]);
    }

    #[test]
    fn membership_certificates() {
        let p0 = projection(2, 1, 0).unwrap();
        let cert = clone_membership(&p0, &[xor()]).unwrap().unwrap();
        assert_eq!(cert, DerivationCertificate::Projection(0));

        let c0 = op(2, 1, &[0, 0]);
        let cert = clone_membership(&c0, &[xor()]).unwrap().unwrap();
        assert_eq!(cert.render(&["XOR"]), "XOR(p0, p0)");
        assert_eq!(cert.replay(&[xor()], 2, 1).unwrap(), c0);

        let not = op(2, 1, &[1, 0]);
        assert!(clone_membership(&not, &[xor()]).unwrap().is_none());
    }

    #[test]
    fn nullary_generators_render_bare() {
        let zero = op(2, 0, &[0]);
        let slice = clone_slice(std::slice::from_ref(&zero), 2, 1, DEFAULT_MEMBER_LIMIT).unwrap();
        let c0 = op(2, 1, &[0, 0]);
        let cert = slice.certificate(&c0).unwrap();
        assert_eq!(cert.render(&["zero"]), "zero");
        assert_eq!(cert.replay(&[zero], 2, 1).unwrap(), c0);
    }

    #[test]
    fn limit_carries_partial_set() {
        let nand = op(2, 2, &[1, 1, 1, 0]);
        match generate_clone_slice(&[nand], 2, 2, 5) {
            Err(Error::CloneLimit { limit: 5, partial }) => assert!(partial.len() > 5),
            other => panic!("expected limit error, got {other:?}"),
        }
    }

    #[test]
    fn nand_generates_everything() {
        let nand = op(2, 2, &[1, 1, 1, 0]);
        let s = generate_clone_slice(&[nand], 2, 2, DEFAULT_MEMBER_LIMIT).unwrap();
        assert_eq!(s.len(), 16);
    }

    #[test]
    fn bit_and_table_engines_agree() {
        let sets: Vec<Vec<Operation>> = vec![
            vec![xor()],
            vec![op(2, 2, &[1, 1, 1, 0])],
            vec![op(2, 2, &[0, 1, 0, 0]), op(2, 0, &[1])],
            vec![op(2, 1, &[1, 0]), op(2, 2, &[0, 0, 0, 1])],
            vec![op(2, 3, &[0, 0, 0, 1, 0, 1, 1, 1])],
        ];
        for gens in &sets {
            for n in 0..=3 {
                let len = 1 << n;
                let a = closure_bits(gens, n, len, DEFAULT_MEMBER_LIMIT).unwrap();
                let b = closure_tables(gens, 2, n, len, DEFAULT_MEMBER_LIMIT).unwrap();
                assert_eq!(a.ops(), b.ops());
                assert_eq!(a.provenance, b.provenance);
            }
        }
    }

    #[test]
    fn derived_clone_of_algebra_uses_names() {
        let alg = Algebra::new(2, vec![("XOR".to_string(), xor())]).unwrap();
        let slice = derived_clone_slice(&alg, 1, DEFAULT_MEMBER_LIMIT).unwrap();
        assert_eq!(slice.ops().len(), 2);
        let empty = Algebra::new(3, vec![]).unwrap();
        assert_eq!(derived_clone(&empty, 2).unwrap().len(), 2);
    }

    #[test]
    fn mixed_carrier_rejected() {
        let g = op(3, 1, &[0, 1, 2]);
        assert!(matches!(generate_clone_slice(&[g], 2, 1, 10), Err(Error::CarrierMismatch { .. })));
    }
}
