//! Homomorphisms between finite algebras of one signature.
//!
//! [`for_each_hom`] backtracks over the values of a greedy generating set of
//! the source. After every assignment the partial map is closed under all
//! basic operations, so each branch either fails early on a conflict or ends
//! with a total map that already satisfies every equation.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::clone::for_each_tuple_with_new;
use crate::{checked_pow, Algebra, Elem, Error, Operation, Result, Tuples};

/// A total map between two algebras of the same signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    values: Vec<Elem>,
}

impl Homomorphism {
    /// Checks that `values` is a homomorphism before wrapping it.
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, values: Vec<Elem>) -> Result<Self> {
        if is_hom(&values, &source, &target)?.is_some() {
            return Err(Error::Precondition("map does not preserve the basic operations"));
        }
        Ok(Homomorphism { source, target, values })
    }

    pub(crate) fn new_unchecked(source: Arc<Algebra>, target: Arc<Algebra>, values: Vec<Elem>) -> Self {
        Homomorphism { source, target, values }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.values[x as usize]
    }

    pub fn into_values(self) -> Vec<Elem> {
        self.values
    }
}

/// A basic operation and source tuple on which a map fails to commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomViolation {
    pub symbol: usize,
    pub args: Vec<Elem>,
}

/// Exhaustive homomorphism check; returns the first violation in
/// (symbol, encoded tuple) order.
pub fn is_hom(map: &[Elem], source: &Algebra, target: &Algebra) -> Result<Option<HomViolation>> {
    source.same_signature(target)?;
    if map.len() != source.carrier() {
        return Err(Error::TableLength { name: None, expected: source.carrier(), found: map.len() });
    }
    if let Some((index, &value)) = map.iter().enumerate().find(|(_, &v)| v as usize >= target.carrier()) {
        return Err(Error::EntryOutOfRange { name: None, index, value: value as u64, carrier: target.carrier() });
    }
    let mut image = Vec::new();
    for (symbol, (s_op, t_op)) in source.ops().iter().zip(target.ops()).enumerate() {
        for (index, args) in Tuples::new(source.carrier(), s_op.arity()).enumerate() {
            image.clear();
            image.extend(args.iter().map(|&a| map[a as usize]));
            if map[s_op.table()[index] as usize] != t_op.at(image.iter().copied()) {
                return Ok(Some(HomViolation { symbol, args }));
            }
        }
    }
    Ok(None)
}

/// Greedy generating set: repeatedly adds the smallest element outside the
/// subalgebra generated so far. Not necessarily minimum.
pub fn find_generating_set(algebra: &Algebra) -> Vec<Elem> {
    let mut member = vec![false; algebra.carrier()];
    let mut order = Vec::new();
    algebra.close_from(&mut member, &mut order, &[]);
    let mut gens = Vec::new();
    for x in 0..algebra.carrier() as Elem {
        if !member[x as usize] {
            gens.push(x);
            algebra.close_from(&mut member, &mut order, &[x]);
        }
    }
    gens
}

const UNSET: Elem = Elem::MAX;

struct Search<'a> {
    source: &'a Algebra,
    target: &'a Algebra,
    values: Vec<Elem>,
    order: Vec<Elem>,
    processed: usize,
    buf: Vec<Elem>,
    s_args: Vec<Elem>,
    t_args: Vec<Elem>,
}

impl Search<'_> {
    fn assign(values: &mut [Elem], order: &mut Vec<Elem>, s: Elem, t: Elem) -> bool {
        match values[s as usize] {
            UNSET => {
                values[s as usize] = t;
                order.push(s);
                true
            }
            v => v == t,
        }
    }

    /// Closes the partial map under every basic operation; false on conflict.
    fn propagate(&mut self) -> bool {
        while self.processed < self.order.len() {
            let q = self.processed;
            for (i, op) in self.source.ops().iter().enumerate() {
                let m = op.arity();
                if m == 0 {
                    continue;
                }
                self.buf.resize(m, 0);
                let (values, order, s_args, t_args) = (&mut self.values, &mut self.order, &mut self.s_args, &mut self.t_args);
                let (source, target) = (self.source, self.target);
                let ok = for_each_tuple_with_new(m, q, q + 1, &mut self.buf, |idx| {
                    s_args.clear();
                    s_args.extend(idx.iter().map(|&k| order[k as usize]));
                    t_args.clear();
                    t_args.extend(s_args.iter().map(|&s| values[s as usize]));
                    let s = source.apply(i, s_args);
                    let t = target.apply(i, t_args);
                    Self::assign(values, order, s, t)
                });
                if !ok {
                    return false;
                }
            }
            self.processed += 1;
        }
        true
    }

    fn undo(&mut self, order_len: usize, processed: usize) {
        for &s in &self.order[order_len..] {
            self.values[s as usize] = UNSET;
        }
        self.order.truncate(order_len);
        self.processed = processed;
    }

    fn run(&mut self, gens: &[Elem], visit: &mut impl FnMut(&[Elem]) -> bool) -> bool {
        let Some((&g, rest)) = gens.split_first() else {
            debug_assert_eq!(self.order.len(), self.source.carrier());
            return visit(&self.values);
        };
        if self.values[g as usize] != UNSET {
            return self.run(rest, visit);
        }
        let saved = (self.order.len(), self.processed);
        for v in 0..self.target.carrier() as Elem {
            Self::assign(&mut self.values, &mut self.order, g, v);
            let keep_going = !self.propagate() || self.run(rest, visit);
            self.undo(saved.0, saved.1);
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Calls `visit` with every homomorphism `source -> target`, in lexicographic
/// order of the values on the generating set. Returns false if `visit` stopped
/// the search.
pub fn for_each_hom(source: &Algebra, target: &Algebra, mut visit: impl FnMut(&[Elem]) -> bool) -> Result<bool> {
    source.same_signature(target)?;
    let gens = find_generating_set(source);
    let mut search = Search {
        source,
        target,
        values: vec![UNSET; source.carrier()],
        order: Vec::new(),
        processed: 0,
        buf: Vec::new(),
        s_args: Vec::new(),
        t_args: Vec::new(),
    };
    for (s_op, t_op) in source.ops().iter().zip(target.ops()) {
        if s_op.arity() == 0 && !Search::assign(&mut search.values, &mut search.order, s_op.table()[0], t_op.table()[0]) {
            return Ok(true);
        }
    }
    if !search.propagate() {
        return Ok(true);
    }
    Ok(search.run(&gens, &mut visit))
}

#[derive(Debug, Clone)]
pub struct HomEnumeration {
    pub homs: Vec<Homomorphism>,
    /// More than `cap` homomorphisms exist; `homs` holds the first `cap`.
    pub truncated: bool,
}

/// Up to `cap` homomorphisms, with an explicit flag when more exist.
pub fn enumerate_homs(source: &Arc<Algebra>, target: &Arc<Algebra>, cap: usize) -> Result<HomEnumeration> {
    let mut homs = Vec::new();
    let mut truncated = false;
    for_each_hom(source, target, |values| {
        if homs.len() == cap {
            truncated = true;
            return false;
        }
        homs.push(Homomorphism::new_unchecked(source.clone(), target.clone(), values.to_vec()));
        true
    })?;
    Ok(HomEnumeration { homs, truncated })
}

/// Default cap for [`enumerate_homs`].
pub const DEFAULT_HOM_CAP: usize = 1 << 16;

fn check_power(h: &Homomorphism, n: usize) -> Result<usize> {
    let base = h.target.carrier();
    let exponent = checked_pow(base, n).ok_or(Error::NotAPower)?;
    if checked_pow(base, exponent) != Some(h.source.carrier()) || h.source.signature() != h.target.signature() {
        return Err(Error::NotAPower);
    }
    Ok(exponent)
}

/// `(h(pi_j))_j`, the point of `A^n` that a hom out of `A^(A^n)` assigns to the projections.
pub fn point_of(h: &Homomorphism, n: usize) -> Result<Vec<Elem>> {
    check_power(h, n)?;
    let base = h.target.carrier();
    (0..n).map(|j| Ok(h.values[crate::projection(base, n, j)?.code()?])).collect()
}

/// The evaluation map `pi_a : A^(A^n) -> A`, `f -> f(a)`.
pub fn evaluation_hom(power: Arc<Algebra>, base: Arc<Algebra>, point: &[Elem]) -> Result<Homomorphism> {
    let k = base.carrier();
    let column = crate::encode_tuple(point, k)?;
    let exponent = checked_pow(k, point.len()).ok_or(Error::NotAPower)?;
    if checked_pow(k, exponent) != Some(power.carrier()) || power.signature() != base.signature() {
        return Err(Error::NotAPower);
    }
    let weight = checked_pow(k, column).ok_or(Error::NotAPower)?;
    let values = (0..power.carrier()).map(|code| ((code / weight) % k) as Elem).collect();
    Ok(Homomorphism::new_unchecked(power, base, values))
}

/// `pi_{h . u}`: the evaluation map at the point `h` assigns to the projections.
pub fn regularize(h: &Homomorphism, n: usize) -> Result<Homomorphism> {
    let point = point_of(h, n)?;
    evaluation_hom(h.source.clone(), h.target.clone(), &point)
}

pub fn is_regular(h: &Homomorphism, n: usize) -> Result<bool> {
    Ok(regularize(h, n)?.values == h.values)
}

/// Evaluates a hom out of `A^(A^n)` at an operation of arity `n`.
pub fn apply_to_op(h: &Homomorphism, f: &Operation) -> Result<Elem> {
    Ok(h.values[f.code()?])
}
