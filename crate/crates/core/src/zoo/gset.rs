//! Finite groups acting freely on finite sets.
//!
//! A `G`-set is an algebra with one unary symbol per group element, symbol
//! `i` acting as group element `i`. The free `G`-set on `r` roots has carrier
//! `G x {0..r}` with `(g, i)` stored at `g + |G|*i`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::centralizer::WitnessStrategy;
use crate::guard::table_len;
use crate::homsearch::Homomorphism;
use crate::{projection, Algebra, Elem, Error, Operation, Result};

/// A finite group as a validated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupTable {
    order: usize,
    // product g*h at g*order + h
    table: Vec<Elem>,
    identity: Elem,
    inverse: Vec<Elem>,
}

impl GroupTable {
    /// `rows[g][h] = g*h`; checks closure, associativity, identity and inverses.
    pub fn from_cayley(rows: &[Vec<Elem>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidGroup("group must be nonempty"));
        }
        table_len(order, 2)?;
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidGroup("Cayley table is not square"));
        }
        if rows.iter().flatten().any(|&x| x as usize >= order) {
            return Err(Error::InvalidGroup("product outside the group"));
        }
        let table: Vec<Elem> = rows.iter().flatten().copied().collect();
        let mul = |a: Elem, b: Elem| table[a as usize * order + b as usize];
        let elems = 0..order as Elem;
        for a in elems.clone() {
            for b in elems.clone() {
                for c in elems.clone() {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup("multiplication is not associative"));
                    }
                }
            }
        }
        let identity = elems
            .clone()
            .find(|&e| elems.clone().all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(Error::InvalidGroup("no identity element"))?;
        let inverse = elems
            .clone()
            .map(|a| elems.clone().find(|&b| mul(a, b) == identity && mul(b, a) == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::InvalidGroup("some element has no inverse"))?;
        Ok(GroupTable { order, table, identity, inverse })
    }

    /// `Z/k` under addition.
    pub fn cyclic(k: usize) -> Result<Self> {
        let rows: Vec<Vec<Elem>> = (0..k).map(|a| (0..k).map(|b| ((a + b) % k) as Elem).collect()).collect();
        GroupTable::from_cayley(&rows)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.order + b as usize]
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn inverse(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.order).map(<[Elem]>::to_vec).collect()
    }
}

/// The free `G`-set on `roots` roots, symbols named `g0, g1, ..`.
pub fn make_free_gset(group: &GroupTable, roots: usize) -> Result<Algebra> {
    let k = group.order;
    let size = k.checked_mul(roots).ok_or(Error::TableTooLarge { limit: crate::table_limit() })?;
    table_len(size, 1)?;
    let ops = (0..k as Elem)
        .map(|g| {
            let op = Operation::from_fn(size, 1, |t| {
                let (delta, root) = (t[0] as usize % k, t[0] as usize / k);
                group.mul(g, delta as Elem) + (k * root) as Elem
            })?;
            Ok((format!("g{g}"), op))
        })
        .collect::<Result<Vec<_>>>()?;
    Algebra::new(size, ops)
}

/// A failure of the action laws or of freeness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GsetViolation {
    /// The identity moves `point`.
    NotUnital { point: Elem },
    /// `g(h(point)) != (gh)(point)`.
    NotCompatible { g: Elem, h: Elem, point: Elem },
    /// A non-identity `g` fixes `point`.
    NotFree { g: Elem, point: Elem },
}

fn check_shape(algebra: &Algebra, group: &GroupTable) -> Result<()> {
    if algebra.ops().len() != group.order || algebra.ops().iter().any(|op| op.arity() != 1) {
        return Err(Error::SignatureMismatch);
    }
    Ok(())
}

/// Checks the action laws and the freeness axiom exhaustively; returns the
/// first violation found.
pub fn check_free_gset(algebra: &Algebra, group: &GroupTable) -> Result<Option<GsetViolation>> {
    check_shape(algebra, group)?;
    let act = |g: Elem, a: Elem| algebra.ops()[g as usize].table()[a as usize];
    let points = 0..algebra.carrier() as Elem;
    let elems = 0..group.order as Elem;
    if let Some(point) = points.clone().find(|&a| act(group.identity, a) != a) {
        return Ok(Some(GsetViolation::NotUnital { point }));
    }
    for g in elems.clone() {
        for h in elems.clone() {
            if let Some(point) = points.clone().find(|&a| act(g, act(h, a)) != act(group.mul(g, h), a)) {
                return Ok(Some(GsetViolation::NotCompatible { g, h, point }));
            }
        }
    }
    for g in elems.filter(|&g| g != group.identity) {
        if let Some(point) = points.clone().find(|&a| act(g, a) == a) {
            return Ok(Some(GsetViolation::NotFree { g, point }));
        }
    }
    Ok(None)
}

/// Orbits of a free action with one chosen representative each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub representatives: Vec<Elem>,
    /// Orbit index of each point.
    pub orbit: Vec<usize>,
    /// The unique `g` with `point = g * representative`.
    pub offset: Vec<Elem>,
}

/// Orbit decomposition of a free `G`-set. The `designated` points become
/// representatives of their orbits in the order given (a later designated
/// point in an already represented orbit is ignored); every other orbit is
/// represented by its smallest point.
pub fn gset_orbit_decomposition(algebra: &Algebra, group: &GroupTable, designated: &[Elem]) -> Result<OrbitDecomposition> {
    if let Some(v) = check_free_gset(algebra, group)? {
        return Err(match v {
            GsetViolation::NotFree { g, point } => Error::NotFree { symbol: g as usize, point },
            _ => Error::Precondition("not a group action"),
        });
    }
    let size = algebra.carrier();
    if let Some(&x) = designated.iter().find(|&&x| x as usize >= size) {
        return Err(Error::EntryOutOfRange { name: None, index: 0, value: x as u64, carrier: size });
    }
    let mut orbit = vec![usize::MAX; size];
    let mut offset = vec![0; size];
    let mut representatives = Vec::new();
    for r in designated.iter().copied().chain(0..size as Elem) {
        if orbit[r as usize] != usize::MAX {
            continue;
        }
        for g in 0..group.order as Elem {
            let x = algebra.ops()[g as usize].table()[r as usize] as usize;
            orbit[x] = representatives.len();
            offset[x] = g;
        }
        representatives.push(r);
    }
    Ok(OrbitDecomposition { representatives, orbit, offset })
}

/// The equivariant separating homomorphism for free `G`-sets.
pub struct GsetStrategy {
    group: GroupTable,
    n: usize,
    algebra: Arc<Algebra>,
    power: Arc<Algebra>,
    projections: Vec<Elem>,
}

impl GsetStrategy {
    pub fn new(algebra: Arc<Algebra>, group: GroupTable, n: usize) -> Result<Self> {
        if algebra.carrier() < 2 {
            return Err(Error::Precondition("free G-set needs at least two elements"));
        }
        if let Some(v) = check_free_gset(&algebra, &group)? {
            return Err(match v {
                GsetViolation::NotFree { g, point } => Error::NotFree { symbol: g as usize, point },
                _ => Error::Precondition("not a group action"),
            });
        }
        let power = Arc::new(algebra.power(table_len(algebra.carrier(), n)?)?);
        let projections = (0..n)
            .map(|j| Ok(projection(algebra.carrier(), n, j)?.code()? as Elem))
            .collect::<Result<_>>()?;
        Ok(GsetStrategy { group, n, algebra, power, projections })
    }

    /// `h` with `h = 0` on every representative except `h(f) = a1 != f(0..0)`,
    /// extended by `h(g * s) = g * h(s)`.
    pub fn values(&self, f: &Operation) -> Result<Vec<Elem>> {
        if f.carrier() != self.algebra.carrier() || f.arity() != self.n {
            return Err(Error::ArityMismatch { expected: self.n, found: f.arity() });
        }
        let code = f.code()? as Elem;
        let mut designated = self.projections.clone();
        designated.push(code);
        let orbits = gset_orbit_decomposition(&self.power, &self.group, &designated)?;
        let f_orbit = orbits.orbit[code as usize];
        if orbits.representatives[f_orbit] != code {
            return Err(Error::DerivedOperation);
        }
        let a0: Elem = 0;
        let a1: Elem = if f.table()[0] == 0 { 1 } else { 0 };
        let act = |g: Elem, a: Elem| self.algebra.ops()[g as usize].table()[a as usize];
        Ok((0..self.power.carrier())
            .map(|x| act(orbits.offset[x], if orbits.orbit[x] == f_orbit { a1 } else { a0 }))
            .collect())
    }

    pub fn separating_hom(&self, f: &Operation) -> Result<Homomorphism> {
        Ok(Homomorphism::new_unchecked(self.power.clone(), self.algebra.clone(), self.values(f)?))
    }
}

impl WitnessStrategy for GsetStrategy {
    fn name(&self) -> &str {
        "free-gset"
    }

    fn separating_hom(&mut self, f: &Operation) -> Result<Option<Vec<Elem>>> {
        self.values(f).map(Some)
    }
}

/// The separating homomorphism `A^(A^n) -> A` for a non-derived `f`.
pub fn gset_separating_hom(algebra: &Arc<Algebra>, group: &GroupTable, n: usize, f: &Operation) -> Result<Homomorphism> {
    GsetStrategy::new(algebra.clone(), group.clone(), n)?.separating_hom(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homsearch::is_hom;

    fn op(carrier: usize, arity: usize, table: &[Elem]) -> Operation {
        Operation::new(carrier, arity, table.to_vec()).unwrap()
    }

    #[test]
    fn group_validation() {
        assert!(GroupTable::cyclic(5).is_ok());
        assert!(matches!(GroupTable::from_cayley(&[vec![0, 1], vec![1, 1]]), Err(Error::InvalidGroup(_))));
        assert!(matches!(GroupTable::from_cayley(&[vec![0, 1], vec![0]]), Err(Error::InvalidGroup(_))));
        // a*b = b is associative but has no two-sided identity
        assert!(matches!(GroupTable::from_cayley(&[vec![0, 1], vec![0, 1]]), Err(Error::InvalidGroup(_))));
        // S3 as permutations of {0, 1, 2}, composed right to left
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap() as Elem;
        let rows: Vec<Vec<Elem>> = perms
            .iter()
            .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        let s3 = GroupTable::from_cayley(&rows).unwrap();
        assert_eq!(s3.identity(), 0);
        assert!((0..6).all(|g| s3.mul(g, s3.inverse(g)) == 0));
        // a Latin square that is not associative
        let bad = [vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        assert!(matches!(GroupTable::from_cayley(&bad), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn free_gsets() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let one = make_free_gset(&z2, 1).unwrap();
        assert_eq!(one.op("g1").unwrap().table(), [1, 0]);
        let two = make_free_gset(&z2, 2).unwrap();
        assert_eq!(two.op("g1").unwrap().table(), [1, 0, 3, 2]);
        assert_eq!(check_free_gset(&two, &z2).unwrap(), None);
        let trivial = make_free_gset(&GroupTable::cyclic(1).unwrap(), 3).unwrap();
        assert_eq!(trivial.op("g0").unwrap().table(), [0, 1, 2]);
        assert_eq!(check_free_gset(&trivial, &GroupTable::cyclic(1).unwrap()).unwrap(), None);
    }

    #[test]
    fn trivial_action_is_not_free() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let id = op(2, 1, &[0, 1]);
        let a = Algebra::new(2, vec![("e".into(), id.clone()), ("s".into(), id)]).unwrap();
        assert_eq!(check_free_gset(&a, &z2).unwrap(), Some(GsetViolation::NotFree { g: 1, point: 0 }));
    }

    #[test]
    fn orbits_of_powers() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let a = make_free_gset(&z2, 1).unwrap();
        let p = a.power(2).unwrap();
        let orbits = gset_orbit_decomposition(&p, &z2, &[]).unwrap();
        // codes: c0 = 0, NOT = 1, id = 2, c1 = 3
        assert_eq!(orbits.representatives, [0, 1]);
        assert_eq!(orbits.orbit, [0, 1, 1, 0]);
        let two = make_free_gset(&z2, 2).unwrap();
        let p = two.power(4).unwrap();
        assert_eq!(check_free_gset(&p, &z2).unwrap(), None);
        assert_eq!(gset_orbit_decomposition(&p, &z2, &[]).unwrap().representatives.len(), 128);
    }

    #[test]
    fn const_zero_is_separated() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let a = Arc::new(make_free_gset(&z2, 1).unwrap());
        let h = gset_separating_hom(&a, &z2, 1, &op(2, 1, &[0, 0])).unwrap();
        // c0 -> 1, NOT -> 1, id -> 0, c1 -> 0
        assert_eq!(h.values(), [1, 1, 0, 0]);
        assert!(is_hom(h.values(), h.source(), &a).unwrap().is_none());

        let a = Arc::new(make_free_gset(&z2, 2).unwrap());
        let f = op(4, 1, &[0, 0, 0, 0]);
        let h = gset_separating_hom(&a, &z2, 1, &f).unwrap();
        assert!(is_hom(h.values(), h.source(), &a).unwrap().is_none());
        assert_eq!(h.apply(0), 1);
    }

    #[test]
    fn derived_ops_are_rejected() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let a = Arc::new(make_free_gset(&z2, 2).unwrap());
        let swap = a.op("g1").unwrap().clone();
        assert!(matches!(gset_separating_hom(&a, &z2, 1, &swap), Err(Error::DerivedOperation)));
    }
}
