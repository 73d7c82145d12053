//! `GF(p)^d` with the usual vector-space signature: `add`, `zero`, `neg` and
//! one unary `scale_c` per scalar `c`.
//!
//! An element of `V^(V^n)` with code `x` has, as a vector over `GF(p)`, the
//! base-`p` digits of `x` as coordinates (coordinate `k` of the value at
//! tuple `i` sits at position `k + d*i`), so linear algebra on the power works
//! directly on codes.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::centralizer::WitnessStrategy;
use crate::guard::table_len;
use crate::homsearch::Homomorphism;
use crate::tuple::{decode_into, encode_unchecked, step};
use crate::{projection, Algebra, Elem, Error, Operation, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        match u32::try_from(p) {
            Ok(p) if prime => Ok(PrimeField { p }),
            _ => Err(Error::NotPrime(p)),
        }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.p - b % self.p)
    }

    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn inv(self, a: u32) -> u32 {
        // a^(p-2)
        let (mut base, mut exp, mut acc) = (a, self.p - 2, 1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// The `d`-dimensional space over `field`, elements encoded base `p`.
pub fn make_vector_space(field: PrimeField, d: usize) -> Result<Algebra> {
    let p = field.p as usize;
    let size = table_len(p, d)?;
    let mut coords = vec![0 as Elem; size * d];
    for x in 0..size {
        decode_into(x, p, &mut coords[x * d..(x + 1) * d])?;
    }
    let coord = |x: Elem| &coords[x as usize * d..(x as usize + 1) * d];
    let encode = |v: &mut dyn DoubleEndedIterator<Item = Elem>| encode_unchecked(v, p) as Elem;
    let mut ops = Vec::with_capacity(3 + p);
    let add = Operation::from_fn(size, 2, |t| {
        encode(&mut coord(t[0]).iter().zip(coord(t[1])).map(|(&a, &b)| field.add(a, b)))
    })?;
    ops.push(("add".into(), add));
    ops.push(("zero".into(), Operation::constant(size, 0, 0)?));
    let neg = Operation::from_fn(size, 1, |t| encode(&mut coord(t[0]).iter().map(|&a| field.sub(0, a))))?;
    ops.push(("neg".into(), neg));
    for c in 0..field.p {
        let scale = Operation::from_fn(size, 1, |t| encode(&mut coord(t[0]).iter().map(|&a| field.mul(c, a))))?;
        ops.push((format!("scale_{c}"), scale));
    }
    Algebra::new(size, ops)
}

/// Recovers `(field, d)` from an algebra equal to [`make_vector_space`]'s output.
pub fn recognize_vector_space(algebra: &Algebra) -> Result<(PrimeField, usize)> {
    let not_space = Error::Precondition("algebra is not a standard prime-field vector space");
    let p = algebra.signature().iter().filter(|(name, _)| name.starts_with("scale_")).count() as u64;
    let field = PrimeField::new(p).map_err(|_| not_space.clone())?;
    let mut d = 0;
    let mut size = 1;
    while size < algebra.carrier() {
        size *= p as usize;
        d += 1;
    }
    if size != algebra.carrier() || make_vector_space(field, d)? != *algebra {
        return Err(not_space);
    }
    Ok((field, d))
}

/// Rows in reduced echelon form: each row is zero at the pivots of the rows
/// before it and has a 1 at its own pivot.
struct Echelon {
    field: PrimeField,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    fn reduce(&self, v: &mut [u32]) {
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = self.field.sub(*x, self.field.mul(c, r));
                }
            }
        }
    }

    /// Adds `v` if it is independent of the rows so far.
    fn insert(&mut self, v: &[u32]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[pivot]);
        for x in &mut v {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push((pivot, v));
        true
    }
}

/// `c` with `<c, basis[k]> = [k == target]`, by Gauss-Jordan on the square
/// system whose rows are the basis vectors.
fn dual_functional(field: PrimeField, basis: &[Vec<u32>], target: usize) -> Vec<u32> {
    let dim = basis.len();
    let mut m: Vec<Vec<u32>> = basis
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let mut row = b.clone();
            row.push(u32::from(k == target));
            row
        })
        .collect();
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| m[r][col] != 0).expect("basis is invertible");
        m.swap(col, pivot);
        let inv = field.inv(m[col][col]);
        for x in &mut m[col] {
            *x = field.mul(*x, inv);
        }
        for r in 0..dim {
            let c = m[r][col];
            if r != col && c != 0 {
                let pivot_row = m[col].clone();
                for (x, &y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(c, y));
                }
            }
        }
    }
    m.into_iter().map(|row| row[dim]).collect()
}

/// Separating homomorphisms for vector spaces: a linear functional that
/// vanishes on the projections and is 1 on `f`, times a vector `v1 != f(0)`.
pub struct VecspaceStrategy {
    field: PrimeField,
    d: usize,
    n: usize,
    space: Arc<Algebra>,
    power: Arc<Algebra>,
    projections: Vec<Vec<u32>>,
}

impl VecspaceStrategy {
    pub fn new(space: Arc<Algebra>, n: usize) -> Result<Self> {
        let (field, d) = recognize_vector_space(&space)?;
        if space.carrier() < 2 {
            return Err(Error::Precondition("vector space must be nonzero"));
        }
        let power = Arc::new(space.power(table_len(space.carrier(), n)?)?);
        let mut strategy = VecspaceStrategy { field, d, n, space, power, projections: Vec::new() };
        strategy.projections =
            (0..n).map(|j| strategy.coordinates(&projection(strategy.space.carrier(), n, j)?)).collect::<Result<_>>()?;
        Ok(strategy)
    }

    fn dimension(&self) -> usize {
        self.d * self.power_exponent()
    }

    fn power_exponent(&self) -> usize {
        self.space.carrier().pow(self.n as u32)
    }

    /// `f` as a vector over the field.
    fn coordinates(&self, f: &Operation) -> Result<Vec<u32>> {
        let mut v = vec![0; self.dimension()];
        decode_into(f.code()?, self.field.p as usize, &mut v)?;
        Ok(v)
    }

    /// Values of the separating homomorphism on every element of the power.
    pub fn values(&self, f: &Operation) -> Result<Vec<Elem>> {
        if f.carrier() != self.space.carrier() || f.arity() != self.n {
            return Err(Error::ArityMismatch { expected: self.n, found: f.arity() });
        }
        let field = self.field;
        let dim = self.dimension();
        let mut echelon = Echelon { field, rows: Vec::new() };
        let mut basis = Vec::with_capacity(dim);
        for v in &self.projections {
            let independent = echelon.insert(v);
            debug_assert!(independent);
            basis.push(v.clone());
        }
        let fv = self.coordinates(f)?;
        if !echelon.insert(&fv) {
            return Err(Error::DerivedOperation);
        }
        let target = basis.len();
        basis.push(fv);
        for i in 0..dim {
            if basis.len() == dim {
                break;
            }
            let mut e = vec![0; dim];
            e[i] = 1;
            if echelon.insert(&e) {
                basis.push(e);
            }
        }
        let c = dual_functional(field, &basis, target);

        let v1: Elem = if f.table()[0] == 0 { 1 } else { 0 };
        let mut v1_coords = vec![0; self.d];
        decode_into(v1 as usize, field.p as usize, &mut v1_coords)?;

        let mut values = Vec::with_capacity(self.power.carrier());
        let mut digits = vec![0u32; dim];
        loop {
            let s = digits.iter().zip(&c).fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)));
            values.push(encode_unchecked(v1_coords.iter().map(|&a| field.mul(s, a)), field.p as usize) as Elem);
            if !step(&mut digits, field.p as usize) {
                break;
            }
        }
        Ok(values)
    }

    pub fn separating_hom(&self, f: &Operation) -> Result<Homomorphism> {
        Ok(Homomorphism::new_unchecked(self.power.clone(), self.space.clone(), self.values(f)?))
    }
}

impl WitnessStrategy for VecspaceStrategy {
    fn name(&self) -> &str {
        "vecspace"
    }

    fn separating_hom(&mut self, f: &Operation) -> Result<Option<Vec<Elem>>> {
        self.values(f).map(Some)
    }
}

/// A linear homomorphism `V^(V^n) -> V` with `h(pi_j) = 0` and `h(f) = v1 != f(0)`.
///
/// Fails with [`Error::DerivedOperation`] when `f` is linear.
pub fn vecspace_separating_hom(space: &Arc<Algebra>, n: usize, f: &Operation) -> Result<Homomorphism> {
    VecspaceStrategy::new(space.clone(), n)?.separating_hom(f)
}
