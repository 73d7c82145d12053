//! Kronecker products, commutation, the evaluation matrix, and the pushforward
//! encoding of a Kronecker product.
//!
//! A matrix `a in A^(X x Y)` is stored as a tuple of length `X * Y` with entry
//! `(x, y)` at position `x + X * y`. Column `y` is therefore a contiguous block
//! whose own encoding is a base-`|A|^X` digit of the matrix encoding, which is
//! what lets [`commutes`] walk matrices column by column.

use alloc::vec;
use alloc::vec::Vec;

use crate::guard::table_len;
use crate::tuple::{decode_into, encode_unchecked, step};
use crate::{projection, pushforward, Elem, Error, Operation, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    carrier: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn new(carrier: usize, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::TableLength { name: None, expected: rows * cols, found: entries.len() });
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &v)| v as usize >= carrier) {
            return Err(Error::EntryOutOfRange { name: None, index, value: value as u64, carrier });
        }
        Ok(Matrix { carrier, rows, cols, entries })
    }

    pub fn from_code(carrier: usize, rows: usize, cols: usize, code: usize) -> Result<Self> {
        let mut entries = vec![0; rows * cols];
        decode_into(code, carrier, &mut entries)?;
        Ok(Matrix { carrier, rows, cols, entries })
    }

    pub fn code(&self) -> Result<usize> {
        crate::encode_tuple(&self.entries, self.carrier)
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn get(&self, x: usize, y: usize) -> Elem {
        self.entries[x + self.rows * y]
    }

    /// Column `y`, the point of `A^X` written `grave(a)(y)`.
    pub fn column(&self, y: usize) -> &[Elem] {
        &self.entries[y * self.rows..(y + 1) * self.rows]
    }

    /// Row `x`, the point of `A^Y` written `acute(a)(x)`.
    pub fn row(&self, x: usize) -> impl DoubleEndedIterator<Item = Elem> + '_ {
        (0..self.cols).map(move |y| self.get(x, y))
    }
}

fn check_shape(f: &Operation, g: &Operation, a: &Matrix) -> Result<()> {
    f.same_carrier(g)?;
    if a.carrier != f.carrier() {
        return Err(Error::CarrierMismatch { expected: f.carrier(), found: a.carrier });
    }
    if a.rows != f.arity() {
        return Err(Error::ArityMismatch { expected: f.arity(), found: a.rows });
    }
    if a.cols != g.arity() {
        return Err(Error::ArityMismatch { expected: g.arity(), found: a.cols });
    }
    Ok(())
}

/// `(f * g)(a) = g(f . grave(a))`: apply `f` down each column, then `g` across.
pub fn kron_first_at(f: &Operation, g: &Operation, a: &Matrix) -> Result<Elem> {
    check_shape(f, g, a)?;
    Ok(g.at((0..a.cols).map(|y| f.at(a.column(y).iter().copied()))))
}

/// `(f ~* g)(a) = f(g . acute(a))`: apply `g` along each row, then `f` down.
pub fn kron_second_at(f: &Operation, g: &Operation, a: &Matrix) -> Result<Elem> {
    check_shape(f, g, a)?;
    Ok(f.at((0..a.rows).map(|x| g.at(a.row(x)))))
}

/// Walks every matrix in encoding order as a tuple of column codes.
struct ColumnWalk {
    rows: usize,
    column_count: usize,
    // digits[c * rows + x] = x-th entry of the column with code c
    digits: Vec<Elem>,
    codes: Vec<Elem>,
}

impl ColumnWalk {
    fn new(carrier: usize, rows: usize, cols: usize) -> Result<Self> {
        table_len(carrier, rows * cols)?;
        let column_count = table_len(carrier, rows)?;
        let mut digits = vec![0; column_count * rows];
        let mut current = vec![0; rows];
        for c in 0..column_count {
            digits[c * rows..(c + 1) * rows].copy_from_slice(&current);
            step(&mut current, carrier);
        }
        Ok(ColumnWalk { rows, column_count, digits, codes: vec![0; cols] })
    }

    fn first(&self, f: &Operation, g: &Operation) -> Elem {
        g.at(self.codes.iter().map(|&c| f.table()[c as usize]))
    }

    fn second(&self, f: &Operation, g: &Operation) -> Elem {
        let rows = self.rows;
        f.at((0..rows).map(|x| g.at(self.codes.iter().map(|&c| self.digits[c as usize * rows + x]))))
    }

    fn advance(&mut self) -> bool {
        step(&mut self.codes, self.column_count)
    }
}

/// First Kronecker product `f * g`, an operation of arity `X * Y`.
pub fn kron_first(f: &Operation, g: &Operation) -> Result<Operation> {
    f.same_carrier(g)?;
    let mut walk = ColumnWalk::new(f.carrier(), f.arity(), g.arity())?;
    let mut table = Vec::new();
    loop {
        table.push(walk.first(f, g));
        if !walk.advance() {
            break;
        }
    }
    Operation::new(f.carrier(), f.arity() * g.arity(), table)
}

/// Second Kronecker product `f ~* g`, an operation of arity `X * Y`.
pub fn kron_second(f: &Operation, g: &Operation) -> Result<Operation> {
    f.same_carrier(g)?;
    let mut walk = ColumnWalk::new(f.carrier(), f.arity(), g.arity())?;
    let mut table = Vec::new();
    loop {
        table.push(walk.second(f, g));
        if !walk.advance() {
            break;
        }
    }
    Operation::new(f.carrier(), f.arity() * g.arity(), table)
}

/// Outcome of a commutation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Commutation {
    Commute,
    /// The smallest-encoded matrix on which the two products differ.
    Differ { matrix: Matrix, first: Elem, second: Elem },
}

impl Commutation {
    pub fn commutes(&self) -> bool {
        matches!(self, Commutation::Commute)
    }
}

/// Decides `f ⊥ g` without materializing either product table.
pub fn commutes(f: &Operation, g: &Operation) -> Result<Commutation> {
    f.same_carrier(g)?;
    let mut walk = ColumnWalk::new(f.carrier(), f.arity(), g.arity())?;
    loop {
        let first = walk.first(f, g);
        let second = walk.second(f, g);
        if first != second {
            let rows = walk.rows;
            let entries = walk
                .codes
                .iter()
                .flat_map(|&c| walk.digits[c as usize * rows..(c as usize + 1) * rows].iter().copied())
                .collect();
            let matrix = Matrix { carrier: f.carrier(), rows, cols: g.arity(), entries };
            return Ok(Commutation::Differ { matrix, first, second });
        }
        if !walk.advance() {
            return Ok(Commutation::Commute);
        }
    }
}

/// The `n x |A|^n` matrix whose column `c` is the tuple decoded from `c`.
pub fn evaluation_matrix(carrier: usize, n: usize) -> Result<Matrix> {
    let cols = table_len(carrier, n)?;
    table_len(carrier, n * cols)?;
    let mut entries = Vec::with_capacity(n * cols);
    let mut current = vec![0; n];
    for _ in 0..cols {
        entries.extend_from_slice(&current);
        step(&mut current, carrier);
    }
    Ok(Matrix { carrier, rows: n, cols, entries })
}

/// `(pi_0, .., pi_{n-1})`, the points of `A^(A^n)` that the evaluation matrix's rows encode.
pub fn u_map(carrier: usize, n: usize) -> Result<Vec<Operation>> {
    (0..n).map(|j| projection(carrier, n, j)).collect()
}

/// `h_ga`: the pushforward of `g` along the columns of `a`, an operation of arity `|A|^X`.
///
/// `h_ga(F) = g((F(column_y))_y)` for `F` an operation of arity `X`.
pub fn pushforward_encoding(g: &Operation, a: &Matrix) -> Result<Operation> {
    if a.carrier != g.carrier() {
        return Err(Error::CarrierMismatch { expected: g.carrier(), found: a.carrier });
    }
    if a.cols != g.arity() {
        return Err(Error::ArityMismatch { expected: g.arity(), found: a.cols });
    }
    let target = table_len(a.carrier, a.rows)?;
    let xi: Vec<usize> = (0..a.cols).map(|y| encode_unchecked(a.column(y).iter().copied(), a.carrier)).collect();
    pushforward(g, &xi, target)
}

/// `f(h . u)`, i.e. `f` applied to `(h(pi_j))_j` where `pi_j` are read as points of `A^(A^n)`.
pub fn apply_at_projections(f: &Operation, h: &Operation) -> Result<Elem> {
    Ok(f.at(h_at_projections(f.carrier(), f.arity(), h)?.into_iter()))
}

/// `(h(pi_j))_j`, the point `h . u` of `A^n`.
pub fn h_at_projections(carrier: usize, n: usize, h: &Operation) -> Result<Vec<Elem>> {
    let len = table_len(carrier, n)?;
    if h.carrier() != carrier {
        return Err(Error::CarrierMismatch { expected: carrier, found: h.carrier() });
    }
    if h.arity() != len {
        return Err(Error::ArityMismatch { expected: len, found: h.arity() });
    }
    u_map(carrier, n)?.iter().map(|p| Ok(h.table()[p.code()?])).collect()
}
