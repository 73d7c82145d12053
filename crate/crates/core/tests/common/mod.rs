//! Direct, unoptimized reference implementations used as test oracles.
#![allow(dead_code)]

use cloneforge_core::{Algebra, Operation};
use rand::Rng;

pub fn enc(t: &[u32], base: usize) -> usize {
    t.iter().rev().fold(0, |acc, &x| acc * base + x as usize)
}

pub fn dec(mut i: usize, base: usize, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((i % base) as u32);
        i /= base;
    }
    out
}

pub fn eval(op: &Operation, args: &[u32]) -> u32 {
    op.table()[enc(args, op.carrier())]
}

pub fn op(carrier: usize, arity: usize, table: &[u32]) -> Operation {
    Operation::new(carrier, arity, table.to_vec()).unwrap()
}

pub fn random_op(rng: &mut impl Rng, carrier: usize, arity: usize) -> Operation {
    let len = carrier.pow(arity as u32);
    let table: Vec<u32> = (0..len).map(|_| rng.random_range(0..carrier as u32)).collect();
    Operation::new(carrier, arity, table).unwrap()
}

pub fn all_ops(carrier: usize, arity: usize) -> Vec<Operation> {
    let len = carrier.pow(arity as u32);
    (0..carrier.pow(len as u32)).map(|c| op(carrier, arity, &dec(c, carrier, len))).collect()
}

/// `A^exponent` with pointwise operations, element `x` decoded base `|A|`.
pub fn oracle_power(alg: &Algebra, exponent: usize) -> Algebra {
    let k = alg.carrier();
    let size = k.pow(exponent as u32);
    let ops = alg
        .named_ops()
        .map(|(name, o)| {
            let m = o.arity();
            let table: Vec<u32> = (0..size.pow(m as u32))
                .map(|t| {
                    let args: Vec<Vec<u32>> = dec(t, size, m).iter().map(|&x| dec(x as usize, k, exponent)).collect();
                    let value: Vec<u32> =
                        (0..exponent).map(|i| eval(o, &args.iter().map(|a| a[i]).collect::<Vec<_>>())).collect();
                    enc(&value, k) as u32
                })
                .collect();
            (name.to_string(), op(size, m, &table))
        })
        .collect();
    Algebra::new(size, ops).unwrap()
}

pub fn oracle_is_hom(src: &Algebra, tgt: &Algebra, map: &[u32]) -> bool {
    src.ops().iter().zip(tgt.ops()).all(|(s, t)| {
        let m = s.arity();
        (0..src.carrier().pow(m as u32)).all(|i| {
            let args = dec(i, src.carrier(), m);
            let image: Vec<u32> = args.iter().map(|&a| map[a as usize]).collect();
            map[eval(s, &args) as usize] == eval(t, &image)
        })
    })
}

pub fn oracle_all_homs(src: &Algebra, tgt: &Algebra) -> Vec<Vec<u32>> {
    let (s, t) = (src.carrier(), tgt.carrier());
    (0..t.pow(s as u32)).map(|c| dec(c, t, s)).filter(|m| oracle_is_hom(src, tgt, m)).collect()
}

/// `f * g` and `f ~* g` at every matrix `a` in `A^(n x m)`, entry `(x, y)` at `x + n*y`.
pub fn oracle_commutes(f: &Operation, g: &Operation) -> bool {
    let k = f.carrier();
    let (n, m) = (f.arity(), g.arity());
    (0..k.pow((n * m) as u32)).all(|c| {
        let a = dec(c, k, n * m);
        let cols: Vec<u32> = (0..m).map(|y| eval(f, &a[y * n..(y + 1) * n])).collect();
        let rows: Vec<u32> = (0..n).map(|x| eval(g, &(0..m).map(|y| a[x + n * y]).collect::<Vec<_>>())).collect();
        eval(g, &cols) == eval(f, &rows)
    })
}

pub fn oracle_centralizer(gens: &[Operation], carrier: usize, n: usize) -> Vec<Operation> {
    all_ops(carrier, n).into_iter().filter(|f| gens.iter().all(|g| oracle_commutes(f, g))).collect()
}

/// `x -> sum c_j x_j mod p` for every coefficient vector, on `GF(p)^1`.
pub fn linear_ops(p: usize, n: usize) -> Vec<Operation> {
    let len = p.pow(n as u32);
    (0..p.pow(n as u32))
        .map(|c| {
            let coeffs = dec(c, p, n);
            let table: Vec<u32> = (0..len)
                .map(|i| {
                    let x = dec(i, p, n);
                    (x.iter().zip(&coeffs).map(|(&a, &b)| (a * b) as usize).sum::<usize>() % p) as u32
                })
                .collect();
            op(p, n, &table)
        })
        .collect()
}

pub fn sorted_tables<'a>(ops: impl IntoIterator<Item = &'a Operation>) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = ops.into_iter().map(|o| o.table().to_vec()).collect();
    v.sort();
    v.dedup();
    v
}
