//! Little-endian mixed-radix encoding of tuples: `enc(t) = sum t_i * base^i`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{checked_pow, Elem, Error, Result};

pub fn encode_tuple(tuple: &[Elem], base: usize) -> Result<usize> {
    let mut index: usize = 0;
    let mut weight: usize = 1;
    for (position, &value) in tuple.iter().enumerate() {
        if value as usize >= base {
            return Err(Error::ComponentOutOfRange { position, value: value as u64, base });
        }
        index = weight
            .checked_mul(value as usize)
            .and_then(|v| v.checked_add(index))
            .ok_or(Error::IndexOutOfRange { index: u64::MAX, base, len: tuple.len() })?;
        if position + 1 < tuple.len() {
            weight = weight
                .checked_mul(base)
                .ok_or(Error::IndexOutOfRange { index: u64::MAX, base, len: tuple.len() })?;
        }
    }
    Ok(index)
}

pub fn decode_tuple(index: usize, base: usize, len: usize) -> Result<Vec<Elem>> {
    let mut out = vec![0; len];
    decode_into(index, base, &mut out)?;
    Ok(out)
}

/// Decodes into `out`, whose length fixes the tuple length.
pub(crate) fn decode_into(index: usize, base: usize, out: &mut [Elem]) -> Result<()> {
    let in_range = match checked_pow(base, out.len()) {
        Some(total) => index < total,
        None => true,
    };
    if base == 0 || !in_range {
        return Err(Error::IndexOutOfRange { index: index as u64, base, len: out.len() });
    }
    let mut rest = index;
    for slot in out.iter_mut() {
        *slot = (rest % base) as Elem;
        rest /= base;
    }
    Ok(())
}

/// Unchecked encode for tuples already known to be in range.
#[inline]
pub(crate) fn encode_unchecked(tuple: impl DoubleEndedIterator<Item = Elem>, base: usize) -> usize {
    tuple.rev().fold(0, |acc, v| acc * base + v as usize)
}

/// Odometer over every tuple of a given length, in encoding order.
///
/// `Tuples::new(2, 2)` yields `(0,0), (1,0), (0,1), (1,1)`.
#[derive(Debug, Clone)]
pub struct Tuples {
    base: usize,
    current: Vec<Elem>,
    done: bool,
}

impl Tuples {
    pub fn new(base: usize, len: usize) -> Self {
        Tuples { base, current: vec![0; len], done: base == 0 && len > 0 }
    }
}

impl Iterator for Tuples {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = !step(&mut self.current, self.base);
        Some(out)
    }
}

/// Advances `digits` to the next tuple in encoding order; false after the last one.
#[inline]
pub(crate) fn step(digits: &mut [Elem], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if (*d as usize) < base {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_examples() {
        assert_eq!(encode_tuple(&[0, 0], 2).unwrap(), 0);
        assert_eq!(encode_tuple(&[1, 0], 2).unwrap(), 1);
        assert_eq!(encode_tuple(&[2, 1], 3).unwrap(), 5);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_tuple(5, 3, 2).unwrap(), [2, 1]);
        assert_eq!(decode_tuple(0, 2, 3).unwrap(), [0, 0, 0]);
        assert_eq!(decode_tuple(3, 2, 2).unwrap(), [1, 1]);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            encode_tuple(&[0, 3], 3),
            Err(Error::ComponentOutOfRange { position: 1, value: 3, base: 3 })
        ));
        assert!(matches!(decode_tuple(9, 3, 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn exhaustive_roundtrip_small() {
        for base in 1..=3usize {
            for len in 0..=4usize {
                let total = base.pow(len as u32);
                let all: Vec<_> = Tuples::new(base, len).collect();
                assert_eq!(all.len(), total);
                for (index, t) in all.iter().enumerate() {
                    assert_eq!(encode_tuple(t, base).unwrap(), index);
                    assert_eq!(&decode_tuple(index, base, len).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn empty_tuple() {
        assert_eq!(encode_tuple(&[], 5).unwrap(), 0);
        assert_eq!(Tuples::new(5, 0).count(), 1);
    }
}
