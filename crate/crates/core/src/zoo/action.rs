//! Actions of the free monoid on a set of unary symbols.
//!
//! A word `s_1 s_2 .. s_k` (a list of symbol indices) acts on a point by
//! applying `s_k` first: `w a = s_1(s_2(..s_k(a)))`.

use alloc::vec;
use alloc::vec::Vec;

use crate::guard::table_len;
use crate::{Algebra, Elem, Error, Result};

fn check_unary(algebra: &Algebra) -> Result<()> {
    match algebra.ops().iter().find(|op| op.arity() != 1) {
        Some(op) => Err(Error::ArityMismatch { expected: 1, found: op.arity() }),
        None => Ok(()),
    }
}

/// `w a`; every symbol must be unary.
pub fn apply_word(algebra: &Algebra, word: &[usize], a: Elem) -> Result<Elem> {
    check_unary(algebra)?;
    if a as usize >= algebra.carrier() {
        return Err(Error::EntryOutOfRange { name: None, index: 0, value: a as u64, carrier: algebra.carrier() });
    }
    word.iter().rev().try_fold(a, |x, &s| {
        let op = algebra.ops().get(s).ok_or(Error::Precondition("word uses a missing symbol"))?;
        Ok(op.table()[x as usize])
    })
}

/// The reachability preorder `a <= b` iff `w a = b` for some word `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionStructure {
    carrier: usize,
    maps: Vec<Vec<Elem>>,
    // reach[a * words + b / 64] bit b: a <= b
    reach: Vec<u64>,
    words: usize,
    orbits: Option<Vec<usize>>,
}

impl ActionStructure {
    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn maps(&self) -> &[Vec<Elem>] {
        &self.maps
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        let (a, b) = (a as usize, b as usize);
        self.reach[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    /// `{b | a <= b}`, the subset generated by `a`.
    pub fn up(&self, a: Elem) -> Vec<Elem> {
        (0..self.carrier as Elem).filter(|&b| self.leq(a, b)).collect()
    }

    pub fn down(&self, a: Elem) -> Vec<Elem> {
        (0..self.carrier as Elem).filter(|&b| self.leq(b, a)).collect()
    }

    /// Orbit index of each point, when every symbol acts bijectively.
    pub fn orbits(&self) -> Option<&[usize]> {
        self.orbits.as_deref()
    }
}

pub fn action_preorder(algebra: &Algebra) -> Result<ActionStructure> {
    check_unary(algebra)?;
    let carrier = algebra.carrier();
    let words = carrier.div_ceil(64);
    table_len(carrier, 2)?;
    let maps: Vec<Vec<Elem>> = algebra.ops().iter().map(|op| op.table().to_vec()).collect();
    let mut reach = vec![0u64; carrier * words];
    let mut stack = Vec::new();
    for a in 0..carrier {
        let row = &mut reach[a * words..(a + 1) * words];
        row[a / 64] |= 1 << (a % 64);
        stack.push(a as Elem);
        while let Some(x) = stack.pop() {
            for m in &maps {
                let y = m[x as usize] as usize;
                if row[y / 64] >> (y % 64) & 1 == 0 {
                    row[y / 64] |= 1 << (y % 64);
                    stack.push(y as Elem);
                }
            }
        }
    }
    let bijective = maps.iter().all(|m| {
        let mut seen = vec![false; carrier];
        m.iter().all(|&y| !core::mem::replace(&mut seen[y as usize], true))
    });
    let mut structure = ActionStructure { carrier, maps, reach, words, orbits: None };
    if bijective {
        // reachability is symmetric here, so the classes are the orbits
        let mut orbit = vec![usize::MAX; carrier];
        let mut count = 0;
        for a in 0..carrier {
            if orbit[a] == usize::MAX {
                for b in structure.up(a as Elem) {
                    orbit[b as usize] = count;
                }
                count += 1;
            }
        }
        structure.orbits = Some(orbit);
    }
    Ok(structure)
}

/// Minimal points: `r` such that `a <= r` forces `a = r`.
pub fn roots_of_action(structure: &ActionStructure) -> Vec<Elem> {
    (0..structure.carrier as Elem).filter(|&r| structure.down(r) == [r]).collect()
}

/// Two distinct words with `w a = v a`; `v` precedes `w` in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionWitness {
    pub w: Vec<usize>,
    pub v: Vec<usize>,
    pub a: Elem,
}

impl TransitionWitness {
    /// Rechecks the witness against the action.
    pub fn holds(&self, algebra: &Algebra) -> Result<bool> {
        Ok(self.w != self.v && apply_word(algebra, &self.w, self.a)? == apply_word(algebra, &self.v, self.a)?)
    }
}

/// Searches words of length at most `length_bound` in shortlex order for a
/// failure of unique transitions. Returns the first `w` that collides with an
/// earlier word at some point, at the smallest such point.
pub fn unique_transitions_check(algebra: &Algebra, length_bound: usize) -> Result<Option<TransitionWitness>> {
    check_unary(algebra)?;
    let carrier = algebra.carrier();
    let letters = algebra.ops().len();
    let limit = crate::table_limit();
    let (mut total, mut layer_size) = (1usize, 1usize);
    let bound = if letters == 0 { 0 } else { length_bound };
    for _ in 0..bound {
        layer_size = layer_size.saturating_mul(letters);
        total = total.saturating_add(layer_size);
        if total > limit {
            return Err(Error::TableTooLarge { limit });
        }
    }

    // first word (by index into `words`) reaching each (point, endpoint)
    let mut earliest = vec![usize::MAX; carrier * carrier];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut ends: Vec<Vec<Elem>> = vec![(0..carrier as Elem).collect()];
    for a in 0..carrier {
        earliest[a * carrier + a] = 0;
    }
    let mut layer = 0..1;
    for _ in 0..bound {
        let next_start = words.len();
        for s in 0..letters {
            let map = algebra.ops()[s].table();
            for suffix in layer.clone() {
                let mut word = Vec::with_capacity(words[suffix].len() + 1);
                word.push(s);
                word.extend_from_slice(&words[suffix]);
                let end: Vec<Elem> = ends[suffix].iter().map(|&x| map[x as usize]).collect();
                let index = words.len();
                for a in 0..carrier {
                    let slot = &mut earliest[a * carrier + end[a] as usize];
                    if *slot != usize::MAX {
                        return Ok(Some(TransitionWitness { w: word, v: words[*slot].clone(), a: a as Elem }));
                    }
                    *slot = index;
                }
                words.push(word);
                ends.push(end);
            }
        }
        layer = next_start..words.len();
    }
    Ok(None)
}
