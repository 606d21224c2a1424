//! Brute-force reference implementations for cross-checking the Whitehead
//! machinery on small words.
//!
//! Everything here recomputes reduction, canonical rotations, and move
//! images from scratch on raw letter vectors; the only things shared with
//! the production code are the [`Letter`], [`Word`], and [`CyclicWord`]
//! types themselves. Sizes are capped at [`ORACLE_MAX_LEN`] letters because
//! the searches are exhaustive.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::word::{CyclicWord, Letter};

/// Hard bound on word lengths accepted by the oracle searches.
pub const ORACLE_MAX_LEN: usize = 12;

fn letter_index(l: Letter) -> usize {
    match l {
        Letter::X => 0,
        Letter::XBar => 1,
        Letter::Y => 2,
        Letter::YBar => 3,
    }
}

// Images of [x, x⁻¹, y, y⁻¹] under the seven moves, spelled out directly.
const MOVE_TABLE: [[&[Letter]; 4]; 7] = [
    // invert_x
    [&[Letter::XBar], &[Letter::X], &[Letter::Y], &[Letter::YBar]],
    // invert_y
    [&[Letter::X], &[Letter::XBar], &[Letter::YBar], &[Letter::Y]],
    // swap
    [&[Letter::Y], &[Letter::YBar], &[Letter::X], &[Letter::XBar]],
    // x -> xy
    [
        &[Letter::X, Letter::Y],
        &[Letter::YBar, Letter::XBar],
        &[Letter::Y],
        &[Letter::YBar],
    ],
    // x -> xY
    [
        &[Letter::X, Letter::YBar],
        &[Letter::Y, Letter::XBar],
        &[Letter::Y],
        &[Letter::YBar],
    ],
    // y -> yx
    [
        &[Letter::X],
        &[Letter::XBar],
        &[Letter::Y, Letter::X],
        &[Letter::XBar, Letter::YBar],
    ],
    // y -> yX
    [
        &[Letter::X],
        &[Letter::XBar],
        &[Letter::Y, Letter::XBar],
        &[Letter::X, Letter::YBar],
    ],
];

fn reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclically_reduce(mut letters: Vec<Letter>) -> Vec<Letter> {
    while letters.len() >= 2 && letters[0] == letters[letters.len() - 1].inverse() {
        letters.pop();
        letters.remove(0);
    }
    letters
}

fn canonical_rotation(letters: &[Letter]) -> Vec<Letter> {
    let n = letters.len();
    if n == 0 {
        return Vec::new();
    }
    (0..n)
        .map(|s| {
            let mut rot = Vec::with_capacity(n);
            rot.extend_from_slice(&letters[s..]);
            rot.extend_from_slice(&letters[..s]);
            rot
        })
        .min()
        .unwrap()
}

fn apply_move(letters: &[Letter], mv: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity(letters.len() * 2);
    for &l in letters {
        out.extend_from_slice(MOVE_TABLE[mv][letter_index(l)]);
    }
    canonical_rotation(&cyclically_reduce(reduce(&out)))
}

fn canonical_of(c: &CyclicWord) -> Vec<Letter> {
    canonical_rotation(&cyclically_reduce(reduce(c.letters())))
}

/// All canonical nonempty cyclic words of length at most `max_len`, ordered
/// by length then letter order.
pub fn enumerate_cyclic_words(max_len: usize) -> Result<Vec<CyclicWord>> {
    if max_len > ORACLE_MAX_LEN {
        return Err(Error::OracleBound { len: max_len, max: ORACLE_MAX_LEN });
    }
    let mut out = Vec::new();
    let mut buf: Vec<Letter> = Vec::new();
    for len in 1..=max_len {
        gather(len, &mut buf, &mut out);
    }
    Ok(out)
}

fn gather(len: usize, buf: &mut Vec<Letter>, out: &mut Vec<CyclicWord>) {
    if buf.len() == len {
        let ok_wrap = len == 1 || buf[len - 1] != buf[0].inverse();
        if ok_wrap && canonical_rotation(buf) == *buf {
            out.push(CyclicWord::from_cyclically_reduced(buf.clone()));
        }
        return;
    }
    for l in Letter::ALL {
        if let Some(&last) = buf.last() {
            if last == l.inverse() {
                continue;
            }
        }
        buf.push(l);
        gather(len, buf, out);
        buf.pop();
    }
}

/// The set of canonical cyclic words reachable from a seed by elementary
/// moves without ever exceeding `max_len` letters. When
/// `max_len >= seed.len()`, peak reduction makes this exactly the part of
/// the automorphism orbit of length at most `max_len`.
pub struct OrbitBall {
    max_len: usize,
    members: HashSet<Vec<Letter>>,
}

impl OrbitBall {
    pub fn generate(seed: &CyclicWord, max_len: usize) -> Result<OrbitBall> {
        if max_len > ORACLE_MAX_LEN {
            return Err(Error::OracleBound { len: max_len, max: ORACLE_MAX_LEN });
        }
        let start = canonical_of(seed);
        if start.len() > max_len {
            return Err(Error::OracleBound { len: start.len(), max: max_len });
        }
        let mut members = HashSet::new();
        let mut queue = VecDeque::new();
        members.insert(start.clone());
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            for mv in 0..MOVE_TABLE.len() {
                let next = apply_move(&cur, mv);
                if next.len() > max_len || members.contains(&next) {
                    continue;
                }
                members.insert(next.clone());
                queue.push_back(next);
            }
        }
        Ok(OrbitBall { max_len, members })
    }

    pub fn contains(&self, c: &CyclicWord) -> bool {
        self.members.contains(&canonical_of(c))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }
}

/// Brute-force orbit equivalence: breadth-first search from `a` among cyclic
/// words of length at most `max(|a|, |b|)`, accepting `b` or its inverse.
/// Complete for that bound by peak reduction.
pub fn bfs_orbit_oracle(a: &CyclicWord, b: &CyclicWord) -> Result<bool> {
    let ca = canonical_of(a);
    let cb = canonical_of(b);
    let cap = ca.len().max(cb.len());
    if cap > ORACLE_MAX_LEN {
        return Err(Error::OracleBound { len: cap, max: ORACLE_MAX_LEN });
    }
    let cb_inv: Vec<Letter> = {
        let inv: Vec<Letter> = cb.iter().rev().map(|l| l.inverse()).collect();
        canonical_rotation(&inv)
    };
    if ca == cb || ca == cb_inv {
        return Ok(true);
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(ca.clone());
    queue.push_back(ca);
    while let Some(cur) = queue.pop_front() {
        for mv in 0..MOVE_TABLE.len() {
            let next = apply_move(&cur, mv);
            if next.len() > cap || seen.contains(&next) {
                continue;
            }
            if next == cb || next == cb_inv {
                return Ok(true);
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(false)
}
