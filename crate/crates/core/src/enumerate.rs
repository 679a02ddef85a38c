//! Exhaustive enumeration of `B_{n,k}` and `A_{n,k}`.
//!
//! Members are produced in lexicographic order of their one-line notation
//! under ordinary integer comparison (`-n < … < -1 < 1 < … < n`). Branches are
//! pruned position by position on the drop size, so only members of the
//! restricted set are visited in full.

use crate::error::{Error, Result};
use crate::perm::{Permutation, SignedPermutation};

/// Default cap on `n` for anything that enumerates permutations.
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// Largest `n` the walker can represent at all (one bit per absolute value).
const HARD_LIMIT: usize = 63;

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap.min(HARD_LIMIT) {
        return Err(Error::TooLarge {
            what: "n",
            requested: n,
            cap: cap.min(HARD_LIMIT),
        });
    }
    Ok(())
}

/// Depth-first walk over words whose drop sizes are all at most `k`.
///
/// `advance` lends each member as a slice without allocating; the typed
/// iterators [`SignedPermutations`] and [`Permutations`] wrap it.
#[derive(Clone, Debug)]
pub struct BoundedWalk {
    n: usize,
    candidates: Vec<Vec<i32>>,
    cursor: Vec<usize>,
    current: Vec<i32>,
    used: u64,
    depth: usize,
    pending_pop: bool,
    done: bool,
}

impl BoundedWalk {
    /// Walk over `B_{n,k}` (`signed`) or `A_{n,k}`.
    pub fn new(n: usize, k: usize, signed: bool, cap: usize) -> Result<Self> {
        check_cap(n, cap)?;
        let candidates = (1..=n)
            .map(|position| {
                let negatives = (1..=n as i32)
                    .rev()
                    .map(|v| -v)
                    .filter(|_| signed && position <= k);
                let positives = (1..=n as i32).filter(|&v| position <= k + v as usize);
                negatives.chain(positives).collect()
            })
            .collect();
        Ok(BoundedWalk {
            n,
            candidates,
            cursor: vec![0; n],
            current: Vec::with_capacity(n),
            used: 0,
            depth: 0,
            pending_pop: false,
            done: false,
        })
    }

    /// Values allowed in the first position, in enumeration order.
    pub fn first_choices(&self) -> Vec<i32> {
        self.candidates.first().cloned().unwrap_or_default()
    }

    /// Restricts the walk to members starting with `first`.
    pub fn pin_first(mut self, first: i32) -> Self {
        if let Some(c) = self.candidates.first_mut() {
            c.retain(|&v| v == first);
        }
        self
    }

    /// Next member in lexicographic order.
    pub fn advance(&mut self) -> Option<&[i32]> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(&self.current);
        }
        if self.pending_pop {
            self.pop();
            self.pending_pop = false;
        }
        loop {
            let d = self.depth;
            let mut placed = false;
            while let Some(&v) = self.candidates[d].get(self.cursor[d]) {
                self.cursor[d] += 1;
                let bit = 1u64 << v.unsigned_abs();
                if self.used & bit == 0 {
                    self.used |= bit;
                    self.current.push(v);
                    placed = true;
                    break;
                }
            }
            if placed {
                if d + 1 == self.n {
                    self.pending_pop = true;
                    return Some(&self.current);
                }
                self.depth = d + 1;
                self.cursor[d + 1] = 0;
            } else if d == 0 {
                self.done = true;
                return None;
            } else {
                self.depth = d - 1;
                self.pop();
            }
        }
    }

    fn pop(&mut self) {
        let v = self.current.pop().expect("walk stack underflow");
        self.used &= !(1u64 << v.unsigned_abs());
    }
}

/// Members of `B_{n,k}` in lexicographic order.
#[derive(Clone, Debug)]
pub struct SignedPermutations(BoundedWalk);

impl Iterator for SignedPermutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<Self::Item> {
        self.0
            .advance()
            .map(|w| SignedPermutation::new_unchecked(w.to_vec()))
    }
}

/// Members of `A_{n,k}` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Permutations(BoundedWalk);

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Self::Item> {
        self.0
            .advance()
            .map(|w| Permutation::new_unchecked(w.iter().map(|&v| v as u32).collect()))
    }
}

/// `B_{n,k} = { p ∈ B_n : maxdrop_B(p) <= k }`.
pub fn bounded_signed(n: usize, k: usize, cap: usize) -> Result<SignedPermutations> {
    BoundedWalk::new(n, k, true, cap).map(SignedPermutations)
}

/// `A_{n,k} = { p ∈ S_n : maxdrop_A(p) <= k }`.
pub fn bounded_unsigned(n: usize, k: usize, cap: usize) -> Result<Permutations> {
    BoundedWalk::new(n, k, false, cap).map(Permutations)
}

/// All of `B_n`.
pub fn all_signed(n: usize, cap: usize) -> Result<SignedPermutations> {
    bounded_signed(n, n, cap)
}

/// All of `S_n`.
pub fn all_unsigned(n: usize, cap: usize) -> Result<Permutations> {
    bounded_unsigned(n, n, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_signed(n: usize) -> Vec<Vec<i32>> {
        // every sign pattern of every arrangement, then sort
        fn rec(n: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in 1..=n as i32 {
                if cur.iter().all(|c| c.abs() != v) {
                    for s in [-1, 1] {
                        cur.push(s * v);
                        rec(n, cur, out);
                        cur.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    #[test]
    fn small_cases() {
        let b10: Vec<_> = bounded_signed(1, 0, 10).unwrap().collect();
        assert_eq!(b10, vec![SignedPermutation::identity(1)]);
        assert_eq!(bounded_signed(4, 2, 10).unwrap().count(), 72);
        assert_eq!(bounded_signed(3, 3, 10).unwrap().count(), 48);
        assert_eq!(bounded_signed(0, 0, 10).unwrap().count(), 1);
        assert_eq!(all_unsigned(5, 10).unwrap().count(), 120);
    }

    #[test]
    fn lexicographic_and_filtered() {
        for n in 0..=5 {
            let everything = brute_signed(n);
            for k in 0..=n {
                let expected: Vec<Vec<i32>> = everything
                    .iter()
                    .filter(|w| crate::perm::max_drop_b(w) <= k)
                    .cloned()
                    .collect();
                let got: Vec<Vec<i32>> = bounded_signed(n, k, 10)
                    .unwrap()
                    .map(|p| p.into_values())
                    .collect();
                assert_eq!(got, expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn unsigned_respects_bound() {
        for n in 0..=6 {
            for k in 0..n.max(1) {
                for p in bounded_unsigned(n, k, 10).unwrap() {
                    assert!(p.max_drop() <= k);
                }
            }
        }
    }

    #[test]
    fn pinned_chunks_partition_the_walk() {
        let walk = BoundedWalk::new(5, 3, true, 10).unwrap();
        let whole: Vec<_> = bounded_signed(5, 3, 10).unwrap().collect();
        let mut joined = Vec::new();
        for v in walk.first_choices() {
            joined.extend(SignedPermutations(walk.clone().pin_first(v)));
        }
        assert_eq!(joined, whole);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            bounded_signed(11, 2, 10).unwrap_err(),
            Error::TooLarge {
                what: "n",
                requested: 11,
                cap: 10
            }
        );
        assert!(bounded_signed(11, 2, 11).is_ok());
    }
}
