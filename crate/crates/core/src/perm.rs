//! Permutations of strand positions in one-line form.
//!
//! A permutation maps the start position of each strand to its end position.
//! Products compose left to right: `a.compose(&b)` applies `a` first, then
//! `b`, so appending a letter to a braid word right-multiplies its
//! permutation by the corresponding transposition.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::{Error, Result};

/// A permutation of `{1, ..., n}` stored 0-based in one-line form:
/// `images[p]` is the end position of the strand starting at position `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.one_line()
    }
}

impl Permutation {
    /// The identity on `n` positions (`n >= 1`).
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation needs at least one position");
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        if n == 0 {
            return Err(Error::InvalidPermutation);
        }
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &v in one_based {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[v - 1] = true;
            images.push(v - 1);
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted == (0..images.len()).collect::<Vec<_>>()
        });
        Permutation { images }
    }

    /// One-line notation with 1-based values.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// Number of positions `n`.
    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of 0-based position `p`.
    pub fn image(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &v)| p == v)
    }

    /// `self` then `other` (left-to-right composition).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "size mismatch in composition");
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (p, &v) in self.images.iter().enumerate() {
            images[v] = p;
        }
        Permutation { images }
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn coxeter_length(&self) -> usize {
        let n = self.size();
        let mut count = 0;
        for p in 0..n {
            for q in p + 1..n {
                if self.images[p] > self.images[q] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by the adjacent transposition `s_i`
    /// (1-based generator index, `1 <= i <= n-1`): swaps the values
    /// `i` and `i+1` in one-line notation.
    pub fn right_mul_gen(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.size(), "generator index out of range");
        let lo = i - 1;
        let mut images = self.images.clone();
        let p = images.iter().position(|&v| v == lo).unwrap();
        let q = images.iter().position(|&v| v == lo + 1).unwrap();
        images.swap(p, q);
        Permutation { images }
    }

    /// Whether `s_i` is a right descent: `len(self * s_i) < len(self)`.
    pub fn right_descent(&self, i: usize) -> bool {
        assert!(i >= 1 && i < self.size(), "generator index out of range");
        let lo = i - 1;
        let p = self.images.iter().position(|&v| v == lo).unwrap();
        let q = self.images.iter().position(|&v| v == lo + 1).unwrap();
        p > q
    }

    /// The smallest `i` with a right descent, `None` for the identity.
    pub fn smallest_right_descent(&self) -> Option<usize> {
        let inv = self.inverse();
        (1..self.size()).find(|&i| inv.images[i - 1] > inv.images[i])
    }

    /// Extends by one fixed strand at the top: `S_n -> S_{n+1}`.
    pub fn embed(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(self.size());
        Permutation { images }
    }

    /// Whether the last position is fixed.
    pub fn fixes_last(&self) -> bool {
        let n = self.size();
        self.images[n - 1] == n - 1
    }

    /// Drops a fixed last strand; `None` when the last position moves.
    pub fn restricted(&self) -> Option<Permutation> {
        if self.size() < 2 || !self.fixes_last() {
            return None;
        }
        Some(Permutation {
            images: self.images[..self.size() - 1].to_vec(),
        })
    }

    /// All permutations of `{1, ..., n}` in lexicographic one-line order.
    pub fn all_lex(n: usize) -> Vec<Permutation> {
        assert!(n >= 1);
        (0..n)
            .permutations(n)
            .map(Permutation::from_images)
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}
