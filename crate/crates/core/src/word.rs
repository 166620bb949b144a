//! Positive braid words and the simple (permutation) braids inside them.
//!
//! A word on `n` strands is a sequence of 1-based generator indices
//! `1..=n-1`; reading order is left to right, so the permutation of a word
//! is built by right-multiplying one transposition per letter. A word is
//! *simple* when its length equals the Coxeter length of its permutation;
//! simple braids are in bijection with permutations.

use std::fmt;

use itertools::Itertools;

use crate::perm::Permutation;
use crate::{Error, Result};

/// A positive braid word with an explicit strand count.
///
/// The strand count may exceed `max letter + 1`; unused strands stay part
/// of the braid (their closure contributes split unknot components).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    /// Validates every letter against the strand count.
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidStrandCount);
        }
        for &letter in &letters {
            if letter < 1 || letter >= strands {
                return Err(Error::LetterOutOfRange { letter, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The empty word on `n` strands.
    pub fn empty(strands: usize) -> Result<Self> {
        BraidWord::new(strands, Vec::new())
    }

    pub(crate) fn from_parts(strands: usize, letters: Vec<usize>) -> Self {
        debug_assert!(strands >= 1 && letters.iter().all(|&l| l >= 1 && l < strands));
        BraidWord { strands, letters }
    }

    /// Parses a word, inferring the strand count as `max letter + 1`.
    ///
    /// Two syntaxes are accepted: a compact digit string like `32322323`
    /// (each character one generator, so only generators up to 9), or
    /// whitespace-separated integers like `3 2 3 2 2 3 2 3`. A string
    /// without whitespace is always read as compact digits. The empty
    /// string is the empty word on one strand.
    pub fn parse(text: &str) -> Result<Self> {
        BraidWord::parse_with_strands(text, None)
    }

    /// Like [`BraidWord::parse`], but with an optional declared strand
    /// count, which may only raise the inferred one.
    pub fn parse_with_strands(text: &str, strands: Option<usize>) -> Result<Self> {
        let trimmed = text.trim();
        let letters: Vec<usize> = if trimmed.is_empty() {
            Vec::new()
        } else if trimmed.split_whitespace().nth(1).is_some() {
            trimmed
                .split_whitespace()
                .map(|tok| match tok.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v),
                    _ => Err(Error::WordSyntax(tok.to_string())),
                })
                .collect::<Result<_>>()?
        } else {
            trimmed
                .chars()
                .map(|ch| match ch.to_digit(10) {
                    Some(d) if d >= 1 => Ok(d as usize),
                    _ => Err(Error::WordSyntax(ch.to_string())),
                })
                .collect::<Result<_>>()?
        };
        let required = letters.iter().max().map_or(1, |&m| m + 1);
        let n = match strands {
            None => required,
            Some(s) if s >= required => s,
            Some(s) => {
                return Err(Error::StrandsTooSmall { given: s, required });
            }
        };
        BraidWord::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Writhe of the closure; every letter is a positive crossing.
    pub fn writhe(&self) -> usize {
        self.letters.len()
    }

    /// The permutation obtained by reading the word left to right.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &letter in &self.letters {
            p = p.right_mul_gen(letter);
        }
        p
    }

    /// Whether the word is a reduced expression of its permutation.
    pub fn is_simple(&self) -> bool {
        self.len() == self.permutation().coxeter_length()
    }

    /// The word read backwards (the reverse braid).
    pub fn reversed(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        BraidWord { strands: self.strands, letters }
    }

    /// Rotates the word `k` places to the left (negative `k` rotates right);
    /// the closure is unchanged.
    pub fn cyclic_shift(&self, k: i64) -> BraidWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let len = self.letters.len() as i64;
        let k = k.rem_euclid(len) as usize;
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        BraidWord { strands: self.strands, letters }
    }

    /// Concatenation; both words must share the strand count.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand count mismatch in concat");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// The word with one letter appended.
    pub fn pushed(&self, letter: usize) -> Result<BraidWord> {
        if letter < 1 || letter >= self.strands {
            return Err(Error::LetterOutOfRange { letter, strands: self.strands });
        }
        let mut letters = self.letters.clone();
        letters.push(letter);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The same letters on a larger strand count.
    pub fn widened(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::StrandsTooSmall { given: strands, required: self.strands });
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// Swaps the letters at `p` and `p+1` when they commute
    /// (`|i - j| >= 2`); `None` otherwise.
    pub fn commuted_at(&self, p: usize) -> Option<BraidWord> {
        if p + 1 >= self.len() {
            return None;
        }
        let (a, b) = (self.letters[p], self.letters[p + 1]);
        if a.abs_diff(b) < 2 {
            return None;
        }
        let mut letters = self.letters.clone();
        letters.swap(p, p + 1);
        Some(BraidWord { strands: self.strands, letters })
    }

    /// Rewrites `i j i -> j i j` at positions `p..p+3` for adjacent
    /// generators (`|i - j| = 1`); `None` when the pattern is absent.
    pub fn braid_moved_at(&self, p: usize) -> Option<BraidWord> {
        if p + 2 >= self.len() {
            return None;
        }
        let (a, b, c) = (self.letters[p], self.letters[p + 1], self.letters[p + 2]);
        if a != c || a.abs_diff(b) != 1 {
            return None;
        }
        let mut letters = self.letters.clone();
        letters[p] = b;
        letters[p + 1] = a;
        letters[p + 2] = b;
        Some(BraidWord { strands: self.strands, letters })
    }

    /// All words one positive braid relation away from this one.
    pub fn relation_neighbors(&self) -> Vec<BraidWord> {
        let mut out = Vec::new();
        for p in 0..self.len() {
            if let Some(w) = self.commuted_at(p) {
                out.push(w);
            }
            if let Some(w) = self.braid_moved_at(p) {
                out.push(w);
            }
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&l| l <= 9) {
            for &l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.letters.iter().join(" "))
        }
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(n={}, \"{}\")", self.strands, self)
    }
}

/// The canonical reduced word of a permutation: repeatedly peel off the
/// smallest right descent, collecting letters back to front. The result is
/// a simple word whose permutation is `a`.
pub fn reduced_word(a: &Permutation) -> BraidWord {
    let mut cur = a.clone();
    let mut letters = Vec::with_capacity(a.coxeter_length());
    while let Some(i) = cur.smallest_right_descent() {
        letters.push(i);
        cur = cur.right_mul_gen(i);
    }
    letters.reverse();
    BraidWord::from_parts(a.size(), letters)
}

/// Splits a simple braid that moves the last strand off its top strand.
///
/// For `a` in `S_n` with `a(n) = k != n` there is a unique `a'` in
/// `S_{n-1}` with `a = a' s_{n-1} s_{n-2} ... s_k`, so the closure of the
/// simple braid of `a` destabilizes: removing strand `n` together with the
/// single `sigma_{n-1}` crossing leaves the `(n-1)`-strand word
/// `reduced_word(a') . sigma_{n-2} ... sigma_k` (the tail is empty when
/// `k = n-1`). Returns `(a', k, tail)`.
pub fn destabilize_simple(a: &Permutation) -> Result<(Permutation, usize, BraidWord)> {
    let n = a.size();
    if a.fixes_last() {
        return Err(Error::FixesLastStrand);
    }
    let k = a.image(n - 1) + 1;
    let mut images = Vec::with_capacity(n - 1);
    for p in 0..n - 1 {
        let v = a.image(p);
        images.push(if v < k { v } else { v - 1 });
    }
    let rest = Permutation::from_images(images);
    let tail_letters: Vec<usize> = (k..=n.saturating_sub(2)).rev().collect();
    let tail = BraidWord::from_parts(n - 1, tail_letters);
    debug_assert!({
        // Reconstruction invariant: reduced_word(a') followed by
        // sigma_{n-1} ... sigma_k is a simple word for `a` in B_n.
        let mut letters = reduced_word(&rest).letters().to_vec();
        letters.extend((k..=n - 1).rev());
        let rebuilt = BraidWord::from_parts(n, letters);
        rebuilt.is_simple() && rebuilt.permutation() == *a
    });
    Ok((rest, k, tail))
}

/// The positive half twist `Delta` on `n` strands:
/// `sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1)`.
pub fn half_twist_word(n: usize) -> BraidWord {
    assert!(n >= 1);
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for k in 1..n {
        letters.extend((1..=k).rev());
    }
    BraidWord::from_parts(n, letters)
}
