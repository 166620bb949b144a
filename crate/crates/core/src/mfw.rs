//! Morton-Franks-Williams bounds, sharpness certificates and the
//! classification of positive 3-strand words by braid index.
//!
//! For the closure of a positive word of length `w` on `n` strands the
//! `v`-degrees of the HOMFLYPT polynomial satisfy
//! `w - n + 1 <= min <= max <= w + n - 1`, the lower bound is always
//! attained, and `span/2 + 1` bounds the braid index from below. The upper
//! bound is attained exactly when some resolution tree has a leaf with the
//! identity permutation, which yields a constructive certificate: replaying
//! insertions of squares, letter doublings and braid relations from the
//! empty word rebuilds the input.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::homfly::Evaluator;
use crate::resolve::{find_square_split, hecke_decompose};
use crate::word::{half_twist_word, BraidWord};
use crate::{Error, Result};

/// Degree bounds and the braid-index lower bound for one closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MfwReport {
    /// `writhe - strands + 1`, the predicted minimal v-degree.
    pub lower: i32,
    /// `writhe + strands - 1`, the maximal possible v-degree.
    pub upper: i32,
    /// Actual minimal v-degree of the polynomial.
    pub dv_min: i32,
    /// Actual maximal v-degree of the polynomial.
    pub dv_max: i32,
    /// `(dv_max - dv_min)/2 + 1`, a lower bound for the braid index.
    pub mfw: usize,
    /// Whether `dv_max` attains `upper`.
    pub sharp: bool,
}

/// Computes the degree report of the closure of `w`.
pub fn mfw_report(w: &BraidWord) -> MfwReport {
    mfw_report_with(&mut Evaluator::new(), w)
}

/// Like [`mfw_report`] with a shared evaluator cache.
pub fn mfw_report_with(eval: &mut Evaluator, w: &BraidWord) -> MfwReport {
    let n = w.strands() as i32;
    let writhe = w.writhe() as i32;
    let lower = writhe - n + 1;
    let upper = writhe + n - 1;
    let p = eval.homfly(w);
    let (dv_min, dv_max) = p
        .v_degree_bounds()
        .expect("positive braid closures have nonzero polynomials");
    assert_eq!(dv_min, lower, "the lower degree bound is always attained");
    assert!(dv_max <= upper, "upper degree bound violated");
    assert_eq!((dv_max - dv_min) % 2, 0, "v-degrees share one parity");
    MfwReport {
        lower,
        upper,
        dv_min,
        dv_max,
        mfw: ((dv_max - dv_min) / 2 + 1) as usize,
        sharp: dv_max == upper,
    }
}

/// Whether the upper degree bound is attained, decided combinatorially:
/// the decomposition of `w` over simple braids contains the identity.
pub fn is_mfw_sharp(w: &BraidWord) -> bool {
    hecke_decompose(w).contains_identity()
}

/// The two positive braid relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// `sigma_i sigma_j = sigma_j sigma_i` for `|i - j| >= 2`.
    Commute,
    /// `sigma_i sigma_j sigma_i = sigma_j sigma_i sigma_j` for `|i - j| = 1`.
    BraidMove,
}

/// One step of a sharpness certificate, applied to a growing word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CertStep {
    /// Insert `sigma_letter^2` at `position`.
    InsertSquare { letter: usize, position: usize },
    /// Duplicate the letter at `position`.
    DoubleLetter { position: usize },
    /// Apply one braid relation whose pattern starts at `position`.
    BraidRelation { position: usize, kind: RelationKind },
}

/// A replayable witness that the upper degree bound is attained: starting
/// from the empty word, the steps rebuild a word representing the input
/// braid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub strands: usize,
    pub steps: Vec<CertStep>,
}

impl Certificate {
    /// Replays the steps from the empty word, validating every
    /// precondition.
    pub fn replay(&self) -> Result<BraidWord> {
        let mut letters: Vec<usize> = Vec::new();
        for (idx, step) in self.steps.iter().enumerate() {
            let fail = |reason: String| Error::CertificateReplay { step: idx, reason };
            match *step {
                CertStep::InsertSquare { letter, position } => {
                    if letter < 1 || letter >= self.strands {
                        return Err(fail(format!("letter {letter} out of range")));
                    }
                    if position > letters.len() {
                        return Err(fail(format!("position {position} beyond word end")));
                    }
                    letters.splice(position..position, [letter, letter]);
                }
                CertStep::DoubleLetter { position } => {
                    if position >= letters.len() {
                        return Err(fail(format!("position {position} beyond word end")));
                    }
                    let letter = letters[position];
                    letters.insert(position + 1, letter);
                }
                CertStep::BraidRelation { position, kind: RelationKind::Commute } => {
                    if position + 1 >= letters.len() {
                        return Err(fail(format!("position {position} beyond word end")));
                    }
                    let (a, b) = (letters[position], letters[position + 1]);
                    if a.abs_diff(b) < 2 {
                        return Err(fail(format!("letters {a}, {b} do not commute")));
                    }
                    letters.swap(position, position + 1);
                }
                CertStep::BraidRelation { position, kind: RelationKind::BraidMove } => {
                    if position + 2 >= letters.len() {
                        return Err(fail(format!("position {position} beyond word end")));
                    }
                    let (a, b, c) =
                        (letters[position], letters[position + 1], letters[position + 2]);
                    if a != c || a.abs_diff(b) != 1 {
                        return Err(fail(format!("no braid-move pattern at {a} {b} {c}")));
                    }
                    letters[position] = b;
                    letters[position + 1] = a;
                    letters[position + 2] = b;
                }
            }
        }
        BraidWord::new(self.strands, letters)
    }
}

/// Builds a certificate when the bound is sharp: follow the deterministic
/// resolution tree from `w` down to an identity leaf (preferring left
/// children), then reverse the path. A left edge reversed inserts a
/// square, a right edge reversed doubles a letter, and braid relations
/// restore the scanned prefix that the split rewrote into canonical form.
/// Replaying the certificate reproduces `w` letter for letter.
pub fn sharpness_certificate(w: &BraidWord) -> Option<Certificate> {
    if !is_mfw_sharp(w) {
        return None;
    }
    // Each edge records the rewritten stretch: after replaying the child
    // and the insertion or doubling, the word starts with the canonical
    // reduced prefix plus the split letter (`from`), while the parent
    // starts with its original scanned prefix (`scanned`). Both are
    // reduced words of the same permutation, so braid relations connect
    // them without touching anything to their right.
    struct PathEdge {
        step: CertStep,
        from: BraidWord,
        scanned: BraidWord,
    }
    let mut edges: Vec<PathEdge> = Vec::new();
    let mut cur = w.clone();
    while let Some(split) = find_square_split(&cur) {
        let scanned_len = split.prefix.len() + 1;
        let scanned = BraidWord::new(cur.strands(), cur.letters()[..scanned_len].to_vec())
            .expect("prefix of a valid word");
        let mut from_letters = split.prefix.letters().to_vec();
        from_letters.push(split.letter);
        let from = BraidWord::new(cur.strands(), from_letters)
            .expect("split letters come from valid words");
        let left_word = split.prefix.concat(&split.suffix);
        let (step, child) = if hecke_decompose(&left_word).contains_identity() {
            (
                CertStep::InsertSquare { letter: split.letter, position: split.prefix.len() },
                left_word,
            )
        } else {
            let mut letters = split.prefix.letters().to_vec();
            letters.push(split.letter);
            letters.extend_from_slice(split.suffix.letters());
            let right_word = BraidWord::new(cur.strands(), letters)
                .expect("split letters come from valid words");
            debug_assert!(hecke_decompose(&right_word).contains_identity());
            (CertStep::DoubleLetter { position: split.prefix.len() }, right_word)
        };
        edges.push(PathEdge { step, from, scanned });
        cur = child;
    }
    debug_assert!(cur.is_empty(), "the identity leaf is the empty word");

    let mut steps: Vec<CertStep> = Vec::new();
    for edge in edges.into_iter().rev() {
        steps.push(edge.step);
        steps.extend(connect_reduced_words(&edge.from, &edge.scanned));
    }
    let cert = Certificate { strands: w.strands(), steps };
    debug_assert_eq!(cert.replay().as_ref(), Ok(w));
    Some(cert)
}

/// Connects two reduced words of the same permutation by explicit braid
/// relations (no squares are ever needed between reduced words). The
/// returned moves transform `from` into `to`; positions refer to the word
/// being rewritten and stay valid when the word is a prefix of a longer
/// one.
fn connect_reduced_words(from: &BraidWord, to: &BraidWord) -> Vec<CertStep> {
    debug_assert_eq!(from.permutation(), to.permutation());
    debug_assert_eq!(from.len(), to.len());
    if from.letters() == to.letters() {
        return Vec::new();
    }
    let len = from.len();
    let s = *from.letters().last().unwrap();
    let t = *to.letters().last().unwrap();
    let strands = from.strands();
    if s == t {
        let shorter_from = BraidWord::new(strands, from.letters()[..len - 1].to_vec()).unwrap();
        let shorter_to = BraidWord::new(strands, to.letters()[..len - 1].to_vec()).unwrap();
        return connect_reduced_words(&shorter_from, &shorter_to);
    }
    // Both s and t are right descents of the permutation, so it factors
    // through the longest element of the parabolic subgroup <s, t>.
    let a = from.permutation();
    let (end_s, end_t, kind) = if s.abs_diff(t) >= 2 {
        (vec![t, s], vec![s, t], RelationKind::Commute)
    } else {
        (vec![s, t, s], vec![t, s, t], RelationKind::BraidMove)
    };
    let mut b = a.clone();
    for &x in end_s.iter().rev() {
        b = b.right_mul_gen(x);
    }
    debug_assert_eq!(b.coxeter_length() + end_s.len(), a.coxeter_length());
    let root = crate::word::reduced_word(&b);
    let mid = root.len();
    let mut letters_s = root.letters().to_vec();
    letters_s.extend_from_slice(&end_s);
    let mut letters_t = root.letters().to_vec();
    letters_t.extend_from_slice(&end_t);
    let via_s = BraidWord::new(strands, letters_s).unwrap();
    let via_t = BraidWord::new(strands, letters_t).unwrap();
    let mut steps = connect_reduced_words(from, &via_s);
    steps.push(CertStep::BraidRelation { position: mid, kind });
    steps.extend(connect_reduced_words(&via_t, to));
    steps
}

/// The word families whose closures always attain the upper degree bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Cor6Family {
    /// Every maximal cyclic run of one generator has length at least two.
    AllExponentsAtLeastTwo,
    /// Even length and equal to its own reversal.
    EvenPalindrome,
    /// The canonical full-twist word occurs as a contiguous factor, found
    /// by a bounded search over positive braid relations.
    ContainsDeltaSquared,
}

/// Recognizes the guaranteed-sharp families with the default rewriting
/// depth of 3 for the full-twist search.
pub fn corollary6_family(w: &BraidWord) -> Option<Cor6Family> {
    corollary6_family_with_depth(w, 3)
}

/// Recognizer with a configurable rewriting depth. The full-twist check is
/// best effort: a returned tag is always correct, but deeply hidden
/// factors may be missed.
pub fn corollary6_family_with_depth(w: &BraidWord, rewrite_depth: usize) -> Option<Cor6Family> {
    if cyclic_run_lengths(w.letters()).iter().all(|&r| r >= 2) {
        return Some(Cor6Family::AllExponentsAtLeastTwo);
    }
    if w.len() % 2 == 0 && w.letters() == w.reversed().letters() {
        return Some(Cor6Family::EvenPalindrome);
    }
    if contains_delta_squared(w, rewrite_depth) {
        return Some(Cor6Family::ContainsDeltaSquared);
    }
    None
}

/// Maximal runs of equal letters, read cyclically: a run may wrap from
/// the end of the word to the start.
fn cyclic_run_lengths(letters: &[usize]) -> Vec<usize> {
    let len = letters.len();
    if len == 0 {
        return Vec::new();
    }
    let first_boundary = (0..len).find(|&i| letters[i] != letters[(i + len - 1) % len]);
    let start = match first_boundary {
        None => return vec![len],
        Some(i) => i,
    };
    let mut runs = Vec::new();
    let mut run = 1;
    for off in 1..len {
        let prev = letters[(start + off + len - 1) % len];
        let cur = letters[(start + off) % len];
        if cur == prev {
            run += 1;
        } else {
            runs.push(run);
            run = 1;
        }
    }
    runs.push(run);
    runs
}

fn contains_delta_squared(w: &BraidWord, depth: usize) -> bool {
    let n = w.strands();
    if n < 2 {
        return false;
    }
    let half = half_twist_word(n);
    let mut target = half.letters().to_vec();
    target.extend_from_slice(half.letters());
    if w.len() < target.len() {
        return false;
    }
    let has_factor =
        |letters: &[usize]| letters.windows(target.len()).any(|win| win == target.as_slice());
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<(BraidWord, usize)> = VecDeque::new();
    seen.insert(w.letters().to_vec());
    queue.push_back((w.clone(), 0));
    while let Some((cur, d)) = queue.pop_front() {
        if has_factor(cur.letters()) {
            return true;
        }
        if d == depth {
            continue;
        }
        for nb in cur.relation_neighbors() {
            if seen.insert(nb.letters().to_vec()) {
                queue.push_back((nb, d + 1));
            }
        }
    }
    false
}

/// The conjugacy families of positive 3-strand words with braid index
/// below three, recognized up to cyclic permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "name")]
pub enum ThreeStrandFamily {
    /// `sigma_1 sigma_2^p` or `sigma_2 sigma_1^p`, `p >= 0`.
    Family1 { p: usize },
    /// `sigma_1 sigma_2 sigma_1^p sigma_2^q` or
    /// `sigma_2 sigma_1 sigma_2^p sigma_1^q`, `p, q >= 1`.
    Family2 { p: usize, q: usize },
}

/// Braid-index classification of a positive 3-strand word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification3 {
    /// The braid index of the closure (for positive 3-strand words the
    /// lower bound is exact).
    pub index: usize,
    /// The matched family when the index is below three.
    pub family: Option<ThreeStrandFamily>,
}

fn family_of_rotation(letters: &[usize]) -> Option<ThreeStrandFamily> {
    let len = letters.len();
    if letters[0] <= 2 && letters[1..].iter().all(|&l| l == 3 - letters[0]) {
        return Some(ThreeStrandFamily::Family1 { p: len - 1 });
    }
    if len >= 4 && letters[0].abs_diff(letters[1]) == 1 {
        let (x, y) = (letters[0], letters[1]);
        let p = letters[2..].iter().take_while(|&&l| l == x).count();
        let q = len - 2 - p;
        if p >= 1 && q >= 1 && letters[2 + p..].iter().all(|&l| l == y) {
            return Some(ThreeStrandFamily::Family2 { p, q });
        }
    }
    None
}

/// Matches one of the two index-two families against every cyclic
/// rotation of `w`; the first matching rotation wins.
pub fn three_strand_family(w: &BraidWord) -> Option<ThreeStrandFamily> {
    if w.is_empty() {
        return None;
    }
    (0..w.len()).find_map(|k| family_of_rotation(w.cyclic_shift(k as i64).letters()))
}

/// Classifies a positive 3-strand word: braid index of the closure plus
/// the matched family for index below three. The trivial word classifies
/// as index 3 with no family.
pub fn classify3(w: &BraidWord) -> Result<Classification3> {
    if w.strands() != 3 {
        return Err(Error::NotThreeStrands(w.strands()));
    }
    let report = mfw_report(w);
    let family = three_strand_family(w);
    Ok(Classification3 { index: report.mfw, family })
}

/// The conjugacy normal-form parameter: a word conjugate to
/// `sigma_1^p sigma_2` reports `p`. Family one maps to its exponent,
/// family two to `p + q + 1`; `None` when no family matches.
pub fn conjugation_normal_form3(w: &BraidWord) -> Result<Option<usize>> {
    if w.strands() != 3 {
        return Err(Error::NotThreeStrands(w.strands()));
    }
    Ok(three_strand_family(w).map(|family| match family {
        ThreeStrandFamily::Family1 { p } => p,
        ThreeStrandFamily::Family2 { p, q } => p + q + 1,
    }))
}
