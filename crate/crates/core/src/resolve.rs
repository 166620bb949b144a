//! Resolution of positive words into simple braids.
//!
//! A non-simple positive word contains a square: scanning left to right,
//! the first letter `j` that is a right descent of the permutation of the
//! prefix read so far rewrites the word as `P sigma_j^2 Q` with `P` the
//! canonical reduced word of that shorter permutation. Resolving the square
//! with `sigma_j^2 = v z sigma_j + v^2` yields a binary tree whose leaves
//! are simple words, and collecting leaves by permutation expresses the
//! braid over the basis of simple braids with coefficients in `N[v, z]`.

use std::collections::BTreeMap;

use crate::perm::Permutation;
use crate::poly::Laurent2;
use crate::word::{BraidWord, reduced_word};

/// A factorization `P sigma_letter^2 Q` of a word located by the
/// first-descent scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSplit {
    /// Canonical reduced word of the scanned prefix with one `letter` removed.
    pub prefix: BraidWord,
    /// The doubled generator.
    pub letter: usize,
    /// The letters after the split point, unchanged.
    pub suffix: BraidWord,
}

/// Finds the first square in `w`: scanning letters left to right and
/// maintaining the permutation `a` of the prefix read so far, the first
/// letter `j` with `a.right_descent(j)` produces
/// `(reduced_word(a * s_j), j, remaining letters)`. Returns `None` when
/// the word is simple.
pub fn find_square_split(w: &BraidWord) -> Option<SquareSplit> {
    let mut a = Permutation::identity(w.strands());
    for (pos, &letter) in w.letters().iter().enumerate() {
        if a.right_descent(letter) {
            let prefix = reduced_word(&a.right_mul_gen(letter));
            let suffix = BraidWord::new(w.strands(), w.letters()[pos + 1..].to_vec())
                .expect("suffix letters come from a valid word");
            return Some(SquareSplit { prefix, letter, suffix });
        }
        a = a.right_mul_gen(letter);
    }
    None
}

/// A binary resolution tree. Leaves hold simple words; an internal node
/// holds the split of its word, a left child for `P Q` (edge weight `v^2`)
/// and a right child for `P sigma_j Q` (edge weight `v z`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTree {
    word: BraidWord,
    split: Option<Box<TreeSplit>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSplit {
    pub letter: usize,
    pub prefix: BraidWord,
    pub suffix: BraidWord,
    pub left: ResolutionTree,
    pub right: ResolutionTree,
}

/// Builds the deterministic resolution tree of `w` by repeated
/// first-descent splitting.
pub fn build_tree(w: &BraidWord) -> ResolutionTree {
    match find_square_split(w) {
        None => ResolutionTree { word: w.clone(), split: None },
        Some(split) => {
            let left_word = split.prefix.concat(&split.suffix);
            let mut right_letters = split.prefix.letters().to_vec();
            right_letters.push(split.letter);
            right_letters.extend_from_slice(split.suffix.letters());
            let right_word = BraidWord::new(w.strands(), right_letters)
                .expect("split letters come from valid words");
            ResolutionTree {
                word: w.clone(),
                split: Some(Box::new(TreeSplit {
                    letter: split.letter,
                    prefix: split.prefix,
                    suffix: split.suffix,
                    left: build_tree(&left_word),
                    right: build_tree(&right_word),
                })),
            }
        }
    }
}

impl ResolutionTree {
    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn split(&self) -> Option<&TreeSplit> {
        self.split.as_deref()
    }

    pub fn is_leaf(&self) -> bool {
        self.split.is_none()
    }

    pub fn leaf_count(&self) -> usize {
        match &self.split {
            None => 1,
            Some(s) => s.left.leaf_count() + s.right.leaf_count(),
        }
    }

    /// Collects leaves by permutation: a leaf reached through `a` right
    /// edges and `L` left edges contributes `z^a v^(a + 2L)`, and the
    /// total `v`-exponent per leaf is `writhe - coxeter_length(leaf)`.
    pub fn decomposition(&self) -> HeckeDecomposition {
        let mut dec = HeckeDecomposition::new(self.word.strands());
        self.walk(0, 0, &mut dec);
        dec
    }

    fn walk(&self, rights: u32, lefts: u32, dec: &mut HeckeDecomposition) {
        match &self.split {
            None => {
                let a = rights as i32;
                let e = a + 2 * lefts as i32;
                dec.add(self.word.permutation(), &Laurent2::monomial(1, e, a));
            }
            Some(s) => {
                s.left.walk(rights, lefts + 1, dec);
                s.right.walk(rights + 1, lefts, dec);
            }
        }
    }

    /// JSON value: leaves are `{"word": ..., "split": null}`, internal
    /// nodes carry `i`, `left`, `right` and the fixed edge labels.
    pub fn to_json(&self) -> serde_json::Value {
        match &self.split {
            None => serde_json::json!({
                "word": self.word.to_string(),
                "split": null,
            }),
            Some(s) => serde_json::json!({
                "word": self.word.to_string(),
                "i": s.letter,
                "left": s.left.to_json(),
                "right": s.right.to_json(),
                "left_label": "v^2",
                "right_label": "v*z",
            }),
        }
    }

    /// GraphViz rendering; node identifiers encode the path from the root
    /// so repeated words stay distinct nodes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph resolution_tree {\n  node [shape=box];\n");
        self.dot_nodes("r", &mut out);
        out.push_str("}\n");
        out
    }

    fn dot_nodes(&self, id: &str, out: &mut String) {
        let label = if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.to_string()
        };
        out.push_str(&format!("  \"{id}\" [label=\"{label}\"];\n"));
        if let Some(s) = &self.split {
            let left_id = format!("{id}L");
            let right_id = format!("{id}R");
            s.left.dot_nodes(&left_id, out);
            s.right.dot_nodes(&right_id, out);
            out.push_str(&format!("  \"{id}\" -> \"{left_id}\" [label=\"v^2\"];\n"));
            out.push_str(&format!("  \"{id}\" -> \"{right_id}\" [label=\"v z\"];\n"));
        }
    }
}

/// Coordinates of a positive word over the basis of simple braids:
/// permutation -> coefficient in `N[v, z]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeDecomposition {
    strands: usize,
    coeffs: BTreeMap<Permutation, Laurent2>,
}

impl HeckeDecomposition {
    fn new(strands: usize) -> Self {
        HeckeDecomposition { strands, coeffs: BTreeMap::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Entries in lexicographic order of one-line notation.
    pub fn coeffs(&self) -> &BTreeMap<Permutation, Laurent2> {
        &self.coeffs
    }

    pub fn get(&self, a: &Permutation) -> Option<&Laurent2> {
        self.coeffs.get(a)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Whether the identity permutation carries a nonzero coefficient.
    pub fn contains_identity(&self) -> bool {
        self.coeffs
            .get(&Permutation::identity(self.strands))
            .is_some()
    }

    fn add(&mut self, a: Permutation, c: &Laurent2) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(a).or_insert_with(Laurent2::zero);
        *entry = &*entry + c;
        debug_assert!(!entry.is_zero(), "coefficients stay in N[v, z]");
    }
}

/// Iterative decomposition over the simple-braid basis, one letter at a
/// time: a letter that lengthens a permutation moves its coefficient, and
/// a letter that shortens it applies `sigma_i^2 = v z sigma_i + v^2`. The
/// live state stays bounded by `n!` instead of the tree's leaf count.
pub fn hecke_decompose(w: &BraidWord) -> HeckeDecomposition {
    let n = w.strands();
    let vz = Laurent2::monomial(1, 1, 1);
    let vv = Laurent2::monomial(1, 2, 0);
    let mut coeffs: BTreeMap<Permutation, Laurent2> = BTreeMap::new();
    coeffs.insert(Permutation::identity(n), Laurent2::one());
    for &letter in w.letters() {
        let mut next: BTreeMap<Permutation, Laurent2> = BTreeMap::new();
        for (a, c) in coeffs {
            let moved = a.right_mul_gen(letter);
            if a.right_descent(letter) {
                add_into(&mut next, moved, &(&c * &vv));
                add_into(&mut next, a, &(&c * &vz));
            } else {
                add_into(&mut next, moved, &c);
            }
        }
        coeffs = next;
    }
    HeckeDecomposition { strands: n, coeffs }
}

fn add_into(map: &mut BTreeMap<Permutation, Laurent2>, a: Permutation, c: &Laurent2) {
    let entry = map.entry(a).or_insert_with(Laurent2::zero);
    *entry = &*entry + c;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(strands: usize, letters: &[usize]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    fn perm(one_based: &[usize]) -> Permutation {
        Permutation::from_one_line(one_based).unwrap()
    }

    #[test]
    fn split_of_square() {
        let s = find_square_split(&word(2, &[1, 1])).unwrap();
        assert!(s.prefix.is_empty());
        assert_eq!(s.letter, 1);
        assert!(s.suffix.is_empty());
    }

    #[test]
    fn split_of_sigma1212() {
        // sigma_1 sigma_2 sigma_1 sigma_2 = (sigma_2 sigma_1) sigma_2^2.
        let s = find_square_split(&word(3, &[1, 2, 1, 2])).unwrap();
        assert_eq!(s.letter, 2);
        assert!(s.suffix.is_empty());
        assert_eq!(s.prefix.len(), 2);
        assert_eq!(s.prefix.permutation(), word(3, &[2, 1]).permutation());
        assert_eq!(s.prefix, word(3, &[2, 1]));
    }

    #[test]
    fn split_bookkeeping_invariants() {
        // P is simple, P sigma_j is simple, and lengths account for the
        // two dropped letters.
        for letters in [
            vec![1, 1],
            vec![1, 2, 1, 2],
            vec![3, 2, 3, 2, 2, 3, 2, 3],
            vec![1, 2, 2, 1, 3],
        ] {
            let w = BraidWord::parse_with_strands(
                &letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "),
                None,
            )
            .unwrap();
            let s = find_square_split(&w).unwrap();
            assert!(s.prefix.is_simple());
            let with_j = s.prefix.pushed(s.letter).unwrap();
            assert!(with_j.is_simple());
            assert_eq!(s.prefix.len() + 2 + s.suffix.len(), w.len());
            // The scanned prefix has the same permutation as P sigma_j.
            let pos = s.prefix.len() + 1;
            let scanned = BraidWord::new(w.strands(), w.letters()[..pos].to_vec()).unwrap();
            assert_eq!(scanned.permutation(), with_j.permutation());
        }
    }

    #[test]
    fn simple_words_do_not_split() {
        assert!(find_square_split(&word(3, &[1, 2, 1])).is_none());
        assert!(find_square_split(&word(3, &[])).is_none());
        assert!(find_square_split(&word(4, &[1, 2, 1, 3, 2, 1])).is_none());
    }

    #[test]
    fn tree_of_simple_word_is_leaf() {
        let t = build_tree(&word(3, &[1, 2, 1]));
        assert!(t.is_leaf());
        assert_eq!(t.leaf_count(), 1);
        let dec = t.decomposition();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.get(&perm(&[3, 2, 1])), Some(&Laurent2::one()));
    }

    #[test]
    fn tree_of_square() {
        let t = build_tree(&word(2, &[1, 1]));
        assert_eq!(t.leaf_count(), 2);
        let dec = t.decomposition();
        assert_eq!(dec.get(&perm(&[1, 2])), Some(&Laurent2::monomial(1, 2, 0)));
        assert_eq!(dec.get(&perm(&[2, 1])), Some(&Laurent2::monomial(1, 1, 1)));
    }

    #[test]
    fn iterative_matches_tree_collection() {
        for letters in [
            vec![],
            vec![1, 1],
            vec![1, 2, 1, 2],
            vec![1, 1, 2, 2, 1, 1],
            vec![3, 2, 3, 2, 2, 3, 2, 3],
        ] {
            let w = BraidWord::new(4, letters).unwrap();
            assert_eq!(hecke_decompose(&w), build_tree(&w).decomposition());
        }
    }

    #[test]
    fn decomposition_of_empty_word() {
        let dec = hecke_decompose(&word(3, &[]));
        assert_eq!(dec.len(), 1);
        assert!(dec.contains_identity());
        assert_eq!(dec.get(&Permutation::identity(3)), Some(&Laurent2::one()));
    }

    #[test]
    fn coefficient_monomial_shape() {
        // Every coefficient of alpha is a sum of z^a v^e terms with
        // e = writhe - coxeter_length(alpha) and 0 <= a <= e.
        let w = word(4, &[3, 2, 3, 2, 2, 3, 2, 3]);
        let dec = hecke_decompose(&w);
        for (a, c) in dec.coeffs() {
            let e = (w.writhe() - a.coxeter_length()) as i32;
            for ((dv, dz), coeff) in c.terms() {
                assert_eq!(dv, e);
                assert!((0..=e).contains(&dz));
                assert!(coeff > 0);
            }
        }
    }

    #[test]
    fn specializing_v_one_gives_classical_coordinates() {
        // Independent single-variable recursion: sigma_i^2 = z sigma_i + 1.
        fn decompose_v1(w: &BraidWord) -> BTreeMap<Permutation, Laurent2> {
            let z = Laurent2::monomial(1, 0, 1);
            let mut coeffs = BTreeMap::new();
            coeffs.insert(Permutation::identity(w.strands()), Laurent2::one());
            for &letter in w.letters() {
                let mut next: BTreeMap<Permutation, Laurent2> = BTreeMap::new();
                for (a, c) in coeffs {
                    let moved = a.right_mul_gen(letter);
                    if a.right_descent(letter) {
                        add_into(&mut next, moved, &c);
                        add_into(&mut next, a, &(&c * &z));
                    } else {
                        add_into(&mut next, moved, &c);
                    }
                }
                coeffs = next;
            }
            coeffs
        }
        for letters in [vec![1, 1], vec![1, 2, 1, 2], vec![3, 2, 3, 2, 2, 3, 2, 3]] {
            let w = BraidWord::new(4, letters).unwrap();
            let dec = hecke_decompose(&w);
            let expected = decompose_v1(&w);
            assert_eq!(dec.coeffs().len(), expected.len());
            for (a, c) in dec.coeffs() {
                assert_eq!(&c.specialize_v_one(), expected.get(a).unwrap());
            }
        }
    }

    #[test]
    fn tree_json_shape() {
        let t = build_tree(&word(2, &[1, 1]));
        let json = t.to_json();
        assert_eq!(json["word"], "11");
        assert_eq!(json["i"], 1);
        assert_eq!(json["left_label"], "v^2");
        assert_eq!(json["right_label"], "v*z");
        assert_eq!(json["left"]["word"], "");
        assert!(json["left"]["split"].is_null());
        assert_eq!(json["right"]["word"], "1");
    }

    #[test]
    fn tree_dot_shape() {
        let dot = build_tree(&word(2, &[1, 1])).to_dot();
        assert!(dot.starts_with("digraph resolution_tree {"));
        assert!(dot.contains("\"r\" [label=\"11\"]"));
        assert!(dot.contains("\"r\" -> \"rL\" [label=\"v^2\"]"));
        assert!(dot.contains("\"r\" -> \"rR\" [label=\"v z\"]"));
        assert!(dot.contains("[label=\"e\"]"));
    }
}
