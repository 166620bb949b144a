//! The inner product on positive braids, computed two independent ways.
//!
//! By definition, `<a, b>` is the coefficient of `v^(w+n-1)` in
//! `(-z)^(n-1) P(closure(a b*))` where `b*` reverses `b` and
//! `w = len(a) + len(b)`. A recursion over simple braids computes the
//! same pairing without polynomials. Simple braids form an orthonormal
//! basis, so the Gram matrix over any symmetric group is the identity;
//! the two routes are implemented separately precisely so that tests can
//! play them against each other.

use serde::Serialize;

use crate::homfly::Evaluator;
use crate::perm::Permutation;
use crate::poly::Laurent2;
use crate::word::{reduced_word, BraidWord};
use crate::{Error, Result};

/// The pairing by definition: coefficient extraction from a HOMFLYPT
/// value. The result involves only `z`.
pub fn inner_product_def(a: &BraidWord, b: &BraidWord) -> Result<Laurent2> {
    inner_product_def_with(&mut Evaluator::new(), a, b)
}

/// Like [`inner_product_def`] with a shared evaluator cache.
pub fn inner_product_def_with(
    eval: &mut Evaluator,
    a: &BraidWord,
    b: &BraidWord,
) -> Result<Laurent2> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    let n = a.strands() as i32;
    let product = a.concat(&b.reversed());
    let p = eval.homfly(&product);
    let w = (a.len() + b.len()) as i32;
    let scaled = &Laurent2::neg_z_power(n - 1) * &p;
    Ok(scaled.coeff_of_v(w + n - 1))
}

/// The pairing of two simple braids by the descent recursion: peel the
/// smallest right descent `i` of `beta`; when `alpha sigma_i` stays
/// simple the pair moves to `(alpha s_i, beta s_i)`, otherwise the
/// quadratic relation contributes `z<alpha, beta s_i>` plus the moved
/// term. Always 0 or 1, but computed blindly so tests can assert that.
pub fn inner_product_simple(alpha: &Permutation, beta: &Permutation) -> Laurent2 {
    assert_eq!(alpha.size(), beta.size(), "permutation sizes must agree");
    match beta.smallest_right_descent() {
        None => {
            if alpha.is_identity() {
                Laurent2::one()
            } else {
                Laurent2::zero()
            }
        }
        Some(i) => {
            let kappa = beta.right_mul_gen(i);
            let moved = alpha.right_mul_gen(i);
            if !alpha.right_descent(i) {
                inner_product_simple(&moved, &kappa)
            } else {
                let z = Laurent2::monomial(1, 0, 1);
                &(&z * &inner_product_simple(alpha, &kappa)) + &inner_product_simple(&moved, &kappa)
            }
        }
    }
}

/// The matrix of pairings of all simple braids on `n` strands, indexed
/// by permutations in lexicographic one-line order.
#[derive(Clone, Debug, Serialize)]
#[serde(into = "GramRepr")]
pub struct GramMatrix {
    strands: usize,
    perms: Vec<Permutation>,
    entries: Vec<Vec<Laurent2>>,
}

impl GramMatrix {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The row and column index set, lexicographic on one-line notation.
    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entry(&self, row: usize, col: usize) -> &Laurent2 {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<Laurent2>] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        let one = Laurent2::one();
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| if i == j { *e == one } else { e.is_zero() })
        })
    }
}

#[derive(Serialize)]
struct GramRepr {
    n: usize,
    permutations: Vec<Vec<usize>>,
    entries: Vec<String>,
    identity: bool,
}

impl From<GramMatrix> for GramRepr {
    fn from(g: GramMatrix) -> Self {
        let identity = g.is_identity();
        GramRepr {
            n: g.strands,
            permutations: g.perms.iter().map(Permutation::one_line).collect(),
            entries: g.entries.iter().flatten().map(Laurent2::to_string).collect(),
            identity,
        }
    }
}

/// Pairs every simple braid on `n` strands against every other by
/// [`inner_product_def`], sharing one evaluator cache across entries.
pub fn gram_matrix(n: usize) -> GramMatrix {
    assert!(n >= 1, "strand count must be at least one");
    let perms = Permutation::all_lex(n);
    let words: Vec<BraidWord> = perms.iter().map(reduced_word).collect();
    let mut eval = Evaluator::new();
    let entries = words
        .iter()
        .map(|a| {
            words
                .iter()
                .map(|b| {
                    inner_product_def_with(&mut eval, a, b)
                        .expect("all words share one strand count")
                })
                .collect()
        })
        .collect();
    GramMatrix { strands: n, perms, entries }
}
