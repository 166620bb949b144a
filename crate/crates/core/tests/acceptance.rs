//! Acceptance gate: ten headline checks, one test each, every one
//! printing a single pass line with its runtime (visible under
//! `cargo test --test acceptance -- --nocapture`). Budgets are asserted.

use std::collections::BTreeMap;
use std::time::Instant;

use posbraid::{
    build_tree, classify3, gram_matrix, half_twist_word, hecke_decompose,
    homfly_positive_closure, inner_product_def, inner_product_simple, is_mfw_sharp, mfw_report,
    reduced_word, sharpness_certificate, BraidWord, Evaluator, Laurent2, Permutation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn timed(name: &str, budget_ms: u128, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed().as_millis();
    println!("PASS {name}: {elapsed} ms (budget {budget_ms} ms)");
    assert!(
        elapsed <= budget_ms,
        "{name} exceeded its budget: {elapsed} ms > {budget_ms} ms"
    );
}

fn word(strands: usize, letters: &[usize]) -> BraidWord {
    BraidWord::new(strands, letters.to_vec()).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..n)).collect();
    word(n, &letters)
}

/// Expansion of `((v^-1 - v)/z)^k` straight from the binomial theorem,
/// independent of the library's own `delta_power`.
fn delta_power_by_binomials(k: usize) -> Laurent2 {
    let mut terms = Vec::new();
    let mut binom: i64 = 1;
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        terms.push((sign * binom, 2 * i as i32 - k as i32, -(k as i32)));
        binom = binom * (k - i) as i64 / (i + 1) as i64;
    }
    Laurent2::from_terms(&terms)
}

#[test]
fn criterion_01_unlink_closures() {
    timed("criterion 01 (unlink closures)", 1_000, || {
        for n in 1..=6 {
            let value = homfly_positive_closure(&word(n, &[]));
            assert_eq!(value, delta_power_by_binomials(n - 1), "n = {n}");
        }
    });
}

#[test]
fn criterion_02_figure_decomposition() {
    timed("criterion 02 (figure decomposition)", 1_000, || {
        let dec = hecke_decompose(&word(4, &[3, 2, 3, 2, 2, 3, 2, 3]));
        let mut expected: BTreeMap<Permutation, Laurent2> = BTreeMap::new();
        let entry = |letters: &[usize], terms: &[(i64, i32, i32)]| {
            (word(4, letters).permutation(), Laurent2::from_terms(terms))
        };
        for (perm, coeff) in [
            entry(&[], &[(1, 8, 0), (1, 8, 2)]),
            entry(&[2], &[(1, 7, 1), (1, 7, 3)]),
            entry(&[3], &[(2, 7, 1), (1, 7, 3)]),
            entry(&[2, 3], &[(2, 6, 2), (1, 6, 4)]),
            entry(&[3, 2], &[(2, 6, 2), (1, 6, 4)]),
            entry(&[3, 2, 3], &[(1, 5, 1), (3, 5, 3), (1, 5, 5)]),
        ] {
            expected.insert(perm, coeff);
        }
        assert_eq!(dec.coeffs(), &expected);
    });
}

#[test]
fn criterion_03_orthonormality() {
    timed("criterion 03 (orthonormality)", 300_000, || {
        for n in 2..=4 {
            assert!(gram_matrix(n).is_identity(), "n = {n}");
        }
        assert!(gram_matrix(5).is_identity());

        let mut eval = Evaluator::new();
        for a in Permutation::all_lex(3) {
            for b in Permutation::all_lex(3) {
                let by_def =
                    inner_product_def(&reduced_word(&a), &reduced_word(&b)).unwrap();
                assert_eq!(by_def, inner_product_simple(&a, &b), "{a} vs {b}");
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let perms = Permutation::all_lex(4);
        for _ in 0..200 {
            let a = &perms[rng.gen_range(0..perms.len())];
            let b = &perms[rng.gen_range(0..perms.len())];
            let wa = reduced_word(a);
            let wb = reduced_word(b);
            let by_def =
                posbraid::inner::inner_product_def_with(&mut eval, &wa, &wb).unwrap();
            assert_eq!(by_def, inner_product_simple(a, b), "{a} vs {b}");
        }
    });
}

#[test]
fn criterion_04_morton_short_counterexample() {
    timed("criterion 04 (Morton-Short counterexample)", 10_000, || {
        let w = word(4, &[3, 2, 1, 3, 2, 2, 1, 3, 2, 2, 1, 3, 2]);
        let report = mfw_report(&w);
        assert_eq!(report.mfw, 3);
        assert!(!report.sharp);
    });
}

#[test]
fn criterion_05_three_strand_sweep() {
    timed("criterion 05 (three-strand sweep)", 300_000, || {
        let mut checked = 0usize;
        for len in 0..=12 {
            for mask in 0..(1u32 << len) {
                let letters: Vec<usize> =
                    (0..len).map(|i| if mask >> i & 1 == 0 { 1 } else { 2 }).collect();
                let c = classify3(&word(3, &letters)).unwrap();
                assert_eq!(
                    c.family.is_some(),
                    c.index < 3,
                    "family/index mismatch on {letters:?}"
                );
                checked += 1;
            }
        }
        assert_eq!(checked, 8191);
    });
}

#[test]
fn criterion_06_torus_recursion() {
    timed("criterion 06 (torus recursion)", 1_000, || {
        let v_z = Laurent2::monomial(1, 1, 1);
        let v_sq = Laurent2::monomial(1, 2, 0);
        let mut prev = delta_power_by_binomials(1);
        let mut cur = Laurent2::one();
        assert_eq!(homfly_positive_closure(&word(2, &[])), prev);
        assert_eq!(homfly_positive_closure(&word(2, &[1])), cur);
        for k in 2..=10 {
            let next = &(&v_z * &cur) + &(&v_sq * &prev);
            let letters = vec![1; k];
            assert_eq!(homfly_positive_closure(&word(2, &letters)), next, "k = {k}");
            assert_eq!(mfw_report(&word(2, &letters)).mfw, 2, "k = {k}");
            prev = cur;
            cur = next;
        }
    });
}

#[test]
fn criterion_07_tree_independence() {
    timed("criterion 07 (tree independence)", 60_000, || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let w = random_word(&mut rng, 4, 14);
            let dec = hecke_decompose(&w);
            assert_eq!(build_tree(&w).decomposition(), dec, "{w}");

            let mut rewritten = w.clone();
            for _ in 0..12 {
                let neighbors = rewritten.relation_neighbors();
                if neighbors.is_empty() {
                    break;
                }
                rewritten = neighbors[rng.gen_range(0..neighbors.len())].clone();
            }
            assert_eq!(hecke_decompose(&rewritten), dec, "{w} rewritten to {rewritten}");
        }
    });
}

#[test]
fn criterion_08_markov_invariance() {
    timed("criterion 08 (Markov invariance)", 60_000, || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let w = random_word(&mut rng, 4, 12);
            let value = homfly_positive_closure(&w);
            for k in 0..w.len() {
                assert_eq!(
                    homfly_positive_closure(&w.cyclic_shift(k as i64)),
                    value,
                    "{w} shifted by {k}"
                );
            }
            let stabilized = w.widened(w.strands() + 1).unwrap().pushed(w.strands()).unwrap();
            assert_eq!(homfly_positive_closure(&stabilized), value, "{w} stabilized");
        }
    });
}

#[test]
fn criterion_09_lower_bound_positivity() {
    timed("criterion 09 (lower bound and positivity)", 60_000, || {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let w = random_word(&mut rng, 4, 12);
            let value = homfly_positive_closure(&w);
            let (dv_min, _) = value.v_degree_bounds().unwrap();
            let expected = w.writhe() as i32 - w.strands() as i32 + 1;
            assert_eq!(dv_min, expected, "{w}");
            let bottom = value.coeff_of_v(dv_min);
            assert!(!bottom.is_zero());
            assert!(
                bottom.terms().all(|(_, c)| c > 0),
                "{w}: bottom coefficient {bottom} is not positive"
            );
        }
    });
}

#[test]
fn criterion_10_sharpness_suite() {
    timed("criterion 10 (sharpness suite)", 60_000, || {
        let mut corollary6_words = vec![word(4, &[3, 2, 1, 1, 2, 3])];
        let mut exponents = vec![3, 3];
        exponents.extend(vec![2; 5]);
        exponents.extend(vec![1, 1]);
        exponents.extend(vec![2, 2, 2]);
        exponents.extend(vec![3, 3, 3]);
        corollary6_words.push(word(4, &exponents));
        for w in &corollary6_words {
            assert!(is_mfw_sharp(w), "{w}");
        }

        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let mut certified = corollary6_words;
        for n in [3, 4] {
            let twist = half_twist_word(n);
            let full_twist = twist.concat(&twist);
            for _ in 0..50 {
                let u = random_word_on(&mut rng, n, 6);
                let v = random_word_on(&mut rng, n, 6);
                let w = u.concat(&full_twist).concat(&v);
                assert!(is_mfw_sharp(&w), "{w}");
                certified.push(w);
            }
        }

        for w in certified {
            let cert = sharpness_certificate(&w).expect("sharp words have certificates");
            let replayed = cert.replay().unwrap();
            assert_eq!(replayed, w, "replay rebuilds the input word");
            assert_eq!(replayed.permutation(), w.permutation());
            assert_eq!(
                homfly_positive_closure(&replayed),
                homfly_positive_closure(&w)
            );
        }
    });
}

fn random_word_on(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..strands)).collect();
    word(strands, &letters)
}
