//! Growth-bound laws under randomized inputs, plus seeded random closures
//! cross-checked against the naive oracle in `common`.

mod common;

use proptest::prelude::*;
use pureo::binom::{binomial, binomial_u64};
use pureo::monomials::{canonical_form, divisor_closure, Monomial};
use pureo::sequences::{d_expansion, is_f_vector, is_o_sequence, kk_growth, macaulay_growth};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    /// The greedy expansion is a genuine representation: its terms add back
    /// to n, with strictly decreasing tops and lower indices.
    #[test]
    fn expansion_reconstructs_its_input(n in 0u64..1_000_000, d in 1u32..=8) {
        let terms = d_expansion(n, d).terms().to_vec();
        let total: u64 = terms
            .iter()
            .map(|t| binomial_u64(t.top, u64::from(t.lower)).expect("small binomial"))
            .sum();
        prop_assert_eq!(total, n);
        for pair in terms.windows(2) {
            prop_assert!(pair[0].top > pair[1].top);
            prop_assert!(pair[0].lower > pair[1].lower);
        }
        if let Some(first) = terms.first() {
            prop_assert_eq!(first.lower, d);
        }
    }

    /// Both growth bounds are monotone in the current value.
    #[test]
    fn growth_bounds_are_monotone(n in 0u64..100_000, d in 1u32..=6) {
        prop_assert!(macaulay_growth(n, d) <= macaulay_growth(n + 1, d));
        prop_assert!(kk_growth(n, d) <= kk_growth(n + 1, d));
    }

    /// On exact binomials the bounds close up: a degree-d value of C(k,d)
    /// can grow to at most C(k+1,d+1), and the squarefree bound to C(k,d+1).
    #[test]
    fn growth_of_exact_binomials(k in 1u64..=30, d in 1u32..=6) {
        prop_assume!(k >= u64::from(d));
        let n = binomial_u64(k, u64::from(d)).expect("small binomial");
        prop_assert_eq!(macaulay_growth(n, d), binomial(k + 1, u64::from(d) + 1));
        prop_assert_eq!(kk_growth(n, d), binomial(k, u64::from(d) + 1));
    }
}

fn random_generators(rng: &mut ChaCha8Rng, num_vars: usize, max_exp: u16) -> Vec<Monomial> {
    let count = rng.gen_range(1..=4usize);
    (0..count)
        .map(|_| loop {
            let exps: Vec<u16> = (0..num_vars).map(|_| rng.gen_range(0..=max_exp)).collect();
            if exps.iter().any(|&x| x > 0) {
                return Monomial::new(exps);
            }
        })
        .collect()
}

#[test]
fn random_closures_match_the_naive_oracle_and_are_o_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..1_500 {
        let num_vars = rng.gen_range(1..=5usize);
        let gens = random_generators(&mut rng, num_vars, 3);
        let ideal = divisor_closure(&gens).unwrap();
        let h = ideal.h_vector();
        assert!(
            is_o_sequence(h.as_slice()),
            "trial {trial}: ({h}) fails growth"
        );

        // The naive oracle computes per-degree counts from scratch.
        let raw: Vec<Vec<u16>> = gens
            .iter()
            .map(|m| m.padded(num_vars).exponents().to_vec())
            .collect();
        let e = gens.iter().map(|m| m.degree()).max().unwrap();
        let naive = common::closure_h(&raw, num_vars, e);
        assert_eq!(h.as_slice(), naive, "trial {trial}: gens {gens:?}");
    }
}

#[test]
fn squarefree_closures_pass_the_face_count_growth_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..1_000 {
        let num_vars = rng.gen_range(2..=8usize);
        let gens = random_generators(&mut rng, num_vars, 1);
        let ideal = divisor_closure(&gens).unwrap();
        let h = ideal.h_vector();
        // Squarefree closures are complexes, so their degree counts satisfy
        // the stricter squarefree growth bound.
        assert!(
            is_f_vector(h.as_slice()),
            "trial {trial}: ({h}) from {gens:?}"
        );
    }
}

#[test]
fn canonical_form_is_invariant_under_variable_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for trial in 0..500 {
        let num_vars = rng.gen_range(1..=6usize);
        let gens = random_generators(&mut rng, num_vars, 3);
        let reference = canonical_form(&gens);

        let mut perm: Vec<usize> = (0..num_vars).collect();
        perm.shuffle(&mut rng);
        let mut permuted: Vec<Monomial> = gens
            .iter()
            .map(|m| {
                let src = m.padded(num_vars);
                let mut exps = vec![0u16; num_vars];
                for (v, &x) in src.exponents().iter().enumerate() {
                    exps[perm[v]] = x;
                }
                Monomial::new(exps)
            })
            .collect();
        permuted.shuffle(&mut rng);

        assert_eq!(
            canonical_form(&permuted),
            reference,
            "trial {trial}: gens {gens:?}, perm {perm:?}"
        );
    }
}
