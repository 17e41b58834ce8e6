//! Property tests for the structural invariants: chain-stream containment,
//! closure/reduction idempotence, rank additivity, binomial expansions,
//! gamma reconstruction, and the SFY dual construction.

mod common;

use std::collections::HashSet;

use num::bigint::{BigInt, BigUint};
use proptest::prelude::*;

use chowlab::chow::chow_chain_sum;
use chowlab::family::gen_random_graded;
use chowlab::poly::{binomial_row, gamma_vector, IntPolynomial};
use chowlab::poset::{chains_from_bottom, whitney_numbers, Poset};
use chowlab::scd::sfy_generate;
use chowlab::seq::{binomial, d_binomial_expansion, macaulay_next_bound};

use common::{naive_chain_sum, sfy_filter_oracle};

proptest! {
    /// Greedy d-binomial expansion reproduces n, with strictly decreasing
    /// indices ending at k_delta >= delta >= 1.
    #[test]
    fn binomial_expansion_roundtrip(n in 1u64..2_000_000, d in 1u32..8) {
        let n = BigUint::from(n);
        let exp = d_binomial_expansion(&n, d);
        prop_assert_eq!(exp.value(), n);
        for w in exp.indices.windows(2) {
            prop_assert!(w[0] > w[1]);
        }
        let terms: Vec<_> = exp.terms().map(|(k, j)| (k.clone(), j)).collect();
        let (last_k, last_j) = terms.last().unwrap();
        prop_assert!(*last_j >= 1);
        prop_assert!(*last_k >= BigUint::from(*last_j));
    }

    /// The Macaulay bound is attained by the full polynomial-ring growth:
    /// bound(C(v+d-1, d), d) = C(v+d, d+1) for v variables.
    #[test]
    fn macaulay_bound_on_full_ring(v in 1u32..7, d in 1u32..7) {
        let n = binomial(&BigUint::from(v + d - 1), d);
        let bound = macaulay_next_bound(&n, d);
        prop_assert_eq!(bound, binomial(&BigUint::from(v + d), d + 1));
    }

    /// Gamma expansion reconstructs any palindromic polynomial.
    #[test]
    fn gamma_reconstructs_palindromic(half in prop::collection::vec(0i64..50, 1..5), middle in prop::option::of(0i64..50)) {
        let mut coeffs: Vec<i64> = half.clone();
        if let Some(mid) = middle {
            coeffs.push(mid);
        }
        coeffs.extend(half.iter().rev());
        // force a nonzero polynomial
        coeffs[0] += 1;
        *coeffs.last_mut().unwrap() += 1;
        let p = IntPolynomial::from_i64s(&coeffs);
        let gamma = gamma_vector(&p).unwrap();
        let d = p.degree().unwrap();
        let mut acc = IntPolynomial::zero();
        for (i, g) in gamma.iter().enumerate() {
            let mut shifted = vec![BigInt::from(0); i];
            shifted.push(g.clone());
            acc.add_mul_assign(
                &IntPolynomial::from_coeffs(shifted),
                &IntPolynomial::from_coeffs(binomial_row(d - 2 * i)),
            );
        }
        prop_assert_eq!(acc, p);
    }

    /// Chain streams: the gap-2 stream is a duplicate-free subset of the
    /// gap-1 stream, and rank additivity holds on every comparable triple.
    #[test]
    fn chain_streams_and_additivity(seed in any::<u64>()) {
        let (p, r) = gen_random_graded(seed, 5, 3).unwrap();
        let all: Vec<Vec<usize>> = chains_from_bottom(&p, &r, 1).collect();
        let all_set: HashSet<Vec<usize>> = all.iter().cloned().collect();
        prop_assert_eq!(all.len(), all_set.len());
        let gap2: Vec<Vec<usize>> = chains_from_bottom(&p, &r, 2).collect();
        let gap2_set: HashSet<Vec<usize>> = gap2.iter().cloned().collect();
        prop_assert_eq!(gap2.len(), gap2_set.len());
        prop_assert!(gap2_set.is_subset(&all_set));

        for chain in all.iter().filter(|c| c.len() >= 2) {
            let x = p.bottom();
            let (z, y) = (chain[0], chain[1]);
            prop_assert_eq!(r.gap(x, y), r.gap(x, z) + r.gap(z, y));
        }

        // Whitney numbers partition the element set
        let w = whitney_numbers(&p, &r);
        prop_assert_eq!(w.iter().sum::<usize>(), p.len());
        prop_assert_eq!(w[0], 1);
    }

    /// Feeding any subset of the closure back in as extra cover pairs
    /// rebuilds to the same Hasse diagram.
    #[test]
    fn reduction_of_closure_is_identity(seed in any::<u64>(), extra_mask in any::<u64>()) {
        let (p, r) = gen_random_graded(seed, 5, 3).unwrap();
        let _ = r;
        let mut pairs: Vec<(usize, usize)> = p.covers().to_vec();
        let mut closure: Vec<(usize, usize)> = Vec::new();
        for x in 0..p.len() {
            for y in p.strictly_above(x) {
                closure.push((x, y));
            }
        }
        for (i, pair) in closure.into_iter().enumerate() {
            if extra_mask >> (i % 64) & 1 == 1 {
                pairs.push(pair);
            }
        }
        let rebuilt = Poset::from_indexed(p.ids().to_vec(), pairs).unwrap();
        prop_assert_eq!(rebuilt.covers(), p.covers());
    }

    /// The recursive SFY construction agrees with the defining filter over
    /// the full FY family, and the literal chain sum agrees with the
    /// suffix-recursion Chow polynomial.
    #[test]
    fn sfy_and_chow_dual_routes(seed in any::<u64>()) {
        let (p, r) = gen_random_graded(seed, 5, 3).unwrap();
        prop_assert_eq!(sfy_generate(&p, &r), sfy_filter_oracle(&p, &r));
        prop_assert_eq!(chow_chain_sum(&p, &r), naive_chain_sum(&p, &r));
    }
}

/// Growth of the non-log-concave family at n = 7: the wide levels push
/// h_1 past m^3 and h_3 past m^6 while h_2 stays of order m^4.
#[test]
fn nonlogconcave_growth_orders() {
    use chowlab::family::gen_nonlogconcave_counterexample;
    for m in 1..=6u64 {
        let (p, r) = gen_nonlogconcave_counterexample(7, m).unwrap();
        let h = chow_chain_sum(&p, &r);
        let c = h.coeffs();
        assert!(c[1] >= BigInt::from(m * m * m), "h_1 below m^3 at m={m}");
        assert!(c[3] >= BigInt::from(m.pow(6)), "h_3 below m^6 at m={m}");
        assert!(
            c[2] <= BigInt::from(30 * m.pow(4)),
            "h_2 above 30 m^4 at m={m}: {}",
            h.to_csv()
        );
    }
}

/// The closed-form length-3 pure O-sequence test agrees with the
/// exhaustive pure-ideal search for every (1, h_1, h_2) with h_1 <= 6 and
/// h_2 up to the Macaulay bound.
#[test]
fn pure_len3_formula_agrees_with_bruteforce_up_to_six() {
    use chowlab::seq::{is_pure_o_len3, pure_ideal_bruteforce, IdealSearch};
    for h1 in 1..=6u32 {
        let cap: u64 = binomial(&BigUint::from(h1 + 1), 2).try_into().unwrap();
        for h2 in 0..=cap {
            let h = vec![BigInt::from(1), BigInt::from(h1), BigInt::from(h2)];
            let formula = is_pure_o_len3(&h).unwrap();
            let found = matches!(
                pure_ideal_bruteforce(&h, 8, 8, 1 << 26).unwrap(),
                IdealSearch::Found(_)
            );
            assert_eq!(formula, found, "disagreement at (1,{h1},{h2})");
        }
    }
}
