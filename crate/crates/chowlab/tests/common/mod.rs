//! Shared corpus builders and independent oracles for the integration
//! suites. The oracles here are deliberately written against the
//! definitions, not against the library's computation paths.

// each test target compiles this module separately and uses a subset of it
#![allow(dead_code)]

use chowlab::chow::enumerate_fy_monomials;
use chowlab::family::{
    gen_boolean, gen_chain, gen_nonlogconcave_counterexample, gen_nonpure_counterexample,
    gen_product_of_chains, gen_random_graded,
};
use chowlab::monomial::MonomialSet;
use chowlab::poly::IntPolynomial;
use chowlab::poset::{chains_from_bottom, Poset, WeakRank};

/// Chain-sum Chow polynomial by literal enumeration: iterate every chain
/// with all gaps at least 2 and multiply the gap factors.
pub fn naive_chain_sum(poset: &Poset, rank: &WeakRank) -> IntPolynomial {
    let mut acc = IntPolynomial::zero();
    for chain in chains_from_bottom(poset, rank, 2) {
        let mut term = IntPolynomial::one();
        let mut prev = rank.of(poset.bottom());
        for &x in &chain {
            term = &term * &IntPolynomial::gap_factor(rank.of(x) - prev);
            prev = rank.of(x);
        }
        acc += &term;
    }
    acc
}

/// SFY by filtering the full FY family through the defining inequalities:
/// support strictly below the top and
/// `l_k <= rho(P) - rho(p_k) - 2 sum_{i>k} l_i` at every position.
pub fn sfy_filter_oracle(poset: &Poset, rank: &WeakRank) -> MonomialSet {
    let n = rank.poset_rank(poset);
    let fy = enumerate_fy_monomials(poset, rank, None);
    let keep: Vec<_> = fy
        .iter()
        .filter(|m| {
            if m.support().contains(&poset.top()) {
                return false;
            }
            let mut suffix = 0i64;
            for k in (0..m.support().len()).rev() {
                let l = m.exponents()[k] as i64;
                let bound = n as i64 - rank.of(m.support()[k]) as i64 - 2 * suffix;
                if l > bound {
                    return false;
                }
                suffix += l;
            }
            true
        })
        .cloned()
        .collect();
    MonomialSet::from_monomials(keep)
}

/// The shared acceptance corpus: seeded random graded posets, the named
/// families under their size caps, and both counterexample families at
/// small parameters.
pub fn acceptance_corpus() -> Vec<(String, Poset, WeakRank)> {
    let mut corpus = Vec::new();
    for seed in 0..500u64 {
        let (p, r) = gen_random_graded(seed, 7, 4).unwrap();
        corpus.push((format!("random({seed},7,4)"), p, r));
    }
    for n in 1..=8 {
        let (p, r) = gen_chain(n).unwrap();
        corpus.push((format!("chain({n})"), p, r));
    }
    for n in 1..=6 {
        let (p, r) = gen_boolean(n).unwrap();
        corpus.push((format!("boolean({n})"), p, r));
    }
    // FY enumeration is exponential in the rank, so the corpus cap bounds
    // both the element count and the rank
    for bounds in chain_product_tuples(40) {
        if bounds.iter().map(|&r| r as u64).sum::<u64>() > 10 {
            continue;
        }
        let (p, r) = gen_product_of_chains(&bounds).unwrap();
        corpus.push((format!("product({bounds:?})"), p, r));
    }
    for m in 1..=20 {
        let (p, r) = gen_nonpure_counterexample(m).unwrap();
        corpus.push((format!("nonpure({m})"), p, r));
    }
    for (n, m) in [(7, 1), (7, 2), (7, 3), (8, 1), (8, 2), (9, 1), (9, 2)] {
        let (p, r) = gen_nonlogconcave_counterexample(n, m).unwrap();
        corpus.push((format!("nonlogconcave({n},{m})"), p, r));
    }
    corpus
}

/// All ordered tuples `(r_1..r_k)` with every `r_i >= 1` and
/// `prod (r_i + 1) <= cap`.
pub fn chain_product_tuples(cap: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    tuples_rec(cap, 1, &mut prefix, &mut out);
    out
}

fn tuples_rec(cap: u64, acc: u64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let mut r = 1u64;
    loop {
        let next = acc * (r + 1);
        if next > cap {
            break;
        }
        prefix.push(r as u32);
        out.push(prefix.clone());
        tuples_rec(cap, next, prefix, out);
        prefix.pop();
        r += 1;
    }
}
