//! Symmetric chain decompositions of products of chains and of the FY
//! monomial poset, and the SFY initial-monomial order ideal.
//!
//! The product decomposition follows the L-shaped recursion: decompose the
//! product of all factors but the first, then split each `C_{r_1} x S'_i`
//! into chains that run up the first coordinate after exhausting the tail
//! chain. Its chain starts admit the closed description
//! `{ (a_1..a_n) : a_s <= r_s and a_s <= sum_{i>s} (r_i - 2 a_i) }`.
//!
//! Pulled back along the support-class isomorphism
//! `FY_C ~ C_{d_1-2} x ... x C_{d_s-2} x C_{d_top-1}` (chain order
//! bottom-up, top coordinate last), this decomposes the FY poset into
//! saturated symmetric chains; the chain starts form the SFY monomial order
//! ideal.

use num::bigint::BigInt;
use thiserror::Error;

use crate::chow::enumerate_fy_monomials;
use crate::monomial::{FYMonomial, MonomialSet};
use crate::poset::{Poset, WeakRank};
use crate::seq::delta;

#[derive(Debug, Error)]
pub enum ScdError {
    #[error("empty factor list")]
    EmptyFactorList,
}

/// Point of the grid `C_{r_1} x ... x C_{r_n}`, coordinate `s` in `0..=r_s`.
pub type GridPoint = Vec<u32>;

/// A partition of a ranked poset into saturated rank-symmetric chains.
#[derive(Clone, Debug)]
pub struct ChainDecomposition<T> {
    pub chains: Vec<Vec<T>>,
}

impl<T: Clone> ChainDecomposition<T> {
    /// First element of every chain.
    pub fn chain_starts(&self) -> Vec<T> {
        self.chains.iter().map(|c| c[0].clone()).collect()
    }
}

/// Verification of the symmetric-chain-decomposition axioms against an
/// explicit host universe.
#[derive(Clone, Debug)]
pub struct ScdReport {
    pub is_partition: bool,
    pub all_saturated: bool,
    pub all_symmetric: bool,
}

impl ScdReport {
    pub fn all_hold(&self) -> bool {
        self.is_partition && self.all_saturated && self.all_symmetric
    }
}

impl<T: Clone + Ord> ChainDecomposition<T> {
    /// Checks the three axioms: the chains partition the universe, each
    /// chain steps through covers, and a chain starting at rank `r` ends at
    /// rank `host_rank - r`.
    pub fn verify<R, C>(&self, universe: &[T], rank: R, is_cover: C, host_rank: u64) -> ScdReport
    where
        R: Fn(&T) -> u64,
        C: Fn(&T, &T) -> bool,
    {
        let mut members: Vec<&T> = self.chains.iter().flatten().collect();
        members.sort();
        let mut expected: Vec<&T> = universe.iter().collect();
        expected.sort();
        let is_partition = members.len() == self.chains.iter().map(|c| c.len()).sum::<usize>()
            && members.windows(2).all(|w| w[0] != w[1])
            && members == expected;
        let all_saturated = self
            .chains
            .iter()
            .all(|c| c.windows(2).all(|w| is_cover(&w[0], &w[1])));
        let all_symmetric = self.chains.iter().all(|c| {
            !c.is_empty() && rank(c.first().unwrap()) + rank(c.last().unwrap()) == host_rank
        });
        ScdReport {
            is_partition,
            all_saturated,
            all_symmetric,
        }
    }
}

/// Symmetric chain decomposition of `C_{r_1} x ... x C_{r_n}`.
///
/// Zero bounds are admitted (the factor is a single point); the coordinate
/// order is exactly the argument order, which matters for the chain starts.
pub fn scd_product_of_chains(bounds: &[u32]) -> Result<ChainDecomposition<GridPoint>, ScdError> {
    if bounds.is_empty() {
        return Err(ScdError::EmptyFactorList);
    }
    let chains = scd_rec(bounds);
    let dec = ChainDecomposition { chains };
    debug_assert!(verify_grid_scd(bounds, &dec).all_hold());
    Ok(dec)
}

/// Grid-specialized SCD verification: partition via mixed-radix indexing
/// instead of sorting, covers and symmetry along each chain.
pub fn verify_grid_scd(bounds: &[u32], dec: &ChainDecomposition<GridPoint>) -> ScdReport {
    let host_rank: u64 = bounds.iter().map(|&r| r as u64).sum();
    let mut radix = vec![1usize; bounds.len()];
    for i in (0..bounds.len().saturating_sub(1)).rev() {
        radix[i] = radix[i + 1] * (bounds[i + 1] as usize + 1);
    }
    let total: usize = bounds.iter().map(|&r| r as usize + 1).product();
    let mut seen = vec![false; total];
    let mut count = 0usize;
    let mut is_partition = true;
    let mut all_saturated = true;
    let mut all_symmetric = true;
    for chain in &dec.chains {
        if chain.is_empty() {
            all_symmetric = false;
            continue;
        }
        for point in chain {
            if point.len() != bounds.len()
                || point.iter().zip(bounds).any(|(&a, &r)| a > r)
            {
                is_partition = false;
                continue;
            }
            let idx: usize = point
                .iter()
                .zip(&radix)
                .map(|(&a, &w)| a as usize * w)
                .sum();
            if seen[idx] {
                is_partition = false;
            }
            seen[idx] = true;
            count += 1;
        }
        if !chain.windows(2).all(|w| grid_cover(&w[0], &w[1])) {
            all_saturated = false;
        }
        if grid_rank(chain.first().unwrap()) + grid_rank(chain.last().unwrap()) != host_rank {
            all_symmetric = false;
        }
    }
    is_partition &= count == total;
    ScdReport {
        is_partition,
        all_saturated,
        all_symmetric,
    }
}

fn scd_rec(bounds: &[u32]) -> Vec<Vec<GridPoint>> {
    let r1 = bounds[0] as usize;
    if bounds.len() == 1 {
        return vec![(0..=r1).map(|a| vec![a as u32]).collect()];
    }
    let tail = scd_rec(&bounds[1..]);
    let mut chains = Vec::new();
    for sub in &tail {
        let len = sub.len() - 1;
        for j in 0..=r1.min(len) {
            let mut chain: Vec<GridPoint> = Vec::with_capacity(len - j + r1 - j + 1);
            for point in sub.iter().take(len - j + 1) {
                let mut q = Vec::with_capacity(bounds.len());
                q.push(j as u32);
                q.extend_from_slice(point);
                chain.push(q);
            }
            for x in j + 1..=r1 {
                let mut q = Vec::with_capacity(bounds.len());
                q.push(x as u32);
                q.extend_from_slice(&sub[len - j]);
                chain.push(q);
            }
            chains.push(chain);
        }
    }
    chains
}

/// Every point of the grid, in mixed-radix order.
pub fn grid_points(bounds: &[u32]) -> Vec<GridPoint> {
    let mut out = vec![Vec::new()];
    for &r in bounds.iter().rev() {
        let mut next = Vec::with_capacity(out.len() * (r as usize + 1));
        for a in 0..=r {
            for tail in &out {
                let mut q = Vec::with_capacity(tail.len() + 1);
                q.push(a);
                q.extend_from_slice(tail);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

pub fn grid_rank(p: &GridPoint) -> u64 {
    p.iter().map(|&a| a as u64).sum()
}

/// Covers in a product of chains: one coordinate advances by one.
pub fn grid_cover(a: &GridPoint, b: &GridPoint) -> bool {
    let mut bumped = false;
    for (x, y) in a.iter().zip(b) {
        if y == x {
            continue;
        }
        if *y == x + 1 && !bumped {
            bumped = true;
        } else {
            return false;
        }
    }
    bumped
}

/// Direct evaluation of the chain-start description
/// `{ (a_1..a_n) : a_s <= r_s and a_s <= sum_{i>s} (r_i - 2 a_i) }`;
/// the empty suffix sum forces the last coordinate to zero.
pub fn initial_elements_formula(bounds: &[u32]) -> Vec<GridPoint> {
    let mut out = Vec::new();
    let mut point = vec![0u32; bounds.len()];
    formula_rec(bounds, bounds.len(), 0, &mut point, &mut out);
    out
}

fn formula_rec(bounds: &[u32], s: usize, suffix_budget: u64, point: &mut Vec<u32>, out: &mut Vec<GridPoint>) {
    if s == 0 {
        out.push(point.clone());
        return;
    }
    let r = bounds[s - 1] as u64;
    let hi = r.min(suffix_budget);
    for a in 0..=hi {
        point[s - 1] = a as u32;
        formula_rec(bounds, s - 1, suffix_budget + r - 2 * a, point, out);
    }
    point[s - 1] = 0;
}

/// Counts of chain starts per rank, padded to `floor(host_rank/2) + 1`.
pub fn whitney_of_starts<T, R: Fn(&T) -> u64>(
    dec: &ChainDecomposition<T>,
    rank: R,
    host_rank: u64,
) -> Vec<u64> {
    let mut counts = vec![0u64; (host_rank / 2) as usize + 1];
    for chain in &dec.chains {
        counts[rank(&chain[0]) as usize] += 1;
    }
    counts
}

/// Whitney numbers of the product of chains: coefficients of
/// `prod_i (1 + t + ... + t^{r_i})`.
pub fn grid_whitney(bounds: &[u32]) -> Vec<u64> {
    let mut w = vec![1u64];
    for &r in bounds {
        let mut next = vec![0u64; w.len() + r as usize];
        for (i, &c) in w.iter().enumerate() {
            for j in 0..=r as usize {
                next[i + j] += c;
            }
        }
        w = next;
    }
    w
}

/// The SFY monomial set: FY monomials supported strictly below the top whose
/// exponents satisfy
/// `l_k <= min(rho(p_k) - rho(p_{k-1}) - 1, rho(P) - rho(p_k) - 2 sum_{i>k} l_i)`,
/// including the empty monomial. These are exactly the chain starts of
/// [`scd_of_fy`], and they form a monomial order ideal whose h-vector is the
/// differential sequence of the Chow polynomial.
pub fn sfy_generate(poset: &Poset, rank: &WeakRank) -> MonomialSet {
    let n = rank.poset_rank(poset);
    let mut out = Vec::new();
    let mut chain = Vec::new();
    sfy_chains(poset, rank, n, poset.bottom(), &mut chain, &mut out);
    MonomialSet::from_monomials(out)
}

fn sfy_chains(
    poset: &Poset,
    rank: &WeakRank,
    n: u64,
    last: usize,
    chain: &mut Vec<usize>,
    out: &mut Vec<FYMonomial>,
) {
    // exponents for the current support chain, assigned right to left so
    // the suffix sums are known
    let mut exponents = vec![0u32; chain.len()];
    sfy_exponents(poset, rank, n, chain, chain.len(), 0, &mut exponents, out);
    let base = rank.of(last);
    for y in poset.strictly_above(last) {
        if y == poset.top() || rank.of(y) - base < 2 {
            continue;
        }
        chain.push(y);
        sfy_chains(poset, rank, n, y, chain, out);
        chain.pop();
    }
}

#[allow(clippy::too_many_arguments)]
fn sfy_exponents(
    poset: &Poset,
    rank: &WeakRank,
    n: u64,
    chain: &[usize],
    k: usize,
    suffix: u64,
    exponents: &mut Vec<u32>,
    out: &mut Vec<FYMonomial>,
) {
    if k == 0 {
        out.push(FYMonomial::new(chain.to_vec(), exponents.clone()));
        return;
    }
    let p = chain[k - 1];
    let prev_rank = if k >= 2 {
        rank.of(chain[k - 2])
    } else {
        rank.of(poset.bottom())
    };
    let gap_bound = rank.of(p) - prev_rank - 1;
    let room = n - rank.of(p);
    if room < 2 * suffix + 1 {
        return;
    }
    let hi = gap_bound.min(room - 2 * suffix);
    for l in 1..=hi {
        exponents[k - 1] = l as u32;
        sfy_exponents(poset, rank, n, chain, k - 1, suffix + l, exponents, out);
    }
    exponents[k - 1] = 0;
}

/// Symmetric chain decomposition of the FY monomial poset (ordered by
/// divisibility, graded by degree).
///
/// FY monomials are partitioned by support class (support `C` or
/// `C + {top}` for a chain `C` strictly below the top); each class is
/// decomposed through its product-of-chains form with the factor order
/// fixed bottom-up and the top coordinate last. The chain starts are
/// asserted to coincide with [`sfy_generate`].
pub fn scd_of_fy(poset: &Poset, rank: &WeakRank) -> ChainDecomposition<FYMonomial> {
    let n = rank.poset_rank(poset);
    if n == 0 {
        return ChainDecomposition {
            chains: vec![vec![FYMonomial::unit()]],
        };
    }
    let mut chains: Vec<Vec<FYMonomial>> = Vec::new();
    let mut support = Vec::new();
    scd_fy_rec(poset, rank, n, poset.bottom(), &mut support, &mut chains);

    let starts = MonomialSet::from_monomials(
        chains.iter().map(|c| c[0].clone()).collect(),
    );
    debug_assert_eq!(
        starts.len(),
        chains.len(),
        "chain starts must be pairwise distinct"
    );
    assert_eq!(
        starts,
        sfy_generate(poset, rank),
        "chain starts must form the SFY set"
    );
    ChainDecomposition { chains }
}

fn scd_fy_rec(
    poset: &Poset,
    rank: &WeakRank,
    n: u64,
    last: usize,
    support: &mut Vec<usize>,
    chains: &mut Vec<Vec<FYMonomial>>,
) {
    // decompose the support class of the current chain
    let mut bounds: Vec<u32> = Vec::with_capacity(support.len() + 1);
    let mut prev = rank.of(poset.bottom());
    for &p in support.iter() {
        bounds.push((rank.of(p) - prev - 2) as u32);
        prev = rank.of(p);
    }
    bounds.push((n - prev - 1) as u32);
    let grid = scd_product_of_chains(&bounds).expect("nonempty bounds");
    for grid_chain in grid.chains {
        let chain: Vec<FYMonomial> = grid_chain
            .into_iter()
            .map(|point| grid_to_monomial(poset, support, &point))
            .collect();
        chains.push(chain);
    }

    let base = rank.of(last);
    for y in poset.strictly_above(last) {
        if y == poset.top() || rank.of(y) - base < 2 {
            continue;
        }
        support.push(y);
        scd_fy_rec(poset, rank, n, y, support, chains);
        support.pop();
    }
}

/// Grid coordinates back to a monomial: exponent `a_i + 1` on the chain
/// element `p_i`, plus the top variable when its coordinate is positive.
fn grid_to_monomial(poset: &Poset, support: &[usize], point: &GridPoint) -> FYMonomial {
    let mut elems = Vec::with_capacity(support.len() + 1);
    let mut exps = Vec::with_capacity(support.len() + 1);
    for (i, &p) in support.iter().enumerate() {
        elems.push(p);
        exps.push(point[i] + 1);
    }
    let top_exp = point[support.len()];
    if top_exp > 0 {
        elems.push(poset.top());
        exps.push(top_exp);
    }
    FYMonomial::new(elems, exps)
}

/// Checks the SCD axioms of an FY decomposition against the full FY family,
/// plus the Whitney identity `W(starts) = delta(W(FY))`.
pub struct FyScdReport {
    pub scd: ScdReport,
    pub starts_match_sfy: bool,
    pub whitney_identity: bool,
}

impl FyScdReport {
    pub fn all_hold(&self) -> bool {
        self.scd.all_hold() && self.starts_match_sfy && self.whitney_identity
    }
}

pub fn verify_fy_scd(
    poset: &Poset,
    rank: &WeakRank,
    dec: &ChainDecomposition<FYMonomial>,
) -> FyScdReport {
    let n = rank.poset_rank(poset);
    let host_rank = n.saturating_sub(1);
    let fy = enumerate_fy_monomials(poset, rank, None);
    let universe: Vec<FYMonomial> = fy.iter().cloned().collect();
    let scd = dec.verify(
        &universe,
        |m| m.degree(),
        |a, b| a.degree() + 1 == b.degree() && a.divides(b),
        host_rank,
    );
    let starts = MonomialSet::from_monomials(dec.chain_starts());
    let starts_match_sfy = starts == sfy_generate(poset, rank);
    let fy_h: Vec<BigInt> = fy.h_vector().iter().map(|&c| BigInt::from(c)).collect();
    let whitney_identity = match delta(&fy_h) {
        Ok(d) => {
            let got: Vec<BigInt> = whitney_of_starts(dec, |m| m.degree(), host_rank)
                .into_iter()
                .map(BigInt::from)
                .collect();
            got == d
        }
        Err(_) => false,
    };
    FyScdReport {
        scd,
        starts_match_sfy,
        whitney_identity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn as_set(points: &[GridPoint]) -> BTreeSet<GridPoint> {
        points.iter().cloned().collect()
    }

    #[test]
    fn base_case_single_chain() {
        let dec = scd_product_of_chains(&[3]).unwrap();
        assert_eq!(dec.chains.len(), 1);
        assert_eq!(dec.chains[0], vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(initial_elements_formula(&[3]), vec![vec![0]]);
    }

    #[test]
    fn one_by_two() {
        let dec = scd_product_of_chains(&[1, 2]).unwrap();
        assert_eq!(dec.chains.len(), 2);
        assert_eq!(
            as_set(&dec.chain_starts()),
            as_set(&[vec![0, 0], vec![1, 0]])
        );
        assert_eq!(
            as_set(&initial_elements_formula(&[1, 2])),
            as_set(&[vec![0, 0], vec![1, 0]])
        );
    }

    #[test]
    fn two_by_two() {
        // the last coordinate of a chain start is forced to zero, so the
        // starts are (0,0), (1,0), (2,0) with ranks 0, 1, 2
        let dec = scd_product_of_chains(&[2, 2]).unwrap();
        let starts = as_set(&dec.chain_starts());
        assert_eq!(
            starts,
            as_set(&[vec![0, 0], vec![1, 0], vec![2, 0]])
        );
        assert_eq!(as_set(&initial_elements_formula(&[2, 2])), starts);
        // Whitney identity: delta of (1,2,3,2,1) is (1,1,1)
        let w = grid_whitney(&[2, 2]);
        assert_eq!(w, vec![1, 2, 3, 2, 1]);
        assert_eq!(whitney_of_starts(&dec, grid_rank, 4), vec![1, 1, 1]);
    }

    #[test]
    fn formula_matches_construction_small_products() {
        let cases: Vec<Vec<u32>> = vec![
            vec![1],
            vec![4],
            vec![1, 1],
            vec![2, 3],
            vec![3, 2],
            vec![1, 2, 3],
            vec![3, 2, 1],
            vec![2, 2, 2],
            vec![1, 1, 1, 1],
            vec![0, 2],
            vec![2, 0, 2],
        ];
        for bounds in cases {
            let dec = scd_product_of_chains(&bounds).unwrap();
            let host_rank: u64 = bounds.iter().map(|&r| r as u64).sum();
            let report = dec.verify(&grid_points(&bounds), grid_rank, grid_cover, host_rank);
            assert!(report.all_hold(), "axioms fail for {bounds:?}");
            assert_eq!(
                as_set(&dec.chain_starts()),
                as_set(&initial_elements_formula(&bounds)),
                "start set differs for {bounds:?}"
            );
        }
    }

    #[test]
    fn empty_factor_list_rejected() {
        assert!(matches!(
            scd_product_of_chains(&[]),
            Err(ScdError::EmptyFactorList)
        ));
    }

    #[test]
    fn fy_decomposition_of_chains() {
        // C_2: FY = {1, x_top}; single chain
        let (p, r) = chain(2);
        let dec = scd_of_fy(&p, &r);
        assert_eq!(dec.chains.len(), 1);
        assert!(verify_fy_scd(&p, &r, &dec).all_hold());
        let starts = dec.chain_starts();
        assert_eq!(starts.len(), 1);
        assert!(starts[0].is_unit());

        // C_3: chains {1, x_top, x_top^2} and {x_mid}
        let (p, r) = chain(3);
        let dec = scd_of_fy(&p, &r);
        assert_eq!(dec.chains.len(), 2);
        assert!(verify_fy_scd(&p, &r, &dec).all_hold());
        let sfy = sfy_generate(&p, &r);
        assert_eq!(sfy.h_vector(), &[1, 1]);
    }

    #[test]
    fn fy_decomposition_of_boolean_cube() {
        let (p, r) = boolean(3);
        let dec = scd_of_fy(&p, &r);
        // 6 monomials in 4 chains with start degrees (0,1,1,1)
        assert_eq!(dec.chains.iter().map(|c| c.len()).sum::<usize>(), 6);
        assert_eq!(dec.chains.len(), 4);
        assert!(verify_fy_scd(&p, &r, &dec).all_hold());
        let sfy = sfy_generate(&p, &r);
        assert_eq!(sfy.h_vector(), &[1, 3]);
    }

    fn chain(n: u64) -> (Poset, WeakRank) {
        let ids: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let covers: Vec<(usize, usize)> = (0..n as usize).map(|i| (i, i + 1)).collect();
        (
            Poset::from_indexed(ids, covers).unwrap(),
            WeakRank::new((0..=n).collect()),
        )
    }

    fn boolean(n: u32) -> (Poset, WeakRank) {
        let masks: Vec<u32> = (0..1u32 << n).collect();
        let ids: Vec<String> = masks.iter().map(|m| format!("s{m:b}")).collect();
        let mut covers = Vec::new();
        for &m in &masks {
            for b in 0..n {
                if m >> b & 1 == 0 {
                    covers.push((m as usize, (m | 1 << b) as usize));
                }
            }
        }
        (
            Poset::from_indexed(ids, covers).unwrap(),
            WeakRank::new(masks.iter().map(|m| m.count_ones() as u64).collect()),
        )
    }
}
