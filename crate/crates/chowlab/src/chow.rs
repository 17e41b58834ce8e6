//! The Chow polynomial of a weakly ranked poset, by two independent routes.
//!
//! Route one sums, over all chains from the bottom, the product of the gap
//! factors `t + t^2 + ... + t^(d-1)`; chains containing a unit gap are
//! pruned since their factor vanishes. The sum is evaluated by a suffix
//! recursion over elements, so shared chain tails are computed once.
//!
//! Route two enumerates Feichtner–Yuzvinsky monomials and counts them by
//! degree; coefficient `k` of the Chow polynomial equals `|FY^k|`.

use num::bigint::BigInt;

use crate::monomial::{FYMonomial, MonomialSet};
use crate::poly::IntPolynomial;
use crate::poset::{Poset, WeakRank};

/// Chain-sum Chow polynomial.
///
/// For each element `x`, the sum of factor products over chains starting
/// strictly above `x` satisfies
/// `f(x) = 1 + sum_{y > x, gap >= 2} gap_factor(gap) * f(y)`,
/// and the Chow polynomial is `f(bottom)`. Monic of degree `rank(top) - 1`.
pub fn chow_chain_sum(poset: &Poset, rank: &WeakRank) -> IntPolynomial {
    debug_assert!(rank.validate(poset).is_valid());
    let n = rank.poset_rank(poset);

    let mut factors: Vec<IntPolynomial> = (0..=n).map(IntPolynomial::gap_factor).collect();
    if factors.is_empty() {
        factors.push(IntPolynomial::zero());
    }

    let mut order: Vec<usize> = (0..poset.len()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(rank.of(x)));

    let mut f: Vec<Option<IntPolynomial>> = vec![None; poset.len()];
    for &x in &order {
        let rx = rank.of(x);
        let mut acc = IntPolynomial::one();
        for y in poset.strictly_above(x) {
            let gap = rank.of(y) - rx;
            if gap >= 2 {
                let tail = f[y].as_ref().expect("processed in decreasing rank order");
                acc.add_mul_assign(&factors[gap as usize], tail);
            }
        }
        f[x] = Some(acc);
    }

    let h = f[poset.bottom()].take().unwrap();
    assert!(h.is_monic(), "Chow polynomial must be monic");
    let expected = if n == 0 { 0 } else { (n - 1) as usize };
    assert_eq!(h.degree(), Some(expected), "Chow polynomial degree mismatch");
    h
}

/// Visits every FY monomial (including the empty one) exactly once in
/// depth-first order; `max_degree` truncates by degree.
pub(crate) fn visit_fy_monomials<F>(poset: &Poset, rank: &WeakRank, max_degree: Option<u64>, f: &mut F)
where
    F: FnMut(&[usize], &[u32], u64),
{
    let mut support = Vec::new();
    let mut exponents = Vec::new();
    descend(poset, rank, max_degree, poset.bottom(), &mut support, &mut exponents, 0, f);
}

#[allow(clippy::too_many_arguments)]
fn descend<F>(
    poset: &Poset,
    rank: &WeakRank,
    max_degree: Option<u64>,
    last: usize,
    support: &mut Vec<usize>,
    exponents: &mut Vec<u32>,
    degree: u64,
    f: &mut F,
) where
    F: FnMut(&[usize], &[u32], u64),
{
    f(support, exponents, degree);
    let base = rank.of(last);
    let budget = max_degree.map(|cap| cap - degree);
    if budget == Some(0) {
        return;
    }
    for y in poset.strictly_above(last) {
        let gap = rank.of(y) - base;
        if gap < 2 {
            continue;
        }
        let mut hi = gap - 1;
        if let Some(b) = budget {
            hi = hi.min(b);
        }
        support.push(y);
        for e in 1..=hi {
            exponents.push(e as u32);
            descend(poset, rank, max_degree, y, support, exponents, degree + e, f);
            exponents.pop();
        }
        support.pop();
    }
}

/// All FY monomials of the poset, optionally truncated by degree.
pub fn enumerate_fy_monomials(
    poset: &Poset,
    rank: &WeakRank,
    max_degree: Option<u64>,
) -> MonomialSet {
    let mut out = Vec::new();
    visit_fy_monomials(poset, rank, max_degree, &mut |support, exps, _| {
        out.push(FYMonomial::new(support.to_vec(), exps.to_vec()));
    });
    MonomialSet::from_monomials(out)
}

/// Chow polynomial as the degree-indexed count of FY monomials.
///
/// Debug builds assert agreement with [`chow_chain_sum`].
pub fn chow_via_fy(poset: &Poset, rank: &WeakRank) -> IntPolynomial {
    let n = rank.poset_rank(poset);
    let len = if n == 0 { 1 } else { n as usize };
    let mut counts = vec![0u64; len];
    visit_fy_monomials(poset, rank, None, &mut |_, _, degree| {
        counts[degree as usize] += 1;
    });
    let h = IntPolynomial::from_coeffs(counts.into_iter().map(BigInt::from).collect());
    debug_assert_eq!(h, chow_chain_sum(poset, rank));
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::gamma_vector;
    use crate::poset::chains_from_bottom;

    fn chain_poset(n: u64) -> (Poset, WeakRank) {
        let ids: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let covers: Vec<(usize, usize)> = (0..n as usize).map(|i| (i, i + 1)).collect();
        let p = Poset::from_indexed(ids, covers).unwrap();
        let r = WeakRank::new((0..=n).collect());
        (p, r)
    }

    fn boolean_poset(n: u32) -> (Poset, WeakRank) {
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
        let p = Poset::from_indexed(ids, covers).unwrap();
        let r = WeakRank::new(masks.iter().map(|m| m.count_ones() as u64).collect());
        (p, r)
    }

    /// Literal chain enumeration with per-chain factor products; written
    /// independently of the suffix recursion.
    fn naive_chain_sum(p: &Poset, r: &WeakRank) -> IntPolynomial {
        let mut acc = IntPolynomial::zero();
        for chain in chains_from_bottom(p, r, 2) {
            let mut term = IntPolynomial::one();
            let mut prev = r.of(p.bottom());
            for &x in &chain {
                let factor = IntPolynomial::gap_factor(r.of(x) - prev);
                term = &term * &factor;
                prev = r.of(x);
            }
            acc += &term;
        }
        acc
    }

    #[test]
    fn spot_values_three_ways() {
        let cases: Vec<((Poset, WeakRank), &[i64])> = vec![
            (chain_poset(2), &[1, 1]),
            (chain_poset(3), &[1, 2, 1]),
            (boolean_poset(3), &[1, 4, 1]),
        ];
        for ((p, r), expected) in cases {
            let want = IntPolynomial::from_i64s(expected);
            assert_eq!(chow_chain_sum(&p, &r), want);
            assert_eq!(chow_via_fy(&p, &r), want);
            assert_eq!(naive_chain_sum(&p, &r), want);
        }
    }

    #[test]
    fn diamond_with_many_atoms() {
        // rank-2 diamond: every atom chain has a unit gap, only the top
        // contributes, so H = 1 + t regardless of the number of atoms
        for k in [2usize, 3, 4] {
            let mut ids = vec!["bot".to_string()];
            ids.extend((0..k).map(|i| format!("a{i}")));
            ids.push("top".to_string());
            let mut covers = Vec::new();
            for i in 0..k {
                covers.push((0, 1 + i));
                covers.push((1 + i, k + 1));
            }
            let p = Poset::from_indexed(ids, covers).unwrap();
            let mut ranks = vec![0u64];
            ranks.extend(std::iter::repeat_n(1, k));
            ranks.push(2);
            let r = WeakRank::new(ranks);
            let want = IntPolynomial::from_i64s(&[1, 1]);
            assert_eq!(chow_chain_sum(&p, &r), want);
            assert_eq!(naive_chain_sum(&p, &r), want);
        }
    }

    #[test]
    fn fy_enumeration_examples() {
        // C_2: the rank-1 element is excluded by its unit gap
        let (p, r) = chain_poset(2);
        let fy = enumerate_fy_monomials(&p, &r, None);
        assert_eq!(fy.h_vector(), &[1, 1]);

        // B_3 degree 2: only x_top^2 (coatom squares need gap >= 3, mixed
        // products hit a unit gap)
        let (p, r) = boolean_poset(3);
        let fy2 = enumerate_fy_monomials(&p, &r, Some(2));
        let top_sq: Vec<&FYMonomial> = fy2.iter().filter(|m| m.degree() == 2).collect();
        assert_eq!(top_sq.len(), 1);
        assert_eq!(top_sq[0].support(), &[p.top()]);
        assert_eq!(top_sq[0].exponents(), &[2]);

        // degree 0 is always exactly the empty monomial
        let fy0 = enumerate_fy_monomials(&p, &r, Some(0));
        assert_eq!(fy0.len(), 1);
        assert!(fy0.iter().next().unwrap().is_unit());
    }

    #[test]
    fn fy_truncation_consistent() {
        let (p, r) = boolean_poset(4);
        let full = enumerate_fy_monomials(&p, &r, None);
        let cut = enumerate_fy_monomials(&p, &r, Some(1));
        assert_eq!(cut.h_vector(), &full.h_vector()[..2]);
    }

    #[test]
    fn chain_polynomials_are_palindromic_unimodal() {
        for n in 1..=8 {
            let (p, r) = chain_poset(n);
            let h = chow_chain_sum(&p, &r);
            assert!(h.is_palindromic());
            assert!(h.is_monic());
            assert_eq!(h.degree(), Some((n - 1) as usize));
        }
    }

    #[test]
    fn singleton_poset_chow_is_one() {
        let p = Poset::from_indexed(vec!["x".to_string()], vec![]).unwrap();
        let r = WeakRank::new(vec![0]);
        assert_eq!(chow_chain_sum(&p, &r), IntPolynomial::one());
        assert_eq!(chow_via_fy(&p, &r), IntPolynomial::one());
    }

    #[test]
    fn boolean_gamma() {
        let (p, r) = boolean_poset(3);
        let h = chow_chain_sum(&p, &r);
        let gamma = gamma_vector(&h).unwrap();
        assert_eq!(gamma, vec![BigInt::from(1), BigInt::from(2)]);
    }
}
