//! Sequence certificates in exact integer arithmetic: palindromicity,
//! unimodality, log-concavity, Macaulay's growth bound for O-sequences,
//! pure O-sequences, SI-sequences and the Hibi inequalities.

use num::bigint::{BigInt, BigUint};
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SeqError {
    #[error("sequence is empty")]
    Empty,
    #[error("sequence must start with 1")]
    LeadingNotOne,
    #[error("sequence is not palindromic (index {0})")]
    NotPalindromic(usize),
    #[error("sequence is not unimodal (index {0})")]
    NotUnimodal(usize),
    #[error("negative entry at index {0}")]
    Negative(usize),
    #[error("expected a sequence of length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("h_1 must be at least 1")]
    H1Zero,
    #[error("entry at index {0} exceeds the search limit")]
    EntryTooLarge(usize),
    #[error("search budget of {0} nodes exceeded")]
    CapExceeded(u64),
}

/// Boolean property with the first violating index as witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<usize>,
}

impl Verdict {
    fn ok() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn fail(i: usize) -> Self {
        Verdict {
            holds: false,
            witness: Some(i),
        }
    }
}

/// `a_i = a_{d-i}` for all `i`.
pub fn is_palindromic(a: &[BigInt]) -> Verdict {
    let n = a.len();
    match (0..n / 2).find(|&i| a[i] != a[n - 1 - i]) {
        Some(i) => Verdict::fail(i),
        None => Verdict::ok(),
    }
}

/// Nondecreasing up to some peak, nonincreasing after it. Witness is the
/// first index that rises again after a descent.
pub fn is_unimodal(a: &[BigInt]) -> Verdict {
    let mut descending = false;
    for i in 1..a.len() {
        if a[i] > a[i - 1] {
            if descending {
                return Verdict::fail(i);
            }
        } else if a[i] < a[i - 1] {
            descending = true;
        }
    }
    Verdict::ok()
}

/// `a_i^2 >= a_{i-1} a_{i+1}` at every internal index.
pub fn is_log_concave(a: &[BigInt]) -> Verdict {
    for i in 1..a.len().saturating_sub(1) {
        if &a[i] * &a[i] < &a[i - 1] * &a[i + 1] {
            return Verdict::fail(i);
        }
    }
    Verdict::ok()
}

/// Differential sequence `(1, h_1 - 1, ..., h_{floor(e/2)} - h_{floor(e/2)-1})`
/// of a palindromic unimodal sequence starting at 1. Entries are nonnegative
/// by unimodality. Defined only on such inputs; anything else is an error.
pub fn delta(h: &[BigInt]) -> Result<Vec<BigInt>, SeqError> {
    if h.is_empty() {
        return Err(SeqError::Empty);
    }
    if !h[0].is_one() {
        return Err(SeqError::LeadingNotOne);
    }
    if let Some(i) = h.iter().position(|x| x.is_negative()) {
        return Err(SeqError::Negative(i));
    }
    let p = is_palindromic(h);
    if !p.holds {
        return Err(SeqError::NotPalindromic(p.witness.unwrap()));
    }
    let u = is_unimodal(h);
    if !u.holds {
        return Err(SeqError::NotUnimodal(u.witness.unwrap()));
    }
    let e = h.len() - 1;
    let mut out = Vec::with_capacity(e / 2 + 1);
    out.push(BigInt::one());
    for i in 1..=e / 2 {
        out.push(&h[i] - &h[i - 1]);
    }
    Ok(out)
}

/// Binomial coefficient `C(k, j)` with an arbitrarily large top index.
pub fn binomial(k: &BigUint, j: u32) -> BigUint {
    let j_big = BigUint::from(j);
    if *k < j_big {
        return BigUint::zero();
    }
    let mut result = BigUint::one();
    for i in 1..=j {
        // result = C(k - j + i, i) stays integral at every step
        result = result * (k - &j_big + BigUint::from(i)) / BigUint::from(i);
    }
    result
}

/// The unique expansion `n = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta)`
/// with `k_d > k_{d-1} > ... > k_delta >= delta >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialExpansion {
    /// Leading binomial degree `d`.
    pub top_degree: u32,
    /// Top indices `k_d, k_{d-1}, ...`, paired with degrees `d, d-1, ...`.
    pub indices: Vec<BigUint>,
}

impl BinomialExpansion {
    /// Degrees paired with indices, descending.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, u32)> {
        self.indices
            .iter()
            .enumerate()
            .map(move |(i, k)| (k, self.top_degree - i as u32))
    }

    /// Recomputes the expanded integer.
    pub fn value(&self) -> BigUint {
        self.terms().map(|(k, j)| binomial(k, j)).sum()
    }

    /// Macaulay's bound `sum C(k_j + 1, j + 1)` on the next entry.
    pub fn next_bound(&self) -> BigUint {
        self.terms()
            .map(|(k, j)| binomial(&(k + 1u32), j + 1))
            .sum()
    }
}

/// Greedy `d`-binomial expansion of `n >= 1`: take the largest `C(k, d) <= n`
/// and recurse on the remainder at degree `d - 1`.
pub fn d_binomial_expansion(n: &BigUint, d: u32) -> BinomialExpansion {
    assert!(!n.is_zero(), "expansion requires n >= 1");
    assert!(d >= 1, "expansion requires d >= 1");
    let mut rest = n.clone();
    let mut indices = Vec::new();
    let mut j = d;
    while !rest.is_zero() {
        // largest k with C(k, j) <= rest, by exponential then binary search
        let mut lo = BigUint::from(j);
        let mut hi = &lo + 1u32;
        while binomial(&hi, j) <= rest {
            hi = &hi * 2u32;
        }
        while &lo + 1u32 < hi {
            let mid = (&lo + &hi) / 2u32;
            if binomial(&mid, j) <= rest {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rest -= binomial(&lo, j);
        indices.push(lo);
        if j == 1 {
            break;
        }
        j -= 1;
    }
    let expansion = BinomialExpansion {
        top_degree: d,
        indices,
    };
    debug_assert_eq!(&expansion.value(), n);
    expansion
}

/// Largest admissible next entry after `n` monomials in degree `d`;
/// zero stays zero (an order ideal cannot revive above a vanished degree).
pub fn macaulay_next_bound(n: &BigUint, d: u32) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    d_binomial_expansion(n, d).next_bound()
}

/// Macaulay's characterization: `(1, h_1, ..., h_e)` is the h-vector of a
/// monomial order ideal iff each `h_{i+1}` is at most the bound from the
/// `i`-binomial expansion of `h_i`. Witness is the first violating `i`.
pub fn is_o_sequence(h: &[BigInt]) -> Result<Verdict, SeqError> {
    if h.is_empty() {
        return Err(SeqError::Empty);
    }
    if !h[0].is_one() {
        return Err(SeqError::LeadingNotOne);
    }
    if let Some(i) = h.iter().position(|x| x.is_negative()) {
        return Ok(Verdict::fail(i));
    }
    let e = h.len() - 1;
    for i in 1..e {
        let n = h[i].to_biguint().unwrap();
        let next = h[i + 1].to_biguint().unwrap();
        if next > macaulay_next_bound(&n, i as u32) {
            return Ok(Verdict::fail(i));
        }
    }
    Ok(Verdict::ok())
}

/// Why a sequence fails to be an SI-sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SiFailure {
    Negative(usize),
    LeadingNotOne,
    NotPalindromic(usize),
    NotUnimodal(usize),
    DeltaNotOSequence(usize),
}

#[derive(Clone, Debug)]
pub struct SiVerdict {
    pub holds: bool,
    pub failure: Option<SiFailure>,
}

/// Nonnegative, palindromic, unimodal, and differentially an O-sequence.
pub fn is_si_sequence(h: &[BigInt]) -> Result<SiVerdict, SeqError> {
    if h.is_empty() {
        return Err(SeqError::Empty);
    }
    let fail = |f: SiFailure| SiVerdict {
        holds: false,
        failure: Some(f),
    };
    if let Some(i) = h.iter().position(|x| x.is_negative()) {
        return Ok(fail(SiFailure::Negative(i)));
    }
    if !h[0].is_one() {
        return Ok(fail(SiFailure::LeadingNotOne));
    }
    let p = is_palindromic(h);
    if !p.holds {
        return Ok(fail(SiFailure::NotPalindromic(p.witness.unwrap())));
    }
    let u = is_unimodal(h);
    if !u.holds {
        return Ok(fail(SiFailure::NotUnimodal(u.witness.unwrap())));
    }
    let g = delta(h)?;
    let o = is_o_sequence(&g)?;
    if !o.holds {
        return Ok(fail(SiFailure::DeltaNotOSequence(o.witness.unwrap())));
    }
    Ok(SiVerdict {
        holds: true,
        failure: None,
    })
}

/// Closed-form test for pure O-sequences of length 3:
/// `floor((h_1 + 1) / 2) <= h_2 <= C(h_1 + 1, 2)`.
pub fn is_pure_o_len3(h: &[BigInt]) -> Result<bool, SeqError> {
    if h.len() != 3 {
        return Err(SeqError::WrongLength {
            expected: 3,
            got: h.len(),
        });
    }
    if !h[0].is_one() {
        return Err(SeqError::LeadingNotOne);
    }
    if let Some(i) = h.iter().position(|x| x.is_negative()) {
        return Err(SeqError::Negative(i));
    }
    let h1 = h[1].to_biguint().unwrap();
    let h2 = h[2].to_biguint().unwrap();
    if h1.is_zero() {
        return Err(SeqError::H1Zero);
    }
    let lower = (&h1 + 1u32) / 2u32;
    let upper = binomial(&(&h1 + 1u32), 2);
    Ok(lower <= h2 && h2 <= upper)
}

/// Hibi's inequalities for pure O-sequences: `h_i <= h_j` whenever
/// `i <= j <= e - i`.
#[derive(Clone, Copy, Debug)]
pub struct HibiVerdict {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

pub fn hibi_check(h: &[BigInt]) -> HibiVerdict {
    let e = h.len().saturating_sub(1);
    for i in 0..h.len() {
        for j in i..h.len() {
            if i + j <= e && h[i] > h[j] {
                return HibiVerdict {
                    holds: false,
                    witness: Some((i, j)),
                };
            }
        }
    }
    HibiVerdict {
        holds: true,
        witness: None,
    }
}

/// Log-concavity of the differential sequence implies log-concavity of the
/// sequence itself. Returns whether the differential sequence is log-concave;
/// if it is, the implication is checked, not assumed.
pub fn logconcavity_from_delta(h: &[BigInt]) -> Result<bool, SeqError> {
    let g = delta(h)?;
    if !is_log_concave(&g).holds {
        return Ok(false);
    }
    assert!(
        is_log_concave(h).holds,
        "log-concave differences must give a log-concave sequence"
    );
    Ok(true)
}

/// Result of the exhaustive monomial-order-ideal search.
#[derive(Clone, Debug)]
pub enum IdealSearch {
    /// A witness ideal, each monomial an exponent vector over the variables.
    Found(Vec<Vec<u32>>),
    /// The whole space was searched; no ideal has this h-vector.
    Exhausted,
}

/// Exhaustive search for a monomial order ideal with h-vector exactly `h`
/// (padded with zeros at empty degrees). With `pure`, additionally requires
/// every divisibility-maximal monomial to have degree `h.len() - 1`.
///
/// The h-vector fixes the number of variables at `h[1]`; `var_limit` and
/// `degree_limit` bound the admissible problem size and `node_cap` bounds
/// the visited search nodes.
pub fn order_ideal_bruteforce(
    h: &[BigInt],
    var_limit: usize,
    degree_limit: usize,
    pure: bool,
    node_cap: u64,
) -> Result<IdealSearch, SeqError> {
    if h.is_empty() {
        return Err(SeqError::Empty);
    }
    if !h[0].is_one() {
        return Err(SeqError::LeadingNotOne);
    }
    if let Some(i) = h.iter().position(|x| x.is_negative()) {
        return Err(SeqError::Negative(i));
    }
    let mut counts = Vec::with_capacity(h.len());
    for (i, x) in h.iter().enumerate() {
        counts.push(
            x.to_biguint()
                .unwrap()
                .try_into()
                .map_err(|_| SeqError::EntryTooLarge(i))?,
        );
    }
    let counts: Vec<usize> = counts;
    let e = counts.len() - 1;
    if e > degree_limit {
        return Err(SeqError::WrongLength {
            expected: degree_limit + 1,
            got: counts.len(),
        });
    }
    let vars = counts.get(1).copied().unwrap_or(0);
    if vars > var_limit {
        return Err(SeqError::EntryTooLarge(1));
    }
    if e == 0 {
        // the ideal {1}; pure of degree 0
        return Ok(IdealSearch::Found(vec![vec![]]));
    }

    // level 1 is forced: all `vars` variables
    let level1: Vec<Vec<u32>> = (0..vars)
        .map(|i| {
            let mut m = vec![0u32; vars];
            m[i] = 1;
            m
        })
        .collect();
    let mut levels: Vec<Vec<Vec<u32>>> = vec![vec![vec![0u32; vars]], level1];
    let mut budget = node_cap;
    let perms = if vars <= 7 { permutations(vars) } else { Vec::new() };
    match search_level(&counts, 2, &mut levels, pure, &mut budget, &perms) {
        SearchState::Found => {
            let mut flat: Vec<Vec<u32>> = levels.into_iter().flatten().collect();
            flat.sort_unstable();
            Ok(IdealSearch::Found(flat))
        }
        SearchState::Exhausted => Ok(IdealSearch::Exhausted),
        SearchState::OutOfBudget => Err(SeqError::CapExceeded(node_cap)),
    }
}

/// Pure variant of [`order_ideal_bruteforce`].
pub fn pure_ideal_bruteforce(
    h: &[BigInt],
    var_limit: usize,
    degree_limit: usize,
    node_cap: u64,
) -> Result<IdealSearch, SeqError> {
    order_ideal_bruteforce(h, var_limit, degree_limit, true, node_cap)
}

enum SearchState {
    Found,
    Exhausted,
    OutOfBudget,
}

fn search_level(
    counts: &[usize],
    depth: usize,
    levels: &mut Vec<Vec<Vec<u32>>>,
    pure: bool,
    budget: &mut u64,
    perms: &[Vec<usize>],
) -> SearchState {
    let e = counts.len() - 1;
    if depth > e {
        if pure {
            // no member below the top degree may be maximal
            for d in 0..e {
                for m in &levels[d] {
                    if !levels[d + 1].iter().any(|m2| divides(m, m2)) {
                        return SearchState::Exhausted;
                    }
                }
            }
        }
        return SearchState::Found;
    }
    let want = counts[depth];
    let candidates = level_candidates(&levels[depth - 1]);
    if candidates.len() < want {
        return SearchState::Exhausted;
    }
    let mut chosen = Vec::with_capacity(want);
    choose_subsets(
        counts, depth, levels, pure, budget, perms, &candidates, 0, &mut chosen,
    )
}

#[allow(clippy::too_many_arguments)]
fn choose_subsets(
    counts: &[usize],
    depth: usize,
    levels: &mut Vec<Vec<Vec<u32>>>,
    pure: bool,
    budget: &mut u64,
    perms: &[Vec<usize>],
    candidates: &[Vec<u32>],
    from: usize,
    chosen: &mut Vec<Vec<u32>>,
) -> SearchState {
    if *budget == 0 {
        return SearchState::OutOfBudget;
    }
    *budget -= 1;
    let want = counts[depth];
    if chosen.len() == want {
        // purity: everything one level down must be covered now
        if pure && !levels[depth - 1]
            .iter()
            .all(|m| chosen.iter().any(|m2| divides(m, m2)))
        {
            return SearchState::Exhausted;
        }
        // symmetry pruning at the first free level, where the full symmetric
        // group still acts
        if depth == 2 && !perms.is_empty() && !is_canonical(chosen, perms) {
            return SearchState::Exhausted;
        }
        levels.push(chosen.clone());
        let state = search_level(counts, depth + 1, levels, pure, budget, perms);
        if matches!(state, SearchState::Found) {
            // keep the level stack intact; the caller reads the ideal off it
            return state;
        }
        levels.pop();
        return state;
    }
    let missing = want - chosen.len();
    if candidates.len() - from < missing {
        return SearchState::Exhausted;
    }
    for i in from..candidates.len() {
        chosen.push(candidates[i].clone());
        match choose_subsets(
            counts, depth, levels, pure, budget, perms, candidates, i + 1, chosen,
        ) {
            SearchState::Found => return SearchState::Found,
            SearchState::OutOfBudget => return SearchState::OutOfBudget,
            SearchState::Exhausted => {}
        }
        chosen.pop();
    }
    SearchState::Exhausted
}

/// Monomials of the next degree all of whose one-step divisors are present.
fn level_candidates(prev: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    for m in prev {
        for v in 0..m.len() {
            let mut up = m.clone();
            up[v] += 1;
            if !out.contains(&up) && one_step_down(&up).iter().all(|d| prev.contains(d)) {
                out.push(up);
            }
        }
    }
    out.sort_unstable();
    out
}

fn one_step_down(m: &[u32]) -> Vec<Vec<u32>> {
    (0..m.len())
        .filter(|&v| m[v] > 0)
        .map(|v| {
            let mut down = m.to_vec();
            down[v] -= 1;
            down
        })
        .collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for i in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=i {
                let mut q = p.clone();
                q.insert(pos, i);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Lexicographically minimal among all variable permutations of the chosen
/// level set.
fn is_canonical(chosen: &[Vec<u32>], perms: &[Vec<usize>]) -> bool {
    let mut sorted: Vec<Vec<u32>> = chosen.to_vec();
    sorted.sort_unstable();
    for perm in perms {
        let mut image: Vec<Vec<u32>> = chosen
            .iter()
            .map(|m| {
                let mut q = vec![0u32; m.len()];
                for (v, &ex) in m.iter().enumerate() {
                    q[perm[v]] = ex;
                }
                q
            })
            .collect();
        image.sort_unstable();
        if image < sorted {
            return false;
        }
    }
    true
}
