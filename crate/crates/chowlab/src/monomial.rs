//! Feichtner–Yuzvinsky monomials and finite monomial sets.
//!
//! An FY monomial is supported on a chain of non-bottom poset elements with
//! each exponent strictly below the rank gap to the previous chain element.
//! Sets of them are kept sorted with degree-indexed counts (the h-vector of
//! the set viewed as an order ideal).

use std::collections::HashSet;

use thiserror::Error;

use crate::poset::Poset;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("input is not a monomial order ideal: {member} is missing divisor {divisor}")]
    NotOrderIdeal { member: String, divisor: String },
}

/// Monomial `x_{p_1}^{l_1} ... x_{p_s}^{l_s}` on a strictly increasing chain
/// `p_1 < ... < p_s` of non-bottom elements, exponents positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FYMonomial {
    support: Vec<usize>,
    exponents: Vec<u32>,
}

impl FYMonomial {
    pub fn new(support: Vec<usize>, exponents: Vec<u32>) -> Self {
        debug_assert_eq!(support.len(), exponents.len());
        debug_assert!(exponents.iter().all(|&e| e > 0));
        FYMonomial { support, exponents }
    }

    /// The empty product.
    pub fn unit() -> Self {
        FYMonomial {
            support: Vec::new(),
            exponents: Vec::new(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn exponent_of(&self, element: usize) -> u32 {
        match self.support.iter().position(|&p| p == element) {
            Some(i) => self.exponents[i],
            None => 0,
        }
    }

    pub fn divides(&self, other: &FYMonomial) -> bool {
        self.support
            .iter()
            .zip(&self.exponents)
            .all(|(&p, &e)| other.exponent_of(p) >= e)
    }

    /// All ways to lower one exponent by one (dropping the variable at 0).
    pub fn one_step_divisors(&self) -> Vec<FYMonomial> {
        (0..self.support.len())
            .map(|i| {
                let mut support = self.support.clone();
                let mut exponents = self.exponents.clone();
                if exponents[i] == 1 {
                    support.remove(i);
                    exponents.remove(i);
                } else {
                    exponents[i] -= 1;
                }
                FYMonomial { support, exponents }
            })
            .collect()
    }

    /// Text form `x[p1]^l1 * x[p2]^l2`, or `1` for the empty monomial.
    pub fn render(&self, poset: &Poset) -> String {
        if self.support.is_empty() {
            return "1".to_string();
        }
        self.support
            .iter()
            .zip(&self.exponents)
            .map(|(&p, &e)| format!("x[{}]^{}", poset.id(p), e))
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

/// Finite set of FY monomials with degree-indexed counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    monomials: Vec<FYMonomial>,
    h: Vec<u64>,
}

impl MonomialSet {
    pub fn from_monomials(mut monomials: Vec<FYMonomial>) -> Self {
        monomials.sort_unstable();
        monomials.dedup();
        let top = monomials.iter().map(|m| m.degree()).max().unwrap_or(0);
        let mut h = vec![0u64; top as usize + 1];
        for m in &monomials {
            h[m.degree() as usize] += 1;
        }
        MonomialSet { monomials, h }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &FYMonomial> {
        self.monomials.iter()
    }

    pub fn contains(&self, m: &FYMonomial) -> bool {
        self.monomials.binary_search(m).is_ok()
    }

    /// Degree-indexed counts; entry `k` is the number of members of degree `k`.
    pub fn h_vector(&self) -> &[u64] {
        &self.h
    }

    /// The h-vector zero-padded to at least `min_len` entries, for
    /// comparisons against counts that carry trailing zero degrees.
    pub fn h_vector_padded(&self, min_len: usize) -> Vec<u64> {
        let mut v = self.h.clone();
        if v.len() < min_len {
            v.resize(min_len, 0);
        }
        v
    }

    /// One line per monomial, in sorted order.
    pub fn render(&self, poset: &Poset) -> String {
        self.monomials
            .iter()
            .map(|m| m.render(poset))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Members that divide no other member.
    pub fn maximal_members(&self) -> Vec<FYMonomial> {
        let by_degree = |d: u64| self.monomials.iter().filter(move |m| m.degree() == d);
        self.monomials
            .iter()
            .filter(|m| {
                let d = m.degree();
                !by_degree(d + 1).any(|m2| m.divides(m2))
            })
            .cloned()
            .collect()
    }
}

/// Outcome of the divisor-closure check.
#[derive(Clone, Debug)]
pub struct OrderIdealReport {
    /// `(member, missing divisor)` if the closure fails.
    pub witness: Option<(FYMonomial, FYMonomial)>,
}

impl OrderIdealReport {
    pub fn is_ideal(&self) -> bool {
        self.witness.is_none()
    }
}

/// True iff every divisor of every member is a member. Checking one-step
/// divisors suffices; the witness is the first failure in sorted order.
pub fn is_monomial_order_ideal(set: &MonomialSet) -> OrderIdealReport {
    let members: HashSet<&FYMonomial> = set.monomials.iter().collect();
    for m in &set.monomials {
        for div in m.one_step_divisors() {
            if !members.contains(&div) {
                return OrderIdealReport {
                    witness: Some((m.clone(), div)),
                };
            }
        }
    }
    OrderIdealReport { witness: None }
}

/// Outcome of the pureness check of an order ideal.
#[derive(Clone, Debug)]
pub struct PurityReport {
    pub pure: bool,
    /// Common degree of the maximal members when pure.
    pub degree: Option<u64>,
    /// All divisibility-maximal members.
    pub maximal: Vec<FYMonomial>,
    /// Maximal members of the wrong degree (vs. `expected_degree` when
    /// given, else vs. the largest maximal degree).
    pub offenders: Vec<FYMonomial>,
}

/// True iff all divisibility-maximal members share one degree (and equal
/// `expected_degree` when given). Errors when the input is not an order
/// ideal.
pub fn is_pure_ideal(
    set: &MonomialSet,
    expected_degree: Option<u64>,
) -> Result<PurityReport, IdealError> {
    let closure = is_monomial_order_ideal(set);
    if let Some((member, divisor)) = closure.witness {
        return Err(IdealError::NotOrderIdeal {
            member: format!("{member:?}"),
            divisor: format!("{divisor:?}"),
        });
    }
    let maximal = set.maximal_members();
    if maximal.is_empty() {
        return Ok(PurityReport {
            pure: true,
            degree: expected_degree,
            maximal,
            offenders: Vec::new(),
        });
    }
    let top = maximal.iter().map(|m| m.degree()).max().unwrap();
    let reference = expected_degree.unwrap_or(top);
    let offenders: Vec<FYMonomial> = maximal
        .iter()
        .filter(|m| m.degree() != reference)
        .cloned()
        .collect();
    Ok(PurityReport {
        pure: offenders.is_empty(),
        degree: offenders.is_empty().then_some(reference),
        maximal,
        offenders,
    })
}
